// lfg: command-line front end for counting, spectra, walks and bounds.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lfg/lfg.hpp"

namespace {

using json = nlohmann::ordered_json;
using lfg::sig12;

/// Thrown for invalid flag combinations; reported with exit status 2.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct output {
  std::string format = "csv";
  std::string path;
  std::vector<std::pair<std::string, std::string>> args;  // resolved flags, in order

  template <class T>
  void arg(const std::string &name, const T &value) {
    std::ostringstream s;
    s << value;
    args.emplace_back(name, s.str());
  }

  bool csv() const { return format == "csv"; }

  std::string header_comment(const std::string &command) const {
    std::string line = "# lfg " + command;
    for (const auto &[k, v] : args) line += " --" + k + " " + v;
    return line + "\n";
  }

  json args_json(const std::string &command) const {
    json j;
    j["command"] = command;
    for (const auto &[k, v] : args) j[k] = v;
    return j;
  }

  void write(const std::string &text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
  }
};

void add_output_flags(CLI::App *cmd, output &out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.path, "Output file (default: standard output)");
}

double r12(double x) { return lfg::round12(x); }

json nullable(const std::optional<double> &x) { return x ? json(r12(*x)) : json(nullptr); }

lfg::count_variant resolve_variant(const std::string &name, const std::optional<std::uint32_t> &r) {
  if (name == "restricted") {
    if (!r) throw usage_error("--r is required with --variant restricted");
    if (*r < 2) throw usage_error("--r must be >= 2 (got " + std::to_string(*r) + ")");
    return lfg::count_variant::restricted(*r);
  }
  if (r) throw usage_error("--r is only valid with --variant restricted");
  return lfg::parse_variant(name);
}

// ---- count ---------------------------------------------------------------

struct count_opts {
  std::string variant = "group";
  std::uint32_t n = 0, k_max = 0;
  std::optional<std::uint32_t> r;
  output out;
};

void run_count(count_opts &o) {
  const auto v = resolve_variant(o.variant, o.r);
  o.out.arg("variant", o.variant);
  if (o.r) o.out.arg("r", *o.r);
  o.out.arg("n", o.n);
  o.out.arg("k-max", o.k_max);
  o.out.arg("format", o.out.format);
  const auto counts = lfg::count_series(o.n, o.k_max, v);
  if (o.out.csv()) {
    std::string s = o.out.header_comment("count") + "variant,n,K,count\n";
    for (std::uint32_t K = 1; K <= o.k_max; ++K)
      s += v.name() + "," + std::to_string(o.n) + "," + std::to_string(K) + "," + lfg::to_decimal(counts[K - 1]) + "\n";
    o.out.write(s);
  } else {
    json j;
    j["args"] = o.out.args_json("count");
    j["rows"] = json::array();
    for (std::uint32_t K = 1; K <= o.k_max; ++K)
      j["rows"].push_back({{"variant", v.name()}, {"n", o.n}, {"K", K}, {"count", lfg::to_decimal(counts[K - 1])}});
    o.out.write(j.dump(2) + "\n");
  }
}

// ---- volume --------------------------------------------------------------

struct volume_opts {
  std::string variant = "group";
  std::uint32_t n = 0, k_max = 0;
  std::optional<std::uint32_t> r;
  output out;
};

void run_volume(volume_opts &o) {
  const auto v = resolve_variant(o.variant, o.r);
  if (o.k_max < 2) throw usage_error("--k-max must be >= 2 for volume estimates");
  o.out.arg("variant", o.variant);
  if (o.r) o.out.arg("r", *o.r);
  o.out.arg("n", o.n);
  o.out.arg("k-max", o.k_max);
  o.out.arg("format", o.out.format);
  const auto est = lfg::log_volume_estimate(o.n, o.k_max, v);
  std::optional<double> limit;
  if (v.k != lfg::count_variant::kind::restricted && !(v.k == lfg::count_variant::kind::projective && o.n == 1))
    limit = lfg::finite_volume(o.n, v);
  if (o.out.csv()) {
    std::string s = o.out.header_comment("volume") + "variant,n,K,log_ratio\n";
    for (std::size_t i = 0; i < est.successive.size(); ++i)
      s += v.name() + "," + std::to_string(o.n) + "," + std::to_string(i + 2) + "," + sig12(est.successive[i]) + "\n";
    o.out.write(s);
  } else {
    json j;
    j["args"] = o.out.args_json("volume");
    j["log_ratio"] = r12(est.log_ratio);
    j["finite_n_limit"] = nullable(limit);
    j["monotone_beyond_n"] = est.monotone_from(o.n);
    j["rows"] = json::array();
    for (std::size_t i = 0; i < est.successive.size(); ++i)
      j["rows"].push_back({{"variant", v.name()}, {"n", o.n}, {"K", i + 2}, {"log_ratio", r12(est.successive[i])}});
    o.out.write(j.dump(2) + "\n");
  }
}

// ---- spectrum ------------------------------------------------------------

struct spectrum_opts {
  std::uint32_t n = 0;
  output out;
};

void run_spectrum(spectrum_opts &o) {
  o.out.arg("n", o.n);
  o.out.arg("format", o.out.format);
  const auto clusters = lfg::spectrum_clusters(o.n);
  if (o.out.csv()) {
    std::string s = o.out.header_comment("spectrum") + "n,eigenvalue,multiplicity,charpoly_residual\n";
    for (const auto &e : clusters)
      s += std::to_string(o.n) + "," + sig12(e.value) + "," + std::to_string(e.multiplicity) + "," +
           sig12(lfg::charpoly_eval(o.n, e.value)) + "\n";
    o.out.write(s);
  } else {
    json j;
    j["args"] = o.out.args_json("spectrum");
    j["lambda_max"] = r12(clusters.front().value);
    j["chebyshev_max"] = r12(lfg::chebyshev_eigenvalue(o.n, 1));
    j["eigenvalues"] = json::array();
    for (const auto &e : clusters)
      j["eigenvalues"].push_back({{"value", r12(e.value)}, {"multiplicity", e.multiplicity}});
    o.out.write(j.dump(2) + "\n");
  }
}

// ---- walk ----------------------------------------------------------------

struct walk_opts {
  std::string mode = "semigroup";
  std::uint32_t n = 0, trials = 1;
  std::uint64_t steps = 0, seed = 0, snapshot_every = 0;
  std::optional<std::uint64_t> burn_in;
  unsigned threads = 0;
  output out;
};

void run_walk_cmd(walk_opts &o) {
  lfg::walk_params p;
  p.n = o.n;
  p.steps = o.steps;
  p.trials = o.trials;
  p.seed = o.seed;
  p.mode = lfg::parse_mode(o.mode);
  p.burn_in = o.burn_in.value_or(10ull * o.n);
  p.snapshot_every = o.snapshot_every;
  if (p.burn_in >= p.steps)
    throw usage_error("--burn-in (" + std::to_string(p.burn_in) + ") must be smaller than --steps (" +
                      std::to_string(p.steps) + ")");
  o.out.arg("mode", o.mode);
  o.out.arg("n", p.n);
  o.out.arg("steps", p.steps);
  o.out.arg("trials", p.trials);
  o.out.arg("seed", p.seed);
  o.out.arg("burn-in", p.burn_in);
  o.out.arg("snapshot-every", p.snapshot_every);
  o.out.arg("format", o.out.format);

  const auto stats = lfg::run_walk(p, o.threads);
  const auto drift = lfg::drift_estimate(stats);
  const auto density = lfg::roof_density_estimate(stats, p.n);
  std::optional<double> alpha, alpha_se, height_coeff, heap_density, entropy;
  bool short_run = false;
  if (p.mode == lfg::mode::group) {
    std::uint64_t reductions = 0;
    for (const auto &s : stats) reductions += s.window_reductions;
    if (reductions > 0) {
      const auto a = lfg::alpha_estimate(stats);
      alpha = a.value;
      alpha_se = a.se;
      entropy = lfg::entropy_estimate(stats, p.mode);
    }
  } else {
    entropy = lfg::entropy_estimate(stats, p.mode);
    const auto prof = lfg::heap_profile_stats(stats, p.n, p.mode);
    height_coeff = prof.height_coeff;
    heap_density = prof.density;
    short_run = prof.short_run;
  }
  if (short_run)
    std::cerr << "warning: steps < 100 n; heap height and density are not yet stationary\n";

  const auto &snaps = stats.front().snapshots;
  if (o.out.csv()) {
    std::string s = o.out.header_comment("walk");
    if (p.snapshot_every > 0) {
      s += "step,column,top_level,in_roof\n";
      for (const auto &snap : snaps)
        for (std::uint32_t i = 0; i < p.n; ++i)
          s += std::to_string(snap.step) + "," + std::to_string(i + 1) + "," + std::to_string(snap.top_level[i]) +
               "," + std::to_string(snap.in_roof[i]) + "\n";
    } else {
      auto opt = [](const std::optional<double> &x) { return x ? sig12(*x) : std::string("nan"); };
      s += "mode,n,steps,trials,seed,drift_mean,drift_se,roof_density,entropy_estimate,alpha_hat,alpha_se,"
           "height_coeff,heap_density\n";
      s += o.mode + "," + std::to_string(p.n) + "," + std::to_string(p.steps) + "," + std::to_string(p.trials) + "," +
           std::to_string(p.seed) + "," + sig12(drift.value) + "," + sig12(drift.se) + "," + sig12(density.value) +
           "," + opt(entropy) + "," + opt(alpha) + "," + opt(alpha_se) + "," + opt(height_coeff) + "," +
           opt(heap_density) + "\n";
    }
    o.out.write(s);
  } else {
    json j;
    j["args"] = o.out.args_json("walk");
    j["mode"] = o.mode;
    j["n"] = p.n;
    j["steps"] = p.steps;
    j["trials"] = p.trials;
    j["seed"] = p.seed;
    j["drift_mean"] = r12(drift.value);
    j["drift_se"] = r12(drift.se);
    j["roof_density"] = r12(density.value);
    j["entropy_estimate"] = nullable(entropy);
    j["alpha_hat"] = nullable(alpha);
    j["alpha_se"] = nullable(alpha_se);
    j["height_coeff"] = nullable(height_coeff);
    j["heap_density"] = nullable(heap_density);
    j["roof_density_se"] = r12(density.se);
    j["burn_in"] = p.burn_in;
    if (p.snapshot_every > 0) {
      j["snapshots"] = json::array();
      for (const auto &snap : snaps)
        j["snapshots"].push_back({{"step", snap.step}, {"top_level", snap.top_level}, {"in_roof", snap.in_roof}});
    }
    o.out.write(j.dump(2) + "\n");
  }
}

// ---- roof-chain ----------------------------------------------------------

struct chain_opts {
  std::string mode = "semigroup", boundary = "open";
  std::uint32_t n = 0;
  std::uint64_t steps = 0, seed = 0;
  std::optional<std::uint64_t> burn_in;
  bool support = false;
  output out;
};

void run_chain(chain_opts &o) {
  if (o.support) {
    o.out.arg("n", o.n);
    o.out.arg("support", "true");
    o.out.arg("format", o.out.format);
    const auto plain = lfg::roof_support_enumerate(o.n, false);
    const auto colored = lfg::roof_support_enumerate(o.n, true);
    if (o.out.csv()) {
      std::string s = o.out.header_comment("roof-chain") + "n,colored,count,growth_ratio\n";
      s += std::to_string(o.n) + ",0," + lfg::to_decimal(plain.count) + "," + sig12(plain.growth_ratio) + "\n";
      s += std::to_string(o.n) + ",1," + lfg::to_decimal(colored.count) + "," + sig12(colored.growth_ratio) + "\n";
      o.out.write(s);
    } else {
      json j;
      j["args"] = o.out.args_json("roof-chain");
      j["uncolored"] = {{"count", lfg::to_decimal(plain.count)}, {"growth_ratio", r12(plain.growth_ratio)}};
      j["colored"] = {{"count", lfg::to_decimal(colored.count)}, {"growth_ratio", r12(colored.growth_ratio)}};
      o.out.write(j.dump(2) + "\n");
    }
    return;
  }
  if (o.steps == 0) throw usage_error("--steps is required (>= 1) unless --support is given");
  const auto m = lfg::parse_mode(o.mode);
  const auto b = lfg::parse_boundary(o.boundary);
  const std::uint64_t burn = o.burn_in.value_or(10ull * o.n);
  if (burn >= o.steps) throw usage_error("--burn-in must be smaller than --steps");
  o.out.arg("mode", o.mode);
  o.out.arg("boundary", o.boundary);
  o.out.arg("n", o.n);
  o.out.arg("steps", o.steps);
  o.out.arg("seed", o.seed);
  o.out.arg("burn-in", burn);
  o.out.arg("format", o.out.format);
  const auto d = lfg::roof_chain_density(o.n, o.steps, burn, o.seed, m, b);
  if (o.out.csv()) {
    o.out.write(o.out.header_comment("roof-chain") + "mode,boundary,n,steps,burn_in,density\n" + o.mode + "," +
                o.boundary + "," + std::to_string(o.n) + "," + std::to_string(o.steps) + "," + std::to_string(burn) +
                "," + sig12(d.density) + "\n");
  } else {
    json j;
    j["args"] = o.out.args_json("roof-chain");
    j["density"] = r12(d.density);
    j["samples"] = d.samples;
    o.out.write(j.dump(2) + "\n");
  }
}

// ---- oracle-verify -------------------------------------------------------

struct oracle_opts {
  std::uint32_t n_max = 4, k_max = 7, k_max_restricted = 6, r_max = 5;
  std::uint32_t syllable_r_max = 7, syllable_k_max = 12;
  lfg::oracle_budget budget;
  output out;
};

int run_oracle(oracle_opts &o) {
  o.out.arg("n-max", o.n_max);
  o.out.arg("k-max", o.k_max);
  o.out.arg("k-max-restricted", o.k_max_restricted);
  o.out.arg("r-max", o.r_max);
  o.out.arg("max-states", o.budget.max_states);
  o.out.arg("max-depth", o.budget.max_depth);
  o.out.arg("format", o.out.format);
  if (o.r_max < 2) throw usage_error("--r-max must be >= 2");

  struct row {
    std::string check, variant;
    std::uint32_t r, n, K, s;
    std::string formula, oracle;
  };
  std::vector<row> rows;
  auto ball = [&](lfg::count_variant v, std::uint32_t n, std::uint32_t kmax) {
    const auto census = lfg::enumerate_ball(n, kmax, v, o.budget);
    for (std::uint32_t K = 1; K <= kmax; ++K)
      rows.push_back({"ball", v.name(), v.r, n, K, 0, lfg::to_decimal(lfg::count_words(n, K, v)),
                      lfg::to_decimal(census.counts[K])});
  };
  for (auto v : {lfg::count_variant::group(), lfg::count_variant::semigroup(), lfg::count_variant::projective()})
    for (std::uint32_t n = 1; n <= o.n_max; ++n) ball(v, n, o.k_max);
  for (std::uint32_t r = 2; r <= o.r_max; ++r)
    for (std::uint32_t n = 1; n <= o.n_max; ++n) ball(lfg::count_variant::restricted(r), n, o.k_max_restricted);
  for (std::uint32_t r = 2; r <= o.syllable_r_max; ++r)
    for (std::uint32_t K = 1; K <= o.syllable_k_max; ++K)
      for (std::uint32_t s = 1; s <= K; ++s)
        rows.push_back({"syllables", "restricted", r, 0, K, s, lfg::to_decimal(lfg::restricted_syllable_count(r, K, s)),
                        lfg::to_decimal(lfg::brute_restricted(r, K, s))});

  std::size_t mismatches = 0;
  for (const auto &x : rows)
    if (x.formula != x.oracle) {
      ++mismatches;
      std::cerr << "mismatch: " << x.check << " " << x.variant << " r=" << x.r << " n=" << x.n << " K=" << x.K
                << " s=" << x.s << " formula=" << x.formula << " oracle=" << x.oracle << "\n";
    }
  if (o.out.csv()) {
    std::string s = o.out.header_comment("oracle-verify") + "check,variant,r,n,K,s,formula,oracle,match\n";
    for (const auto &x : rows)
      s += x.check + "," + x.variant + "," + std::to_string(x.r) + "," + std::to_string(x.n) + "," +
           std::to_string(x.K) + "," + std::to_string(x.s) + "," + x.formula + "," + x.oracle + "," +
           (x.formula == x.oracle ? "1" : "0") + "\n";
    o.out.write(s);
  } else {
    json j;
    j["args"] = o.out.args_json("oracle-verify");
    j["comparisons"] = rows.size();
    j["mismatches"] = mismatches;
    j["passed"] = mismatches == 0;
    o.out.write(j.dump(2) + "\n");
  }
  return mismatches == 0 ? 0 : 1;
}

// ---- braid-bounds / inequality ---------------------------------------------

struct braid_opts {
  std::string variant = "group";
  std::uint32_t n = 0;
  double alpha = 0;
  std::optional<double> l, h;
  output out;
};

void run_braid(braid_opts &o) {
  const auto v = lfg::parse_variant(o.variant);
  o.out.arg("variant", o.variant);
  o.out.arg("n", o.n);
  o.out.arg("alpha", sig12(o.alpha));
  if (o.l) o.out.arg("l", sig12(*o.l));
  if (o.h) o.out.arg("h", sig12(*o.h));
  o.out.arg("format", o.out.format);
  const auto r = lfg::make_bounds_report(o.n, v, o.alpha, o.l, o.h);
  const std::vector<std::pair<std::string, double>> fields{
      {"v_lf", r.v_lf},
      {"volume_lower", r.volume_lower},
      {"volume_upper", r.volume_upper},
      {"volume_lower_limit", r.volume_lower_limit},
      {"volume_upper_limit", r.volume_upper_limit},
      {"drift_lower", r.drift_lower},
      {"drift_upper", r.drift_upper},
      {"alpha_used", r.alpha_used},
      {"l", r.l},
      {"h", r.h},
      {"epsilon", r.epsilon}};
  if (o.out.csv()) {
    std::string head = "n,variant", row = std::to_string(r.n) + "," + v.name();
    for (const auto &[k, x] : fields) {
      head += "," + k;
      row += "," + sig12(x);
    }
    o.out.write(o.out.header_comment("braid-bounds") + head + "\n" + row + "\n");
  } else {
    json j;
    j["args"] = o.out.args_json("braid-bounds");
    j["n"] = r.n;
    j["variant"] = v.name();
    for (const auto &[k, x] : fields) j[k] = r12(x);
    o.out.write(j.dump(2) + "\n");
  }
}

struct inequality_opts {
  double v = 0, l = 0, h = 0, step = 1e-3;
  output out;
};

void run_inequality(inequality_opts &o) {
  o.out.arg("v", sig12(o.v));
  o.out.arg("l", sig12(o.l));
  o.out.arg("h", sig12(o.h));
  o.out.arg("step", sig12(o.step));
  o.out.arg("format", o.out.format);
  const auto r = lfg::inequality_report(o.v, o.l, o.h, o.step);
  if (o.out.csv()) {
    o.out.write(o.out.header_comment("inequality") +
                "v,l,h,epsilon,grid_step,grid_points,grid_min_alpha,grid_min_epsilon,grid_all_positive\n" +
                sig12(r.v) + "," + sig12(r.l) + "," + sig12(r.h) + "," + sig12(r.epsilon) + "," + sig12(r.scan.step) +
                "," + std::to_string(r.scan.points) + "," + sig12(r.scan.min_alpha) + "," +
                sig12(r.scan.min_epsilon) + "," + (r.scan.all_positive ? "1" : "0") + "\n");
  } else {
    json j;
    j["args"] = o.out.args_json("inequality");
    j["v"] = r12(r.v);
    j["l"] = r12(r.l);
    j["h"] = r12(r.h);
    j["epsilon"] = r12(r.epsilon);
    j["grid"] = {{"step", r.scan.step},
                 {"points", r.scan.points},
                 {"min_alpha", r12(r.scan.min_alpha)},
                 {"min_epsilon", r12(r.scan.min_epsilon)},
                 {"all_positive", r.scan.all_positive}};
    o.out.write(j.dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact counts, spectra, random walks and braid bounds for locally free groups"};
  app.require_subcommand(1);
  // --h is the entropy option of braid-bounds and inequality, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  const auto positive = CLI::Range(1u, 0xFFFFFFFFu);

  count_opts count;
  auto *c = app.add_subcommand("count", "Exact numbers of elements of each length");
  c->add_option("--variant", count.variant)->check(CLI::IsMember({"group", "semigroup", "projective", "restricted"}));
  c->add_option("--n", count.n, "Number of generators")->required()->check(positive);
  c->add_option("--k-max", count.k_max, "Largest word length")->required()->check(positive);
  c->add_option("--r", count.r, "Generator order (restricted variant)");
  add_output_flags(c, count.out);

  volume_opts volume;
  auto *v = app.add_subcommand("volume", "Successive-ratio logarithmic volume estimates");
  v->add_option("--variant", volume.variant)->check(CLI::IsMember({"group", "semigroup", "projective", "restricted"}));
  v->add_option("--n", volume.n)->required()->check(positive);
  v->add_option("--k-max", volume.k_max)->required()->check(positive);
  v->add_option("--r", volume.r);
  add_output_flags(v, volume.out);

  spectrum_opts spectrum;
  auto *sp = app.add_subcommand("spectrum", "Eigenvalues of the transfer matrix");
  sp->add_option("--n", spectrum.n)->required()->check(CLI::Range(1u, 400u));
  add_output_flags(sp, spectrum.out);

  walk_opts walk;
  auto *w = app.add_subcommand("walk", "Monte Carlo random walk");
  w->add_option("--mode", walk.mode)->check(CLI::IsMember({"group", "semigroup"}));
  w->add_option("--n", walk.n)->required()->check(CLI::Range(1u, 1000u));
  w->add_option("--steps", walk.steps)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  w->add_option("--trials", walk.trials)->check(CLI::Range(1u, 100000u));
  w->add_option("--seed", walk.seed);
  w->add_option("--burn-in", walk.burn_in, "Steps excluded from time averages (default 10 n)");
  w->add_option("--snapshot-every", walk.snapshot_every, "Roof profile interval for trial 0 (0 = off)");
  w->add_option("--threads", walk.threads, "Worker threads (0 = hardware)")->check(CLI::Range(0u, 1024u));
  add_output_flags(w, walk.out);

  chain_opts chain;
  auto *rc = app.add_subcommand("roof-chain", "Roof Markov chain density or roof-support counts");
  rc->add_option("--mode", chain.mode)->check(CLI::IsMember({"group", "semigroup"}));
  rc->add_option("--boundary", chain.boundary)->check(CLI::IsMember({"open", "periodic"}));
  rc->add_option("--n", chain.n)->required()->check(CLI::Range(1u, 1000000u));
  rc->add_option("--steps", chain.steps);
  rc->add_option("--seed", chain.seed);
  rc->add_option("--burn-in", chain.burn_in);
  rc->add_flag("--support", chain.support, "Count roof supports by exhaustive enumeration (n <= 30)");
  add_output_flags(rc, chain.out);

  oracle_opts oracle;
  auto *ov = app.add_subcommand("oracle-verify", "Compare closed-form counts against brute force");
  ov->add_option("--n-max", oracle.n_max)->check(CLI::Range(1u, 8u));
  ov->add_option("--k-max", oracle.k_max)->check(CLI::Range(1u, 20u));
  ov->add_option("--k-max-restricted", oracle.k_max_restricted)->check(CLI::Range(1u, 20u));
  ov->add_option("--r-max", oracle.r_max)->check(CLI::Range(2u, 16u));
  ov->add_option("--max-states", oracle.budget.max_states)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 36));
  ov->add_option("--max-depth", oracle.budget.max_depth)->check(CLI::Range(1u, 64u));
  add_output_flags(ov, oracle.out);

  braid_opts braid;
  auto *bb = app.add_subcommand("braid-bounds", "Volume and drift bounds for the braid group");
  bb->add_option("--variant", braid.variant)->check(CLI::IsMember({"group", "semigroup"}));
  bb->add_option("--n", braid.n)->required()->check(CLI::Range(2u, 100000u));
  bb->add_option("--alpha", braid.alpha)->check(CLI::Range(-0.5, 0.5));
  bb->add_option("--l", braid.l, "Measured drift (default: closed form in alpha)");
  bb->add_option("--h", braid.h, "Measured entropy (default: log(3 - alpha))");
  add_output_flags(bb, braid.out);

  inequality_opts ineq;
  auto *iq = app.add_subcommand("inequality", "epsilon = l v - h and the closed-form scan over alpha");
  iq->add_option("--v", ineq.v)->required();
  iq->add_option("--l", ineq.l)->required();
  iq->add_option("--h", ineq.h)->required();
  iq->add_option("--step", ineq.step, "Grid step for the alpha scan");
  add_output_flags(iq, ineq.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c) run_count(count);
    else if (*v) run_volume(volume);
    else if (*sp) run_spectrum(spectrum);
    else if (*w) run_walk_cmd(walk);
    else if (*rc) run_chain(chain);
    else if (*ov) return run_oracle(oracle);
    else if (*bb) run_braid(braid);
    else if (*iq) run_inequality(ineq);
    return 0;
  } catch (const usage_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lfg::budget_exceeded &e) {
    std::cerr << "error: " << e.what() << " (raise --max-states / --max-depth)\n";
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
