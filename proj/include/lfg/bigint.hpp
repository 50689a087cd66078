#ifndef LFG_BIGINT_HPP
#define LFG_BIGINT_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfg {

using big_count = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;
using real50 = boost::multiprecision::cpp_bin_float_50;

inline std::string to_decimal(const big_count &v) { return v.str(); }

inline big_count from_decimal(const std::string &s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative decimal integer: '" + s + "'");
  return big_count(s);
}

/// log(a / b) for positive integers, without overflowing a double.
inline real50 log_ratio(const big_count &a, const big_count &b) {
  if (a <= 0 || b <= 0) throw std::domain_error("log_ratio of non-positive count");
  return boost::multiprecision::log(real50(a) / real50(b));
}

/// Dense square matrix over an exact ring.
template <class T>
class square_matrix {
 public:
  explicit square_matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  static square_matrix identity(std::size_t n) {
    square_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend square_matrix operator*(const square_matrix &x, const square_matrix &y) {
    square_matrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  std::vector<T> apply(const std::vector<T> &v) const {
    std::vector<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const square_matrix &, const square_matrix &) = default;

 private:
  std::size_t n_;
  std::vector<T> a_;
};

template <class T>
square_matrix<T> matrix_power(square_matrix<T> base, unsigned long long e) {
  auto result = square_matrix<T>::identity(base.size());
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// <1, M 1>: sum of all entries.
template <class T>
T entry_sum(const square_matrix<T> &m) {
  T s(0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j);
  return s;
}

}  // namespace lfg

#endif
