#ifndef LFG_LFG_HPP
#define LFG_LFG_HPP

#include "lfg/bigint.hpp"
#include "lfg/braid.hpp"
#include "lfg/counting.hpp"
#include "lfg/format.hpp"
#include "lfg/heap.hpp"
#include "lfg/normal_form.hpp"
#include "lfg/oracle.hpp"
#include "lfg/polynomial.hpp"
#include "lfg/rng.hpp"
#include "lfg/roof.hpp"
#include "lfg/roof_chain.hpp"
#include "lfg/spectrum.hpp"
#include "lfg/walk.hpp"

#endif
