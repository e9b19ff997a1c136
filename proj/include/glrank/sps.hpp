#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "glrank/partitions.hpp"
#include "glrank/qpoly.hpp"

namespace glrank {

QPoly dim_induced(const Partition& d);

// Flags of the given block type fixed by a transvection, split by how the
// transvection acts on the successive quotients: transvection[j] counts the
// flags where it acts as a transvection on quotient j and trivially on the
// others; identity counts flags where it acts trivially on every quotient.
struct FixedFlagSplit {
  QPoly total;
  std::vector<QPoly> transvection;
  QPoly identity;
};

FixedFlagSplit fixed_flag_split(std::span<const int> blocks);
QPoly fixed_flags(std::span<const int> blocks);
QPoly fixed_flags(const Partition& d);

struct SpsRep {
  Partition diagram;
  QPoly dim;
  QPoly char_at_T;
};

// Memoized; safe to call from several threads.
SpsRep sps_rep(const Partition& d, int cap = kDefaultPartitionCap);

// chi/dim = c / q^exponent + o(q^-exponent) with exponent = n - d_1.
// tail_ok says chi has no term of higher order than that.
struct SpsLeading {
  mpz_class c;
  int exponent = 0;
  bool tail_ok = true;
};

struct SpsRatio {
  mpq_class exact;
  SpsLeading lead;
};

SpsLeading sps_leading(const Partition& d);
SpsRatio cr_sps(const Partition& d, const mpz_class& q);

enum class RelOrder { StrictlySmaller, SameOrder, Larger };
std::string to_string(RelOrder o);

struct RelativeOrder {
  RelOrder order;
  int degree_gap;      // deg chi_{I_d} - deg chi_{I_d'}
  mpq_class factor;    // ratio of leading coefficients when the order agrees
};

// Compares chi_{I_d'}(T) against chi_{I_d}(T); d' must strictly dominate d.
RelativeOrder cr_induced_relative(const Partition& d, const Partition& dprime);

// One row per partition of n: partition,d_L,dim,char_at_T,c,exponent
std::string sps_csv(int n, int cap = kDefaultPartitionCap);

}  // namespace glrank
