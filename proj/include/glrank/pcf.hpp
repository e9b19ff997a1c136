#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "glrank/partitions.hpp"
#include "glrank/qpoly.hpp"

namespace glrank {

struct CuspidalSlot {
  int size = 0;
  std::string label;
  bool operator==(const CuspidalSlot&) const = default;
};

struct UnsplitEntry {
  CuspidalSlot slot;
  int mult = 1;
  Partition shape;  // partition of mult
  bool operator==(const UnsplitEntry&) const = default;
};

struct SplitEntry {
  int chi = 1;  // index of a nontrivial character of GL_1
  Partition shape;
  bool operator==(const SplitEntry&) const = default;
};

struct PcfIrrep {
  int n = 0;
  std::vector<UnsplitEntry> unsplit;
  std::vector<SplitEntry> split;
  Partition trivial_shape;

  int unsplit_size() const;
  int split_size() const;
  // throws invalid-input on a malformed datum
  void validate() const;
  // unsplit by (size, label), split by chi
  void canonicalize();
  // parabolic block sizes in canonical order: unsplit, split, trivial
  std::vector<int> blocks() const;
  std::string key() const;  // compact canonical JSON
  bool operator==(const PcfIrrep&) const = default;
};

nlohmann::json to_json(const PcfIrrep& r);
PcfIrrep pcf_from_json(const nlohmann::json& j);

int tensor_corank(const PcfIrrep& r);
int strict_tensor_corank(const PcfIrrep& r);
inline int tensor_rank(const PcfIrrep& r) { return r.n - tensor_corank(r); }
inline int strict_tensor_rank(const PcfIrrep& r) {
  return r.n - strict_tensor_corank(r);
}

PcfIrrep eta(const PcfIrrep& tau, int n);
std::vector<PcfIrrep> decompose_induced(const PcfIrrep& tau, int n);

QPoly cuspidal_dim(int lambda);
QPoly unsplit_entry_dim(const UnsplitEntry& e);
QPoly dim(const PcfIrrep& r);

// Exact dimension and transvection character as polynomials in q (n >= 2).
struct AtTransvection {
  QPoly dim;
  QPoly chi;
};
AtTransvection evaluate_at_T(const PcfIrrep& r);

// chi/dim = c / q^exponent + o(q^-exponent). exponent is the tensor rank k
// for k <= n-1 and n-1 for k = n; tail_ok says nothing of larger order
// remains.
struct CrLeading {
  mpq_class c;
  int exponent = 0;
  bool tail_ok = true;
  QPoly dim;
  QPoly chi;
  mpq_class ratio_at(const mpz_class& q) const {
    return evaluate_ratio(chi, dim, q);
  }
};
CrLeading cr_at_T(const PcfIrrep& r);
CrLeading sl_character_ratio_transfer(const PcfIrrep& r);

struct DimBounds {
  int n = 0, k = 0;
  bool exists = true;  // GL_1 has no irrep of tensor rank 1
  LeadingTerm upper, lower;
  std::optional<PcfIrrep> upper_witness, lower_witness;
};
DimBounds dim_bounds(int n, int k);

struct CountLeading {
  bool symbolic = false;
  int degree = 0;
  std::string text;  // e.g. "q^3" or "c_3*q^3"
  std::string note;  // constraints on the symbolic constant
};
CountLeading count_leading(int n, int k, bool special_linear);

// Number of cuspidal irreps of GL_lambda(F_q); for lambda = 1 all q-1
// characters are counted.
std::int64_t cuspidal_count(int lambda, std::int64_t q);

// Every irrep of GL_n(F_q), labels made concrete.
std::vector<PcfIrrep> enumerate_gl_irreps(int n, std::int64_t q);
// One representative per combinatorial type of GL_n irrep with labels left
// generic (q large enough for any label pattern).
std::vector<PcfIrrep> enumerate_types(int n);

}  // namespace glrank
