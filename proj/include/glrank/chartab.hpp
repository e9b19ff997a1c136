#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "glrank/cyclotomic.hpp"
#include "glrank/matgroup.hpp"
#include "glrank/partitions.hpp"

namespace glrank {

using GroupPtr = std::shared_ptr<const GroupTable>;

struct ClassInfo {
  std::uint64_t rep = 0;  // encoding of the smallest member
  std::int64_t size = 0;
  int order = 1;          // element order
  int inverse = 0;        // class of rep^-1
  int fixdim = 0;         // dim ker(g - 1)
  int logdet = 0;         // discrete log of det(g), 0 for Sym
};

// Exact character table. values[i][k] is chi_i on class k as a sum of
// e-th roots of unity; e is the exponent of the group.
struct CharacterTable {
  GroupPtr group;
  ConjugacyClasses cc;
  int e = 1;
  std::uint32_t prime = 0;  // modular prime used by the construction
  std::vector<ClassInfo> classes;
  std::vector<std::int64_t> dims;
  std::vector<std::vector<CycTerms>> values;

  int num_irreps() const { return static_cast<int>(dims.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  std::int64_t order() const { return group->size(); }
  const CycTerms& value(int i, int k) const {
    return values[static_cast<size_t>(i)][static_cast<size_t>(k)];
  }
  // canonical coefficients modulo Phi_e
  std::vector<mpz_class> reduced(int i, int k) const;
  bool is_rational(int i, int k) const;
  // throws internal when the value is not a rational integer
  mpz_class integer_value(int i, int k) const;
  std::complex<double> complex_value(int i, int k) const;
  int class_of(const MatrixFq& m) const;
  // class of transvection(n); requires a GL/SL table with n >= 2
  int transvection_class() const;
};

inline constexpr int kDefaultMaxClasses = 400;

CharacterTable character_table(GroupPtr g, int max_classes = kDefaultMaxClasses);

struct Orthogonality {
  bool rows = false;
  bool columns = false;
};
Orthogonality check_orthogonality(const CharacterTable& ct);

// <f, chi_i> for an integer-valued class function f; must be an integer.
mpz_class multiplicity(const CharacterTable& ct, int i, std::span<const mpz_class> f);
// same, with chi_i twisted by psi_a(det)
mpz_class twisted_multiplicity(const CharacterTable& ct, int i, int a,
                               std::span<const mpz_class> f);
// index of chi_i (x) psi_a(det), psi_a the a-th power of the character sending
// the primitive element to exp(2 pi i/(q-1))
int twist(const CharacterTable& ct, int i, int a);
int num_twists(const CharacterTable& ct);

mpz_class omega_tensor_character(const FqField& f, const MatrixFq& g, int k);
// the class function g -> q^{k * fixdim(g)}
std::vector<mpz_class> omega_power(const CharacterTable& ct, int k);

int strict_rank(const CharacterTable& ct, int i);
int rank(const CharacterTable& ct, int i);
// invariant vector under H_k (compare with strict_rank)
int rank_via_Hk(const CharacterTable& ct, int i);
// eigenvector for H_k through det of the lower block (compare with rank)
int rank_via_Hk_eigen(const CharacterTable& ct, int i);

struct RankRow {
  int irrep = 0;
  std::int64_t dim = 0;
  mpz_class char_at_T;  // 0 when irrational (possible on SL tables)
  bool at_T_rational = true;
  std::string char_at_T_text;
  int strict_rank = 0, rank = 0, rank_via_Hk = 0, rank_via_Hk_eigen = 0;
};
std::vector<RankRow> rank_report(const CharacterTable& ct);

struct FiltrationReport {
  std::vector<int> stage_sizes;  // |G^(omega^k)| for k = 1..n
  bool strict = false;
  bool complete = false;
};
FiltrationReport filtration_check(const CharacterTable& ct);

struct RestrictionRow {
  int gl_irrep = 0;
  std::vector<int> constituents;  // SL irreps with multiplicity 1
  int orbit_size = 0;             // twist orbit of the GL irrep
  int stabilizer_size = 0;        // twists fixing it
};

struct RestrictionReport {
  std::vector<int> class_map;  // SL class -> GL class
  std::vector<RestrictionRow> rows;
  bool multiplicity_free = false;
  bool spectra_iff_twist = false;  // equal constituents <=> same twist orbit
  bool irreducible_iff_unfixed = false;
  bool fibers_transitive = false;  // GL irreps above an SL irrep form one orbit
  bool orbit_stabilizer = false;   // |orbit| * |stabilizer| = q - 1
  bool covers_sl = false;
  double reducible_fraction = 0;
  bool ok() const {
    return multiplicity_free && spectra_iff_twist && irreducible_iff_unfixed &&
           fibers_transitive && orbit_stabilizer && covers_sl;
  }
};
RestrictionReport restrict_to_sl(const CharacterTable& gl, const CharacterTable& sl);

// Symmetric groups as permutation matrices.
Partition cycle_type(const MatrixFq& perm);
// permutation character on cosets of the Young subgroup S_d
std::vector<mpz_class> young_character(const CharacterTable& ct, const Partition& d);
// labels[i] = shape of irrep i, found by peeling Young characters in
// lexicographically descending order
std::vector<Partition> label_symmetric_irreps(const CharacterTable& ct);

nlohmann::json to_json(const CharacterTable& ct);
std::string table_csv(const CharacterTable& ct);
std::string rank_csv(const CharacterTable& ct, std::span<const RankRow> rows);

std::string serialize(const CharacterTable& ct);
// group must be the table the bytes were computed from
CharacterTable deserialize_table(std::string_view bytes, GroupPtr group);

}  // namespace glrank
