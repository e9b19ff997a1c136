#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "glrank/field.hpp"

namespace glrank {

inline constexpr int kMaxDim = 8;

struct MatrixFq {
  int n = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> e{};

  std::uint8_t at(int i, int j) const {
    return e[static_cast<size_t>(i * n + j)];
  }
  std::uint8_t& at(int i, int j) { return e[static_cast<size_t>(i * n + j)]; }
  bool operator==(const MatrixFq&) const = default;
};

MatrixFq identity_matrix(int n);
MatrixFq multiply(const FqField& f, const MatrixFq& a, const MatrixFq& b);
std::uint8_t determinant(const FqField& f, MatrixFq a);
int rank(const FqField& f, MatrixFq a);
// throws invalid-input when singular
MatrixFq inverse(const FqField& f, const MatrixFq& a);
int fixed_space_dim(const FqField& f, const MatrixFq& g);

// Row-major entries packed little-endian, f.width() bits each.
std::uint64_t encode(const FqField& f, const MatrixFq& a);
MatrixFq decode(const FqField& f, int n, std::uint64_t code);

MatrixFq transvection(int n, const FqField& f);
inline constexpr std::size_t kDefaultGroupCap = 200000;
std::vector<MatrixFq> enumerate_transvections(int n, const FqField& f,
                                              std::size_t cap = kDefaultGroupCap);

enum class GroupKind { GL, SL, Sym };
std::string to_string(GroupKind k);
GroupKind group_kind_from_string(const std::string& s);

class GroupTable {
 public:
  GroupTable(GroupKind kind, int n, FieldPtr field,
             std::vector<std::uint64_t> sorted_codes);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int size() const { return static_cast<int>(codes_.size()); }
  std::span<const std::uint64_t> codes() const { return codes_; }
  std::uint64_t code(int i) const { return codes_[static_cast<size_t>(i)]; }
  const MatrixFq& matrix(int i) const { return mats_[static_cast<size_t>(i)]; }
  // -1 when absent
  int find(std::uint64_t code) const;
  int find(const MatrixFq& m) const { return find(encode(*field_, m)); }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int identity() const { return identity_; }
  int order(int a) const;
  std::string name() const;

 private:
  GroupKind kind_;
  int n_;
  FieldPtr field_;
  std::vector<std::uint64_t> codes_;
  std::vector<MatrixFq> mats_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> inv_;
  int identity_ = 0;
};

// GL_n or SL_n over f; Sym gives S_n as permutation matrices over F_2.
GroupTable enumerate_group(GroupKind kind, int n, FieldPtr f,
                           std::size_t cap = kDefaultGroupCap);
GroupTable symmetric_group(int n, std::size_t cap = kDefaultGroupCap);

// A small generating set, chosen greedily in encoding order.
std::vector<int> generators(const GroupTable& g);

struct ConjugacyClasses {
  std::vector<int> class_of;               // element -> class
  std::vector<std::vector<int>> members;   // class -> sorted elements
  int count() const { return static_cast<int>(members.size()); }
  int rep(int c) const { return members[static_cast<size_t>(c)].front(); }
  int size(int c) const {
    return static_cast<int>(members[static_cast<size_t>(c)].size());
  }
};

// Identity class first, the rest ordered by smallest member encoding.
ConjugacyClasses conjugacy_classes(const GroupTable& g);
std::vector<int> conjugacy_class_of(int element, const GroupTable& g);

// Subspaces of F_q^n. Vectors are integers with base-q digits = coordinates.
struct Subspace {
  int dim = 0;
  std::vector<std::vector<std::uint8_t>> basis;  // reduced row echelon
  std::vector<std::uint32_t> members;            // sorted
};

std::uint32_t vector_code(const FqField& f, std::span<const std::uint8_t> v);
std::vector<std::uint8_t> vector_from_code(const FqField& f, int n, std::uint32_t c);
std::vector<Subspace> enumerate_subspaces(const FqField& f, int n, int k,
                                          bool with_members = true);

// All subspaces of F_q^n with containment and T-stability queries.
class SubspaceLattice {
 public:
  SubspaceLattice(FieldPtr f, int n);
  const std::vector<Subspace>& of_dim(int k) const {
    return levels_[static_cast<size_t>(k)];
  }
  bool stable(const Subspace& s, const MatrixFq& g) const;
  bool contains(const Subspace& big, const Subspace& small) const;
  // flags with successive quotient dims given by blocks; each flag lists the
  // index of its proper nonzero members within of_dim(...)
  std::vector<std::vector<int>> flags(std::span<const int> blocks) const;
  // number of flags of that type, only g-stable ones when g is given
  std::int64_t count_flags(std::span<const int> blocks,
                           const MatrixFq* g = nullptr) const;

 private:
  FieldPtr f_;
  int n_;
  std::vector<std::vector<Subspace>> levels_;
};

std::string serialize(const GroupTable& g);
GroupTable deserialize_group(std::string_view bytes);

}  // namespace glrank
