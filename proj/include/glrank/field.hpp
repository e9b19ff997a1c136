#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace glrank {

// GF(p^m). An element is the integer whose base-p digits are the coefficients
// of its polynomial representative (lowest degree first).
class FqField {
 public:
  using Elem = std::uint8_t;
  static constexpr int kMaxQ = 64;

  // modulus: monic, degree m, coefficients lowest first (size m+1)
  FqField(int p, int m, std::vector<int> modulus);
  // smallest monic irreducible modulus in lexicographic order
  static std::shared_ptr<const FqField> make(int q);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  std::span<const int> modulus() const { return modulus_; }
  std::uint64_t modulus_hash() const;
  // bits per element in packed encodings
  int width() const { return width_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<size_t>(log_[a] + log_[b])];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  // discrete log to the base primitive(); a must be nonzero
  int log(Elem a) const;
  Elem exp(long long k) const;
  Elem primitive() const { return primitive_; }

  std::string str(Elem a) const;

 private:
  size_t idx(Elem a, Elem b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(q_) + b;
  }
  int p_, m_, q_, width_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, neg_, exp_;
  std::vector<int> log_;
  Elem primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const FqField>;

bool is_irreducible_mod_p(std::span<const int> poly, int p);

}  // namespace glrank
