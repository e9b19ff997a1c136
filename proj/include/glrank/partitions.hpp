#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace glrank {

// Weakly decreasing list of positive parts. The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part, 0 past the end
  int part(int i) const {
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  int first() const { return part(0); }
  // number of parts equal to the largest part
  int first_multiplicity() const;
  Partition conjugate() const;
  // prepend a row; row must be >= first()
  Partition with_first_row(int row) const;

  std::string str() const;

  bool operator==(const Partition&) const = default;
  // lexicographic on parts; canonical lists run in descending order
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts_ <=> o.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class Dominance { StrictlyDominates, Equal, StrictlyDominated, Incomparable };

std::string to_string(Dominance d);

Dominance compare_dominance(const Partition& a, const Partition& b);
bool dominates_or_equal(const Partition& a, const Partition& b);

// True iff big contains small and no column grows by more than one box.
bool is_skew_row(const Partition& big, const Partition& small);

// All partitions of n, canonical order (reverse lexicographic, which refines
// dominance: anything dominating p comes before p).
std::vector<Partition> partitions_of(int n);

void sort_canonical(std::vector<Partition>& ps);

std::vector<Partition> pieri_expand(const Partition& d, int m);

// Number of SSYT of shape e and content d.
std::int64_t kostka(const Partition& e, const Partition& d);

inline constexpr int kDefaultPartitionCap = 20;

struct TransitionMatrix {
  std::vector<Partition> index;  // canonical order
  // K[i][j] = kostka(index[i], index[j]); M is its inverse
  std::vector<std::vector<std::int64_t>> K;
  std::vector<std::vector<std::int64_t>> M;

  int position(const Partition& p) const;
  std::int64_t k(const Partition& e, const Partition& d) const {
    return K[position(e)][position(d)];
  }
  std::int64_t m(const Partition& e, const Partition& d) const {
    return M[position(e)][position(d)];
  }
};

TransitionMatrix transition_matrix(int n, int cap = kDefaultPartitionCap);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace glrank
