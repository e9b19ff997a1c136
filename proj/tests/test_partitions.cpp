#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "glrank/error.hpp"
#include "glrank/partitions.hpp"

using namespace glrank;

namespace {

// box-diagram reading of the skew-row condition: containment and no two
// added boxes in one column
bool skew_row_by_boxes(const Partition& big, const Partition& small) {
  std::set<std::pair<int, int>> bb, sb;
  for (int i = 0; i < big.length(); ++i)
    for (int j = 0; j < big.part(i); ++j) bb.insert({i, j});
  for (int i = 0; i < small.length(); ++i)
    for (int j = 0; j < small.part(i); ++j) sb.insert({i, j});
  if (!std::includes(bb.begin(), bb.end(), sb.begin(), sb.end())) return false;
  std::set<int> cols;
  for (auto b : bb)
    if (!sb.count(b) && !cols.insert(b.second).second) return false;
  return true;
}

// literal semistandard tableau enumeration
std::int64_t ssyt_bruteforce(const Partition& shape, const Partition& content) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.part(i); ++j) boxes.push_back({i, j});
  std::vector<std::vector<int>> t(static_cast<size_t>(shape.length()));
  for (int i = 0; i < shape.length(); ++i)
    t[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  std::vector<int> left(content.vec());
  std::int64_t count = 0;
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == boxes.size()) {
      ++count;
      return;
    }
    auto [i, j] = boxes[b];
    for (int v = 1; v <= content.length(); ++v) {
      if (left[static_cast<size_t>(v - 1)] == 0) continue;
      if (j > 0 && t[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] > v) continue;
      if (i > 0 && t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] >= v) continue;
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      --left[static_cast<size_t>(v - 1)];
      rec(b + 1);
      ++left[static_cast<size_t>(v - 1)];
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("partition invariants") {
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{3, 1, 1}.weight() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{2, 2, 1}.first_multiplicity() == 2);
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(nlohmann::json::parse("[3,1,1]")) == Partition{3, 1, 1});
}

TEST_CASE("dominance examples") {
  CHECK(compare_dominance({2, 2}, {2, 1, 1}) == Dominance::StrictlyDominates);
  CHECK(compare_dominance({3, 1}, {3, 1}) == Dominance::Equal);
  CHECK(compare_dominance({3, 1, 1, 1}, {2, 2, 2}) == Dominance::Incomparable);
  CHECK_THROWS_AS(compare_dominance({2}, {1}), Error);
}

TEST_CASE("dominance is a partial order on random triples") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 9; ++n) {
    auto ps = partitions_of(n);
    std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto &a = ps[pick(rng)], &b = ps[pick(rng)], &c = ps[pick(rng)];
      if (dominates_or_equal(a, b) && dominates_or_equal(b, c))
        CHECK(dominates_or_equal(a, c));
      if (dominates_or_equal(a, b) && dominates_or_equal(b, a)) CHECK(a == b);
    }
  }
}

TEST_CASE("canonical order refines dominance") {
  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j)
        CHECK(compare_dominance(ps[i], ps[j]) != Dominance::StrictlyDominated);
  }
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("skew rows") {
  CHECK(is_skew_row({2, 1}, {1, 1}));
  CHECK(is_skew_row({2}, {1}));
  // added boxes sit in columns 2 and 3 of row 2: a horizontal strip
  CHECK(is_skew_row({3, 3}, {3, 1}));
  CHECK(!is_skew_row({2, 2}, {1, 1}));
  CHECK(!is_skew_row({2}, {1, 1}));
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m)
      for (auto& big : partitions_of(n))
        for (auto& small : partitions_of(m))
          CHECK(is_skew_row(big, small) == skew_row_by_boxes(big, small));
}

TEST_CASE("pieri examples") {
  CHECK(pieri_expand({1}, 1) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(pieri_expand({}, 3) == std::vector<Partition>{{3}});
  CHECK(pieri_expand({1, 1}, 2) == std::vector<Partition>{{3, 1}, {2, 1, 1}});
  CHECK(pieri_expand({2, 1}, 0) == std::vector<Partition>{{2, 1}});
}

TEST_CASE("pieri equals filtered brute force") {
  for (int w = 0; w <= 6; ++w)
    for (auto& d : partitions_of(w))
      for (int m = 0; m <= 4; ++m) {
        std::vector<Partition> brute;
        for (auto& big : partitions_of(w + m))
          if (skew_row_by_boxes(big, d)) brute.push_back(big);
        CHECK(pieri_expand(d, m) == brute);
      }
}

TEST_CASE("kostka examples and SSYT oracle") {
  CHECK(kostka({2}, {1, 1}) == 1);
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({1, 1}, {2}) == 0);
  CHECK_THROWS_AS(kostka({2}, {1}), Error);
  for (int n = 1; n <= 6; ++n)
    for (auto& e : partitions_of(n))
      for (auto& d : partitions_of(n)) {
        auto k = kostka(e, d);
        CHECK(k == ssyt_bruteforce(e, d));
        if (k > 0) CHECK(dominates_or_equal(e, d));
      }
}

TEST_CASE("transition matrix") {
  auto t2 = transition_matrix(2);
  CHECK(t2.K == std::vector<std::vector<std::int64_t>>{{1, 1}, {0, 1}});
  CHECK(t2.M == std::vector<std::vector<std::int64_t>>{{1, -1}, {0, 1}});
  CHECK(transition_matrix(1).K == std::vector<std::vector<std::int64_t>>{{1}});
  auto t3 = transition_matrix(3);
  CHECK(t3.m({1, 1, 1}, {1, 1, 1}) == 1);
  CHECK(t3.m({2, 1}, {1, 1, 1}) == -2);
  CHECK(t3.m({3}, {1, 1, 1}) == 1);
  for (int n = 1; n <= 10; ++n) {
    auto t = transition_matrix(n);
    size_t N = t.index.size();
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) {
        std::int64_t s = 0;
        for (size_t k = 0; k < N; ++k) s += t.K[i][k] * t.M[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }
  }
  CHECK_THROWS_AS(transition_matrix(21), Error);
  try {
    transition_matrix(21);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
