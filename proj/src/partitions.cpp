#include "glrank/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "glrank/error.hpp"

namespace glrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    require(i == 0 || parts_[i] <= parts_[i - 1],
            "partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::first_multiplicity() const {
  return static_cast<int>(
      std::count(parts_.begin(), parts_.end(), first()));
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<size_t>(first()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

Partition Partition::with_first_row(int row) const {
  require(row >= first(), "prepended row shorter than first row");
  std::vector<int> v{row};
  v.insert(v.end(), parts_.begin(), parts_.end());
  return Partition(std::move(v));
}

std::string Partition::str() const {
  std::string s = "{";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "}";
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictlyDominates: return "strictly-dominates";
    case Dominance::Equal: return "equal";
    case Dominance::StrictlyDominated: return "strictly-dominated";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

Dominance compare_dominance(const Partition& a, const Partition& b) {
  require(a.weight() == b.weight(), "dominance needs equal weights");
  bool ge = true, le = true;
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::StrictlyDominates;
  if (le) return Dominance::StrictlyDominated;
  return Dominance::Incomparable;
}

bool dominates_or_equal(const Partition& a, const Partition& b) {
  auto d = compare_dominance(a, b);
  return d == Dominance::Equal || d == Dominance::StrictlyDominates;
}

bool is_skew_row(const Partition& big, const Partition& small) {
  for (int i = 0; i < small.length(); ++i)
    if (big.part(i) < small.part(i)) return false;
  Partition bc = big.conjugate(), sc = small.conjugate();
  for (int j = 0; j < bc.length(); ++j)
    if (bc.part(j) - sc.part(j) > 1) return false;
  return true;
}

void sort_canonical(std::vector<Partition>& ps) {
  std::sort(ps.begin(), ps.end(), std::greater<>());
}

std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partition weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  // generated in reverse lexicographic order directly
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> pieri_expand(const Partition& d, int m) {
  require(m >= 0, "pieri_expand needs m >= 0");
  // horizontal strip: new row i lies in [d_i, d_{i-1}], one extra row allowed
  std::vector<Partition> out;
  int len = d.length() + 1;
  std::vector<int> cur(static_cast<size_t>(len));
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == len) {
      if (rest == 0) out.emplace_back(cur);
      return;
    }
    int lo = d.part(i);
    int hi = i == 0 ? lo + rest : std::min(d.part(i - 1), lo + rest);
    for (int v = hi; v >= lo; --v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1, rest - (v - lo));
    }
  };
  rec(0, m);
  sort_canonical(out);
  return out;
}

namespace {

// Fill entries 1,2,... in turn; the boxes holding each value form a
// horizontal strip, so SSYT of content d are counted by iterated strips.
std::map<Partition, std::int64_t> ssyt_counts(const Partition& d) {
  std::map<Partition, std::int64_t> layer{{Partition{}, 1}};
  for (int c : d.parts()) {
    std::map<Partition, std::int64_t> next;
    for (const auto& [shape, cnt] : layer)
      for (auto& big : pieri_expand(shape, c)) {
        auto& slot = next[big];
        if (__builtin_add_overflow(slot, cnt, &slot))
          fail(ErrorKind::ResourceLimit, "kostka number overflows int64");
      }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::int64_t kostka(const Partition& e, const Partition& d) {
  require(e.weight() == d.weight(), "kostka needs equal weights");
  if (!dominates_or_equal(e, d)) return 0;
  auto counts = ssyt_counts(d);
  auto it = counts.find(e);
  return it == counts.end() ? 0 : it->second;
}

int TransitionMatrix::position(const Partition& p) const {
  auto it = std::lower_bound(index.begin(), index.end(), p, std::greater<>());
  require(it != index.end() && *it == p, "partition not in transition matrix");
  return static_cast<int>(it - index.begin());
}

TransitionMatrix transition_matrix(int n, int cap) {
  require(n >= 0, "transition_matrix needs n >= 0");
  if (n > cap) over_cap("partition weight cap", cap, n);
  TransitionMatrix t;
  t.index = partitions_of(n);
  size_t N = t.index.size();
  t.K.assign(N, std::vector<std::int64_t>(N, 0));
  for (size_t j = 0; j < N; ++j) {
    auto col = ssyt_counts(t.index[j]);
    for (const auto& [shape, cnt] : col) t.K[t.position(shape)][j] = cnt;
  }
  // K is upper unitriangular in canonical order; back-substitute column-wise
  t.M.assign(N, std::vector<std::int64_t>(N, 0));
  for (size_t j = 0; j < N; ++j) {
    t.M[j][j] = 1;
    for (size_t i = j; i-- > 0;) {
      __int128 s = 0;
      for (size_t k = i + 1; k <= j; ++k)
        s += static_cast<__int128>(t.K[i][k]) * t.M[k][j];
      if (s > INT64_MAX || -s > INT64_MAX)
        fail(ErrorKind::ResourceLimit, "inverse kostka entry overflows int64");
      t.M[i][j] = static_cast<std::int64_t>(-s);
    }
  }
  return t;
}

nlohmann::json to_json(const Partition& p) { return p.vec(); }

Partition partition_from_json(const nlohmann::json& j) {
  require(j.is_array(), "partition must be a JSON array");
  std::vector<int> v;
  for (const auto& x : j) {
    require(x.is_number_integer(), "partition entries must be integers");
    v.push_back(x.get<int>());
  }
  return Partition(std::move(v));
}

}  // namespace glrank
