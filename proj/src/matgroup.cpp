#include "glrank/matgroup.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>

#include "glrank/error.hpp"
#include "glrank/qpoly.hpp"

namespace glrank {

MatrixFq identity_matrix(int n) {
  require(n >= 1 && n <= kMaxDim, "matrix dimension out of range");
  MatrixFq m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixFq multiply(const FqField& f, const MatrixFq& a, const MatrixFq& b) {
  MatrixFq c;
  c.n = a.n;
  int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      auto x = a.at(i, k);
      if (!x) continue;
      for (int j = 0; j < n; ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

namespace {

// Row reduction in place; returns rank and accumulates det of the pivots
// (times sign) when asked.
int eliminate(const FqField& f, MatrixFq& a, std::uint8_t* det) {
  int n = a.n, r = 0;
  std::uint8_t d = 1;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
      d = f.neg(d);
    }
    auto p = a.at(r, c);
    d = f.mul(d, p);
    auto pinv = f.inv(p);
    for (int i = r + 1; i < n; ++i) {
      auto x = a.at(i, c);
      if (!x) continue;
      auto factor = f.mul(x, pinv);
      for (int j = c; j < n; ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    ++r;
  }
  if (r < n) d = 0;
  if (det) *det = d;
  return r;
}

}  // namespace

std::uint8_t determinant(const FqField& f, MatrixFq a) {
  std::uint8_t d = 0;
  eliminate(f, a, &d);
  return d;
}

int rank(const FqField& f, MatrixFq a) { return eliminate(f, a, nullptr); }

MatrixFq inverse(const FqField& f, const MatrixFq& a) {
  int n = a.n;
  MatrixFq m = a, inv = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorKind::InvalidInput, "matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(piv, j), m.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    auto pinv = f.inv(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = f.mul(m.at(c, j), pinv);
      inv.at(c, j) = f.mul(inv.at(c, j), pinv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || !m.at(i, c)) continue;
      auto x = m.at(i, c);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(c, j)));
        inv.at(i, j) = f.sub(inv.at(i, j), f.mul(x, inv.at(c, j)));
      }
    }
  }
  return inv;
}

int fixed_space_dim(const FqField& f, const MatrixFq& g) {
  MatrixFq d = g;
  for (int i = 0; i < g.n; ++i) d.at(i, i) = f.sub(d.at(i, i), 1);
  return g.n - rank(f, d);
}

std::uint64_t encode(const FqField& f, const MatrixFq& a) {
  std::uint64_t c = 0;
  int w = f.width();
  for (int i = a.n * a.n; i-- > 0;)
    c = (c << w) | a.e[static_cast<size_t>(i)];
  return c;
}

MatrixFq decode(const FqField& f, int n, std::uint64_t code) {
  MatrixFq m;
  m.n = n;
  int w = f.width();
  std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  for (int i = 0; i < n * n; ++i) {
    m.e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(code & mask);
    code >>= w;
  }
  return m;
}

MatrixFq transvection(int n, const FqField& /*f*/) {
  require(n >= 2, "transvection needs n >= 2");
  MatrixFq t = identity_matrix(n);
  t.at(0, 1) = 1;
  return t;
}

namespace {

void check_encoding_fits(int n, const FqField& f) {
  require(n >= 1 && n <= kMaxDim, "matrix dimension out of range");
  int bits = n * n * f.width();
  if (bits > 64) over_cap("64-bit element encoding (bits)", 64, bits);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<MatrixFq> enumerate_transvections(int n, const FqField& f,
                                              std::size_t cap) {
  require(n >= 2, "transvections need n >= 2");
  check_encoding_fits(n, f);
  std::int64_t q = f.q();
  std::int64_t expected = (ipow(q, n) - 1) * (ipow(q, n - 1) - 1) / (q - 1);
  if (static_cast<std::size_t>(expected) > cap)
    over_cap("transvection class cap", static_cast<long long>(cap), expected);
  std::int64_t nv = ipow(q, n);
  std::vector<std::uint64_t> codes;
  for (std::int64_t vc = 1; vc < nv; ++vc) {
    auto v = vector_from_code(f, n, static_cast<std::uint32_t>(vc));
    for (std::int64_t wc = 1; wc < nv; ++wc) {
      auto w = vector_from_code(f, n, static_cast<std::uint32_t>(wc));
      std::uint8_t dot = 0;
      for (int i = 0; i < n; ++i)
        dot = f.add(dot, f.mul(w[static_cast<size_t>(i)], v[static_cast<size_t>(i)]));
      if (dot) continue;
      MatrixFq t = identity_matrix(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          t.at(i, j) = f.add(t.at(i, j), f.mul(v[static_cast<size_t>(i)],
                                               w[static_cast<size_t>(j)]));
      codes.push_back(encode(f, t));
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<MatrixFq> out;
  for (auto c : codes) out.push_back(decode(f, n, c));
  return out;
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::Sym: return "Sym";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "GL") return GroupKind::GL;
  if (s == "SL") return GroupKind::SL;
  if (s == "Sym" || s == "S") return GroupKind::Sym;
  fail(ErrorKind::InvalidInput, "unknown group kind " + s);
}

GroupTable::GroupTable(GroupKind kind, int n, FieldPtr field,
                       std::vector<std::uint64_t> sorted_codes)
    : kind_(kind), n_(n), field_(std::move(field)), codes_(std::move(sorted_codes)) {
  require(std::is_sorted(codes_.begin(), codes_.end()), "codes must be sorted");
  mats_.reserve(codes_.size());
  index_.reserve(codes_.size() * 2);
  for (size_t i = 0; i < codes_.size(); ++i) {
    mats_.push_back(decode(*field_, n_, codes_[i]));
    index_.emplace(codes_[i], static_cast<int>(i));
  }
  identity_ = find(identity_matrix(n_));
  require(identity_ >= 0, "group table lacks the identity");
  inv_.resize(codes_.size());
  for (size_t i = 0; i < codes_.size(); ++i) {
    int j = find(inverse(*field_, mats_[i]));
    require(j >= 0, "group table not closed under inverse");
    inv_[i] = j;
  }
}

int GroupTable::find(std::uint64_t code) const {
  auto it = index_.find(code);
  return it == index_.end() ? -1 : it->second;
}

int GroupTable::mul(int a, int b) const {
  int r = find(multiply(*field_, matrix(a), matrix(b)));
  if (r < 0) fail(ErrorKind::Internal, "group table not closed under product");
  return r;
}

int GroupTable::order(int a) const {
  int o = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

std::string GroupTable::name() const {
  if (kind_ == GroupKind::Sym) return "S_" + std::to_string(n_);
  return to_string(kind_) + "_" + std::to_string(n_) + "(F_" +
         std::to_string(field_->q()) + ")";
}

GroupTable enumerate_group(GroupKind kind, int n, FieldPtr f, std::size_t cap) {
  if (kind == GroupKind::Sym) return symmetric_group(n, cap);
  check_encoding_fits(n, *f);
  mpz_class full = evaluate(gl_order(n), f->q());
  mpz_class want = kind == GroupKind::SL ? mpz_class(full / (f->q() - 1)) : full;
  if (want > cap || full > mpz_class(cap) * 64)
    over_cap("group size cap", static_cast<long long>(cap),
             want.fits_slong_p() ? want.get_si() : -1);

  const FqField& F = *f;
  int q = F.q();
  std::int64_t nv = ipow(q, n);
  std::vector<std::uint64_t> codes;
  MatrixFq cur;
  cur.n = n;
  // rows chosen one at a time outside the span of the previous ones
  std::function<void(int, const std::vector<char>&)> rec =
      [&](int row, const std::vector<char>& in_span) {
        if (row == n) {
          if (kind == GroupKind::GL || determinant(F, cur) == 1)
            codes.push_back(encode(F, cur));
          return;
        }
        for (std::int64_t vc = 1; vc < nv; ++vc) {
          if (in_span[static_cast<size_t>(vc)]) continue;
          auto v = vector_from_code(F, n, static_cast<std::uint32_t>(vc));
          for (int j = 0; j < n; ++j) cur.at(row, j) = v[static_cast<size_t>(j)];
          std::vector<char> next(in_span.size(), 0);
          if (row + 1 < n) {
            for (std::int64_t s = 0; s < nv; ++s) {
              if (!in_span[static_cast<size_t>(s)]) continue;
              auto sv = vector_from_code(F, n, static_cast<std::uint32_t>(s));
              for (int c = 0; c < q; ++c) {
                std::vector<std::uint8_t> w(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j)
                  w[static_cast<size_t>(j)] =
                      F.add(sv[static_cast<size_t>(j)],
                            F.mul(static_cast<std::uint8_t>(c), v[static_cast<size_t>(j)]));
                next[vector_code(F, w)] = 1;
              }
            }
          }
          rec(row + 1, next);
        }
      };
  std::vector<char> span0(static_cast<size_t>(nv), 0);
  span0[0] = 1;
  rec(0, span0);
  std::sort(codes.begin(), codes.end());
  if (mpz_class(static_cast<unsigned long>(codes.size())) != want)
    fail(ErrorKind::Internal, "group enumeration produced the wrong order");
  return GroupTable(kind, n, f, std::move(codes));
}

GroupTable symmetric_group(int n, std::size_t cap) {
  require(n >= 1 && n <= kMaxDim, "symmetric group degree out of range");
  std::size_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::size_t>(i);
  if (order > cap)
    over_cap("group size cap", static_cast<long long>(cap),
             static_cast<long long>(order));
  auto f = FqField::make(2);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> codes;
  do {
    MatrixFq m;
    m.n = n;
    // column j is e_{perm[j]}
    for (int j = 0; j < n; ++j) m.at(perm[static_cast<size_t>(j)], j) = 1;
    codes.push_back(encode(*f, m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(codes.begin(), codes.end());
  return GroupTable(GroupKind::Sym, n, f, std::move(codes));
}

std::vector<int> generators(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<size_t>(g.size()), 0);
  auto close = [&]() {
    std::fill(in.begin(), in.end(), 0);
    std::vector<int> queue{g.identity()};
    in[static_cast<size_t>(g.identity())] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int s : gens) {
        int y = g.mul(queue[h], s);
        if (!in[static_cast<size_t>(y)]) {
          in[static_cast<size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    return queue.size();
  };
  size_t reached = close();
  for (int x = 0; x < g.size() && reached < static_cast<size_t>(g.size()); ++x) {
    if (in[static_cast<size_t>(x)]) continue;
    gens.push_back(x);
    reached = close();
  }
  return gens;
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  auto gens = generators(g);
  ConjugacyClasses cc;
  cc.class_of.assign(static_cast<size_t>(g.size()), -1);
  std::vector<std::vector<int>> found;
  for (int x = 0; x < g.size(); ++x) {
    if (cc.class_of[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(found.size());
    std::vector<int> orbit{x};
    cc.class_of[static_cast<size_t>(x)] = id;
    for (size_t h = 0; h < orbit.size(); ++h)
      for (int s : gens) {
        int y = g.mul(g.mul(s, orbit[h]), g.inv(s));
        if (cc.class_of[static_cast<size_t>(y)] < 0) {
          cc.class_of[static_cast<size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    found.push_back(std::move(orbit));
  }
  // identity class to the front, keep the rest in encoding order
  int idc = cc.class_of[static_cast<size_t>(g.identity())];
  std::vector<int> order{idc};
  for (int c = 0; c < static_cast<int>(found.size()); ++c)
    if (c != idc) order.push_back(c);
  std::vector<int> remap(found.size());
  for (size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<size_t>(order[i])] = static_cast<int>(i);
    cc.members.push_back(std::move(found[static_cast<size_t>(order[i])]));
  }
  for (auto& c : cc.class_of) c = remap[static_cast<size_t>(c)];
  return cc;
}

std::vector<int> conjugacy_class_of(int element, const GroupTable& g) {
  auto gens = generators(g);
  std::vector<char> seen(static_cast<size_t>(g.size()), 0);
  std::vector<int> orbit{element};
  seen[static_cast<size_t>(element)] = 1;
  for (size_t h = 0; h < orbit.size(); ++h)
    for (int s : gens) {
      int y = g.mul(g.mul(s, orbit[h]), g.inv(s));
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::uint32_t vector_code(const FqField& f, std::span<const std::uint8_t> v) {
  std::uint32_t c = 0;
  for (size_t i = v.size(); i-- > 0;) c = c * static_cast<std::uint32_t>(f.q()) + v[i];
  return c;
}

std::vector<std::uint8_t> vector_from_code(const FqField& f, int n, std::uint32_t c) {
  std::vector<std::uint8_t> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] = static_cast<std::uint8_t>(c % static_cast<std::uint32_t>(f.q()));
    c /= static_cast<std::uint32_t>(f.q());
  }
  return v;
}

namespace {

std::vector<std::uint32_t> span_members(const FqField& f, int n,
                                        const std::vector<std::vector<std::uint8_t>>& basis) {
  std::vector<std::vector<std::uint8_t>> acc{std::vector<std::uint8_t>(static_cast<size_t>(n), 0)};
  for (const auto& b : basis) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& s : acc)
      for (int c = 0; c < f.q(); ++c) {
        auto w = s;
        for (int j = 0; j < n; ++j)
          w[static_cast<size_t>(j)] =
              f.add(w[static_cast<size_t>(j)],
                    f.mul(static_cast<std::uint8_t>(c), b[static_cast<size_t>(j)]));
        next.push_back(std::move(w));
      }
    acc = std::move(next);
  }
  std::vector<std::uint32_t> out;
  for (const auto& s : acc) out.push_back(vector_code(f, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const FqField& f, int n, int k,
                                          bool with_members) {
  require(n >= 0 && n <= kMaxDim, "dimension out of range");
  std::vector<Subspace> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pivots(static_cast<size_t>(k));
  std::function<void(int, int)> choose = [&](int i, int from) {
    if (i == k) {
      // free positions: right of each pivot, off the other pivot columns
      std::vector<std::pair<int, int>> free;
      std::vector<char> is_pivot(static_cast<size_t>(n), 0);
      for (int p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c < n; ++c)
          if (!is_pivot[static_cast<size_t>(c)]) free.push_back({r, c});
      std::vector<int> vals(free.size(), 0);
      while (true) {
        Subspace s;
        s.dim = k;
        s.basis.assign(static_cast<size_t>(k), std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
        for (int r = 0; r < k; ++r)
          s.basis[static_cast<size_t>(r)][static_cast<size_t>(pivots[static_cast<size_t>(r)])] = 1;
        for (size_t t = 0; t < free.size(); ++t)
          s.basis[static_cast<size_t>(free[t].first)][static_cast<size_t>(free[t].second)] =
              static_cast<std::uint8_t>(vals[t]);
        if (with_members) s.members = span_members(f, n, s.basis);
        out.push_back(std::move(s));
        size_t t = 0;
        while (t < vals.size() && ++vals[t] == f.q()) vals[t++] = 0;
        if (t == vals.size()) break;
      }
      return;
    }
    for (int c = from; c < n; ++c) {
      pivots[static_cast<size_t>(i)] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

SubspaceLattice::SubspaceLattice(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
  std::int64_t nv = ipow(f_->q(), n);
  if (nv > 4096) over_cap("subspace lattice vector cap", 4096, nv);
  for (int k = 0; k <= n; ++k) levels_.push_back(enumerate_subspaces(*f_, n, k));
}

bool SubspaceLattice::contains(const Subspace& big, const Subspace& small) const {
  for (const auto& b : small.basis)
    if (!std::binary_search(big.members.begin(), big.members.end(), vector_code(*f_, b)))
      return false;
  return true;
}

bool SubspaceLattice::stable(const Subspace& s, const MatrixFq& g) const {
  for (const auto& b : s.basis) {
    std::vector<std::uint8_t> gb(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        gb[static_cast<size_t>(i)] =
            f_->add(gb[static_cast<size_t>(i)], f_->mul(g.at(i, j), b[static_cast<size_t>(j)]));
    if (!std::binary_search(s.members.begin(), s.members.end(), vector_code(*f_, gb)))
      return false;
  }
  return true;
}

std::vector<std::vector<int>> SubspaceLattice::flags(std::span<const int> blocks) const {
  std::vector<int> dims;
  int a = 0;
  for (int b : blocks) {
    require(b >= 0, "negative block");
    if (b == 0) continue;
    a += b;
    if (a < n_) dims.push_back(a);
  }
  require(a == n_, "blocks must add up to n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == dims.size()) {
      out.push_back(cur);
      return;
    }
    const auto& cands = of_dim(dims[level]);
    for (size_t i = 0; i < cands.size(); ++i) {
      if (level > 0 &&
          !contains(cands[i], of_dim(dims[level - 1])[static_cast<size_t>(cur.back())]))
        continue;
      cur.push_back(static_cast<int>(i));
      rec(level + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::int64_t SubspaceLattice::count_flags(std::span<const int> blocks,
                                          const MatrixFq* g) const {
  std::vector<int> dims;
  int a = 0;
  for (int b : blocks) {
    if (b == 0) continue;
    a += b;
    if (a < n_) dims.push_back(a);
  }
  require(a == n_, "blocks must add up to n");
  std::vector<std::vector<char>> ok(dims.size());
  for (size_t l = 0; l < dims.size(); ++l) {
    const auto& cands = of_dim(dims[l]);
    ok[l].resize(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) ok[l][i] = !g || stable(cands[i], *g);
  }
  std::function<std::int64_t(size_t, int)> rec = [&](size_t level, int prev) -> std::int64_t {
    if (level == dims.size()) return 1;
    const auto& cands = of_dim(dims[level]);
    std::int64_t total = 0;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (!ok[level][i]) continue;
      if (level > 0 && !contains(cands[i], of_dim(dims[level - 1])[static_cast<size_t>(prev)]))
        continue;
      total += rec(level + 1, static_cast<int>(i));
    }
    return total;
  };
  return rec(0, -1);
}

namespace {

constexpr char kGroupMagic[8] = {'G', 'L', 'R', 'K', 'G', 'R', 'P', '1'};
constexpr std::uint32_t kGroupVersion = 1;

void put_u64(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(std::string_view s, size_t& pos) {
  if (pos + 8 > s.size()) fail(ErrorKind::InvalidInput, "truncated group file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos + static_cast<size_t>(i)])) << (8 * i);
  pos += 8;
  return v;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string serialize(const GroupTable& g) {
  std::string s(kGroupMagic, sizeof kGroupMagic);
  put_u64(s, kGroupVersion);
  s.push_back(static_cast<char>(g.kind()));
  s.push_back(static_cast<char>(g.n()));
  s.push_back(static_cast<char>(g.field().p()));
  s.push_back(static_cast<char>(g.field().m()));
  for (int c : g.field().modulus()) s.push_back(static_cast<char>(c));
  put_u64(s, static_cast<std::uint64_t>(g.size()));
  for (auto c : g.codes()) put_u64(s, c);
  put_u64(s, fnv1a(s));
  return s;
}

GroupTable deserialize_group(std::string_view b) {
  if (b.size() < sizeof kGroupMagic + 8 ||
      std::memcmp(b.data(), kGroupMagic, sizeof kGroupMagic) != 0)
    fail(ErrorKind::InvalidInput, "not a group table file");
  size_t tail = b.size() - 8;
  size_t pos = tail;
  if (get_u64(b, pos) != fnv1a(b.substr(0, tail)))
    fail(ErrorKind::InvalidInput, "group table checksum mismatch");
  pos = sizeof kGroupMagic;
  if (get_u64(b, pos) != kGroupVersion)
    fail(ErrorKind::InvalidInput, "unsupported group table version");
  if (pos + 4 > tail) fail(ErrorKind::InvalidInput, "truncated group file");
  auto kind = static_cast<GroupKind>(b[pos]);
  int n = static_cast<unsigned char>(b[pos + 1]);
  int p = static_cast<unsigned char>(b[pos + 2]);
  int m = static_cast<unsigned char>(b[pos + 3]);
  pos += 4;
  if (pos + static_cast<size_t>(m) + 1 > tail) fail(ErrorKind::InvalidInput, "truncated group file");
  std::vector<int> modulus;
  for (int i = 0; i <= m; ++i) modulus.push_back(static_cast<unsigned char>(b[pos++]));
  auto f = std::make_shared<const FqField>(p, m, modulus);
  std::uint64_t count = get_u64(b, pos);
  if (pos + count * 8 != tail) fail(ErrorKind::InvalidInput, "group file size mismatch");
  std::vector<std::uint64_t> codes(count);
  for (auto& c : codes) c = get_u64(b, pos);
  return GroupTable(kind, n, f, std::move(codes));
}

}  // namespace glrank
