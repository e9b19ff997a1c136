#include "glrank/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "glrank/error.hpp"

namespace glrank {

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) fail(ErrorKind::Internal, "modular inverse of zero");
  return powmod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> primes;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 r : primes) ok = ok && powmod(g, (p - 1) / r, p) != 1;
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root mod " + std::to_string(p));
}

using Mat = std::vector<std::vector<u64>>;

// Characteristic polynomial via Hessenberg reduction, lowest degree first.
std::vector<u64> charpoly(Mat h, u64 p) {
  size_t n = h.size();
  for (size_t m = 1; m + 1 < n; ++m) {
    size_t piv = n;
    for (size_t r = m; r < n; ++r)
      if (h[r][m - 1]) {
        piv = r;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    u64 t = invmod(h[m][m - 1], p);
    for (size_t r = m + 1; r < n; ++r) {
      u64 u = h[r][m - 1] * t % p;
      if (!u) continue;
      for (size_t c = 0; c < n; ++c) h[r][c] = (h[r][c] + p - u * h[m][c] % p) % p;
      for (size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + u * h[c][r]) % p;
    }
  }
  // Hessenberg recurrence, 1-indexed as H(i,j) = h[i-1][j-1]
  auto H = [&](size_t i, size_t j) { return h[i - 1][j - 1]; };
  std::vector<std::vector<u64>> P{{1}};
  for (size_t m = 1; m <= n; ++m) {
    const auto& prev = P[m - 1];
    std::vector<u64> cur(m + 1, 0);
    for (size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - H(m, m) * prev[d] % p) % p;
    }
    u64 t = 1;
    for (size_t i = 1; i < m; ++i) {
      t = t * H(m - i + 1, m - i) % p;
      u64 c = t * H(m - i, m) % p;
      if (!c) continue;
      const auto& low = P[m - i - 1];
      for (size_t d = 0; d < low.size(); ++d) cur[d] = (cur[d] + p - c * low[d] % p) % p;
    }
    P.push_back(std::move(cur));
  }
  return P[n];
}

// Reduced row echelon form of the rows, zero rows dropped.
Mat rref(Mat a, u64 p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 t = invmod(a[r][c], p);
    for (auto& x : a[r]) x = x * t % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || !a[i][c]) continue;
      u64 u = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - u * a[r][j] % p) % p;
    }
    ++r;
  }
  a.resize(r);
  return a;
}

// Kernel of a square matrix acting on column vectors.
Mat nullspace(const Mat& m, u64 p) {
  size_t n = m.size();
  Mat r = rref(m, p);
  std::vector<int> pivot_col;
  std::vector<char> is_pivot(n, 0);
  for (auto& row : r) {
    size_t c = 0;
    while (!row[c]) ++c;
    pivot_col.push_back(static_cast<int>(c));
    is_pivot[c] = 1;
  }
  Mat out;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (size_t i = 0; i < r.size(); ++i)
      v[static_cast<size_t>(pivot_col[i])] = (p - r[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// A_j[i][k] = #{x in C_j : x^-1 z_k in C_i}, reduced mod p
Mat class_matrix(const GroupTable& g, const ConjugacyClasses& cc, int j, u64 p) {
  size_t r = static_cast<size_t>(cc.count());
  Mat a(r, std::vector<u64>(r, 0));
  for (size_t k = 0; k < r; ++k) {
    int z = cc.rep(static_cast<int>(k));
    for (int x : cc.members[static_cast<size_t>(j)]) {
      int y = g.mul(g.inv(x), z);
      auto& cell = a[static_cast<size_t>(cc.class_of[static_cast<size_t>(y)])][k];
      cell = (cell + 1) % p;
    }
  }
  return a;
}

bool is_gl_like(const GroupTable& g) { return g.kind() != GroupKind::Sym; }

mpz_class integer_of(std::vector<mpz_class> acc, int e, const char* what) {
  auto red = reduce_mod_phi(std::move(acc), e);
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i] != 0) fail(ErrorKind::Internal, std::string(what) + " is not rational");
  return red.empty() ? mpz_class(0) : red[0];
}

}  // namespace

std::vector<mpz_class> CharacterTable::reduced(int i, int k) const {
  return reduce_mod_phi(dense(value(i, k), e), e);
}

bool CharacterTable::is_rational(int i, int k) const {
  auto r = reduced(i, k);
  for (size_t t = 1; t < r.size(); ++t)
    if (r[t] != 0) return false;
  return true;
}

mpz_class CharacterTable::integer_value(int i, int k) const {
  return integer_of(dense(value(i, k), e), e, "character value");
}

std::complex<double> CharacterTable::complex_value(int i, int k) const {
  return to_complex(value(i, k), e);
}

int CharacterTable::class_of(const MatrixFq& m) const {
  int idx = group->find(m);
  require(idx >= 0, "matrix is not in the group");
  return cc.class_of[static_cast<size_t>(idx)];
}

int CharacterTable::transvection_class() const {
  if (!is_gl_like(*group) || group->n() < 2)
    fail(ErrorKind::Unsupported, "transvection class needs GL/SL with n >= 2");
  return class_of(transvection(group->n(), group->field()));
}

CharacterTable character_table(GroupPtr gp, int max_classes) {
  const GroupTable& g = *gp;
  CharacterTable ct;
  ct.group = gp;
  ct.cc = conjugacy_classes(g);
  int r = ct.cc.count();
  if (r > max_classes) over_cap("class count cap", max_classes, r);
  const auto& f = g.field();

  int e = 1;
  for (int k = 0; k < r; ++k) {
    ClassInfo ci;
    int x = ct.cc.rep(k);
    ci.rep = g.code(x);
    ci.size = ct.cc.size(k);
    ci.order = g.order(x);
    ci.inverse = ct.cc.class_of[static_cast<size_t>(g.inv(x))];
    ci.fixdim = fixed_space_dim(f, g.matrix(x));
    ci.logdet = is_gl_like(g) ? f.log(determinant(f, g.matrix(x))) : 0;
    e = std::lcm(e, ci.order);
    ct.classes.push_back(ci);
  }
  ct.e = e;

  const u64 N = static_cast<u64>(g.size());
  u64 p = static_cast<u64>(e) + 1;
  while (p * p <= 4 * N || !is_prime_u64(p)) p += static_cast<u64>(e);
  if (p >= (u64{1} << 31)) fail(ErrorKind::Internal, "modular prime too large");
  ct.prime = static_cast<std::uint32_t>(p);

  // common eigenvectors of the class matrices
  Mat identity(static_cast<size_t>(r), std::vector<u64>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) identity[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  std::vector<Mat> spaces{identity};
  auto done = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; });
  };
  for (int j = 1; j < r && !done(); ++j) {
    Mat a = class_matrix(g, ct.cc, j, p);
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<size_t> pc;
      for (auto& row : basis) {
        size_t c = 0;
        while (!row[c]) ++c;
        pc.push_back(c);
      }
      Mat m(d, std::vector<u64>(d, 0));
      for (size_t s = 0; s < d; ++s)
        for (size_t t = 0; t < d; ++t) {
          size_t i = pc[t];
          u64 acc = 0;
          for (size_t k = 0; k < static_cast<size_t>(r); ++k)
            acc = (acc + a[i][k] * basis[s][k]) % p;
          m[t][s] = acc;
        }
      auto cp = charpoly(m, p);
      size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        u64 val = 0;
        for (size_t t = cp.size(); t-- > 0;) val = (val * lambda + cp[t]) % p;
        if (val) continue;
        Mat shifted = m;
        for (size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + p - lambda) % p;
        Mat kernel = nullspace(shifted, p);
        Mat sub;
        for (auto& c : kernel) {
          std::vector<u64> v(static_cast<size_t>(r), 0);
          for (size_t s = 0; s < d; ++s)
            for (size_t k = 0; k < static_cast<size_t>(r); ++k)
              v[k] = (v[k] + c[s] * basis[s][k]) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(rref(std::move(sub), p));
      }
      if (found != d)
        fail(ErrorKind::Internal, "class matrix " + std::to_string(j) +
                                      " not diagonalizable mod " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r || !done())
    fail(ErrorKind::Internal, "class matrices did not separate the characters mod " +
                                  std::to_string(p) + " (" + std::to_string(spaces.size()) +
                                  " spaces for " + std::to_string(r) + " classes)");

  // power maps: class of rep^t
  std::vector<std::vector<int>> pow_class(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    int x = g.identity(), rep = ct.cc.rep(k);
    for (int t = 0; t < ct.classes[static_cast<size_t>(k)].order; ++t) {
      pow_class[static_cast<size_t>(k)].push_back(ct.cc.class_of[static_cast<size_t>(x)]);
      x = g.mul(x, rep);
    }
  }
  u64 zeta_e = powmod(primitive_root(p), (p - 1) / static_cast<u64>(e), p);
  u64 isqrt = static_cast<u64>(std::sqrt(static_cast<double>(N))) + 1;

  struct Row {
    std::int64_t dim;
    std::vector<CycTerms> vals;
  };
  std::vector<Row> rows;
  for (auto& sp : spaces) {
    const auto& w = sp[0];
    if (w[0] != 1) fail(ErrorKind::Internal, "central character not normalized");
    u64 s = 0;
    for (int k = 0; k < r; ++k) {
      const auto& ci = ct.classes[static_cast<size_t>(k)];
      s = (s + w[static_cast<size_t>(k)] * w[static_cast<size_t>(ci.inverse)] % p *
                   invmod(static_cast<u64>(ci.size) % p, p)) % p;
    }
    u64 d2 = N % p * invmod(s, p) % p;
    u64 d = 0;
    for (u64 c = 1; c <= isqrt; ++c)
      if (c * c % p == d2 && N % c == 0) {
        d = c;
        break;
      }
    if (!d) fail(ErrorKind::Internal, "no degree fits mod " + std::to_string(p));
    std::vector<u64> chi(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k)
      chi[static_cast<size_t>(k)] = w[static_cast<size_t>(k)] * d % p *
                                    invmod(static_cast<u64>(ct.classes[static_cast<size_t>(k)].size) % p, p) % p;
    Row row{static_cast<std::int64_t>(d), {}};
    for (int k = 0; k < r; ++k) {
      int o = ct.classes[static_cast<size_t>(k)].order;
      u64 zo = powmod(zeta_e, static_cast<u64>(e / o), p);
      u64 inv_o = invmod(static_cast<u64>(o), p);
      CycTerms terms;
      u64 total = 0;
      for (int b = 0; b < o; ++b) {
        u64 acc = 0;
        u64 step = powmod(zo, static_cast<u64>((o - b) % o), p);  // zeta_o^-b
        u64 z = 1;
        for (int t = 0; t < o; ++t) {
          acc = (acc + chi[static_cast<size_t>(pow_class[static_cast<size_t>(k)][static_cast<size_t>(t)])] * z) % p;
          z = z * step % p;
        }
        u64 m = acc * inv_o % p;
        if (m > d) fail(ErrorKind::Internal, "eigenvalue multiplicity out of range mod " + std::to_string(p));
        if (m) terms.push_back({b * (e / o), static_cast<std::int64_t>(m)});
        total += m;
      }
      if (total != d) fail(ErrorKind::Internal, "eigenvalue multiplicities do not add up");
      std::sort(terms.begin(), terms.end());
      row.vals.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.dim, a.vals) < std::tie(b.dim, b.vals);
  });
  u64 sq = 0;
  for (auto& row : rows) {
    sq += static_cast<u64>(row.dim * row.dim);
    ct.dims.push_back(row.dim);
    ct.values.push_back(std::move(row.vals));
  }
  if (sq != N) fail(ErrorKind::Internal, "sum of squared degrees differs from the group order");
  return ct;
}

Orthogonality check_orthogonality(const CharacterTable& ct) {
  Orthogonality o{true, true};
  int r = ct.num_irreps(), e = ct.e;
  mpz_class N = static_cast<long>(ct.order());
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      std::vector<std::int64_t> acc(static_cast<size_t>(e), 0);
      for (int k = 0; k < ct.num_classes(); ++k)
        for (auto [a, ma] : ct.value(i, k))
          for (auto [b, mb] : ct.value(j, k))
            acc[static_cast<size_t>(((a - b) % e + e) % e)] +=
                ct.classes[static_cast<size_t>(k)].size * ma * mb;
      std::vector<mpz_class> v(acc.begin(), acc.end());
      auto red = reduce_mod_phi(std::move(v), e);
      for (size_t t = 0; t < red.size(); ++t)
        if (red[t] != (t == 0 && i == j ? N : mpz_class(0))) o.rows = false;
    }
  for (int k = 0; k < ct.num_classes(); ++k)
    for (int l = k; l < ct.num_classes(); ++l) {
      std::vector<std::int64_t> acc(static_cast<size_t>(e), 0);
      for (int i = 0; i < r; ++i)
        for (auto [a, ma] : ct.value(i, k))
          for (auto [b, mb] : ct.value(i, l))
            acc[static_cast<size_t>(((a - b) % e + e) % e)] += ma * mb;
      std::vector<mpz_class> v(acc.begin(), acc.end());
      auto red = reduce_mod_phi(std::move(v), e);
      mpz_class want = k == l ? mpz_class(N / ct.classes[static_cast<size_t>(k)].size) : mpz_class(0);
      for (size_t t = 0; t < red.size(); ++t)
        if (red[t] != (t == 0 ? want : mpz_class(0))) o.columns = false;
    }
  return o;
}

int num_twists(const CharacterTable& ct) {
  return ct.group->kind() == GroupKind::GL ? ct.group->field().q() - 1 : 1;
}

namespace {

int twist_shift(const CharacterTable& ct, int k, int a) {
  int q1 = ct.group->field().q() - 1;
  if (q1 <= 1 || a % q1 == 0) return 0;
  return static_cast<int>((static_cast<std::int64_t>(a) * ct.classes[static_cast<size_t>(k)].logdet %
                           q1) * (ct.e / q1) % ct.e);
}

}  // namespace

mpz_class twisted_multiplicity(const CharacterTable& ct, int i, int a,
                               std::span<const mpz_class> f) {
  require(static_cast<int>(f.size()) == ct.num_classes(), "class function has the wrong length");
  int e = ct.e;
  std::vector<mpz_class> acc(static_cast<size_t>(e), 0);
  for (int k = 0; k < ct.num_classes(); ++k) {
    if (f[static_cast<size_t>(k)] == 0) continue;
    mpz_class w = f[static_cast<size_t>(k)] * static_cast<long>(ct.classes[static_cast<size_t>(k)].size);
    int sh = twist_shift(ct, k, a);
    for (auto [x, m] : ct.value(i, k))
      acc[static_cast<size_t>(((-(x + sh)) % e + e) % e)] += w * static_cast<long>(m);
  }
  mpz_class s = integer_of(std::move(acc), e, "inner product");
  mpz_class N = static_cast<long>(ct.order());
  if (s % N != 0) fail(ErrorKind::Internal, "inner product is not an integer");
  return s / N;
}

mpz_class multiplicity(const CharacterTable& ct, int i, std::span<const mpz_class> f) {
  return twisted_multiplicity(ct, i, 0, f);
}

int twist(const CharacterTable& ct, int i, int a) {
  if (a % num_twists(ct) == 0) return i;
  std::vector<CycTerms> row;
  for (int k = 0; k < ct.num_classes(); ++k)
    row.push_back(rotate(ct.value(i, k), twist_shift(ct, k, a), ct.e));
  for (int j = 0; j < ct.num_irreps(); ++j)
    if (ct.dims[static_cast<size_t>(j)] == ct.dims[static_cast<size_t>(i)] &&
        ct.values[static_cast<size_t>(j)] == row)
      return j;
  fail(ErrorKind::Internal, "twisted character missing from the table");
}

mpz_class omega_tensor_character(const FqField& f, const MatrixFq& g, int k) {
  require(k >= 0, "tensor power must be >= 0");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(f.q()),
                static_cast<unsigned long>(k * fixed_space_dim(f, g)));
  return r;
}

std::vector<mpz_class> omega_power(const CharacterTable& ct, int k) {
  std::vector<mpz_class> out;
  for (auto& ci : ct.classes) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(ct.group->field().q()),
                  static_cast<unsigned long>(k * ci.fixdim));
    out.push_back(r);
  }
  return out;
}

namespace {

void require_matrix_group(const CharacterTable& ct) {
  if (!is_gl_like(*ct.group)) fail(ErrorKind::Unsupported, "tensor rank needs a GL or SL table");
}

// (class, logdet, count) over H_k = {g : g e_i = e_i for i < k}
std::vector<std::vector<std::tuple<int, int, std::int64_t>>> hk_data(const CharacterTable& ct) {
  const auto& g = *ct.group;
  int n = g.n();
  std::vector<std::map<std::pair<int, int>, std::int64_t>> acc(static_cast<size_t>(n + 1));
  for (int x = 0; x < g.size(); ++x) {
    const auto& m = g.matrix(x);
    int c = ct.cc.class_of[static_cast<size_t>(x)];
    int ld = ct.classes[static_cast<size_t>(c)].logdet;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && m.at(i, k - 1) == (i == k - 1 ? 1 : 0);
        if (!ok) break;
      }
      ++acc[static_cast<size_t>(k)][{c, ld}];
    }
  }
  std::vector<std::vector<std::tuple<int, int, std::int64_t>>> out(acc.size());
  for (size_t k = 0; k < acc.size(); ++k)
    for (auto& [key, cnt] : acc[k]) out[k].push_back({key.first, key.second, cnt});
  return out;
}

bool hk_nonzero(const CharacterTable& ct, int i, int a,
                const std::vector<std::tuple<int, int, std::int64_t>>& hk) {
  int e = ct.e, q1 = ct.group->field().q() - 1;
  std::vector<mpz_class> acc(static_cast<size_t>(e), 0);
  for (auto [c, ld, cnt] : hk) {
    int sh = q1 > 1 ? static_cast<int>(static_cast<std::int64_t>(a) * ld % q1 * (e / q1) % e) : 0;
    for (auto [x, m] : ct.value(i, c))
      acc[static_cast<size_t>(((x - sh) % e + e) % e)] += static_cast<long>(cnt * m);
  }
  auto red = reduce_mod_phi(std::move(acc), e);
  return std::any_of(red.begin(), red.end(), [](const mpz_class& z) { return z != 0; });
}

int strict_rank_with(const CharacterTable& ct, int i, const std::vector<std::vector<mpz_class>>& om) {
  for (size_t k = 0; k < om.size(); ++k)
    if (multiplicity(ct, i, om[k]) > 0) return static_cast<int>(k);
  fail(ErrorKind::Internal, "irrep missing from every tensor power");
}

std::vector<std::vector<mpz_class>> omega_powers(const CharacterTable& ct) {
  std::vector<std::vector<mpz_class>> om;
  for (int k = 0; k <= ct.group->n(); ++k) om.push_back(omega_power(ct, k));
  return om;
}

int hk_rank(const CharacterTable& ct, int i, bool eigen,
            const std::vector<std::vector<std::tuple<int, int, std::int64_t>>>& hk) {
  int twists = eigen ? num_twists(ct) : 1;
  for (size_t k = 0; k < hk.size(); ++k)
    for (int a = 0; a < twists; ++a)
      if (hk_nonzero(ct, i, a, hk[k])) return static_cast<int>(k);
  fail(ErrorKind::Internal, "no H_k eigenvector found");
}

}  // namespace

int strict_rank(const CharacterTable& ct, int i) {
  require_matrix_group(ct);
  return strict_rank_with(ct, i, omega_powers(ct));
}

int rank(const CharacterTable& ct, int i) {
  require_matrix_group(ct);
  auto om = omega_powers(ct);
  int best = ct.group->n();
  for (int a = 0; a < num_twists(ct); ++a)
    best = std::min(best, strict_rank_with(ct, twist(ct, i, a), om));
  return best;
}

int rank_via_Hk(const CharacterTable& ct, int i) {
  require_matrix_group(ct);
  return hk_rank(ct, i, false, hk_data(ct));
}

int rank_via_Hk_eigen(const CharacterTable& ct, int i) {
  require_matrix_group(ct);
  return hk_rank(ct, i, true, hk_data(ct));
}

namespace {
std::string value_text(const CharacterTable& ct, int i, int k);
}  // namespace

std::vector<RankRow> rank_report(const CharacterTable& ct) {
  require_matrix_group(ct);
  auto om = omega_powers(ct);
  auto hk = hk_data(ct);
  int t = ct.group->n() >= 2 ? ct.transvection_class() : -1;
  std::vector<int> strict;
  for (int i = 0; i < ct.num_irreps(); ++i) strict.push_back(strict_rank_with(ct, i, om));
  std::vector<RankRow> out;
  for (int i = 0; i < ct.num_irreps(); ++i) {
    RankRow row;
    row.irrep = i;
    row.dim = ct.dims[static_cast<size_t>(i)];
    if (t < 0) {
      row.char_at_T = row.dim;
    } else if (ct.is_rational(i, t)) {
      row.char_at_T = ct.integer_value(i, t);
    } else {
      row.at_T_rational = false;
    }
    row.char_at_T_text = t >= 0 ? value_text(ct, i, t) : row.char_at_T.get_str();
    row.strict_rank = strict[static_cast<size_t>(i)];
    row.rank = row.strict_rank;
    for (int a = 1; a < num_twists(ct); ++a)
      row.rank = std::min(row.rank, strict[static_cast<size_t>(twist(ct, i, a))]);
    row.rank_via_Hk = hk_rank(ct, i, false, hk);
    row.rank_via_Hk_eigen = hk_rank(ct, i, true, hk);
    out.push_back(std::move(row));
  }
  return out;
}

FiltrationReport filtration_check(const CharacterTable& ct) {
  require_matrix_group(ct);
  FiltrationReport rep;
  rep.strict = true;
  std::vector<char> prev(static_cast<size_t>(ct.num_irreps()), 0);
  for (int k = 1; k <= ct.group->n(); ++k) {
    auto om = omega_power(ct, k);
    std::vector<char> cur(prev.size(), 0);
    int count = 0;
    for (int i = 0; i < ct.num_irreps(); ++i)
      if (multiplicity(ct, i, om) > 0) {
        cur[static_cast<size_t>(i)] = 1;
        ++count;
      }
    if (k > 1) {
      for (size_t i = 0; i < cur.size(); ++i)
        if (prev[i] && !cur[i]) rep.strict = false;
      if (count <= rep.stage_sizes.back()) rep.strict = false;
    }
    rep.stage_sizes.push_back(count);
    prev = std::move(cur);
  }
  rep.complete = !rep.stage_sizes.empty() && rep.stage_sizes.back() == ct.num_irreps();
  return rep;
}

RestrictionReport restrict_to_sl(const CharacterTable& gl, const CharacterTable& sl) {
  const auto& G = *gl.group;
  const auto& S = *sl.group;
  require(G.kind() == GroupKind::GL && S.kind() == GroupKind::SL, "need a GL and an SL table");
  require(G.n() == S.n() && G.field().q() == S.field().q() &&
              std::ranges::equal(G.field().modulus(), S.field().modulus()),
          "GL and SL tables over different n or field");
  require(gl.e % sl.e == 0, "SL exponent must divide GL exponent");
  RestrictionReport rep;
  for (int c = 0; c < sl.num_classes(); ++c)
    rep.class_map.push_back(gl.class_of(S.matrix(sl.cc.rep(c))));

  int e = gl.e, scale = gl.e / sl.e;
  mpz_class NS = static_cast<long>(sl.order());
  int R = gl.num_irreps(), Rs = sl.num_irreps();
  std::vector<std::vector<long>> mult(static_cast<size_t>(R), std::vector<long>(static_cast<size_t>(Rs), 0));
  rep.multiplicity_free = true;
  for (int i = 0; i < R; ++i)
    for (int s = 0; s < Rs; ++s) {
      std::vector<mpz_class> acc(static_cast<size_t>(e), 0);
      for (int c = 0; c < sl.num_classes(); ++c) {
        long size = static_cast<long>(sl.classes[static_cast<size_t>(c)].size);
        for (auto [a, ma] : gl.value(i, rep.class_map[static_cast<size_t>(c)]))
          for (auto [b, mb] : sl.value(s, c))
            acc[static_cast<size_t>(((a - b * scale) % e + e) % e)] += size * ma * mb;
      }
      mpz_class v = integer_of(std::move(acc), e, "restriction multiplicity");
      if (v % NS != 0) fail(ErrorKind::Internal, "restriction multiplicity not an integer");
      v /= NS;
      mult[static_cast<size_t>(i)][static_cast<size_t>(s)] = v.get_si();
      if (v > 1) rep.multiplicity_free = false;
    }

  int q1 = G.field().q() - 1;
  std::vector<std::vector<int>> orbit(static_cast<size_t>(R));
  rep.orbit_stabilizer = true;
  rep.irreducible_iff_unfixed = true;
  int reducible = 0;
  for (int i = 0; i < R; ++i) {
    RestrictionRow row;
    row.gl_irrep = i;
    for (int s = 0; s < Rs; ++s)
      if (mult[static_cast<size_t>(i)][static_cast<size_t>(s)] > 0) row.constituents.push_back(s);
    std::vector<int> orb;
    for (int a = 0; a < q1; ++a) {
      int j = twist(gl, i, a);
      if (j == i) ++row.stabilizer_size;
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    row.orbit_size = static_cast<int>(orb.size());
    orbit[static_cast<size_t>(i)] = orb;
    if (row.orbit_size * row.stabilizer_size != q1) rep.orbit_stabilizer = false;
    bool irreducible = row.constituents.size() == 1;
    if (irreducible != (row.stabilizer_size == 1)) rep.irreducible_iff_unfixed = false;
    // Clifford theory with cyclic quotient: as many pieces as fixing twists
    if (static_cast<int>(row.constituents.size()) != row.stabilizer_size)
      rep.irreducible_iff_unfixed = false;
    if (!irreducible) ++reducible;
    rep.rows.push_back(std::move(row));
  }
  rep.spectra_iff_twist = true;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      const auto& a = rep.rows[static_cast<size_t>(i)].constituents;
      const auto& b = rep.rows[static_cast<size_t>(j)].constituents;
      bool same_orbit = std::binary_search(orbit[static_cast<size_t>(i)].begin(),
                                           orbit[static_cast<size_t>(i)].end(), j);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (same_orbit != (a == b) || (!same_orbit && !common.empty())) rep.spectra_iff_twist = false;
    }
  rep.fibers_transitive = true;
  rep.covers_sl = true;
  for (int s = 0; s < Rs; ++s) {
    std::vector<int> above;
    for (int i = 0; i < R; ++i)
      if (mult[static_cast<size_t>(i)][static_cast<size_t>(s)] > 0) above.push_back(i);
    if (above.empty()) {
      rep.covers_sl = false;
      continue;
    }
    if (above != orbit[static_cast<size_t>(above.front())]) rep.fibers_transitive = false;
  }
  rep.reducible_fraction = R ? static_cast<double>(reducible) / R : 0;
  return rep;
}

Partition cycle_type(const MatrixFq& perm) {
  int n = perm.n;
  std::vector<int> image(static_cast<size_t>(n), -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (perm.at(i, j)) image[static_cast<size_t>(j)] = i;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> lens;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<size_t>(x)]; x = image[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

std::vector<mpz_class> young_character(const CharacterTable& ct, const Partition& d) {
  require(ct.group->kind() == GroupKind::Sym, "Young characters need a symmetric group table");
  require(d.weight() == ct.group->n(), "partition weight must equal n");
  std::vector<mpz_class> out;
  for (int k = 0; k < ct.num_classes(); ++k) {
    auto cyc = cycle_type(ct.group->matrix(ct.cc.rep(k))).vec();
    std::vector<int> room = d.vec();
    // cycles placed whole into blocks of the ordered set partition
    std::function<long(size_t)> place = [&](size_t c) -> long {
      if (c == cyc.size()) return 1;
      long total = 0;
      for (auto& r : room)
        if (r >= cyc[c]) {
          r -= cyc[c];
          total += place(c + 1);
          r += cyc[c];
        }
      return total;
    };
    out.push_back(place(0));
  }
  return out;
}

std::vector<Partition> label_symmetric_irreps(const CharacterTable& ct) {
  require(ct.group->kind() == GroupKind::Sym, "labels need a symmetric group table");
  std::vector<Partition> labels(static_cast<size_t>(ct.num_irreps()));
  std::vector<char> taken(labels.size(), 0);
  for (auto& d : partitions_of(ct.group->n())) {
    auto y = young_character(ct, d);
    int pick = -1;
    for (int i = 0; i < ct.num_irreps(); ++i) {
      if (taken[static_cast<size_t>(i)]) continue;
      auto m = multiplicity(ct, i, y);
      if (m == 0) continue;
      if (pick >= 0 || m != 1) fail(ErrorKind::Internal, "Young character peeling is ambiguous at " + d.str());
      pick = i;
    }
    if (pick < 0) fail(ErrorKind::Internal, "no new constituent in Young character " + d.str());
    taken[static_cast<size_t>(pick)] = 1;
    labels[static_cast<size_t>(pick)] = d;
  }
  return labels;
}

namespace {

std::string value_text(const CharacterTable& ct, int i, int k) {
  if (ct.is_rational(i, k)) return ct.integer_value(i, k).get_str();
  std::string s;
  for (auto [x, m] : ct.value(i, k)) {
    if (!s.empty()) s += "+";
    if (m != 1) s += std::to_string(m) + "*";
    s += "E(" + std::to_string(ct.e) + ")";
    if (x != 1) s += "^" + std::to_string(x);
  }
  return s;
}

}  // namespace

nlohmann::json to_json(const CharacterTable& ct) {
  const auto& g = *ct.group;
  nlohmann::json j;
  j["group"] = g.name();
  j["kind"] = to_string(g.kind());
  j["n"] = g.n();
  j["q"] = g.field().q();
  j["order"] = ct.order();
  j["exponent"] = ct.e;
  j["prime"] = ct.prime;
  auto& cls = j["classes"] = nlohmann::json::array();
  for (auto& c : ct.classes)
    cls.push_back({{"rep", c.rep}, {"size", c.size}, {"order", c.order}, {"fixdim", c.fixdim}});
  j["dims"] = ct.dims;
  auto& vals = j["values"] = nlohmann::json::array();
  for (int i = 0; i < ct.num_irreps(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < ct.num_classes(); ++k) {
      auto coeffs = nlohmann::json::array();
      for (auto& c : ct.reduced(i, k)) coeffs.push_back(c.get_si());
      row.push_back(coeffs);
    }
    vals.push_back(row);
  }
  return j;
}

std::string table_csv(const CharacterTable& ct) {
  std::ostringstream out;
  out << "irrep,dim";
  for (int k = 0; k < ct.num_classes(); ++k) {
    const auto& c = ct.classes[static_cast<size_t>(k)];
    out << ",c" << k << "/size=" << c.size << "/order=" << c.order;
  }
  out << "\n";
  for (int i = 0; i < ct.num_irreps(); ++i) {
    out << i << "," << ct.dims[static_cast<size_t>(i)];
    for (int k = 0; k < ct.num_classes(); ++k) out << ",\"" << value_text(ct, i, k) << "\"";
    out << "\n";
  }
  return out.str();
}

std::string rank_csv(const CharacterTable& ct, std::span<const RankRow> rows) {
  std::ostringstream out;
  out << "irrep,dim,char_at_T,strict_rank,rank,rank_via_Hk,rank_via_Hk_eigen\n";
  for (auto& r : rows)
    out << r.irrep << "," << r.dim << "," << r.char_at_T_text << "," << r.strict_rank
        << "," << r.rank << "," << r.rank_via_Hk << "," << r.rank_via_Hk_eigen << "\n";
  (void)ct;
  return out.str();
}

namespace {

constexpr char kTableMagic[8] = {'G', 'L', 'R', 'K', 'C', 'T', 'B', '1'};
constexpr std::uint64_t kTableVersion = 1;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

void put(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct Reader {
  std::string_view b;
  size_t pos = 0;
  std::uint64_t get() {
    if (pos + 8 > b.size()) fail(ErrorKind::InvalidInput, "truncated character table file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[pos + static_cast<size_t>(i)])) << (8 * i);
    pos += 8;
    return v;
  }
};

}  // namespace

std::string serialize(const CharacterTable& ct) {
  std::string s(kTableMagic, sizeof kTableMagic);
  put(s, kTableVersion);
  put(s, fnv1a(serialize(*ct.group)));
  put(s, static_cast<std::uint64_t>(ct.e));
  put(s, ct.prime);
  put(s, static_cast<std::uint64_t>(ct.num_classes()));
  for (auto& c : ct.classes) {
    put(s, c.rep);
    put(s, static_cast<std::uint64_t>(c.size));
    put(s, static_cast<std::uint64_t>(c.order));
    put(s, static_cast<std::uint64_t>(c.inverse));
    put(s, static_cast<std::uint64_t>(c.fixdim));
    put(s, static_cast<std::uint64_t>(c.logdet));
  }
  put(s, static_cast<std::uint64_t>(ct.num_irreps()));
  for (int i = 0; i < ct.num_irreps(); ++i) {
    put(s, static_cast<std::uint64_t>(ct.dims[static_cast<size_t>(i)]));
    for (int k = 0; k < ct.num_classes(); ++k) {
      put(s, ct.value(i, k).size());
      for (auto [x, m] : ct.value(i, k)) {
        put(s, static_cast<std::uint64_t>(x));
        put(s, static_cast<std::uint64_t>(m));
      }
    }
  }
  put(s, fnv1a(s));
  return s;
}

CharacterTable deserialize_table(std::string_view b, GroupPtr group) {
  if (b.size() < sizeof kTableMagic + 8 || std::memcmp(b.data(), kTableMagic, sizeof kTableMagic) != 0)
    fail(ErrorKind::InvalidInput, "not a character table file");
  Reader tail{b, b.size() - 8};
  if (tail.get() != fnv1a(b.substr(0, b.size() - 8)))
    fail(ErrorKind::InvalidInput, "character table checksum mismatch");
  Reader rd{b.substr(0, b.size() - 8), sizeof kTableMagic};
  if (rd.get() != kTableVersion) fail(ErrorKind::InvalidInput, "unsupported character table version");
  if (rd.get() != fnv1a(serialize(*group)))
    fail(ErrorKind::InvalidInput, "character table belongs to a different group");
  CharacterTable ct;
  ct.group = group;
  ct.cc = conjugacy_classes(*group);
  ct.e = static_cast<int>(rd.get());
  ct.prime = static_cast<std::uint32_t>(rd.get());
  auto r = rd.get();
  if (r != static_cast<std::uint64_t>(ct.cc.count()))
    fail(ErrorKind::InvalidInput, "character table class count mismatch");
  for (std::uint64_t k = 0; k < r; ++k) {
    ClassInfo c;
    c.rep = rd.get();
    c.size = static_cast<std::int64_t>(rd.get());
    c.order = static_cast<int>(rd.get());
    c.inverse = static_cast<int>(rd.get());
    c.fixdim = static_cast<int>(rd.get());
    c.logdet = static_cast<int>(rd.get());
    if (c.rep != group->code(ct.cc.rep(static_cast<int>(k))))
      fail(ErrorKind::InvalidInput, "character table class order mismatch");
    ct.classes.push_back(c);
  }
  auto irreps = rd.get();
  if (irreps != r) fail(ErrorKind::InvalidInput, "table is not square");
  for (std::uint64_t i = 0; i < irreps; ++i) {
    ct.dims.push_back(static_cast<std::int64_t>(rd.get()));
    std::vector<CycTerms> row;
    for (std::uint64_t k = 0; k < r; ++k) {
      CycTerms t(rd.get());
      for (auto& [x, m] : t) {
        x = static_cast<int>(rd.get());
        m = static_cast<std::int64_t>(rd.get());
      }
      row.push_back(std::move(t));
    }
    ct.values.push_back(std::move(row));
  }
  if (rd.pos != rd.b.size()) fail(ErrorKind::InvalidInput, "trailing bytes in character table file");
  return ct;
}

}  // namespace glrank
