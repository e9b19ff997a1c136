#include "glrank/field.hpp"

#include <bit>
#include <functional>

#include "glrank/error.hpp"

namespace glrank {

namespace {

using Poly = std::vector<int>;  // over F_p, lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  int inv_lead = 1;
  while (inv_lead * b.back() % p != 1) ++inv_lead;
  while (a.size() >= b.size()) {
    int c = a.back() * inv_lead % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g(static_cast<size_t>(d + 1));
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FqField::FqField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  require(is_prime(p), "field characteristic must be prime");
  require(m >= 1, "field degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kMaxQ) over_cap("field size cap q", kMaxQ, q_);
  }
  require(static_cast<int>(modulus_.size()) == m + 1 && modulus_.back() == 1,
          "modulus must be monic of degree m");
  for (int c : modulus_) require(c >= 0 && c < p, "modulus coefficients in [0,p)");
  require(is_irreducible_mod_p(modulus_, p), "modulus is not irreducible");
  width_ = std::bit_width(static_cast<unsigned>(q_ - 1));

  auto to_poly = [&](int a) {
    Poly v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      v[static_cast<size_t>(i)] = a % p;
      a /= p;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    int a = 0;
    for (size_t i = v.size(); i-- > 0;) a = a * p + v[i];
    return a;
  };
  auto polymul = [&](int a, int b) {
    Poly x = to_poly(a), y = to_poly(b), z(static_cast<size_t>(2 * m), 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        z[static_cast<size_t>(i + j)] =
            (z[static_cast<size_t>(i + j)] +
             x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]) % p;
    Poly r = poly_mod(z, modulus_, p);
    r.resize(static_cast<size_t>(m), 0);
    return from_poly(r);
  };

  size_t Q = static_cast<size_t>(q_);
  add_.resize(Q * Q);
  neg_.resize(Q);
  for (int a = 0; a < q_; ++a) {
    Poly x = to_poly(a);
    Poly nx(x.size());
    for (size_t i = 0; i < x.size(); ++i) nx[i] = (p - x[i]) % p;
    neg_[static_cast<size_t>(a)] = static_cast<Elem>(from_poly(nx));
    for (int b = 0; b < q_; ++b) {
      Poly y = to_poly(b), s(x.size());
      for (size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + y[i]) % p;
      add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] =
          static_cast<Elem>(from_poly(s));
    }
  }
  // primitive element by search, then log/antilog tables
  for (int g = 1; g < q_; ++g) {
    int x = 1, order = 0;
    do {
      x = polymul(x, g);
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  exp_.resize(2 * Q);
  log_.assign(Q, -1);
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[static_cast<size_t>(k)] = static_cast<Elem>(x);
    log_[static_cast<size_t>(x)] = k;
    x = polymul(x, primitive_);
  }
  for (size_t k = Q - 1; k < 2 * Q; ++k) exp_[k] = exp_[k - (Q - 1)];
}

std::shared_ptr<const FqField> FqField::make(int q) {
  require(q >= 2, "q must be >= 2");
  if (q > kMaxQ) over_cap("field size cap q", kMaxQ, q);
  int p = 0, m = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  require(r == 1, "q must be a prime power, got " + std::to_string(q));
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    std::vector<int> f(static_cast<size_t>(m + 1));
    int c = code;
    for (int i = 0; i < m; ++i) {
      f[static_cast<size_t>(i)] = c % p;
      c /= p;
    }
    f[static_cast<size_t>(m)] = 1;
    if (is_irreducible_mod_p(f, p)) return std::make_shared<const FqField>(p, m, f);
  }
  fail(ErrorKind::Internal, "no irreducible modulus found");
}

std::uint64_t FqField::modulus_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int c : modulus_) {
    h ^= static_cast<std::uint64_t>(c) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

FqField::Elem FqField::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::InvalidInput, "inverse of zero");
  return exp_[static_cast<size_t>((q_ - 1 - log_[a]) % (q_ - 1))];
}

int FqField::log(Elem a) const {
  if (a == 0) fail(ErrorKind::InvalidInput, "log of zero");
  return log_[a];
}

FqField::Elem FqField::exp(long long k) const {
  long long r = k % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_[static_cast<size_t>(r)];
}

std::string FqField::str(Elem a) const { return std::to_string(a); }

}  // namespace glrank
