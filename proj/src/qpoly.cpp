#include "glrank/qpoly.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "glrank/error.hpp"

namespace glrank {

QPoly::QPoly(long c) {
  if (c != 0) terms_[0] = c;
}

QPoly QPoly::monomial(int degree, const mpz_class& c) {
  require(degree >= 0, "negative degree");
  QPoly p;
  if (c != 0) p.terms_[degree] = c;
  return p;
}

mpz_class QPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void QPoly::add_term(int degree, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(degree, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  QPoly r;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
  *this = std::move(r);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r;
  for (const auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [d, c] = *it;
    mpz_class a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    bool unit = a == 1 && d > 0;
    if (!unit) s += a.get_str();
    if (d > 0) {
      if (!unit) s += "*";
      s += "q";
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Internal, "polynomial division by zero");
  QPoly rem = a, quo;
  int db = b.degree();
  mpz_class lb = b.coeff(db);
  while (!rem.is_zero() && rem.degree() >= db) {
    int d = rem.degree();
    mpz_class c = rem.coeff(d);
    if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t()))
      fail(ErrorKind::Internal, "inexact polynomial division: (" + a.str() +
                                    ") / (" + b.str() + ")");
    QPoly t = QPoly::monomial(d - db, c / lb);
    quo += t;
    rem -= t * b;
  }
  if (!rem.is_zero())
    fail(ErrorKind::Internal, "inexact polynomial division: (" + a.str() +
                                  ") / (" + b.str() + ")");
  return quo;
}

LeadingTerm leading(const QPoly& p) {
  if (p.is_zero()) return {};
  return {p.degree(), p.coeff(p.degree())};
}

bool is_prime_power(const mpz_class& q) {
  if (q < 2) return false;
  size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (unsigned long k = 1; k <= bits; ++k) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), k) &&
        mpz_probab_prime_p(r.get_mpz_t(), 30) > 0)
      return true;
  }
  return false;
}

mpz_class evaluate(const QPoly& p, const mpz_class& q) {
  require(is_prime_power(q), "q must be a prime power >= 2, got " + q.get_str());
  mpz_class acc = 0;
  int prev = p.degree();
  if (p.is_zero()) return acc;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(),
               static_cast<unsigned long>(prev - it->first));
    acc = acc * pw + it->second;
    prev = it->first;
  }
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(prev));
  return acc * pw;
}

mpq_class evaluate_ratio(const QPoly& a, const QPoly& b, const mpz_class& q) {
  mpz_class den = evaluate(b, q);
  if (den == 0) fail(ErrorKind::Internal, "ratio denominator vanishes at q");
  mpq_class r(evaluate(a, q), den);
  r.canonicalize();
  return r;
}

QPoly substitute_q_power(const QPoly& p, int lambda) {
  require(lambda >= 1, "substitute_q_power needs lambda >= 1");
  QPoly r;
  for (const auto& [d, c] : p.terms()) r += QPoly::monomial(d * lambda, c);
  return r;
}

QPoly q_power_minus_one(int j) { return QPoly::monomial(j) - QPoly(1); }

namespace {

struct BinomialMemo {
  std::shared_mutex mu;
  std::map<std::pair<int, int>, QPoly> table;
};

BinomialMemo& binomial_memo() {
  static BinomialMemo m;
  return m;
}

}  // namespace

QPoly gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return QPoly();
  if (k > n - k) k = n - k;
  auto& memo = binomial_memo();
  {
    std::shared_lock lock(memo.mu);
    auto it = memo.table.find({n, k});
    if (it != memo.table.end()) return it->second;
  }
  // after step i the accumulator is [n-k+i choose i], always a polynomial
  QPoly r(1);
  for (int i = 1; i <= k; ++i)
    r = exact_div(r * q_power_minus_one(n - k + i), q_power_minus_one(i));
  std::unique_lock lock(memo.mu);
  memo.table.emplace(std::make_pair(n, k), r);
  return r;
}

QPoly q_multinomial(std::span<const int> parts) {
  QPoly r(1);
  int total = 0;
  for (int p : parts) {
    require(p >= 0, "negative block size");
    total += p;
    r *= gauss_binomial(total, p);
  }
  return r;
}

QPoly q_multinomial(const Partition& d) { return q_multinomial(d.parts()); }

QPoly gl_order(int n) {
  require(n >= 1, "gl_order needs n >= 1");
  QPoly r(1);
  for (int i = 0; i < n; ++i)
    r *= QPoly::monomial(n) - QPoly::monomial(i);
  return r;
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = c.get_str();
  return j;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  require(j.is_object(), "QPoly must be a JSON object");
  QPoly p;
  for (const auto& [k, v] : j.items()) {
    require(v.is_string(), "QPoly coefficients are decimal strings");
    p += QPoly::monomial(std::stoi(k), mpz_class(v.get<std::string>()));
  }
  return p;
}

}  // namespace glrank
