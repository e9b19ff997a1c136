#pragma once

#include <climits>
#include <map>
#include <span>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "glrank/partitions.hpp"

namespace glrank {

// Integer polynomial in q; zero coefficients are never stored.
class QPoly {
 public:
  static constexpr int kMinusInfinity = INT_MIN;

  QPoly() = default;
  QPoly(long c);  // NOLINT: constants convert implicitly
  static QPoly monomial(int degree, const mpz_class& c = 1);
  static QPoly q() { return monomial(1); }

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first;
  }
  mpz_class coeff(int degree) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    r *= b;
    return r;
  }
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  void add_term(int degree, const mpz_class& c);
  std::map<int, mpz_class> terms_;
};

// a / b, throwing an internal error if the division leaves a remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);

struct LeadingTerm {
  int degree = QPoly::kMinusInfinity;
  mpz_class coefficient = 0;
  bool operator==(const LeadingTerm&) const = default;
};

LeadingTerm leading(const QPoly& p);

bool is_prime_power(const mpz_class& q);
// q must be a prime power >= 2
mpz_class evaluate(const QPoly& p, const mpz_class& q);
// value ratio a(q)/b(q); same precondition on q
mpq_class evaluate_ratio(const QPoly& a, const QPoly& b, const mpz_class& q);
QPoly substitute_q_power(const QPoly& p, int lambda);

QPoly q_power_minus_one(int j);  // q^j - 1
// Zero when k < 0, n < 0 or k > n.
QPoly gauss_binomial(int n, int k);
// Flags with successive quotient dimensions parts[0], parts[1], ...
QPoly q_multinomial(std::span<const int> parts);
QPoly q_multinomial(const Partition& d);
QPoly gl_order(int n);

nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace glrank
