#include <doctest.h>

#include "glrank/error.hpp"
#include "glrank/qpoly.hpp"

using namespace glrank;

namespace {
const QPoly q = QPoly::q();
QPoly qp(int d) { return QPoly::monomial(d); }
}  // namespace

TEST_CASE("qpoly arithmetic") {
  QPoly a = qp(2) + q + 1;
  CHECK(a.str() == "q^2 + q + 1");
  CHECK((a - a).is_zero());
  CHECK(QPoly().degree() == QPoly::kMinusInfinity);
  CHECK((q + 1) * (q - 1) == qp(2) - 1);
  CHECK(exact_div(qp(3) - 1, q - 1) == a);
  CHECK_THROWS_AS(exact_div(qp(2) + 1, q - 1), Error);
  CHECK(qpoly_from_json(to_json(a * a - 5)) == a * a - 5);
  CHECK(to_json(q + 1).dump() == R"({"0":"1","1":"1"})");
}

TEST_CASE("gauss binomial examples") {
  CHECK(gauss_binomial(3, 1) == qp(2) + q + 1);
  CHECK(gauss_binomial(5, 0) == QPoly(1));
  CHECK(gauss_binomial(2, 1) == q + 1);
  CHECK(gauss_binomial(2, 3).is_zero());
  CHECK(evaluate(gauss_binomial(3, 1), 2) == 7);
  CHECK(evaluate(gauss_binomial(2, 1), 3) == 4);
}

TEST_CASE("q multinomial and group order") {
  CHECK(q_multinomial(Partition{1, 1}) == q + 1);
  CHECK(q_multinomial(Partition{2, 1}) == qp(2) + q + 1);
  CHECK(q_multinomial(Partition{1, 1, 1}) == (q + 1) * (qp(2) + q + 1));
  CHECK(evaluate(q_multinomial(Partition{1, 1, 1}), 2) == 21);
  CHECK(gl_order(1) == q - 1);
  CHECK(gl_order(2) == (qp(2) - 1) * (qp(2) - q));
  CHECK(evaluate(gl_order(2), 3) == 48);
  CHECK(evaluate(gl_order(3), 2) == 168);
}

TEST_CASE("leading, evaluate, substitute") {
  CHECK(leading(qp(2) + q + 1) == LeadingTerm{2, 1});
  CHECK(leading(QPoly()).degree == QPoly::kMinusInfinity);
  CHECK(evaluate(q + 1, 3) == 4);
  CHECK(substitute_q_power(q + 1, 2) == qp(2) + 1);
  CHECK_THROWS_AS(evaluate(q, 6), Error);
  CHECK_THROWS_AS(evaluate(q, 1), Error);
  CHECK_NOTHROW(evaluate(q, 64));
  CHECK(is_prime_power(49));
  CHECK(!is_prime_power(12));
}

TEST_CASE("degree law and monotonicity") {
  for (int n = 1; n <= 10; ++n) {
    auto ps = partitions_of(n);
    for (auto& d : ps) {
      int dl = 0;
      for (int i = 0; i < d.length(); ++i)
        for (int j = i + 1; j < d.length(); ++j) dl += d.part(i) * d.part(j);
      CHECK(leading(q_multinomial(d)).degree == dl);
      CHECK(leading(q_multinomial(d)).coefficient == 1);
    }
    for (auto& a : ps)
      for (auto& b : ps)
        if (compare_dominance(b, a) == Dominance::StrictlyDominates)
          CHECK(q_multinomial(b).degree() < q_multinomial(a).degree());
  }
}

TEST_CASE("grassmannian ratio identity") {
  for (int qq : {2, 3, 5})
    for (int n = 1; n <= 7; ++n)
      for (int u = 0; u <= n - 1; ++u) {
        mpq_class lhs(evaluate(gauss_binomial(n - 1, u), qq),
                      evaluate(gauss_binomial(n, u), qq));
        lhs.canonicalize();
        mpq_class rhs(evaluate(qp(n - u) - 1, qq), evaluate(qp(n) - 1, qq));
        rhs.canonicalize();
        CHECK(lhs == rhs);
      }
}
