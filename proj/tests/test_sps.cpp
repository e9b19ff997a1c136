#include <doctest.h>

#include <thread>

#include "glrank/error.hpp"
#include "glrank/sps.hpp"

using namespace glrank;

namespace {
const QPoly q = QPoly::q();
QPoly qp(int d) { return QPoly::monomial(d); }
}  // namespace

TEST_CASE("induced dims") {
  CHECK(dim_induced({1, 1}) == q + 1);
  CHECK(dim_induced({2, 1}) == qp(2) + q + 1);
  CHECK(dim_induced({3}) == QPoly(1));
}

TEST_CASE("fixed flag examples") {
  CHECK(fixed_flags(Partition{1, 1}) == QPoly(1));
  CHECK(fixed_flags(Partition{2, 1}) == q + 1);
  CHECK(fixed_flags(Partition{1, 1, 1}) == 2 * q + 1);
  CHECK(fixed_flags(Partition{2, 2}) == 2 * qp(2) + q + 1);
  CHECK_THROWS_AS(fixed_flags(Partition{1}), Error);
  // block order does not change the count (associate parabolics)
  std::vector<int> a{1, 2, 1}, b{2, 1, 1};
  CHECK(fixed_flags(a) == fixed_flags(b));
  auto s = fixed_flag_split(a);
  QPoly sum = s.identity;
  for (auto& t : s.transvection) sum += t;
  CHECK(sum == s.total);
}

TEST_CASE("sps reps") {
  auto st = sps_rep({1, 1});
  CHECK(st.dim == q);
  CHECK(st.char_at_T.is_zero());
  auto r21 = sps_rep({2, 1});
  CHECK(r21.dim == qp(2) + q);
  CHECK(r21.char_at_T == q);
  auto r111 = sps_rep({1, 1, 1});
  CHECK(r111.dim == qp(3));
  CHECK(r111.char_at_T.is_zero());
  CHECK(sps_rep({4}).dim == QPoly(1));
}

TEST_CASE("sps positivity and degree") {
  for (int n = 1; n <= 8; ++n)
    for (auto& d : partitions_of(n)) {
      auto r = sps_rep(d);
      int dl = 0;
      for (int i = 0; i < d.length(); ++i)
        for (int j = i + 1; j < d.length(); ++j) dl += d.part(i) * d.part(j);
      CHECK(leading(r.dim) == LeadingTerm{dl, 1});
      for (int qq : {2, 3, 5, 7}) CHECK(evaluate(r.dim, qq) >= 1);
    }
}

TEST_CASE("cr_sps") {
  auto r = cr_sps({2, 1}, 3);
  CHECK(r.lead.c == 1);
  CHECK(r.lead.exponent == 1);
  CHECK(r.exact == mpq_class(1, 4));
  CHECK(cr_sps({1, 1}, 5).exact == 0);
  for (int n = 3; n <= 7; ++n)
    for (int qq : {2, 3}) {
      Partition d({n - 1, 1});
      mpq_class want(evaluate(qp(n - 2) - 1, qq), evaluate(qp(n - 1) - 1, qq));
      want.canonicalize();
      CHECK(cr_sps(d, qq).exact == want);
    }
  // first branch: d_1 > d_2 and d_1 >= 2 gives c = 1
  for (int n = 2; n <= 8; ++n)
    for (auto& d : partitions_of(n)) {
      auto l = sps_leading(d);
      CHECK(l.tail_ok);
      if (d.first() >= 2 && d.first() > d.part(1)) CHECK(l.c == 1);
    }
}

TEST_CASE("induced relative order") {
  auto a = cr_induced_relative({2, 1}, {3});
  CHECK(a.order == RelOrder::StrictlySmaller);
  auto b = cr_induced_relative({1, 1}, {2});
  CHECK(b.order == RelOrder::SameOrder);
  CHECK(b.factor == 1);
  auto c = cr_induced_relative({2, 2}, {3, 1});
  CHECK(c.order == RelOrder::SameOrder);
  CHECK(c.factor == mpq_class(1, 2));
  CHECK_THROWS_AS(cr_induced_relative({3}, {2, 1}), Error);
  for (int n = 2; n <= 7; ++n)
    for (auto& d : partitions_of(n))
      for (auto& e : partitions_of(n)) {
        if (compare_dominance(e, d) != Dominance::StrictlyDominates) continue;
        auto r = cr_induced_relative(d, e);
        if (d.first() > d.part(1))
          CHECK(r.order == RelOrder::StrictlySmaller);
        else
          CHECK(r.order != RelOrder::Larger);
      }
}

TEST_CASE("fixed flag leading ratio") {
  for (int n = 2; n <= 9; ++n)
    for (auto& d : partitions_of(n)) {
      auto ff = leading(fixed_flags(d));
      auto di = leading(dim_induced(d));
      if (d.first() >= 2) {
        CHECK(di.degree - ff.degree == n - d.first());
        CHECK(ff.coefficient == d.first_multiplicity());
      } else {
        // complete flags: exact leading coefficient is n-1
        CHECK(di.degree - ff.degree == n - 1);
        CHECK(ff.coefficient == n - 1);
      }
    }
}

TEST_CASE("sps memo under concurrent readers") {
  std::vector<std::thread> ts;
  std::vector<QPoly> got(4);
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] { got[static_cast<size_t>(i)] = sps_rep({3, 2, 1}).dim; });
  for (auto& t : ts) t.join();
  for (auto& g : got) CHECK(g == got[0]);
}

TEST_CASE("sps csv") {
  auto csv = sps_csv(2);
  CHECK(csv.rfind("partition,d_L,dim,char_at_T,c,exponent\n", 0) == 0);
  CHECK(csv.find("\"[1,1]\",1,\"q\",\"0\",0,1") != std::string::npos);
}
