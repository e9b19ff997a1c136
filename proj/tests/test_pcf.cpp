#include <doctest.h>

#include <set>

#include "glrank/error.hpp"
#include "glrank/pcf.hpp"
#include "glrank/sps.hpp"

using namespace glrank;

namespace {
const QPoly q = QPoly::q();
QPoly qp(int d) { return QPoly::monomial(d); }

PcfIrrep sps(int n, Partition d) {
  PcfIrrep r;
  r.n = n;
  r.trivial_shape = std::move(d);
  return r;
}

PcfIrrep character(int chi) {
  PcfIrrep r;
  r.n = 1;
  r.split.push_back({chi, {1}});
  return r;
}

PcfIrrep cuspidal(int n, std::string label = "a") {
  PcfIrrep r;
  r.n = n;
  r.unsplit.push_back({{n, std::move(label)}, 1, {1}});
  return r;
}
}  // namespace

TEST_CASE("json round trip and validation") {
  auto j = nlohmann::json::parse(
      R"({"n":5,"unsplit":[{"size":2,"label":"x","mult":1,"shape":[1]}],
          "split":[{"chi":1,"shape":[1]}],"trivial_shape":[2]})");
  auto r = pcf_from_json(j);
  CHECK(r.blocks() == std::vector<int>{2, 1, 2});
  CHECK(pcf_from_json(to_json(r)) == r);
  auto bad = j;
  bad["n"] = 6;
  CHECK_THROWS_AS(pcf_from_json(bad), Error);
  bad = j;
  bad["split"][0]["chi"] = 0;
  CHECK_THROWS_AS(pcf_from_json(bad), Error);
  bad = j;
  bad["unsplit"][0]["size"] = 1;
  bad["n"] = 4;
  CHECK_THROWS_AS(pcf_from_json(bad), Error);
}

TEST_CASE("co-ranks") {
  CHECK(strict_tensor_corank(sps(5, {3, 2})) == 3);
  CHECK(tensor_corank(cuspidal(4)) == 0);
  CHECK(tensor_rank(cuspidal(4)) == 4);
  CHECK(tensor_rank(sps(2, {1, 1})) == 1);
  auto c = character(1);
  CHECK(tensor_rank(c) == 0);
  CHECK(strict_tensor_rank(c) == 1);
}

TEST_CASE("eta") {
  auto e = eta(sps(1, {1}), 3);
  CHECK(e.trivial_shape == Partition{2, 1});
  CHECK(dim(e) == qp(2) + q);
  CHECK(eta(sps(2, {1, 1}), 4).trivial_shape == Partition{2, 1, 1});
  CHECK(eta(sps(0, {}), 5).trivial_shape == Partition{5});
  // strict rank 0 < 2*2-3
  try {
    eta(sps(2, {2}), 3);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NoRankKConstituent);
  }
}

TEST_CASE("decompose induced") {
  auto d = decompose_induced(sps(1, {1}), 3);
  REQUIRE(d.size() == 2);
  CHECK(d[0].trivial_shape == Partition{3});
  CHECK(d[1].trivial_shape == Partition{2, 1});
  auto same = decompose_induced(cuspidal(3), 3);
  CHECK(same == std::vector<PcfIrrep>{cuspidal(3)});
  auto c2 = decompose_induced(cuspidal(2), 3);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == eta(cuspidal(2), 3));
  CHECK(c2[0].trivial_shape == Partition{1});
}

TEST_CASE("dims") {
  CHECK(dim(cuspidal(2)) == q - 1);
  CHECK(evaluate(dim(cuspidal(2)), 3) == 2);
  CHECK(evaluate(dim(cuspidal(3)), 2) == 3);
  CHECK(leading(dim(cuspidal(6))).degree == 15);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<int> parts{n - k};
      parts.insert(parts.end(), static_cast<size_t>(k), 1);
      CHECK(leading(dim(sps(n, Partition(parts)))).degree ==
            k * (n - k) + k * (k - 1) / 2);
    }
  // isobaric lambda = 2: constituent E occurs f^E times in the induced rep
  for (int l = 1; l <= 4; ++l) {
    PcfIrrep a;
    a.n = 2 * l;
    a.unsplit.push_back({{2, "a"}, l, {l}});
    CHECK(leading(dim(a)).degree == l * l);
    QPoly total;
    for (auto& e : partitions_of(l)) {
      a.unsplit[0].shape = e;
      total += QPoly(kostka(e, Partition(std::vector<int>(static_cast<size_t>(l), 1)))) * dim(a);
    }
    QPoly induced = q_multinomial(std::vector<int>(static_cast<size_t>(l), 2));
    for (int i = 0; i < l; ++i) induced *= q - 1;
    CHECK(total == induced);
  }
}

TEST_CASE("ratios at T") {
  for (int n = 2; n <= 7; ++n) {
    auto c = cr_at_T(cuspidal(n));
    CHECK(c.chi * (qp(n - 1) - 1) == -c.dim);
    CHECK(c.c == -1);
    CHECK(c.exponent == n - 1);
    // omega_lambda: eta of a nontrivial character
    auto w = cr_at_T(eta(character(1), n));
    CHECK(w.dim * (q - 1) == qp(n) - 1);
    CHECK(w.chi * (qp(n) - 1) == w.dim * (qp(n - 1) - 1));
    auto o = cr_at_T(eta(sps(1, {1}), n));
    CHECK(o.dim * (q - 1) == qp(n) - q);
  }
  auto r = cr_at_T(sps(5, {3, 2}));
  CHECK(r.exponent == 2);
  CHECK(r.c == 1);
  CHECK_THROWS_AS(cr_at_T(sps(1, {1})), Error);
}

TEST_CASE("multi-entry unsplit part keeps the rank-n ratio") {
  PcfIrrep r;
  r.n = 7;
  r.unsplit.push_back({{2, "a"}, 1, {1}});
  r.unsplit.push_back({{2, "b"}, 1, {1}});
  r.unsplit.push_back({{3, "c"}, 1, {1}});
  auto c = cr_at_T(r);
  CHECK(c.chi * (qp(6) - 1) == -c.dim);
}

TEST_CASE("dim bounds") {
  auto b = dim_bounds(4, 2);
  CHECK(b.upper.degree == 5);
  CHECK(b.upper_witness->trivial_shape == Partition{2, 1, 1});
  CHECK(b.lower.degree == 4);
  CHECK(b.lower_witness->trivial_shape == Partition{2, 2});
  CHECK(dim_bounds(5, 0).upper.degree == 0);
  CHECK(dim_bounds(6, 6).lower.degree == 9);
  CHECK(!dim_bounds(1, 1).exists);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto bb = dim_bounds(n, k);
      if (!bb.exists) continue;
      CHECK(leading(dim(*bb.upper_witness)).degree == bb.upper.degree);
      CHECK(leading(dim(*bb.lower_witness)).degree == bb.lower.degree);
      CHECK(tensor_rank(*bb.upper_witness) == k);
      CHECK(tensor_rank(*bb.lower_witness) == k);
    }
}

TEST_CASE("count leading") {
  CHECK(count_leading(5, 2, false).text == "q^3");
  CHECK(count_leading(5, 2, true).text == "q^2");
  auto c = count_leading(3, 3, false);
  CHECK(c.symbolic);
  CHECK(c.text == "c_3*q^3");
  CHECK(count_leading(3, 2, true).text == "c_2*q^2");
  CHECK_THROWS_AS(count_leading(2, 1, true), Error);
  // GL_1: q-1 characters, all of rank 0
  CHECK(count_leading(1, 0, false).text == "q");
  CHECK(count_leading(1, 1, false).text == "0");
}

TEST_CASE("sl transfer") {
  auto a = sl_character_ratio_transfer(cuspidal(3));
  CHECK(a.chi * (qp(2) - 1) == -a.dim);
  CHECK_THROWS_AS(sl_character_ratio_transfer(cuspidal(2)), Error);
}

TEST_CASE("enumeration counts match class numbers") {
  // class numbers of GL_n(F_q): q-1, q^2-1, q^3-q
  for (int qq : {2, 3, 4, 5}) {
    CHECK(enumerate_gl_irreps(1, qq).size() == static_cast<size_t>(qq - 1));
    CHECK(enumerate_gl_irreps(2, qq).size() == static_cast<size_t>(qq * qq - 1));
    CHECK(enumerate_gl_irreps(3, qq).size() ==
          static_cast<size_t>(qq * qq * qq - qq));
  }
  // sum of squared dims is the group order
  for (int qq : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      mpz_class s = 0;
      for (auto& r : enumerate_gl_irreps(n, qq)) {
        mpz_class d = evaluate(dim(r), qq);
        s += d * d;
      }
      CHECK(s == evaluate(gl_order(n), qq));
    }
  }
  CHECK(cuspidal_count(2, 3) == 3);
  CHECK(cuspidal_count(3, 2) == 2);
}

TEST_CASE("type enumeration") {
  std::set<std::string> keys;
  for (auto& r : enumerate_types(6)) CHECK(keys.insert(r.key()).second);
  CHECK(enumerate_types(1).size() == 2);  // trivial and one twist
}
