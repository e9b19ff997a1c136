#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "glrank/chartab.hpp"
#include "glrank/error.hpp"
#include "glrank/pcf.hpp"
#include "glrank/sps.hpp"

using namespace glrank;

namespace {

GroupPtr group(GroupKind kind, int n, int q) {
  if (kind == GroupKind::Sym) return std::make_shared<const GroupTable>(symmetric_group(n));
  return std::make_shared<const GroupTable>(enumerate_group(kind, n, FqField::make(q)));
}

std::vector<std::int64_t> sorted_dims(const CharacterTable& ct) {
  auto d = ct.dims;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(105) == 48);
  // 1 + z + z^2 = 0 for a primitive cube root
  auto r = reduce_mod_phi(std::vector<mpz_class>{1, 1, 1}, 3);
  CHECK(r == std::vector<mpz_class>{0, 0});
}

TEST_CASE("small tables") {
  auto t1 = character_table(group(GroupKind::GL, 1, 2));
  CHECK(t1.dims == std::vector<std::int64_t>{1});

  auto sl23 = character_table(group(GroupKind::SL, 2, 3));
  CHECK(sorted_dims(sl23) == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  auto o = check_orthogonality(sl23);
  CHECK(o.rows);
  CHECK(o.columns);

  auto gl32 = character_table(group(GroupKind::GL, 3, 2));
  CHECK(sorted_dims(gl32) == std::vector<std::int64_t>{1, 3, 3, 6, 7, 8});
  CHECK(check_orthogonality(gl32).rows);
  // values at the transvection class
  int t = gl32.transvection_class();
  std::map<std::int64_t, std::vector<long>> at_t;
  for (int i = 0; i < gl32.num_irreps(); ++i)
    at_t[gl32.dims[static_cast<size_t>(i)]].push_back(gl32.integer_value(i, t).get_si());
  CHECK(at_t[3] == std::vector<long>{-1, -1});
  CHECK(at_t[6] == std::vector<long>{2});
  CHECK(at_t[7] == std::vector<long>{-1});
  CHECK(at_t[8] == std::vector<long>{0});
  // dim-3 irreps have irrational values on elements of order 7
  bool irrational = false;
  for (int k = 0; k < gl32.num_classes(); ++k) irrational = irrational || !gl32.is_rational(1, k);
  CHECK(irrational);
}

TEST_CASE("complex values agree with exact ones") {
  auto ct = character_table(group(GroupKind::SL, 2, 3));
  for (int i = 0; i < ct.num_irreps(); ++i)
    for (int k = 0; k < ct.num_classes(); ++k) {
      auto z = ct.complex_value(i, k);
      if (ct.is_rational(i, k)) {
        CHECK(z.real() == doctest::Approx(ct.integer_value(i, k).get_d()));
        CHECK(z.imag() == doctest::Approx(0.0));
      }
    }
  CHECK(std::abs(ct.complex_value(0, 0) - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("GL2 rank partition") {
  for (int q : {3, 5}) {
    auto ct = character_table(group(GroupKind::GL, 2, q));
    CHECK(check_orthogonality(ct).rows);
    for (auto& row : rank_report(ct)) {
      int want = row.dim == 1 ? 0 : row.dim == q - 1 ? 2 : 1;
      CHECK(row.rank == want);
      CHECK(row.strict_rank == row.rank_via_Hk);
      CHECK(row.rank == row.rank_via_Hk_eigen);
      CHECK(row.rank <= row.strict_rank);
    }
  }
}

TEST_CASE("GL3(F2) cuspidal ratio") {
  auto ct = character_table(group(GroupKind::GL, 3, 2));
  for (auto& row : rank_report(ct)) {
    if (row.dim != 3) continue;
    CHECK(row.rank == 3);
    CHECK(mpq_class(row.char_at_T, row.dim) == mpq_class(-1, 3));
  }
  auto f = filtration_check(ct);
  CHECK(f.complete);
  CHECK(f.strict);
  CHECK(f.stage_sizes.back() == 6);
}

TEST_CASE("filtration") {
  auto ct = character_table(group(GroupKind::GL, 2, 3));
  auto f = filtration_check(ct);
  CHECK(f.strict);
  CHECK(f.complete);
  CHECK(f.stage_sizes.size() == 2);
  CHECK(f.stage_sizes.back() == 8);
  auto one = filtration_check(character_table(group(GroupKind::GL, 1, 5)));
  CHECK(one.stage_sizes == std::vector<int>{4});
  CHECK(one.complete);
}

TEST_CASE("omega character") {
  auto f = FqField::make(3);
  CHECK(omega_tensor_character(*f, identity_matrix(3), 1) == 27);
  CHECK(omega_tensor_character(*f, transvection(3, *f), 1) == 9);
  CHECK(omega_tensor_character(*f, transvection(3, *f), 0) == 1);
}

TEST_CASE("restriction GL2(F3) to SL2(F3)") {
  auto gl = character_table(group(GroupKind::GL, 2, 3));
  auto sl = character_table(group(GroupKind::SL, 2, 3));
  auto r = restrict_to_sl(gl, sl);
  CHECK(r.ok());
  // one principal series (dim q+1) and one cuspidal (dim q-1) are fixed by
  // the sign twist; they split into pieces of dims (q+1)/2 and (q-1)/2
  std::multiset<std::int64_t> split_dims;
  int split = 0;
  for (auto& row : r.rows) {
    if (row.constituents.size() < 2) continue;
    ++split;
    CHECK(row.constituents.size() == 2);
    for (int s : row.constituents) split_dims.insert(sl.dims[static_cast<size_t>(s)]);
  }
  CHECK(split == 2);
  CHECK(split_dims == std::multiset<std::int64_t>{1, 1, 2, 2});
  auto gl32 = character_table(group(GroupKind::GL, 3, 2));
  auto sl32 = character_table(group(GroupKind::SL, 3, 2));
  auto same = restrict_to_sl(gl32, sl32);
  CHECK(same.ok());
  CHECK(same.reducible_fraction == 0);
}

TEST_CASE("symmetric groups") {
  for (int n = 1; n <= 6; ++n) {
    auto ct = character_table(group(GroupKind::Sym, n, 2));
    CHECK(static_cast<size_t>(ct.num_irreps()) == partitions_of(n).size());
    CHECK(check_orthogonality(ct).rows);
    auto labels = label_symmetric_irreps(ct);
    // Young characters decompose by Kostka numbers
    for (auto& d : partitions_of(n)) {
      auto y = young_character(ct, d);
      for (int i = 0; i < ct.num_irreps(); ++i)
        CHECK(multiplicity(ct, i, y) == kostka(labels[static_cast<size_t>(i)], d));
    }
    for (int i = 0; i < ct.num_irreps(); ++i)
      CHECK(ct.dims[static_cast<size_t>(i)] ==
            kostka(labels[static_cast<size_t>(i)], Partition(std::vector<int>(static_cast<size_t>(n), 1))));
  }
  CHECK_THROWS_AS(rank_report(character_table(group(GroupKind::Sym, 3, 2))), Error);
}

TEST_CASE("sps constituents of flag modules") {
  // the new constituent of I_D, absent from every I_D' with D' above D
  for (int q : {2, 3})
    for (int n = 2; n <= 3; ++n) {
      auto g = group(GroupKind::GL, n, q);
      auto ct = character_table(g);
      SubspaceLattice lat(g->field_ptr(), n);
      std::map<std::string, std::vector<mpz_class>> mods;
      for (auto& d : partitions_of(n)) {
        std::vector<mpz_class> chi;
        for (int k = 0; k < ct.num_classes(); ++k) {
          auto m = g->matrix(ct.cc.rep(k));
          chi.push_back(lat.count_flags(d.vec(), &m));
        }
        mods[d.str()] = chi;
      }
      int t = ct.transvection_class();
      for (auto& d : partitions_of(n)) {
        std::vector<int> fresh;
        for (int i = 0; i < ct.num_irreps(); ++i) {
          if (multiplicity(ct, i, mods[d.str()]) == 0) continue;
          bool above = false;
          for (auto& e : partitions_of(n))
            if (e != d && dominates_or_equal(e, d) && multiplicity(ct, i, mods[e.str()]) > 0)
              above = true;
          if (!above) fresh.push_back(i);
        }
        REQUIRE(fresh.size() == 1);
        auto rep = sps_rep(d);
        CHECK(evaluate(rep.dim, q) == ct.dims[static_cast<size_t>(fresh[0])]);
        CHECK(evaluate(rep.char_at_T, q) == ct.integer_value(fresh[0], t));
      }
    }
}

TEST_CASE("pcf model matches the oracle") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 2}}) {
    auto ct = character_table(group(GroupKind::GL, n, q));
    std::multiset<std::tuple<long, long, int>> oracle, model;
    for (auto& row : rank_report(ct))
      oracle.insert({row.dim, row.char_at_T.get_si(), row.rank});
    for (auto& r : enumerate_gl_irreps(n, q)) {
      auto at = evaluate_at_T(r);
      model.insert({evaluate(at.dim, q).get_si(), evaluate(at.chi, q).get_si(), tensor_rank(r)});
    }
    CHECK(oracle == model);
  }
}

TEST_CASE("cache round trip") {
  auto ct = character_table(group(GroupKind::SL, 2, 3));
  auto bytes = serialize(ct);
  auto back = deserialize_table(bytes, ct.group);
  CHECK(back.dims == ct.dims);
  CHECK(back.values == ct.values);
  CHECK(serialize(back) == bytes);
  bytes[20] ^= 4;
  CHECK_THROWS_AS(deserialize_table(bytes, ct.group), Error);
  auto other = group(GroupKind::GL, 2, 3);
  CHECK_THROWS_AS(deserialize_table(serialize(ct), other), Error);
  auto j = to_json(ct);
  CHECK(j["dims"].size() == 7);
  CHECK(table_csv(ct).find("irrep,dim") == 0);
}

TEST_CASE("class cap") {
  try {
    character_table(group(GroupKind::GL, 2, 3), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
