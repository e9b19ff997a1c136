#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glrank/error.hpp"
#include "glrank/matgroup.hpp"
#include "glrank/qpoly.hpp"
#include "glrank/sps.hpp"

using namespace glrank;

TEST_CASE("field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    auto f = FqField::make(q);
    CHECK(f->q() == q);
    for (int a = 0; a < q; ++a) {
      auto x = static_cast<std::uint8_t>(a);
      CHECK(f->add(x, 0) == x);
      CHECK(f->mul(x, 1) == x);
      CHECK(f->add(x, f->neg(x)) == 0);
      if (a) CHECK(f->mul(x, f->inv(x)) == 1);
      for (int b = 0; b < q; ++b) {
        auto y = static_cast<std::uint8_t>(b);
        CHECK(f->add(x, y) == f->add(y, x));
        CHECK(f->mul(x, y) == f->mul(y, x));
        for (int c = 0; c < q; c += 3) {
          auto z = static_cast<std::uint8_t>(c);
          CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
          CHECK(f->mul(x, f->mul(y, z)) == f->mul(f->mul(x, y), z));
        }
      }
    }
    // primitive element generates the units
    std::set<int> seen;
    for (int k = 0; k < q - 1; ++k) seen.insert(f->exp(k));
    CHECK(seen.size() == static_cast<size_t>(q - 1));
  }
  CHECK_THROWS_AS(FqField::make(6), Error);
  CHECK_THROWS_AS(FqField::make(128), Error);
  CHECK_THROWS_AS(FqField(2, 2, {1, 0, 1}), Error);  // x^2+1 = (x+1)^2
}

TEST_CASE("group orders") {
  auto f2 = FqField::make(2), f3 = FqField::make(3);
  CHECK(enumerate_group(GroupKind::GL, 2, f3).size() == 48);
  CHECK(enumerate_group(GroupKind::SL, 2, f3).size() == 24);
  CHECK(enumerate_group(GroupKind::GL, 3, f2).size() == 168);
  CHECK(enumerate_group(GroupKind::SL, 3, f3).size() == 5616);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(enumerate_group(GroupKind::GL, 1, f2).size() == 1);
  try {
    enumerate_group(GroupKind::GL, 4, f3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("closure and inverses") {
  auto g = enumerate_group(GroupKind::GL, 3, FqField::make(2));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    int a = pick(rng), b = pick(rng);
    int ab = g.mul(a, b);
    CHECK(ab >= 0);
    CHECK(g.mul(ab, g.inv(b)) == a);
  }
  for (int a = 0; a < g.size(); ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
  // generated by the chosen generators
  CHECK(!generators(g).empty());
}

TEST_CASE("transvection counts") {
  // (q^n - 1)(q^{n-1} - 1)/(q - 1)
  CHECK(enumerate_transvections(2, *FqField::make(3)).size() == 8);
  CHECK(enumerate_transvections(3, *FqField::make(2)).size() == 21);
  auto f = FqField::make(4);
  for (auto& t : enumerate_transvections(2, *f)) {
    CHECK(determinant(*f, t) == 1);
    CHECK(fixed_space_dim(*f, t) == 1);
  }
}

TEST_CASE("conjugacy classes") {
  auto g = enumerate_group(GroupKind::GL, 3, FqField::make(2));
  auto cc = conjugacy_classes(g);
  CHECK(cc.count() == 6);
  CHECK(cc.members[0] == std::vector<int>{g.identity()});
  int total = 0;
  for (int c = 0; c < cc.count(); ++c) total += cc.size(c);
  CHECK(total == 168);
  auto s = symmetric_group(5);
  CHECK(conjugacy_classes(s).count() == 7);
  CHECK(conjugacy_class_of(s.identity(), s).size() == 1);
}

TEST_CASE("subspace counts match gauss binomials") {
  for (int q : {2, 3, 4, 5})
    for (int n = 0; n <= 5; ++n) {
      if (q >= 4 && n > 4) continue;
      auto f = FqField::make(q);
      for (int k = 0; k <= n; ++k) {
        auto subs = enumerate_subspaces(*f, n, k, false);
        CHECK(mpz_class(static_cast<unsigned long>(subs.size())) ==
              evaluate(gauss_binomial(n, k), q));
      }
    }
}

TEST_CASE("fixed flags match brute force") {
  for (int q : {2, 3}) {
    auto f = FqField::make(q);
    for (int n = 2; n <= 4; ++n) {
      SubspaceLattice lat(f, n);
      auto t = transvection(n, *f);
      for (auto& d : partitions_of(n)) {
        // try each block order that appears in induction data
        std::vector<int> blocks = d.vec();
        do {
          auto split = fixed_flag_split(blocks);
          std::int64_t total = lat.count_flags(blocks, &t);
          CHECK(mpz_class(total) == evaluate(split.total, q));
          // classify stable flags by the quotient on which T is nontrivial
          std::vector<std::int64_t> tv(blocks.size(), 0);
          std::int64_t ident = 0;
          std::vector<int> dims;
          std::vector<int> owner;
          int a = 0;
          for (size_t j = 0; j < blocks.size(); ++j) {
            a += blocks[j];
            if (blocks[j] > 0 && a < n) {
              dims.push_back(a);
              owner.push_back(static_cast<int>(j));
            }
          }
          for (auto& fl : lat.flags(blocks)) {
            bool ok = true;
            for (size_t l = 0; l < fl.size(); ++l)
              ok = ok && lat.stable(lat.of_dim(dims[l])[static_cast<size_t>(fl[l])], t);
            if (!ok) continue;
            // T - I has image e_0 and kills all but e_1
            int hit = -1;
            for (size_t l = 0; l <= fl.size(); ++l) {
              bool moved = false, has_image = false;
              if (l < fl.size()) {
                auto& s = lat.of_dim(dims[l])[static_cast<size_t>(fl[l])];
                for (auto& b : s.basis) moved = moved || b[1] != 0;
              } else {
                moved = true;
              }
              if (!moved) continue;
              if (l > 0) {
                auto& prev = lat.of_dim(dims[l - 1])[static_cast<size_t>(fl[l - 1])];
                std::vector<std::uint8_t> e0(static_cast<size_t>(n), 0);
                e0[0] = 1;
                has_image = std::binary_search(prev.members.begin(), prev.members.end(),
                                               vector_code(*f, e0));
              }
              if (!has_image) {
                // last nonzero block before or at this level
                size_t j = l < fl.size() ? static_cast<size_t>(owner[l]) : blocks.size() - 1;
                while (blocks[j] == 0) --j;
                hit = static_cast<int>(j);
              }
              break;
            }
            if (hit < 0)
              ++ident;
            else
              ++tv[static_cast<size_t>(hit)];
          }
          CHECK(mpz_class(ident) == evaluate(split.identity, q));
          for (size_t j = 0; j < blocks.size(); ++j)
            CHECK(mpz_class(tv[j]) == evaluate(split.transvection[j], q));
        } while (std::prev_permutation(blocks.begin(), blocks.end()));
      }
    }
  }
}

TEST_CASE("eigenvalue-one mass") {
  // Burnside: SL_n is transitive on nonzero vectors, so sum of |Fix| = 2|G|
  for (int q : {2, 3}) {
    auto f = FqField::make(q);
    auto g = enumerate_group(GroupKind::SL, 3, f);
    mpz_class s = 0;
    for (int i = 0; i < g.size(); ++i) {
      mpz_class fix;
      mpz_ui_pow_ui(fix.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(fixed_space_dim(*f, g.matrix(i))));
      s += fix;
    }
    CHECK(s == 2 * g.size());
  }
}

TEST_CASE("serialization round trip") {
  auto g = enumerate_group(GroupKind::SL, 2, FqField::make(4));
  auto bytes = serialize(g);
  auto h = deserialize_group(bytes);
  CHECK(h.size() == g.size());
  CHECK(std::equal(h.codes().begin(), h.codes().end(), g.codes().begin()));
  CHECK(h.name() == "SL_2(F_4)");
  bytes[bytes.size() / 2] ^= 1;
  CHECK_THROWS_AS(deserialize_group(bytes), Error);
}
