#include <doctest.h>

#include <cmath>
#include <map>

#include "glrank/error.hpp"
#include "glrank/walk.hpp"

using namespace glrank;

namespace {

struct Oracle {
  GroupPtr g;
  CharacterTable ct;
  std::vector<int> cls;
};

const Oracle& sl3(int q) {
  static std::map<int, Oracle> memo;
  auto it = memo.find(q);
  if (it == memo.end()) {
    auto g = std::make_shared<const GroupTable>(enumerate_group(GroupKind::SL, 3, FqField::make(q)));
    it = memo.emplace(q, Oracle{g, character_table(g), transvection_elements(*g)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("philox known answers") {
  auto z = Philox4x32::block({0, 0, 0, 0}, {0, 0});
  CHECK(z == std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  auto f = Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
  CHECK(f == std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
}

TEST_CASE("convolution basics") {
  const auto& o = sl3(2);
  CHECK(o.cls.size() == 21);
  auto steps = exact_convolution_steps(*o.g, o.cls, 2);
  // one step: uniform on the class
  for (int x : o.cls) CHECK(steps[1].mass[static_cast<size_t>(x)] == mpq_class(1, 21));
  // two steps never reach fixed-point-free elements
  for (int x = 0; x < o.g->size(); ++x)
    if (steps[2].mass[static_cast<size_t>(x)] > 0) CHECK(fixed_space_dim(o.g->field(), o.g->matrix(x)) >= 1);
  auto far = float_convolution(*o.g, o.cls, 40);
  for (double m : far.fmass) CHECK(m == doctest::Approx(1.0 / 168).epsilon(1e-9));
}

TEST_CASE("tv distance") {
  const auto& o = sl3(2);
  auto u = uniform(*o.g);
  CHECK(tv_distance(u, u) == 0);
  auto point = exact_convolution(*o.g, o.cls, 0);
  CHECK(tv_distance(point, u) == mpq_class(167, 168));
  CHECK_THROWS_AS(tv_distance(point, uniform_on_classes(o.ct)), Error);
}

TEST_CASE("fourier matches convolution") {
  for (int q : {2, 3}) {
    const auto& o = sl3(q);
    auto steps = exact_convolution_steps(*o.g, o.cls, 6);
    for (int l = 0; l <= 6; ++l) {
      auto pushed = push_to_classes(steps[static_cast<size_t>(l)], o.ct.cc);
      CHECK(pushed.mass == fourier_distribution(o.ct, l).mass);
    }
  }
}

TEST_CASE("bounds") {
  for (int q : {2, 3}) {
    const auto& o = sl3(q);
    auto u = uniform_on_classes(o.ct);
    mpq_class fpf = fixed_point_free_mass(o.ct);
    CHECK(fpf > 0);
    for (int l = 0; l <= 12; ++l) {
      double tv = tv_distance(fourier_distribution(o.ct, l), u).get_d();
      CHECK(tv <= std::sqrt(ds_upper_bound(o.ct, l)) + 1e-15);
      if (l < 3) CHECK(tv >= fpf.get_d());
    }
  }
  CHECK(tvb_closed_form(3, 3, 3) == doctest::Approx(1 / (2 * std::sqrt(3.0))));
  CHECK_THROWS_AS(tvb_closed_form(2, 3, 3), Error);
}

TEST_CASE("spectral rate") {
  // q = 3 reaches (q^2-1)/(q^3-1); q = 2 has no nontrivial det character,
  // so its largest nontrivial ratio is 1/3
  CHECK(spectral_mixing_rate(sl3(3).ct) == mpq_class(4, 13));
  CHECK(spectral_mixing_rate(sl3(2).ct) == mpq_class(1, 3));
  for (int q : {2, 3}) {
    auto r = mixing_report(sl3(q).ct, 30);
    CHECK(r.fitted_rate == doctest::Approx(r.spectral_rate.get_d()).epsilon(0.01));
    CHECK(r.mixing_time >= 1);
  }
}

TEST_CASE("monte carlo") {
  auto f3 = FqField::make(3);
  auto a = mc_walk(5, *f3, 3, 2000, 42);
  CHECK(a.histogram[0] + a.histogram[1] == 0);
  auto b = mc_walk(5, *f3, 3, 2000, 42, 3);
  CHECK(a.histogram == b.histogram);
  auto one = mc_walk(4, *FqField::make(2), 1, 200, 7);
  CHECK(one.histogram[3] == 200);
  auto six = mc_walk(7, *f3, 6, 500, 1);
  CHECK(six.histogram[0] == 0);
  auto seven = mc_walk(7, *f3, 7, 3000, 1);
  CHECK(seven.histogram[0] > 0);
}
