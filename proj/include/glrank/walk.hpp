#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "glrank/chartab.hpp"

namespace glrank {

// Probability distribution over group elements or over conjugacy classes
// (total mass per class). Exact mode fills mass, float mode fills fmass.
struct Distribution {
  bool over_classes = false;
  std::vector<mpq_class> mass;
  std::vector<double> fmass;

  bool exact() const { return !mass.empty(); }
  std::size_t size() const { return exact() ? mass.size() : fmass.size(); }
  double at(std::size_t i) const { return exact() ? mass[i].get_d() : fmass[i]; }
};

Distribution uniform(const GroupTable& g);
Distribution uniform_on_classes(const CharacterTable& ct);
// element indices of the conjugacy class of transvection(n)
std::vector<int> transvection_elements(const GroupTable& g);

// l-step walk from the identity, each step left-multiplying by a uniform
// element of cls
Distribution exact_convolution(const GroupTable& g, std::span<const int> cls, int l);
// all steps 0..max_l in one pass
std::vector<Distribution> exact_convolution_steps(const GroupTable& g, std::span<const int> cls,
                                                  int max_l);
Distribution float_convolution(const GroupTable& g, std::span<const int> cls, int l);
Distribution push_to_classes(const Distribution& d, const ConjugacyClasses& cc);

// class masses from the Fourier expansion over irreps; exact
Distribution fourier_distribution(const CharacterTable& ct, int l);

// half the L1 distance; both exact
mpq_class tv_distance(const Distribution& p, const Distribution& u);
double tv_distance_float(const Distribution& p, const Distribution& u);

mpq_class ds_upper_bound_exact(const CharacterTable& ct, int l);
double ds_upper_bound(const CharacterTable& ct, int l);
// max over nontrivial irreps of |chi(T)/dim|
mpq_class spectral_mixing_rate(const CharacterTable& ct);
// (1/(2 sqrt q)) q^-(l-n), n >= 3
double tvb_closed_form(int n, int q, int l);
// uniform mass of elements without eigenvalue 1
mpq_class fixed_point_free_mass(const CharacterTable& ct);

struct MixingStep {
  int l = 0;
  mpq_class tv;
  double tv_d = 0;
  double ds_sqrt = 0;
  double tvb = 0;    // 0 when n < 3
  double lower = 0;  // fixed-point-free mass for l < n, else 0
};

struct MixingReport {
  std::string group;
  int n = 0, q = 0;
  std::vector<MixingStep> steps;
  int mixing_time = -1;  // first l with tv < 1/4
  double fitted_rate = 0;  // sqrt(tv(L)/tv(L-2)) at the last step
  mpq_class spectral_rate;
};
MixingReport mixing_report(const CharacterTable& ct, int max_steps);
nlohmann::json to_json(const MixingReport& r);
std::string mixing_csv(const MixingReport& r);

// Philox4x32-10 counter-based generator.
class Philox4x32 {
 public:
  Philox4x32(std::uint64_t seed, std::uint64_t stream);
  std::uint32_t next();
  // uniform in [0, bound)
  std::uint32_t below(std::uint32_t bound);
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_, counter_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
};

struct McReport {
  int n = 0, q = 0, l = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> histogram;  // by fixed_space_dim, 0..n
};
// one generator stream per trial index, so results ignore the worker count
McReport mc_walk(int n, const FqField& f, int l, std::int64_t trials, std::uint64_t seed,
                 int workers = 1);
nlohmann::json to_json(const McReport& r);

}  // namespace glrank
