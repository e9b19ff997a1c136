#include "glrank/walk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "glrank/error.hpp"

namespace glrank {

Distribution uniform(const GroupTable& g) {
  Distribution d;
  d.mass.assign(static_cast<size_t>(g.size()), mpq_class(1, static_cast<unsigned long>(g.size())));
  return d;
}

Distribution uniform_on_classes(const CharacterTable& ct) {
  Distribution d;
  d.over_classes = true;
  for (auto& c : ct.classes)
    d.mass.push_back(mpq_class(static_cast<long>(c.size), static_cast<unsigned long>(ct.order())));
  for (auto& m : d.mass) m.canonicalize();
  return d;
}

std::vector<int> transvection_elements(const GroupTable& g) {
  require(g.kind() != GroupKind::Sym && g.n() >= 2, "transvections need GL/SL with n >= 2");
  int t = g.find(transvection(g.n(), g.field()));
  require(t >= 0, "transvection missing from the table");
  return conjugacy_class_of(t, g);
}

namespace {

// left[c][x] = cls[c] * x
std::vector<std::vector<int>> left_table(const GroupTable& g, std::span<const int> cls) {
  std::vector<std::vector<int>> t;
  for (int c : cls) {
    std::vector<int> row(static_cast<size_t>(g.size()));
    for (int x = 0; x < g.size(); ++x) row[static_cast<size_t>(x)] = g.mul(c, x);
    t.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::vector<Distribution> exact_convolution_steps(const GroupTable& g, std::span<const int> cls,
                                                  int max_l) {
  require(max_l >= 0, "step count must be >= 0");
  require(!cls.empty(), "empty step class");
  auto left = left_table(g, cls);
  std::vector<mpz_class> counts(static_cast<size_t>(g.size()), 0);
  counts[static_cast<size_t>(g.identity())] = 1;
  mpz_class denom = 1;
  std::vector<Distribution> out;
  for (int l = 0;; ++l) {
    Distribution d;
    d.mass.reserve(counts.size());
    mpz_class total = 0;
    for (auto& c : counts) {
      d.mass.push_back(mpq_class(c, denom));
      d.mass.back().canonicalize();
      total += c;
    }
    if (total != denom) fail(ErrorKind::Internal, "convolution lost mass");
    out.push_back(std::move(d));
    if (l == max_l) break;
    std::vector<mpz_class> next(counts.size(), 0);
    for (size_t x = 0; x < counts.size(); ++x) {
      if (counts[x] == 0) continue;
      for (auto& row : left) next[static_cast<size_t>(row[x])] += counts[x];
    }
    counts = std::move(next);
    denom *= static_cast<unsigned long>(cls.size());
  }
  return out;
}

Distribution exact_convolution(const GroupTable& g, std::span<const int> cls, int l) {
  return std::move(exact_convolution_steps(g, cls, l).back());
}

Distribution float_convolution(const GroupTable& g, std::span<const int> cls, int l) {
  require(l >= 0, "step count must be >= 0");
  auto left = left_table(g, cls);
  std::vector<double> p(static_cast<size_t>(g.size()), 0.0);
  p[static_cast<size_t>(g.identity())] = 1;
  double w = 1.0 / static_cast<double>(cls.size());
  for (int s = 0; s < l; ++s) {
    std::vector<double> next(p.size(), 0.0);
    for (size_t x = 0; x < p.size(); ++x) {
      if (p[x] == 0) continue;
      for (auto& row : left) next[static_cast<size_t>(row[x])] += p[x] * w;
    }
    p = std::move(next);
  }
  Distribution d;
  d.fmass = std::move(p);
  return d;
}

Distribution push_to_classes(const Distribution& d, const ConjugacyClasses& cc) {
  require(!d.over_classes && d.size() == cc.class_of.size(), "distribution is not over elements");
  Distribution out;
  out.over_classes = true;
  if (d.exact()) {
    out.mass.assign(static_cast<size_t>(cc.count()), 0);
    for (size_t x = 0; x < d.mass.size(); ++x) out.mass[static_cast<size_t>(cc.class_of[x])] += d.mass[x];
  } else {
    out.fmass.assign(static_cast<size_t>(cc.count()), 0.0);
    for (size_t x = 0; x < d.fmass.size(); ++x) out.fmass[static_cast<size_t>(cc.class_of[x])] += d.fmass[x];
  }
  return out;
}

Distribution fourier_distribution(const CharacterTable& ct, int l) {
  require(l >= 0, "step count must be >= 0");
  int t = ct.transvection_class();
  int e = ct.e;
  std::vector<mpq_class> weight;  // dim * (chi(T)/dim)^l / |G|
  for (int i = 0; i < ct.num_irreps(); ++i) {
    mpq_class ratio(ct.integer_value(i, t), ct.dims[static_cast<size_t>(i)]);
    ratio.canonicalize();
    mpq_class w = static_cast<long>(ct.dims[static_cast<size_t>(i)]);
    for (int s = 0; s < l; ++s) w *= ratio;
    weight.push_back(w / static_cast<long>(ct.order()));
  }
  Distribution d;
  d.over_classes = true;
  for (int k = 0; k < ct.num_classes(); ++k) {
    std::vector<mpq_class> acc(static_cast<size_t>(e), 0);
    for (int i = 0; i < ct.num_irreps(); ++i) {
      if (weight[static_cast<size_t>(i)] == 0) continue;
      for (auto [x, m] : ct.value(i, k))
        acc[static_cast<size_t>((e - x) % e)] += weight[static_cast<size_t>(i)] * static_cast<long>(m);
    }
    auto red = reduce_mod_phi(std::move(acc), e);
    for (size_t s = 1; s < red.size(); ++s)
      if (red[s] != 0) fail(ErrorKind::Internal, "Fourier mass is not rational");
    mpq_class m = red.empty() ? mpq_class(0) : red[0];
    m *= static_cast<long>(ct.classes[static_cast<size_t>(k)].size);
    d.mass.push_back(m);
  }
  return d;
}

mpq_class tv_distance(const Distribution& p, const Distribution& u) {
  if (p.over_classes != u.over_classes || p.size() != u.size() || !p.exact() || !u.exact())
    fail(ErrorKind::InvalidInput, "tv_distance needs exact distributions on the same support");
  mpq_class s = 0;
  for (size_t i = 0; i < p.mass.size(); ++i) s += abs(p.mass[i] - u.mass[i]);
  return s / 2;
}

double tv_distance_float(const Distribution& p, const Distribution& u) {
  if (p.over_classes != u.over_classes || p.size() != u.size())
    fail(ErrorKind::InvalidInput, "tv_distance needs distributions on the same support");
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += std::abs(p.at(i) - u.at(i));
  return s / 2;
}

mpq_class ds_upper_bound_exact(const CharacterTable& ct, int l) {
  int t = ct.transvection_class();
  mpq_class s = 0;
  for (int i = 1; i < ct.num_irreps(); ++i) {
    mpz_class d = static_cast<long>(ct.dims[static_cast<size_t>(i)]);
    mpq_class r(ct.integer_value(i, t) * ct.integer_value(i, t), d * d);
    r.canonicalize();
    mpq_class term = d * d;
    for (int s2 = 0; s2 < l; ++s2) term *= r;
    s += term;
  }
  return s / 4;
}

double ds_upper_bound(const CharacterTable& ct, int l) { return ds_upper_bound_exact(ct, l).get_d(); }

mpq_class spectral_mixing_rate(const CharacterTable& ct) {
  int t = ct.transvection_class();
  mpq_class best = 0;
  // irrep 0 is the trivial one
  for (int i = 1; i < ct.num_irreps(); ++i) {
    mpq_class r(abs(ct.integer_value(i, t)), ct.dims[static_cast<size_t>(i)]);
    r.canonicalize();
    best = std::max(best, r);
  }
  return best;
}

double tvb_closed_form(int n, int q, int l) {
  require(n >= 3, "closed-form bound needs n >= 3");
  require(q >= 2, "q must be >= 2");
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(q))) * std::pow(static_cast<double>(q), -(l - n));
}

mpq_class fixed_point_free_mass(const CharacterTable& ct) {
  mpq_class s = 0;
  for (auto& c : ct.classes)
    if (c.fixdim == 0) s += static_cast<long>(c.size);
  return s / static_cast<long>(ct.order());
}

MixingReport mixing_report(const CharacterTable& ct, int max_steps) {
  require(max_steps >= 0, "step count must be >= 0");
  const auto& g = *ct.group;
  MixingReport r;
  r.group = g.name();
  r.n = g.n();
  r.q = g.field().q();
  r.spectral_rate = spectral_mixing_rate(ct);
  auto u = uniform_on_classes(ct);
  mpq_class fpf = fixed_point_free_mass(ct);
  for (int l = 0; l <= max_steps; ++l) {
    MixingStep s;
    s.l = l;
    s.tv = tv_distance(fourier_distribution(ct, l), u);
    s.tv_d = s.tv.get_d();
    s.ds_sqrt = std::sqrt(ds_upper_bound(ct, l));
    s.tvb = r.n >= 3 ? tvb_closed_form(r.n, r.q, l) : 0;
    s.lower = l < r.n ? fpf.get_d() : 0;
    if (r.mixing_time < 0 && s.tv < mpq_class(1, 4)) r.mixing_time = l;
    r.steps.push_back(std::move(s));
  }
  if (max_steps >= 2 && r.steps[static_cast<size_t>(max_steps - 2)].tv != 0) {
    mpq_class ratio = r.steps.back().tv / r.steps[static_cast<size_t>(max_steps - 2)].tv;
    r.fitted_rate = std::sqrt(ratio.get_d());
  }
  return r;
}

nlohmann::json to_json(const MixingReport& r) {
  nlohmann::json j;
  j["group"] = r.group;
  j["n"] = r.n;
  j["q"] = r.q;
  j["mixing_time"] = r.mixing_time;
  j["fitted_rate"] = r.fitted_rate;
  j["spectral_rate"] = r.spectral_rate.get_str();
  auto& steps = j["steps"] = nlohmann::json::array();
  for (auto& s : r.steps)
    steps.push_back({{"l", s.l}, {"tv", s.tv.get_str()}, {"tv_float", s.tv_d},
                     {"ds_sqrt", s.ds_sqrt}, {"tvb", s.tvb}, {"lower", s.lower}});
  return j;
}

std::string mixing_csv(const MixingReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "l,tv,ds_sqrt,tvb,lower\n";
  for (auto& s : r.steps) out << s.l << "," << s.tv_d << "," << s.ds_sqrt << "," << s.tvb << "," << s.lower << "\n";
  return out.str();
}

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53, kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9, kW1 = 0xBB67AE85;

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> c,
                                               std::array<std::uint32_t, 2> k) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

std::uint32_t Philox4x32::next() {
  if (used_ == 4) {
    buf_ = block({static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
                  static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                 key_);
    ++counter_;
    used_ = 0;
  }
  return buf_[static_cast<size_t>(used_++)];
}

std::uint32_t Philox4x32::below(std::uint32_t bound) {
  require(bound > 0, "empty range");
  std::uint64_t limit = (std::uint64_t{1} << 32) / bound * bound;
  while (true) {
    std::uint32_t x = next();
    if (x < limit) return x % bound;
  }
}

namespace {

MatrixFq random_transvection(int n, const FqField& f, Philox4x32& rng) {
  std::vector<std::uint8_t> v(static_cast<size_t>(n)), w(static_cast<size_t>(n));
  auto draw = [&](std::vector<std::uint8_t>& x) {
    do {
      for (auto& c : x) c = static_cast<std::uint8_t>(rng.below(static_cast<std::uint32_t>(f.q())));
    } while (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; }));
  };
  draw(v);
  while (true) {
    draw(w);
    std::uint8_t dot = 0;
    for (int i = 0; i < n; ++i) dot = f.add(dot, f.mul(w[static_cast<size_t>(i)], v[static_cast<size_t>(i)]));
    if (dot == 0) break;
  }
  MatrixFq t = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.at(i, j) = f.add(t.at(i, j), f.mul(v[static_cast<size_t>(i)], w[static_cast<size_t>(j)]));
  return t;
}

}  // namespace

McReport mc_walk(int n, const FqField& f, int l, std::int64_t trials, std::uint64_t seed, int workers) {
  require(n >= 2 && n <= kMaxDim, "walk dimension out of range");
  require(l >= 0, "step count must be >= 0");
  require(trials >= 1, "trials must be >= 1");
  workers = std::max(1, workers);
  std::vector<int> dims(static_cast<size_t>(trials));
  auto run = [&](std::int64_t from, std::int64_t to) {
    for (std::int64_t t = from; t < to; ++t) {
      Philox4x32 rng(seed, static_cast<std::uint64_t>(t));
      MatrixFq x = identity_matrix(n);
      for (int s = 0; s < l; ++s) x = multiply(f, random_transvection(n, f, rng), x);
      dims[static_cast<size_t>(t)] = fixed_space_dim(f, x);
    }
  };
  if (workers == 1) {
    run(0, trials);
  } else {
    std::vector<std::jthread> pool;
    std::int64_t chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::int64_t from = w * chunk, to = std::min(trials, from + chunk);
      if (from < to) pool.emplace_back(run, from, to);
    }
  }
  McReport r;
  r.n = n;
  r.q = f.q();
  r.l = l;
  r.trials = trials;
  r.seed = seed;
  r.histogram.assign(static_cast<size_t>(n + 1), 0);
  for (int d : dims) ++r.histogram[static_cast<size_t>(d)];
  return r;
}

nlohmann::json to_json(const McReport& r) {
  return {{"n", r.n}, {"q", r.q}, {"l", r.l}, {"trials", r.trials}, {"seed", r.seed},
          {"histogram", r.histogram}};
}

}  // namespace glrank
