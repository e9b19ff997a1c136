#include "glrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "glrank/chartab.hpp"
#include "glrank/error.hpp"
#include "glrank/partitions.hpp"
#include "glrank/pcf.hpp"
#include "glrank/qpoly.hpp"
#include "glrank/sps.hpp"
#include "glrank/walk.hpp"

namespace glrank {

bool CriterionResult::pass() const {
  return seconds <= budget_seconds &&
         std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.pass; });
}

namespace {

const QPoly kQ = QPoly::q();

QPoly qpow(int d) { return QPoly::monomial(d); }

std::string str(const mpq_class& x) { return x.get_str(); }

PcfIrrep sps_type(int n, Partition d) {
  PcfIrrep r;
  r.n = n;
  r.trivial_shape = std::move(d);
  return r;
}

// Tables shared by the criteria within one run.
class Oracles {
 public:
  explicit Oracles(std::ostream* progress) : progress_(progress) {}

  const CharacterTable& get(GroupKind kind, int n, int q) {
    auto key = std::make_tuple(static_cast<int>(kind), n, q);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    GroupPtr g = kind == GroupKind::Sym
                     ? std::make_shared<const GroupTable>(symmetric_group(n))
                     : std::make_shared<const GroupTable>(enumerate_group(kind, n, FqField::make(q)));
    if (progress_) *progress_ << "[acceptance] character table of " << g->name() << "\n";
    return tables_.emplace(key, character_table(g)).first->second;
  }

 private:
  std::ostream* progress_;
  std::map<std::tuple<int, int, int>, CharacterTable> tables_;
};

struct Builder {
  CriterionResult& r;
  void add(std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  // informational line that cannot fail
  void log(std::string name, std::string detail) { add("log: " + std::move(name), true, std::move(detail)); }
};

Partition hook(int n, int k) {
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<size_t>(k), 1);
  return Partition(parts);
}

void criterion1(Builder b) {
  bool hooks = true, two = true, three = true;
  std::string bad;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      auto lt = leading(sps_rep(hook(n, k)).dim);
      if (lt.degree != k * (n - k) + k * (k - 1) / 2 || lt.coefficient != 1) {
        hooks = false;
        bad += " hook(" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
    for (int k = 0; 2 * k <= n; ++k) {
      auto lt = leading(sps_rep(Partition{n - k, k}).dim);
      if (lt.degree != k * (n - k) || lt.coefficient != 1) {
        two = false;
        bad += " two-row(" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
    for (int k = (n + 1) / 2; 3 * k <= 2 * n; ++k) {
      auto lt = leading(sps_rep(Partition{n - k, n - k, 2 * k - n}).dim);
      if (lt.degree != (n - k) * (3 * k - n) || lt.coefficient != 1) {
        three = false;
        bad += " three-row(" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
  }
  b.add("leading(dim rho_{n-k,1^k}) = q^{k(n-k)+k(k-1)/2}, n=2..8", hooks, bad);
  b.add("leading(dim rho_{n-k,k}) = q^{k(n-k)}, n=2..8", two);
  b.add("leading(dim rho_{n-k,n-k,2k-n}) = q^{(n-k)(3k-n)}, n=2..8", three);

  int types = 0, low_ok = 0, low = 0, mid = 0, mid_ok = 0, top = 0, top_ok = 0;
  std::vector<std::string> zeros;
  for (int n = 2; n <= 8; ++n)
    for (auto& r : enumerate_types(n)) {
      ++types;
      int k = tensor_rank(r);
      auto c = cr_at_T(r);
      if (k == n) {
        ++top;
        if (c.chi * (qpow(n - 1) - 1) == -c.dim) ++top_ok;
      } else if (2 * k < n) {
        ++low;
        if (c.exponent == k && c.tail_ok && c.c == 1) ++low_ok;
      } else {
        ++mid;
        if (c.exponent == k && c.tail_ok && c.c.get_den() == 1) ++mid_ok;
        if (c.c == 0) zeros.push_back(r.key() + " (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
      }
    }
  b.add("CR branch k < n/2: c = 1, exponent = k", low_ok == low,
        std::to_string(low_ok) + "/" + std::to_string(low) + " types");
  b.add("CR branch n/2 <= k <= n-1: integer c, exponent = k", mid_ok == mid,
        std::to_string(mid_ok) + "/" + std::to_string(mid) + " types");
  b.add("rank-n CR = -1/(q^{n-1}-1) exactly", top_ok == top,
        std::to_string(top_ok) + "/" + std::to_string(top) + " types");
  std::string z;
  for (size_t i = 0; i < zeros.size() && i < 6; ++i) z += (i ? "; " : "") + zeros[i];
  b.log("c_rho = 0 in the middle branch", std::to_string(zeros.size()) + " of " +
                                             std::to_string(mid) + " types" +
                                             (zeros.empty() ? "" : ": " + z + (zeros.size() > 6 ? "; ..." : "")));
  b.log("types examined", std::to_string(types));
}

std::multiset<std::pair<long, long>> model_pairs(int n, int q) {
  std::multiset<std::pair<long, long>> out;
  for (auto& r : enumerate_gl_irreps(n, q)) {
    auto at = evaluate_at_T(r);
    out.insert({evaluate(at.dim, q).get_si(), evaluate(at.chi, q).get_si()});
  }
  return out;
}

void criterion2(Builder b, Oracles& o) {
  struct G {
    GroupKind kind;
    int n, q;
  };
  std::vector<G> groups{{GroupKind::GL, 2, 3}, {GroupKind::GL, 2, 5}, {GroupKind::SL, 2, 3},
                        {GroupKind::GL, 3, 2}, {GroupKind::SL, 3, 3}};
  for (auto& g : groups) {
    const auto& ct = o.get(g.kind, g.n, g.q);
    std::string name = ct.group->name();
    auto orth = check_orthogonality(ct);
    b.add(name + ": exact row and column orthogonality", orth.rows && orth.columns,
          std::to_string(ct.num_irreps()) + " irreps");
    auto rows = rank_report(ct);
    int agree = 0;
    for (auto& r : rows) agree += r.strict_rank == r.rank_via_Hk;
    b.add(name + ": strict_rank == rank_via_Hk", agree == ct.num_irreps(),
          std::to_string(agree) + "/" + std::to_string(ct.num_irreps()));
    auto model = model_pairs(g.n, g.q);
    std::multiset<std::pair<long, long>> oracle;
    if (g.kind == GroupKind::GL) {
      for (auto& r : rows) oracle.insert({r.dim, r.char_at_T.get_si()});
      b.add(name + ": (dim, chi(T)) multiset equals the pcf model", oracle == model);
    } else {
      // SL irreps grouped by the GL irrep they come from
      const auto& gl = o.get(GroupKind::GL, g.n, g.q);
      auto rep = restrict_to_sl(gl, ct);
      int t = ct.transvection_class();
      bool each = true;
      for (auto& row : rep.rows) {
        // single constituents may be irrational at T, the fiber sum is not
        long d = 0;
        std::vector<mpz_class> sum;
        for (int s : row.constituents) {
          d += ct.dims[static_cast<size_t>(s)];
          auto v = ct.reduced(s, t);
          if (v.size() > sum.size()) sum.resize(v.size());
          for (size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
        }
        bool rational = true;
        for (size_t i = 1; i < sum.size(); ++i) rational = rational && sum[i] == 0;
        if (!rational) each = false;
        oracle.insert({d, sum.empty() ? 0 : sum[0].get_si()});
        if (row.constituents.empty()) each = false;
      }
      b.add(name + ": restriction-grouped (dim, chi(T)) equals the pcf model", oracle == model && each && rep.covers_sl);
    }
  }
  for (int q : {3, 5}) {
    const auto& ct = o.get(GroupKind::GL, 2, q);
    int chars = 0, ps = 0, cusp = 0;
    bool ok = true;
    for (auto& r : rank_report(ct)) {
      int want = r.dim == 1 ? 0 : r.dim == q - 1 ? 2 : 1;
      ok = ok && r.rank == want;
      (want == 0 ? chars : want == 1 ? ps : cusp)++;
    }
    // Steinberg twists plus principal series
    int want_ps = (q - 1) + (q - 1) * (q - 2) / 2;
    ok = ok && chars == q - 1 && ps == want_ps && cusp == (q * q - q) / 2;
    b.add("GL_2(F_" + std::to_string(q) + ") rank partition: characters 0, principal series 1, cuspidals 2", ok,
          std::to_string(chars) + "/" + std::to_string(ps) + "/" + std::to_string(cusp));
  }
  const auto& g32 = o.get(GroupKind::GL, 3, 2);
  int cusp = 0;
  bool ok = true;
  for (auto& r : rank_report(g32))
    if (r.dim == 3) {
      ++cusp;
      ok = ok && r.rank == 3 && mpq_class(r.char_at_T, r.dim) == mpq_class(-1, 3);
    }
  b.add("GL_3(F_2) cuspidals: rank 3, ratio -1/3", ok && cusp == 2, std::to_string(cusp) + " cuspidals");
}

// cycle type of perm restricted to its first k points (which it preserves)
std::string restricted_cycle_key(const MatrixFq& m, int k) {
  std::vector<int> img(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m.n; ++i)
      if (m.at(i, j)) img[static_cast<size_t>(j)] = i;
  std::vector<char> seen(static_cast<size_t>(k), 0);
  std::vector<int> lens;
  for (int s = 0; s < k; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<size_t>(x)]; x = img[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens).str();
}

void criterion3(Builder b, Oracles& o) {
  int cases = 0, agree = 0;
  std::string bad;
  bool kostka_ok = true;
  for (int n = 1; n <= 6; ++n) {
    const auto& ctn = o.get(GroupKind::Sym, n, 2);
    auto labels = label_symmetric_irreps(ctn);
    for (auto& d : partitions_of(n)) {
      auto y = young_character(ctn, d);
      for (int i = 0; i < ctn.num_irreps(); ++i)
        if (multiplicity(ctn, i, y) != kostka(labels[static_cast<size_t>(i)], d)) kostka_ok = false;
    }
    const auto& g = *ctn.group;
    for (int k = 0; k <= n; ++k) {
      // S_k x S_{n-k} as the stabilizer of the first k points
      std::map<std::pair<int, std::string>, long> agg;
      long h = 0;
      for (int x = 0; x < g.size(); ++x) {
        const auto& m = g.matrix(x);
        bool keeps = true;
        for (int j = 0; j < k && keeps; ++j)
          for (int i = k; i < n; ++i)
            if (m.at(i, j)) keeps = false;
        if (!keeps) continue;
        ++h;
        ++agg[{ctn.cc.class_of[static_cast<size_t>(x)], restricted_cycle_key(m, k)}];
      }
      std::vector<Partition> ds;
      std::vector<std::map<std::string, mpz_class>> sigma;  // cycle type -> value
      if (k == 0) {
        ds.push_back(Partition{});
        sigma.push_back({{Partition{}.str(), 1}});
      } else {
        const auto& ctk = o.get(GroupKind::Sym, k, 2);
        auto lk = label_symmetric_irreps(ctk);
        for (int i = 0; i < ctk.num_irreps(); ++i) {
          ds.push_back(lk[static_cast<size_t>(i)]);
          std::map<std::string, mpz_class> v;
          for (int c = 0; c < ctk.num_classes(); ++c)
            v[cycle_type(ctk.group->matrix(ctk.cc.rep(c))).str()] = ctk.integer_value(i, c);
          sigma.push_back(std::move(v));
        }
      }
      for (size_t di = 0; di < ds.size(); ++di) {
        ++cases;
        std::vector<Partition> oracle;
        bool free = true;
        for (int e = 0; e < ctn.num_irreps(); ++e) {
          mpz_class s = 0;
          for (auto& [key, cnt] : agg) s += ctn.integer_value(e, key.first) * sigma[di].at(key.second) * cnt;
          if (s % h != 0) fail(ErrorKind::Internal, "induced multiplicity not an integer");
          s /= h;
          if (s > 1) free = false;
          if (s > 0) oracle.push_back(labels[static_cast<size_t>(e)]);
        }
        sort_canonical(oracle);
        auto expect = pieri_expand(ds[di], n - k);
        if (free && oracle == expect)
          ++agree;
        else if (bad.size() < 200)
          bad += " " + ds[di].str() + "->n=" + std::to_string(n);
      }
    }
  }
  b.add("pieri_expand equals oracle Ind(sigma_D x 1) for k <= n <= 6", agree == cases,
        std::to_string(agree) + "/" + std::to_string(cases) + bad);
  b.add("Kostka numbers equal oracle Young-module multiplicities, n <= 6", kostka_ok);
  bool km = true;
  for (int n = 1; n <= 10; ++n) {
    auto t = transition_matrix(n);
    size_t sz = t.index.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        std::int64_t s = 0;
        for (size_t l = 0; l < sz; ++l) s += t.K[i][l] * t.M[l][j];
        if (s != (i == j ? 1 : 0)) km = false;
      }
  }
  b.add("K * M = identity for n <= 10", km);
}

void criterion4(Builder b) {
  int cases = 0, agree = 0;
  for (int q : {2, 3}) {
    auto f = FqField::make(q);
    for (int n = 2; n <= 4; ++n) {
      SubspaceLattice lat(f, n);
      auto t = transvection(n, *f);
      for (auto& d : partitions_of(n)) {
        auto blocks = d.vec();
        do {
          ++cases;
          if (evaluate(fixed_flags(blocks), q) == lat.count_flags(blocks, &t)) ++agree;
        } while (std::prev_permutation(blocks.begin(), blocks.end()));
      }
    }
  }
  b.add("fixed_flags equals brute-force T-stable flag counts, n in {2,3,4}, q in {2,3}", agree == cases,
        std::to_string(agree) + "/" + std::to_string(cases) + " block orders");
  bool lead = true;
  std::string ones;
  for (int n = 2; n <= 9; ++n)
    for (auto& d : partitions_of(n)) {
      auto ff = leading(fixed_flags(d));
      auto di = leading(dim_induced(d));
      if (d.first() >= 2) {
        if (di.degree - ff.degree != n - d.first() || ff.coefficient != d.first_multiplicity()) lead = false;
      } else {
        ones += " n=" + std::to_string(n) + ":" + ff.coefficient.get_str() + "/q^" +
                std::to_string(di.degree - ff.degree);
      }
    }
  b.add("d_1 >= 2: leading fixed-flag ratio is m_{d_1}/q^{n-d_1}, n <= 9", lead);
  b.log("d_1 = 1 leading ratio (complete flags)", ones);
}

void criterion5(Builder b, Oracles& o) {
  for (int q : {2, 3}) {
    const auto& ct = o.get(GroupKind::SL, 3, q);
    const auto& g = *ct.group;
    std::string name = g.name();
    auto cls = transvection_elements(g);
    auto steps = exact_convolution_steps(g, cls, 6);
    bool eq = true;
    for (int l = 0; l <= 6; ++l)
      eq = eq && push_to_classes(steps[static_cast<size_t>(l)], ct.cc).mass == fourier_distribution(ct, l).mass;
    b.add(name + ": Fourier == exact convolution, l <= 6", eq);

    auto u = uniform_on_classes(ct);
    mpq_class fpf = fixed_point_free_mass(ct);
    bool upper = true, lower = true, tvb = true;
    std::string tvs;
    for (int l = 0; l <= 14; ++l) {
      mpq_class tv = tv_distance(fourier_distribution(ct, l), u);
      mpq_class ds = ds_upper_bound_exact(ct, l);
      if (tv * tv > ds) upper = false;
      if (l < 3 && tv < fpf) lower = false;
      if (q == 3 && l >= 5 && tv.get_d() > tvb_closed_form(3, q, l)) tvb = false;
      if (l <= 8) tvs += (l ? " " : "") + std::to_string(tv.get_d()).substr(0, 8);
    }
    b.add(name + ": tv <= sqrt(ds bound), l <= 14", upper);
    b.add(name + ": tv >= fixed-point-free mass " + str(fpf) + " for l < 3", lower);
    if (q == 3) b.add(name + ": closed-form bound above tv for n+2 <= l <= 14", tvb);
    mpq_class rate = spectral_mixing_rate(ct);
    mpq_class want(q * q - 1, q * q * q - 1);
    want.canonicalize();
    b.add(name + ": spectral rate = (q^2-1)/(q^3-1) = " + str(want), rate == want,
          "oracle max nontrivial |chi(T)/dim| = " + str(rate));
    double dev = std::abs(rate.get_d() - 1.0 / q) * q * q * q;
    b.log(name + " rate vs 1/q", "|r - 1/q| * q^3 = " + std::to_string(dev));
    auto rep = mixing_report(ct, 30);
    b.log(name + " observed", "mixing time (tv < 1/4) l = " + std::to_string(rep.mixing_time) +
                                  ", fitted rate " + std::to_string(rep.fitted_rate) + ", tv(l) " + tvs);
  }
}

void criterion6(Builder b) {
  int total = 0, rank_ok = 0, throws_ok = 0, invalid = 0;
  bool injective = true;
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<PcfIrrep> taus;
      if (k == 0)
        taus.push_back(sps_type(0, Partition{}));
      else
        taus = enumerate_types(k);
      std::set<std::string> keys;
      for (auto& tau : taus) {
        if (strict_tensor_rank(tau) < 2 * k - n) {
          ++invalid;
          try {
            eta(tau, n);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::NoRankKConstituent) ++throws_ok;
          }
          continue;
        }
        ++total;
        auto img = eta(tau, n);
        if (strict_tensor_rank(img) == k) ++rank_ok;
        if (!keys.insert(img.key()).second) injective = false;
      }
    }
  b.add("eta rank-correct on valid tau, k <= n <= 8", rank_ok == total,
        std::to_string(rank_ok) + "/" + std::to_string(total));
  b.add("eta injective for each (n, k)", injective);
  b.add("eta rejects tau of strict rank < 2k-n", throws_ok == invalid,
        std::to_string(throws_ok) + "/" + std::to_string(invalid));
  bool dims = true;
  PcfIrrep triv = sps_type(1, Partition{1});
  PcfIrrep chi;
  chi.n = 1;
  chi.split.push_back({1, Partition{1}});
  for (int n = 1; n <= 8; ++n) {
    dims = dims && dim(eta(chi, n)) * (kQ - 1) == qpow(n) - 1;
    // the trivial character has strict rank 0, so needs n >= 2
    if (n >= 2) dims = dims && dim(eta(triv, n)) * (kQ - 1) == qpow(n) - kQ;
  }
  b.add("GL_1 images: dims (q^n-1)/(q-1) and (q^n-q)/(q-1), n <= 8", dims);
}

std::map<int, int> oracle_rank_counts(const CharacterTable& ct) {
  std::map<int, int> m;
  for (auto& r : rank_report(ct)) ++m[r.rank];
  return m;
}

std::map<int, int> model_rank_counts(int n, int q) {
  std::map<int, int> m;
  for (auto& r : enumerate_gl_irreps(n, q)) ++m[tensor_rank(r)];
  return m;
}

std::string counts_text(const std::map<int, int>& m) {
  std::string s;
  for (auto [k, c] : m) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(c);
  return s;
}

void criterion7(Builder b, Oracles& o) {
  std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 5}, {3, 2}};
  for (auto [n, q] : cases) {
    auto oc = oracle_rank_counts(o.get(GroupKind::GL, n, q));
    auto mc = model_rank_counts(n, q);
    b.add("GL_" + std::to_string(n) + "(F_" + std::to_string(q) + "): rank counts oracle == pcf", oc == mc,
          counts_text(oc));
  }
  auto lead = count_leading(3, 1, false);
  for (int q : {2, 3}) {
    auto oc = oracle_rank_counts(o.get(GroupKind::GL, 3, q));
    int want = (q - 1) * (q - 1);
    b.add("GL_3(F_" + std::to_string(q) + "): #rank-1 = (q-1)^2 with leading term q^2", oc[1] == want &&
              model_rank_counts(3, q)[1] == want && lead.degree == 2 && lead.text == "q^2",
          "oracle " + std::to_string(oc[1]) + ", leading " + lead.text);
  }
}

void criterion8(Builder b, Oracles& o) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    const auto& gl = o.get(GroupKind::GL, n, q);
    const auto& sl = o.get(GroupKind::SL, n, q);
    auto r = restrict_to_sl(gl, sl);
    std::string name = gl.group->name() + " -> " + sl.group->name();
    b.add(name + ": multiplicity free", r.multiplicity_free);
    b.add(name + ": equal spectra iff twist-equivalent", r.spectra_iff_twist);
    b.add(name + ": irreducible iff fixed by no nontrivial twist", r.irreducible_iff_unfixed);
    b.add(name + ": twists act transitively on each fiber", r.fibers_transitive && r.orbit_stabilizer && r.covers_sl);
    b.log(name + " reducible fraction", std::to_string(r.reducible_fraction));
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::set<int>& only, std::ostream* progress) {
  Oracles oracles(progress);
  struct Criterion {
    int id;
    std::string title;
    double budget;
    std::function<void(Builder)> run;
  };
  std::vector<Criterion> criteria{
      {1, "exact-formula suite", 60, [](Builder b) { criterion1(b); }},
      {2, "oracle equivalence", 600, [&](Builder b) { criterion2(b, oracles); }},
      {3, "Pieri/Kostka suite", 120, [&](Builder b) { criterion3(b, oracles); }},
      {4, "fixed-flag suite", 300, [](Builder b) { criterion4(b); }},
      {5, "walk suite", 600, [&](Builder b) { criterion5(b, oracles); }},
      {6, "eta suite", 60, [](Builder b) { criterion6(b); }},
      {7, "counting sanity", 300, [&](Builder b) { criterion7(b, oracles); }},
      {8, "restriction suite", 600, [&](Builder b) { criterion8(b, oracles); }},
  };
  std::vector<CriterionResult> out;
  for (auto& s : criteria) {
    if (!only.empty() && !only.count(s.id)) continue;
    CriterionResult r;
    r.id = s.id;
    r.title = s.title;
    r.budget_seconds = s.budget;
    if (progress) *progress << "[acceptance] criterion " << s.id << ": " << s.title << "\n";
    auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(Builder{r});
    } catch (const std::exception& e) {
      r.checks.push_back({"completed without error", false, e.what()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results, bool verbose) {
  int passed = 0;
  for (auto& r : results) {
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << r.seconds;
    out << (r.pass() ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " ("
        << secs.str() << " s of " << r.budget_seconds << " s)\n";
    if (r.pass()) ++passed;
    if (!verbose && r.pass()) continue;
    for (auto& c : r.checks) {
      out << "    " << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
    }
  }
  out << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace glrank
