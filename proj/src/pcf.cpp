#include "glrank/pcf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "glrank/error.hpp"
#include "glrank/sps.hpp"

namespace glrank {

int PcfIrrep::unsplit_size() const {
  int u = 0;
  for (const auto& e : unsplit) u += e.slot.size * e.mult;
  return u;
}

int PcfIrrep::split_size() const {
  int s = 0;
  for (const auto& e : split) s += e.shape.weight();
  return s;
}

void PcfIrrep::validate() const {
  require(n >= 0, "n must be nonnegative");
  std::set<std::string> labels;
  for (const auto& e : unsplit) {
    require(e.slot.size >= 2, "unsplit slot sizes must be >= 2");
    require(e.mult >= 1, "unsplit multiplicity must be >= 1");
    require(e.shape.weight() == e.mult,
            "unsplit shape must be a partition of its multiplicity");
    require(labels.insert(e.slot.label).second,
            "duplicate cuspidal label " + e.slot.label);
  }
  std::set<int> chis;
  for (const auto& e : split) {
    require(e.chi >= 1, "split character labels must be nontrivial (>= 1)");
    require(e.shape.weight() >= 1, "split shapes must be nonempty");
    require(chis.insert(e.chi).second, "duplicate split character label");
  }
  require(unsplit_size() + split_size() + trivial_shape.weight() == n,
          "block sizes do not add up to n");
}

void PcfIrrep::canonicalize() {
  std::sort(unsplit.begin(), unsplit.end(), [](const auto& a, const auto& b) {
    return std::tie(a.slot.size, a.slot.label) <
           std::tie(b.slot.size, b.slot.label);
  });
  std::sort(split.begin(), split.end(),
            [](const auto& a, const auto& b) { return a.chi < b.chi; });
}

std::vector<int> PcfIrrep::blocks() const {
  std::vector<int> b;
  for (const auto& e : unsplit) b.push_back(e.slot.size * e.mult);
  for (const auto& e : split) b.push_back(e.shape.weight());
  if (trivial_shape.weight() > 0) b.push_back(trivial_shape.weight());
  return b;
}

std::string PcfIrrep::key() const { return to_json(*this).dump(); }

nlohmann::json to_json(const PcfIrrep& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["unsplit"] = nlohmann::json::array();
  for (const auto& e : r.unsplit)
    j["unsplit"].push_back({{"size", e.slot.size},
                            {"label", e.slot.label},
                            {"mult", e.mult},
                            {"shape", to_json(e.shape)}});
  j["split"] = nlohmann::json::array();
  for (const auto& e : r.split)
    j["split"].push_back({{"chi", e.chi}, {"shape", to_json(e.shape)}});
  j["trivial_shape"] = to_json(r.trivial_shape);
  return j;
}

PcfIrrep pcf_from_json(const nlohmann::json& j) {
  require(j.is_object(), "PcfIrrep must be a JSON object");
  PcfIrrep r;
  try {
    r.n = j.at("n").get<int>();
    if (j.contains("unsplit"))
      for (const auto& e : j.at("unsplit"))
        r.unsplit.push_back({{e.at("size").get<int>(),
                              e.at("label").get<std::string>()},
                             e.at("mult").get<int>(),
                             partition_from_json(e.at("shape"))});
    if (j.contains("split"))
      for (const auto& e : j.at("split"))
        r.split.push_back(
            {e.at("chi").get<int>(), partition_from_json(e.at("shape"))});
    if (j.contains("trivial_shape"))
      r.trivial_shape = partition_from_json(j.at("trivial_shape"));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::InvalidInput, std::string("bad PcfIrrep JSON: ") + ex.what());
  }
  r.validate();
  r.canonicalize();
  return r;
}

int tensor_corank(const PcfIrrep& r) {
  int c = r.trivial_shape.first();
  for (const auto& e : r.split) c = std::max(c, e.shape.first());
  return c;
}

int strict_tensor_corank(const PcfIrrep& r) { return r.trivial_shape.first(); }

PcfIrrep eta(const PcfIrrep& tau, int n) {
  tau.validate();
  int k = tau.n;
  require(k <= n, "eta needs tau.n <= n");
  if (strict_tensor_corank(tau) > n - k)
    fail(ErrorKind::NoRankKConstituent,
         "strict tensor rank " + std::to_string(strict_tensor_rank(tau)) +
             " of tau is below 2k-n = " + std::to_string(2 * k - n));
  PcfIrrep out = tau;
  out.n = n;
  out.trivial_shape = tau.trivial_shape.with_first_row(n - k);
  return out;
}

std::vector<PcfIrrep> decompose_induced(const PcfIrrep& tau, int n) {
  tau.validate();
  require(tau.n <= n, "decompose_induced needs tau.n <= n");
  std::vector<PcfIrrep> out;
  for (auto& big : pieri_expand(tau.trivial_shape, n - tau.n)) {
    PcfIrrep r = tau;
    r.n = n;
    r.trivial_shape = big;
    out.push_back(std::move(r));
  }
  return out;
}

QPoly cuspidal_dim(int lambda) {
  require(lambda >= 1, "cuspidal size must be positive");
  QPoly d(1);
  for (int j = 1; j < lambda; ++j) d *= q_power_minus_one(j);
  return d;
}

// Constituent of the isobaric induction attached to shape E, transported from
// the spherical theory of GL_m(F_{q^lambda}).
QPoly unsplit_entry_dim(const UnsplitEntry& e) {
  int lam = e.slot.size, m = e.mult;
  QPoly num(1);
  for (int i = 0; i < m; ++i) num *= cuspidal_dim(lam);
  num *= q_multinomial(std::vector<int>(static_cast<size_t>(m), lam));
  num *= substitute_q_power(sps_rep(e.shape).dim, lam);
  QPoly den = substitute_q_power(
      q_multinomial(std::vector<int>(static_cast<size_t>(m), 1)), lam);
  return exact_div(num, den);
}

namespace {

struct Block {
  QPoly dim;
  QPoly chi;  // at a transvection of the block; unused for size 1
};

std::vector<Block> block_data(const PcfIrrep& r) {
  std::vector<Block> out;
  for (const auto& e : r.unsplit) {
    QPoly d = unsplit_entry_dim(e);
    // every irrep of GL_u with no split part has ratio -1/(q^{u-1}-1)
    int u = e.slot.size * e.mult;
    out.push_back({d, exact_div(-d, q_power_minus_one(u - 1))});
  }
  for (const auto& e : r.split) {
    SpsRep s = sps_rep(e.shape);
    out.push_back({s.dim, s.char_at_T});
  }
  if (r.trivial_shape.weight() > 0) {
    SpsRep s = sps_rep(r.trivial_shape);
    out.push_back({s.dim, s.char_at_T});
  }
  return out;
}

}  // namespace

QPoly dim(const PcfIrrep& r) {
  r.validate();
  QPoly d = q_multinomial(r.blocks());
  for (const auto& b : block_data(r)) d *= b.dim;
  return d;
}

AtTransvection evaluate_at_T(const PcfIrrep& r) {
  r.validate();
  if (r.n < 2) fail(ErrorKind::Unsupported, "GL_1 has no transvection");
  auto blocks = r.blocks();
  auto data = block_data(r);
  FixedFlagSplit split = fixed_flag_split(blocks);
  QPoly all_dims(1);
  for (const auto& b : data) all_dims *= b.dim;
  AtTransvection out;
  out.dim = q_multinomial(blocks) * all_dims;
  out.chi = split.identity * all_dims;
  for (size_t j = 0; j < data.size(); ++j) {
    if (split.transvection[j].is_zero()) continue;
    QPoly others(1);
    for (size_t i = 0; i < data.size(); ++i)
      if (i != j) others *= data[i].dim;
    out.chi += split.transvection[j] * data[j].chi * others;
  }
  return out;
}

CrLeading cr_at_T(const PcfIrrep& r) {
  AtTransvection v = evaluate_at_T(r);
  CrLeading out;
  int k = tensor_rank(r);
  out.exponent = k == r.n ? r.n - 1 : k;
  int target = v.dim.degree() - out.exponent;
  out.c = mpq_class(v.chi.coeff(target), leading(v.dim).coefficient);
  out.c.canonicalize();
  out.tail_ok = v.chi.is_zero() || v.chi.degree() <= target;
  out.dim = std::move(v.dim);
  out.chi = std::move(v.chi);
  return out;
}

CrLeading sl_character_ratio_transfer(const PcfIrrep& r) {
  if (r.n < 3)
    fail(ErrorKind::Unsupported,
         "GL to SL ratio transfer needs n >= 3 (fails for SL_2)");
  return cr_at_T(r);
}

DimBounds dim_bounds(int n, int k) {
  require(n >= 1 && k >= 0 && k <= n, "dim_bounds needs 0 <= k <= n, n >= 1");
  DimBounds b;
  b.n = n;
  b.k = k;
  auto sps_witness = [n](std::vector<int> parts) {
    PcfIrrep r;
    r.n = n;
    r.trivial_shape = Partition(std::move(parts));
    return r;
  };
  if (k == 0) {
    b.upper = b.lower = {0, 1};
    b.upper_witness = b.lower_witness = sps_witness({n});
    return b;
  }
  if (n == 1) {
    b.exists = false;
    return b;
  }

  if (k < n) {
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<size_t>(k), 1);
    b.upper = {k * (n - k) + k * (k - 1) / 2, 1};
    b.upper_witness = sps_witness(parts);
  } else {
    b.upper = {n * (n - 1) / 2, 1};
    PcfIrrep r;
    r.n = n;
    r.unsplit.push_back({{n, "a"}, 1, Partition{1}});
    b.upper_witness = r;
  }

  if (2 * k < n) {
    b.lower = {k * (n - k), 1};
    b.lower_witness = sps_witness({n - k, k});
  } else if (3 * k < 2 * n) {
    b.lower = {(n - k) * (3 * k - n), 1};
    b.lower_witness = sps_witness({n - k, n - k, 2 * k - n});
  } else {
    PcfIrrep r;
    r.n = n;
    if (k % 2 == 0) {
      r.unsplit.push_back({{2, "a"}, k / 2, Partition{k / 2}});
      b.lower = {k * (n - k) + k * k / 4, 1};
    } else {
      r.unsplit.push_back({{3, "a"}, 1, Partition{1}});
      if (k > 3) r.unsplit.push_back({{2, "b"}, (k - 3) / 2, Partition{(k - 3) / 2}});
      b.lower = {k * (n - k) + (k - 3) * (k - 3) / 4 + 3 * (k - 2), 1};
    }
    if (n > k) r.trivial_shape = Partition{n - k};
    r.canonicalize();
    b.lower_witness = r;
  }
  return b;
}

CountLeading count_leading(int n, int k, bool special_linear) {
  require(n >= 1 && k >= 0 && k <= n, "count_leading needs 0 <= k <= n");
  if (special_linear && n < 3)
    fail(ErrorKind::Unsupported, "SL counting needs n >= 3 (SL_2 excluded)");
  CountLeading c;
  auto qpow = [](int d) {
    return d == 0 ? std::string("1") : d == 1 ? std::string("q")
                                              : "q^" + std::to_string(d);
  };
  if (n == 1) {
    // all q-1 characters of GL_1 have rank 0
    c.degree = k == 0 ? 1 : QPoly::kMinusInfinity;
    c.text = k == 0 ? "q" : "0";
    return c;
  }
  if (k <= n - 2) {
    c.degree = special_linear ? k : k + 1;
    c.text = qpow(c.degree);
    return c;
  }
  c.symbolic = true;
  c.degree = special_linear ? n - 1 : n;
  c.text = "c_" + std::to_string(k) + "*" + qpow(c.degree);
  c.note = "c_" + std::to_string(n - 1) + ", c_" + std::to_string(n) +
           " unknown in (0,1) with c_" + std::to_string(n - 1) + " + c_" +
           std::to_string(n) + " = 1";
  return c;
}

namespace {

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  return n > 1 ? -r : r;
}

}  // namespace

std::int64_t cuspidal_count(int lambda, std::int64_t q) {
  require(lambda >= 1 && q >= 2, "cuspidal_count needs lambda >= 1, q >= 2");
  if (lambda == 1) return q - 1;
  mpz_class total = 0;
  for (int d = 1; d <= lambda; ++d) {
    if (lambda % d) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(d));
    total += mobius(lambda / d) * (pw - 1);
  }
  return mpz_class(total / lambda).get_si();
}

std::vector<PcfIrrep> enumerate_gl_irreps(int n, std::int64_t q) {
  require(n >= 1, "enumerate_gl_irreps needs n >= 1");
  require(is_prime_power(q), "q must be a prime power");
  struct Cusp {
    int size;
    int chi;  // lambda = 1 only; 0 is the trivial character
    std::string label;
  };
  std::vector<Cusp> cusps;
  for (std::int64_t c = 0; c <= q - 2; ++c) cusps.push_back({1, static_cast<int>(c), ""});
  for (int lam = 2; lam <= n; ++lam) {
    std::int64_t cnt = cuspidal_count(lam, q);
    for (std::int64_t i = 1; i <= cnt; ++i)
      cusps.push_back({lam, 0, std::to_string(lam) + "." + std::to_string(i)});
  }
  std::vector<PcfIrrep> out;
  PcfIrrep cur;
  cur.n = n;
  std::function<void(size_t, int)> rec = [&](size_t i, int rest) {
    if (rest == 0) {
      PcfIrrep r = cur;
      r.canonicalize();
      out.push_back(std::move(r));
      return;
    }
    if (i == cusps.size()) return;
    rec(i + 1, rest);
    const Cusp& c = cusps[i];
    for (int w = 1; w * c.size <= rest; ++w) {
      for (auto& shape : partitions_of(w)) {
        if (c.size >= 2)
          cur.unsplit.push_back({{c.size, c.label}, w, shape});
        else if (c.chi >= 1)
          cur.split.push_back({c.chi, shape});
        else
          cur.trivial_shape = shape;
        rec(i + 1, rest - w * c.size);
        if (c.size >= 2)
          cur.unsplit.pop_back();
        else if (c.chi >= 1)
          cur.split.pop_back();
        else
          cur.trivial_shape = Partition();
      }
    }
  };
  rec(0, n);
  return out;
}

std::vector<PcfIrrep> enumerate_types(int n) {
  require(n >= 0, "enumerate_types needs n >= 0");
  struct Triple {
    int size, mult;
    Partition shape;
  };
  std::vector<Triple> triples;
  for (int lam = 2; lam <= n; ++lam)
    for (int m = 1; lam * m <= n; ++m)
      for (auto& s : partitions_of(m)) triples.push_back({lam, m, s});
  std::vector<Partition> shapes;
  for (int w = 1; w <= n; ++w)
    for (auto& s : partitions_of(w)) shapes.push_back(s);

  std::vector<PcfIrrep> out;
  std::vector<const Triple*> chosen_u;
  std::vector<const Partition*> chosen_s;

  auto emit = [&](int rest) {
    for (auto& triv : partitions_of(rest)) {
      PcfIrrep r;
      r.n = n;
      std::map<int, int> per_size;
      for (const Triple* t : chosen_u) {
        int idx = ++per_size[t->size];
        r.unsplit.push_back({{t->size, std::to_string(t->size) + "." +
                                           std::to_string(idx)},
                             t->mult, t->shape});
      }
      int chi = 0;
      for (const Partition* s : chosen_s) r.split.push_back({++chi, *s});
      r.trivial_shape = triv;
      r.canonicalize();
      out.push_back(std::move(r));
    }
  };
  std::function<void(size_t, int)> rec_split = [&](size_t from, int rest) {
    emit(rest);
    for (size_t i = from; i < shapes.size(); ++i) {
      if (shapes[i].weight() > rest) continue;
      chosen_s.push_back(&shapes[i]);
      rec_split(i, rest - shapes[i].weight());
      chosen_s.pop_back();
    }
  };
  std::function<void(size_t, int)> rec_unsplit = [&](size_t from, int rest) {
    rec_split(0, rest);
    for (size_t i = from; i < triples.size(); ++i) {
      int sz = triples[i].size * triples[i].mult;
      if (sz > rest) continue;
      chosen_u.push_back(&triples[i]);
      rec_unsplit(i, rest - sz);
      chosen_u.pop_back();
    }
  };
  rec_unsplit(0, n);
  return out;
}

}  // namespace glrank
