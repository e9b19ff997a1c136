#include "glrank/sps.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "glrank/error.hpp"

namespace glrank {

QPoly dim_induced(const Partition& d) { return q_multinomial(d); }

namespace {

QPoly G(int k, int m) { return gauss_binomial(m, k); }

QPoly multinomial_range(std::span<const int> b, size_t from, size_t to) {
  return q_multinomial(b.subspan(from, to - from));
}

}  // namespace

// Let L = Im(T-I) inside K = ker(T-I). A subspace is T-stable iff it lies in
// K or contains L. Sort stable flags by the first step V_j containing L:
// V_{j-1} lies in K and avoids L, V_j contains L, everything above is free.
FixedFlagSplit fixed_flag_split(std::span<const int> blocks_in) {
  std::vector<int> blocks;
  for (int b : blocks_in) {
    require(b >= 0, "negative block size");
    if (b > 0) blocks.push_back(b);
  }
  int n = 0;
  for (int b : blocks) n += b;
  require(n >= 2, "fixed flags need n >= 2");

  FixedFlagSplit out;
  out.transvection.assign(blocks.size(), QPoly());
  int a = 0;
  for (size_t j = 0; j < blocks.size(); ++j) {
    int bj = blocks[j];
    QPoly avoid = G(a, n - 1) - G(a - 1, n - 2);
    QPoly outer = avoid * multinomial_range(blocks, 0, j) *
                  multinomial_range(blocks, j + 1, blocks.size());
    QPoly enter = G(bj - 1, n - a - 1);
    QPoly enter_in_k = G(bj - 1, n - a - 2);
    out.total += outer * enter;
    out.transvection[j] = outer * (enter - enter_in_k);
    a += bj;
  }
  out.identity = out.total;
  for (const auto& t : out.transvection) out.identity -= t;

  // report per original block position, zero blocks get zero
  std::vector<QPoly> per_input;
  size_t k = 0;
  for (int b : blocks_in) per_input.push_back(b > 0 ? out.transvection[k++] : QPoly());
  out.transvection = std::move(per_input);
  return out;
}

QPoly fixed_flags(std::span<const int> blocks) {
  return fixed_flag_split(blocks).total;
}

QPoly fixed_flags(const Partition& d) { return fixed_flags(d.parts()); }

namespace {

struct SpsMemo {
  std::shared_mutex mu;
  std::map<int, std::shared_ptr<const TransitionMatrix>> transitions;
  std::map<Partition, SpsRep> reps;
};

SpsMemo& memo() {
  static SpsMemo m;
  return m;
}

std::shared_ptr<const TransitionMatrix> cached_transition(int n, int cap) {
  if (n > cap) over_cap("partition weight cap", cap, n);
  auto& m = memo();
  {
    std::shared_lock lock(m.mu);
    auto it = m.transitions.find(n);
    if (it != m.transitions.end()) return it->second;
  }
  auto t = std::make_shared<const TransitionMatrix>(transition_matrix(n, cap));
  std::unique_lock lock(m.mu);
  return m.transitions.try_emplace(n, t).first->second;
}

}  // namespace

SpsRep sps_rep(const Partition& d, int cap) {
  auto& m = memo();
  {
    std::shared_lock lock(m.mu);
    auto it = m.reps.find(d);
    if (it != m.reps.end()) return it->second;
  }
  int n = d.weight();
  SpsRep rep{d, QPoly(), QPoly()};
  if (n == 0) {
    rep.dim = 1;
    rep.char_at_T = 1;
  } else {
    auto t = cached_transition(n, cap);
    int col = t->position(d);
    for (size_t i = 0; i < t->index.size(); ++i) {
      std::int64_t coef = t->M[i][static_cast<size_t>(col)];
      if (coef == 0) continue;
      const Partition& e = t->index[i];
      rep.dim += QPoly(coef) * dim_induced(e);
      // GL_1 has no transvection; the value there is never used
      if (n >= 2) rep.char_at_T += QPoly(coef) * fixed_flags(e);
    }
    if (n == 1) rep.char_at_T = 1;
  }
  std::unique_lock lock(m.mu);
  return m.reps.try_emplace(d, rep).first->second;
}

SpsLeading sps_leading(const Partition& d) {
  require(d.weight() >= 2, "character ratio needs n >= 2");
  SpsRep r = sps_rep(d);
  SpsLeading out;
  out.exponent = d.weight() - d.first();
  int target = r.dim.degree() - out.exponent;
  // dims are monic, so the coefficient of chi at deg(dim)-exponent is c
  out.c = r.char_at_T.coeff(target);
  out.tail_ok = r.char_at_T.is_zero() || r.char_at_T.degree() <= target;
  return out;
}

SpsRatio cr_sps(const Partition& d, const mpz_class& q) {
  SpsRep r = sps_rep(d);
  return {evaluate_ratio(r.char_at_T, r.dim, q), sps_leading(d)};
}

std::string to_string(RelOrder o) {
  switch (o) {
    case RelOrder::StrictlySmaller: return "strictly-smaller";
    case RelOrder::SameOrder: return "same-order";
    case RelOrder::Larger: return "larger";
  }
  return "?";
}

RelativeOrder cr_induced_relative(const Partition& d, const Partition& dprime) {
  require(d.weight() == dprime.weight(), "partitions of different weight");
  require(compare_dominance(dprime, d) == Dominance::StrictlyDominates,
          dprime.str() + " does not strictly dominate " + d.str());
  QPoly a = fixed_flags(d), b = fixed_flags(dprime);
  RelativeOrder out;
  out.degree_gap = a.degree() - b.degree();
  out.order = out.degree_gap > 0    ? RelOrder::StrictlySmaller
              : out.degree_gap == 0 ? RelOrder::SameOrder
                                    : RelOrder::Larger;
  out.factor = 0;
  if (out.degree_gap == 0) {
    out.factor = mpq_class(leading(b).coefficient, leading(a).coefficient);
    out.factor.canonicalize();
  }
  return out;
}

std::string sps_csv(int n, int cap) {
  require(n >= 1, "sps table needs n >= 1");
  if (n > cap) over_cap("partition weight cap", cap, n);
  std::ostringstream os;
  os << "partition,d_L,dim,char_at_T,c,exponent\n";
  for (const auto& d : partitions_of(n)) {
    SpsRep r = sps_rep(d, cap);
    os << '"' << to_json(d).dump() << "\"," << r.dim.degree() << ",\""
       << r.dim.str() << "\",\"" << r.char_at_T.str() << "\",";
    if (n >= 2) {
      SpsLeading l = sps_leading(d);
      os << l.c.get_str() << ',' << l.exponent;
    } else {
      os << ",";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace glrank
