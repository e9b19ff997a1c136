#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "glrank/cache.hpp"
#include "glrank/chartab.hpp"
#include "glrank/error.hpp"
#include "glrank/partitions.hpp"
#include "glrank/pcf.hpp"
#include "glrank/qpoly.hpp"
#include "glrank/sps.hpp"
#include "glrank/verify.hpp"
#include "glrank/walk.hpp"

using namespace glrank;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kResource = 2, kVerifyFail = 3, kInternal = 4 };

struct Config {
  int n = 2;
  int q = 0;  // 0: not given
  int k = -1;
  int m = 0;
  bool sl = false;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  std::string tau;
  std::string partition;
  std::string group = "SL";
  std::string mode = "fourier";
  std::string level = "desk";
  std::string criteria;
  int steps = 12;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t max_group = kDefaultGroupCap;
  int max_weight = kDefaultPartitionCap;
  int max_classes = kDefaultMaxClasses;
};

Cache open_cache(const Config& c) {
  return Cache(c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir));
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_atomic(c.out, text);
}

void emit_json(const Config& c, json j) {
  j["schema"] = "1";
  emit(c, j.dump(2) + "\n");
}

bool csv(const Config& c) { return c.format == "csv"; }

std::string quote(const std::string& s) {
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

void require_q(const Config& c) {
  require(c.q >= 2 && is_prime_power(c.q), "--q must be a prime power");
}

void require_weight(const Config& c, int n) {
  require(n >= 1, "--n must be >= 1");
  if (n > c.max_weight) over_cap("partition weight cap", c.max_weight, n);
}

std::string lead_text(const LeadingTerm& t) {
  if (t.degree == QPoly::kMinusInfinity) return "0";
  return t.coefficient.get_str() + "*q^" + std::to_string(t.degree);
}

Partition parse_partition(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '[') return partition_from_json(json::parse(t));
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) parts.push_back(std::stoi(tok));
  return Partition(parts);
}

// rank, dimension range and leading ratio per rank
int cmd_dims(const Config& c) {
  require_weight(c, c.n);
  json rows = json::array();
  std::string text = "k,exists,upper,lower,upper_witness,lower_witness\n";
  for (int k = 0; k <= c.n; ++k) {
    if (c.k >= 0 && k != c.k) continue;
    auto b = dim_bounds(c.n, k);
    json r{{"k", k}, {"exists", b.exists}};
    std::string uw, lw;
    if (b.exists) {
      r["upper"] = lead_text(b.upper);
      r["lower"] = lead_text(b.lower);
      if (b.upper_witness) r["upper_witness"] = to_json(*b.upper_witness), uw = b.upper_witness->key();
      if (b.lower_witness) r["lower_witness"] = to_json(*b.lower_witness), lw = b.lower_witness->key();
    }
    rows.push_back(r);
    text += std::to_string(k) + "," + (b.exists ? "true" : "false") + "," +
            (b.exists ? lead_text(b.upper) : "") + "," + (b.exists ? lead_text(b.lower) : "") + "," +
            quote(uw) + "," + quote(lw) + "\n";
  }
  if (csv(c))
    emit(c, text);
  else
    emit_json(c, {{"n", c.n}, {"rows", rows}});
  return kOk;
}

// predicted (rank, character-ratio leading term) per irrep or type
int cmd_ratios(const Config& c) {
  require_weight(c, c.n);
  std::vector<PcfIrrep> irreps;
  if (c.q) {
    require_q(c);
    irreps = enumerate_gl_irreps(c.n, c.q);
  } else {
    irreps = enumerate_types(c.n);
  }
  json rows = json::array();
  std::string text = "rank,strict_rank,dim_degree,c,exponent,ratio,irrep\n";
  for (auto& r : irreps) {
    if (c.n == 1) {
      // GL_1: every character is its own family, ratio 1 at the identity
      rows.push_back({{"irrep", to_json(r)}, {"rank", tensor_rank(r)}, {"strict_rank", strict_tensor_rank(r)}});
      text += std::to_string(tensor_rank(r)) + "," + std::to_string(strict_tensor_rank(r)) + ",0,1,0,1," + quote(r.key()) + "\n";
      continue;
    }
    auto lead = c.sl ? sl_character_ratio_transfer(r) : cr_at_T(r);
    json row{{"irrep", to_json(r)},
             {"rank", tensor_rank(r)},
             {"strict_rank", strict_tensor_rank(r)},
             {"dim_degree", lead.dim.degree()},
             {"c", lead.c.get_str()},
             {"exponent", lead.exponent},
             {"tail_ok", lead.tail_ok}};
    std::string ratio;
    if (c.q) {
      ratio = lead.ratio_at(c.q).get_str();
      row["ratio"] = ratio;
    }
    rows.push_back(row);
    text += std::to_string(tensor_rank(r)) + "," + std::to_string(strict_tensor_rank(r)) + "," +
            std::to_string(lead.dim.degree()) + "," + lead.c.get_str() + "," + std::to_string(lead.exponent) +
            "," + ratio + "," + quote(r.key()) + "\n";
  }
  if (csv(c))
    emit(c, text);
  else
    emit_json(c, {{"n", c.n}, {"q", c.q}, {"group", c.sl ? "SL" : "GL"}, {"rows", rows}});
  return kOk;
}

// number of irreps of each tensor rank
int cmd_count(const Config& c) {
  require_weight(c, c.n);
  std::map<int, std::int64_t> exact;
  if (c.q) {
    require_q(c);
    for (auto& r : enumerate_gl_irreps(c.n, c.q)) ++exact[tensor_rank(r)];
  }
  json rows = json::array();
  std::string text = "k,gl_leading,sl_leading,exact_gl\n";
  for (int k = 0; k <= c.n; ++k) {
    if (c.k >= 0 && k != c.k) continue;
    auto gl = count_leading(c.n, k, false);
    json r{{"k", k}, {"gl", {{"leading", gl.text}, {"degree", gl.degree}, {"symbolic", gl.symbolic}}}};
    if (!gl.note.empty()) r["gl"]["note"] = gl.note;
    // the SL count is only defined from n = 3 on
    std::string sl_text;
    if (c.n >= 3) {
      auto sl = count_leading(c.n, k, true);
      r["sl"] = {{"leading", sl.text}, {"degree", sl.degree}, {"symbolic", sl.symbolic}};
      if (!sl.note.empty()) r["sl"]["note"] = sl.note;
      sl_text = sl.text;
    } else {
      r["sl"] = nullptr;
    }
    if (c.q) r["exact_gl"] = exact[k];
    rows.push_back(r);
    text += std::to_string(k) + "," + gl.text + "," + sl_text + "," + (c.q ? std::to_string(exact[k]) : "") + "\n";
  }
  if (csv(c))
    emit(c, text);
  else
    emit_json(c, {{"n", c.n}, {"q", c.q}, {"rows", rows}});
  return kOk;
}

int cmd_eta(const Config& c) {
  require(!c.tau.empty(), "--tau is required");
  require_weight(c, c.n);
  json j;
  try {
    j = json::parse(c.tau);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("--tau is not valid JSON: ") + e.what());
  }
  auto tau = pcf_from_json(j);
  auto img = eta(tau, c.n);
  emit_json(c, {{"n", c.n}, {"tau", to_json(tau)}, {"eta", to_json(img)}, {"rank", strict_tensor_rank(img)}});
  return kOk;
}

int cmd_pieri(const Config& c) {
  auto d = parse_partition(c.partition);
  require(c.m >= 0, "--m must be >= 0");
  require_weight(c, std::max(1, d.weight() + c.m));
  auto out = pieri_expand(d, c.m);
  if (csv(c)) {
    std::string text = "partition\n";
    for (auto& p : out) text += "\"" + p.str() + "\"\n";
    emit(c, text);
  } else {
    json arr = json::array();
    for (auto& p : out) arr.push_back(to_json(p));
    emit_json(c, {{"partition", to_json(d)}, {"m", c.m}, {"result", arr}});
  }
  return kOk;
}

int cmd_sps(const Config& c) {
  require_weight(c, c.n);
  if (csv(c)) {
    emit(c, sps_csv(c.n, c.max_weight));
    return kOk;
  }
  json rows = json::array();
  for (auto& d : partitions_of(c.n)) {
    auto r = sps_rep(d, c.max_weight);
    json row{{"partition", to_json(d)}, {"dim", to_json(r.dim)}, {"char_at_T", to_json(r.char_at_T)}};
    if (c.q) {
      require_q(c);
      row["dim_at_q"] = evaluate(r.dim, c.q).get_str();
      row["char_at_q"] = evaluate(r.char_at_T, c.q).get_str();
    }
    rows.push_back(row);
  }
  emit_json(c, {{"n", c.n}, {"rows", rows}});
  return kOk;
}

GroupKind parse_kind(const std::string& s) { return group_kind_from_string(s); }

int cmd_chartab(const Config& c) {
  auto kind = parse_kind(c.group);
  require(c.n >= 1, "--n must be >= 1");
  if (kind != GroupKind::Sym) require_q(c);
  auto cache = open_cache(c);
  std::cerr << "[glrank] building " << to_string(kind) << " n=" << c.n << " table\n";
  auto g = cache.group(kind, c.n, kind == GroupKind::Sym ? 2 : c.q, c.max_group);
  auto ct = cache.table(g, c.max_classes);
  std::vector<RankRow> rows;
  if (kind != GroupKind::Sym) rows = rank_report(ct);
  if (csv(c)) {
    std::string text = table_csv(ct);
    if (!rows.empty()) text += "\n" + rank_csv(ct, rows);
    emit(c, text);
    return kOk;
  }
  json j = to_json(ct);
  json ranks = json::array();
  for (auto& r : rows)
    ranks.push_back({{"irrep", r.irrep},
                     {"dim", r.dim},
                     {"char_at_T", r.char_at_T_text},
                     {"strict_rank", r.strict_rank},
                     {"rank", r.rank},
                     {"rank_via_Hk", r.rank_via_Hk},
                     {"rank_via_Hk_eigen", r.rank_via_Hk_eigen}});
  if (!rows.empty()) j["ranks"] = ranks;
  emit_json(c, j);
  return kOk;
}

int cmd_walk(const Config& c) {
  auto kind = parse_kind(c.group);
  require(kind != GroupKind::Sym, "walk needs --group GL or SL");
  require_q(c);
  require(c.n >= 2, "the transvection walk needs --n >= 2");
  require(c.steps >= 0, "--steps must be >= 0");
  if (c.mode == "mc") {
    auto r = mc_walk(c.n, *FqField::make(c.q), c.steps, c.trials, c.seed, c.workers);
    if (csv(c)) {
      std::string text = "fixed_dim,count\n";
      for (size_t i = 0; i < r.histogram.size(); ++i)
        text += std::to_string(i) + "," + std::to_string(r.histogram[i]) + "\n";
      emit(c, text);
    } else {
      json j = to_json(r);
      j["mode"] = "mc";
      emit_json(c, j);
    }
    return kOk;
  }
  require(c.mode == "exact" || c.mode == "fourier", "--mode must be exact, fourier or mc");
  auto cache = open_cache(c);
  std::cerr << "[glrank] building " << to_string(kind) << "_" << c.n << "(F_" << c.q << ") table\n";
  auto g = cache.group(kind, c.n, c.q, c.max_group);
  auto ct = cache.table(g, c.max_classes);
  auto rep = mixing_report(ct, c.steps);
  if (c.mode == "exact") {
    // replace the Fourier distances with element-level convolution
    std::cerr << "[glrank] convolving " << c.steps << " steps over " << g->size() << " elements\n";
    auto cls = transvection_elements(*g);
    auto dists = exact_convolution_steps(*g, cls, c.steps);
    auto u = uniform(*g);
    rep.mixing_time = -1;
    for (int l = 0; l <= c.steps; ++l) {
      auto& s = rep.steps[static_cast<size_t>(l)];
      s.tv = tv_distance(dists[static_cast<size_t>(l)], u);
      s.tv_d = s.tv.get_d();
      if (rep.mixing_time < 0 && s.tv < mpq_class(1, 4)) rep.mixing_time = l;
    }
  }
  if (csv(c)) {
    emit(c, mixing_csv(rep));
  } else {
    json j = to_json(rep);
    j["mode"] = c.mode;
    emit_json(c, j);
  }
  return kOk;
}

int cmd_verify(const Config& c) {
  require(c.level == "desk", "only --level desk is supported");
  std::set<int> only;
  std::stringstream ss(c.criteria);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) only.insert(std::stoi(tok));
  auto results = run_acceptance(only, &std::cerr);
  std::ostringstream os;
  print_results(os, results);
  emit(c, os.str());
  for (auto& r : results)
    if (!r.pass()) return kVerifyFail;
  return kOk;
}

int cmd_cache(const Config& c, const std::string& action) {
  auto cache = open_cache(c);
  std::string text;
  if (action == "list") {
    for (auto& e : cache.list()) text += e.name + "\t" + std::to_string(e.bytes) + "\n";
  } else if (action == "clear") {
    int n = cache.clear();
    std::cerr << "[glrank] removed " << n << " entries from " << cache.dir().string() << "\n";
  } else {
    bool all = true;
    for (auto& e : cache.verify()) {
      text += e.name + "\t" + (e.valid ? "ok" : "corrupt (deleted): " + e.problem) + "\n";
      all = all && e.valid;
    }
    emit(c, text);
    return all ? kOk : kVerifyFail;
  }
  emit(c, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glrank: tensor ranks, character ratios and transvection walks for GL_n(F_q) and SL_n(F_q)"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--out", c.out, "write the artifact here (atomically) instead of stdout");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", c.cache_dir, "cache directory (default $GLRANK_CACHE_DIR or ~/.cache/glrank)");
  app.add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-group", c.max_group, "group size cap")->check(CLI::PositiveNumber);
  app.add_option("--max-weight", c.max_weight, "partition weight cap")->check(CLI::PositiveNumber);
  app.add_option("--max-classes", c.max_classes, "conjugacy class cap")->check(CLI::PositiveNumber);

  auto with_nq = [&](CLI::App* s, bool need_n) {
    auto o = s->add_option("--n", c.n, "matrix size");
    if (need_n) o->required();
    s->add_option("--q", c.q, "field size");
  };
  auto* dims = app.add_subcommand("dims", "dimension range of irreps of each tensor rank");
  with_nq(dims, true);
  dims->add_option("--k", c.k, "only this rank");
  auto* ratios = app.add_subcommand("ratios", "transvection character ratio leading terms by rank");
  with_nq(ratios, true);
  ratios->add_flag("--sl", c.sl, "ratios for SL_n instead of GL_n");
  auto* count = app.add_subcommand("count", "number of irreps of each tensor rank");
  with_nq(count, true);
  count->add_option("--k", c.k, "only this rank");
  auto* eta_cmd = app.add_subcommand("eta", "the rank-k correspondence eta(tau) for GL_k -> GL_n");
  with_nq(eta_cmd, true);
  eta_cmd->add_option("--tau", c.tau, "PcfIrrep JSON of a GL_k irrep")->required();
  auto* pieri = app.add_subcommand("pieri", "Pieri expansion of a partition by a row of length m");
  pieri->add_option("--partition", c.partition, "e.g. 2,1 or [2,1]")->required();
  pieri->add_option("--m", c.m, "row length")->required();
  auto* sps = app.add_subcommand("sps", "dimensions and transvection characters of the rho_D");
  with_nq(sps, true);
  auto* chartab = app.add_subcommand("chartab", "oracle character table and rank report");
  with_nq(chartab, true);
  chartab->add_option("--group", c.group, "GL, SL or Sym")->check(CLI::IsMember({"GL", "SL", "Sym"}));
  auto* walk = app.add_subcommand("walk", "transvection random walk");
  with_nq(walk, true);
  walk->add_option("--group", c.group, "GL or SL")->check(CLI::IsMember({"GL", "SL"}));
  walk->add_option("--steps", c.steps, "number of steps");
  walk->add_option("--mode", c.mode, "exact, fourier or mc")->check(CLI::IsMember({"exact", "fourier", "mc"}));
  walk->add_option("--trials", c.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  walk->add_option("--seed", c.seed, "Monte Carlo seed");
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--level", c.level, "desk")->check(CLI::IsMember({"desk"}));
  verify->add_option("--criteria", c.criteria, "comma-separated criterion ids (default all)");
  auto* cache = app.add_subcommand("cache", "cache management");
  std::string action;
  cache->add_option("action", action, "list, clear or verify")
      ->required()
      ->check(CLI::IsMember({"list", "clear", "verify"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dims) return cmd_dims(c);
    if (*ratios) return cmd_ratios(c);
    if (*count) return cmd_count(c);
    if (*eta_cmd) return cmd_eta(c);
    if (*pieri) return cmd_pieri(c);
    if (*sps) return cmd_sps(c);
    if (*chartab) return cmd_chartab(c);
    if (*walk) return cmd_walk(c);
    if (*verify) return cmd_verify(c);
    if (*cache) return cmd_cache(c, action);
  } catch (const Error& e) {
    std::cerr << "glrank: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit:
        return kResource;
      case ErrorKind::Internal:
        return kInternal;
      default:
        return kUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "glrank: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "glrank: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
