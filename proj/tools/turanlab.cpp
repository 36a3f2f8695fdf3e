// turanlab: command-line front end.
//
// Exit codes: 0 ok / property holds, 1 property violated, 2 usage or
// precondition error, 3 search budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turanlab/cache.hpp"
#include "turanlab/checkers.hpp"
#include "turanlab/cli/manifest.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/io.hpp"
#include "turanlab/search.hpp"
#include "turanlab/serialize.hpp"
#include "turanlab/stability.hpp"

namespace {

using namespace turanlab;

enum Exit { kOk = 0, kViolated = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kOk;
  std::string stdout_text;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Hypergraph load(const std::string& path, RunManifest& manifest) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  manifest.add_input_file(path);
  return parse_hypergraph<1>(in);
}

struct ConstructArgs {
  std::string kind;
  std::string file;
  int n = 0, r = 3, ell = 3, add = 0, cap = -1;
  double fraction = 0.0, epsilon = 0.0, noise = 0.5;
  std::optional<std::uint64_t> seed;
  bool keep_cancellative = false;
  bool json = false;
};

std::uint64_t need_seed(const std::optional<std::uint64_t>& seed, const std::string& what) {
  if (!seed) throw UsageError(what + " is randomized: pass --seed");
  return *seed;
}

Outcome run_construct(const ConstructArgs& a, RunManifest& manifest) {
  Json params = Json::object();
  Hypergraph h;
  if (a.kind == "turan") {
    h = turan_hypergraph(a.n, a.r, a.ell);
    params = {{"n", a.n}, {"r", a.r}, {"ell", a.ell}};
  } else if (a.kind == "perturb") {
    if (a.file.empty()) throw UsageError("construct perturb needs an input file");
    auto seed = need_seed(a.seed, "construct perturb");
    manifest.seeds.push_back(seed);
    h = perturb(load(a.file, manifest), a.fraction, a.add, seed, a.keep_cancellative);
    params = {{"input", a.file},
              {"fraction", a.fraction},
              {"add", a.add},
              {"keep_cancellative", a.keep_cancellative},
              {"seed", seed}};
  } else if (a.kind == "random-cancellative") {
    auto seed = need_seed(a.seed, "construct random-cancellative");
    manifest.seeds.push_back(seed);
    h = random_maximal_cancellative<1>(a.n, seed);
    params = {{"n", a.n}, {"seed", seed}};
  } else if (a.kind == "triangle-free") {
    auto seed = need_seed(a.seed, "construct triangle-free");
    manifest.seeds.push_back(seed);
    h = random_triangle_free_near_bipartite<1>(a.n, a.epsilon, a.noise, seed);
    params = {{"n", a.n}, {"epsilon", a.epsilon}, {"noise", a.noise}, {"seed", seed}};
  } else if (a.kind == "k-family") {
    auto fam = k_family(a.r, a.ell, a.cap);
    if (a.json) {
      Json members = Json::array();
      for (const auto& m : fam.members) members.push_back(to_json(m));
      return {kOk, dump({{"construction", "k-family"},
                         {"parameters", {{"r", a.r}, {"ell", a.ell}, {"cap", a.cap}}},
                         {"family", fam.name},
                         {"member_count", fam.members.size()},
                         {"members", members}})};
    }
    std::ostringstream out;
    out << "# " << fam.name << ": " << fam.members.size() << " members\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) out << "# member " << i + 1 << "\n" << format_hypergraph(fam.members[i]);
    return {kOk, out.str()};
  } else {
    throw UsageError("unknown construction '" + a.kind + "'");
  }
  if (!a.json) return {kOk, format_hypergraph(h)};
  return {kOk, dump({{"construction", a.kind},
                     {"parameters", params},
                     {"edge_count", h.size()},
                     {"text", format_hypergraph(h)},
                     {"hypergraph", to_json(h)}})};
}

CertificateReport predicate_report(const std::string& name, bool holds, std::string witness) {
  CertificateReport rep;
  rep.name = name;
  rep.holds = holds;
  if (!holds) rep.witness = std::move(witness);
  return rep;
}

Outcome run_verify(const std::string& cert, const std::string& file, int ell, RunManifest& manifest) {
  auto h = load(file, manifest);
  CertificateReport rep;
  if (cert == "fisher-ryan") {
    if (ell < 1) throw UsageError("fisher-ryan needs --ell");
    rep = fisher_ryan_certificate(h, ell);
  } else if (cert == "link-count") {
    rep = link_count_identity(h);
  } else if (cert == "reciprocal-link") {
    rep = reciprocal_link_certificate(h);
  } else if (cert == "edge-count-chain") {
    rep = edge_count_chain_certificate(h);
  } else if (cert == "mantel-link") {
    rep = mantel_link_bound(h);
  } else if (cert == "cancellative") {
    auto w = find_cancellative_violation(h, true);
    rep = predicate_report("cancellative", !w, w ? (*w)[0].to_string() + " " + (*w)[1].to_string() + " " +
                                                       (*w)[2].to_string()
                                                 : "");
  } else if (cert == "k-free") {
    if (ell < h.r()) throw UsageError("k-free needs --ell >= r");
    auto g = auxiliary_graph(h);
    auto clique = find_clique(g, ell + 1);
    std::string w;
    if (clique)
      for (auto v : *clique) w += (w.empty() ? "" : " ") + std::to_string(v);
    rep = predicate_report("k-free(" + std::to_string(ell) + ")", !clique, "covered clique " + w);
  } else {
    throw UsageError("unknown certificate '" + cert +
                     "' (fisher-ryan, link-count, reciprocal-link, edge-count-chain, mantel-link, cancellative, k-free)");
  }
  return {rep.holds ? kOk : kViolated, dump(to_json(rep))};
}

struct SearchArgs {
  int n = 0, r = 3, ell = 0, threads = 1, symmetry_depth = 3;
  std::string predicate;
  std::string ordering = "colex";
  std::uint64_t budget = 4'000'000'000ULL;
  bool force = false;
  bool witnesses = false;
};

Json search_summary(const CacheEntry& e) {
  return {{"n", e.key.n},
          {"r", e.key.r},
          {"predicate", e.key.predicate},
          {"ell", e.key.ell},
          {"complete", e.complete},
          {"value", e.value},
          {"extremal_classes", e.extremal_classes},
          {"nodes_explored", e.nodes_explored},
          {"initial_upper_bound", e.initial_upper_bound}};
}

Outcome run_search(const SearchArgs& a, ResultCache& cache) {
  auto pred = parse_predicate(a.predicate, a.ell);
  SearchConfig config;
  if (a.ordering == "colex")
    config.ordering = Ordering::Colex;
  else if (a.ordering == "degree-greedy")
    config.ordering = Ordering::DegreeGreedy;
  else
    throw UsageError("unknown ordering '" + a.ordering + "'");
  config.thread_count = a.threads;
  config.node_budget = a.budget;
  config.symmetry_depth = a.symmetry_depth;
  const CacheKey key{pred.id(), a.n, a.r, pred.ell};

  auto cached = cache.lookup(key);
  for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
  if (cached && !a.force && !a.witnesses) {
    std::cerr << "cache hit: " << cache.path() << "\n";
    return {kOk, dump(search_summary(*cached))};
  }

  auto rec = extremal_number(a.n, a.r, pred, config);
  auto entry = make_cache_entry(rec, pred.ell, config);
  if (rec.complete && cached && cached->value != rec.value) {
    std::cerr << "error: recomputed value " << rec.value << " disagrees with cached value " << cached->value
              << " for " << key.predicate << " n=" << key.n << " r=" << key.r << "; cache left untouched\n";
    return {kViolated, ""};
  }
  cache.store(entry);
  Json out = search_summary(entry);
  if (a.witnesses) {
    Json ws = Json::array();
    for (const auto& w : rec.witnesses) ws.push_back(to_json(w));
    out["witness_cap_hit"] = rec.witness_cap_hit;
    out["witnesses"] = std::move(ws);
  }
  if (!rec.complete) {
    std::cerr << "node budget exhausted after " << rec.nodes_explored << " nodes; no value reported\n";
    return {kBudget, dump(out)};
  }
  return {kOk, dump(out)};
}

struct StabilityArgs {
  std::string method;
  std::string file;
  int ell = 3, r = 3;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

std::string text_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) s += (i ? " | " : "") + p.blocks[i].to_string();
  return s;
}

Outcome run_stability(const StabilityArgs& a, RunManifest& manifest) {
  auto h = load(a.file, manifest);
  std::uint64_t seed = 0;
  if (h.n() > kExactCutLimit && a.method != "cancellative") {
    seed = need_seed(a.seed, "stability " + a.method + " with n > " + std::to_string(kExactCutLimit));
    manifest.seeds.push_back(seed);
  }
  if (a.method == "bipartite") {
    auto rep = bipartite_distance_analysis(h, seed);
    const int code = rep.all_hold() ? kOk : kViolated;
    if (a.json) return {code, dump(to_json(rep))};
    std::ostringstream out;
    out << "partition " << text_partition(rep.partition) << "\n"
        << "epsilon " << format_decimal(rep.epsilon) << "\ndelta " << format_decimal(rep.delta) << "\nbad_edges "
        << rep.bad.size() << "\nmissing " << rep.missing << "\nDelta " << rep.max_internal_degree << "\ncase "
        << rep.case_taken << "\n";
    for (const auto& c : rep.inequalities)
      out << (c.holds ? "ok   " : "FAIL ") << c.name << ": " << c.lhs_exact << " <= " << c.rhs_exact << "\n";
    return {code, out.str()};
  }
  StabilityReport rep;
  if (a.method == "cancellative")
    rep = extract_partition_cancellative(h);
  else if (a.method == "kfree")
    rep = extract_partition_kfree(h, a.ell, seed);
  else if (a.method == "generalized")
    rep = extract_partition_generalized(h, a.ell, a.r, seed);
  else
    throw UsageError("unknown stability method '" + a.method + "' (cancellative, kfree, generalized, bipartite)");
  const int code = rep.invariants_hold() ? kOk : kViolated;
  if (a.json) return {code, dump(to_json(rep))};
  std::ostringstream out;
  out << "partition " << text_partition(rep.partition) << "\n"
      << "epsilon " << format_decimal(rep.epsilon) << "\ndelta " << format_decimal(rep.delta) << "\nbad_edges "
      << rep.bad_edges << "\n";
  if (rep.witness_chain) {
    const auto& w = *rep.witness_chain;
    out << "T " << w.t.to_string() << " pair (" << w.pair.first << "," << w.pair.second << ") edge {" << w.x << ","
        << w.y << "}" << (rep.degenerate ? " degenerate" : "") << "\n";
  }
  for (const auto& c : rep.invariants)
    if (!c.holds) out << "FAIL " << c.name << "\n";
  return {code, out.str()};
}

struct ScanArgs {
  std::string family = "cancellative";
  std::vector<int> sizes;
  std::vector<double> params;
  std::optional<std::uint64_t> seed;
  int seed_count = 5;
  double noise = 0.5;
  int threads = 1;
};

Outcome run_scan(const ScanArgs& a, RunManifest& manifest) {
  ScanSpec spec;
  if (a.family == "cancellative")
    spec.family = ScanFamily::Cancellative;
  else if (a.family == "kfree")
    spec.family = ScanFamily::KFree;
  else if (a.family == "triangle-free")
    spec.family = ScanFamily::TriangleFree;
  else
    throw UsageError("unknown scan family '" + a.family + "'");
  auto base = need_seed(a.seed, "scan");
  if (a.seed_count < 1) throw UsageError("--seeds must be positive");
  spec.sizes = a.sizes;
  spec.parameters = a.params;
  spec.noise = a.noise;
  for (int i = 0; i < a.seed_count; ++i) spec.seeds.push_back(base + static_cast<std::uint64_t>(i));
  manifest.seeds = spec.seeds;
  auto rows = epsilon_delta_scan(spec, a.threads);
  int code = kOk;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      std::cerr << "row n=" << r.n << " seed=" << r.seed << " param=" << r.parameter << ": " << r.error << "\n";
      code = kViolated;
    } else if (!r.inequalities_hold) {
      std::cerr << "row n=" << r.n << " seed=" << r.seed << ": invariant failure\n";
      code = kViolated;
    } else if (r.flagged) {
      std::cerr << "flag: n=" << r.n << " seed=" << r.seed << " delta=" << format_decimal(r.delta)
                << " exceeds the linear bound for epsilon=" << format_decimal(r.epsilon) << "\n";
    }
  }
  return {code, scan_csv(rows)};
}

struct CacheArgs {
  std::string action = "list";
  std::string predicate;
  int n = 0, r = 3, ell = 0;
};

Outcome run_cache(const CacheArgs& a, ResultCache& cache) {
  if (a.action == "list") {
    Json out = Json::array();
    for (const auto& e : cache.entries()) out.push_back(to_json(e));
    for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
    return {kOk, dump(out)};
  }
  if (a.action == "lookup") {
    auto pred = parse_predicate(a.predicate, a.ell);
    auto e = cache.lookup({pred.id(), a.n, a.r, pred.ell});
    for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
    if (!e) return {kViolated, "null\n"};
    return {kOk, dump(to_json(*e))};
  }
  throw UsageError("unknown cache action '" + a.action + "' (list, lookup)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turán-type extremal problems: constructions, certificates, exact search, stability partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_flag;
  bool want_manifest = false;
  app.add_option("--cache", cache_flag, "result cache path (default $TURANLAB_CACHE or ./turanlab-cache.jsonl)");
  app.add_flag("--manifest", want_manifest, "write a run manifest to standard error");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit a hypergraph in the text format");
  construct->add_option("kind", ca.kind, "turan | perturb | random-cancellative | triangle-free | k-family")->required();
  construct->add_option("file", ca.file, "input for perturb");
  construct->add_option("--n", ca.n);
  construct->add_option("--r", ca.r);
  construct->add_option("--ell", ca.ell);
  construct->add_option("--fraction", ca.fraction, "fraction of edges to delete");
  construct->add_option("--add", ca.add, "number of absent r-sets to add");
  construct->add_option("--epsilon", ca.epsilon);
  construct->add_option("--noise", ca.noise);
  construct->add_option("--cap", ca.cap, "vertex cap for k-family members");
  construct->add_option("--seed", ca.seed);
  construct->add_flag("--keep-cancellative", ca.keep_cancellative);
  construct->add_flag("--json", ca.json);

  std::string cert, verify_file;
  int verify_ell = 0;
  auto* verify = app.add_subcommand("verify", "run a certificate and print its report as JSON");
  verify->add_option("certificate", cert)->required();
  verify->add_option("file", verify_file)->required();
  verify->add_option("--ell", verify_ell);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact extremal number by exhaustive search");
  search->add_option("--n", sa.n)->required();
  search->add_option("--r", sa.r)->required();
  search->add_option("--predicate", sa.predicate, "cancellative | k-free | triangle-free")->required();
  search->add_option("--ell", sa.ell);
  search->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
  search->add_option("--budget", sa.budget, "node budget")->check(CLI::PositiveNumber);
  search->add_option("--ordering", sa.ordering, "colex | degree-greedy");
  search->add_option("--symmetry-depth", sa.symmetry_depth);
  search->add_flag("--force", sa.force, "recompute even on a cache hit");
  search->add_flag("--witnesses", sa.witnesses, "recompute and list one witness per extremal class");

  StabilityArgs st;
  auto* stability = app.add_subcommand("stability", "extract a near-Turán partition");
  stability->add_option("method", st.method, "cancellative | kfree | generalized | bipartite")->required();
  stability->add_option("file", st.file)->required();
  stability->add_option("--ell", st.ell);
  stability->add_option("--r", st.r);
  stability->add_option("--seed", st.seed, "required when the cut falls back to local search (n > 20)");
  stability->add_flag("--json", st.json);

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "epsilon/delta table over perturbed instances (CSV)");
  scan->add_option("--family", sc.family, "cancellative | kfree | triangle-free");
  scan->add_option("--n", sc.sizes, "vertex counts")->required()->delimiter(',');
  scan->add_option("--param", sc.params, "deletion fractions, or target epsilons for triangle-free")
      ->required()
      ->delimiter(',');
  scan->add_option("--seed", sc.seed, "first seed");
  scan->add_option("--seeds", sc.seed_count, "number of consecutive seeds");
  scan->add_option("--noise", sc.noise);
  scan->add_option("--threads", sc.threads)->check(CLI::PositiveNumber);

  CacheArgs cc;
  auto* cache_cmd = app.add_subcommand("cache", "inspect the result cache");
  cache_cmd->add_option("action", cc.action, "list | lookup");
  cache_cmd->add_option("--predicate", cc.predicate);
  cache_cmd->add_option("--n", cc.n);
  cache_cmd->add_option("--r", cc.r);
  cache_cmd->add_option("--ell", cc.ell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunManifest manifest;
  manifest.command_line.assign(argv, argv + argc);
  ResultCache cache(resolve_cache_path(cache_flag));
  Outcome outcome;
  try {
    if (*construct)
      outcome = run_construct(ca, manifest);
    else if (*verify)
      outcome = run_verify(cert, verify_file, verify_ell, manifest);
    else if (*search)
      outcome = run_search(sa, cache);
    else if (*stability)
      outcome = run_stability(st, manifest);
    else if (*scan)
      outcome = run_scan(sc, manifest);
    else if (*cache_cmd)
      outcome = run_cache(cc, cache);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CacheError& e) {
    std::cerr << "cache: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << outcome.stdout_text << std::flush;
  if (want_manifest) {
    manifest.add_output("stdout", outcome.stdout_text);
    manifest.timestamp = utc_timestamp();
    std::cerr << manifest.to_json().dump(2) << "\n";
  }
  return outcome.code;
}
