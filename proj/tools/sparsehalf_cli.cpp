// sparsehalf: graph generation, sparse-half selection, exact oracle and
// certified inequalities. JSON records on stdout, summaries on stderr.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "sparsehalf/certify.hpp"
#include "sparsehalf/closed_form.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/pipeline.hpp"
#include "sparsehalf/serialize.hpp"
#include "sparsehalf/structure.hpp"

namespace {

using namespace sparsehalf;
using namespace sparsehalf::gen;
using nlohmann::json;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kBudget = 4, kViolation = 5 };

std::string g_command_echo;

json rational_json(const Rational& q) {
  return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

// Accepts "p/q", integers and plain decimals such as 0.003.
Rational parse_rational(const std::string& s) {
  static const std::regex decimal(R"(^([+-]?)(\d*)\.(\d+)$)");
  static const std::regex fraction(R"(^[+-]?\d+(/\d+)?$)");
  std::smatch m;
  if (std::regex_match(s, m, decimal)) {
    BigInt scale = 1;
    for (std::size_t i = 0; i < m[3].length(); ++i) scale *= 10;
    const BigInt whole(m[2].length() ? m[2].str() : std::string("0"));
    Rational q = Rational(whole) + Rational(BigInt(m[3].str()), scale);
    return m[1] == "-" ? -q : q;
  }
  if (std::regex_match(s, fraction)) {
    Rational q(s);
    return q;
  }
  throw ParseError("not a rational number: '" + s + "'");
}

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw PreconditionError("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::vector<Graph> load_graphs(const std::string& path) {
  if (path == "-") return read_graph6(std::cin);
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return read_graph6(in);
}

json graph_header(const Graph& g, std::size_t index) {
  return {{"tool_version", SPARSEHALF_VERSION},
          {"command", g_command_echo},
          {"record", index},
          {"graph6", to_graph6(g)},
          {"n", g.n()},
          {"e", g.edge_count()},
          {"c", rational_json(g.density())}};
}

// Runs `work` for every graph on `jobs` threads; records are emitted in input
// order.
void for_each_record(const std::vector<Graph>& graphs, std::size_t jobs,
                     const std::function<json(const Graph&, std::size_t)>& work) {
  std::vector<json> out(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      json rec = graph_header(graphs[i], i);
      json body = work(graphs[i], i);
      rec.update(body);
      rec["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      out[i] = std::move(rec);
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, graphs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& rec : out) std::cout << rec.dump() << '\n';
  std::cout.flush();
}

// Error records carry an exit code so the batch keeps running.
json error_record(const std::exception& e, int code) {
  return {{"error", e.what()}, {"exit_code", code}};
}

int worst_code(const std::vector<int>& codes) {
  int worst = kOk;
  for (int c : codes) worst = std::max(worst, c);
  return worst;
}

// ---- gen -------------------------------------------------------------------

Graph named_graph(const std::string& name, const std::vector<std::string>& args, std::size_t& used) {
  auto need = [&](std::size_t k) {
    if (args.size() < used + k) throw PreconditionError("'" + name + "' needs " + std::to_string(k) + " parameter(s)");
  };
  if (name == "c5") return c5();
  if (name == "petersen") return petersen();
  if (name == "clebsch") return clebsch();
  if (name == "complete") {
    need(1);
    return complete(parse_size(args[used++]));
  }
  if (name == "cycle") {
    need(1);
    return cycle(parse_size(args[used++]));
  }
  if (name == "hypercube") {
    need(1);
    return hypercube(parse_size(args[used++]));
  }
  if (name == "turan") {
    need(2);
    const std::size_t r = parse_size(args[used++]);
    return turan(r, parse_size(args[used++]));
  }
  throw PreconditionError("unknown generator '" + name + "'");
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params) {
  Graph g;
  std::size_t used = 0;
  if (kind == "blowup" || kind == "blow_up") {
    if (params.size() < 2) throw PreconditionError("blowup needs <base> [base params] <size>");
    std::size_t consumed = 1;
    Graph base = named_graph(params[0], params, consumed);
    if (consumed + 1 != params.size()) throw PreconditionError("blowup needs exactly one block size after the base");
    g = blow_up(base, parse_size(params.back()));
    used = params.size();
  } else if (kind == "circulant") {
    if (params.empty()) throw PreconditionError("circulant needs <n> <jump>...");
    std::vector<std::size_t> jumps;
    for (std::size_t i = 1; i < params.size(); ++i) jumps.push_back(parse_size(params[i]));
    g = circulant(parse_size(params[0]), jumps);
    used = params.size();
  } else {
    g = named_graph(kind, params, used);
  }
  if (used != params.size()) throw PreconditionError("unexpected parameter '" + params[used] + "'");
  std::cout << to_graph6(g) << '\n';
  return kOk;
}

// ---- sparse-half -----------------------------------------------------------

json explain_json() {
  return {{"sparse_density_max", to_string(thresholds::kSparseDensity)},
          {"medium_density_max", to_string(thresholds::kMediumDensity)},
          {"dense_density_min", to_string(thresholds::kDenseDensity)},
          {"dense_min_degree", to_string(thresholds::kDenseMinDegree)},
          {"half_threshold", to_string(thresholds::kHalfEdgeFraction)},
          {"lambda", to_string(thresholds::kLambda)}};
}

int cmd_sparse_half(const std::string& file, const SparseHalfOptions& opts, bool explain, std::size_t jobs) {
  const auto graphs = load_graphs(file);
  std::vector<int> codes(graphs.size(), kOk);
  for_each_record(graphs, jobs, [&](const Graph& g, std::size_t i) -> json {
    try {
      const SparseHalfResult r = find_sparse_half(g, opts);
      json j = json::parse(to_json(r));
      json rec{{"result", j}};
      if (explain) rec["thresholds"] = explain_json();
      // A regular K4-free graph whose exact minimum exceeds n^2/18.
      if (r.oracle && r.regular && !opts.allow_k4 && r.target == g.n() / 2 &&
          compare_with_n2_over_18(r.oracle->minimum, g.n()) == HalfVerdict::Exceeds) {
        rec["conjecture_violation"] = true;
        rec["reproducer"] = to_graph6(g);
        codes[i] = kViolation;
      }
      return rec;
    } catch (const CapExceeded& e) {
      codes[i] = kPrecondition;
      return error_record(e, kPrecondition);
    } catch (const PreconditionError& e) {
      codes[i] = kPrecondition;
      return error_record(e, kPrecondition);
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (codes[i] == kViolation)
      std::cerr << "CONJECTURE-VIOLATION: record " << i << " reproducer " << to_graph6(graphs[i]) << '\n';
  std::cerr << graphs.size() << " record(s) processed\n";
  return worst_code(codes);
}

// ---- oracle / verify-extremal / bipartite ----------------------------------

int cmd_oracle(const std::string& file, std::optional<std::size_t> size, const OracleOptions& oopts, std::size_t jobs) {
  const auto graphs = load_graphs(file);
  std::vector<int> codes(graphs.size(), kOk);
  for_each_record(graphs, jobs, [&](const Graph& g, std::size_t i) -> json {
    const std::size_t k = size.value_or(g.n() / 2);
    try {
      const OracleResult r = min_edges_k_subset(g, k, oopts);
      json j = json::parse(to_json(r, k));
      j["half_verdict"] = k == g.n() / 2 ? to_string(compare_with_n2_over_18(r.minimum, g.n())) : "n/a";
      return j;
    } catch (const PreconditionError& e) {
      codes[i] = kPrecondition;
      return error_record(e, kPrecondition);
    }
  });
  return worst_code(codes);
}

CharacterizationKind parse_kind(const std::string& s) {
  if (s == "regular") return CharacterizationKind::RegularK4Free;
  if (s == "triangle-free") return CharacterizationKind::TriangleFreeLocalDensity;
  if (s == "bipartite") return CharacterizationKind::BipartiteLocalDensity;
  throw PreconditionError("unknown characterization '" + s + "'");
}

int cmd_verify_extremal(const std::string& file, const std::string& kind_name, const std::optional<std::string>& alpha_s,
                        const OracleOptions& oopts) {
  const CharacterizationKind kind = parse_kind(kind_name);
  std::optional<Rational> alpha;
  if (alpha_s) alpha = parse_rational(*alpha_s);
  const auto graphs = load_graphs(file);
  int code = kOk;
  std::size_t strict = 0, extremal = 0;
  // Sequential so that a violation stops the run at once.
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    json rec = graph_header(graphs[i], i);
    try {
      const ExtremalReport r = check_extremal_characterization(graphs[i], kind, alpha, oopts);
      rec.update(json::parse(to_json(r)));
      rec["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      std::cout << rec.dump() << '\n';
      if (r.verdict == Verdict::Violates) {
        std::cout.flush();
        std::cerr << "VIOLATES: record " << i << " reproducer " << r.reproducer << "; aborting\n";
        return kViolation;
      }
      (r.verdict == Verdict::ConformsStrict ? strict : extremal)++;
    } catch (const PreconditionError& e) {
      rec.update(error_record(e, kPrecondition));
      std::cout << rec.dump() << '\n';
      code = kPrecondition;
    }
  }
  std::cerr << strict << " conforms-strict, " << extremal << " conforms-extremal\n";
  return code;
}

int cmd_bipartite(const std::string& file, const SparseHalfOptions& opts, std::size_t jobs) {
  const auto graphs = load_graphs(file);
  std::vector<int> codes(graphs.size(), kOk);
  for_each_record(graphs, jobs, [&](const Graph& g, std::size_t i) -> json {
    try {
      return json::parse(to_json(make_bipartite(g, opts)));
    } catch (const PreconditionError& e) {
      codes[i] = kPrecondition;
      return error_record(e, kPrecondition);
    }
  });
  return worst_code(codes);
}

// ---- certify ---------------------------------------------------------------

int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const SignCertificate cert = certificate_from_json(ss.str());
  const ReplayReport r = replay(cert);
  json j{{"replay", path},
         {"function", cert.function},
         {"proved", r.proved},
         {"boxes_checked", r.boxes_checked},
         {"problems", r.problems}};
  std::cout << j.dump() << '\n';
  std::cerr << "replay " << path << ": " << (r.proved ? "proved" : "NOT reproduced") << '\n';
  return r.proved ? kOk : kViolation;
}

int cmd_certify(const std::string& target, const std::optional<std::string>& margin, std::uint64_t budget,
                const std::optional<std::string>& out) {
  std::vector<std::string> ids;
  bool closed_forms = false;
  if (target == "all") {
    ids = {"h", "k", "ell", "m"};
    closed_forms = true;
  } else if (target == "closed-forms") {
    closed_forms = true;
  } else {
    (void)certified_function(target);
    ids = {target};
  }
  if (margin && ids.size() != 1) throw PreconditionError("--margin needs a single function");
  const bool out_is_dir = out && ids.size() > 1;
  if (out_is_dir) std::filesystem::create_directories(*out);

  int code = kOk;
  for (const auto& id : ids) {
    CertifyOptions opts;
    opts.budget = budget;
    if (margin) opts.margin = parse_rational(*margin);
    const auto t0 = std::chrono::steady_clock::now();
    const SignCertificate cert = certify_sign(certified_function(id), opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json j{{"function", id},
           {"status", to_string(cert.status)},
           {"sign", to_string(cert.sign)},
           {"margin", to_string(cert.margin)},
           {"boxes", cert.boxes.size()},
           {"boxes_evaluated", cert.boxes_evaluated},
           {"undecided", cert.undecided.size()},
           {"wall_ms", ms}};
    if (!cert.boxes.empty()) j["certified_extreme"] = certified_extreme(cert);
    json collars = json::array();
    for (const auto& c : cert.collars)
      collars.push_back({{"name", c.name}, {"locus", c.locus}, {"lower", c.lower}, {"passed", c.passed}});
    j["collars"] = collars;
    if (out) {
      const std::string path = out_is_dir ? (std::filesystem::path(*out) / (id + ".cert.json")).string() : *out;
      std::ofstream f(path);
      if (!f) throw PreconditionError("cannot write '" + path + "'");
      f << certificate_to_json(cert) << '\n';
      j["out"] = path;
    }
    std::cout << j.dump() << '\n';
    std::cerr << id << ": " << to_string(cert.status) << " (" << cert.boxes.size() << " boxes, margin "
              << to_string(cert.margin) << ")\n";
    if (cert.status == CertStatus::BudgetExhausted) {
      for (const auto& b : cert.undecided) {
        std::cerr << "  undecided";
        for (const auto& iv : b) std::cerr << " [" << iv.lo << ", " << iv.hi << "]";
        std::cerr << '\n';
        if (&b - cert.undecided.data() >= 9) break;
      }
      code = std::max<int>(code, kBudget);
    } else if (cert.status == CertStatus::Failed) {
      code = kViolation;
    }
  }
  if (closed_forms) {
    for (const auto& c : closed_form_checks()) {
      std::cout << to_json(c) << '\n';
      if (!c.passed) {
        std::cerr << "closed form " << c.name << " FAILED: " << c.detail << '\n';
        code = kViolation;
      }
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_command_echo += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Sparse halves in K4-free graphs: selectors, exact oracle and certified inequalities"};
  app.set_version_flag("--version", std::string(SPARSEHALF_VERSION));
  app.require_subcommand(1);

  std::size_t jobs = 1;
  app.add_option("-j,--jobs", jobs, "Worker threads for per-graph records")->check(CLI::PositiveNumber);

  OracleOptions oopts;
  bool override_cap = false;

  auto* gen = app.add_subcommand("gen", "Emit a graph6 line: turan r n | blowup <base> s | complete n | cycle n | "
                                        "petersen | c5 | clebsch | hypercube d | circulant n j...");
  std::string gen_kind;
  std::vector<std::string> gen_params;
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("params", gen_params);

  auto* sh = app.add_subcommand("sparse-half", "Find a sparse half of every graph in a graph6 file");
  std::string sh_file;
  std::string route = "auto";
  std::optional<std::size_t> half_size;
  bool allow_k4 = false, explain = false;
  sh->add_option("file", sh_file, "graph6 file, '-' for stdin")->required();
  sh->add_option("--route", route, "auto|sparse|medium|dense|oracle");
  sh->add_option("--half-size", half_size, "Subset size (default floor(n/2))");
  sh->add_flag("--allow-k4", allow_k4, "Run best-effort on graphs with a K4");
  sh->add_flag("--explain", explain, "Include the dispatch thresholds");
  sh->add_flag("--override-cap", override_cap, "Allow the oracle above its cap");

  auto* orc = app.add_subcommand("oracle", "Exact minimum edges over k-subsets");
  std::string orc_file;
  std::optional<std::size_t> orc_size;
  orc->add_option("file", orc_file)->required();
  orc->add_option("--size", orc_size, "Subset size (default floor(n/2))");
  orc->add_flag("--override-cap", override_cap, "Allow up to 64 vertices");

  auto* ve = app.add_subcommand("verify-extremal", "Check an extremal characterization with the oracle");
  std::string ve_file, ve_kind = "regular";
  std::optional<std::string> ve_alpha;
  ve->add_option("file", ve_file)->required();
  ve->add_option("--kind", ve_kind, "regular|triangle-free|bipartite");
  ve->add_option("--alpha", ve_alpha, "Subset fraction for the local-density kinds");
  ve->add_flag("--override-cap", override_cap, "Allow up to 64 vertices");

  auto* bip = app.add_subcommand("bipartite", "Remove edges to make each graph bipartite");
  std::string bip_file;
  bip->add_option("file", bip_file)->required();

  auto* cert = app.add_subcommand("certify", "Certify h|k|ell|m (or g, quad_min, case1_poly), closed-forms or all");
  std::string cert_target;
  std::optional<std::string> cert_margin, cert_out, cert_replay;
  std::uint64_t budget = 1'000'000;
  cert->add_option("target", cert_target);
  cert->add_option("--margin", cert_margin, "Margin to clear, e.g. 0.003 or 3/1000");
  cert->add_option("--budget", budget, "Maximum box evaluations");
  cert->add_option("--out", cert_out, "Certificate file (a directory for 'all')");
  cert->add_option("--replay", cert_replay, "Replay a certificate file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    oopts = oracle_options_from_env();
    oopts.allow_above_cap = override_cap;
    if (gen->parsed()) return cmd_gen(gen_kind, gen_params);
    if (sh->parsed()) {
      SparseHalfOptions opts;
      opts.route = parse_route(route);
      opts.target_size = half_size;
      opts.allow_k4 = allow_k4;
      opts.oracle = oopts;
      return cmd_sparse_half(sh_file, opts, explain, jobs);
    }
    if (orc->parsed()) return cmd_oracle(orc_file, orc_size, oopts, jobs);
    if (ve->parsed()) return cmd_verify_extremal(ve_file, ve_kind, ve_alpha, oopts);
    if (bip->parsed()) {
      SparseHalfOptions opts;
      opts.oracle = oopts;
      return cmd_bipartite(bip_file, opts, jobs);
    }
    if (cert->parsed()) {
      if (cert_replay) return cmd_replay(*cert_replay);
      if (cert_target.empty()) throw PreconditionError("certify needs a target or --replay");
      return cmd_certify(cert_target, cert_margin, budget, cert_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
