#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "armlab/checkers.hpp"
#include "armlab/closure.hpp"
#include "armlab/explorer.hpp"
#include "armlab/json_io.hpp"
#include "armlab/matroid.hpp"
#include "armlab/parallel.hpp"
#include "armlab/rigidity.hpp"

namespace {

using namespace armlab;

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Command-line scope: "exhaustive" or "sampled:COUNT" (seed from --seed).
Scope parse_cli_scope(const std::string& text, bool seed_set, std::uint64_t seed) {
  if (text == "exhaustive") return Scope::Exhaustive();
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    std::string count_part = text.substr(prefix.size());
    if (!count_part.empty() &&
        count_part.find_first_not_of("0123456789") == std::string::npos) {
      if (!seed_set)
        throw UsageError("--seed is required with a sampled scope");
      return Scope::Sampled(seed, std::stoull(count_part));
    }
  }
  throw UsageError("--scope must be \"exhaustive\" or \"sampled:COUNT\"");
}

// Line sink honoring --out; stdout when no path is given.
class LineSink {
 public:
  explicit LineSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open \"" + path + "\" for writing");
    }
  }
  void line(const std::string& text) { stream() << text << "\n"; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw ParseError("write failure on output file");
  }

 private:
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  std::ofstream file_;
};

int run_build(int n, int m, std::uint64_t seed, const std::string& embedding_path,
              const std::string& out) {
  if (m < 1 || n < m + 1 || n > kMaxVertices)
    throw UsageError("build needs 1 <= m and m+1 <= n <= 8");
  std::optional<Matroid> mat;
  if (!embedding_path.empty()) {
    Embedding p = embedding_from_json(parse_file(embedding_path));
    if (p.n != n || p.m != m)
      throw UsageError("embedding file disagrees with --n/--m");
    if (!certify_generic(p, m)) {
      std::cerr << "error: embedding failed the genericity certificate\n";
      return 1;
    }
    mat = matroid_from_embedding(p, seed);
  } else if (m == 1) {
    mat = cycle_matroid_arm(n);
  } else {
    mat = generic_rigidity_matroid(n, m, seed);
  }
  LineSink sink(out);
  sink.line(dump_canonical(to_json(*mat)));
  sink.finish();
  return 0;
}

std::vector<AxiomReport> run_suite(const Matroid& mat, int m,
                                   const std::string& suite, Scope scope) {
  if (suite == "prop6") return {is_arm_prop6(mat, m)};
  if (suite == "C") return {check_C1(mat, m, scope), check_C2(mat, m, scope)};
  if (suite == "D") return {check_D(mat, m)};
  if (suite == "H") return {check_H(mat, m)};
  if (suite == "B") return {check_B(mat, m)};
  if (suite == "Z") return {check_Z(mat, m)};
  if (suite == "laman") return {check_laman_independents(mat, m, scope)};
  if (suite == "ext") return {check_extension_lemma(mat, m)};
  if (suite == "hm") return {check_hm_subset(mat, m)};
  if (suite == "connect") return {check_connect(mat, m, scope)};
  if (suite == "2dim") return {check_theorem_2dim(mat, m)};
  if (suite == "twoparts") return {check_twoparts(mat, m)};
  if (suite == "bottom") return {check_bottom(mat, m)};
  throw UsageError("unknown suite \"" + suite + "\"");
}

int run_check(const std::string& matroid_path, int m, const std::string& suites,
              const std::string& scope_text, bool seed_set, std::uint64_t seed) {
  if (m < 1) throw UsageError("--m must be positive");
  Scope scope = parse_cli_scope(scope_text, seed_set, seed);
  Matroid mat = matroid_from_json(parse_file(matroid_path));
  std::vector<std::string> tokens;
  std::stringstream ss(suites);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) tokens.push_back(token);
  if (tokens.empty()) throw UsageError("--suites selected nothing");
  bool all_passed = true;
  for (const std::string& t : tokens) {
    for (const AxiomReport& rep : run_suite(mat, m, t, scope)) {
      std::cout << dump_canonical(to_json(rep)) << "\n";
      all_passed = all_passed && rep.passed;
    }
  }
  std::cout.flush();
  return all_passed ? 0 : 1;
}

int run_enumerate(const std::string& matroid_path, const std::string& what,
                  const std::string& out) {
  Matroid mat = matroid_from_json(parse_file(matroid_path));
  FamilyReport fam;
  if (what == "circuits") fam = mat.circuits();
  else if (what == "cocircuits") fam = mat.cocircuits();
  else if (what == "hyperplanes") fam = mat.hyperplanes();
  else if (what == "flats") fam = mat.flats();
  else if (what == "bases") fam = mat.bases_report();
  else throw UsageError("unknown family \"" + what + "\"");
  LineSink sink(out);
  for (const EdgeSet& e : fam.members) sink.line(dump_canonical(to_json(e)));
  sink.finish();
  return 0;
}

int run_families(int n, int m, bool hm, bool hm1, bool big, bool st,
                 const std::string& out) {
  if (int(hm) + int(hm1) + int(big) + int(st) != 1)
    throw UsageError("pick exactly one of --hm, --hm1, --bigstar, --star");
  if (n < 1 || n > kMaxVertices || m < 1) throw UsageError("need 1 <= n <= 8 and m >= 1");
  std::string kind;
  std::vector<EdgeSet> members;
  if (hm) {
    kind = "hm";
    members = hm_family(n, m);
  } else if (hm1) {
    kind = "hm1";
    members = hm1_family(n, m);
  } else if (big) {
    kind = "bigstar";
    for (VertexBits w = 0; w < (VertexBits(1) << n); ++w)
      if (std::popcount(w) == m) members.push_back(bigstar(VertexSet{n, w}));
    sort_family(members);
  } else {
    kind = "star";
    for (int v = 0; v < n; ++v) members.push_back(star(v, n));
    sort_family(members);
  }
  LineSink sink(out);
  nlohmann::json header = {
      {"family", kind}, {"n", n}, {"m", m}, {"count", members.size()}};
  sink.line(dump_canonical(header));
  for (const EdgeSet& e : members) sink.line(dump_canonical(to_json(e)));
  sink.finish();
  return 0;
}

int run_explore(const std::string& mode, int n, int m, std::uint64_t budget,
                std::uint64_t seed, const std::string& out) {
  Finding f;
  if (mode == "confirm-2dim") f = confirm_theorem_2dim(n, m);
  else if (mode == "question") f = search_question(n, m, budget, seed);
  else if (mode == "corollary") f = check_closing_corollary(n, m, budget, seed);
  else throw UsageError("unknown mode \"" + mode + "\"");
  LineSink sink(out);
  sink.line(dump_canonical(to_json(f)));
  sink.finish();
  if (f.verdict == kVerdictCounterexample || f.verdict == kVerdictDiscrepancy)
    return 1;
  if (f.verdict == kVerdictBudgetExhausted) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for abstract rigidity matroids on small complete graphs"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker-thread budget (default: machine parallelism)");

  int n = 0, m = 0;
  std::uint64_t seed = 0, budget = 1000;
  std::string out, embedding_path, matroid_path, suites = "prop6";
  std::string scope_text = "exhaustive", what, mode;
  bool fam_hm = false, fam_hm1 = false, fam_bigstar = false, fam_star = false;

  CLI::App* build = app.add_subcommand("build", "construct a matroid and write its JSON");
  build->add_option("--n", n, "number of vertices")->required();
  build->add_option("--m", m, "dimension")->required();
  build->add_option("--seed", seed, "embedding seed");
  build->add_option("--embedding", embedding_path, "explicit embedding JSON file");
  build->add_option("--out", out, "output file (default: stdout)");

  CLI::App* check = app.add_subcommand("check", "run axiom suites against a matroid JSON");
  check->add_option("--matroid", matroid_path, "matroid JSON file")->required();
  check->add_option("--m", m, "dimension")->required();
  check->add_option("--suites", suites,
                    "comma list: prop6,C,D,H,B,Z,laman,ext,hm,connect,2dim,twoparts,bottom");
  check->add_option("--scope", scope_text, "exhaustive | sampled:COUNT");
  CLI::Option* check_seed = check->add_option("--seed", seed, "sampling seed");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream a derived family as JSON lines");
  enumerate->add_option("--matroid", matroid_path, "matroid JSON file")->required();
  enumerate->add_option("--what", what, "circuits|cocircuits|hyperplanes|flats|bases")
      ->required();
  enumerate->add_option("--out", out, "output file (default: stdout)");

  CLI::App* families = app.add_subcommand("families", "emit a named edge-set family");
  families->add_option("--n", n, "number of vertices")->required();
  families->add_option("--m", m, "dimension")->required();
  families->add_flag("--hm", fam_hm, "two-complete-part hyperplane candidates");
  families->add_flag("--hm1", fam_hm1, "the |V1| = m subfamily");
  families->add_flag("--bigstar", fam_bigstar, "bigstar of every m-subset");
  families->add_flag("--star", fam_star, "every vertex star");
  families->add_option("--out", out, "output file (default: stdout)");

  CLI::App* explore = app.add_subcommand("explore", "enumerative confirmation and counterexample search");
  explore->add_option("--mode", mode, "confirm-2dim | question | corollary")->required();
  explore->add_option("--n", n, "number of vertices")->required();
  explore->add_option("--m", m, "dimension")->required();
  explore->add_option("--budget", budget, "candidates to test fully");
  explore->add_option("--seed", seed, "search seed");
  explore->add_option("--out", out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads > 0) set_thread_budget(threads);

  try {
    if (build->parsed())
      return run_build(n, m, seed, embedding_path, out);
    if (check->parsed())
      return run_check(matroid_path, m, suites, scope_text,
                       check_seed->count() > 0, seed);
    if (enumerate->parsed()) return run_enumerate(matroid_path, what, out);
    if (families->parsed())
      return run_families(n, m, fam_hm, fam_hm1, fam_bigstar, fam_star, out);
    if (explore->parsed()) return run_explore(mode, n, m, budget, seed, out);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionNotMet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GenericityNotCertified& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
