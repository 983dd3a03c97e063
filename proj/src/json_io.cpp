#include "armlab/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace armlab {

namespace {

constexpr std::uint64_t kReloadEngineSeed = 0x717e5eedull;

const nlohmann::json& need(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t need_int(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = need(j, key);
  if (!v.is_number_integer())
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::uint64_t need_uint(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = need(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(std::string("key \"") + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string need_string(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = need(j, key);
  if (!v.is_string())
    throw ParseError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

const nlohmann::json& need_array(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = need(j, key);
  if (!v.is_array())
    throw ParseError(std::string("key \"") + key + "\" must be an array");
  return v;
}

bool need_bool(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = need(j, key);
  if (!v.is_boolean())
    throw ParseError(std::string("key \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

int parse_vertex_count(const nlohmann::json& j) {
  std::int64_t n = need_int(j, "n");
  if (n < 1 || n > kMaxVertices)
    throw ParseError("vertex count out of range 1..8");
  return static_cast<int>(n);
}

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!all_digits(num, start, num.size()))
    throw ParseError("malformed rational \"" + s + "\"");
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    if (!all_digits(den, 0, den.size()))
      throw ParseError("malformed rational \"" + s + "\"");
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError("zero denominator in \"" + s + "\"");
  }
  Rational q(s);
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const EdgeSet& e) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& uv : e.edges()) edges.push_back({uv.u, uv.v});
  return {{"n", e.n}, {"edges", edges}};
}

EdgeSet edge_set_from_json(const nlohmann::json& j) {
  int n = parse_vertex_count(j);
  EdgeSet e = EdgeSet::empty_on(n);
  for (const nlohmann::json& item : need_array(j, "edges")) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("edge entries must be [u, v] integer pairs");
    int u = item[0].get<int>(), v = item[1].get<int>();
    if (u < 0 || v <= u || v >= n) throw ParseError("edge endpoints need 0 <= u < v < n");
    int idx = edge_rank(Edge{u, v}, n);
    if (e.contains(idx)) throw ParseError("duplicate edge in edge set");
    e = e.with(idx);
  }
  return e;
}

std::string scope_to_string(const Scope& s) {
  if (s.exhaustive) return "exhaustive";
  return "sampled:" + std::to_string(s.seed) + ":" + std::to_string(s.count);
}

Scope scope_from_string(const std::string& s) {
  if (s == "exhaustive") return Scope::Exhaustive();
  const std::string prefix = "sampled:";
  if (s.rfind(prefix, 0) == 0) {
    std::size_t colon = s.find(':', prefix.size());
    if (colon != std::string::npos) {
      std::string seed_part = s.substr(prefix.size(), colon - prefix.size());
      std::string count_part = s.substr(colon + 1);
      if (all_digits(seed_part, 0, seed_part.size()) &&
          all_digits(count_part, 0, count_part.size())) {
        try {
          return Scope::Sampled(std::stoull(seed_part), std::stoull(count_part));
        } catch (const std::exception&) {
        }
      }
    }
  }
  throw ParseError("malformed scope \"" + s + "\"");
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& [name, set] : w.edge_sets)
    sets.push_back({{"name", name}, {"set", to_json(set)}});
  nlohmann::json nums = nlohmann::json::array();
  for (const auto& [name, value] : w.numbers)
    nums.push_back({{"name", name}, {"value", value}});
  return {{"kind", w.kind}, {"edge_sets", sets}, {"numbers", nums}};
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w(need_string(j, "kind"));
  for (const nlohmann::json& item : need_array(j, "edge_sets"))
    w.with(need_string(item, "name"), edge_set_from_json(need(item, "set")));
  for (const nlohmann::json& item : need_array(j, "numbers"))
    w.with(need_string(item, "name"), need_int(item, "value"));
  return w;
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Witness& w : r.violations) violations.push_back(to_json(w));
  return {{"suite", r.suite},
          {"passed", r.passed},
          {"scope", scope_to_string(r.scope)},
          {"violations", violations},
          {"violation_count", r.violation_count},
          {"details", r.details}};
}

AxiomReport axiom_report_from_json(const nlohmann::json& j) {
  AxiomReport r;
  r.suite = need_string(j, "suite");
  r.passed = need_bool(j, "passed");
  r.scope = scope_from_string(need_string(j, "scope"));
  for (const nlohmann::json& item : need_array(j, "violations"))
    r.violations.push_back(witness_from_json(item));
  r.violation_count = need_uint(j, "violation_count");
  r.details = j.contains("details") ? j.at("details") : nlohmann::json::object();
  if (r.passed != r.violations.empty() || r.passed != (r.violation_count == 0))
    throw ParseError("report pass flag disagrees with its violations");
  return r;
}

namespace {

nlohmann::json edge_indices_json(const EdgeSet& e) {
  nlohmann::json arr = nlohmann::json::array();
  EdgeBits rest = e.bits;
  while (rest) {
    int idx = std::countr_zero(rest);
    rest &= rest - 1;
    arr.push_back(idx);
  }
  return arr;
}

EdgeSet edge_set_from_indices(int n, const nlohmann::json& arr) {
  EdgeSet e = EdgeSet::empty_on(n);
  for (const nlohmann::json& item : arr) {
    if (!item.is_number_integer())
      throw ParseError("edge indices must be integers");
    int idx = item.get<int>();
    if (idx < 0 || idx >= edge_count(n))
      throw ParseError("edge index out of range");
    if (e.contains(idx)) throw ParseError("duplicate edge index");
    e = e.with(idx);
  }
  return e;
}

}  // namespace

nlohmann::json to_json(const Matroid& m) {
  nlohmann::json j;
  j["n"] = m.n();
  j["rank"] = m.rank();
  j["backend"] = m.backend_name();
  if (const std::vector<EdgeSet>* fam = m.basis_family()) {
    nlohmann::json bases = nlohmann::json::array();
    for (const EdgeSet& b : *fam) bases.push_back(edge_indices_json(b));
    j["bases"] = bases;
  } else if (const RationalMatrix* rows = m.linear_rows()) {
    nlohmann::json matrix = nlohmann::json::array();
    for (int r = 0; r < rows->rows; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < rows->cols; ++c)
        row.push_back(rational_to_string(rows->at(r, c)));
      matrix.push_back(row);
    }
    j["matrix"] = matrix;
  }
  EdgeBits full = (EdgeBits{1} << edge_count(m.n())) - 1;
  if (m.ground().bits != full) j["ground"] = edge_indices_json(m.ground());
  return j;
}

Matroid matroid_from_json(const nlohmann::json& j) {
  int n = parse_vertex_count(j);
  std::string backend = need_string(j, "backend");
  std::optional<Matroid> m;
  if (backend == "bases") {
    std::vector<EdgeSet> bases;
    for (const nlohmann::json& b : need_array(j, "bases"))
      bases.push_back(edge_set_from_indices(n, b));
    try {
      if (j.contains("ground")) {
        EdgeSet ground = edge_set_from_indices(n, need_array(j, "ground"));
        m = Matroid::from_bases_on(n, ground, std::move(bases));
      } else {
        m = Matroid::from_bases(n, std::move(bases));
      }
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid basis family: ") + e.what());
    }
  } else if (backend == "linear") {
    const nlohmann::json& matrix = need_array(j, "matrix");
    if (static_cast<int>(matrix.size()) != edge_count(n))
      throw ParseError("matrix needs one row per edge of K(V)");
    int cols = -1;
    RationalMatrix rows;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      const nlohmann::json& row = matrix[r];
      if (!row.is_array()) throw ParseError("matrix rows must be arrays");
      if (cols < 0) {
        cols = static_cast<int>(row.size());
        if (cols < 1) throw ParseError("matrix rows must be nonempty");
        rows = RationalMatrix(edge_count(n), cols);
      }
      if (static_cast<int>(row.size()) != cols)
        throw ParseError("matrix rows have unequal lengths");
      for (int c = 0; c < cols; ++c) {
        if (!row[c].is_string())
          throw ParseError("matrix entries must be rational strings");
        rows.at(static_cast<int>(r), c) =
            rational_from_string(row[c].get<std::string>());
      }
    }
    m = Matroid::from_linear_rows(n, std::move(rows), kReloadEngineSeed);
  } else if (backend == "cycle") {
    m = Matroid::cycle(n);
  } else {
    throw ParseError("unknown backend \"" + backend + "\"");
  }
  if (need_int(j, "rank") != m->rank())
    throw ParseError("stored rank disagrees with the reconstructed matroid");
  return *m;
}

nlohmann::json to_json(const Embedding& e) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& point : e.coords) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& q : point) row.push_back(rational_to_string(q));
    coords.push_back(row);
  }
  return {{"n", e.n}, {"m", e.m}, {"coords", coords}};
}

Embedding embedding_from_json(const nlohmann::json& j) {
  Embedding e;
  e.n = parse_vertex_count(j);
  std::int64_t m = need_int(j, "m");
  if (m < 1) throw ParseError("embedding dimension must be positive");
  e.m = static_cast<int>(m);
  const nlohmann::json& coords = need_array(j, "coords");
  if (static_cast<int>(coords.size()) != e.n)
    throw ParseError("coords needs one point per vertex");
  for (const nlohmann::json& point : coords) {
    if (!point.is_array() || static_cast<int>(point.size()) != e.m)
      throw ParseError("each point needs m coordinates");
    std::vector<Rational> p;
    for (const nlohmann::json& c : point) {
      if (!c.is_string()) throw ParseError("coordinates must be rational strings");
      p.push_back(rational_from_string(c.get<std::string>()));
    }
    e.coords.push_back(std::move(p));
  }
  return e;
}

nlohmann::json to_json(const SearchStats& s) {
  return {{"enumerated", s.enumerated},
          {"arms_found", s.arms_found},
          {"candidates_tested", s.candidates_tested},
          {"pruned_inconsistent", s.pruned_inconsistent},
          {"rejected_axioms", s.rejected_axioms},
          {"rejected_hyperplanes", s.rejected_hyperplanes}};
}

SearchStats search_stats_from_json(const nlohmann::json& j) {
  SearchStats s;
  s.enumerated = need_uint(j, "enumerated");
  s.arms_found = need_uint(j, "arms_found");
  s.candidates_tested = need_uint(j, "candidates_tested");
  s.pruned_inconsistent = need_uint(j, "pruned_inconsistent");
  s.rejected_axioms = need_uint(j, "rejected_axioms");
  s.rejected_hyperplanes = need_uint(j, "rejected_hyperplanes");
  return s;
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json reports = nlohmann::json::array();
  for (const AxiomReport& r : f.reports) reports.push_back(to_json(r));
  return {{"verdict", f.verdict},
          {"n", f.n},
          {"m", f.m},
          {"seed", f.seed},
          {"budget", f.budget},
          {"matroid", f.matroid ? to_json(*f.matroid) : nlohmann::json(nullptr)},
          {"reports", reports},
          {"stats", to_json(f.stats)}};
}

Finding finding_from_json(const nlohmann::json& j) {
  Finding f;
  f.verdict = need_string(j, "verdict");
  f.n = static_cast<int>(need_int(j, "n"));
  f.m = static_cast<int>(need_int(j, "m"));
  f.seed = need_uint(j, "seed");
  f.budget = need_uint(j, "budget");
  const nlohmann::json& mat = need(j, "matroid");
  if (!mat.is_null()) f.matroid = matroid_from_json(mat);
  for (const nlohmann::json& r : need_array(j, "reports"))
    f.reports.push_back(axiom_report_from_json(r));
  f.stats = search_stats_from_json(need(j, "stats"));
  return f;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

nlohmann::json parse_string(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse failure: ") + e.what());
  }
}

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("read failure on \"" + path + "\"");
  return parse_string(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
  out << text;
  out.flush();
  if (!out) throw ParseError("write failure on \"" + path + "\"");
}

}  // namespace armlab
