#pragma once

#include <stdexcept>
#include <string>

#include "armlab/explorer.hpp"
#include "armlab/matroid.hpp"
#include "armlab/reports.hpp"
#include "armlab/rigidity.hpp"
#include "json.hpp"

namespace armlab {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rationals travel as exact "p/q" strings ("p" when the denominator is 1).
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// {"n": int, "edges": [[u,v], ...]} with u < v, lexicographic order.
nlohmann::json to_json(const EdgeSet& e);
EdgeSet edge_set_from_json(const nlohmann::json& j);

// "exhaustive" or "sampled:SEED:COUNT".
std::string scope_to_string(const Scope& s);
Scope scope_from_string(const std::string& s);

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AxiomReport& r);
AxiomReport axiom_report_from_json(const nlohmann::json& j);

// {"n", "rank", "backend", "bases" | "matrix"}; restricted grounds add a
// "ground" list of edge indices. The stored rank must match on reload.
nlohmann::json to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

// {"n", "m", "coords": [["p/q", ...], ...]}.
nlohmann::json to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchStats& s);
SearchStats search_stats_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);

// nlohmann objects keep keys sorted, so dump() is already canonical; this
// wrapper names the convention used for byte-identical artifacts.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json parse_string(const std::string& text);
nlohmann::json parse_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace armlab
