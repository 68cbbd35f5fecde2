#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leavitt/bigint.hpp"
#include "leavitt/classifier.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/k_theory.hpp"
#include "leavitt/monoid.hpp"
#include "leavitt/talented.hpp"

namespace leavitt {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// Integers that fit in int64 become JSON numbers, larger ones strings.
json big_to_json(BigInt const& x);
json k0_class_to_json(K0Class const& c);

// {"vertices": [...], "edges": [[s, r], ...]}
json graph_to_json(Graph const& g);
// Throws ParseError naming the offending field.
Graph graph_from_json(json const& j);
// Throws ParseError with line and column on malformed JSON.
Graph parse_graph_text(std::string_view text);
Graph load_graph_file(std::filesystem::path const& path);

// {"free_rank", "torsion", "unit", "vertices": {name: class}}
json k0_to_json(Graph const& g, K0Data const& k0);

json budget_to_json(SearchBudget const& b);
json stats_to_json(SearchStats const& s);
json certificate_to_json(Graph const& g, Certificate const& c);
json certificate_to_json(Graph const& g, GradedCertificate const& c);
json verdict_to_json(Graph const& g, Verdict const& v);
json verdict_to_json(Graph const& g, GradedVerdict const& v);

json serre_to_json(Graph const& g, SerreReport const& r);
json pis_to_json(Graph const& g, PisReport const& r);
json ibn_to_json(Graph const& g, IbnReport const& r);
json graded_serre_to_json(Graph const& g, GradedSerreReport const& r);

// Dialect-independent description of a classification.
json classification_to_json(Classification const& c);

// {"schema", "graph", "serre", "pis", "k0", "classification", "certificates", "budget"}
json classify_report(Graph const& g, Classification const& c, Dialect dialect);

// One-sentence conclusion of a Serre check in the given dialect.
std::string serre_conclusion(Classification const& c, Dialect dialect);

}  // namespace leavitt
