#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "tss/activation.hpp"
#include "tss/bounds.hpp"
#include "tss/constructions.hpp"
#include "tss/graph.hpp"
#include "tss/solver.hpp"
#include "tss/thresholds.hpp"

namespace tss {

inline constexpr const char* kGraphFormat = "tss-graph-v1";

struct GraphDocument {
  Graph graph;
  std::optional<ThresholdAssignment> thresholds;
};

/// {"format":"tss-graph-v1","n":..,"edges":[[u,v],..],"labels":{"0":"..",..}?,"thresholds":[..]?}
nlohmann::json graph_to_json(const Graph& g, const ThresholdAssignment* thresholds = nullptr);
/// Errors: Parse for malformed documents, plus any build_graph error.
GraphDocument graph_from_json(const nlohmann::json& doc);
GraphDocument parse_graph_document(const std::string& text);

/// {"seed":[..],"rounds":[[..],..],"final_size":n}
nlohmann::json trace_to_json(const ActivationTrace& trace);
nlohmann::json seed_report_to_json(const SeedReport& report);
nlohmann::json solve_result_to_json(const SolveResult& result);
nlohmann::json optimality_to_json(const OptimalityCheck& check, std::size_t claimed);
nlohmann::json bounds_to_json(const BoundsReport& bounds);

/// Graphviz text; vertices in `highlight` are drawn filled.
std::string to_dot(const Graph& g, const VertexSet* highlight = nullptr, const std::string& name = "G");

}  // namespace tss
