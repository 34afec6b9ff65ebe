#include "tss/io.hpp"

#include <sstream>

#include "tss/error.hpp"

namespace tss {

using nlohmann::json;

namespace {

json ids(const std::vector<VertexId>& v) { return json(v); }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g, const ThresholdAssignment* thresholds) {
  json doc;
  doc["format"] = kGraphFormat;
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  if (g.has_labels()) {
    json labels = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.label(v);
    doc["labels"] = std::move(labels);
  }
  if (thresholds != nullptr) {
    thresholds->check_against(g);
    doc["thresholds"] = thresholds->values();
  }
  return doc;
}

GraphDocument graph_from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", std::string{}) != kGraphFormat) {
      throw Error(ErrorKind::Parse, std::string("expected a ") + kGraphFormat + " document");
    }
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge entries must be [u,v] pairs");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      labels.assign(n, std::string{});
      std::vector<char> seen(n, 0);
      for (const auto& [key, value] : doc.at("labels").items()) {
        std::size_t pos = 0;
        const auto id = std::stoul(key, &pos);
        if (pos != key.size() || id >= n) throw Error(ErrorKind::Parse, "label key '" + key + "' is not a vertex id");
        labels[id] = value.get<std::string>();
        seen[id] = 1;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " has no label");
      }
    }
    GraphDocument out{build_graph(n, edges, std::move(labels)), std::nullopt};
    if (doc.contains("thresholds")) {
      ThresholdAssignment theta(doc.at("thresholds").get<std::vector<int>>());
      theta.check_against(out.graph);
      out.thresholds = std::move(theta);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::Parse, e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return graph_from_json(doc);
}

json trace_to_json(const ActivationTrace& trace) {
  json rounds = json::array();
  for (const auto& r : trace.rounds) rounds.push_back(ids(r));
  return {{"seed", ids(trace.seed.members())}, {"rounds", std::move(rounds)}, {"final_size", trace.final.size()}};
}

json seed_report_to_json(const SeedReport& r) {
  json out;
  out["family"] = to_string(r.family);
  switch (r.family) {
    case Family::generalized_petersen:
      out["m"] = r.m;
      out["s"] = r.n;
      break;
    case Family::cycle_permutation: out["n"] = r.m; break;
    default:
      out["m"] = r.m;
      out["n"] = r.n;
  }
  out["case"] = to_string(r.theorem_case);
  out["size"] = r.size;
  out["kind"] = to_string(r.claimed);
  out["lower_bound"] = r.lower_bound;
  out["seed"] = ids(r.seed.members());
  out["sequence"] = ids(r.sequence.order);
  out["verified"] = r.verified;
  return out;
}

json solve_result_to_json(const SolveResult& r) {
  return {{"optimum", r.optimum},
          {"witness", ids(r.witness.members())},
          {"nodes_explored", r.nodes_explored},
          {"status", to_string(r.status)}};
}

json optimality_to_json(const OptimalityCheck& c, std::size_t claimed) {
  json out{{"claimed", claimed}, {"verdict", to_string(c.verdict)}};
  if (c.optimum) {
    out["optimum"] = *c.optimum;
    out["witness"] = ids(c.witness.members());
  }
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

json bounds_to_json(const BoundsReport& b) {
  json out{{"lower", b.lower}, {"lower_source", to_string(b.lower_source)}};
  out["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  out["upper_source"] = b.upper_source ? json(to_string(*b.upper_source)) : json(nullptr);
  return out;
}

std::string to_dot(const Graph& g, const VertexSet* highlight, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << dot_escape(name) << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"";
    if (highlight != nullptr && highlight->contains(v)) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tss
