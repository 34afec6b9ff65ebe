#include "tss/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tss/activation.hpp"
#include "tss/bounds.hpp"
#include "tss/error.hpp"
#include "tss/families.hpp"
#include "tss/io.hpp"
#include "tss/solver.hpp"
#include "tss/thresholds.hpp"

namespace tss {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GraphOptions {
  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  std::string perm;
  std::string graph_path;
  std::string threshold;
  int k = -1;
};

struct SeedOptions {
  std::string seed_set;
  std::string seed_from;
};

struct Instance {
  Graph graph;
  ThresholdAssignment theta;
  std::optional<Family> family;
  json source;  // the parsed --seed-from document, if any
};

void add_graph_options(CLI::App* sub, GraphOptions& o) {
  sub->add_option("--family", o.family, "path | cycle | cp | gpg | mesh | cordalis | serpentinus");
  sub->add_option("--m", o.m, "first parameter (rows, outer cycle length)");
  sub->add_option("--n", o.n, "second parameter (columns, path/cycle length)");
  sub->add_option("--s", o.s, "generalized Petersen step");
  sub->add_option("--perm", o.perm, "1-based permutation images for cp, e.g. 2,1,3,4,5");
  sub->add_option("--graph", o.graph_path, "tss-graph-v1 file, or - for standard input");
  sub->add_option("--threshold", o.threshold, "constant:<k> | majority | strict-majority");
  sub->add_option("--k", o.k, "shorthand for --threshold constant:<k>");
}

void add_seed_options(CLI::App* sub, SeedOptions& o) {
  sub->add_option("--seed-set", o.seed_set, "comma-separated ids or labels, or 'all'");
  sub->add_option("--seed-from", o.seed_from, "JSON file with a \"seed\" array (e.g. seed output), or -");
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot read " + path);
  return read_all(file);
}

std::vector<std::string> split_top_level(const std::string& text) {
  // commas inside parentheses belong to torus labels like (1,2)
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& token, const std::string& what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::Parse, "bad " + what + " '" + token + "'");
  }
  return std::stoull(token);
}

std::vector<VertexId> parse_vertices(const std::string& text, const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& token : split_top_level(text)) {
    if (token.empty()) throw Error(ErrorKind::Parse, "empty vertex in list '" + text + "'");
    if (std::isdigit(static_cast<unsigned char>(token[0]))) {
      const auto v = parse_count(token, "vertex id");
      if (v >= g.vertex_count()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + token + " out of range");
      out.push_back(static_cast<VertexId>(v));
    } else if (auto v = g.find_label(token)) {
      out.push_back(*v);
    } else {
      throw Error(ErrorKind::Parse, "unknown vertex label '" + token + "'");
    }
  }
  return out;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "cp") return Family::cycle_permutation;
  if (name == "gpg") return Family::generalized_petersen;
  if (name == "mesh") return Family::toroidal_mesh;
  if (name == "cordalis") return Family::torus_cordalis;
  if (name == "serpentinus") return Family::torus_serpentinus;
  return std::nullopt;
}

bool is_torus(Family f) {
  return f == Family::toroidal_mesh || f == Family::torus_cordalis || f == Family::torus_serpentinus;
}

void need(std::size_t value, const char* flag, const std::string& family) {
  if (value == 0) throw Error(ErrorKind::BadParam, std::string("--family ") + family + " needs " + flag);
}

Permutation parse_permutation(const std::string& text, std::size_t n) {
  if (text.empty()) return Permutation::identity(n);
  std::vector<std::size_t> images;
  for (const auto& token : split_top_level(text)) images.push_back(parse_count(token, "permutation entry"));
  if (images.size() != n) {
    throw Error(ErrorKind::BadPermutation, "--perm needs " + std::to_string(n) + " entries");
  }
  return Permutation::from_one_based(images);
}

Graph build_family(Family f, const GraphOptions& o) {
  switch (f) {
    case Family::path: need(o.n, "--n", o.family); return path(o.n);
    case Family::cycle: need(o.n, "--n", o.family); return cycle(o.n);
    case Family::cycle_permutation:
      need(o.n, "--n", o.family);
      return cycle_permutation(o.n, parse_permutation(o.perm, o.n));
    case Family::generalized_petersen:
      need(o.m, "--m", o.family);
      need(o.s, "--s", o.family);
      return generalized_petersen(o.m, o.s);
    case Family::toroidal_mesh:
    case Family::torus_cordalis:
    case Family::torus_serpentinus:
      need(o.m, "--m", o.family);
      need(o.n, "--n", o.family);
      if (f == Family::toroidal_mesh) return toroidal_mesh(o.m, o.n);
      if (f == Family::torus_cordalis) return torus_cordalis(o.m, o.n);
      return torus_serpentinus(o.m, o.n);
  }
  throw Error(ErrorKind::BadParam, "unknown family");
}

ThresholdAssignment parse_threshold(const std::string& text, const Graph& g) {
  if (text == "majority") return majority_threshold(g);
  if (text == "strict-majority") return strict_majority_threshold(g);
  const std::string prefix = "constant:";
  if (text.rfind(prefix, 0) == 0) {
    const auto k = parse_count(text.substr(prefix.size()), "threshold");
    return constant_threshold(g, static_cast<int>(k));
  }
  throw Error(ErrorKind::Parse, "bad --threshold '" + text + "'");
}

bool explicit_threshold(const GraphOptions& o) { return o.k >= 0 || !o.threshold.empty(); }

Instance load_instance(const GraphOptions& o, std::istream& in) {
  Instance inst;
  std::optional<ThresholdAssignment> from_doc;
  if (!o.graph_path.empty()) {
    if (!o.family.empty()) throw Error(ErrorKind::BadParam, "use either --graph or --family");
    auto doc = parse_graph_document(read_source(o.graph_path, in));
    inst.graph = std::move(doc.graph);
    from_doc = std::move(doc.thresholds);
  } else {
    if (o.family.empty()) throw Error(ErrorKind::BadParam, "a graph is needed: --family or --graph");
    inst.family = parse_family(o.family);
    if (!inst.family) throw Error(ErrorKind::BadParam, "unknown family '" + o.family + "'");
    inst.graph = build_family(*inst.family, o);
  }
  if (o.k >= 0 && !o.threshold.empty()) throw Error(ErrorKind::BadParam, "use either --k or --threshold");
  if (o.k >= 0) {
    inst.theta = constant_threshold(inst.graph, o.k);
  } else if (!o.threshold.empty()) {
    inst.theta = parse_threshold(o.threshold, inst.graph);
  } else if (from_doc) {
    inst.theta = std::move(*from_doc);
  } else if (inst.family) {
    inst.theta = constant_threshold(inst.graph, is_torus(*inst.family) ? 3 : 2);
  } else {
    inst.theta = strict_majority_threshold(inst.graph);
  }
  return inst;
}

std::optional<VertexSet> load_seed(const SeedOptions& o, Instance& inst, std::istream& in) {
  const auto n = inst.graph.vertex_count();
  if (!o.seed_set.empty() && !o.seed_from.empty()) {
    throw Error(ErrorKind::BadParam, "use either --seed-set or --seed-from");
  }
  if (!o.seed_set.empty()) {
    if (o.seed_set == "all") return VertexSet::full(n);
    return VertexSet(n, parse_vertices(o.seed_set, inst.graph));
  }
  if (!o.seed_from.empty()) {
    try {
      inst.source = json::parse(read_source(o.seed_from, in));
      const json& ids = inst.source.is_array() ? inst.source : inst.source.at("seed");
      return VertexSet(n, ids.get<std::vector<VertexId>>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("--seed-from: ") + e.what());
    }
  }
  return std::nullopt;
}

VertexSet require_seed(const SeedOptions& o, Instance& inst, std::istream& in) {
  auto seed = load_seed(o, inst, in);
  if (!seed) throw Error(ErrorKind::BadParam, "a seed is needed: --seed-set or --seed-from");
  return *seed;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot write " + path);
  file << text;
}

SolveLimits make_limits(std::size_t max_vertices, long budget_ms, long max_size, unsigned threads) {
  SolveLimits limits;
  limits.max_vertices = max_vertices;
  limits.time_budget = std::chrono::milliseconds(budget_ms);
  if (max_size >= 0) limits.max_size = static_cast<std::size_t>(max_size);
  limits.threads = threads;
  return limits;
}

SeedReport construction_for(const Instance& inst, const GraphOptions& o, const std::string& theorem) {
  if (!inst.family) throw Error(ErrorKind::BadParam, "constructions need --family");
  switch (*inst.family) {
    case Family::torus_cordalis:
      if (theorem.empty()) return seed_torus_cordalis(o.m, o.n);
      if (auto t = parse_cordalis_theorem(theorem)) return seed_torus_cordalis_by(o.m, o.n, *t);
      throw Error(ErrorKind::BadParam, "unknown --theorem '" + theorem + "' (T5 T6 T7 T8 T9 fallback)");
    case Family::generalized_petersen: return seed_generalized_petersen(o.m, o.s);
    case Family::cycle_permutation: return seed_cycle_permutation(o.n, parse_permutation(o.perm, o.n));
    default:
      throw Error(ErrorKind::BadParam, "no seed construction for family '" + o.family + "'");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& token : split_top_level(text)) {
    const auto x = token.find('x');
    if (x == std::string::npos) throw Error(ErrorKind::Parse, "pairs look like 12x24, got '" + token + "'");
    out.emplace_back(parse_count(token.substr(0, x), "m"), parse_count(token.substr(x + 1), "n"));
  }
  return out;
}

TableRow make_row(std::size_t m, std::size_t n, const std::optional<CordalisTheorem>& theorem) {
  TableRow row;
  row.m = m;
  row.n = n;
  row.lower = tss_lower_bound_torus(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  try {
    const auto report = theorem ? seed_torus_cordalis_by(m, n, *theorem) : seed_torus_cordalis(m, n);
    row.theorem_case = report.theorem_case;
    row.size = static_cast<std::int64_t>(report.size);
    const bool fallback = report.theorem_case == TheoremCase::fallback;
    if (fallback) {
      row.phi = flocchini_upper(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), TorusVariant::cordalis);
      row.status = RowStatus::fallback;
    } else {
      row.phi = case_formula(report.theorem_case, m, n);
      switch (report.claimed) {
        case ClaimKind::exact: row.status = RowStatus::exact; break;
        case ClaimKind::upper_bound: row.status = RowStatus::upper_bound; break;
        case ClaimKind::upper_bound_gap_one: row.status = RowStatus::gap_one; break;
      }
    }
    if (!report.verified) {
      row.status = RowStatus::failed;
      row.note = "not verified";
    } else if (fallback ? row.size > row.phi : row.size != row.phi) {
      row.status = RowStatus::failed;
      row.note = "size differs from the case formula";
    } else if (row.size < row.lower) {
      row.status = RowStatus::failed;
      row.note = "size below the lower bound";
    }
  } catch (const Error& e) {
    row.status = RowStatus::failed;
    row.note = e.what();
  }
  return row;
}

std::vector<TableRow> rows_for(std::size_t m, std::size_t n, bool dispatch_only) {
  std::vector<TableRow> rows;
  const auto theorems = applicable_theorems(m, n);
  if (dispatch_only || theorems.empty()) {
    rows.push_back(make_row(m, n, std::nullopt));
  } else {
    for (auto t : theorems) rows.push_back(make_row(m, n, t));
  }
  return rows;
}

json row_to_json(const TableRow& r) {
  json out{{"m", r.m},     {"n", r.n},         {"case", to_string(r.theorem_case)},
           {"phi", r.phi}, {"size", r.size},   {"lower", r.lower},
           {"status", to_string(r.status)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json sequence_check_to_json(const SequenceCheck& check, const Graph& g) {
  json out{{"ok", check.ok}, {"full_influence", check.full_influence}};
  if (check.violation) {
    const auto& v = *check.violation;
    out["violation"] = {{"position", v.position},
                        {"vertex", v.vertex},
                        {"label", g.label(v.vertex)},
                        {"active_neighbors", v.active_neighbors},
                        {"threshold", v.threshold}};
  }
  return out;
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::exact: return "exact";
    case RowStatus::upper_bound: return "upper_bound";
    case RowStatus::gap_one: return "gap_one";
    case RowStatus::fallback: return "fallback";
    case RowStatus::failed: return "FAILED";
  }
  return "unknown";
}

std::vector<TableRow> build_table(const TableOptions& options) {
  auto pairs = options.pairs;
  if (pairs.empty()) {
    const auto m_lo = std::max<std::size_t>(options.m_min, 3);
    const auto n_lo = std::max<std::size_t>(options.n_min, 2);
    const auto m_hi = options.m_max != 0 ? options.m_max : options.cap / n_lo;
    const auto n_hi = options.n_max != 0 ? options.n_max : options.cap / m_lo;
    for (auto m = m_lo; m <= m_hi; ++m) {
      for (auto n = n_lo; n <= n_hi; ++n) {
        if (m * n <= options.cap) pairs.emplace_back(m, n);
      }
    }
  }
  std::vector<std::vector<TableRow>> slots(pairs.size());
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(pairs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < pairs.size(); i = next++) {
      slots[i] = rows_for(pairs[i].first, pairs[i].second, options.dispatch_only);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<TableRow> rows;
  for (auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
  return rows;
}

std::string table_csv_header() { return "m,n,case,phi,size,lower,status"; }

std::string to_csv(const TableRow& r) {
  std::ostringstream os;
  os << r.m << ',' << r.n << ',' << to_string(r.theorem_case) << ',' << r.phi << ',' << r.size << ',' << r.lower
     << ',' << to_string(r.status);
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Target set selection toolkit: graph families, seed constructions, simulation and exact search",
               "tss"};
  app.require_subcommand(1);

  GraphOptions g;
  SeedOptions sd;
  bool dot = false;
  std::string theorem, dot_prefix, sequence_text, order = "parallel", name = "G";
  std::uint64_t rng_seed = 0;
  std::size_t max_vertices = 24, claimed = 0;
  long budget_ms = 0, max_size = -1;
  unsigned threads = 0;
  bool with_construction = false;

  auto* gen = app.add_subcommand("gen", "emit a family graph as tss-graph-v1 JSON or DOT");
  add_graph_options(gen, g);
  gen->add_flag("--dot", dot, "emit DOT instead of JSON");

  auto* seed = app.add_subcommand("seed", "build and verify a seed construction");
  add_graph_options(seed, g);
  seed->add_option("--theorem", theorem, "force a cordalis construction: T5 T6 T7 T8 T9 fallback");
  seed->add_flag("--dot", dot, "emit DOT with the seed highlighted");

  auto* simulate = app.add_subcommand("simulate", "run the activation process from a seed");
  add_graph_options(simulate, g);
  add_seed_options(simulate, sd);
  simulate->add_option("--order", order, "parallel | lowest | highest | random")
      ->check(CLI::IsMember({"parallel", "lowest", "highest", "random"}));
  simulate->add_option("--rng-seed", rng_seed, "seed for --order random");
  simulate->add_option("--dot-prefix", dot_prefix, "write <prefix>_round<t>.dot per parallel round");

  auto* verify = app.add_subcommand("verify", "check that a seed (and optional sequence) influences the graph");
  add_graph_options(verify, g);
  add_seed_options(verify, sd);
  verify->add_option("--sequence", sequence_text, "convinced sequence as ids or labels");

  auto* bounds = app.add_subcommand("bounds", "closed-form lower and upper bounds");
  add_graph_options(bounds, g);

  auto* exact = app.add_subcommand("exact", "exact minimum seed on a small instance");
  auto* check = app.add_subcommand("check-optimal", "confirm or refute a claimed minimum seed size");
  for (auto* sub : {exact, check}) {
    add_graph_options(sub, g);
    sub->add_option("--max-vertices", max_vertices, "refuse larger graphs");
    sub->add_option("--budget-ms", budget_ms, "time budget in milliseconds, 0 for none");
    sub->add_option("--max-size", max_size, "give up above this seed size");
    sub->add_option("--threads", threads, "worker threads, 0 for automatic");
  }
  check->add_option("--claimed", claimed, "claimed minimum seed size")->required();

  TableOptions table_opts;
  std::string pairs_text, format = "csv";
  auto* table = app.add_subcommand("table", "sweep torus cordalis constructions against their formulas");
  table->add_option("--pairs", pairs_text, "explicit pairs, e.g. 9x9,12x24");
  table->add_option("--m-min", table_opts.m_min);
  table->add_option("--m-max", table_opts.m_max, "0 means as far as --cap allows");
  table->add_option("--n-min", table_opts.n_min);
  table->add_option("--n-max", table_opts.n_max, "0 means as far as --cap allows");
  table->add_option("--cap", table_opts.cap, "largest mn swept");
  table->add_flag("--dispatch-only", table_opts.dispatch_only, "one dispatched row per pair");
  table->add_option("--threads", table_opts.threads, "worker threads, 0 for automatic");
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* export_dot = app.add_subcommand("export-dot", "DOT for a family or graph file, optionally with a seed");
  add_graph_options(export_dot, g);
  add_seed_options(export_dot, sd);
  export_dot->add_flag("--construction", with_construction, "highlight the family's seed construction");
  export_dot->add_option("--name", name, "graph name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto inst = load_instance(g, in);
      if (dot) {
        out << to_dot(inst.graph);
      } else {
        out << graph_to_json(inst.graph, explicit_threshold(g) ? &inst.theta : nullptr).dump() << '\n';
      }
      return kExitOk;
    }

    if (seed->parsed()) {
      const auto inst = load_instance(g, in);
      const auto report = construction_for(inst, g, theorem);
      if (dot) {
        out << to_dot(report.graph, &report.seed);
      } else {
        out << seed_report_to_json(report).dump() << '\n';
      }
      return report.verified ? kExitOk : kExitNegative;
    }

    if (simulate->parsed()) {
      auto inst = load_instance(g, in);
      const auto s = require_seed(sd, inst, in);
      if (order != "parallel") {
        OrderPolicy policy = order == "lowest"    ? OrderPolicy::lowest_id()
                             : order == "highest" ? OrderPolicy::highest_id()
                                                  : OrderPolicy::random(rng_seed);
        const auto seq = sequential_order(inst.graph, inst.theta, s, policy);
        const auto final_size = s.size() + seq.size();
        out << json{{"seed", s.members()}, {"sequence", seq.order}, {"final_size", final_size}}.dump() << '\n';
        return final_size == inst.graph.vertex_count() ? kExitOk : kExitNegative;
      }
      const auto trace = parallel_trace(inst.graph, inst.theta, s);
      if (!dot_prefix.empty()) {
        VertexSet active = trace.seed;
        write_file(dot_prefix + "_round0.dot", to_dot(inst.graph, &active, "round0"));
        for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
          for (auto v : trace.rounds[t]) active.insert(v);
          const auto label = "round" + std::to_string(t + 1);
          write_file(dot_prefix + "_" + label + ".dot", to_dot(inst.graph, &active, label));
        }
      }
      out << trace_to_json(trace).dump() << '\n';
      return trace.final.size() == inst.graph.vertex_count() ? kExitOk : kExitNegative;
    }

    if (verify->parsed()) {
      auto inst = load_instance(g, in);
      const auto s = require_seed(sd, inst, in);
      const auto closed = closure(inst.graph, inst.theta, s);
      const bool influencing = closed.size() == inst.graph.vertex_count();
      json report{{"influencing", influencing},
                  {"closure_size", closed.size()},
                  {"vertex_count", inst.graph.vertex_count()},
                  {"seed_size", s.size()}};
      bool ok = influencing;
      std::optional<ConvincedSequence> alpha;
      if (!sequence_text.empty()) {
        alpha = ConvincedSequence{parse_vertices(sequence_text, inst.graph)};
      } else if (inst.source.is_object() && inst.source.contains("sequence")) {
        alpha = ConvincedSequence{inst.source.at("sequence").get<std::vector<VertexId>>()};
      }
      if (alpha) {
        const auto result = validate_convinced_sequence(inst.graph, inst.theta, s, *alpha);
        report["sequence"] = sequence_check_to_json(result, inst.graph);
        ok = ok && result.full_influence;
      }
      out << report.dump() << '\n';
      return ok ? kExitOk : kExitNegative;
    }

    if (bounds->parsed()) {
      if (g.graph_path.empty() && !g.family.empty()) {
        const auto f = parse_family(g.family);
        if (f && is_torus(*f)) {
          if (explicit_threshold(g)) {
            const auto inst = load_instance(g, in);
            if (inst.theta.constant_value() != 3) {
              throw Error(ErrorKind::BadParam, "torus bounds are stated for threshold 3");
            }
          }
          const auto variant = *f == Family::torus_cordalis ? TorusVariant::cordalis
                               : *f == Family::toroidal_mesh ? TorusVariant::mesh
                                                             : TorusVariant::serpentinus;
          const auto r = torus_bounds(static_cast<std::int64_t>(g.m), static_cast<std::int64_t>(g.n), variant);
          out << bounds_to_json(r).dump() << '\n';
          return kExitOk;
        }
      }
      const auto inst = load_instance(g, in);
      const auto k = inst.theta.constant_value();
      if (!k) throw Error(ErrorKind::BadParam, "the lemma bound needs a constant threshold");
      out << bounds_to_json(graph_bounds(inst.graph, *k)).dump() << '\n';
      return kExitOk;
    }

    if (exact->parsed()) {
      const auto inst = load_instance(g, in);
      const auto result = exact_min_seed(inst.graph, inst.theta, make_limits(max_vertices, budget_ms, max_size, threads));
      out << solve_result_to_json(result).dump() << '\n';
      return result.status == SolveStatus::optimal ? kExitOk : kExitInconclusive;
    }

    if (check->parsed()) {
      const auto inst = load_instance(g, in);
      const auto result =
          verify_optimality(inst.graph, inst.theta, claimed, make_limits(max_vertices, budget_ms, max_size, threads));
      out << optimality_to_json(result, claimed).dump() << '\n';
      switch (result.verdict) {
        case Verdict::confirmed: return kExitOk;
        case Verdict::refuted: return kExitNegative;
        case Verdict::inconclusive: return kExitInconclusive;
      }
    }

    if (table->parsed()) {
      if (!pairs_text.empty()) table_opts.pairs = parse_pairs(pairs_text);
      const auto rows = build_table(table_opts);
      bool failed = false;
      if (format == "csv") {
        out << table_csv_header() << '\n';
        for (const auto& r : rows) out << to_csv(r) << '\n';
      } else {
        json all = json::array();
        for (const auto& r : rows) all.push_back(row_to_json(r));
        out << all.dump() << '\n';
      }
      for (const auto& r : rows) {
        if (r.status == RowStatus::failed) {
          failed = true;
          err << "row " << r.m << 'x' << r.n << ' ' << to_string(r.theorem_case) << " failed: " << r.note << '\n';
        }
      }
      return failed ? kExitNegative : kExitOk;
    }

    if (export_dot->parsed()) {
      auto inst = load_instance(g, in);
      auto s = load_seed(sd, inst, in);
      if (with_construction) {
        if (s) throw Error(ErrorKind::BadParam, "--construction conflicts with an explicit seed");
        s = construction_for(inst, g, "").seed;
      }
      out << to_dot(inst.graph, s ? &*s : nullptr, name);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConstructionFailedVerification ? kExitNegative : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tss
