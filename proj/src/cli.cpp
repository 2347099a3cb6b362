#include "gim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "gim/certificate.hpp"
#include "gim/errors.hpp"
#include "gim/generators.hpp"
#include "gim/graph_io.hpp"
#include "gim/minor_search.hpp"
#include "gim/mwis.hpp"
#include "gim/pipeline.hpp"
#include "gim/sparsify.hpp"
#include "gim/treewidth.hpp"

namespace gim::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const VertexSet& s) { return s.members(); }

ojson to_json(const std::vector<VertexSet>& sets) {
  ojson a = ojson::array();
  for (const auto& s : sets) a.push_back(to_json(s));
  return a;
}

ojson certificate_json(const Certificate& c) { return ojson::parse(certificate_to_json(c)); }

ojson trace_json(const SparsifyTrace& t) {
  ojson j;
  j["input"] = io::to_graph6(t.input);
  j["centers"] = to_json(t.centers);
  j["contracted"] = io::to_graph6(t.contracted);
  j["degree3"] = io::to_graph6(t.degree3);
  j["degree3_padded"] = t.degree3_padded;
  ojson balls = ojson::array();
  for (const auto& b : t.balls) {
    ojson r;
    r["center"] = b.center;
    r["ball"] = to_json(b.ball);
    r["terminals"] = to_json(b.terminals);
    r["surviving"] = to_json(b.surviving);
    r["outcome"] = to_string(b.outcome);
    balls.push_back(std::move(r));
  }
  j["balls"] = std::move(balls);
  j["kept"] = to_json(t.kept);
  j["preserved_branch_sets"] = to_json(t.preserved.branch_sets);
  j["preserved_valid"] = validate_minor_model(t.preserved).ok();
  return j;
}

ojson bounds_json(const Graph& g) {
  ojson j;
  const auto b = treewidth_bounds(g);
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  return j;
}

ojson pipeline_json(const PipelineResult& p, bool with_traces) {
  ojson j;
  j["classes"] = to_json(p.classes);
  ojson steps = ojson::array();
  for (const auto& s : p.steps) {
    ojson r;
    r["class"] = s.class_index;
    r["skipped"] = s.skipped;
    r["centers"] = to_json(s.centers);
    r["n_before"] = s.n_before;
    r["n_after"] = s.n_after;
    if (with_traces && s.trace) r["trace"] = trace_json(*s.trace);
    steps.push_back(std::move(r));
  }
  j["steps"] = std::move(steps);
  j["final_vertices"] = p.final_subgraph.to_old;
  j["final_graph"] = io::to_graph6(p.final_graph());
  j["final_sparsifiable"] = is_sparsifiable(p.final_graph()).ok;
  return j;
}

ojson elimination_json(const EliminationResult& r) {
  ojson j;
  j["initial_violations"] = r.initial_violations;
  ojson steps = ojson::array();
  for (const auto& s : r.steps) {
    ojson x;
    x["edge"] = {s.edge.first, s.edge.second};
    x["owners"] = {s.owner_a, s.owner_b};
    x["rule"] = to_string(s.rule);
    x["removed"] = s.removed;
    if (s.receiver != kAbsent) x["receiver"] = s.receiver;
    x["violations_before"] = s.violations_before;
    x["violations_after"] = s.violations_after;
    steps.push_back(std::move(x));
  }
  j["steps"] = std::move(steps);
  return j;
}

Graph load_pattern(const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::read_graph_file(spec);
  return gen::from_tag(spec);
}

std::vector<std::uint64_t> read_weights(const std::string& path, Vertex n) {
  std::istringstream in(io::read_text_file(path));
  std::vector<std::uint64_t> w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (tok.empty() || tok[0] == '-') throw std::invalid_argument(tok);
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw InvalidInput(path + ": weight " + std::to_string(w.size() + 1) + " ('" + tok +
                         "') is not a non-negative integer");
    w.push_back(v);
  }
  if (w.size() != static_cast<std::size_t>(n))
    throw InvalidInput(path + ": expected " + std::to_string(n) + " weights, found " + std::to_string(w.size()));
  return w;
}

int search_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::None: return kNotFound;
    case SearchStatus::BudgetExhausted: return kBudgetExhausted;
  }
  return kInternalError;
}

// Options shared by the subcommands; one struct so the manifest can record them.
struct Options {
  std::string graph;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 2'000'000;
  std::size_t state_budget = 2'000'000;

  std::string trace;
  std::string oracle = "heuristic";
  std::string td;
  bool exact = false;
  std::string pattern;
  std::string kind = "minor";
  std::size_t max_branch_set_size = 0;
  std::string cert;
  int k = 4;
  std::string weights;
  std::string solver = "branching";
  int threshold = 0;
  std::string tag;
  std::string format = "g6";
  std::string manifest;
  bool check = false;
};

class Runner {
 public:
  Runner(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err) {}

  int run() {
    CLI::App app{"Grid induced minors, sparsification, treewidth and independent sets", "gim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto graph_arg = [&](CLI::App* s) { s->add_option("graph", o_.graph, "graph file (.g6 or .el)")->required(); };
    auto out_opt = [&](CLI::App* s) { s->add_option("--out", o_.out, "write the JSON result here instead of stdout"); };
    auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", o_.seed, "seed for every random choice"); };
    auto budget_opt = [&](CLI::App* s) {
      s->add_option("--budget", o_.node_budget, "search-node budget")->check(CLI::PositiveNumber);
    };

    auto* classify = app.add_subcommand("classify", "classify every vertex as sparsifiable or not");
    graph_arg(classify);
    out_opt(classify);

    auto* sparsify = app.add_subcommand("sparsify", "shrink to a sparsifiable induced subgraph");
    graph_arg(sparsify);
    out_opt(sparsify);
    seed_opt(sparsify);
    sparsify->add_option("--trace", o_.trace, "write the per-step trace JSON here");
    sparsify->add_option("--oracle", o_.oracle, "degree-3 subgraph oracle")
        ->check(CLI::IsMember({"heuristic", "exhaustive"}));

    auto* eliminate = app.add_subcommand("eliminate", "turn a minor certificate into an induced minor one");
    eliminate->add_option("certificate", o_.graph, "certificate JSON")->required();
    out_opt(eliminate);
    eliminate->add_option("--cert", o_.cert, "write the rewritten certificate here");

    auto* partition = app.add_subcommand("partition5", "greedy partition into distance-5 independent sets");
    graph_arg(partition);
    out_opt(partition);

    auto* treewidth = app.add_subcommand("treewidth", "treewidth bounds or exact value");
    graph_arg(treewidth);
    out_opt(treewidth);
    treewidth->add_flag("--exact", o_.exact, "exact treewidth (small graphs)");
    treewidth->add_option("--state-budget", o_.state_budget, "subset budget of the exact solver")
        ->check(CLI::PositiveNumber);
    treewidth->add_option("--td", o_.td, "write the decomposition in .td format here");

    auto* find = app.add_subcommand("find-minor", "search for a minor or induced minor model");
    graph_arg(find);
    out_opt(find);
    seed_opt(find);
    budget_opt(find);
    find->add_option("--pattern", o_.pattern, "pattern file or family tag such as grid:3")->required();
    find->add_option("--kind", o_.kind, "minor or induced")->check(CLI::IsMember({"minor", "induced", "induced_minor"}));
    find->add_option("--max-branch-set-size", o_.max_branch_set_size, "cap on branch-set size (0: none)");
    find->add_option("--cert", o_.cert, "write the certificate here when found");

    auto* grid = app.add_subcommand("grid-pipeline", "certify a (k-2)x(k-2) grid induced minor");
    graph_arg(grid);
    out_opt(grid);
    seed_opt(grid);
    budget_opt(grid);
    grid->add_option("--k", o_.k, "side of the grid minor searched after sparsifying")->check(CLI::Range(4, 64));
    grid->add_option("--cert", o_.cert, "write the certificate here when found");

    auto* mwis = app.add_subcommand("mwis", "maximum-weight independent set");
    graph_arg(mwis);
    out_opt(mwis);
    mwis->add_option("--weights", o_.weights, "whitespace-separated weights, one per vertex (default all 1)");
    mwis->add_option("--solver", o_.solver, "branching, dp or bruteforce")
        ->check(CLI::IsMember({"branching", "dp", "bruteforce"}));
    mwis->add_option("--threshold", o_.threshold, "branching degree threshold (default from n)")
        ->check(CLI::PositiveNumber);

    auto* validate = app.add_subcommand("validate-cert", "re-check a certificate");
    validate->add_option("certificate", o_.graph, "certificate JSON")->required();
    out_opt(validate);

    auto* generate = app.add_subcommand("generate", "write a graph from a family tag");
    generate->add_option("tag", o_.tag, "e.g. grid:8, wall:6, random_regular:100:3:7")->required();
    generate->add_option("--format", o_.format, "g6 or el")->check(CLI::IsMember({"g6", "el"}));
    out_opt(generate);

    auto* replay = app.add_subcommand("replay", "re-run the command recorded in a result's manifest");
    replay->add_option("result", o_.manifest, "JSON result carrying a manifest")->required();
    replay->add_flag("--check", o_.check, "fail unless every recorded output is reproduced byte for byte");

    try {
      std::vector<std::string> reversed(args_.rbegin(), args_.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kInputError;
    }

    CLI::App* used = app.get_subcommands().front();
    sub_ = used->get_name();
    try {
      if (sub_ == "classify") return cmd_classify();
      if (sub_ == "sparsify") return cmd_sparsify();
      if (sub_ == "eliminate") return cmd_eliminate();
      if (sub_ == "partition5") return cmd_partition();
      if (sub_ == "treewidth") return cmd_treewidth();
      if (sub_ == "find-minor") return cmd_find_minor();
      if (sub_ == "grid-pipeline") return cmd_grid_pipeline();
      if (sub_ == "mwis") return cmd_mwis();
      if (sub_ == "validate-cert") return cmd_validate();
      if (sub_ == "generate") return cmd_generate();
      if (sub_ == "replay") return cmd_replay();
    } catch (const InvalidInput& e) {
      err_ << "gim " << sub_ << ": input error: " << e.what() << "\n";
      return kInputError;
    } catch (const PreconditionError& e) {
      err_ << "gim " << sub_ << ": precondition failed: " << e.what() << "\n";
      return kInputError;
    } catch (const ResourceError& e) {
      err_ << "gim " << sub_ << ": budget exhausted: " << e.what() << "\n";
      return kBudgetExhausted;
    } catch (const std::exception& e) {
      err_ << "gim " << sub_ << ": internal error: " << e.what() << "\n";
      return kInternalError;
    }
    return kInternalError;
  }

 private:
  ojson manifest() const {
    ojson m;
    m["tool"] = "gim";
    m["version"] = kToolVersion;
    m["subcommand"] = sub_;
    m["args"] = args_;
    ojson inputs = ojson::array();
    if (!o_.graph.empty()) inputs.push_back(o_.graph);
    if (!o_.weights.empty()) inputs.push_back(o_.weights);
    if (!o_.pattern.empty() && std::filesystem::exists(o_.pattern)) inputs.push_back(o_.pattern);
    m["inputs"] = std::move(inputs);
    ojson outputs = ojson::array();
    for (const auto* p : {&o_.out, &o_.cert, &o_.trace, &o_.td})
      if (!p->empty()) outputs.push_back(*p);
    m["outputs"] = std::move(outputs);
    m["seed"] = o_.seed;
    m["budgets"] = {{"nodes", o_.node_budget}, {"treewidth_states", o_.state_budget}};
    return m;
  }

  int emit(ojson body, int code) {
    ojson doc;
    doc["manifest"] = manifest();
    for (auto& [key, value] : body.items()) doc[key] = value;
    const std::string text = doc.dump(2) + "\n";
    if (o_.out.empty()) out_ << text;
    else io::write_text_file(o_.out, text);
    return code;
  }

  Graph graph() const { return io::read_graph_file(o_.graph); }

  int cmd_classify() {
    const Graph g = graph();
    ojson types = ojson::array();
    for (Vertex v = 0; v < g.n(); ++v) types.push_back({{"vertex", v}, {"type", to_string(classify_vertex(g, v))}});
    const auto verdict = is_sparsifiable(g);
    ojson body;
    body["verdict"] = verdict.ok ? "accept" : "reject";
    if (!verdict.ok) body["offender"] = verdict.offender;
    body["types"] = std::move(types);
    return emit(std::move(body), kOk);
  }

  int cmd_sparsify() {
    const Graph g = graph();
    const Degree3Oracle oracle =
        o_.oracle == "exhaustive"
            ? Degree3Oracle([](const Graph& h) { return degree3_subgraph(h, Degree3Mode::Exhaustive); })
            : default_degree3_oracle();
    const PipelineResult p = sparsify_pipeline(g, oracle);
    if (!o_.trace.empty()) io::write_text_file(o_.trace, pipeline_json(p, true).dump(2) + "\n");
    ojson body = pipeline_json(p, false);
    body["treewidth_input"] = bounds_json(g);
    body["treewidth_final"] = bounds_json(p.final_graph());
    return emit(std::move(body), kOk);
  }

  int cmd_eliminate() {
    const Certificate in = certificate_from_json(io::read_text_file(o_.graph));
    if (auto v = validate_minor_model(in.model); !v) {
      err_ << "gim eliminate: certificate rejected: " << to_string(v.condition) << ": " << v.message << "\n";
      return emit({{"verdict", "reject"}, {"condition", to_string(v.condition)}, {"message", v.message}}, kRejected);
    }
    const EliminationResult r = eliminate_violating_edges(in.model);
    Certificate outc{r.model, ModelKind::InducedMinor, in.pattern_tag,
                     "eliminate: " + std::to_string(r.initial_violations) + " violating edges removed in " +
                         std::to_string(r.steps.size()) + " steps"};
    if (auto v = outc.validate(); !v) throw InvariantViolation("rewritten certificate fails: " + v.message);
    if (!o_.cert.empty()) io::write_text_file(o_.cert, certificate_to_json(outc));
    ojson body = elimination_json(r);
    body["certificate"] = certificate_json(outc);
    return emit(std::move(body), kOk);
  }

  int cmd_partition() {
    const Graph g = graph();
    const auto classes = partition_distance5(g);
    ojson body;
    body["max_degree"] = g.n() ? g.max_degree() : 0;
    body["class_count"] = classes.size();
    body["classes"] = to_json(classes);
    return emit(std::move(body), kOk);
  }

  int cmd_treewidth() {
    const Graph g = graph();
    ojson body;
    TreeDecomposition d;
    if (o_.exact) {
      auto r = treewidth_exact(g, o_.state_budget);
      body["exact"] = true;
      body["treewidth"] = r.width;
      d = std::move(r.decomposition);
    } else {
      auto b = treewidth_bounds(g);
      body["exact"] = false;
      body["lower"] = b.lower;
      body["upper"] = b.upper;
      d = std::move(b.upper_witness);
    }
    const auto v = validate_decomposition(g, d);
    if (!v) throw InvariantViolation("decomposition fails validation: " + v.message);
    body["decomposition_width"] = d.width();
    body["bags"] = d.bags.size();
    if (!o_.td.empty()) io::write_text_file(o_.td, to_td_format(d, g.n()));
    return emit(std::move(body), kOk);
  }

  SearchConfig search_config() const {
    SearchConfig cfg;
    cfg.kind = parse_kind(o_.kind);
    if (o_.max_branch_set_size > 0) cfg.max_branch_set_size = o_.max_branch_set_size;
    cfg.node_budget = o_.node_budget;
    cfg.seed = o_.seed;
    return cfg;
  }

  int cmd_find_minor() {
    const Graph g = graph();
    const Graph pattern = load_pattern(o_.pattern);
    const SearchConfig cfg = search_config();
    const SearchResult r = find_model(g, pattern, cfg);
    ojson body;
    body["status"] = to_string(r.status);
    body["decided_by"] = r.decided_by;
    body["nodes"] = r.nodes;
    if (r.model) {
      Certificate c{*r.model, cfg.kind, std::filesystem::exists(o_.pattern) ? "" : o_.pattern,
                    "find-minor: " + r.decided_by + " search, " + std::to_string(r.nodes) + " nodes"};
      if (auto v = c.validate(); !v) throw InvariantViolation("found model fails validation: " + v.message);
      if (!o_.cert.empty()) io::write_text_file(o_.cert, certificate_to_json(c));
      body["certificate"] = certificate_json(c);
    }
    return emit(std::move(body), search_exit(r.status));
  }

  int cmd_grid_pipeline() {
    const Graph g = graph();
    SearchConfig cfg = search_config();
    const GridPipelineResult r = grid_induced_minor_pipeline(g, o_.k, cfg);
    ojson body;
    body["status"] = to_string(r.status);
    body["stage"] = r.stage;
    if (r.sparsified) {
      body["sparsified_vertices"] = r.sparsified->final_graph().n();
      body["sparsified_treewidth"] = bounds_json(r.sparsified->final_graph());
    }
    if (r.search) {
      body["grid_search"] = {{"status", to_string(r.search->status)},
                             {"decided_by", r.search->decided_by},
                             {"nodes", r.search->nodes}};
    }
    if (r.elimination) body["elimination"] = elimination_json(*r.elimination);
    int code = kNotFound;
    if (r.status == PipelineStatus::BudgetExhausted) code = kBudgetExhausted;
    if (r.certificate) {
      const std::string text = certificate_to_json(*r.certificate);
      // What goes to disk is what a later validate-cert will read.
      if (auto v = certificate_from_json(text).validate(); !v)
        throw InvariantViolation("serialized certificate fails validation: " + v.message);
      if (!o_.cert.empty()) io::write_text_file(o_.cert, text);
      body["certificate"] = ojson::parse(text);
      code = kOk;
    }
    return emit(std::move(body), code);
  }

  int cmd_mwis() {
    WeightedGraph w = WeightedGraph::unit(graph());
    if (!o_.weights.empty()) w.weights = read_weights(o_.weights, w.graph.n());
    ojson body;
    body["solver"] = o_.solver;
    MwisSolution s;
    if (o_.solver == "bruteforce") {
      s = mwis_bruteforce(w);
    } else if (o_.solver == "dp") {
      const auto d = w.graph.n() <= kExactTreewidthMaxVertices ? treewidth_exact(w.graph).decomposition
                                                               : treewidth_bounds(w.graph).upper_witness;
      body["decomposition_width"] = d.width();
      s = mwis_treewidth_dp(w, d);
    } else {
      const int t = o_.threshold > 0 ? o_.threshold : default_branching_threshold(w.graph.n());
      const auto r = mwis_branching(w, t);
      s = r.solution;
      body["threshold"] = t;
      ojson widths = ojson::object();
      for (auto [width, count] : r.stats.leaf_widths) widths[std::to_string(width)] = count;
      body["stats"] = {{"tree_nodes", r.stats.tree_nodes},
                       {"branchings", r.stats.branchings},
                       {"leaves", r.stats.leaves},
                       {"max_branch_depth", r.stats.max_branch_depth},
                       {"leaf_widths", widths}};
    }
    body["value"] = s.total;
    body["set"] = to_json(s.set);
    return emit(std::move(body), kOk);
  }

  int cmd_validate() {
    const Certificate c = certificate_from_json(io::read_text_file(o_.graph));
    const auto v = c.validate();
    ojson body;
    body["verdict"] = v.ok() ? "accept" : "reject";
    body["kind"] = to_string(c.kind);
    body["condition"] = to_string(v.condition);
    if (!v.ok()) {
      body["message"] = v.message;
      body["pattern_vertices"] = v.pattern_vertices;
      body["host_vertices"] = v.host_vertices;
      err_ << "gim validate-cert: rejected: " << to_string(v.condition) << ": " << v.message << "\n";
    }
    return emit(std::move(body), v.ok() ? kOk : kRejected);
  }

  int cmd_generate() {
    const Graph g = gen::from_tag(o_.tag);
    const std::string text = o_.format == "el" ? io::to_edge_list(g) : io::to_graph6(g) + "\n";
    if (o_.out.empty()) out_ << text;
    else io::write_text_file(o_.out, text);
    return kOk;
  }

  int cmd_replay() {
    const std::string recorded = io::read_text_file(o_.manifest);
    ojson doc;
    std::vector<std::string> args;
    std::vector<std::string> outputs;
    try {
      doc = ojson::parse(recorded);
      args = doc.at("manifest").at("args").get<std::vector<std::string>>();
      outputs = doc.at("manifest").at("outputs").get<std::vector<std::string>>();
    } catch (const ojson::exception& e) {
      throw InvalidInput(o_.manifest + ": no usable manifest: " + e.what());
    }
    if (args.empty() || args.front() == "replay") throw InvalidInput(o_.manifest + ": manifest cannot be replayed");
    std::map<std::string, std::optional<std::string>> before;
    for (const auto& p : outputs)
      before[p] = std::filesystem::exists(p) ? std::optional(io::read_text_file(p)) : std::nullopt;

    std::ostringstream captured;
    const int code = Runner(args, captured, err_).run();
    out_ << captured.str();
    if (!o_.check) return code;

    std::vector<std::string> mismatched;
    for (const auto& [path, old] : before) {
      const auto now = std::filesystem::exists(path) ? std::optional(io::read_text_file(path)) : std::nullopt;
      if (old != now) mismatched.push_back(path);
    }
    if (!captured.str().empty() && captured.str() != recorded) mismatched.push_back("stdout");
    if (!mismatched.empty()) {
      err_ << "gim replay: outputs differ:";
      for (const auto& m : mismatched) err_ << ' ' << m;
      err_ << "\n";
      return kRejected;
    }
    err_ << "gim replay: outputs identical\n";
    return code;
  }

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::string sub_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(args, out, err).run();
}

}  // namespace gim::cli
