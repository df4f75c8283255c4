// dsgadget: generate (3,3)-SAT instances, reduce them to dominating-set
// gadget graphs, realize those graphs exactly as ball / unit-ball / planar
// fat-object scenes, verify the scenes, solve the instances, and render
// figures.
//
// Exit codes: 0 success, 2 semantic verification failure, 3 input error.

#include "dsg/cnf.hpp"
#include "dsg/graph.hpp"
#include "dsg/json_io.hpp"
#include "dsg/reductions.hpp"
#include "dsg/scene.hpp"
#include "dsg/solvers.hpp"
#include "svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 2;
constexpr int kInputError = 3;

using nlohmann::json;
using namespace dsg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned i = 0; i < len; ++i) os << std::setw(2) << int(md[i]);
  return os.str();
}

// Run manifest, emitted only when --manifest is given. The duration field is
// the one deliberately non-reproducible value, so the manifest is not a
// primary output.
struct Manifest {
  std::string path;
  json inputs = json::object();
  json params = json::object();
  std::string command;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void note_input(const std::string& file, const std::string& content) {
    if (!path.empty()) inputs[file] = sha256_hex(content);
  }
  void write(const std::string& outcome) {
    if (path.empty()) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["params"] = params;
    j["outcome"] = outcome;
    j["duration_ms"] = ms;
    write_file_atomic(path, j.dump(2) + "\n");
  }
};

void print_diff(const GraphDiff& diff, std::ostream& os) {
  auto dump = [&](const char* name,
                  const std::vector<std::pair<std::string, std::string>>& v) {
    os << "  " << name << " (" << v.size() << ")";
    std::size_t shown = std::min<std::size_t>(v.size(), 12);
    for (std::size_t i = 0; i < shown; ++i)
      os << " " << v[i].first << "-" << v[i].second;
    if (shown < v.size()) os << " ...";
    os << "\n";
  };
  dump("missing edges:", diff.missing_edges);
  dump("extra edges:  ", diff.extra_edges);
  if (!diff.label_mismatches.empty()) {
    os << "  label mismatches (" << diff.label_mismatches.size() << ")";
    for (std::size_t i = 0;
         i < std::min<std::size_t>(diff.label_mismatches.size(), 12); ++i)
      os << " " << diff.label_mismatches[i];
    os << "\n";
  }
}

// Trivial instances produced when unit propagation already decides the
// formula: a single ball whose graph has dominating-set optimum 1, paired
// with budget 1 (yes) or 0 (no) so every downstream equivalence holds.
std::pair<ReductionOutput, Scene> trivial_instance(bool satisfiable,
                                                   bool weighted) {
  ReductionOutput red;
  red.target = weighted ? TargetKind::WeightedDominatingSet
                        : TargetKind::DominatingSet;
  red.graph.add_vertex("triv");
  red.budget = Rat(satisfiable ? 1 : 0);
  Scene s;
  s.dimension = 3;
  Ball b;
  b.label = "triv";
  b.center = {Coord::of(Rat(0)), Coord::of(Rat(0)), Coord::of(Rat(0))};
  b.radius_sq = Rat(1);
  s.balls.push_back(b);
  s.expected = red.graph;
  s.params["k"] = *red.budget;
  return {red, s};
}

struct ReduceArgs {
  std::string cnf_path, graph_path, target, out, out_scene;
  std::string epsilon, angle_scale, margin, k;
  std::string preset = "certified";
  bool strict = false;
  bool printed_c7z = false;
};

int validate_and_report(const CnfFormula& f, bool strict) {
  ValidationReport rep = validate_33(f);
  if (rep.ok()) return kOk;
  for (const auto& issue : rep.issues)
    (strict ? std::cerr : std::cerr) << (strict ? "error: " : "warning: ")
                                     << issue.describe() << "\n";
  return strict ? kInputError : kOk;
}

WeightedUnitParams resolve_weighted_params(const ReduceArgs& a, int n, int t) {
  WeightedUnitParams p = a.preset == "paper"
                             ? WeightedUnitParams::paper(n, t)
                             : WeightedUnitParams::certified(n, t);
  if (!a.epsilon.empty()) p.eps = rat_from_string(a.epsilon);
  if (!a.angle_scale.empty()) p.angle_scale = rat_from_string(a.angle_scale);
  if (!a.margin.empty()) p.contact_margin = rat_from_string(a.margin);
  p.printed_two_clause_z = a.printed_c7z;
  return p;
}

int cmd_reduce(const ReduceArgs& a, Manifest& mf) {
  ReductionOutput red;
  Scene scene;
  if (a.target == "split-planar") {
    if (a.graph_path.empty())
      throw std::invalid_argument("--target split-planar needs --graph");
    std::string text = read_file(a.graph_path);
    mf.note_input(a.graph_path, text);
    LabeledGraph g = graph_from_json(json::parse(text));
    Rat eps = a.epsilon.empty() ? Rat(1, 10) : rat_from_string(a.epsilon);
    red = build_split_double_cover(
        g, a.k.empty() ? std::nullopt
                       : std::optional<Rat>(rat_from_string(a.k)));
    scene = realize_split_planar(g, eps);
  } else {
    if (a.cnf_path.empty())
      throw std::invalid_argument("this target needs --cnf");
    bool weighted = a.target == "wds-unitball3d";
    if (!weighted && a.target != "ds-ball3d")
      throw std::invalid_argument("unknown target: " + a.target);
    std::string text = read_file(a.cnf_path);
    mf.note_input(a.cnf_path, text);
    CnfFormula f = parse_dimacs(text);
    if (validate_and_report(f, a.strict) != kOk) return kInputError;
    PreprocessOutcome pre = preprocess_units(f);
    if (pre.kind != PreprocessKind::Reduced) {
      bool yes = pre.kind == PreprocessKind::TrivialYes;
      std::cout << "preprocess: trivially "
                << (yes ? "satisfiable" : "unsatisfiable")
                << "; emitting a trivial instance\n";
      std::tie(red, scene) = trivial_instance(yes, weighted);
    } else {
      const CnfFormula& pf = pre.reduced;
      if (weighted) {
        red = build_gphi_weighted(pf);
        scene = realize_weighted_unit(
            pf, resolve_weighted_params(a, red.n, red.t));
      } else {
        red = build_gphi_unweighted(pf);
        scene = realize_unweighted_3d(pf);
      }
    }
  }

  RealizationReport rep = verify_realization(scene);
  if (!rep.matches) {
    std::cerr << "realization verification failed\n";
    print_diff(rep.diff, std::cerr);
    return kSemanticFailure;
  }
  std::cout << "reduce: target=" << a.target << " n=" << red.n
            << " t=" << red.t << " m=" << red.m << " |V|=" << red.graph.size()
            << " |E|=" << red.graph.num_edges();
  if (red.budget) std::cout << " budget=" << rat_to_string(*red.budget);
  std::cout << " tangent-pairs=" << rep.tangent_pairs.size() << "\n";
  for (const char* key : {"h", "eps", "epsilon"})
    if (scene.params.count(key))
      std::cout << "  " << key << " = " << rat_to_string(scene.params.at(key))
                << "\n";

  if (!a.out.empty())
    write_file_atomic(a.out, reduction_to_json(red).dump(2) + "\n");
  if (!a.out_scene.empty())
    write_file_atomic(a.out_scene, scene_to_json(scene).dump(2) + "\n");
  return kOk;
}

struct RoundtripArgs {
  std::string cnf_path, graph_path, target;
  int gen_n = 0;
  std::uint64_t seed = 0;
  bool strict = false;
  std::string epsilon;
  std::string preset = "certified";
};

int roundtrip_sat(const RoundtripArgs& a, Manifest& mf) {
  CnfFormula f;
  if (!a.cnf_path.empty()) {
    std::string text = read_file(a.cnf_path);
    mf.note_input(a.cnf_path, text);
    f = parse_dimacs(text);
  } else if (a.gen_n >= 2) {
    f = gen_random_33(a.gen_n, a.seed);
    std::cout << "gen: n=" << a.gen_n << " seed=" << a.seed << "\n";
  } else {
    throw std::invalid_argument("roundtrip needs --cnf or --gen-n");
  }
  std::cout << "parse: n=" << f.num_vars << " m=" << f.num_clauses()
            << " t=" << f.num_literals() << "\n";
  if (validate_and_report(f, a.strict) != kOk) return kInputError;

  bool weighted = a.target == "wds-unitball3d";
  bool sat = solve_dpll(f).sat;

  PreprocessOutcome pre = preprocess_units(f);
  if (pre.kind != PreprocessKind::Reduced) {
    bool yes = pre.kind == PreprocessKind::TrivialYes;
    std::cout << "preprocess: trivially "
              << (yes ? "satisfiable" : "unsatisfiable") << "\n";
    auto [red, scene] = trivial_instance(yes, weighted);
    RealizationReport rep = verify_realization(scene);
    std::cout << "verify: " << (rep.matches ? "matches" : "MISMATCH") << "\n";
    if (!rep.matches) return kSemanticFailure;
    auto ds = solve_min_dominating_set(red.graph);
    bool feasible = ds && Rat(ds->optimum) <= *red.budget;
    std::cout << "solve: min-DS = " << ds->optimum << ", budget "
              << rat_to_string(*red.budget) << "\n";
    std::cout << "dpll: " << (sat ? "SAT" : "UNSAT") << "\n";
    if (feasible == sat) {
      std::cout << (sat ? "SAT <=> DS <= k: CONFIRMED\n"
                        : "UNSAT <=> DS > k: CONFIRMED\n");
      return kOk;
    }
    std::cout << "equivalence VIOLATED\n";
    return kSemanticFailure;
  }

  const CnfFormula& pf = pre.reduced;
  ReductionOutput red;
  Scene scene;
  if (weighted) {
    red = build_gphi_weighted(pf);
    ReduceArgs ra;
    ra.preset = a.preset;
    ra.epsilon = a.epsilon;
    scene = realize_weighted_unit(pf, resolve_weighted_params(ra, red.n, red.t));
  } else {
    red = build_gphi_unweighted(pf);
    scene = realize_unweighted_3d(pf);
  }
  std::cout << "reduce: |V|=" << red.graph.size()
            << " |E|=" << red.graph.num_edges()
            << " budget=" << rat_to_string(*red.budget) << "\n";
  RealizationReport rep = verify_realization(scene);
  std::cout << "verify: " << (rep.matches ? "matches" : "MISMATCH")
            << " (tangent pairs: " << rep.tangent_pairs.size() << ")\n";
  if (!rep.matches) {
    print_diff(rep.diff, std::cerr);
    return kSemanticFailure;
  }

  std::cout << "dpll: " << (sat ? "SAT" : "UNSAT") << "\n";
  const Rat& k = *red.budget;
  if (weighted) {
    auto wds = solve_min_weight_dominating_set(red.graph);
    if (!wds) {
      std::cout << "solve: no finite-weight dominating set\n";
      return kSemanticFailure;  // gadget graphs always have one
    }
    std::cout << "solve: min-weight-DS = " << rat_to_string(wds->optimum)
              << " (nodes: " << wds->explored << ")\n";
    bool lb_ok = wds->optimum >= k;
    bool iff_ok = (wds->optimum == k) == sat;
    std::cout << "min-weight-DS >= n+t: "
              << (lb_ok ? "CONFIRMED" : "VIOLATED") << "\n";
    std::cout << (sat ? "SAT <=> min-weight-DS == n+t: "
                      : "UNSAT <=> min-weight-DS > n+t: ")
              << (iff_ok ? "CONFIRMED" : "VIOLATED") << "\n";
    return lb_ok && iff_ok ? kOk : kSemanticFailure;
  }
  auto ds = solve_min_dominating_set(red.graph);
  std::cout << "solve: min-DS = " << ds->optimum
            << " (nodes: " << ds->explored << ")\n";
  bool lb_ok = Rat(ds->optimum) >= k;
  bool iff_ok = (Rat(ds->optimum) <= k) == sat;
  std::cout << "min-DS >= n+t: " << (lb_ok ? "CONFIRMED" : "VIOLATED") << "\n";
  std::cout << (sat ? "SAT <=> min-DS <= n+t: " : "UNSAT <=> min-DS > n+t: ")
            << (iff_ok ? "CONFIRMED" : "VIOLATED") << "\n";
  return lb_ok && iff_ok ? kOk : kSemanticFailure;
}

int roundtrip_split(const RoundtripArgs& a, Manifest& mf) {
  if (a.graph_path.empty())
    throw std::invalid_argument("split-planar roundtrip needs --graph");
  std::string text = read_file(a.graph_path);
  mf.note_input(a.graph_path, text);
  LabeledGraph g = graph_from_json(json::parse(text));
  Rat eps = a.epsilon.empty() ? Rat(1, 10) : rat_from_string(a.epsilon);

  int k = solve_min_dominating_set(g)->optimum;
  std::cout << "solve: min-DS(G) = " << k << "\n";
  ReductionOutput red = build_split_double_cover(g, Rat(k));
  Scene scene = realize_split_planar(g, eps);
  RealizationReport rep = verify_realization(scene);
  std::cout << "verify: " << (rep.matches ? "matches" : "MISMATCH") << "\n";
  if (!rep.matches) {
    print_diff(rep.diff, std::cerr);
    return kSemanticFailure;
  }
  int kp = solve_min_dominating_set(red.graph)->optimum;
  auto cds = solve_min_connected_dominating_set(red.graph);
  std::vector<int> terms;
  for (const auto& t : red.terminals)
    terms.push_back(*red.graph.find_label(t));
  bool steiner_at_k = solve_steiner_tree(red.graph, terms, k).has_value();
  bool steiner_below =
      k > 0 && solve_steiner_tree(red.graph, terms, k - 1).has_value();
  bool ok = kp == k && cds && cds->optimum == k && steiner_at_k &&
            !steiner_below;
  std::cout << "min-DS(G') = " << kp << ": "
            << (kp == k ? "CONFIRMED" : "VIOLATED") << "\n";
  std::cout << "min-CDS(G') = " << (cds ? std::to_string(cds->optimum) : "-")
            << ": " << (cds && cds->optimum == k ? "CONFIRMED" : "VIOLATED")
            << "\n";
  std::cout << "Steiner(G', B, k) feasible and minimal: "
            << (steiner_at_k && !steiner_below ? "CONFIRMED" : "VIOLATED")
            << "\n";
  return ok ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dsgadget: SAT-to-dominating-set gadget reductions with exact "
      "geometric realizations"};
  app.require_subcommand(1);

  std::string manifest_path;
  app.add_option("--manifest", manifest_path,
                 "write a run manifest (inputs digests, params, duration)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a strict (3,3) formula");
  int gen_n = 4;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "number of variables (>= 2)")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen->add_option("--out", gen_out, "output DIMACS path (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "build a gadget graph and its exact geometric scene");
  ReduceArgs ra;
  reduce->add_option("--cnf", ra.cnf_path, "input DIMACS CNF");
  reduce->add_option("--graph", ra.graph_path,
                     "input Graph JSON (split-planar)");
  reduce
      ->add_option("--target", ra.target,
                   "ds-ball3d | wds-unitball3d | split-planar")
      ->required();
  reduce->add_option("--out", ra.out, "output Graph JSON path");
  reduce->add_option("--out-scene", ra.out_scene, "output Scene JSON path");
  reduce->add_option("--epsilon", ra.epsilon, "rational, e.g. 1/768");
  reduce->add_option("--angle-scale", ra.angle_scale, "rational");
  reduce->add_option("--margin", ra.margin, "rational contact margin");
  reduce->add_option("--k", ra.k, "budget for split-planar");
  reduce->add_option("--preset", ra.preset, "paper | certified")
      ->check(CLI::IsMember({"paper", "certified"}));
  reduce->add_flag("--strict-33", ra.strict, "treat (3,3) violations as fatal");
  reduce->add_flag("--printed-c7z", ra.printed_c7z,
                   "use the printed 2-clause height -(i+1/2)eps");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a Scene JSON file");
  std::string verify_scene;
  verify->add_option("--scene", verify_scene, "Scene JSON path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run an exact solver on a graph");
  std::string solve_graph, solve_problem = "ds", solve_k, solve_terminals;
  solve->add_option("--graph", solve_graph, "Graph JSON path")->required();
  solve->add_option("--problem", solve_problem, "ds | wds | cds | steiner")
      ->check(CLI::IsMember({"ds", "wds", "cds", "steiner"}));
  solve->add_option("--k", solve_k,
                    "budget (integer for ds/cds/steiner, rational for wds)");
  solve->add_option("--terminals", solve_terminals,
                    "comma-separated labels (steiner)");

  // roundtrip
  auto* roundtrip = app.add_subcommand(
      "roundtrip", "reduce, verify, solve, and check the iff equivalence");
  RoundtripArgs rt;
  roundtrip->add_option("--cnf", rt.cnf_path, "input DIMACS CNF");
  roundtrip->add_option("--graph", rt.graph_path,
                        "input Graph JSON (split-planar)");
  roundtrip
      ->add_option("--target", rt.target,
                   "ds-ball3d | wds-unitball3d | split-planar")
      ->required();
  roundtrip->add_option("--gen-n", rt.gen_n, "generate with this many vars");
  roundtrip->add_option("--seed", rt.seed, "generator seed");
  roundtrip->add_option("--epsilon", rt.epsilon, "rational");
  roundtrip->add_option("--preset", rt.preset, "paper | certified")
      ->check(CLI::IsMember({"paper", "certified"}));
  roundtrip->add_flag("--strict-33", rt.strict,
                      "treat (3,3) violations as fatal");

  // render
  auto* render = app.add_subcommand("render", "render a scene to SVG");
  std::string render_scene, render_plane = "planar", render_out;
  bool render_timestamp = false;
  render->add_option("--scene", render_scene, "Scene JSON path")->required();
  render->add_option("--plane", render_plane, "x=0 | y=0 | z=<c> | planar");
  render->add_option("--out", render_out, "output SVG path")->required();
  render->add_flag("--timestamp", render_timestamp,
                   "include a build-date comment in the SVG");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  Manifest mf;
  mf.path = manifest_path;
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    mf.command = cmd.str();
  }

  try {
    int rc = kOk;
    if (gen->parsed()) {
      mf.params = {{"n", gen_n}, {"seed", gen_seed}};
      CnfFormula f = gen_random_33(gen_n, gen_seed);
      std::string text = write_dimacs(f);
      if (gen_out.empty())
        std::cout << text;
      else
        write_file_atomic(gen_out, text);
    } else if (reduce->parsed()) {
      mf.params = {{"target", ra.target},
                   {"preset", ra.preset},
                   {"epsilon", ra.epsilon},
                   {"angle_scale", ra.angle_scale},
                   {"margin", ra.margin},
                   {"strict", ra.strict}};
      rc = cmd_reduce(ra, mf);
    } else if (verify->parsed()) {
      std::string text = read_file(verify_scene);
      mf.note_input(verify_scene, text);
      Scene s = scene_from_json(json::parse(text));
      RealizationReport rep = verify_realization(s);
      std::cout << "objects: " << s.object_count()
                << ", tangent pairs: " << rep.tangent_pairs.size() << "\n";
      std::cout << "matches: " << (rep.matches ? "true" : "false") << "\n";
      if (!rep.matches) {
        print_diff(rep.diff, std::cout);
        rc = kSemanticFailure;
      }
    } else if (solve->parsed()) {
      std::string text = read_file(solve_graph);
      mf.note_input(solve_graph, text);
      json jg = json::parse(text);
      LabeledGraph g = graph_from_json(jg);
      auto witness_labels = [&](const std::vector<int>& ids) {
        std::string out;
        for (int id : ids) out += (out.empty() ? "" : ",") + g.vertices[id].label;
        return out;
      };
      if (solve_problem == "ds" || solve_problem == "cds") {
        std::optional<int> budget;
        if (!solve_k.empty()) budget = std::stoi(solve_k);
        auto r = solve_problem == "ds"
                     ? solve_min_dominating_set(g, budget)
                     : solve_min_connected_dominating_set(g, budget);
        if (!r)
          std::cout << "INFEASIBLE\n";
        else
          std::cout << "optimum: " << r->optimum << "\nwitness: "
                    << witness_labels(r->witness)
                    << "\nnodes: " << r->explored << "\n";
      } else if (solve_problem == "wds") {
        std::optional<Rat> budget;
        if (!solve_k.empty()) budget = rat_from_string(solve_k);
        auto r = solve_min_weight_dominating_set(g, budget);
        if (!r)
          std::cout << "INFEASIBLE\n";
        else
          std::cout << "optimum: " << rat_to_string(r->optimum)
                    << "\nwitness: " << witness_labels(r->witness)
                    << "\nnodes: " << r->explored << "\n";
      } else {
        if (solve_k.empty())
          throw std::invalid_argument("steiner needs --k");
        std::vector<int> terms;
        if (!solve_terminals.empty()) {
          std::stringstream ss(solve_terminals);
          std::string item;
          while (std::getline(ss, item, ',')) {
            auto id = g.find_label(item);
            if (!id)
              throw std::invalid_argument("unknown terminal label: " + item);
            terms.push_back(*id);
          }
        } else if (jg.contains("terminals")) {
          for (const auto& t : jg["terminals"])
            terms.push_back(*g.find_label(t.get<std::string>()));
        } else {
          throw std::invalid_argument("steiner needs --terminals");
        }
        auto w = solve_steiner_tree(g, terms, std::stoi(solve_k));
        if (!w)
          std::cout << "INFEASIBLE\n";
        else
          std::cout << "FEASIBLE\nwitness: " << witness_labels(*w) << "\n";
      }
    } else if (roundtrip->parsed()) {
      mf.params = {{"target", rt.target}, {"preset", rt.preset},
                   {"gen_n", rt.gen_n},   {"seed", rt.seed},
                   {"epsilon", rt.epsilon}};
      rc = rt.target == "split-planar" ? roundtrip_split(rt, mf)
                                       : roundtrip_sat(rt, mf);
    } else if (render->parsed()) {
      std::string text = read_file(render_scene);
      mf.note_input(render_scene, text);
      Scene s = scene_from_json(json::parse(text));
      dsgtool::RenderView view = dsgtool::parse_view(render_plane);
      write_file_atomic(render_out,
                        dsgtool::render_svg(s, view, render_timestamp));
    }
    mf.write(rc == kOk ? "ok"
                       : (rc == kSemanticFailure ? "verification-failed"
                                                 : "input-error"));
    return rc;
  } catch (const RealizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_diff(e.report.diff, std::cerr);
    mf.write("verification-failed");
    return kSemanticFailure;
  } catch (const DimacsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    mf.write("input-error");
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    mf.write("input-error");
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    mf.write("input-error");
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    mf.write("input-error");
    return kInputError;
  }
}
