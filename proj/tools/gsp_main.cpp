// Command-line front end: generate graphs, compute the smoothing parameters
// a / b / gamma with witnesses, verify the bound inequalities, export
// partitions as DOT, and emit the split-variable model.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsp/bounds.hpp"
#include "gsp/complementarity.hpp"
#include "gsp/families.hpp"
#include "gsp/graph.hpp"
#include "gsp/l1.hpp"
#include "gsp/linf.hpp"
#include "gsp/rgg.hpp"
#include "gsp/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace gsp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

Graph load_connected_graph(const std::string& path) {
  Graph g = parse_edge_list(read_input(path));
  if (!is_connected(g))
    throw std::invalid_argument(
        "input graph is disconnected; everything computed here assumes a connected graph");
  return g;
}

json rational_json(const Rational& r) {
  return json{{"value", r.str()}, {"value_float", r.to_double()}};
}

json cut_json(const Cut& c) {
  json j;
  j["side"] = c.side.members();
  j["part_sizes"] = {c.side.size(), c.side.universe() - c.side.size()};
  j["cut_edges"] = c.boundary_size;
  j["density"] = c.rho.str();
  j["density_float"] = c.rho.to_double();
  j["xi"] = c.xi_s.str();
  j["xi_complement"] = c.xi_comp.str();
  return j;
}

json bounds_json(const BoundsReport& rep) {
  json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["d_min"] = rep.d_min;
  j["d_max"] = rep.d_max;
  j["a"] = rep.a;
  j["lambda_max"] = rep.lambda_max;
  j["mc"] = rep.mc;
  j["mincut_side_size"] = rep.mincut_side_size;
  if (rep.b_is_exact) {
    j["b"] = rational_json(rep.b);
    j["b"]["exact"] = true;
  } else {
    j["b"] = json{{"exact", false},
                  {"upper_bound", rep.b_upper.str()},
                  {"upper_bound_float", rep.b_upper.to_double()}};
  }
  if (rep.xi_available) {
    j["xi_min"] = rep.xi_min_value.str();
    j["isoperimetric"] = rep.isoperimetric_value.str();
  } else {
    j["xi_min"] = nullptr;
    j["isoperimetric"] = nullptr;
  }
  j["witness"] = cut_json(rep.witness);
  j["records"] = json::array();
  for (const auto& r : rep.records) {
    json rec;
    rec["name"] = r.name;
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    rec["holds"] = r.holds;
    rec["slack"] = r.slack;
    rec["exact"] = r.exact;
    rec["partial"] = r.partial;
    if (!r.note.empty()) rec["note"] = r.note;
    j["records"].push_back(rec);
  }
  j["all_hold"] = rep.all_hold();
  j["notes"] = rep.notes;
  return j;
}

struct CommonOpts {
  std::string input;
  std::string output;
  int cap = kDefaultEnumerationCap;
  bool heuristic = false;
  double tol = kBoundsTol;
  double spectral_tol = kSpectralTol;
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_cap = true) {
  cmd->add_option("--input", o.input, "edge-list file ('-' or omitted: stdin)");
  cmd->add_option("--output", o.output, "output file ('-' or omitted: stdout)");
  if (with_cap) {
    cmd->add_option("--cap", o.cap, "exact-enumeration vertex cap")->capture_default_str();
    cmd->add_flag("--heuristic", o.heuristic,
                  "over the cap, fall back to the min-cut upper bound instead of refusing");
    cmd->add_option("--workers", o.workers, "worker threads for the subset scan (0 = auto)");
    cmd->add_option("--tol", o.tol, "comparison tolerance for bound checks")
        ->capture_default_str();
    cmd->add_option("--spectral-tol", o.spectral_tol,
                    "off-diagonal mass target for the eigensolver")
        ->capture_default_str();
  }
}

// gen ------------------------------------------------------------------

struct GenOpts {
  std::string family;
  int n = 0;
  int ell = 0;
  std::vector<int> parts;
  bool rgg = false;
  double radius = 0.0;
  std::uint64_t seed = 1;
  int retries = 64;
  std::string output;
};

int run_gen(const GenOpts& o) {
  std::ostringstream header;
  Graph g;
  if (o.rgg) {
    if (o.n <= 0 || o.radius <= 0.0) throw UsageError("--rgg needs --n and --radius");
    RggInstance inst;
    try {
      inst = random_geometric_connected(o.n, o.radius, o.seed, o.retries);
    } catch (const std::runtime_error& e) {
      throw CapExceeded(e.what());  // retry budget exhausted
    }
    g = inst.graph;
    header << "# rgg n=" << o.n << " radius=" << o.radius << " seed_used=" << inst.seed_used
           << "\n";
    std::cerr << "rgg: seed_used=" << inst.seed_used << " m=" << g.num_edges() << "\n";
  } else if (!o.family.empty()) {
    FamilySpec spec;
    spec.family = family_from_string(o.family);
    spec.n = o.n;
    spec.ell = o.ell;
    if (spec.family == Family::Starlike) {
      spec = FamilySpec::starlike(o.parts);
    } else if (spec.family == Family::Cube) {
      if (o.n != 0 && o.n != 8) throw UsageError("--family cube has a fixed 8 vertices");
      spec.n = 8;
    }
    g = generate(spec);
    header << "# " << o.family;
    if (spec.family == Family::Starlike) {
      header << " parts=";
      for (size_t i = 0; i < o.parts.size(); ++i) header << (i ? "," : "") << o.parts[i];
    } else {
      header << " n=" << spec.n;
      if (spec.family == Family::Broom) header << " ell=" << spec.ell;
    }
    header << "\n";
  } else {
    throw UsageError("gen needs either --family or --rgg");
  }
  write_output(o.output, header.str() + render_edge_list(g));
  return kExitOk;
}

// compute ---------------------------------------------------------------

struct ComputeOpts : CommonOpts {
  std::string what = "a,b,gamma,bounds";
  bool timings = false;
};

bool wants(const std::string& what, const std::string& key) {
  std::stringstream ss(what);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (tok == key) return true;
  return false;
}

int run_compute(const ComputeOpts& o) {
  {
    std::stringstream ss(o.what);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (tok != "a" && tok != "b" && tok != "gamma" && tok != "bounds")
        throw UsageError("--what accepts a,b,gamma,bounds; got \"" + tok + "\"");
  }
  Graph g = load_connected_graph(o.input);
  int n = g.num_vertices();

  bool need_exact_b = wants(o.what, "b") || wants(o.what, "bounds");
  if (need_exact_b && n > o.cap && !o.heuristic)
    throw CapExceeded("graph has " + std::to_string(n) + " vertices, over the exact cap " +
                      std::to_string(o.cap) + "; pass --heuristic for bound-only output");

  json out;
  out["graph"] = {{"n", n}, {"m", g.num_edges()}};
  json timings = json::object();
  auto timed = [&](const char* key, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    timings[key] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  if (wants(o.what, "a")) {
    timed("a", [&] {
      SpectralResult sr = analyze_spectral(g, o.spectral_tol);
      out["a"] = sr.a;
      out["lambda_max"] = sr.lambda_max;
      json fied;
      fied["values"] = sr.fiedler.values;
      fied["rayleigh"] = sr.fiedler.objective;
      fied["bisection"] = sr.bisection.members();
      out["fiedler"] = fied;
    });
  }

  if (wants(o.what, "b")) {
    timed("b", [&] {
      if (n <= o.cap) {
        L1Result res = b_exact(g, o.cap, o.workers);
        json b = rational_json(res.b);
        b["exact"] = true;
        b["witness"] = cut_json(res.sparsest);
        b["vector"] = res.vector.values;
        b["enumerated"] = res.enumerated;
        out["b"] = b;
      } else {
        BUpperBound ub = heuristic_b_upper(g);
        json b;
        b["exact"] = false;
        b["upper_bound"] = ub.bound.str();
        b["upper_bound_float"] = ub.bound.to_double();
        b["witness"] = cut_json(ub.witness);
        out["b"] = b;
      }
    });
  }

  if (wants(o.what, "gamma")) {
    timed("gamma", [&] {
      LinfResult r = gamma(g);
      json gj;
      gj["value"] = r.gamma;
      gj["argmin_k"] = r.argmin_k;
      gj["x"] = r.x.values;
      out["gamma"] = gj;
    });
  }

  if (wants(o.what, "bounds")) {
    timed("bounds", [&] { out["bounds"] = bounds_json(bounds_report(g, o.cap, o.tol, o.spectral_tol)); });
  }

  if (o.timings) out["timings_ms"] = timings;
  write_output(o.output, out.dump(2) + "\n");
  return kExitOk;
}

// partition / compare ----------------------------------------------------

Cut partition_cut(const Graph& g, const std::string& method, const CommonOpts& o) {
  if (method == "l1") {
    if (g.num_vertices() > o.cap)
      throw CapExceeded("l1 partition needs exact enumeration; graph is over the cap");
    return b_exact(g, o.cap, o.workers).sparsest;
  }
  if (method == "l2") return make_cut(g, spectral_bisection(g, o.spectral_tol));
  throw UsageError("--method must be l1 or l2");
}

std::string render_dot(const Graph& g, const Cut& c, const std::string& method) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  // method=" << method << " cut_edges=" << c.boundary_size << " parts="
      << c.side.size() << "|" << (c.side.universe() - c.side.size()) << " density="
      << c.rho.str() << "\n";
  out << "  node [style=filled];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    out << "  " << v << " [fillcolor=\"" << (c.side.contains(v) ? "#8dd3c7" : "#fb8072")
        << "\"];\n";
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (c.side.contains(u) != c.side.contains(v)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

int run_partition(const CommonOpts& o, const std::string& method) {
  Graph g = load_connected_graph(o.input);
  Cut c = partition_cut(g, method, o);
  write_output(o.output, render_dot(g, c, method));
  std::cerr << "method=" << method << " cut_edges=" << c.boundary_size << " parts="
            << c.side.size() << "|" << (g.num_vertices() - c.side.size()) << " density="
            << c.rho.str() << " (" << c.rho.to_double() << ")\n";
  return kExitOk;
}

int run_compare(const CommonOpts& o) {
  Graph g = load_connected_graph(o.input);
  Cut l1 = partition_cut(g, "l1", o);
  Cut l2 = partition_cut(g, "l2", o);
  json out;
  out["graph"] = {{"n", g.num_vertices()}, {"m", g.num_edges()}};
  out["l1"] = cut_json(l1);
  out["l2"] = cut_json(l2);
  bool le = l1.rho <= l2.rho;
  out["density_l1_le_l2"] = le;
  if (!le)
    throw std::runtime_error("exact sparsest cut came out denser than the spectral cut");
  write_output(o.output, out.dump(2) + "\n");
  return kExitOk;
}

int run_export_model(const CommonOpts& o) {
  Graph g = parse_edge_list(read_input(o.input));
  write_output(o.output, render_complementarity_model(export_complementarity_model(g)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph smoothing parameters and partitions (a, b, gamma)"};
  app.require_subcommand(1);

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a family graph or a random geometric graph");
  gen->add_option("--family", gen_opts.family,
                  "path|cycle|star|complete|wheel|cube|broom|starlike");
  gen->add_option("--n", gen_opts.n, "vertex count");
  gen->add_option("--ell", gen_opts.ell, "broom handle length");
  gen->add_option("--parts", gen_opts.parts, "starlike star sizes, e.g. --parts 3,3,3")
      ->delimiter(',');
  gen->add_flag("--rgg", gen_opts.rgg, "random geometric graph in the unit square");
  gen->add_option("--radius", gen_opts.radius, "rgg connection radius");
  gen->add_option("--seed", gen_opts.seed, "rgg seed (bumped until connected)");
  gen->add_option("--retries", gen_opts.retries, "rgg connectivity retry cap")
      ->capture_default_str();
  gen->add_option("--output", gen_opts.output, "output file ('-' or omitted: stdout)");

  ComputeOpts comp_opts;
  auto* compute = app.add_subcommand("compute", "compute requested quantities as JSON");
  add_common(compute, comp_opts);
  compute->add_option("--what", comp_opts.what, "comma list from {a,b,gamma,bounds}")
      ->capture_default_str();
  compute->add_flag("--timings", comp_opts.timings, "include wall-clock timings in the JSON");

  CommonOpts bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "bound verification report as JSON");
  add_common(bounds_cmd, bounds_opts);

  CommonOpts part_opts;
  std::string method = "l1";
  auto* partition = app.add_subcommand("partition", "partition to DOT, colored by side");
  add_common(partition, part_opts);
  partition->add_option("--method", method, "l1|l2")->capture_default_str();

  CommonOpts cmp_opts;
  auto* compare = app.add_subcommand("compare", "compare the l1 and l2 partitions as JSON");
  add_common(compare, cmp_opts);

  CommonOpts model_opts;
  auto* model =
      app.add_subcommand("export-model", "split-variable model of the l1 problem as text");
  add_common(model, model_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opts);
    if (compute->parsed()) return run_compute(comp_opts);
    if (bounds_cmd->parsed()) {
      Graph g = load_connected_graph(bounds_opts.input);
      if (g.num_vertices() > bounds_opts.cap && !bounds_opts.heuristic)
        throw CapExceeded("graph over the exact cap; pass --heuristic for a partial report");
      json out = bounds_json(bounds_report(g, bounds_opts.cap, bounds_opts.tol,
                                           bounds_opts.spectral_tol));
      write_output(bounds_opts.output, out.dump(2) + "\n");
      return kExitOk;
    }
    if (partition->parsed()) return run_partition(part_opts, method);
    if (compare->parsed()) return run_compare(cmp_opts);
    if (model->parsed()) return run_export_model(model_opts);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
