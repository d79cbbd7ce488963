#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "yinyang/gadget_lab.hpp"
#include "yinyang/grid.hpp"
#include "yinyang/reduction.hpp"
#include "yinyang/render.hpp"
#include "yinyang/rules.hpp"
#include "yinyang/solver.hpp"
#include "yinyang/trvb.hpp"

using namespace yinyang;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Input problems that should map to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::string default_tiles(Layout l) {
  return std::string(YINYANG_DATA_DIR) + "/tiles/" + (l == Layout::ConnectedOnly9 ? "connected9" : "tree16") + ".tiles";
}

void print_stats(const SolveStats& st) {
  std::cout << "nodes_expanded=" << st.nodes_expanded << '\n'
            << "propagations=" << st.propagations << '\n'
            << "prunes_connectivity=" << st.prunes_connectivity << '\n'
            << "prunes_window=" << st.prunes_window << '\n'
            << "elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(st.elapsed).count() << '\n';
}

std::string join(const BreakSet& s) {
  std::string out;
  for (const auto& v : s) out += (out.empty() ? "" : ",") + v;
  return out;
}

BreakSet split_ids(const std::string& s) {
  BreakSet out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SolveOpts {
  std::string puzzle;
  std::string variant = "yinyang";
  bool count = false;
  long long enumerate = 0;
  bool unique = false;
  bool stats = false;
  long long node_limit = 0;
  std::string heuristic = "constrained";
};

SolveConfig make_config(const std::string& variant, long long node_limit, const std::string& heuristic) {
  SolveConfig cfg;
  cfg.variant = parse_variant(variant);
  if (node_limit > 0) cfg.node_limit = static_cast<std::uint64_t>(node_limit);
  if (heuristic == "first")
    cfg.branch_heuristic = BranchHeuristic::FirstUnknown;
  else if (heuristic == "constrained")
    cfg.branch_heuristic = BranchHeuristic::MostConstrained;
  else
    throw std::invalid_argument("unknown heuristic " + heuristic);
  return cfg;
}

int cmd_solve(const SolveOpts& o) {
  Puzzle p = parse_puzzle(load(o.puzzle));
  SolveConfig cfg = make_config(o.variant, o.node_limit, o.heuristic);
  SolveStats st;
  int status = kOk;
  if (o.count) {
    std::cout << count_solutions(p, cfg, &st) << '\n';
  } else if (o.unique) {
    Uniqueness u = is_unique(p, cfg, &st);
    if (u.kind == Uniqueness::Kind::Unique) {
      std::cout << "unique\n" << serialize_coloring(*u.solution, &p);
    } else {
      std::cout << (u.kind == Uniqueness::Kind::None ? "UNSAT\n" : "multiple\n");
      status = kNegative;
    }
  } else if (o.enumerate > 0) {
    cfg.solution_limit = static_cast<std::uint64_t>(o.enumerate);
    std::uint64_t n = 0;
    enumerate_solutions(
        p, cfg,
        [&](const Coloring& c) {
          if (n++) std::cout << '\n';
          std::cout << serialize_coloring(c, &p);
          return true;
        },
        &st);
    if (n == 0) {
      std::cout << "UNSAT\n";
      status = kNegative;
    }
  } else {
    auto sol = solve_one(p, cfg, &st);
    if (sol) {
      std::cout << serialize_coloring(*sol, &p);
    } else {
      std::cout << "UNSAT\n";
      status = kNegative;
    }
  }
  if (o.stats) print_stats(st);
  return status;
}

int cmd_verify(const std::string& puzzle, const std::string& solution, const std::string& variant) {
  Puzzle p = parse_puzzle(load(puzzle));
  Coloring c = parse_coloring(load(solution));
  if (p.rows() != c.rows() || p.cols() != c.cols()) throw InputError("dimension mismatch");
  VerifyReport rep = verify(p, c, parse_variant(variant));
  std::cout << "valid=" << (rep.valid ? "yes" : "no") << '\n';
  for (const auto& v : rep.violations) std::cout << "violation=" << v.describe() << '\n';
  return rep.valid ? kOk : kNegative;
}

int cmd_trvb(const std::string& path, const std::string& action, const std::string& set) {
  DrawingFile f = parse_drawing(load(path));
  if (action == "validate") {
    DrawingReport rep = validate_drawing(f.drawing, f.graph);
    std::cout << "valid=" << (rep.valid ? "yes" : "no") << '\n';
    for (const auto& v : rep.violations) std::cout << "violation=" << v << '\n';
    return rep.valid ? kOk : kNegative;
  }
  if (action == "solve") {
    auto sols = solve_trvb(f.graph);
    std::cout << "solutions=" << sols.size() << '\n';
    for (const auto& s : sols) std::cout << "breakset=" << join(s) << '\n';
    return sols.empty() ? kNegative : kOk;
  }
  if (action == "break") {
    Multigraph g = break_vertices(f.graph, split_ids(set));
    std::cout << "vertices=" << g.vertices().size() << '\n'
              << "edges=" << g.edges().size() << '\n'
              << "tree=" << (is_single_tree(g) ? "yes" : "no") << '\n';
    return kOk;
  }
  throw InputError("unknown trvb action " + action);
}

TileSet load_tiles(Layout l, const std::string& override_path) {
  std::string path = override_path.empty() ? default_tiles(l) : override_path;
  TileSet ts = parse_tileset(load(path));
  if (ts.layout != l) throw InputError("tile set " + path + " is for " + layout_name(ts.layout));
  return ts;
}

int cmd_reduce(const std::string& path, const std::string& variant, const std::string& out, const std::string& map,
               const std::string& tiles) {
  DrawingFile f = parse_drawing(load(path));
  Layout l = parse_layout(variant);
  TileSet ts = load_tiles(l, tiles);
  CertificationReport cert = certify_tileset(ts);
  if (!cert.pass) {
    std::cout << "certified=no\n";
    for (const auto& x : cert.failures) std::cout << "failure=" << x << '\n';
    return kNegative;
  }
  CompiledInstance ci;
  try {
    ci = compile(f, ts, &cert);
  } catch (const CompileError& e) {
    std::cout << "error=" << e.what() << '\n';
    return kNegative;
  }
  if (!out.empty()) write_file(out, serialize_puzzle(ci.puzzle));
  if (!map.empty()) write_file(map, serialize_map(ci.map));
  std::cout << "rows=" << ci.puzzle.rows() << '\n'
            << "cols=" << ci.puzzle.cols() << '\n'
            << "empty=" << ci.puzzle.empty_count() << '\n'
            << "vertices=" << ci.map.vertex_origin.size() << '\n';
  if (ci.map.exceptional) std::cout << "exceptional=" << ci.map.exceptional->row << ',' << ci.map.exceptional->col << '\n';
  if (out.empty()) std::cout << serialize_puzzle(ci.puzzle);
  return kOk;
}

int cmd_roundtrip(const std::string& path, const std::string& variant, long long node_limit, const std::string& tiles) {
  DrawingFile f = parse_drawing(load(path));
  Layout l = parse_layout(variant);
  TileSet ts = load_tiles(l, tiles);
  CompiledInstance ci;
  try {
    ci = compile(f, ts);
  } catch (const CompileError& e) {
    std::cout << "error=" << e.what() << '\n';
    return kNegative;
  }
  auto trvb = solve_trvb(f.graph);
  SolveConfig cfg;
  cfg.variant = layout_variant(l);
  if (node_limit > 0) cfg.node_limit = static_cast<std::uint64_t>(node_limit);
  std::uint64_t count = 0;
  bool extracted_ok = true;
  std::set<BreakSet> expected(trvb.begin(), trvb.end());
  try {
    enumerate_solutions(ci.puzzle, cfg, [&](const Coloring& c) {
      ++count;
      try {
        extracted_ok = extracted_ok && expected.count(extract_break_set(ci, c)) > 0;
      } catch (const std::exception&) {
        extracted_ok = false;
      }
      return true;
    });
  } catch (const NodeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  bool identity = true;
  const auto& verts = f.graph.vertices();
  if (verts.size() <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts.size()); ++mask) {
      BreakSet s;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if ((mask >> i) & 1) s.push_back(verts[i]);
      identity = identity && extract_break_set(ci, embed_solution(ci, s)) == s;
    }
  }
  const bool parsimonious = count == trvb.size();
  const bool agree = (count > 0) == !trvb.empty();
  std::cout << "puzzle=" << count << " trvb=" << trvb.size() << " parsimonious=" << (parsimonious ? "yes" : "no") << '\n'
            << "solvable_agree=" << (agree ? "yes" : "no") << '\n'
            << "extract_valid=" << (extracted_ok ? "yes" : "no") << '\n'
            << "roundtrip_identity=" << (identity ? "yes" : "no") << '\n';
  const bool all = agree && extracted_ok && identity && (l == Layout::ConnectedOnly9 || parsimonious);
  return all ? kOk : kNegative;
}

int cmd_gadget(const std::string& path) {
  TileSet ts = parse_tileset(load(path));
  CertificationReport rep = certify_tileset(ts);
  for (const auto& n : rep.notes) std::cout << "note=" << n << '\n';
  for (const auto& x : rep.failures) std::cout << "failure=" << x << '\n';
  std::cout << "contexts=" << rep.contexts_checked << '\n' << "certified=" << (rep.pass ? "yes" : "no") << '\n';
  return rep.pass ? kOk : kNegative;
}

int cmd_render(const std::string& puzzle, const std::string& solution, const std::string& format, const std::string& out) {
  Puzzle p = parse_puzzle(load(puzzle));
  std::optional<Coloring> c;
  if (!solution.empty()) c = parse_coloring(load(solution));
  if (c && (c->rows() != p.rows() || c->cols() != p.cols())) throw InputError("dimension mismatch");
  std::string text;
  if (format == "ascii")
    text = to_ascii(p, c);
  else if (format == "svg")
    text = to_svg(p, c);
  else
    throw InputError("unknown format " + format);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yin-Yang puzzle toolkit"};
  app.require_subcommand(1);

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "Solve, count or enumerate a puzzle");
  solve->add_option("puzzle", so.puzzle)->required();
  solve->add_option("--variant", so.variant)->check(CLI::IsMember({"connected", "yinyang", "tree"}));
  auto* count_flag = solve->add_flag("--count", so.count);
  auto* enum_opt = solve->add_option("--enumerate", so.enumerate);
  auto* unique_flag = solve->add_flag("--unique", so.unique);
  count_flag->excludes(enum_opt)->excludes(unique_flag);
  enum_opt->excludes(unique_flag);
  solve->add_flag("--stats", so.stats);
  solve->add_option("--node-limit", so.node_limit);
  solve->add_option("--heuristic", so.heuristic)->check(CLI::IsMember({"first", "constrained"}));

  std::string vp, vs, vv = "yinyang";
  auto* ver = app.add_subcommand("verify", "Check a solution against a puzzle");
  ver->add_option("puzzle", vp)->required();
  ver->add_option("solution", vs)->required();
  ver->add_option("--variant", vv)->check(CLI::IsMember({"connected", "yinyang", "tree"}));

  std::string tp, ta, tset;
  auto* tr = app.add_subcommand("trvb", "Vertex-breaking instances from drawings");
  tr->add_option("drawing", tp)->required();
  tr->add_option("action", ta)->required()->check(CLI::IsMember({"solve", "break", "validate"}));
  tr->add_option("--set", tset);

  std::string rp, rv = "tree", rout, rmap, rtiles;
  auto* red = app.add_subcommand("reduce", "Compile a drawing into a puzzle");
  red->add_option("drawing", rp)->required();
  red->add_option("--variant", rv)->check(CLI::IsMember({"connected", "tree"}));
  red->add_option("--out", rout);
  red->add_option("--map", rmap);
  red->add_option("--tiles", rtiles);

  std::string tp2, tv2 = "tree", ttiles;
  long long tlimit = 0;
  auto* rt = app.add_subcommand("roundtrip", "Compile, count and compare with the vertex-breaking oracle");
  rt->add_option("drawing", tp2)->required();
  rt->add_option("--variant", tv2)->check(CLI::IsMember({"connected", "tree"}));
  rt->add_option("--node-limit", tlimit);
  rt->add_option("--tiles", ttiles);

  std::string gp, gact = "check";
  auto* gad = app.add_subcommand("gadget", "Certify a tile set");
  gad->add_option("tileset", gp)->required();
  gad->add_option("action", gact)->check(CLI::IsMember({"check"}));

  std::string pp, ps, pf = "ascii", pout;
  auto* ren = app.add_subcommand("render", "Render a puzzle and optional solution");
  ren->add_option("puzzle", pp)->required();
  ren->add_option("solution", ps);
  ren->add_option("--format", pf);
  ren->add_option("--out", pout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(so);
    if (*ver) return cmd_verify(vp, vs, vv);
    if (*tr) return cmd_trvb(tp, ta, tset);
    if (*red) return cmd_reduce(rp, rv, rout, rmap, rtiles);
    if (*rt) return cmd_roundtrip(tp2, tv2, tlimit, ttiles);
    if (*gad) return cmd_gadget(gp);
    if (*ren) return cmd_render(pp, ps, pf, pout);
  } catch (const NodeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
