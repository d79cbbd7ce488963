#include "yinyang/solver.hpp"

#include <numeric>
#include <vector>

namespace yinyang {

namespace {

class Search {
 public:
  Search(const Puzzle& p, const SolveConfig& cfg, const SolutionSink& sink, SolveStats& stats)
      : puzzle_(p), cfg_(cfg), sink_(sink), stats_(stats) {}

  void run() {
    PartialColoring root(puzzle_);
    descend(root);
  }

 private:
  // Returns false once the sink asked to stop or the solution limit was hit.
  bool descend(PartialColoring& pc) {
    if (cfg_.node_limit && stats_.nodes_expanded >= *cfg_.node_limit) throw NodeLimitExceeded(*cfg_.node_limit);
    ++stats_.nodes_expanded;
    if (cfg_.use_propagation) {
      PropagationResult res = propagate(pc, cfg_.variant);
      if (std::holds_alternative<Contradiction>(res)) {
        ++stats_.prunes_window;
        return true;
      }
      if (auto* pr = std::get_if<Progress>(&res)) stats_.propagations += pr->forced.size();
    }
    if (cfg_.use_connectivity_pruning && !feasible(pc)) {
      ++stats_.prunes_connectivity;
      return true;
    }
    int cell = pick(pc);
    if (cell < 0) {
      Coloring c = pc.to_coloring();
      if (!verify(c, cfg_.variant).valid) return true;
      ++found_;
      if (!sink_(c)) return false;
      return !(cfg_.solution_limit && found_ >= *cfg_.solution_limit);
    }
    for (Cell v : {Cell::Black, Cell::White}) {
      PartialColoring child = pc;
      child.set(cell, v);
      if (!descend(child)) return false;
    }
    return true;
  }

  bool feasible(const PartialColoring& pc) const {
    if (!connectivity_feasible(pc, Color::Black) || !connectivity_feasible(pc, Color::White)) return false;
    if (cfg_.variant == Variant::TreePartition && colored_cycle(pc)) return false;
    return true;
  }

  // A cycle among already-colored cells of one color can never be undone.
  static bool colored_cycle(const PartialColoring& pc) {
    const int n = pc.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int r = 0; r < pc.rows(); ++r)
      for (int c = 0; c < pc.cols(); ++c) {
        Cell v = pc.at(r, c);
        if (v == Cell::Unknown) continue;
        int i = pc.index(r, c);
        const int nbr[2][2] = {{r + 1, c}, {r, c + 1}};
        for (const auto& q : nbr) {
          if (!pc.in_bounds(q[0], q[1]) || pc.at(q[0], q[1]) != v) continue;
          int a = find(i), b = find(pc.index(q[0], q[1]));
          if (a == b) return true;
          parent[a] = b;
        }
      }
    return false;
  }

  int pick(const PartialColoring& pc) const {
    int best = -1, best_score = -1;
    for (int r = 0; r < pc.rows(); ++r)
      for (int c = 0; c < pc.cols(); ++c) {
        if (pc.at(r, c) != Cell::Unknown) continue;
        if (cfg_.branch_heuristic == BranchHeuristic::FirstUnknown) return pc.index(r, c);
        int score = 0;
        const int nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
        for (const auto& q : nbr)
          if (pc.in_bounds(q[0], q[1]) && pc.at(q[0], q[1]) != Cell::Unknown) ++score;
        if (score > best_score) {
          best_score = score;
          best = pc.index(r, c);
        }
      }
    return best;
  }

  const Puzzle& puzzle_;
  const SolveConfig& cfg_;
  const SolutionSink& sink_;
  SolveStats& stats_;
  std::uint64_t found_ = 0;
};

}  // namespace

void enumerate_solutions(const Puzzle& p, const SolveConfig& cfg, const SolutionSink& sink, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  auto start = std::chrono::steady_clock::now();
  Search search(p, cfg, sink, st);
  try {
    search.run();
  } catch (...) {
    st.elapsed += std::chrono::steady_clock::now() - start;
    throw;
  }
  st.elapsed += std::chrono::steady_clock::now() - start;
}

std::optional<Coloring> solve_one(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats) {
  std::optional<Coloring> out;
  enumerate_solutions(
      p, cfg,
      [&](const Coloring& c) {
        out = c;
        return false;
      },
      stats);
  return out;
}

std::uint64_t count_solutions(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats) {
  std::uint64_t n = 0;
  enumerate_solutions(
      p, cfg,
      [&](const Coloring&) {
        ++n;
        return true;
      },
      stats);
  return n;
}

Uniqueness is_unique(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats) {
  SolveConfig two = cfg;
  two.solution_limit = 2;
  Uniqueness u;
  std::uint64_t n = 0;
  enumerate_solutions(
      p, two,
      [&](const Coloring& c) {
        if (++n == 1) u.solution = c;
        return true;
      },
      stats);
  if (n == 0) return u;
  if (n == 1) {
    u.kind = Uniqueness::Kind::Unique;
    return u;
  }
  u.kind = Uniqueness::Kind::Multiple;
  u.solution.reset();
  return u;
}

}  // namespace yinyang
