#include "yinyang/rules.hpp"

#include <array>
#include <stdexcept>

namespace yinyang {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::ConnectedOnly: return "connected";
    case Variant::YinYang: return "yinyang";
    case Variant::TreePartition: return "tree";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "connected" || s == "ConnectedOnly") return Variant::ConnectedOnly;
  if (s == "yinyang" || s == "YinYang") return Variant::YinYang;
  if (s == "tree" || s == "TreePartition") return Variant::TreePartition;
  throw std::invalid_argument("unknown variant: " + s);
}

std::string Violation::describe() const {
  auto at = [&] { return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")"; };
  switch (kind) {
    case Kind::Disconnected: return std::string("disconnected ") + (color == Color::Black ? "black" : "white");
    case Kind::InducedCycle: return std::string("cycle ") + (color == Color::Black ? "black" : "white");
    case Kind::MonoSquare: return "mono_square " + at();
    case Kind::ClueViolated: return "clue_violated " + at();
  }
  return "?";
}

namespace {

// Component count and induced edge count of one color class.
struct ClassShape {
  int cells = 0;
  int edges = 0;
  int components = 0;
};

ClassShape class_shape(const Coloring& c, Color col) {
  ClassShape s;
  const int n = c.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int r = 0; r < c.rows(); ++r)
    for (int k = 0; k < c.cols(); ++k) {
      if (c.at(r, k) != col) continue;
      ++s.cells;
      if (r + 1 < c.rows() && c.at(r + 1, k) == col) ++s.edges;
      if (k + 1 < c.cols() && c.at(r, k + 1) == col) ++s.edges;
      int i = c.index(r, k);
      if (seen[i]) continue;
      ++s.components;
      seen[i] = 1;
      stack.push_back(i);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int xr = x / c.cols(), xc = x % c.cols();
        const int dr[4] = {1, -1, 0, 0}, dc[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          int yr = xr + dr[d], yc = xc + dc[d];
          if (!c.in_bounds(yr, yc) || c.at(yr, yc) != col) continue;
          int y = c.index(yr, yc);
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
  return s;
}

bool is_mono(Color a, Color b, Color c, Color d) { return a == b && b == c && c == d; }
bool is_checker(Color a, Color b, Color c, Color d) { return a == d && b == c && a != b; }

}  // namespace

bool check_connectivity(const Coloring& c, Color col) { return class_shape(c, col).components <= 1; }

bool check_no_mono_2x2(const Coloring& c) {
  for (int r = 0; r + 1 < c.rows(); ++r)
    for (int k = 0; k + 1 < c.cols(); ++k)
      if (is_mono(c.at(r, k), c.at(r, k + 1), c.at(r + 1, k), c.at(r + 1, k + 1))) return false;
  return true;
}

bool check_diagonal_lemma(const Coloring& c) {
  for (int r = 0; r + 1 < c.rows(); ++r)
    for (int k = 0; k + 1 < c.cols(); ++k)
      if (is_checker(c.at(r, k), c.at(r, k + 1), c.at(r + 1, k), c.at(r + 1, k + 1))) return false;
  return true;
}

bool check_tree_partition(const Coloring& c) {
  for (Color col : {Color::Black, Color::White}) {
    ClassShape s = class_shape(c, col);
    if (s.cells == 0) continue;
    if (s.components != 1 || s.edges != s.cells - 1) return false;
  }
  return true;
}

VerifyReport verify(const Coloring& c, Variant v) {
  VerifyReport rep;
  auto add = [&](Violation x) {
    rep.valid = false;
    rep.violations.push_back(x);
  };
  for (Color col : {Color::Black, Color::White}) {
    ClassShape s = class_shape(c, col);
    if (s.components > 1) add({Violation::Kind::Disconnected, col, {}});
    if (v == Variant::TreePartition && s.cells > 0 && s.edges > s.cells - s.components)
      add({Violation::Kind::InducedCycle, col, {}});
  }
  if (v == Variant::YinYang) {
    for (int r = 0; r + 1 < c.rows(); ++r)
      for (int k = 0; k + 1 < c.cols(); ++k)
        if (is_mono(c.at(r, k), c.at(r, k + 1), c.at(r + 1, k), c.at(r + 1, k + 1)))
          add({Violation::Kind::MonoSquare, c.at(r, k), {r, k}});
  }
  return rep;
}

VerifyReport verify(const Puzzle& p, const Coloring& c, Variant v) {
  if (p.rows() != c.rows() || p.cols() != c.cols()) throw std::invalid_argument("dimension mismatch");
  VerifyReport clues;
  for (int r = 0; r < p.rows(); ++r)
    for (int k = 0; k < p.cols(); ++k) {
      Cell clue = p.at(r, k);
      if (clue != Cell::Unknown && to_color(clue) != c.at(r, k)) {
        clues.valid = false;
        clues.violations.push_back({Violation::Kind::ClueViolated, to_color(clue), {r, k}});
      }
    }
  VerifyReport rest = verify(c, v);
  clues.valid = clues.valid && rest.valid;
  clues.violations.insert(clues.violations.end(), rest.violations.begin(), rest.violations.end());
  return clues;
}

bool connectivity_feasible(const PartialColoring& pc, Color col) {
  const Cell want = to_cell(col);
  const int n = pc.size();
  int first = -1, colored = 0;
  for (int i = 0; i < n; ++i)
    if (pc.at(i) == want) {
      if (first < 0) first = i;
      ++colored;
    }
  if (colored <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{first};
  seen[first] = 1;
  int reached = 0;
  const Cell other = to_cell(opposite(col));
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (pc.at(x) == want) ++reached;
    int xr = x / pc.cols(), xc = x % pc.cols();
    const int dr[4] = {1, -1, 0, 0}, dc[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      int yr = xr + dr[d], yc = xc + dc[d];
      if (!pc.in_bounds(yr, yc)) continue;
      int y = pc.index(yr, yc);
      if (!seen[y] && pc.at(y) != other) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached == colored;
}

namespace {

// One 2x2 window: returns false on contradiction; may fix one cell.
bool apply_window(PartialColoring& pc, int r, int k, bool mono_rule, std::vector<Forced>& forced,
                  std::string& reason) {
  const std::array<int, 4> idx = {pc.index(r, k), pc.index(r, k + 1), pc.index(r + 1, k), pc.index(r + 1, k + 1)};
  std::array<Cell, 4> v;
  int unknown = -1, n_unknown = 0;
  for (int i = 0; i < 4; ++i) {
    v[i] = pc.at(idx[i]);
    if (v[i] == Cell::Unknown) {
      unknown = i;
      ++n_unknown;
    }
  }
  auto where = [&] { return " in window (" + std::to_string(r) + "," + std::to_string(k) + ")"; };
  if (n_unknown == 0) {
    Color a = to_color(v[0]), b = to_color(v[1]), c = to_color(v[2]), d = to_color(v[3]);
    if (is_checker(a, b, c, d)) {
      reason = "checkerboard" + where();
      return false;
    }
    if (mono_rule && is_mono(a, b, c, d)) {
      reason = "mono square" + where();
      return false;
    }
    return true;
  }
  if (n_unknown != 1) return true;
  // Positions: 0 1 / 2 3. Diagonal partner of i is 3 - i; the anti-diagonal
  // pair is the other two.
  const int diag = 3 - unknown;
  const int anti1 = unknown == 0 || unknown == 3 ? 1 : 0;
  const int anti2 = 3 - anti1;
  Cell force = Cell::Unknown;
  if (mono_rule && v[diag] == v[anti1] && v[anti1] == v[anti2]) {
    force = v[diag] == Cell::Black ? Cell::White : Cell::Black;
  } else if (v[anti1] == v[anti2] && v[diag] != v[anti1]) {
    force = v[anti1];
  }
  if (force == Cell::Unknown) return true;
  pc.set(idx[unknown], force);
  forced.push_back({{idx[unknown] / pc.cols(), idx[unknown] % pc.cols()}, to_color(force)});
  return true;
}

}  // namespace

PropagationResult propagate(PartialColoring& pc, Variant v) {
  const bool mono_rule = v != Variant::ConnectedOnly;
  std::vector<Forced> forced;
  std::string reason;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r + 1 < pc.rows(); ++r)
      for (int k = 0; k + 1 < pc.cols(); ++k) {
        std::size_t before = forced.size();
        if (!apply_window(pc, r, k, mono_rule, forced, reason)) return Contradiction{reason};
        if (forced.size() != before) changed = true;
      }
  }
  if (forced.empty()) return Stable{};
  return Progress{std::move(forced)};
}

PropagationResult propagate(const PartialColoring& pc, Variant v, PartialColoring* out) {
  PartialColoring work = pc;
  PropagationResult res = propagate(work, v);
  if (out) *out = std::move(work);
  return res;
}

}  // namespace yinyang
