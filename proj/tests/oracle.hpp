#pragma once

// Brute-force reference implementations. Kept independent of the library's
// rule code: connectivity here is a recursive DFS on a plain int grid.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "yinyang/grid.hpp"
#include "yinyang/rules.hpp"

namespace oracle {

using yinyang::Cell;
using yinyang::Color;
using yinyang::Coloring;
using yinyang::Puzzle;
using yinyang::Variant;

inline void dfs(const std::vector<int>& g, int rows, int cols, int r, int c, int col, std::vector<char>& seen) {
  if (r < 0 || c < 0 || r >= rows || c >= cols) return;
  int i = r * cols + c;
  if (seen[i] || g[i] != col) return;
  seen[i] = 1;
  dfs(g, rows, cols, r + 1, c, col, seen);
  dfs(g, rows, cols, r - 1, c, col, seen);
  dfs(g, rows, cols, r, c + 1, col, seen);
  dfs(g, rows, cols, r, c - 1, col, seen);
}

inline int components(const std::vector<int>& g, int rows, int cols, int col) {
  std::vector<char> seen(g.size(), 0);
  int n = 0;
  for (int i = 0; i < rows * cols; ++i)
    if (g[i] == col && !seen[i]) {
      ++n;
      dfs(g, rows, cols, i / cols, i % cols, col, seen);
    }
  return n;
}

inline int induced_edges(const std::vector<int>& g, int rows, int cols, int col) {
  int e = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (g[r * cols + c] != col) continue;
      if (c + 1 < cols && g[r * cols + c + 1] == col) ++e;
      if (r + 1 < rows && g[(r + 1) * cols + c] == col) ++e;
    }
  return e;
}

inline bool has_mono(const std::vector<int>& g, int rows, int cols) {
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      int a = g[r * cols + c], b = g[r * cols + c + 1], d = g[(r + 1) * cols + c], e = g[(r + 1) * cols + c + 1];
      if (a == b && b == d && d == e) return true;
    }
  return false;
}

inline bool has_checkerboard(const std::vector<int>& g, int rows, int cols) {
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      int a = g[r * cols + c], b = g[r * cols + c + 1], d = g[(r + 1) * cols + c], e = g[(r + 1) * cols + c + 1];
      if (a == e && b == d && a != b) return true;
    }
  return false;
}

// 0 = black, 1 = white.
inline bool valid(const std::vector<int>& g, int rows, int cols, Variant v) {
  for (int col = 0; col < 2; ++col) {
    int size = 0;
    for (int x : g) size += x == col;
    if (size == 0) continue;
    if (components(g, rows, cols, col) != 1) return false;
    if (v == Variant::TreePartition && induced_edges(g, rows, cols, col) != size - 1) return false;
  }
  if (v == Variant::YinYang && has_mono(g, rows, cols)) return false;
  return true;
}

inline std::vector<int> bits_to_grid(std::uint64_t bits, int n) {
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = (bits >> i) & 1;
  return g;
}

inline Coloring to_coloring(const std::vector<int>& g, int rows, int cols) {
  Coloring c(rows, cols);
  for (int i = 0; i < rows * cols; ++i) c.set(i / cols, i % cols, g[i] ? Color::White : Color::Black);
  return c;
}

inline std::vector<int> from_coloring(const Coloring& c) {
  std::vector<int> g(c.size());
  for (int r = 0; r < c.rows(); ++r)
    for (int col = 0; col < c.cols(); ++col) g[r * c.cols() + col] = c.at(r, col) == Color::White;
  return g;
}

// Every completion of p that the reference rules accept, in increasing bit order.
inline std::vector<Coloring> solutions(const Puzzle& p, Variant v) {
  std::vector<int> open;
  std::vector<int> g(p.size());
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) {
      int i = r * p.cols() + c;
      if (p.is_empty(r, c))
        open.push_back(i);
      else
        g[i] = p.at(r, c) == Cell::White;
    }
  std::vector<Coloring> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << open.size()); ++m) {
    for (std::size_t k = 0; k < open.size(); ++k) g[open[k]] = (m >> k) & 1;
    if (valid(g, p.rows(), p.cols(), v)) out.push_back(to_coloring(g, p.rows(), p.cols()));
  }
  return out;
}

inline std::uint64_t count(const Puzzle& p, Variant v) { return solutions(p, v).size(); }

// Random clue set; each cell is a clue with probability `density`.
inline Puzzle random_puzzle(std::mt19937_64& rng, int rows, int cols, double density) {
  Puzzle p(rows, cols);
  std::bernoulli_distribution clue(density), black(0.5);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (clue(rng)) p.set(r, c, black(rng) ? Cell::Black : Cell::White);
  return p;
}

}  // namespace oracle
