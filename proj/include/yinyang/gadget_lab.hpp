#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yinyang/grid.hpp"
#include "yinyang/rules.hpp"
#include "yinyang/tiles.hpp"

namespace yinyang {

// Tile plus a width-2 margin. Cells outside the puzzle (tile on the border)
// are marked absent. The tile occupies rows/cols [2, 2 + size).
struct BoundaryContext {
  static constexpr int kMargin = 2;
  int size = 0;  // tile size
  std::vector<Cell> cells;
  std::vector<char> present;
  std::string description;

  int dim() const { return size + 2 * kMargin; }
  int index(int r, int c) const { return r * dim() + c; }
  Cell at(int r, int c) const { return cells[index(r, c)]; }
  bool exists(int r, int c) const { return present[index(r, c)] != 0; }
};

// Every distinct margin a layout can put around a tile of this kind.
std::vector<BoundaryContext> synthesize_contexts(const TileSet& ts, const std::string& kind);
// Margin built from the standard neighbors (wire tiles on port sides, blank elsewhere).
BoundaryContext standard_context(const TileSet& ts, const std::string& kind);

// Values for the tile's Empty cells in row-major order.
using LocalCompletion = std::vector<Color>;

// Throws std::invalid_argument when the tile has more than 24 Empty cells.
std::vector<LocalCompletion> enumerate_local_completions(const Tile& tile, const BoundaryContext& ctx, Variant v);

struct Crossing {
  Side side;
  int offset;
  Color color;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PortSignature {
  std::vector<Crossing> crossings;
  std::vector<int> klass;  // class id per crossing, numbered in first-seen order per color
  // Class id of the crossing at (side, offset, color), or -1.
  int class_of(Side s, int offset, Color c) const;
};

// Completion applied to the tile; crossings are tile boundary cells whose
// outside neighbor in ctx has the same color.
PortSignature port_signature(const Tile& tile, const LocalCompletion& completion, const BoundaryContext& ctx);

struct VertexCertificate {
  std::vector<Pos> empties;      // row-major
  std::vector<Pos> decisions;    // bottom row of Empty cells
  LocalCompletion unbroken;      // wire ports joined
  LocalCompletion broken;        // wire ports separated
};

struct CertificationReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // per-tile summaries, deterministic order
  std::optional<VertexCertificate> vertex;
  int contexts_checked = 0;
};

CertificationReport certify_tileset(const TileSet& ts);

}  // namespace yinyang
