#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yinyang/grid.hpp"
#include "yinyang/rules.hpp"

namespace yinyang {

enum class Side { North, East, South, West };
char side_char(Side s);
Side opposite(Side s);

enum class Layout { ConnectedOnly9, Tree16 };
std::string layout_name(Layout l);
Layout parse_layout(const std::string& s);  // "connected" / "connected9" / "tree" / "tree16"
Variant layout_variant(Layout l);           // rule variant used when checking gadgets

struct Port {
  Side side;
  int offset;  // row for East/West sides, column for North/South
  Color color;
  friend bool operator==(const Port&, const Port&) = default;
};

// Kinds: "vertex", "blank", "h", "v", and corners "ne", "nw", "se", "sw"
// named after the two sides the wire joins.
struct Tile {
  std::string kind;
  std::vector<std::string> rows;  // over {B, W, .}
  std::vector<Port> ports;

  int size() const { return static_cast<int>(rows.size()); }
  Cell at(int r, int c) const;
  bool has_port(Side s) const;
  std::vector<Pos> empty_cells() const;
};

struct TileSet {
  std::string name;
  Layout layout = Layout::ConnectedOnly9;
  int size = 0;
  int wire_row = 0;
  int wire_col = 0;
  std::map<std::string, Tile> tiles;

  const Tile& tile(const std::string& kind) const;  // throws std::out_of_range
};

const std::vector<std::string>& tile_kinds();
// Sides a tile kind connects with its wire.
std::vector<Side> kind_sides(const std::string& kind);
// Edge tile kind for a route passing through a cell between two sides.
std::string corner_kind(Side a, Side b);

// Throws ParseError.
TileSet parse_tileset(std::string_view text);
std::string serialize_tileset(const TileSet& ts);

}  // namespace yinyang
