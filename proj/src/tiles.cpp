#include "yinyang/tiles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yinyang {

char side_char(Side s) {
  switch (s) {
    case Side::North: return 'N';
    case Side::East: return 'E';
    case Side::South: return 'S';
    case Side::West: return 'W';
  }
  return '?';
}

Side opposite(Side s) {
  switch (s) {
    case Side::North: return Side::South;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::West: return Side::East;
  }
  return s;
}

std::string layout_name(Layout l) { return l == Layout::ConnectedOnly9 ? "connected9" : "tree16"; }

Layout parse_layout(const std::string& s) {
  if (s == "connected" || s == "connected9" || s == "ConnectedOnly9") return Layout::ConnectedOnly9;
  if (s == "tree" || s == "tree16" || s == "Tree16") return Layout::Tree16;
  throw std::invalid_argument("unknown reduction variant: " + s);
}

Variant layout_variant(Layout l) { return l == Layout::ConnectedOnly9 ? Variant::ConnectedOnly : Variant::YinYang; }

Cell Tile::at(int r, int c) const {
  char ch = rows[r][c];
  return ch == 'B' ? Cell::Black : ch == 'W' ? Cell::White : Cell::Unknown;
}

bool Tile::has_port(Side s) const {
  return std::any_of(ports.begin(), ports.end(), [&](const Port& p) { return p.side == s; });
}

std::vector<Pos> Tile::empty_cells() const {
  std::vector<Pos> out;
  for (int r = 0; r < size(); ++r)
    for (int c = 0; c < size(); ++c)
      if (rows[r][c] == '.') out.push_back({r, c});
  return out;
}

const Tile& TileSet::tile(const std::string& kind) const {
  auto it = tiles.find(kind);
  if (it == tiles.end()) throw std::out_of_range("tile set " + name + " has no tile " + kind);
  return it->second;
}

const std::vector<std::string>& tile_kinds() {
  static const std::vector<std::string> kinds = {"vertex", "blank", "h", "v", "ne", "nw", "se", "sw"};
  return kinds;
}

std::vector<Side> kind_sides(const std::string& kind) {
  if (kind == "vertex") return {Side::North, Side::East, Side::South, Side::West};
  if (kind == "h") return {Side::East, Side::West};
  if (kind == "v") return {Side::North, Side::South};
  std::vector<Side> out;
  for (char ch : kind) {
    if (ch == 'n') out.push_back(Side::North);
    if (ch == 'e') out.push_back(Side::East);
    if (ch == 's') out.push_back(Side::South);
    if (ch == 'w') out.push_back(Side::West);
  }
  if (kind == "blank") out.clear();
  return out;
}

std::string corner_kind(Side a, Side b) {
  auto has = [&](Side s) { return a == s || b == s; };
  if (has(Side::East) && has(Side::West)) return "h";
  if (has(Side::North) && has(Side::South)) return "v";
  std::string k;
  k += has(Side::North) ? 'n' : 's';
  k += has(Side::East) ? 'e' : 'w';
  return k;
}

namespace {

Side parse_side(const std::string& s, int line) {
  if (s == "N") return Side::North;
  if (s == "E") return Side::East;
  if (s == "S") return Side::South;
  if (s == "W") return Side::West;
  throw ParseError("bad side " + s, line, 0);
}

}  // namespace

TileSet parse_tileset(std::string_view text) {
  TileSet ts;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = -1;
  bool header = false;
  Tile* current = nullptr;
  int pending_rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (pending_rows > 0) {
      if (static_cast<int>(line.size()) != ts.size)
        throw ParseError("tile row has wrong length", lineno, static_cast<int>(std::min<std::size_t>(line.size(), ts.size)));
      for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] != 'B' && line[i] != 'W' && line[i] != '.')
          throw ParseError(std::string("illegal character '") + line[i] + "'", lineno, static_cast<int>(i));
      current->rows.push_back(line);
      --pending_rows;
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tileset") {
      std::string name;
      if (!(ls >> name >> ts.size >> ts.wire_row >> ts.wire_col)) throw ParseError("bad tileset header", lineno, 0);
      if (ts.size <= 0 || ts.wire_row < 0 || ts.wire_row >= ts.size || ts.wire_col < 0 || ts.wire_col >= ts.size)
        throw ParseError("tileset dimensions out of range", lineno, 0);
      ts.name = name;
      ts.layout = parse_layout(name);
      header = true;
    } else if (kw == "tile") {
      if (!header) throw ParseError("tile before tileset header", lineno, 0);
      std::string kind;
      if (!(ls >> kind)) throw ParseError("missing tile kind", lineno, 0);
      if (std::find(tile_kinds().begin(), tile_kinds().end(), kind) == tile_kinds().end())
        throw ParseError("unknown tile kind " + kind, lineno, 0);
      if (ts.tiles.count(kind)) throw ParseError("duplicate tile " + kind, lineno, 0);
      current = &ts.tiles[kind];
      current->kind = kind;
      pending_rows = ts.size;
    } else if (kw == "port") {
      if (!current) throw ParseError("port outside a tile block", lineno, 0);
      std::string side, color;
      int offset;
      if (!(ls >> side >> offset >> color)) throw ParseError("bad port line", lineno, 0);
      if (offset < 0 || offset >= ts.size) throw ParseError("port offset out of range", lineno, 0);
      if (color != "B" && color != "W") throw ParseError("bad port color", lineno, 0);
      current->ports.push_back({parse_side(side, lineno), offset, color == "B" ? Color::Black : Color::White});
    } else {
      throw ParseError("unknown keyword " + kw, lineno, 0);
    }
  }
  if (pending_rows > 0) throw ParseError("truncated tile", lineno, 0);
  if (!header) throw ParseError("missing tileset header", 0, 0);
  return ts;
}

std::string serialize_tileset(const TileSet& ts) {
  std::ostringstream out;
  out << "tileset " << ts.name << ' ' << ts.size << ' ' << ts.wire_row << ' ' << ts.wire_col << '\n';
  for (const auto& kind : tile_kinds()) {
    auto it = ts.tiles.find(kind);
    if (it == ts.tiles.end()) continue;
    out << "tile " << kind << '\n';
    for (const auto& row : it->second.rows) out << row << '\n';
    for (const Port& p : it->second.ports)
      out << "port " << side_char(p.side) << ' ' << p.offset << ' ' << color_char(p.color) << '\n';
  }
  return out.str();
}

}  // namespace yinyang
