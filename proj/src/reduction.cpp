#include "yinyang/reduction.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace yinyang {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Filler: return "filler";
    case Provenance::WireBlack: return "wire";
    case Provenance::WhiteAboveWire: return "white_above_wire";
    case Provenance::Tendril: return "tendril";
    case Provenance::VertexGadget: return "vertex";
    case Provenance::TopRow: return "top_row";
    case Provenance::BottomRow: return "bottom_row";
    case Provenance::ExceptionalCell: return "exceptional";
  }
  return "?";
}

namespace {

struct DrawCell {
  std::string kind = "blank";
  std::string id;  // vertex id or edge id
};

Side side_towards(Point from, Point to) {
  switch (step_dir(from, to)) {
    case Dir::North: return Side::North;
    case Dir::East: return Side::East;
    case Dir::South: return Side::South;
    case Dir::West: return Side::West;
  }
  return Side::North;
}

std::vector<DrawCell> classify_drawing(const DrawingFile& f) {
  const auto& d = f.drawing;
  std::vector<DrawCell> out(static_cast<std::size_t>(d.width) * d.height);
  for (const auto& [id, p] : d.vertex_pos) out[p.y * d.width + p.x] = {"vertex", id};
  for (const Edge& e : f.graph.edges()) {
    auto cells = expand_route(d.routes.at(e.id));
    for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
      Side a = side_towards(cells[i], cells[i - 1]), b = side_towards(cells[i], cells[i + 1]);
      out[cells[i].y * d.width + cells[i].x] = {corner_kind(a, b), e.id};
    }
  }
  return out;
}

// Wire cells of an edge tile, in tile coordinates.
std::vector<Pos> wire_cells(const TileSet& ts, const std::string& kind) {
  std::set<Pos> s;
  const int n = ts.size, wr = ts.wire_row, wc = ts.wire_col;
  for (Side sd : kind_sides(kind)) {
    if (sd == Side::North)
      for (int r = 0; r <= wr; ++r) s.insert({r, wc});
    if (sd == Side::South)
      for (int r = wr; r < n; ++r) s.insert({r, wc});
    if (sd == Side::West)
      for (int c = 0; c <= wc; ++c) s.insert({wr, c});
    if (sd == Side::East)
      for (int c = wc; c < n; ++c) s.insert({wr, c});
  }
  return {s.begin(), s.end()};
}

// Shortest black paths, in the unbroken completion, from each wire port to the
// nearest decision cell.
std::set<Pos> port_paths(const TileSet& ts, const VertexCertificate& vc) {
  const Tile& t = ts.tile("vertex");
  const int n = ts.size;
  std::vector<Color> col(static_cast<std::size_t>(n) * n);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) col[r * n + c] = t.at(r, c) == Cell::Unknown ? vc.unbroken[k++] : to_color(t.at(r, c));
  std::set<Pos> goals(vc.decisions.begin(), vc.decisions.end());
  std::set<Pos> out;
  for (const Port& p : t.ports) {
    if (p.color != Color::Black) continue;
    Pos start{p.side == Side::North ? 0 : p.side == Side::South ? n - 1 : p.offset,
              p.side == Side::West ? 0 : p.side == Side::East ? n - 1 : p.offset};
    std::map<Pos, Pos> prev;
    std::deque<Pos> q{start};
    prev[start] = start;
    std::optional<Pos> hit;
    while (!q.empty() && !hit) {
      Pos x = q.front();
      q.pop_front();
      if (goals.count(x)) {
        hit = x;
        break;
      }
      const Pos nb[4] = {{x.row - 1, x.col}, {x.row + 1, x.col}, {x.row, x.col - 1}, {x.row, x.col + 1}};
      for (Pos y : nb) {
        if (y.row < 0 || y.col < 0 || y.row >= n || y.col >= n) continue;
        if (col[y.row * n + y.col] != Color::Black || prev.count(y)) continue;
        prev[y] = x;
        q.push_back(y);
      }
    }
    if (!hit) continue;
    for (Pos x = *hit;; x = prev[x]) {
      out.insert(x);
      if (x == start) break;
    }
  }
  return out;
}

}  // namespace

CompiledInstance compile(const DrawingFile& f, const TileSet& ts, const CertificationReport* cert) {
  DrawingReport dr = validate_drawing(f.drawing, f.graph);
  if (!dr.valid) throw CompileError("invalid drawing: " + dr.violations.front());
  CertificationReport local;
  if (!cert) {
    local = certify_tileset(ts);
    cert = &local;
  }
  if (!cert->pass || !cert->vertex) throw CompileError("tile set " + ts.name + " failed certification");

  CompiledInstance ci;
  ci.layout = ts.layout;
  ci.source = f;
  ci.tiles = ts;
  ci.vertex = *cert->vertex;
  const int n = ts.size, W = f.drawing.width, H = f.drawing.height;
  const bool tree = ts.layout == Layout::Tree16;
  const int top = tree ? 1 : 0;
  const int rows = n * H + (tree ? 2 : 0), cols = n * W;
  ci.puzzle = Puzzle(rows, cols);
  ReductionMap& m = ci.map;
  m.rows = rows;
  m.cols = cols;
  m.cells.assign(static_cast<std::size_t>(rows) * cols, {});

  if (tree) {
    for (int c = 0; c < cols; ++c) {
      ci.puzzle.set(0, c, Cell::Black);
      m.at(0, c).kind = Provenance::TopRow;
      ci.puzzle.set(rows - 1, c, Cell::White);
      m.at(rows - 1, c).kind = Provenance::BottomRow;
    }
  }

  const std::set<Pos> paths = port_paths(ts, ci.vertex);
  const std::set<Pos> decisions(ci.vertex.decisions.begin(), ci.vertex.decisions.end());
  auto kinds = classify_drawing(f);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      const DrawCell& dc = kinds[y * W + x];
      const Tile& t = ts.tile(dc.kind);
      const int R0 = top + y * n, C0 = x * n;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          Cell v = t.at(r, c);
          ci.puzzle.set(R0 + r, C0 + c, v);
          CellInfo& info = m.at(R0 + r, C0 + c);
          info.kind = v == Cell::Black && tree ? Provenance::Tendril : Provenance::Filler;
        }
      if (dc.kind == "vertex") {
        m.vertex_origin[dc.id] = {R0, C0};
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            CellInfo& info = m.at(R0 + r, C0 + c);
            info.kind = Provenance::VertexGadget;
            info.id = dc.id;
            info.role = decisions.count({r, c})   ? "decision"
                        : paths.count({r, c})     ? "port_path"
                        : t.at(r, c) == Cell::Unknown ? "empty"
                                                      : "fixed";
            info.important = decisions.count({r, c}) || paths.count({r, c});
          }
        for (Pos p : ci.vertex.decisions) m.decision_cells[dc.id].push_back({R0 + p.row, C0 + p.col});
      } else if (dc.kind != "blank") {
        std::set<int> horizontal;
        for (Pos p : wire_cells(ts, dc.kind)) {
          CellInfo& info = m.at(R0 + p.row, C0 + p.col);
          info.kind = Provenance::WireBlack;
          info.id = dc.id;
          info.important = true;
          if (p.row == ts.wire_row) horizontal.insert(p.col);
        }
        if (tree && ts.wire_row > 0) {
          for (int c : horizontal) {
            const int R = R0 + ts.wire_row - 1, C = C0 + c;
            if (ci.puzzle.at(R, C) == Cell::White) {
              m.at(R, C).kind = Provenance::WhiteAboveWire;
              m.at(R, C).id = dc.id;
            }
          }
        }
      }
    }

  if (tree) {
    // Topmost horizontal wire row, then leftmost black-parity column whose
    // cell above is the white row (upward turns have the wire above instead).
    std::optional<Pos> best;
    for (int r = 1; r < rows && !best; ++r)
      for (int c = 1; c < cols; c += 2) {
        const CellInfo& info = m.at(r, c);
        if (info.kind != Provenance::WireBlack || (r - top) % n != ts.wire_row) continue;
        if (m.at(r - 1, c).kind != Provenance::WhiteAboveWire) continue;
        best = Pos{r - 1, c};
        break;
      }
    if (best) {
      ci.puzzle.set(best->row, best->col, Cell::Black);
      CellInfo& info = m.at(best->row, best->col);
      info.kind = Provenance::ExceptionalCell;
      m.exceptional = best;
    }
  }
  return ci;
}

Coloring embed_solution(const CompiledInstance& ci, const BreakSet& s) {
  std::set<std::string> broken;
  for (const auto& v : s) {
    if (!ci.source.graph.has_vertex(v)) throw std::invalid_argument("unknown vertex " + v);
    broken.insert(v);
  }
  Coloring out(ci.puzzle.rows(), ci.puzzle.cols());
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c)
      if (!ci.puzzle.is_empty(r, c)) out.set(r, c, to_color(ci.puzzle.at(r, c)));
  for (const auto& [id, origin] : ci.map.vertex_origin) {
    const LocalCompletion& fill = broken.count(id) ? ci.vertex.broken : ci.vertex.unbroken;
    for (std::size_t k = 0; k < ci.vertex.empties.size(); ++k)
      out.set(origin.row + ci.vertex.empties[k].row, origin.col + ci.vertex.empties[k].col, fill[k]);
  }
  return out;
}

BreakSet extract_break_set(const CompiledInstance& ci, const Coloring& c) {
  if (c.rows() != ci.puzzle.rows() || c.cols() != ci.puzzle.cols()) throw std::invalid_argument("dimension mismatch");
  std::set<std::string> broken;
  for (const auto& [id, cells] : ci.map.decision_cells) {
    int black = 0;
    for (Pos p : cells) black += c.at(p.row, p.col) == Color::Black;
    if (black == static_cast<int>(cells.size())) continue;
    if (black != 0) throw std::runtime_error("vertex " + id + " has mixed decision cells");
    broken.insert(id);
  }
  BreakSet out;
  for (const auto& v : ci.source.graph.vertices())
    if (broken.count(v)) out.push_back(v);
  return out;
}

std::vector<Pos> classify_important_cells(const CompiledInstance& ci) {
  std::vector<Pos> out;
  for (int r = 0; r < ci.map.rows; ++r)
    for (int c = 0; c < ci.map.cols; ++c)
      if (ci.map.at(r, c).important) out.push_back({r, c});
  return out;
}

std::string serialize_map(const ReductionMap& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const CellInfo& info = m.at(r, c);
      out << "cell " << r << ' ' << c << ' ' << provenance_name(info.kind);
      if (!info.id.empty()) out << ' ' << info.id;
      if (info.important) out << " important";
      out << '\n';
    }
  if (m.exceptional) out << "exceptional " << m.exceptional->row << ' ' << m.exceptional->col << '\n';
  return out.str();
}

}  // namespace yinyang
