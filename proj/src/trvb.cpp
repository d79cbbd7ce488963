#include "yinyang/trvb.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "yinyang/grid.hpp"

namespace yinyang {

void Multigraph::add_vertex(const std::string& id) {
  if (index_.count(id)) throw std::invalid_argument("duplicate vertex " + id);
  index_[id] = static_cast<int>(vertices_.size());
  vertices_.push_back(id);
}

void Multigraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
  if (!has_vertex(u)) throw std::invalid_argument("unknown vertex " + u);
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + v);
  for (const Edge& e : edges_)
    if (e.id == id) throw std::invalid_argument("duplicate edge " + id);
  edges_.push_back({id, u, v});
}

bool Multigraph::has_vertex(const std::string& id) const { return index_.count(id) > 0; }

int Multigraph::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int Multigraph::degree(const std::string& id) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == id) + (e.v == id);
  return d;
}

Multigraph break_vertices(const Multigraph& g, const BreakSet& s) {
  std::set<std::string> broken;
  for (const auto& id : s) {
    if (!g.has_vertex(id)) throw std::invalid_argument("unknown vertex " + id);
    broken.insert(id);
  }
  Multigraph out;
  for (const auto& v : g.vertices())
    if (!broken.count(v)) out.add_vertex(v);
  for (const Edge& e : g.edges()) {
    std::string u = e.u, v = e.v;
    if (broken.count(u)) {
      u = e.id + ":0";
      out.add_vertex(u);
    }
    if (broken.count(v)) {
      v = e.id + ":1";
      out.add_vertex(v);
    }
    out.add_edge(e.id, u, v);
  }
  return out;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool is_single_tree(const Multigraph& g) {
  const int n = static_cast<int>(g.vertices().size());
  // The empty graph is accepted, matching the vacuous treatment of empty color classes.
  if (n == 0) return g.edges().empty();
  if (static_cast<int>(g.edges().size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (const Edge& e : g.edges()) {
    int a = find(parent, g.vertex_index(e.u)), b = find(parent, g.vertex_index(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool is_four_regular(const Multigraph& g) {
  for (const auto& v : g.vertices())
    if (g.degree(v) != 4) return false;
  return true;
}

std::vector<BreakSet> solve_trvb(const Multigraph& g, int bound) {
  const int n = static_cast<int>(g.vertices().size());
  if (n > bound) throw std::invalid_argument("graph has " + std::to_string(n) + " vertices, bound is " + std::to_string(bound));
  // Node layout per subset: original vertices 0..n-1, then two leaf slots per edge.
  const int m = static_cast<int>(g.edges().size());
  std::vector<std::pair<int, int>> ends;
  for (const Edge& e : g.edges()) ends.emplace_back(g.vertex_index(e.u), g.vertex_index(e.v));
  std::vector<BreakSet> out;
  std::vector<int> parent(n + 2 * m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int kept = 0;
    for (int i = 0; i < n; ++i) kept += !((mask >> i) & 1);
    int leaves = 0;
    for (auto [a, b] : ends) leaves += ((mask >> a) & 1) + ((mask >> b) & 1);
    const int vertices = kept + leaves;
    if (vertices == 0) {
      out.emplace_back();
      continue;
    }
    if (m != vertices - 1) continue;
    std::iota(parent.begin(), parent.end(), 0);
    int components = vertices;
    for (int k = 0; k < m; ++k) {
      int a = ends[k].first, b = ends[k].second;
      if ((mask >> a) & 1) a = n + 2 * k;
      if ((mask >> b) & 1) b = n + 2 * k + 1;
      int ra = find(parent, a), rb = find(parent, b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    if (components != 1) continue;
    BreakSet s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(g.vertices()[i]);
    out.push_back(std::move(s));
  }
  return out;
}

Dir step_dir(Point from, Point to) {
  if (to.x == from.x) return to.y < from.y ? Dir::North : Dir::South;
  return to.x > from.x ? Dir::East : Dir::West;
}

char dir_char(Dir d) {
  switch (d) {
    case Dir::North: return 'N';
    case Dir::East: return 'E';
    case Dir::South: return 'S';
    case Dir::West: return 'W';
  }
  return '?';
}

std::vector<Point> expand_route(const std::vector<Point>& poly) {
  std::vector<Point> out;
  if (poly.empty()) return out;
  out.push_back(poly.front());
  for (std::size_t i = 1; i < poly.size(); ++i) {
    Point a = poly[i - 1], b = poly[i];
    int dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
    if ((dx != 0) == (dy != 0)) throw std::invalid_argument("route segment is not axis-parallel");
    while (!(a == b)) {
      a.x += dx;
      a.y += dy;
      out.push_back(a);
    }
  }
  return out;
}

DrawingReport validate_drawing(const OrthogonalDrawing& d, const Multigraph& g) {
  DrawingReport rep;
  auto bad = [&](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  auto inside = [&](Point p) { return p.x >= 0 && p.x < d.width && p.y >= 0 && p.y < d.height; };
  auto pstr = [](Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; };
  if (d.width <= 0 || d.height <= 0) bad("non-positive drawing size");

  std::map<Point, std::string> vertex_at;
  for (const auto& v : g.vertices()) {
    auto it = d.vertex_pos.find(v);
    if (it == d.vertex_pos.end()) {
      bad("unplaced vertex " + v);
      continue;
    }
    if (!inside(it->second)) bad("vertex outside drawing " + v);
    if (!vertex_at.emplace(it->second, v).second) bad("vertices share a cell " + pstr(it->second));
  }
  for (const auto& [id, p] : d.vertex_pos)
    if (!g.has_vertex(id)) bad("position for unknown vertex " + id);
  for (const auto& [id, r] : d.routes) {
    bool known = false;
    for (const Edge& e : g.edges()) known = known || e.id == id;
    if (!known) bad("route for unknown edge " + id);
  }

  std::map<Point, std::string> used;  // interior route cells
  std::map<std::string, std::set<Dir>> ports;
  std::map<std::string, int> port_count;
  for (const Edge& e : g.edges()) {
    auto it = d.routes.find(e.id);
    if (it == d.routes.end()) {
      bad("unrouted edge " + e.id);
      continue;
    }
    const auto& poly = it->second;
    if (poly.size() < 2) {
      bad("route too short for edge " + e.id);
      continue;
    }
    bool axis_ok = true;
    for (std::size_t i = 1; i < poly.size(); ++i) {
      bool dx = poly[i].x != poly[i - 1].x, dy = poly[i].y != poly[i - 1].y;
      if (dx == dy) axis_ok = false;
    }
    if (!axis_ok) {
      bad("route not axis-parallel for edge " + e.id);
      continue;
    }
    auto pu = d.vertex_pos.find(e.u), pv = d.vertex_pos.find(e.v);
    if (pu == d.vertex_pos.end() || pv == d.vertex_pos.end()) continue;
    if (!(poly.front() == pu->second) || !(poly.back() == pv->second)) {
      bad("route endpoints do not match vertices for edge " + e.id);
      continue;
    }
    std::vector<Point> cells = expand_route(poly);
    for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
      Point c = cells[i];
      if (!inside(c)) {
        bad("route leaves drawing for edge " + e.id + " at " + pstr(c));
        continue;
      }
      if (vertex_at.count(c)) {
        bad("route passes through vertex " + vertex_at[c] + " for edge " + e.id);
        continue;
      }
      auto [pos, fresh] = used.emplace(c, e.id);
      if (!fresh) bad("route intersection at " + pstr(c) + " between " + pos->second + " and " + e.id);
    }
    if (cells.size() >= 2) {
      ports[e.u].insert(step_dir(cells[0], cells[1]));
      ++port_count[e.u];
      ports[e.v].insert(step_dir(cells.back(), cells[cells.size() - 2]));
      ++port_count[e.v];
    }
  }
  for (const auto& v : g.vertices()) {
    if (port_count[v] != 4 || ports[v].size() != 4)
      bad("vertex " + v + " needs one route end from each direction");
  }
  return rep;
}

DrawingFile parse_drawing(std::string_view text) {
  DrawingFile f;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = -1;
  bool have_dim = false;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto need_int = [&](const char* what) {
      int v;
      if (!(ls >> v)) throw ParseError(std::string("expected ") + what, lineno, 0);
      return v;
    };
    if (kw == "dim") {
      f.drawing.width = need_int("width");
      f.drawing.height = need_int("height");
      have_dim = true;
    } else if (kw == "v") {
      std::string id;
      if (!(ls >> id)) throw ParseError("expected vertex id", lineno, 0);
      int x = need_int("x"), y = need_int("y");
      if (f.graph.has_vertex(id)) throw ParseError("duplicate vertex " + id, lineno, 0);
      f.graph.add_vertex(id);
      f.drawing.vertex_pos[id] = {x, y};
    } else if (kw == "e") {
      std::string id, u, v;
      if (!(ls >> id >> u >> v)) throw ParseError("expected edge id and endpoints", lineno, 0);
      if (!f.graph.has_vertex(u) || !f.graph.has_vertex(v))
        throw ParseError("edge " + id + " references an undeclared vertex", lineno, 0);
      std::vector<Point> poly;
      int x, y;
      while (ls >> x) {
        if (!(ls >> y)) throw ParseError("odd number of route coordinates", lineno, 0);
        poly.push_back({x, y});
      }
      if (!ls.eof()) throw ParseError("bad route coordinate", lineno, 0);
      if (f.drawing.routes.count(id)) throw ParseError("duplicate edge " + id, lineno, 0);
      f.graph.add_edge(id, u, v);
      f.drawing.routes[id] = std::move(poly);
    } else {
      throw ParseError("unknown keyword " + kw, lineno, 0);
    }
  }
  if (!have_dim) throw ParseError("missing dim line", 0, 0);
  return f;
}

std::string serialize_drawing(const DrawingFile& f) {
  std::ostringstream out;
  out << "dim " << f.drawing.width << ' ' << f.drawing.height << '\n';
  for (const auto& v : f.graph.vertices()) {
    Point p = f.drawing.vertex_pos.at(v);
    out << "v " << v << ' ' << p.x << ' ' << p.y << '\n';
  }
  for (const Edge& e : f.graph.edges()) {
    out << "e " << e.id << ' ' << e.u << ' ' << e.v;
    auto it = f.drawing.routes.find(e.id);
    if (it != f.drawing.routes.end())
      for (Point p : it->second) out << ' ' << p.x << ' ' << p.y;
    out << '\n';
  }
  return out.str();
}

}  // namespace yinyang
