#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace yinyang {

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loops and parallel edges allowed. Vertex order is the insertion order and
// defines the bit order used by solve_trvb.
class Multigraph {
 public:
  void add_vertex(const std::string& id);
  void add_edge(const std::string& id, const std::string& u, const std::string& v);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& id) const;
  int vertex_index(const std::string& id) const;  // -1 if absent
  int degree(const std::string& id) const;        // loops count twice

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
};

using BreakSet = std::vector<std::string>;  // kept in graph vertex order

// Fresh leaves are named "<edge id>:<end>" where end is 0 for the u side and 1
// for the v side. Throws std::invalid_argument for unknown ids.
Multigraph break_vertices(const Multigraph& g, const BreakSet& s);
bool is_single_tree(const Multigraph& g);
bool is_four_regular(const Multigraph& g);

// All break sets whose residue is one tree, in increasing bitmask order.
// Throws std::invalid_argument if the graph has more than `bound` vertices.
std::vector<BreakSet> solve_trvb(const Multigraph& g, int bound = 20);

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Lattice drawing: point (x, y) is drawing cell column x, row y; row 0 at top.
struct OrthogonalDrawing {
  int width = 0;
  int height = 0;
  std::map<std::string, Point> vertex_pos;
  std::map<std::string, std::vector<Point>> routes;  // edge id -> polyline from u to v
};

struct DrawingReport {
  bool valid = true;
  std::vector<std::string> violations;
};

DrawingReport validate_drawing(const OrthogonalDrawing& d, const Multigraph& g);

struct DrawingFile {
  Multigraph graph;
  OrthogonalDrawing drawing;
};

// Format: `dim W H`, `v <id> <x> <y>`, `e <id> <u> <v> <x1> <y1> ...`, '#' comments.
// Throws ParseError.
DrawingFile parse_drawing(std::string_view text);
std::string serialize_drawing(const DrawingFile& f);

// Compass direction of the first step leaving `from` towards `to` (adjacent or collinear).
enum class Dir { North, East, South, West };
Dir step_dir(Point from, Point to);
char dir_char(Dir d);

// Unit-step expansion of a polyline, including both endpoints.
std::vector<Point> expand_route(const std::vector<Point>& poly);

}  // namespace yinyang
