#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yinyang/gadget_lab.hpp"
#include "yinyang/grid.hpp"
#include "yinyang/tiles.hpp"
#include "yinyang/trvb.hpp"

namespace yinyang {

enum class Provenance { Filler, WireBlack, WhiteAboveWire, Tendril, VertexGadget, TopRow, BottomRow, ExceptionalCell };
std::string provenance_name(Provenance p);

struct CellInfo {
  Provenance kind = Provenance::Filler;
  std::string id;    // edge or vertex id when applicable
  std::string role;  // vertex gadget cells: "decision", "empty", "port_path", "fixed"
  bool important = false;
};

struct ReductionMap {
  int rows = 0;
  int cols = 0;
  std::vector<CellInfo> cells;
  std::map<std::string, std::vector<Pos>> decision_cells;  // vertex id -> puzzle cells
  std::map<std::string, Pos> vertex_origin;                // vertex id -> tile top-left
  std::optional<Pos> exceptional;

  const CellInfo& at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
  CellInfo& at(int r, int c) { return cells[static_cast<std::size_t>(r) * cols + c]; }
};

struct CompiledInstance {
  Layout layout = Layout::ConnectedOnly9;
  Puzzle puzzle;
  ReductionMap map;
  DrawingFile source;
  TileSet tiles;
  VertexCertificate vertex;
};

// Invalid drawing or uncertified tile set.
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(const std::string& what) : std::runtime_error(what) {}
};

// Certifies the tile set first unless a passing report is supplied.
CompiledInstance compile(const DrawingFile& d, const TileSet& ts, const CertificationReport* cert = nullptr);

// Throws std::invalid_argument for unknown vertex ids.
Coloring embed_solution(const CompiledInstance& ci, const BreakSet& s);
// Throws std::runtime_error when a gadget's decision cells are mixed.
BreakSet extract_break_set(const CompiledInstance& ci, const Coloring& c);
std::vector<Pos> classify_important_cells(const CompiledInstance& ci);

// Sidecar text: `cell <row> <col> <kind> [id] [important]` per cell, then `exceptional <row> <col>`.
std::string serialize_map(const ReductionMap& m);

}  // namespace yinyang
