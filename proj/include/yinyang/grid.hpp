#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace yinyang {

enum class Color : std::uint8_t { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
char color_char(Color c);

// Cell state shared by clues and partial colorings.
enum class Cell : std::uint8_t { Unknown, Black, White };

inline Cell to_cell(Color c) { return c == Color::Black ? Cell::Black : Cell::White; }
inline Color to_color(Cell c) { return c == Cell::Black ? Color::Black : Color::White; }

struct Pos {
  int row = 0;
  int col = 0;
  friend bool operator==(const Pos&, const Pos&) = default;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

// Thrown for malformed text input. Line and column are 0-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Clue grid. Unknown means the cell is empty in the instance.
class Puzzle {
 public:
  Puzzle() = default;
  Puzzle(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

  Cell at(int r, int c) const { return cells_[index(r, c)]; }
  void set(int r, int c, Cell v) { cells_[index(r, c)] = v; }
  bool is_empty(int r, int c) const { return at(r, c) == Cell::Unknown; }
  int empty_count() const;

  const std::vector<Cell>& cells() const { return cells_; }
  int index(int r, int c) const { return r * cols_ + c; }

  friend bool operator==(const Puzzle&, const Puzzle&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> cells_;
};

class Coloring {
 public:
  Coloring() = default;
  Coloring(int rows, int cols, Color fill = Color::White);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

  Color at(int r, int c) const { return cells_[index(r, c)]; }
  void set(int r, int c, Color v) { cells_[index(r, c)] = v; }
  int index(int r, int c) const { return r * cols_ + c; }
  const std::vector<Color>& cells() const { return cells_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) {
    return std::tie(a.rows_, a.cols_, a.cells_) <=> std::tie(b.rows_, b.cols_, b.cells_);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Color> cells_;
};

// Solver working state; Unknown cells are still open.
class PartialColoring {
 public:
  PartialColoring() = default;
  PartialColoring(int rows, int cols);
  explicit PartialColoring(const Puzzle& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

  Cell at(int r, int c) const { return cells_[index(r, c)]; }
  Cell at(int i) const { return cells_[i]; }
  void set(int r, int c, Cell v) { cells_[index(r, c)] = v; }
  void set(int i, Cell v) { cells_[i] = v; }
  int index(int r, int c) const { return r * cols_ + c; }
  bool complete() const;
  Coloring to_coloring() const;  // throws std::logic_error if incomplete

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> cells_;
};

Puzzle parse_puzzle(std::string_view text);
std::string serialize_puzzle(const Puzzle& p);

// Parses the solution format (B/W/b/w). Case is ignored.
Coloring parse_coloring(std::string_view text);
// Uppercase everywhere unless a puzzle is given, then lowercase marks its empty cells.
std::string serialize_coloring(const Coloring& c, const Puzzle* p = nullptr);

// Dimension mismatch (no cell) or a clue the coloring contradicts (cell set).
class OverlayError : public std::invalid_argument {
 public:
  explicit OverlayError(const std::string& what) : std::invalid_argument(what) {}
  OverlayError(const std::string& what, Pos cell) : std::invalid_argument(what), cell_(cell), has_cell_(true) {}
  bool has_cell() const { return has_cell_; }
  Pos cell() const { return cell_; }

 private:
  Pos cell_{};
  bool has_cell_ = false;
};

// Returns c unchanged if it respects p.
Coloring overlay(const Puzzle& p, const Coloring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace yinyang
