#include "yinyang/grid.hpp"

#include <fstream>
#include <sstream>

namespace yinyang {

char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " at row " + std::to_string(line) + " col " + std::to_string(column)),
      line_(line),
      column_(column) {}

Puzzle::Puzzle(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("puzzle dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, Cell::Unknown);
}

int Puzzle::empty_count() const {
  int n = 0;
  for (Cell c : cells_) n += c == Cell::Unknown;
  return n;
}

Coloring::Coloring(int rows, int cols, Color fill) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("coloring dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

PartialColoring::PartialColoring(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, Cell::Unknown);
}

PartialColoring::PartialColoring(const Puzzle& p) : rows_(p.rows()), cols_(p.cols()), cells_(p.cells()) {}

bool PartialColoring::complete() const {
  for (Cell c : cells_)
    if (c == Cell::Unknown) return false;
  return true;
}

Coloring PartialColoring::to_coloring() const {
  Coloring out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      Cell v = at(r, c);
      if (v == Cell::Unknown) throw std::logic_error("partial coloring is incomplete");
      out.set(r, c, to_color(v));
    }
  return out;
}

namespace {

// Splits newline-terminated text into rows, checking shape. `legal` maps a
// character to a cell value or returns false.
template <class F>
std::vector<std::vector<char>> split_rows(std::string_view text, F legal) {
  if (text.empty()) throw ParseError("empty input", 0, 0);
  std::vector<std::vector<char>> rows;
  std::size_t start = 0;
  int line = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view row = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.empty()) throw ParseError("empty row", line, 0);
    std::vector<char> cells;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!legal(row[i]))
        throw ParseError(std::string("illegal character '") + row[i] + "'", line, static_cast<int>(i));
      cells.push_back(row[i]);
    }
    if (!rows.empty() && cells.size() != rows.front().size())
      throw ParseError("ragged row", line, static_cast<int>(std::min(cells.size(), rows.front().size())));
    rows.push_back(std::move(cells));
    if (end == std::string_view::npos) break;
    start = end + 1;
    ++line;
  }
  if (rows.empty()) throw ParseError("empty input", 0, 0);
  return rows;
}

}  // namespace

Puzzle parse_puzzle(std::string_view text) {
  auto rows = split_rows(text, [](char ch) { return ch == 'B' || ch == 'W' || ch == '.'; });
  Puzzle p(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) {
      char ch = rows[r][c];
      p.set(r, c, ch == 'B' ? Cell::Black : ch == 'W' ? Cell::White : Cell::Unknown);
    }
  return p;
}

std::string serialize_puzzle(const Puzzle& p) {
  std::string out;
  out.reserve(static_cast<std::size_t>(p.rows()) * (p.cols() + 1));
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      Cell v = p.at(r, c);
      out.push_back(v == Cell::Black ? 'B' : v == Cell::White ? 'W' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

Coloring parse_coloring(std::string_view text) {
  auto rows = split_rows(text, [](char ch) { return ch == 'B' || ch == 'W' || ch == 'b' || ch == 'w'; });
  Coloring c(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < c.rows(); ++r)
    for (int k = 0; k < c.cols(); ++k) c.set(r, k, (rows[r][k] == 'B' || rows[r][k] == 'b') ? Color::Black : Color::White);
  return c;
}

std::string serialize_coloring(const Coloring& c, const Puzzle* p) {
  if (p && (p->rows() != c.rows() || p->cols() != c.cols()))
    throw std::invalid_argument("coloring and puzzle dimensions differ");
  std::string out;
  out.reserve(static_cast<std::size_t>(c.rows()) * (c.cols() + 1));
  for (int r = 0; r < c.rows(); ++r) {
    for (int k = 0; k < c.cols(); ++k) {
      char ch = color_char(c.at(r, k));
      if (p && p->is_empty(r, k)) ch = static_cast<char>(ch - 'A' + 'a');
      out.push_back(ch);
    }
    out.push_back('\n');
  }
  return out;
}

Coloring overlay(const Puzzle& p, const Coloring& c) {
  if (p.rows() != c.rows() || p.cols() != c.cols()) throw OverlayError("dimension mismatch");
  for (int r = 0; r < p.rows(); ++r)
    for (int k = 0; k < p.cols(); ++k) {
      Cell clue = p.at(r, k);
      if (clue != Cell::Unknown && to_color(clue) != c.at(r, k))
        throw OverlayError("clue violated at (" + std::to_string(r) + "," + std::to_string(k) + ")", Pos{r, k});
    }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace yinyang
