#include <doctest.h>

#include "yinyang/grid.hpp"

using namespace yinyang;

TEST_CASE("parse puzzle with givens and empties") {
  Puzzle p = parse_puzzle("BW\n..\n");
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(p.at(0, 0) == Cell::Black);
  CHECK(p.at(0, 1) == Cell::White);
  CHECK(p.is_empty(1, 0));
  CHECK(p.is_empty(1, 1));
  CHECK(p.empty_count() == 2);

  Puzzle one = parse_puzzle("B\n");
  CHECK(one.rows() == 1);
  CHECK(one.at(0, 0) == Cell::Black);
}

TEST_CASE("parse errors carry position") {
  try {
    parse_puzzle("B.\n.X\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_puzzle(""), ParseError);
  CHECK_THROWS_AS(parse_puzzle("B.\nB\n"), ParseError);
  CHECK_THROWS_AS(parse_puzzle("B.\n\n.."), ParseError);
}

TEST_CASE("serialize puzzle") {
  CHECK(serialize_puzzle(Puzzle(1, 2)) == "..\n");
  Puzzle p(2, 2);
  p.set(0, 0, Cell::Black);
  CHECK(serialize_puzzle(p) == "B.\n..\n");
}

TEST_CASE("puzzle round trip on canonical strings") {
  const char* alphabet = "BW.";
  for (int rows = 1; rows <= 2; ++rows)
    for (int cols = 1; cols <= 3; ++cols) {
      int n = rows * cols, total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::string text;
        int x = code;
        for (int r = 0; r < rows; ++r) {
          for (int c = 0; c < cols; ++c, x /= 3) text += alphabet[x % 3];
          text += '\n';
        }
        CHECK(serialize_puzzle(parse_puzzle(text)) == text);
      }
    }
}

TEST_CASE("coloring text marks filled cells in lowercase") {
  Puzzle p = parse_puzzle("B.\n");
  Coloring c = parse_coloring("Bw\n");
  CHECK(c.at(0, 0) == Color::Black);
  CHECK(c.at(0, 1) == Color::White);
  CHECK(serialize_coloring(c) == "BW\n");
  CHECK(serialize_coloring(c, &p) == "Bw\n");
  CHECK_THROWS_AS(parse_coloring("B.\n"), ParseError);
}

TEST_CASE("overlay checks clues") {
  Puzzle p = parse_puzzle("B.\n");
  Coloring ok(1, 2);
  ok.set(0, 0, Color::Black);
  CHECK(overlay(p, ok) == ok);

  Coloring bad(1, 2, Color::White);
  try {
    overlay(p, bad);
    FAIL("expected OverlayError");
  } catch (const OverlayError& e) {
    REQUIRE(e.has_cell());
    CHECK(e.cell() == Pos{0, 0});
  }
  CHECK_THROWS_AS(overlay(p, Coloring(2, 2)), OverlayError);

  Puzzle empty(2, 2);
  for (int bits = 0; bits < 16; ++bits) {
    Coloring c(2, 2);
    for (int i = 0; i < 4; ++i) c.set(i / 2, i % 2, (bits >> i) & 1 ? Color::White : Color::Black);
    CHECK(overlay(empty, c) == c);
  }
}

TEST_CASE("color helpers") {
  CHECK(opposite(opposite(Color::Black)) == Color::Black);
  CHECK(opposite(Color::White) == Color::Black);
  CHECK(color_char(Color::Black) == 'B');
}

TEST_CASE("partial coloring refuses incomplete conversion") {
  PartialColoring pc(1, 2);
  CHECK_FALSE(pc.complete());
  CHECK_THROWS_AS(pc.to_coloring(), std::logic_error);
  pc.set(0, 0, Cell::Black);
  pc.set(0, 1, Cell::White);
  CHECK(pc.complete());
  CHECK(pc.to_coloring().at(0, 1) == Color::White);
}
