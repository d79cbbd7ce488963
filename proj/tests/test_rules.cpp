#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "yinyang/rules.hpp"

using namespace yinyang;

namespace {

Coloring grid(const char* text) { return parse_coloring(text); }

PartialColoring partial(const char* text) {
  Puzzle p = parse_puzzle(text);
  return PartialColoring(p);
}

}  // namespace

TEST_CASE("check_connectivity") {
  CHECK_FALSE(check_connectivity(grid("BWB\n"), Color::Black));
  CHECK(check_connectivity(grid("BB\nBB\n"), Color::Black));
  CHECK(check_connectivity(grid("BB\nBB\n"), Color::White));
  CHECK_FALSE(check_connectivity(grid("BWB\nWBW\nBWB\n"), Color::Black));
}

TEST_CASE("check_no_mono_2x2") {
  CHECK_FALSE(check_no_mono_2x2(grid("BB\nBB\n")));
  CHECK(check_no_mono_2x2(grid("BB\nWW\n")));
  CHECK(check_no_mono_2x2(grid("BBBBB\n")));
  CHECK(check_no_mono_2x2(grid("BWBWW\n")));
}

TEST_CASE("check_diagonal_lemma") {
  CHECK_FALSE(check_diagonal_lemma(grid("BW\nWB\n")));
  CHECK_FALSE(check_diagonal_lemma(grid("WB\nBW\n")));
  CHECK(check_diagonal_lemma(grid("BB\nWB\n")));
  CHECK(check_diagonal_lemma(grid("WW\nWW\n")));
}

TEST_CASE("check_tree_partition") {
  CHECK_FALSE(check_tree_partition(grid("BB\nBB\n")));
  CHECK(check_tree_partition(grid("BB\nWW\n")));
  CHECK_FALSE(check_tree_partition(grid("BBB\nBWB\nBBB\n")));
}

TEST_CASE("verify per variant") {
  Puzzle empty(2, 2);
  Coloring black(2, 2, Color::Black);
  CHECK(verify(empty, black, Variant::ConnectedOnly).valid);

  VerifyReport yy = verify(empty, black, Variant::YinYang);
  CHECK_FALSE(yy.valid);
  REQUIRE(yy.violations.size() == 1);
  CHECK(yy.violations[0].kind == Violation::Kind::MonoSquare);
  CHECK(yy.violations[0].cell == Pos{0, 0});

  Puzzle clue = parse_puzzle("B.\n");
  Coloring wb = grid("WB\n");
  for (Variant v : {Variant::ConnectedOnly, Variant::YinYang, Variant::TreePartition}) {
    VerifyReport r = verify(clue, wb, v);
    CHECK_FALSE(r.valid);
    bool clue_hit = false;
    for (const auto& x : r.violations)
      if (x.kind == Violation::Kind::ClueViolated && x.cell == Pos{0, 0}) clue_hit = true;
    CHECK(clue_hit);
  }
  CHECK_THROWS_AS(verify(clue, black, Variant::YinYang), std::invalid_argument);
}

TEST_CASE("variant names round trip") {
  for (Variant v : {Variant::ConnectedOnly, Variant::YinYang, Variant::TreePartition})
    CHECK(parse_variant(variant_name(v)) == v);
  CHECK_THROWS_AS(parse_variant("nope"), std::invalid_argument);
}

TEST_CASE("verify agrees with the reference rules on every small board") {
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 1; rows * cols <= 16 && cols <= 4; ++cols) {
      const int n = rows * cols;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        auto g = oracle::bits_to_grid(bits, n);
        Coloring c = oracle::to_coloring(g, rows, cols);
        for (Variant v : {Variant::ConnectedOnly, Variant::YinYang, Variant::TreePartition}) {
          INFO(rows << "x" << cols << " bits " << bits);
          REQUIRE(verify(c, v).valid == oracle::valid(g, rows, cols, v));
        }
        REQUIRE(verify(c, Variant::YinYang).valid ==
                (check_connectivity(c, Color::Black) && check_connectivity(c, Color::White) && check_no_mono_2x2(c)));
      }
    }
}

TEST_CASE("connectivity_feasible examples") {
  CHECK(connectivity_feasible(partial("B.B\n"), Color::Black));
  CHECK_FALSE(connectivity_feasible(partial("BWB\n"), Color::Black));
  CHECK_FALSE(connectivity_feasible(partial("B..\nWWW\n..B\n"), Color::Black));
}

TEST_CASE("connectivity_feasible never rejects a prefix of a solution") {
  std::mt19937_64 rng(7);
  for (int rows = 2; rows <= 3; ++rows)
    for (int cols = 2; cols <= 4; ++cols) {
      Puzzle empty(rows, cols);
      for (Variant v : {Variant::ConnectedOnly, Variant::YinYang}) {
        for (const Coloring& sol : oracle::solutions(empty, v)) {
          for (int trial = 0; trial < 8; ++trial) {
            PartialColoring pc(rows, cols);
            std::bernoulli_distribution keep(0.5);
            for (int r = 0; r < rows; ++r)
              for (int c = 0; c < cols; ++c)
                if (keep(rng)) pc.set(r, c, to_cell(sol.at(r, c)));
            CHECK(connectivity_feasible(pc, Color::Black));
            CHECK(connectivity_feasible(pc, Color::White));
          }
        }
      }
    }
}

TEST_CASE("propagate examples") {
  PartialColoring mono = partial("BB\nB.\n");
  auto r1 = propagate(mono, Variant::YinYang);
  REQUIRE(std::holds_alternative<Progress>(r1));
  CHECK(std::get<Progress>(r1).forced.front() == Forced{{1, 1}, Color::White});
  CHECK(mono.at(1, 1) == Cell::White);

  // The mono rule does not apply without the 2x2 constraint.
  PartialColoring loose = partial("BB\nB.\n");
  CHECK(std::holds_alternative<Stable>(propagate(loose, Variant::ConnectedOnly)));

  for (Variant v : {Variant::ConnectedOnly, Variant::YinYang, Variant::TreePartition}) {
    PartialColoring diag = partial("BW\n.B\n");
    auto r = propagate(diag, v);
    REQUIRE(std::holds_alternative<Progress>(r));
    CHECK(diag.at(1, 0) == Cell::Black);

    PartialColoring bad = partial("BW\nWB\n");
    CHECK(std::holds_alternative<Contradiction>(propagate(bad, v)));
  }
}

TEST_CASE("propagate leaves its input alone in the copying form") {
  PartialColoring in = partial("BB\nB.\n");
  PartialColoring out;
  auto r = propagate(in, Variant::YinYang, &out);
  CHECK(std::holds_alternative<Progress>(r));
  CHECK(in.at(1, 1) == Cell::Unknown);
  CHECK(out.at(1, 1) == Cell::White);
}

TEST_CASE("every forced cell is sound on boards up to 3x3") {
  // Exhaustive over partial colorings of 2x2, 2x3, 3x2, 3x3 restricted to
  // those with a valid completion; flipping any forced cell must kill all completions.
  for (int rows = 2; rows <= 3; ++rows)
    for (int cols = 2; cols <= 3; ++cols) {
      const int n = rows * cols;
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (Variant v : {Variant::ConnectedOnly, Variant::YinYang, Variant::TreePartition}) {
        for (int code = 0; code < total; ++code) {
          Puzzle p(rows, cols);
          int x = code;
          for (int i = 0; i < n; ++i, x /= 3)
            if (x % 3) p.set(i / cols, i % cols, x % 3 == 1 ? Cell::Black : Cell::White);
          PartialColoring pc(p);
          auto res = propagate(pc, v);
          if (!std::holds_alternative<Progress>(res)) continue;
          for (const Forced& f : std::get<Progress>(res).forced) {
            Puzzle flipped = p;
            flipped.set(f.cell.row, f.cell.col, to_cell(opposite(f.color)));
            INFO(serialize_puzzle(p) << " forced " << f.cell.row << "," << f.cell.col);
            REQUIRE(oracle::count(flipped, v) == 0);
          }
        }
      }
    }
}

TEST_CASE("connected-only solutions never contain a checkerboard window") {
  for (int rows = 1; rows <= 3; ++rows)
    for (int cols = 1; cols <= 4; ++cols)
      for (const Coloring& c : oracle::solutions(Puzzle(rows, cols), Variant::ConnectedOnly))
        CHECK(check_diagonal_lemma(c));
}
