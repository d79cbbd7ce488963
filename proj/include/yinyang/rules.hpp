#pragma once

#include <string>
#include <variant>
#include <vector>

#include "yinyang/grid.hpp"

namespace yinyang {

enum class Variant { ConnectedOnly, YinYang, TreePartition };

std::string variant_name(Variant v);
// Accepts "connected", "yinyang", "tree" (and the enum spellings); throws std::invalid_argument.
Variant parse_variant(const std::string& s);

struct Violation {
  enum class Kind { Disconnected, MonoSquare, InducedCycle, ClueViolated };
  Kind kind;
  Color color = Color::Black;  // Disconnected, InducedCycle
  Pos cell{};                  // MonoSquare (top-left of window), ClueViolated
  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;
};

bool check_connectivity(const Coloring& c, Color col);
bool check_no_mono_2x2(const Coloring& c);
bool check_diagonal_lemma(const Coloring& c);
bool check_tree_partition(const Coloring& c);

// Throws std::invalid_argument on dimension mismatch.
VerifyReport verify(const Puzzle& p, const Coloring& c, Variant v);
// Same checks without clues.
VerifyReport verify(const Coloring& c, Variant v);

bool connectivity_feasible(const PartialColoring& pc, Color col);

struct Forced {
  Pos cell;
  Color color;
  friend bool operator==(const Forced&, const Forced&) = default;
};

struct Progress {
  std::vector<Forced> forced;
};
struct Stable {};
struct Contradiction {
  std::string reason;
};
using PropagationResult = std::variant<Progress, Stable, Contradiction>;

// Runs the window rules to a fixpoint on pc. pc is updated in place; the
// result lists forced cells in the order they were fixed.
PropagationResult propagate(PartialColoring& pc, Variant v);
// Value-returning form that leaves the input untouched.
PropagationResult propagate(const PartialColoring& pc, Variant v, PartialColoring* out);

}  // namespace yinyang
