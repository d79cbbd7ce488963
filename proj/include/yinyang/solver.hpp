#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "yinyang/grid.hpp"
#include "yinyang/rules.hpp"

namespace yinyang {

enum class BranchHeuristic { FirstUnknown, MostConstrained };

struct SolveConfig {
  Variant variant = Variant::YinYang;
  std::optional<std::uint64_t> solution_limit;  // unset = unbounded
  std::optional<std::uint64_t> node_limit;
  BranchHeuristic branch_heuristic = BranchHeuristic::MostConstrained;
  // Both pruning layers can be switched off to test that they never change counts.
  bool use_propagation = true;
  bool use_connectivity_pruning = true;
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t propagations = 0;
  std::uint64_t prunes_connectivity = 0;
  std::uint64_t prunes_window = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Thrown when SolveConfig::node_limit runs out before the search finishes.
class NodeLimitExceeded : public std::runtime_error {
 public:
  explicit NodeLimitExceeded(std::uint64_t limit)
      : std::runtime_error("node limit " + std::to_string(limit) + " exhausted"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

// Receives each solution; return false to stop the enumeration.
using SolutionSink = std::function<bool(const Coloring&)>;

void enumerate_solutions(const Puzzle& p, const SolveConfig& cfg, const SolutionSink& sink,
                         SolveStats* stats = nullptr);
std::optional<Coloring> solve_one(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats = nullptr);
std::uint64_t count_solutions(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats = nullptr);

struct Uniqueness {
  enum class Kind { None, Unique, Multiple };
  Kind kind = Kind::None;
  std::optional<Coloring> solution;  // set when Unique
};
Uniqueness is_unique(const Puzzle& p, const SolveConfig& cfg, SolveStats* stats = nullptr);

}  // namespace yinyang
