#pragma once

#include <optional>
#include <string>

#include "yinyang/grid.hpp"

namespace yinyang {

struct ReductionMap;

struct RenderOptions {
  int cell_size = 20;
  bool show_given_vs_filled = true;
  const ReductionMap* overlay = nullptr;  // not owned
};

// Throws std::invalid_argument on dimension mismatch.
std::string to_ascii(const Puzzle& p, const std::optional<Coloring>& c = std::nullopt);
std::string to_svg(const Puzzle& p, const std::optional<Coloring>& c, const RenderOptions& o = {});

}  // namespace yinyang
