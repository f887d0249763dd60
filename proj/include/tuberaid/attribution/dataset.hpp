#pragma once

#include <span>
#include <string>
#include <vector>

namespace tuberaid::attribution {

// Labeled feature rows; `targets` index into `class_names`.
struct Dataset {
  std::vector<std::string> class_names;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> targets;

  std::size_t size() const noexcept { return rows.size(); }
  std::size_t dimension() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
  std::size_t distinct_classes() const;
  Dataset subset(std::span<const std::size_t> indices) const;
};

} // namespace tuberaid::attribution
