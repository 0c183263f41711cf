#pragma once

#include <stdexcept>
#include <string>

namespace lq {

// Exit-code taxonomy used by the CLI: 2 invalid input, 3 capacity, 4 numerical.
struct invalid_input_error : std::runtime_error {
  explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lq
