#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artc {

// Exit-code contract shared by the CLI and the error types below.
enum class ExitCode : int {
  ok = 0,
  parse = 1,
  hypothesis = 2,
  resource = 3,
  oracle = 4,
  verification = 5,
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural hypothesis on the input graph fails (dominated vertices,
// disconnected complement where connectivity is required, ...).
struct hypothesis_error : std::runtime_error {
  std::vector<std::string> offending_labels;
  explicit hypothesis_error(const std::string& what,
                            std::vector<std::string> labels = {})
      : std::runtime_error(what), offending_labels(std::move(labels)) {}
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated oracle computation disagreed between adjacent windows.
struct oracle_instability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace artc
