#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qpcc/potential.hpp"

namespace qpcc {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Text format, one item per line, '#' starts a comment:
//   vertices: n
//   arrow <name>: <s> -> <t>
//   term <coeff> <name> <name> ...
//   cap: D
// The cap line may be omitted when fallback_cap is given.
QuiverWithPotential parse_qp(const std::string& text, std::optional<int> fallback_cap = std::nullopt);
QuiverWithPotential parse_qp_file(const std::string& path, std::optional<int> fallback_cap = std::nullopt);

std::string emit_qp(const QuiverWithPotential& qp);

}  // namespace qpcc
