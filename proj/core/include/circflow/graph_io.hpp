#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circflow/multigraph.hpp"

namespace circflow {

/// Input rejected by a parser. line is 1-based into the offending text,
/// 0 when no line applies (e.g. graph6 one-liners).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// MG format: optional '#' comment lines, a header "mg <n>", then one line
/// "<u> <v>" per edge (0-based, u != v). Repeated lines are parallel edges.
/// Edge ids are assigned in line order.
Multigraph parse_multigraph(std::string_view text);

/// Round-trip inverse of parse_multigraph: header, then one "tail head" line
/// per edge in id order. parse_multigraph(serialize(g)) reproduces g exactly.
std::string serialize(const Multigraph& g);

/// Standard graph6 (simple graphs only; no sparse6, no multigraph extension).
/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Multigraph parse_graph6(std::string_view line);

/// Every non-comment, non-empty line of a .g6 payload parsed as one graph.
std::vector<Multigraph> parse_graph6_file(std::string_view text);

}  // namespace circflow
