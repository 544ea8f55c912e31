#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "brooks/colouring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

enum class FormatErrc { SyntaxError, CountMismatch, SelfLoop, DuplicateEdge, IdOutOfRange, IncompleteColouring };

// Parse or emit failure; line() is 1-based, 0 when no line applies.
class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrc code, std::size_t line, const std::string& detail);

  FormatErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  FormatErrc code_;
  std::size_t line_;
};

std::string to_string(FormatErrc code);

// DIMACS edge format: "c ..." comments, one "p edge <n> <m>" line before any
// edge, then exactly m lines "e <u> <v>" with 1-based endpoints. Blank lines
// are skipped; any other line is an error.
Graph parse_dimacs(std::istream& in);

// Writes the graph in the format parse_dimacs reads, edges in ascending order.
void write_dimacs(const Graph& g, std::ostream& out);

// "s col <num_colours>" then "v <vertex+1> <colour>" per vertex.
void emit_colouring(const Colouring& c, std::ostream& out);

// Reads what emit_colouring writes. Vertices may appear in any order but at
// most once; vertices absent from the input stay uncoloured (0).
Colouring parse_colouring(std::istream& in, std::size_t n);

}  // namespace brooks
