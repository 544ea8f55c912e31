#include "brooks/dimacs.hpp"

#include <charconv>
#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace brooks {

std::string to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::SyntaxError:
      return "SyntaxError";
    case FormatErrc::CountMismatch:
      return "CountMismatch";
    case FormatErrc::SelfLoop:
      return "SelfLoop";
    case FormatErrc::DuplicateEdge:
      return "DuplicateEdge";
    case FormatErrc::IdOutOfRange:
      return "IdOutOfRange";
    case FormatErrc::IncompleteColouring:
      return "IncompleteColouring";
  }
  return "?";
}

namespace {

std::string prefix(std::size_t line) { return line == 0 ? std::string{} : "line " + std::to_string(line) + ": "; }

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view token, T& value) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

FormatError::FormatError(FormatErrc code, std::size_t line, const std::string& detail)
    : std::runtime_error(prefix(line) + detail), code_(code), line_(line) {}

Graph parse_dimacs(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = split(text);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (have_problem) throw FormatError(FormatErrc::SyntaxError, line_no, "second problem line");
      if (tokens.size() != 4 || tokens[1] != "edge" || !parse_number(tokens[2], n) ||
          !parse_number(tokens[3], declared)) {
        throw FormatError(FormatErrc::SyntaxError, line_no, "expected 'p edge <vertices> <edges>'");
      }
      if (n >= kNoVertex) throw FormatError(FormatErrc::SyntaxError, line_no, "vertex count too large");
      have_problem = true;
      edges.reserve(declared);
      seen.reserve(declared);
      continue;
    }

    if (tokens[0] == "e") {
      if (!have_problem) throw FormatError(FormatErrc::SyntaxError, line_no, "edge before problem line");
      std::size_t u = 0;
      std::size_t v = 0;
      if (tokens.size() != 3 || !parse_number(tokens[1], u) || !parse_number(tokens[2], v)) {
        throw FormatError(FormatErrc::SyntaxError, line_no, "expected 'e <u> <v>'");
      }
      for (std::size_t x : {u, v}) {
        if (x == 0 || x > n) {
          throw FormatError(FormatErrc::IdOutOfRange, line_no, "vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
        }
      }
      if (u == v) throw FormatError(FormatErrc::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
      const auto lo = static_cast<std::uint64_t>(std::min(u, v));
      const auto hi = static_cast<std::uint64_t>(std::max(u, v));
      if (!seen.insert(lo << 32 | hi).second) {
        throw FormatError(FormatErrc::DuplicateEdge, line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      continue;
    }

    throw FormatError(FormatErrc::SyntaxError, line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }

  if (!have_problem) throw FormatError(FormatErrc::SyntaxError, line_no, "missing problem line");
  if (edges.size() != declared) {
    throw FormatError(FormatErrc::CountMismatch, line_no,
                      "problem line declares " + std::to_string(declared) + " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(n, edges);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void emit_colouring(const Colouring& c, std::ostream& out) {
  for (std::size_t v = 0; v < c.colour.size(); ++v) {
    if (c.colour[v] == 0) {
      throw FormatError(FormatErrc::IncompleteColouring, 0, "vertex " + std::to_string(v + 1) + " is uncoloured");
    }
  }
  std::string buffer = "s col " + std::to_string(c.num_colours) + '\n';
  for (std::size_t v = 0; v < c.colour.size(); ++v) {
    buffer += "v ";
    buffer += std::to_string(v + 1);
    buffer += ' ';
    buffer += std::to_string(c.colour[v]);
    buffer += '\n';
  }
  out << buffer;
}

Colouring parse_colouring(std::istream& in, std::size_t n) {
  std::string text;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  std::size_t header_line = 0;
  Colouring c = Colouring::uncoloured(n);

  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = split(text);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "s") {
      std::size_t k = 0;
      if (declared) throw FormatError(FormatErrc::SyntaxError, line_no, "second solution line");
      if (tokens.size() != 3 || tokens[1] != "col" || !parse_number(tokens[2], k)) {
        throw FormatError(FormatErrc::SyntaxError, line_no, "expected 's col <colours>'");
      }
      declared = k;
      header_line = line_no;
      continue;
    }
    if (tokens[0] == "v") {
      if (!declared) throw FormatError(FormatErrc::SyntaxError, line_no, "vertex line before solution line");
      std::size_t v = 0;
      Colour col = 0;
      if (tokens.size() != 3 || !parse_number(tokens[1], v) || !parse_number(tokens[2], col) || col == 0) {
        throw FormatError(FormatErrc::SyntaxError, line_no, "expected 'v <vertex> <positive colour>'");
      }
      if (v == 0 || v > n) {
        throw FormatError(FormatErrc::IdOutOfRange, line_no, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (c.colour[v - 1] != 0) throw FormatError(FormatErrc::SyntaxError, line_no, "vertex " + std::to_string(v) + " coloured twice");
      c.colour[v - 1] = col;
      continue;
    }
    throw FormatError(FormatErrc::SyntaxError, line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  }

  if (!declared) throw FormatError(FormatErrc::SyntaxError, line_no, "missing solution line");
  c.recount();
  if (c.num_colours != *declared) {
    throw FormatError(FormatErrc::SyntaxError, header_line,
                      "solution line declares " + std::to_string(*declared) + " colours, found " + std::to_string(c.num_colours));
  }
  return c;
}

}  // namespace brooks
