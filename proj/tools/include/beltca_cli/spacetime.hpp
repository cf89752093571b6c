#pragma once

#include <string>
#include <vector>

#include "beltca/word.hpp"

namespace beltca::cli {

/// Row 0 is the input; row r+1 is row r after the r-th unit step of the word
/// (rightmost letter first).
struct SpacetimeDiagram {
  AlphabetRef alphabet;
  std::string word;
  std::vector<std::string> steps;  ///< "L", "D^-1", ... one per row after the first
  std::vector<std::vector<Symbol>> rows;
};

SpacetimeDiagram build_spacetime(const GeneratorTable& table, const GroupWord& w, const PeriodicConfig& x);

enum class DiagramFormat { Text, Svg, Tikz };
/// Throws ParseError for an unknown name.
DiagramFormat parse_diagram_format(const std::string& name);

/// Text: one line per row, cells as labels padded to a common width.
/// Svg/Tikz: every cell is a column of boxes, one per atomic track (for a
/// belt alphabet the top component's tracks above the bottom's); zero is
/// white, track t uses a fixed hue, walls are drawn as '>' and '<' glyphs.
std::string render(const SpacetimeDiagram& d, DiagramFormat f);

}  // namespace beltca::cli
