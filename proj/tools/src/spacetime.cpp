#include "beltca_cli/spacetime.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "beltca/belt.hpp"
#include "beltca/error.hpp"
#include "beltca/pointy.hpp"

namespace beltca::cli {

SpacetimeDiagram build_spacetime(const GeneratorTable& table, const GroupWord& w, const PeriodicConfig& x) {
  require_same_alphabet(table.alphabet(), x.alphabet(), "spacetime");
  SpacetimeDiagram d{x.alphabet(), w.to_string(table), {}, {x.vec()}};
  for (const auto& st : w.steps()) {
    const auto& g = table[st.generator];
    d.rows.push_back(st.exponent > 0 ? g.forward(d.rows.back()) : g.backward(d.rows.back()));
    d.steps.push_back(g.name + (st.exponent > 0 || g.involution ? "" : "^-1"));
  }
  return d;
}

DiagramFormat parse_diagram_format(const std::string& name) {
  if (name == "text") return DiagramFormat::Text;
  if (name == "svg") return DiagramFormat::Svg;
  if (name == "tikz") return DiagramFormat::Tikz;
  throw ParseError("unknown format '" + name + "' (expected text, svg or tikz)");
}

namespace {

const char* const kPalette[] = {"E6194B", "3CB44B", "4363D8", "F58231", "911EB4", "42D4F4", "F032E6", "9A6324"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

bool numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// One box of a cell column: a coloured value, or a glyph.
struct Box {
  std::size_t track = 0;
  double shade = 0;  ///< 0 = white, 1 = full hue
  std::string glyph;
};

class CellModel {
 public:
  explicit CellModel(const AlphabetRef& a) : alpha_(a) {
    if (a->description().rfind("belt(", 0) == 0) belt_.emplace(BeltAlphabet::from_gamma(a));
    const AlphabetRef& base = belt_ ? belt_->base() : alpha_;
    for (std::size_t t = 0; t < atomic_tracks(*base); ++t) tracks_.push_back(base->has_tracks() ? base->track(t) : base);
    height_ = belt_ ? 2 * tracks_.size() : tracks_.size();
  }

  std::size_t height() const { return height_; }

  /// Boxes top to bottom; a wall is a single glyph box spanning the column.
  std::vector<Box> boxes(Symbol s) const {
    std::vector<Box> out;
    if (belt_) {
      if (!belt_->is_pair(s)) return {Box{0, 0, s == belt_->left_wall() ? ">" : "<"}};
      append(belt_->top(s), 0, out);
      append(belt_->bottom(s), tracks_.size(), out);
      return out;
    }
    append(s, 0, out);
    return out;
  }

 private:
  void append(Symbol s, std::size_t track_offset, std::vector<Box>& out) const {
    const AlphabetRef& base = belt_ ? belt_->base() : alpha_;
    for (std::size_t t = 0; t < tracks_.size(); ++t) {
      const Symbol v = base->has_tracks() ? base->track_value(s, t) : s;
      const auto& a = tracks_[t];
      const std::string& label = a->label(v);
      Box b{track_offset + t, 0, {}};
      if (v != a->zero()) b.shade = numeric(label) ? 0.35 + 0.65 * double(v) / double(a->size() - 1) : 0.0;
      if (!numeric(label)) b.glyph = label;
      out.push_back(b);
    }
  }

  AlphabetRef alpha_;
  std::optional<BeltAlphabet> belt_;
  std::vector<AlphabetRef> tracks_;
  std::size_t height_ = 1;
};

std::string hue(const Box& b, std::size_t tracks_per_side) {
  return kPalette[(b.track % std::max<std::size_t>(1, tracks_per_side)) % kPaletteSize];
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "$<$"; break;
      case '>': out += "$>$"; break;
      case '|': out += "$|$"; break;
      case '#': case '_': case '%': case '&': case '{': case '}': case '$':
        out += '\\';
        out += c;
        break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_text(const SpacetimeDiagram& d) {
  std::size_t width = 1;
  for (const auto& row : d.rows)
    for (Symbol s : row) width = std::max(width, d.alphabet->label(s).size());
  std::ostringstream out;
  out << "# word: " << (d.word.empty() ? "(empty)" : d.word) << "\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    std::string step = r == 0 ? "-" : d.steps[r - 1];
    out << r << '\t' << step << '\t';
    for (std::size_t i = 0; i < d.rows[r].size(); ++i) {
      const std::string& l = d.alphabet->label(d.rows[r][i]);
      if (i) out << ' ';
      out << l << std::string(width - l.size(), ' ');
    }
    out << "\n";
  }
  std::string s = out.str();
  // Trailing spaces from padding the last column.
  std::string trimmed;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

constexpr double kCell = 14, kBox = 8, kGap = 4, kMargin = 70;

std::string render_svg(const SpacetimeDiagram& d) {
  const CellModel m(d.alphabet);
  const std::size_t n = d.rows.front().size();
  const double row_h = m.height() * kBox + kGap;
  const double W = kMargin + n * kCell + 10, H = d.rows.size() * row_h + 30;
  const std::size_t per_side = m.height() > 1 && d.alphabet->description().rfind("belt(", 0) == 0 ? m.height() / 2
                                                                                                     : m.height();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(W) << "\" height=\"" << fixed(H)
      << "\" font-family=\"monospace\" font-size=\"9\">\n";
  out << "<title>" << xml_escape(d.word.empty() ? "(empty word)" : d.word) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const double y0 = 20 + r * row_h;
    out << "<text x=\"4\" y=\"" << fixed(y0 + m.height() * kBox / 2 + 3) << "\">"
        << xml_escape(std::to_string(r) + " " + (r == 0 ? std::string("-") : d.steps[r - 1])) << "</text>\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double x0 = kMargin + i * kCell;
      const auto boxes = m.boxes(d.rows[r][i]);
      const double bh = boxes.size() == 1 ? m.height() * kBox : kBox;
      for (std::size_t b = 0; b < boxes.size(); ++b) {
        const Box& box = boxes[b];
        const double y = y0 + b * bh;
        out << "<rect x=\"" << fixed(x0) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(kCell) << "\" height=\""
            << fixed(bh) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" fill=\""
            << (box.shade > 0 ? "#" + hue(box, per_side) : std::string("white")) << "\"";
        if (box.shade > 0 && box.shade < 1) out << " fill-opacity=\"" << fixed(box.shade) << "\"";
        out << "/>\n";
        if (!box.glyph.empty())
          out << "<text x=\"" << fixed(x0 + kCell / 2) << "\" y=\"" << fixed(y + bh / 2 + 3)
              << "\" text-anchor=\"middle\">" << xml_escape(box.glyph) << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tikz(const SpacetimeDiagram& d) {
  const CellModel m(d.alphabet);
  const std::size_t n = d.rows.front().size();
  const std::size_t per_side = m.height() > 1 && d.alphabet->description().rfind("belt(", 0) == 0 ? m.height() / 2
                                                                                                     : m.height();
  // Units of 1 mm; y grows downwards via negation.
  const double cell = 3, box = 1.8, gap = 1, row_h = m.height() * box + gap;
  std::ostringstream out;
  out << "\\documentclass[tikz,border=2mm]{standalone}\n";
  for (std::size_t t = 0; t < std::min(per_side, kPaletteSize); ++t)
    out << "\\definecolor{track" << char('a' + t) << "}{HTML}{" << kPalette[t] << "}\n";
  out << "\\begin{document}\n\\begin{tikzpicture}[x=1mm,y=1mm,font=\\tiny]\n";
  out << "% " << tex_escape(d.word.empty() ? "(empty word)" : d.word) << "\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const double y0 = -(r * row_h);
    out << "\\node[anchor=east] at (-1," << fixed(y0 - m.height() * box / 2) << ") {"
        << tex_escape(std::to_string(r) + " " + (r == 0 ? std::string("-") : d.steps[r - 1])) << "};\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double x0 = i * cell;
      const auto boxes = m.boxes(d.rows[r][i]);
      const double bh = boxes.size() == 1 ? m.height() * box : box;
      for (std::size_t b = 0; b < boxes.size(); ++b) {
        const Box& bx = boxes[b];
        const double y = y0 - b * bh;
        const std::string fill =
            bx.shade > 0 ? std::string("track") + char('a' + (bx.track % per_side) % kPaletteSize) + "!" +
                               std::to_string(static_cast<int>(bx.shade * 100 + 0.5)) + "!white"
                         : "white";
        out << "\\filldraw[fill=" << fill << ",draw=black!25,line width=0.1pt] (" << fixed(x0) << "," << fixed(y)
            << ") rectangle (" << fixed(x0 + cell) << "," << fixed(y - bh) << ");\n";
        if (!bx.glyph.empty())
          out << "\\node at (" << fixed(x0 + cell / 2) << "," << fixed(y - bh / 2) << ") {" << tex_escape(bx.glyph)
              << "};\n";
      }
    }
  }
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

std::string render(const SpacetimeDiagram& d, DiagramFormat f) {
  switch (f) {
    case DiagramFormat::Text: return render_text(d);
    case DiagramFormat::Svg: return render_svg(d);
    case DiagramFormat::Tikz: return render_tikz(d);
  }
  return {};
}

}  // namespace beltca::cli
