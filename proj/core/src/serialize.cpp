#include "beltca/serialize.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "beltca/belt.hpp"
#include "beltca/error.hpp"

namespace beltca {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Split on top-level commas.
std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  s = trim(s);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<Symbol> parse_cells(std::string_view text, const AlphabetRef& a) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw ParseError("cells must be written [c0,c1,...]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Symbol> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      auto tok = trim(text.substr(start, i - start));
      auto s = a->find(tok);
      if (!s) throw ParseError("unknown symbol '" + std::string(tok) + "'");
      out.push_back(*s);
      start = i + 1;
    }
  }
  return out;
}

std::string format_cells(const AlphabetRef& a, std::span<const Symbol> cells) {
  std::string s = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += a->label(cells[i]);
  }
  return s + "]";
}

// key=value fields; values may contain brackets with spaces.
std::vector<std::pair<std::string_view, std::string_view>> fields(std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  text = trim(text);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t eq = text.find('=', i);
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(text) + "'");
    auto key = trim(text.substr(i, eq - i));
    std::size_t j = eq + 1;
    if (j < text.size() && text[j] == '[') {
      std::size_t close = text.find(']', j);
      if (close == std::string_view::npos) throw ParseError("missing ']'");
      j = close + 1;
    } else {
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    }
    out.emplace_back(key, text.substr(eq + 1, j - eq - 1));
    i = j;
  }
  return out;
}

}  // namespace

AlphabetRef parse_alphabet(std::string_view text) {
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') throw ParseError("bad alphabet '" + std::string(text) + "'");
  auto head = trim(text.substr(0, open));
  auto body = text.substr(open + 1, text.size() - open - 2);
  std::string_view zero_part;
  if (head == "plain" || head == "labels") {
    auto semi = body.find(';');
    if (semi != std::string_view::npos) {
      zero_part = trim(body.substr(semi + 1));
      body = body.substr(0, semi);
      if (zero_part.substr(0, 5) != "zero=") throw ParseError("expected zero=... in alphabet");
      zero_part.remove_prefix(5);
    }
  }
  if (head == "plain") {
    long n = parse_long(body, "plain alphabet size");
    if (n < 2 || n > (1 << 24)) throw ParseError("plain alphabet size out of range");
    long z = zero_part.empty() ? 0 : parse_long(zero_part, "zero");
    if (z < 0 || z >= n) throw ParseError("zero out of range");
    return Alphabet::plain(static_cast<std::uint32_t>(n), static_cast<Symbol>(z));
  }
  if (head == "labels") {
    std::vector<std::string> labels;
    for (auto a : split_args(body)) labels.emplace_back(a);
    Symbol z = 0;
    if (!zero_part.empty()) {
      bool found = false;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == zero_part) {
          z = static_cast<Symbol>(i);
          found = true;
        }
      if (!found) throw ParseError("zero label not in alphabet");
    }
    try {
      return Alphabet::labelled(std::move(labels), z);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (head == "product") {
    std::vector<AlphabetRef> factors;
    for (auto a : split_args(body)) factors.push_back(parse_alphabet(a));
    return Alphabet::product(factors);
  }
  if (head == "belt") return BeltAlphabet(parse_alphabet(body)).gamma();
  throw ParseError("unknown alphabet kind '" + std::string(head) + "'");
}

std::string format_periodic(const PeriodicConfig& x) {
  return "period=" + std::to_string(x.period()) + " cells=" + format_cells(x.alphabet(), x.cells());
}

PeriodicConfig parse_periodic(std::string_view text, const AlphabetRef& alphabet) {
  long period = -1;
  std::optional<std::vector<Symbol>> cells;
  for (auto [k, v] : fields(text)) {
    if (k == "period") period = parse_long(v, "period");
    else if (k == "cells") cells = parse_cells(v, alphabet);
    else throw ParseError("unknown field '" + std::string(k) + "' in periodic configuration");
  }
  if (!cells) throw ParseError("periodic configuration needs cells=[...]");
  if (cells->empty()) throw ParseError("periodic configuration needs at least one cell");
  if (period >= 0 && static_cast<std::size_t>(period) != cells->size())
    throw ParseError("period=" + std::to_string(period) + " but " + std::to_string(cells->size()) + " cells given");
  return PeriodicConfig(alphabet, std::move(*cells));
}

std::string format_finite(const FiniteConfig& x) {
  return "offset=" + std::to_string(x.offset()) + " word=" + format_cells(x.alphabet(), x.word());
}

FiniteConfig parse_finite(std::string_view text, const AlphabetRef& alphabet) {
  long offset = 0;
  std::optional<std::vector<Symbol>> word;
  for (auto [k, v] : fields(text)) {
    if (k == "offset") offset = parse_long(v, "offset");
    else if (k == "word") word = parse_cells(v, alphabet);
    else throw ParseError("unknown field '" + std::string(k) + "' in finite configuration");
  }
  if (!word) throw ParseError("finite configuration needs word=[...]");
  return FiniteConfig(alphabet, offset, std::move(*word));
}

}  // namespace beltca
