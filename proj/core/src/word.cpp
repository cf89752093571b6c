#include "beltca/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace beltca {

Generator as_generator(const Automorphism& a, bool involution) {
  auto f = a.forward();
  auto b = a.backward();
  return Generator{
      a.name(), a.alphabet(),
      [f](std::span<const Symbol> x) {
        std::vector<Symbol> y(x.size());
        f.apply_cyclic(x, y);
        return y;
      },
      [b](std::span<const Symbol> x) {
        std::vector<Symbol> y(x.size());
        b.apply_cyclic(x, y);
        return y;
      },
      involution};
}

void GeneratorTable::add(Generator g) {
  if (g.name.empty()) throw std::invalid_argument("generator needs a name");
  require_same_alphabet(alphabet_, g.alphabet, "GeneratorTable::add");
  if (find(g.name)) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  gens_.push_back(std::move(g));
}

std::optional<std::size_t> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> GeneratorTable::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent == 0) throw std::invalid_argument("zero exponent in group word");
}

std::size_t GroupWord::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(out));
}

GroupWord GroupWord::pow(int e) const {
  GroupWord base = e < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

std::vector<Letter> GroupWord::steps() const {
  std::vector<Letter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    for (int i = 0; i < std::abs(it->exponent); ++i) out.push_back({it->generator, it->exponent > 0 ? 1 : -1});
  return out;
}

std::string GroupWord::to_string(const GeneratorTable& table) const {
  // Adjacent letters of one generator with the same sign are shown as one power.
  std::vector<Letter> merged;
  for (const auto& l : letters_) {
    if (!merged.empty() && merged.back().generator == l.generator && !table[l.generator].involution &&
        (merged.back().exponent > 0) == (l.exponent > 0))
      merged.back().exponent += l.exponent;
    else
      merged.push_back(l);
  }
  std::string s;
  for (const auto& l : merged) {
    const std::string& n = table[l.generator].name;
    if (!s.empty() && (n.size() > 1 || s.back() == ')' || std::isdigit(static_cast<unsigned char>(s.back()))))
      s += ' ';
    s += n;
    const int e = table[l.generator].involution && l.exponent == -1 ? 1 : l.exponent;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

GroupWord conjugate(const GroupWord& x, const GroupWord& y) { return y.inverse() * x * y; }

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return x.inverse() * y.inverse() * x * y; }

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  const GeneratorTable& table;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word parse error at offset " + std::to_string(pos) + ": " + what);
  }

  bool starts(std::string_view t) const { return s.substr(pos, t.size()) == t; }

  void skip_separators() {
    while (pos < s.size()) {
      if (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '*') ++pos;
      else if (starts("\xC2\xB7")) pos += 2;
      else break;
    }
  }

  // Superscript digit value, advancing on success.
  std::optional<int> superscript_digit() {
    static const std::pair<std::string_view, int> table[] = {
        {"\xE2\x81\xB0", 0}, {"\xC2\xB9", 1},     {"\xC2\xB2", 2},     {"\xC2\xB3", 3},     {"\xE2\x81\xB4", 4},
        {"\xE2\x81\xB5", 5}, {"\xE2\x81\xB6", 6}, {"\xE2\x81\xB7", 7}, {"\xE2\x81\xB8", 8}, {"\xE2\x81\xB9", 9}};
    for (auto [t, v] : table)
      if (starts(t)) {
        pos += t.size();
        return v;
      }
    return std::nullopt;
  }

  int power() {
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent digits");
      long v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos++] - '0');
        if (v > 1'000'000) fail("exponent too large");
      }
      if (v == 0) fail("zero exponent");
      return static_cast<int>(neg ? -v : v);
    }
    bool neg = false;
    if (starts("\xE2\x81\xBB")) {
      neg = true;
      pos += 3;
    }
    auto d = superscript_digit();
    if (!d) {
      if (neg) fail("expected superscript digits");
      return 1;
    }
    long v = *d;
    while (auto e = superscript_digit()) {
      v = v * 10 + *e;
      if (v > 1'000'000) fail("exponent too large");
    }
    if (v == 0) fail("zero exponent");
    return static_cast<int>(neg ? -v : v);
  }

  GroupWord word(bool nested) {
    GroupWord out;
    while (true) {
      skip_separators();
      if (pos >= s.size()) {
        if (nested) fail("missing ')'");
        return out;
      }
      if (s[pos] == ')') {
        if (!nested) fail("unbalanced ')'");
        return out;
      }
      if (s[pos] == '(') {
        ++pos;
        GroupWord inner = word(true);
        ++pos;  // ')'
        out = out * inner.pow(power());
        continue;
      }
      std::size_t best = 0, best_len = 0;
      for (std::size_t g = 0; g < table.size(); ++g) {
        const auto& n = table[g].name;
        if (n.size() > best_len && starts(n)) {
          best = g;
          best_len = n.size();
        }
      }
      if (best_len == 0) {
        std::size_t end = pos;
        while (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) ++end;
        fail("unknown generator '" + std::string(s.substr(pos, std::max<std::size_t>(1, end - pos))) + "'");
      }
      pos += best_len;
      out = out * GroupWord({Letter{best, power()}});
    }
  }
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text, const GeneratorTable& table) {
  Parser p{text, 0, table};
  return p.word(false);
}

std::vector<Symbol> apply_word(const GeneratorTable& table, const GroupWord& w, std::span<const Symbol> x) {
  std::vector<Symbol> cur(x.begin(), x.end());
  for (const auto& st : w.steps()) {
    const auto& g = table[st.generator];
    cur = st.exponent > 0 ? g.forward(cur) : g.backward(cur);
  }
  return cur;
}

PeriodicConfig apply_word(const GeneratorTable& table, const GroupWord& w, const PeriodicConfig& x) {
  require_same_alphabet(table.alphabet(), x.alphabet(), "apply_word");
  return PeriodicConfig(x.alphabet(), apply_word(table, w, x.cells()));
}

std::vector<GroupWord> reduced_words(const GeneratorTable& table, std::size_t max_len) {
  std::vector<Letter> alphabet;
  for (std::size_t g = 0; g < table.size(); ++g) {
    alphabet.push_back({g, 1});
    if (!table[g].involution) alphabet.push_back({g, -1});
  }
  std::vector<GroupWord> out{GroupWord()};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& l : alphabet) {
        const auto& prev = out[i].letters();
        if (!prev.empty()) {
          const auto& last = prev.back();
          if (last.generator == l.generator && (table[l.generator].involution || last.exponent == -l.exponent))
            continue;
        }
        std::vector<Letter> next = prev;
        next.push_back(l);
        out.emplace_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace beltca
