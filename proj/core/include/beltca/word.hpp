#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/error.hpp"

namespace beltca {

/// Whole-tape map on Σ^{Z_n}; must be defined for every n >= 1.
using TapeMap = std::function<std::vector<Symbol>(std::span<const Symbol>)>;

/// A named bijection of every Σ^{Z_n}, with its inverse.
struct Generator {
  std::string name;
  AlphabetRef alphabet;
  TapeMap forward;
  TapeMap backward;
  bool involution = false;  ///< forward == backward; used to skip F F^-1 style words
};

Generator as_generator(const Automorphism& a, bool involution = false);

class GeneratorTable {
 public:
  explicit GeneratorTable(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

  void add(Generator g);
  void add(const Automorphism& a, bool involution = false) { add(as_generator(a, involution)); }

  const AlphabetRef& alphabet() const { return alphabet_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  AlphabetRef alphabet_;
  std::vector<Generator> gens_;
};

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;
  bool operator==(const Letter&) const = default;
};

/// A product of generator powers, acting rightmost letter first.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  /// Grammar (whitespace, '*' and U+00B7 are separators):
  ///   word   := factor*
  ///   factor := (NAME | '(' word ')') power?
  ///   power  := '^' '-'? DIGITS | superscript digits with optional superscript minus
  /// NAME is matched longest-first against the table's generator names.
  static GroupWord parse(std::string_view text, const GeneratorTable& table);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Sum of |exponent|.
  std::size_t length() const;
  GroupWord inverse() const;
  /// this * other (other acts first).
  GroupWord operator*(const GroupWord& other) const;
  GroupWord pow(int e) const;
  /// Unit steps (generator, ±1) in application order: rightmost first.
  std::vector<Letter> steps() const;
  std::string to_string(const GeneratorTable& table) const;

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// x^y = y^-1 x y.
GroupWord conjugate(const GroupWord& x, const GroupWord& y);
/// [x, y] = x^-1 y^-1 x y.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

std::vector<Symbol> apply_word(const GeneratorTable& table, const GroupWord& w, std::span<const Symbol> x);
PeriodicConfig apply_word(const GeneratorTable& table, const GroupWord& w, const PeriodicConfig& x);

/// Freely reduced words of length <= max_len over all generators and their
/// inverses (involutions contribute one letter and never repeat).
std::vector<GroupWord> reduced_words(const GeneratorTable& table, std::size_t max_len);

}  // namespace beltca
