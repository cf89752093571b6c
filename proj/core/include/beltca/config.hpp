#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "beltca/alphabet.hpp"

namespace beltca {

/// A tape of length n with cyclic geometry: an element of Σ^{Z_n}.
class PeriodicConfig {
 public:
  PeriodicConfig(AlphabetRef alphabet, std::vector<Symbol> cells);
  static PeriodicConfig zeros(AlphabetRef alphabet, std::size_t period);

  const AlphabetRef& alphabet() const { return alphabet_; }
  std::size_t period() const { return cells_.size(); }
  std::span<const Symbol> cells() const { return cells_; }
  const std::vector<Symbol>& vec() const { return cells_; }
  Symbol operator[](std::ptrdiff_t i) const;

  /// σ^k: result[i] = this[i + k].
  PeriodicConfig rotated(std::ptrdiff_t k) const;

  bool operator==(const PeriodicConfig& o) const { return cells_ == o.cells_ && same_alphabet(alphabet_, o.alphabet_); }

 private:
  AlphabetRef alphabet_;
  std::vector<Symbol> cells_;
};

/// A 0-finite point of Σ^Z. Canonical: the stored word is empty or starts and
/// ends with a nonzero symbol.
class FiniteConfig {
 public:
  FiniteConfig(AlphabetRef alphabet, long offset, std::vector<Symbol> word);
  static FiniteConfig zero(AlphabetRef alphabet) { return FiniteConfig(std::move(alphabet), 0, {}); }
  /// Single cell `s` at position `at`.
  static FiniteConfig point(AlphabetRef alphabet, Symbol s, long at = 0);

  const AlphabetRef& alphabet() const { return alphabet_; }
  long offset() const { return offset_; }
  long end() const { return offset_ + static_cast<long>(word_.size()); }
  std::span<const Symbol> word() const { return word_; }
  bool is_zero() const { return word_.empty(); }
  Symbol at(long i) const;

  /// Cells [from, from + n) as a tape of period n.
  PeriodicConfig window(long from, std::size_t n) const;

  bool operator==(const FiniteConfig& o) const {
    return offset_ == o.offset_ && word_ == o.word_ && same_alphabet(alphabet_, o.alphabet_);
  }

 private:
  AlphabetRef alphabet_;
  long offset_ = 0;
  std::vector<Symbol> word_;
};

}  // namespace beltca
