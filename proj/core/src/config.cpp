#include "beltca/config.hpp"

#include <stdexcept>

namespace beltca {

PeriodicConfig::PeriodicConfig(AlphabetRef alphabet, std::vector<Symbol> cells)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (cells_.empty()) throw std::invalid_argument("period must be positive");
  for (Symbol s : cells_)
    if (!alphabet_->contains(s)) throw std::invalid_argument("cell symbol out of range");
}

PeriodicConfig PeriodicConfig::zeros(AlphabetRef alphabet, std::size_t period) {
  Symbol z = alphabet->zero();
  return PeriodicConfig(std::move(alphabet), std::vector<Symbol>(period, z));
}

Symbol PeriodicConfig::operator[](std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(cells_.size());
  return cells_[static_cast<std::size_t>(((i % n) + n) % n)];
}

PeriodicConfig PeriodicConfig::rotated(std::ptrdiff_t k) const {
  std::vector<Symbol> out(cells_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[static_cast<std::ptrdiff_t>(i) + k];
  return PeriodicConfig(alphabet_, std::move(out));
}

FiniteConfig::FiniteConfig(AlphabetRef alphabet, long offset, std::vector<Symbol> word)
    : alphabet_(std::move(alphabet)), offset_(offset) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  Symbol z = alphabet_->zero();
  std::size_t lo = 0, hi = word.size();
  while (lo < hi && word[lo] == z) ++lo;
  while (hi > lo && word[hi - 1] == z) --hi;
  for (std::size_t i = lo; i < hi; ++i) {
    if (!alphabet_->contains(word[i])) throw std::invalid_argument("cell symbol out of range");
    word_.push_back(word[i]);
  }
  offset_ = word_.empty() ? 0 : offset + static_cast<long>(lo);
}

FiniteConfig FiniteConfig::point(AlphabetRef alphabet, Symbol s, long at) {
  return FiniteConfig(std::move(alphabet), at, {s});
}

Symbol FiniteConfig::at(long i) const {
  if (i < offset_ || i >= end()) return alphabet_->zero();
  return word_[static_cast<std::size_t>(i - offset_)];
}

PeriodicConfig FiniteConfig::window(long from, std::size_t n) const {
  std::vector<Symbol> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = at(from + static_cast<long>(i));
  return PeriodicConfig(alphabet_, std::move(cells));
}

}  // namespace beltca
