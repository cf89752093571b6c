#include "beltca/enumerate.hpp"

namespace beltca {

std::optional<std::uint64_t> checked_power(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && v > cap / q) return std::nullopt;
    v *= q;
  }
  if (v > cap) return std::nullopt;
  return v;
}

bool for_each_word(std::uint32_t q, std::size_t n, const std::function<bool(std::span<const Symbol>)>& visit) {
  std::vector<Symbol> w(n, 0);
  while (true) {
    if (!visit(w)) return false;
    std::size_t i = n;
    while (true) {
      if (i == 0) return true;
      --i;
      if (++w[i] < q) break;
      w[i] = 0;
    }
  }
}

bool is_necklace(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      Symbol a = w[(r + i) % n], b = w[i];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

bool for_each_necklace(std::uint32_t q, std::size_t n, const std::function<bool(std::span<const Symbol>)>& visit) {
  return for_each_word(q, n, [&](std::span<const Symbol> w) { return !is_necklace(w) || visit(w); });
}

std::uint64_t word_code(std::span<const Symbol> w, std::uint32_t q) {
  std::uint64_t c = 0;
  for (Symbol s : w) c = c * q + s;
  return c;
}

void word_decode(std::uint64_t code, std::uint32_t q, std::span<Symbol> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(code % q);
    code /= q;
  }
}

std::vector<Symbol> random_word(std::uint32_t q, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Symbol> d(0, q - 1);
  std::vector<Symbol> w(n);
  for (auto& s : w) s = d(rng);
  return w;
}

}  // namespace beltca
