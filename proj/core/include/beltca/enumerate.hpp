#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "beltca/alphabet.hpp"

namespace beltca {

/// q^n, or nullopt past `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::size_t n, std::uint64_t cap = UINT64_MAX);

/// Visits every word of length n over {0..q-1} in lexicographic order.
/// The callback returns false to stop early; the function then returns false.
bool for_each_word(std::uint32_t q, std::size_t n, const std::function<bool(std::span<const Symbol>)>& visit);

/// True iff `w` is the lexicographically least of its rotations.
bool is_necklace(std::span<const Symbol> w);

/// Same as for_each_word restricted to necklace representatives.
bool for_each_necklace(std::uint32_t q, std::size_t n, const std::function<bool(std::span<const Symbol>)>& visit);

/// Base-q code of a word, leftmost cell most significant.
std::uint64_t word_code(std::span<const Symbol> w, std::uint32_t q);
void word_decode(std::uint64_t code, std::uint32_t q, std::span<Symbol> out);

std::vector<Symbol> random_word(std::uint32_t q, std::size_t n, std::mt19937_64& rng);

}  // namespace beltca
