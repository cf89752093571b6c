#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/word.hpp"

namespace beltca {

using Word = std::vector<Symbol>;

/// Two placements that produce the same tape.
struct SafetyCollision {
  std::size_t period = 0;
  std::size_t word_a = 0, start_a = 0;
  std::size_t word_b = 0, start_b = 0;
  std::vector<Symbol> tape;
};

struct SafetyResult {
  bool safe = false;
  std::optional<SafetyCollision> collision;
};

/// Checks that for every n in [n0, max(n0, 2*maxlen-1)] all cyclic placements
/// of the words on a zero tape of length n are pairwise distinct.
/// Throws std::invalid_argument on malformed words (empty, zero-bordered,
/// duplicate, longer than n0).
SafetyResult check_safety(const Alphabet& alphabet, const std::vector<Word>& words, std::size_t n0);

/// Smallest n0 >= maxlen for which the words are safe (always <= 2*maxlen-1).
std::size_t minimal_safe_threshold(const Alphabet& alphabet, const std::vector<Word>& words);

class SafeWordSet {
 public:
  /// Validates safety; throws std::invalid_argument with the collision otherwise.
  SafeWordSet(AlphabetRef alphabet, std::vector<Word> words, std::size_t threshold);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t threshold() const { return threshold_; }
  std::size_t max_length() const;

 private:
  AlphabetRef alphabet_;
  std::vector<Word> words_;
  std::size_t threshold_;
};

/// u_i placed so that its first cell sits at `start`.
struct Placement {
  std::size_t word = 0;
  std::size_t start = 0;
};

/// The unique placement forming the whole tape, if any (tape length >= threshold).
std::optional<Placement> find_placement(const SafeWordSet& set, std::span<const Symbol> tape);

/// Action on finitely many orbits. Word i placed at start p is replaced by
/// word pi[i] placed at start p + offsets[i] (mod n); every other tape, and
/// every tape shorter than the threshold, is fixed.
class AfoSpec {
 public:
  AfoSpec(SafeWordSet safe, std::vector<std::size_t> pi, std::vector<long> offsets, std::string name = "afo");

  const SafeWordSet& safe() const { return safe_; }
  const AlphabetRef& alphabet() const { return safe_.alphabet(); }
  const std::vector<std::size_t>& pi() const { return pi_; }
  const std::vector<long>& offsets() const { return offsets_; }
  const std::string& name() const { return name_; }
  std::size_t word_count() const { return pi_.size(); }
  long max_abs_offset() const;

  void apply(std::span<const Symbol> in, std::span<Symbol> out) const;

 private:
  SafeWordSet safe_;
  std::vector<std::size_t> pi_;
  std::vector<long> offsets_;
  std::string name_;
};

PeriodicConfig apply_afo(const AfoSpec& afo, const PeriodicConfig& x);
AfoSpec afo_inverse(const AfoSpec& afo);
/// |{x in Σ^{Z_n} : afo(x) != x}|, by enumerating the k*n designated tapes.
std::uint64_t moved_count(const AfoSpec& afo, std::size_t n);

/// Words with zeros interleaved (u_1 0 u_2 0 ... u_m), threshold and offsets doubled.
AfoSpec doubled(const AfoSpec& afo);

/// 1-based cycle notation such as "(1 2)(3 4)" or "()" -> 0-based image vector.
std::vector<std::size_t> parse_cycle_notation(std::string_view text, std::size_t k);
std::string format_cycle_notation(const std::vector<std::size_t>& pi);

Generator as_generator(const AfoSpec& afo);

using ProductFactor = std::variant<Automorphism, AfoSpec>;

struct RetractionCount {
  std::uint64_t differing = 0;   ///< tapes where product and AFO-free product disagree
  std::uint64_t total = 0;       ///< |Σ|^n
  std::uint64_t moved_bound = 0; ///< sum of moved_count over AFO factors
  std::uint64_t kn_bound = 0;    ///< sum of k_i * n over AFO factors
};

/// Compares the product (rightmost factor first) with the product with all
/// AFO factors deleted, on every tape of length n.
RetractionCount retraction_count(const std::vector<ProductFactor>& factors, std::size_t n);

}  // namespace beltca
