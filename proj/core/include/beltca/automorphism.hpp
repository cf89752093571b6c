#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beltca/block_code.hpp"

namespace beltca {

/// A sliding block code paired with its inverse.
class Automorphism {
 public:
  /// `fixes_zero` is an assertion; it is checked against the forward rule.
  Automorphism(std::string name, SlidingBlockCode forward, SlidingBlockCode backward, bool fixes_zero = true);

  static Automorphism identity(AlphabetRef alphabet);
  /// σ^k and σ^{-k}.
  static Automorphism shift(AlphabetRef alphabet, int k = 1);

  const std::string& name() const { return name_; }
  const AlphabetRef& alphabet() const { return forward_.alphabet(); }
  const SlidingBlockCode& forward() const { return forward_; }
  const SlidingBlockCode& backward() const { return backward_; }
  bool fixes_zero() const { return fixes_zero_; }
  int radius() const;

  Automorphism inverse() const;
  Automorphism renamed(std::string name) const;

  PeriodicConfig apply(const PeriodicConfig& x) const { return forward_.apply(x); }
  FiniteConfig apply(const FiniteConfig& x) const { return forward_.apply(x); }
  PeriodicConfig apply_inverse(const PeriodicConfig& x) const { return backward_.apply(x); }
  FiniteConfig apply_inverse(const FiniteConfig& x) const { return backward_.apply(x); }

 private:
  std::string name_;
  SlidingBlockCode forward_;
  SlidingBlockCode backward_;
  bool fixes_zero_;
};

/// a∘b (b first).
Automorphism compose(const Automorphism& a, const Automorphism& b);

struct CheckEntry {
  std::string check;
  bool passed = false;
  std::string detail;  ///< witness or counts
};

struct VerificationReport {
  std::vector<CheckEntry> entries;
  bool passed() const;
  void add(std::string check, bool ok, std::string detail = {});
};

struct VerifyOptions {
  std::uint64_t window_budget = kDefaultWindowBudget;
  std::size_t max_period = 8;            ///< exhaustive periodic fallback bound P
  std::uint64_t exhaustive_budget = 2'000'000;  ///< configs per period before sampling instead
  std::size_t random_samples = 1000;
  std::size_t max_random_period = 64;
  std::uint64_t seed = 1;
};

VerificationReport verify_automorphism(const Automorphism& a, const VerifyOptions& opt = {});

}  // namespace beltca
