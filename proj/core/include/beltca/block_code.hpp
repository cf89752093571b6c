#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "beltca/alphabet.hpp"
#include "beltca/config.hpp"

namespace beltca {

/// Neighbourhood [left, right] relative to the output cell.
struct Window {
  int left = 0;
  int right = 0;
  int size() const { return right - left + 1; }
  int radius() const;
};

/// Sliding block code over one alphabet. The rule is a pure procedure on
/// windows of size window().size(); from_table() and tabulate() give the
/// explicit-table form for small alphabets.
class SlidingBlockCode {
 public:
  using Rule = std::function<Symbol(std::span<const Symbol>)>;

  SlidingBlockCode(AlphabetRef alphabet, Window window, Rule rule);
  /// Table indexed by the window read as a base-|Σ| number, leftmost cell most significant.
  static SlidingBlockCode from_table(AlphabetRef alphabet, Window window, std::vector<Symbol> table);
  static SlidingBlockCode identity(AlphabetRef alphabet);
  /// σ^k with (σx)_i = x_{i+1}.
  static SlidingBlockCode shift(AlphabetRef alphabet, int k = 1);
  /// Radius-0 code applying `map` to every cell.
  static SlidingBlockCode cellwise(AlphabetRef alphabet, std::vector<Symbol> map);

  const AlphabetRef& alphabet() const { return alphabet_; }
  Window window() const { return window_; }
  int radius() const { return window_.radius(); }
  bool has_table() const { return table_ != nullptr; }

  Symbol local(std::span<const Symbol> w) const;

  /// out[i] = rule(in[i + d*l], ..., in[i + d*r]) read cyclically, d = dilation.
  void apply_cyclic(std::span<const Symbol> in, std::span<Symbol> out, int dilation = 1) const;
  PeriodicConfig apply(const PeriodicConfig& x) const;
  /// Requires maps_zero_to_zero().
  FiniteConfig apply(const FiniteConfig& x) const;

  bool maps_zero_to_zero() const;
  /// Same map, window widened to [l, r] (must contain the current one).
  SlidingBlockCode widened(Window w) const;
  std::optional<SlidingBlockCode> tabulate(std::uint64_t max_entries = 1u << 24) const;

 private:
  AlphabetRef alphabet_;
  Window window_;
  Rule rule_;
  std::shared_ptr<const std::vector<Symbol>> table_;
};

/// f∘g: window is the Minkowski sum of the two windows.
SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g);

enum class IdentityVerdict { Identity, NotIdentity, BudgetExceeded };

struct IdentityCheck {
  IdentityVerdict verdict = IdentityVerdict::BudgetExceeded;
  std::vector<Symbol> witness;  ///< a window whose image is not its centre cell
  std::uint64_t windows_checked = 0;
};

inline constexpr std::uint64_t kDefaultWindowBudget = 10'000'000;

/// Exact test: the code is the identity iff its rule projects to cell 0.
IdentityCheck is_identity(const SlidingBlockCode& code, std::uint64_t budget = kDefaultWindowBudget);

/// Number of windows, or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> window_count(const SlidingBlockCode& code, std::uint64_t cap);

}  // namespace beltca
