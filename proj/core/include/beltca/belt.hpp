#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "beltca/afo.hpp"
#include "beltca/automorphism.hpp"
#include "beltca/word.hpp"

namespace beltca {

/// Γ = Σ×Σ ∪ {'>', '<'}. The pair (top, bottom) has index top*|Σ| + bottom;
/// '>' is |Σ|² and '<' is |Σ|²+1. Γ's zero is the pair (0,0).
class BeltAlphabet {
 public:
  explicit BeltAlphabet(AlphabetRef base);
  /// Recovers the base from a Γ alphabet built by this class.
  static BeltAlphabet from_gamma(const AlphabetRef& gamma);

  const AlphabetRef& base() const { return base_; }
  const AlphabetRef& gamma() const { return gamma_; }

  Symbol pair(Symbol top, Symbol bottom) const { return top * q_ + bottom; }
  Symbol left_wall() const { return q_ * q_; }
  Symbol right_wall() const { return q_ * q_ + 1; }
  Symbol zero_pair() const { return pair(base_->zero(), base_->zero()); }
  bool is_pair(Symbol s) const { return s < q_ * q_; }
  bool is_nonzero_pair(Symbol s) const { return is_pair(s) && s != zero_pair(); }
  Symbol top(Symbol s) const { return s / q_; }
  Symbol bottom(Symbol s) const { return s % q_; }

  /// Whether the length-2 word ab is good.
  bool good_pair(Symbol a, Symbol b) const;

 private:
  AlphabetRef base_;
  AlphabetRef gamma_;
  std::uint32_t q_;
};

enum class SymbolClass : std::uint8_t { Good, Wall, Error };
enum class Boundary : std::uint8_t { Wall, Error };

const char* to_string(SymbolClass c);
const char* to_string(Boundary b);

std::vector<SymbolClass> classify(const BeltAlphabet& belt, std::span<const Symbol> cells);
std::vector<SymbolClass> classify(const BeltAlphabet& belt, const PeriodicConfig& x);

/// A maximal good run >^prefix u <^suffix occupying cells start..start+length-1 (cyclic).
struct GoodRun {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t prefix = 0;
  std::size_t suffix = 0;
  Boundary left = Boundary::Wall;
  Boundary right = Boundary::Wall;
  std::size_t core_length() const { return length - prefix - suffix; }
};

enum class Degenerate : std::uint8_t { None, AllPairs, AllLeftWalls, AllRightWalls };

struct RunDecomposition {
  std::vector<GoodRun> runs;
  Degenerate degenerate = Degenerate::None;
};

RunDecomposition decompose(const BeltAlphabet& belt, std::span<const Symbol> cells);
RunDecomposition decompose(const BeltAlphabet& belt, const PeriodicConfig& x);

/// Fold of a run (walls read as zero pairs): s·reverse(t), period 2L.
std::vector<Symbol> belt_encode(const BeltAlphabet& belt, std::span<const Symbol> run);
PeriodicConfig belt_encode(const BeltAlphabet& belt, const PeriodicConfig& x, const GoodRun& run);
/// Inverse of the fold: pairs (s_i, t_i) from a belt of even length 2L.
std::vector<Symbol> belt_decode(const BeltAlphabet& belt, std::span<const Symbol> belt_tape);

/// Raised when an automorphism maps a nonzero simulated tape to zero.
class BeltDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One direction of an embedded map: the belt transformation plus the
/// run-rewriting machinery, with a global and a windowed evaluator.
class EmbeddedMap {
 public:
  EmbeddedMap(BeltAlphabet belt, Automorphism f, bool doubling);
  EmbeddedMap(BeltAlphabet belt, AfoSpec afo, bool doubling);

  const BeltAlphabet& belt() const { return belt_; }
  int radius() const { return radius_; }

  /// Global evaluator on a Γ tape.
  std::vector<Symbol> apply(std::span<const Symbol> cells) const;
  /// Windowed evaluator; `window` has 2*radius()+1 cells, centre in the middle.
  Symbol local(std::span<const Symbol> window) const;
  /// Rewrites a single good run with the given boundary kinds.
  std::vector<Symbol> transform_run(std::span<const Symbol> run, Boundary left, Boundary right) const;

  /// Overrides the windowed radius (used to probe smaller radii).
  EmbeddedMap with_radius(int r) const;

 private:
  // Applies the source to a belt; returns false when it leaves the belt unchanged.
  bool transform_belt(std::span<const Symbol> in, std::span<Symbol> out, bool walls_both_sides) const;

  BeltAlphabet belt_;
  std::variant<Automorphism, AfoSpec> source_;
  int dilation_ = 1;
  int radius_ = 2;
  std::size_t pad_ = 1;
};

class EmbeddedAutomorphism {
 public:
  EmbeddedAutomorphism(std::string name, EmbeddedMap forward, EmbeddedMap backward, bool doubling);

  const std::string& name() const { return name_; }
  const BeltAlphabet& belt() const { return forward_.belt(); }
  const AlphabetRef& alphabet() const { return forward_.belt().gamma(); }
  bool doubling() const { return doubling_; }
  int radius() const { return std::max(forward_.radius(), backward_.radius()); }
  const EmbeddedMap& forward() const { return forward_; }
  const EmbeddedMap& backward() const { return backward_; }

  PeriodicConfig apply(const PeriodicConfig& x) const;
  PeriodicConfig apply_inverse(const PeriodicConfig& x) const;
  PeriodicConfig apply_windowed(const PeriodicConfig& x) const;
  PeriodicConfig apply_inverse_windowed(const PeriodicConfig& x) const;

  SlidingBlockCode windowed() const;
  SlidingBlockCode windowed_inverse() const;
  /// Automorphism over Γ built from the windowed codes.
  Automorphism as_automorphism() const;
  /// Generator driven by the global evaluators.
  Generator as_generator(std::string name = {}) const;
  EmbeddedAutomorphism inverse() const;

 private:
  std::string name_;
  EmbeddedMap forward_, backward_;
  bool doubling_;
};

/// Requires f to fix zero.
EmbeddedAutomorphism embed_automorphism(const Automorphism& f, bool doubling = false);
EmbeddedAutomorphism embed_afo(const AfoSpec& afo, bool doubling = false);

/// Encodes x on the top track of a wall/wall run wide enough for f, applies
/// the embedding of f and compares with apply_finite(f, x).
bool simulate_check(const Automorphism& f, const FiniteConfig& x);

}  // namespace beltca
