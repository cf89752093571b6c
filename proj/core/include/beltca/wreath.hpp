#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beltca/afo.hpp"
#include "beltca/belt.hpp"
#include "beltca/pointy.hpp"
#include "beltca/relations.hpp"

namespace beltca {

/// A = Z^free_rank × Z_m1 × Z_m2 × ...
struct BaseSignature {
  std::size_t free_rank = 0;
  std::vector<std::uint32_t> moduli;

  std::size_t factors() const { return free_rank + moduli.size(); }
  /// Modulus of factor j, 0 for a free factor (free factors come first).
  std::uint32_t modulus(std::size_t j) const;
  std::string description() const;
};

/// Σ_top × Z_m for m >= 2, or Σ_top × {0,1} (the marker track) for m = 0.
AlphabetRef base_factor_alphabet(const PointyAction& top, std::uint32_t m);

struct BaseGenerator {
  std::string name;
  AfoSpec afo;  ///< over base_factor_alphabet(top, m)
  EmbeddedAutomorphism embedded;
};

/// Adds `increment` to the value track at the first cell of u when the top
/// track is exactly a rotation of u0^{n-|u|}.
BaseGenerator build_finite_base_generator(const PointyAction& top, std::uint32_t m, std::uint32_t increment,
                                          bool doubling = false);
/// Shifts the orbit of (u, 10^{n-1}) by one cell.
BaseGenerator build_free_base_generator(const PointyAction& top, bool doubling = false);

struct WreathFactor {
  std::uint32_t modulus = 0;
  AlphabetRef sigma;  ///< Σ_top × T
  BeltAlphabet belt;
  std::vector<EmbeddedAutomorphism> top;  ///< lifted, belt-embedded top generators
  BaseGenerator base;
};

/// A ≀_{x0} H as a generator table. Each base factor gets its own belt
/// alphabet Γ_j over Σ_top × T_j; the table's alphabet is Γ_1 (one factor) or
/// the product of the Γ_j. Top generators act on every factor, base generator
/// j only on factor j.
class WreathSpec {
 public:
  WreathSpec(PointyAction top, BaseSignature base, bool doubling = false);

  const PointyAction& top() const { return top_; }
  const BaseSignature& base() const { return base_; }
  const AlphabetRef& alphabet() const { return table_.alphabet(); }
  const std::vector<WreathFactor>& factors() const { return factors_; }
  /// Top generators first (in the order of top().generators), then one per base factor.
  const GeneratorTable& table() const { return table_; }
  std::size_t top_generator_count() const { return top_.generators.size(); }

 private:
  PointyAction top_;
  BaseSignature base_;
  std::vector<WreathFactor> factors_;
  GeneratorTable table_;
};

/// Z ≀ (Z_2 ≀ Z): generators L, R, F, U, D over Γ = belt(({0,1}^3)), tracks
/// (position, lamp, marker).
struct ExampleZZ2Z {
  WreathSpec spec;
  GeneratorTable table;
  BeltAlphabet belt() const { return spec.factors().front().belt; }
  static constexpr std::size_t kMarkerTrack = 2;
};
ExampleZZ2Z assemble_example_zz2z();

/// Top-lamplighter element of a word over {L, R, F, U, D}, as text; U and D are ignored.
std::string zz2z_top_normal_form(const GeneratorTable& table, const GroupWord& w);

/// F^2, LR, UD, [F, F^(L^k)], [U, U^w] for top words w of length <= max_top_len,
/// and U^w1 = U^w2 for distinct top words of length <= transport_len equal in
/// the top lamplighter.
Presentation zz2z_presentation(const GeneratorTable& table, std::size_t max_top_len = 3,
                               std::size_t transport_len = 4, std::size_t max_transport = 8);

/// Top words over {L, R, F} without LR, RL or FF, of length 1..max_len.
std::vector<GroupWord> zz2z_top_words(const GeneratorTable& table, std::size_t max_len);

/// Belt position of the unique cell whose atomic base track `track` is
/// nonzero, on the belt read from a run; nullopt unless exactly one.
std::optional<std::size_t> belt_track_position(const BeltAlphabet& belt, std::span<const Symbol> run,
                                               std::size_t track);
/// Displacement of that cell between two readings of the same run, in (-L, L].
std::optional<long> belt_track_displacement(const BeltAlphabet& belt, std::span<const Symbol> before,
                                            std::span<const Symbol> after, std::size_t track);

/// What a word does to one good run of a Γ tape over the example's alphabet.
struct RunEffect {
  GoodRun run;
  std::optional<long> marker_shift;  ///< marker-cell displacement on the belt, if a single marker
  bool top_only = false;             ///< the run ends up as under the word with U and D deleted
  bool marker_fixed = false;         ///< no cell's marker track changed
};
std::vector<RunEffect> zz2z_run_effects(const ExampleZZ2Z& ex, const PeriodicConfig& x, const GroupWord& w);

}  // namespace beltca
