#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/word.hpp"

namespace beltca {

enum class PointyKind { Pointy, WeaklyPointy };

struct PointyAction {
  std::string name;
  AlphabetRef alphabet;
  std::vector<Automorphism> generators;  ///< all zero-fixing
  std::vector<bool> involutions;         ///< parallel to generators
  FiniteConfig special_point = FiniteConfig::zero(Alphabet::plain(2));  ///< x0 = ...0 u 0...
  PointyKind kind = PointyKind::Pointy;

  GeneratorTable table() const;
  /// The canonical core u of x0.
  std::vector<Symbol> core() const;
};

/// Number of atomic tracks (1 for an alphabet without track structure).
std::size_t atomic_tracks(const Alphabet& a);

/// Lifts f (over the sub-product of tracks [first, first+count) of `target`)
/// to `target`, leaving the other tracks alone.
Automorphism lift_to_tracks(const Automorphism& f, const AlphabetRef& target, std::size_t first, std::size_t count);

/// Tracks (position {0,1}, one lamp track per modulus). T shifts the position
/// track; F (or F1, F2, ... for several moduli) adds the position bit to a lamp
/// track at every cell.
PointyAction lamplighter_action(const std::vector<std::uint32_t>& moduli);
/// p on the first tracks, q on the following ones; x0 is the pair of special points.
/// Generators of q whose names clash with p's get a trailing prime.
PointyAction product_action(const PointyAction& p, const PointyAction& q);
/// Single track, generator S = σ, x0 = a single nonzero symbol.
PointyAction shift_action(const AlphabetRef& alphabet);
/// No generators.
PointyAction trivial_action(const AlphabetRef& alphabet, FiniteConfig x0);

/// Cellwise permutation of the atomic tracks: output track perm[t] receives
/// input track t. All permuted tracks must share one alphabet.
Automorphism track_swap(const AlphabetRef& alphabet, const std::vector<std::size_t>& perm);

/// Abstract normal form of a word in the lamplighter group of `moduli`
/// (generator order as in lamplighter_action).
std::string lamplighter_normal_form(const std::vector<std::uint32_t>& moduli, const GroupWord& w);

struct OrbitMismatch {
  std::string a, b;  ///< the two words, as text
};

struct FreeOrbitReport {
  std::size_t words = 0;
  std::size_t image_classes = 0;
  std::size_t element_classes = 0;
  std::vector<OrbitMismatch> unexpected_collisions;   ///< same image, different elements
  std::vector<OrbitMismatch> unexpected_separations;  ///< same element, different images
  bool passed() const { return unexpected_collisions.empty() && unexpected_separations.empty(); }
};

/// Images of x0 under every freely reduced word of length <= ball_radius,
/// compared against the caller's normal form for the target group.
FreeOrbitReport free_orbit_check(const PointyAction& p, std::size_t ball_radius,
                                 const std::function<std::string(const GroupWord&)>& normal_form);

struct WeakPointyViolation {
  std::string word;
  std::size_t n = 0;
};

struct WeakPointyReport {
  std::size_t words = 0;
  std::size_t stabilizing = 0;
  std::vector<WeakPointyViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Every word w of length <= ball_radius fixing x0 must fix u0^{n-|u|} for n in [n_min, n_max].
WeakPointyReport weak_pointy_check(const PointyAction& p, std::size_t ball_radius, std::size_t n_min, std::size_t n_max);

FiniteConfig apply_word(const std::vector<Automorphism>& gens, const GroupWord& w, const FiniteConfig& x);

}  // namespace beltca
