#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beltca/heads.hpp"
#include "beltca/perm.hpp"
#include "beltca/relations.hpp"
#include "beltca/word.hpp"

namespace beltca {

/// ({>,<,1,2})^k; track 0 is the first track. For k = 1 this is head::alphabet().
AlphabetRef khat_alphabet(std::size_t k);

/// g_i (1 <= i <= k): on each composite run, if tracks 1..i all carry heads at
/// equal belt positions, advance each of them by 2 (mod 2*runlen).
RunwiseAutomorphism khat_generator(std::size_t k, std::size_t i);
/// g1..gk, global evaluators.
GeneratorTable khat_table(std::size_t k);

/// Track t of every cell.
std::vector<Symbol> khat_track(std::span<const Symbol> cells, std::size_t k, std::size_t t);

// Abstract K_k^n on (Z/nZ)^k. A point is indexed by sum c_t n^t (coordinate 1 least significant).
std::uint32_t k_point_index(std::size_t n, std::span<const long> coords);
std::vector<long> k_point_coords(std::size_t k, std::size_t n, std::uint32_t index);
Permutation k_abstract_generator(std::size_t k, std::size_t n, std::size_t i);
/// Word over g1..gk (generator index i-1), rightmost letter first; n >= 1.
Permutation k_abstract_action(std::size_t k, std::size_t n, const GroupWord& w);
/// Pointwise action; n = 0 means Z (no reduction).
std::vector<long> k_abstract_apply(std::size_t k, std::size_t n, const GroupWord& w, std::vector<long> point);

/// Every composite-run content of length L: per track a head at belt
/// position p (index p) or a headless segment of '>' (index 2L) or '<' (2L+1).
/// Segment index = sum option_t (2L+2)^t.
struct SegmentSpace {
  std::size_t k = 0, L = 0;
  std::size_t size() const;
  std::vector<Symbol> cells(std::size_t index) const;
  std::size_t index_of(std::span<const Symbol> cells) const;
};

/// Permutations induced by g1..gk on SegmentSpace{k, L}, read off the global
/// evaluator on period-L single-run tapes.
std::vector<Permutation> khat_segment_action(std::size_t k, std::size_t L);

struct ConjugacyReport {
  std::size_t runs_checked = 0;      ///< same-parity segments with all heads
  std::size_t quotient_checked = 0;  ///< segments with a parity defect or missing head
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Intertwining of g_i with the abstract K action (and with the quotients
/// K_{l-1} for segments whose first defect is on track l), run lengths in [n_min, n_max].
ConjugacyReport conjugacy_check(std::size_t k, std::size_t n_min, std::size_t n_max);

struct TorsionReport {
  std::size_t n = 0;
  std::string word;                    ///< w as text
  bool nontrivial_at_n = false;
  std::vector<long> moved_point;       ///< in (Z/nZ)^3
  std::vector<long> moved_image;
  std::vector<std::size_t> trivial_levels;     ///< tested l where w is trivial in K_3^l
  std::vector<std::size_t> nontrivial_levels;  ///< tested l where it is not
  std::vector<std::pair<std::size_t, std::uint64_t>> run_orders;  ///< (run length, order) where nontrivial
  std::uint64_t order = 1;             ///< lcm of run_orders
};

/// w = g3^h g3^-1 with h = g2^(g1^n). Abstract levels [ell_min, ell_max] are
/// tested for triviality; the CA order is taken over run lengths 1..max_period.
TorsionReport torsion_witness(std::size_t n, std::size_t ell_min = 8, std::size_t ell_max = 12, std::size_t max_period = 12);
GroupWord torsion_word(std::size_t n, const GeneratorTable& table);

struct MarkedBallReport {
  std::size_t words = 0;
  std::size_t trivial_ca = 0, trivial_abstract = 0;
  std::vector<std::string> only_ca, only_abstract;  ///< symmetric difference (first few)
  bool agree() const { return only_ca.empty() && only_abstract.empty(); }
};

/// Words of length <= L acting trivially on all runs of length <= max(n_list)
/// versus words trivial in every K_k^n, n in n_list.
MarkedBallReport marked_ball_compare(std::size_t k, const std::vector<std::size_t>& n_list, std::size_t L);

/// Whether w is trivial in K_k over Z. Exact: every point of the box
/// [-(|w|+1), |w|+1]^k is tested, and points outside it behave like its faces.
bool k_trivial_over_z(std::size_t k, const GroupWord& w);

/// Element comparison over reduced words of length <= ball, grouped by their
/// value in K_k over Z. Words of one class must act identically on every run
/// content of length <= max_period ("relation" checks); each class must act
/// differently from every other class on run contents of length <=
/// witness_period ("non-relation" checks).
RelationSuiteReport khat_relation_suite(std::size_t k, std::size_t ball, std::size_t max_period,
                                        std::size_t witness_period);

}  // namespace beltca
