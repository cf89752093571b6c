#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beltca/heads.hpp"
#include "beltca/perm.hpp"
#include "beltca/word.hpp"

namespace beltca {

struct NeumannProgression {
  std::uint32_t start = 3;
  std::uint32_t step = 1;
};

/// Block-size sequence: a union of arithmetic progressions plus finitely many
/// extra terms, minus finitely many excluded ones.
struct NeumannSpec {
  std::vector<NeumannProgression> progressions;
  std::vector<std::uint32_t> extra;
  std::vector<std::uint32_t> excluded;

  /// 6, 8, 10, ...
  static NeumannSpec even_base();
  static NeumannSpec progression(std::uint32_t start, std::uint32_t step);

  /// The first `count` terms (fewer if the sequence is finite). Throws if a term is below 3.
  std::vector<std::uint32_t> terms(std::size_t count) const;
  std::string description() const;
};

struct NeumannAbstract {
  std::vector<std::uint32_t> blocks;
  std::vector<std::uint32_t> offsets;  ///< first point of each block
  Permutation a;                       ///< 3-cycle on the first three points of each block
  Permutation b;                       ///< full cycle on each block
};

NeumannAbstract neumann_abstract(const NeumannSpec& spec, std::size_t depth);

/// [a, a^(b^(n+3))] in Sym(N) with a = (0 1 2) and b = (0 1 ... N-1).
Permutation certificate_element(std::size_t n, std::size_t N);
/// Whether the certificate element is nontrivial in Sym(n + 5 + m).
bool certificate(std::size_t n, std::size_t m);

/// The CA realization: a cycles the run prefixes 1<< -> >1< -> >>2, b advances
/// the head's belt position by 1. For k = 1 the alphabet is {>,<,1,2} and
/// every good run of length >= ell is used whole; for k >= 2 a second track over
/// {1..k} cuts runs into effective runs of length = ell (mod k).
struct NeumannCA {
  std::uint32_t ell = 3;
  std::uint32_t k = 1;
  AlphabetRef alphabet;
  RunwiseAutomorphism a;
  RunwiseAutomorphism b;

  GeneratorTable table() const;
  /// Block sizes realized on finite runs: 2*ell, 2*(ell+k), ...
  NeumannSpec realized() const;
};

NeumannCA neumann_even_generators();
NeumannCA neumann_progression_generators(std::uint32_t ell, std::uint32_t k);

/// Effective runs (start, length) of a tape, start taken mod the period.
std::vector<std::pair<std::size_t, std::size_t>> neumann_effective_runs(const NeumannCA& ca,
                                                                       std::span<const Symbol> cells);

/// Product action over disjoint alphabets: generators a and b act on every factor.
GeneratorTable neumann_union_table(const std::vector<NeumannCA>& parts);

/// Single-run tape of length E with the head at belt position p (track 2 = 12..k12..).
std::vector<Symbol> neumann_run_tape(const NeumannCA& ca, std::size_t E, std::optional<std::size_t> p);

struct NeumannLevel {
  std::size_t run_length = 0;
  std::size_t block = 0;  ///< 2 * run_length
  std::string a_cycles, b_cycles;
  std::uint64_t a_order = 0, b_order = 0;
  std::optional<std::uint64_t> group_order;
};

struct NeumannCompareReport {
  std::vector<NeumannLevel> levels;
  std::size_t words = 0;
  std::size_t trivial_ca = 0, trivial_abstract = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Per effective run length E <= max_period: the permutations of a and b on
/// the 2E head positions read off the CA, and agreement of the trivially
/// acting words of length <= L between the CA and the extracted-cycle model.
NeumannCompareReport neumann_compare(const NeumannCA& ca, std::size_t max_period, std::size_t L);

}  // namespace beltca
