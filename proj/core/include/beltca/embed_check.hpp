#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/belt.hpp"
#include "beltca/heads.hpp"
#include "beltca/word.hpp"

namespace beltca {

/// A tape map with a global and a windowed evaluator in both directions.
struct EvaluatorPair {
  std::string name;
  AlphabetRef alphabet;
  TapeMap forward, backward;
  SlidingBlockCode forward_windowed, backward_windowed;
  /// Cells that must never change (walls and errors); empty = no such check.
  std::function<std::vector<bool>(std::span<const Symbol>)> frozen;
};

EvaluatorPair evaluator_pair(const EmbeddedAutomorphism& e);
EvaluatorPair evaluator_pair(const RunwiseAutomorphism& r);

struct EvaluatorCheckOptions {
  std::size_t max_period = 5;       ///< every tape of period <= max_period
  std::size_t samples = 1000;       ///< plus this many random tapes
  std::size_t sample_period = 40;   ///< of period in [1, sample_period]
  std::uint64_t seed = 1;
  std::uint64_t max_tapes = 1u << 22;  ///< per period; larger periods are skipped
};

/// Checks "inverse" (backward undoes forward), "frozen" (bad cells unchanged)
/// and "windowed" (windowed and global evaluators agree in both directions).
/// Details hold the first counterexample tape.
VerificationReport verify_evaluators(const EvaluatorPair& e, const EvaluatorCheckOptions& opt = {});

}  // namespace beltca
