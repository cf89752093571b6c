#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beltca/perm.hpp"
#include "beltca/word.hpp"

namespace beltca {

/// Permutation of a word over permutation generators (rightmost letter first).
Permutation word_permutation(const std::vector<Permutation>& gens, const GroupWord& w);

/// Forward/backward transition tables of every generator on all tapes of one
/// period, indexed by word_code(). Built from necklace representatives; the
/// backward table is the inverse of the forward one.
class TransitionTables {
 public:
  TransitionTables(const GeneratorTable& table, std::size_t period, std::uint64_t max_tapes = 1ull << 25);

  std::size_t period() const { return period_; }
  std::uint64_t tapes() const { return tapes_; }
  const std::vector<std::uint32_t>& necklaces() const { return necklaces_; }

  std::uint32_t step(std::size_t gen, int exponent_sign, std::uint32_t code) const {
    return exponent_sign > 0 ? fwd_[gen][code] : bwd_[gen][code];
  }
  std::uint32_t apply(const GroupWord& w, std::uint32_t code) const;
  /// A necklace moved by w, if any.
  std::optional<std::uint32_t> first_moved(const GroupWord& w) const;
  std::vector<Symbol> decode(std::uint32_t code) const;

 private:
  std::size_t period_;
  std::uint32_t q_;
  std::uint64_t tapes_;
  std::vector<std::uint32_t> necklaces_;
  std::vector<std::vector<std::uint32_t>> fwd_, bwd_;
};

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

struct RelationCheck {
  std::string kind;  ///< "relation" or "non-relation"
  std::string word;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string witness;  ///< serialized tape, or a reason
};

struct RelationSuiteReport {
  std::vector<RelationCheck> checks;
  std::size_t count(CheckStatus s) const;
  /// No failures and nothing inconclusive.
  bool passed() const;
};

struct Presentation {
  std::vector<GroupWord> relations;
  std::vector<GroupWord> non_relations;
};

/// Relations must fix every tape of period <= max_period; non-relations need a
/// witness among those tapes or among `extra_tapes`. Periods whose tape count
/// exceeds max_tapes make relations inconclusive.
RelationSuiteReport relation_suite(const GeneratorTable& table, const Presentation& p, std::size_t max_period,
                                   const std::vector<PeriodicConfig>& extra_tapes = {},
                                   std::uint64_t max_tapes = 1ull << 25);

}  // namespace beltca
