#pragma once

// Brute-force models written directly from the definitions. They share no
// code with the library beyond the Symbol type and GroupWord's letter list.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beltca/word.hpp"

namespace oracle {

using Tape = std::vector<std::uint32_t>;

/// Cyclic rotation r[i] = x[i + k].
Tape rotate(const Tape& x, long k);

/// u placed at `start` on a zero tape of length n.
Tape placed(const Tape& u, std::size_t n, long start);

/// All cyclic placements of the words on zero tapes of length n, keyed by tape.
/// Returns the first tape reached by two different (word, start) pairs.
std::optional<Tape> safety_collision(const std::vector<Tape>& words, std::size_t n);
bool safe(const std::vector<Tape>& words, std::size_t n0);

/// AFO by search over all placements.
Tape afo(const std::vector<Tape>& words, const std::vector<std::size_t>& pi, const std::vector<long>& offsets,
         std::size_t n0, const Tape& x);

/// Sliding block code from a table indexed by the window read most significant first.
Tape block_code(const Tape& x, int left, int right, std::uint32_t q, const std::vector<std::uint32_t>& table);

/// Z wr Z with t = generator 0, u = generator 1, as maps (x1, x2) -> (x1 + s, x2 + F(x1)).
struct ZwrZ {
  long s = 0;
  std::map<long, long> f;  ///< nonzero values only
  bool operator==(const ZwrZ&) const = default;
  bool operator<(const ZwrZ& o) const { return s != o.s ? s < o.s : f < o.f; }
};
ZwrZ zwrz(const beltca::GroupWord& w);

/// Lamplighter Z_2 wr Z acting on x0: T moves the cursor one cell left, F toggles the lamp under it.
struct Lamplighter {
  long cursor = 0;
  std::set<long> lamps;
  bool operator==(const Lamplighter&) const = default;
  bool operator<(const Lamplighter& o) const { return cursor != o.cursor ? cursor < o.cursor : lamps < o.lamps; }
};
Lamplighter lamplighter(const beltca::GroupWord& w, std::size_t T, std::size_t F);

/// Permutations as image vectors, composed right to left.
using Perm = std::vector<std::uint32_t>;
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm power(const Perm& a, long e);
bool is_identity(const Perm& a);
std::uint64_t order(const Perm& a);
Perm cycle(std::size_t n, const std::vector<std::uint32_t>& points);

}  // namespace oracle
