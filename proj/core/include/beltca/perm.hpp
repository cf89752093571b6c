#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace beltca {

/// Permutation of {0..n-1}; (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t n);
  /// Cycles on {0..n-1}, e.g. {{0,1,2}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  std::span<const std::uint32_t> images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(long e) const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::vector<std::vector<std::uint32_t>> cycles() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<std::uint32_t> img_;
};

/// x^y = y^-1 x y, [x,y] = x^-1 y^-1 x y; maps are composed right to left.
Permutation conjugate(const Permutation& x, const Permutation& y);
Permutation commutator(const Permutation& x, const Permutation& y);

/// Permutation group with a base and strong generating set (deterministic Schreier-Sims).
class PermGroup {
 public:
  PermGroup(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  /// Exact order; nullopt if it overflows 64 bits.
  std::optional<std::uint64_t> order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const;
  /// Adds a generator (no-op if already a member).
  void add_generator(const Permutation& g);

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> strong;            // strong generators fixing earlier base points
    std::vector<std::int64_t> transversal_idx;  // point -> index into transversal, -1 if not in orbit
    std::vector<Permutation> transversal;       // u with u(base) = point
  };
  // Sift g from `from`; returns residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from) const;
  void rebuild_orbit(Level& lv) const;
  void close_from(std::size_t level);
  void insert_strong(const Permutation& h, std::size_t j);

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

/// Normal closure of `s` in the group generated by `g`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);
PermGroup derived_subgroup(const PermGroup& g);
/// Derived series until it stabilises or reaches the trivial group (at most `max_steps` steps).
std::vector<PermGroup> derived_series(const PermGroup& g, std::size_t max_steps);

}  // namespace beltca
