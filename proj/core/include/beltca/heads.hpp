#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/word.hpp"

namespace beltca {

/// Single-track head symbols: '>' (the zero), '<', and the heads '1', '2'.
namespace head {
inline constexpr Symbol kRight = 0;  // '>'
inline constexpr Symbol kLeft = 1;   // '<'
inline constexpr Symbol kOne = 2;
inline constexpr Symbol kTwo = 3;

AlphabetRef alphabet();
inline bool is_head(Symbol s) { return s == kOne || s == kTwo; }
/// The pair ab lies inside a good run: one of >>, <<, >C, C<.
bool linked(Symbol a, Symbol b);

/// Belt position of a track segment >^m 1 <^n (= m) or >^m 2 <^n (= L + n);
/// nullopt for a headless segment. Throws on anything else.
std::optional<std::size_t> position(std::span<const Symbol> segment);
/// Writes the single-head segment with belt position p, 0 <= p < 2L.
void write_position(std::span<Symbol> segment, std::size_t p);
}  // namespace head

/// A map that transforms each maximal run between cuts independently.
///
/// `cut(a, b)` says whether adjacent cells a b belong to different runs. A
/// tape without any cut is left unchanged. The windowed evaluator finds the
/// run through the centre; an end that runs out of view is extended by `pad`
/// synthetic cells produced by `pad_cell(edge, distance, on_left)`.
class RunwiseMap {
 public:
  using CutFn = std::function<bool(Symbol, Symbol)>;
  using SegmentFn = std::function<void(std::span<Symbol>)>;
  using PadFn = std::function<Symbol(Symbol, std::size_t, bool)>;

  RunwiseMap(AlphabetRef alphabet, CutFn cut, SegmentFn segment, PadFn pad_cell, int radius, std::size_t pad);

  const AlphabetRef& alphabet() const { return alphabet_; }
  int radius() const { return radius_; }
  RunwiseMap with_radius(int r) const;

  std::vector<Symbol> apply(std::span<const Symbol> cells) const;
  Symbol local(std::span<const Symbol> window) const;
  /// Applies the segment rule to one run given as a linear word.
  std::vector<Symbol> apply_segment(std::span<const Symbol> run) const;

 private:
  AlphabetRef alphabet_;
  CutFn cut_;
  SegmentFn segment_;
  PadFn pad_cell_;
  int radius_;
  std::size_t pad_;
};

class RunwiseAutomorphism {
 public:
  RunwiseAutomorphism(std::string name, RunwiseMap forward, RunwiseMap backward);

  const std::string& name() const { return name_; }
  const AlphabetRef& alphabet() const { return forward_.alphabet(); }
  int radius() const { return std::max(forward_.radius(), backward_.radius()); }
  const RunwiseMap& forward() const { return forward_; }
  const RunwiseMap& backward() const { return backward_; }

  PeriodicConfig apply(const PeriodicConfig& x) const;
  PeriodicConfig apply_inverse(const PeriodicConfig& x) const;
  SlidingBlockCode windowed() const;
  SlidingBlockCode windowed_inverse() const;
  Automorphism as_automorphism() const;
  Generator as_generator(bool involution = false) const;
  RunwiseAutomorphism inverse() const;

 private:
  std::string name_;
  RunwiseMap forward_, backward_;
};

}  // namespace beltca
