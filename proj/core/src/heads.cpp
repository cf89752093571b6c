#include "beltca/heads.hpp"

#include <stdexcept>

namespace beltca {

namespace head {

AlphabetRef alphabet() {
  static const AlphabetRef a = Alphabet::labelled({">", "<", "1", "2"}, kRight, "labels(>,<,1,2)");
  return a;
}

bool linked(Symbol a, Symbol b) {
  if (a == kRight) return b == kRight || is_head(b);
  if (a == kLeft) return b == kLeft;
  return b == kLeft;  // C<
}

std::optional<std::size_t> position(std::span<const Symbol> seg) {
  const std::size_t L = seg.size();
  std::size_t m = 0;
  while (m < L && seg[m] == kRight) ++m;
  if (m == L) return std::nullopt;
  if (m == 0 && seg[0] == kLeft) {
    for (Symbol s : seg)
      if (s != kLeft) throw std::invalid_argument("head::position: malformed segment");
    return std::nullopt;
  }
  if (!is_head(seg[m])) throw std::invalid_argument("head::position: malformed segment");
  for (std::size_t i = m + 1; i < L; ++i)
    if (seg[i] != kLeft) throw std::invalid_argument("head::position: malformed segment");
  const std::size_t n = L - 1 - m;
  return seg[m] == kOne ? m : L + n;
}

void write_position(std::span<Symbol> seg, std::size_t p) {
  const std::size_t L = seg.size();
  if (p >= 2 * L) throw std::invalid_argument("head::write_position: position out of range");
  const std::size_t at = p < L ? p : 2 * L - 1 - p;
  for (std::size_t i = 0; i < L; ++i) seg[i] = i < at ? kRight : kLeft;
  seg[at] = p < L ? kOne : kTwo;
}

}  // namespace head

RunwiseMap::RunwiseMap(AlphabetRef alphabet, CutFn cut, SegmentFn segment, PadFn pad_cell, int radius, std::size_t pad)
    : alphabet_(std::move(alphabet)),
      cut_(std::move(cut)),
      segment_(std::move(segment)),
      pad_cell_(std::move(pad_cell)),
      radius_(radius),
      pad_(pad) {
  if (radius_ < 1) throw std::invalid_argument("RunwiseMap: radius must be positive");
}

RunwiseMap RunwiseMap::with_radius(int r) const {
  RunwiseMap m = *this;
  if (r < 1) throw std::invalid_argument("RunwiseMap: radius must be positive");
  m.radius_ = r;
  return m;
}

std::vector<Symbol> RunwiseMap::apply_segment(std::span<const Symbol> run) const {
  std::vector<Symbol> out(run.begin(), run.end());
  segment_(out);
  return out;
}

std::vector<Symbol> RunwiseMap::apply(std::span<const Symbol> cells) const {
  const std::size_t n = cells.size();
  std::vector<Symbol> out(cells.begin(), cells.end());
  std::size_t first_cut = n;
  for (std::size_t i = 0; i < n; ++i)
    if (cut_(cells[i], cells[(i + 1) % n])) {
      first_cut = i;
      break;
    }
  if (first_cut == n) return out;
  std::vector<Symbol> seg;
  std::size_t i = (first_cut + 1) % n;
  for (std::size_t done = 0; done < n;) {
    seg.clear();
    const std::size_t start = i;
    while (true) {
      seg.push_back(cells[i]);
      const std::size_t next = (i + 1) % n;
      const bool c = cut_(cells[i], cells[next]);
      i = next;
      if (c) break;
    }
    segment_(seg);
    for (std::size_t k = 0; k < seg.size(); ++k) out[(start + k) % n] = seg[k];
    done += seg.size();
  }
  return out;
}

Symbol RunwiseMap::local(std::span<const Symbol> w) const {
  if (static_cast<int>(w.size()) != 2 * radius_ + 1) throw std::invalid_argument("RunwiseMap: window size mismatch");
  const std::size_t c = static_cast<std::size_t>(radius_), last = w.size() - 1;
  std::size_t lo = c, hi = c;
  while (lo > 0 && !cut_(w[lo - 1], w[lo])) --lo;
  while (hi < last && !cut_(w[hi], w[hi + 1])) ++hi;
  std::vector<Symbol> seg;
  const std::size_t pad_left = lo == 0 ? pad_ : 0;
  for (std::size_t d = pad_left; d >= 1; --d) seg.push_back(pad_cell_(w[0], d, true));
  seg.insert(seg.end(), w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi) + 1);
  if (hi == last)
    for (std::size_t d = 1; d <= pad_; ++d) seg.push_back(pad_cell_(w[last], d, false));
  segment_(seg);
  return seg[pad_left + (c - lo)];
}

RunwiseAutomorphism::RunwiseAutomorphism(std::string name, RunwiseMap forward, RunwiseMap backward)
    : name_(std::move(name)), forward_(std::move(forward)), backward_(std::move(backward)) {}

PeriodicConfig RunwiseAutomorphism::apply(const PeriodicConfig& x) const {
  require_same_alphabet(alphabet(), x.alphabet(), "runwise apply");
  return PeriodicConfig(x.alphabet(), forward_.apply(x.cells()));
}

PeriodicConfig RunwiseAutomorphism::apply_inverse(const PeriodicConfig& x) const {
  require_same_alphabet(alphabet(), x.alphabet(), "runwise apply");
  return PeriodicConfig(x.alphabet(), backward_.apply(x.cells()));
}

namespace {
SlidingBlockCode windowed_code(const RunwiseMap& m) {
  const int R = m.radius();
  return SlidingBlockCode(m.alphabet(), {-R, R}, [m](std::span<const Symbol> w) { return m.local(w); });
}
}  // namespace

SlidingBlockCode RunwiseAutomorphism::windowed() const { return windowed_code(forward_); }
SlidingBlockCode RunwiseAutomorphism::windowed_inverse() const { return windowed_code(backward_); }

Automorphism RunwiseAutomorphism::as_automorphism() const {
  return Automorphism(name_, windowed(), windowed_inverse(), true);
}

Generator RunwiseAutomorphism::as_generator(bool involution) const {
  auto f = forward_;
  auto b = backward_;
  return Generator{name_, alphabet(), [f](std::span<const Symbol> x) { return f.apply(x); },
                   [b](std::span<const Symbol> x) { return b.apply(x); }, involution};
}

RunwiseAutomorphism RunwiseAutomorphism::inverse() const {
  std::string n = name_;
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0)
    n.resize(n.size() - 3);
  else
    n += "^-1";
  return RunwiseAutomorphism(n, backward_, forward_);
}

}  // namespace beltca
