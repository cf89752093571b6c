#include "beltca/belt.hpp"

#include <algorithm>
#include <stdexcept>

#include "beltca/serialize.hpp"

namespace beltca {

BeltAlphabet::BeltAlphabet(AlphabetRef base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("null base alphabet");
  q_ = base_->size();
  if (static_cast<std::uint64_t>(q_) * q_ + 2 > (1ull << 31)) throw std::invalid_argument("base alphabet too large");
  std::vector<std::string> labels;
  labels.reserve(q_ * q_ + 2);
  for (Symbol t = 0; t < q_; ++t)
    for (Symbol b = 0; b < q_; ++b) labels.push_back(base_->label(t) + "|" + base_->label(b));
  labels.push_back(">");
  labels.push_back("<");
  gamma_ = Alphabet::labelled(std::move(labels), pair(base_->zero(), base_->zero()), "belt(" + base_->description() + ")");
}

BeltAlphabet BeltAlphabet::from_gamma(const AlphabetRef& gamma) {
  const auto& d = gamma->description();
  if (d.size() < 7 || d.compare(0, 5, "belt(") != 0 || d.back() != ')')
    throw std::invalid_argument("alphabet is not a belt alphabet");
  BeltAlphabet b(parse_alphabet(d.substr(5, d.size() - 6)));
  require_same_alphabet(b.gamma(), gamma, "BeltAlphabet::from_gamma");
  return b;
}

bool BeltAlphabet::good_pair(Symbol a, Symbol b) const {
  const Symbol L = left_wall(), R = right_wall();
  if (a == L) return b != zero_pair();          // >>, >C, ><
  if (a == R) return b == R;                     // <<
  if (b == L) return false;                      // B>
  if (b == R) return a != zero_pair();           // C<
  return true;                                   // BB
}

const char* to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::Good: return "good";
    case SymbolClass::Wall: return "wall";
    case SymbolClass::Error: return "error";
  }
  return "?";
}

const char* to_string(Boundary b) { return b == Boundary::Wall ? "wall" : "error"; }

std::vector<SymbolClass> classify(const BeltAlphabet& belt, std::span<const Symbol> cells) {
  const std::size_t n = cells.size();
  std::vector<SymbolClass> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol a = cells[(i + n - 1) % n], b = cells[i], c = cells[(i + 1) % n];
    if (belt.good_pair(a, b) && belt.good_pair(b, c)) out[i] = SymbolClass::Good;
    else if ((b == belt.left_wall() && a != belt.left_wall()) || (b == belt.right_wall() && c != belt.right_wall()))
      out[i] = SymbolClass::Wall;
    else
      out[i] = SymbolClass::Error;
  }
  return out;
}

std::vector<SymbolClass> classify(const BeltAlphabet& belt, const PeriodicConfig& x) {
  require_same_alphabet(belt.gamma(), x.alphabet(), "classify");
  return classify(belt, x.cells());
}

namespace {

std::size_t count_prefix(std::span<const Symbol> run, Symbol s) {
  std::size_t m = 0;
  while (m < run.size() && run[m] == s) ++m;
  return m;
}

std::size_t count_suffix(std::span<const Symbol> run, Symbol s, std::size_t stop) {
  std::size_t n = 0;
  while (n + stop < run.size() && run[run.size() - 1 - n] == s) ++n;
  return n;
}

}  // namespace

RunDecomposition decompose(const BeltAlphabet& belt, std::span<const Symbol> cells) {
  RunDecomposition d;
  const std::size_t n = cells.size();
  auto cls = classify(belt, cells);
  std::size_t first_bad = n;
  for (std::size_t i = 0; i < n; ++i)
    if (cls[i] != SymbolClass::Good) {
      first_bad = i;
      break;
    }
  if (first_bad == n) {
    // Cyclically all-good tapes are homogeneous.
    if (cells[0] == belt.left_wall()) d.degenerate = Degenerate::AllLeftWalls;
    else if (cells[0] == belt.right_wall()) d.degenerate = Degenerate::AllRightWalls;
    else d.degenerate = Degenerate::AllPairs;
    return d;
  }
  std::vector<Symbol> run;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = (first_bad + k) % n;
    if (cls[i] != SymbolClass::Good) continue;
    if (cls[(i + n - 1) % n] != SymbolClass::Good) {
      GoodRun r;
      r.start = i;
      r.left = cls[(i + n - 1) % n] == SymbolClass::Wall ? Boundary::Wall : Boundary::Error;
      run.clear();
      std::size_t j = i;
      while (cls[j] == SymbolClass::Good) {
        run.push_back(cells[j]);
        j = (j + 1) % n;
      }
      r.length = run.size();
      r.right = cls[j] == SymbolClass::Wall ? Boundary::Wall : Boundary::Error;
      r.prefix = count_prefix(run, belt.left_wall());
      r.suffix = count_suffix(run, belt.right_wall(), r.prefix);
      d.runs.push_back(r);
    }
  }
  return d;
}

RunDecomposition decompose(const BeltAlphabet& belt, const PeriodicConfig& x) {
  require_same_alphabet(belt.gamma(), x.alphabet(), "decompose");
  return decompose(belt, x.cells());
}

std::vector<Symbol> belt_encode(const BeltAlphabet& belt, std::span<const Symbol> run) {
  const std::size_t L = run.size();
  std::vector<Symbol> out(2 * L);
  for (std::size_t i = 0; i < L; ++i) {
    const Symbol c = belt.is_pair(run[i]) ? run[i] : belt.zero_pair();
    out[i] = belt.top(c);
    out[2 * L - 1 - i] = belt.bottom(c);
  }
  return out;
}

PeriodicConfig belt_encode(const BeltAlphabet& belt, const PeriodicConfig& x, const GoodRun& run) {
  require_same_alphabet(belt.gamma(), x.alphabet(), "belt_encode");
  std::vector<Symbol> cells(run.length);
  for (std::size_t i = 0; i < run.length; ++i) cells[i] = x[static_cast<std::ptrdiff_t>(run.start + i)];
  return PeriodicConfig(belt.base(), belt_encode(belt, cells));
}

std::vector<Symbol> belt_decode(const BeltAlphabet& belt, std::span<const Symbol> tape) {
  if (tape.size() % 2) throw std::invalid_argument("belt_decode: odd belt length");
  const std::size_t L = tape.size() / 2;
  std::vector<Symbol> w(L);
  for (std::size_t i = 0; i < L; ++i) w[i] = belt.pair(tape[i], tape[2 * L - 1 - i]);
  return w;
}

// ---------------------------------------------------------------------------

EmbeddedMap::EmbeddedMap(BeltAlphabet belt, Automorphism f, bool doubling)
    : belt_(std::move(belt)), source_(std::move(f)), dilation_(doubling ? 2 : 1) {
  const auto& a = std::get<Automorphism>(source_);
  require_same_alphabet(belt_.base(), a.alphabet(), "embed_automorphism");
  if (!a.forward().maps_zero_to_zero()) throw std::invalid_argument("embed_automorphism: '" + a.name() + "' does not fix zero");
  radius_ = a.radius() * dilation_ + 2;
  pad_ = static_cast<std::size_t>(radius_);
}

EmbeddedMap::EmbeddedMap(BeltAlphabet belt, AfoSpec afo, bool doubling)
    : belt_(std::move(belt)), source_(doubling ? doubled(afo) : std::move(afo)), dilation_(1) {
  const auto& a = std::get<AfoSpec>(source_);
  require_same_alphabet(belt_.base(), a.alphabet(), "embed_afo");
  const auto maxlen = static_cast<long>(a.safe().max_length());
  const auto thr = static_cast<long>(a.safe().threshold());
  radius_ = static_cast<int>(std::max(2 * maxlen + a.max_abs_offset(), (thr + 1) / 2) + 2);
  pad_ = static_cast<std::size_t>(radius_ + thr);
}

EmbeddedMap EmbeddedMap::with_radius(int r) const {
  if (r < 1) throw std::invalid_argument("radius must be positive");
  EmbeddedMap m = *this;
  m.radius_ = r;
  m.pad_ = std::max(m.pad_, static_cast<std::size_t>(r));
  return m;
}

bool EmbeddedMap::transform_belt(std::span<const Symbol> in, std::span<Symbol> out, bool walls_both_sides) const {
  if (const auto* f = std::get_if<Automorphism>(&source_)) {
    f->forward().apply_cyclic(in, out, dilation_);
  } else {
    if (!walls_both_sides) return false;
    std::get<AfoSpec>(source_).apply(in, out);
  }
  return !std::equal(in.begin(), in.end(), out.begin());
}

std::vector<Symbol> EmbeddedMap::transform_run(std::span<const Symbol> run, Boundary left, Boundary right) const {
  std::vector<Symbol> result(run.begin(), run.end());
  const std::size_t L = run.size();
  const std::size_t m = count_prefix(run, belt_.left_wall());
  const std::size_t n = count_suffix(run, belt_.right_wall(), m);
  if (m + n == L) return result;

  const auto tape = belt_encode(belt_, run);
  std::vector<Symbol> image(tape.size());
  if (!transform_belt(tape, image, left == Boundary::Wall && right == Boundary::Wall)) return result;
  auto w = belt_decode(belt_, image);

  const Symbol z = belt_.zero_pair();
  if (left == Boundary::Wall || right == Boundary::Wall) {
    if (std::all_of(w.begin(), w.end(), [z](Symbol s) { return s == z; }))
      throw BeltDefect("automorphism maps a nonzero simulated tape to zero");
  }
  if (left == Boundary::Wall)
    for (std::size_t i = 0; i < L && w[i] == z; ++i) w[i] = belt_.left_wall();
  if (right == Boundary::Wall)
    for (std::size_t i = L; i-- > 0 && w[i] == z;) w[i] = belt_.right_wall();
  return w;
}

std::vector<Symbol> EmbeddedMap::apply(std::span<const Symbol> cells) const {
  std::vector<Symbol> out(cells.begin(), cells.end());
  const std::size_t N = cells.size();
  auto d = decompose(belt_, cells);
  if (d.degenerate == Degenerate::AllPairs) {
    if (const auto* f = std::get_if<Automorphism>(&source_)) {
      std::vector<Symbol> top(N), bot(N), t2(N), b2(N);
      for (std::size_t i = 0; i < N; ++i) {
        top[i] = belt_.top(cells[i]);
        bot[N - 1 - i] = belt_.bottom(cells[i]);
      }
      f->forward().apply_cyclic(top, t2, dilation_);
      f->forward().apply_cyclic(bot, b2, dilation_);
      for (std::size_t i = 0; i < N; ++i) out[i] = belt_.pair(t2[i], b2[N - 1 - i]);
    }
    return out;
  }
  std::vector<Symbol> run;
  for (const auto& r : d.runs) {
    run.resize(r.length);
    for (std::size_t i = 0; i < r.length; ++i) run[i] = cells[(r.start + i) % N];
    auto w = transform_run(run, r.left, r.right);
    for (std::size_t i = 0; i < r.length; ++i) out[(r.start + i) % N] = w[i];
  }
  return out;
}

Symbol EmbeddedMap::local(std::span<const Symbol> w) const {
  const int R = radius_;
  if (static_cast<int>(w.size()) != 2 * R + 1) throw std::invalid_argument("window size mismatch");
  const std::size_t c = static_cast<std::size_t>(R);
  const std::size_t last = w.size() - 1;
  // Positions 1..last-1 have both neighbours in view.
  auto cls = [&](std::size_t i) {
    const Symbol a = w[i - 1], b = w[i], d = w[i + 1];
    if (belt_.good_pair(a, b) && belt_.good_pair(b, d)) return SymbolClass::Good;
    if ((b == belt_.left_wall() && a != belt_.left_wall()) || (b == belt_.right_wall() && d != belt_.right_wall()))
      return SymbolClass::Wall;
    return SymbolClass::Error;
  };
  if (cls(c) != SymbolClass::Good) return w[c];

  std::size_t lo = c, hi = c;
  while (lo > 1 && cls(lo - 1) == SymbolClass::Good) --lo;
  while (hi + 1 < last && cls(hi + 1) == SymbolClass::Good) ++hi;
  const bool left_seen = lo > 1 || cls(lo - 1) != SymbolClass::Good;
  const bool right_seen = hi + 1 < last || cls(hi + 1) != SymbolClass::Good;

  std::vector<Symbol> run;
  Boundary left, right;
  std::size_t pad_left = 0;
  if (left_seen) {
    left = cls(lo - 1) == SymbolClass::Wall ? Boundary::Wall : Boundary::Error;
  } else if (w[lo] == belt_.left_wall()) {
    left = Boundary::Wall;
    pad_left = pad_;
  } else {
    left = Boundary::Error;
  }
  run.assign(pad_left, belt_.left_wall());
  run.insert(run.end(), w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi) + 1);
  if (right_seen) {
    right = cls(hi + 1) == SymbolClass::Wall ? Boundary::Wall : Boundary::Error;
  } else if (w[hi] == belt_.right_wall()) {
    right = Boundary::Wall;
    run.insert(run.end(), pad_, belt_.right_wall());
  } else {
    right = Boundary::Error;
  }
  return transform_run(run, left, right)[pad_left + (c - lo)];
}

// ---------------------------------------------------------------------------

EmbeddedAutomorphism::EmbeddedAutomorphism(std::string name, EmbeddedMap forward, EmbeddedMap backward, bool doubling)
    : name_(std::move(name)), forward_(std::move(forward)), backward_(std::move(backward)), doubling_(doubling) {}

PeriodicConfig EmbeddedAutomorphism::apply(const PeriodicConfig& x) const {
  require_same_alphabet(alphabet(), x.alphabet(), "embedded apply");
  return PeriodicConfig(x.alphabet(), forward_.apply(x.cells()));
}

PeriodicConfig EmbeddedAutomorphism::apply_inverse(const PeriodicConfig& x) const {
  require_same_alphabet(alphabet(), x.alphabet(), "embedded apply");
  return PeriodicConfig(x.alphabet(), backward_.apply(x.cells()));
}

PeriodicConfig EmbeddedAutomorphism::apply_windowed(const PeriodicConfig& x) const { return windowed().apply(x); }

PeriodicConfig EmbeddedAutomorphism::apply_inverse_windowed(const PeriodicConfig& x) const {
  return windowed_inverse().apply(x);
}

namespace {
SlidingBlockCode windowed_code(const EmbeddedMap& m) {
  const int R = m.radius();
  return SlidingBlockCode(m.belt().gamma(), {-R, R}, [m](std::span<const Symbol> w) { return m.local(w); });
}
}  // namespace

SlidingBlockCode EmbeddedAutomorphism::windowed() const { return windowed_code(forward_); }
SlidingBlockCode EmbeddedAutomorphism::windowed_inverse() const { return windowed_code(backward_); }

Automorphism EmbeddedAutomorphism::as_automorphism() const {
  return Automorphism(name_, windowed(), windowed_inverse(), true);
}

Generator EmbeddedAutomorphism::as_generator(std::string name) const {
  auto f = forward_;
  auto b = backward_;
  return Generator{name.empty() ? name_ : std::move(name), alphabet(),
                   [f](std::span<const Symbol> x) { return f.apply(x); },
                   [b](std::span<const Symbol> x) { return b.apply(x); }, false};
}

EmbeddedAutomorphism EmbeddedAutomorphism::inverse() const {
  std::string n = name_;
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0)
    n.resize(n.size() - 3);
  else
    n += "^-1";
  return EmbeddedAutomorphism(n, backward_, forward_, doubling_);
}

EmbeddedAutomorphism embed_automorphism(const Automorphism& f, bool doubling) {
  BeltAlphabet belt(f.alphabet());
  return EmbeddedAutomorphism("belt(" + f.name() + ")", EmbeddedMap(belt, f, doubling),
                              EmbeddedMap(belt, f.inverse(), doubling), doubling);
}

EmbeddedAutomorphism embed_afo(const AfoSpec& afo, bool doubling) {
  BeltAlphabet belt(afo.alphabet());
  return EmbeddedAutomorphism("belt(" + afo.name() + ")", EmbeddedMap(belt, afo, doubling),
                              EmbeddedMap(belt, afo_inverse(afo), doubling), doubling);
}

bool simulate_check(const Automorphism& f, const FiniteConfig& x) {
  require_same_alphabet(f.alphabet(), x.alphabet(), "simulate_check");
  const long r = f.radius();
  const long from = (x.is_zero() ? 0 : x.offset()) - r - 1;
  const long to = (x.is_zero() ? 0 : x.end()) + r + 1;
  const auto W = static_cast<std::size_t>(to - from);
  auto emb = embed_automorphism(f);
  const BeltAlphabet& belt = emb.belt();
  const Symbol z = f.alphabet()->zero();

  std::vector<Symbol> run(W);
  for (std::size_t i = 0; i < W; ++i) run[i] = belt.pair(x.at(from + static_cast<long>(i)), z);
  for (std::size_t i = 0; i < W && run[i] == belt.zero_pair(); ++i) run[i] = belt.left_wall();
  for (std::size_t i = W; i-- > 0 && run[i] == belt.zero_pair();) run[i] = belt.right_wall();
  std::vector<Symbol> tape{belt.left_wall()};
  tape.insert(tape.end(), run.begin(), run.end());
  tape.push_back(belt.right_wall());

  auto out = emb.forward().apply(tape);
  const FiniteConfig expected = f.apply(x);
  for (std::size_t i = 0; i < W; ++i) {
    const Symbol c = out[i + 1];
    const Symbol cell = belt.is_pair(c) ? c : belt.zero_pair();
    if (belt.top(cell) != expected.at(from + static_cast<long>(i)) || belt.bottom(cell) != z) return false;
  }
  return out.front() == belt.left_wall() && out.back() == belt.right_wall();
}

}  // namespace beltca
