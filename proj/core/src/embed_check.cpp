#include "beltca/embed_check.hpp"

#include <optional>
#include <random>

#include "beltca/enumerate.hpp"
#include "beltca/serialize.hpp"

namespace beltca {

EvaluatorPair evaluator_pair(const EmbeddedAutomorphism& e) {
  auto g = e.as_generator();
  const BeltAlphabet belt = e.belt();
  auto frozen = [belt](std::span<const Symbol> x) {
    const auto cls = classify(belt, x);
    std::vector<bool> out(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) out[i] = cls[i] != SymbolClass::Good;
    return out;
  };
  return {e.name(), e.alphabet(), g.forward, g.backward, e.windowed(), e.windowed_inverse(), frozen};
}

EvaluatorPair evaluator_pair(const RunwiseAutomorphism& r) {
  auto g = r.as_generator();
  return {r.name(), r.alphabet(), g.forward, g.backward, r.windowed(), r.windowed_inverse(), {}};
}

namespace {

struct Failures {
  std::optional<std::vector<Symbol>> inverse, frozen, windowed;
  std::size_t tapes = 0;
};

void check_tape(const EvaluatorPair& e, std::span<const Symbol> x, Failures& f) {
  ++f.tapes;
  const auto y = e.forward(x);
  if (!f.inverse && e.backward(y) != std::vector<Symbol>(x.begin(), x.end())) f.inverse.emplace(x.begin(), x.end());
  if (!f.frozen && e.frozen) {
    const auto fr = e.frozen(x);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (fr[i] && y[i] != x[i]) {
        f.frozen.emplace(x.begin(), x.end());
        break;
      }
  }
  if (!f.windowed) {
    std::vector<Symbol> w(x.size());
    e.forward_windowed.apply_cyclic(x, w);
    bool ok = w == y;
    if (ok) {
      e.backward_windowed.apply_cyclic(x, w);
      ok = w == e.backward(x);
    }
    if (!ok) f.windowed.emplace(x.begin(), x.end());
  }
}

}  // namespace

VerificationReport verify_evaluators(const EvaluatorPair& e, const EvaluatorCheckOptions& opt) {
  Failures f;
  std::size_t skipped = 0;
  const std::uint32_t q = e.alphabet->size();
  for (std::size_t n = 1; n <= opt.max_period; ++n) {
    if (!checked_power(q, n, opt.max_tapes)) {
      ++skipped;
      continue;
    }
    for_each_word(q, n, [&](std::span<const Symbol> x) {
      check_tape(e, x, f);
      return !(f.inverse && f.windowed && (f.frozen || !e.frozen));
    });
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, opt.sample_period));
  for (std::size_t s = 0; s < opt.samples; ++s) check_tape(e, random_word(q, len(rng), rng), f);

  auto detail = [&](const std::optional<std::vector<Symbol>>& bad) {
    if (bad) return format_periodic(PeriodicConfig(e.alphabet, *bad));
    std::string d = "tapes=" + std::to_string(f.tapes);
    if (skipped) d += " skipped_periods=" + std::to_string(skipped);
    return d;
  };
  VerificationReport rep;
  rep.add("inverse", !f.inverse, detail(f.inverse));
  if (e.frozen) rep.add("frozen", !f.frozen, detail(f.frozen));
  rep.add("windowed", !f.windowed, detail(f.windowed));
  return rep;
}

}  // namespace beltca
