#include "beltca/relations.hpp"

#include <stdexcept>

#include "beltca/enumerate.hpp"
#include "beltca/serialize.hpp"

namespace beltca {

Permutation word_permutation(const std::vector<Permutation>& gens, const GroupWord& w) {
  if (gens.empty()) throw std::invalid_argument("word_permutation: no generators");
  Permutation p = Permutation::identity(gens.front().degree());
  std::vector<Permutation> inv(gens.size());
  for (const auto& s : w.steps()) {
    const auto& g = gens.at(s.generator);
    if (s.exponent > 0) {
      p = g * p;
    } else {
      if (inv[s.generator].degree() == 0) inv[s.generator] = g.inverse();
      p = inv[s.generator] * p;
    }
  }
  return p;
}

TransitionTables::TransitionTables(const GeneratorTable& table, std::size_t period, std::uint64_t max_tapes)
    : period_(period), q_(table.alphabet()->size()) {
  if (period == 0) throw std::invalid_argument("TransitionTables: period must be positive");
  auto count = checked_power(q_, period, std::min<std::uint64_t>(max_tapes, UINT32_MAX));
  if (!count) throw std::length_error("TransitionTables: too many tapes for period " + std::to_string(period));
  tapes_ = *count;
  for_each_necklace(q_, period, [&](std::span<const Symbol> x) {
    necklaces_.push_back(static_cast<std::uint32_t>(word_code(x, q_)));
    return true;
  });
  const std::uint64_t high = tapes_ / q_;  // q^(n-1)
  auto rotate = [&](std::uint64_t c) { return (c % high) * q_ + c / high; };

  std::vector<Symbol> x(period);
  for (std::size_t g = 0; g < table.size(); ++g) {
    std::vector<std::uint32_t> f(tapes_);
    for (std::uint32_t c : necklaces_) {
      word_decode(c, q_, x);
      const auto y = table[g].forward(x);
      std::uint64_t cx = c, cy = word_code(y, q_);
      for (std::size_t r = 0; r < period; ++r) {
        f[cx] = static_cast<std::uint32_t>(cy);
        cx = rotate(cx);
        cy = rotate(cy);
      }
    }
    std::vector<std::uint32_t> b(tapes_, UINT32_MAX);
    for (std::uint64_t c = 0; c < tapes_; ++c) {
      if (b[f[c]] != UINT32_MAX)
        throw std::logic_error("generator '" + table[g].name + "' is not injective on period " + std::to_string(period));
      b[f[c]] = static_cast<std::uint32_t>(c);
    }
    fwd_.push_back(std::move(f));
    bwd_.push_back(std::move(b));
  }
}

std::uint32_t TransitionTables::apply(const GroupWord& w, std::uint32_t code) const {
  for (const auto& s : w.steps()) code = step(s.generator, s.exponent, code);
  return code;
}

std::optional<std::uint32_t> TransitionTables::first_moved(const GroupWord& w) const {
  const auto steps = w.steps();
  for (std::uint32_t c : necklaces_) {
    std::uint32_t d = c;
    for (const auto& s : steps) d = step(s.generator, s.exponent, d);
    if (d != c) return c;
  }
  return std::nullopt;
}

std::vector<Symbol> TransitionTables::decode(std::uint32_t code) const {
  std::vector<Symbol> x(period_);
  word_decode(code, q_, x);
  return x;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t RelationSuiteReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

bool RelationSuiteReport::passed() const { return count(CheckStatus::Pass) == checks.size(); }

RelationSuiteReport relation_suite(const GeneratorTable& table, const Presentation& p, std::size_t max_period,
                                   const std::vector<PeriodicConfig>& extra_tapes, std::uint64_t max_tapes) {
  RelationSuiteReport r;
  for (const auto& w : p.relations) r.checks.push_back({"relation", w.to_string(table), CheckStatus::Pass, {}});
  for (const auto& w : p.non_relations)
    r.checks.push_back({"non-relation", w.to_string(table), CheckStatus::Inconclusive, "no witness found"});
  const std::size_t nr = p.relations.size();
  const auto& alpha = table.alphabet();

  for (std::size_t n = 1; n <= max_period; ++n) {
    if (!checked_power(alpha->size(), n, max_tapes)) {
      for (std::size_t i = 0; i < nr; ++i)
        if (r.checks[i].status == CheckStatus::Pass) {
          r.checks[i].status = CheckStatus::Inconclusive;
          r.checks[i].witness = "period " + std::to_string(n) + " exceeds the tape budget";
        }
      break;
    }
    TransitionTables tt(table, n, max_tapes);
    for (std::size_t i = 0; i < nr; ++i) {
      if (r.checks[i].status != CheckStatus::Pass) continue;
      if (auto c = tt.first_moved(p.relations[i])) {
        r.checks[i].status = CheckStatus::Fail;
        r.checks[i].witness = format_periodic(PeriodicConfig(alpha, tt.decode(*c)));
      }
    }
    for (std::size_t i = 0; i < p.non_relations.size(); ++i) {
      auto& chk = r.checks[nr + i];
      if (chk.status == CheckStatus::Pass) continue;
      if (auto c = tt.first_moved(p.non_relations[i])) {
        chk.status = CheckStatus::Pass;
        chk.witness = format_periodic(PeriodicConfig(alpha, tt.decode(*c)));
      }
    }
  }
  for (std::size_t i = 0; i < p.non_relations.size(); ++i) {
    auto& chk = r.checks[nr + i];
    for (const auto& x : extra_tapes) {
      if (chk.status == CheckStatus::Pass) break;
      if (!(apply_word(table, p.non_relations[i], x) == x)) {
        chk.status = CheckStatus::Pass;
        chk.witness = format_periodic(x);
      }
    }
  }
  return r;
}

}  // namespace beltca
