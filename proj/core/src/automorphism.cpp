#include "beltca/automorphism.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "beltca/enumerate.hpp"

namespace beltca {

Automorphism::Automorphism(std::string name, SlidingBlockCode forward, SlidingBlockCode backward, bool fixes_zero)
    : name_(std::move(name)), forward_(std::move(forward)), backward_(std::move(backward)), fixes_zero_(fixes_zero) {
  require_same_alphabet(forward_.alphabet(), backward_.alphabet(), "Automorphism");
  if (fixes_zero_ && (!forward_.maps_zero_to_zero() || !backward_.maps_zero_to_zero()))
    throw std::invalid_argument("automorphism '" + name_ + "' flagged zero-fixing but moves the zero point");
}

Automorphism Automorphism::identity(AlphabetRef alphabet) {
  auto id = SlidingBlockCode::identity(alphabet);
  return Automorphism("id", id, id);
}

Automorphism Automorphism::shift(AlphabetRef alphabet, int k) {
  std::string name = k == 1 ? "shift" : "shift^" + std::to_string(k);
  return Automorphism(name, SlidingBlockCode::shift(alphabet, k), SlidingBlockCode::shift(alphabet, -k));
}

int Automorphism::radius() const { return std::max(forward_.radius(), backward_.radius()); }

Automorphism Automorphism::inverse() const {
  std::string n = name_;
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0)
    n.resize(n.size() - 3);
  else
    n += "^-1";
  return Automorphism(n, backward_, forward_, fixes_zero_);
}

Automorphism Automorphism::renamed(std::string name) const {
  return Automorphism(std::move(name), forward_, backward_, fixes_zero_);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  return Automorphism(a.name() + "*" + b.name(), compose(a.forward(), b.forward()),
                      compose(b.backward(), a.backward()), a.fixes_zero() && b.fixes_zero());
}

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
}

void VerificationReport::add(std::string check, bool ok, std::string detail) {
  entries.push_back({std::move(check), ok, std::move(detail)});
}

namespace {

std::string cells_text(std::span<const Symbol> w) {
  std::ostringstream os;
  os << "period=" << w.size() << " cells=[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << '#' << w[i];
  os << ']';
  return os.str();
}

// Returns a witness tape on failure.
std::optional<std::vector<Symbol>> roundtrip_fails(const Automorphism& a, std::span<const Symbol> x) {
  std::vector<Symbol> y(x.size()), z(x.size());
  a.forward().apply_cyclic(x, y);
  a.backward().apply_cyclic(y, z);
  if (!std::equal(z.begin(), z.end(), x.begin())) return std::vector<Symbol>(x.begin(), x.end());
  a.backward().apply_cyclic(x, y);
  a.forward().apply_cyclic(y, z);
  if (!std::equal(z.begin(), z.end(), x.begin())) return std::vector<Symbol>(x.begin(), x.end());
  return std::nullopt;
}

}  // namespace

VerificationReport verify_automorphism(const Automorphism& a, const VerifyOptions& opt) {
  VerificationReport rep;
  const auto q = a.alphabet()->size();

  auto fb = is_identity(compose(a.forward(), a.backward()), opt.window_budget);
  auto bf = is_identity(compose(a.backward(), a.forward()), opt.window_budget);
  const bool exact = fb.verdict != IdentityVerdict::BudgetExceeded && bf.verdict != IdentityVerdict::BudgetExceeded;
  if (exact) {
    bool ok = fb.verdict == IdentityVerdict::Identity && bf.verdict == IdentityVerdict::Identity;
    std::string detail = "exact windows=" + std::to_string(fb.windows_checked + bf.windows_checked);
    if (!ok) detail = "window " + cells_text(fb.verdict == IdentityVerdict::NotIdentity ? fb.witness : bf.witness);
    rep.add("inverse.exact", ok, detail);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::optional<std::vector<Symbol>> bad;
    std::uint64_t checked = 0;
    bool sampled = false;
    for (std::size_t n = 1; n <= opt.max_period && !bad; ++n) {
      if (checked_power(q, n, opt.exhaustive_budget)) {
        for_each_necklace(q, n, [&](std::span<const Symbol> x) {
          ++checked;
          bad = roundtrip_fails(a, x);
          return !bad;
        });
      } else {
        sampled = true;
        for (std::size_t s = 0; s < opt.random_samples && !bad; ++s, ++checked)
          bad = roundtrip_fails(a, random_word(q, n, rng));
      }
    }
    rep.add("inverse.periodic", !bad,
            bad ? cells_text(*bad)
                : "P=" + std::to_string(opt.max_period) + " configs=" + std::to_string(checked) +
                      (sampled ? " (largest periods sampled)" : ""));
  }

  {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, opt.max_random_period));
    std::optional<std::vector<Symbol>> bad_inv, bad_rot;
    for (std::size_t s = 0; s < opt.random_samples && !bad_inv && !bad_rot; ++s) {
      auto x = random_word(q, len(rng), rng);
      bad_inv = roundtrip_fails(a, x);
      PeriodicConfig px(a.alphabet(), x);
      if (!(a.apply(px.rotated(1)) == a.apply(px).rotated(1))) bad_rot = x;
    }
    rep.add("inverse.random", !bad_inv, bad_inv ? cells_text(*bad_inv) : "samples=" + std::to_string(opt.random_samples));
    rep.add("rotation.equivariant", !bad_rot, bad_rot ? cells_text(*bad_rot) : "samples=" + std::to_string(opt.random_samples));
  }

  if (a.fixes_zero()) {
    bool ok = true;
    for (std::size_t n = 1; n <= opt.max_period; ++n) {
      auto z = PeriodicConfig::zeros(a.alphabet(), n);
      ok = ok && a.apply(z) == z && a.apply_inverse(z) == z;
    }
    rep.add("zero.fixed", ok);
  }
  return rep;
}

}  // namespace beltca
