#include "beltca/wreath.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <stdexcept>

namespace beltca {

std::uint32_t BaseSignature::modulus(std::size_t j) const {
  if (j >= factors()) throw std::out_of_range("BaseSignature: factor out of range");
  return j < free_rank ? 0 : moduli[j - free_rank];
}

std::string BaseSignature::description() const {
  std::string s;
  for (std::size_t j = 0; j < factors(); ++j) {
    if (j) s += " x ";
    s += modulus(j) == 0 ? "Z" : "Z" + std::to_string(modulus(j));
  }
  return s.empty() ? "trivial" : s;
}

AlphabetRef base_factor_alphabet(const PointyAction& top, std::uint32_t m) {
  if (m == 1) throw std::invalid_argument("base factor: modulus must be 0 (free) or at least 2");
  return Alphabet::product({top.alphabet, Alphabet::plain(m == 0 ? 2 : m)});
}

namespace {

// (u_c, value at cell 0) over Σ_top × T; the value track is the last one.
Word anchored_word(const AlphabetRef& alpha, const std::vector<Symbol>& u, Symbol value) {
  Word w(u.begin(), u.end());
  if (!w.empty()) w[0] = alpha->with_track(w[0], alpha->track_count() - 1, value);
  return w;
}

std::vector<Symbol> checked_core(const PointyAction& top) {
  auto u = top.core();
  if (u.empty()) throw std::invalid_argument("wreath: special point is zero");
  return u;
}

}  // namespace

BaseGenerator build_finite_base_generator(const PointyAction& top, std::uint32_t m, std::uint32_t increment,
                                          bool doubling) {
  if (m < 2) throw std::invalid_argument("finite base generator: modulus must be at least 2");
  const auto u = checked_core(top);
  const AlphabetRef alpha = base_factor_alphabet(top, m);
  std::vector<Word> words;
  std::vector<std::size_t> pi;
  for (Symbol a = 0; a < m; ++a) {
    words.push_back(anchored_word(alpha, u, a));
    pi.push_back((a + increment) % m);
  }
  const std::size_t n0 = minimal_safe_threshold(*alpha, words);
  const std::string name = "add" + std::to_string(increment % m) + "mod" + std::to_string(m);
  AfoSpec afo(SafeWordSet(alpha, std::move(words), n0), std::move(pi), std::vector<long>(m, 0), name);
  auto embedded = embed_afo(afo, doubling);
  return {name, std::move(afo), std::move(embedded)};
}

BaseGenerator build_free_base_generator(const PointyAction& top, bool doubling) {
  const auto u = checked_core(top);
  const AlphabetRef alpha = base_factor_alphabet(top, 0);
  std::vector<Word> words{anchored_word(alpha, u, 1)};
  const std::size_t n0 = minimal_safe_threshold(*alpha, words);
  AfoSpec afo(SafeWordSet(alpha, std::move(words), n0), {0}, {1}, "shift");
  auto embedded = embed_afo(afo, doubling);
  return {"shift", std::move(afo), std::move(embedded)};
}

namespace {

WreathFactor make_factor(const PointyAction& top, std::uint32_t m, bool doubling) {
  const AlphabetRef sigma = base_factor_alphabet(top, m);
  const std::size_t tt = atomic_tracks(*top.alphabet);
  std::vector<EmbeddedAutomorphism> gens;
  for (const auto& g : top.generators) gens.push_back(embed_automorphism(lift_to_tracks(g, sigma, 0, tt), doubling));
  BaseGenerator base = m == 0 ? build_free_base_generator(top, doubling) : build_finite_base_generator(top, m, 1, doubling);
  BeltAlphabet belt(sigma);
  return WreathFactor{m, sigma, belt, std::move(gens), std::move(base)};
}

// One generator per factor (nullptr = identity there), over the product of the Γ_j.
Generator product_generator(const std::string& name, const AlphabetRef& alpha, std::vector<const Generator*> parts,
                            bool involution) {
  auto run = [alpha, parts](bool forward) -> TapeMap {
    return [alpha, parts, forward](std::span<const Symbol> x) {
      std::vector<Symbol> y(x.begin(), x.end()), proj(x.size());
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!parts[j]) continue;
        for (std::size_t c = 0; c < x.size(); ++c) proj[c] = alpha->track_value(x[c], j);
        const auto img = forward ? parts[j]->forward(proj) : parts[j]->backward(proj);
        for (std::size_t c = 0; c < x.size(); ++c) y[c] = alpha->with_track(y[c], j, img[c]);
      }
      return y;
    };
  };
  return Generator{name, alpha, run(true), run(false), involution};
}

}  // namespace

WreathSpec::WreathSpec(PointyAction top, BaseSignature base, bool doubling)
    : top_(std::move(top)), base_(std::move(base)), table_(nullptr) {
  if (base_.factors() == 0) throw std::invalid_argument("wreath: base signature is empty");
  for (auto m : base_.moduli)
    if (m < 2) throw std::invalid_argument("wreath: finite modulus must be at least 2");
  for (std::size_t j = 0; j < base_.factors(); ++j) factors_.push_back(make_factor(top_, base_.modulus(j), doubling));

  const std::size_t F = factors_.size();
  auto involution = [&](std::size_t i) { return i < top_.involutions.size() && top_.involutions[i]; };
  auto base_name = [&](std::size_t j) { return F == 1 ? std::string("U") : "U" + std::to_string(j + 1); };

  if (F == 1) {
    const auto& f = factors_.front();
    table_ = GeneratorTable(f.belt.gamma());
    for (std::size_t i = 0; i < f.top.size(); ++i) {
      auto g = f.top[i].as_generator(top_.generators[i].name());
      g.involution = involution(i);
      table_.add(std::move(g));
    }
    table_.add(f.base.embedded.as_generator(base_name(0)));
    return;
  }

  std::vector<AlphabetRef> gammas;
  for (const auto& f : factors_) gammas.push_back(f.belt.gamma());
  const AlphabetRef alpha = Alphabet::product(gammas);
  table_ = GeneratorTable(alpha);
  // Generators are held by value inside the closures.
  for (std::size_t i = 0; i < top_.generators.size(); ++i) {
    auto held = std::make_shared<std::vector<Generator>>();
    for (const auto& f : factors_) held->push_back(f.top[i].as_generator());
    std::vector<const Generator*> parts;
    for (const auto& g : *held) parts.push_back(&g);
    auto gen = product_generator(top_.generators[i].name(), alpha, parts, involution(i));
    auto fwd = gen.forward, bwd = gen.backward;
    gen.forward = [held, fwd](std::span<const Symbol> x) { return fwd(x); };
    gen.backward = [held, bwd](std::span<const Symbol> x) { return bwd(x); };
    table_.add(std::move(gen));
  }
  for (std::size_t j = 0; j < F; ++j) {
    auto held = std::make_shared<Generator>(factors_[j].base.embedded.as_generator());
    std::vector<const Generator*> parts(F, nullptr);
    parts[j] = held.get();
    auto gen = product_generator(base_name(j), alpha, parts, false);
    auto fwd = gen.forward, bwd = gen.backward;
    gen.forward = [held, fwd](std::span<const Symbol> x) { return fwd(x); };
    gen.backward = [held, bwd](std::span<const Symbol> x) { return bwd(x); };
    table_.add(std::move(gen));
  }
}

ExampleZZ2Z assemble_example_zz2z() {
  WreathSpec spec(lamplighter_action({2}), BaseSignature{1, {}});
  const auto& f = spec.factors().front();
  GeneratorTable t(f.belt.gamma());
  // T moves the position bit one cell left.
  t.add(f.top[0].as_generator("L"));
  t.add(f.top[0].inverse().as_generator("R"));
  auto flip = f.top[1].as_generator("F");
  flip.involution = true;
  t.add(std::move(flip));
  t.add(f.base.embedded.as_generator("U"));
  t.add(f.base.embedded.inverse().as_generator("D"));
  return ExampleZZ2Z{std::move(spec), std::move(t)};
}

namespace {

struct TopElement {
  long pos = 0;
  std::set<long> lamps;
  bool operator<(const TopElement& o) const { return std::tie(pos, lamps) < std::tie(o.pos, o.lamps); }
};

TopElement zz2z_top(const GeneratorTable& table, const GroupWord& w) {
  const auto L = table.find("L"), R = table.find("R"), F = table.find("F");
  if (!L || !R || !F) throw std::invalid_argument("zz2z: table lacks L, R or F");
  TopElement e;
  for (const auto& s : w.steps()) {
    if (s.generator == *L) e.pos -= s.exponent;
    else if (s.generator == *R) e.pos += s.exponent;
    else if (s.generator == *F) {
      if (!e.lamps.erase(e.pos)) e.lamps.insert(e.pos);
    }
  }
  return e;
}

}  // namespace

std::string zz2z_top_normal_form(const GeneratorTable& table, const GroupWord& w) {
  const TopElement e = zz2z_top(table, w);
  std::string s = "pos=" + std::to_string(e.pos) + " lamps={";
  bool first = true;
  for (long l : e.lamps) {
    s += (first ? "" : ",") + std::to_string(l);
    first = false;
  }
  return s + "}";
}

std::vector<GroupWord> zz2z_top_words(const GeneratorTable& table, std::size_t max_len) {
  const std::size_t L = *table.find("L"), R = *table.find("R"), F = *table.find("F");
  const std::size_t gens[3] = {L, R, F};
  std::vector<GroupWord> out;
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : level)
      for (std::size_t g : gens) {
        if (!w.empty()) {
          const std::size_t b = w.back();
          if ((b == L && g == R) || (b == R && g == L) || (b == F && g == F)) continue;
        }
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    for (const auto& v : next) {
      std::vector<Letter> letters;
      for (std::size_t g : v) letters.push_back({g, 1});
      out.emplace_back(std::move(letters));
    }
    level = std::move(next);
  }
  return out;
}

Presentation zz2z_presentation(const GeneratorTable& table, std::size_t max_top_len, std::size_t transport_len,
                               std::size_t max_transport) {
  auto g = [&](const char* n) { return GroupWord({{*table.find(n), 1}}); };
  const GroupWord L = g("L"), R = g("R"), F = g("F"), U = g("U"), D = g("D");
  Presentation p;
  p.relations.push_back(F * F);
  p.relations.push_back(L * R);
  p.relations.push_back(U * D);
  for (int k = 1; k <= 3; ++k) p.relations.push_back(commutator(F, conjugate(F, L.pow(k))));
  for (const auto& w : zz2z_top_words(table, max_top_len)) p.relations.push_back(commutator(U, conjugate(U, w)));

  std::map<TopElement, std::vector<GroupWord>> classes;
  for (const auto& w : zz2z_top_words(table, transport_len)) classes[zz2z_top(table, w)].push_back(w);
  std::size_t added = 0;
  for (const auto& [e, ws] : classes) {
    if (ws.size() < 2 || added >= max_transport) continue;
    p.relations.push_back(conjugate(U, ws[0]) * conjugate(U, ws[1]).inverse());
    ++added;
  }
  return p;
}

std::optional<std::size_t> belt_track_position(const BeltAlphabet& belt, std::span<const Symbol> run,
                                               std::size_t track) {
  const auto tape = belt_encode(belt, run);
  const auto& base = belt.base();
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < tape.size(); ++i) {
    const Symbol v = base->has_tracks() ? base->track_value(tape[i], track) : tape[i];
    if (v == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

std::optional<long> belt_track_displacement(const BeltAlphabet& belt, std::span<const Symbol> before,
                                            std::span<const Symbol> after, std::size_t track) {
  if (before.size() != after.size()) throw std::invalid_argument("belt_track_displacement: run lengths differ");
  const auto a = belt_track_position(belt, before, track), b = belt_track_position(belt, after, track);
  if (!a || !b) return std::nullopt;
  const long n = 2 * static_cast<long>(before.size());
  long d = ((static_cast<long>(*b) - static_cast<long>(*a)) % n + n) % n;
  if (d > n / 2) d -= n;
  return d;
}

std::vector<RunEffect> zz2z_run_effects(const ExampleZZ2Z& ex, const PeriodicConfig& x, const GroupWord& w) {
  const BeltAlphabet belt = ex.belt();
  const std::size_t U = *ex.table.find("U"), D = *ex.table.find("D");
  std::vector<Letter> top_letters;
  for (const auto& l : w.letters())
    if (l.generator != U && l.generator != D) top_letters.push_back(l);
  const auto y = apply_word(ex.table, w, x);
  const auto z = apply_word(ex.table, GroupWord(std::move(top_letters)), x);
  const auto& sig = belt.base();
  auto marker = [&](Symbol s) -> Symbol {
    if (!belt.is_pair(s)) return 0;
    return sig->track_value(belt.top(s), ExampleZZ2Z::kMarkerTrack) * 2 +
           sig->track_value(belt.bottom(s), ExampleZZ2Z::kMarkerTrack);
  };
  std::vector<RunEffect> out;
  const std::size_t n = x.period();
  for (const auto& r : decompose(belt, x).runs) {
    std::vector<Symbol> before, after;
    RunEffect e{r, std::nullopt, true, true};
    for (std::size_t i = 0; i < r.length; ++i) {
      const std::size_t c = (r.start + i) % n;
      before.push_back(x.vec()[c]);
      after.push_back(y.vec()[c]);
      if (y.vec()[c] != z.vec()[c]) e.top_only = false;
      if (marker(y.vec()[c]) != marker(x.vec()[c])) e.marker_fixed = false;
    }
    e.marker_shift = belt_track_displacement(belt, before, after, ExampleZZ2Z::kMarkerTrack);
    out.push_back(e);
  }
  return out;
}

}  // namespace beltca
