#include "beltca/pointy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace beltca {

GeneratorTable PointyAction::table() const {
  GeneratorTable t(alphabet);
  for (std::size_t i = 0; i < generators.size(); ++i) t.add(generators[i], i < involutions.size() && involutions[i]);
  return t;
}

std::vector<Symbol> PointyAction::core() const {
  auto w = special_point.word();
  return {w.begin(), w.end()};
}

std::size_t atomic_tracks(const Alphabet& a) { return a.has_tracks() ? a.track_count() : 1; }

namespace {

bool tracks_match(const AlphabetRef& target, std::size_t first, std::size_t count, const AlphabetRef& sub) {
  if (atomic_tracks(*sub) != count) return false;
  for (std::size_t t = 0; t < count; ++t) {
    const AlphabetRef& a = target->track(first + t);
    const AlphabetRef& b = sub->has_tracks() ? sub->track(t) : sub;
    if (!same_alphabet(a, b)) return false;
  }
  return true;
}

SlidingBlockCode lift_code(const SlidingBlockCode& f, const AlphabetRef& target, std::size_t first, std::size_t count) {
  // The lifted window must contain cell 0, which carries the other tracks.
  const Window fw = f.window();
  const Window lw{std::min(fw.left, 0), std::max(fw.right, 0)};
  const std::size_t centre = static_cast<std::size_t>(-lw.left), skip = static_cast<std::size_t>(fw.left - lw.left);
  SlidingBlockCode lifted(target, lw, [f, target, first, count, centre, skip](std::span<const Symbol> w) {
    const std::size_t len = static_cast<std::size_t>(f.window().size());
    std::vector<Symbol> proj(len);
    for (std::size_t i = 0; i < len; ++i) proj[i] = target->track_range_value(w[skip + i], first, count);
    return target->with_track_range(w[centre], first, count, f.local(proj));
  });
  if (auto t = lifted.tabulate(1u << 20)) return *t;
  return lifted;
}

}  // namespace

Automorphism lift_to_tracks(const Automorphism& f, const AlphabetRef& target, std::size_t first, std::size_t count) {
  if (!target->has_tracks()) {
    if (first != 0 || count != 1) throw std::invalid_argument("lift_to_tracks: track range out of range");
    require_same_alphabet(target, f.alphabet(), "lift_to_tracks");
    return f;
  }
  if (first + count > target->track_count() || !tracks_match(target, first, count, f.alphabet()))
    throw std::invalid_argument("lift_to_tracks: '" + f.name() + "' does not match the track range");
  return Automorphism(f.name(), lift_code(f.forward(), target, first, count), lift_code(f.backward(), target, first, count),
                      f.fixes_zero());
}

PointyAction lamplighter_action(const std::vector<std::uint32_t>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("lamplighter: no moduli");
  for (auto m : moduli)
    if (m < 2) throw std::invalid_argument("lamplighter: modulus must be at least 2");
  std::vector<AlphabetRef> tracks{Alphabet::plain(2)};
  for (auto m : moduli) tracks.push_back(Alphabet::plain(m));
  AlphabetRef a = Alphabet::product(tracks);

  PointyAction p;
  p.name = "lamplighter(";
  for (std::size_t j = 0; j < moduli.size(); ++j) p.name += (j ? "," : "") + std::to_string(moduli[j]);
  p.name += ")";
  p.alphabet = a;
  p.generators.push_back(lift_to_tracks(Automorphism::shift(tracks[0]).renamed("T"), a, 0, 1));
  p.involutions.push_back(false);
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    const std::uint32_t m = moduli[j];
    std::vector<Symbol> fwd(a->size()), bwd(a->size());
    for (Symbol s = 0; s < a->size(); ++s) {
      const Symbol bit = a->track_value(s, 0), v = a->track_value(s, j + 1);
      fwd[s] = a->with_track(s, j + 1, (v + bit) % m);
      bwd[s] = a->with_track(s, j + 1, (v + m - bit) % m);
    }
    const std::string name = moduli.size() == 1 ? "F" : "F" + std::to_string(j + 1);
    p.generators.emplace_back(name, SlidingBlockCode::cellwise(a, fwd), SlidingBlockCode::cellwise(a, bwd));
    p.involutions.push_back(m == 2);
  }
  std::vector<Symbol> x0(a->track_count(), 0);
  x0[0] = 1;
  p.special_point = FiniteConfig::point(a, a->encode(x0));
  return p;
}

PointyAction product_action(const PointyAction& p, const PointyAction& q) {
  AlphabetRef a = Alphabet::product({p.alphabet, q.alphabet});
  const std::size_t tp = atomic_tracks(*p.alphabet), tq = atomic_tracks(*q.alphabet);
  PointyAction r;
  r.name = "product(" + p.name + "," + q.name + ")";
  r.alphabet = a;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    r.generators.push_back(lift_to_tracks(p.generators[i], a, 0, tp));
    r.involutions.push_back(i < p.involutions.size() && p.involutions[i]);
  }
  std::set<std::string> taken;
  for (const auto& g : r.generators) taken.insert(g.name());
  for (std::size_t i = 0; i < q.generators.size(); ++i) {
    // Clashing names get primes: T, F, T', F'.
    std::string name = q.generators[i].name();
    while (taken.count(name)) name += "'";
    taken.insert(name);
    r.generators.push_back(lift_to_tracks(q.generators[i], a, tp, tq).renamed(name));
    r.involutions.push_back(i < q.involutions.size() && q.involutions[i]);
  }
  const auto& xp = p.special_point;
  const auto& xq = q.special_point;
  long lo = std::min(xp.is_zero() ? xq.offset() : xp.offset(), xq.is_zero() ? xp.offset() : xq.offset());
  long hi = std::max(xp.end(), xq.end());
  std::vector<Symbol> cells;
  for (long i = lo; i < hi; ++i)
    cells.push_back(a->with_track_range(a->with_track_range(a->zero(), 0, tp, xp.at(i)), tp, tq, xq.at(i)));
  r.special_point = FiniteConfig(a, lo, std::move(cells));
  r.kind = p.kind == PointyKind::Pointy && q.kind == PointyKind::Pointy ? PointyKind::Pointy : PointyKind::WeaklyPointy;
  return r;
}

PointyAction shift_action(const AlphabetRef& alphabet) {
  PointyAction p;
  p.name = "shift";
  p.alphabet = alphabet;
  p.generators.push_back(Automorphism::shift(alphabet).renamed("S"));
  p.involutions.push_back(false);
  p.special_point = FiniteConfig::point(alphabet, alphabet->zero() == 0 ? 1 : 0);
  return p;
}

PointyAction trivial_action(const AlphabetRef& alphabet, FiniteConfig x0) {
  require_same_alphabet(alphabet, x0.alphabet(), "trivial_action");
  PointyAction p;
  p.name = "trivial";
  p.alphabet = alphabet;
  p.special_point = std::move(x0);
  p.kind = PointyKind::WeaklyPointy;
  return p;
}

Automorphism track_swap(const AlphabetRef& alphabet, const std::vector<std::size_t>& perm) {
  if (!alphabet->has_tracks()) throw std::invalid_argument("track_swap: alphabet has no track structure");
  const std::size_t n = alphabet->track_count();
  if (perm.size() != n) throw std::invalid_argument("track_swap: permutation size does not match track count");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    if (perm[t] >= n || inv[perm[t]] != n) throw std::invalid_argument("track_swap: not a permutation");
    inv[perm[t]] = t;
    if (!same_alphabet(alphabet->track(t), alphabet->track(perm[t])))
      throw std::invalid_argument("track_swap: permuted tracks have different alphabets");
  }
  std::vector<Symbol> fwd(alphabet->size()), bwd(alphabet->size());
  for (Symbol s = 0; s < alphabet->size(); ++s) {
    auto in = alphabet->decode(s);
    std::vector<Symbol> a(n), b(n);
    for (std::size_t t = 0; t < n; ++t) {
      a[perm[t]] = in[t];
      b[inv[t]] = in[t];
    }
    fwd[s] = alphabet->encode(a);
    bwd[s] = alphabet->encode(b);
  }
  std::string name = "swap(";
  for (std::size_t t = 0; t < n; ++t) name += (t ? " " : "") + std::to_string(perm[t]);
  name += ")";
  return Automorphism(name, SlidingBlockCode::cellwise(alphabet, fwd), SlidingBlockCode::cellwise(alphabet, bwd));
}

std::string lamplighter_normal_form(const std::vector<std::uint32_t>& moduli, const GroupWord& w) {
  long pos = 0;
  std::map<long, std::vector<std::uint32_t>> lamps;
  for (const auto& step : w.steps()) {
    if (step.generator == 0) {
      pos -= step.exponent;
      continue;
    }
    const std::size_t j = step.generator - 1;
    if (j >= moduli.size()) throw std::invalid_argument("lamplighter_normal_form: generator out of range");
    auto& v = lamps[pos];
    v.resize(moduli.size(), 0);
    const std::uint32_t m = moduli[j];
    v[j] = (v[j] + (step.exponent > 0 ? 1 : m - 1)) % m;
  }
  std::string s = "t=" + std::to_string(pos);
  for (const auto& [at, v] : lamps) {
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    s += " " + std::to_string(at) + ":";
    for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  }
  return s;
}

FiniteConfig apply_word(const std::vector<Automorphism>& gens, const GroupWord& w, const FiniteConfig& x) {
  FiniteConfig y = x;
  for (const auto& step : w.steps()) {
    const auto& g = gens.at(step.generator);
    y = step.exponent > 0 ? g.apply(y) : g.apply_inverse(y);
  }
  return y;
}

FreeOrbitReport free_orbit_check(const PointyAction& p, std::size_t ball_radius,
                                 const std::function<std::string(const GroupWord&)>& normal_form) {
  const GeneratorTable table = p.table();
  const auto words = reduced_words(table, ball_radius);
  FreeOrbitReport r;
  r.words = words.size();
  std::map<std::pair<long, std::vector<Symbol>>, std::size_t> image_id;
  std::map<std::string, std::size_t> element_id;
  std::vector<std::size_t> img(words.size()), elt(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto y = apply_word(p.generators, words[i], p.special_point);
    img[i] = image_id.try_emplace({y.offset(), {y.word().begin(), y.word().end()}}, image_id.size()).first->second;
    elt[i] = element_id.try_emplace(normal_form(words[i]), element_id.size()).first->second;
  }
  r.image_classes = image_id.size();
  r.element_classes = element_id.size();
  constexpr std::size_t kMaxReported = 20;
  std::map<std::size_t, std::size_t> first_by_image, first_by_element;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [ii, fresh_i] = first_by_image.try_emplace(img[i], i);
    if (!fresh_i && elt[ii->second] != elt[i] && r.unexpected_collisions.size() < kMaxReported &&
        seen_pairs.emplace(elt[ii->second], elt[i]).second)
      r.unexpected_collisions.push_back({words[ii->second].to_string(table), words[i].to_string(table)});
    auto [ei, fresh_e] = first_by_element.try_emplace(elt[i], i);
    if (!fresh_e && img[ei->second] != img[i] && r.unexpected_separations.size() < kMaxReported)
      r.unexpected_separations.push_back({words[ei->second].to_string(table), words[i].to_string(table)});
  }
  return r;
}

WeakPointyReport weak_pointy_check(const PointyAction& p, std::size_t ball_radius, std::size_t n_min, std::size_t n_max) {
  const GeneratorTable table = p.table();
  const auto words = reduced_words(table, ball_radius);
  const auto u = p.core();
  WeakPointyReport r;
  r.words = words.size();
  for (const auto& w : words) {
    if (!(apply_word(p.generators, w, p.special_point) == p.special_point)) continue;
    ++r.stabilizing;
    for (std::size_t n = std::max(n_min, u.size()); n <= n_max; ++n) {
      std::vector<Symbol> tape(n, p.alphabet->zero());
      std::copy(u.begin(), u.end(), tape.begin());
      if (apply_word(table, w, std::span<const Symbol>(tape)) != tape) r.violations.push_back({w.to_string(table), n});
    }
  }
  return r;
}

}  // namespace beltca
