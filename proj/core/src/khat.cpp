#include "beltca/khat.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "beltca/relations.hpp"
#include "beltca/serialize.hpp"

namespace beltca {

namespace {

constexpr int kKhatRadius = 4;

Symbol track_of(const Alphabet& a, Symbol s, std::size_t t) { return a.has_tracks() ? a.track_value(s, t) : s; }
Symbol set_track(const Alphabet& a, Symbol s, std::size_t t, Symbol v) { return a.has_tracks() ? a.with_track(s, t, v) : v; }

RunwiseMap khat_map(std::size_t k, std::size_t i, int step) {
  AlphabetRef a = khat_alphabet(k);
  auto cut = [a, k](Symbol x, Symbol y) {
    for (std::size_t t = 0; t < k; ++t)
      if (!head::linked(track_of(*a, x, t), track_of(*a, y, t))) return true;
    return false;
  };
  auto segment = [a, i, step](std::span<Symbol> seg) {
    const std::size_t L = seg.size();
    std::vector<std::vector<Symbol>> tracks(i, std::vector<Symbol>(L));
    std::optional<std::size_t> p0;
    for (std::size_t t = 0; t < i; ++t) {
      for (std::size_t c = 0; c < L; ++c) tracks[t][c] = track_of(*a, seg[c], t);
      auto p = head::position(tracks[t]);
      if (!p || (t > 0 && *p != *p0)) return;
      p0 = p;
    }
    const long two_l = static_cast<long>(2 * L);
    const auto np = static_cast<std::size_t>(((static_cast<long>(*p0) + step) % two_l + two_l) % two_l);
    for (std::size_t t = 0; t < i; ++t) {
      head::write_position(tracks[t], np);
      for (std::size_t c = 0; c < L; ++c) seg[c] = set_track(*a, seg[c], t, tracks[t][c]);
    }
  };
  auto pad = [a, k](Symbol edge, std::size_t, bool left) {
    Symbol s = edge;
    for (std::size_t t = 0; t < k; ++t) {
      const Symbol v = track_of(*a, edge, t);
      Symbol p;
      if (left) p = v == head::kLeft ? head::kLeft : head::kRight;
      else p = v == head::kRight ? head::kRight : head::kLeft;
      s = set_track(*a, s, t, p);
    }
    return s;
  };
  return RunwiseMap(a, cut, segment, pad, kKhatRadius, kKhatRadius);
}

}  // namespace

AlphabetRef khat_alphabet(std::size_t k) {
  if (k == 0) throw std::invalid_argument("khat: k must be positive");
  return Alphabet::product(std::vector<AlphabetRef>(k, head::alphabet()));
}

RunwiseAutomorphism khat_generator(std::size_t k, std::size_t i) {
  if (i < 1 || i > k) throw std::invalid_argument("khat: generator index out of range");
  return RunwiseAutomorphism("g" + std::to_string(i), khat_map(k, i, 2), khat_map(k, i, -2));
}

GeneratorTable khat_table(std::size_t k) {
  GeneratorTable t(khat_alphabet(k));
  for (std::size_t i = 1; i <= k; ++i) t.add(khat_generator(k, i).as_generator());
  return t;
}

std::vector<Symbol> khat_track(std::span<const Symbol> cells, std::size_t k, std::size_t t) {
  AlphabetRef a = khat_alphabet(k);
  std::vector<Symbol> out(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) out[c] = track_of(*a, cells[c], t);
  return out;
}

std::uint32_t k_point_index(std::size_t n, std::span<const long> coords) {
  std::uint64_t idx = 0, mul = 1;
  for (long c : coords) {
    const long m = static_cast<long>(n);
    idx += static_cast<std::uint64_t>(((c % m) + m) % m) * mul;
    mul *= n;
  }
  return static_cast<std::uint32_t>(idx);
}

std::vector<long> k_point_coords(std::size_t k, std::size_t n, std::uint32_t index) {
  std::vector<long> c(k);
  for (std::size_t t = 0; t < k; ++t) {
    c[t] = static_cast<long>(index % n);
    index /= static_cast<std::uint32_t>(n);
  }
  return c;
}

Permutation k_abstract_generator(std::size_t k, std::size_t n, std::size_t i) {
  if (n == 0) throw std::invalid_argument("k_abstract_generator: n must be positive");
  if (i < 1 || i > k) throw std::invalid_argument("k_abstract_generator: index out of range");
  std::uint64_t size = 1;
  for (std::size_t t = 0; t < k; ++t) {
    size *= n;
    if (size > (1u << 26)) throw std::length_error("k_abstract_generator: degree too large");
  }
  std::vector<std::uint32_t> img(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    auto c = k_point_coords(k, n, x);
    bool zero = true;
    for (std::size_t t = 0; t + 1 < i; ++t) zero = zero && c[t] == 0;
    if (zero) c[i - 1] = (c[i - 1] + 1) % static_cast<long>(n);
    img[x] = k_point_index(n, c);
  }
  return Permutation(std::move(img));
}

Permutation k_abstract_action(std::size_t k, std::size_t n, const GroupWord& w) {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back(k_abstract_generator(k, n, i));
  return word_permutation(gens, w);
}

std::vector<long> k_abstract_apply(std::size_t k, std::size_t n, const GroupWord& w, std::vector<long> point) {
  if (point.size() != k) throw std::invalid_argument("k_abstract_apply: arity mismatch");
  const long m = static_cast<long>(n);
  for (const auto& s : w.steps()) {
    const std::size_t i = s.generator + 1;
    if (i > k) throw std::invalid_argument("k_abstract_apply: generator out of range");
    bool zero = true;
    for (std::size_t t = 0; t + 1 < i; ++t) zero = zero && point[t] == 0;
    if (!zero) continue;
    point[i - 1] += s.exponent;
    if (m > 0) point[i - 1] = ((point[i - 1] % m) + m) % m;
  }
  return point;
}

std::size_t SegmentSpace::size() const {
  std::size_t s = 1;
  for (std::size_t t = 0; t < k; ++t) s *= 2 * L + 2;
  return s;
}

std::vector<Symbol> SegmentSpace::cells(std::size_t index) const {
  AlphabetRef a = khat_alphabet(k);
  std::vector<Symbol> out(L, a->zero());
  std::vector<Symbol> track(L);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t opt = index % (2 * L + 2);
    index /= 2 * L + 2;
    if (opt < 2 * L) head::write_position(track, opt);
    else std::fill(track.begin(), track.end(), opt == 2 * L ? head::kRight : head::kLeft);
    for (std::size_t c = 0; c < L; ++c) out[c] = set_track(*a, out[c], t, track[c]);
  }
  return out;
}

std::size_t SegmentSpace::index_of(std::span<const Symbol> cells) const {
  AlphabetRef a = khat_alphabet(k);
  if (cells.size() != L) throw std::invalid_argument("SegmentSpace: length mismatch");
  std::size_t idx = 0, mul = 1;
  std::vector<Symbol> track(L);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t c = 0; c < L; ++c) track[c] = track_of(*a, cells[c], t);
    auto p = head::position(track);
    const std::size_t opt = p ? *p : (track[0] == head::kRight ? 2 * L : 2 * L + 1);
    idx += opt * mul;
    mul *= 2 * L + 2;
  }
  return idx;
}

std::vector<Permutation> khat_segment_action(std::size_t k, std::size_t L) {
  SegmentSpace space{k, L};
  std::vector<Permutation> out;
  for (std::size_t i = 1; i <= k; ++i) {
    auto g = khat_generator(k, i);
    std::vector<std::uint32_t> img(space.size());
    for (std::size_t x = 0; x < space.size(); ++x)
      img[x] = static_cast<std::uint32_t>(space.index_of(g.forward().apply(space.cells(x))));
    out.emplace_back(std::move(img));
  }
  return out;
}

ConjugacyReport conjugacy_check(std::size_t k, std::size_t n_min, std::size_t n_max) {
  ConjugacyReport r;
  for (std::size_t L = std::max<std::size_t>(n_min, 1); L <= n_max; ++L) {
    SegmentSpace space{k, L};
    const auto perms = khat_segment_action(k, L);
    for (std::size_t x = 0; x < space.size(); ++x) {
      // option per track; first defect track (0-based) = number of tracks simulated
      std::vector<std::size_t> opt(k);
      std::size_t rest = x;
      for (std::size_t t = 0; t < k; ++t) {
        opt[t] = rest % (2 * L + 2);
        rest /= 2 * L + 2;
      }
      std::size_t j = 0;
      while (j < k && opt[j] < 2 * L && (j == 0 || opt[j] % 2 == opt[0] % 2)) ++j;
      (j == k ? r.runs_checked : r.quotient_checked)++;
      auto phi = [&](const std::vector<std::size_t>& o) {
        std::vector<long> c(j);
        for (std::size_t t = 0; t < j; ++t) {
          const long h = static_cast<long>(o[t] / 2);
          const long v = t + 1 < j ? h - static_cast<long>(o[t + 1] / 2) : h;
          c[t] = ((v % static_cast<long>(L)) + static_cast<long>(L)) % static_cast<long>(L);
        }
        return c;
      };
      const auto before = phi(opt);
      for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t y = perms[i - 1](static_cast<std::uint32_t>(x));
        std::vector<std::size_t> oy(k);
        std::size_t ry = y;
        for (std::size_t t = 0; t < k; ++t) {
          oy[t] = ry % (2 * L + 2);
          ry /= 2 * L + 2;
        }
        bool ok;
        if (i > j) {
          ok = y == x;
        } else {
          GroupWord gi({Letter{i - 1, 1}});
          auto expect = k_abstract_apply(j, L, gi, before);
          auto got = phi(oy);
          ok = got == expect;
          for (std::size_t t = j; t < k; ++t) ok = ok && oy[t] == opt[t];
          for (std::size_t t = 0; t < j; ++t) ok = ok && oy[t] % 2 == opt[t] % 2 && oy[t] < 2 * L;
        }
        if (!ok && r.failures.size() < 20)
          r.failures.push_back("L=" + std::to_string(L) + " segment=" + std::to_string(x) + " g" + std::to_string(i));
      }
    }
  }
  return r;
}

GroupWord torsion_word(std::size_t n, const GeneratorTable& table) {
  if (n < 1) throw std::invalid_argument("torsion_word: n must be positive");
  const GroupWord g1({Letter{*table.find("g1"), 1}});
  const GroupWord g2({Letter{*table.find("g2"), 1}});
  const GroupWord g3({Letter{*table.find("g3"), 1}});
  const GroupWord h = conjugate(g2, g1.pow(static_cast<int>(n)));
  return conjugate(g3, h) * g3.inverse();
}

TorsionReport torsion_witness(std::size_t n, std::size_t ell_min, std::size_t ell_max, std::size_t max_period) {
  if (n < 2) throw std::invalid_argument("torsion_witness: n must be at least 2");
  const GeneratorTable table = khat_table(3);
  const GroupWord w = torsion_word(n, table);
  TorsionReport r;
  r.n = n;
  r.word = w.to_string(table);

  const Permutation at_n = k_abstract_action(3, n, w);
  for (std::uint32_t x = 0; x < at_n.degree(); ++x)
    if (at_n(x) != x) {
      r.nontrivial_at_n = true;
      r.moved_point = k_point_coords(3, n, x);
      r.moved_image = k_point_coords(3, n, at_n(x));
      break;
    }
  for (std::size_t l = ell_min; l <= ell_max; ++l)
    (k_abstract_action(3, l, w).is_identity() ? r.trivial_levels : r.nontrivial_levels).push_back(l);

  for (std::size_t L = 1; L <= max_period; ++L) {
    const Permutation p = word_permutation(khat_segment_action(3, L), w);
    if (p.is_identity()) continue;
    r.run_orders.emplace_back(L, p.order());
    r.order = std::lcm(r.order, p.order());
  }
  return r;
}

MarkedBallReport marked_ball_compare(std::size_t k, const std::vector<std::size_t>& n_list, std::size_t L) {
  if (n_list.empty()) throw std::invalid_argument("marked_ball_compare: empty level list");
  const GeneratorTable table = khat_table(k);
  const auto words = reduced_words(table, L);
  std::size_t nmax = 0;
  for (auto n : n_list) nmax = std::max(nmax, n);

  std::vector<std::vector<Permutation>> runs, levels;
  for (std::size_t len = 1; len <= nmax; ++len) runs.push_back(khat_segment_action(k, len));
  for (auto n : n_list) {
    std::vector<Permutation> g;
    for (std::size_t i = 1; i <= k; ++i) g.push_back(k_abstract_generator(k, n, i));
    levels.push_back(std::move(g));
  }

  MarkedBallReport r;
  r.words = words.size();
  for (const auto& w : words) {
    bool ca = true, ab = true;
    for (const auto& g : runs) ca = ca && word_permutation(g, w).is_identity();
    for (const auto& g : levels) ab = ab && word_permutation(g, w).is_identity();
    r.trivial_ca += ca;
    r.trivial_abstract += ab;
    if (ca && !ab && r.only_ca.size() < 20) r.only_ca.push_back(w.to_string(table));
    if (ab && !ca && r.only_abstract.size() < 20) r.only_abstract.push_back(w.to_string(table));
  }
  return r;
}

bool k_trivial_over_z(std::size_t k, const GroupWord& w) {
  const long B = static_cast<long>(w.length()) + 1;
  std::vector<long> p(k, -B);
  while (true) {
    if (k_abstract_apply(k, 0, w, p) != p) return false;
    std::size_t t = 0;
    while (t < k && p[t] == B) p[t++] = -B;
    if (t == k) return true;
    ++p[t];
  }
}

RelationSuiteReport khat_relation_suite(std::size_t k, std::size_t ball, std::size_t max_period,
                                        std::size_t witness_period) {
  const GeneratorTable table = khat_table(k);
  const std::size_t top = std::max(max_period, witness_period);
  std::vector<std::vector<Permutation>> runs;
  for (std::size_t len = 1; len <= top; ++len) runs.push_back(khat_segment_action(k, len));
  const auto words = reduced_words(table, ball);

  // w1 = w2 over Z iff w1^-1 w2 fixes the box of radius |w1^-1 w2| + 1.
  const long B = 2 * static_cast<long>(ball) + 1;
  std::vector<std::vector<long>> box;
  std::vector<long> p(k, -B);
  for (bool more = true; more;) {
    box.push_back(p);
    std::size_t t = 0;
    while (t < k && p[t] == B) p[t++] = -B;
    more = t < k;
    if (more) ++p[t];
  }
  std::map<std::vector<long>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<long> key;
    for (const auto& q : box) {
      auto img = k_abstract_apply(k, 0, words[i], q);
      key.insert(key.end(), img.begin(), img.end());
    }
    classes[std::move(key)].push_back(i);
  }

  auto action = [&](std::size_t i, std::size_t len) { return word_permutation(runs[len - 1], words[i]); };
  auto moved_tape = [&](const Permutation& a, const Permutation& b, std::size_t len) {
    for (std::uint32_t s = 0; s < a.degree(); ++s)
      if (a(s) != b(s)) return format_periodic(PeriodicConfig(table.alphabet(), SegmentSpace{k, len}.cells(s)));
    return std::string();
  };

  RelationSuiteReport r;
  std::map<std::vector<std::uint32_t>, std::size_t> signatures;
  std::vector<std::size_t> reps;
  for (const auto& [key, members] : classes) {
    const std::size_t rep = members.front();
    reps.push_back(rep);
    for (std::size_t m = 1; m < members.size(); ++m) {
      RelationCheck c{"relation", words[rep].to_string(table) + " = " + words[members[m]].to_string(table),
                      CheckStatus::Pass, {}};
      for (std::size_t len = 1; len <= max_period; ++len) {
        const auto a = action(rep, len), b = action(members[m], len);
        if (!(a == b)) {
          c.status = CheckStatus::Fail;
          c.witness = moved_tape(a, b, len);
          break;
        }
      }
      r.checks.push_back(std::move(c));
    }
    std::vector<std::uint32_t> sig;
    for (std::size_t len = 1; len <= witness_period; ++len) {
      const auto a = action(rep, len);
      sig.insert(sig.end(), a.images().begin(), a.images().end());
    }
    ++signatures[std::move(sig)];
  }
  // Distinct elements need distinct actions on run contents of length <= witness_period.
  for (std::size_t rep : reps) {
    std::vector<std::uint32_t> sig;
    for (std::size_t len = 1; len <= witness_period; ++len) {
      const auto a = action(rep, len);
      sig.insert(sig.end(), a.images().begin(), a.images().end());
    }
    const bool unique = signatures[sig] == 1;
    r.checks.push_back({"non-relation", "class of " + (words[rep].empty() ? std::string("1") : words[rep].to_string(table)),
                        unique ? CheckStatus::Pass : CheckStatus::Inconclusive,
                        unique ? "separated from every other class up to run length " + std::to_string(witness_period)
                               : "shares its action with another class"});
  }
  return r;
}

}  // namespace beltca
