#include "beltca/neumann.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "beltca/relations.hpp"

namespace beltca {

NeumannSpec NeumannSpec::even_base() { return progression(6, 2); }

NeumannSpec NeumannSpec::progression(std::uint32_t start, std::uint32_t step) {
  NeumannSpec s;
  s.progressions.push_back({start, step});
  return s;
}

std::vector<std::uint32_t> NeumannSpec::terms(std::size_t count) const {
  for (const auto& p : progressions)
    if (p.start < 3 || p.step < 1) throw std::invalid_argument("Neumann sequence: bad progression");
  for (auto e : extra)
    if (e < 3) throw std::invalid_argument("Neumann sequence: terms must be at least 3");
  const std::set<std::uint32_t> skip(excluded.begin(), excluded.end());
  std::set<std::uint32_t> out;
  for (auto e : extra)
    if (!skip.count(e)) out.insert(e);
  // Each progression contributes at most `count` terms past the exclusions.
  for (const auto& p : progressions) {
    std::size_t got = 0;
    for (std::uint64_t v = p.start; got < count + skip.size(); v += p.step, ++got)
      if (!skip.count(static_cast<std::uint32_t>(v))) out.insert(static_cast<std::uint32_t>(v));
  }
  std::vector<std::uint32_t> v(out.begin(), out.end());
  if (v.size() > count) v.resize(count);
  return v;
}

std::string NeumannSpec::description() const {
  std::string s;
  for (const auto& p : progressions)
    s += (s.empty() ? "" : " + ") + std::string("prog(") + std::to_string(p.start) + "," + std::to_string(p.step) + ")";
  for (auto e : extra) s += (s.empty() ? "" : " + ") + std::to_string(e);
  for (auto e : excluded) s += " - " + std::to_string(e);
  return s.empty() ? "empty" : s;
}

NeumannAbstract neumann_abstract(const NeumannSpec& spec, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("neumann_abstract: depth must be positive");
  NeumannAbstract r;
  r.blocks = spec.terms(depth);
  if (r.blocks.size() < depth) throw std::invalid_argument("neumann_abstract: sequence has fewer terms than depth");
  std::uint32_t off = 0;
  std::vector<std::vector<std::uint32_t>> a_cycles, b_cycles;
  for (auto n : r.blocks) {
    r.offsets.push_back(off);
    a_cycles.push_back({off, off + 1, off + 2});
    std::vector<std::uint32_t> c(n);
    for (std::uint32_t j = 0; j < n; ++j) c[j] = off + j;
    b_cycles.push_back(std::move(c));
    off += n;
  }
  r.a = Permutation::from_cycles(off, a_cycles);
  r.b = Permutation::from_cycles(off, b_cycles);
  return r;
}

Permutation certificate_element(std::size_t n, std::size_t N) {
  if (N < 3) throw std::invalid_argument("certificate: degree must be at least 3");
  const Permutation a = Permutation::from_cycles(N, {{0, 1, 2}});
  std::vector<std::uint32_t> cyc(N);
  for (std::uint32_t j = 0; j < N; ++j) cyc[j] = j;
  const Permutation b = Permutation::from_cycles(N, {cyc});
  return commutator(a, conjugate(a, b.pow(static_cast<long>(n) + 3)));
}

bool certificate(std::size_t n, std::size_t m) {
  if (n < 2) throw std::invalid_argument("certificate: n must be at least 2");
  return !certificate_element(n, n + 5 + m).is_identity();
}

namespace {

Symbol track1(const NeumannCA& ca, Symbol s) { return ca.k == 1 ? s : ca.alphabet->track_value(s, 0); }

struct Geometry {
  std::uint32_t ell, k;
  AlphabetRef alphabet;
  Symbol t1(Symbol s) const { return k == 1 ? s : alphabet->track_value(s, 0); }
  Symbol t2(Symbol s) const { return k == 1 ? 0 : alphabet->track_value(s, 1); }
  Symbol with_t1(Symbol s, Symbol v) const { return k == 1 ? v : alphabet->with_track(s, 0, v); }
  Symbol with_t2(Symbol s, Symbol v) const { return k == 1 ? s : alphabet->with_track(s, 1, v); }

  /// Effective regions (start, length) inside one good run.
  std::vector<std::pair<std::size_t, std::size_t>> regions(std::span<const Symbol> run) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t L = run.size();
    std::size_t i = 0;
    while (i < L) {
      if (t2(run[i]) != 0) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < L && t2(run[j + 1]) == (t2(run[j]) + 1) % k) ++j;
      const std::size_t M = j - i + 1;
      if (M >= ell) out.emplace_back(i, ell + k * ((M - ell) / k));
      i = j + 1;
    }
    return out;
  }
};

enum class Op { A, AInv, B, BInv };

RunwiseMap neumann_map(const Geometry& g, Op op) {
  auto cut = [g](Symbol x, Symbol y) { return !head::linked(g.t1(x), g.t1(y)); };
  auto segment = [g, op](std::span<Symbol> run) {
    std::vector<Symbol> t;
    for (auto [s, E] : g.regions(run)) {
      t.resize(E);
      for (std::size_t c = 0; c < E; ++c) t[c] = g.t1(run[s + c]);
      auto p = head::position(t);
      if (!p) continue;
      const std::size_t two = 2 * E, last = two - 3;
      std::size_t q = *p;
      switch (op) {
        case Op::A: q = q == 0 ? 1 : q == 1 ? last : q == last ? 0 : q; break;
        case Op::AInv: q = q == 1 ? 0 : q == last ? 1 : q == 0 ? last : q; break;
        case Op::B: q = (q + 1) % two; break;
        case Op::BInv: q = (q + two - 1) % two; break;
      }
      if (q == *p) continue;
      head::write_position(t, q);
      for (std::size_t c = 0; c < E; ++c) run[s + c] = g.with_t1(run[s + c], t[c]);
    }
  };
  auto pad = [g](Symbol edge, std::size_t d, bool left) {
    const Symbol v = g.t1(edge);
    Symbol p = left ? (v == head::kLeft ? head::kLeft : head::kRight) : (v == head::kRight ? head::kRight : head::kLeft);
    Symbol s = g.with_t1(edge, p);
    if (g.k > 1) {
      const std::uint64_t w = g.t2(edge), k = g.k;
      s = g.with_t2(s, static_cast<Symbol>(left ? (w + k * d - d) % k : (w + d) % k));
    }
    return s;
  };
  const int R = static_cast<int>(g.ell + 2 * g.k + 4);
  return RunwiseMap(g.alphabet, cut, segment, pad, R, static_cast<std::size_t>(R) + g.k);
}

NeumannCA make_ca(std::uint32_t ell, std::uint32_t k) {
  if (ell < 3) throw std::invalid_argument("Neumann CA: ell must be at least 3");
  if (k < 1) throw std::invalid_argument("Neumann CA: k must be positive");
  AlphabetRef alpha = head::alphabet();
  if (k > 1) {
    std::vector<std::string> labels;
    for (std::uint32_t j = 1; j <= k; ++j) labels.push_back(std::to_string(j));
    alpha = Alphabet::product({alpha, Alphabet::labelled(labels)});
  }
  Geometry g{ell, k, alpha};
  return NeumannCA{ell, k, alpha, RunwiseAutomorphism("a", neumann_map(g, Op::A), neumann_map(g, Op::AInv)),
                   RunwiseAutomorphism("b", neumann_map(g, Op::B), neumann_map(g, Op::BInv))};
}

}  // namespace

GeneratorTable NeumannCA::table() const {
  GeneratorTable t(alphabet);
  t.add(a.as_generator());
  t.add(b.as_generator());
  return t;
}

NeumannSpec NeumannCA::realized() const { return NeumannSpec::progression(2 * ell, 2 * k); }

NeumannCA neumann_even_generators() { return make_ca(3, 1); }

NeumannCA neumann_progression_generators(std::uint32_t ell, std::uint32_t k) { return make_ca(ell, k); }

std::vector<std::pair<std::size_t, std::size_t>> neumann_effective_runs(const NeumannCA& ca,
                                                                       std::span<const Symbol> cells) {
  Geometry g{ca.ell, ca.k, ca.alphabet};
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = cells.size();
  std::size_t first_cut = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!head::linked(track1(ca, cells[i]), track1(ca, cells[(i + 1) % n]))) {
      first_cut = i;
      break;
    }
  if (first_cut == n) return out;
  std::size_t i = (first_cut + 1) % n;
  std::vector<Symbol> run;
  for (std::size_t done = 0; done < n;) {
    run.clear();
    const std::size_t start = i;
    while (true) {
      run.push_back(cells[i]);
      const std::size_t next = (i + 1) % n;
      const bool c = !head::linked(track1(ca, cells[i]), track1(ca, cells[next]));
      i = next;
      if (c) break;
    }
    for (auto [s, E] : g.regions(run)) out.emplace_back((start + s) % n, E);
    done += run.size();
  }
  return out;
}

GeneratorTable neumann_union_table(const std::vector<NeumannCA>& parts) {
  if (parts.empty()) throw std::invalid_argument("neumann_union_table: no parts");
  std::vector<AlphabetRef> factors;
  std::vector<std::size_t> first, count;
  std::size_t t = 0;
  for (const auto& p : parts) {
    factors.push_back(p.alphabet);
    first.push_back(t);
    count.push_back(p.k == 1 ? 1 : 2);
    t += count.back();
  }
  AlphabetRef alpha = Alphabet::product(factors);
  GeneratorTable table(alpha);
  auto combine = [=](bool use_a, bool forward) -> TapeMap {
    return [=](std::span<const Symbol> x) {
      std::vector<Symbol> y(x.begin(), x.end());
      std::vector<Symbol> proj(x.size());
      for (std::size_t j = 0; j < parts.size(); ++j) {
        for (std::size_t c = 0; c < x.size(); ++c)
          proj[c] = parts.size() == 1 ? x[c] : alpha->track_range_value(x[c], first[j], count[j]);
        const auto& g = use_a ? parts[j].a : parts[j].b;
        auto img = (forward ? g.forward() : g.backward()).apply(proj);
        for (std::size_t c = 0; c < x.size(); ++c)
          y[c] = parts.size() == 1 ? img[c] : alpha->with_track_range(y[c], first[j], count[j], img[c]);
      }
      return y;
    };
  };
  table.add(Generator{"a", alpha, combine(true, true), combine(true, false), false});
  table.add(Generator{"b", alpha, combine(false, true), combine(false, false), false});
  return table;
}

std::vector<Symbol> neumann_run_tape(const NeumannCA& ca, std::size_t E, std::optional<std::size_t> p) {
  Geometry g{ca.ell, ca.k, ca.alphabet};
  std::vector<Symbol> t(E, head::kRight);
  if (p) head::write_position(t, *p);
  std::vector<Symbol> out(E, ca.alphabet->zero());
  for (std::size_t c = 0; c < E; ++c) out[c] = g.with_t2(g.with_t1(out[c], t[c]), static_cast<Symbol>(c % ca.k));
  return out;
}

NeumannCompareReport neumann_compare(const NeumannCA& ca, std::size_t max_period, std::size_t L) {
  NeumannCompareReport r;
  const GeneratorTable table = ca.table();
  const auto words = reduced_words(table, L);
  r.words = words.size();
  std::vector<std::vector<std::vector<Symbol>>> tapes;
  std::vector<std::vector<Permutation>> models;
  for (std::size_t E = ca.ell; E <= max_period; E += ca.k) {
    NeumannLevel lv;
    lv.run_length = E;
    lv.block = 2 * E;
    std::vector<std::vector<Symbol>> ts;
    for (std::size_t p = 0; p < 2 * E; ++p) ts.push_back(neumann_run_tape(ca, E, p));
    auto extract = [&](const RunwiseAutomorphism& g) {
      std::vector<std::uint32_t> img(2 * E);
      for (std::size_t p = 0; p < 2 * E; ++p) {
        auto y = g.forward().apply(ts[p]);
        std::vector<Symbol> t(E);
        for (std::size_t c = 0; c < E; ++c) t[c] = track1(ca, y[c]);
        img[p] = static_cast<std::uint32_t>(*head::position(t));
      }
      return Permutation(std::move(img));
    };
    const Permutation pa = extract(ca.a), pb = extract(ca.b);
    // The model is rebuilt from the cycles alone.
    const Permutation ma = Permutation::from_cycles(2 * E, pa.cycles());
    const Permutation mb = Permutation::from_cycles(2 * E, pb.cycles());
    lv.a_cycles = ma.to_string();
    lv.b_cycles = mb.to_string();
    lv.a_order = ma.order();
    lv.b_order = mb.order();
    lv.group_order = PermGroup(2 * E, {ma, mb}).order();
    r.levels.push_back(lv);
    tapes.push_back(std::move(ts));
    models.push_back({ma, mb});
  }
  for (const auto& w : words) {
    bool ca_trivial = true, model_trivial = true;
    for (std::size_t l = 0; l < tapes.size(); ++l) {
      for (const auto& t : tapes[l]) ca_trivial = ca_trivial && apply_word(table, w, std::span<const Symbol>(t)) == t;
      model_trivial = model_trivial && word_permutation(models[l], w).is_identity();
    }
    r.trivial_ca += ca_trivial;
    r.trivial_abstract += model_trivial;
    if (ca_trivial != model_trivial && r.mismatches.size() < 20) r.mismatches.push_back(w.to_string(table));
  }
  return r;
}

}  // namespace beltca
