#include "beltca_cli/suites.hpp"

#include <algorithm>
#include <numeric>

#include "beltca/embed_check.hpp"
#include "beltca/enumerate.hpp"
#include "beltca/error.hpp"
#include "beltca/khat.hpp"
#include "beltca/serialize.hpp"

namespace beltca::cli {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "afo", "belt", "pointy", "wreath", "khat", "neumann"};
  return names;
}

namespace {

struct Params {
  VerifyParams v;
  std::size_t k = 2;
};

Params resolve(const System& s, const SuiteOptions& opt) {
  Params p{s.verify, s.khat_k ? s.khat_k : 2};
  if (opt.period) p.v.period = *opt.period;
  if (opt.ball) p.v.ball = *opt.ball;
  if (opt.seed) p.v.seed = *opt.seed;
  if (opt.k) p.k = *opt.k;
  return p;
}

std::string join(const std::vector<std::string>& xs, const char* sep = "; ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

void core_suite(const System& s, const Params& p, Report& r) {
  if (s.automorphisms.empty()) {
    r.add("core", "automorphisms", Status::Skip, "none declared");
    return;
  }
  VerifyOptions o;
  o.max_period = p.v.period;
  o.random_samples = p.v.samples;
  o.max_random_period = p.v.sample_period;
  o.seed = p.v.seed;
  for (const auto& a : s.automorphisms) r.add("core", a.name(), verify_automorphism(a, o));
}

void afo_suite(const System& s, const Params& p, Report& r) {
  if (s.afos.empty()) {
    r.add("afo", "afos", Status::Skip, "none declared");
    return;
  }
  for (const auto& e : s.afos) {
    const auto& afo = e.afo;
    const auto& safe = afo.safe();
    const std::string n = afo.name();
    const auto sr = check_safety(*afo.alphabet(), safe.words(), safe.threshold());
    r.add("afo", n + ".safety", sr.safe,
          sr.collision ? format_periodic(PeriodicConfig(afo.alphabet(), sr.collision->tape))
                       : "n0=" + std::to_string(safe.threshold()));
    for (std::size_t i = 0; i < e.expect.size(); ++i) {
      const auto& [in, want] = e.expect[i];
      const auto got = apply_afo(afo, in);
      r.add("afo", n + ".expect" + std::to_string(i + 1), got == want,
            format_periodic(in) + " -> " + format_periodic(got) + (got == want ? "" : " want " + format_periodic(want)));
    }
    const AfoSpec inv = afo_inverse(afo);
    std::optional<std::vector<Symbol>> bad;
    std::size_t skipped = 0;
    for (std::size_t len = 1; len <= p.v.period && !bad; ++len) {
      if (!checked_power(afo.alphabet()->size(), len, p.v.max_tapes)) {
        ++skipped;
        continue;
      }
      std::vector<Symbol> y(len), z(len);
      for_each_word(afo.alphabet()->size(), len, [&](std::span<const Symbol> x) {
        afo.apply(x, y);
        inv.apply(y, z);
        if (!std::equal(z.begin(), z.end(), x.begin())) bad.emplace(x.begin(), x.end());
        return !bad;
      });
    }
    r.add("afo", n + ".inverse", !bad,
          bad ? format_periodic(PeriodicConfig(afo.alphabet(), *bad))
              : "periods<=" + std::to_string(p.v.period) + (skipped ? " skipped=" + std::to_string(skipped) : ""));
    std::string sparse_bad;
    for (std::size_t len = 1; len <= 12 && sparse_bad.empty(); ++len) {
      const auto m = moved_count(afo, len);
      if (m > afo.word_count() * len) sparse_bad = "n=" + std::to_string(len) + " moved=" + std::to_string(m);
    }
    r.add("afo", n + ".sparsity", sparse_bad.empty(), sparse_bad.empty() ? "n<=12" : sparse_bad);
  }
}

void belt_suite(const System& s, const Params& p, Report& r) {
  EvaluatorCheckOptions o;
  o.max_period = p.v.period;
  o.samples = p.v.samples;
  o.sample_period = p.v.sample_period;
  o.seed = p.v.seed;
  o.max_tapes = std::min<std::uint64_t>(p.v.max_tapes, 1u << 20);
  bool any = false;
  for (const auto& e : s.embedded) {
    r.add("belt", e.name() + ".R" + std::to_string(e.radius()), verify_evaluators(evaluator_pair(e), o));
    any = true;
  }
  for (const auto& g : s.runwise) {
    r.add("belt", g.name() + ".R" + std::to_string(g.radius()), verify_evaluators(evaluator_pair(g), o));
    any = true;
  }
  // Simulation fidelity on single-cell points.
  for (const auto& a : s.automorphisms) {
    if (!a.fixes_zero() || a.alphabet()->size() > 64) continue;
    std::string bad;
    for (Symbol c = 0; c < a.alphabet()->size() && bad.empty(); ++c) {
      if (c == a.alphabet()->zero()) continue;
      const auto x = FiniteConfig::point(a.alphabet(), c);
      if (!simulate_check(a, x)) bad = format_finite(x);
    }
    r.add("belt", "belt(" + a.name() + ").simulate", bad.empty(), bad);
    any = true;
  }
  if (!any) r.add("belt", "embedded", Status::Skip, "no embedded generators");
}

void pointy_suite(const System& s, const Params& p, Report& r) {
  if (!s.pointy || !s.normal_form) {
    r.add("pointy", "action", Status::Skip, "no gallery action");
    return;
  }
  const auto fo = free_orbit_check(*s.pointy, p.v.ball, s.normal_form);
  std::vector<std::string> bad;
  for (const auto& m : fo.unexpected_collisions) bad.push_back("collision " + m.a + " ~ " + m.b);
  for (const auto& m : fo.unexpected_separations) bad.push_back("separation " + m.a + " ~ " + m.b);
  r.add("pointy", "free_orbit.L" + std::to_string(p.v.ball), fo.passed(),
        fo.passed() ? "words=" + std::to_string(fo.words) + " elements=" + std::to_string(fo.element_classes)
                    : join(bad));
  const auto wp = weak_pointy_check(*s.pointy, p.v.ball, p.v.n_min, p.v.n_max);
  std::vector<std::string> viol;
  for (const auto& v : wp.violations) viol.push_back(v.word + " n=" + std::to_string(v.n));
  r.add("pointy", "weak_pointy.L" + std::to_string(p.v.ball), wp.passed(),
        wp.passed() ? "stabilizing=" + std::to_string(wp.stabilizing) : join(viol));
}

// Wall/wall runs >^a c <^b whose top track is x0's core with base value 1 at its first cell.
std::vector<PeriodicConfig> designated_tapes(const WreathSpec& w) {
  const auto u = w.top().core();
  const std::uint32_t qt = w.top().alphabet->size();
  std::vector<PeriodicConfig> out;
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      std::vector<std::vector<Symbol>> cells;  // cells[factor][i]
      for (const auto& f : w.factors()) {
        std::vector<Symbol> t(a, f.belt.left_wall());
        for (std::size_t i = 0; i < u.size(); ++i) t.push_back(f.belt.pair(u[i] + (i == 0 ? qt : 0), 0));
        t.insert(t.end(), b, f.belt.right_wall());
        cells.push_back(std::move(t));
      }
      std::vector<Symbol> tape(cells[0].size());
      for (std::size_t i = 0; i < tape.size(); ++i) {
        if (cells.size() == 1) {
          tape[i] = cells[0][i];
          continue;
        }
        std::vector<Symbol> vals;
        for (const auto& c : cells) vals.push_back(c[i]);
        tape[i] = w.alphabet()->encode(vals);
      }
      out.emplace_back(w.alphabet(), std::move(tape));
    }
  return out;
}

// Base commutation, finite orders, and U^t != U for top generators moving x0.
Presentation generic_wreath_presentation(const WreathSpec& w) {
  const auto& t = w.table();
  const std::size_t top = w.top_generator_count(), F = w.factors().size();
  std::vector<GroupWord> top_words;
  for (const auto& word : reduced_words(t, 2))
    if (std::all_of(word.letters().begin(), word.letters().end(), [&](const Letter& l) { return l.generator < top; }))
      top_words.push_back(word);
  auto base = [&](std::size_t j) { return GroupWord({{top + j, 1}}); };
  Presentation p;
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t j = i; j < F; ++j)
      for (const auto& word : top_words) {
        if (i == j && word.empty()) continue;
        p.relations.push_back(commutator(base(i), conjugate(base(j), word)));
      }
  for (std::size_t j = 0; j < F; ++j)
    if (w.factors()[j].modulus) p.relations.push_back(base(j).pow(static_cast<int>(w.factors()[j].modulus)));
  const auto& x0 = w.top().special_point;
  for (std::size_t g = 0; g < top; ++g) {
    const GroupWord tg({{g, 1}});
    if (apply_word(w.top().generators, tg, x0) == x0) continue;
    for (std::size_t j = 0; j < F; ++j) p.non_relations.push_back(base(j).inverse() * conjugate(base(j), tg));
  }
  return p;
}

void wreath_suite(const System& s, const Params& p, Report& r) {
  if (!s.wreath) {
    r.add("wreath", "table", Status::Skip, "no wreath assembly");
    return;
  }
  const Presentation pres = s.presentation ? *s.presentation : generic_wreath_presentation(*s.wreath);
  std::vector<PeriodicConfig> extra = designated_tapes(*s.wreath);
  for (const auto& [name, x] : s.configurations)
    if (same_alphabet(x.alphabet(), s.table.alphabet())) extra.push_back(x);
  r.add("wreath", "presentation", relation_suite(s.table, pres, p.v.period, extra, p.v.max_tapes));

  const auto scene = s.configuration("scene");
  if (!s.zz2z || !scene) return;
  const auto ex = assemble_example_zz2z();
  const auto word = GroupWord::parse("(FL)^3 ULUFRD^4LFR", ex.table);
  const auto effects = zz2z_run_effects(ex, *scene, word);
  auto describe = [](const RunEffect& e) {
    return "start=" + std::to_string(e.run.start) + " len=" + std::to_string(e.run.length) + " " +
           to_string(e.run.left) + "/" + to_string(e.run.right) +
           " shift=" + (e.marker_shift ? std::to_string(*e.marker_shift) : "none");
  };
  auto find = [&](auto pred) -> std::optional<RunEffect> {
    for (const auto& e : effects)
      if (pred(e)) return e;
    return std::nullopt;
  };
  auto wall_wall = [](const RunEffect& e) { return e.run.left == Boundary::Wall && e.run.right == Boundary::Wall; };
  std::vector<std::string> all;
  for (const auto& e : effects) all.push_back(describe(e));
  const auto plus = find([&](const RunEffect& e) { return wall_wall(e) && e.marker_shift == 1L; });
  const auto minus = find([&](const RunEffect& e) { return wall_wall(e) && e.marker_shift == -4L; });
  const auto top = find([&](const RunEffect& e) { return !wall_wall(e) && e.top_only && e.marker_fixed; });
  r.add("wreath", "scene.bottom_plus_1", plus.has_value(), plus ? describe(*plus) : join(all));
  r.add("wreath", "scene.bottom_minus_4", minus.has_value(), minus ? describe(*minus) : join(all));
  r.add("wreath", "scene.top_only", top.has_value(), top ? describe(*top) : join(all));
}

void khat_suite(const System& s, const Params& p, Report& r) {
  (void)s;
  const std::size_t k = p.k;
  if (k < 1 || k > 4) throw ParseError("--k must be in 1..4");
  const std::string K = "k" + std::to_string(k);
  const auto conj = conjugacy_check(k, p.v.n_min, std::min<std::size_t>(p.v.n_max, k <= 2 ? 8 : 5));
  r.add("khat", K + ".conjugacy", conj.passed(),
        conj.passed() ? "runs=" + std::to_string(conj.runs_checked) + " quotient=" + std::to_string(conj.quotient_checked)
                      : join(conj.failures));
  std::vector<std::size_t> levels(p.v.period);
  std::iota(levels.begin(), levels.end(), 1);
  const auto mb = marked_ball_compare(k, levels, p.v.ball);
  r.add("khat", K + ".marked_ball.L" + std::to_string(p.v.ball), mb.agree(),
        mb.agree() ? "words=" + std::to_string(mb.words) + " trivial=" + std::to_string(mb.trivial_ca)
                   : "ca_only: " + join(mb.only_ca) + " abstract_only: " + join(mb.only_abstract));
  if (k == 2) r.add("khat", "zwrz", khat_relation_suite(2, p.v.ball, p.v.period, p.v.witness_period));
  if (k == 3) {
    const auto t = torsion_witness(2, 8, 12, std::min<std::size_t>(p.v.witness_period, 8));
    r.add("khat", "torsion.nontrivial_at_2", t.nontrivial_at_n, t.word);
    r.add("khat", "torsion.trivial_8_12", t.nontrivial_levels.empty() && t.trivial_levels.size() == 5,
          "trivial_levels=" + std::to_string(t.trivial_levels.size()));
    r.add("khat", "torsion.order", Status::Pass, "order=" + std::to_string(t.order));
  }
}

void neumann_suite(const System& s, const Params& p, Report& r) {
  const NeumannCA ca = s.neumann ? *s.neumann : neumann_even_generators();
  const std::string N = "l" + std::to_string(ca.ell) + "k" + std::to_string(ca.k);
  const std::size_t P = std::max<std::size_t>(p.v.period, ca.ell);
  const auto rep = neumann_compare(ca, P, p.v.ball);
  r.add("neumann", N + ".compare.L" + std::to_string(p.v.ball), rep.passed(),
        rep.passed() ? "words=" + std::to_string(rep.words) + " trivial=" + std::to_string(rep.trivial_ca)
                     : join(rep.mismatches));
  for (const auto& lv : rep.levels) {
    const bool ok = lv.a_order == 3 && lv.b_order == lv.block;
    r.add("neumann", N + ".level" + std::to_string(lv.run_length), ok,
          "a=" + lv.a_cycles + " b_order=" + std::to_string(lv.b_order) +
              (lv.group_order ? " order=" + std::to_string(*lv.group_order) : ""));
  }
  const auto table = ca.table();
  Presentation cube;
  cube.relations.push_back(GroupWord::parse("a^3", table));
  r.add("neumann", N, relation_suite(table, cube, std::max<std::size_t>(p.v.period, 8), {}, p.v.max_tapes));
  for (std::size_t n = 2; n <= 4; ++n) {
    r.add("neumann", "certificate.n" + std::to_string(n) + ".nontrivial", certificate(n, 0),
          "Sym(" + std::to_string(n + 5) + ")");
    bool trivial = true;
    for (std::size_t m = 1; m <= 5; ++m) trivial = trivial && !certificate(n, m);
    r.add("neumann", "certificate.n" + std::to_string(n) + ".trivial_above", trivial,
          "Sym(" + std::to_string(n + 6) + ".." + std::to_string(n + 10) + ")");
  }
}

}  // namespace

void run_suite(const std::string& suite, const System& s, const SuiteOptions& opt, Report& out) {
  const Params p = resolve(s, opt);
  if (suite == "core") core_suite(s, p, out);
  else if (suite == "afo") afo_suite(s, p, out);
  else if (suite == "belt") belt_suite(s, p, out);
  else if (suite == "pointy") pointy_suite(s, p, out);
  else if (suite == "wreath") wreath_suite(s, p, out);
  else if (suite == "khat") khat_suite(s, p, out);
  else if (suite == "neumann") neumann_suite(s, p, out);
  else throw ParseError("unknown suite '" + suite + "'");
}

}  // namespace beltca::cli
