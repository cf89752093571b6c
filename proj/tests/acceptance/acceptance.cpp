// Acceptance suite: one PASS/FAIL line per criterion, with its time limit.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "beltca/afo.hpp"
#include "beltca/belt.hpp"
#include "beltca/embed_check.hpp"
#include "beltca/enumerate.hpp"
#include "beltca/khat.hpp"
#include "beltca/neumann.hpp"
#include "beltca/pointy.hpp"
#include "beltca/relations.hpp"
#include "beltca/serialize.hpp"
#include "beltca/wreath.hpp"
#include "beltca_cli/system.hpp"
#include "oracles.hpp"

using namespace beltca;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string sample(const std::string& name) { return std::string(BELTCA_SAMPLES_DIR) + "/" + name; }

std::string join(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string failures(const RelationSuiteReport& r, std::size_t limit = 3) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (c.status != CheckStatus::Pass && out.size() < limit) out.push_back(c.kind + " " + c.word + " " + c.witness);
  return join(out);
}

// 1. The five mappings of the two-word AFO u1 = 1, u2 = 2.
Outcome afo_fidelity() {
  Outcome o;
  auto a = Alphabet::plain(3);
  const AfoSpec f(SafeWordSet(a, {{1}, {2}}, 1), {1, 0}, {1, -1}, "f");
  const std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> cases{
      {{1}, {2}},
      {{2, 0}, {0, 1}},
      {{1, 2}, {1, 2}},
      {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}},
      {{0, 0, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 0, 0}},
  };
  for (const auto& [in, want] : cases) {
    const auto got = apply_afo(f, PeriodicConfig(a, in)).vec();
    o.expect(got == want, format_periodic(PeriodicConfig(a, in)) + " -> " + format_periodic(PeriodicConfig(a, got)));
  }
  // The shipped sample carries the same expectations.
  const auto s = cli::load_system(sample("afo_example.json"));
  std::size_t n = 0;
  for (const auto& e : s.afos)
    for (const auto& [in, want] : e.expect) {
      o.expect(apply_afo(e.afo, in) == want, e.afo.name() + " on " + format_periodic(in));
      ++n;
    }
  o.expect(n == 5, "sample expectation count " + std::to_string(n));
  o.note("5/5 mappings exact");
  return o;
}

// 2. Safety thresholds for {101} and single letters.
Outcome safety() {
  Outcome o;
  auto a = Alphabet::plain(2);
  const auto r4 = check_safety(*a, {{1, 0, 1}}, 4);
  o.expect(!r4.safe, "{101} unsafe at 4");
  o.expect(r4.collision && r4.collision->tape == std::vector<Symbol>{1, 0, 1, 0}, "collision tape 1010");
  o.expect(oracle::safety_collision({{1, 0, 1}}, 4).has_value(), "oracle collision at 4");
  o.expect(check_safety(*a, {{1, 0, 1}}, 5).safe, "{101} safe at 5");
  o.expect(oracle::safe({{1, 0, 1}}, 5), "oracle safe at 5");
  for (std::uint32_t q = 2; q <= 5; ++q) {
    auto b = Alphabet::plain(q);
    for (Symbol c = 1; c < q; ++c) o.expect(check_safety(*b, {{c}}, 1).safe, "{" + std::to_string(c) + "} 1-safe");
    std::vector<Word> all;
    for (Symbol c = 1; c < q; ++c) all.push_back({c});
    o.expect(check_safety(*b, all, 1).safe, "all letters of plain(" + std::to_string(q) + ") 1-safe");
  }
  if (r4.collision) o.note("collision " + format_periodic(PeriodicConfig(a, r4.collision->tape)));
  return o;
}

// 3. Belt embeddings of id, shift and a radius-1 involution over {0,1,2}.
Outcome belt_compiler() {
  Outcome o;
  const auto s = cli::load_system(sample("belt_sigma3.json"));
  o.expect(s.automorphisms.size() == 3, "three automorphisms in belt_sigma3.json");
  EvaluatorCheckOptions opt;
  opt.max_period = 5;
  opt.samples = 1000;
  opt.sample_period = 40;
  opt.seed = 3;
  for (const auto& f : s.automorphisms) {
    // The involution must be one, and of radius 1.
    if (f.name() == "V") {
      o.expect(f.radius() == 1, "V has radius 1");
      std::mt19937_64 rng(5);
      for (int i = 0; i < 200; ++i) {
        const PeriodicConfig x(f.alphabet(), random_word(3, 1 + rng() % 12, rng));
        o.expect(f.apply(f.apply(x)) == x, "V^2 = id");
      }
    }
    const auto e = embed_automorphism(f);
    const auto rep = verify_evaluators(evaluator_pair(e), opt);
    for (const auto& c : rep.entries) o.expect(c.passed, e.name() + "." + c.check + " " + c.detail);
    o.note(e.name() + " R=" + std::to_string(e.radius()));
  }
  return o;
}

// 4. Z wr Z inside K^_2: relations and separations, against the abstract normal form.
Outcome khat_zwrz() {
  Outcome o;
  const auto table = khat_table(2);
  const auto rep = khat_relation_suite(2, 6, 8, 12);
  o.expect(rep.passed(), "relation suite: " + failures(rep));

  // Independent oracle: Z wr Z normal form over the same ball.
  const auto words = reduced_words(table, 6);
  std::map<oracle::ZwrZ, std::size_t> classes;
  for (const auto& w : words) ++classes[oracle::zwrz(w)];
  std::size_t want_relations = 0;
  for (const auto& [e, n] : classes) want_relations += n - 1;
  std::size_t relations = 0, separated = 0;
  for (const auto& c : rep.checks) {
    if (c.kind == "relation") {
      ++relations;
      const auto eq = c.word.find(" = ");
      const auto lhs = GroupWord::parse(c.word.substr(0, eq), table), rhs = GroupWord::parse(c.word.substr(eq + 3), table);
      o.expect(oracle::zwrz(lhs) == oracle::zwrz(rhs), "oracle disagrees on " + c.word);
    } else {
      separated += c.status == CheckStatus::Pass;
    }
  }
  o.expect(relations == want_relations, "relation count " + std::to_string(relations) + " vs " + std::to_string(want_relations));
  o.expect(separated == classes.size(), "separated classes " + std::to_string(separated) + " vs " + std::to_string(classes.size()));

  // Brute force in the finite quotients K_2^n, n <= 12: same partition of the ball.
  std::map<std::vector<std::uint32_t>, std::set<oracle::ZwrZ>> by_action;
  std::map<oracle::ZwrZ, std::set<std::vector<std::uint32_t>>> by_element;
  for (const auto& w : words) {
    std::vector<std::uint32_t> sig;
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto p = k_abstract_action(2, n, w);
      sig.insert(sig.end(), p.images().begin(), p.images().end());
    }
    const auto e = oracle::zwrz(w);
    by_action[sig].insert(e);
    by_element[e].insert(sig);
  }
  for (const auto& [sig, es] : by_action) o.expect(es.size() == 1, "K_2^n (n<=12) merges distinct elements");
  for (const auto& [e, sigs] : by_element) o.expect(sigs.size() == 1, "K_2^n (n<=12) splits one element");
  o.note(std::to_string(words.size()) + " words, " + std::to_string(classes.size()) + " elements, " +
         std::to_string(relations) + " relations");
  return o;
}

// 5. Generator table of Z wr (Z_2 wr Z) and the shipped scene.
Outcome zz2z() {
  Outcome o;
  const auto ex = assemble_example_zz2z();
  const auto& t = ex.table;
  o.expect(t.alphabet()->size() == 66, "alphabet ({0,1}^3)^2 + {<,>}");
  const auto s = cli::load_system(sample("zz2z_scene.json"));
  std::vector<PeriodicConfig> extra;
  for (const auto& [name, x] : s.configurations) extra.push_back(x);
  const auto pres = zz2z_presentation(t, 3);
  const auto rep = relation_suite(t, pres, 4, extra);
  o.expect(rep.passed(), "relation suite: " + failures(rep));
  o.expect(rep.count(CheckStatus::Fail) == 0, "no failed relations");

  const auto scene = s.configuration("scene");
  o.expect(scene.has_value(), "scene scene shipped");
  if (scene) {
    const auto word = GroupWord::parse("(FL)^3 ULUFRD^4LFR", t);
    const auto effects = zz2z_run_effects(ex, *scene, word);
    bool plus = false, minus = false, top = false;
    for (const auto& e : effects) {
      const bool ww = e.run.left == Boundary::Wall && e.run.right == Boundary::Wall;
      plus |= ww && e.marker_shift == 1L;
      minus |= ww && e.marker_shift == -4L;
      top |= !ww && e.top_only && e.marker_fixed;
    }
    o.expect(plus, "bottom marker +1");
    o.expect(minus, "bottom marker -4");
    o.expect(top, "top-only run");
  }
  o.note(std::to_string(pres.relations.size()) + " relations, " + std::to_string(pres.non_relations.size()) +
         " non-relations at period <= 4");
  return o;
}

// 6. Torsion element of K^_3.
Outcome khat_torsion() {
  Outcome o;
  const auto r = torsion_witness(2, 8, 12, 12);
  o.expect(r.nontrivial_at_n, "nontrivial in K_3^2");
  // The exhibited point really moves, checked with the abstract action.
  const auto t = khat_table(3);
  const auto w = torsion_word(2, t);
  o.expect(r.moved_point.size() == 3 && k_abstract_apply(3, 2, w, r.moved_point) == r.moved_image &&
               r.moved_image != r.moved_point,
           "moved point");
  o.expect(r.nontrivial_levels.empty() && r.trivial_levels.size() == 5, "trivial in K_3^l, l = 8..12");
  for (std::size_t l = 8; l <= 12; ++l) o.expect(k_abstract_action(3, l, w).is_identity(), "K_3^" + std::to_string(l));
  std::uint64_t lcm = 1;
  for (const auto& [len, ord] : r.run_orders) lcm = std::lcm(lcm, ord);
  o.expect(r.order >= 1 && r.order == lcm, "finite order on periods <= 12");
  std::ostringstream pt;
  for (auto v : r.moved_point) pt << v << ",";
  o.note("w=" + r.word + " moved (" + pt.str().substr(0, pt.str().size() - 1) + ") order=" + std::to_string(r.order));
  return o;
}

// 7. Neumann certificate and the even-base CA.
Outcome neumann() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto c = certificate_element(n, n + 5);
    o.expect(!c.is_identity(), "nontrivial in Sym(" + std::to_string(n + 5) + ")");
    // Direct recomputation: a = (0 1 2), b = (0 .. N-1).
    for (std::size_t N = n + 5; N <= n + 10; ++N) {
      std::vector<std::uint32_t> all(N);
      std::iota(all.begin(), all.end(), 0u);
      const auto a = oracle::cycle(N, {0, 1, 2}), b = oracle::cycle(N, all);
      const auto y = oracle::power(b, static_cast<long>(n + 3));
      const auto ay = oracle::compose(oracle::inverse(y), oracle::compose(a, y));
      const auto com = oracle::compose(oracle::compose(oracle::inverse(a), oracle::inverse(ay)), oracle::compose(a, ay));
      const bool trivial = oracle::is_identity(com);
      o.expect(trivial == (N != n + 5), "n=" + std::to_string(n) + " N=" + std::to_string(N));
      const auto mine = certificate_element(n, N);
      o.expect(std::vector<std::uint32_t>(mine.images().begin(), mine.images().end()) == com,
               "certificate_element(" + std::to_string(n) + "," + std::to_string(N) + ")");
    }
  }
  const auto ca = neumann_even_generators();
  const auto table = ca.table();
  Presentation cube;
  cube.relations.push_back(GroupWord::parse("a^3", table));
  const auto rep = relation_suite(table, cube, 8);
  o.expect(rep.passed(), "a^3 = id on periods <= 8: " + failures(rep));
  std::vector<std::string> orders;
  for (std::size_t E = 3; E <= 8; ++E) {
    std::uint64_t lcm = 1;
    for (std::size_t p = 0; p < 2 * E; ++p) {
      const PeriodicConfig x(ca.alphabet, neumann_run_tape(ca, E, p));
      auto y = ca.b.apply(x);
      std::uint64_t steps = 1;
      while (!(y == x) && steps <= 4 * E) {
        y = ca.b.apply(y);
        ++steps;
      }
      lcm = std::lcm(lcm, steps);
    }
    o.expect(lcm == 2 * E, "b order at run length " + std::to_string(E) + " is " + std::to_string(lcm));
    orders.push_back(std::to_string(E) + ":" + std::to_string(lcm));
  }
  const auto cmp = neumann_compare(ca, 8, 4);
  for (const auto& lv : cmp.levels)
    if (lv.run_length >= 3) o.expect(lv.b_order == 2 * lv.run_length, "extracted b order at " + std::to_string(lv.run_length));
  o.note("b orders " + join(orders, " "));
  return o;
}

// 8. Free orbit of x0 under the lamplighter action.
Outcome free_orbit() {
  Outcome o;
  const auto p = lamplighter_action({2});
  const auto r = free_orbit_check(p, 8, [](const GroupWord& w) {
    const auto e = oracle::lamplighter(w, 0, 1);
    std::string s = std::to_string(e.cursor);
    for (long l : e.lamps) s += " " + std::to_string(l);
    return s;
  });
  o.expect(r.passed(), std::to_string(r.unexpected_collisions.size()) + " collisions, " +
                           std::to_string(r.unexpected_separations.size()) + " separations");
  o.expect(r.image_classes == r.element_classes, "image classes = element classes");
  o.note(std::to_string(r.words) + " words, " + std::to_string(r.element_classes) + " elements");
  return o;
}

// 9. Sparsity of every shipped AFO and one retraction count.
Outcome sparsity() {
  Outcome o;
  std::vector<AfoSpec> afos;
  for (const auto& entry : std::filesystem::directory_iterator(BELTCA_SAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const auto s = cli::load_system(entry.path().string());
    for (const auto& e : s.afos) afos.push_back(e.afo);
    if (s.wreath)
      for (const auto& f : s.wreath->factors()) afos.push_back(f.base.afo);
  }
  o.expect(afos.size() >= 3, "shipped AFOs found");
  for (const auto& afo : afos)
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto m = moved_count(afo, n);
      o.expect(m <= afo.word_count() * n, afo.name() + " n=" + std::to_string(n) + " moved=" + std::to_string(m));
    }

  // S f V f on Σ^{Z_6}, counted tape by tape.
  const auto ex = cli::load_system(sample("afo_example.json"));
  const auto b3 = cli::load_system(sample("belt_sigma3.json"));
  const AfoSpec& f = ex.afos.front().afo;
  const Automorphism& V = b3.automorphisms.at(2);
  const auto S = Automorphism::shift(f.alphabet());
  const std::vector<ProductFactor> factors{S, f, V, f};
  const std::size_t n = 6;
  const auto rc = retraction_count(factors, n);
  std::uint64_t differ = 0;
  std::vector<Symbol> x(n, 0);
  for (std::uint64_t code = 0; code < rc.total; ++code) {
    for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) x[i] = static_cast<Symbol>(c % 3);
    const PeriodicConfig c(f.alphabet(), x);
    const auto full = S.apply(apply_afo(f, V.apply(apply_afo(f, c))));
    const auto retract = S.apply(V.apply(c));
    differ += !(full == retract);
  }
  o.expect(rc.total == 729, "|Σ|^6 = 729");
  o.expect(rc.differing == differ, "retraction count " + std::to_string(rc.differing) + " vs direct " + std::to_string(differ));
  o.expect(rc.differing <= rc.kn_bound, "below k*n bound");
  char frac[96];
  std::snprintf(frac, sizeof frac, "%llu/729 = %.4f <= %llu/729 = %.4f",
                static_cast<unsigned long long>(differ), differ / 729.0,
                static_cast<unsigned long long>(rc.kn_bound), rc.kn_bound / 729.0);
  o.note(std::to_string(afos.size()) + " AFOs; " + frac);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "AFO fidelity", 1, afo_fidelity},
      {2, "safety", 1, safety},
      {3, "belt compiler soundness", 300, belt_compiler},
      {4, "Z wr Z via K^_2", 600, khat_zwrz},
      {5, "Z wr (Z_2 wr Z) generator table", 900, zz2z},
      {6, "K^_3 torsion", 600, khat_torsion},
      {7, "Neumann certificate", 300, neumann},
      {8, "free orbit", 300, free_orbit},
      {9, "AFO sparsity and retraction", 120, sparsity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(s < c.limit_s, "time limit");
    if (!o.ok) ++failed;
    std::printf("%s %d %s (%.2f s, limit %.0f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                join(o.notes).c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
