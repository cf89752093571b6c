#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "beltca/belt.hpp"
#include "beltca/embed_check.hpp"
#include "beltca/enumerate.hpp"
#include "beltca/serialize.hpp"
#include "oracles.hpp"

using namespace beltca;

namespace {

std::vector<Symbol> tape(const BeltAlphabet& b, std::initializer_list<const char*> labels) {
  std::vector<Symbol> out;
  for (const char* l : labels) out.push_back(*b.gamma()->find(l));
  return out;
}

// Classification straight from the lists of good and bad two-letter words.
// Kinds: 'Z' zero pair, 'C' other pair, '>' and '<'.
char kind(const BeltAlphabet& b, Symbol s) {
  if (s == b.left_wall()) return '>';
  if (s == b.right_wall()) return '<';
  return s == b.zero_pair() ? 'Z' : 'C';
}

bool good_word(char x, char y) {
  static const std::set<std::string> good{">>", ">C", "ZZ", "ZC", "CZ", "CC", "C<", "<<", "><"};
  static const std::set<std::string> bad{"<>", "Z>", "C>", "<Z", "<C", ">Z", "Z<"};
  const std::string w{x, y};
  REQUIRE(good.count(w) + bad.count(w) == 1);
  return good.count(w) == 1;
}

std::vector<SymbolClass> oracle_classify(const BeltAlphabet& b, const std::vector<Symbol>& x) {
  const std::size_t n = x.size();
  std::vector<SymbolClass> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char l = kind(b, x[(i + n - 1) % n]), c = kind(b, x[i]), r = kind(b, x[(i + 1) % n]);
    if (good_word(l, c) && good_word(c, r)) out[i] = SymbolClass::Good;
    else if ((c == '>' && l != '>') || (c == '<' && r != '<')) out[i] = SymbolClass::Wall;
    else out[i] = SymbolClass::Error;
  }
  return out;
}

// Fold of a run read with walls as zero: top word then reversed bottom word.
oracle::Tape fold(const BeltAlphabet& b, const std::vector<Symbol>& run) {
  const std::size_t L = run.size();
  oracle::Tape belt(2 * L);
  for (std::size_t i = 0; i < L; ++i) {
    const Symbol s = b.is_pair(run[i]) ? run[i] : b.zero_pair();
    belt[i] = b.top(s);
    belt[2 * L - 1 - i] = b.bottom(s);
  }
  return belt;
}

// Unfold a belt and write the zero affixes as walls.
std::vector<Symbol> unfold_walled(const BeltAlphabet& b, const oracle::Tape& belt) {
  const std::size_t L = belt.size() / 2;
  std::vector<Symbol> w(L);
  for (std::size_t i = 0; i < L; ++i) w[i] = b.pair(belt[i], belt[2 * L - 1 - i]);
  std::size_t m = 0, n = 0;
  while (m < L && w[m] == b.zero_pair()) ++m;
  while (n < L - m && w[L - 1 - n] == b.zero_pair()) ++n;
  for (std::size_t i = 0; i < m; ++i) w[i] = b.left_wall();
  for (std::size_t i = 0; i < n; ++i) w[L - 1 - i] = b.right_wall();
  return w;
}

// [C, >, run, <, C]: the run sits between two walls, flanked by error cells.
std::vector<Symbol> wall_context(const BeltAlphabet& b, const std::vector<Symbol>& run) {
  const Symbol c = b.pair(1, 1);
  std::vector<Symbol> x{c, b.left_wall()};
  x.insert(x.end(), run.begin(), run.end());
  x.push_back(b.right_wall());
  x.push_back(c);
  return x;
}

// [>, 0, run, 0, <]: the run sits between two error cells.
std::vector<Symbol> error_context(const BeltAlphabet& b, const std::vector<Symbol>& run) {
  std::vector<Symbol> x{b.left_wall(), b.zero_pair()};
  x.insert(x.end(), run.begin(), run.end());
  x.push_back(b.zero_pair());
  x.push_back(b.right_wall());
  return x;
}

std::vector<Symbol> random_walled_run(const BeltAlphabet& b, std::size_t L, std::mt19937_64& rng) {
  const std::uint32_t q = b.base()->size();
  oracle::Tape belt;
  do {
    belt.assign(2 * L, 0);
    for (auto& c : belt) c = rng() % 3 == 0 ? static_cast<Symbol>(rng() % q) : 0;
  } while (std::all_of(belt.begin(), belt.end(), [](auto c) { return c == 0; }));
  return unfold_walled(b, belt);
}

const std::vector<Symbol> kV{0, 0, 0, 2, 1, 1, 1, 2, 2};

Automorphism involution_v(const AlphabetRef& a) {
  auto v = SlidingBlockCode::from_table(a, {0, 1}, kV);
  return Automorphism("V", v, v);
}

std::vector<Symbol> sub(const std::vector<Symbol>& x, std::size_t from, std::size_t len) {
  return {x.begin() + from, x.begin() + from + len};
}

}  // namespace

TEST_CASE("belt alphabet shape") {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    BeltAlphabet b(Alphabet::plain(q));
    CHECK(b.gamma()->size() == q * q + 2);
    CHECK(b.gamma()->zero() == b.zero_pair());
    CHECK(BeltAlphabet::from_gamma(b.gamma()).gamma()->size() == b.gamma()->size());
  }
}

TEST_CASE("classification examples") {
  BeltAlphabet b(Alphabet::plain(3));
  using SC = SymbolClass;
  CHECK(classify(b, tape(b, {">", "1|0", "<"})) == std::vector<SC>{SC::Wall, SC::Good, SC::Wall});
  CHECK(classify(b, tape(b, {"0|0", "0|0", "0|0"})) == std::vector<SC>{SC::Good, SC::Good, SC::Good});
  CHECK(classify(b, tape(b, {"<", ">"})) == std::vector<SC>{SC::Wall, SC::Wall});
  CHECK(classify(b, tape(b, {"1|0", "<", ">", "0|0"})) == std::vector<SC>{SC::Good, SC::Wall, SC::Wall, SC::Error});
  CHECK(classify(b, tape(b, {">", ">", "0|0", "1|0"}))[1] == SC::Error);
}

TEST_CASE("classification agrees with the word-list oracle") {
  BeltAlphabet b2(Alphabet::plain(2));
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_word(6, n, [&](std::span<const Symbol> x) {
      std::vector<Symbol> v(x.begin(), x.end());
      CHECK(classify(b2, v) == oracle_classify(b2, v));
      return true;
    });
  BeltAlphabet b3(Alphabet::plain(3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto v = random_word(11, 1 + rng() % 30, rng);
    CHECK(classify(b3, v) == oracle_classify(b3, v));
  }
}

TEST_CASE("decomposition examples") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto d = decompose(b, tape(b, {"1|1", ">", ">", "1|0", "<", "<", "1|1"}));
  REQUIRE(d.runs.size() == 1);
  const auto& r = d.runs[0];
  CHECK(r.start == 2);
  CHECK(r.length == 3);
  CHECK(r.prefix == 1);
  CHECK(r.suffix == 1);
  CHECK(r.core_length() == 1);
  CHECK(r.left == Boundary::Wall);
  CHECK(r.right == Boundary::Wall);

  CHECK(decompose(b, tape(b, {">", ">", ">"})).degenerate == Degenerate::AllLeftWalls);
  CHECK(decompose(b, tape(b, {"<", "<"})).degenerate == Degenerate::AllRightWalls);
  CHECK(decompose(b, tape(b, {"0|0", "1|2"})).degenerate == Degenerate::AllPairs);
  CHECK(decompose(b, tape(b, {">", ">"})).runs.empty());

  const auto e = decompose(b, error_context(b, tape(b, {"1|0", "0|0"})));
  REQUIRE(e.runs.size() == 1);
  CHECK(e.runs[0].left == Boundary::Error);
  CHECK(e.runs[0].right == Boundary::Error);
  CHECK(e.runs[0].prefix == 0);
  CHECK(e.runs[0].suffix == 0);
}

TEST_CASE("decomposition properties") {
  BeltAlphabet b(Alphabet::plain(2));
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_word(6, n, [&](std::span<const Symbol> x) {
      const auto cls = oracle_classify(b, {x.begin(), x.end()});
      const auto d = decompose(b, x);
      std::vector<bool> covered(n, false);
      for (const auto& r : d.runs) {
        for (std::size_t i = 0; i < r.length; ++i) {
          const std::size_t p = (r.start + i) % n;
          CHECK(!covered[p]);
          covered[p] = true;
          CHECK(cls[p] == SymbolClass::Good);
          const char k = kind(b, x[p]);
          if (i < r.prefix) CHECK(k == '>');
          else if (i >= r.length - r.suffix) CHECK(k == '<');
          else CHECK((k == 'Z' || k == 'C'));
        }
        if (r.left == Boundary::Error) CHECK(r.prefix == 0);
        if (r.right == Boundary::Error) CHECK(r.suffix == 0);
        const auto before = cls[(r.start + n - 1) % n], after = cls[(r.start + r.length) % n];
        CHECK((before == SymbolClass::Wall) == (r.left == Boundary::Wall));
        CHECK((after == SymbolClass::Wall) == (r.right == Boundary::Wall));
      }
      if (d.degenerate == Degenerate::None)
        for (std::size_t p = 0; p < n; ++p) CHECK(covered[p] == (cls[p] == SymbolClass::Good));
      return true;
    });
}

TEST_CASE("belt encoding examples") {
  BeltAlphabet b(Alphabet::plain(3));
  CHECK(belt_encode(b, tape(b, {">", "1|0", "<"})) == std::vector<Symbol>{0, 1, 0, 0, 0, 0});
  CHECK(belt_encode(b, tape(b, {"0|0", "0|0"})) == std::vector<Symbol>(4, 0));
  CHECK(belt_encode(b, tape(b, {"1|1"})) == std::vector<Symbol>{1, 1});
  CHECK(belt_encode(b, tape(b, {"1|2", "0|1"})) == std::vector<Symbol>{1, 0, 1, 2});
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto run = random_word(9, 1 + rng() % 8, rng);
    CHECK(belt_decode(b, belt_encode(b, run)) == run);
    CHECK(belt_encode(b, run) == fold(b, run));
  }
}

TEST_CASE("embedded shift on a wall/wall run") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto e = embed_automorphism(Automorphism::shift(b.base(), 1));
  CHECK(e.name() == "belt(shift)");
  const PeriodicConfig x(b.gamma(), tape(b, {"1|1", ">", ">", "1|0", "<", "<", "1|1"}));
  CHECK(e.apply(x).vec() == tape(b, {"1|1", ">", "1|0", "<", "<", "<", "1|1"}));
  CHECK(e.apply_inverse(e.apply(x)) == x);
}

TEST_CASE("embedded shift on an error/error run writes zeros verbatim") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto e = embed_automorphism(Automorphism::shift(b.base(), 1));
  const PeriodicConfig x(b.gamma(), tape(b, {"<", "0|0", "0|0", "1|0", "0|0", ">"}));
  CHECK(e.apply(x).vec() == tape(b, {"<", "0|0", "1|0", "0|0", "0|0", ">"}));
}

TEST_CASE("identity embeds as the identity") {
  BeltAlphabet b2(Alphabet::plain(2));
  const auto e2 = embed_automorphism(Automorphism::identity(b2.base()));
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_word(6, n, [&](std::span<const Symbol> x) {
      PeriodicConfig c(b2.gamma(), {x.begin(), x.end()});
      CHECK(e2.apply(c) == c);
      return true;
    });
  BeltAlphabet b3(Alphabet::plain(3));
  const auto e3 = embed_automorphism(Automorphism::identity(b3.base()));
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_word(11, n, [&](std::span<const Symbol> x) {
      PeriodicConfig c(b3.gamma(), {x.begin(), x.end()});
      CHECK(e3.apply(c) == c);
      return true;
    });
}

TEST_CASE("wall/wall runs follow the fold oracle") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto S = Automorphism::shift(b.base(), 1), V = involution_v(b.base());
  const std::vector<std::pair<EmbeddedAutomorphism, std::function<oracle::Tape(const oracle::Tape&)>>> cases{
      {embed_automorphism(S), [](const oracle::Tape& t) { return oracle::rotate(t, 1); }},
      {embed_automorphism(S.inverse()), [](const oracle::Tape& t) { return oracle::rotate(t, -1); }},
      {embed_automorphism(V), [](const oracle::Tape& t) { return oracle::block_code(t, 0, 1, 3, kV); }},
  };
  std::mt19937_64 rng(5);
  for (const auto& [e, f] : cases)
    for (int i = 0; i < 400; ++i) {
      const std::size_t L = 1 + rng() % 9;
      const auto run = random_walled_run(b, L, rng);
      const auto x = wall_context(b, run);
      const auto y = e.apply(PeriodicConfig(b.gamma(), x)).vec();
      CHECK(y == wall_context(b, unfold_walled(b, f(fold(b, run)))));
    }
}

TEST_CASE("embedded AFO moves designated belts on wall/wall runs only") {
  BeltAlphabet b(Alphabet::plain(2));
  AfoSpec u(SafeWordSet(b.base(), {{1, 0, 1}}, 5), {0}, {1}, "U");
  const auto e = embed_afo(u);
  const auto run = tape(b, {"1|0", "0|0", "1|0"});
  const PeriodicConfig x(b.gamma(), wall_context(b, run));
  CHECK(e.apply(x).vec() == wall_context(b, tape(b, {">", "1|0", "0|1"})));
  CHECK(e.apply_inverse(e.apply(x)) == x);

  // Same belt between error cells: untouched.
  const PeriodicConfig xe(b.gamma(), error_context(b, run));
  CHECK(e.apply(xe) == xe);
  // Two nonzero belt cells that do not spell 101: untouched.
  const PeriodicConfig x2(b.gamma(), wall_context(b, tape(b, {"1|0", "1|0"})));
  CHECK(e.apply(x2) == x2);
  // Belt of length 4 is below the threshold.
  const PeriodicConfig x3(b.gamma(), wall_context(b, tape(b, {"1|0", "1|0"})));
  CHECK(e.apply(x3) == x3);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t L = 1 + rng() % 6;
    const auto r = random_walled_run(b, L, rng);
    const auto got = e.apply(PeriodicConfig(b.gamma(), wall_context(b, r))).vec();
    const auto want = oracle::afo({{1, 0, 1}}, {0}, {1}, 5, fold(b, r));
    CHECK(got == wall_context(b, unfold_walled(b, want)));
  }
}

TEST_CASE("bad symbols, inverses and homomorphism on all small tapes") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto S = Automorphism::shift(b.base(), 1), V = involution_v(b.base());
  const auto eS = embed_automorphism(S), eV = embed_automorphism(V), eSV = embed_automorphism(compose(S, V));
  auto check = [&](const std::vector<Symbol>& cells) {
    const PeriodicConfig x(b.gamma(), cells);
    const auto cls = classify(b, cells);
    for (const auto* e : {&eS, &eV, &eSV}) {
      const auto y = e->apply(x);
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (cls[i] != SymbolClass::Good) CHECK(y.vec()[i] == cells[i]);
      CHECK(e->apply_inverse(y) == x);
    }
    CHECK(eSV.apply(x) == eS.apply(eV.apply(x)));
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_word(11, n, [&](std::span<const Symbol> x) {
      check({x.begin(), x.end()});
      return true;
    });
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) check(random_word(11, 1 + rng() % 24, rng));
}

TEST_CASE("zero prefix drifts by at most the radius") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto V = involution_v(b.base());
  for (const auto& f : {Automorphism::shift(b.base(), 1), V, compose(V, Automorphism::shift(b.base(), -1))}) {
    const auto e = embed_automorphism(f);
    const long r = f.forward().radius();
    for (std::size_t L = 1; L <= 4; ++L)
      for_each_word(11, L, [&](std::span<const Symbol> w) {
        std::vector<Symbol> run(w.begin(), w.end());
        const auto x = wall_context(b, run);
        const auto d = decompose(b, x);
        if (d.runs.size() != 1 || d.runs[0].length != L || d.runs[0].core_length() == 0) return true;
        const auto y = e.apply(PeriodicConfig(b.gamma(), x)).vec();
        const auto dy = decompose(b, y);
        REQUIRE(dy.runs.size() == 1);
        CHECK(dy.runs[0].core_length() > 0);
        CHECK(std::abs(static_cast<long>(dy.runs[0].prefix) - static_cast<long>(d.runs[0].prefix)) <= r);
        CHECK(std::abs(static_cast<long>(dy.runs[0].suffix) - static_cast<long>(d.runs[0].suffix)) <= r);
        return true;
      });
  }
}

TEST_CASE("degenerate configurations") {
  BeltAlphabet b(Alphabet::plain(3));
  const auto e = embed_automorphism(Automorphism::shift(b.base(), 1));
  const PeriodicConfig walls(b.gamma(), tape(b, {">", ">", ">"}));
  CHECK(e.apply(walls) == walls);
  // All pairs: top shifts left, the reversed bottom shifts right.
  const PeriodicConfig pairs(b.gamma(), tape(b, {"1|0", "0|0", "0|2"}));
  CHECK(e.apply(pairs).vec() == tape(b, {"0|2", "0|0", "1|0"}));
}

TEST_CASE("doubling simulates the half-length tape") {
  BeltAlphabet b(Alphabet::plain(2));
  AfoSpec u(SafeWordSet(b.base(), {{1, 0, 1}, {1, 1}}, 5), {1, 0}, {1, -1}, "U");
  const auto eS = embed_automorphism(Automorphism::shift(b.base(), 1), true);
  const auto eU = embed_afo(u, true);
  CHECK(eS.radius() == 4);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t L = 1 + rng() % 8;
    oracle::Tape half(L);
    for (auto& c : half) c = rng() % 3 == 0;
    if (std::all_of(half.begin(), half.end(), [](auto c) { return c == 0; })) continue;
    oracle::Tape belt(2 * L, 0);
    for (std::size_t j = 0; j < L; ++j) belt[2 * j] = half[j];
    const auto x = wall_context(b, unfold_walled(b, belt));
    for (const auto& [e, image] :
         {std::pair{&eS, oracle::rotate(half, 1)}, std::pair{&eU, oracle::afo({{1, 0, 1}, {1, 1}}, {1, 0}, {1, -1}, 5, half)}}) {
      const auto y = e->apply(PeriodicConfig(b.gamma(), x)).vec();
      const auto got = fold(b, sub(y, 2, L));
      for (std::size_t j = 0; j < L; ++j) {
        CHECK(got[2 * j] == image[j]);
        CHECK(got[2 * j + 1] == 0);
      }
    }
  }
}

TEST_CASE("windowed evaluators agree and negative controls fail") {
  BeltAlphabet b(Alphabet::plain(3));
  EvaluatorCheckOptions opt;
  opt.max_period = 4;
  opt.samples = 300;
  opt.sample_period = 24;
  for (const auto& f : {Automorphism::identity(b.base()), Automorphism::shift(b.base(), 1), involution_v(b.base())}) {
    const auto rep = verify_evaluators(evaluator_pair(embed_automorphism(f)), opt);
    CHECK(rep.passed());
  }
  AfoSpec g(SafeWordSet(b.base(), {{1}, {2}}, 1), {1, 0}, {1, -1}, "f");
  CHECK(verify_evaluators(evaluator_pair(embed_afo(g)), opt).passed());

  auto broken = evaluator_pair(embed_automorphism(involution_v(b.base())));
  const auto id = embed_automorphism(Automorphism::identity(b.base()));
  broken.backward = evaluator_pair(id).backward;
  broken.backward_windowed = evaluator_pair(id).backward_windowed;
  const auto rep = verify_evaluators(broken, opt);
  CHECK(!rep.passed());

  const auto e = embed_automorphism(Automorphism::shift(b.base(), 1));
  // A window no wider than the source rule cannot see the run edges.
  auto narrow = evaluator_pair(EmbeddedAutomorphism("narrow", e.forward().with_radius(1), e.backward().with_radius(1), false));
  CHECK(!verify_evaluators(narrow, opt).passed());
}

TEST_CASE("simulation of finite configurations") {
  auto a = Alphabet::plain(3);
  for (Symbol s = 1; s < 3; ++s) {
    const auto x = FiniteConfig::point(a, s, 0);
    CHECK(simulate_check(Automorphism::identity(a), x));
    CHECK(simulate_check(Automorphism::shift(a, 1), x));
    CHECK(simulate_check(Automorphism::shift(a, -2), x));
    CHECK(simulate_check(involution_v(a), x));
  }
  CHECK(simulate_check(involution_v(a), FiniteConfig(a, -3, {1, 0, 2, 2, 1})));
}
