#include <doctest.h>

#include <map>

#include "beltca/pointy.hpp"
#include "beltca/relations.hpp"
#include "beltca/serialize.hpp"
#include "oracles.hpp"

using namespace beltca;

namespace {

// Reads the image of x0 under a lamplighter action back as (cursor, lit cells).
oracle::Lamplighter read_lamplighter(const FiniteConfig& y) {
  const auto& a = *y.alphabet();
  oracle::Lamplighter e;
  int cursors = 0;
  for (std::size_t i = 0; i < y.word().size(); ++i) {
    const long at = y.offset() + static_cast<long>(i);
    if (a.track_value(y.word()[i], 0)) {
      e.cursor = at;
      ++cursors;
    }
    if (a.track_value(y.word()[i], 1)) e.lamps.insert(at);
  }
  REQUIRE(cursors == 1);
  return e;
}

}  // namespace

TEST_CASE("lamplighter images of x0 match the abstract group") {
  const auto p = lamplighter_action({2});
  const auto table = p.table();
  REQUIRE(table.size() == 2);
  CHECK(table[0].name == "T");
  CHECK(table[1].name == "F");
  CHECK(table[1].involution);
  const auto words = reduced_words(table, 7);
  std::map<oracle::Lamplighter, std::string> seen_nf;
  std::map<std::string, oracle::Lamplighter> seen_el;
  for (const auto& w : words) {
    const auto want = oracle::lamplighter(w, 0, 1);
    CHECK(read_lamplighter(apply_word(p.generators, w, p.special_point)) == want);
    // Normal form and oracle element determine each other.
    const auto nf = lamplighter_normal_form({2}, w);
    auto [a, fa] = seen_nf.try_emplace(want, nf);
    CHECK(a->second == nf);
    auto [b, fb] = seen_el.try_emplace(nf, want);
    CHECK(b->second == want);
  }
}

TEST_CASE("lamplighter normal form values") {
  const auto table = lamplighter_action({2}).table();
  CHECK(lamplighter_normal_form({2}, GroupWord::parse("", table)) == "t=0");
  CHECK(lamplighter_normal_form({2}, GroupWord::parse("FT", table)) == "t=-1 -1:1");
  CHECK(lamplighter_normal_form({2}, GroupWord::parse("TF", table)) == "t=-1 0:1");
  CHECK(lamplighter_normal_form({2}, GroupWord::parse("T^-2FT^2F", table)) == "t=0 -2:1 0:1");
  CHECK(lamplighter_normal_form({2}, GroupWord::parse("FF", table)) == "t=0");
  const auto t3 = lamplighter_action({3}).table();
  CHECK(lamplighter_normal_form({3}, GroupWord::parse("F^-1", t3)) == "t=0 0:2");
  CHECK(lamplighter_normal_form({3}, GroupWord::parse("FFF", t3)) == "t=0");
}

TEST_CASE("free orbit check on lamplighters") {
  for (const std::vector<std::uint32_t>& m : {std::vector<std::uint32_t>{2}, {3}, {2, 3}}) {
    const auto p = lamplighter_action(m);
    const auto r = free_orbit_check(p, m.size() == 1 ? 6 : 4, [&](const GroupWord& w) { return lamplighter_normal_form(m, w); });
    CHECK(r.passed());
    CHECK(r.image_classes == r.element_classes);
    CHECK(r.words > r.element_classes);
  }
}

TEST_CASE("free orbit check catches a wrong normal form") {
  const auto p = lamplighter_action({2});
  // Forgetting the lamps merges elements that move x0 differently.
  const auto r = free_orbit_check(p, 3, [](const GroupWord& w) { return lamplighter_normal_form({2}, w).substr(0, 4); });
  CHECK(!r.passed());
  CHECK(!r.unexpected_separations.empty());
  // The word itself splits elements that act alike, e.g. FTFT^-1 and TFT^-1F.
  const auto table = p.table();
  const auto c = free_orbit_check(p, 4, [&](const GroupWord& w) { return w.to_string(table); });
  CHECK(!c.passed());
  CHECK(!c.unexpected_collisions.empty());
}

TEST_CASE("weak pointiness") {
  CHECK(weak_pointy_check(lamplighter_action({2}), 5, 2, 7).passed());
  CHECK(weak_pointy_check(shift_action(Alphabet::plain(3)), 5, 1, 7).passed());

  // Track 2 flips under a 1 on both sides in track 1. Fixes the single marker,
  // moves its period-2 extension.
  auto a = Alphabet::product({Alphabet::plain(2), Alphabet::plain(2)});
  SlidingBlockCode g(a, {-1, 1}, [a](std::span<const Symbol> w) {
    const Symbol flip = a->track_value(w[0], 0) & a->track_value(w[2], 0);
    return a->with_track(w[1], 1, a->track_value(w[1], 1) ^ flip);
  });
  PointyAction p;
  p.name = "flip";
  p.alphabet = a;
  p.generators.emplace_back("G", g, g);
  p.involutions.push_back(true);
  p.special_point = FiniteConfig::point(a, a->encode(std::vector<Symbol>{1, 0}));
  p.kind = PointyKind::WeaklyPointy;
  const auto r = weak_pointy_check(p, 2, 2, 5);
  CHECK(!r.passed());
  REQUIRE(!r.violations.empty());
  CHECK(r.violations.front().n == 2);
  CHECK(weak_pointy_check(p, 2, 3, 5).passed());
}

TEST_CASE("product actions") {
  const auto p = product_action(lamplighter_action({2}), lamplighter_action({2}));
  const auto t = p.table();
  REQUIRE(t.size() == 4);
  CHECK(t[0].name == "T");
  CHECK(t[1].name == "F");
  CHECK(t[2].name == "T'");
  CHECK(t[3].name == "F'");
  CHECK(atomic_tracks(*p.alphabet) == 4);
  CHECK(p.alphabet->size() == 16);
  CHECK(p.special_point.word().size() == 1);
  CHECK(p.alphabet->track_value(p.special_point.word()[0], 0) == 1);
  CHECK(p.alphabet->track_value(p.special_point.word()[0], 2) == 1);

  // Factors commute and act on their own tracks.
  const auto words = reduced_words(t, 4);
  for (const auto& w : words) {
    const auto y = apply_word(p.generators, w, p.special_point);
    std::vector<Letter> left, right;
    for (const auto& l : w.letters()) (l.generator < 2 ? left : right).push_back(l);
    const auto y2 = apply_word(p.generators, GroupWord(right), apply_word(p.generators, GroupWord(left), p.special_point));
    CHECK(y == y2);
  }

  const auto s = product_action(shift_action(Alphabet::plain(2)), shift_action(Alphabet::plain(3)));
  CHECK(s.table()[0].name == "S");
  CHECK(s.table()[1].name == "S'");
  CHECK(free_orbit_check(s, 4, [](const GroupWord& w) {
          long a = 0, b = 0;
          for (const auto& l : w.letters()) (l.generator == 0 ? a : b) += l.exponent;
          return std::to_string(a) + "," + std::to_string(b);
        }).passed());
}

TEST_CASE("lifting to tracks and swapping tracks") {
  auto a = Alphabet::product({Alphabet::plain(2), Alphabet::plain(3), Alphabet::plain(3)});
  CHECK(atomic_tracks(*a) == 3);
  CHECK(atomic_tracks(*Alphabet::plain(5)) == 1);
  const auto lifted = lift_to_tracks(Automorphism::shift(Alphabet::plain(3)), a, 1, 1);
  const std::vector<Symbol> cells{a->encode(std::vector<Symbol>{1, 2, 0}), a->encode(std::vector<Symbol>{0, 1, 2}), a->encode(std::vector<Symbol>{1, 0, 1})};
  const auto y = lifted.apply(PeriodicConfig(a, cells)).vec();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a->track_value(y[i], 0) == a->track_value(cells[i], 0));
    CHECK(a->track_value(y[i], 1) == a->track_value(cells[(i + 1) % 3], 1));
    CHECK(a->track_value(y[i], 2) == a->track_value(cells[i], 2));
  }
  const auto sw = track_swap(a, {0, 2, 1});
  const auto z = sw.apply(PeriodicConfig(a, cells)).vec();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a->track_value(z[i], 1) == a->track_value(cells[i], 2));
    CHECK(a->track_value(z[i], 2) == a->track_value(cells[i], 1));
  }
  CHECK(verify_automorphism(lifted).passed());
  CHECK_THROWS(track_swap(a, {1, 0, 2}));
}
