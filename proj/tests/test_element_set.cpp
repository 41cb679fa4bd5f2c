#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "menum/element_set.hpp"

using menum::ElementSet;

TEST_CASE("element set basics") {
  ElementSet s;
  CHECK(s.empty());
  CHECK(s.count() == 0);
  s.set(3);
  s.set(70);  // spills past the inline words
  s.set(3);
  CHECK(s.count() == 2);
  CHECK(s.test(3));
  CHECK(s.test(70));
  CHECK_FALSE(s.test(4));
  s.reset(3);
  CHECK(s.to_vector() == std::vector<int>{70});
  CHECK(s.to_string() == "{70}");
}

TEST_CASE("set algebra matches a reference std::set model") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<int> ma, mb;
    ElementSet a, b;
    for (int k = 0; k < 12; ++k) {
      const int e = static_cast<int>(rng() % 100);
      if (rng() % 2) {
        ma.insert(e);
        a.set(static_cast<std::size_t>(e));
      } else {
        mb.insert(e);
        b.set(static_cast<std::size_t>(e));
      }
    }
    const auto model = [](const std::set<int>& s) {
      return std::vector<int>(s.begin(), s.end());
    };
    std::set<int> mu = ma, mi, md = ma, mx;
    mu.insert(mb.begin(), mb.end());
    for (int e : ma)
      if (mb.count(e)) mi.insert(e);
    for (int e : mb) md.erase(e);
    for (int e : mu)
      if (!ma.count(e) || !mb.count(e)) mx.insert(e);

    CHECK((a | b).to_vector() == model(mu));
    CHECK((a & b).to_vector() == model(mi));
    CHECK((a - b).to_vector() == model(md));
    CHECK((a ^ b).to_vector() == model(mx));
    CHECK(a.contains(a & b));
    CHECK((a | b).contains(a));
    CHECK(a.intersects(b) == !mi.empty());
  }
}

TEST_CASE("iteration order ascends") {
  const ElementSet s = ElementSet::of({5, 1, 64, 9});
  CHECK(s.to_vector() == std::vector<int>{1, 5, 9, 64});
  CHECK(s.first() == 1);
  CHECK(s.next(1) == 5);
  CHECK(s.next(9) == 64);
  CHECK(s.next(64) == -1);
}

TEST_CASE("lexicographic order over id sequences") {
  using menum::lexicographic_less;
  CHECK(lexicographic_less(ElementSet::of({0, 5}), ElementSet::of({1})));
  CHECK(lexicographic_less(ElementSet::of({1}), ElementSet::of({1, 2})));
  CHECK(lexicographic_less(ElementSet::of({1, 2}), ElementSet::of({2})));
  CHECK_FALSE(lexicographic_less(ElementSet::of({2}), ElementSet::of({1, 2})));
  CHECK_FALSE(lexicographic_less(ElementSet{}, ElementSet{}));
  CHECK(lexicographic_less(ElementSet{}, ElementSet::of({0})));
}

TEST_CASE("equality ignores storage capacity") {
  ElementSet a;
  a.set(200);
  a.reset(200);
  CHECK(a == ElementSet{});
  CHECK(ElementSet::full(6).count() == 6);
}
