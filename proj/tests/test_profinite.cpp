#include <complex>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "galchar/error.hpp"
#include "galchar/profinite.hpp"

using namespace galchar;
using Index = FiniteGroup::Index;

namespace {

std::vector<long long> units(unsigned n) {
  std::vector<long long> out;
  for (unsigned l = 1; l <= n; ++l)
    if (std::gcd(l, n) == 1) out.push_back(l);
  return out;
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

// Fiber point of a number on the unit circle, located numerically.
std::size_t locate(const std::vector<CycNumber>& fiber, const std::complex<double>& z) {
  for (std::size_t i = 0; i < fiber.size(); ++i)
    if (std::abs(to_complex(fiber[i]) - z) < 1e-9) return i;
  return fiber.size();
}

}  // namespace

TEST_CASE("truncated integers and units") {
  TruncatedProfinite a(12, -5);
  CHECK(a.residue() == 7);
  CHECK(a.truncate(4).residue() == 3);
  CHECK(a.truncate(4).modulus() == 4);
  CHECK_THROWS_AS(a.truncate(5), DomainError);
  CHECK((a + TruncatedProfinite(12, 9)).residue() == 4);
  CHECK((a * TruncatedProfinite(12, 5)).residue() == 11);
  // truncation is a ring map
  for (long long x = -20; x < 20; ++x)
    for (long long y = -7; y < 7; ++y) {
      TruncatedProfinite X(60, x), Y(60, y);
      CHECK((X * Y).truncate(12) == X.truncate(12) * Y.truncate(12));
      CHECK((X + Y).truncate(10) == X.truncate(10) + Y.truncate(10));
    }
  CHECK_THROWS_AS(ProfiniteUnit(30, 2), DomainError);
  ProfiniteUnit u(30, 7);
  CHECK((u * u.inverse()).residue() == 1);
  CHECK(u.inverse().residue() == 13);
  CHECK(u.truncate(5).residue() == 2);
  CHECK(ProfiniteUnit(1, 0).residue() == 0);
}

TEST_CASE("units act on groups by powering") {
  auto a5 = builtin("A5");
  auto classes = conjugacy_classes(a5);
  for (auto l : units(30)) {
    ProfiniteUnit u(30, l);
    std::set<Index> image;
    for (Index g = 0; g < a5.order(); ++g) {
      auto h = profinite_act_on_group(u, a5, g);
      image.insert(h);
      CHECK(h == a5.pow(g, l));
    }
    CHECK(image.size() == 60);
    // on classes: the power map
    auto pm = power_map_on_classes(a5, classes, l);
    for (std::size_t c = 0; c < classes.size(); ++c)
      CHECK(classes.class_of(profinite_act_on_group(u, a5, classes[c].representative)) == pm[c]);
  }
  // u = 7 = 2 mod 5 exchanges the 5-cycle classes
  ProfiniteUnit seven(30, 7);
  CHECK(classes.class_of(profinite_act_on_group(seven, a5, classes[3].representative)) == 4);
  for (Index g = 0; g < a5.order(); ++g) CHECK(profinite_act_on_group(ProfiniteUnit(60, 1), a5, g) == g);
  CHECK_THROWS_AS(profinite_act_on_group(ProfiniteUnit(7, 2), a5, 1), DomainError);

  auto z6 = builtin("Z6");
  for (Index g = 0; g < 6; ++g) CHECK(profinite_act_on_group(ProfiniteUnit(6, 5), z6, g) == z6.inv(g));

  // truncation soundness: units congruent mod the exponent act the same way
  for (auto name : {"S4", "D6", "Q8", "Z12"}) {
    auto g = builtin(name);
    const unsigned e = g.exponent();
    for (auto l : units(e))
      for (Index x = 0; x < g.order(); ++x)
        CHECK(profinite_act_on_group(ProfiniteUnit(e, l), g, x) ==
              profinite_act_on_group(ProfiniteUnit(e * 7, l + e * (l % 7 == 0 ? 1 : 7)), g, x));
  }
}

TEST_CASE("hom counts") {
  CHECK(hom_count(builtin("S3")).count == 6);
  auto a5 = hom_count(builtin("A5"));
  CHECK(a5.count == 60);
  CHECK(std::set<Index>(a5.homs.begin(), a5.homs.end()).size() == 60);
  CHECK(hom_count(builtin("S1")).count == 1);
}

TEST_CASE("cyclic cover") {
  auto one = cyclic_cover(1);
  CHECK(one.fiber.size() == 1);
  CHECK(one.deck.size() == 1);
  auto six = cyclic_cover(6);
  CHECK(six.fiber.size() == 6);
  CHECK(six.table[2][3] == 5);
  for (unsigned n = 1; n <= 12; ++n) {
    auto c = cyclic_cover(n);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(pow(c.fiber[j], n) == CycNumber(n, Rational(1)));
      CHECK(c.fiber[j] == cyc_root(n, static_cast<long long>(j)));
    }
    // gamma_k moves z^j to z^(j+k), checked numerically
    for (unsigned k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const auto z = std::polar(1.0, 2 * M_PI * static_cast<double>(j + k) / n);
        CHECK(c.deck[k][j] == locate(c.fiber, z));
      }
    for (auto l : units(n))
      for (unsigned k = 0; k < n; ++k) {
        auto img = galois_on_cyclic_deck(c, l, DeckTransformation::cyclic(n, k));
        CHECK(img == DeckTransformation::cyclic(n, mod(l * k, n)));
        CHECK(galois_on_cyclic_deck(n, l, DeckTransformation::cyclic(n, k)) == img);
      }
  }
  CHECK(galois_on_cyclic_deck(5, 2, DeckTransformation::cyclic(5, 1)) == DeckTransformation::cyclic(5, 2));
  CHECK(galois_on_cyclic_deck(12, 7, DeckTransformation::cyclic(12, 3)) == DeckTransformation::cyclic(12, 9));
  CHECK(to_string(DeckTransformation::cyclic(12, 9)) == "g9");
  CHECK_THROWS_AS(galois_on_cyclic_deck(12, 3, DeckTransformation::cyclic(12, 1)), DomainError);
}

TEST_CASE("dihedral cover") {
  auto d1 = dihedral_cover(1);
  REQUIRE(d1.fiber.size() == 2);
  CHECK(d1.deck.size() == 2);
  const auto i = cyc_root(4, 1);
  CHECK((d1.fiber[0] == i || d1.fiber[1] == i));
  CHECK((d1.fiber[0] == -i || d1.fiber[1] == -i));
  auto d2 = dihedral_cover(2);
  CHECK(d2.exponents == std::vector<long long>{-3, -1, 1, 3});
  CHECK(dihedral_f(2, cyc_root(8, 1)) == CycNumber(8, Rational(1, 2)));
  auto d3 = dihedral_cover(3);
  CHECK(d3.fiber.size() == 6);

  auto order_of = [](const DihedralCover& c, std::size_t a) {
    std::size_t x = a, k = 1;
    const auto id = c.index_of(DeckTransformation::dihedral(c.n, 1, 0));
    while (x != id) {
      x = c.table[x][a];
      ++k;
    }
    return k;
  };
  CHECK(order_of(d3, d3.index_of(DeckTransformation::dihedral(3, -1, 0))) == 2);
  CHECK(order_of(d3, d3.index_of(DeckTransformation::dihedral(3, 1, 1))) == 3);

  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto c = dihedral_cover(n);
    const unsigned m = 4 * n;
    CHECK(c.fiber.size() == 2 * n);
    CHECK(c.deck.size() == 2 * n);
    const auto half = CycNumber(m, Rational(1, 2));
    for (const auto& x : c.fiber) {
      CHECK(dihedral_f(n, x) == half);
      // independent numeric evaluation
      const auto z = to_complex(x);
      const auto f = (2.0 - std::pow(z, static_cast<int>(n)) - std::pow(z, -static_cast<int>(n))) / 4.0;
      CHECK(std::abs(f - std::complex<double>(0.5, 0)) < 1e-9);
    }
    // deck maps: numeric action x -> x^eps * z^(4k), f-invariance, free and transitive
    for (std::size_t a = 0; a < c.deck.size(); ++a) {
      const auto& d = c.deck[a];
      std::set<std::size_t> image;
      for (std::size_t j = 0; j < c.fiber.size(); ++j) {
        auto z = to_complex(c.fiber[j]);
        if (d.eps < 0) z = 1.0 / z;
        z *= std::polar(1.0, 2 * M_PI * 4.0 * d.k / m);
        CHECK(c.action[a][j] == locate(c.fiber, z));
        image.insert(c.action[a][j]);
        CHECK(dihedral_f(n, c.fiber[c.action[a][j]]) == dihedral_f(n, c.fiber[j]));
        if (a != 0) CHECK(c.action[a][j] != j);
      }
      CHECK(image.size() == c.fiber.size());
    }
    std::set<std::size_t> orbit;
    for (std::size_t a = 0; a < c.deck.size(); ++a) orbit.insert(c.action[a][0]);
    CHECK(orbit.size() == c.fiber.size());
    // the dihedral multiplication law
    for (std::size_t a = 0; a < c.deck.size(); ++a)
      for (std::size_t b = 0; b < c.deck.size(); ++b) {
        const auto& x = c.deck[a];
        const auto& y = c.deck[b];
        CHECK(c.deck[c.table[a][b]] ==
              DeckTransformation::dihedral(n, x.eps * y.eps, x.eps * static_cast<long long>(y.k) + x.k));
      }
    // Galois conjugation and functoriality
    const auto us = units(m);
    for (auto l : us) {
      for (const auto& d : c.deck)
        CHECK(galois_on_dihedral_deck(c, l, d) == DeckTransformation::dihedral(n, d.eps, l * static_cast<long long>(d.k)));
      for (auto mm : us)
        for (const auto& d : c.deck)
          CHECK(galois_on_dihedral_deck(c, l, galois_on_dihedral_deck(c, mm, d)) ==
                galois_on_dihedral_deck(c, mod(l * mm, m), d));
    }
    for (const auto& d : c.deck) {
      CHECK(galois_on_dihedral_deck(c, 1, d) == d);
      CHECK(galois_on_dihedral_deck(c, us.back(), DeckTransformation::dihedral(n, -1, 0)) ==
            DeckTransformation::dihedral(n, -1, 0));
    }
  }
  CHECK(galois_on_dihedral_deck(3, 5, DeckTransformation::dihedral(3, 1, 1)) == DeckTransformation::dihedral(3, 1, 2));
  CHECK_THROWS_AS(galois_on_dihedral_deck(3, 3, DeckTransformation::dihedral(3, 1, 1)), DomainError);
  CHECK_THROWS_AS(galois_on_dihedral_deck(3, 2, DeckTransformation::dihedral(3, 1, 1)), DomainError);
  CHECK(to_string(DeckTransformation::dihedral(3, -1, 2)) == "(-1,2)");
}

TEST_CASE("covering action versus power map") {
  auto rows = compare_actions_on_dihedral(3, 5);
  bool found = false;
  for (const auto& r : rows)
    if (r.element == DeckTransformation::dihedral(3, -1, 1)) {
      found = true;
      CHECK(r.covering_image == DeckTransformation::dihedral(3, -1, 2));
      CHECK(r.power_image == DeckTransformation::dihedral(3, -1, 1));
      CHECK(r.differs);
    }
  CHECK(found);
  for (auto l : units(8))
    for (const auto& r : compare_actions_on_dihedral(2, l)) CHECK_FALSE(r.differs);
  // rotations agree; reflections differ exactly when ell k != k mod n
  for (unsigned n = 1; n <= 12; ++n) {
    const auto cover = dihedral_cover(n);
    for (const auto& r : compare_actions_on_dihedral(cover, 1)) CHECK_FALSE(r.differs);
    for (auto l : units(4 * n))
      for (const auto& r : compare_actions_on_dihedral(cover, l)) {
        if (r.element.eps == 1) CHECK_FALSE(r.differs);
        else CHECK(r.differs == (mod(l * r.element.k, n) != r.element.k));
      }
  }
}

TEST_CASE("tuple Galois action") {
  auto z12 = builtin("Z12");
  const Index g = z12.generators().empty() ? 1 : z12.require_index(z12.generators()[0]);
  ProfiniteUnit seven(12, 7);
  auto out = tuple_galois_action(seven, z12, {g, z12.pow(g, 3)});
  CHECK(out == std::vector<Index>{z12.pow(g, 7), z12.pow(g, 9)});
  auto id = tuple_galois_action(ProfiniteUnit(12, 1), z12, {g, z12.pow(g, 5)});
  CHECK(id == std::vector<Index>{g, z12.pow(g, 5)});
  auto sq = tuple_galois_action(ProfiniteUnit(12, 5), z12, {g, z12.pow(g, 2)});
  CHECK(sq == std::vector<Index>{z12.pow(g, 5), z12.pow(g, 10)});

  auto s3 = builtin("S3");
  const auto t = s3.require_index(parse_cycles("(1 2)", 3));
  const auto r = s3.require_index(parse_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(tuple_galois_action(ProfiniteUnit(6, 5), s3, {t, r}), ScopeError);
  // cyclic H inside a non-abelian G is fine, and commutes with conjugation and reordering
  const auto k = s3.require_index(parse_cycles("(2 3)", 3));
  ProfiniteUnit five(6, 5);
  auto a = tuple_galois_action(five, s3, {r, s3.pow(r, 2)});
  auto b = tuple_galois_action(five, s3, {s3.conjugate(r, k), s3.conjugate(s3.pow(r, 2), k)});
  CHECK(b == std::vector<Index>{s3.conjugate(a[0], k), s3.conjugate(a[1], k)});
  auto c = tuple_galois_action(five, s3, {s3.pow(r, 2), r});
  CHECK(c == std::vector<Index>{a[1], a[0]});
}
