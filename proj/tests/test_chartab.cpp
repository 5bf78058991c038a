#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "galchar/chartab.hpp"
#include "galchar/error.hpp"
#include "galchar/group.hpp"

using namespace galchar;
using Index = FiniteGroup::Index;

namespace {

const double kAlpha = (1.0 + std::sqrt(5.0)) / 2.0;
const double kAlphaPrime = (1.0 - std::sqrt(5.0)) / 2.0;

// A table as printed: column representatives and rows of numeric values.
// Exact values for the irrational entries are supplied separately.
struct PrintedTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Index of the computed class containing the permutation given in cycle notation.
std::size_t class_of_cycles(const CharacterTable& t, const std::string& text) {
  const auto& g = t.group();
  return t.classes().class_of(g.require_index(parse_cycles(text, g.degree())));
}

// For each printed row, the computed row whose values agree at the mapped
// columns to 1e-8. Returns nullopt if some printed row has no partner or
// two printed rows claim the same computed row.
std::optional<std::vector<std::size_t>> match_rows(const CharacterTable& t, const PrintedTable& p) {
  std::vector<std::size_t> cols;
  for (const auto& c : p.columns) cols.push_back(class_of_cycles(t, c));
  std::vector<std::size_t> out;
  std::vector<bool> used(t.size(), false);
  for (const auto& printed : p.rows) {
    std::optional<std::size_t> hit;
    for (std::size_t r = 0; r < t.size() && !hit; ++r) {
      if (used[r]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < cols.size(); ++k)
        ok = ok && std::abs(to_complex(t.entry(r, cols[k])) - std::complex<double>(printed[k], 0)) < 1e-8;
      if (ok) hit = r;
    }
    if (!hit) return std::nullopt;
    used[*hit] = true;
    out.push_back(*hit);
  }
  return out;
}

// Numeric inner product, independent of the exact arithmetic.
std::complex<double> numeric_inner(const CharacterTable& t, std::size_t a, std::size_t b) {
  std::complex<double> s = 0;
  for (std::size_t c = 0; c < t.classes().size(); ++c)
    s += static_cast<double>(t.classes()[c].members.size()) * to_complex(t.entry(a, c)) *
         std::conj(to_complex(t.entry(b, c)));
  return s / static_cast<double>(t.group().order());
}

std::size_t brute_centralizer(const FiniteGroup& g, Index x) {
  std::size_t n = 0;
  for (Index k = 0; k < g.order(); ++k) n += g.mul(k, x) == g.mul(x, k);
  return n;
}

CycNumber integer(const CharacterTable& t, long v) { return CycNumber(t.field_order(), Rational(v)); }

}  // namespace

TEST_CASE("S3 table equals the printed table") {
  auto t = compute_character_table(builtin("S3"));
  REQUIRE(t.size() == 3);
  PrintedTable printed{{"()", "(1 2)", "(1 2 3)"}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}};
  auto m = match_rows(t, printed);
  REQUIRE(m.has_value());
  // Exact entries, via the column mapping.
  const std::vector<std::vector<long>> exact{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(t.entry((*m)[i], class_of_cycles(t, printed.columns[k])) == integer(t, exact[i][k]));
  // Canonical order happens to be the printed one here.
  CHECK(*m == std::vector<std::size_t>{0, 1, 2});
  CHECK(t.row_names() == std::vector<std::string>{"ch1", "ch1'", "ch2"});
}

TEST_CASE("A5 table equals the printed table") {
  auto t = compute_character_table(builtin("A5"));
  REQUIRE(t.size() == 5);
  PrintedTable printed{{"()", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4 5)", "(1 3 5 2 4)"},
                       {{1, 1, 1, 1, 1},
                        {4, 0, 1, -1, -1},
                        {5, 1, -1, 0, 0},
                        {3, -1, 0, kAlpha, kAlphaPrime},
                        {3, -1, 0, kAlphaPrime, kAlpha}}};
  auto m = match_rows(t, printed);
  REQUIRE(m.has_value());

  // The two 5-cycle columns are distinct classes.
  const auto c5a = class_of_cycles(t, "(1 2 3 4 5)");
  const auto c5b = class_of_cycles(t, "(1 3 5 2 4)");
  CHECK(c5a != c5b);

  // alpha = (1+sqrt5)/2 is 1 + z + z^4 in Q[z_5]; 1 + z^2 + z^3 is the conjugate.
  const auto alpha = embed(parse_cyc("1 + 1*z^1 + 1*z^4 @5"), t.field_order());
  const auto alpha_prime = embed(parse_cyc("1 + 1*z^2 + 1*z^3 @5"), t.field_order());
  CHECK(std::abs(to_complex(alpha).real() - 1.6180339887) < 1e-8);
  CHECK(std::abs(to_complex(alpha_prime).real() + 0.6180339887) < 1e-8);
  const auto ch3 = (*m)[3], ch3p = (*m)[4];
  CHECK(t.entry(ch3, c5a) == alpha);
  CHECK(t.entry(ch3, c5b) == alpha_prime);
  CHECK(t.entry(ch3p, c5a) == alpha_prime);
  CHECK(t.entry(ch3p, c5b) == alpha);
  CHECK(to_display_string(t.entry(ch3, c5a)) == "-1*z^2 - 1*z^3 @5");

  // Integer entries exactly.
  const std::vector<std::vector<long>> ints{{1, 1, 1, 1, 1}, {4, 0, 1, -1, -1}, {5, 1, -1, 0, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(t.entry((*m)[i], class_of_cycles(t, printed.columns[k])) == integer(t, ints[i][k]));
  for (auto r : {ch3, ch3p}) {
    CHECK(t.entry(r, 0) == integer(t, 3));
    CHECK(t.entry(r, class_of_cycles(t, "(1 2)(3 4)")) == integer(t, -1));
    CHECK(t.entry(r, class_of_cycles(t, "(1 2 3)")) == integer(t, 0));
  }

  CHECK(t.row_names() == std::vector<std::string>{"ch1", "ch3", "ch3'", "ch4", "ch5"});
  CHECK(t.field_order() == 30);
}

TEST_CASE("Z2, Z4 and the trivial group") {
  auto z2 = compute_character_table(builtin("Z2"));
  REQUIRE(z2.size() == 2);
  CHECK(z2.entry(0, 1) == integer(z2, 1));
  CHECK(z2.entry(1, 1) == integer(z2, -1));
  auto z4 = compute_character_table(builtin("Z4"));
  CHECK(z4.size() == 4);
  CHECK(verify_table(z4).all_passed());
  Rational squares = 0;
  for (const auto& d : z4.degrees()) squares += d.constant_term() * d.constant_term();
  CHECK(squares == 4);
  auto one = compute_character_table(builtin("S1"));
  CHECK(one.size() == 1);
  CHECK(verify_table(one).all_passed());
  CHECK(class_function_space_check(one));
}

TEST_CASE("structure of computed tables across builtins") {
  for (auto name : {"S3", "S4", "S5", "A4", "A5", "D4", "D5", "D6", "D12", "Z5", "Z12", "Q8"}) {
    CAPTURE(name);
    auto g = builtin(name);
    auto t = compute_character_table(g);
    CHECK(t.size() == t.classes().size());
    CHECK(t.field_order() == g.exponent());
    CHECK(verify_table(t).all_passed());
    // trivial row first, identity class first
    for (std::size_t c = 0; c < t.classes().size(); ++c) CHECK(t.entry(0, c) == integer(t, 1));
    CHECK(t.classes()[0].representative == FiniteGroup::identity());
    // degrees nondecreasing
    auto deg = t.degrees();
    for (std::size_t i = 1; i < deg.size(); ++i) CHECK(deg[i - 1].constant_term() <= deg[i].constant_term());
    // integrality
    for (const auto& row : t.rows())
      for (const auto& v : row) {
        auto k = classify(v);
        CHECK((k == CycClass::rational_integer || k == CycClass::cyclotomic_integer));
      }
    // numeric first orthogonality
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b)
        CHECK(std::abs(numeric_inner(t, a, b) - std::complex<double>(a == b ? 1 : 0, 0)) < 1e-8);
    // second orthogonality against brute-force centralizers
    for (std::size_t x = 0; x < t.classes().size(); ++x)
      for (std::size_t y = 0; y < t.classes().size(); ++y) {
        std::complex<double> s = 0;
        for (std::size_t r = 0; r < t.size(); ++r) s += to_complex(t.entry(r, x)) * std::conj(to_complex(t.entry(r, y)));
        const double expect = x == y ? static_cast<double>(brute_centralizer(g, t.classes()[x].representative)) : 0.0;
        CHECK(std::abs(s - std::complex<double>(expect, 0)) < 1e-8);
      }
    CHECK(class_function_space_check(t));
  }
}

TEST_CASE("symmetric groups have integer tables") {
  const std::vector<std::vector<long>> degrees{{1, 1, 2}, {1, 1, 2, 3, 3}, {1, 1, 4, 4, 5, 5, 6}};
  int k = 3;
  for (const auto& expect : degrees) {
    auto t = compute_character_table(builtin("S" + std::to_string(k++)));
    for (const auto& row : t.rows())
      for (const auto& v : row) CHECK(classify(v) == CycClass::rational_integer);
    std::vector<long> got;
    for (const auto& d : t.degrees()) got.push_back(d.constant_term().get_num().get_si());
    CHECK(got == expect);
    // sign character present
    bool has_sign = false;
    for (const auto& row : t.rows()) {
      bool sign = true;
      for (std::size_t c = 0; c < t.classes().size(); ++c) {
        const auto& p = t.group().element(t.classes()[c].representative);
        std::size_t transpositions = 0;
        for (const auto& cy : p.cycles()) transpositions += cy.size() - 1;
        sign = sign && row[c] == integer(t, transpositions % 2 == 0 ? 1 : -1);
      }
      has_sign = has_sign || sign;
    }
    CHECK(has_sign);
  }
}

TEST_CASE("inner product and class multiplication coefficients") {
  auto t = compute_character_table(builtin("S3"));
  CHECK(inner_product(t, t.row(2), t.row(2)) == integer(t, 1));
  CHECK(inner_product(t, t.row(1), t.row(2)).is_zero());
  // K(transpositions)^2 hits the identity 3 times and each 3-cycle 3 times.
  CHECK(class_multiplication_coefficient(t.group(), t.classes(), 1, 1, 0) == 3);
  CHECK(class_multiplication_coefficient(t.group(), t.classes(), 1, 1, 2) == 3);
  CHECK(class_multiplication_coefficient(t.group(), t.classes(), 1, 1, 1) == 0);
  const auto p = dixon_prime(60, 30);
  CHECK(p % 30 == 1);
  CHECK(static_cast<double>(p) > 2 * std::sqrt(60.0));
  CHECK(p == 31);
  CHECK(dixon_prime(6, 6) == 7);
}

TEST_CASE("table symmetries") {
  auto s3 = compute_character_table(builtin("S3"));
  auto sym = table_symmetries(s3);
  REQUIRE(sym.rows.size() == 2);
  CHECK(sym.rows[1].row_perm == std::vector<std::size_t>{1, 0, 2});
  CHECK(sym.columns.size() == 1);

  auto a5 = compute_character_table(builtin("A5"));
  auto sa = table_symmetries(a5);
  CHECK(sa.rows.size() == 1);
  CHECK(sa.columns.size() == 1);
  CHECK(sa.rows[0].row_perm == std::vector<std::size_t>{0, 1, 2, 3, 4});

  auto z4 = compute_character_table(builtin("Z4"));
  auto sz = table_symmetries(z4);
  CHECK(sz.rows.size() == 4);
  CHECK(sz.columns.size() == 4);
  for (const auto& c : sz.columns) {
    auto sorted = c.column_perm;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::size_t>{0, 1, 2, 3});
  }

  // Q8: centre {1, -1} gives two column symmetries, four linear characters.
  auto q8 = table_symmetries(compute_character_table(builtin("Q8")));
  CHECK(q8.rows.size() == 4);
  CHECK(q8.columns.size() == 2);
}

TEST_CASE("perturbed entries fail verification") {
  auto a5 = compute_character_table(builtin("A5"));
  for (std::size_t r = 0; r < a5.size(); ++r)
    for (std::size_t c = 0; c < a5.classes().size(); ++c) {
      auto bad = a5.with_entry(r, c, a5.entry(r, c) + integer(a5, 1));
      auto rep = verify_table(bad);
      CHECK_FALSE(rep.all_passed());
      CHECK_FALSE(rep.check("row_orthonormality").passed);
      CHECK_FALSE(rep.check("row_orthonormality").counterexample.empty());
      CHECK(rep.failing_row.has_value());
    }
  auto s3 = compute_character_table(builtin("S3"));
  auto bad = s3.with_entry(2, 1, integer(s3, 1));
  CHECK_FALSE(verify_table(bad).check("column_orthogonality").passed);
  // Rows that are not linearly independent.
  auto dup = s3.with_rows({s3.row(0), s3.row(0), s3.row(2)});
  CHECK_FALSE(class_function_space_check(dup));
  CHECK_FALSE(verify_table(dup).all_passed());
}

TEST_CASE("computation is deterministic") {
  auto a = compute_character_table(builtin("S5"));
  auto b = compute_character_table(builtin("S5"));
  REQUIRE(a.size() == b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.classes().size(); ++c) CHECK(to_string(a.entry(r, c)) == to_string(b.entry(r, c)));
  CHECK(a.row_names() == b.row_names());
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(compute_character_table(builtin("Z200")), SizeError);
  CHECK(compute_character_table(builtin("S7")).size() == 15);
}
