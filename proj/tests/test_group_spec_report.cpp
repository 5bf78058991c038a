#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "galchar/error.hpp"
#include "galchar/group_spec.hpp"
#include "galchar/report.hpp"

using namespace galchar;

namespace {

long long parse_offset(std::string_view text) {
  try {
    parse_group_spec(text);
  } catch (const ParseError& e) {
    return static_cast<long long>(e.offset());
  }
  return -1;
}

// Every leaf value of a record, depth first.
void leaves(const Record& r, std::vector<std::string>& out) {
  for (const auto& e : r.entries()) {
    if (e.child) leaves(*e.child, out);
    else out.push_back(e.value);
  }
}

// Structured values all appear somewhere in the text rendering. Cyclotomic
// values are matched whole; anything else token by token.
void check_cross_render(const Report& rep) {
  std::vector<std::string> values;
  leaves(rep.record, values);
  CHECK_FALSE(values.empty());
  for (const auto& v : values) {
    CAPTURE(v);
    if (v.find('@') != std::string::npos) {
      CHECK(rep.text.find(v) != std::string::npos);
      continue;
    }
    std::istringstream in(v);
    std::string token;
    while (in >> token)
      if (token != "->") CHECK(rep.text.find(token) != std::string::npos);
  }
}

GroupPtr make(const char* name) { return std::make_shared<const FiniteGroup>(builtin(name)); }

}  // namespace

TEST_CASE("group specs: builtins and explicit generators") {
  auto a5 = parse_group_spec("A5");
  CHECK(a5.is_builtin());
  CHECK(instantiate(a5).order() == 60);
  CHECK(instantiate(parse_group_spec(" Q8 ")).order() == 8);
  auto s3 = parse_group_spec("deg=3; (1 2),(1 2 3)");
  CHECK_FALSE(s3.is_builtin());
  CHECK(s3.degree == 3);
  CHECK(s3.generators.size() == 2);
  CHECK(instantiate(s3).order() == 6);
  auto inferred = parse_group_spec("(1 2)(3 4),(1 3)");
  CHECK(inferred.degree == 4);
  CHECK(instantiate(inferred).order() == 8);
  CHECK(instantiate(parse_group_spec("deg=6; (1 2)")).degree() == 6);
  auto trivial = parse_group_spec("deg=4;");
  CHECK(trivial.generators.empty());
  CHECK(instantiate(trivial).order() == 1);
  CHECK_THROWS_AS(instantiate(parse_group_spec("S7"), 100), SizeError);
}

TEST_CASE("group specs: round trip") {
  for (auto text : {"S3", "A5", "Z12", "D7", "Q8", "deg=3; (1 2),(1 2 3)", "(1 2)(3 4),(1 3)", "deg=5; ()"}) {
    auto spec = parse_group_spec(text);
    CHECK(parse_group_spec(to_string(spec)) == spec);
  }
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    GroupSpec spec;
    spec.degree = 1 + rng() % 7;
    const auto ngen = rng() % 3;
    for (unsigned g = 0; g < ngen; ++g) {
      std::vector<Permutation::Point> v(spec.degree);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Permutation::Point>(i);
      std::shuffle(v.begin(), v.end(), rng);
      spec.generators.emplace_back(v);
    }
    CHECK(parse_group_spec(to_string(spec)) == spec);
  }
}

TEST_CASE("group specs: errors carry offsets") {
  CHECK(parse_offset("(1 2") == 3);
  CHECK(parse_offset("X5") == 0);
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("S") == 0);
  CHECK(parse_offset("S3x") == 2);
  CHECK(parse_offset("deg=3; (1 4)") == 10);
  CHECK(parse_offset("deg=3; (1 2 1)") == 12);
  CHECK(parse_offset("deg=; (1 2)") == 4);
  CHECK(parse_offset("deg=3 (1 2)") == 6);
  CHECK(parse_offset("deg=3; (1 2),,(1 3)") >= 12);
  CHECK_THROWS_AS(instantiate(parse_group_spec("S9")), DomainError);
}

TEST_CASE("reports render both formats consistently") {
  auto s3 = make("S3");
  auto a5 = make("A5");
  auto ts3 = compute_character_table(s3);
  auto ta5 = compute_character_table(a5);
  std::vector<Report> reports{
      table_report("S3", ts3),
      table_report("A5", ta5),
      galois_report("A5", ta5, {1, 7, 11, 13}),
      pairs_report("S3", pair_classes(s3)),
      braid_report("S3", *s3, BraidWord::parse("s1 s2^-1"), ElementPair{1, 2}, ElementTriple{1, 2, 3}),
      cyclic_cover_report(6, std::nullopt),
      cyclic_cover_report(12, 7),
      dihedral_cover_report(3, 5),
      dihedral_cover_report(2, std::nullopt),
      tuples_report("S3", *s3, 3),
  };
  for (const auto& r : reports) {
    CHECK_FALSE(r.text.empty());
    CHECK(r.render(OutputFormat::text) == r.text);
    CHECK(r.render(OutputFormat::structured) == r.record.render());
    check_cross_render(r);
  }
}

TEST_CASE("report contents") {
  auto a5 = make("A5");
  auto t = compute_character_table(a5);
  auto g = galois_report("A5", t, {7});
  CHECK(g.text.find("ell=7 rows=(ch3 ch3') cols=(5a 5b) compatible=true") != std::string::npos);
  auto structured = g.render(OutputFormat::structured);
  for (auto key : {"group: A5", "order: 60", "exponent: 30", "ell: 7", "row_perm: (ch3 ch3')", "col_perm: (5a 5b)",
                   "compatible: true"})
    CHECK(structured.find(key) != std::string::npos);

  auto tab = table_report("A5", t);
  CHECK(tab.text.find("1.6180339887") != std::string::npos);
  CHECK(tab.text.find("-0.6180339887") != std::string::npos);
  auto ts = tab.render(OutputFormat::structured);
  for (auto key : {"group: A5", "classes: 5", "rows: 5"}) CHECK(ts.find(key) != std::string::npos);

  auto p = pairs_report("S3", pair_classes(make("S3")));
  CHECK(p.text.find("classes=8") != std::string::npos);
  auto ps = p.render(OutputFormat::structured);
  CHECK(ps.find("pair_classes: 8") != std::string::npos);
  CHECK(ps.find("orbits: 3") != std::string::npos);

  auto c = dihedral_cover_report(3, 5);
  CHECK(c.text.find("(-1,1) -> (-1,2)") != std::string::npos);
  auto cs = c.render(OutputFormat::structured);
  CHECK(cs.find("fiber {") != std::string::npos);
  CHECK(cs.find("deck {") != std::string::npos);

  auto cy = cyclic_cover_report(12, 7);
  CHECK(cy.text.find("g3 -> g9") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  auto once = [] {
    auto s4 = make("S4");
    auto t = compute_character_table(s4);
    return table_report("S4", t).record.render() + galois_report("S4", t, {5, 7}).text +
           pairs_report("S4", pair_classes(s4)).record.render() + dihedral_cover_report(4, std::nullopt).text;
  };
  CHECK(once() == once());
}

TEST_CASE("numeric strings and element tuples") {
  CHECK(numeric_string(CycNumber(5, Rational(1, 2))) == "0.5000000000");
  CHECK(numeric_string(cyc_root(4, 1)) == "0.0000000000+1.0000000000i");
  auto s3 = builtin("S3");
  auto parsed = parse_element_tuple(s3, "(1 2),(1 2 3)");
  REQUIRE(parsed.size() == 2);
  CHECK(to_cycle_string(s3.element(parsed[0])) == "(1 2)");
  CHECK(parse_element_tuple(s3, "((1 2),(1 2 3))") == parsed);
  CHECK(pair_string(s3, {parsed[0], parsed[1]}) == "((1 2),(1 2 3))");
  CHECK_THROWS_AS(parse_element_tuple(s3, "(1 2),(1 4)"), ParseError);
  auto z3 = builtin("Z3");
  CHECK_THROWS_AS(parse_element_tuple(z3, "(1 2)"), DomainError);
}

TEST_CASE("record rendering") {
  Record r;
  r.field("a", std::string("x"));
  r.block("b").field("c", std::size_t{3}).field("d", true);
  CHECK(r.render() == "a: x\nb {\n  c: 3\n  d: true\n}\n");
}
