#include <doctest.h>

#include "greengb/completion.hpp"
#include "greengb/errors.hpp"
#include "greengb/presentation.hpp"
#include "helpers.hpp"

using namespace greengb;
using greengb::testing::fixture_presentation;
using greengb::testing::word_of;

TEST_SUITE_BEGIN("presentation");

TEST_CASE("parsing the fixtures") {
  SUBCASE("one-generator semigroup") {
    Presentation p = fixture_presentation("ex61.sgp");
    CHECK(p.kind == PresentationKind::semigroup);
    CHECK(p.alphabet.size() == 1);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].first == word_of("x x x", p.alphabet));
    CHECK(p.relations[0].second == word_of("x x", p.alphabet));
  }
  SUBCASE("symmetric group") {
    Presentation p = fixture_presentation("sym2.sgp");
    CHECK(p.relations.size() == 6);
    CHECK(p.alphabet.index_of("e") == 0);
    CHECK(p.alphabet.index_of("s") == 1);
  }
  SUBCASE("polycyclic monoid with zero") {
    Presentation p = fixture_presentation("poly2.mon");
    CHECK(p.kind == PresentationKind::monoid);
    CHECK(p.alphabet.allows_empty_word());
    CHECK(p.alphabet.zero_letter().has_value());
    CHECK(p.relations.size() == 12);
  }
  SUBCASE("algebra kind with tagged members") {
    Presentation p = fixture_presentation("ex33.sys");
    CHECK(p.kind == PresentationKind::algebra);
    CHECK(p.polynomials.size() == 2);
    CHECK(p.tagged_polynomials.size() == 2);
  }
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("empty word in a semigroup relation") {
    try {
      parse_presentation("kind semigroup\ngens x\nrel 1 = x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  CHECK_THROWS_AS(parse_presentation("gens x\nrel x = x\n"), ParseError);  // missing kind
  CHECK_THROWS_AS(parse_presentation("kind semigroup\n"), ParseError);    // missing gens
  CHECK_THROWS_AS(parse_presentation("kind group\ngens x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind semigroup\ngens x\nrel x y = x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind semigroup\ngens x\nrelation x = x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind semigroup\ngens x\nrel x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind semigroup\ngens x\npoly x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind algebra\ngens x\nrel x = x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind semigroup\ngens x\nzero y\n"), ParseError);
}

TEST_CASE("relation translation") {
  SUBCASE("single relation") {
    Presentation p = fixture_presentation("ex61.sgp");
    auto polys = relations_to_polynomials(p);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0] == parse_poly("x x x - x x", p.alphabet));
  }
  SUBCASE("orientation follows deglex, not the written order") {
    Presentation p = parse_presentation("kind semigroup\ngens x\nrel x x = x x x\n");
    auto polys = relations_to_polynomials(p);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].leading().term == word_of("x x x", p.alphabet));
  }
  SUBCASE("symmetric group set") {
    Presentation p = fixture_presentation("sym2.sgp");
    auto polys = relations_to_polynomials(p);
    REQUIRE(polys.size() == 6);
    CHECK(polys[0] == parse_poly("e e - e", p.alphabet));
    CHECK(polys[5] == parse_poly("e s e s - e s e", p.alphabet));
  }
  SUBCASE("zero-symbol relations become single terms, degenerate ones drop") {
    Presentation p = fixture_presentation("poly2.mon");
    std::vector<std::string> warnings;
    auto polys = relations_to_polynomials(p, &warnings);
    REQUIRE(polys.size() == 4);  // the eight o-relations vanish
    CHECK(warnings.size() == 8);
    // file order is preserved; canonical sorting happens at system construction
    CHECK(polys[0] == parse_poly("xa ya - 1", p.alphabet));
    CHECK(polys[1] == parse_poly("xb yb - 1", p.alphabet));
    CHECK(polys[2] == parse_poly("xa yb", p.alphabet));
    CHECK(polys[3] == parse_poly("xb ya", p.alphabet));
  }
  SUBCASE("degenerate relation warns") {
    Presentation p = parse_presentation("kind semigroup\ngens x\nrel x x = x x\n");
    std::vector<std::string> warnings;
    CHECK(relations_to_polynomials(p, &warnings).empty());
    CHECK(warnings.size() == 1);
  }
}

TEST_CASE("element enumeration") {
  SUBCASE("symmetric group has exactly seven elements") {
    Presentation p = fixture_presentation("sym2.sgp");
    MixedSystem basis = complete(presentation_system(p)).basis;
    ElementEnumeration e = enumerate_elements(basis, 8);
    CHECK_FALSE(e.truncated);
    REQUIRE(e.elements.size() == 7);
    const char* expected[] = {"e", "s", "e s", "s e", "s s", "e s e", "s e s"};
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(e.elements[i] == word_of(expected[i], p.alphabet));
    }
  }
  SUBCASE("one-generator fixture") {
    Presentation p = fixture_presentation("ex61.sgp");
    MixedSystem basis = complete(presentation_system(p)).basis;
    ElementEnumeration e = enumerate_elements(basis, 8);
    CHECK_FALSE(e.truncated);
    REQUIRE(e.elements.size() == 2);
    CHECK(e.elements[0] == word_of("x", p.alphabet));
    CHECK(e.elements[1] == word_of("x x", p.alphabet));
  }
  SUBCASE("bicyclic fixture agrees with a brute-force scan and truncates") {
    Presentation p = fixture_presentation("bicyclic.sgp");
    MixedSystem basis = complete(presentation_system(p)).basis;
    ElementEnumeration e = enumerate_elements(basis, 3);
    CHECK(e.truncated);

    // independent scan: all words of length <= 3 that contain no leading word
    std::vector<Word> leads;
    for (const auto& rule : basis.untagged()) leads.push_back(rule.leading().term);
    std::vector<Word> expected;
    std::vector<Word> level = {Word{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const auto& stem : level) {
        for (int letter = 0; letter < 3; ++letter) {
          next.push_back(stem + Word::single(letter));
        }
      }
      level = next;
      for (const auto& w : level) {
        bool irreducible = true;
        for (const auto& lead : leads) {
          if (!find_subword_occurrences(lead, w).empty()) {
            if (lead.size() <= w.size()) irreducible = false;
          }
        }
        if (irreducible) expected.push_back(w);
      }
    }
    std::sort(expected.begin(), expected.end(), DeglexLess{});
    REQUIRE(e.elements.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(e.elements[i] == expected[i]);
  }
  SUBCASE("monoid kind includes the empty word, zero symbol excluded") {
    Presentation p = fixture_presentation("poly2.mon");
    MixedSystem basis = complete(presentation_system(p)).basis;
    ElementEnumeration e = enumerate_elements(basis, 1);
    CHECK(e.truncated);
    REQUIRE(e.elements.size() == 5);  // 1, xa, xb, ya, yb; o excluded
    CHECK(e.elements[0].empty());
  }
  SUBCASE("every short word reduces to exactly one enumerated element") {
    Presentation p = fixture_presentation("sym2.sgp");
    MixedSystem basis = complete(presentation_system(p)).basis;
    ElementEnumeration e = enumerate_elements(basis, 8);
    std::vector<Word> level = {Word{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const auto& stem : level) {
        for (int letter = 0; letter < 2; ++letter) next.push_back(stem + Word::single(letter));
      }
      level = next;
      for (const auto& w : level) {
        Polynomial nf = normal_form(Polynomial::monomial(w, 1, Tag::untagged), basis).poly;
        REQUIRE(nf.term_count() == 1);
        const Word rep = nf.leading().term;
        CHECK(std::find(e.elements.begin(), e.elements.end(), rep) != e.elements.end());
      }
    }
  }
  SUBCASE("tagged members are rejected") {
    Presentation p = fixture_presentation("ex61.sgp");
    MixedSystem with_tagged = MixedSystem::make(
        p.alphabet, {parse_poly("<| x", p.alphabet)}, relations_to_polynomials(p));
    CHECK_THROWS_AS(enumerate_elements(with_tagged, 4), InvalidSystemError);
  }
}

TEST_CASE("format round trip") {
  for (const char* name : {"ex61.sgp", "sym2.sgp", "bicyclic.sgp", "poly2.mon", "ex33.sys"}) {
    Presentation p = fixture_presentation(name);
    std::string text = format_presentation(p);
    Presentation q = parse_presentation(text);
    CHECK(q.kind == p.kind);
    CHECK(q.alphabet == p.alphabet);
    CHECK(q.relations == p.relations);
    CHECK(q.polynomials == p.polynomials);
    CHECK(q.tagged_polynomials == p.tagged_polynomials);
    CHECK(format_presentation(q) == text);
  }
}

TEST_SUITE_END();
