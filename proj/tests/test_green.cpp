#include <doctest.h>

#include <algorithm>
#include <set>

#include "greengb/errors.hpp"
#include "greengb/green.hpp"
#include "helpers.hpp"

using namespace greengb;
using greengb::testing::fixture_presentation;
using greengb::testing::word_of;

TEST_SUITE_BEGIN("green");

namespace {

MixedSystem completed_base(const Presentation& p) {
  CompletionResult res = complete(presentation_system(p));
  REQUIRE(res.is_complete());
  return res.basis;
}

std::vector<std::string> rendered(const std::vector<Polynomial>& polys, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(format_poly(p, a));
  return out;
}

// partition of words, for readable comparisons
std::set<std::set<std::string>> as_sets(const std::vector<std::vector<std::size_t>>& classes,
                                        const GreenClassification& gc) {
  std::set<std::set<std::string>> out;
  for (const auto& cls : classes) {
    std::set<std::string> group;
    for (auto i : cls) group.insert(format_word(gc.elements.elements[i], gc.alphabet));
    out.insert(group);
  }
  return out;
}

bool refines(const std::vector<std::vector<std::size_t>>& fine,
             const std::vector<std::vector<std::size_t>>& coarse) {
  for (const auto& f : fine) {
    bool inside_one = false;
    for (const auto& c : coarse) {
      bool all = true;
      for (auto i : f) {
        if (std::find(c.begin(), c.end(), i) == c.end()) all = false;
      }
      if (all) inside_one = true;
    }
    if (!inside_one) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one-sided bases of the one-generator fixture") {
  Presentation p = fixture_presentation("ex61.sgp");
  MixedSystem base = completed_base(p);
  const Word x = word_of("x", p.alphabet);
  const Word xx = word_of("x x", p.alphabet);

  IdealBasis rx = one_sided_basis(base, Side::right, x);
  CHECK(rx.status == CompletionStatus::complete);
  CHECK(rendered(rx.tagged_part, p.alphabet) == std::vector<std::string>{"<| x"});

  IdealBasis rxx = one_sided_basis(base, Side::right, xx);
  CHECK(rendered(rxx.tagged_part, p.alphabet) == std::vector<std::string>{"<| x x"});

  IdealBasis lx = one_sided_basis(base, Side::left, x);
  CHECK(rendered(lx.tagged_part, p.alphabet) == std::vector<std::string>{"x |>"});
  IdealBasis lxx = one_sided_basis(base, Side::left, xx);
  CHECK(rendered(lxx.tagged_part, p.alphabet) == std::vector<std::string>{"x x |>"});

  CHECK(ideals_equal(rx, rxx) == IdealRelation::different);
  CHECK(ideals_equal(rx, rx) == IdealRelation::equal);
  CHECK_THROWS_AS(ideals_equal(rx, lx), SideMismatchError);
}

TEST_CASE("the symmetric-group table of one-sided bases") {
  Presentation p = fixture_presentation("sym2.sgp");
  MixedSystem base = completed_base(p);
  const struct {
    const char* element;
    std::vector<std::string> right;
    std::vector<std::string> left;
  } rows[] = {
      {"e", {"<| e"}, {"e |>"}},
      {"s", {"<| e", "<| s"}, {"e |>", "s |>"}},
      {"e s", {"<| e"}, {"e s |>", "e s e |>"}},
      {"s e", {"<| s e", "<| e s e"}, {"e |>"}},
      {"s s", {"<| e", "<| s"}, {"e |>", "s |>"}},
      {"e s e", {"<| e s e"}, {"e s e |>"}},
      {"s e s", {"<| s e", "<| e s e"}, {"e s |>", "e s e |>"}},
  };
  for (const auto& row : rows) {
    const Word w = word_of(row.element, p.alphabet);
    IdealBasis right = one_sided_basis(base, Side::right, w);
    IdealBasis left = one_sided_basis(base, Side::left, w);
    CAPTURE(row.element);
    CHECK(right.status == CompletionStatus::complete);
    CHECK(left.status == CompletionStatus::complete);
    CHECK(rendered(right.tagged_part, p.alphabet) == row.right);
    CHECK(rendered(left.tagged_part, p.alphabet) == row.left);
  }

  // s and ss generate the same right ideal
  IdealBasis rs = one_sided_basis(base, Side::right, word_of("s", p.alphabet));
  IdealBasis rss = one_sided_basis(base, Side::right, word_of("s s", p.alphabet));
  CHECK(ideals_equal(rs, rss) == IdealRelation::equal);
  // literal set equality of the interreduced monic tagged parts also holds
  CHECK(rendered(rs.tagged_part, p.alphabet) == rendered(rss.tagged_part, p.alphabet));
}

TEST_CASE("classification of the one-generator fixture") {
  GreenClassification gc = classify(fixture_presentation("ex61.sgp"));
  CHECK(gc.reliable);
  CHECK(as_sets(gc.h_classes, gc) == std::set<std::set<std::string>>{{"x"}, {"x x"}});
  CHECK(gc.h_classes.size() == 2);
  CHECK(gc.r_classes.size() == 2);
  CHECK(gc.l_classes.size() == 2);
  CHECK(gc.d_classes.size() == 2);
}

TEST_CASE("classification of the symmetric group") {
  GreenClassification gc = classify(fixture_presentation("sym2.sgp"));
  REQUIRE(gc.elements.elements.size() == 7);
  CHECK(gc.reliable);

  using Sets = std::set<std::set<std::string>>;
  CHECK(as_sets(gc.r_classes, gc) ==
        Sets{{"s", "s s"}, {"e", "e s"}, {"s e", "s e s"}, {"e s e"}});
  CHECK(as_sets(gc.l_classes, gc) ==
        Sets{{"s", "s s"}, {"e", "s e"}, {"e s", "s e s"}, {"e s e"}});
  CHECK(as_sets(gc.h_classes, gc) ==
        Sets{{"s", "s s"}, {"e"}, {"s e"}, {"e s"}, {"s e s"}, {"e s e"}});
  CHECK(as_sets(gc.d_classes, gc) ==
        Sets{{"s", "s s"}, {"e", "e s", "s e", "s e s"}, {"e s e"}});

  SUBCASE("H refines R and L; D is coarser than both") {
    CHECK(refines(gc.h_classes, gc.r_classes));
    CHECK(refines(gc.h_classes, gc.l_classes));
    CHECK(refines(gc.r_classes, gc.d_classes));
    CHECK(refines(gc.l_classes, gc.d_classes));
  }

  SUBCASE("every h-class is the intersection of its r- and l-class") {
    for (const auto& h : gc.h_classes) {
      const std::size_t i = h.front();
      const auto r = std::find_if(gc.r_classes.begin(), gc.r_classes.end(), [&](const auto& c) {
        return std::find(c.begin(), c.end(), i) != c.end();
      });
      const auto l = std::find_if(gc.l_classes.begin(), gc.l_classes.end(), [&](const auto& c) {
        return std::find(c.begin(), c.end(), i) != c.end();
      });
      std::vector<std::size_t> expected;
      for (auto j : *r) {
        if (std::find(l->begin(), l->end(), j) != l->end()) expected.push_back(j);
      }
      CHECK(h == expected);
    }
  }

  SUBCASE("membership sanity: each element lies in its own one-sided ideals") {
    for (std::size_t i = 0; i < gc.elements.elements.size(); ++i) {
      CHECK(ideal_member(gc.right_bases[i], gc.elements.elements[i]));
      CHECK(ideal_member(gc.left_bases[i], gc.elements.elements[i]));
    }
  }

  SUBCASE("ideals_equal is an equivalence on the fixture bases") {
    const auto& bases = gc.right_bases;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      CHECK(ideals_equal(bases[i], bases[i]) == IdealRelation::equal);
      for (std::size_t j = 0; j < bases.size(); ++j) {
        CHECK(ideals_equal(bases[i], bases[j]) == ideals_equal(bases[j], bases[i]));
        for (std::size_t k = 0; k < bases.size(); ++k) {
          if (ideals_equal(bases[i], bases[j]) == IdealRelation::equal &&
              ideals_equal(bases[j], bases[k]) == IdealRelation::equal) {
            CHECK(ideals_equal(bases[i], bases[k]) == IdealRelation::equal);
          }
        }
      }
    }
  }
}

TEST_CASE("bicyclic classification at a bound") {
  GreenClassification gc = classify(fixture_presentation("bicyclic.sgp"), {}, 6);
  CHECK_FALSE(gc.reliable);
  CHECK(gc.elements.truncated);
  CHECK(gc.d_classes.size() == 1);
  // all H-classes are singletons
  for (const auto& h : gc.h_classes) CHECK(h.size() == 1);
  CHECK(gc.h_classes.size() == gc.elements.elements.size());

  // right bases of q^n p^m are { <| q^n }, left bases { p^m |> }
  const Alphabet& a = gc.alphabet;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      Word w;
      for (int k = 0; k < n; ++k) w = w + word_of("q", a);
      for (int k = 0; k < m; ++k) w = w + word_of("p", a);
      auto it = std::find(gc.elements.elements.begin(), gc.elements.elements.end(), w);
      REQUIRE(it != gc.elements.elements.end());
      const std::size_t i = static_cast<std::size_t>(it - gc.elements.elements.begin());
      Word qn, pm;
      for (int k = 0; k < n; ++k) qn = qn + word_of("q", a);
      for (int k = 0; k < m; ++k) pm = pm + word_of("p", a);
      CHECK(rendered(gc.right_bases[i].tagged_part, a) ==
            std::vector<std::string>{"<| " + format_word(qn, a)});
      CHECK(rendered(gc.left_bases[i].tagged_part, a) ==
            std::vector<std::string>{format_word(pm, a) + " |>"});
    }
  }
}

TEST_CASE("mirror coherence: the reversed presentation swaps R and L") {
  Presentation p = fixture_presentation("sym2.sgp");
  Presentation reversed = p;
  for (auto& [lhs, rhs] : reversed.relations) {
    lhs = reverse(lhs);
    rhs = reverse(rhs);
  }
  GreenClassification gc = classify(p);
  GreenClassification rg = classify(reversed);

  // map element indices through reversal
  auto reverse_classes = [&](const std::vector<std::vector<std::size_t>>& classes,
                             const GreenClassification& from) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : classes) {
      std::set<std::string> group;
      for (auto i : cls) {
        group.insert(format_word(reverse(from.elements.elements[i]), from.alphabet));
      }
      out.insert(group);
    }
    return out;
  };
  CHECK(reverse_classes(rg.r_classes, rg) == as_sets(gc.l_classes, gc));
  CHECK(reverse_classes(rg.l_classes, rg) == as_sets(gc.r_classes, gc));
  CHECK(reverse_classes(rg.h_classes, rg) == as_sets(gc.h_classes, gc));
  CHECK(reverse_classes(rg.d_classes, rg) == as_sets(gc.d_classes, gc));
}

TEST_CASE("eggbox rendering") {
  SUBCASE("symmetric group layout") {
    GreenClassification gc = classify(fixture_presentation("sym2.sgp"));
    std::string eggbox = render_eggbox(gc);
    CHECK(eggbox ==
          "+--------+\n"
          "| s, s s |\n"
          "+--------+\n"
          "\n"
          "+-----+-------+\n"
          "| e   | e s   |\n"
          "+-----+-------+\n"
          "| s e | s e s |\n"
          "+-----+-------+\n"
          "\n"
          "+-------+\n"
          "| e s e |\n"
          "+-------+\n");
  }
  SUBCASE("two single-cell blocks") {
    GreenClassification gc = classify(fixture_presentation("ex61.sgp"));
    std::string eggbox = render_eggbox(gc);
    CHECK(eggbox ==
          "+---+\n"
          "| x |\n"
          "+---+\n"
          "\n"
          "+-----+\n"
          "| x x |\n"
          "+-----+\n");
  }
  SUBCASE("empty classification renders as an empty string") {
    GreenClassification gc;
    CHECK(render_eggbox(gc).empty());
  }
  SUBCASE("zero element becomes its own block, truncation is noted") {
    GreenClassification gc = classify(fixture_presentation("poly2.mon"), {}, 1);
    CHECK(gc.has_zero);
    CHECK_FALSE(gc.reliable);
    std::string eggbox = render_eggbox(gc);
    CHECK(eggbox.find("| 0 |") != std::string::npos);
    CHECK(eggbox.find("note:") != std::string::npos);
  }
}

TEST_CASE("a reducible generator yields the ideal of its congruence class") {
  Presentation p = fixture_presentation("ex61.sgp");
  MixedSystem base = completed_base(p);
  // x^3 = x^2 in the semigroup, so the ideals coincide
  IdealBasis cubed = one_sided_basis(base, Side::right, word_of("x x x", p.alphabet));
  IdealBasis squared = one_sided_basis(base, Side::right, word_of("x x", p.alphabet));
  CHECK(cubed.tagged_part == squared.tagged_part);
  CHECK(ideals_equal(cubed, squared) == IdealRelation::equal);
}

TEST_CASE("classify refuses algebra presentations and incompletable limits") {
  Presentation algebra = fixture_presentation("ex33.sys");
  CHECK_THROWS_AS(classify(algebra), std::invalid_argument);

  Presentation p = fixture_presentation("bicyclic.sgp");
  CompletionLimits tiny;
  tiny.max_passes = 1;  // the bicyclic system needs more than one pass
  CHECK_THROWS_AS(classify(p, tiny, 4), IncompleteSystemError);
}

TEST_SUITE_END();
