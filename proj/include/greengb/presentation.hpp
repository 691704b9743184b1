#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greengb/reduction.hpp"

namespace greengb {

enum class PresentationKind { semigroup, monoid, algebra };

std::string kind_name(PresentationKind k);

/*
 * Presentation file format (UTF-8, line oriented, "#" starts a comment):
 *
 *   kind semigroup            # or: monoid | algebra
 *   gens e s                  # listing order = ascending precedence
 *   zero o                    # optional, designates the semigroup zero
 *   rel s s s = s             # semigroup/monoid kinds; "1" is the empty word
 *   poly x x y - 3 y x        # algebra kind; tagged members are allowed
 */
struct Presentation {
  PresentationKind kind = PresentationKind::semigroup;
  Alphabet alphabet;
  std::vector<std::pair<Word, Word>> relations;  ///< semigroup/monoid kinds
  std::vector<Polynomial> polynomials;           ///< algebra kind, untagged members
  std::vector<Polynomial> tagged_polynomials;    ///< algebra kind, tagged members
};

/// Parses and validates a presentation file. Throws ParseError with the
/// offending line number on malformed input.
Presentation parse_presentation(std::string_view text);

/// Canonical rendering; parse(format(p)) reproduces p.
std::string format_presentation(const Presentation& p);

/**
 * @brief One monic polynomial `l - r` per relation, oriented so the deglex-
 * larger word leads.
 *
 * Relations against the designated zero symbol become single-term
 * polynomials (any term containing the zero symbol collapses). Degenerate
 * relations yield the zero polynomial and are dropped with a warning.
 */
std::vector<Polynomial> relations_to_polynomials(const Presentation& p,
                                                 std::vector<std::string>* warnings = nullptr);

/// The mixed system (∅, P) of a presentation: translated relations for
/// semigroup/monoid kinds, the stated members for algebra kind.
MixedSystem presentation_system(const Presentation& p);

/// Irreducible words up to a length bound, in ascending deglex order.
struct ElementEnumeration {
  std::vector<Word> elements;
  bool truncated = false;
  std::size_t length_bound = 0;
};

/**
 * @brief All irreducible words of length <= length_bound under a completed
 * untagged system, in ascending deglex order.
 *
 * Requires basis.tagged() empty and the untagged part complete. Words
 * containing the zero symbol are excluded (they all denote the zero
 * element); the empty word is included exactly when the alphabet allows
 * it. `truncated` is set when some irreducible word at the bound extends
 * to an irreducible word one letter longer, or when max_elements stops
 * the enumeration early.
 */
ElementEnumeration enumerate_elements(const MixedSystem& basis, std::size_t length_bound,
                                      std::size_t max_elements =
                                          std::numeric_limits<std::size_t>::max());

}  // namespace greengb
