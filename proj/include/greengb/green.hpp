#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "greengb/completion.hpp"
#include "greengb/presentation.hpp"

namespace greengb {

enum class Side { right, left };

std::string side_name(Side s);

/**
 * @brief Completed one-sided ideal basis of an element: the tagged
 * generators beyond the shared untagged basis.
 *
 * Right bases carry left tags ("<| w"); left bases carry right tags
 * ("w |>") and are computed in the word-reversed presentation. `context`
 * is the completed untagged system in the computation orientation (for
 * left bases: the completed reversal of P) shared by all bases of one run.
 */
struct IdealBasis {
  Word element;
  Side side = Side::right;
  std::vector<Polynomial> tagged_part;
  CompletionStatus status = CompletionStatus::bound_exceeded;
  std::shared_ptr<const MixedSystem> context;
};

/// Completes ({tag(element)}, P) on the requested side. The element should
/// be irreducible under completedP; the untagged part of completedP must
/// be complete.
IdealBasis one_sided_basis(const MixedSystem& completedP, Side side, const Word& element,
                           const CompletionLimits& limits = {});

/// Same, for an ideal generated by several elements.
IdealBasis one_sided_basis_multi(const MixedSystem& completedP, Side side,
                                 const std::vector<Word>& generators,
                                 const CompletionLimits& limits = {});

/// Decides membership of an element's congruence class in the one-sided
/// ideal: the tagged monomial of `element` reduces to zero under the
/// basis together with its shared untagged context. Decidable (a "no" is
/// definitive) when the basis status is complete.
bool ideal_member(const IdealBasis& basis, const Word& element);

enum class IdealRelation { equal, different, unknown };

/// Mutual zero-reduction test: equal iff every tagged generator of a
/// reduces to zero under b's basis and vice versa. `unknown` when either
/// status is bound_exceeded. Throws SideMismatchError on different sides.
IdealRelation ideals_equal(const IdealBasis& a, const IdealBasis& b);

/**
 * @brief Green's classification of the enumerated elements.
 *
 * Partitions hold element indices. h_classes refine both r_classes and
 * l_classes; d_classes are the transitive closure of the union of the R-
 * and L-relations, ordered top-down by descending two-sided-ideal
 * containment where that is decidable within limits. `reliable` is false
 * when any completion hit bounds or the enumeration was truncated.
 */
struct GreenClassification {
  Alphabet alphabet;
  ElementEnumeration elements;
  std::vector<std::vector<std::size_t>> r_classes;
  std::vector<std::vector<std::size_t>> l_classes;
  std::vector<std::vector<std::size_t>> h_classes;
  std::vector<std::vector<std::size_t>> d_classes;
  std::vector<IdealBasis> right_bases;  ///< indexed like elements
  std::vector<IdealBasis> left_bases;
  bool reliable = true;
  bool has_zero = false;
};

/// Enumerates elements, computes both one-sided bases per element and the
/// four partitions. Throws IncompleteSystemError when the defining
/// relations do not complete within limits.
GreenClassification classify(const Presentation& pres, const CompletionLimits& limits = {},
                             std::size_t length_bound = 64);

/**
 * @brief ASCII eggbox: one bordered grid per D-class, rows R-classes,
 * columns L-classes, cells listing H-class members (a count when more
 * than four). The zero element, if any, is its own 1x1 block. A note is
 * appended when the classification is not reliable.
 */
std::string render_eggbox(const GreenClassification& gc);

nlohmann::json classification_to_json(const GreenClassification& gc);

}  // namespace greengb
