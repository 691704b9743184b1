#pragma once

// Brute-force checkers used only by tests. These deliberately avoid the
// tagged machinery: Green's relations come from a literal multiplication
// table, membership from exact linear algebra over the normal-form basis,
// so agreement with the engine is meaningful evidence.

#include <cstddef>
#include <vector>

#include "greengb/green.hpp"
#include "greengb/presentation.hpp"

namespace greengb::oracle {

/// Multiplication table of a finite semigroup or monoid, over the
/// enumerated normal forms: product[i][j] = index of NF(element_i element_j).
struct FiniteSemigroupTable {
  std::vector<Word> elements;
  std::vector<std::vector<std::size_t>> product;
};

/// Concatenate-then-normal-form. Refuses (throws) when the enumeration
/// truncates at probe_bound or when the presentation designates a zero
/// symbol (the zero element is not among the enumerated words).
FiniteSemigroupTable build_table(const MixedSystem& completedP, std::size_t probe_bound = 64);

struct Partitions {
  std::vector<std::vector<std::size_t>> r;
  std::vector<std::vector<std::size_t>> l;
  std::vector<std::vector<std::size_t>> h;
  std::vector<std::vector<std::size_t>> d;
};

/// Green's relations by direct enumeration: for each x the sets xS + {x}
/// and Sx + {x} computed literally from the table, partitioned by set
/// equality; H by intersection, D by transitive closure.
Partitions green_by_enumeration(const FiniteSemigroupTable& table);

enum class Membership { yes, no_within_bound };

/**
 * One-sided ideal membership by bounded exact linear algebra: spans
 * {NF(g v) : g generator, |v| <= degree_bound} (or {NF(v g)} on the left)
 * over the completed untagged basis and solves for the candidate as an
 * exact rational combination. "yes" is definitive; "no_within_bound" is
 * not a proof of non-membership.
 */
Membership member_by_linear_algebra(const MixedSystem& completedP, Side side,
                                    const std::vector<Word>& generators,
                                    const Polynomial& candidate, std::size_t degree_bound);

}  // namespace greengb::oracle
