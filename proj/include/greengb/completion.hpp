#pragma once

#include <string>
#include <vector>

#include "greengb/overlap.hpp"

namespace greengb {

/// Guard rails for the completion loop, which need not terminate on its
/// own: noncommutative completion can diverge.
struct CompletionLimits {
  std::size_t max_passes = 64;
  std::size_t max_term_length = 64;
  std::size_t max_basis_size = 4096;
};

enum class CompletionStatus { complete, bound_exceeded };

/// One processed match: the raw S-polynomial, its normal form, and whether
/// the normal form was kept (nonzero).
struct CompletionLogEntry {
  std::size_t pass = 0;
  MatchCase kind = MatchCase::I;
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial spoly_before;
  Polynomial spoly_nf;
  bool kept = false;
};

struct CompletionResult {
  MixedSystem basis;
  CompletionStatus status = CompletionStatus::bound_exceeded;
  std::size_t passes_used = 0;
  std::size_t spolys_added = 0;
  std::vector<CompletionLogEntry> log;

  bool is_complete() const { return status == CompletionStatus::complete; }
};

/**
 * @brief Buchberger completion of a mixed system.
 *
 * Per pass: enumerate all matches of the current basis, reduce each
 * S-polynomial (against the basis plus the S-polynomials already collected
 * this pass), keep the nonzero normal forms, union them in, interreduce,
 * and loop until a fixpoint. Equality between passes compares canonical
 * monic forms. On a fixpoint the status is `complete`; breaching any limit
 * yields `bound_exceeded` together with the partial basis.
 */
CompletionResult complete(const MixedSystem& F, const CompletionLimits& limits = {});

/// Removes each member in turn and reduces it against the rest, deleting
/// zero reducts and replacing the others by their reduced monic forms,
/// until no member is reducible by the others. The generated reduction
/// equivalence is unchanged.
MixedSystem interreduce(const MixedSystem& F);

struct ConfluenceReport {
  bool confluent = false;
  std::vector<Match> failing;
};

/// True iff every S-polynomial of every match of F reduces to zero under F.
ConfluenceReport check_local_confluence(const MixedSystem& F);

/// JSON lines, one record per processed match:
/// {"pass":1,"case":"ii","i":0,"j":3,"spoly_before":"...","spoly_nf":"...","kept":true}
std::string completion_log_to_json(const std::vector<CompletionLogEntry>& log,
                                   const Alphabet& alphabet);

}  // namespace greengb
