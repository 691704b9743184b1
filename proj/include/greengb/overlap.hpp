#pragma once

#include <string>
#include <vector>

#include "greengb/reduction.hpp"

namespace greengb {

/// The five match cases between leading terms m1 (of the first member)
/// and m2 (of the second), with cofactor words u and v:
///
///   I   (tagged, tagged):      m1 v = m2          S = f1 v - f2
///   II  (tagged, untagged):    m1 v = u m2        S = f1 v - u f2
///   III (tagged, untagged):    m1 = u m2 v        S = f1 - u f2 v
///   IV  (untagged, untagged):  u m1 = m2 v        S = u f1 - f2 v
///   V   (untagged, untagged):  m1 = u m2 v        S = f1 - u f2 v
///
/// In cases II and III the cofactor u is implicitly tagged. Case IV is a
/// proper overlap (nonempty shared piece, neither leading term containing
/// the other); containments are case V.
enum class MatchCase { I, II, III, IV, V };

std::string match_case_name(MatchCase c);  // "i" .. "v"

/// An overlap of two leading terms; the source of one S-polynomial.
/// `first` and `second` index the members in the owning rule list.
struct Match {
  MatchCase kind = MatchCase::I;
  std::size_t first = 0;
  std::size_t second = 0;
  Word u;
  Word v;

  friend bool operator==(const Match& a, const Match& b) {
    return a.kind == b.kind && a.first == b.first && a.second == b.second && a.u == b.u &&
           a.v == b.v;
  }
};

/**
 * @brief Every minimal match between two monic nonzero polynomials, in both
 * orientations, including self-overlaps when f1 and f2 are the same member.
 *
 * Tagged leading terms participate only with the tag aligned, so a pair of
 * tagged members can match only by prefix (case I, shorter term first).
 * Operands must be left-tagged or untagged; right-tagged systems are
 * handled by mirroring before match detection.
 */
std::vector<Match> find_matches(const Polynomial& f1, const Polynomial& f2,
                                std::size_t index1 = 0, std::size_t index2 = 1);

/// All matches of all member pairs of F (combined rule indexing), in the
/// fixed deterministic processing order.
std::vector<Match> find_all_matches(const MixedSystem& F);

/// The case-specific difference of rule multiples; the matched word
/// cancels and does not occur in the result.
Polynomial s_polynomial(const Match& m, const Polynomial& first, const Polynomial& second);
Polynomial s_polynomial(const Match& m, const MixedSystem& F);

}  // namespace greengb
