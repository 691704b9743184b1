#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "greengb/polynomial.hpp"

namespace greengb {

/**
 * @brief A mixed system F = (F_T, F_P): tagged polynomials generating a
 * one-sided ideal together with untagged polynomials presenting the algebra.
 *
 * Members are nonzero, monic and pairwise distinct; the tagged members all
 * share one tag side. Rules are indexed with the tagged block first, then
 * the untagged block. Systems built by make() are sorted canonically.
 */
class MixedSystem {
 public:
  MixedSystem() = default;

  /// Normalizes (monic, zero members dropped, duplicates removed, sorted)
  /// and validates tags. Throws InvalidSystemError on malformed input.
  static MixedSystem make(Alphabet alphabet, std::vector<Polynomial> tagged,
                          std::vector<Polynomial> untagged, Tag tag_side = Tag::left);

  /// As make(), but keeps the given member order (used by mirror()).
  static MixedSystem from_parts(Alphabet alphabet, std::vector<Polynomial> tagged,
                                std::vector<Polynomial> untagged, Tag tag_side);

  const Alphabet& alphabet() const { return alphabet_; }
  TermOrder order() const { return {}; }  // deglex is the only shipped order
  Tag tag_side() const { return tag_side_; }
  const std::vector<Polynomial>& tagged() const { return tagged_; }
  const std::vector<Polynomial>& untagged() const { return untagged_; }

  std::size_t rule_count() const { return tagged_.size() + untagged_.size(); }
  /// Combined indexing: tagged rules first, then untagged rules.
  const Polynomial& rule(std::size_t index) const;
  bool rule_is_tagged(std::size_t index) const { return index < tagged_.size(); }

  friend bool operator==(const MixedSystem& a, const MixedSystem& b) {
    return a.tag_side_ == b.tag_side_ && a.tagged_ == b.tagged_ && a.untagged_ == b.untagged_;
  }
  friend bool operator!=(const MixedSystem& a, const MixedSystem& b) { return !(a == b); }

 private:
  Alphabet alphabet_;
  Tag tag_side_ = Tag::left;
  std::vector<Polynomial> tagged_;
  std::vector<Polynomial> untagged_;
};

/// Reverses every word of every member and swaps the tag side, keeping
/// member positions; mirror(mirror(F)) == F.
MixedSystem mirror(const MixedSystem& F);

/**
 * @brief One recorded reduction step: f -> f - k u (f_i) v.
 *
 * The occurrence u LT(f_i) v appears in the input with coefficient k.
 * For left-tagged work u may carry the tag ("<| u"); for right-tagged
 * work the tag sits on v instead.
 */
struct ReductionStep {
  std::size_t rule_index = 0;
  Rational coefficient;
  Tag u_tag = Tag::untagged;
  Word u;
  Tag v_tag = Tag::untagged;
  Word v;
};

enum class Strategy : std::uint8_t { deterministic, randomized };

struct ReductionOptions {
  Strategy strategy = Strategy::deterministic;
  std::uint64_t seed = 0;     ///< randomized strategy only
  std::size_t max_steps = 0;  ///< 0 = unbounded; breach throws StepLimitError
};

/**
 * @brief One reduction step of f by F, or nothing when f is irreducible.
 *
 * Tagged rules match only at the tag (their leading word must be a prefix
 * of a term); untagged rules match anywhere in the word part. Untagged
 * inputs are reduced by the untagged part only. The deterministic strategy
 * picks the highest reducible term, then the lowest rule index, then the
 * leftmost occurrence.
 */
std::optional<std::pair<Polynomial, ReductionStep>> reduce_once(const Polynomial& f,
                                                                const MixedSystem& F);

struct NormalFormResult {
  Polynomial poly;
  std::vector<ReductionStep> steps;
};

/// Iterates reduce_once to an irreducible polynomial; always terminates
/// (the order is well-founded). Returns the result with the full trace.
NormalFormResult normal_form(const Polynomial& f, const MixedSystem& F,
                             const ReductionOptions& options = {});

bool reduces_to_zero(const Polynomial& f, const MixedSystem& F);

/// JSON trace: [{"rule": i, "k": "num/den", "u": "...", "v": "..."}, ...].
std::string steps_to_json(const std::vector<ReductionStep>& steps, const Alphabet& alphabet);

}  // namespace greengb
