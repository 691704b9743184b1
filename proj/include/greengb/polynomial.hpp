#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "greengb/rational.hpp"
#include "greengb/word.hpp"

namespace greengb {

/// Leading monomial of a nonzero polynomial under deglex.
struct LeadingData {
  Word term;
  Rational coefficient;
  Tag tag = Tag::untagged;
};

/**
 * @brief Exact-rational noncommutative polynomial, optionally tagged.
 *
 * A finite map from words to nonzero rational coefficients, iterated in
 * descending deglex order. The tag applies uniformly to every term: an
 * untagged polynomial lives in the free algebra, a left-tagged one in the
 * free right module of left-tagged terms, a right-tagged one in its mirror.
 * The zero polynomial is untagged and compatible with every tag status.
 */
class Polynomial {
 public:
  using TermMap = std::map<Word, Rational, DeglexGreater>;

  Polynomial() = default;  ///< the zero polynomial

  /// Single-monomial polynomial; k = 0 gives zero.
  static Polynomial monomial(Word w, Rational k, Tag tag);
  /// Builds from (word, coefficient) pairs, merging and dropping zeros.
  static Polynomial from_terms(const std::vector<std::pair<Word, Rational>>& terms, Tag tag);

  bool is_zero() const { return terms_.empty(); }
  Tag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of w (zero if absent).
  Rational coefficient(const Word& w) const;

  /// Throws ZeroPolynomialError on the zero polynomial.
  LeadingData leading() const;

  /// Divides by the leading coefficient. Throws ZeroPolynomialError on zero.
  Polynomial monic() const;

  Polynomial negated() const;
  Polynomial scaled(const Rational& k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  TermMap terms_;
  Tag tag_ = Tag::untagged;
};

/// Coefficientwise sum. Throws TagMismatchError when the tag statuses
/// differ and neither operand is zero.
Polynomial add(const Polynomial& p, const Polynomial& q);

inline Polynomial subtract(const Polynomial& p, const Polynomial& q) { return add(p, q.negated()); }

/// Left cofactor of a module multiplication: either a plain word
/// (tag = untagged) or a tagged prefix (tag = left, the word part of "<| u").
struct LeftFactor {
  Tag tag = Tag::untagged;
  Word word;

  static LeftFactor identity() { return {}; }
  static LeftFactor plain(Word w) { return {Tag::untagged, std::move(w)}; }
  static LeftFactor tagged(Word w) { return {Tag::left, std::move(w)}; }
};

/**
 * @brief k * u * p * v, the subtracted multiple of one reduction step.
 *
 * Tags block multiplication on their side: a left-tagged p admits no left
 * cofactor, a right-tagged p admits no right cofactor, and a tagged prefix
 * u turns an untagged p into a left-tagged product. Violations throw
 * IllegalMultiplicationError.
 */
Polynomial mul_scalar_and_words(const Rational& k, const LeftFactor& u, const Polynomial& p,
                                const Word& v);

/// Reverses every word and swaps the tag side; the mechanism behind
/// right-tagged (left ideal) computations.
Polynomial mirror(const Polynomial& p);

/// Drops every term whose word contains the letter `zero_letter`.
Polynomial collapse_zero(const Polynomial& p, int zero_letter);

/// Total order on polynomials used for canonical container ordering;
/// compares tags, then term sequences in descending deglex.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

/**
 * Parses the whitespace-separated polynomial grammar
 *
 *   poly        := signed_term (("+"|"-") term)*
 *   term        := [coeff] tagged_word
 *   coeff       := int | int "/" posint
 *   tagged_word := "<|" word | word "|>" | word
 *   word        := gen+ | "1"
 *
 * "1" is the empty word (monoid/algebra alphabets only); "0" alone is the
 * zero polynomial. Mixing tag statuses within one polynomial is an error.
 * Terms whose word contains the designated zero symbol are dropped.
 */
Polynomial parse_poly(std::string_view text, const Alphabet& alphabet);

/// Canonical rendering: descending deglex, unit coefficients omitted,
/// e.g. "8 <| y x y y y + 5 <| y" or "x x x - x x". Zero renders as "0".
std::string format_poly(const Polynomial& p, const Alphabet& alphabet);

}  // namespace greengb
