#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace greengb {

/**
 * @brief Finite ordered alphabet of generator names.
 *
 * The listing order defines ascending precedence for the lexicographic
 * tie-break of the deglex ordering: generators listed earlier are smaller.
 * Monoid and algebra presentations admit the empty word; semigroup
 * presentations do not. One generator may be designated as the semigroup
 * zero; words containing it collapse to the zero polynomial.
 */
class Alphabet {
 public:
  Alphabet() = default;

  /// Validates names (nonempty, unique, free of whitespace and of the
  /// reserved sequences "<|", "|>", "+", "-", "*", "/", "=", "1", "#")
  /// and the zero symbol, if given. Throws ParseError on violation.
  static Alphabet make(std::vector<std::string> generators, bool allows_empty_word,
                       const std::optional<std::string>& zero_symbol = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(int letter) const { return names_.at(static_cast<std::size_t>(letter)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool allows_empty_word() const { return allows_empty_word_; }
  std::optional<int> zero_letter() const { return zero_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.allows_empty_word_ == b.allows_empty_word_ && a.zero_ == b.zero_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  bool allows_empty_word_ = false;
  std::optional<int> zero_;
};

/**
 * @brief A word over an alphabet: a finite sequence of generator indices.
 *
 * The empty word is the monoid identity; whether it denotes an element
 * depends on the presentation kind. Words are immutable values.
 */
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  static Word single(int letter) { return Word(std::vector<int>{letter}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  /// First n letters.
  Word prefix(std::size_t n) const;
  /// Letters from position i to the end.
  Word suffix_from(std::size_t i) const;
  /// Letters of positions [i, i+n).
  Word slice(std::size_t i, std::size_t n) const;

  bool starts_with(const Word& p) const;

  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.letters_ != b.letters_; }

 private:
  std::vector<int> letters_;
};

/// Letters in reverse sequence; an involution and an anti-homomorphism.
Word reverse(const Word& w);

enum class Ordering { less, equal, greater };

/**
 * @brief Degree-lexicographic comparison: length decides first, then the
 * leftmost differing letter by generator precedence.
 *
 * This is a semigroup well-ordering: translation-invariant and with no
 * infinite descending chain.
 */
Ordering deglex_compare(const Word& a, const Word& b);

inline bool deglex_less(const Word& a, const Word& b) { return deglex_compare(a, b) == Ordering::less; }

/// The term order used everywhere in the library. Only deglex is shipped.
struct TermOrder {
  Ordering compare(const Word& a, const Word& b) const { return deglex_compare(a, b); }
  bool less(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

/// Comparator functors for ordered containers keyed by Word.
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};
struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

/// Tag status of a term or polynomial. A left tag blocks multiplication on
/// the left; a right tag blocks it on the right; untagged blocks neither.
enum class Tag { untagged, left, right };

/// A word together with the side its tag sits on.
struct TaggedTerm {
  Word word;
  Tag side = Tag::left;

  friend bool operator==(const TaggedTerm& a, const TaggedTerm& b) {
    return a.word == b.word && a.side == b.side;
  }
};

/// One occurrence of a pattern inside a host: host = prefix . pattern . suffix.
struct Occurrence {
  Word prefix;
  Word suffix;

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.prefix == b.prefix && a.suffix == b.suffix;
  }
};

/// All occurrences of pattern in host, left to right. Pattern must be nonempty.
std::vector<Occurrence> find_subword_occurrences(const Word& pattern, const Word& host);

/// A proper suffix of `a` coinciding with a proper prefix of `b`:
/// a = a_head . shared and b = shared . b_tail, with shared nonempty.
struct EdgeOverlap {
  Word a_head;
  Word shared;
  Word b_tail;
};

struct OverlapReport {
  std::vector<EdgeOverlap> edges;   ///< suffix-of-a = prefix-of-b overlaps
  std::vector<Occurrence> inside;   ///< occurrences of b inside a
};

/// Both flavours of overlap between two nonempty words; callers assemble
/// the case-specific matches from these.
OverlapReport find_proper_overlaps(const Word& a, const Word& b);

/// "x y x" with names from the alphabet; the empty word renders as "1".
std::string format_word(const Word& w, const Alphabet& alphabet);

/// "<| w" for a left tag, "w |>" for a right tag, plain rendering otherwise.
std::string format_tagged(const Word& w, Tag tag, const Alphabet& alphabet);
std::string format_tagged(const TaggedTerm& t, const Alphabet& alphabet);

}  // namespace greengb
