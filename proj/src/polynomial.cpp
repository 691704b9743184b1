#include "greengb/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "greengb/errors.hpp"

namespace greengb {

Polynomial Polynomial::monomial(Word w, Rational k, Tag tag) {
  Polynomial p;
  if (!k.is_zero()) {
    p.tag_ = tag;
    p.terms_.emplace(std::move(w), std::move(k));
  }
  return p;
}

Polynomial Polynomial::from_terms(const std::vector<std::pair<Word, Rational>>& terms, Tag tag) {
  Polynomial p;
  p.tag_ = tag;
  for (const auto& [w, k] : terms) {
    if (k.is_zero()) continue;
    auto [it, inserted] = p.terms_.emplace(w, k);
    if (!inserted) {
      it->second += k;
      if (it->second.is_zero()) p.terms_.erase(it);
    }
  }
  if (p.terms_.empty()) p.tag_ = Tag::untagged;
  return p;
}

Rational Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

LeadingData Polynomial::leading() const {
  if (is_zero()) {
    throw ZeroPolynomialError("leading term of the zero polynomial");
  }
  const auto& [word, coeff] = *terms_.begin();
  return {word, coeff, tag_};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    throw ZeroPolynomialError("monic form of the zero polynomial");
  }
  const Rational lc = terms_.begin()->second;
  if (lc.is_one()) return *this;
  Polynomial p;
  p.tag_ = tag_;
  for (const auto& [w, k] : terms_) {
    p.terms_.emplace(w, k / lc);
  }
  return p;
}

Polynomial Polynomial::negated() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& k) const {
  Polynomial p;
  if (k.is_zero()) return p;
  p.tag_ = tag_;
  for (const auto& [w, c] : terms_) {
    p.terms_.emplace(w, c * k);
  }
  return p;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (p.tag() != q.tag()) {
    throw TagMismatchError("adding polynomials of different tag status");
  }
  std::vector<std::pair<Word, Rational>> terms;
  terms.reserve(p.term_count() + q.term_count());
  for (const auto& [w, k] : p.terms()) terms.emplace_back(w, k);
  for (const auto& [w, k] : q.terms()) terms.emplace_back(w, k);
  return Polynomial::from_terms(terms, p.tag());
}

Polynomial mul_scalar_and_words(const Rational& k, const LeftFactor& u, const Polynomial& p,
                                const Word& v) {
  if (k.is_zero() || p.is_zero()) return {};
  if (u.tag == Tag::right) {
    throw IllegalMultiplicationError("right-tagged left cofactor");
  }
  Tag result_tag = p.tag();
  switch (p.tag()) {
    case Tag::left:
      if (u.tag != Tag::untagged || !u.word.empty()) {
        throw IllegalMultiplicationError("left multiplication of a left-tagged polynomial");
      }
      break;
    case Tag::right:
      if (!v.empty()) {
        throw IllegalMultiplicationError("right multiplication of a right-tagged polynomial");
      }
      break;
    case Tag::untagged:
      if (u.tag == Tag::left) result_tag = Tag::left;
      break;
  }
  std::vector<std::pair<Word, Rational>> terms;
  terms.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) {
    terms.emplace_back(u.word + w + v, c * k);
  }
  return Polynomial::from_terms(terms, result_tag);
}

Polynomial mirror(const Polynomial& p) {
  if (p.is_zero()) return p;
  Tag tag = p.tag();
  if (tag == Tag::left) {
    tag = Tag::right;
  } else if (tag == Tag::right) {
    tag = Tag::left;
  }
  std::vector<std::pair<Word, Rational>> terms;
  terms.reserve(p.term_count());
  for (const auto& [w, k] : p.terms()) {
    terms.emplace_back(reverse(w), k);
  }
  return Polynomial::from_terms(terms, tag);
}

Polynomial collapse_zero(const Polynomial& p, int zero_letter) {
  std::vector<std::pair<Word, Rational>> terms;
  for (const auto& [w, k] : p.terms()) {
    bool has_zero = std::find(w.letters().begin(), w.letters().end(), zero_letter) !=
                    w.letters().end();
    if (!has_zero) terms.emplace_back(w, k);
  }
  return Polynomial::from_terms(terms, p.tag());
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
  if (a.tag() != b.tag()) {
    return static_cast<int>(a.tag()) < static_cast<int>(b.tag()) ? -1 : 1;
  }
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    Ordering o = deglex_compare(ia->first, ib->first);
    if (o != Ordering::equal) return o == Ordering::less ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool looks_like_number(const std::string& token) {
  std::string_view s = token;
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  bool seen_digit = false;
  bool seen_slash = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      return false;
    }
  }
  return seen_digit;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const Alphabet& alphabet) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError("empty polynomial expression");
  }
  if (tokens.size() == 1 && tokens[0] == "0") {
    return {};
  }

  auto starts_word = [&](std::size_t i) {
    if (i >= tokens.size()) return false;
    const std::string& t = tokens[i];
    return t == "<|" || t == "1" || alphabet.index_of(t).has_value();
  };

  std::vector<std::pair<Word, Rational>> terms;
  Tag tag = Tag::untagged;
  bool tag_known = false;
  std::size_t i = 0;
  bool first_term = true;

  while (i < tokens.size()) {
    Rational sign(1);
    if (!first_term) {
      if (tokens[i] == "+") {
        ++i;
      } else if (tokens[i] == "-") {
        sign = Rational(-1);
        ++i;
      } else {
        throw ParseError("expected '+' or '-' before token " + std::to_string(i + 1), 0, i + 1);
      }
      if (i >= tokens.size()) {
        throw ParseError("dangling sign at end of polynomial");
      }
    } else if (tokens[i] == "-") {
      sign = Rational(-1);
      ++i;
    }
    first_term = false;

    Rational coeff(1);
    if (i < tokens.size() && looks_like_number(tokens[i]) && tokens[i] != "1" && starts_word(i + 1)) {
      coeff = Rational::parse(tokens[i]);
      ++i;
    } else if (i < tokens.size() && tokens[i] == "1" && starts_word(i + 1)) {
      // "1" followed by a word token is a unit coefficient, not the empty word.
      ++i;
    }

    if (i >= tokens.size()) {
      throw ParseError("expected a word at end of polynomial");
    }

    Tag term_tag = Tag::untagged;
    if (tokens[i] == "<|") {
      term_tag = Tag::left;
      ++i;
    }

    std::vector<int> letters;
    bool explicit_empty = false;
    if (i < tokens.size() && tokens[i] == "1" && term_tag != Tag::untagged) {
      explicit_empty = true;
      ++i;
    } else if (i < tokens.size() && tokens[i] == "1" && !starts_word(i + 1)) {
      explicit_empty = true;
      ++i;
    } else {
      while (i < tokens.size()) {
        auto letter = alphabet.index_of(tokens[i]);
        if (!letter) break;
        letters.push_back(*letter);
        ++i;
      }
    }

    if (letters.empty() && !explicit_empty) {
      std::string got = i < tokens.size() ? tokens[i] : "<end>";
      throw ParseError("expected a word, got '" + got + "'", 0, i + 1);
    }
    if (term_tag == Tag::untagged && i < tokens.size() && tokens[i] == "|>") {
      term_tag = Tag::right;
      ++i;
    }
    if (letters.empty() && !alphabet.allows_empty_word()) {
      throw ParseError("the empty word '1' is not allowed for this alphabet");
    }

    if (!tag_known) {
      tag = term_tag;
      tag_known = true;
    } else if (tag != term_tag) {
      throw ParseError("mixed tag statuses within one polynomial");
    }
    terms.emplace_back(Word(std::move(letters)), sign * coeff);
  }

  Polynomial p = Polynomial::from_terms(terms, tag);
  if (alphabet.zero_letter()) {
    p = collapse_zero(p, *alphabet.zero_letter());
  }
  return p;
}

std::string format_poly(const Polynomial& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, k] : p.terms()) {
    Rational magnitude = k;
    if (first) {
      if (k.sign() < 0) {
        out << "- ";
        magnitude = -k;
      }
      first = false;
    } else {
      out << (k.sign() < 0 ? " - " : " + ");
      if (k.sign() < 0) magnitude = -k;
    }
    if (!magnitude.is_one()) {
      out << magnitude.to_string() << ' ';
    }
    out << format_tagged(w, p.tag(), alphabet);
  }
  return out.str();
}

}  // namespace greengb
