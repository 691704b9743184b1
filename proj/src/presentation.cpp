#include "greengb/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "greengb/errors.hpp"

namespace greengb {

std::string kind_name(PresentationKind k) {
  switch (k) {
    case PresentationKind::semigroup: return "semigroup";
    case PresentationKind::monoid: return "monoid";
    case PresentationKind::algebra: return "algebra";
  }
  return "?";
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

Word parse_relation_word(const std::vector<std::string>& tokens, std::size_t begin,
                         std::size_t end, const Presentation& p, std::size_t line_no) {
  std::vector<int> letters;
  if (end - begin == 1 && tokens[begin] == "1") {
    if (!p.alphabet.allows_empty_word()) {
      throw ParseError("empty word '1' is not allowed in a semigroup presentation", line_no);
    }
    return Word{};
  }
  for (std::size_t i = begin; i < end; ++i) {
    auto letter = p.alphabet.index_of(tokens[i]);
    if (!letter) {
      throw ParseError("unknown generator '" + tokens[i] + "'", line_no);
    }
    letters.push_back(*letter);
  }
  if (letters.empty()) {
    throw ParseError("empty side in relation", line_no);
  }
  return Word(std::move(letters));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_kind = false;
  bool have_gens = false;
  std::optional<std::string> zero_symbol;
  std::vector<std::string> pending_generators;
  struct RawLine {
    std::string keyword;
    std::vector<std::string> tokens;
    std::size_t line_no;
  };
  std::vector<RawLine> body;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string line(nl == std::string_view::npos ? text.substr(start)
                                                  : text.substr(start, nl - start));
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens[0];
    if (keyword == "kind") {
      if (have_kind) throw ParseError("duplicate 'kind' line", line_no);
      if (tokens.size() != 2) throw ParseError("expected 'kind semigroup|monoid|algebra'", line_no);
      if (tokens[1] == "semigroup") {
        p.kind = PresentationKind::semigroup;
      } else if (tokens[1] == "monoid") {
        p.kind = PresentationKind::monoid;
      } else if (tokens[1] == "algebra") {
        p.kind = PresentationKind::algebra;
      } else {
        throw ParseError("unknown kind '" + tokens[1] + "'", line_no);
      }
      have_kind = true;
    } else if (keyword == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' line", line_no);
      if (tokens.size() < 2) throw ParseError("'gens' needs at least one generator", line_no);
      pending_generators.assign(tokens.begin() + 1, tokens.end());
      have_gens = true;
    } else if (keyword == "zero") {
      if (tokens.size() != 2) throw ParseError("expected 'zero <generator>'", line_no);
      if (zero_symbol) throw ParseError("duplicate 'zero' line", line_no);
      zero_symbol = tokens[1];
    } else if (keyword == "rel" || keyword == "poly") {
      body.push_back({keyword, std::move(tokens), line_no});
    } else {
      throw ParseError("unknown directive '" + keyword + "'", line_no);
    }
  }

  if (!have_kind) throw ParseError("missing 'kind' line");
  if (!have_gens) throw ParseError("missing 'gens' line");

  const bool allows_empty = p.kind != PresentationKind::semigroup;
  p.alphabet = Alphabet::make(pending_generators, allows_empty, zero_symbol);

  for (const auto& raw : body) {
    if (raw.keyword == "rel") {
      if (p.kind == PresentationKind::algebra) {
        throw ParseError("'rel' lines belong to semigroup/monoid kinds", raw.line_no);
      }
      auto eq = std::find(raw.tokens.begin(), raw.tokens.end(), "=");
      if (eq == raw.tokens.end()) {
        throw ParseError("relation without '='", raw.line_no);
      }
      std::size_t eq_pos = static_cast<std::size_t>(eq - raw.tokens.begin());
      Word lhs = parse_relation_word(raw.tokens, 1, eq_pos, p, raw.line_no);
      Word rhs = parse_relation_word(raw.tokens, eq_pos + 1, raw.tokens.size(), p, raw.line_no);
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    } else {
      if (p.kind != PresentationKind::algebra) {
        throw ParseError("'poly' lines belong to the algebra kind", raw.line_no);
      }
      std::string expr;
      for (std::size_t i = 1; i < raw.tokens.size(); ++i) {
        if (i > 1) expr += ' ';
        expr += raw.tokens[i];
      }
      Polynomial poly;
      try {
        poly = parse_poly(expr, p.alphabet);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), raw.line_no);
      }
      if (poly.is_zero()) continue;
      if (poly.tag() == Tag::untagged) {
        p.polynomials.push_back(std::move(poly));
      } else {
        p.tagged_polynomials.push_back(std::move(poly));
      }
    }
  }

  for (const auto& t : p.tagged_polynomials) {
    if (t.tag() != p.tagged_polynomials.front().tag()) {
      throw ParseError("tagged members must share one tag side");
    }
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "kind " << kind_name(p.kind) << '\n';
  out << "gens";
  for (const auto& name : p.alphabet.names()) out << ' ' << name;
  out << '\n';
  if (p.alphabet.zero_letter()) {
    out << "zero " << p.alphabet.name(*p.alphabet.zero_letter()) << '\n';
  }
  for (const auto& [lhs, rhs] : p.relations) {
    out << "rel " << format_word(lhs, p.alphabet) << " = " << format_word(rhs, p.alphabet) << '\n';
  }
  for (const auto& poly : p.polynomials) {
    out << "poly " << format_poly(poly, p.alphabet) << '\n';
  }
  for (const auto& poly : p.tagged_polynomials) {
    out << "poly " << format_poly(poly, p.alphabet) << '\n';
  }
  return out.str();
}

std::vector<Polynomial> relations_to_polynomials(const Presentation& p,
                                                 std::vector<std::string>* warnings) {
  if (p.kind == PresentationKind::algebra) {
    throw std::invalid_argument("relations_to_polynomials: algebra kind has no relations");
  }
  std::vector<Polynomial> out;
  for (const auto& [lhs, rhs] : p.relations) {
    Polynomial poly = subtract(Polynomial::monomial(lhs, 1, Tag::untagged),
                               Polynomial::monomial(rhs, 1, Tag::untagged));
    if (p.alphabet.zero_letter()) {
      poly = collapse_zero(poly, *p.alphabet.zero_letter());
    }
    if (poly.is_zero()) {
      if (warnings) {
        warnings->push_back("degenerate relation " + format_word(lhs, p.alphabet) + " = " +
                            format_word(rhs, p.alphabet) + " dropped");
      }
      continue;
    }
    out.push_back(poly.monic());
  }
  return out;
}

MixedSystem presentation_system(const Presentation& p) {
  if (p.kind == PresentationKind::algebra) {
    Tag side = Tag::left;
    if (!p.tagged_polynomials.empty()) side = p.tagged_polynomials.front().tag();
    return MixedSystem::make(p.alphabet, p.tagged_polynomials, p.polynomials, side);
  }
  return MixedSystem::make(p.alphabet, {}, relations_to_polynomials(p), Tag::left);
}

ElementEnumeration enumerate_elements(const MixedSystem& basis, std::size_t length_bound,
                                      std::size_t max_elements) {
  if (!basis.tagged().empty()) {
    throw InvalidSystemError("element enumeration expects an untagged system");
  }
  const Alphabet& alphabet = basis.alphabet();
  std::vector<Word> leads;
  for (const auto& p : basis.untagged()) leads.push_back(p.leading().term);

  auto irreducible = [&](const Word& w) {
    for (const auto& lead : leads) {
      if (lead.empty()) return false;
      if (lead.size() > w.size()) continue;
      if (!find_subword_occurrences(lead, w).empty()) return false;
    }
    return true;
  };

  // Irreducible words are closed under taking prefixes, so breadth-first
  // extension of the irreducible frontier visits exactly the irreducible
  // words, in deglex order.
  ElementEnumeration result;
  result.length_bound = length_bound;
  const auto zero = alphabet.zero_letter();

  std::vector<Word> frontier;
  if (alphabet.allows_empty_word() && irreducible(Word{})) {
    result.elements.push_back(Word{});
  }
  frontier.push_back(Word{});

  for (std::size_t len = 1; len <= length_bound && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& stem : frontier) {
      for (int letter = 0; letter < static_cast<int>(alphabet.size()); ++letter) {
        if (zero && *zero == letter) continue;
        Word w = stem + Word::single(letter);
        if (!irreducible(w)) continue;
        if (result.elements.size() >= max_elements) {
          result.truncated = true;
          return result;
        }
        result.elements.push_back(w);
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }

  // Probe one extra letter to detect truncation.
  for (const auto& stem : frontier) {
    for (int letter = 0; letter < static_cast<int>(alphabet.size()); ++letter) {
      if (zero && *zero == letter) continue;
      if (irreducible(stem + Word::single(letter))) {
        result.truncated = true;
        return result;
      }
    }
  }
  return result;
}

}  // namespace greengb
