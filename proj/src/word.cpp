#include "greengb/word.hpp"

#include <algorithm>
#include <array>

#include "greengb/errors.hpp"

namespace greengb {

namespace {

constexpr std::array<std::string_view, 9> kReservedSequences = {
    "<|", "|>", "+", "-", "*", "/", "=", "1", "#"};

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  for (std::string_view seq : kReservedSequences) {
    if (name.find(seq) != std::string::npos) return false;
  }
  return true;
}

}  // namespace

Alphabet Alphabet::make(std::vector<std::string> generators, bool allows_empty_word,
                        const std::optional<std::string>& zero_symbol) {
  Alphabet a;
  a.allows_empty_word_ = allows_empty_word;
  for (const auto& name : generators) {
    if (!valid_generator_name(name)) {
      throw ParseError("invalid generator name '" + name + "'");
    }
    if (a.index_.count(name)) {
      throw ParseError("duplicate generator '" + name + "'");
    }
    a.index_.emplace(name, static_cast<int>(a.names_.size()));
    a.names_.push_back(name);
  }
  if (zero_symbol) {
    auto it = a.index_.find(*zero_symbol);
    if (it == a.index_.end()) {
      throw ParseError("zero symbol '" + *zero_symbol + "' is not a generator");
    }
    a.zero_ = it->second;
  }
  return a;
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + static_cast<long>(n)));
}

Word Word::suffix_from(std::size_t i) const {
  return Word(std::vector<int>(letters_.begin() + static_cast<long>(i), letters_.end()));
}

Word Word::slice(std::size_t i, std::size_t n) const {
  return Word(std::vector<int>(letters_.begin() + static_cast<long>(i),
                               letters_.begin() + static_cast<long>(i + n)));
}

bool Word::starts_with(const Word& p) const {
  if (p.size() > size()) return false;
  return std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

Word operator+(const Word& a, const Word& b) {
  std::vector<int> letters;
  letters.reserve(a.size() + b.size());
  letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

Word reverse(const Word& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters));
}

Ordering deglex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size() ? Ordering::less : Ordering::greater;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? Ordering::less : Ordering::greater;
    }
  }
  return Ordering::equal;
}

std::vector<Occurrence> find_subword_occurrences(const Word& pattern, const Word& host) {
  if (pattern.empty()) {
    throw std::invalid_argument("find_subword_occurrences: empty pattern");
  }
  std::vector<Occurrence> hits;
  if (pattern.size() > host.size()) return hits;
  for (std::size_t i = 0; i + pattern.size() <= host.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (host[i + j] != pattern[j]) {
        match = false;
        break;
      }
    }
    if (match) {
      hits.push_back({host.prefix(i), host.suffix_from(i + pattern.size())});
    }
  }
  return hits;
}

OverlapReport find_proper_overlaps(const Word& a, const Word& b) {
  OverlapReport report;
  // Nonempty proper suffix of a equal to a proper prefix of b.
  for (std::size_t len = 1; len < a.size() && len < b.size(); ++len) {
    bool match = true;
    for (std::size_t j = 0; j < len; ++j) {
      if (a[a.size() - len + j] != b[j]) {
        match = false;
        break;
      }
    }
    if (match) {
      report.edges.push_back(
          {a.prefix(a.size() - len), a.suffix_from(a.size() - len), b.suffix_from(len)});
    }
  }
  if (!b.empty() && b.size() <= a.size()) {
    report.inside = find_subword_occurrences(b, a);
  }
  return report;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

std::string format_tagged(const Word& w, Tag tag, const Alphabet& alphabet) {
  switch (tag) {
    case Tag::left:
      return "<| " + format_word(w, alphabet);
    case Tag::right:
      return format_word(w, alphabet) + " |>";
    case Tag::untagged:
      break;
  }
  return format_word(w, alphabet);
}

std::string format_tagged(const TaggedTerm& t, const Alphabet& alphabet) {
  return format_tagged(t.word, t.side, alphabet);
}

}  // namespace greengb
