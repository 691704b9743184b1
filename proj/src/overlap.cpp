#include "greengb/overlap.hpp"

#include <algorithm>
#include <tuple>

#include "greengb/errors.hpp"

namespace greengb {

std::string match_case_name(MatchCase c) {
  switch (c) {
    case MatchCase::I: return "i";
    case MatchCase::II: return "ii";
    case MatchCase::III: return "iii";
    case MatchCase::IV: return "iv";
    case MatchCase::V: return "v";
  }
  return "?";
}

namespace {

// Case I: matches of two left-tagged members, prefix containment at the tag.
void tagged_tagged_matches(const Word& m1, const Word& m2, std::size_t i1, std::size_t i2,
                           std::vector<Match>& out) {
  if (i1 == i2) return;  // a term is never a proper prefix of itself
  if (m2.starts_with(m1)) {
    out.push_back({MatchCase::I, i1, i2, {}, m2.suffix_from(m1.size())});
  }
  if (m1.size() > m2.size() && m1.starts_with(m2)) {
    out.push_back({MatchCase::I, i2, i1, {}, m1.suffix_from(m2.size())});
  }
}

// Cases II and III: f1 left-tagged, f2 untagged.
void tagged_untagged_matches(const Word& m1, const Word& m2, std::size_t i1, std::size_t i2,
                             std::vector<Match>& out) {
  if (m2.empty()) {
    out.push_back({MatchCase::III, i1, i2, {}, m1});
    return;
  }
  // II: a nonempty suffix of m1 (possibly all of it) is a proper prefix of m2,
  // so the untagged term sticks out to the right: m1 v = u m2.
  for (std::size_t s = 1; s <= m1.size() && s < m2.size(); ++s) {
    const Word shared = m1.suffix_from(m1.size() - s);
    if (m2.starts_with(shared)) {
      out.push_back({MatchCase::II, i1, i2, m1.prefix(m1.size() - s), m2.suffix_from(s)});
    }
  }
  // III: m2 occurs inside m1 (any offset, edges included): m1 = u m2 v.
  if (m2.size() <= m1.size()) {
    for (const auto& occ : find_subword_occurrences(m2, m1)) {
      out.push_back({MatchCase::III, i1, i2, occ.prefix, occ.suffix});
    }
  }
}

// Cases IV and V: both untagged.
void untagged_untagged_matches(const Word& m1, const Word& m2, std::size_t i1, std::size_t i2,
                               std::vector<Match>& out) {
  if (i1 == i2) {
    // Self-overlaps: u m1 = m1 v with a proper nonempty shared piece.
    if (m1.empty()) return;
    for (std::size_t s = 1; s < m1.size(); ++s) {
      const Word shared = m1.prefix(s);
      if (m1.suffix_from(m1.size() - s) == shared) {
        out.push_back({MatchCase::IV, i1, i1, m1.prefix(m1.size() - s), m1.suffix_from(s)});
      }
    }
    return;
  }
  if (m1.empty() || m2.empty()) {
    if (m2.empty() && !m1.empty()) out.push_back({MatchCase::V, i1, i2, {}, m1});
    if (m1.empty() && !m2.empty()) out.push_back({MatchCase::V, i2, i1, {}, m2});
    return;
  }
  // V: containment, m2 inside m1 (covers equal leading terms once).
  if (m2.size() <= m1.size()) {
    for (const auto& occ : find_subword_occurrences(m2, m1)) {
      out.push_back({MatchCase::V, i1, i2, occ.prefix, occ.suffix});
    }
  }
  if (m1.size() < m2.size()) {
    for (const auto& occ : find_subword_occurrences(m1, m2)) {
      out.push_back({MatchCase::V, i2, i1, occ.prefix, occ.suffix});
    }
  }
  // IV: proper edge overlaps in both orientations: u m1 = m2 v, where the
  // shared piece is a proper prefix of m1 and a proper suffix of m2.
  for (std::size_t s = 1; s < m1.size() && s < m2.size(); ++s) {
    if (m2.suffix_from(m2.size() - s) == m1.prefix(s)) {
      out.push_back({MatchCase::IV, i1, i2, m2.prefix(m2.size() - s), m1.suffix_from(s)});
    }
    if (m1.suffix_from(m1.size() - s) == m2.prefix(s)) {
      out.push_back({MatchCase::IV, i2, i1, m1.prefix(m1.size() - s), m2.suffix_from(s)});
    }
  }
}

void sort_matches(std::vector<Match>& matches) {
  auto key = [](const Match& m) {
    return std::tuple(std::min(m.first, m.second), std::max(m.first, m.second),
                      static_cast<int>(m.kind), m.u.size() + m.v.size(), m.u.letters(),
                      m.v.letters(), m.first);
  };
  std::sort(matches.begin(), matches.end(),
            [&](const Match& a, const Match& b) { return key(a) < key(b); });
  matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
}

}  // namespace

std::vector<Match> find_matches(const Polynomial& f1, const Polynomial& f2, std::size_t index1,
                                std::size_t index2) {
  if (f1.tag() == Tag::right || f2.tag() == Tag::right) {
    throw TagMismatchError("find_matches expects left-tagged or untagged operands");
  }
  const Word m1 = f1.leading().term;
  const Word m2 = f2.leading().term;
  std::vector<Match> out;
  const bool t1 = f1.tag() == Tag::left;
  const bool t2 = f2.tag() == Tag::left;
  if (t1 && t2) {
    tagged_tagged_matches(m1, m2, index1, index2, out);
  } else if (t1 && !t2) {
    tagged_untagged_matches(m1, m2, index1, index2, out);
  } else if (!t1 && t2) {
    tagged_untagged_matches(m2, m1, index2, index1, out);
  } else {
    untagged_untagged_matches(m1, m2, index1, index2, out);
  }
  sort_matches(out);
  return out;
}

std::vector<Match> find_all_matches(const MixedSystem& F) {
  std::vector<Match> out;
  const std::size_t n = F.rule_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto matches = find_matches(F.rule(i), F.rule(j), i, j);
      out.insert(out.end(), matches.begin(), matches.end());
    }
  }
  sort_matches(out);
  return out;
}

Polynomial s_polynomial(const Match& m, const Polynomial& first, const Polynomial& second) {
  switch (m.kind) {
    case MatchCase::I:
      return subtract(mul_scalar_and_words(1, LeftFactor::identity(), first, m.v), second);
    case MatchCase::II:
      return subtract(mul_scalar_and_words(1, LeftFactor::identity(), first, m.v),
                      mul_scalar_and_words(1, LeftFactor::tagged(m.u), second, {}));
    case MatchCase::III:
      return subtract(first, mul_scalar_and_words(1, LeftFactor::tagged(m.u), second, m.v));
    case MatchCase::IV:
      return subtract(mul_scalar_and_words(1, LeftFactor::plain(m.u), first, {}),
                      mul_scalar_and_words(1, LeftFactor::identity(), second, m.v));
    case MatchCase::V:
      return subtract(first, mul_scalar_and_words(1, LeftFactor::plain(m.u), second, m.v));
  }
  throw std::logic_error("unreachable match case");
}

Polynomial s_polynomial(const Match& m, const MixedSystem& F) {
  return s_polynomial(m, F.rule(m.first), F.rule(m.second));
}

}  // namespace greengb
