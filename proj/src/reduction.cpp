#include "greengb/reduction.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "greengb/errors.hpp"

namespace greengb {

namespace {

void normalize_members(std::vector<Polynomial>& members, Tag expected, const char* which) {
  std::vector<Polynomial> kept;
  kept.reserve(members.size());
  for (auto& p : members) {
    if (p.is_zero()) continue;
    if (p.tag() != expected) {
      throw InvalidSystemError(std::string("mixed system: ") + which + " member with wrong tag status");
    }
    kept.push_back(p.monic());
  }
  members = std::move(kept);
}

void sort_and_dedup(std::vector<Polynomial>& members) {
  std::sort(members.begin(), members.end(),
            [](const Polynomial& a, const Polynomial& b) { return compare_polynomials(a, b) < 0; });
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

void dedup_keep_order(std::vector<Polynomial>& members) {
  std::vector<Polynomial> kept;
  for (auto& p : members) {
    if (std::find(kept.begin(), kept.end(), p) == kept.end()) {
      kept.push_back(std::move(p));
    }
  }
  members = std::move(kept);
}

}  // namespace

MixedSystem MixedSystem::make(Alphabet alphabet, std::vector<Polynomial> tagged,
                              std::vector<Polynomial> untagged, Tag tag_side) {
  if (tag_side == Tag::untagged) {
    throw InvalidSystemError("tag side must be left or right");
  }
  MixedSystem F;
  F.alphabet_ = std::move(alphabet);
  F.tag_side_ = tag_side;
  normalize_members(tagged, tag_side, "tagged");
  normalize_members(untagged, Tag::untagged, "untagged");
  sort_and_dedup(tagged);
  sort_and_dedup(untagged);
  F.tagged_ = std::move(tagged);
  F.untagged_ = std::move(untagged);
  return F;
}

MixedSystem MixedSystem::from_parts(Alphabet alphabet, std::vector<Polynomial> tagged,
                                    std::vector<Polynomial> untagged, Tag tag_side) {
  if (tag_side == Tag::untagged) {
    throw InvalidSystemError("tag side must be left or right");
  }
  MixedSystem F;
  F.alphabet_ = std::move(alphabet);
  F.tag_side_ = tag_side;
  normalize_members(tagged, tag_side, "tagged");
  normalize_members(untagged, Tag::untagged, "untagged");
  dedup_keep_order(tagged);
  dedup_keep_order(untagged);
  F.tagged_ = std::move(tagged);
  F.untagged_ = std::move(untagged);
  return F;
}

const Polynomial& MixedSystem::rule(std::size_t index) const {
  if (index < tagged_.size()) return tagged_[index];
  return untagged_.at(index - tagged_.size());
}

MixedSystem mirror(const MixedSystem& F) {
  std::vector<Polynomial> tagged;
  tagged.reserve(F.tagged().size());
  for (const auto& p : F.tagged()) tagged.push_back(mirror(p));
  std::vector<Polynomial> untagged;
  untagged.reserve(F.untagged().size());
  for (const auto& p : F.untagged()) untagged.push_back(mirror(p));
  Tag side = F.tag_side() == Tag::left ? Tag::right : Tag::left;
  return MixedSystem::from_parts(F.alphabet(), std::move(tagged), std::move(untagged), side);
}

namespace {

struct Candidate {
  std::size_t rule_index;
  Word term;
  Rational coefficient;
  LeftFactor u;
  Word v;
};

// Scans terms in descending order, rules by index, occurrences left to
// right. With first_only set, stops at the first hit (the deterministic
// strategy); otherwise gathers every reducible position.
std::vector<Candidate> collect_candidates(const Polynomial& f, const MixedSystem& F,
                                          const std::vector<Word>& leads, bool first_only) {
  std::vector<Candidate> found;
  const bool f_tagged = f.tag() == Tag::left;
  for (const auto& [term, k] : f.terms()) {
    for (std::size_t r = 0; r < F.rule_count(); ++r) {
      const Word& lead = leads[r];
      if (F.rule_is_tagged(r)) {
        if (!f_tagged) continue;
        if (term.starts_with(lead)) {
          found.push_back({r, term, k, LeftFactor::identity(), term.suffix_from(lead.size())});
          if (first_only) return found;
        }
      } else {
        if (lead.empty()) {
          LeftFactor u = f_tagged ? LeftFactor::tagged({}) : LeftFactor::identity();
          found.push_back({r, term, k, u, term});
          if (first_only) return found;
          continue;
        }
        if (lead.size() > term.size()) continue;
        for (std::size_t pos = 0; pos + lead.size() <= term.size(); ++pos) {
          bool match = true;
          for (std::size_t j = 0; j < lead.size(); ++j) {
            if (term[pos + j] != lead[j]) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          Word prefix = term.prefix(pos);
          LeftFactor u =
              f_tagged ? LeftFactor::tagged(std::move(prefix)) : LeftFactor::plain(std::move(prefix));
          found.push_back({r, term, k, std::move(u), term.suffix_from(pos + lead.size())});
          if (first_only) return found;
        }
      }
    }
  }
  return found;
}

std::vector<Word> leading_words(const MixedSystem& F) {
  std::vector<Word> leads;
  leads.reserve(F.rule_count());
  for (std::size_t r = 0; r < F.rule_count(); ++r) {
    leads.push_back(F.rule(r).leading().term);
  }
  return leads;
}

std::pair<Polynomial, ReductionStep> apply_candidate(const Polynomial& f, const MixedSystem& F,
                                                     const Candidate& c) {
  Polynomial multiple = mul_scalar_and_words(c.coefficient, c.u, F.rule(c.rule_index), c.v);
  ReductionStep step{c.rule_index, c.coefficient, c.u.tag, c.u.word, Tag::untagged, c.v};
  return {subtract(f, multiple), std::move(step)};
}

bool needs_mirror(const Polynomial& f, const MixedSystem& F) {
  if (f.tag() == Tag::right) return true;
  return !F.tagged().empty() && F.tag_side() == Tag::right;
}

void check_orientation(const Polynomial& f, const MixedSystem& F) {
  if (f.tag() == Tag::right || (!F.tagged().empty() && F.tag_side() == Tag::right)) {
    throw TagMismatchError("polynomial tag side does not match the system's tag side");
  }
}

ReductionStep mirror_step(const ReductionStep& s) {
  ReductionStep out;
  out.rule_index = s.rule_index;
  out.coefficient = s.coefficient;
  out.u_tag = s.v_tag == Tag::right ? Tag::left : Tag::untagged;
  out.u = reverse(s.v);
  out.v_tag = s.u_tag == Tag::left ? Tag::right : Tag::untagged;
  out.v = reverse(s.u);
  return out;
}

NormalFormResult normal_form_left(const Polynomial& f, const MixedSystem& F,
                                  const ReductionOptions& options) {
  check_orientation(f, F);
  const std::vector<Word> leads = leading_words(F);
  NormalFormResult result{f, {}};
  std::mt19937_64 rng(options.seed);
  while (!result.poly.is_zero()) {
    const bool first_only = options.strategy == Strategy::deterministic;
    auto candidates = collect_candidates(result.poly, F, leads, first_only);
    if (candidates.empty()) break;
    if (options.max_steps != 0 && result.steps.size() >= options.max_steps) {
      throw StepLimitError("reduction exceeded the step budget");
    }
    std::size_t pick = 0;
    if (options.strategy == Strategy::randomized && candidates.size() > 1) {
      pick = static_cast<std::size_t>(rng() % candidates.size());
    }
    auto [next, step] = apply_candidate(result.poly, F, candidates[pick]);
    result.poly = std::move(next);
    result.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace

std::optional<std::pair<Polynomial, ReductionStep>> reduce_once(const Polynomial& f,
                                                                const MixedSystem& F) {
  if (f.is_zero()) return std::nullopt;
  if (needs_mirror(f, F)) {
    auto step = reduce_once(mirror(f), mirror(F));
    if (!step) return std::nullopt;
    return std::make_pair(mirror(step->first), mirror_step(step->second));
  }
  check_orientation(f, F);
  const std::vector<Word> leads = leading_words(F);
  auto candidates = collect_candidates(f, F, leads, /*first_only=*/true);
  if (candidates.empty()) return std::nullopt;
  return apply_candidate(f, F, candidates[0]);
}

NormalFormResult normal_form(const Polynomial& f, const MixedSystem& F,
                             const ReductionOptions& options) {
  if (needs_mirror(f, F)) {
    auto result = normal_form_left(mirror(f), mirror(F), options);
    NormalFormResult out{mirror(result.poly), {}};
    out.steps.reserve(result.steps.size());
    for (const auto& s : result.steps) out.steps.push_back(mirror_step(s));
    return out;
  }
  return normal_form_left(f, F, options);
}

bool reduces_to_zero(const Polynomial& f, const MixedSystem& F) {
  return normal_form(f, F).poly.is_zero();
}

std::string steps_to_json(const std::vector<ReductionStep>& steps, const Alphabet& alphabet) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json entry;
    entry["rule"] = s.rule_index;
    entry["k"] = s.coefficient.to_string();
    entry["u"] = format_tagged(s.u, s.u_tag, alphabet);
    entry["v"] = format_tagged(s.v, s.v_tag, alphabet);
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

}  // namespace greengb
