#include "greengb/completion.hpp"

#include <json.hpp>

#include "greengb/errors.hpp"

namespace greengb {

namespace {

struct SplitMembers {
  std::vector<Polynomial> tagged;
  std::vector<Polynomial> untagged;
};

SplitMembers split(const std::vector<Polynomial>& members) {
  SplitMembers parts;
  for (const auto& p : members) {
    (p.tag() == Tag::untagged ? parts.untagged : parts.tagged).push_back(p);
  }
  return parts;
}

MixedSystem make_from(const MixedSystem& like, const std::vector<Polynomial>& members) {
  auto parts = split(members);
  return MixedSystem::make(like.alphabet(), std::move(parts.tagged), std::move(parts.untagged),
                           like.tag_side());
}

std::vector<Polynomial> all_members(const MixedSystem& F) {
  std::vector<Polynomial> members;
  members.reserve(F.rule_count());
  for (std::size_t i = 0; i < F.rule_count(); ++i) members.push_back(F.rule(i));
  return members;
}

std::vector<Polynomial> interreduce_members(const MixedSystem& like,
                                            std::vector<Polynomial> members) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(members.size() - 1);
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i) others.push_back(members[j]);
      }
      MixedSystem rest = make_from(like, others);
      Polynomial nf = normal_form(members[i], rest).poly;
      if (nf.is_zero()) {
        members.erase(members.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      nf = nf.monic();
      if (nf != members[i]) {
        members[i] = std::move(nf);
        changed = true;
      }
    }
  }
  return members;
}

CompletionResult complete_left(const MixedSystem& F, const CompletionLimits& limits) {
  CompletionResult result;
  MixedSystem old_sys = make_from(F, all_members(F));

  for (std::size_t pass = 1; pass <= limits.max_passes; ++pass) {
    result.passes_used = pass;
    const auto matches = find_all_matches(old_sys);

    std::vector<Polynomial> collected;
    bool term_length_breach = false;
    for (const auto& m : matches) {
      Polynomial spoly = s_polynomial(m, old_sys);
      // Reduce against the current basis plus the S-polynomials collected
      // so far in this pass; this only shrinks output, the fixpoint is the
      // same.
      std::vector<Polynomial> working = all_members(old_sys);
      working.insert(working.end(), collected.begin(), collected.end());
      Polynomial nf = normal_form(spoly, make_from(old_sys, working)).poly;

      CompletionLogEntry entry{pass, m.kind, m.first, m.second, spoly, nf, !nf.is_zero()};
      if (!nf.is_zero()) {
        nf = nf.monic();
        entry.spoly_nf = nf;
        if (nf.leading().term.size() > limits.max_term_length) {
          entry.kept = false;
          result.log.push_back(std::move(entry));
          term_length_breach = true;
          break;
        }
        collected.push_back(nf);
        ++result.spolys_added;
      }
      result.log.push_back(std::move(entry));
    }

    if (term_length_breach) {
      std::vector<Polynomial> partial = all_members(old_sys);
      partial.insert(partial.end(), collected.begin(), collected.end());
      result.basis = make_from(old_sys, interreduce_members(old_sys, std::move(partial)));
      result.status = CompletionStatus::bound_exceeded;
      return result;
    }

    std::vector<Polynomial> merged = all_members(old_sys);
    merged.insert(merged.end(), collected.begin(), collected.end());
    MixedSystem new_sys = make_from(old_sys, interreduce_members(old_sys, std::move(merged)));

    if (new_sys == old_sys) {
      result.basis = std::move(new_sys);
      result.status = CompletionStatus::complete;
      return result;
    }
    old_sys = std::move(new_sys);
    if (old_sys.rule_count() > limits.max_basis_size) {
      break;
    }
  }

  result.basis = std::move(old_sys);
  result.status = CompletionStatus::bound_exceeded;
  return result;
}

CompletionLogEntry mirror_entry(const CompletionLogEntry& e) {
  return {e.pass, e.kind, e.i, e.j, mirror(e.spoly_before), mirror(e.spoly_nf), e.kept};
}

}  // namespace

CompletionResult complete(const MixedSystem& F, const CompletionLimits& limits) {
  if (F.tag_side() == Tag::right && !F.tagged().empty()) {
    CompletionResult inner = complete_left(mirror(F), limits);
    CompletionResult out;
    out.basis = mirror(inner.basis);
    out.status = inner.status;
    out.passes_used = inner.passes_used;
    out.spolys_added = inner.spolys_added;
    out.log.reserve(inner.log.size());
    for (const auto& e : inner.log) out.log.push_back(mirror_entry(e));
    return out;
  }
  return complete_left(F, limits);
}

MixedSystem interreduce(const MixedSystem& F) {
  if (F.tag_side() == Tag::right && !F.tagged().empty()) {
    return mirror(interreduce(mirror(F)));
  }
  return make_from(F, interreduce_members(F, all_members(F)));
}

ConfluenceReport check_local_confluence(const MixedSystem& F) {
  if (F.tag_side() == Tag::right && !F.tagged().empty()) {
    ConfluenceReport inner = check_local_confluence(mirror(F));
    return inner;  // match indices are position-stable under mirroring
  }
  ConfluenceReport report;
  report.confluent = true;
  for (const auto& m : find_all_matches(F)) {
    if (!reduces_to_zero(s_polynomial(m, F), F)) {
      report.confluent = false;
      report.failing.push_back(m);
    }
  }
  return report;
}

std::string completion_log_to_json(const std::vector<CompletionLogEntry>& log,
                                   const Alphabet& alphabet) {
  std::string out;
  for (const auto& e : log) {
    nlohmann::json record;
    record["pass"] = e.pass;
    record["case"] = match_case_name(e.kind);
    record["i"] = e.i;
    record["j"] = e.j;
    record["spoly_before"] = format_poly(e.spoly_before, alphabet);
    record["spoly_nf"] = format_poly(e.spoly_nf, alphabet);
    record["kept"] = e.kept;
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace greengb
