#include "greengb/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "greengb/errors.hpp"
#include "greengb/green.hpp"

namespace greengb::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundExceeded = 2;
constexpr int kExitParseError = 3;
constexpr int kExitTruncated = 4;
constexpr int kExitUsage = 5;

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_presentation(text.str());
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() == 1 && tokens[0] == "1") {
    if (!alphabet.allows_empty_word()) {
      throw ParseError("the empty word '1' is not allowed here");
    }
    return {};
  }
  std::vector<int> letters;
  for (const auto& t : tokens) {
    auto letter = alphabet.index_of(t);
    if (!letter) throw ParseError("unknown generator '" + t + "' in word '" + text + "'");
    letters.push_back(*letter);
  }
  if (letters.empty()) throw ParseError("empty word expression");
  return Word(std::move(letters));
}

Side parse_side(const std::string& text) {
  if (text == "right") return Side::right;
  if (text == "left") return Side::left;
  throw CLI::ValidationError("--side", "expected 'right' or 'left'");
}

void print_members(std::ostream& out, const std::string& label,
                   const std::vector<Polynomial>& members, const Alphabet& alphabet) {
  out << label << " (" << members.size() << "):\n";
  for (const auto& p : members) {
    out << "  " << format_poly(p, alphabet) << '\n';
  }
}

nlohmann::json members_json(const std::vector<Polynomial>& members, const Alphabet& alphabet) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : members) arr.push_back(format_poly(p, alphabet));
  return arr;
}

struct CommonFlags {
  bool json = false;
  CompletionLimits limits;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json, "emit JSON instead of text");
  cmd->add_option("--max-passes", flags.limits.max_passes, "completion pass limit");
  cmd->add_option("--max-term-length", flags.limits.max_term_length,
                  "discard threshold for leading-term length");
  cmd->add_option("--max-basis-size", flags.limits.max_basis_size, "basis size limit");
  cmd->add_option("--seed", flags.seed, "seed for the randomized reduction strategy")
      ->each([&flags](const std::string&) { flags.seed_given = true; });
}

int cmd_complete(const std::string& file, const CommonFlags& flags, std::ostream& out) {
  Presentation pres = load_presentation(file);
  CompletionResult res = complete(presentation_system(pres), flags.limits);
  const Alphabet& alphabet = pres.alphabet;
  if (flags.json) {
    nlohmann::json j;
    j["status"] = res.is_complete() ? "complete" : "bound_exceeded";
    j["passes"] = res.passes_used;
    j["spolys_added"] = res.spolys_added;
    j["tagged"] = members_json(res.basis.tagged(), alphabet);
    j["untagged"] = members_json(res.basis.untagged(), alphabet);
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << (res.is_complete() ? "complete" : "bound_exceeded") << '\n';
    out << "passes: " << res.passes_used << '\n';
    out << "spolys added: " << res.spolys_added << '\n';
    print_members(out, "tagged", res.basis.tagged(), alphabet);
    print_members(out, "untagged", res.basis.untagged(), alphabet);
  }
  return res.is_complete() ? kExitOk : kExitBoundExceeded;
}

int cmd_reduce(const std::string& file, const std::string& poly_text, bool trace,
               const CommonFlags& flags, std::ostream& out) {
  Presentation pres = load_presentation(file);
  MixedSystem system = presentation_system(pres);
  Polynomial f = parse_poly(poly_text, pres.alphabet);
  ReductionOptions options;
  if (flags.seed_given) {
    options.strategy = Strategy::randomized;
    options.seed = flags.seed;
  }
  NormalFormResult res = normal_form(f, system, options);
  if (flags.json) {
    nlohmann::json j;
    j["normal_form"] = format_poly(res.poly, pres.alphabet);
    j["steps"] = res.steps.size();
    if (trace) j["trace"] = nlohmann::json::parse(steps_to_json(res.steps, pres.alphabet));
    out << j.dump(2) << '\n';
  } else {
    out << "normal form: " << format_poly(res.poly, pres.alphabet) << '\n';
    out << "steps: " << res.steps.size() << '\n';
    if (trace) out << "trace: " << steps_to_json(res.steps, pres.alphabet) << '\n';
  }
  return kExitOk;
}

// Completed untagged system of the presentation, or the bound-exceeded
// exit code.
std::optional<MixedSystem> complete_base(const Presentation& pres, const CommonFlags& flags,
                                         std::ostream& err) {
  if (!pres.tagged_polynomials.empty()) {
    throw ParseError("this command expects a presentation without tagged members");
  }
  CompletionResult res = complete(presentation_system(pres), flags.limits);
  if (!res.is_complete()) {
    err << "error: defining relations do not complete within the given limits\n";
    return std::nullopt;
  }
  return std::move(res.basis);
}

int cmd_ideal(const std::string& file, const std::string& side_text,
              const std::vector<std::string>& gen_texts, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(file);
  Side side = parse_side(side_text);
  auto base = complete_base(pres, flags, err);
  if (!base) return kExitBoundExceeded;
  std::vector<Word> gens;
  for (const auto& text : gen_texts) gens.push_back(parse_word(text, pres.alphabet));

  IdealBasis basis = one_sided_basis_multi(*base, side, gens, flags.limits);
  if (flags.json) {
    nlohmann::json j;
    j["side"] = side_name(side);
    j["status"] = basis.status == CompletionStatus::complete ? "complete" : "bound_exceeded";
    j["tagged"] = members_json(basis.tagged_part, pres.alphabet);
    j["untagged"] = members_json(base->untagged(), pres.alphabet);
    out << j.dump(2) << '\n';
  } else {
    out << "side: " << side_name(side) << '\n';
    out << "status: "
        << (basis.status == CompletionStatus::complete ? "complete" : "bound_exceeded") << '\n';
    print_members(out, "tagged", basis.tagged_part, pres.alphabet);
    print_members(out, "untagged", base->untagged(), pres.alphabet);
  }
  return basis.status == CompletionStatus::complete ? kExitOk : kExitBoundExceeded;
}

int cmd_member(const std::string& file, const std::string& side_text,
               const std::vector<std::string>& gen_texts, const std::string& elem_text,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(file);
  Side side = parse_side(side_text);
  auto base = complete_base(pres, flags, err);
  if (!base) return kExitBoundExceeded;
  std::vector<Word> gens;
  for (const auto& text : gen_texts) gens.push_back(parse_word(text, pres.alphabet));
  Word elem = parse_word(elem_text, pres.alphabet);

  IdealBasis basis = one_sided_basis_multi(*base, side, gens, flags.limits);
  if (basis.status != CompletionStatus::complete) {
    err << "error: one-sided completion exceeded its bounds; membership undecided\n";
    return kExitBoundExceeded;
  }
  const bool member = ideal_member(basis, elem);
  if (flags.json) {
    nlohmann::json j;
    j["member"] = member;
    j["side"] = side_name(side);
    j["element"] = format_word(elem, pres.alphabet);
    out << j.dump(2) << '\n';
  } else {
    out << "member: " << (member ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_green(const std::string& file, std::size_t max_length, bool max_length_given,
              const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(file);
  if (pres.kind == PresentationKind::algebra) {
    throw ParseError("green expects a semigroup or monoid presentation");
  }
  auto base = complete_base(pres, flags, err);
  if (!base) return kExitBoundExceeded;

  const std::size_t bound = max_length_given ? max_length : 64;
  if (!max_length_given) {
    ElementEnumeration probe = enumerate_elements(*base, bound, 10000);
    if (probe.truncated) {
      err << "error: element enumeration truncated at length " << bound
          << "; pass --max-length to classify a bounded portion\n";
      return kExitTruncated;
    }
  }

  GreenClassification gc = classify(pres, flags.limits, bound);
  if (flags.json) {
    out << classification_to_json(gc).dump(2) << '\n';
    return kExitOk;
  }
  const Alphabet& alphabet = pres.alphabet;
  out << "elements (" << gc.elements.elements.size() << "):";
  for (std::size_t i = 0; i < gc.elements.elements.size(); ++i) {
    out << (i == 0 ? " " : ", ") << format_word(gc.elements.elements[i], alphabet);
  }
  out << '\n';
  out << "truncated: " << (gc.elements.truncated ? "true" : "false") << '\n';
  auto print_partition = [&](const char* label, const std::vector<std::vector<std::size_t>>& cls) {
    out << label << ":";
    for (const auto& c : cls) {
      out << " {";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) out << ", ";
        out << format_word(gc.elements.elements[c[k]], alphabet);
      }
      out << "}";
    }
    out << '\n';
  };
  print_partition("R-classes", gc.r_classes);
  print_partition("L-classes", gc.l_classes);
  print_partition("H-classes", gc.h_classes);
  print_partition("D-classes", gc.d_classes);
  out << "bases:\n";
  for (std::size_t i = 0; i < gc.elements.elements.size(); ++i) {
    out << "  " << format_word(gc.elements.elements[i], alphabet) << ": right {";
    for (std::size_t k = 0; k < gc.right_bases[i].tagged_part.size(); ++k) {
      if (k > 0) out << ", ";
      out << format_poly(gc.right_bases[i].tagged_part[k], alphabet);
    }
    out << "} left {";
    for (std::size_t k = 0; k < gc.left_bases[i].tagged_part.size(); ++k) {
      if (k > 0) out << ", ";
      out << format_poly(gc.left_bases[i].tagged_part[k], alphabet);
    }
    out << "}\n";
  }
  out << "eggbox:\n" << render_eggbox(gc);
  out << "reliable: " << (gc.reliable ? "true" : "false") << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"one-sided Groebner bases and Green's relations for finitely "
               "presented semigroups, monoids and algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string poly_text;
  std::string side_text;
  std::string elem_text;
  std::vector<std::string> gen_texts;
  bool trace = false;
  std::size_t max_length = 64;

  CommonFlags complete_flags, reduce_flags, ideal_flags, member_flags, green_flags;

  auto* complete_cmd = app.add_subcommand("complete", "complete a mixed system");
  complete_cmd->add_option("file", file, "presentation file")->required();
  add_common(complete_cmd, complete_flags);

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a polynomial");
  reduce_cmd->add_option("file", file, "presentation file")->required();
  reduce_cmd->add_option("--poly", poly_text, "polynomial expression")->required();
  reduce_cmd->add_flag("--trace", trace, "print the reduction trace");
  add_common(reduce_cmd, reduce_flags);

  auto* ideal_cmd = app.add_subcommand("ideal", "one-sided ideal basis");
  ideal_cmd->add_option("file", file, "presentation file")->required();
  ideal_cmd->add_option("--side", side_text, "right or left")->required();
  ideal_cmd->add_option("--gen", gen_texts, "generator word (repeatable)")->required();
  add_common(ideal_cmd, ideal_flags);

  auto* member_cmd = app.add_subcommand("member", "one-sided ideal membership");
  member_cmd->add_option("file", file, "presentation file")->required();
  member_cmd->add_option("--side", side_text, "right or left")->required();
  member_cmd->add_option("--gen", gen_texts, "generator word (repeatable)")->required();
  member_cmd->add_option("--elem", elem_text, "candidate word")->required();
  add_common(member_cmd, member_flags);

  auto* green_cmd = app.add_subcommand("green", "Green's relations and eggbox diagram");
  green_cmd->add_option("file", file, "presentation file")->required();
  auto* max_length_opt =
      green_cmd->add_option("--max-length", max_length, "enumeration length bound");
  add_common(green_cmd, green_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (complete_cmd->parsed()) return cmd_complete(file, complete_flags, out);
    if (reduce_cmd->parsed()) return cmd_reduce(file, poly_text, trace, reduce_flags, out);
    if (ideal_cmd->parsed()) return cmd_ideal(file, side_text, gen_texts, ideal_flags, out, err);
    if (member_cmd->parsed()) {
      return cmd_member(file, side_text, gen_texts, elem_text, member_flags, out, err);
    }
    if (green_cmd->parsed()) {
      return cmd_green(file, max_length, max_length_opt->count() > 0, green_flags, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << ": " << e.what() << '\n';
    return kExitParseError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IncompleteSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBoundExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace greengb::cli
