#include "greengb/green.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "greengb/errors.hpp"

namespace greengb {

std::string side_name(Side s) { return s == Side::right ? "right" : "left"; }

namespace {

void sort_display(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(),
            [](const Polynomial& a, const Polynomial& b) { return compare_polynomials(a, b) < 0; });
}

// Completes ({<| g : g in generators}, context) in the left orientation and
// wraps the result. For left-side work the caller passes reversed
// generators and the completed reversed untagged basis; the tagged part is
// mirrored back for display.
IdealBasis run_one_sided(const std::shared_ptr<const MixedSystem>& context, Side side,
                         const Word& display_element, const std::vector<Word>& oriented_gens,
                         const CompletionLimits& limits) {
  std::vector<Polynomial> tagged;
  tagged.reserve(oriented_gens.size());
  for (const auto& g : oriented_gens) {
    tagged.push_back(Polynomial::monomial(g, 1, Tag::left));
  }
  MixedSystem mixed =
      MixedSystem::make(context->alphabet(), std::move(tagged), context->untagged(), Tag::left);
  CompletionResult res = complete(mixed, limits);

  IdealBasis basis;
  basis.element = display_element;
  basis.side = side;
  basis.status = res.status;
  basis.context = context;
  if (res.basis.untagged() != context->untagged()) {
    // The untagged part can only grow when the given system was not
    // actually complete; keep the basis usable by carrying the grown part.
    basis.context = std::make_shared<const MixedSystem>(
        MixedSystem::make(context->alphabet(), {}, res.basis.untagged(), Tag::left));
  }
  for (const auto& p : res.basis.tagged()) {
    basis.tagged_part.push_back(side == Side::right ? p : mirror(p));
  }
  sort_display(basis.tagged_part);
  return basis;
}

std::shared_ptr<const MixedSystem> completed_reversal(const MixedSystem& completedP,
                                                      const CompletionLimits& limits,
                                                      bool* ok = nullptr) {
  std::vector<Polynomial> reversed;
  reversed.reserve(completedP.untagged().size());
  for (const auto& p : completedP.untagged()) reversed.push_back(mirror(p));
  MixedSystem revP = MixedSystem::make(completedP.alphabet(), {}, std::move(reversed), Tag::left);
  CompletionResult res = complete(revP, limits);
  if (ok) *ok = res.is_complete();
  return std::make_shared<const MixedSystem>(std::move(res.basis));
}

}  // namespace

IdealBasis one_sided_basis(const MixedSystem& completedP, Side side, const Word& element,
                           const CompletionLimits& limits) {
  return one_sided_basis_multi(completedP, side, {element}, limits);
}

IdealBasis one_sided_basis_multi(const MixedSystem& completedP, Side side,
                                 const std::vector<Word>& generators,
                                 const CompletionLimits& limits) {
  Word display = generators.empty() ? Word{} : generators.front();
  if (side == Side::right) {
    auto context = std::make_shared<const MixedSystem>(
        MixedSystem::make(completedP.alphabet(), {}, completedP.untagged(), Tag::left));
    return run_one_sided(context, side, display, generators, limits);
  }
  bool rev_ok = false;
  auto context = completed_reversal(completedP, limits, &rev_ok);
  std::vector<Word> reversed_gens;
  reversed_gens.reserve(generators.size());
  for (const auto& g : generators) reversed_gens.push_back(reverse(g));
  IdealBasis basis = run_one_sided(context, side, display, reversed_gens, limits);
  if (!rev_ok) basis.status = CompletionStatus::bound_exceeded;
  return basis;
}

bool ideal_member(const IdealBasis& basis, const Word& element) {
  const MixedSystem& context = *basis.context;
  std::vector<Polynomial> oriented;
  oriented.reserve(basis.tagged_part.size());
  for (const auto& p : basis.tagged_part) {
    oriented.push_back(basis.side == Side::right ? p : mirror(p));
  }
  MixedSystem sys =
      MixedSystem::make(context.alphabet(), std::move(oriented), context.untagged(), Tag::left);
  Word w = basis.side == Side::right ? element : reverse(element);
  return reduces_to_zero(Polynomial::monomial(std::move(w), 1, Tag::left), sys);
}

IdealRelation ideals_equal(const IdealBasis& a, const IdealBasis& b) {
  if (a.side != b.side) {
    throw SideMismatchError("comparing ideal bases of different sides");
  }
  if (a.status == CompletionStatus::bound_exceeded || b.status == CompletionStatus::bound_exceeded) {
    return IdealRelation::unknown;
  }
  if (a.context != b.context && a.context->untagged() != b.context->untagged()) {
    throw std::invalid_argument("ideals_equal: bases computed over different systems");
  }
  auto oriented = [&](const std::vector<Polynomial>& display) {
    std::vector<Polynomial> out;
    out.reserve(display.size());
    for (const auto& p : display) out.push_back(a.side == Side::right ? p : mirror(p));
    return out;
  };
  const std::vector<Polynomial> gens_a = oriented(a.tagged_part);
  const std::vector<Polynomial> gens_b = oriented(b.tagged_part);
  const MixedSystem& context = *a.context;

  auto absorbed = [&](const std::vector<Polynomial>& gens, const std::vector<Polynomial>& basis) {
    MixedSystem sys = MixedSystem::make(context.alphabet(), basis, context.untagged(), Tag::left);
    for (const auto& g : gens) {
      if (!reduces_to_zero(g, sys)) return false;
    }
    return true;
  };
  return absorbed(gens_a, gens_b) && absorbed(gens_b, gens_a) ? IdealRelation::equal
                                                              : IdealRelation::different;
}

namespace {

struct PartitionResult {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  bool saw_unknown = false;
};

PartitionResult partition_by_ideal(const std::vector<IdealBasis>& bases) {
  PartitionResult result;
  result.class_of.resize(bases.size(), 0);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < representative.size(); ++c) {
      IdealRelation rel = ideals_equal(bases[i], bases[representative[c]]);
      if (rel == IdealRelation::unknown) {
        result.saw_unknown = true;
        continue;
      }
      if (rel == IdealRelation::equal) {
        result.classes[c].push_back(i);
        result.class_of[i] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      result.class_of[i] = result.classes.size();
      result.classes.push_back({i});
      representative.push_back(i);
    }
  }
  return result;
}

// Union-find for the D-relation (transitive closure of R union L).
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Orders D-classes top-down by two-sided ideal containment, falling back
// to enumeration order when an auxiliary completion exceeds limits.
void order_d_classes(std::vector<std::vector<std::size_t>>& d_classes,
                     const std::vector<Word>& elements, const MixedSystem& completedP,
                     const CompletionLimits& limits) {
  const std::size_t n = d_classes.size();
  if (n <= 1) return;

  std::vector<Word> reps;
  reps.reserve(n);
  for (const auto& cls : d_classes) reps.push_back(elements[cls.front()]);

  std::vector<MixedSystem> ideal_systems;
  ideal_systems.reserve(n);
  for (const auto& rep : reps) {
    std::vector<Polynomial> untagged = completedP.untagged();
    untagged.push_back(Polynomial::monomial(rep, 1, Tag::untagged));
    CompletionResult res =
        complete(MixedSystem::make(completedP.alphabet(), {}, std::move(untagged), Tag::left), limits);
    if (!res.is_complete()) return;  // keep enumeration order
    ideal_systems.push_back(std::move(res.basis));
  }

  auto contains = [&](std::size_t a, std::size_t b) {  // rep_b in two-sided ideal of rep_a
    return reduces_to_zero(Polynomial::monomial(reps[b], 1, Tag::untagged), ideal_systems[a]);
  };

  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<std::vector<std::size_t>> ordered;
  while (!remaining.empty()) {
    std::size_t pick = remaining.size();
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      bool maximal = true;
      for (std::size_t other : remaining) {
        if (other == remaining[idx]) continue;
        if (contains(other, remaining[idx]) && !contains(remaining[idx], other)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        pick = idx;
        break;
      }
    }
    if (pick == remaining.size()) pick = 0;  // cyclic containment cannot happen; be safe
    ordered.push_back(std::move(d_classes[remaining[pick]]));
    remaining.erase(remaining.begin() + static_cast<long>(pick));
  }
  d_classes = std::move(ordered);
}

}  // namespace

GreenClassification classify(const Presentation& pres, const CompletionLimits& limits,
                             std::size_t length_bound) {
  if (pres.kind == PresentationKind::algebra) {
    throw std::invalid_argument("classify expects a semigroup or monoid presentation");
  }

  CompletionResult pc = complete(presentation_system(pres), limits);
  if (!pc.is_complete()) {
    throw IncompleteSystemError("defining relations do not complete within the given limits");
  }
  auto right_ctx = std::make_shared<const MixedSystem>(pc.basis);
  bool left_ok = false;
  auto left_ctx = completed_reversal(pc.basis, limits, &left_ok);

  GreenClassification gc;
  gc.alphabet = pres.alphabet;
  gc.has_zero = pres.alphabet.zero_letter().has_value();
  gc.elements = enumerate_elements(*right_ctx, length_bound);
  const std::vector<Word>& elements = gc.elements.elements;
  const std::size_t n = elements.size();

  gc.right_bases.resize(n);
  gc.left_bases.resize(n);
  {
    // Fan out over immutable shared inputs; each worker writes only its own
    // element slots, so the merge is deterministic by element index.
    auto compute = [&](std::size_t i) {
      gc.right_bases[i] =
          run_one_sided(right_ctx, Side::right, elements[i], {elements[i]}, limits);
      if (left_ok) {
        gc.left_bases[i] =
            run_one_sided(left_ctx, Side::left, elements[i], {reverse(elements[i])}, limits);
      } else {
        IdealBasis left;
        left.element = elements[i];
        left.side = Side::left;
        left.status = CompletionStatus::bound_exceeded;
        left.context = left_ctx;
        left.tagged_part = {Polynomial::monomial(elements[i], 1, Tag::right)};
        gc.left_bases[i] = std::move(left);
      }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w]() {
        for (std::size_t i = w; i < n; i += workers) compute(i);
      }));
    }
    for (auto& job : jobs) job.get();
  }

  PartitionResult r = partition_by_ideal(gc.right_bases);
  PartitionResult l = partition_by_ideal(gc.left_bases);
  gc.r_classes = r.classes;
  gc.l_classes = l.classes;

  // H-classes: intersections of one R-class and one L-class.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_index;
  for (std::size_t i = 0; i < n; ++i) {
    auto key = std::make_pair(r.class_of[i], l.class_of[i]);
    auto it = h_index.find(key);
    if (it == h_index.end()) {
      h_index.emplace(key, gc.h_classes.size());
      gc.h_classes.push_back({i});
    } else {
      gc.h_classes[it->second].push_back(i);
    }
  }
  std::sort(gc.h_classes.begin(), gc.h_classes.end());

  UnionFind uf(n);
  for (const auto& cls : gc.r_classes) {
    for (std::size_t k = 1; k < cls.size(); ++k) uf.unite(cls[0], cls[k]);
  }
  for (const auto& cls : gc.l_classes) {
    for (std::size_t k = 1; k < cls.size(); ++k) uf.unite(cls[0], cls[k]);
  }
  std::map<std::size_t, std::size_t> d_index;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = uf.find(i);
    auto it = d_index.find(root);
    if (it == d_index.end()) {
      d_index.emplace(root, gc.d_classes.size());
      gc.d_classes.push_back({i});
    } else {
      gc.d_classes[it->second].push_back(i);
    }
  }
  order_d_classes(gc.d_classes, elements, *right_ctx, limits);

  bool bases_complete = true;
  for (const auto& b : gc.right_bases) bases_complete &= b.status == CompletionStatus::complete;
  for (const auto& b : gc.left_bases) bases_complete &= b.status == CompletionStatus::complete;
  gc.reliable = bases_complete && left_ok && !gc.elements.truncated && !r.saw_unknown &&
                !l.saw_unknown;
  return gc;
}

namespace {

std::string cell_text(const std::vector<std::size_t>& members, const GreenClassification& gc) {
  if (members.size() > 4) {
    return "(" + std::to_string(members.size()) + ")";
  }
  std::string out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_word(gc.elements.elements[members[k]], gc.alphabet);
  }
  return out;
}

std::string render_block(const std::vector<std::vector<std::string>>& cells) {
  const std::size_t rows = cells.size();
  const std::size_t cols = cells.empty() ? 0 : cells[0].size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto rule = [&]() {
    out << '+';
    for (std::size_t c = 0; c < cols; ++c) out << std::string(width[c] + 2, '-') << '+';
    out << '\n';
  };
  rule();
  for (std::size_t r = 0; r < rows; ++r) {
    out << '|';
    for (std::size_t c = 0; c < cols; ++c) {
      out << ' ' << cells[r][c] << std::string(width[c] - cells[r][c].size(), ' ') << " |";
    }
    out << '\n';
    rule();
  }
  return out.str();
}

}  // namespace

std::string render_eggbox(const GreenClassification& gc) {
  if (gc.elements.elements.empty() && !gc.has_zero) return "";
  std::ostringstream out;
  bool first = true;
  for (const auto& d : gc.d_classes) {
    std::vector<std::size_t> in_d(gc.elements.elements.size(), 0);
    for (std::size_t i : d) in_d[i] = 1;

    std::vector<std::size_t> row_classes;
    for (std::size_t rc = 0; rc < gc.r_classes.size(); ++rc) {
      if (in_d[gc.r_classes[rc].front()]) row_classes.push_back(rc);
    }
    std::vector<std::size_t> col_classes;
    for (std::size_t lc = 0; lc < gc.l_classes.size(); ++lc) {
      if (in_d[gc.l_classes[lc].front()]) col_classes.push_back(lc);
    }

    std::vector<std::vector<std::string>> cells(row_classes.size(),
                                                std::vector<std::string>(col_classes.size()));
    for (std::size_t r = 0; r < row_classes.size(); ++r) {
      for (std::size_t c = 0; c < col_classes.size(); ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i : gc.r_classes[row_classes[r]]) {
          const auto& lcls = gc.l_classes[col_classes[c]];
          if (std::find(lcls.begin(), lcls.end(), i) != lcls.end()) members.push_back(i);
        }
        std::sort(members.begin(), members.end());
        cells[r][c] = cell_text(members, gc);
      }
    }
    if (!first) out << '\n';
    first = false;
    out << render_block(cells);
  }
  if (gc.has_zero) {
    if (!first) out << '\n';
    first = false;
    out << render_block({{"0"}});
  }
  if (!gc.reliable) {
    out << "\nnote: enumeration truncated or a completion hit its bounds; "
           "the classification may be incomplete\n";
  }
  return out.str();
}

nlohmann::json classification_to_json(const GreenClassification& gc) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (const auto& w : gc.elements.elements) {
    j["elements"].push_back(format_word(w, gc.alphabet));
  }
  j["truncated"] = gc.elements.truncated;
  j["r_classes"] = gc.r_classes;
  j["l_classes"] = gc.l_classes;
  j["h_classes"] = gc.h_classes;
  j["d_classes"] = gc.d_classes;
  nlohmann::json bases = nlohmann::json::object();
  for (std::size_t i = 0; i < gc.elements.elements.size(); ++i) {
    nlohmann::json entry;
    entry["right"] = nlohmann::json::array();
    for (const auto& p : gc.right_bases[i].tagged_part) {
      entry["right"].push_back(format_poly(p, gc.alphabet));
    }
    entry["left"] = nlohmann::json::array();
    for (const auto& p : gc.left_bases[i].tagged_part) {
      entry["left"].push_back(format_poly(p, gc.alphabet));
    }
    bases[format_word(gc.elements.elements[i], gc.alphabet)] = std::move(entry);
  }
  j["bases"] = std::move(bases);
  j["reliable"] = gc.reliable;
  return j;
}

}  // namespace greengb
