#include "llull/blake.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "llull/errors.hpp"

namespace llull {

std::optional<Clause> resolve(const LiteralUniverse& universe, const Clause& c1,
                              const Clause& c2, Literal pivot) {
  const Literal anti = universe.negation(pivot);
  if (!c1.contains(pivot) || !c2.contains(anti)) {
    throw std::invalid_argument("pivot " + universe.label(pivot) +
                                " does not separate the two clauses");
  }
  std::vector<Literal> lits;
  for (Literal l : c1.literals()) {
    if (l != pivot) lits.push_back(l);
  }
  for (Literal l : c2.literals()) {
    if (l != anti) lits.push_back(l);
  }
  if (lits.empty()) throw std::invalid_argument("empty resolvent: the clauses contradict");
  Clause out(std::move(lits));
  for (Literal l : out.literals()) {
    if (out.contains(universe.negation(l))) return std::nullopt;
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask kEven = 0x5555555555555555ULL;
constexpr Mask kOdd = 0xAAAAAAAAAAAAAAAAULL;

Mask negate(Mask m) { return ((m & kEven) << 1) | ((m & kOdd) >> 1); }

Mask to_mask(const Clause& c) {
  Mask m = 0;
  for (Literal l : c.literals()) m |= Mask{1} << l.id;
  return m;
}

Clause to_clause(Mask m) {
  std::vector<Literal> lits;
  while (m != 0) {
    lits.push_back(Literal{static_cast<std::uint32_t>(std::countr_zero(m))});
    m &= m - 1;
  }
  return Clause(std::move(lits));
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// (size, ids) order, matching Clause.
bool mask_less(Mask a, Mask b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

struct Origin {
  Mask left;
  Mask right;
  Mask pivot;
};

}  // namespace

Doctrine blake_canonical_form(const Doctrine& d, const BlakeLimits& limits,
                              std::vector<ResolutionTrace>* trace) {
  const std::size_t width = d.universe().size();
  if (width > limits.max_literals || width > 64) {
    throw SizeError("Blake canonical form over " + std::to_string(width) +
                    " literals exceeds the guard of " +
                    std::to_string(std::min<std::size_t>(limits.max_literals, 64)));
  }

  std::vector<Mask> kept;
  for (const auto& c : d.proper_clauses()) kept.push_back(to_mask(c));
  std::sort(kept.begin(), kept.end(), mask_less);
  {
    std::vector<Mask> reduced;
    for (Mask m : kept) {
      bool absorbed = std::any_of(reduced.begin(), reduced.end(),
                                  [m](Mask r) { return subset(r, m); });
      if (!absorbed) reduced.push_back(m);
    }
    kept = std::move(reduced);
  }
  std::vector<Mask> fresh = kept;

  while (!fresh.empty()) {
    std::vector<std::pair<Mask, Origin>> found;
    for (Mask a : fresh) {
      for (Mask b : kept) {
        Mask clash = a & negate(b);
        if (std::popcount(clash) != 1) continue;
        Mask r = (a | b) & ~(clash | negate(clash));
        if (r == 0) throw std::invalid_argument("doctrine is unsatisfiable");
        found.push_back({r, Origin{a, b, clash}});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return mask_less(x.first, y.first); });

    std::vector<std::pair<Mask, Origin>> added;
    for (const auto& [r, origin] : found) {
      auto absorbs = [r](Mask k) { return subset(k, r); };
      if (std::any_of(kept.begin(), kept.end(), absorbs)) continue;
      if (std::any_of(added.begin(), added.end(),
                      [r](const auto& p) { return subset(p.first, r); })) {
        continue;
      }
      added.push_back({r, origin});
    }
    if (added.empty()) break;

    std::erase_if(kept, [&](Mask k) {
      return std::any_of(added.begin(), added.end(),
                         [k](const auto& p) { return subset(p.first, k); });
    });
    fresh.clear();
    for (const auto& [r, origin] : added) {
      kept.push_back(r);
      fresh.push_back(r);
    }
    if (kept.size() > limits.max_clauses) {
      throw SizeError("Blake canonical form exceeds " + std::to_string(limits.max_clauses) +
                      " clauses");
    }
    std::sort(kept.begin(), kept.end(), mask_less);
    if (trace != nullptr) {
      for (const auto& [r, origin] : added) {
        trace->push_back(ResolutionTrace{
            Literal{static_cast<std::uint32_t>(std::countr_zero(origin.pivot))},
            {to_clause(origin.left), to_clause(origin.right)},
            to_clause(r)});
      }
    }
  }

  std::vector<Clause> clauses;
  clauses.reserve(kept.size());
  for (Mask m : kept) clauses.push_back(to_clause(m));
  return Doctrine(d.universe_ptr(), std::move(clauses));
}

std::vector<UnquestionabilityEntry> verify_unquestionability(
    const Valuation& v0, const Doctrine& d, const Doctrine& blake_form,
    std::span<const Literal> literals) {
  Valuation fixed = upper_revise(v0, d);
  Valuation once = one_step_revise(v0, blake_form);
  std::vector<UnquestionabilityEntry> out;
  for (Literal l : literals) out.push_back({l, fixed[l], once[l]});
  return out;
}

std::vector<UnquestionabilityEntry> verify_unquestionability(
    const Valuation& v0, const Doctrine& d, std::span<const Literal> literals,
    const BlakeLimits& limits) {
  return verify_unquestionability(v0, d, blake_canonical_form(d, limits), literals);
}

std::string dump_clauses(const Doctrine& d, bool include_tertium) {
  std::string out;
  for (const auto& c : d.clauses()) {
    if (!include_tertium && d.is_tertium(c)) continue;
    bool first = true;
    for (Literal l : c.literals()) {
      if (!first) out += ' ';
      out += d.universe().label(l);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace llull
