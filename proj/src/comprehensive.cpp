#include "llull/comprehensive.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "llull/errors.hpp"

namespace llull {

namespace {

using Rank = std::int64_t;
constexpr Rank kEmptyMax = -1;
constexpr Rank kEmptyMin = std::numeric_limits<Rank>::max();

constexpr std::size_t kHardCap = 24;

void check_size(const OptionLiterals& L, std::size_t cap) {
  if (L.unary() != 't') throw ConfigError("comprehensive prominence needs the t(x) layout");
  if (L.size() > cap || L.size() > kHardCap) {
    throw SizeError("comprehensive-prominence over " + std::to_string(L.size()) +
                    " options exceeds the cap of " +
                    std::to_string(std::min(cap, kHardCap)));
  }
}

// Lowest entry and the lowest among the rest, so a single excluded
// position can be answered in O(1).
struct MinPair {
  Rank best = kEmptyMin;
  Rank second = kEmptyMin;
  std::size_t where = SIZE_MAX;

  void add(Rank value, std::size_t position) {
    if (value < best) {
      second = best;
      best = value;
      where = position;
    } else if (value < second) {
      second = value;
    }
  }
  Rank without(std::size_t position) const { return position == where ? second : best; }
};

// Evaluates the grouped one-step formulas on ranks; the own-value term of
// each outer max is taken from `base`.
std::vector<Rank> kernel(const OptionLiterals& L, const std::vector<Rank>& v,
                         const std::vector<Rank>& base) {
  const std::size_t n = L.size();
  std::vector<Rank> out(base);
  if (n < 2) return out;
  auto pref = [&](std::size_t x, std::size_t y) { return v[L.pref(x, y).id]; };
  auto t = [&](std::size_t x) { return v[L.unary_pos(x).id]; };
  auto nt = [&](std::size_t x) { return v[L.unary_neg(x).id]; };
  auto raise = [&](Literal l, Rank value) {
    if (value != kEmptyMin && value > out[l.id]) out[l.id] = value;
  };

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t set = 1; set <= full; ++set) {
    MinPair rect;
    MinPair not_t;
    Rank t_out = kEmptyMax;
    for (std::size_t r = 0; r < n; ++r) {
      if (set >> r & 1) {
        not_t.add(nt(r), r);
        for (std::size_t s = 0; s < n; ++s) {
          if (!(set >> s & 1)) rect.add(pref(r, s), r * n + s);
        }
      } else {
        t_out = std::max(t_out, t(r));
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      if (set >> x & 1) {
        raise(L.unary_pos(x), std::min(not_t.without(x), rect.best));
      } else {
        raise(L.unary_neg(x), rect.best);
      }
    }

    const Rank guard = std::max(not_t.best, t_out);
    for (std::size_t x = 0; x < n; ++x) {
      if (!(set >> x & 1)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (set >> y & 1) continue;
        raise(L.pref(y, x), std::min(guard, rect.without(x * n + y)));
      }
    }
  }

  for (std::size_t y = 0; y < n; ++y) {
    Rank others = kEmptyMax;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != y) others = std::max(others, t(r));
    }
    raise(L.unary_neg(y), others);
  }
  return out;
}

struct Ranked {
  std::vector<Rational> levels;
  std::vector<Rank> ranks;
};

Ranked to_ranks(const Valuation& v) {
  Ranked r;
  r.levels.assign(v.values().begin(), v.values().end());
  std::sort(r.levels.begin(), r.levels.end());
  r.levels.erase(std::unique(r.levels.begin(), r.levels.end()), r.levels.end());
  for (const auto& x : v.values()) {
    r.ranks.push_back(std::lower_bound(r.levels.begin(), r.levels.end(), x) - r.levels.begin());
  }
  return r;
}

Valuation from_ranks(const Valuation& like, const Ranked& r, const std::vector<Rank>& ranks) {
  std::vector<Rational> values;
  values.reserve(ranks.size());
  for (auto k : ranks) values.push_back(r.levels[static_cast<std::size_t>(k)]);
  return Valuation(like.universe_ptr(), std::move(values));
}

void check_universe(const OptionLiterals& L, const Valuation& v) {
  if (v.universe_ptr() != L.universe() && v.universe().size() != L.universe()->size()) {
    throw ConfigError("valuation is not over the comprehensive prominence literals");
  }
}

}  // namespace

Valuation comprehensive_one_step(const OptionLiterals& literals, const Valuation& v,
                                 std::size_t cap) {
  check_size(literals, cap);
  check_universe(literals, v);
  Ranked r = to_ranks(v);
  return from_ranks(v, r, kernel(literals, r.ranks, r.ranks));
}

Valuation comprehensive_upper_revise(const OptionLiterals& literals, const Valuation& v0,
                                     std::size_t cap) {
  check_size(literals, cap);
  check_universe(literals, v0);
  Ranked r = to_ranks(v0);
  std::vector<Rank> current = r.ranks;
  const std::size_t limit = r.ranks.size() * r.levels.size() + 1;
  for (std::size_t pass = 0;; ++pass) {
    if (pass > limit) throw InternalError("comprehensive revision did not reach a fixed point");
    auto next = kernel(literals, current, r.ranks);
    if (next == current) break;
    current = std::move(next);
  }
  return from_ranks(v0, r, current);
}

std::vector<Rational> comprehensive_not_prominent(const LlullMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap || n > kHardCap) {
    throw SizeError("comprehensive-prominence over " + std::to_string(n) +
                    " options exceeds the cap of " + std::to_string(std::min(cap, kHardCap)));
  }
  std::vector<Rational> out(n, Rational(0));
  std::vector<bool> seen(n, false);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t set = 1; set < full; ++set) {
    Rational rect = 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(set >> r & 1)) continue;
      for (std::size_t s = 0; s < n; ++s) {
        if (!(set >> s & 1) && m(r, s) < rect) rect = m(r, s);
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!(set >> y & 1) && (!seen[y] || rect > out[y])) {
        out[y] = rect;
        seen[y] = true;
      }
    }
  }
  return out;
}

}  // namespace llull
