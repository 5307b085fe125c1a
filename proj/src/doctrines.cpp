#include "llull/doctrines.hpp"

#include <stdexcept>

#include "llull/errors.hpp"

namespace llull {

std::string_view to_string(DoctrineKind kind) {
  switch (kind) {
    case DoctrineKind::kTransitivity: return "transitivity";
    case DoctrineKind::kSupremacy: return "supremacy";
    case DoctrineKind::kProminence: return "prominence";
    case DoctrineKind::kSymmetricProminence: return "symmetric-prominence";
    case DoctrineKind::kComprehensiveProminence: return "comprehensive-prominence";
    case DoctrineKind::kGoodness: return "goodness";
  }
  return "?";
}

DoctrineKind parse_doctrine_kind(std::string_view name) {
  for (auto k : {DoctrineKind::kTransitivity, DoctrineKind::kSupremacy, DoctrineKind::kProminence,
                 DoctrineKind::kSymmetricProminence, DoctrineKind::kComprehensiveProminence,
                 DoctrineKind::kGoodness}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown doctrine '" + std::string(name) + "'");
}

char unary_symbol(DoctrineKind kind) {
  switch (kind) {
    case DoctrineKind::kTransitivity: return '\0';
    case DoctrineKind::kSupremacy: return 's';
    case DoctrineKind::kGoodness: return 'g';
    default: return 't';
  }
}

OptionLiterals::OptionLiterals(std::vector<std::string> options, char unary)
    : options_(std::move(options)), unary_(unary) {
  const std::size_t n = options_.size();
  if (n == 0) throw std::invalid_argument("no options");
  auto u = std::make_shared<LiteralUniverse>();
  pref_.assign(n * n, Literal{});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Literal l = u->add_pair("p(" + options_[x] + "," + options_[y] + ")",
                              "p(" + options_[y] + "," + options_[x] + ")");
      pref_[x * n + y] = l;
      pref_[y * n + x] = u->negation(l);
    }
  }
  if (has_unary()) {
    for (std::size_t x = 0; x < n; ++x) {
      std::string label = std::string(1, unary_) + "(" + options_[x] + ")";
      unary_pos_.push_back(u->add_pair(label, "~" + label));
    }
  }
  universe_ = std::move(u);
}

Literal OptionLiterals::pref(std::size_t x, std::size_t y) const {
  if (x == y || x >= size() || y >= size()) throw std::out_of_range("no literal p(x,x)");
  return pref_[x * size() + y];
}

Literal OptionLiterals::unary_pos(std::size_t x) const {
  if (!has_unary()) throw ConfigError("doctrine has no per-option proposition");
  return unary_pos_.at(x);
}

Literal OptionLiterals::unary_neg(std::size_t x) const {
  return universe_->negation(unary_pos(x));
}

std::vector<std::string> default_option_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "o" + std::to_string(i));
  }
  return out;
}

OptionLiterals make_option_literals(DoctrineKind kind, std::vector<std::string> options) {
  return OptionLiterals(std::move(options), unary_symbol(kind));
}

namespace {

void transitivity(const OptionLiterals& L, std::vector<Clause>& out) {
  const std::size_t n = L.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        out.push_back(Clause{L.pref(x, y), L.pref(y, z), L.pref(z, x)});
        out.push_back(Clause{L.pref(x, z), L.pref(z, y), L.pref(y, x)});
      }
    }
  }
}

void supremacy(const OptionLiterals& L, std::vector<Clause>& out) {
  const std::size_t n = L.size();
  std::vector<Literal> exists;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Literal> beats_all{L.unary_pos(x)};
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      beats_all.push_back(L.pref(y, x));
      out.push_back(Clause{L.unary_neg(x), L.pref(x, y)});
    }
    out.emplace_back(std::move(beats_all));
    exists.push_back(L.unary_pos(x));
  }
  out.emplace_back(std::move(exists));
}

void prominence(const OptionLiterals& L, bool symmetric, std::vector<Clause>& out) {
  const std::size_t n = L.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Literal> best{L.unary_pos(x)};
    std::vector<Literal> worst{L.unary_neg(x)};
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      best.push_back(L.pref(y, x));
      worst.push_back(L.pref(x, y));
    }
    out.emplace_back(std::move(best));
    if (symmetric) out.emplace_back(std::move(worst));
  }
}

void comprehensive(const OptionLiterals& L, std::vector<Clause>& out) {
  const std::size_t n = L.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t set = 1; set <= full; ++set) {
    std::vector<Literal> rect;
    std::vector<Literal> good;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(set >> r & 1)) continue;
      good.push_back(L.unary_pos(r));
      for (std::size_t s = 0; s < n; ++s) {
        if (!(set >> s & 1)) rect.push_back(L.pref(s, r));
      }
    }
    good.insert(good.end(), rect.begin(), rect.end());
    out.emplace_back(std::move(good));
    for (std::size_t y = 0; y < n; ++y) {
      if (set >> y & 1) continue;
      std::vector<Literal> bad = rect;
      bad.push_back(L.unary_neg(y));
      out.emplace_back(std::move(bad));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      out.push_back(Clause{L.unary_neg(x), L.unary_neg(y)});
    }
  }
}

void goodness(const OptionLiterals& L, std::vector<Clause>& out) {
  const std::size_t n = L.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) out.push_back(Clause{L.unary_neg(x), L.pref(x, y), L.unary_pos(y)});
    }
  }
}

}  // namespace

Doctrine build_doctrine(DoctrineKind kind, const OptionLiterals& literals,
                        const DoctrineLimits& limits) {
  if (literals.unary() != unary_symbol(kind)) {
    throw ConfigError("literal layout does not match the " + std::string(to_string(kind)) +
                      " doctrine");
  }
  std::vector<Clause> clauses;
  switch (kind) {
    case DoctrineKind::kTransitivity: transitivity(literals, clauses); break;
    case DoctrineKind::kSupremacy: supremacy(literals, clauses); break;
    case DoctrineKind::kProminence: prominence(literals, false, clauses); break;
    case DoctrineKind::kSymmetricProminence: prominence(literals, true, clauses); break;
    case DoctrineKind::kComprehensiveProminence:
      if (literals.size() > limits.comprehensive_cap || literals.size() > 30) {
        throw SizeError("comprehensive-prominence doctrine over " +
                        std::to_string(literals.size()) + " options exceeds the cap of " +
                        std::to_string(limits.comprehensive_cap));
      }
      comprehensive(literals, clauses);
      break;
    case DoctrineKind::kGoodness: goodness(literals, clauses); break;
  }
  if (literals.size() == 1) std::erase_if(clauses, [](const Clause& c) { return c.size() < 2; });
  return Doctrine(literals.universe(), std::move(clauses));
}

std::string_view to_string(UnaryInit init) {
  switch (init) {
    case UnaryInit::kZero: return "zero";
    case UnaryInit::kPlurality: return "plurality";
    case UnaryInit::kPluralityAndLast: return "plurality-last";
    case UnaryInit::kApproval: return "approval";
  }
  return "?";
}

UnaryInit parse_unary_init(std::string_view name) {
  for (auto i : {UnaryInit::kZero, UnaryInit::kPlurality, UnaryInit::kPluralityAndLast,
                 UnaryInit::kApproval}) {
    if (to_string(i) == name) return i;
  }
  throw std::invalid_argument("unknown initialization '" + std::string(name) + "'");
}

Valuation initial_valuation(const OptionLiterals& literals, const LlullMatrix& llull,
                            const ScoreVectors* scores, UnaryInit init) {
  const std::size_t n = literals.size();
  if (llull.options() != literals.options()) {
    throw ConfigError("Llull matrix options differ from the doctrine's options");
  }
  std::vector<Rational> values(literals.universe()->size(), Rational(0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) values[literals.pref(x, y).id] = llull(x, y);
    }
  }
  if (literals.has_unary() && init != UnaryInit::kZero) {
    if (scores == nullptr) {
      throw ConfigError("initialization '" + std::string(to_string(init)) +
                        "' needs ballot score vectors");
    }
    const std::vector<Rational>* pos = nullptr;
    const std::vector<Rational>* neg = nullptr;
    switch (init) {
      case UnaryInit::kPlurality:
        pos = &scores->plurality;
        neg = &scores->antiplurality;
        break;
      case UnaryInit::kPluralityAndLast:
        pos = &scores->plurality;
        neg = &scores->last;
        break;
      case UnaryInit::kApproval:
        pos = &scores->approval;
        neg = &scores->disapproval;
        break;
      case UnaryInit::kZero: break;
    }
    if (pos->size() != n || neg->size() != n) throw ConfigError("score vectors of wrong size");
    for (std::size_t x = 0; x < n; ++x) {
      values[literals.unary_pos(x).id] = (*pos)[x];
      values[literals.unary_neg(x).id] = (*neg)[x];
    }
  }
  return Valuation(literals.universe(), std::move(values));
}

}  // namespace llull
