#include "llull/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace llull {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int parse_digits(std::string_view s) {
  cpp_int out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(cpp_int(num), cpp_int(den));
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    cpp_int d = parse_digits(den);
    if (d == 0) throw bad();
    value = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) throw bad();
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int w = whole.empty() ? cpp_int(0) : parse_digits(whole);
    value = Rational(w * scale + parse_digits(frac), scale);
  } else {
    if (!all_digits(s)) throw bad();
    value = Rational(parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace llull
