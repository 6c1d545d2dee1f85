#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "errors.hpp"

namespace cyclo {

using Rational = mpq_class;

/** \brief Parse "p", "-p" or "p/q" into a canonical rational. */
inline Rational parse_rational(const std::string& s) {
  auto digits = [](const std::string& t, std::size_t from) {
    if (from >= t.size()) return false;
    for (std::size_t i = from; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!digits(num, start) || !digits(den, 0)) throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace cyclo
