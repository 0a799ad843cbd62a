#ifndef OVERTOP_RATIONAL_HPP
#define OVERTOP_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace overtop {

// Exact rational scalar. mpq_class already guarantees the canonical form we
// need (reduced, positive denominator) after every arithmetic operation, so
// the library type is used directly; only parsing/formatting live here.
using Rational = mpq_class;

inline Rational rat_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational token: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational token: '" + text + "'");
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& q) {
  return q.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace overtop

#endif
