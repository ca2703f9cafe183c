#include "bezout/rational.hpp"

#include <cstdlib>
#include <cstring>

#include "bezout/errors.hpp"

namespace bezout {

bool size_guard_enabled() {
  const char* v = std::getenv("BEZOUT_SIZE_GUARD");
  return v == nullptr || std::strcmp(v, "off") != 0;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace bezout
