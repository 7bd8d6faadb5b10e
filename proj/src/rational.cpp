#include "coalition_forge/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coalition_forge {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + original + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("malformed rational '" + original + "': zero denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  // gcd(0, d) = d, so "0/1" is the only reduced spelling of zero.
  if (slash != std::string_view::npos && g != 1) {
    throw std::invalid_argument("malformed rational '" + original + "': not in lowest terms");
  }
  return Rational(mpq_class(negative ? mpz_class(-n) : n, d));
}

std::string Rational::str() const {
  // mpq_class::get_str already omits "/1" for integers.
  return q_.get_str(10);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

}  // namespace coalition_forge
