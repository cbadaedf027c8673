#include "abelcycles/rational.hpp"

#include <stdexcept>

namespace abelcycles {

std::string to_string(const BigInt &z) { return z.get_str(); }

std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational");
  if (s.find('/') == std::string::npos)
    s += "/1";
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

BigInt factorial(std::int64_t n) {
  if (n < 0)
    throw std::invalid_argument("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_decimal(const Rational &q, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = q * scale;
  bool negative = scaled < 0;
  if (negative)
    scaled = -scaled;
  // round half up on the magnitude
  BigInt num = scaled.get_num() * 2 + scaled.get_den();
  BigInt den = scaled.get_den() * 2;
  BigInt units = num / den;
  std::string s = units.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits)
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && units != 0)
    s.insert(0, "-");
  return s;
}

} // namespace abelcycles
