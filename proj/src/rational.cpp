#include "compgf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace compgf {

namespace {

bool is_decimal(const std::string& text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_decimal(num, true) || !is_decimal(den, false)) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  return make_ratio(Integer(num), Integer(den));
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer parse_count(const std::string& text) {
  if (!is_decimal(text, false)) {
    throw std::invalid_argument("malformed count: " + text);
  }
  return Integer(text);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace compgf
