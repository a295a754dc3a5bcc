#include "bestofn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bestofn {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool looks_like_decimal(const std::string& text) {
  return text.find('.') != std::string::npos;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw std::invalid_argument("malformed rational: " + text);
    const BigInt den_value(den);
    if (den_value == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q{BigInt(num), den_value};
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string head = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!(is_integer_literal(head) || (dot == 0 && !frac.empty())) ||
        (!frac.empty() && !is_integer_literal(frac)) || frac.find('-') != std::string::npos)
      throw std::invalid_argument("malformed decimal: " + text);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt whole = head.empty() || head == "-" || head == "+" ? BigInt(0) : BigInt(head);
    const bool negative = !head.empty() && head[0] == '-';
    BigInt num = abs(whole) * den + (frac.empty() ? BigInt(0) : BigInt(frac));
    if (negative) num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (!is_integer_literal(text))
    throw std::invalid_argument("malformed number: " + text);
  return Rational(BigInt(text));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace bestofn
