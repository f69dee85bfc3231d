#include "spl/rational.hpp"

#include <stdexcept>

namespace spl {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text))
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  if (slash != std::string_view::npos && den == 1)
    throw std::invalid_argument("not canonical (denominator 1) \"" + std::string(text) + "\"");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && slash == std::string_view::npos))
    throw std::invalid_argument("not lowest terms \"" + std::string(text) + "\"");
  if (num == 0 && negative) throw std::invalid_argument("negative zero \"" + std::string(text) + "\"");
  // Leading zeros would break byte-exact re-emission.
  if ((num_text.size() > 1 && num_text.front() == '0') || (den_text.size() > 1 && den_text.front() == '0'))
    throw std::invalid_argument("leading zero in \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace spl
