#include "orbitquad/rational.hpp"

#include <cctype>
#include <ostream>

namespace orbitquad {

namespace {

void canonicalize(mpq_class& q) {
  if (sgn(q.get_den()) == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) { canonicalize(q_); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  canonicalize(q_);
}

Rational Rational::parse(const std::string& text) {
  // Accepted grammar: [+-]digits[/digits], nothing else.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("invalid rational \"" + text + "\"");
  std::string num = text.substr(0, num_end);
  std::string den = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw ParseError("invalid rational \"" + text + "\"");
    std::size_t den_end = digits(num_end + 1);
    if (den_end != text.size() || den_end == num_end + 1)
      throw ParseError("invalid rational \"" + text + "\"");
    den = text.substr(num_end + 1);
  }
  return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.q_ = -r.q_;
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace orbitquad
