#include "kclab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace kclab {

Rational::Rational(long num, long den) : v_() {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::pow2(long exp) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(),
               static_cast<mp_bitcnt_t>(exp >= 0 ? exp : -exp));
  mpq_class q(p);
  if (exp < 0) q = 1 / q;
  return Rational(std::move(q));
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  // mpq_set_str is lenient about whitespace and bases; be strict up front.
  bool seen_digit = false;
  int slashes = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-') {
      // allowed only at the start of numerator or denominator
      bool start = (i == 0) || (text[i - 1] == '/');
      if (!start) throw std::invalid_argument("Rational: malformed \"" + text + "\"");
    } else if (c == '/') {
      ++slashes;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw std::invalid_argument("Rational: bad character in \"" + text + "\"");
    }
  }
  if (!seen_digit || slashes > 1 || text.back() == '/' || text.back() == '-')
    throw std::invalid_argument("Rational: malformed \"" + text + "\"");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: malformed \"" + text + "\"");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.v_) == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace kclab
