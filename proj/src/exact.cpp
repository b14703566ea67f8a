#include "thetawalls/exact.hpp"

#include <climits>

#include "thetawalls/error.hpp"

namespace thetawalls {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  }
  std::string buf(text);
  if (buf.front() == '+') buf.erase(0, 1);
  return Integer(buf, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw Error(ErrorKind::Parse, "bad denominator in '" + std::string(text) + "'");
  }
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

int sign(const Rational &q) { return sgn(q); }
int sign(const Integer &z) { return sgn(z); }

Integer floor(const Rational &q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational &q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer floor_sqrt(const Rational &q) {
  if (sgn(q) < 0) throw Error(ErrorKind::InvalidArgument, "floor_sqrt of a negative value");
  Integer out;
  const Integer f = floor(q);
  mpz_sqrt(out.get_mpz_t(), f.get_mpz_t());
  return out;
}

bool fits_int64(const Integer &z) {
  return z >= Integer(std::to_string(LLONG_MIN)) && z <= Integer(std::to_string(LLONG_MAX));
}

long long to_int64(const Integer &z) {
  if (!fits_int64(z)) throw Error(ErrorKind::BoundTooLarge, "integer exceeds 64 bits: " + z.get_str());
  return std::stoll(z.get_str());
}

}  // namespace thetawalls
