#include "torusalg/numfield.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace torusalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool FieldScalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  // multiplication table: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3,
  // sqrt3*sqrt6 = 3 sqrt2, squares 2, 3, 6
  const Rational& a0 = x.c_[0];
  const Rational& a1 = x.c_[1];
  const Rational& a2 = x.c_[2];
  const Rational& a3 = x.c_[3];
  const Rational& b0 = y.c_[0];
  const Rational& b1 = y.c_[1];
  const Rational& b2 = y.c_[2];
  const Rational& b3 = y.c_[3];
  FieldScalar r;
  r.c_[0] = a0 * b0 + 2 * (a1 * b1) + 3 * (a2 * b2) + 6 * (a3 * b3);
  r.c_[1] = a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2);
  r.c_[2] = a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1);
  r.c_[3] = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("FieldScalar: division by zero");
  // y = product of the three nontrivial Galois conjugates; x*y is the norm,
  // a nonzero rational.
  FieldScalar y = conj_flip2() * conj_flip3() * conj_flip23();
  FieldScalar n = *this * y;
  if (!n.is_rational() || sgn(n.c_[0]) == 0)
    throw std::logic_error("FieldScalar: norm is not a nonzero rational");
  Rational inv_n = 1 / n.c_[0];
  return FieldScalar(y.c_[0] * inv_n, y.c_[1] * inv_n, y.c_[2] * inv_n, y.c_[3] * inv_n);
}

int FieldScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  // clear denominators: A0 + A1 sqrt2 + A2 sqrt3 + A3 sqrt6 with integer Ai
  mpz_class lcm = 1;
  for (int i = 0; i < 4; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c_[i].get_den_mpz_t());
  std::array<mpz_class, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = c_[i].get_num() * (lcm / c_[i].get_den());

  const long radicand[3] = {2, 3, 6};
  for (unsigned long prec = 32;; prec *= 2) {
    // floor(sqrt(r) * 2^prec) brackets sqrt(r)*2^prec in [s, s+1]
    mpz_class lo = a[0] << prec, hi = lo;
    for (int j = 0; j < 3; ++j) {
      if (sgn(a[j + 1]) == 0) continue;
      mpz_class t = radicand[j];
      t <<= 2 * prec;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
      if (sgn(a[j + 1]) > 0) {
        lo += a[j + 1] * s;
        hi += a[j + 1] * (s + 1);
      } else {
        lo += a[j + 1] * (s + 1);
        hi += a[j + 1] * s;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    // value is nonzero (canonical form), so refinement terminates
  }
}

double FieldScalar::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * 1.4142135623730951 +
         c_[2].get_d() * 1.7320508075688772 + c_[3].get_d() * 2.449489742783178;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

std::string FieldScalar::str() const {
  static const char* name[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    if (out.empty()) {
      if (sgn(v) < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += sgn(v) < 0 ? " - " : " + ";
      if (sgn(v) < 0) v = -v;
    }
    if (i == 0) {
      out += rational_str(v);
    } else if (v == 1) {
      out += name[i];
    } else {
      out += rational_str(v) + "*" + name[i];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("FieldScalar::parse: empty coefficient");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw std::invalid_argument("FieldScalar::parse: bad rational '" + s + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("FieldScalar::parse: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

FieldScalar FieldScalar::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("FieldScalar::parse: empty input");

  FieldScalar out;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1, n_signs = 0;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      ++n_signs;
    }
    if (n_signs > 1) throw std::invalid_argument("FieldScalar::parse: repeated sign");
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("FieldScalar::parse: dangling sign");
    pos = end;

    int basis = 0;
    auto star = term.find("*sqrt");
    std::string coef_text;
    if (star != std::string::npos) {
      coef_text = term.substr(0, star);
      std::string rad = term.substr(star + 5);
      basis = rad == "2" ? 1 : rad == "3" ? 2 : rad == "6" ? 3 : -1;
    } else if (term.rfind("sqrt", 0) == 0) {
      coef_text = "1";
      std::string rad = term.substr(4);
      basis = rad == "2" ? 1 : rad == "3" ? 2 : rad == "6" ? 3 : -1;
    } else {
      coef_text = term;
    }
    if (basis < 0) throw std::invalid_argument("FieldScalar::parse: bad radical in '" + term + "'");
    Rational c = parse_rational(coef_text);
    if (sign < 0) c = -c;
    out.c_[basis] += c;
  }
  return out;
}

CFieldScalar CFieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CFieldScalar: division by zero");
  FieldScalar n = re_ * re_ + im_ * im_;
  FieldScalar inv_n = n.inverse();
  return CFieldScalar(re_ * inv_n, -(im_ * inv_n));
}

}  // namespace torusalg
