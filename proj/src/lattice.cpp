#include "torusalg/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace torusalg {

std::int64_t WaveVector::max_abs() const {
  std::int64_t m = std::abs(x);
  if (std::abs(y) > m) m = std::abs(y);
  if (std::abs(z) > m) m = std::abs(z);
  return m;
}

std::string WaveVector::str() const {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

FieldScalar dot(const Vec3F& v, WaveVector m) {
  FieldScalar r;
  const std::int64_t c[3] = {m.x, m.y, m.z};
  for (int i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    r += FieldScalar(static_cast<long>(c[i])) * v[i];
  }
  return r;
}

FieldScalar dot(const Vec3F& a, const Vec3F& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

CFieldScalar dot(const Vec3C& v, WaveVector m) {
  CFieldScalar r;
  const std::int64_t c[3] = {m.x, m.y, m.z};
  for (int i = 0; i < 3; ++i) {
    if (c[i] == 0) continue;
    r += FieldScalar(static_cast<long>(c[i])) * v[i];
  }
  return r;
}

CFieldScalar dot(const Vec3C& a, const Vec3C& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3F crossf(const Vec3F& v, WaveVector m) {
  Vec3F mm = {FieldScalar(static_cast<long>(m.x)), FieldScalar(static_cast<long>(m.y)),
              FieldScalar(static_cast<long>(m.z))};
  return crossf(v, mm);
}

Vec3F crossf(const Vec3F& a, const Vec3F& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3C crossc(const Vec3C& a, const Vec3C& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3C to_complex(const Vec3F& v) { return {CFieldScalar(v[0]), CFieldScalar(v[1]), CFieldScalar(v[2])}; }

bool is_zero(const Vec3C& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3C add(const Vec3C& a, const Vec3C& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3C negate(const Vec3C& a) { return {-a[0], -a[1], -a[2]}; }

Vec3C scale(const CFieldScalar& c, const Vec3C& v) { return {c * v[0], c * v[1], c * v[2]}; }

bool DirectionTriple::no_resonance(WaveVector m) const {
  if (m.is_zero()) throw std::domain_error("no_resonance: m = 0");
  return !alpha_dot(m).is_zero() && !beta_dot(m).is_zero() && !gamma_dot(m).is_zero();
}

DirectionTriple DirectionTriple::make(Vec3F alpha, Vec3F beta, int check_range) {
  Vec3F gamma = crossf(alpha, beta);
  DirectionTriple t(std::move(alpha), std::move(beta), std::move(gamma), check_range);
  for (std::int64_t x = -check_range; x <= check_range; ++x)
    for (std::int64_t y = -check_range; y <= check_range; ++y)
      for (std::int64_t z = -check_range; z <= check_range; ++z) {
        WaveVector m{x, y, z};
        if (m.is_zero()) continue;
        if (!t.no_resonance(m))
          throw std::domain_error("DirectionTriple: resonance at m = " + m.str());
      }
  return t;
}

DirectionTriple DirectionTriple::unchecked(Vec3F alpha, Vec3F beta, Vec3F gamma) {
  return DirectionTriple(std::move(alpha), std::move(beta), std::move(gamma), 0);
}

const DirectionTriple& DirectionTriple::standard() {
  static const DirectionTriple t = make(
      Vec3F{FieldScalar(1), FieldScalar::sqrt2(), FieldScalar::sqrt3()},
      Vec3F{FieldScalar::sqrt3(), FieldScalar(1), FieldScalar::sqrt2()}, 8);
  return t;
}

}  // namespace torusalg
