#ifndef TORUSALG_LATTICE_HPP
#define TORUSALG_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "torusalg/numfield.hpp"

namespace torusalg {

/// Integer wavevector m in Z^3 indexing a Fourier mode.
struct WaveVector {
  std::int64_t x = 0, y = 0, z = 0;

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  std::int64_t max_abs() const;
  std::string str() const;

  friend WaveVector operator+(WaveVector a, WaveVector b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend WaveVector operator-(WaveVector a, WaveVector b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  WaveVector operator-() const { return {-x, -y, -z}; }
  friend bool operator==(const WaveVector&, const WaveVector&) = default;
  friend auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

inline std::int64_t dot(WaveVector a, WaveVector b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline WaveVector cross(WaveVector a, WaveVector b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

using Vec3F = std::array<FieldScalar, 3>;
using Vec3C = std::array<CFieldScalar, 3>;

FieldScalar dot(const Vec3F& v, WaveVector m);
FieldScalar dot(const Vec3F& a, const Vec3F& b);
CFieldScalar dot(const Vec3C& v, WaveVector m);
CFieldScalar dot(const Vec3C& a, const Vec3C& b);
Vec3F crossf(const Vec3F& v, WaveVector m);
Vec3F crossf(const Vec3F& a, const Vec3F& b);
Vec3C crossc(const Vec3C& a, const Vec3C& b);
Vec3C to_complex(const Vec3F& v);
bool is_zero(const Vec3C& v);
Vec3C add(const Vec3C& a, const Vec3C& b);
Vec3C negate(const Vec3C& a);
Vec3C scale(const CFieldScalar& c, const Vec3C& v);

/// The fixed constant vectors alpha, beta and gamma = alpha x beta used to
/// split incompressible modes. Construction verifies the no-resonance
/// condition (alpha.m, beta.m, gamma.m all nonzero) exhaustively on a box
/// of wavevectors; the verified radius is recorded.
class DirectionTriple {
 public:
  /// alpha = (1, sqrt2, sqrt3), beta = (sqrt3, 1, sqrt2),
  /// gamma = (2-sqrt3, 3-sqrt2, 1-sqrt6); resonance-checked for |m_i| <= 8.
  static const DirectionTriple& standard();

  /// gamma is computed as alpha x beta; throws std::domain_error if some
  /// nonzero m with |m_i| <= check_range resonates.
  static DirectionTriple make(Vec3F alpha, Vec3F beta, int check_range);

  /// No validation and gamma taken verbatim: negative-control hook for the
  /// verification suites.
  static DirectionTriple unchecked(Vec3F alpha, Vec3F beta, Vec3F gamma);

  const Vec3F& alpha() const { return alpha_; }
  const Vec3F& beta() const { return beta_; }
  const Vec3F& gamma() const { return gamma_; }
  int checked_range() const { return checked_range_; }

  FieldScalar alpha_dot(WaveVector m) const { return dot(alpha_, m); }
  FieldScalar beta_dot(WaveVector m) const { return dot(beta_, m); }
  FieldScalar gamma_dot(WaveVector m) const { return dot(gamma_, m); }

  /// True iff alpha.m, beta.m and gamma.m are all nonzero (exact canonical
  /// zero test). Throws std::domain_error on m = 0.
  bool no_resonance(WaveVector m) const;

 private:
  DirectionTriple(Vec3F a, Vec3F b, Vec3F g, int r)
      : alpha_(std::move(a)), beta_(std::move(b)), gamma_(std::move(g)), checked_range_(r) {}
  Vec3F alpha_, beta_, gamma_;
  int checked_range_ = 0;
};

}  // namespace torusalg

#endif
