#ifndef TORUSALG_FLUIDALG_HPP
#define TORUSALG_FLUIDALG_HPP

#include <map>
#include <string>
#include <utility>

#include "torusalg/lattice.hpp"

namespace torusalg {

/// Truncated element of the centrally extended algebra of incompressible
/// vector fields on the 3-torus. Fourier convention: the field is
/// mean + sum_m modes[m] e^{i m.x}, every stored mode satisfies m.u_m = 0
/// exactly and m = 0 never appears as a key (the mean is kept separately).
/// `central` holds the coefficients of the three central generators.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const std::map<WaveVector, Vec3C>& modes() const { return modes_; }
  const Vec3C& mean() const { return mean_; }
  const Vec3C& central() const { return central_; }

  /// Adds to the coefficient at m, validating m != 0 and exact
  /// transversality; zero results are pruned. Throws std::invalid_argument.
  void add_mode(WaveVector m, const Vec3C& v);
  void set_mean(Vec3C v) { mean_ = std::move(v); }
  void set_central(Vec3C v) { central_ = std::move(v); }
  void add_mean(const Vec3C& v) { mean_ = add(mean_, v); }
  void add_central(const Vec3C& v) { central_ = add(central_, v); }

  Vec3C mode(WaveVector m) const;
  bool has_mean() const { return !torusalg::is_zero(mean_); }
  bool has_central() const { return !torusalg::is_zero(central_); }
  bool is_zero() const;

  /// u_{-m} = conj(u_m) for all modes and real mean/central parts.
  bool is_real_field() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(const CFieldScalar& c) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_json() const;
  static AlgebraElement from_json(const std::string& text);

 private:
  std::map<WaveVector, Vec3C> modes_;
  Vec3C mean_{};
  Vec3C central_{};
};

enum class BasisKind { A, B };

/// Single-mode basis fields a_m = -i(alpha x m) e_m, b_m = -i(beta x m) e_m.
AlgebraElement basis_field(BasisKind kind, WaveVector m, const DirectionTriple& dirs);
/// Constant field along axis j (a translation generator), j in {0,1,2}.
AlgebraElement translation_field(int j);
/// Central generator along axis j.
AlgebraElement central_field(int j);

/// Lie bracket on the extension: mode part is the convolution of
/// u.grad w - w.grad u Galerkin-projected to |k_i| <= cutoff, the mean part
/// vanishes identically, and the central part is the cocycle evaluated on
/// the exact parts (so translations commute and the upper half-basis
/// closes). Central parts of the inputs are inert. Throws on cutoff < 0.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& w, int cutoff);

/// Cutoff large enough that bracket(u, w, cutoff) drops nothing.
int no_truncation_cutoff(const AlgebraElement& u, const AlgebraElement& w);

/// Omega(u, w) = integral of w x u dx/(2pi)^3: paired-mode sum plus the
/// mean cross term. Antisymmetric.
Vec3C omega_cocycle(const AlgebraElement& u, const AlgebraElement& w);

/// Extended curl: modes i m x u_m, central part = mean of u, mean zero.
/// Rejects input with a central component.
AlgebraElement curl(const AlgebraElement& u);

/// Inverse of the extended curl: v_m = i (m x w_m)/(m.m), mean = central
/// of w, central zero. Rejects input with a mean component.
AlgebraElement curl_inv(const AlgebraElement& w);

/// Invariant pairing <(u,eta),(w,mu)> = sum_m u_m . (curlinv w')_{-m}
/// + eta.wbar + mu.ubar (bilinear, no conjugation). Symmetric and
/// ad-invariant; both properties are verified in the test suites rather
/// than assumed.
CFieldScalar pairing_invariant(const AlgebraElement& x, const AlgebraElement& y);

/// L2 pairing sum_m x_{-m}.y_m + mean.mean + central.central.
CFieldScalar pairing_l2(const AlgebraElement& x, const AlgebraElement& y);

/// <w, w> for an extended vorticity (zero mean part required).
CFieldScalar helicity(const AlgebraElement& w);

/// Coefficients of an element over {a_m, b_m} plus translation and central
/// coordinates; reconstruct() inverts exactly.
struct Expansion {
  std::map<WaveVector, std::pair<CFieldScalar, CFieldScalar>> ab;  // m -> (c_a, c_b)
  Vec3C translation{};
  Vec3C central{};
};

Expansion expand(const AlgebraElement& u, const DirectionTriple& dirs);
AlgebraElement reconstruct(const Expansion& e, const DirectionTriple& dirs);

/// Scalar potentials with u = ubar + alpha x grad A + beta x grad B and
/// zero constant terms. Requires no-resonance on every occupied mode.
struct PotentialPair {
  std::map<WaveVector, CFieldScalar> A, B;
};

PotentialPair potentials(const AlgebraElement& u, const DirectionTriple& dirs);
AlgebraElement from_potentials(const Vec3C& mean, const PotentialPair& p,
                               const DirectionTriple& dirs);

}  // namespace torusalg

#endif
