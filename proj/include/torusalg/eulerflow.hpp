#ifndef TORUSALG_EULERFLOW_HPP
#define TORUSALG_EULERFLOW_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "torusalg/fluidalg.hpp"

namespace torusalg {

/// Galerkin-truncated extended vorticity: dense complex Fourier
/// coefficients omega_m for |m_i| <= cutoff (m.omega_m = 0,
/// omega_{-m} = conj(omega_m)) plus the central component (the mean
/// velocity).
class SimState {
 public:
  SimState() : SimState(1) {}
  explicit SimState(int cutoff);

  int cutoff() const { return cutoff_; }
  int side() const { return 2 * cutoff_ + 1; }
  std::size_t cells() const { return data_.size() / 3; }

  double time = 0.0;
  std::array<double, 3> central{};

  std::size_t cell_index(WaveVector m) const;
  WaveVector wavevector_of(std::size_t cell) const;
  std::array<std::complex<double>, 3> mode(WaveVector m) const;
  void set_mode(WaveVector m, const std::array<std::complex<double>, 3>& v);

  std::vector<std::complex<double>>& raw() { return data_; }
  const std::vector<std::complex<double>>& raw() const { return data_; }

  /// Re-impose m.omega_m = 0 and conjugate symmetry (pairwise averaging).
  void project();
  bool finite() const;

  std::string to_json() const;
  static SimState from_json(const std::string& text);

 private:
  int cutoff_;
  std::vector<std::complex<double>> data_;  // [cell*3 + component]
};

enum class InitKind { Abc, Triad, Random };

struct SimConfig {
  int cutoff = 4;
  double dt = 1e-3;
  double t_final = 1.0;
  InitKind init = InitKind::Abc;
  std::uint64_t seed = 42;
  double amplitude = 1.0;
  int sample_stride = 10;

  static SimConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct Diagnostics {
  double t = 0.0;
  double energy = 0.0;          // (2pi)^3/2 (sum |v_m|^2 + |vbar|^2)
  double energy_density = 0.0;  // 1/2 (sum |v_m|^2 + |vbar|^2)
  double helicity = 0.0;        // sum omega_{-m}.v_m
  std::array<double, 3> mean_velocity{};
  std::array<double, 3> omega_rate{};  // Omega(v, omega): the momentum-anomaly rate
  double anomaly_residual = 0.0;       // filled by run() via centered differences
};

struct RunResult {
  std::vector<Diagnostics> samples;
  SimState final_state;
  bool cfl_warning = false;
  bool blew_up = false;          // integration aborted on NaN/Inf
  double last_valid_time = 0.0;  // time of the last finite state
  std::string error;
};

SimState initial_state(const SimConfig& cfg);

/// v_m = i (m x omega_m)/(m.m); the mean velocity is the central part.
SimState velocity_of(const SimState& state);

/// d(state)/dt: mode part -[v, omega] (Galerkin-projected), central part
/// -Omega(v, omega). Computed as the curl of the cross-product convolution.
SimState rhs(const SimState& state);

/// Classical RK4 step followed by transversality/reality projection.
/// Throws std::runtime_error on NaN/Inf.
SimState step(const SimState& state, double dt);

Diagnostics diagnostics(const SimState& state);

/// Integrates to t_final, sampling every `sample_stride` steps (and at the
/// final time); anomaly residuals are centered finite differences of the
/// mean velocity over consecutive samples.
RunResult run(const SimConfig& cfg);

void write_csv(const RunResult& result, const SimConfig& cfg, std::ostream& os);

/// Exact copy of a floating state (doubles are dyadic rationals, so the
/// conversion is lossless). Requires exactly transversal modes.
AlgebraElement to_exact(const SimState& state);

}  // namespace torusalg

#endif
