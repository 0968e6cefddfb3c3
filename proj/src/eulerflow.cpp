#include "torusalg/eulerflow.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace torusalg {

namespace {

constexpr double kTwoPiCubed = 248.05021344239853;  // (2*pi)^3

using C3 = std::array<std::complex<double>, 3>;

inline C3 cross(const C3& a, const C3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

SimState::SimState(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 1) throw std::invalid_argument("SimState: cutoff must be >= 1");
  std::size_t side = 2 * cutoff + 1;
  data_.assign(3 * side * side * side, {0.0, 0.0});
}

std::size_t SimState::cell_index(WaveVector m) const {
  const std::int64_t n = cutoff_;
  const std::int64_t s = 2 * n + 1;
  return static_cast<std::size_t>(((m.x + n) * s + (m.y + n)) * s + (m.z + n));
}

WaveVector SimState::wavevector_of(std::size_t cell) const {
  const std::int64_t n = cutoff_;
  const std::int64_t s = 2 * n + 1;
  std::int64_t z = static_cast<std::int64_t>(cell) % s;
  std::int64_t y = (static_cast<std::int64_t>(cell) / s) % s;
  std::int64_t x = static_cast<std::int64_t>(cell) / (s * s);
  return {x - n, y - n, z - n};
}

C3 SimState::mode(WaveVector m) const {
  std::size_t i = 3 * cell_index(m);
  return {data_[i], data_[i + 1], data_[i + 2]};
}

void SimState::set_mode(WaveVector m, const C3& v) {
  if (m.max_abs() > cutoff_) throw std::invalid_argument("SimState: mode outside cutoff");
  if (m.is_zero()) throw std::invalid_argument("SimState: vorticity has no zero mode");
  std::size_t i = 3 * cell_index(m);
  data_[i] = v[0];
  data_[i + 1] = v[1];
  data_[i + 2] = v[2];
}

void SimState::project() {
  const int n = cutoff_;
  for (std::int64_t x = 0; x <= n; ++x)
    for (std::int64_t y = (x == 0 ? 0 : -n); y <= n; ++y)
      for (std::int64_t z = ((x == 0 && y == 0) ? 1 : -n); z <= n; ++z) {
        WaveVector m{x, y, z};
        std::size_t i = 3 * cell_index(m);
        std::size_t j = 3 * cell_index(-m);
        for (int c = 0; c < 3; ++c) {
          std::complex<double> avg = 0.5 * (data_[i + c] + std::conj(data_[j + c]));
          data_[i + c] = avg;
          data_[j + c] = std::conj(avg);
        }
        // remove the longitudinal component on both conjugate cells
        const double mm = static_cast<double>(dot(m, m));
        std::complex<double> proj =
            (data_[i] * static_cast<double>(m.x) + data_[i + 1] * static_cast<double>(m.y) +
             data_[i + 2] * static_cast<double>(m.z)) /
            mm;
        data_[i] -= proj * static_cast<double>(m.x);
        data_[i + 1] -= proj * static_cast<double>(m.y);
        data_[i + 2] -= proj * static_cast<double>(m.z);
        for (int c = 0; c < 3; ++c) data_[j + c] = std::conj(data_[i + c]);
      }
}

bool SimState::finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  for (double v : central)
    if (!std::isfinite(v)) return false;
  return true;
}

SimState velocity_of(const SimState& state) {
  SimState v(state.cutoff());
  v.time = state.time;
  v.central = state.central;
  const int n = state.cutoff();
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        WaveVector m{x, y, z};
        if (m.is_zero()) continue;
        C3 w = state.mode(m);
        const double inv_mm = 1.0 / static_cast<double>(dot(m, m));
        // v_m = i (m x w_m)/(m.m)
        C3 mxw = {static_cast<double>(m.y) * w[2] - static_cast<double>(m.z) * w[1],
                  static_cast<double>(m.z) * w[0] - static_cast<double>(m.x) * w[2],
                  static_cast<double>(m.x) * w[1] - static_cast<double>(m.y) * w[0]};
        const std::complex<double> i_scale(0.0, inv_mm);
        v.set_mode(m, {i_scale * mxw[0], i_scale * mxw[1], i_scale * mxw[2]});
      }
  return v;
}

SimState rhs(const SimState& state) {
  const int n = state.cutoff();
  const std::int64_t s = 2 * n + 1;
  SimState out(n);
  out.time = 1.0;  // d(time)/dt

  SimState vel = velocity_of(state);
  // place the mean velocity in the k = 0 cell so the convolution sees it
  std::vector<std::complex<double>>& vdat = vel.raw();
  {
    std::size_t i0 = 3 * vel.cell_index(WaveVector{0, 0, 0});
    vdat[i0] = state.central[0];
    vdat[i0 + 1] = state.central[1];
    vdat[i0 + 2] = state.central[2];
  }
  const std::vector<std::complex<double>>& wdat = state.raw();
  std::vector<std::complex<double>>& odat = out.raw();

  // X_k = sum_{m+n=k} omega_m x v_n; rhs modes = -i k x X_k, central = -X_0.
  // Pairwise this matches u.grad w - w.grad u for transversal fields, and
  // the summation order (k outer, m lexicographic) is fixed for
  // reproducibility.
  for (std::int64_t kx = -n; kx <= n; ++kx)
    for (std::int64_t ky = -n; ky <= n; ++ky)
      for (std::int64_t kz = -n; kz <= n; ++kz) {
        std::complex<double> X0(0, 0), X1(0, 0), X2(0, 0);
        const std::int64_t mx_lo = std::max<std::int64_t>(-n, kx - n);
        const std::int64_t mx_hi = std::min<std::int64_t>(n, kx + n);
        const std::int64_t my_lo = std::max<std::int64_t>(-n, ky - n);
        const std::int64_t my_hi = std::min<std::int64_t>(n, ky + n);
        const std::int64_t mz_lo = std::max<std::int64_t>(-n, kz - n);
        const std::int64_t mz_hi = std::min<std::int64_t>(n, kz + n);
        for (std::int64_t mx = mx_lo; mx <= mx_hi; ++mx)
          for (std::int64_t my = my_lo; my <= my_hi; ++my) {
            // contiguous run in z of both arrays
            const std::size_t wbase =
                3 * static_cast<std::size_t>(((mx + n) * s + (my + n)) * s + (mz_lo + n));
            const std::size_t vbase = 3 * static_cast<std::size_t>(
                                          (((kx - mx) + n) * s + ((ky - my) + n)) * s +
                                          ((kz - mz_lo) + n));
            const std::complex<double>* w = &wdat[wbase];
            const std::complex<double>* v = &vdat[vbase];
            for (std::int64_t mz = mz_lo; mz <= mz_hi; ++mz) {
              X0 += w[1] * v[2] - w[2] * v[1];
              X1 += w[2] * v[0] - w[0] * v[2];
              X2 += w[0] * v[1] - w[1] * v[0];
              w += 3;
              v -= 3;  // n decreases as m increases
            }
          }
        if (kx == 0 && ky == 0 && kz == 0) {
          out.central = {-X0.real(), -X1.real(), -X2.real()};
          continue;
        }
        // -i k x X
        const std::complex<double> mi(0.0, -1.0);
        std::size_t i =
            3 * static_cast<std::size_t>(((kx + n) * s + (ky + n)) * s + (kz + n));
        odat[i] = mi * (static_cast<double>(ky) * X2 - static_cast<double>(kz) * X1);
        odat[i + 1] = mi * (static_cast<double>(kz) * X0 - static_cast<double>(kx) * X2);
        odat[i + 2] = mi * (static_cast<double>(kx) * X1 - static_cast<double>(ky) * X0);
      }
  return out;
}

SimState step(const SimState& state, double dt) {
  if (dt <= 0) throw std::invalid_argument("step: dt must be positive");
  if (!state.finite()) throw std::runtime_error("step: state contains NaN/Inf");
  auto axpy = [](const SimState& base, double a, const SimState& d) {
    SimState r = base;
    const auto& dd = d.raw();
    auto& rr = r.raw();
    for (std::size_t i = 0; i < rr.size(); ++i) rr[i] += a * dd[i];
    for (int c = 0; c < 3; ++c) r.central[c] += a * d.central[c];
    r.time += a * d.time;
    return r;
  };
  SimState k1 = rhs(state);
  SimState k2 = rhs(axpy(state, 0.5 * dt, k1));
  SimState k3 = rhs(axpy(state, 0.5 * dt, k2));
  SimState k4 = rhs(axpy(state, dt, k3));
  SimState next = state;
  auto& nd = next.raw();
  const auto &d1 = k1.raw(), &d2 = k2.raw(), &d3 = k3.raw(), &d4 = k4.raw();
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < nd.size(); ++i)
    nd[i] += w * (d1[i] + 2.0 * d2[i] + 2.0 * d3[i] + d4[i]);
  for (int c = 0; c < 3; ++c)
    next.central[c] +=
        w * (k1.central[c] + 2.0 * k2.central[c] + 2.0 * k3.central[c] + k4.central[c]);
  next.time = state.time + dt;
  next.project();
  if (!next.finite()) throw std::runtime_error("step: numerical blow-up");
  return next;
}

Diagnostics diagnostics(const SimState& state) {
  Diagnostics d;
  d.t = state.time;
  SimState vel = velocity_of(state);
  double sum_v2 = 0.0, hel = 0.0;
  std::array<double, 3> rate{};
  const int n = state.cutoff();
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        WaveVector m{x, y, z};
        if (m.is_zero()) continue;
        C3 v = vel.mode(m);
        C3 w = state.mode(m);
        for (int c = 0; c < 3; ++c) {
          sum_v2 += std::norm(v[c]);
          hel += (std::conj(w[c]) * v[c]).real();
        }
        // Omega(v, omega) = sum_m omega_{-m} x v_m = sum_m conj(omega_m) x v_m
        C3 wc = {std::conj(w[0]), std::conj(w[1]), std::conj(w[2])};
        C3 cx = cross(wc, v);
        for (int c = 0; c < 3; ++c) rate[c] += cx[c].real();
      }
  double vbar2 = state.central[0] * state.central[0] + state.central[1] * state.central[1] +
                 state.central[2] * state.central[2];
  d.energy_density = 0.5 * (sum_v2 + vbar2);
  d.energy = kTwoPiCubed * d.energy_density;
  d.helicity = hel;
  d.mean_velocity = state.central;
  d.omega_rate = rate;
  return d;
}

SimState initial_state(const SimConfig& cfg) {
  SimState st(cfg.cutoff);
  const double A = cfg.amplitude;
  switch (cfg.init) {
    case InitKind::Abc: {
      const std::complex<double> i(0.0, 1.0);
      auto put = [&](WaveVector m, const C3& v) {
        st.set_mode(m, v);
        st.set_mode(-m, {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])});
      };
      // v = (A sin z + A cos y, A sin x + A cos z, A sin y + A cos x); omega = v
      put({0, 0, 1}, {-0.5 * i * A, 0.5 * A, 0.0});
      put({1, 0, 0}, {0.0, -0.5 * i * A, 0.5 * A});
      put({0, 1, 0}, {0.5 * A, 0.0, -0.5 * i * A});
      break;
    }
    case InitKind::Triad: {
      const std::complex<double> i(0.0, 1.0);
      auto put = [&](WaveVector m, const C3& v) {
        st.set_mode(m, v);
        st.set_mode(-m, {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])});
      };
      put({1, 0, 0}, {0.0, 0.5 * A, 0.25 * i * A});
      put({0, 1, 0}, {0.25 * A, 0.0, -0.5 * i * A});
      break;
    }
    case InitKind::Random: {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
      std::normal_distribution<double> gauss(0.0, 1.0);
      const int n = cfg.cutoff;
      for (std::int64_t x = -n; x <= n; ++x)
        for (std::int64_t y = -n; y <= n; ++y)
          for (std::int64_t z = -n; z <= n; ++z) {
            WaveVector m{x, y, z};
            if (m.is_zero()) continue;
            // half-space: lexicographically positive representatives
            if (!(x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0))))) continue;
            // orthonormal frame transverse to m
            std::array<double, 3> mv = {static_cast<double>(m.x), static_cast<double>(m.y),
                                        static_cast<double>(m.z)};
            const double mm = std::sqrt(mv[0] * mv[0] + mv[1] * mv[1] + mv[2] * mv[2]);
            std::array<double, 3> ref = {gauss(rng), gauss(rng), gauss(rng)};
            std::array<double, 3> e1 = {mv[1] * ref[2] - mv[2] * ref[1],
                                        mv[2] * ref[0] - mv[0] * ref[2],
                                        mv[0] * ref[1] - mv[1] * ref[0]};
            double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
            if (n1 < 1e-9) {
              --z;  // degenerate draw; retry this mode
              continue;
            }
            for (auto& v : e1) v /= n1;
            std::array<double, 3> e2 = {(mv[1] * e1[2] - mv[2] * e1[1]) / mm,
                                        (mv[2] * e1[0] - mv[0] * e1[2]) / mm,
                                        (mv[0] * e1[1] - mv[1] * e1[0]) / mm};
            // fixed handedness e1 + i e2: a helical spectrum keeps the
            // helicity away from zero so relative drift is well conditioned
            const double amp = A / (mm * mm);
            const std::complex<double> ph = std::exp(std::complex<double>(0.0, phase(rng)));
            C3 w;
            for (int c = 0; c < 3; ++c)
              w[c] = amp * ph * std::complex<double>(e1[c], e2[c]);
            st.set_mode(m, w);
            st.set_mode(-m, {std::conj(w[0]), std::conj(w[1]), std::conj(w[2])});
          }
      for (int c = 0; c < 3; ++c) st.central[c] = 0.1 * A * gauss(rng);
      break;
    }
  }
  st.project();
  return st;
}

RunResult run(const SimConfig& cfg) {
  if (cfg.dt <= 0 || cfg.t_final < 0 || cfg.sample_stride < 1)
    throw std::invalid_argument("run: invalid dt/t_final/sample_stride");
  SimState st = initial_state(cfg);
  RunResult result{{}, st, false};

  {
    Diagnostics d0 = diagnostics(st);
    double vmax = std::sqrt(2.0 * d0.energy_density);
    if (cfg.dt * vmax * cfg.cutoff > 1.0) result.cfl_warning = true;
  }

  const long n_steps = std::lround(cfg.t_final / cfg.dt);
  result.samples.push_back(diagnostics(st));
  for (long i = 1; i <= n_steps; ++i) {
    try {
      st = step(st, cfg.dt);
    } catch (const std::runtime_error& e) {
      result.blew_up = true;
      result.error = e.what();
      break;
    }
    if (i % cfg.sample_stride == 0 || i == n_steps) result.samples.push_back(diagnostics(st));
  }
  result.final_state = st;
  result.last_valid_time = st.time;

  // momentum anomaly: centered difference of the mean velocity between
  // consecutive samples vs the instantaneous cocycle rate
  auto& smp = result.samples;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    double res2 = 0.0;
    const double dt2 = smp[i + 1].t - smp[i - 1].t;
    for (int c = 0; c < 3; ++c) {
      double fd = (smp[i + 1].mean_velocity[c] - smp[i - 1].mean_velocity[c]) / dt2;
      double r = fd + smp[i].omega_rate[c];
      res2 += r * r;
    }
    smp[i].anomaly_residual = std::sqrt(res2);
  }
  return result;
}

void write_csv(const RunResult& result, const SimConfig& cfg, std::ostream& os) {
  char buf[512];
  const char* kind = cfg.init == InitKind::Abc ? "abc" : cfg.init == InitKind::Triad ? "triad" : "random";
  std::snprintf(buf, sizeof buf,
                "# torusalg simulate cutoff=%d dt=%.17g t_final=%.17g init=%s seed=%llu "
                "amplitude=%.17g sample_stride=%d threads=1\n",
                cfg.cutoff, cfg.dt, cfg.t_final, kind,
                static_cast<unsigned long long>(cfg.seed), cfg.amplitude, cfg.sample_stride);
  os << buf;
  os << "t,energy,helicity,vbar_x,vbar_y,vbar_z,anomaly_residual\n";
  for (const auto& d : result.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", d.t, d.energy,
                  d.helicity, d.mean_velocity[0], d.mean_velocity[1], d.mean_velocity[2],
                  d.anomaly_residual);
    os << buf;
  }
}

AlgebraElement to_exact(const SimState& state) {
  AlgebraElement e;
  const int n = state.cutoff();
  auto exact = [](std::complex<double> v) {
    return CFieldScalar(FieldScalar(Rational(v.real())), FieldScalar(Rational(v.imag())));
  };
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        WaveVector m{x, y, z};
        if (m.is_zero()) continue;
        C3 w = state.mode(m);
        if (w[0] == 0.0 && w[1] == 0.0 && w[2] == 0.0) continue;
        e.add_mode(m, {exact(w[0]), exact(w[1]), exact(w[2])});
      }
  e.set_central({CFieldScalar(FieldScalar(Rational(state.central[0]))),
                 CFieldScalar(FieldScalar(Rational(state.central[1]))),
                 CFieldScalar(FieldScalar(Rational(state.central[2])))});
  return e;
}

// ---- JSON ----

std::string SimState::to_json() const {
  nlohmann::json j;
  j["cutoff"] = cutoff_;
  j["time"] = time;
  j["modes"] = nlohmann::json::array();
  const int n = cutoff_;
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        WaveVector m{x, y, z};
        if (m.is_zero()) continue;
        C3 w = mode(m);
        if (w[0] == 0.0 && w[1] == 0.0 && w[2] == 0.0) continue;
        nlohmann::json entry;
        entry["m"] = {m.x, m.y, m.z};
        entry["coeff"] = {{w[0].real(), w[0].imag()},
                          {w[1].real(), w[1].imag()},
                          {w[2].real(), w[2].imag()}};
        j["modes"].push_back(entry);
      }
  j["mean"] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  j["central"] = {{central[0], 0.0}, {central[1], 0.0}, {central[2], 0.0}};
  return j.dump(2);
}

SimState SimState::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SimState st(j.at("cutoff").get<int>());
  st.time = j.value("time", 0.0);
  for (const auto& entry : j.at("modes")) {
    WaveVector m{entry.at("m").at(0).get<std::int64_t>(), entry.at("m").at(1).get<std::int64_t>(),
                 entry.at("m").at(2).get<std::int64_t>()};
    C3 v;
    for (int c = 0; c < 3; ++c)
      v[c] = std::complex<double>(entry.at("coeff").at(c).at(0).get<double>(),
                                  entry.at("coeff").at(c).at(1).get<double>());
    st.set_mode(m, v);
  }
  for (int c = 0; c < 3; ++c) st.central[c] = j.at("central").at(c).at(0).get<double>();
  return st;
}

SimConfig SimConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  SimConfig cfg;
  cfg.cutoff = j.value("cutoff", cfg.cutoff);
  cfg.dt = j.value("dt", cfg.dt);
  cfg.t_final = j.value("t_final", cfg.t_final);
  cfg.sample_stride = j.value("sample_stride", cfg.sample_stride);
  if (j.contains("init")) {
    const auto& ji = j.at("init");
    std::string kind = ji.value("kind", "abc");
    if (kind == "abc")
      cfg.init = InitKind::Abc;
    else if (kind == "triad")
      cfg.init = InitKind::Triad;
    else if (kind == "random")
      cfg.init = InitKind::Random;
    else
      throw std::invalid_argument("config: unknown init kind '" + kind + "'");
    cfg.seed = ji.value("seed", cfg.seed);
    cfg.amplitude = ji.value("amplitude", cfg.amplitude);
  }
  if (cfg.cutoff < 1 || cfg.dt <= 0 || cfg.t_final < 0 || cfg.sample_stride < 1)
    throw std::invalid_argument("config: cutoff/dt/t_final/sample_stride out of range");
  return cfg;
}

std::string SimConfig::to_json() const {
  nlohmann::json j;
  j["cutoff"] = cutoff;
  j["dt"] = dt;
  j["t_final"] = t_final;
  j["sample_stride"] = sample_stride;
  j["init"]["kind"] = init == InitKind::Abc ? "abc" : init == InitKind::Triad ? "triad" : "random";
  j["init"]["seed"] = seed;
  j["init"]["amplitude"] = amplitude;
  return j.dump(2);
}

}  // namespace torusalg
