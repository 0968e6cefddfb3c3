#include "torusalg/fluidalg.hpp"

#include <stdexcept>

#include "json.hpp"

namespace torusalg {

void AlgebraElement::add_mode(WaveVector m, const Vec3C& v) {
  if (m.is_zero()) throw std::invalid_argument("AlgebraElement: m = 0 belongs in the mean part");
  if (!dot(v, m).is_zero())
    throw std::invalid_argument("AlgebraElement: coefficient at " + m.str() +
                                " is not transversal");
  auto it = modes_.find(m);
  if (it == modes_.end()) {
    if (!torusalg::is_zero(v)) modes_.emplace(m, v);
    return;
  }
  it->second = add(it->second, v);
  if (torusalg::is_zero(it->second)) modes_.erase(it);
}

Vec3C AlgebraElement::mode(WaveVector m) const {
  auto it = modes_.find(m);
  return it == modes_.end() ? Vec3C{} : it->second;
}

bool AlgebraElement::is_zero() const {
  return modes_.empty() && !has_mean() && !has_central();
}

bool AlgebraElement::is_real_field() const {
  for (int i = 0; i < 3; ++i)
    if (!mean_[i].im().is_zero() || !central_[i].im().is_zero()) return false;
  for (const auto& [m, v] : modes_) {
    Vec3C c = mode(-m);
    for (int i = 0; i < 3; ++i)
      if (c[i] != v[i].conj()) return false;
  }
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, v] : o.modes_) add_mode(m, v);
  add_mean(o.mean_);
  add_central(o.central_);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  r += b.scaled(CFieldScalar(-1));
  return r;
}

AlgebraElement AlgebraElement::scaled(const CFieldScalar& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : modes_) r.modes_.emplace(m, scale(c, v));
  r.mean_ = scale(c, mean_);
  r.central_ = scale(c, central_);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return (a - b).is_zero();
}

AlgebraElement basis_field(BasisKind kind, WaveVector m, const DirectionTriple& dirs) {
  if (m.is_zero()) throw std::invalid_argument("basis_field: m = 0");
  const Vec3F& dir = kind == BasisKind::A ? dirs.alpha() : dirs.beta();
  Vec3F v = crossf(dir, m);
  AlgebraElement e;
  e.add_mode(m, Vec3C{CFieldScalar(FieldScalar(0), -v[0]), CFieldScalar(FieldScalar(0), -v[1]),
                      CFieldScalar(FieldScalar(0), -v[2])});
  return e;
}

AlgebraElement translation_field(int j) {
  AlgebraElement e;
  Vec3C v;
  v[j] = CFieldScalar(1);
  e.set_mean(v);
  return e;
}

AlgebraElement central_field(int j) {
  AlgebraElement e;
  Vec3C v;
  v[j] = CFieldScalar(1);
  e.set_central(v);
  return e;
}

namespace {

// the cocycle restricted to the exact parts: sum_m w_{-m} x u_m
Vec3C mode_paired_cross(const AlgebraElement& u, const AlgebraElement& w) {
  Vec3C acc;
  for (const auto& [m, um] : u.modes()) {
    auto it = w.modes().find(-m);
    if (it == w.modes().end()) continue;
    acc = add(acc, crossc(it->second, um));
  }
  return acc;
}

}  // namespace

Vec3C omega_cocycle(const AlgebraElement& u, const AlgebraElement& w) {
  return add(mode_paired_cross(u, w), crossc(w.mean(), u.mean()));
}

int no_truncation_cutoff(const AlgebraElement& u, const AlgebraElement& w) {
  std::int64_t mu = 0, mw = 0;
  for (const auto& [m, v] : u.modes())
    if (m.max_abs() > mu) mu = m.max_abs();
  for (const auto& [m, v] : w.modes())
    if (m.max_abs() > mw) mw = m.max_abs();
  return static_cast<int>(mu + mw);
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& w, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("bracket: negative cutoff");
  AlgebraElement out;
  auto keep = [cutoff](WaveVector k) { return !k.is_zero() && k.max_abs() <= cutoff; };

  // translation parts act by [ubar, w_n] = i (ubar.n) w_n
  if (u.has_mean())
    for (const auto& [n, wn] : w.modes())
      if (keep(n)) out.add_mode(n, scale(dot(u.mean(), n).times_i(), wn));
  if (w.has_mean())
    for (const auto& [n, un] : u.modes())
      if (keep(n)) out.add_mode(n, scale(-(dot(w.mean(), n).times_i()), un));

  // mode-mode convolution of u.grad w - w.grad u; the k = 0 coefficient
  // cancels exactly (the commutator is exact), so it is never emitted
  for (const auto& [m, um] : u.modes())
    for (const auto& [n, wn] : w.modes()) {
      WaveVector k = m + n;
      if (!keep(k)) continue;
      CFieldScalar c1 = dot(um, n).times_i();
      CFieldScalar c2 = dot(wn, m).times_i();
      out.add_mode(k, add(scale(c1, wn), scale(-c2, um)));
    }

  // central part: the cocycle on the exact parts. The mean-cross term of the
  // literal integral would make translations non-commuting and break closure
  // of the upper half-basis; both versions agree when either argument is
  // mean-zero (every vorticity bracket).
  out.set_central(mode_paired_cross(u, w));
  return out;
}

AlgebraElement curl(const AlgebraElement& u) {
  if (u.has_central()) throw std::invalid_argument("curl: input has a central component");
  AlgebraElement out;
  for (const auto& [m, um] : u.modes()) {
    // i m x u_m
    Vec3C mm = {CFieldScalar(FieldScalar(static_cast<long>(m.x))),
                CFieldScalar(FieldScalar(static_cast<long>(m.y))),
                CFieldScalar(FieldScalar(static_cast<long>(m.z)))};
    Vec3C c = crossc(mm, um);
    out.add_mode(m, Vec3C{c[0].times_i(), c[1].times_i(), c[2].times_i()});
  }
  out.set_central(u.mean());
  return out;
}

AlgebraElement curl_inv(const AlgebraElement& w) {
  if (w.has_mean()) throw std::invalid_argument("curl_inv: input has a mean component");
  AlgebraElement out;
  for (const auto& [m, wm] : w.modes()) {
    // transversality of inputs is an AlgebraElement invariant; the unique
    // preimage is v_m = i (m x w_m)/(m.m)
    Vec3C mm = {CFieldScalar(FieldScalar(static_cast<long>(m.x))),
                CFieldScalar(FieldScalar(static_cast<long>(m.y))),
                CFieldScalar(FieldScalar(static_cast<long>(m.z)))};
    Vec3C c = crossc(mm, wm);
    FieldScalar inv_mm(make_rational(1, static_cast<long>(dot(m, m))));
    out.add_mode(m, scale(CFieldScalar::i_times(inv_mm), c));
  }
  out.set_mean(w.central());
  return out;
}

CFieldScalar pairing_invariant(const AlgebraElement& x, const AlgebraElement& y) {
  CFieldScalar acc;
  for (const auto& [m, xm] : x.modes()) {
    auto it = y.modes().find(-m);
    if (it == y.modes().end()) continue;
    WaveVector n = -m;
    Vec3C nn = {CFieldScalar(FieldScalar(static_cast<long>(n.x))),
                CFieldScalar(FieldScalar(static_cast<long>(n.y))),
                CFieldScalar(FieldScalar(static_cast<long>(n.z)))};
    Vec3C v = crossc(nn, it->second);
    FieldScalar inv_nn(make_rational(1, static_cast<long>(dot(n, n))));
    v = scale(CFieldScalar::i_times(inv_nn), v);
    acc += dot(xm, v);
  }
  acc += dot(x.central(), y.mean());
  acc += dot(y.central(), x.mean());
  return acc;
}

CFieldScalar pairing_l2(const AlgebraElement& x, const AlgebraElement& y) {
  CFieldScalar acc;
  for (const auto& [m, xm] : x.modes()) {
    auto it = y.modes().find(-m);
    if (it == y.modes().end()) continue;
    acc += dot(xm, it->second);
  }
  acc += dot(x.mean(), y.mean());
  acc += dot(x.central(), y.central());
  return acc;
}

CFieldScalar helicity(const AlgebraElement& w) {
  if (w.has_mean()) throw std::invalid_argument("helicity: extended vorticity must have zero mean");
  return pairing_invariant(w, w);
}

Expansion expand(const AlgebraElement& u, const DirectionTriple& dirs) {
  Expansion e;
  for (const auto& [m, um] : u.modes()) {
    if (!dirs.no_resonance(m))
      throw std::domain_error("expand: resonance at m = " + m.str());
    CFieldScalar inv_igm = CFieldScalar::i_times(dirs.gamma_dot(m)).inverse();
    CFieldScalar ca = dot(um, to_complex(dirs.beta())) * inv_igm;
    CFieldScalar cb = -(dot(um, to_complex(dirs.alpha())) * inv_igm);
    e.ab.emplace(m, std::make_pair(ca, cb));
  }
  e.translation = u.mean();
  e.central = u.central();
  return e;
}

AlgebraElement reconstruct(const Expansion& e, const DirectionTriple& dirs) {
  AlgebraElement u;
  for (const auto& [m, cc] : e.ab) {
    u += basis_field(BasisKind::A, m, dirs).scaled(cc.first);
    u += basis_field(BasisKind::B, m, dirs).scaled(cc.second);
  }
  u.set_mean(e.translation);
  u.set_central(e.central);
  return u;
}

PotentialPair potentials(const AlgebraElement& u, const DirectionTriple& dirs) {
  PotentialPair p;
  for (const auto& [m, um] : u.modes()) {
    if (!dirs.no_resonance(m))
      throw std::domain_error("potentials: resonance at m = " + m.str());
    CFieldScalar inv_igm = CFieldScalar::i_times(dirs.gamma_dot(m)).inverse();
    CFieldScalar A = -(dot(um, to_complex(dirs.beta())) * inv_igm);
    CFieldScalar B = dot(um, to_complex(dirs.alpha())) * inv_igm;
    if (!A.is_zero()) p.A.emplace(m, A);
    if (!B.is_zero()) p.B.emplace(m, B);
  }
  return p;
}

AlgebraElement from_potentials(const Vec3C& mean, const PotentialPair& p,
                               const DirectionTriple& dirs) {
  AlgebraElement u;
  u.set_mean(mean);
  auto emit = [&](const Vec3F& dir, const std::map<WaveVector, CFieldScalar>& pot) {
    for (const auto& [m, c] : pot) {
      // dir x grad(c e_m) = i c (dir x m) e_m
      Vec3F dxm = crossf(dir, m);
      u.add_mode(m, scale(c.times_i(), to_complex(dxm)));
    }
  };
  emit(dirs.alpha(), p.A);
  emit(dirs.beta(), p.B);
  return u;
}

// ---- JSON (exact scalars rendered in the numfield text format) ----

namespace {

nlohmann::json cfield_json(const CFieldScalar& c) {
  return nlohmann::json::array({c.re().str(), c.im().str()});
}

CFieldScalar cfield_from_json(const nlohmann::json& j) {
  return CFieldScalar(FieldScalar::parse(j.at(0).get<std::string>()),
                      FieldScalar::parse(j.at(1).get<std::string>()));
}

nlohmann::json vec3c_json(const Vec3C& v) {
  return nlohmann::json::array({cfield_json(v[0]), cfield_json(v[1]), cfield_json(v[2])});
}

Vec3C vec3c_from_json(const nlohmann::json& j) {
  return {cfield_from_json(j.at(0)), cfield_from_json(j.at(1)), cfield_from_json(j.at(2))};
}

}  // namespace

std::string AlgebraElement::to_json() const {
  nlohmann::json j;
  j["modes"] = nlohmann::json::array();
  for (const auto& [m, v] : modes_) {
    nlohmann::json entry;
    entry["m"] = {m.x, m.y, m.z};
    entry["coeff"] = vec3c_json(v);
    j["modes"].push_back(entry);
  }
  j["mean"] = vec3c_json(mean_);
  j["central"] = vec3c_json(central_);
  return j.dump(2);
}

AlgebraElement AlgebraElement::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  AlgebraElement e;
  for (const auto& entry : j.at("modes")) {
    WaveVector m{entry.at("m").at(0).get<std::int64_t>(), entry.at("m").at(1).get<std::int64_t>(),
                 entry.at("m").at(2).get<std::int64_t>()};
    e.add_mode(m, vec3c_from_json(entry.at("coeff")));
  }
  e.set_mean(vec3c_from_json(j.at("mean")));
  e.set_central(vec3c_from_json(j.at("central")));
  return e;
}

}  // namespace torusalg
