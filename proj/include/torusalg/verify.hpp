#ifndef TORUSALG_VERIFY_HPP
#define TORUSALG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torusalg/fluidalg.hpp"

namespace torusalg {

/// One failed check: which identity, at which indices, with both sides
/// rendered for inspection.
struct ReportRow {
  std::string identity;
  std::vector<WaveVector> indices;
  bool pass = false;
  std::string lhs, rhs;
};

struct ReportFamily {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<ReportRow> failures;  // capped; `failed` holds the true count

  void record_failure(ReportRow row);
};

struct VerifyReport {
  std::vector<ReportFamily> families;
  std::vector<std::string> notes;

  bool all_pass() const;
  void merge(VerifyReport other);
  std::string to_text() const;
  std::string to_json() const;
};

/// Deterministic random incompressible element: `n_modes` modes with
/// wavevectors in |m_i| <= range and transversal small-rational
/// coefficients. With `real_field`, conjugate modes are added and the mean
/// is real. Central part is zero.
AlgebraElement random_incompressible(std::mt19937_64& rng, int range, int n_modes,
                                     bool real_field, bool with_mean,
                                     bool with_central = false);

/// Jacobi identity (= the cocycle condition on the central part) and
/// pairing invariance: exhaustive over basis triples at `exhaustive_range`
/// (unordered triples; the cyclic sum is alternating) plus `n_random`
/// seeded random triples at `random_range`. Also checks closure (zero mean
/// of brackets) and the curl-of-cross-convolution route for the bracket.
VerifyReport verify_algebra_identities(int exhaustive_range, int random_range, int n_random,
                                       std::uint64_t seed, const DirectionTriple& dirs);

/// <curl v, v> route vs the direct mode sum of v.v on random real fields.
VerifyReport verify_energy_identity(int n_random, std::uint64_t seed,
                                    const DirectionTriple& dirs);

/// expand/reconstruct and potentials/from_potentials round-trips on random
/// fields, plus the basis-field potential values.
VerifyReport verify_roundtrips(int n_random, std::uint64_t seed, const DirectionTriple& dirs);

}  // namespace torusalg

#endif
