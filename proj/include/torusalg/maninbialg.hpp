#ifndef TORUSALG_MANINBIALG_HPP
#define TORUSALG_MANINBIALG_HPP

#include <iosfwd>

#include "torusalg/fluidalg.hpp"
#include "torusalg/verify.hpp"

namespace torusalg {

/// Manin basis: X_m = a_m and X^n = b_{-n}/(i gamma.n), normalized so that
/// <X_m, X^n> = delta_m^n under the invariant pairing.
AlgebraElement x_lower(WaveVector m, const DirectionTriple& dirs);
AlgebraElement x_upper(WaveVector n, const DirectionTriple& dirs);

/// Gamma_{mn}^{m+n} = alpha.(m x n).
FieldScalar gamma_const(WaveVector m, WaveVector n, const DirectionTriple& dirs);

/// mu^{mn}_{m+n} = (-i gamma.(m+n)) / ((i gamma.m)(i gamma.n)) beta.(m x n)
///             = i (gamma.(m+n)) beta.(m x n) / ((gamma.m)(gamma.n)).
/// Hard error on zero or resonant m, n; zero when m + n = 0.
CFieldScalar mu_const(WaveVector m, WaveVector n, const DirectionTriple& dirs);

/// The real number r with mu_const = i * r.
FieldScalar mu_real(WaveVector m, WaveVector n, const DirectionTriple& dirs);

/// Exact comparison of the convolution bracket against the closed-form
/// tables for all m, n with |m_i|,|n_i| <= range, including the m + n = 0
/// central case and the supporting vector identity.
VerifyReport verify_bracket_tables(int range, const DirectionTriple& dirs);

/// Invariant-pairing table, Manin duality and isotropy over the basis with
/// wavevectors in the given range.
VerifyReport verify_pairing_table(int range, const DirectionTriple& dirs);

/// Jacobi for Gamma, Jacobi for mu, the mixed compatibility identity, and
/// the mixed bracket [X_m, X^n] against its closed form, exhaustively on
/// the given range.
VerifyReport verify_bialgebra(int range, const DirectionTriple& dirs);

/// CSV export of both structure-constant tables: rows
/// constant,m1,m2,m3,n1,n2,n3,k1,k2,k3,re,im with exact scalars in the
/// numfield text format.
void structure_table_csv(int range, const DirectionTriple& dirs, std::ostream& os);

}  // namespace torusalg

#endif
