#ifndef TORUSALG_COBAUDIT_HPP
#define TORUSALG_COBAUDIT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torusalg/lattice.hpp"

namespace torusalg {

/// Element of the tensor square of the lower half-basis,
/// rho = sum rho^{pq} X_p (x) X_q, with finite support.
class TwoTensor {
 public:
  using Key = std::pair<WaveVector, WaveVector>;

  const std::map<Key, CFieldScalar>& entries() const { return entries_; }
  void add(WaveVector p, WaveVector q, const CFieldScalar& c);
  bool is_zero() const { return entries_.empty(); }
  friend bool operator==(const TwoTensor& a, const TwoTensor& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<Key, CFieldScalar> entries_;
};

/// Coboundary action of X_k on rho: [X_k (x) 1 + 1 (x) X_k, rho], i.e.
/// (p,q) -> alpha.(k x p) at (p+k, q) plus alpha.(k x q) at (p, q+k).
/// Output entries with an index component beyond `cutoff` are dropped;
/// entries that would land on a zero index carry a vanishing coefficient.
TwoTensor coboundary(const TwoTensor& rho, WaveVector k, int cutoff,
                     const DirectionTriple& dirs);

/// Dense exact matrix over the complexified field.
struct ExactMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<CFieldScalar> data;

  ExactMatrix() = default;
  ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  CFieldScalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const CFieldScalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// M_{mn} = (-i gamma.(m+n)) / ((i gamma.m)(i gamma.n)) beta.(m x n)/alpha.(m x n).
/// Throws std::domain_error on zero/resonant indices or alpha.(m x n) = 0.
CFieldScalar m_matrix(WaveVector m, WaveVector n, const DirectionTriple& dirs);

/// The reference 3x3 submatrix index sets and its exact entries.
const std::vector<WaveVector>& m1_row_indices();
const std::vector<WaveVector>& m1_col_indices();
ExactMatrix m1_submatrix(const DirectionTriple& dirs);

/// Reference values for the 3x3 certificate submatrix: entry (i,j) must
/// equal i * num/den. Compared by cross-multiplication, so no particular
/// rationalized form is preferred.
struct M1Reference {
  FieldScalar num, den;
};
const std::vector<M1Reference>& m1_reference();  // row-major, 9 entries

/// Rank over the complexified field by exact Gaussian elimination with
/// canonical-zero-test pivoting.
int exact_rank(ExactMatrix m);

/// sigma^{mn} = x^m + y^n on given index sets (rank <= 2 by construction).
ExactMatrix outer_sum_matrix(const std::vector<CFieldScalar>& x,
                             const std::vector<CFieldScalar>& y);

/// The full certificate: forcing-argument demonstrations, the M matrix on
/// the index sets, its exact rank, the reference-entry comparison (when the
/// sets are the reference ones) and the verdict.
struct ObstructionReport {
  std::vector<WaveVector> m_set, n_set;
  ExactMatrix matrix;
  int rank = 0;
  bool reference_sets = false;
  int entries_matched = 0;  // out of 9, when reference_sets
  bool reduction_ok = false;
  std::vector<std::string> reduction_lines;
  std::string verdict;

  bool certified() const { return rank > 2; }
  std::string to_text() const;
  std::string to_json() const;
};

ObstructionReport coboundary_obstruction_report(const std::vector<WaveVector>& m_set,
                                                const std::vector<WaveVector>& n_set,
                                                const DirectionTriple& dirs);

}  // namespace torusalg

#endif
