#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commulab/matrix.hpp"
#include "commulab/report.hpp"

namespace commulab {

/// Eigenvalues of a matrix that lie in the base field, with algebraic
/// multiplicities, sorted by canonical payload. `complete` is true iff the
/// multiplicities sum to n, i.e. the characteristic polynomial splits over
/// the base field.
struct SpectralData {
  std::vector<std::pair<RingValue, int>> eigenvalues;
  bool complete = false;

  int multiplicity_sum() const;
  bool has_sole_eigenvalue() const {
    return complete && eigenvalues.size() == 1;
  }
};

/// GF(p): exhaustive root scan of the characteristic polynomial.
/// Q: rational-root search; complete=false when the spectrum does not split.
SpectralData eigenvalues_in_field(const Matrix& a);

/// Basis of ker (A - lambda I)^n in reduced-echelon form. Throws
/// std::invalid_argument when lambda is not an eigenvalue.
std::vector<std::vector<RingValue>> generalized_eigenspace(
    const Matrix& a, const RingValue& lambda);

/// Whether two matrices have the same spectrum (with multiplicity) and
/// pairwise equal generalized eigenspaces. INCONCLUSIVE when a spectrum does
/// not split; FAIL carries which part differs.
CheckReport eigenstructure_compare(const Matrix& a, const Matrix& b);

struct CommonEigenvector {
  std::vector<RingValue> vector;
  RingValue lambda_a;
  RingValue lambda_b;
};

/// Scans eigenvalue pairs in canonical order and returns the first nonzero
/// vector of ker(A - la I) cap ker(B - lb I), if any. Requires complete
/// spectra (std::domain_error otherwise).
std::optional<CommonEigenvector> common_eigenvector(const Matrix& a,
                                                    const Matrix& b);

/// Outcome of the deflation decision procedure.
struct TriangularizationResult {
  enum class Status { ST, NotST, Incomplete };
  Status status = Status::Incomplete;
  /// On ST: invertible P with P^{-1} A P and P^{-1} B P upper triangular
  /// (machine-checked before returning).
  std::optional<Matrix> p;
  /// On NotST: 0-based deflation stage where no common eigenvector exists.
  int stage = -1;
  std::string reason;  // on Incomplete

  bool is_st() const { return status == Status::ST; }
};

/// Complete decision procedure under split spectra: find a common
/// eigenvector, move it to e_1, recurse on the trailing blocks. A pair with
/// a non-split spectrum comes back Incomplete, never a guess.
TriangularizationResult simultaneous_triangularization(const Matrix& a,
                                                       const Matrix& b);

/// Derived-series diagnostic mirroring the solvability argument for pairs
/// with [A,B] = f(A): V = span{B, I, A, ..., A^(n-1)} closes under
/// bracketing with [V,V] inside K[A] and [[V,V],[V,V]] = 0. With f absent
/// the profile is recorded without any claim.
CheckReport lie_solvability_check(const Matrix& a, const Matrix& b,
                                  const std::optional<UniPoly>& f);

/// For A (conjugate-)diagonal with pairwise eigenvalue differences nonzero
/// non-zero-divisors and AB = BA: B is diagonal in the same basis; returns
/// the common diagonalizing P. A non-diagonal A needs `certificate` with
/// certificate^{-1} A certificate diagonal. nullopt signals a conclusion
/// violation (a falsification alarm), hypothesis failures throw.
std::optional<Matrix> simultaneous_diagonalization(
    const Matrix& a, const Matrix& b,
    const std::optional<Matrix>& certificate = std::nullopt);

/// For diagonal A with pairwise eigenvalue differences units and AB = BA:
/// the unique polynomial p of degree <= n-1 with p(A) = B, by Lagrange
/// interpolation over the ring (the Vandermonde determinant is a unit).
/// The returned polynomial is re-verified against B before returning.
UniPoly express_as_polynomial(const Matrix& a, const Matrix& b);

/// Instance check: if A and [A,B] commute then AB = BA. Requires diagonal A
/// with pairwise differences nonzero non-zero-divisors (else INCONCLUSIVE).
/// FAIL embeds the violating B.
CheckReport diago_commutation_check(const Matrix& a, const Matrix& b);

/// For nilpotent U, V over a field: property L predicts U + aV nilpotent for
/// every sample a. Reports violations; non-nilpotent inputs are unsupported
/// (INCONCLUSIVE).
CheckReport property_l_check(const Matrix& u, const Matrix& v,
                             const std::vector<RingValue>& samples);

}  // namespace commulab
