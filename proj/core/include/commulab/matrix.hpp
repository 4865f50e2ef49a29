#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commulab/ring.hpp"
#include "commulab/unipoly.hpp"

namespace commulab {

/// Dense n x n matrix with exact entries in one ring. Immutable by
/// convention: operations return new values.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(RingSpec ring, int n);
  Matrix(RingSpec ring, int n, std::vector<RingValue> row_major);

  static Matrix identity(const RingSpec& ring, int n);
  static Matrix diagonal(const RingSpec& ring, std::vector<RingValue> diag);
  /// Row-major entries given as ring-element strings.
  static Matrix from_strings(const RingSpec& ring,
                             const std::vector<std::vector<std::string>>& rows);

  int n() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  const RingValue& at(int i, int j) const { return entries_[i * n_ + j]; }
  RingValue& at(int i, int j) { return entries_[i * n_ + j]; }
  const std::vector<RingValue>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;  // compact one-line form for logs and reports

 private:
  RingSpec ring_;
  int n_;
  std::vector<RingValue> entries_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix neg(const Matrix& a);
Matrix scale(const RingValue& c, const Matrix& a);
Matrix mat_pow(const Matrix& a, unsigned long e);
RingValue trace(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Nilpotent Jordan block: ones on the first superdiagonal.
Matrix jordan_block(int n, const RingSpec& ring);

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Monic characteristic polynomial det(tI - A) by the Berkowitz recurrences:
/// division-free, so valid over rings with zero-divisors.
UniPoly charpoly(const Matrix& a);

/// Evaluates charpoly(A) at A; true iff the result is the zero matrix.
bool cayley_hamilton_check(const Matrix& a);

/// Least k <= bound with X^k = 0, or nullopt. Over non-reduced rings the
/// nilindex can exceed n; it is reported as found, never clamped.
std::optional<int> matrix_nilindex(const Matrix& x, int bound);

/// det(A) for any commutative ring, via the characteristic polynomial.
RingValue det(const Matrix& a);

/// Adjugate matrix, division-free (A * adj(A) = det(A) * I).
Matrix adjugate(const Matrix& a);

/// Inverse when det(A) is a unit; throws std::domain_error otherwise.
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// P * A * P^{-1}; requires det(P) to be a unit.
Matrix conjugate(const Matrix& a, const Matrix& p);

/// Horner evaluation g(X); the constant term contributes g0 * I.
Matrix eval_poly_at_matrix(const UniPoly& g, const Matrix& x);

// --- field-only exact linear algebra -------------------------------------

/// Reduced row echelon form of an arbitrary rows x cols array over a field.
/// Returns the pivot column indices; `rows` is transformed in place.
std::vector<int> rref_in_place(std::vector<std::vector<RingValue>>& rows,
                               const RingSpec& field);

/// Kernel of the linear map given by `rows` (each of length ncols), as a
/// reduced-echelon list of column vectors. Deterministic.
std::vector<std::vector<RingValue>> kernel_of_rows(
    std::vector<std::vector<RingValue>> rows, int ncols, const RingSpec& field);

/// Null-space basis of a square matrix over a field (GF(p) or Q); empty iff
/// A is invertible.
std::vector<std::vector<RingValue>> kernel_basis(const Matrix& a);

int rank(const Matrix& a);

/// Row space of the given vectors in RREF, zero rows dropped: a canonical
/// basis of their span, usable for subspace equality tests.
std::vector<std::vector<RingValue>> span_canonical_basis(
    std::vector<std::vector<RingValue>> vectors, int ncols,
    const RingSpec& field);

}  // namespace commulab
