#pragma once

#include <string>
#include <vector>

#include "commulab/ring.hpp"

namespace commulab {

class Matrix;

/// Univariate polynomial with exact coefficients in one ring, stored
/// ascending. The zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  explicit UniPoly(RingSpec ring) : ring_(std::move(ring)) {}
  UniPoly(RingSpec ring, std::vector<RingValue> ascending_coeffs);

  static UniPoly zero(const RingSpec& ring) { return UniPoly(ring); }
  static UniPoly constant(const RingValue& c);
  /// c * t^k
  static UniPoly monomial(const RingValue& c, int k);
  /// t - a
  static UniPoly linear_root(const RingValue& a);

  const RingSpec& ring() const { return ring_; }
  const std::vector<RingValue>& coeffs() const { return coeffs_; }
  /// Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const RingValue& leading() const;
  RingValue coeff(int k) const;

  bool operator==(const UniPoly& other) const;
  bool operator!=(const UniPoly& other) const { return !(*this == other); }

  RingValue eval(const RingValue& x) const;

  /// Quotient and remainder by a monic divisor (exact over any ring).
  std::pair<UniPoly, UniPoly> divmod_monic(const UniPoly& divisor) const;

  /// Formal derivative.
  UniPoly derivative() const;

  /// "c0 + c1*t + c2*t^2" with zero terms skipped; "0" for the zero poly.
  std::string str() const;

 private:
  RingSpec ring_;
  std::vector<RingValue> coeffs_;
  void normalize();
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly neg(const UniPoly& a);
UniPoly scale(const RingValue& c, const UniPoly& a);

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);

/// Parses "c0,c1,...,ck" (ascending, ring-element syntax per coefficient).
UniPoly parse_unipoly(const RingSpec& ring, std::string_view text);

/// Resultant of monic f (deg >= 1) and g, as the determinant of their
/// Sylvester matrix, computed division-free so it is valid over rings with
/// zero-divisors. For monic f this equals the product of g over the roots
/// of f; for constant g = c it is c^deg(f).
RingValue resultant(const UniPoly& f, const UniPoly& g);

/// Checks the identity det(g(X)) = Res(charpoly(X), g). Returns true iff the
/// two sides agree; both sides are computed by independent routes.
bool resultant_det_identity_check(const Matrix& X, const UniPoly& g);

}  // namespace commulab
