#include "commulab/unipoly.hpp"

#include <sstream>

#include "commulab/matrix.hpp"

namespace commulab {

UniPoly::UniPoly(RingSpec ring, std::vector<RingValue> ascending_coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(ascending_coeffs)) {
  for (const auto& c : coeffs_)
    if (c.ring() != ring_)
      throw std::invalid_argument("polynomial coefficient from a different ring");
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const RingValue& c) {
  return UniPoly(c.ring(), {c});
}

UniPoly UniPoly::monomial(const RingValue& c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<RingValue> v(k + 1, c.ring().zero());
  v[k] = c;
  return UniPoly(c.ring(), std::move(v));
}

UniPoly UniPoly::linear_root(const RingValue& a) {
  return UniPoly(a.ring(), {-a, a.ring().one()});
}

bool UniPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

const RingValue& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading() of the zero polynomial");
  return coeffs_.back();
}

RingValue UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return ring_.zero();
  return coeffs_[k];
}

bool UniPoly::operator==(const UniPoly& other) const {
  return ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

RingValue UniPoly::eval(const RingValue& x) const {
  RingValue acc = ring_.zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod_monic(const UniPoly& divisor) const {
  if (!divisor.is_monic())
    throw std::invalid_argument("divmod_monic requires a monic divisor");
  if (ring_ != divisor.ring_)
    throw std::invalid_argument("polynomials from different rings");
  std::vector<RingValue> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly::zero(ring_), *this};
  std::vector<RingValue> quot(degree() - dd + 1, ring_.zero());
  for (int i = degree(); i >= dd; --i) {
    RingValue c = rem[i];
    if (c.is_zero()) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] = rem[i - dd + j] - c * divisor.coeffs_[j];
  }
  return {UniPoly(ring_, std::move(quot)), UniPoly(ring_, std::move(rem))};
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly::zero(ring_);
  std::vector<RingValue> d;
  d.reserve(coeffs_.size() - 1);
  for (int i = 1; i < static_cast<int>(coeffs_.size()); ++i)
    d.push_back(ring_.from_int(i) * coeffs_[i]);
  return UniPoly(ring_, std::move(d));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i].str();
    } else {
      if (!coeffs_[i].is_one()) os << coeffs_[i].str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("polynomials from different rings");
  std::vector<RingValue> c(std::max(a.coeffs().size(), b.coeffs().size()),
                           a.ring().zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs().size()) c[i] = c[i] + a.coeffs()[i];
    if (i < b.coeffs().size()) c[i] = c[i] + b.coeffs()[i];
  }
  return UniPoly(a.ring(), std::move(c));
}

UniPoly neg(const UniPoly& a) {
  std::vector<RingValue> c;
  c.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) c.push_back(-v);
  return UniPoly(a.ring(), std::move(c));
}

UniPoly sub(const UniPoly& a, const UniPoly& b) { return add(a, neg(b)); }

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("polynomials from different rings");
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.ring());
  std::vector<RingValue> c(a.coeffs().size() + b.coeffs().size() - 1,
                           a.ring().zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(a.ring(), std::move(c));
}

UniPoly scale(const RingValue& c, const UniPoly& a) {
  std::vector<RingValue> out;
  out.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) out.push_back(c * v);
  return UniPoly(a.ring(), std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) { return add(a, b); }
UniPoly operator-(const UniPoly& a, const UniPoly& b) { return sub(a, b); }
UniPoly operator*(const UniPoly& a, const UniPoly& b) { return mul(a, b); }

UniPoly parse_unipoly(const RingSpec& ring, std::string_view text) {
  std::vector<RingValue> coeffs;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      coeffs.push_back(ring.parse_element(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return UniPoly(ring, std::move(coeffs));
}

RingValue resultant(const UniPoly& f, const UniPoly& g) {
  if (f.ring() != g.ring())
    throw std::invalid_argument("polynomials from different rings");
  const RingSpec& R = f.ring();
  if (!f.is_monic() || f.degree() < 1)
    throw std::invalid_argument("resultant requires monic f of degree >= 1");
  if (g.is_zero()) return R.zero();
  const int m = f.degree();
  const int n = g.degree();
  // Sylvester matrix: n rows of f-shifts on top, m rows of g-shifts below,
  // coefficients descending. With f monic, det = prod of g over roots of f.
  const int s = m + n;
  Matrix syl(R, s);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) syl.at(i, i + k) = f.coeff(m - k);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) syl.at(n + j, j + k) = g.coeff(n - k);
  return det(syl);
}

bool resultant_det_identity_check(const Matrix& X, const UniPoly& g) {
  RingValue lhs = det(eval_poly_at_matrix(g, X));
  RingValue rhs = resultant(charpoly(X), g);
  return lhs == rhs;
}

}  // namespace commulab
