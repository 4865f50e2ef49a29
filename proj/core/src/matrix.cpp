#include "commulab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace commulab {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("matrices belong to different rings");
  if (a.n() != b.n())
    throw std::invalid_argument("matrix dimension mismatch");
}

void require_field(const RingSpec& ring, const char* what) {
  if (!ring.is_field())
    throw std::domain_error(std::string(what) + " requires a field ring");
}

}  // namespace

Matrix::Matrix(RingSpec ring, int n) : ring_(std::move(ring)), n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  entries_.assign(static_cast<std::size_t>(n) * n, ring_.zero());
}

Matrix::Matrix(RingSpec ring, int n, std::vector<RingValue> row_major)
    : ring_(std::move(ring)), n_(n), entries_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("entry count does not match dimension");
  for (const auto& e : entries_)
    if (e.ring() != ring_)
      throw std::invalid_argument("matrix entry from a different ring");
}

Matrix Matrix::identity(const RingSpec& ring, int n) {
  Matrix m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::diagonal(const RingSpec& ring, std::vector<RingValue> diag) {
  Matrix m(ring, static_cast<int>(diag.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = std::move(diag[i]);
  return m;
}

Matrix Matrix::from_strings(const RingSpec& ring,
                            const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("empty matrix literal");
  std::vector<RingValue> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix literal is not square");
    for (const auto& cell : row) entries.push_back(ring.parse_element(cell));
  }
  return Matrix(ring, n, std::move(entries));
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RingValue& v) { return v.is_zero(); });
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && n_ == other.n_ && entries_ == other.entries_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].reserve(n_);
    for (int j = 0; j < n_; ++j) out[i].push_back(at(i, j).str());
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  std::vector<RingValue> e;
  e.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(a.entries()[i] + b.entries()[i]);
  return Matrix(a.ring(), a.n(), std::move(e));
}

Matrix sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  std::vector<RingValue> e;
  e.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(a.entries()[i] - b.entries()[i]);
  return Matrix(a.ring(), a.n(), std::move(e));
}

Matrix neg(const Matrix& a) {
  std::vector<RingValue> e;
  e.reserve(a.entries().size());
  for (const auto& v : a.entries()) e.push_back(-v);
  return Matrix(a.ring(), a.n(), std::move(e));
}

Matrix scale(const RingValue& c, const Matrix& a) {
  std::vector<RingValue> e;
  e.reserve(a.entries().size());
  for (const auto& v : a.entries()) e.push_back(c * v);
  return Matrix(a.ring(), a.n(), std::move(e));
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  const int n = a.n();
  Matrix out(a.ring(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RingValue acc = a.ring().zero();
      for (int k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  return out;
}

Matrix mat_pow(const Matrix& a, unsigned long e) {
  Matrix acc = Matrix::identity(a.ring(), a.n());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

RingValue trace(const Matrix& a) {
  RingValue t = a.ring().zero();
  for (int i = 0; i < a.n(); ++i) t = t + a.at(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }

Matrix jordan_block(int n, const RingSpec& ring) {
  Matrix m(ring, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = ring.one();
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  return sub(mul(a, b), mul(b, a));
}

UniPoly charpoly(const Matrix& a) {
  const int n = a.n();
  const RingSpec& R = a.ring();
  // Berkowitz recurrences: c holds det(tI - A_r) descending, A_r the leading
  // principal r x r block.
  std::vector<RingValue> c{R.one(), -a.at(0, 0)};
  for (int r = 2; r <= n; ++r) {
    // q[0] = 1, q[1] = -a_rr, q[k] = -(R_row * M^(k-2) * C_col), k = 2..r
    std::vector<RingValue> q;
    q.reserve(r + 1);
    q.push_back(R.one());
    q.push_back(-a.at(r - 1, r - 1));
    std::vector<RingValue> v(r - 1);  // M^(k-2) * C_col
    for (int i = 0; i < r - 1; ++i) v[i] = a.at(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      RingValue dot = R.zero();
      for (int i = 0; i < r - 1; ++i) dot = dot + a.at(r - 1, i) * v[i];
      q.push_back(-dot);
      if (k < r) {
        std::vector<RingValue> w(r - 1, R.zero());
        for (int i = 0; i < r - 1; ++i) {
          RingValue acc = R.zero();
          for (int j = 0; j < r - 1; ++j) acc = acc + a.at(i, j) * v[j];
          w[i] = std::move(acc);
        }
        v = std::move(w);
      }
    }
    // truncated convolution: c_new[i] = sum_k q[k] * c[i-k]
    std::vector<RingValue> cn(r + 1, R.zero());
    for (int i = 0; i <= r; ++i) {
      RingValue acc = R.zero();
      for (int k = 0; k <= i && k <= r; ++k) {
        int j = i - k;
        if (j < static_cast<int>(c.size())) acc = acc + q[k] * c[j];
      }
      cn[i] = std::move(acc);
    }
    c = std::move(cn);
  }
  std::reverse(c.begin(), c.end());  // to ascending
  return UniPoly(R, std::move(c));
}

bool cayley_hamilton_check(const Matrix& a) {
  return eval_poly_at_matrix(charpoly(a), a).is_zero();
}

std::optional<int> matrix_nilindex(const Matrix& x, int bound) {
  if (bound < 1) throw std::invalid_argument("nilindex bound must be >= 1");
  Matrix p = x;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_zero()) return k;
    if (k < bound) p = mul(p, x);
  }
  return std::nullopt;
}

RingValue det(const Matrix& a) {
  // det(A) = (-1)^n * charpoly(0)
  RingValue c0 = charpoly(a).coeff(0);
  return (a.n() % 2 == 0) ? c0 : -c0;
}

Matrix adjugate(const Matrix& a) {
  const int n = a.n();
  const RingSpec& R = a.ring();
  if (n == 1) return Matrix::identity(R, 1);
  UniPoly chi = charpoly(a);
  // q(t) = (chi(t) - chi(0)) / t;  adj(A) = (-1)^(n+1) * q(A)
  std::vector<RingValue> qc(chi.coeffs().begin() + 1, chi.coeffs().end());
  Matrix q = eval_poly_at_matrix(UniPoly(R, std::move(qc)), a);
  return (n % 2 == 0) ? neg(q) : q;
}

bool is_invertible(const Matrix& a) { return is_unit(det(a)); }

Matrix inverse(const Matrix& a) {
  RingValue d = det(a);
  if (!is_unit(d))
    throw std::domain_error("matrix determinant is not a unit");
  return scale(inverse(d), adjugate(a));
}

Matrix conjugate(const Matrix& a, const Matrix& p) {
  require_same_shape(a, p);
  return mul(mul(p, a), inverse(p));
}

Matrix eval_poly_at_matrix(const UniPoly& g, const Matrix& x) {
  if (g.ring() != x.ring())
    throw std::invalid_argument("polynomial and matrix rings differ");
  const RingSpec& R = x.ring();
  Matrix acc(R, x.n());
  for (int i = g.degree(); i >= 0; --i) {
    acc = mul(acc, x);
    const RingValue& c = g.coeffs()[i];
    if (!c.is_zero())
      for (int d = 0; d < x.n(); ++d) acc.at(d, d) = acc.at(d, d) + c;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// exact linear algebra over fields

std::vector<int> rref_in_place(std::vector<std::vector<RingValue>>& rows,
                               const RingSpec& field) {
  require_field(field, "row reduction");
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  int prow = 0;
  for (int col = 0; col < ncols && prow < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int r = prow; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[prow], rows[sel]);
    RingValue inv = inverse(rows[prow][col]);
    for (int c = col; c < ncols; ++c) rows[prow][c] = inv * rows[prow][c];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == prow || rows[r][col].is_zero()) continue;
      RingValue f = rows[r][col];
      for (int c = col; c < ncols; ++c)
        rows[r][c] = rows[r][c] - f * rows[prow][c];
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::vector<std::vector<RingValue>> kernel_of_rows(
    std::vector<std::vector<RingValue>> rows, int ncols,
    const RingSpec& field) {
  require_field(field, "kernel computation");
  std::vector<int> pivots = rref_in_place(rows, field);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<RingValue>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RingValue> v(ncols, field.zero());
    v[f] = field.one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -rows[pi][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<RingValue>> kernel_basis(const Matrix& a) {
  require_field(a.ring(), "kernel_basis");
  std::vector<std::vector<RingValue>> rows(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) rows[i].push_back(a.at(i, j));
  return kernel_of_rows(std::move(rows), a.n(), a.ring());
}

int rank(const Matrix& a) {
  require_field(a.ring(), "rank");
  std::vector<std::vector<RingValue>> rows(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) rows[i].push_back(a.at(i, j));
  return static_cast<int>(rref_in_place(rows, a.ring()).size());
}

std::vector<std::vector<RingValue>> span_canonical_basis(
    std::vector<std::vector<RingValue>> vectors, int ncols,
    const RingSpec& field) {
  std::vector<int> pivots = rref_in_place(vectors, field);
  vectors.resize(pivots.size(), std::vector<RingValue>(ncols, field.zero()));
  return vectors;
}

}  // namespace commulab
