#include "commulab/spectral.hpp"

#include <algorithm>

namespace commulab {

namespace {

void require_field_ring(const Matrix& a, const char* what) {
  if (!a.ring().is_field())
    throw std::domain_error(std::string(what) + " requires a field ring");
}

// multiplicity of lambda as a root, dividing chi by (t - lambda) repeatedly
int root_multiplicity(UniPoly& chi, const RingValue& lambda) {
  int mult = 0;
  while (chi.degree() >= 1 && chi.eval(lambda).is_zero()) {
    chi = chi.divmod_monic(UniPoly::linear_root(lambda)).first;
    ++mult;
  }
  return mult;
}

// divisors of |v| by trial division; nullopt when v is too large to factor
std::optional<std::vector<mpz_class>> divisors_of(const mpz_class& value) {
  mpz_class v = abs(value);
  if (v == 0) return std::vector<mpz_class>{};
  if (v > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<RingValue> matrix_as_vector(const Matrix& m) {
  return m.entries();
}

}  // namespace

int SpectralData::multiplicity_sum() const {
  int s = 0;
  for (const auto& [v, m] : eigenvalues) s += m;
  return s;
}

SpectralData eigenvalues_in_field(const Matrix& a) {
  require_field_ring(a, "eigenvalues_in_field");
  const RingSpec& K = a.ring();
  UniPoly chi = charpoly(a);
  SpectralData out;
  if (K.kind() == RingKind::GF) {
    UniPoly rem = chi;
    for (const RingValue& lambda : enumerate_ring(K)) {
      if (rem.degree() < 1) break;
      int mult = root_multiplicity(rem, lambda);
      if (mult > 0) out.eigenvalues.emplace_back(lambda, mult);
    }
    out.complete = rem.degree() == 0;
  } else {
    // rational-root search on the denominator-cleared polynomial
    UniPoly rem = chi;
    mpz_class den_lcm = 1;
    for (const auto& c : chi.coeffs())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> int_coeffs;
    for (const auto& c : chi.coeffs()) {
      mpq_class scaled = c.rational() * den_lcm;
      int_coeffs.push_back(scaled.get_num());
    }
    // factor out t^v: 0 is a root with that multiplicity
    RingValue zero = K.zero();
    int mult0 = root_multiplicity(rem, zero);
    if (mult0 > 0) out.eigenvalues.emplace_back(zero, mult0);
    std::size_t low = 0;
    while (low < int_coeffs.size() && int_coeffs[low] == 0) ++low;
    auto const_divs = divisors_of(int_coeffs[low]);
    auto lead_divs = divisors_of(int_coeffs.back());
    bool searched_all = const_divs.has_value() && lead_divs.has_value();
    if (searched_all) {
      std::vector<RingValue> candidates;
      for (const auto& p : *const_divs)
        for (const auto& q : *lead_divs) {
          mpq_class r(p, q);
          r.canonicalize();
          candidates.push_back(RingValue(K, r));
          candidates.push_back(RingValue(K, mpq_class(-r)));
        }
      std::sort(candidates.begin(), candidates.end(), value_less);
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      for (const auto& lambda : candidates) {
        if (rem.degree() < 1) break;
        if (lambda.is_zero()) continue;
        int mult = root_multiplicity(rem, lambda);
        if (mult > 0) out.eigenvalues.emplace_back(lambda, mult);
      }
    }
    out.complete = searched_all && rem.degree() == 0;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& x, const auto& y) {
              return value_less(x.first, y.first);
            });
  return out;
}

std::vector<std::vector<RingValue>> generalized_eigenspace(
    const Matrix& a, const RingValue& lambda) {
  require_field_ring(a, "generalized_eigenspace");
  Matrix shifted = a;
  for (int i = 0; i < a.n(); ++i)
    shifted.at(i, i) = shifted.at(i, i) - lambda;
  Matrix power = mat_pow(shifted, a.n());
  auto basis = kernel_basis(power);
  if (basis.empty())
    throw std::invalid_argument("lambda is not an eigenvalue");
  return basis;
}

CheckReport eigenstructure_compare(const Matrix& a, const Matrix& b) {
  CheckReport r;
  r.check_id = "eigenstructure-compare";
  require_field_ring(a, "eigenstructure_compare");
  SpectralData sa = eigenvalues_in_field(a);
  SpectralData sb = eigenvalues_in_field(b);
  if (!sa.complete || !sb.complete) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "incomplete spectrum over the base field";
    return r;
  }
  r.metric("n", static_cast<std::int64_t>(a.n()));
  r.metric("eigenvalues_a", static_cast<std::int64_t>(sa.eigenvalues.size()));
  bool spectra_equal = sa.eigenvalues.size() == sb.eigenvalues.size();
  if (spectra_equal)
    for (std::size_t i = 0; i < sa.eigenvalues.size(); ++i)
      if (sa.eigenvalues[i].first != sb.eigenvalues[i].first ||
          sa.eigenvalues[i].second != sb.eigenvalues[i].second)
        spectra_equal = false;
  r.metric("spectra_equal", static_cast<std::int64_t>(spectra_equal));
  if (!spectra_equal) {
    r.status = CheckReport::Status::Fail;
    r.detail = "spectra differ";
    return r;
  }
  const RingSpec& K = a.ring();
  for (const auto& [lambda, mult] : sa.eigenvalues) {
    auto ea = generalized_eigenspace(a, lambda);
    auto eb = generalized_eigenspace(b, lambda);
    auto ca = span_canonical_basis(ea, a.n(), K);
    auto cb = span_canonical_basis(eb, b.n(), K);
    if (ca != cb) {
      r.status = CheckReport::Status::Fail;
      r.detail = "generalized eigenspaces differ at lambda = " + lambda.str();
      return r;
    }
  }
  r.metric("eigenspaces_equal", 1);
  r.status = CheckReport::Status::Pass;
  return r;
}

std::optional<CommonEigenvector> common_eigenvector(const Matrix& a,
                                                    const Matrix& b) {
  require_field_ring(a, "common_eigenvector");
  SpectralData sa = eigenvalues_in_field(a);
  SpectralData sb = eigenvalues_in_field(b);
  if (!sa.complete || !sb.complete)
    throw std::domain_error("common_eigenvector needs complete spectra");
  const RingSpec& K = a.ring();
  const int n = a.n();
  for (const auto& [la, ma] : sa.eigenvalues) {
    for (const auto& [lb, mb] : sb.eigenvalues) {
      // kernel of the stacked system (A - la I; B - lb I)
      std::vector<std::vector<RingValue>> rows;
      rows.reserve(2 * n);
      for (int i = 0; i < n; ++i) {
        std::vector<RingValue> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) {
          RingValue v = a.at(i, j);
          if (i == j) v = v - la;
          row.push_back(std::move(v));
        }
        rows.push_back(std::move(row));
      }
      for (int i = 0; i < n; ++i) {
        std::vector<RingValue> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) {
          RingValue v = b.at(i, j);
          if (i == j) v = v - lb;
          row.push_back(std::move(v));
        }
        rows.push_back(std::move(row));
      }
      auto kernel = kernel_of_rows(std::move(rows), n, K);
      if (!kernel.empty())
        return CommonEigenvector{kernel.front(), la, lb};
    }
  }
  return std::nullopt;
}

namespace {

// extends v to an invertible matrix whose first column is v, filling with
// standard basis vectors chosen greedily
Matrix complete_basis(const std::vector<RingValue>& v, const RingSpec& K) {
  const int n = static_cast<int>(v.size());
  std::vector<std::vector<RingValue>> chosen;  // as rows for rank tests
  chosen.push_back(v);
  std::vector<std::vector<RingValue>> columns{v};
  for (int i = 0; i < n && static_cast<int>(columns.size()) < n; ++i) {
    std::vector<RingValue> ei(n, K.zero());
    ei[i] = K.one();
    auto trial = chosen;
    trial.push_back(ei);
    auto reduced = trial;
    if (rref_in_place(reduced, K).size() == trial.size()) {
      chosen = std::move(trial);
      columns.push_back(std::move(ei));
    }
  }
  if (static_cast<int>(columns.size()) != n)
    throw std::logic_error("could not complete basis");
  Matrix q(K, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) q.at(i, j) = columns[j][i];
  return q;
}

struct DeflationOutcome {
  bool ok = false;
  Matrix p;
  int failed_stage = -1;
  std::string incomplete_reason;

  DeflationOutcome() : p(RingSpec::rationals(), 1) {}
};

DeflationOutcome deflate(const Matrix& a, const Matrix& b, int stage) {
  DeflationOutcome out;
  const RingSpec& K = a.ring();
  const int n = a.n();
  SpectralData sa = eigenvalues_in_field(a);
  SpectralData sb = eigenvalues_in_field(b);
  if (!sa.complete || !sb.complete) {
    out.incomplete_reason =
        "spectrum does not split over the base field at stage " +
        std::to_string(stage);
    return out;
  }
  if (n == 1) {
    out.ok = true;
    out.p = Matrix::identity(K, 1);
    return out;
  }
  auto ce = common_eigenvector(a, b);
  if (!ce) {
    out.failed_stage = stage;
    return out;
  }
  Matrix q = complete_basis(ce->vector, K);
  Matrix qinv = inverse(q);
  Matrix a1 = mul(mul(qinv, a), q);
  Matrix b1 = mul(mul(qinv, b), q);
  Matrix asub(K, n - 1), bsub(K, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      asub.at(i - 1, j - 1) = a1.at(i, j);
      bsub.at(i - 1, j - 1) = b1.at(i, j);
    }
  DeflationOutcome rec = deflate(asub, bsub, stage + 1);
  if (!rec.ok) return rec;
  Matrix ext = Matrix::identity(K, n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) ext.at(i, j) = rec.p.at(i - 1, j - 1);
  out.ok = true;
  out.p = mul(q, ext);
  return out;
}

}  // namespace

TriangularizationResult simultaneous_triangularization(const Matrix& a,
                                                       const Matrix& b) {
  require_field_ring(a, "simultaneous_triangularization");
  if (a.ring() != b.ring() || a.n() != b.n())
    throw std::invalid_argument("pair shape mismatch");
  TriangularizationResult result;
  DeflationOutcome out = deflate(a, b, 0);
  if (!out.incomplete_reason.empty()) {
    result.status = TriangularizationResult::Status::Incomplete;
    result.reason = out.incomplete_reason;
    return result;
  }
  if (!out.ok) {
    result.status = TriangularizationResult::Status::NotST;
    result.stage = out.failed_stage;
    return result;
  }
  Matrix pinv = inverse(out.p);
  Matrix ta = mul(mul(pinv, a), out.p);
  Matrix tb = mul(mul(pinv, b), out.p);
  if (!ta.is_upper_triangular() || !tb.is_upper_triangular())
    throw std::logic_error("deflation produced a non-triangular certificate");
  result.status = TriangularizationResult::Status::ST;
  result.p = out.p;
  return result;
}

CheckReport lie_solvability_check(const Matrix& a, const Matrix& b,
                                  const std::optional<UniPoly>& f) {
  CheckReport r;
  r.check_id = "lie-solvability";
  require_field_ring(a, "lie_solvability_check");
  const RingSpec& K = a.ring();
  const int n = a.n();
  bool premise_checked = false, premise_holds = false;
  if (f) {
    premise_checked = true;
    premise_holds = commutator(a, b) == eval_poly_at_matrix(*f, a);
    r.metric("premise_holds", static_cast<std::int64_t>(premise_holds));
    if (!premise_holds) {
      r.status = CheckReport::Status::Inconclusive;
      r.detail = "[A,B] != f(A)";
      return r;
    }
  }
  // V = span{B, I, A, ..., A^(n-1)}
  std::vector<Matrix> v_gens{b};
  Matrix p = Matrix::identity(K, n);
  for (int i = 0; i < n; ++i) {
    v_gens.push_back(p);
    p = mul(p, a);
  }
  std::vector<std::vector<RingValue>> poly_span;  // K[A] as vectors
  for (std::size_t i = 1; i < v_gens.size(); ++i)
    poly_span.push_back(matrix_as_vector(v_gens[i]));
  auto poly_canon = span_canonical_basis(poly_span, n * n, K);
  int dim_poly = static_cast<int>(poly_canon.size());

  std::vector<std::vector<RingValue>> v_span;
  for (const auto& g : v_gens) v_span.push_back(matrix_as_vector(g));
  int dim_v =
      static_cast<int>(span_canonical_basis(v_span, n * n, K).size());

  std::vector<Matrix> v1_gens;
  for (std::size_t i = 0; i < v_gens.size(); ++i)
    for (std::size_t j = i + 1; j < v_gens.size(); ++j) {
      Matrix c = commutator(v_gens[i], v_gens[j]);
      if (!c.is_zero()) v1_gens.push_back(std::move(c));
    }
  bool v1_in_poly = true;
  std::vector<std::vector<RingValue>> v1_span;
  for (const auto& g : v1_gens) {
    v1_span.push_back(matrix_as_vector(g));
    auto extended = poly_span;
    extended.push_back(matrix_as_vector(g));
    if (static_cast<int>(span_canonical_basis(extended, n * n, K).size()) !=
        dim_poly)
      v1_in_poly = false;
  }
  int dim_v1 =
      static_cast<int>(span_canonical_basis(v1_span, n * n, K).size());

  bool v2_zero = true;
  int dim_v2 = 0;
  std::vector<std::vector<RingValue>> v2_span;
  for (std::size_t i = 0; i < v1_gens.size(); ++i)
    for (std::size_t j = i + 1; j < v1_gens.size(); ++j) {
      Matrix c = commutator(v1_gens[i], v1_gens[j]);
      if (!c.is_zero()) {
        v2_zero = false;
        v2_span.push_back(matrix_as_vector(c));
      }
    }
  dim_v2 = static_cast<int>(span_canonical_basis(v2_span, n * n, K).size());

  r.metric("dim_V", static_cast<std::int64_t>(dim_v));
  r.metric("dim_V1", static_cast<std::int64_t>(dim_v1));
  r.metric("dim_V2", static_cast<std::int64_t>(dim_v2));
  r.metric("v1_inside_polynomials_in_a", static_cast<std::int64_t>(v1_in_poly));
  if (premise_checked) {
    if (v1_in_poly && v2_zero) {
      r.status = CheckReport::Status::Pass;
    } else {
      r.status = CheckReport::Status::Fail;
      r.detail = "derived series does not collapse under [A,B] = f(A)";
    }
  } else {
    r.status = CheckReport::Status::Pass;  // profile recorded, no claim
    r.detail = "profile only (no f supplied)";
  }
  return r;
}

std::optional<Matrix> simultaneous_diagonalization(
    const Matrix& a, const Matrix& b, const std::optional<Matrix>& certificate) {
  if (a.ring() != b.ring() || a.n() != b.n())
    throw std::invalid_argument("pair shape mismatch");
  Matrix p = certificate ? *certificate : Matrix::identity(a.ring(), a.n());
  if (!certificate && !a.is_diagonal())
    throw std::invalid_argument(
        "A is not diagonal and no diagonalization certificate was supplied");
  Matrix pinv = inverse(p);
  Matrix d = mul(mul(pinv, a), p);
  if (!d.is_diagonal())
    throw std::invalid_argument("certificate does not diagonalize A");
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j) {
      if (i == j) continue;
      RingValue diff = d.at(i, i) - d.at(j, j);
      if (diff.is_zero() || is_zero_divisor(diff))
        throw std::invalid_argument(
            "eigenvalue difference is zero or a zero-divisor");
    }
  if (commutator(a, b) != Matrix(a.ring(), a.n()))
    throw std::invalid_argument("AB != BA");
  Matrix bd = mul(mul(pinv, b), p);
  if (!bd.is_diagonal()) return std::nullopt;  // falsification alarm
  return p;
}

UniPoly express_as_polynomial(const Matrix& a, const Matrix& b) {
  if (!a.is_diagonal())
    throw std::invalid_argument("express_as_polynomial expects diagonal A");
  const RingSpec& R = a.ring();
  const int n = a.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_unit(a.at(i, i) - a.at(j, j)))
        throw std::invalid_argument("eigenvalue differences must be units");
  if (commutator(a, b) != Matrix(R, n))
    throw std::invalid_argument("AB != BA");
  // AB = BA with unit differences forces B diagonal
  if (!b.is_diagonal())
    throw std::logic_error("commuting B is not diagonal despite unit gaps");
  // Lagrange interpolation through (lambda_i, mu_i)
  UniPoly acc = UniPoly::zero(R);
  for (int j = 0; j < n; ++j) {
    UniPoly basis = UniPoly::constant(R.one());
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      RingValue denom_inv = inverse(a.at(j, j) - a.at(i, i));
      basis = mul(basis, scale(denom_inv, UniPoly::linear_root(a.at(i, i))));
    }
    acc = add(acc, scale(b.at(j, j), basis));
  }
  if (eval_poly_at_matrix(acc, a) != b)
    throw std::logic_error("interpolant fails to reproduce B");
  if (acc.degree() > n - 1)
    throw std::logic_error("interpolant degree exceeds n-1");
  return acc;
}

CheckReport diago_commutation_check(const Matrix& a, const Matrix& b) {
  CheckReport r;
  r.check_id = "diago-commutation";
  if (!a.is_diagonal()) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "A is not diagonal";
    return r;
  }
  for (int i = 0; i < a.n(); ++i)
    for (int j = i + 1; j < a.n(); ++j) {
      RingValue diff = a.at(i, i) - a.at(j, j);
      if (diff.is_zero() || is_zero_divisor(diff)) {
        r.status = CheckReport::Status::Inconclusive;
        r.detail = "eigenvalue difference is zero or a zero-divisor";
        return r;
      }
    }
  Matrix c = commutator(a, b);
  Matrix c2 = commutator(a, c);
  bool premise = c2.is_zero();
  bool conclusion = c.is_zero();
  r.metric("a_commutes_with_bracket", static_cast<std::int64_t>(premise));
  r.metric("ab_commute", static_cast<std::int64_t>(conclusion));
  if (premise && !conclusion) {
    r.status = CheckReport::Status::Fail;
    r.detail = "A commutes with [A,B] but AB != BA; B = " + b.str();
    r.artifacts["b"] = b.to_strings();
  } else {
    r.status = CheckReport::Status::Pass;
  }
  return r;
}

CheckReport property_l_check(const Matrix& u, const Matrix& v,
                             const std::vector<RingValue>& samples) {
  CheckReport r;
  r.check_id = "property-l";
  require_field_ring(u, "property_l_check");
  const int n = u.n();
  UniPoly tn = UniPoly::monomial(u.ring().one(), n);
  if (charpoly(u) != tn || charpoly(v) != tn) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "unsupported: inputs are not both nilpotent";
    return r;
  }
  std::int64_t violations = 0;
  std::string first_violation;
  for (const auto& a : samples) {
    Matrix w = add(u, scale(a, v));
    if (charpoly(w) != tn) {
      ++violations;
      if (first_violation.empty()) first_violation = a.str();
    }
  }
  r.metric("samples", static_cast<std::int64_t>(samples.size()));
  r.metric("violations", violations);
  r.metric("property_l_holds", static_cast<std::int64_t>(violations == 0));
  if (violations > 0)
    r.detail = "U + aV not nilpotent first at a = " + first_violation;
  r.status = CheckReport::Status::Pass;  // measurement; claims live in callers
  return r;
}

}  // namespace commulab
