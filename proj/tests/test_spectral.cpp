#include <doctest.h>

#include "commulab/equations.hpp"
#include "commulab/rng.hpp"
#include "commulab/spectral.hpp"

using namespace commulab;

namespace {

Matrix half_jordan(const RingSpec& k) {
  Matrix b(k, 3);
  b.at(1, 2) = inverse(k.from_int(2));
  return b;
}

bool upper_triangular_in_basis(const Matrix& m, const Matrix& p) {
  return mul(mul(inverse(p), m), p).is_upper_triangular();
}

}  // namespace

TEST_CASE("eigenvalues over GF(p)") {
  RingSpec g5 = parse_ring("GF:5");
  SpectralData j = eigenvalues_in_field(jordan_block(4, g5));
  CHECK(j.complete);
  REQUIRE(j.eigenvalues.size() == 1);
  CHECK(j.eigenvalues[0].first.is_zero());
  CHECK(j.eigenvalues[0].second == 4);

  SpectralData d = eigenvalues_in_field(
      Matrix::diagonal(g5, {g5.zero(), g5.one(), g5.from_int(2)}));
  CHECK(d.complete);
  CHECK(d.eigenvalues.size() == 3);

  RingSpec g3 = parse_ring("GF:3");
  Matrix a = Matrix::from_strings(
      g3, {{"0", "1", "0"}, {"0", "0", "2"}, {"-1", "0", "0"}});
  SpectralData s = eigenvalues_in_field(a);  // t^3 - 1 = (t-1)^3 in char 3
  CHECK(s.complete);
  REQUIRE(s.eigenvalues.size() == 1);
  CHECK(s.eigenvalues[0].first.is_one());
  CHECK(s.eigenvalues[0].second == 3);
}

TEST_CASE("eigenvalues over Q") {
  RingSpec q = RingSpec::rationals();
  Matrix d = Matrix::from_strings(q, {{"1/2", "0"}, {"0", "-3"}});
  SpectralData s = eigenvalues_in_field(d);
  CHECK(s.complete);
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0].first == q.parse_element("-3"));
  CHECK(s.eigenvalues[1].first == q.parse_element("1/2"));

  SpectralData j = eigenvalues_in_field(jordan_block(4, q));
  CHECK(j.complete);
  CHECK(j.eigenvalues[0].second == 4);

  // t^2 - 2 has no rational roots: incomplete, never a guess
  Matrix nr = Matrix::from_strings(q, {{"0", "2"}, {"1", "0"}});
  SpectralData inc = eigenvalues_in_field(nr);
  CHECK_FALSE(inc.complete);
  CHECK(inc.eigenvalues.empty());

  CHECK_THROWS_AS(eigenvalues_in_field(jordan_block(2, parse_ring("Zmod:4"))),
                  std::domain_error);
}

TEST_CASE("generalized eigenspaces") {
  RingSpec g5 = parse_ring("GF:5");
  CHECK(generalized_eigenspace(jordan_block(3, g5), g5.zero()).size() == 3);
  Matrix d = Matrix::diagonal(g5, {g5.zero(), g5.zero(), g5.one()});
  auto e0 = generalized_eigenspace(d, g5.zero());
  REQUIRE(e0.size() == 2);
  CHECK(e0[0][2].is_zero());
  CHECK(e0[1][2].is_zero());
  CHECK_THROWS_AS(generalized_eigenspace(d, g5.from_int(3)),
                  std::invalid_argument);
}

TEST_CASE("eigenstructure comparison") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = jordan_block(3, g5);
  Matrix b = half_jordan(g5);
  CHECK(eigenstructure_compare(a, a).status == CheckReport::Status::Pass);
  CHECK(eigenstructure_compare(a, b).status == CheckReport::Status::Pass);
  Matrix j2 = jordan_block(2, g5);
  Matrix d2 = Matrix::diagonal(g5, {g5.zero(), g5.one()});
  CheckReport differ = eigenstructure_compare(j2, d2);
  CHECK(differ.status == CheckReport::Status::Fail);

  // exhaustive: every solution pair of the k=2 binomial equation over GF(3)
  // has equal spectra and equal generalized eigenspaces (split ones checked)
  RingSpec g3 = parse_ring("GF:3");
  std::int64_t solutions = 0, skipped = 0;
  CheckReport scan = pair_enumeration(
      EquationId::square(), g3, 2,
      [&](const Matrix& aa, const Matrix& bb) {
        ++solutions;
        CheckReport c = eigenstructure_compare(aa, bb);
        if (c.status == CheckReport::Status::Inconclusive) {
          ++skipped;
          return true;
        }
        return c.status == CheckReport::Status::Pass;
      },
      "equal eigenstructure");
  CHECK(scan.status == CheckReport::Status::Pass);
  CHECK(solutions > 0);
  CHECK(solutions > skipped);
}

TEST_CASE("common eigenvectors") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix j2 = jordan_block(2, g5);
  auto ce = common_eigenvector(j2, j2);
  REQUIRE(ce.has_value());
  CHECK(ce->lambda_a.is_zero());
  CHECK(ce->lambda_b.is_zero());
  CHECK(ce->vector[0].is_one());
  CHECK(ce->vector[1].is_zero());

  CHECK(common_eigenvector(jordan_block(3, g5), half_jordan(g5)).has_value());

  RingSpec q = RingSpec::rationals();
  Matrix a = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                      {"1", "0", "3/4", "-3/4"},
                                      {"1", "0", "0", "0"},
                                      {"1", "0", "0", "0"}});
  CHECK_FALSE(common_eigenvector(a, jordan_block(4, q)).has_value());
}

TEST_CASE("simultaneous triangularization decision") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = jordan_block(3, g5);
  Matrix b = half_jordan(g5);
  TriangularizationResult st = simultaneous_triangularization(a, b);
  REQUIRE(st.is_st());
  CHECK(upper_triangular_in_basis(a, *st.p));
  CHECK(upper_triangular_in_basis(b, *st.p));

  RingSpec g3 = parse_ring("GF:3");
  Matrix a3 = Matrix::from_strings(
      g3, {{"0", "1", "0"}, {"0", "0", "2"}, {"-1", "0", "0"}});
  Matrix b3 = Matrix::from_strings(
      g3, {{"0", "0", "0"}, {"0", "0", "-1"}, {"1", "0", "0"}});
  TriangularizationResult nst = simultaneous_triangularization(a3, b3);
  CHECK(nst.status == TriangularizationResult::Status::NotST);
  CHECK(nst.stage == 0);

  RingSpec q = RingSpec::rationals();
  Matrix nr = Matrix::from_strings(q, {{"0", "2"}, {"1", "0"}});
  TriangularizationResult inc =
      simultaneous_triangularization(nr, Matrix::identity(q, 2));
  CHECK(inc.status == TriangularizationResult::Status::Incomplete);
}

TEST_CASE("lie solvability diagnostic") {
  RingSpec g7 = parse_ring("GF:7");
  Matrix x = solve_jordan_fiber(3, 2, {g7.one(), g7.from_int(2)})
                 .matrices.front();
  Matrix j = jordan_block(3, g7);
  UniPoly f = UniPoly::monomial(g7.one(), 2);
  CheckReport r = lie_solvability_check(x, j, f);
  CHECK(r.status == CheckReport::Status::Pass);
  CHECK(r.metric_int("dim_V2") == 0);
  CHECK(r.metric_int("v1_inside_polynomials_in_a") == 1);

  // commuting B: V1 inside K[A] trivially
  Matrix b = eval_poly_at_matrix(UniPoly(g7, {g7.one(), g7.from_int(3)}), x);
  CheckReport rc = lie_solvability_check(x, b, UniPoly::zero(g7));
  CHECK(rc.status == CheckReport::Status::Pass);

  // profile-only mode for a pair that is not of the form [A,B] = f(A)
  RingSpec q = RingSpec::rationals();
  Matrix a4 = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                       {"1", "0", "3/4", "-3/4"},
                                       {"1", "0", "0", "0"},
                                       {"1", "0", "0", "0"}});
  CheckReport prof = lie_solvability_check(a4, jordan_block(4, q), std::nullopt);
  CHECK(prof.status == CheckReport::Status::Pass);
  CHECK(prof.detail.find("profile") != std::string::npos);

  // premise failure is inconclusive
  CheckReport bad = lie_solvability_check(x, j, UniPoly::zero(g7));
  CHECK(bad.status == CheckReport::Status::Inconclusive);
}

TEST_CASE("simultaneous diagonalization over a ring") {
  RingSpec z9 = parse_ring("Zmod:9");
  Matrix a = Matrix::diagonal(z9, {z9.zero(), z9.one()});
  Matrix b = Matrix::diagonal(z9, {z9.from_int(4), z9.from_int(7)});
  auto p = simultaneous_diagonalization(a, b);
  REQUIRE(p.has_value());
  CHECK(p->is_diagonal());
  CHECK(simultaneous_diagonalization(a, a).has_value());

  // difference 3 is a zero-divisor in Z/9: hypothesis rejected
  Matrix bad = Matrix::diagonal(z9, {z9.zero(), z9.from_int(3)});
  CHECK_THROWS_AS(simultaneous_diagonalization(bad, b),
                  std::invalid_argument);
  // noncommuting pair rejected
  CHECK_THROWS_AS(simultaneous_diagonalization(a, jordan_block(2, z9)),
                  std::invalid_argument);
}

TEST_CASE("expressing a commuting matrix as a polynomial") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = Matrix::diagonal(g5, {g5.zero(), g5.one(), g5.from_int(2)});
  Matrix b = Matrix::diagonal(g5, {g5.one(), g5.from_int(2), g5.from_int(4)});
  UniPoly p = express_as_polynomial(a, b);
  CHECK(p == UniPoly(g5, {g5.one(), g5.from_int(3), g5.from_int(3)}));
  CHECK(eval_poly_at_matrix(p, a) == b);

  CHECK(express_as_polynomial(a, Matrix::identity(g5, 3)) ==
        UniPoly::constant(g5.one()));

  // B = A^2 at n = 2: Cayley-Hamilton reduces t^2 to (l1+l2) t - l1 l2
  RingSpec g7 = parse_ring("GF:7");
  Matrix a2 = Matrix::diagonal(g7, {g7.one(), g7.from_int(3)});
  UniPoly p2 = express_as_polynomial(a2, mul(a2, a2));
  CHECK(p2 == UniPoly(g7, {g7.from_int(-3), g7.from_int(4)}));
  CHECK(eval_poly_at_matrix(p2, a2) == mul(a2, a2));

  // unit-difference hypothesis
  RingSpec z9 = parse_ring("Zmod:9");
  Matrix bad = Matrix::diagonal(z9, {z9.zero(), z9.from_int(3)});
  CHECK_THROWS_AS(express_as_polynomial(bad, bad), std::invalid_argument);
}

TEST_CASE("commuting-with-the-bracket implication") {
  RingSpec g3 = parse_ring("GF:3");
  Matrix a = Matrix::diagonal(g3, {g3.zero(), g3.one()});
  std::vector<RingValue> elems = enumerate_ring(g3);
  for (const auto& b11 : elems)
    for (const auto& b12 : elems)
      for (const auto& b21 : elems)
        for (const auto& b22 : elems) {
          Matrix b(g3, 2, {b11, b12, b21, b22});
          CHECK(diago_commutation_check(a, b).status ==
                CheckReport::Status::Pass);
        }
  // B commuting: both sides zero
  Matrix d = Matrix::diagonal(g3, {g3.one(), g3.from_int(2)});
  CheckReport r = diago_commutation_check(a, d);
  CHECK(r.metric_int("a_commutes_with_bracket") == 1);
  CHECK(r.metric_int("ab_commute") == 1);
  // zero-divisor gap is inconclusive
  RingSpec z9 = parse_ring("Zmod:9");
  CheckReport inc = diago_commutation_check(
      Matrix::diagonal(z9, {z9.zero(), z9.from_int(3)}),
      Matrix::identity(z9, 2));
  CHECK(inc.status == CheckReport::Status::Inconclusive);
}

TEST_CASE("property L for nilpotent pairs") {
  RingSpec q = RingSpec::rationals();
  Matrix a = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                      {"1", "0", "3/4", "-3/4"},
                                      {"1", "0", "0", "0"},
                                      {"1", "0", "0", "0"}});
  Matrix b = jordan_block(4, q);
  CheckReport fail = property_l_check(a, b, {q.one(), q.from_int(2)});
  CHECK(fail.metric_int("property_l_holds") == 0);
  CHECK(fail.metric_int("violations") == 2);

  Matrix zero(q, 4);
  CheckReport hold = property_l_check(a, zero, {q.one(), q.from_int(5)});
  CHECK(hold.metric_int("property_l_holds") == 1);

  // an ST nilpotent pair has property L
  RingSpec g7 = parse_ring("GF:7");
  Matrix x = solve_jordan_fiber(3, 2, {g7.one(), g7.zero()}).matrices.front();
  std::vector<RingValue> samples;
  for (long v = 0; v < 7; ++v) samples.push_back(g7.from_int(v));
  CheckReport st_pair = property_l_check(x, jordan_block(3, g7), samples);
  CHECK(st_pair.metric_int("property_l_holds") == 1);

  // non-nilpotent input is unsupported
  CheckReport unsup =
      property_l_check(Matrix::identity(q, 2), Matrix(q, 2), {q.one()});
  CHECK(unsup.status == CheckReport::Status::Inconclusive);
}
