#include <doctest.h>

#include <set>

#include "commulab/equations.hpp"
#include "commulab/rng.hpp"
#include "commulab/spectral.hpp"
#include "commulab/symbolic.hpp"

using namespace commulab;

namespace {

Matrix half_jordan(const RingSpec& k) {
  Matrix b(k, 3);
  b.at(1, 2) = inverse(k.from_int(2));
  return b;
}

}  // namespace

TEST_CASE("residuals of the equation family") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = jordan_block(3, g5);
  Matrix b = half_jordan(g5);
  CHECK(residual(EquationId::square(), a, b).is_zero());

  RingSpec q = RingSpec::rationals();
  Matrix a4 = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                       {"1", "0", "3/4", "-3/4"},
                                       {"1", "0", "0", "0"},
                                       {"1", "0", "0", "0"}});
  CHECK(residual(EquationId::cube(), a4, jordan_block(4, q)).is_zero());

  CHECK(residual(EquationId::power_x(2), a, Matrix(g5, 3)).is_zero());

  // genBinom(2) agrees with the dedicated square form
  Rng rng(61);
  std::vector<RingValue> table = enumerate_ring(g5);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix u = random_matrix(rng, g5, 2, &table);
    Matrix v = random_matrix(rng, g5, 2, &table);
    CHECK(residual(EquationId::gen_binom(2), u, v) ==
          residual(EquationId::square(), u, v));
  }
  // binomial hypotheses: char 3 divides 3!, so k = 3 is rejected over GF(3)
  RingSpec g3 = parse_ring("GF:3");
  CHECK_THROWS_AS(
      residual(EquationId::cube(), jordan_block(3, g3), jordan_block(3, g3)),
      std::invalid_argument);
  // powerXg validates g(0) != 0
  CHECK_THROWS_AS(EquationId::power_xg(2, UniPoly::monomial(g5.one(), 1)),
                  std::invalid_argument);
}

TEST_CASE("the simN bridge to the square equation") {
  RingSpec g7 = parse_ring("GF:7");
  Matrix j = jordan_block(3, g7);
  Rng rng(67);
  std::vector<RingValue> table = enumerate_ring(g7);
  for (int rep = 0; rep < 10; ++rep) {
    RingValue p0 = table[1 + rng.below(5)];
    Matrix x = solve_jordan_fiber(3, 2, {p0, table[rng.below(7)]})
                   .matrices.front();
    // X solves X J - J X = X^2, i.e. N = X with B = J in the simN form
    CHECK(residual(EquationId::sim_n(), x, j).is_zero());
    // so (A, B) = (X + J, J) solves the square equation and is ST
    Matrix a = add(x, j);
    CHECK(residual(EquationId::square(), a, j).is_zero());
    CHECK(simultaneous_triangularization(a, j).is_st());
  }
}

TEST_CASE("shift invariance of binomial solutions") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = jordan_block(3, g5);
  Matrix b = half_jordan(g5);
  CHECK(shift_invariance_check(EquationId::square(), a, b, g5.from_int(2)));
  CHECK(shift_invariance_check(EquationId::square(), a, b, g5.zero()));

  RingSpec q = RingSpec::rationals();
  Matrix a4 = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                       {"1", "0", "3/4", "-3/4"},
                                       {"1", "0", "0", "0"},
                                       {"1", "0", "0", "0"}});
  CHECK(shift_invariance_check(EquationId::cube(), a4, jordan_block(4, q),
                               q.one()));
  // non-solutions are rejected
  CHECK_THROWS_AS(shift_invariance_check(EquationId::square(), a,
                                         Matrix::identity(g5, 3), g5.one()),
                  std::invalid_argument);
}

TEST_CASE("bracket power recurrence") {
  RingSpec g3 = parse_ring("GF:3");
  Matrix a = Matrix::from_strings(
      g3, {{"0", "1", "0"}, {"0", "0", "2"}, {"-1", "0", "0"}});
  Matrix b = Matrix::from_strings(
      g3, {{"0", "0", "0"}, {"0", "0", "-1"}, {"1", "0", "0"}});
  UniPoly f = UniPoly::monomial(g3.one(), 2);
  CHECK(recurrence_check(a, b, f, 1));
  CHECK(recurrence_check(a, b, f, 2));
  CHECK(recurrence_check(a, b, f, 3));  // both sides vanish: 3 = 0 and A^3 = I

  RingSpec g7 = parse_ring("GF:7");
  Rng rng(71);
  std::vector<RingValue> table = enumerate_ring(g7);
  for (int rep = 0; rep < 25; ++rep) {
    Matrix x = solve_jordan_fiber(3, 2, {table[1 + rng.below(5)],
                                         table[rng.below(7)]})
                   .matrices.front();
    UniPoly f7 = UniPoly::monomial(g7.one(), 2);
    for (int i = 1; i <= 5; ++i)
      CHECK(recurrence_check(x, jordan_block(3, g7), f7, i));
  }
  CHECK_THROWS_AS(
      recurrence_check(a, b, UniPoly::monomial(g3.one(), 1), 2),
      std::domain_error);
}

TEST_CASE("jordan fiber solver") {
  RingSpec g5 = parse_ring("GF:5");
  // all parameters zero: the zero solution
  CHECK(solve_jordan_fiber(3, 2, {g5.zero(), g5.zero()})
            .matrices.front()
            .is_zero());
  // n=2: X = c E_12
  SolutionFamily f2 = solve_jordan_fiber(2, 2, {g5.from_int(3)});
  CHECK(f2.matrices.front() ==
        Matrix::from_strings(g5, {{"0", "3"}, {"0", "0"}}));
  CHECK(f2.param_names == std::vector<std::string>{"x12"});

  // n=3, alpha=2 over GF(7): x23 = a (1+a)^{-1} for every valid a
  RingSpec g7 = parse_ring("GF:7");
  for (long av = 0; av <= 5; ++av) {
    RingValue a = g7.from_int(av);
    RingValue b = g7.from_int(2);
    SolutionFamily fam = solve_jordan_fiber(3, 2, {a, b});
    const Matrix& x = fam.matrices.front();
    CHECK(x.at(1, 2) == mul(a, inverse(add(g7.one(), a))));
    CHECK_FALSE(fam.derivation_trace.empty());
  }
  // a = -1 makes the pivot vanish
  try {
    solve_jordan_fiber(3, 2, {g7.from_int(6), g7.zero()});
    CHECK(false);
  } catch (const pivot_failure& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 2);
  }
  // alpha >= 3 marches with pivot 1
  SolutionFamily f43 = solve_jordan_fiber(4, 3, {g7.one(), g7.from_int(2),
                                                 g7.from_int(3)});
  Matrix x43 = f43.matrices.front();
  Matrix j4 = jordan_block(4, g7);
  CHECK(sub(sub(mul(x43, j4), mul(j4, x43)), mat_pow(x43, 3)).is_zero());

  CHECK_THROWS_AS(solve_jordan_fiber(3, 2, {parse_ring("Zmod:4").one(),
                                            parse_ring("Zmod:4").zero()}),
                  std::domain_error);
}

TEST_CASE("similarity to the full jordan block") {
  RingSpec g7 = parse_ring("GF:7");
  CHECK(jordan_fiber_similarity_check(
      solve_jordan_fiber(3, 2, {g7.one(), g7.zero()}).matrices.front()));
  CHECK_FALSE(jordan_fiber_similarity_check(Matrix(g7, 3)));
  RingSpec g5 = parse_ring("GF:5");
  CHECK(jordan_fiber_similarity_check(
      solve_jordan_fiber(2, 2, {g5.from_int(3)}).matrices.front()));
}

TEST_CASE("brute force enumeration") {
  RingSpec g7 = parse_ring("GF:7");
  Matrix a = Matrix::diagonal(g7, {g7.zero(), g7.one()});
  SolutionFamily sols = brute_force_solutions(EquationId::power_x(2), a);
  REQUIRE(sols.matrices.size() == 1);
  CHECK(sols.matrices.front().is_zero());

  // independent second pass over GF(2), compared as sets
  RingSpec g2 = parse_ring("GF:2");
  Matrix j2 = jordan_block(2, g2);
  SolutionFamily fast = brute_force_solutions(EquationId::power_x(2), j2);
  std::set<std::string> got;
  for (const auto& x : fast.matrices) got.insert(x.str());
  std::set<std::string> expect;
  for (int m = 0; m < 16; ++m) {
    Matrix x(g2, 2,
             {g2.from_int(m & 1), g2.from_int((m >> 1) & 1),
              g2.from_int((m >> 2) & 1), g2.from_int((m >> 3) & 1)});
    Matrix res = sub(commutator(j2, x), mul(x, x));
    if (res.is_zero()) expect.insert(x.str());
  }
  CHECK(got == expect);
  CHECK(got.count(Matrix(g2, 2).str()) == 1);  // X = 0 always solves

  // nilpotent-only filtering
  SolutionFamily nil =
      brute_force_solutions(EquationId::power_x(2), j2, true);
  for (const auto& x : nil.matrices)
    CHECK(matrix_nilindex(x, 2).has_value());

  CHECK_THROWS_AS(
      brute_force_solutions(EquationId::power_x(2),
                            Matrix(parse_ring("GF:5"), 3), false, 1000),
      budget_exceeded);
  CHECK_THROWS_AS(brute_force_solutions(EquationId::power_x(2),
                                        Matrix(RingSpec::integers(), 2)),
                  std::domain_error);
}

TEST_CASE("pair enumeration") {
  RingSpec g3 = parse_ring("GF:3");
  std::int64_t tautology_hits = 0;
  CheckReport taut = pair_enumeration(
      EquationId::square(), g3, 2,
      [&](const Matrix&, const Matrix&) {
        ++tautology_hits;
        return true;
      },
      "tautology");
  CHECK(taut.status == CheckReport::Status::Pass);
  CHECK(taut.metric_int("pairs_scanned") == 6561);
  CHECK(taut.metric_int("solutions") == tautology_hits);

  CheckReport commute_scan = pair_enumeration(
      EquationId::square(), g3, 2,
      [](const Matrix& a, const Matrix& b) {
        return commutator(a, b).is_zero();
      },
      "AB=BA");
  CHECK(commute_scan.status == CheckReport::Status::Pass);
  CHECK(commute_scan.metric_int("violations") == 0);

  // a falsifiable predicate produces FAIL with a certificate
  CheckReport fail = pair_enumeration(
      EquationId::square(), g3, 2,
      [](const Matrix& a, const Matrix&) { return !a.is_zero(); },
      "A != 0");
  CHECK(fail.status == CheckReport::Status::Fail);
  CHECK(fail.detail.find("A != 0") != std::string::npos);
}

TEST_CASE("generic symbolic system") {
  CoeffField q{0};
  std::vector<MultiPoly> gens = generic_system(EquationId::power_x(2), 2, q);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].vars()->size() == 8);
  // entry (1,1) carries the -x12 x21 term from -X^2
  const VarListPtr& vars = gens[0].vars();
  Monomial m(8, 0);
  auto index_of = [&](const std::string& name) {
    return std::find(vars->begin(), vars->end(), name) - vars->begin();
  };
  m[index_of("x12")] = 1;
  m[index_of("x21")] = 1;
  auto it = gens[0].terms().find(m);
  REQUIRE(it != gens[0].terms().end());
  CHECK(std::get<mpq_class>(it->second) == -1);
  // substituting X = 0 zeroes every generator
  std::vector<std::optional<Coeff>> zero_x(8);
  for (int v = 4; v < 8; ++v) zero_x[v] = coeff_from_long(q, 0);
  for (const auto& g : gens) CHECK(g.substitute(zero_x).is_zero());
  CHECK_THROWS_AS(generic_system(EquationId::square(), 2, q),
                  std::invalid_argument);
}

TEST_CASE("generic ideal membership") {
  CheckReport pos = generic_membership_check(2, 2, 3, 0);
  CHECK(pos.status == CheckReport::Status::Pass);
  CHECK(pos.metric_int("all_member") == 1);
  CheckReport neg = generic_membership_check(2, 2, 2, 0);
  CHECK(neg.metric_int("xij_power_member") == 0);
}

TEST_CASE("jacobson-type nilpotency") {
  RingSpec g5 = parse_ring("GF:5");
  Matrix a = Matrix::diagonal(g5, {g5.zero(), g5.one()});
  SolutionFamily sols = brute_force_solutions(EquationId::power_x(2), a);
  for (const auto& x : sols.matrices) {
    CheckReport r = jacobson_nilpotency_check(a, x, 2);
    CHECK(r.status == CheckReport::Status::Pass);
  }
  // X = 0 trivially
  CheckReport z = jacobson_nilpotency_check(a, Matrix(g5, 2), 2);
  CHECK(z.status == CheckReport::Status::Pass);
  // premise failure is inconclusive
  CheckReport pre = jacobson_nilpotency_check(a, Matrix::identity(g5, 2), 2);
  CHECK(pre.status == CheckReport::Status::Inconclusive);

  // over Z/9 the solutions are the diagonal mu with mu^2 = 0
  RingSpec z9 = parse_ring("Zmod:9");
  Matrix a9 = Matrix::diagonal(z9, {z9.zero(), z9.one()});
  SolutionFamily s9 = brute_force_solutions(EquationId::power_x(2), a9);
  CHECK(s9.matrices.size() == 9);
  for (const auto& x : s9.matrices) {
    CHECK(jacobson_nilpotency_check(a9, x, 2).status ==
          CheckReport::Status::Pass);
    CHECK(x.is_diagonal());
  }
}

TEST_CASE("nilpotent two-sided ideal sampling") {
  RingSpec z4 = parse_ring("Zmod:4");
  UniPoly g(z4, {z4.one(), z4.one()});
  EquationId eq = EquationId::power_xg(2, g);
  // hand-built noncommuting instance over Z/4
  Matrix a = Matrix::from_strings(z4, {{"0", "0"}, {"2", "2"}});
  Matrix x = Matrix::from_strings(z4, {{"0", "1"}, {"2", "0"}});
  REQUIRE(residual(eq, a, x).is_zero());
  REQUIRE(matrix_nilindex(x, 4).has_value());
  REQUIRE_FALSE(commutator(a, x).is_zero());
  CheckReport r = nilpotent_ideal_check(a, x, eq, 24, 7);
  CHECK(r.status == CheckReport::Status::Pass);

  // commuting instance: the ideal is zero
  Matrix xc = scale(z4.from_int(2), Matrix::identity(z4, 2));
  CheckReport rc = nilpotent_ideal_check(Matrix::identity(z4, 2), xc, eq, 8, 7);
  CHECK(rc.status == CheckReport::Status::Pass);
  CHECK(rc.metric_int("max_nilindex") == 1);

  // premise failure
  CheckReport pre =
      nilpotent_ideal_check(a, Matrix::identity(z4, 2), eq, 4, 7);
  CHECK(pre.status == CheckReport::Status::Inconclusive);
}

TEST_CASE("alpha reduction to the square case") {
  RingSpec g7 = parse_ring("GF:7");
  // alpha = 2 is the identity transformation
  Matrix x2 = solve_jordan_fiber(3, 2, {g7.one(), g7.zero()}).matrices.front();
  auto [a2, b2] = alpha_reduction(x2, jordan_block(3, g7), 2);
  CHECK(a2 == x2);
  CHECK(b2 == jordan_block(3, g7));

  // alpha = 3: (A^2, B/2) solves the square relation
  Matrix x3 = solve_jordan_fiber(4, 3, {g7.one(), g7.from_int(2), g7.zero()})
                  .matrices.front();
  auto [a1, b1] = alpha_reduction(x3, jordan_block(4, g7), 3);
  CHECK(commutator(a1, b1) == mul(a1, a1));

  // alpha - 1 must be a unit
  RingSpec z4 = parse_ring("Zmod:4");
  Matrix j = jordan_block(2, z4);
  Matrix zero(z4, 2);
  // (j, 0) solves AB - BA = A^3 = 0 trivially? j^3 = 0, [j,0] = 0: yes
  CHECK_THROWS_AS(alpha_reduction(j, zero, 3), std::domain_error);
}

TEST_CASE("block structure of nilpotent solutions") {
  // g(0) not a unit: X^alpha g(X) = 0 accepted while X^alpha != 0
  RingSpec z8 = parse_ring("Zmod:8");
  RingValue tau = z8.from_int(2);
  Matrix a = Matrix::diagonal(z8, {z8.zero(), z8.one()});
  Matrix x = scale(tau, Matrix::identity(z8, 2));
  EquationId eq = EquationId::power_xg(2, UniPoly::constant(tau));
  std::vector<BlockSpec> blocks{{z8.zero(), 1}, {z8.one(), 1}};
  CheckReport r =
      block_structure_check(a, x, blocks, Matrix::identity(z8, 2), eq);
  CHECK(r.status == CheckReport::Status::Pass);
  CHECK(r.metric_int("g0_unit") == 0);
  CHECK_FALSE(mul(x, x).is_zero());

  // hypothesis violations are inconclusive, not FAIL
  std::vector<BlockSpec> bad_blocks{{z8.zero(), 1}, {z8.from_int(4), 1}};
  Matrix a_bad = Matrix::diagonal(z8, {z8.zero(), z8.from_int(4)});
  CheckReport inc = block_structure_check(a_bad, x, bad_blocks,
                                          Matrix::identity(z8, 2), eq);
  CHECK(inc.status == CheckReport::Status::Inconclusive);

  // over Z/9 with g = 1: nilpotent solutions are diagonal with mu^2 = 0
  RingSpec z9 = parse_ring("Zmod:9");
  Matrix a9 = Matrix::diagonal(z9, {z9.zero(), z9.one()});
  EquationId eq9 = EquationId::power_xg(2, UniPoly::constant(z9.one()));
  std::vector<BlockSpec> blocks9{{z9.zero(), 1}, {z9.one(), 1}};
  std::vector<RingValue> elems = enumerate_ring(z9);
  int bound = matrix_nilpotency_bound(z9, 2);
  std::int64_t census = 0;
  for (const auto& e0 : elems)
    for (const auto& e1 : elems)
      for (const auto& e2 : elems)
        for (const auto& e3 : elems) {
          Matrix xx(z9, 2, {e0, e1, e2, e3});
          if (!matrix_nilindex(xx, bound)) continue;
          if (!residual(eq9, a9, xx).is_zero()) continue;
          ++census;
          CheckReport br = block_structure_check(
              a9, xx, blocks9, Matrix::identity(z9, 2), eq9);
          CHECK(br.status == CheckReport::Status::Pass);
          CHECK(xx.is_diagonal());
          CHECK(mul(xx.at(0, 0), xx.at(0, 0)).is_zero());
          CHECK(mul(xx.at(1, 1), xx.at(1, 1)).is_zero());
        }
  CHECK(census == 9);
}

TEST_CASE("residual is conjugation-equivariant") {
  RingSpec g7 = parse_ring("GF:7");
  Rng rng(73);
  std::vector<RingValue> table = enumerate_ring(g7);
  UniPoly g(g7, {g7.one(), g7.one()});
  std::vector<EquationId> eqs{EquationId::square(), EquationId::cube(),
                              EquationId::power_x(2),
                              EquationId::power_xg(2, g)};
  int done = 0;
  while (done < 30) {
    Matrix p = random_matrix(rng, g7, 3, &table);
    if (!is_invertible(p)) continue;
    ++done;
    Matrix a = random_matrix(rng, g7, 3, &table);
    Matrix x = random_matrix(rng, g7, 3, &table);
    for (const auto& eq : eqs) {
      Matrix lhs = residual(eq, conjugate(a, p), conjugate(x, p));
      Matrix rhs = conjugate(residual(eq, a, x), p);
      CHECK(lhs == rhs);
    }
  }
}
