#include "commulab/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "commulab/equations.hpp"
#include "commulab/groebner.hpp"
#include "commulab/matrix.hpp"
#include "commulab/ring.hpp"
#include "commulab/rng.hpp"
#include "commulab/spectral.hpp"
#include "commulab/symbolic.hpp"
#include "commulab/unipoly.hpp"

namespace commulab {

namespace {

struct Ctx {
  std::uint64_t seed = 0;
  std::optional<std::string> ring_override;
  std::uint64_t enum_budget = 20000000;
  GroebnerOptions gopts;
};

RingSpec ctx_ring(const Ctx& ctx, const char* dflt) {
  return parse_ring(ctx.ring_override ? *ctx.ring_override : dflt);
}

// Collects assertions; FAIL records the first violated one, and a check can
// only PASS after at least one executed assertion.
class Asserter {
 public:
  explicit Asserter(CheckReport& r) : r_(r) {}

  void require(bool ok, const std::string& what) {
    ++executed_;
    if (!ok) {
      ++failed_;
      if (r_.status != CheckReport::Status::Fail) {
        r_.status = CheckReport::Status::Fail;
        r_.detail = "violated: " + what;
      }
    }
  }

  /// A failed hypothesis makes the whole check INCONCLUSIVE (the claim was
  /// never exercised), never FAIL. Returns ok so callers can bail out.
  bool hypothesis(bool ok, const std::string& what) {
    if (!ok) {
      hypothesis_failed_ = true;
      if (r_.status != CheckReport::Status::Fail) {
        r_.status = CheckReport::Status::Inconclusive;
        r_.detail = "hypothesis: " + what;
      }
    }
    return ok;
  }

  std::int64_t executed() const { return executed_; }

  void finish() {
    r_.metric("executed_assertions", executed_);
    if (r_.status == CheckReport::Status::Fail) return;
    if (hypothesis_failed_) return;  // stays INCONCLUSIVE
    if (executed_ == 0) {
      r_.status = CheckReport::Status::Inconclusive;
      if (r_.detail.empty()) r_.detail = "no assertion executed";
    } else {
      r_.status = CheckReport::Status::Pass;
    }
  }

 private:
  CheckReport& r_;
  std::int64_t executed_ = 0;
  std::int64_t failed_ = 0;
  bool hypothesis_failed_ = false;
};

bool commute(const Matrix& a, const Matrix& b) {
  return commutator(a, b).is_zero();
}

// diag(0, J_2 / 2): the classic noncommuting 3x3 partner of J_3
Matrix half_jordan_witness(const RingSpec& k) {
  Matrix b(k, 3);
  b.at(1, 2) = inverse(k.from_int(2));
  return b;
}

// (X, J_n) with [X, J_n] = X^alpha, random nonzero parameters; resamples on
// pivot failure
Matrix fiber_solution(const RingSpec& k, int n, int alpha, Rng& rng,
                      const std::vector<RingValue>& elems) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<RingValue> params;
    for (int i = 0; i < n - 1; ++i)
      params.push_back(elems[rng.below(elems.size())]);
    if (params[0].is_zero()) params[0] = k.one();
    try {
      return solve_jordan_fiber(n, alpha, params).matrices.front();
    } catch (const pivot_failure&) {
      continue;
    }
  }
  throw std::runtime_error("could not sample a fiber solution");
}

// ---------------------------------------------------------------------------
// T series

CheckReport check_t1(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  for (const char* ring : {"GF:3", "GF:5"}) {
    RingSpec k = parse_ring(ring);
    CheckReport e = pair_enumeration(EquationId::square(), k, 2, commute,
                                     "AB=BA", ctx.enum_budget);
    as.require(e.status == CheckReport::Status::Pass,
               std::string(ring) + ": a 2x2 solution pair does not commute");
    r.metric(std::string(ring) + "_pairs", e.metric_int("pairs_scanned"));
    r.metric(std::string(ring) + "_solutions", e.metric_int("solutions"));
  }
  as.finish();
  return r;
}

CheckReport check_t2(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  RingSpec k = parse_ring("GF:5");
  std::int64_t st_checked = 0, skipped_nonsplit = 0;
  CheckReport e = pair_enumeration(
      EquationId::square(), k, 2,
      [&](const Matrix& a, const Matrix& b) {
        SpectralData sa = eigenvalues_in_field(a);
        SpectralData sb = eigenvalues_in_field(b);
        if (!sa.complete || !sb.complete) {
          ++skipped_nonsplit;
          return true;
        }
        ++st_checked;
        return simultaneous_triangularization(a, b).is_st();
      },
      "split-spectrum solutions are ST", ctx.enum_budget);
  as.require(e.status == CheckReport::Status::Pass,
             "a split-spectrum 2x2 solution is not ST");
  as.require(st_checked > 0, "no split-spectrum solution was exercised");
  r.metric("st_checked", st_checked);
  r.metric("skipped_nonsplit", skipped_nonsplit);
  for (const char* ring : {"GF:5", "GF:7"}) {
    RingSpec kk = parse_ring(ring);
    Matrix a = jordan_block(3, kk);
    Matrix b = half_jordan_witness(kk);
    as.require(residual(EquationId::square(), a, b).is_zero(),
               std::string(ring) + ": witness pair is not a solution");
    as.require(simultaneous_triangularization(a, b).is_st(),
               std::string(ring) + ": witness pair not ST");
  }
  as.finish();
  return r;
}

CheckReport check_t3(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  Rng rng(ctx.seed);
  std::int64_t fiber_pairs = 0, commuting_pairs = 0;
  for (const char* ring : {"GF:7", "GF:11"}) {
    RingSpec k = parse_ring(ring);
    std::vector<RingValue> elems = enumerate_ring(k);
    for (int n : {2, 3}) {
      for (int alpha : {2, 3}) {
        for (int rep = 0; rep < 8; ++rep) {
          Matrix x = fiber_solution(k, n, alpha, rng, elems);
          Matrix j = jordan_block(n, k);
          UniPoly f = UniPoly::monomial(k.one(), alpha);
          bool rec = true;
          for (int i = 1; i <= 5; ++i)
            rec = rec && recurrence_check(x, j, f, i);
          as.require(rec, "bracket recurrence fails on a fiber pair");
          as.require(simultaneous_triangularization(x, j).is_st(),
                     "fiber pair not ST");
          as.require(
              matrix_nilindex(commutator(x, j), n + 1).has_value(),
              "[A,B] = A^alpha is not nilpotent on a fiber pair");
          ++fiber_pairs;
        }
      }
      // commuting constructions B = p(A), f = 0
      for (int rep = 0; rep < 8; ++rep) {
        Matrix a = random_strict_upper(rng, k, n, &elems);
        for (int i = 0; i < n; ++i)
          a.at(i, i) = elems[rng.below(elems.size())];
        std::vector<RingValue> coeffs;
        for (int i = 0; i < n; ++i)
          coeffs.push_back(elems[rng.below(elems.size())]);
        Matrix b = eval_poly_at_matrix(UniPoly(k, coeffs), a);
        UniPoly f = UniPoly::zero(k);
        bool rec = true;
        for (int i = 1; i <= 5; ++i) rec = rec && recurrence_check(a, b, f, i);
        as.require(rec, "recurrence fails on a commuting pair");
        as.require(simultaneous_triangularization(a, b).is_st(),
                   "commuting triangular pair not ST");
        ++commuting_pairs;
      }
    }
  }
  r.metric("fiber_pairs", fiber_pairs);
  r.metric("commuting_pairs", commuting_pairs);
  as.finish();
  return r;
}

CheckReport check_t4(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  RingSpec k = parse_ring("GF:7");
  Rng rng(ctx.seed);
  RingValue third = inverse(k.from_int(3));
  std::int64_t samples = 0;
  for (int rep = 0; rep < 100; ++rep) {
    // a notin {0, -1} keeps the pair noncommuting and the pivot alive
    RingValue a = k.from_int(1 + static_cast<long>(rng.below(5)));
    RingValue b = k.from_int(static_cast<long>(rng.below(7)));
    RingValue mu = k.from_int(static_cast<long>(rng.below(7)));
    Matrix x = solve_jordan_fiber(3, 2, {a, b}).matrices.front();
    Matrix j = jordan_block(3, k);
    Matrix shift = scale(mu, Matrix::identity(k, 3));
    Matrix am = add(add(x, j), shift);
    Matrix bm = add(j, shift);
    as.require(residual(EquationId::square(), am, bm).is_zero(),
               "constructed pair does not solve the square equation");
    as.require(!commute(am, bm), "constructed pair unexpectedly commutes");
    SpectralData sa = eigenvalues_in_field(am);
    SpectralData sb = eigenvalues_in_field(bm);
    as.require(sa.has_sole_eigenvalue() && sa.eigenvalues[0].first == mu &&
                   sa.eigenvalues[0].second == 3,
               "A does not have the sole eigenvalue mu");
    as.require(sb.has_sole_eigenvalue() && sb.eigenvalues[0].first == mu,
               "B does not have the sole eigenvalue mu");
    as.require(mul(third, trace(am)) == mu,
               "sole eigenvalue != trace(A)/3");
    auto st = simultaneous_triangularization(am, bm);
    as.require(st.is_st(), "noncommuting solution not ST");
    if (st.is_st()) {
      Matrix pinv = inverse(*st.p);
      Matrix ta = mul(mul(pinv, am), *st.p);
      bool diag_const = true;
      for (int i = 0; i < 3; ++i) diag_const &= ta.at(i, i) == mu;
      as.require(diag_const, "triangular form diagonal is not constant");
    }
    ++samples;
  }
  RingSpec g5 = parse_ring("GF:5");
  Matrix aw = jordan_block(3, g5);
  Matrix bw = half_jordan_witness(g5);
  as.require(!commute(aw, bw), "witness pair commutes");
  SpectralData sw = eigenvalues_in_field(aw);
  as.require(sw.has_sole_eigenvalue() && sw.eigenvalues[0].first.is_zero(),
             "witness sole eigenvalue is not 0 = trace/3");
  r.metric("samples", samples);
  as.finish();
  return r;
}

CheckReport check_t5(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  {
    RingSpec k = ctx_ring(ctx, "GF:5");
    Matrix a = Matrix::diagonal(
        k, {k.zero(), k.one(), k.from_int(2)});
    auto sols =
        brute_force_solutions(EquationId::power_x(2), a, false, ctx.enum_budget);
    as.require(sols.matrices.size() == 1, "more than one solution at n=3");
    as.require(!sols.matrices.empty() && sols.matrices.front().is_zero(),
               "nonzero solution at n=3");
    r.metric("n3_solutions", static_cast<std::int64_t>(sols.matrices.size()));
  }
  RingSpec k7 = parse_ring("GF:7");
  Matrix a7 = Matrix::diagonal(k7, {k7.zero(), k7.one()});
  for (int alpha : {2, 3}) {
    auto sols = brute_force_solutions(EquationId::power_x(alpha), a7, false,
                                      ctx.enum_budget);
    as.require(sols.matrices.size() == 1 && sols.matrices.front().is_zero(),
               "alpha=" + std::to_string(alpha) + ": X=0 is not the sole solution");
  }
  as.finish();
  return r;
}

CheckReport check_t6(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  Rng rng(ctx.seed);
  std::int64_t sampled = 0;
  for (const char* ring : {"Prod:GF:3,GF:5", "Prod:GF:5,GF:7"}) {
    RingSpec rr = ctx.ring_override ? parse_ring(*ctx.ring_override)
                                    : parse_ring(ring);
    if (!as.hypothesis(rr.is_reduced(), "test ring is not reduced")) break;
    RingValue two = factorial_in_ring(rr, 2);
    if (!as.hypothesis(!is_zero_divisor(two) && !two.is_zero(),
                       "n! is a zero-divisor in the test ring"))
      break;
    std::vector<RingValue> elems = enumerate_ring(rr);
    int accepted = 0;
    for (int attempt = 0; attempt < 400 && accepted < 3; ++attempt) {
      Matrix a = random_matrix(rng, rr, 2, &elems);
      UniPoly chi = charpoly(a);
      RingValue disc = resultant(chi, chi.derivative());
      if (!is_unit(disc)) continue;  // genericity proxy: distinct eigenvalues
      ++accepted;
      ++sampled;
      auto sols = brute_force_solutions(EquationId::power_x(2), a, false,
                                        ctx.enum_budget);
      as.require(sols.matrices.size() == 1 && sols.matrices.front().is_zero(),
                 std::string(ring) + ": X=0 is not the sole solution");
    }
    as.hypothesis(accepted == 3, std::string(ring) +
                                     ": could not sample 3 generic matrices");
    if (ctx.ring_override) break;
  }
  r.metric("sampled_generic_a", sampled);
  r.metric("genericity", "sampled: random A filtered for unit discriminant");
  as.finish();
  return r;
}

CheckReport check_t7(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  std::int64_t max_nilindex = 0, total_solutions = 0;
  for (const char* ring : {"Zmod:9", "Zmod:25"}) {
    RingSpec rr = ctx.ring_override ? parse_ring(*ctx.ring_override)
                                    : parse_ring(ring);
    RingValue two = factorial_in_ring(rr, 2);
    if (!as.hypothesis(!is_zero_divisor(two) && !two.is_zero(),
                       "2 is a zero-divisor in the test ring"))
      break;
    Matrix a = Matrix::diagonal(rr, {rr.zero(), rr.one()});
    auto sols = brute_force_solutions(EquationId::power_x(2), a, false,
                                      ctx.enum_budget);
    total_solutions += static_cast<std::int64_t>(sols.matrices.size());
    int bound = matrix_nilpotency_bound(rr, 2);
    for (const Matrix& x : sols.matrices) {
      auto nil = matrix_nilindex(x, bound);
      as.require(nil.has_value(), "a solution is not nilpotent");
      if (nil) max_nilindex = std::max<std::int64_t>(max_nilindex, *nil);
      CheckReport jr = jacobson_nilpotency_check(a, x, 2);
      as.require(jr.status == CheckReport::Status::Pass,
                 "Jacobson-type identity fails on a solution");
    }
    if (ctx.ring_override) break;
  }
  r.metric("solutions", total_solutions);
  r.metric("max_nilindex", max_nilindex);
  as.finish();
  return r;
}

CheckReport check_t8(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  for (int alpha : {2, 3}) {
    CheckReport pos =
        generic_membership_check(2, alpha, 2 * alpha - 1, 0, ctx.gopts);
    if (pos.status == CheckReport::Status::Inconclusive) {
      r.status = CheckReport::Status::Inconclusive;
      r.detail = pos.detail;
      return r;
    }
    as.require(pos.metric_int("all_member") == 1,
               "alpha=" + std::to_string(alpha) +
                   ": membership of X^alpha entries or x^(2a-1) fails");
    CheckReport neg =
        generic_membership_check(2, alpha, 2 * alpha - 2, 0, ctx.gopts);
    as.require(neg.metric_int("xij_power_member") == 0,
               "alpha=" + std::to_string(alpha) +
                   ": negative control x^(2a-2) is unexpectedly a member");
    r.metric("alpha" + std::to_string(alpha) + "_basis",
             pos.metric_int("basis_size"));
  }
  as.finish();
  return r;
}

CheckReport check_t9(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  // probe the conjectured exponent (alpha-1)n+1 at n=2, alpha=4 (the case
  // the proposition leaves to the 5!-hypothesis)
  const int n = 2, alpha = 4, exponent = (alpha - 1) * n + 1;
  CheckReport pos = generic_membership_check(n, alpha, exponent, 0, ctx.gopts);
  if (pos.status == CheckReport::Status::Inconclusive) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = pos.detail;
    return r;
  }
  as.require(pos.metric_int("all_member") == 1,
             "membership fails at the conjectured exponent");
  CheckReport neg =
      generic_membership_check(n, alpha, exponent - 1, 0, ctx.gopts);
  as.require(neg.metric_int("xij_power_member") == 0,
             "exponent-1 negative control is unexpectedly a member");
  r.metric("exponent", static_cast<std::int64_t>(exponent));
  r.metric("basis_size", pos.metric_int("basis_size"));
  as.finish();
  return r;
}

CheckReport check_t10(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  Rng rng(ctx.seed);
  // (a) exhaustive instances over Z/4 with g = 1 + t
  RingSpec z4 = parse_ring("Zmod:4");
  UniPoly g4(z4, {z4.one(), z4.one()});
  EquationId eq4 = EquationId::power_xg(2, g4);
  std::vector<RingValue> elems = enumerate_ring(z4);
  const int bound = matrix_nilpotency_bound(z4, 2);
  std::int64_t instances = 0, noncommuting = 0;
  std::int64_t max_nil = 0;
  {
    std::vector<RingValue> cell(8, elems[0]);
    std::vector<std::size_t> idx(8, 0);
    for (;;) {
      Matrix a(z4, 2, {cell[0], cell[1], cell[2], cell[3]});
      Matrix x(z4, 2, {cell[4], cell[5], cell[6], cell[7]});
      if (matrix_nilindex(x, bound) && residual(eq4, a, x).is_zero()) {
        ++instances;
        if (!commute(a, x)) ++noncommuting;
        CheckReport ir = nilpotent_ideal_check(a, x, eq4, 12, rng.next());
        as.require(ir.status == CheckReport::Status::Pass,
                   "a sampled ideal element is not nilpotent over Z/4");
        max_nil = std::max(max_nil, ir.metric_int("max_nilindex"));
      }
      std::size_t i = 8;
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < elems.size()) {
          cell[i] = elems[idx[i]];
          done = false;
          break;
        }
        idx[i] = 0;
        cell[i] = elems[0];
      }
      if (done) break;
    }
  }
  as.require(instances > 0, "no nilpotent solutions found over Z/4");
  as.require(noncommuting > 0, "no noncommuting instance found over Z/4");
  // (b) field instances from the Jordan fiber, recast with g = 1
  RingSpec g7 = parse_ring("GF:7");
  std::vector<RingValue> elems7 = enumerate_ring(g7);
  UniPoly gone = UniPoly::constant(g7.one());
  EquationId eq7 = EquationId::power_xg(2, gone);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix x = fiber_solution(g7, 3, 2, rng, elems7);
    Matrix a = jordan_block(3, g7);
    CheckReport ir = nilpotent_ideal_check(a, x, eq7, 16, rng.next());
    as.require(ir.status == CheckReport::Status::Pass,
               "a sampled ideal element is not nilpotent over GF(7)");
  }
  r.metric("z4_instances", instances);
  r.metric("z4_noncommuting", noncommuting);
  r.metric("max_sampled_nilindex", max_nil);
  as.finish();
  return r;
}

CheckReport check_t11(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  Rng rng(ctx.seed);
  RingSpec z9 = ctx_ring(ctx, "Zmod:9");
  Matrix a9 = Matrix::diagonal(z9, {z9.zero(), z9.one()});
  std::vector<RingValue> elems = enumerate_ring(z9);
  std::int64_t commuting = 0;
  std::vector<std::size_t> idx(4, 0);
  for (;;) {
    Matrix b(z9, 2,
             {elems[idx[0]], elems[idx[1]], elems[idx[2]], elems[idx[3]]});
    if (commute(a9, b)) {
      ++commuting;
      auto p = simultaneous_diagonalization(a9, b);
      as.require(p.has_value(), "commuting B is not diagonal in A's basis");
      UniPoly poly = express_as_polynomial(a9, b);
      as.require(poly.degree() <= 1, "interpolant degree exceeds n-1");
      as.require(eval_poly_at_matrix(poly, a9) == b, "p(A) != B over Z/9");
    }
    std::size_t i = 4;
    bool done = true;
    while (i-- > 0) {
      if (++idx[i] < elems.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  as.require(commuting == 81, "unexpected commutant size over Z/9");
  r.metric("z9_commuting", commuting);

  RingSpec g5 = parse_ring("GF:5");
  Matrix a5 = Matrix::diagonal(g5, {g5.zero(), g5.one(), g5.from_int(2)});
  Matrix b5 = Matrix::diagonal(g5, {g5.one(), g5.from_int(2), g5.from_int(4)});
  UniPoly p5 = express_as_polynomial(a5, b5);
  UniPoly expect(g5, {g5.one(), g5.from_int(3), g5.from_int(3)});
  as.require(p5 == expect, "frozen interpolant 1 + 3t + 3t^2 mismatch");
  std::vector<RingValue> elems5 = enumerate_ring(g5);
  for (int rep = 0; rep < 50; ++rep) {
    Matrix b = Matrix::diagonal(g5, {elems5[rng.below(5)], elems5[rng.below(5)],
                                     elems5[rng.below(5)]});
    UniPoly p = express_as_polynomial(a5, b);
    as.require(eval_poly_at_matrix(p, a5) == b, "p(A) != B over GF(5)");
  }
  as.finish();
  return r;
}

CheckReport check_t12(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  for (const char* ring : {"GF:3", "Zmod:4"}) {
    RingSpec rr = ctx.ring_override ? parse_ring(*ctx.ring_override)
                                    : parse_ring(ring);
    Matrix a = Matrix::diagonal(rr, {rr.zero(), rr.one()});
    std::vector<RingValue> elems = enumerate_ring(rr);
    std::int64_t scanned = 0;
    std::vector<std::size_t> idx(4, 0);
    for (;;) {
      Matrix b(rr, 2,
               {elems[idx[0]], elems[idx[1]], elems[idx[2]], elems[idx[3]]});
      CheckReport c = diago_commutation_check(a, b);
      as.require(c.status == CheckReport::Status::Pass,
                 std::string(ring) + ": implication fails for B = " + b.str());
      ++scanned;
      std::size_t i = 4;
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < elems.size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
    r.metric(std::string(ring) + "_scanned", scanned);
    if (ctx.ring_override) break;
  }
  as.finish();
  return r;
}

CheckReport check_t13(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  RingSpec z9 = ctx_ring(ctx, "Zmod:9");
  Matrix a = Matrix::diagonal(z9, {z9.zero(), z9.one()});
  RingValue two = factorial_in_ring(z9, 2);
  if (!as.hypothesis(!is_zero_divisor(two) && !two.is_zero(),
                     "2 is a zero-divisor in the test ring")) {
    as.finish();
    return r;
  }
  auto sols =
      brute_force_solutions(EquationId::power_x(2), a, false, ctx.enum_budget);
  std::int64_t diagonal = 0;
  for (const Matrix& x : sols.matrices) {
    as.require(x.is_diagonal(), "a solution is not diagonal: " + x.str());
    if (x.is_diagonal()) ++diagonal;
    for (int i = 0; i < 2; ++i)
      as.require(mul(x.at(i, i), x.at(i, i)).is_zero(),
                 "diagonal entry mu with mu^2 != 0: " + x.str());
  }
  as.require(static_cast<std::int64_t>(sols.matrices.size()) == 9,
             "solution census is not 9 = |{0,3,6}|^2");
  r.metric("solutions", static_cast<std::int64_t>(sols.matrices.size()));
  r.metric("diagonal", diagonal);
  r.metric("candidates", 6561);
  as.finish();
  return r;
}

CheckReport check_t14(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  RingSpec k = ctx_ring(ctx, "GF:2");
  Matrix a = Matrix::diagonal(k, {k.zero(), k.zero(), k.one()});
  UniPoly g(k, {k.one(), k.one()});  // 1 + t, g(0) = 1 a unit
  EquationId eq = EquationId::power_xg(2, g);
  std::vector<BlockSpec> blocks{{k.zero(), 2}, {k.one(), 1}};
  Matrix p = Matrix::identity(k, 3);
  std::vector<RingValue> elems = enumerate_ring(k);
  const int bound = matrix_nilpotency_bound(k, 3);
  std::int64_t scanned = 0, nilpotent_solutions = 0;
  std::vector<std::size_t> idx(9, 0);
  for (;;) {
    std::vector<RingValue> cell;
    cell.reserve(9);
    for (int i = 0; i < 9; ++i) cell.push_back(elems[idx[i]]);
    Matrix x(k, 3, std::move(cell));
    ++scanned;
    if (matrix_nilindex(x, bound) && residual(eq, a, x).is_zero()) {
      ++nilpotent_solutions;
      CheckReport br = block_structure_check(a, x, blocks, p, eq);
      as.require(br.status == CheckReport::Status::Pass,
                 "block structure violated for X = " + x.str());
      as.require(mul(x, x).is_zero(),
                 "g(0) is a unit but X^2 != 0 for X = " + x.str());
    }
    std::size_t i = 9;
    bool done = true;
    while (i-- > 0) {
      if (++idx[i] < elems.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  as.require(nilpotent_solutions > 0, "no nilpotent solutions found");
  r.metric("candidates", scanned);
  r.metric("nilpotent_solutions", nilpotent_solutions);
  as.finish();
  return r;
}

// ---------------------------------------------------------------------------
// C series

CheckReport check_c1(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  RingSpec k = parse_ring("GF:3");
  Matrix a = Matrix::from_strings(
      k, {{"0", "1", "0"}, {"0", "0", "2"}, {"-1", "0", "0"}});
  Matrix b = Matrix::from_strings(
      k, {{"0", "0", "0"}, {"0", "0", "-1"}, {"1", "0", "0"}});
  as.require(commutator(a, b) == mul(a, a), "[A,B] != A^2");
  as.require(mat_pow(a, 3) == Matrix::identity(k, 3), "A^3 != I");
  UniPoly chi = charpoly(a);
  UniPoly expect(k, {k.from_int(-1), k.zero(), k.zero(), k.one()});
  as.require(chi == expect, "charpoly(A) != t^3 - 1");
  auto st = simultaneous_triangularization(a, b);
  as.require(st.status == TriangularizationResult::Status::NotST,
             "char-3 pair unexpectedly ST");
  r.metric("stage", static_cast<std::int64_t>(st.stage));
  r.metric("char", 3);
  as.finish();
  return r;
}

CheckReport check_c2(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  RingSpec q = RingSpec::rationals();
  Matrix a = Matrix::from_strings(q, {{"0", "4/3", "-1/3", "-1"},
                                      {"1", "0", "3/4", "-3/4"},
                                      {"1", "0", "0", "0"},
                                      {"1", "0", "0", "0"}});
  Matrix b = jordan_block(4, q);
  as.require(residual(EquationId::cube(), a, b).is_zero(),
             "cubic binomial residual is nonzero");
  UniPoly t4 = UniPoly::monomial(q.one(), 4);
  as.require(charpoly(a) == t4 && charpoly(b) == t4,
             "pair is not nilpotent");
  Matrix c = commutator(a, b);
  as.require(is_invertible(c), "[A,B] is not invertible");
  as.require(!det(c).is_zero(), "det[A,B] = 0");
  as.require(kernel_basis(c).empty(), "[A,B] has nontrivial kernel");
  auto st = simultaneous_triangularization(a, b);
  as.require(st.status == TriangularizationResult::Status::NotST,
             "pair unexpectedly ST");
  as.require(!common_eigenvector(a, b).has_value(),
             "pair has a common eigenvector");
  CheckReport pl = property_l_check(
      a, b, {q.one(), q.from_int(2), q.from_int(3)});
  as.require(pl.status == CheckReport::Status::Pass &&
                 pl.metric_int("property_l_holds") == 0,
             "property L unexpectedly holds");
  as.require(pl.metric_int("violations") == 3,
             "A + aB nilpotent for some a in {1,2,3}");
  as.require(shift_invariance_check(EquationId::cube(), a, b, q.one()),
             "shift invariance fails at mu = 1");
  r.metric("det_commutator", det(c).str());
  as.finish();
  return r;
}

CheckReport check_c3(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  // Starr pair over B[eps]/(eps^2)
  for (const char* ring : {"Dual:GF:2", "Dual:Q"}) {
    RingSpec d = parse_ring(ring);
    Matrix a = Matrix::from_strings(d, {{"0", "0+1?e"}, {"0", "0"}});
    Matrix b = Matrix::from_strings(d, {{"0", "0"}, {"0+1?e", "0"}});
    as.require(commute(a, b), std::string(ring) + ": AB != BA");
    // both triangularizable individually: A is upper, S B S^-1 is upper
    Matrix s = Matrix::from_strings(d, {{"0", "1"}, {"1", "0"}});
    as.require(conjugate(b, s).is_upper_triangular(),
               std::string(ring) + ": B is not triangularizable");
    if (d.base().kind() == RingKind::GF) {
      // exhaustive unimodular eigenvector scan over Dual(GF(2))
      std::vector<RingValue> elems = enumerate_ring(d);
      std::int64_t unimodular = 0, found = 0;
      for (const RingValue& x : elems)
        for (const RingValue& y : elems) {
          if (!is_unit(x) && !is_unit(y)) continue;
          ++unimodular;
          // Av = lambda v and Bv = mu v for some lambda, mu?
          RingValue ax = mul(a.at(0, 1), y);  // (A v)_1 ; (A v)_2 = 0
          RingValue bx = mul(b.at(1, 0), x);  // (B v)_2 ; (B v)_1 = 0
          bool a_ok = false, b_ok = false;
          for (const RingValue& lam : elems) {
            if (mul(lam, x) == ax && mul(lam, y).is_zero()) a_ok = true;
            if (mul(lam, x).is_zero() && mul(lam, y) == bx) b_ok = true;
          }
          if (a_ok && b_ok) ++found;
        }
      as.require(found == 0, "common unimodular eigenvector exists");
      r.metric("unimodular_vectors", unimodular);
    }
  }
  as.finish();
  return r;
}

CheckReport check_c4(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  RingSpec z27 = parse_ring("Zmod:27");
  Matrix u = scale(z27.from_int(3), Matrix::identity(z27, 2));
  auto nil = matrix_nilindex(u, 5);
  as.require(nil.has_value() && *nil == 3, "nilindex(3 I_2) != 3");
  as.require(nil.value_or(0) > 2, "nilindex does not exceed n");
  r.metric("nilindex", nil ? *nil : -1);
  r.metric("n", 2);
  as.finish();
  return r;
}

CheckReport check_c5(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  RingSpec z8 = parse_ring("Zmod:8");
  RingValue tau = z8.from_int(2);
  auto tnil = element_nilindex(tau, 5);
  as.require(tnil.has_value() && *tnil == 3, "tau^2 != 0 or tau^3 != 0 fails");
  Matrix x = scale(tau, Matrix::identity(z8, 2));
  UniPoly g = UniPoly::constant(tau);
  Matrix x2 = mul(x, x);
  as.require(!x2.is_zero(), "X^2 = 0");
  as.require(mul(x2, eval_poly_at_matrix(g, x)).is_zero(), "X^2 g(X) != 0");
  RingValue res = resultant(charpoly(x), g);
  as.require(res == z8.from_int(4), "Res(chi_X, g) != 4");
  as.require(!is_unit(res), "Res(chi_X, g) is a unit");
  as.require(resultant_det_identity_check(x, g),
             "det(g(X)) != Res(chi_X, g)");
  r.metric("resultant", res.str());
  as.finish();
  return r;
}

// ---------------------------------------------------------------------------
// D series

VarietyDimensionConfig dim_config(const Ctx& ctx, int n, int alpha) {
  VarietyDimensionConfig cfg;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.groebner = ctx.gopts;
  return cfg;
}

void require_dimension(Asserter& as, CheckReport& r, const Ctx& ctx,
                       VarietySystem sys, int n, int alpha, int expected,
                       const char* metric_name,
                       const char* metric = "dimension") {
  CheckReport e = variety_dimension_experiment(sys, dim_config(ctx, n, alpha));
  if (e.status == CheckReport::Status::Inconclusive) {
    as.require(false, std::string(metric_name) + ": " + e.detail);
    return;
  }
  std::int64_t got = e.metric_int(metric);
  as.require(got == expected, std::string(metric_name) + " = " +
                                  std::to_string(got) + ", expected " +
                                  std::to_string(expected));
  r.metric(metric_name, got);
}

CheckReport check_d1(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  require_dimension(as, r, ctx, VarietySystem::YFiber, 2, 2, 1, "Y_2_2");
  require_dimension(as, r, ctx, VarietySystem::YFiber, 3, 2, 2, "Y_3_2");
  require_dimension(as, r, ctx, VarietySystem::YFiber, 3, 3, 2, "Y_3_3");
  as.finish();
  return r;
}

CheckReport check_d2(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  require_dimension(as, r, ctx, VarietySystem::SFiber, 2, 2, 3, "S_2_2_total",
                    "total_dimension");
  require_dimension(as, r, ctx, VarietySystem::SFiber, 2, 3, 3, "S_2_3_total",
                    "total_dimension");
  as.finish();
  return r;
}

CheckReport check_d3(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  require_dimension(as, r, ctx, VarietySystem::NilpotentCone, 2, 2, 2, "N_2");
  require_dimension(as, r, ctx, VarietySystem::NilpotentCone, 3, 2, 6, "N_3");
  as.finish();
  return r;
}

CheckReport check_d4(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  require_dimension(as, r, ctx, VarietySystem::WCommuting, 2, 2, 3, "W_2");
  as.finish();
  return r;
}

CheckReport check_d5(const Ctx&) {
  CheckReport r;
  Asserter as(r);
  RingSpec k = parse_ring("GF:32003");
  for (int n = 2; n <= 5; ++n) {
    // matrix of ad_J on the E_kl basis: ad(E_kl) = E_(k-1)l - E_k(l+1)
    Matrix ad(k, n * n);
    for (int kk = 0; kk < n; ++kk)
      for (int ll = 0; ll < n; ++ll) {
        int col = kk * n + ll;
        if (kk >= 1) ad.at((kk - 1) * n + ll, col) = k.one();
        if (ll + 1 < n)
          ad.at(kk * n + ll + 1, col) = ad.at(kk * n + ll + 1, col) - k.one();
      }
    auto kernel = kernel_basis(ad);
    as.require(static_cast<int>(kernel.size()) == n,
               "dim ker(ad J_" + std::to_string(n) + ") != " +
                   std::to_string(n));
    r.metric("centralizer_dim_n" + std::to_string(n),
             static_cast<std::int64_t>(kernel.size()));
  }
  as.finish();
  return r;
}

CheckReport check_d6(const Ctx& ctx) {
  CheckReport r;
  Asserter as(r);
  CheckReport v4 =
      variety_dimension_experiment(VarietySystem::V4Fiber, dim_config(ctx, 4, 3));
  if (v4.status == CheckReport::Status::Inconclusive) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = v4.detail;
    return r;
  }
  as.require(v4.metric_int("dimension") == 6, "V4 fiber dimension != 6");
  as.require(v4.metric_int("total_dimension") == 18, "V4 total != 18");
  r.metric("v4_fiber", v4.metric_int("dimension"));
  r.metric("v4_total", v4.metric_int("total_dimension"));
  CheckReport vw = variety_dimension_experiment(VarietySystem::V4CommutingFiber,
                                                dim_config(ctx, 4, 3));
  if (vw.status == CheckReport::Status::Inconclusive) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = vw.detail;
    return r;
  }
  as.require(vw.metric_int("dimension") == 2,
             "commuting V4 fiber dimension != 2");
  as.require(vw.metric_int("total_dimension") == 14,
             "commuting V4 total != 14");
  r.metric("v4w_fiber", vw.metric_int("dimension"));
  r.metric("v4w_total", vw.metric_int("total_dimension"));
  as.finish();
  return r;
}

// ---------------------------------------------------------------------------
// registry table

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Entry {
  RegistryEntry info;
  CheckReport (*fn)(const Ctx&);
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = [] {
    std::vector<Entry> v;
    auto add = [&](const std::string& id, const std::string& claim, bool quick,
                   CheckReport (*fn)(const Ctx&)) {
      v.push_back({{id, claim, fnv1a(id), quick}, fn});
    };
    add("T1",
        "2x2 solutions of A^2-2AB+B^2=0 over GF(3) and GF(5) commute "
        "(exhaustive)",
        true, check_t1);
    add("T2",
        "split-spectrum solutions of A^2-2AB+B^2=0 are simultaneously "
        "triangularizable (exhaustive 2x2 over GF(5) plus 3x3 witness)",
        true, check_t2);
    add("T3",
        "pairs with [A,B]=f(A) satisfy A^i B - B A^i = i A^(i-1) f(A) and "
        "are ST over GF(p), p > n",
        true, check_t3);
    add("T4",
        "noncommuting 3x3 solutions of A^2-2AB+B^2=0 have a sole eigenvalue "
        "trace(A)/3 and triangularize with constant diagonal",
        true, check_t4);
    add("T5",
        "A with n distinct eigenvalues: X=0 is the sole solution of "
        "AX-XA=X^alpha (exhaustive over GF(5), GF(7))",
        true, check_t5);
    add("T6",
        "over finite products of prime fields (reduced, 2 regular): X=0 is "
        "the sole solution of AX-XA=X^2 for sampled generic A",
        true, check_t6);
    add("T7",
        "when n! is regular, every solution of AX-XA=X^2 is nilpotent and "
        "n! [A,X]^(2^n-1) = 0 (exhaustive over Z/9, Z/25)",
        true, check_t7);
    add("T8",
        "generic 2x2 system over Q(a): entries of X^alpha and "
        "x_ij^(2alpha-1) lie in the equation ideal; x_ij^(2alpha-2) do not",
        true, check_t8);
    add("T9",
        "conjectured exponent (alpha-1)n+1 probe at n=2, alpha=4 over Q(a)",
        false, check_t9);
    add("T10",
        "for nilpotent solutions of XA-AX=X^alpha g(X) with g(0) != 0, "
        "sampled elements of the two-sided ideal generated by [A,X] are "
        "nilpotent",
        true, check_t10);
    add("T11",
        "commuting pairs with regular diagonal gaps are simultaneously "
        "diagonalizable; with unit gaps B is a polynomial in A of degree "
        "<= n-1",
        true, check_t11);
    add("T12",
        "diagonal A with regular gaps: if A commutes with [A,B] then AB=BA "
        "(exhaustive over GF(3) and Z/4)",
        true, check_t12);
    add("T13",
        "over Z/9 with A=diag(0,1): every solution of AX-XA=X^2 is diagonal "
        "with mu_i^2=0 (census 9 of 6561)",
        true, check_t13);
    add("T14",
        "over GF(2) with A=diag(0,0,1), g=1+t: every nilpotent solution of "
        "XA-AX=X^2 g(X) is block diagonal with X^2=0",
        true, check_t14);
    add("C1",
        "char-3 pair with [A,B]=A^2, A^3=I_3, charpoly t^3-1, not ST",
        true, check_c1);
    add("C2",
        "4x4 nilpotent pair solving the cubic binomial equation with "
        "invertible [A,B]; not ST and property L fails",
        true, check_c2);
    add("C3",
        "commuting triangularizable pair over dual numbers with no common "
        "unimodular eigenvector",
        true, check_c3);
    add("C4", "3 I_2 over Z/27 is nilpotent with nilindex 3 > n = 2", true,
        check_c4);
    add("C5",
        "X=tau I_2, g=tau over Z/8: X^2 g(X)=0 with X^2 != 0 and "
        "Res(chi_X,g)=4 not a unit",
        true, check_c5);
    add("D1", "Jordan fiber dimensions: Y(2,2)=1, Y(3,2)=2, Y(3,3)=2", true,
        check_d1);
    add("D2", "S(2,alpha) composed dimension 3 = n^2-1 for alpha in {2,3}",
        true, check_d2);
    add("D3", "nilpotent cone dimensions: N(2)=2, N(3)=6 (= n^2-n)", true,
        check_d3);
    add("D4", "commuting nilpotent pairs: dim W(2) = 3 = n^2-1", true,
        check_d4);
    add("D5", "centralizer of J_n has dimension n (n = 2..5)", true, check_d5);
    add("D6",
        "V4 fiber at A=J_4: dimension 6, total 18; commuting fiber 2, "
        "total 14",
        false, check_d6);
    return v;
  }();
  return t;
}

}  // namespace

const std::vector<RegistryEntry>& registry_entries() {
  static const std::vector<RegistryEntry> infos = [] {
    std::vector<RegistryEntry> v;
    for (const auto& e : table()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckReport run_check(const std::string& id, const CheckConfig& config) {
  const Entry* entry = nullptr;
  for (const auto& e : table())
    if (e.info.id == id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown check id '" + id + "'");
  Ctx ctx;
  ctx.seed = config.seed_override.value_or(entry->info.default_seed);
  ctx.ring_override = config.ring_override;
  if (config.enumeration_budget) ctx.enum_budget = *config.enumeration_budget;
  if (config.groebner_pair_budget)
    ctx.gopts.max_pairs = *config.groebner_pair_budget;
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = entry->fn(ctx);
  } catch (const budget_exceeded& e) {
    r = make_inconclusive(id, std::string("budget: ") + e.what());
  } catch (const std::exception& e) {
    r = make_inconclusive(id, std::string("error: ") + e.what());
  }
  r.check_id = id;
  r.seed = ctx.seed;
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

Profile profile_from_name(const std::string& name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  if (name == "extended") return Profile::Extended;
  throw std::invalid_argument("unknown profile '" + name +
                              "' (expected quick, full or extended)");
}

std::vector<CheckReport> run_all(Profile profile, const CheckConfig& config,
                                 int workers) {
  std::vector<std::string> ids;
  for (const auto& e : registry_entries()) {
    if (profile == Profile::Quick && !e.in_quick_profile) continue;
    if (profile == Profile::Full && e.id == "D6") continue;
    ids.push_back(e.id);
  }
  std::vector<CheckReport> out(ids.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      out[i] = run_check(ids[i], config);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      out[i] = run_check(ids[i], config);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(workers, static_cast<int>(ids.size()));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace commulab
