#include "commulab/equations.hpp"

#include <algorithm>
#include <sstream>

#include "commulab/rng.hpp"
#include "commulab/symbolic.hpp"

namespace commulab {

namespace {

void validate_binomial_hypotheses(const RingSpec& ring, int k) {
  mpz_class c = ring.characteristic();
  if (c == 0) return;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  if (fact % c == 0)
    throw std::invalid_argument(
        "ring characteristic divides " + std::to_string(k) +
        "! ; the binomial equation is not offered over this ring");
}

Matrix binomial_residual(int k, const Matrix& a, const Matrix& b) {
  validate_binomial_hypotheses(a.ring(), k);
  const RingSpec& R = a.ring();
  // precompute powers
  std::vector<Matrix> apow{Matrix::identity(R, a.n())};
  std::vector<Matrix> bpow{Matrix::identity(R, a.n())};
  for (int i = 1; i <= k; ++i) {
    apow.push_back(mul(apow.back(), a));
    bpow.push_back(mul(bpow.back(), b));
  }
  Matrix acc(R, a.n());
  for (int j = 0; j <= k; ++j) {
    RingValue c = binomial_in_ring(R, k, j);
    if (j % 2 == 1) c = -c;
    acc = add(acc, scale(c, mul(apow[k - j], bpow[j])));
  }
  return acc;
}

void require_pair(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring() || a.n() != b.n())
    throw std::invalid_argument("pair shape mismatch");
}

}  // namespace

int matrix_nilpotency_bound(const RingSpec& ring, int n) {
  long b = static_cast<long>(n) * ring.nilpotency_bound();
  return static_cast<int>(std::min<long>(b, 64));
}

EquationId EquationId::gen_binom(int k) {
  if (k < 2) throw std::invalid_argument("GenBinom needs k >= 2");
  return {Tag::GenBinom, k, 2, std::nullopt};
}

EquationId EquationId::power_a(int alpha) {
  if (alpha < 2) throw std::invalid_argument("PowerA needs alpha >= 2");
  return {Tag::PowerA, 2, alpha, std::nullopt};
}

EquationId EquationId::power_x(int alpha) {
  if (alpha < 2) throw std::invalid_argument("PowerX needs alpha >= 2");
  return {Tag::PowerX, 2, alpha, std::nullopt};
}

EquationId EquationId::power_xg(int alpha, UniPoly g) {
  if (alpha < 2) throw std::invalid_argument("PowerXg needs alpha >= 2");
  if (g.eval(g.ring().zero()).is_zero())
    throw std::invalid_argument("PowerXg requires g(0) != 0");
  EquationId eq{Tag::PowerXg, 2, alpha, std::nullopt};
  eq.g = std::move(g);
  return eq;
}

std::string EquationId::name() const {
  switch (tag) {
    case Tag::GenBinom:
      return "genBinom(k=" + std::to_string(k) + ")";
    case Tag::Square:
      return "square";
    case Tag::SimN:
      return "simN";
    case Tag::LieSquare:
      return "lieSquare";
    case Tag::Cube:
      return "cube";
    case Tag::PowerA:
      return "powerA(alpha=" + std::to_string(alpha) + ")";
    case Tag::PowerX:
      return "powerX(alpha=" + std::to_string(alpha) + ")";
    case Tag::PowerXg:
      return "powerXg(alpha=" + std::to_string(alpha) + ")";
  }
  return "?";
}

Matrix residual(const EquationId& eq, const Matrix& a, const Matrix& x_or_b) {
  require_pair(a, x_or_b);
  const Matrix& b = x_or_b;
  switch (eq.tag) {
    case EquationId::Tag::GenBinom:
      return binomial_residual(eq.k, a, b);
    case EquationId::Tag::Square:
      return binomial_residual(2, a, b);
    case EquationId::Tag::Cube:
      return binomial_residual(3, a, b);
    case EquationId::Tag::SimN:
      // N^2 - [N, B] with (a, b) = (N, B)
      return sub(mul(a, a), commutator(a, b));
    case EquationId::Tag::LieSquare:
      return sub(commutator(a, b), mul(b, b));
    case EquationId::Tag::PowerA:
      return sub(commutator(a, b),
                 mat_pow(a, static_cast<unsigned long>(eq.alpha)));
    case EquationId::Tag::PowerX:
      return sub(commutator(a, b),
                 mat_pow(b, static_cast<unsigned long>(eq.alpha)));
    case EquationId::Tag::PowerXg: {
      if (!eq.g) throw std::invalid_argument("PowerXg without g");
      if (eq.g->ring() != a.ring())
        throw std::invalid_argument("g lives over a different ring");
      Matrix xa_ax = sub(mul(b, a), mul(a, b));
      Matrix rhs = mul(mat_pow(b, static_cast<unsigned long>(eq.alpha)),
                       eval_poly_at_matrix(*eq.g, b));
      return sub(xa_ax, rhs);
    }
  }
  throw std::logic_error("unreachable equation tag");
}

bool shift_invariance_check(const EquationId& eq, const Matrix& a,
                            const Matrix& b, const RingValue& mu) {
  if (eq.tag != EquationId::Tag::GenBinom &&
      eq.tag != EquationId::Tag::Square && eq.tag != EquationId::Tag::Cube)
    throw std::invalid_argument(
        "shift invariance applies to the binomial family");
  if (!residual(eq, a, b).is_zero())
    throw std::invalid_argument("input pair is not a solution");
  Matrix shift = scale(mu, Matrix::identity(a.ring(), a.n()));
  return residual(eq, sub(a, shift), sub(b, shift)).is_zero();
}

bool recurrence_check(const Matrix& a, const Matrix& b, const UniPoly& f,
                      int i) {
  require_pair(a, b);
  if (i < 1) throw std::invalid_argument("recurrence index must be >= 1");
  Matrix fa = eval_poly_at_matrix(f, a);
  if (commutator(a, b) != fa)
    throw std::domain_error("premise [A,B] = f(A) fails");
  Matrix ai = mat_pow(a, static_cast<unsigned long>(i));
  Matrix lhs = sub(mul(ai, b), mul(b, ai));
  Matrix rhs = scale(a.ring().from_int(i),
                     mul(mat_pow(a, static_cast<unsigned long>(i - 1)), fa));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Jordan fiber

SolutionFamily solve_jordan_fiber(int n, int alpha,
                                  const std::vector<RingValue>& params) {
  if (n < 2) throw std::invalid_argument("jordan fiber needs n >= 2");
  if (alpha < 2) throw std::invalid_argument("alpha must be >= 2");
  if (static_cast<int>(params.size()) != n - 1)
    throw std::invalid_argument("expected n-1 parameters");
  const RingSpec& K = params.front().ring();
  if (!K.is_field())
    throw std::domain_error("jordan fiber solver requires a field ring");

  SolutionFamily fam;
  fam.kind = SolutionFamily::Kind::Parametrized;
  for (int j = 2; j <= n; ++j)
    fam.param_names.push_back("x1" + std::to_string(j));

  Matrix x(K, n);
  for (int j = 1; j < n; ++j) x.at(0, j) = params[j - 1];

  // march superdiagonals; the defining identity at (r, r+d+1) reads
  // x[r][r+d] - x[r+1][r+d+1] = (X^alpha)[r][r+d+1]
  for (int d = 1; d <= n - 2; ++d) {
    for (int r = 0; r + d + 1 < n; ++r) {
      Matrix xp = mat_pow(x, static_cast<unsigned long>(alpha));
      RingValue rhs = x.at(r, r + d) - xp.at(r, r + d + 1);
      RingValue pivot = K.one();
      if (alpha == 2) pivot = pivot + x.at(r, r + 1);
      std::ostringstream line;
      line << "x" << (r + 2) << (r + d + 2) << " = (" << rhs.str() << ") / ("
           << pivot.str() << ")";
      if (pivot.is_zero()) {
        fam.derivation_trace.push_back(line.str() + "  [pivot vanished]");
        throw pivot_failure(r + 1, r + d + 1,
                            "vanishing pivot solving entry x(" +
                                std::to_string(r + 2) + "," +
                                std::to_string(r + d + 2) + ")");
      }
      x.at(r + 1, r + d + 1) = rhs * inverse(pivot);
      fam.derivation_trace.push_back(line.str());
    }
  }

  Matrix j = jordan_block(n, K);
  Matrix check = sub(sub(mul(x, j), mul(j, x)),
                     mat_pow(x, static_cast<unsigned long>(alpha)));
  if (!check.is_zero())
    throw std::logic_error("jordan fiber solution failed re-verification");
  if (!x.is_upper_triangular() ||
      [&] {
        for (int i = 0; i < n; ++i)
          if (!x.at(i, i).is_zero()) return true;
        return false;
      }())
    throw std::logic_error("jordan fiber solution is not strictly upper");
  fam.matrices.push_back(std::move(x));
  return fam;
}

bool jordan_fiber_similarity_check(const Matrix& x) {
  if (!x.ring().is_field())
    throw std::domain_error("similarity check requires a field ring");
  const int n = x.n();
  if (charpoly(x) != UniPoly::monomial(x.ring().one(), n)) return false;
  Matrix p = x;
  for (int k = 1; k <= n - 1; ++k) {
    if (rank(p) != n - k) return false;
    p = mul(p, x);
  }
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// odometer over `positions` slots, each running through `table`; returns
// false when it wraps around
bool odometer_step(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

std::uint64_t checked_total(const mpz_class& card, int slots,
                            std::uint64_t budget, const char* what) {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), card.get_mpz_t(), slots);
  if (total > budget)
    throw budget_exceeded(std::string(what) + ": " + total.get_str() +
                          " candidates exceed budget " +
                          std::to_string(budget));
  return total.get_ui();
}

}  // namespace

SolutionFamily brute_force_solutions(const EquationId& eq, const Matrix& a,
                                     bool nilpotent_only,
                                     std::uint64_t budget) {
  const RingSpec& R = a.ring();
  if (!R.is_finite())
    throw std::domain_error("brute force requires a finite ring");
  const int n = a.n();
  checked_total(R.cardinality(), n * n, budget, "brute_force_solutions");
  std::vector<RingValue> table = enumerate_ring(R);
  const std::size_t base = table.size();
  const int bound = matrix_nilpotency_bound(R, n);

  SolutionFamily fam;
  fam.kind = SolutionFamily::Kind::Explicit;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n) * n, 0);
  Matrix x(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x.at(i, j) = table[0];
  for (;;) {
    if (!nilpotent_only || matrix_nilindex(x, bound).has_value()) {
      if (residual(eq, a, x).is_zero()) fam.matrices.push_back(x);
    }
    if (!odometer_step(idx, base)) break;
    for (std::size_t s = 0; s < idx.size(); ++s)
      x.at(static_cast<int>(s) / n, static_cast<int>(s) % n) = table[idx[s]];
  }
  return fam;
}

CheckReport pair_enumeration(
    const EquationId& eq, const RingSpec& ring, int n,
    const std::function<bool(const Matrix&, const Matrix&)>& predicate,
    const std::string& predicate_name, std::uint64_t budget) {
  CheckReport r;
  r.check_id = "pair-enumeration";
  if (!ring.is_finite())
    throw std::domain_error("pair enumeration requires a finite ring");
  checked_total(ring.cardinality(), 2 * n * n, budget, "pair_enumeration");
  std::vector<RingValue> table = enumerate_ring(ring);
  const std::size_t base = table.size();

  std::int64_t pairs = 0, solutions = 0, violations = 0;
  std::string first_violation;
  std::vector<std::size_t> idx(static_cast<std::size_t>(2) * n * n, 0);
  Matrix a(ring, n), b(ring, n);
  auto refresh = [&]() {
    const std::size_t half = idx.size() / 2;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      Matrix& m = s < half ? a : b;
      std::size_t t = s < half ? s : s - half;
      m.at(static_cast<int>(t) / n, static_cast<int>(t) % n) = table[idx[s]];
    }
  };
  refresh();
  for (;;) {
    ++pairs;
    if (residual(eq, a, b).is_zero()) {
      ++solutions;
      if (!predicate(a, b)) {
        ++violations;
        if (first_violation.empty())
          first_violation = "A = " + a.str() + ", B = " + b.str();
      }
    }
    if (!odometer_step(idx, base)) break;
    refresh();
  }
  r.metric("equation", eq.name());
  r.metric("predicate", predicate_name);
  r.metric("ring", ring.str());
  r.metric("n", static_cast<std::int64_t>(n));
  r.metric("pairs_scanned", pairs);
  r.metric("solutions", solutions);
  r.metric("violations", violations);
  if (violations == 0) {
    r.status = CheckReport::Status::Pass;
  } else {
    r.status = CheckReport::Status::Fail;
    r.detail = "predicate '" + predicate_name +
               "' violated, first at " + first_violation;
  }
  return r;
}

// ---------------------------------------------------------------------------
// generic (symbolic) systems

std::vector<MultiPoly> generic_system(const EquationId& eq, int n,
                                      CoeffField field) {
  if (eq.tag != EquationId::Tag::PowerX)
    throw std::invalid_argument("generic_system supports the PowerX family");
  return build_generic_power_system(n, eq.alpha, field).gens;
}

CheckReport generic_membership_check(int n, int alpha, int exponent_claim,
                                     long characteristic,
                                     const GroebnerOptions& opts) {
  CheckReport r;
  r.check_id = "generic-membership";
  CoeffField field{characteristic};
  PolySystem sys = build_generic_power_system(n, alpha, field);
  r.metric("n", static_cast<std::int64_t>(n));
  r.metric("alpha", static_cast<std::int64_t>(alpha));
  r.metric("exponent", static_cast<std::int64_t>(exponent_claim));
  r.metric("char", static_cast<std::int64_t>(characteristic));
  // The a_ij are generic: they act as invertible parameters, so membership
  // is decided in the ideal extended to K(a)[x] via a block elimination
  // order with the x block dominant.
  const int xlo = n * n, xhi = 2 * n * n;
  MonomialOrder order = MonomialOrder::block_degrevlex(xlo, xhi);
  try {
    GroebnerBasis gb = buchberger(sys.gens, order, opts);
    r.metric("basis_size", static_cast<std::int64_t>(gb.gens.size()));

    SymbolicMatrix x =
        SymbolicMatrix::from_variables(field, sys.vars, n, n * n);
    SymbolicMatrix xp = sym_pow(x, alpha);
    std::int64_t xalpha_member = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (extended_field_membership(xp.at(i, j), gb, xlo, xhi))
          ++xalpha_member;
    std::int64_t xij_member = 0;
    for (int v = n * n; v < 2 * n * n; ++v) {
      MultiPoly xv = MultiPoly::variable(field, sys.vars, v);
      MultiPoly pow = MultiPoly::constant(field, sys.vars,
                                          coeff_from_long(field, 1));
      for (int e = 0; e < exponent_claim; ++e) pow = mul(pow, xv);
      if (extended_field_membership(pow, gb, xlo, xhi)) ++xij_member;
    }
    r.metric("xalpha_entries_member", xalpha_member);
    r.metric("xalpha_entries_total", static_cast<std::int64_t>(n) * n);
    r.metric("xij_power_member", xij_member);
    r.metric("xij_power_total", static_cast<std::int64_t>(n) * n);
    r.metric("all_member",
             static_cast<std::int64_t>(xalpha_member == n * n &&
                                       xij_member == n * n));
    r.status = CheckReport::Status::Pass;
  } catch (const budget_exceeded& e) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = std::string("budget: ") + e.what();
  }
  return r;
}

CheckReport jacobson_nilpotency_check(const Matrix& a, const Matrix& x,
                                      int alpha) {
  CheckReport r;
  r.check_id = "jacobson-nilpotency";
  require_pair(a, x);
  if (!residual(EquationId::power_x(alpha), a, x).is_zero()) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "premise fails: (A, X) does not solve AX - XA = X^alpha";
    return r;
  }
  const RingSpec& R = a.ring();
  const int n = a.n();
  Matrix c = commutator(a, x);
  unsigned long e = (1UL << n) - 1;
  Matrix cpow = mat_pow(c, e);
  RingValue nfact = factorial_in_ring(R, n);
  bool scaled_zero = scale(nfact, cpow).is_zero();
  bool nfact_regular = !is_zero_divisor(nfact) && !nfact.is_zero();
  r.metric("commutator_power_exponent", static_cast<std::int64_t>(e));
  r.metric("n_factorial_zero_divisor",
           static_cast<std::int64_t>(!nfact_regular));
  r.metric("n_factorial_times_power_vanishes",
           static_cast<std::int64_t>(scaled_zero));
  bool ok = scaled_zero;
  if (nfact_regular) {
    bool power_zero = cpow.is_zero();
    r.metric("power_vanishes", static_cast<std::int64_t>(power_zero));
    auto nil = matrix_nilindex(x, matrix_nilpotency_bound(R, n));
    r.metric("x_nilindex",
             nil ? static_cast<std::int64_t>(*nil) : std::int64_t{-1});
    ok = ok && power_zero && nil.has_value();
  }
  if (ok) {
    r.status = CheckReport::Status::Pass;
  } else {
    r.status = CheckReport::Status::Fail;
    r.detail = "Jacobson-type identity violated";
    r.artifacts["a"] = a.to_strings();
    r.artifacts["x"] = x.to_strings();
  }
  return r;
}

CheckReport nilpotent_ideal_check(const Matrix& a, const Matrix& x,
                                  const EquationId& eq, int word_samples,
                                  std::uint64_t seed) {
  CheckReport r;
  r.check_id = "nilpotent-ideal";
  r.seed = seed;
  require_pair(a, x);
  if (eq.tag != EquationId::Tag::PowerXg)
    throw std::invalid_argument("nilpotent_ideal_check needs a PowerXg id");
  const RingSpec& R = a.ring();
  const int n = a.n();
  const int bound = matrix_nilpotency_bound(R, n);
  if (!matrix_nilindex(x, bound)) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "premise fails: X not nilpotent within bound";
    return r;
  }
  if (!residual(eq, a, x).is_zero()) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "premise fails: (A, X) does not solve the equation";
    return r;
  }
  Matrix c = sub(mul(a, x), mul(x, a));
  Rng rng(seed);
  auto random_word = [&]() {
    Matrix w = Matrix::identity(R, n);
    int len = static_cast<int>(rng.below(7));  // 0..6
    for (int i = 0; i < len; ++i) w = mul(w, rng.below(2) ? a : x);
    return w;
  };
  std::int64_t max_nilindex = 0;
  for (int s = 0; s < word_samples; ++s) {
    int terms = 1 + static_cast<int>(rng.below(2));
    Matrix elem(R, n);
    for (int t = 0; t < terms; ++t) {
      RingValue coef = R.from_int(1 + static_cast<long>(rng.below(5)));
      elem = add(elem, scale(coef, mul(mul(random_word(), c), random_word())));
    }
    auto nil = matrix_nilindex(elem, bound);
    if (!nil) {
      r.status = CheckReport::Status::Inconclusive;
      r.detail = "nilpotency bound " + std::to_string(bound) +
                 " exhausted on a sampled ideal element";
      r.artifacts["element"] = elem.to_strings();
      return r;
    }
    max_nilindex = std::max<std::int64_t>(max_nilindex, *nil);
  }
  r.metric("word_samples", static_cast<std::int64_t>(word_samples));
  r.metric("max_nilindex", max_nilindex);
  r.metric("bound", static_cast<std::int64_t>(bound));
  r.status = CheckReport::Status::Pass;
  return r;
}

std::pair<Matrix, Matrix> alpha_reduction(const Matrix& a, const Matrix& b,
                                          int alpha) {
  require_pair(a, b);
  if (alpha < 2) throw std::invalid_argument("alpha must be >= 2");
  if (!residual(EquationId::power_a(alpha), a, b).is_zero())
    throw std::invalid_argument("(A, B) does not solve AB - BA = A^alpha");
  RingValue am1 = a.ring().from_int(alpha - 1);
  if (!is_unit(am1))
    throw std::domain_error("alpha - 1 is not a unit in the ring");
  Matrix a1 = mat_pow(a, static_cast<unsigned long>(alpha - 1));
  Matrix b1 = scale(inverse(am1), b);
  if (commutator(a1, b1) != mul(a1, a1))
    throw std::logic_error("alpha reduction failed re-verification");
  return {a1, b1};
}

CheckReport block_structure_check(const Matrix& a, const Matrix& x,
                                  const std::vector<BlockSpec>& blocks,
                                  const Matrix& p, const EquationId& eq) {
  CheckReport r;
  r.check_id = "block-structure";
  require_pair(a, x);
  if (eq.tag != EquationId::Tag::PowerXg || !eq.g)
    throw std::invalid_argument("block_structure_check needs a PowerXg id");
  const RingSpec& R = a.ring();
  const int n = a.n();

  int total = 0;
  for (const auto& bl : blocks) total += bl.size;
  if (total != n) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "hypothesis: block sizes do not sum to n";
    return r;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      RingValue diff = blocks[i].lambda - blocks[j].lambda;
      if (diff.is_zero() || is_zero_divisor(diff)) {
        r.status = CheckReport::Status::Inconclusive;
        r.detail = "hypothesis: lambda difference zero or a zero-divisor";
        return r;
      }
    }
  std::vector<RingValue> diag;
  for (const auto& bl : blocks)
    for (int i = 0; i < bl.size; ++i) diag.push_back(bl.lambda);
  Matrix d = Matrix::diagonal(R, diag);
  if (!is_invertible(p) || conjugate(d, p) != a) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "hypothesis: A != P diag(lambda_i I) P^-1";
    return r;
  }
  const int bound = matrix_nilpotency_bound(R, n);
  if (!matrix_nilindex(x, bound)) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "hypothesis: X not nilpotent within bound";
    return r;
  }
  if (!residual(eq, a, x).is_zero()) {
    r.status = CheckReport::Status::Inconclusive;
    r.detail = "hypothesis: (A, X) does not solve the equation";
    return r;
  }

  Matrix xp = mul(mul(inverse(p), x), p);
  // off-diagonal blocks must vanish
  int row0 = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    int col0 = 0;
    for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
      if (bi != bj)
        for (int i = 0; i < blocks[bi].size; ++i)
          for (int j = 0; j < blocks[bj].size; ++j)
            if (!xp.at(row0 + i, col0 + j).is_zero()) {
              r.status = CheckReport::Status::Fail;
              r.detail = "conclusion violated: off-diagonal block nonzero";
              r.artifacts["x_conjugated"] = xp.to_strings();
              return r;
            }
      col0 += blocks[bj].size;
    }
    row0 += blocks[bi].size;
  }
  // each diagonal block must satisfy X_i^alpha g(X_i) = 0
  bool g0_unit = is_unit(eq.g->eval(R.zero()));
  row0 = 0;
  std::int64_t checked_blocks = 0;
  for (const auto& bl : blocks) {
    Matrix xi(R, bl.size);
    for (int i = 0; i < bl.size; ++i)
      for (int j = 0; j < bl.size; ++j) xi.at(i, j) = xp.at(row0 + i, row0 + j);
    Matrix lhs = mul(mat_pow(xi, static_cast<unsigned long>(eq.alpha)),
                     eval_poly_at_matrix(*eq.g, xi));
    if (!lhs.is_zero()) {
      r.status = CheckReport::Status::Fail;
      r.detail = "conclusion violated: X_i^alpha g(X_i) != 0";
      r.artifacts["block"] = xi.to_strings();
      return r;
    }
    if (g0_unit &&
        !mat_pow(xi, static_cast<unsigned long>(eq.alpha)).is_zero()) {
      r.status = CheckReport::Status::Fail;
      r.detail = "conclusion violated: g(0) a unit but X^alpha != 0";
      r.artifacts["block"] = xi.to_strings();
      return r;
    }
    ++checked_blocks;
    row0 += bl.size;
  }
  r.metric("blocks", checked_blocks);
  r.metric("g0_unit", static_cast<std::int64_t>(g0_unit));
  r.status = CheckReport::Status::Pass;
  return r;
}

}  // namespace commulab
