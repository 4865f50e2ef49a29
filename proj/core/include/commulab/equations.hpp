#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "commulab/errors.hpp"
#include "commulab/groebner.hpp"
#include "commulab/matrix.hpp"
#include "commulab/multipoly.hpp"
#include "commulab/report.hpp"
#include "commulab/unipoly.hpp"

namespace commulab {

/// The matrix equations the library builds, solves and checks:
///   GenBinom(k): sum_j (-1)^j C(k,j) A^(k-j) B^j = 0
///   Square:      A^2 - 2AB + B^2 = 0            (GenBinom with k = 2)
///   SimN:        N^2 = [N, B]
///   LieSquare:   AX - XA = X^2
///   Cube:        A^3 - 3A^2B + 3AB^2 - B^3 = 0  (GenBinom with k = 3)
///   PowerA:      AB - BA = A^alpha
///   PowerX:      AX - XA = X^alpha
///   PowerXg:     XA - AX = X^alpha g(X), g(0) != 0
struct EquationId {
  enum class Tag {
    GenBinom,
    Square,
    SimN,
    LieSquare,
    Cube,
    PowerA,
    PowerX,
    PowerXg
  };

  Tag tag = Tag::Square;
  int k = 2;      // GenBinom
  int alpha = 2;  // PowerA / PowerX / PowerXg
  std::optional<UniPoly> g;

  static EquationId gen_binom(int k);
  static EquationId square() { return {Tag::Square, 2, 2, std::nullopt}; }
  static EquationId sim_n() { return {Tag::SimN, 2, 2, std::nullopt}; }
  static EquationId lie_square() {
    return {Tag::LieSquare, 2, 2, std::nullopt};
  }
  static EquationId cube() { return {Tag::Cube, 3, 2, std::nullopt}; }
  static EquationId power_a(int alpha);
  static EquationId power_x(int alpha);
  /// g(0) != 0 is validated against g's coefficient ring at construction.
  static EquationId power_xg(int alpha, UniPoly g);

  std::string name() const;
};

/// Left-hand side minus right-hand side; zero iff the pair solves the
/// equation. For the binomial family the ring characteristic must not
/// divide k! (the binomial-coefficient hypotheses), else invalid_argument.
Matrix residual(const EquationId& eq, const Matrix& a, const Matrix& x_or_b);

/// For the binomial family: a solution shifted by (A - mu I, B - mu I) is
/// again a solution. Throws if (a, b) does not solve eq.
bool shift_invariance_check(const EquationId& eq, const Matrix& a,
                            const Matrix& b, const RingValue& mu);

/// Verifies A^i B - B A^i = i A^(i-1) f(A), given [A,B] = f(A) (checked).
bool recurrence_check(const Matrix& a, const Matrix& b, const UniPoly& f,
                      int i);

struct SolutionFamily {
  enum class Kind { Explicit, Parametrized, IdealDescribed };
  Kind kind = Kind::Explicit;
  std::vector<Matrix> matrices;
  std::vector<std::string> param_names;       // Parametrized
  std::vector<std::string> derivation_trace;  // Parametrized
  std::vector<MultiPoly> ideal_gens;          // IdealDescribed
};

/// Solves X J_n - J_n X = X^alpha for strictly upper triangular X whose
/// first row is the given n-1 parameters, marching superdiagonal by
/// superdiagonal; each step solves one linear equation in one unknown. A
/// vanishing pivot (alpha = 2 only) raises pivot_failure naming the entry.
/// The returned X is re-verified against the equation.
SolutionFamily solve_jordan_fiber(int n, int alpha,
                                  const std::vector<RingValue>& params);

/// True iff rank(X^k) = n - k for all k, i.e. nilpotent X is similar to the
/// full Jordan block.
bool jordan_fiber_similarity_check(const Matrix& x);

/// Exhaustive scan of all X over a finite ring (budget-checked), returning
/// every solution in a deterministic order.
SolutionFamily brute_force_solutions(const EquationId& eq, const Matrix& a,
                                     bool nilpotent_only = false,
                                     std::uint64_t budget = 20000000);

/// Enumerates all pairs (A, B) over the ring, filters the solutions of eq,
/// and asserts the predicate on each. FAIL embeds the first counterexample.
CheckReport pair_enumeration(
    const EquationId& eq, const RingSpec& ring, int n,
    const std::function<bool(const Matrix&, const Matrix&)>& predicate,
    const std::string& predicate_name, std::uint64_t budget = 20000000);

/// The n^2 entry polynomials of AX - XA - X^alpha with both A and X
/// symbolic (variables a_ij and x_ij). eq must be PowerX.
std::vector<MultiPoly> generic_system(const EquationId& eq, int n,
                                      CoeffField field);

/// Groebner run over the generic system: reports, per item, whether every
/// entry of X^alpha and every x_ij^exponent_claim lies in the equation
/// ideal. Status PASS means the computation completed; the membership
/// outcomes are metrics (callers assert the expected pattern). Budget
/// overruns are INCONCLUSIVE.
CheckReport generic_membership_check(int n, int alpha, int exponent_claim,
                                     long characteristic,
                                     const GroebnerOptions& opts = {});

/// For a solution of AX - XA = X^alpha: checks n! [A,X]^(2^n - 1) = 0, and
/// [A,X]^(2^n - 1) = 0 plus nilpotency of X when n! is not a zero-divisor.
CheckReport jacobson_nilpotency_check(const Matrix& a, const Matrix& x,
                                      int alpha);

/// Samples random words P, Q in {A, X} and random combinations of
/// P (AX - XA) Q, asserting each is nilpotent (bounded power test). Premises:
/// X nilpotent and (A, X) solves the PowerXg equation.
CheckReport nilpotent_ideal_check(const Matrix& a, const Matrix& x,
                                  const EquationId& eq, int word_samples,
                                  std::uint64_t seed);

/// For (A, B) solving AB - BA = A^alpha with alpha - 1 a unit: the pair
/// (A^(alpha-1), (alpha-1)^{-1} B) solves the alpha = 2 equation. Verified
/// before returning.
std::pair<Matrix, Matrix> alpha_reduction(const Matrix& a, const Matrix& b,
                                          int alpha);

struct BlockSpec {
  RingValue lambda;
  int size;
};

/// For A = P diag(lambda_i I_{n_i}) P^{-1} with pairwise non-zero-divisor
/// differences and X a nilpotent solution of the PowerXg equation:
/// P^{-1} X P is block diagonal with X_i^alpha g(X_i) = 0, and X^alpha = 0
/// when g(0) is a unit. Hypothesis violations are INCONCLUSIVE; conclusion
/// violations are FAIL (a falsification alarm).
CheckReport block_structure_check(const Matrix& a, const Matrix& x,
                                  const std::vector<BlockSpec>& blocks,
                                  const Matrix& p, const EquationId& eq);

/// Nilpotency bound used for matrices over a ring: n times the ring's
/// element nilindex bound, capped at 64.
int matrix_nilpotency_bound(const RingSpec& ring, int n);

}  // namespace commulab
