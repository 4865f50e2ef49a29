#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commulab/errors.hpp"
#include "commulab/multipoly.hpp"
#include "commulab/report.hpp"

namespace commulab {

struct GroebnerOptions {
  /// Cap on S-pairs processed; exceeding it raises budget_exceeded.
  std::size_t max_pairs = 1000000;
  /// Cap on intermediate basis size.
  std::size_t max_basis = 20000;
};

/// A reduced Groebner basis: auto-reduced, monic, sorted by decreasing
/// leading monomial. Unique for a given ideal and order.
struct GroebnerBasis {
  MonomialOrder order;
  CoeffField field;
  VarListPtr vars;
  std::vector<MultiPoly> gens;

  bool is_unit_ideal() const;
  bool contains_in_ideal(const MultiPoly& p) const;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair update and normal
/// (minimal lcm degree) selection. Deterministic. Empty input gives the
/// empty basis of the zero ideal.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens,
                         const MonomialOrder& ord,
                         const GroebnerOptions& opts = {});

/// Unique remainder of p modulo the reduced basis; zero iff p is in the
/// ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

/// Krull dimension of the ideal, as the maximum size of a variable subset S
/// such that no leading monomial of the basis lies in k[S]. Throws
/// std::domain_error on the unit ideal.
int hilbert_dimension(const GroebnerBasis& gb);

/// Membership of p in the ideal extended to K(parameters)[block]: the
/// variables in [block_lo, block_hi) are the polynomial unknowns, every
/// other variable becomes an invertible parameter. Requires a basis computed
/// with MonomialOrder::block_degrevlex(block_lo, block_hi); decision is by
/// pseudo-reduction (parameter leading coefficients multiply through, so no
/// fraction arithmetic is needed).
bool extended_field_membership(const MultiPoly& p, const GroebnerBasis& gb,
                               int block_lo, int block_hi);

/// Identifier of a polynomial system whose variety dimension the paper-scale
/// experiments reproduce. See build_variety_system in symbolic.hpp for the
/// generators.
enum class VarietySystem {
  YFiber,           // {X | X J_n - J_n X = X^alpha}, expected n-1
  SFiber,           // YFiber plus the nilpotent-cone composition total
  NilpotentCone,    // {A | A nilpotent}, expected n^2 - n
  V4Fiber,          // {B nilpotent | A^3 - 3A^2B + 3AB^2 - B^3 = 0, A = J_4}
  V4CommutingFiber, // {B nilpotent | [J_4,B] = 0, (J_4 - B)^3 = 0}
  WCommuting,       // {(A,B) nilpotent, AB = BA}, expected n^2 - 1
};

VarietySystem variety_system_from_name(const std::string& name);
std::string variety_system_name(VarietySystem s);

struct VarietyDimensionConfig {
  int n = 2;
  int alpha = 2;
  long characteristic = 32003;  // 0 = rationals
  MonomialOrder order = MonomialOrder::degrevlex();
  GroebnerOptions groebner;
};

/// Builds the generator set for the system, runs Buchberger, and reports the
/// Hilbert dimension, plus derived totals where a fiber dimension composes
/// with the nilpotent-cone dimension n^2 - n. Budget overruns come back as
/// INCONCLUSIVE, never as a number.
CheckReport variety_dimension_experiment(VarietySystem system,
                                         const VarietyDimensionConfig& config);

}  // namespace commulab
