#pragma once

#include <string>
#include <vector>

#include "commulab/multipoly.hpp"

namespace commulab {

/// Square matrix with MultiPoly entries; the substrate for equation ideals.
class SymbolicMatrix {
 public:
  SymbolicMatrix(CoeffField field, VarListPtr vars, int n);

  static SymbolicMatrix zero(CoeffField field, VarListPtr vars, int n);
  static SymbolicMatrix identity(CoeffField field, VarListPtr vars, int n);
  static SymbolicMatrix jordan(CoeffField field, VarListPtr vars, int n);
  /// Entries are the variables var_offset + i*n + j of the shared list.
  static SymbolicMatrix from_variables(CoeffField field, VarListPtr vars,
                                       int n, int var_offset);

  int n() const { return n_; }
  const CoeffField& field() const { return field_; }
  const VarListPtr& vars() const { return vars_; }
  const MultiPoly& at(int i, int j) const { return entries_[i * n_ + j]; }
  MultiPoly& at(int i, int j) { return entries_[i * n_ + j]; }

  MultiPoly trace() const;

 private:
  CoeffField field_;
  VarListPtr vars_;
  int n_;
  std::vector<MultiPoly> entries_;
};

SymbolicMatrix add(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix sub(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix mul(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix scale_int(long c, const SymbolicMatrix& a);
SymbolicMatrix sym_pow(const SymbolicMatrix& a, int e);

/// Variable names "x11".."xnn" (row-major, 1-based), optionally prefixed.
VarList matrix_var_names(int n, const std::string& prefix);

/// Everything a dimension run needs: the shared variable list and the
/// generator polynomials of the equation ideal.
struct PolySystem {
  CoeffField field;
  VarListPtr vars;
  std::vector<MultiPoly> gens;
};

/// {X | X J_n - J_n X = X^alpha} in the n^2 variables x_ij.
PolySystem build_jordan_fiber_system(int n, int alpha, CoeffField field);

/// Nilpotent cone {X | trace(X^k) = 0, k = 1..n}; cuts out exactly the
/// nilpotent matrices when the characteristic is 0 or greater than n.
PolySystem build_nilpotent_cone_system(int n, CoeffField field);

/// {B nilpotent | A^3 - 3 A^2 B + 3 A B^2 - B^3 = 0} with A = J_4 fixed;
/// 16 variables x_ij for B.
PolySystem build_v4_fiber_system(CoeffField field);

/// {B nilpotent | [J_4, B] = 0, (J_4 - B)^3 = 0}.
PolySystem build_v4_commuting_fiber_system(CoeffField field);

/// {(A, B) nilpotent pairs with AB = BA} in a_ij and x_ij (2 n^2 vars).
PolySystem build_commuting_nilpotent_pair_system(int n, CoeffField field);

/// Entries of AX - XA - X^alpha with both A = [a_ij] and X = [x_ij]
/// symbolic: the generic equation ideal in 2 n^2 variables.
PolySystem build_generic_power_system(int n, int alpha, CoeffField field);

/// Same ideal with the a_ij specialized to given constants (the randomized
/// specialization used at sizes where the fully generic run is infeasible).
PolySystem build_specialized_power_system(int n, int alpha, CoeffField field,
                                          const std::vector<Coeff>& a_values);

}  // namespace commulab
