#include "commulab/symbolic.hpp"

#include <stdexcept>

namespace commulab {

SymbolicMatrix::SymbolicMatrix(CoeffField field, VarListPtr vars, int n)
    : field_(field), vars_(std::move(vars)), n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  entries_.assign(static_cast<std::size_t>(n) * n,
                  MultiPoly::zero(field_, vars_));
}

SymbolicMatrix SymbolicMatrix::zero(CoeffField field, VarListPtr vars, int n) {
  return SymbolicMatrix(field, std::move(vars), n);
}

SymbolicMatrix SymbolicMatrix::identity(CoeffField field, VarListPtr vars,
                                        int n) {
  SymbolicMatrix m(field, std::move(vars), n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = MultiPoly::constant(field, m.vars(), coeff_from_long(field, 1));
  return m;
}

SymbolicMatrix SymbolicMatrix::jordan(CoeffField field, VarListPtr vars,
                                      int n) {
  SymbolicMatrix m(field, std::move(vars), n);
  for (int i = 0; i + 1 < n; ++i)
    m.at(i, i + 1) =
        MultiPoly::constant(field, m.vars(), coeff_from_long(field, 1));
  return m;
}

SymbolicMatrix SymbolicMatrix::from_variables(CoeffField field,
                                              VarListPtr vars, int n,
                                              int var_offset) {
  SymbolicMatrix m(field, std::move(vars), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) =
          MultiPoly::variable(field, m.vars(), var_offset + i * n + j);
  return m;
}

MultiPoly SymbolicMatrix::trace() const {
  MultiPoly t = MultiPoly::zero(field_, vars_);
  for (int i = 0; i < n_; ++i) t = add(t, at(i, i));
  return t;
}

SymbolicMatrix add(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  SymbolicMatrix out(a.field(), a.vars(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out.at(i, j) = add(a.at(i, j), b.at(i, j));
  return out;
}

SymbolicMatrix sub(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  SymbolicMatrix out(a.field(), a.vars(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out.at(i, j) = sub(a.at(i, j), b.at(i, j));
  return out;
}

SymbolicMatrix mul(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  SymbolicMatrix out(a.field(), a.vars(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      MultiPoly acc = MultiPoly::zero(a.field(), a.vars());
      for (int k = 0; k < a.n(); ++k)
        acc = add(acc, mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = std::move(acc);
    }
  return out;
}

SymbolicMatrix scale_int(long c, const SymbolicMatrix& a) {
  SymbolicMatrix out(a.field(), a.vars(), a.n());
  Coeff cc = coeff_from_long(a.field(), c);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out.at(i, j) = scale(cc, a.at(i, j));
  return out;
}

SymbolicMatrix sym_pow(const SymbolicMatrix& a, int e) {
  if (e < 0) throw std::invalid_argument("negative matrix power");
  SymbolicMatrix acc = SymbolicMatrix::identity(a.field(), a.vars(), a.n());
  for (int i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

VarList matrix_var_names(int n, const std::string& prefix) {
  VarList names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back(prefix + std::to_string(i) + std::to_string(j));
  return names;
}

namespace {

std::vector<MultiPoly> matrix_entries(const SymbolicMatrix& m) {
  std::vector<MultiPoly> out;
  out.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.push_back(m.at(i, j));
  return out;
}

void append_nilpotency_gens(std::vector<MultiPoly>& gens,
                            const SymbolicMatrix& m) {
  SymbolicMatrix p = m;
  gens.push_back(p.trace());
  for (int k = 2; k <= m.n(); ++k) {
    p = mul(p, m);
    gens.push_back(p.trace());
  }
}

}  // namespace

PolySystem build_jordan_fiber_system(int n, int alpha, CoeffField field) {
  auto vars = std::make_shared<const VarList>(matrix_var_names(n, "x"));
  SymbolicMatrix x = SymbolicMatrix::from_variables(field, vars, n, 0);
  SymbolicMatrix j = SymbolicMatrix::jordan(field, vars, n);
  SymbolicMatrix residual = sub(sub(mul(x, j), mul(j, x)), sym_pow(x, alpha));
  return {field, vars, matrix_entries(residual)};
}

PolySystem build_nilpotent_cone_system(int n, CoeffField field) {
  auto vars = std::make_shared<const VarList>(matrix_var_names(n, "x"));
  SymbolicMatrix x = SymbolicMatrix::from_variables(field, vars, n, 0);
  std::vector<MultiPoly> gens;
  append_nilpotency_gens(gens, x);
  return {field, vars, std::move(gens)};
}

PolySystem build_v4_fiber_system(CoeffField field) {
  const int n = 4;
  auto vars = std::make_shared<const VarList>(matrix_var_names(n, "x"));
  SymbolicMatrix b = SymbolicMatrix::from_variables(field, vars, n, 0);
  SymbolicMatrix a = SymbolicMatrix::jordan(field, vars, n);
  SymbolicMatrix lhs =
      add(sub(sym_pow(a, 3), scale_int(3, mul(mul(a, a), b))),
          sub(scale_int(3, mul(a, mul(b, b))), sym_pow(b, 3)));
  std::vector<MultiPoly> gens = matrix_entries(lhs);
  append_nilpotency_gens(gens, b);
  return {field, vars, std::move(gens)};
}

PolySystem build_v4_commuting_fiber_system(CoeffField field) {
  const int n = 4;
  auto vars = std::make_shared<const VarList>(matrix_var_names(n, "x"));
  SymbolicMatrix b = SymbolicMatrix::from_variables(field, vars, n, 0);
  SymbolicMatrix a = SymbolicMatrix::jordan(field, vars, n);
  std::vector<MultiPoly> gens =
      matrix_entries(sub(mul(a, b), mul(b, a)));
  SymbolicMatrix d = sub(a, b);
  for (auto& g : matrix_entries(sym_pow(d, 3))) gens.push_back(std::move(g));
  append_nilpotency_gens(gens, b);
  return {field, vars, std::move(gens)};
}

PolySystem build_commuting_nilpotent_pair_system(int n, CoeffField field) {
  VarList names = matrix_var_names(n, "a");
  VarList xnames = matrix_var_names(n, "x");
  names.insert(names.end(), xnames.begin(), xnames.end());
  auto vars = std::make_shared<const VarList>(std::move(names));
  SymbolicMatrix a = SymbolicMatrix::from_variables(field, vars, n, 0);
  SymbolicMatrix b = SymbolicMatrix::from_variables(field, vars, n, n * n);
  std::vector<MultiPoly> gens = matrix_entries(sub(mul(a, b), mul(b, a)));
  append_nilpotency_gens(gens, a);
  append_nilpotency_gens(gens, b);
  return {field, vars, std::move(gens)};
}

PolySystem build_generic_power_system(int n, int alpha, CoeffField field) {
  VarList names = matrix_var_names(n, "a");
  VarList xnames = matrix_var_names(n, "x");
  names.insert(names.end(), xnames.begin(), xnames.end());
  auto vars = std::make_shared<const VarList>(std::move(names));
  SymbolicMatrix a = SymbolicMatrix::from_variables(field, vars, n, 0);
  SymbolicMatrix x = SymbolicMatrix::from_variables(field, vars, n, n * n);
  SymbolicMatrix residual = sub(sub(mul(a, x), mul(x, a)), sym_pow(x, alpha));
  return {field, vars, matrix_entries(residual)};
}

PolySystem build_specialized_power_system(int n, int alpha, CoeffField field,
                                          const std::vector<Coeff>& a_values) {
  if (static_cast<int>(a_values.size()) != n * n)
    throw std::invalid_argument("need n^2 specialization values");
  PolySystem sys = build_generic_power_system(n, alpha, field);
  std::vector<std::optional<Coeff>> subst(2 * n * n);
  for (int i = 0; i < n * n; ++i) subst[i] = a_values[i];
  for (auto& g : sys.gens) g = g.substitute(subst);
  return sys;
}

}  // namespace commulab
