#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace commulab {

/// Coefficient field for multivariate polynomials: GF(p) for a small prime
/// p > 0, or the rationals when p == 0.
struct CoeffField {
  long p = 0;
  bool operator==(const CoeffField&) const = default;
};

/// int64 residue in [0, p) for GF(p); exact rational for Q.
using Coeff = std::variant<std::int64_t, mpq_class>;

Coeff coeff_from_long(const CoeffField& f, long v);
Coeff coeff_from_mpq(const CoeffField& f, const mpq_class& v);
Coeff coeff_add(const CoeffField& f, const Coeff& a, const Coeff& b);
Coeff coeff_sub(const CoeffField& f, const Coeff& a, const Coeff& b);
Coeff coeff_mul(const CoeffField& f, const Coeff& a, const Coeff& b);
Coeff coeff_neg(const CoeffField& f, const Coeff& a);
Coeff coeff_inv(const CoeffField& f, const Coeff& a);
bool coeff_is_zero(const Coeff& a);
bool coeff_is_one(const Coeff& a);
std::string coeff_str(const Coeff& a);

/// Exponent vector; index i belongs to variable i of the owning var list.
using Monomial = std::vector<std::uint16_t>;

int monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

/// Total orders compatible with multiplication, 1 minimal. Variable 0 is the
/// biggest variable for lex; degrevlex breaks degree ties from the last
/// variable backwards. BlockDegRevLex compares the dominant variable block
/// [block_lo, block_hi) by degrevlex first, then the remaining variables:
/// the elimination order used when a block of variables is treated as
/// invertible parameters.
struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, BlockDegRevLex };
  Kind kind = Kind::DegRevLex;
  int block_lo = 0;
  int block_hi = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0, 0}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0, 0}; }
  static MonomialOrder block_degrevlex(int lo, int hi) {
    return {Kind::BlockDegRevLex, lo, hi};
  }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  std::string str() const {
    switch (kind) {
      case Kind::Lex:
        return "lex";
      case Kind::DegRevLex:
        return "degrevlex";
      case Kind::BlockDegRevLex:
        return "block-degrevlex[" + std::to_string(block_lo) + "," +
               std::to_string(block_hi) + ")";
    }
    return "?";
  }
  bool operator==(const MonomialOrder&) const = default;
};

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

/// Multivariate polynomial over GF(p) or Q with a fixed ordered variable
/// list. Terms are stored canonically (no zero coefficients); the monomial
/// order is supplied by the operations that need one.
class MultiPoly {
 public:
  MultiPoly(CoeffField field, VarListPtr vars);

  static MultiPoly zero(CoeffField field, VarListPtr vars);
  static MultiPoly constant(CoeffField field, VarListPtr vars, const Coeff& c);
  static MultiPoly variable(CoeffField field, VarListPtr vars, int index);

  const CoeffField& field() const { return field_; }
  const VarListPtr& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Coeff& c);

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  std::pair<Monomial, Coeff> leading_term(const MonomialOrder& ord) const;

  /// Substitutes constants for the variables where `values` is set; the
  /// result lives over the same variable list.
  MultiPoly substitute(const std::vector<std::optional<Coeff>>& values) const;
  Coeff eval_at(const std::vector<Coeff>& point) const;

  /// Text form like "3*x12^2*a11 - 1/2*x21"; round-trips with parse_multipoly.
  std::string str() const;

 private:
  CoeffField field_;
  VarListPtr vars_;
  std::map<Monomial, Coeff> terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);
MultiPoly scale(const Coeff& c, const MultiPoly& a);

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

/// S-polynomial of two nonzero polynomials with the same variable list.
MultiPoly spoly(const MultiPoly& p, const MultiPoly& q,
                const MonomialOrder& ord);

MultiPoly parse_multipoly(CoeffField field, const VarListPtr& vars,
                          std::string_view text);

}  // namespace commulab
