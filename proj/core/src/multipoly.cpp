#include "commulab/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace commulab {

// ---------------------------------------------------------------------------
// coefficients

namespace {

std::int64_t norm_mod(std::int64_t v, long p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, long p) {
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, nt = 1, r = p, nr = norm_mod(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return norm_mod(t, p);
}

}  // namespace

Coeff coeff_from_long(const CoeffField& f, long v) {
  if (f.p > 0) return norm_mod(v, f.p);
  return mpq_class(v);
}

Coeff coeff_from_mpq(const CoeffField& f, const mpq_class& v) {
  if (f.p == 0) return v;
  // reduce a/b mod p
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class pz(f.p);
  mpz_class nr, dr;
  mpz_mod(nr.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  mpz_mod(dr.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  if (dr == 0) throw std::domain_error("denominator vanishes mod p");
  std::int64_t n = nr.get_si(), d = dr.get_si();
  return norm_mod(n * inv_mod(d, f.p), f.p);
}

Coeff coeff_add(const CoeffField& f, const Coeff& a, const Coeff& b) {
  if (f.p > 0)
    return norm_mod(std::get<std::int64_t>(a) + std::get<std::int64_t>(b), f.p);
  return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
}

Coeff coeff_sub(const CoeffField& f, const Coeff& a, const Coeff& b) {
  if (f.p > 0)
    return norm_mod(std::get<std::int64_t>(a) - std::get<std::int64_t>(b), f.p);
  return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
}

Coeff coeff_mul(const CoeffField& f, const Coeff& a, const Coeff& b) {
  if (f.p > 0)
    return norm_mod(std::get<std::int64_t>(a) * std::get<std::int64_t>(b), f.p);
  return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
}

Coeff coeff_neg(const CoeffField& f, const Coeff& a) {
  if (f.p > 0) return norm_mod(-std::get<std::int64_t>(a), f.p);
  return mpq_class(-std::get<mpq_class>(a));
}

Coeff coeff_inv(const CoeffField& f, const Coeff& a) {
  if (f.p > 0) return inv_mod(std::get<std::int64_t>(a), f.p);
  const mpq_class& q = std::get<mpq_class>(a);
  if (q == 0) throw std::domain_error("inverse of zero");
  return mpq_class(1 / q);
}

bool coeff_is_zero(const Coeff& a) {
  if (std::holds_alternative<std::int64_t>(a))
    return std::get<std::int64_t>(a) == 0;
  return std::get<mpq_class>(a) == 0;
}

bool coeff_is_one(const Coeff& a) {
  if (std::holds_alternative<std::int64_t>(a))
    return std::get<std::int64_t>(a) == 1;
  return std::get<mpq_class>(a) == 1;
}

std::string coeff_str(const Coeff& a) {
  if (std::holds_alternative<std::int64_t>(a))
    return std::to_string(std::get<std::int64_t>(a));
  const mpq_class& q = std::get<mpq_class>(a);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// monomials

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned v = static_cast<unsigned>(a[i]) + b[i];
    if (v > 0xffff) throw std::overflow_error("monomial exponent overflow");
    m[i] = static_cast<std::uint16_t>(v);
  }
  return m;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw std::invalid_argument("monomial division underflow");
    m[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  }
  return m;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

// degrevlex restricted to indices [lo, hi)
int drl_range(const Monomial& a, const Monomial& b, std::size_t lo,
              std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex: {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::DegRevLex:
      return drl_range(a, b, 0, a.size());
    case Kind::BlockDegRevLex: {
      int c = drl_range(a, b, block_lo, block_hi);
      if (c != 0) return c;
      // remaining variables: the part before the block, then after
      Monomial ra, rb;
      ra.reserve(a.size());
      rb.reserve(b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i >= static_cast<std::size_t>(block_lo) &&
            i < static_cast<std::size_t>(block_hi))
          continue;
        ra.push_back(a[i]);
        rb.push_back(b[i]);
      }
      return drl_range(ra, rb, 0, ra.size());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(CoeffField field, VarListPtr vars)
    : field_(field), vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("null variable list");
}

MultiPoly MultiPoly::zero(CoeffField field, VarListPtr vars) {
  return MultiPoly(field, std::move(vars));
}

MultiPoly MultiPoly::constant(CoeffField field, VarListPtr vars,
                              const Coeff& c) {
  MultiPoly p(field, std::move(vars));
  p.add_term(Monomial(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(CoeffField field, VarListPtr vars, int index) {
  MultiPoly p(field, std::move(vars));
  if (index < 0 || index >= p.nvars())
    throw std::out_of_range("variable index");
  Monomial m(p.nvars(), 0);
  m[index] = 1;
  p.add_term(m, coeff_from_long(p.field_, 1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Coeff& c) {
  if (static_cast<int>(m.size()) != nvars())
    throw std::invalid_argument("monomial arity mismatch");
  if (coeff_is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = coeff_add(field_, it->second, c);
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return field_ == other.field_ && *vars_ == *other.vars_ &&
         terms_ == other.terms_;
}

std::pair<Monomial, Coeff> MultiPoly::leading_term(
    const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

MultiPoly MultiPoly::substitute(
    const std::vector<std::optional<Coeff>>& values) const {
  if (static_cast<int>(values.size()) != nvars())
    throw std::invalid_argument("substitution arity mismatch");
  MultiPoly out(field_, vars_);
  for (const auto& [m, c] : terms_) {
    Coeff factor = c;
    Monomial rest(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!values[i]) {
        rest[i] = m[i];
        continue;
      }
      for (int k = 0; k < m[i]; ++k)
        factor = coeff_mul(field_, factor, *values[i]);
    }
    out.add_term(rest, factor);
  }
  return out;
}

Coeff MultiPoly::eval_at(const std::vector<Coeff>& point) const {
  std::vector<std::optional<Coeff>> values(point.begin(), point.end());
  MultiPoly p = substitute(values);
  Coeff acc = coeff_from_long(field_, 0);
  for (const auto& [m, c] : p.terms_) acc = coeff_add(field_, acc, c);
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  // print descending degrevlex for a stable readable form
  std::vector<const std::pair<const Monomial, Coeff>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord = MonomialOrder::degrevlex();
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return ord.less(b->first, a->first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    std::string cs = coeff_str(t->second);
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) os << "-", cs = cs.substr(1);
      first = false;
    } else {
      os << (negative ? " - " : " + ");
      if (negative) cs = cs.substr(1);
    }
    std::string vars_part;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!vars_part.empty()) vars_part += "*";
      vars_part += (*vars_)[i];
      if (t->first[i] > 1) vars_part += "^" + std::to_string(t->first[i]);
    }
    if (vars_part.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << vars_part;
    } else {
      os << cs << "*" << vars_part;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// arithmetic

namespace {
void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("coefficient field mismatch");
  if (a.vars() != b.vars() && *a.vars() != *b.vars())
    throw std::invalid_argument("variable-set mismatch");
}
}  // namespace

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

MultiPoly neg(const MultiPoly& a) {
  MultiPoly out(a.field(), a.vars());
  for (const auto& [m, c] : a.terms()) out.add_term(m, coeff_neg(a.field(), c));
  return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return add(a, neg(b)); }

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly out(a.field(), a.vars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(monomial_mul(ma, mb), coeff_mul(a.field(), ca, cb));
  return out;
}

MultiPoly scale(const Coeff& c, const MultiPoly& a) {
  MultiPoly out(a.field(), a.vars());
  if (coeff_is_zero(c)) return out;
  for (const auto& [m, cc] : a.terms())
    out.add_term(m, coeff_mul(a.field(), c, cc));
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return sub(a, b); }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b); }

MultiPoly spoly(const MultiPoly& p, const MultiPoly& q,
                const MonomialOrder& ord) {
  require_compatible(p, q);
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("S-polynomial of zero");
  auto [mp, cp] = p.leading_term(ord);
  auto [mq, cq] = q.leading_term(ord);
  Monomial l = monomial_lcm(mp, mq);
  MultiPoly up(p.field(), p.vars());
  up.add_term(monomial_div(l, mp), coeff_inv(p.field(), cp));
  MultiPoly uq(q.field(), q.vars());
  uq.add_term(monomial_div(l, mq), coeff_inv(q.field(), cq));
  return sub(mul(up, p), mul(uq, q));
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct PolyParser {
  CoeffField field;
  const VarListPtr& vars;
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected integer in polynomial at " +
                                  std::to_string(start));
    return std::stol(std::string(s.substr(start, pos - start)));
  }

  Coeff parse_number() {
    long num = parse_int();
    if (peek_is('/')) {
      ++pos;
      long den = parse_int();
      return coeff_from_mpq(field, mpq_class(num, den));
    }
    return coeff_from_long(field, num);
  }

  // returns (coefficient, monomial)
  std::pair<Coeff, Monomial> parse_term() {
    Coeff c = coeff_from_long(field, 1);
    Monomial m(vars->size(), 0);
    bool first_factor = true;
    bool consumed = false;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch)) ||
          ((ch == '-' || ch == '+') && first_factor)) {
        c = coeff_mul(field, c, parse_number());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                s[pos] == '_'))
          ++pos;
        std::string name(s.substr(start, pos - start));
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end())
          throw std::invalid_argument("unknown variable '" + name + "'");
        int idx = static_cast<int>(it - vars->begin());
        int exp = 1;
        if (peek_is('^')) {
          ++pos;
          exp = static_cast<int>(parse_int());
          if (exp < 0) throw std::invalid_argument("negative exponent");
        }
        m[idx] = static_cast<std::uint16_t>(m[idx] + exp);
      } else {
        break;
      }
      first_factor = false;
      consumed = true;
      if (!peek_is('*')) break;
      ++pos;  // consume '*'
    }
    if (!consumed)
      throw std::invalid_argument("empty term in polynomial at position " +
                                  std::to_string(pos));
    return {c, m};
  }

  MultiPoly parse() {
    MultiPoly out(field, vars);
    skip_ws();
    if (pos >= s.size()) return out;
    bool negate = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      negate = s[pos] == '-';
      ++pos;
    }
    for (;;) {
      auto [c, m] = parse_term();
      out.add_term(m, negate ? coeff_neg(field, c) : c);
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        negate = false;
        ++pos;
      } else if (s[pos] == '-') {
        negate = true;
        ++pos;
      } else {
        throw std::invalid_argument("unexpected character '" +
                                    std::string(1, s[pos]) +
                                    "' in polynomial");
      }
    }
    return out;
  }
};

}  // namespace

MultiPoly parse_multipoly(CoeffField field, const VarListPtr& vars,
                          std::string_view text) {
  PolyParser parser{field, vars, text};
  return parser.parse();
}

}  // namespace commulab
