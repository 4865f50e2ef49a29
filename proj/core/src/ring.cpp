#include "commulab/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace commulab {

namespace {

using detail::RingSpecNode;
using detail::RingSpecPtr;

[[noreturn]] void bad_spec(const std::string& msg) {
  throw std::invalid_argument("ring spec: " + msg);
}

[[noreturn]] void bad_element(const std::string& msg) {
  throw std::invalid_argument("ring element: " + msg);
}

void require_same_ring(const RingValue& a, const RingValue& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("operands belong to different rings");
}

std::int64_t mod_i64(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Trial factorization; large leftover cofactors are accepted only when prime.
std::vector<std::pair<mpz_class, int>> factor_exact(mpz_class m) {
  std::vector<std::pair<mpz_class, int>> out;
  for (mpz_class p = 2; p * p <= m && p < 1000000;
       p = (p == 2 ? mpz_class(3) : mpz_class(p + 2))) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (m > 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
      throw std::domain_error("modulus too large to factor: " + m.get_str());
    out.emplace_back(m, 1);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::integers() {
  static const RingSpec r{std::make_shared<RingSpecNode>(
      RingSpecNode{RingKind::Integers, 0, false, 0, {}})};
  return r;
}

RingSpec RingSpec::rationals() {
  static const RingSpec r{std::make_shared<RingSpecNode>(
      RingSpecNode{RingKind::Rationals, 0, false, 0, {}})};
  return r;
}

RingSpec RingSpec::mod(const mpz_class& m) {
  if (m < 2) bad_spec("Zmod modulus must be >= 2, got " + m.get_str());
  RingSpecNode node{RingKind::Mod, m, false, 0, {}};
  if (m.fits_slong_p() && m.get_si() < (1LL << 31)) {
    node.small_modulus = true;
    node.modulus_i64 = m.get_si();
  }
  return RingSpec{std::make_shared<RingSpecNode>(std::move(node))};
}

RingSpec RingSpec::gf(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    bad_spec("GF modulus must be prime, got " + p.get_str());
  RingSpecNode node{RingKind::GF, p, false, 0, {}};
  if (p.fits_slong_p() && p.get_si() < (1LL << 31)) {
    node.small_modulus = true;
    node.modulus_i64 = p.get_si();
  }
  return RingSpec{std::make_shared<RingSpecNode>(std::move(node))};
}

RingSpec RingSpec::product(std::vector<RingSpec> components) {
  if (components.size() < 2) bad_spec("Prod needs at least 2 components");
  RingSpecNode node{RingKind::Product, 0, false, 0, std::move(components)};
  return RingSpec{std::make_shared<RingSpecNode>(std::move(node))};
}

RingSpec RingSpec::dual(RingSpec base) {
  RingSpecNode node{RingKind::Dual, 0, false, 0, {std::move(base)}};
  return RingSpec{std::make_shared<RingSpecNode>(std::move(node))};
}

const mpz_class& RingSpec::modulus() const {
  if (kind() != RingKind::Mod && kind() != RingKind::GF)
    throw std::logic_error("modulus() on a ring without one");
  return node_->modulus;
}

const std::vector<RingSpec>& RingSpec::components() const {
  if (kind() != RingKind::Product)
    throw std::logic_error("components() on a non-product ring");
  return node_->components;
}

const RingSpec& RingSpec::base() const {
  if (kind() != RingKind::Dual)
    throw std::logic_error("base() on a non-dual ring");
  return node_->components[0];
}

bool RingSpec::is_finite() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return false;
    case RingKind::Mod:
    case RingKind::GF:
      return true;
    case RingKind::Product:
      return std::all_of(components().begin(), components().end(),
                         [](const RingSpec& c) { return c.is_finite(); });
    case RingKind::Dual:
      return base().is_finite();
  }
  return false;
}

bool RingSpec::is_field() const {
  return kind() == RingKind::GF || kind() == RingKind::Rationals;
}

bool RingSpec::is_reduced() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::GF:
      return true;
    case RingKind::Mod: {
      for (const auto& [p, e] : factor_exact(node_->modulus))
        if (e > 1) return false;
      return true;
    }
    case RingKind::Product:
      return std::all_of(components().begin(), components().end(),
                         [](const RingSpec& c) { return c.is_reduced(); });
    case RingKind::Dual:
      return false;  // eps^2 = 0, eps != 0
  }
  return false;
}

mpz_class RingSpec::characteristic() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return 0;
    case RingKind::Mod:
    case RingKind::GF:
      return node_->modulus;
    case RingKind::Product: {
      mpz_class l = 1;
      for (const auto& c : components()) {
        mpz_class ch = c.characteristic();
        if (ch == 0) return 0;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ch.get_mpz_t());
      }
      return l;
    }
    case RingKind::Dual:
      return base().characteristic();
  }
  return 0;
}

mpz_class RingSpec::cardinality() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      throw std::domain_error("cardinality of an infinite ring");
    case RingKind::Mod:
    case RingKind::GF:
      return node_->modulus;
    case RingKind::Product: {
      mpz_class c = 1;
      for (const auto& comp : components()) c *= comp.cardinality();
      return c;
    }
    case RingKind::Dual: {
      mpz_class b = base().cardinality();
      return b * b;
    }
  }
  return 0;
}

int RingSpec::nilpotency_bound() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::GF:
      return 1;
    case RingKind::Mod: {
      int b = 1;
      for (const auto& [p, e] : factor_exact(node_->modulus))
        b = std::max(b, e);
      return b;
    }
    case RingKind::Product: {
      int b = 1;
      for (const auto& c : components()) b = std::max(b, c.nilpotency_bound());
      return b;
    }
    case RingKind::Dual:
      return base().nilpotency_bound() + 1;
  }
  return 1;
}

bool RingSpec::operator==(const RingSpec& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::Mod:
    case RingKind::GF:
      return node_->modulus == other.node_->modulus;
    case RingKind::Product:
    case RingKind::Dual:
      return node_->components == other.node_->components;
  }
  return false;
}

std::string RingSpec::str() const {
  switch (kind()) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::Mod:
      return "Zmod:" + node_->modulus.get_str();
    case RingKind::GF:
      return "GF:" + node_->modulus.get_str();
    case RingKind::Dual:
      return "Dual:" + base().str();
    case RingKind::Product: {
      std::string s = "Prod:";
      for (std::size_t i = 0; i < components().size(); ++i) {
        if (i) s += ',';
        s += components()[i].str();
      }
      return s;
    }
  }
  return {};
}

RingValue RingSpec::zero() const { return from_int(0); }
RingValue RingSpec::one() const { return from_int(1); }

RingValue RingSpec::from_int(const mpz_class& k) const {
  switch (kind()) {
    case RingKind::Integers:
      return RingValue(*this, k);
    case RingKind::Rationals:
      return RingValue(*this, mpq_class(k));
    case RingKind::Mod:
    case RingKind::GF: {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), k.get_mpz_t(), node_->modulus.get_mpz_t());
      if (node_->small_modulus)
        return RingValue(*this, static_cast<std::int64_t>(r.get_si()));
      return RingValue(*this, r);
    }
    case RingKind::Product: {
      std::vector<RingValue> t;
      t.reserve(components().size());
      for (const auto& c : components()) t.push_back(c.from_int(k));
      return RingValue(*this, std::move(t));
    }
    case RingKind::Dual: {
      std::vector<RingValue> t{base().from_int(k), base().from_int(0)};
      return RingValue(*this, std::move(t));
    }
  }
  throw std::logic_error("unreachable ring kind");
}

// ---------------------------------------------------------------------------
// parse_ring

namespace {

// Recursive-descent over the comma list. `pos` advances past one spec.
RingSpec parse_spec_at(std::string_view s, std::size_t& pos);

std::vector<RingSpec> parse_spec_list(std::string_view s, std::size_t& pos) {
  std::vector<RingSpec> out;
  out.push_back(parse_spec_at(s, pos));
  while (pos < s.size() && s[pos] == ',') {
    ++pos;
    out.push_back(parse_spec_at(s, pos));
  }
  return out;
}

mpz_class parse_spec_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start) bad_spec("expected an integer at position " +
                             std::to_string(start) + " in '" + std::string(s) + "'");
  return mpz_class(std::string(s.substr(start, pos - start)));
}

RingSpec parse_spec_at(std::string_view s, std::size_t& pos) {
  auto starts_with = [&](std::string_view tag) {
    return s.substr(pos).substr(0, tag.size()) == tag;
  };
  if (starts_with("Zmod:")) {
    pos += 5;
    return RingSpec::mod(parse_spec_int(s, pos));
  }
  if (starts_with("GF:")) {
    pos += 3;
    return RingSpec::gf(parse_spec_int(s, pos));
  }
  if (starts_with("Dual:")) {
    pos += 5;
    return RingSpec::dual(parse_spec_at(s, pos));
  }
  if (starts_with("Prod:")) {
    pos += 5;
    return RingSpec::product(parse_spec_list(s, pos));
  }
  if (starts_with("Z")) {
    pos += 1;
    return RingSpec::integers();
  }
  if (starts_with("Q")) {
    pos += 1;
    return RingSpec::rationals();
  }
  bad_spec("unrecognized ring at position " + std::to_string(pos) + " in '" +
           std::string(s) + "'");
}

}  // namespace

RingSpec parse_ring(std::string_view spec_string) {
  std::size_t pos = 0;
  RingSpec r = parse_spec_at(spec_string, pos);
  if (pos != spec_string.size())
    bad_spec("trailing characters in '" + std::string(spec_string) + "'");
  return r;
}

// ---------------------------------------------------------------------------
// RingValue

RingValue::RingValue(RingSpec spec, Payload payload)
    : spec_(std::move(spec)), payload_(std::move(payload)) {}

bool RingValue::is_zero() const {
  switch (spec_.kind()) {
    case RingKind::Integers:
      return integer() == 0;
    case RingKind::Rationals:
      return rational() == 0;
    case RingKind::Mod:
    case RingKind::GF:
      return spec_.node()->small_modulus ? residue_i64() == 0 : integer() == 0;
    case RingKind::Product:
    case RingKind::Dual:
      return std::all_of(tuple().begin(), tuple().end(),
                         [](const RingValue& v) { return v.is_zero(); });
  }
  return false;
}

bool RingValue::is_one() const {
  switch (spec_.kind()) {
    case RingKind::Integers:
      return integer() == 1;
    case RingKind::Rationals:
      return rational() == 1;
    case RingKind::Mod:
    case RingKind::GF:
      return spec_.node()->small_modulus ? residue_i64() == 1 : integer() == 1;
    case RingKind::Product:
      return std::all_of(tuple().begin(), tuple().end(),
                         [](const RingValue& v) { return v.is_one(); });
    case RingKind::Dual:
      return dual_base().is_one() && dual_eps().is_zero();
  }
  return false;
}

bool RingValue::operator==(const RingValue& other) const {
  if (spec_ != other.spec_) return false;
  return payload_ == other.payload_;
}

// ---------------------------------------------------------------------------
// arithmetic

RingValue add(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
      return RingValue(R, mpz_class(a.integer() + b.integer()));
    case RingKind::Rationals:
      return RingValue(R, mpq_class(a.rational() + b.rational()));
    case RingKind::Mod:
    case RingKind::GF: {
      const auto* n = R.node();
      if (n->small_modulus)
        return RingValue(R, mod_i64(a.residue_i64() + b.residue_i64(),
                                    n->modulus_i64));
      mpz_class r;
      mpz_class s = a.integer() + b.integer();
      mpz_mod(r.get_mpz_t(), s.get_mpz_t(), n->modulus.get_mpz_t());
      return RingValue(R, r);
    }
    case RingKind::Product:
    case RingKind::Dual: {
      std::vector<RingValue> t;
      t.reserve(a.tuple().size());
      for (std::size_t i = 0; i < a.tuple().size(); ++i)
        t.push_back(add(a.tuple()[i], b.tuple()[i]));
      return RingValue(R, std::move(t));
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue neg(const RingValue& a) {
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
      return RingValue(R, mpz_class(-a.integer()));
    case RingKind::Rationals:
      return RingValue(R, mpq_class(-a.rational()));
    case RingKind::Mod:
    case RingKind::GF: {
      const auto* n = R.node();
      if (n->small_modulus)
        return RingValue(R, a.residue_i64() == 0
                                ? std::int64_t{0}
                                : n->modulus_i64 - a.residue_i64());
      mpz_class r;
      mpz_class s = -a.integer();
      mpz_mod(r.get_mpz_t(), s.get_mpz_t(), n->modulus.get_mpz_t());
      return RingValue(R, r);
    }
    case RingKind::Product:
    case RingKind::Dual: {
      std::vector<RingValue> t;
      t.reserve(a.tuple().size());
      for (const auto& c : a.tuple()) t.push_back(neg(c));
      return RingValue(R, std::move(t));
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue sub(const RingValue& a, const RingValue& b) { return add(a, neg(b)); }

RingValue mul(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
      return RingValue(R, mpz_class(a.integer() * b.integer()));
    case RingKind::Rationals:
      return RingValue(R, mpq_class(a.rational() * b.rational()));
    case RingKind::Mod:
    case RingKind::GF: {
      const auto* n = R.node();
      if (n->small_modulus)
        return RingValue(R, (a.residue_i64() * b.residue_i64()) % n->modulus_i64);
      mpz_class r;
      mpz_class s = a.integer() * b.integer();
      mpz_mod(r.get_mpz_t(), s.get_mpz_t(), n->modulus.get_mpz_t());
      return RingValue(R, r);
    }
    case RingKind::Product: {
      std::vector<RingValue> t;
      t.reserve(a.tuple().size());
      for (std::size_t i = 0; i < a.tuple().size(); ++i)
        t.push_back(mul(a.tuple()[i], b.tuple()[i]));
      return RingValue(R, std::move(t));
    }
    case RingKind::Dual: {
      // (a0 + a1 e)(b0 + b1 e) = a0 b0 + (a0 b1 + a1 b0) e
      std::vector<RingValue> t;
      t.reserve(2);
      t.push_back(mul(a.dual_base(), b.dual_base()));
      t.push_back(add(mul(a.dual_base(), b.dual_eps()),
                      mul(a.dual_eps(), b.dual_base())));
      return RingValue(R, std::move(t));
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue ring_pow(const RingValue& a, unsigned long e) {
  RingValue acc = a.ring().one();
  RingValue base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

RingValue operator+(const RingValue& a, const RingValue& b) { return add(a, b); }
RingValue operator-(const RingValue& a, const RingValue& b) { return sub(a, b); }
RingValue operator*(const RingValue& a, const RingValue& b) { return mul(a, b); }
RingValue operator-(const RingValue& a) { return neg(a); }

// ---------------------------------------------------------------------------
// predicates

bool is_unit(const RingValue& x) {
  const RingSpec& R = x.ring();
  switch (R.kind()) {
    case RingKind::Integers:
      return x.integer() == 1 || x.integer() == -1;
    case RingKind::Rationals:
      return x.rational() != 0;
    case RingKind::GF:
      return !x.is_zero();
    case RingKind::Mod: {
      const auto* n = R.node();
      if (n->small_modulus)
        return std::gcd(x.residue_i64(), n->modulus_i64) == 1;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.integer().get_mpz_t(),
              n->modulus.get_mpz_t());
      return g == 1;
    }
    case RingKind::Product:
      return std::all_of(x.tuple().begin(), x.tuple().end(),
                         [](const RingValue& c) { return is_unit(c); });
    case RingKind::Dual:
      return is_unit(x.dual_base());
  }
  return false;
}

bool is_zero_divisor(const RingValue& x) {
  if (x.is_zero()) return false;
  const RingSpec& R = x.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::GF:
      return false;
    case RingKind::Mod: {
      const auto* n = R.node();
      if (n->small_modulus)
        return std::gcd(x.residue_i64(), n->modulus_i64) != 1;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.integer().get_mpz_t(), n->modulus.get_mpz_t());
      return g != 1;
    }
    case RingKind::Product:
      return std::any_of(x.tuple().begin(), x.tuple().end(),
                         [](const RingValue& c) {
                           return c.is_zero() || is_zero_divisor(c);
                         });
    case RingKind::Dual:
      return x.dual_base().is_zero() || is_zero_divisor(x.dual_base());
  }
  return false;
}

RingValue inverse(const RingValue& x) {
  const RingSpec& R = x.ring();
  if (!is_unit(x)) throw std::domain_error("inverse of a non-unit");
  switch (R.kind()) {
    case RingKind::Integers:
      return x;  // 1 or -1
    case RingKind::Rationals:
      return RingValue(R, mpq_class(1 / x.rational()));
    case RingKind::Mod:
    case RingKind::GF: {
      const auto* n = R.node();
      mpz_class v = n->small_modulus ? mpz_class(static_cast<long>(x.residue_i64()))
                                     : x.integer();
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), n->modulus.get_mpz_t()))
        throw std::domain_error("inverse of a non-unit");
      if (n->small_modulus)
        return RingValue(R, static_cast<std::int64_t>(inv.get_si()));
      return RingValue(R, inv);
    }
    case RingKind::Product: {
      std::vector<RingValue> t;
      t.reserve(x.tuple().size());
      for (const auto& c : x.tuple()) t.push_back(inverse(c));
      return RingValue(R, std::move(t));
    }
    case RingKind::Dual: {
      // (a + b e)^-1 = a^-1 - b a^-2 e
      RingValue ia = inverse(x.dual_base());
      std::vector<RingValue> t{ia, neg(mul(mul(ia, ia), x.dual_eps()))};
      return RingValue(R, std::move(t));
    }
  }
  throw std::logic_error("unreachable ring kind");
}

std::optional<int> element_nilindex(const RingValue& x, int bound) {
  if (bound < 1) throw std::invalid_argument("nilindex bound must be >= 1");
  RingValue p = x;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_zero()) return k;
    if (k < bound) p = mul(p, x);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// enumeration and ordering

std::vector<RingValue> enumerate_ring(const RingSpec& spec) {
  if (!spec.is_finite())
    throw std::domain_error("cannot enumerate an infinite ring");
  mpz_class card = spec.cardinality();
  if (card > 20000000)
    throw std::domain_error("ring too large to enumerate: " + card.get_str());
  std::vector<RingValue> out;
  out.reserve(card.get_ui());
  switch (spec.kind()) {
    case RingKind::Mod:
    case RingKind::GF: {
      for (mpz_class i = 0; i < spec.modulus(); ++i) out.push_back(spec.from_int(i));
      break;
    }
    case RingKind::Product: {
      std::vector<std::vector<RingValue>> comp;
      for (const auto& c : spec.components()) comp.push_back(enumerate_ring(c));
      std::vector<std::size_t> idx(comp.size(), 0);
      for (;;) {
        std::vector<RingValue> t;
        t.reserve(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) t.push_back(comp[i][idx[i]]);
        out.push_back(RingValue(spec, std::move(t)));
        // odometer, first component slowest
        std::size_t i = comp.size();
        while (i > 0) {
          --i;
          if (++idx[i] < comp[i].size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
      }
    }
    case RingKind::Dual: {
      std::vector<RingValue> b = enumerate_ring(spec.base());
      for (const auto& x : b)
        for (const auto& y : b)
          out.push_back(RingValue(spec, std::vector<RingValue>{x, y}));
      break;
    }
    default:
      throw std::domain_error("cannot enumerate an infinite ring");
  }
  return out;
}

bool value_less(const RingValue& a, const RingValue& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("value_less across rings");
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return a.integer() < b.integer();
    case RingKind::Rationals:
      return a.rational() < b.rational();
    case RingKind::Mod:
    case RingKind::GF:
      if (a.ring().node()->small_modulus) return a.residue_i64() < b.residue_i64();
      return a.integer() < b.integer();
    case RingKind::Product:
    case RingKind::Dual: {
      for (std::size_t i = 0; i < a.tuple().size(); ++i) {
        if (value_less(a.tuple()[i], b.tuple()[i])) return true;
        if (value_less(b.tuple()[i], a.tuple()[i])) return false;
      }
      return false;
    }
  }
  return false;
}

RingValue factorial_in_ring(const RingSpec& ring, unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return ring.from_int(f);
}

RingValue binomial_in_ring(const RingSpec& ring, unsigned long n,
                           unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return ring.from_int(b);
}

// ---------------------------------------------------------------------------
// element text format

namespace {

bool fully_parenthesized(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      --depth;
      if (depth == 0) return i + 1 == s.size();
    }
  }
  return false;
}

mpz_class parse_mpz(std::string_view s) {
  if (s.empty()) bad_element("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) bad_element("sign without digits in '" + std::string(s) + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      bad_element("invalid integer '" + std::string(s) + "'");
  return mpz_class(std::string(s));
}

}  // namespace

RingValue RingSpec::parse_element(std::string_view text) const {
  switch (kind()) {
    case RingKind::Integers:
      return RingValue(*this, parse_mpz(text));
    case RingKind::Mod:
    case RingKind::GF:
      return from_int(parse_mpz(text));
    case RingKind::Rationals: {
      auto slash = text.find('/');
      if (slash == std::string_view::npos)
        return RingValue(*this, mpq_class(parse_mpz(text)));
      mpz_class num = parse_mpz(text.substr(0, slash));
      mpz_class den = parse_mpz(text.substr(slash + 1));
      if (den == 0) bad_element("zero denominator in '" + std::string(text) + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return RingValue(*this, q);
    }
    case RingKind::Product: {
      if (!fully_parenthesized(text))
        bad_element("product element must look like (x|y), got '" +
                    std::string(text) + "'");
      std::string_view inner = text.substr(1, text.size() - 2);
      std::vector<std::string_view> parts;
      int depth = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') ++depth;
        if (inner[i] == ')') --depth;
        if (inner[i] == '|' && depth == 0) {
          parts.push_back(inner.substr(start, i - start));
          start = i + 1;
        }
      }
      parts.push_back(inner.substr(start));
      if (parts.size() != components().size())
        bad_element("product arity mismatch in '" + std::string(text) + "'");
      std::vector<RingValue> t;
      t.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i)
        t.push_back(components()[i].parse_element(parts[i]));
      return RingValue(*this, std::move(t));
    }
    case RingKind::Dual: {
      std::string_view base_part = text;
      std::string_view eps_part;
      bool has_eps = false;
      if (text.size() >= 2 && text.substr(text.size() - 2) == "?e") {
        has_eps = true;
        std::string_view body = text.substr(0, text.size() - 2);
        // rightmost top-level '+' splits base from eps
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 0; i < body.size(); ++i) {
          if (body[i] == '(') ++depth;
          if (body[i] == ')') --depth;
          if (body[i] == '+' && depth == 0 && i > 0) split = i;
        }
        if (split == std::string_view::npos) {
          base_part = {};
          eps_part = body;
        } else {
          base_part = body.substr(0, split);
          eps_part = body.substr(split + 1);
        }
      }
      auto parse_component = [&](std::string_view s) {
        if (base().kind() == RingKind::Dual && fully_parenthesized(s))
          s = s.substr(1, s.size() - 2);
        return base().parse_element(s);
      };
      RingValue b = base_part.empty() ? base().from_int(0) : parse_component(base_part);
      RingValue e = has_eps ? parse_component(eps_part) : base().from_int(0);
      return RingValue(*this, std::vector<RingValue>{std::move(b), std::move(e)});
    }
  }
  throw std::logic_error("unreachable ring kind");
}

std::string RingValue::str() const {
  switch (spec_.kind()) {
    case RingKind::Integers:
      return integer().get_str();
    case RingKind::Rationals: {
      if (rational().get_den() == 1) return rational().get_num().get_str();
      return rational().get_num().get_str() + "/" + rational().get_den().get_str();
    }
    case RingKind::Mod:
    case RingKind::GF:
      return spec_.node()->small_modulus ? std::to_string(residue_i64())
                                         : integer().get_str();
    case RingKind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < tuple().size(); ++i) {
        if (i) s += '|';
        s += tuple()[i].str();
      }
      return s + ")";
    }
    case RingKind::Dual: {
      std::string b = dual_base().str();
      if (dual_eps().is_zero()) return b;
      std::string e = dual_eps().str();
      auto wrap = [&](std::string s) {
        if (spec_.base().kind() == RingKind::Dual &&
            (s.find('+') != std::string::npos || s.find("?e") != std::string::npos))
          return "(" + s + ")";
        return s;
      };
      return wrap(b) + "+" + wrap(e) + "?e";
    }
  }
  return {};
}

}  // namespace commulab
