#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace commulab {

/// Commutative rings with unity supported by the library.
///
/// Dual(B) is B[eps]/(eps^2).  Product is a finite direct product with
/// componentwise operations.  Mod(m) is Z/mZ for any m >= 2; GF(p) is the
/// prime field Z/pZ with p checked prime at construction.
enum class RingKind { Integers, Rationals, Mod, GF, Product, Dual };

class RingSpec;

namespace detail {
struct RingSpecNode {
  RingKind kind;
  mpz_class modulus;             // Mod / GF
  bool small_modulus = false;    // modulus fits in int64 fast path
  std::int64_t modulus_i64 = 0;
  std::vector<RingSpec> components;  // Product (>= 2) or Dual (exactly 1: base)
};
using RingSpecPtr = std::shared_ptr<const RingSpecNode>;
}  // namespace detail

class RingValue;

/// Immutable description of a concrete ring. Cheap to copy (shared node).
class RingSpec {
 public:
  RingSpec() = default;  // empty handle; only assignment is valid

  static RingSpec integers();
  static RingSpec rationals();
  static RingSpec mod(const mpz_class& m);   // requires m >= 2
  static RingSpec gf(const mpz_class& p);    // requires p prime
  static RingSpec product(std::vector<RingSpec> components);  // >= 2
  static RingSpec dual(RingSpec base);

  RingKind kind() const { return node_->kind; }
  const mpz_class& modulus() const;
  const std::vector<RingSpec>& components() const;
  const RingSpec& base() const;

  bool is_finite() const;
  bool is_field() const;    // GF(p) or Rationals
  bool is_reduced() const;  // no nonzero nilpotents
  /// 0 for characteristic-zero rings, otherwise the least k > 0 with k*1 = 0.
  mpz_class characteristic() const;
  /// Number of elements; throws std::domain_error for infinite rings.
  mpz_class cardinality() const;
  /// Upper bound on the nilindex of any ring element (1 for reduced rings).
  int nilpotency_bound() const;

  RingValue zero() const;
  RingValue one() const;
  /// Image of an integer under the canonical map Z -> R.
  RingValue from_int(const mpz_class& k) const;
  RingValue from_int(long k) const;

  /// Parses one element in the textual format (see element grammar in
  /// RingValue::str).
  RingValue parse_element(std::string_view text) const;

  bool operator==(const RingSpec& other) const;
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

  /// Round-trips with parse_ring.
  std::string str() const;

  const detail::RingSpecNode* node() const { return node_.get(); }
  const detail::RingSpecPtr& node_ptr() const { return node_; }

 private:
  explicit RingSpec(detail::RingSpecPtr node) : node_(std::move(node)) {}
  detail::RingSpecPtr node_;
};

/// Parses the ring mini-language:
///   Z | Q | Zmod:<m> | GF:<p> | Dual:<spec> | Prod:<spec>,<spec>[,...]
/// A nested Prod consumes the rest of the comma list (the grammar has no
/// grouping syntax), so Prod:Z,Prod:Q,Z reads as Prod(Z, Prod(Q, Z)).
RingSpec parse_ring(std::string_view spec_string);

/// One ring element, always in canonical form (residues in [0,m), fractions
/// reduced with positive denominator, tuples componentwise canonical).
/// Values carry their ring; mixing rings in one operation throws.
class RingValue {
 public:
  using Payload =
      std::variant<std::int64_t, mpz_class, mpq_class, std::vector<RingValue>>;

  RingValue() = default;
  RingValue(RingSpec spec, Payload payload);

  const RingSpec& ring() const { return spec_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const RingValue& other) const;
  bool operator!=(const RingValue& other) const { return !(*this == other); }

  /// Element text format, round-trips with RingSpec::parse_element:
  ///   integers/residues  "-7", "12"
  ///   rationals          "a/b" reduced, "a" when the denominator is 1
  ///   dual numbers       "a+b?e"  (pure base part prints as "a")
  ///   products           "(x|y|...)"
  std::string str() const;

  // component accessors
  std::int64_t residue_i64() const { return std::get<std::int64_t>(payload_); }
  const mpz_class& integer() const { return std::get<mpz_class>(payload_); }
  const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
  const std::vector<RingValue>& tuple() const {
    return std::get<std::vector<RingValue>>(payload_);
  }
  const RingValue& dual_base() const { return tuple()[0]; }
  const RingValue& dual_eps() const { return tuple()[1]; }

 private:
  RingSpec spec_;
  Payload payload_;
};

inline RingValue RingSpec::from_int(long k) const {
  return from_int(mpz_class(k));
}

RingValue add(const RingValue& a, const RingValue& b);
RingValue sub(const RingValue& a, const RingValue& b);
RingValue mul(const RingValue& a, const RingValue& b);
RingValue neg(const RingValue& a);
RingValue ring_pow(const RingValue& a, unsigned long e);

RingValue operator+(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a, const RingValue& b);
RingValue operator*(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a);

/// True iff x has a multiplicative inverse.
bool is_unit(const RingValue& x);

/// True iff x != 0 and x*y = 0 for some y != 0. Structural per ring kind, so
/// it is decidable for the infinite rings too.
bool is_zero_divisor(const RingValue& x);

/// Multiplicative inverse; throws std::domain_error if x is not a unit.
RingValue inverse(const RingValue& x);

/// Least k <= bound with x^k = 0, or nullopt.
std::optional<int> element_nilindex(const RingValue& x, int bound);

/// All elements of a finite ring, each exactly once, in a fixed order
/// (residues ascending; products and duals as odometers, first component
/// slowest). Throws std::domain_error for infinite rings.
std::vector<RingValue> enumerate_ring(const RingSpec& spec);

/// Strict total order on canonical payloads of one ring; used wherever a
/// deterministic scan order over ring elements is needed.
bool value_less(const RingValue& a, const RingValue& b);

/// n! mapped into the ring.
RingValue factorial_in_ring(const RingSpec& ring, unsigned long n);
/// Binomial coefficient C(n, k) computed in Z, then mapped into the ring.
RingValue binomial_in_ring(const RingSpec& ring, unsigned long n,
                           unsigned long k);

}  // namespace commulab
