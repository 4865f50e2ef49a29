#include <doctest.h>

#include "commulab/ring.hpp"
#include "commulab/rng.hpp"

using namespace commulab;

TEST_CASE("ring spec mini-language") {
  CHECK(parse_ring("Zmod:27").kind() == RingKind::Mod);
  CHECK(parse_ring("Zmod:27").modulus() == 27);
  RingSpec prod = parse_ring("Prod:GF:3,Z");
  CHECK(prod.kind() == RingKind::Product);
  CHECK(prod.components()[0].kind() == RingKind::GF);
  CHECK(prod.components()[1].kind() == RingKind::Integers);
  CHECK(prod.is_reduced());
  CHECK(prod.characteristic() == 0);
  RingSpec dq = parse_ring("Dual:Q");
  CHECK(dq.kind() == RingKind::Dual);
  CHECK(dq.base().kind() == RingKind::Rationals);
  CHECK_FALSE(dq.is_reduced());

  // round trip
  for (const char* s : {"Z", "Q", "Zmod:12", "GF:32003", "Dual:Dual:GF:2",
                        "Prod:GF:2,Zmod:4,Q", "Dual:Prod:GF:2,GF:3"})
    CHECK(parse_ring(s).str() == s);

  // a nested Prod consumes the rest of the comma list
  RingSpec nested = parse_ring("Prod:Z,Prod:Q,Z");
  CHECK(nested.components().size() == 2);
  CHECK(nested.components()[1].kind() == RingKind::Product);

  CHECK_THROWS_AS(parse_ring("GF:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring("Zmod:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring("Blah"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring("Zmod:5junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring("Prod:Z"), std::invalid_argument);
}

TEST_CASE("units and zero-divisors") {
  CHECK(is_unit(parse_ring("Zmod:9").from_int(2)));
  CHECK_FALSE(is_unit(parse_ring("Zmod:8").from_int(2)));
  RingSpec prod = parse_ring("Prod:GF:3,Z");
  CHECK(is_unit(prod.parse_element("(1|-1)")));
  CHECK(is_zero_divisor(prod.parse_element("(0|3)")));
  CHECK(is_zero_divisor(parse_ring("Zmod:27").from_int(3)));
  CHECK_FALSE(is_zero_divisor(RingSpec::integers().from_int(5)));
  CHECK_FALSE(is_zero_divisor(prod.zero()));

  // inverse round trips on units
  RingSpec z9 = parse_ring("Zmod:9");
  CHECK(mul(z9.from_int(2), inverse(z9.from_int(2))).is_one());
  CHECK_THROWS_AS(inverse(parse_ring("Zmod:8").from_int(2)),
                  std::domain_error);
  RingSpec dual = parse_ring("Dual:GF:5");
  RingValue u = dual.parse_element("2+3?e");
  CHECK(mul(u, inverse(u)).is_one());
}

TEST_CASE("unit / zero-divisor exclusivity against exhaustive oracle") {
  for (const char* s : {"Zmod:12", "Dual:GF:3", "Prod:GF:2,Zmod:4"}) {
    RingSpec r = parse_ring(s);
    std::vector<RingValue> elems = enumerate_ring(r);
    for (const RingValue& x : elems) {
      bool unit = is_unit(x);
      bool zd = is_zero_divisor(x);
      CHECK_FALSE((unit && zd));
      // oracle: scan for an annihilator
      bool has_annihilator = false;
      for (const RingValue& y : elems)
        if (!y.is_zero() && mul(x, y).is_zero()) has_annihilator = true;
      CHECK(zd == (!x.is_zero() && has_annihilator));
      if (!x.is_zero() && !unit) CHECK(zd);  // finite ring dichotomy
    }
  }
}

TEST_CASE("element nilindex") {
  CHECK(element_nilindex(parse_ring("Zmod:8").from_int(2), 5) == 3);
  CHECK(element_nilindex(parse_ring("GF:5").zero(), 1) == 1);
  CHECK_FALSE(element_nilindex(parse_ring("GF:5").one(), 10).has_value());
  // (b eps)^2 = 0 for every b
  RingSpec d = parse_ring("Dual:Zmod:6");
  for (const RingValue& x : enumerate_ring(d)) {
    if (!x.dual_base().is_zero()) continue;
    CHECK(mul(x, x).is_zero());
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_ring(parse_ring("Zmod:4")).size() == 4);
  CHECK(enumerate_ring(parse_ring("Dual:GF:2")).size() == 4);
  CHECK(enumerate_ring(parse_ring("Prod:GF:2,GF:3")).size() == 6);
  CHECK_THROWS_AS(enumerate_ring(RingSpec::integers()), std::domain_error);
  // each element exactly once
  RingSpec r = parse_ring("Prod:GF:2,GF:3");
  auto elems = enumerate_ring(r);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      CHECK_FALSE(elems[i] == elems[j]);
}

TEST_CASE("canonical arithmetic properties") {
  Rng rng(41);
  for (const char* s :
       {"Z", "Q", "Zmod:12", "GF:7", "Dual:GF:3", "Prod:GF:2,GF:5"}) {
    RingSpec r = parse_ring(s);
    std::vector<RingValue> table;
    if (r.is_finite()) table = enumerate_ring(r);
    auto pick = [&] {
      return random_element(rng, r, r.is_finite() ? &table : nullptr);
    };
    for (int i = 0; i < 50; ++i) {
      RingValue a = pick(), b = pick(), c = pick();
      CHECK(add(a, neg(a)).is_zero());
      CHECK(add(a, b) == add(b, a));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(mul(a, r.one()) == a);
      // canonical form round-trips through the text format
      CHECK(r.parse_element(a.str()) == a);
    }
  }
}

TEST_CASE("cross-ring operations are rejected") {
  RingValue a = parse_ring("Zmod:9").from_int(2);
  RingValue b = parse_ring("Zmod:8").from_int(2);
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("element text format") {
  RingSpec q = RingSpec::rationals();
  CHECK(q.parse_element("-3/6").str() == "-1/2");
  CHECK(q.parse_element("4").str() == "4");
  RingSpec dq = parse_ring("Dual:Q");
  CHECK(dq.parse_element("1/2+-3?e").str() == "1/2+-3?e");
  CHECK(dq.parse_element("1?e") == dq.parse_element("0+1?e"));
  RingSpec dd = parse_ring("Dual:Dual:GF:2");
  RingValue v = dd.parse_element("(1+1?e)+(0+1?e)?e");
  CHECK(dd.parse_element(v.str()) == v);
  RingSpec np = parse_ring("Prod:GF:2,Prod:GF:3,Z");
  RingValue w = np.parse_element("(1|(2|5))");
  CHECK(np.parse_element(w.str()) == w);
  CHECK_THROWS_AS(q.parse_element("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring("Zmod:5").parse_element("x"),
                  std::invalid_argument);
}

TEST_CASE("characteristic, cardinality, nilpotency bound") {
  CHECK(parse_ring("Prod:GF:2,GF:3").characteristic() == 6);
  CHECK(parse_ring("Dual:GF:5").characteristic() == 5);
  CHECK(RingSpec::rationals().characteristic() == 0);
  CHECK(parse_ring("Dual:GF:3").cardinality() == 9);
  CHECK(parse_ring("Zmod:8").nilpotency_bound() == 3);
  CHECK(parse_ring("Zmod:12").nilpotency_bound() == 2);
  CHECK(parse_ring("GF:7").nilpotency_bound() == 1);
  CHECK(parse_ring("Dual:Zmod:4").nilpotency_bound() == 3);
  CHECK(factorial_in_ring(parse_ring("Zmod:5"), 4) ==
        parse_ring("Zmod:5").from_int(24));
  CHECK(binomial_in_ring(parse_ring("GF:7"), 4, 2) ==
        parse_ring("GF:7").from_int(6));
}

TEST_CASE("value ordering is a strict total order on a finite ring") {
  RingSpec r = parse_ring("Prod:GF:3,Zmod:4");
  auto elems = enumerate_ring(r);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      int lt = value_less(a, b), gt = value_less(b, a);
      if (a == b) {
        CHECK((!lt && !gt));
      } else {
        CHECK(lt != gt);
      }
    }
}
