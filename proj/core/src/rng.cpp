#include "commulab/rng.hpp"

namespace commulab {

RingValue random_element(Rng& rng, const RingSpec& ring,
                         const std::vector<RingValue>* table) {
  if (table && !table->empty())
    return (*table)[rng.below(table->size())];
  switch (ring.kind()) {
    case RingKind::Integers:
      return ring.from_int(rng.in_range(-9, 9));
    case RingKind::Rationals: {
      mpq_class q(rng.in_range(-9, 9), rng.in_range(1, 9));
      q.canonicalize();
      return RingValue(ring, q);
    }
    case RingKind::Mod:
    case RingKind::GF: {
      mpz_class m = ring.modulus();
      if (m.fits_ulong_p())
        return ring.from_int(static_cast<long>(rng.below(m.get_ui())));
      return ring.from_int(static_cast<long>(rng.next() & 0x7fffffff));
    }
    case RingKind::Product: {
      std::vector<RingValue> t;
      for (const auto& c : ring.components())
        t.push_back(random_element(rng, c));
      return RingValue(ring, std::move(t));
    }
    case RingKind::Dual: {
      std::vector<RingValue> t{random_element(rng, ring.base()),
                               random_element(rng, ring.base())};
      return RingValue(ring, std::move(t));
    }
  }
  return ring.zero();
}

Matrix random_matrix(Rng& rng, const RingSpec& ring, int n,
                     const std::vector<RingValue>* table) {
  Matrix m(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_element(rng, ring, table);
  return m;
}

Matrix random_strict_upper(Rng& rng, const RingSpec& ring, int n,
                           const std::vector<RingValue>* table) {
  Matrix m(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m.at(i, j) = random_element(rng, ring, table);
  return m;
}

}  // namespace commulab
