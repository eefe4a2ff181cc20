// Test-only oracles, kept independent of the library code paths they check.
#ifndef IMPERF_TESTS_ORACLES_HPP
#define IMPERF_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "imperf/differentials.hpp"
#include "imperf/fraction.hpp"

namespace imperf::testing {

// Plain Gaussian elimination over the fraction field, with explicit
// division; an independent route to the Jacobian rank next to the
// fraction-free path used by the library.
inline int naive_fraction_rank(std::vector<std::vector<Fraction>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Fraction factor = m[i][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline int naive_rank_of(const std::vector<Fraction>& elems) {
  const PolyRing* ring = elems.at(0).ring();
  std::vector<std::vector<Fraction>> m;
  for (const auto& f : elems) {
    std::vector<Fraction> row;
    for (size_t i = 0; i < ring->nvars(); ++i) row.push_back(f.derivative(i));
    m.push_back(std::move(row));
  }
  return naive_fraction_rank(std::move(m));
}

inline uint64_t draw(std::mt19937_64& rng, uint64_t k) { return rng() % k; }

inline MultiPoly random_poly(const PolyRing* ring, std::mt19937_64& rng,
                             uint32_t max_deg = 3, uint32_t terms = 3) {
  MultiPoly poly = MultiPoly::zero(ring);
  uint32_t count = 1 + static_cast<uint32_t>(draw(rng, terms));
  for (uint32_t t = 0; t < count; ++t) {
    Mono m(ring->nvars(), 0);
    for (size_t i = 0; i < ring->nvars(); ++i)
      m[i] = static_cast<uint32_t>(draw(rng, max_deg + 1));
    uint64_t c = draw(rng, ring->field->order());
    if (c) poly = poly + MultiPoly::monomial(ring, m, c);
  }
  return poly;
}

inline MultiPoly random_nonzero_poly(const PolyRing* ring, std::mt19937_64& rng,
                                     uint32_t max_deg = 3, uint32_t terms = 3) {
  for (int tries = 0; tries < 64; ++tries) {
    MultiPoly p = random_poly(ring, rng, max_deg, terms);
    if (!p.is_zero()) return p;
  }
  return MultiPoly::from_int(ring, 1);
}

inline Fraction random_fraction(const PolyRing* ring, std::mt19937_64& rng,
                                uint32_t max_deg = 2, uint32_t terms = 2) {
  return Fraction(random_poly(ring, rng, max_deg, terms),
                  random_nonzero_poly(ring, rng, max_deg, terms));
}

inline Fraction random_nonzero_fraction(const PolyRing* ring,
                                        std::mt19937_64& rng,
                                        uint32_t max_deg = 2,
                                        uint32_t terms = 2) {
  for (int tries = 0; tries < 64; ++tries) {
    Fraction f = random_fraction(ring, rng, max_deg, terms);
    if (!f.is_zero()) return f;
  }
  return Fraction::one(ring);
}

}  // namespace imperf::testing

#endif
