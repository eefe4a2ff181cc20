#ifndef IMPERF_DIFFERENTIALS_HPP
#define IMPERF_DIFFERENTIALS_HPP

#include <vector>

#include "imperf/fraction.hpp"

namespace imperf {

/// A family of field elements together with the Jacobian of their partials
/// with respect to the ring variables and its exact rank. The rank is the
/// dimension of the span of the differentials df_j inside the module of
/// absolute Kaehler differentials of the declared presentation
/// GF(p^m)(t_1, ..., t_n), for which the dt_i form a basis.
struct DifferentialSpan {
  std::vector<Fraction> elements;
  std::vector<std::vector<Fraction>> jacobian;  // row j = gradient of f_j
  int rank = 0;
};

DifferentialSpan differential_span(const std::vector<Fraction>& elems);

/// dim of span{df_j}; exact Jacobian rank over the fraction field, computed
/// by fraction-free (Bareiss) elimination on denominator-cleared rows.
/// Throws MixedFields when the elements live over different presentations.
int p_independence_rank(const std::vector<Fraction>& elems);

bool is_p_independent(const std::vector<Fraction>& elems);

/// Replace elems[i] by elems[i]/elems[j]. Requires a p-independent input and
/// elems[j] != 0; the output is checked to be p-independent again.
std::vector<Fraction> exchange_step(const std::vector<Fraction>& elems,
                                    size_t i, size_t j);

/// Result of adjoining a p-th root of one generator: the ground field
/// F = GF(p^m)(t_1,...,t_n) is re-presented as E = GF(p^m)(u_1,...,u_n) with
/// t_k = u_k^p for the rooted generator and t_i = u_i otherwise.
struct AdjoinRootResult {
  const PolyRing* extension_ring = nullptr;
  std::vector<Fraction> embedded;      // all original elements over E
  int remaining_rank = 0;              // rank of the family without the rooted one
  int relative_differential_dim = 1;   // dim of the differentials of E over F
  int imperfection_dim = 1;            // via Cartier's equality, trdeg = 0
};

/// elems must be p-independent and elems[root_of] must be one of the ring
/// generators. Throws NotPIndependent otherwise.
AdjoinRootResult adjoin_root_rank(const std::vector<Fraction>& elems,
                                  size_t root_of);

/// Exact rank of a matrix of polynomials via Bareiss elimination.
int bareiss_rank(std::vector<std::vector<MultiPoly>> m);

}  // namespace imperf

#endif
