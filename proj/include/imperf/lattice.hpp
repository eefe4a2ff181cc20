#ifndef IMPERF_LATTICE_HPP
#define IMPERF_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace imperf {

/// A finitely generated free abelian group with an integer Gram matrix.
struct IntLattice {
  int rank = 0;
  std::vector<std::vector<int64_t>> gram;
  std::vector<std::string> labels;
};

int64_t lattice_det(const IntLattice& lattice);

/// Diagonal of the Smith normal form (nonnegative invariant factors,
/// d_1 | d_2 | ...).
std::vector<int64_t> smith_normal_form(std::vector<std::vector<int64_t>> m);

/// The Picard lattice of the characteristic-2 cubic surface with basis
/// (C1, L): Gram [[0,2],[2,-1]], together with the derived arithmetic the
/// verification suite consumes.
struct PicardData {
  IntLattice lattice;
  int64_t det = 0;                      // -4
  std::vector<int64_t> disc_group;      // invariant factors != 1, here {4}
  int64_t disc_order = 0;               // 4
  std::array<int64_t, 2> k_class{};     // K = -(C1 + L)
  int64_t k_self = 0;                   // K^2 = 3
  int64_t l_self = 0;                   // L^2 = -1
  int64_t c1_self = 0;                  // C1^2 = 0
  int64_t l_dot_c1 = 0;                 // 2
  std::array<int64_t, 2> d_class{};     // D = C1 + 2L
  bool d_primitive = false;
  int64_t d_dot_c1 = 0;                 // 4
  bool dual_pairings_ok = false;        // <e_i*, e_j> = delta_ij over Q
  bool rr_parity_all_even = false;      // N.N - N.K even on the whole lattice
  int64_t half_c1_order = 0;            // order of (1/2)C1 in S*/S, = 2
  int64_t half_c1_parity = 0;           // N.N - N.K for N = (1/2)C1, = 1
  bool half_c1_obstructed = false;      // odd parity: no invertible-sheaf lift
};

PicardData picard_lattice();

}  // namespace imperf

#endif
