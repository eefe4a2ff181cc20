#include "doctest.h"
#include "imperf/lattice.hpp"

using namespace imperf;

TEST_CASE("determinants") {
  IntLattice l;
  l.rank = 2;
  l.gram = {{0, 2}, {2, -1}};
  CHECK(lattice_det(l) == -4);

  IntLattice h;
  h.rank = 3;
  h.gram = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  CHECK(lattice_det(h) == 4);
}

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form({{0, 2}, {2, -1}}) == std::vector<int64_t>{1, 4});
  CHECK(smith_normal_form({{2, 0}, {0, 2}}) == std::vector<int64_t>{2, 2});
  CHECK(smith_normal_form({{6, 0}, {0, 4}}) == std::vector<int64_t>{2, 12});
  CHECK(smith_normal_form({{1, 0}, {0, 0}}) == std::vector<int64_t>{1});
  // Entry gcd 2, minor gcd 4, |det| 624 pin the invariant factors.
  CHECK(smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
        std::vector<int64_t>{2, 2, 156});
}

TEST_CASE("picard lattice of the cubic surface") {
  PicardData pic = picard_lattice();
  CHECK(pic.lattice.gram == std::vector<std::vector<int64_t>>{{0, 2}, {2, -1}});
  CHECK(pic.det == -4);
  CHECK(pic.disc_order == 4);
  CHECK(pic.disc_group == std::vector<int64_t>{4});  // cyclic of order 4
  CHECK(pic.k_self == 3);                            // degree of the surface
  CHECK(pic.l_self == -1);
  CHECK(pic.c1_self == 0);
  CHECK(pic.l_dot_c1 == 2);
  CHECK(pic.d_class == std::array<int64_t, 2>{1, 2});
  CHECK(pic.d_primitive);
  CHECK(pic.d_dot_c1 == 4);
  CHECK(pic.dual_pairings_ok);
  CHECK(pic.rr_parity_all_even);
  CHECK(pic.half_c1_order == 2);
  CHECK(pic.half_c1_parity == 1);
  CHECK(pic.half_c1_obstructed);
  // The discriminant group order equals |det| for a nondegenerate lattice.
  CHECK(pic.disc_order == std::abs(pic.det));
}
