#include "imperf/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "imperf/errors.hpp"

namespace imperf {

namespace {

// Exact rationals over int64; the lattices here are tiny.
struct Rat {
  int64_t n = 0;
  int64_t d = 1;

  static Rat of(int64_t num, int64_t den = 1) {
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rat{num, den};
  }
  Rat operator+(Rat o) const { return of(n * o.d + o.n * d, d * o.d); }
  Rat operator-(Rat o) const { return of(n * o.d - o.n * d, d * o.d); }
  Rat operator*(Rat o) const { return of(n * o.n, d * o.d); }
  Rat operator/(Rat o) const { return of(n * o.d, d * o.n); }
  bool operator==(Rat o) const { return n == o.n && d == o.d; }
  bool is_integer() const { return d == 1; }
};

int64_t det2(const std::vector<std::vector<int64_t>>& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

int64_t det_general(std::vector<std::vector<int64_t>> m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return det2(m);
  // Fraction-free Bareiss.
  int64_t prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

int64_t lattice_det(const IntLattice& lattice) {
  if (lattice.rank == 0) return 1;
  return det_general(lattice.gram);
}

std::vector<int64_t> smith_normal_form(std::vector<std::vector<int64_t>> m) {
  size_t rows = m.size();
  if (rows == 0) return {};
  size_t cols = m[0].size();
  size_t n = std::min(rows, cols);
  std::vector<int64_t> diag;

  for (size_t s = 0; s < n; ++s) {
    // Find a nonzero entry in the lower-right block.
    size_t pr = rows, pc = cols;
    int64_t best = 0;
    for (size_t i = s; i < rows; ++i)
      for (size_t j = s; j < cols; ++j)
        if (m[i][j] != 0 &&
            (best == 0 || std::abs(m[i][j]) < std::abs(best))) {
          best = m[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[s], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pc]);

    bool again = true;
    while (again) {
      again = false;
      for (size_t i = s + 1; i < rows; ++i) {
        int64_t q = m[i][s] / m[s][s];
        if (q != 0)
          for (size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        if (m[i][s] != 0) {
          std::swap(m[s], m[i]);
          again = true;
        }
      }
      for (size_t j = s + 1; j < cols; ++j) {
        int64_t q = m[s][j] / m[s][s];
        if (q != 0)
          for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][s];
        if (m[s][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][j]);
          again = true;
        }
      }
    }
    // Ensure divisibility of the remaining block by the pivot.
    bool fixed = true;
    for (size_t i = s + 1; i < rows && fixed; ++i)
      for (size_t j = s + 1; j < cols && fixed; ++j)
        if (m[i][j] % m[s][s] != 0) {
          for (size_t jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
          fixed = false;
        }
    if (!fixed) {
      --s;  // redo this pivot with the merged row
      continue;
    }
    diag.push_back(std::abs(m[s][s]));
  }
  return diag;
}

PicardData picard_lattice() {
  PicardData out;
  out.lattice.rank = 2;
  out.lattice.gram = {{0, 2}, {2, -1}};
  out.lattice.labels = {"C1", "L"};
  const auto& g = out.lattice.gram;

  auto pair = [&](const std::array<int64_t, 2>& a,
                  const std::array<int64_t, 2>& b) {
    int64_t s = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += a[i] * g[i][j] * b[j];
    return s;
  };

  out.det = lattice_det(out.lattice);
  std::vector<int64_t> snf = smith_normal_form(out.lattice.gram);
  out.disc_order = 1;
  for (int64_t d : snf) {
    out.disc_order *= d;
    if (d != 1) out.disc_group.push_back(d);
  }

  std::array<int64_t, 2> c1{1, 0}, l{0, 1};
  out.k_class = {-1, -1};  // -K = C1 + L
  out.k_self = pair(out.k_class, out.k_class);
  out.l_self = pair(l, l);
  out.c1_self = pair(c1, c1);
  out.l_dot_c1 = pair(l, c1);
  out.d_class = {1, 2};  // D = C1 + 2L
  out.d_primitive = std::gcd(std::abs(out.d_class[0]),
                             std::abs(out.d_class[1])) == 1;
  out.d_dot_c1 = pair(out.d_class, c1);

  // Dual basis over Q: columns of the inverse Gram, checked against the
  // defining pairings <e_i*, e_j> = delta_ij.
  Rat a = Rat::of(g[0][0]), b = Rat::of(g[0][1]);
  Rat c = Rat::of(g[1][0]), d = Rat::of(g[1][1]);
  Rat det = a * d - b * c;
  Rat inv[2][2] = {{d / det, Rat::of(0) - (b / det)},
                   {Rat::of(0) - (c / det), a / det}};
  out.dual_pairings_ok = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // e_i* = sum_k inv[k][i] e_k; pairing with e_j.
      Rat p = Rat::of(0);
      for (int k = 0; k < 2; ++k)
        p = p + inv[k][i] * Rat::of(g[k][j]);
      if (!(p == Rat::of(i == j ? 1 : 0))) out.dual_pairings_ok = false;
    }
  }

  // Riemann-Roch parity N.N - N.K on the basis and the cross term; the
  // defect of (N+M) against N, M is 2 N.M, so evenness extends bilinearly.
  auto nk = [&](const std::array<int64_t, 2>& v) {
    return pair(v, v) - pair(v, out.k_class);
  };
  out.rr_parity_all_even = (nk(c1) % 2 == 0) && (nk(l) % 2 == 0) &&
                           (nk({1, 1}) % 2 == 0);

  // The half class (1/2)C1 in the dual lattice: order in S*/S and the parity
  // of N.N - N.K, which is odd, so no invertible sheaf can represent it.
  Rat half[2] = {Rat::of(1, 2), Rat::of(0)};
  int64_t order = 1;
  while (order <= 8) {
    bool integral = (Rat::of(order) * half[0]).is_integer() &&
                    (Rat::of(order) * half[1]).is_integer();
    if (integral) break;
    ++order;
  }
  out.half_c1_order = order;
  Rat nn = Rat::of(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      nn = nn + half[i] * Rat::of(g[i][j]) * half[j];
  Rat nkh = Rat::of(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      nkh = nkh + half[i] * Rat::of(g[i][j]) * Rat::of(out.k_class[j]);
  Rat parity_rat = nn - nkh;
  if (!parity_rat.is_integer())
    throw Error("half-class parity is not an integer");
  out.half_c1_parity = parity_rat.n;
  out.half_c1_obstructed = (out.half_c1_parity % 2) != 0;
  return out;
}

}  // namespace imperf
