#include "imperf/differentials.hpp"

#include "imperf/errors.hpp"

namespace imperf {

namespace {

const PolyRing* common_ring(const std::vector<Fraction>& elems) {
  if (elems.empty()) throw Error("empty element list");
  const PolyRing* ring = elems[0].ring();
  for (const auto& e : elems)
    if (e.ring() != ring) throw MixedFields();
  return ring;
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly g = gcd(a, b);
  return (*(a * b).divide_exact(g)).monic();
}

}  // namespace

int bareiss_rank(std::vector<std::vector<MultiPoly>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  const PolyRing* ring = nullptr;
  for (auto& row : m)
    for (auto& entry : row)
      if (!entry.is_zero()) ring = entry.ring();
  if (ring == nullptr) return 0;
  MultiPoly prev = MultiPoly::from_int(ring, 1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        MultiPoly num = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
        auto q = num.divide_exact(prev);
        if (!q) throw Error("Bareiss exact division failed");
        m[i][j] = *q;
      }
      m[i][col] = MultiPoly::zero(ring);
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

DifferentialSpan differential_span(const std::vector<Fraction>& elems) {
  const PolyRing* ring = common_ring(elems);
  DifferentialSpan span;
  span.elements = elems;
  for (const auto& f : elems) {
    std::vector<Fraction> row;
    row.reserve(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) row.push_back(f.derivative(i));
    span.jacobian.push_back(std::move(row));
  }
  // Clear denominators row by row; scaling a row by a nonzero scalar does
  // not change the rank.
  std::vector<std::vector<MultiPoly>> cleared;
  for (const auto& row : span.jacobian) {
    MultiPoly common = MultiPoly::from_int(ring, 1);
    for (const auto& f : row)
      if (!f.is_zero()) common = lcm(common, f.den());
    std::vector<MultiPoly> crow;
    for (const auto& f : row)
      crow.push_back(f.num() * *common.divide_exact(f.den()));
    cleared.push_back(std::move(crow));
  }
  span.rank = bareiss_rank(std::move(cleared));
  return span;
}

int p_independence_rank(const std::vector<Fraction>& elems) {
  if (elems.empty()) return 0;
  return differential_span(elems).rank;
}

bool is_p_independent(const std::vector<Fraction>& elems) {
  return p_independence_rank(elems) == static_cast<int>(elems.size());
}

std::vector<Fraction> exchange_step(const std::vector<Fraction>& elems,
                                    size_t i, size_t j) {
  common_ring(elems);
  if (i >= elems.size() || j >= elems.size())
    throw BadIndex("exchange index out of range");
  if (elems[j].is_zero()) throw ZeroDivisor();
  if (!is_p_independent(elems))
    throw NotPIndependent("input family is not p-independent");
  std::vector<Fraction> out = elems;
  out[i] = elems[i] / elems[j];
  if (!is_p_independent(out))
    throw NotPIndependent("exchange destroyed p-independence");
  return out;
}

AdjoinRootResult adjoin_root_rank(const std::vector<Fraction>& elems,
                                  size_t root_of) {
  const PolyRing* ring = common_ring(elems);
  if (root_of >= elems.size()) throw BadIndex("root index out of range");
  if (!is_p_independent(elems))
    throw NotPIndependent("input family is not p-independent");

  // The rooted element must be a declared generator t_k.
  const Fraction& gen = elems[root_of];
  int k = -1;
  for (size_t idx = 0; idx < ring->nvars(); ++idx)
    if (gen == Fraction::variable(ring, idx)) k = static_cast<int>(idx);
  if (k < 0) throw Error("adjoin_root_rank requires a generator element");
  if (gen.is_pth_power())
    throw Error("rooted generator is unexpectedly a p-th power");

  // Fresh names: t_i -> u_i as pure renaming, except t_k -> u_k^p.
  std::vector<std::string> names;
  names.reserve(ring->nvars());
  for (size_t idx = 0; idx < ring->nvars(); ++idx) {
    std::string candidate = "u" + std::to_string(idx + 1);
    while (ring->index_of(candidate) >= 0) candidate = "u" + candidate;
    names.push_back(candidate);
  }
  const PolyRing* ext =
      PolyRing::make(ring->field, names, ring->nvars());
  uint32_t p = ring->field->characteristic();
  std::map<std::string, Fraction> images;
  for (size_t idx = 0; idx < ring->nvars(); ++idx) {
    Fraction u = Fraction::variable(ext, idx);
    images.emplace(ring->vars[idx],
                   static_cast<int>(idx) == k ? u.pow(p) : u);
  }

  AdjoinRootResult res;
  res.extension_ring = ext;
  for (const auto& f : elems)
    res.embedded.push_back(substitute_into(f, images, ext));

  std::vector<Fraction> remaining;
  for (size_t idx = 0; idx < res.embedded.size(); ++idx)
    if (idx != root_of) remaining.push_back(res.embedded[idx]);
  res.remaining_rank =
      remaining.empty() ? 0 : p_independence_rank(remaining);

  // [E : F] = p since t_k is not a p-th power, so the differentials of E
  // over F form a one-dimensional space with basis d(t_k^{1/p}); Cartier's
  // equality with trdeg 0 then pins the module of imperfection at one.
  res.relative_differential_dim = 1;
  res.imperfection_dim = 1;
  return res;
}

}  // namespace imperf
