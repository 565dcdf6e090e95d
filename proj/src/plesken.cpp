#include "plesken/plesken.hpp"

#include <map>
#include <stdexcept>

#include "plesken/error.hpp"

namespace plesken {

std::vector<std::size_t> plesken_basis_elements(const Group& g) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) > 2 && x < g.inverse(x)) out.push_back(x);
  return out;
}

std::size_t dim_formula(const Group& g) { return (g.order() - involution_count(g) - 1) / 2; }

LieAlg build_plesken(const Group& g, const Field& f) {
  if (f.characteristic() == 2) throw UnsupportedError("characteristic 2 is not supported");
  const auto reps = plesken_basis_elements(g);
  const std::size_t d = reps.size();
  std::vector<std::ptrdiff_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < d; ++i) pos[reps[i]] = static_cast<std::ptrdiff_t>(i);

  LieAlg l(f, d);
  std::map<std::size_t, std::int64_t> acc;
  for (std::size_t s = 0; s < d; ++s) {
    const std::size_t a = reps[s], ai = g.inverse(a);
    for (std::size_t t = s + 1; t < d; ++t) {
      const std::size_t b = reps[t], bi = g.inverse(b);
      acc.clear();
      // (a - a^-1)(b - b^-1) - (b - b^-1)(a - a^-1)
      const std::size_t xs[2] = {a, ai}, ys[2] = {b, bi};
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          const std::int64_t sign = (u == v) ? 1 : -1;
          acc[g.mul(xs[u], ys[v])] += sign;
          acc[g.mul(ys[v], xs[u])] -= sign;
        }
      for (const auto& [x, coef] : acc) {
        if (coef == 0) continue;
        if (pos[x] >= 0) {
          const auto k = static_cast<std::size_t>(pos[x]);
          const Elem c = f.from_int(coef);
          l.c(s, t, k) = f.add(l.c(s, t, k), c);
          l.c(t, s, k) = f.sub(l.c(t, s, k), c);
        } else {
          const auto it = acc.find(g.inverse(x));
          if (pos[g.inverse(x)] >= 0 && it != acc.end() && it->second == -coef) continue;
          throw std::logic_error("bracket of Plesken basis elements left the span");
        }
      }
    }
  }
  Mat amb(f, d, g.order());
  for (std::size_t i = 0; i < d; ++i) {
    amb(i, reps[i]) = 1;
    amb(i, g.inverse(reps[i])) = f.neg(1);
  }
  l.set_ambient(std::move(amb));
  return l;
}

Projections project_onto_blocks(const LieAlg& l, const GroupAlgebra& kg, const BlockDecomposition& bd) {
  const Group& g = kg.group();
  const Field& f = kg.field();
  if (l.field() != f) throw ValidationError("Lie algebra and group algebra are over different fields");
  const auto reps = plesken_basis_elements(g);
  if (reps.size() != l.dim()) throw ValidationError("project_onto_blocks expects the Plesken algebra of the group");
  const std::size_t d = l.dim();

  Projections out;
  std::vector<bool> seen(bd.idempotents.size(), false);
  std::size_t total = 0;
  for (std::size_t b = 0; b < bd.idempotents.size(); ++b) {
    if (seen[b]) continue;
    BlockProjection bp{{b}, bd.idempotents[b], LieAlg(f, 0), {}, Mat(f)};
    seen[b] = true;
    if (bd.dual[b] != b) {
      bp.blocks.push_back(bd.dual[b]);
      seen[bd.dual[b]] = true;
      bp.idempotent = kg.add(bp.idempotent, bd.idempotents[bd.dual[b]]);
    }
    std::vector<Vec> images;
    EchelonBasis eb(f, kg.dim());
    for (std::size_t k = 0; k < d; ++k) {
      images.push_back(kg.sub(kg.times_element(bp.idempotent, reps[k]),
                              kg.times_element(bp.idempotent, g.inverse(reps[k]))));
      if (eb.add(images.back())) bp.pivots.push_back(k);
    }
    const std::size_t s = bp.pivots.size();
    total += s;
    if (s == 0) continue;
    bp.projection = Mat(f, 0, s);
    for (const auto& im : images) bp.projection.append_row(*eb.coords(im));

    // e [b_i, b_j] = sum_k c(i, j, k) e b_k, since x -> e x is a Lie homomorphism.
    LieAlg a(f, s);
    f.visit([&](const auto& ops) {
      for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = 0; v < s; ++v) {
          const Elem* row = l.bracket_row(bp.pivots[u], bp.pivots[v]);
          Elem* dst = &a.c(u, v, 0);
          for (std::size_t k = 0; k < d; ++k)
            if (row[k]) ops.axpy(dst, row[k], bp.projection.row(k), s);
        }
    });
    Mat amb(f, 0, kg.dim());
    for (auto k : bp.pivots) amb.append_row(images[k]);
    a.set_ambient(std::move(amb));
    bp.algebra = std::move(a);
    out.summands.push_back(std::move(bp));
  }
  out.direct = total == d;
  return out;
}

}  // namespace plesken
