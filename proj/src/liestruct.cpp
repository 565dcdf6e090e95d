#include "plesken/liestruct.hpp"

#include "plesken/error.hpp"

namespace plesken {

Mat minimal_ideal(const LieAlg& l, const Mat& within, MeatAxe& ma) {
  return ma.minimal_submodule(l.adjoint_module(), within);
}

bool lie_is_simple(const LieAlg& l, MeatAxe& ma) {
  if (l.dim() == 0 || l.is_abelian()) return false;
  return ma.is_irreducible(l.adjoint_module());
}

LieSeries lie_composition_series(const LieAlg& l, MeatAxe& ma) {
  LieSeries out;
  const auto cs = ma.composition_series(l.adjoint_module());
  out.chain = cs.chain;
  std::size_t trivial = 0;
  std::size_t trivial_pos = 0;
  for (std::size_t i = 0; i < cs.factors.size(); ++i) {
    const Module& fm = cs.factors[i];
    LieAlg q = factor_algebra(l, cs.reps[i], fm.gens);
    if (q.is_abelian()) {
      bool acts_trivially = true;
      for (const auto& g : fm.gens) acts_trivially = acts_trivially && g.is_zero();
      if (acts_trivially && fm.dim == 1) {
        if (trivial++ == 0) trivial_pos = out.factors.size();
        continue;
      }
      out.factors.push_back({true, fm.dim, std::nullopt});
    } else if (ma.is_irreducible(q.adjoint_module())) {
      out.factors.push_back({false, fm.dim, std::move(q)});
    } else {
      auto inner = lie_composition_series(q, ma);
      for (auto& f : inner.factors) out.factors.push_back(std::move(f));
    }
  }
  if (trivial > 0)
    out.factors.insert(out.factors.begin() + static_cast<std::ptrdiff_t>(trivial_pos), LieFactor{true, trivial, std::nullopt});
  return out;
}

Mat bracket_span(const LieAlg& l, const Mat& a, const Mat& b) {
  EchelonBasis eb(l.field(), l.dim());
  for (std::size_t j = 0; j < b.rows(); ++j) {
    if (eb.size() == l.dim()) break;
    const Mat prod = a * l.ad(b.row_vec(j));
    for (std::size_t i = 0; i < prod.rows(); ++i) eb.add(prod.row_vec(i));
  }
  return eb.basis();
}

std::vector<std::size_t> derived_series(const LieAlg& l) {
  std::vector<std::size_t> dims{l.dim()};
  Mat cur = Mat::identity(l.field(), l.dim());
  while (cur.rows() > 0) {
    Mat next = bracket_span(l, cur, cur);
    if (next.rows() == cur.rows()) break;
    dims.push_back(next.rows());
    cur = std::move(next);
  }
  return dims;
}

std::vector<std::size_t> lower_central_series(const LieAlg& l) {
  std::vector<std::size_t> dims{l.dim()};
  const Mat all = Mat::identity(l.field(), l.dim());
  Mat cur = all;
  while (cur.rows() > 0) {
    Mat next = bracket_span(l, cur, all);
    if (next.rows() == cur.rows()) break;
    dims.push_back(next.rows());
    cur = std::move(next);
  }
  return dims;
}

bool lie_is_solvable(const LieAlg& l) { return derived_series(l).back() == 0; }
bool lie_is_nilpotent(const LieAlg& l) { return lower_central_series(l).back() == 0; }

Mat lie_center(const LieAlg& l) {
  const std::size_t n = l.dim();
  // Row i lists [b_i, b_j] for all j; z is central iff z times this is zero.
  Mat m(l.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) std::copy(l.bracket_row(i, 0), l.bracket_row(i, 0) + n * n, m.row(i));
  return left_kernel(m);
}

}  // namespace plesken
