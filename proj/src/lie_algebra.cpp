#include "plesken/lie_algebra.hpp"

#include <stdexcept>

#include "plesken/error.hpp"

namespace plesken {

LieAlg::LieAlg(Field f, std::size_t dim, std::vector<Elem> constants)
    : f_(std::move(f)), n_(dim), c_(std::move(constants)) {
  if (c_.size() != n_ * n_ * n_) throw ValidationError("structure constants have the wrong size");
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw ValidationError("Lie bracket of vectors of wrong length");
  Vec out(n_, 0);
  f_.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!y[j]) continue;
        ops.axpy(out.data(), ops.mul(x[i], y[j]), bracket_row(i, j), n_);
      }
    }
  });
  return out;
}

Mat LieAlg::ad(const Vec& x) const {
  if (x.size() != n_) throw ValidationError("ad of a vector of wrong length");
  Mat m(f_, n_, n_);
  f_.visit([&](const auto& ops) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!x[j]) continue;
      for (std::size_t i = 0; i < n_; ++i) ops.axpy(m.row(i), x[j], bracket_row(i, j), n_);
    }
  });
  return m;
}

Mat LieAlg::ad_basis(std::size_t j) const {
  Mat m(f_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) std::copy(bracket_row(i, j), bracket_row(i, j) + n_, m.row(i));
  return m;
}

Module LieAlg::adjoint_module() const {
  std::vector<Mat> gens;
  for (std::size_t j = 0; j < n_; ++j) gens.push_back(ad_basis(j));
  return Module(f_, n_, std::move(gens));
}

bool LieAlg::is_abelian() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

LieAlg LieAlg::restrict_to(const Mat& basis) const {
  const std::size_t s = basis.rows();
  EchelonBasis eb(f_, n_);
  for (std::size_t i = 0; i < s; ++i)
    if (!eb.add(basis.row_vec(i))) throw ValidationError("restrict_to: basis rows are dependent");
  LieAlg out(f_, s);
  for (std::size_t t = 0; t < s; ++t) {
    const Mat a = ad(basis.row_vec(t));
    for (std::size_t r = 0; r < s; ++r) {
      auto co = eb.coords(vec_mul(basis.row_vec(r), a));
      if (!co) throw ValidationError("restrict_to: span is not closed under the bracket");
      std::copy(co->begin(), co->end(), &out.c(r, t, 0));
    }
  }
  if (ambient_) out.set_ambient(basis * *ambient_);
  return out;
}

LieAlg LieAlg::base_change(const Embedding& emb) const {
  if (emb.source() != f_) throw ValidationError("base_change: embedding source differs from the field");
  std::vector<Elem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = emb(c_[i]);
  return LieAlg(emb.target(), n_, std::move(c));
}

bool LieAlg::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != f_.neg(c(j, i, k))) return false;
  return true;
}

bool LieAlg::satisfies_jacobi(std::size_t samples, std::uint64_t seed) const {
  if (n_ == 0) return true;
  Vec acc(n_);
  auto cyclic_sum_is_zero = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::fill(acc.begin(), acc.end(), 0);
    f_.visit([&](const auto& ops) {
      const std::size_t t[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
      for (const auto& [a, b, z] : t) {
        const Elem* ab = bracket_row(a, b);
        for (std::size_t m = 0; m < n_; ++m)
          if (ab[m]) ops.axpy(acc.data(), ab[m], bracket_row(m, z), n_);
      }
    });
    return is_zero_vec(acc);
  };
  if (samples == 0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k)
          if (!cyclic_sum_is_zero(i, j, k)) return false;
    return true;
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    if (!cyclic_sum_is_zero(rng() % n_, rng() % n_, rng() % n_)) return false;
  return true;
}

LieAlg factor_algebra(const LieAlg& l, const Mat& reps, const std::vector<Mat>& action) {
  const std::size_t q = reps.rows();
  if (action.size() != l.dim()) throw ValidationError("factor_algebra: one action matrix per basis element expected");
  const Field& f = l.field();
  LieAlg out(f, q);
  // [r_a, r_c] is the image of r_a under the action of r_c.
  for (std::size_t cidx = 0; cidx < q; ++cidx) {
    Mat act(f, q, q);
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (reps(cidx, j)) act = act + reps(cidx, j) * action[j];
    for (std::size_t a = 0; a < q; ++a) std::copy(act.row(a), act.row(a) + q, &out.c(a, cidx, 0));
  }
  return out;
}

}  // namespace plesken
