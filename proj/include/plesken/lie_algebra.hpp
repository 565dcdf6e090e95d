#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plesken/matrix.hpp"
#include "plesken/meataxe.hpp"

namespace plesken {

/// A Lie algebra over a finite field given by dense structure constants in a
/// fixed basis b_0, ..., b_{n-1}: [b_i, b_j] = sum_k c(i, j, k) b_k.
class LieAlg {
 public:
  LieAlg(Field f, std::size_t dim) : f_(std::move(f)), n_(dim), c_(dim * dim * dim, 0) {}
  LieAlg(Field f, std::size_t dim, std::vector<Elem> constants);

  const Field& field() const { return f_; }
  std::size_t dim() const { return n_; }

  Elem c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  Elem& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  /// Coordinates of [b_i, b_j].
  const Elem* bracket_row(std::size_t i, std::size_t j) const { return c_.data() + (i * n_ + j) * n_; }
  const std::vector<Elem>& constants() const { return c_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of v -> [v, x] acting on row vectors.
  Mat ad(const Vec& x) const;
  /// Matrix of v -> [v, b_j].
  Mat ad_basis(std::size_t j) const;
  /// L acting on itself by v -> [v, b_j]; submodules are exactly the ideals.
  Module adjoint_module() const;

  bool is_abelian() const;
  /// Structure constants in the basis given by the independent rows of
  /// `basis`, whose span must be a subalgebra.
  LieAlg restrict_to(const Mat& basis) const;
  /// The same algebra with scalars extended along `emb`.
  LieAlg base_change(const Embedding& emb) const;

  bool is_antisymmetric() const;
  /// Jacobi identity on basis triples: all of them when `samples` is zero,
  /// otherwise that many random triples.
  bool satisfies_jacobi(std::size_t samples = 0, std::uint64_t seed = 0) const;

  /// Optional realization of the basis as rows in an ambient space (for
  /// Plesken algebras, the group algebra).
  const std::optional<Mat>& ambient() const { return ambient_; }
  void set_ambient(Mat m) { ambient_ = std::move(m); }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Elem> c_;
  std::optional<Mat> ambient_;
};

/// Structure constants of the factor upper/lower of ideals lower <= upper
/// (rows in L coordinates), in the basis given by `reps` (ambient lifts of a
/// basis of the factor). `action` holds the induced matrices of v -> [v, b_j]
/// on the factor for every basis element b_j of L.
LieAlg factor_algebra(const LieAlg& l, const Mat& reps, const std::vector<Mat>& action);

}  // namespace plesken
