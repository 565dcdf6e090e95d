#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plesken/lie_algebra.hpp"
#include "plesken/meataxe.hpp"

namespace plesken {

/// One composition factor of a Lie algebra before classification.
struct LieFactor {
  bool abelian = false;
  std::size_t dim = 0;
  /// Set for nonabelian factors: the factor as a simple Lie algebra.
  std::optional<LieAlg> algebra;
};

struct LieSeries {
  /// Ideals 0 = chain[0] < ... < chain.back() = L (rows in L coordinates),
  /// one step per irreducible factor of the adjoint module.
  std::vector<Mat> chain;
  /// Abelian factors with nontrivial action are kept as one chunk each; the
  /// one-dimensional factors with trivial action are merged into a single
  /// chunk at the position of the first. Nonabelian factors that are not
  /// simple in their own right are replaced by their own factors.
  std::vector<LieFactor> factors;
};

/// A minimal nonzero ideal inside the ideal spanned by the rows of `within`.
Mat minimal_ideal(const LieAlg& l, const Mat& within, MeatAxe& ma);

LieSeries lie_composition_series(const LieAlg& l, MeatAxe& ma);

/// Span of [a, b] for rows a of A and b of B.
Mat bracket_span(const LieAlg& l, const Mat& a, const Mat& b);

/// Dimensions of L, [L, L], [[L, L], [L, L]], ... until it stabilizes.
std::vector<std::size_t> derived_series(const LieAlg& l);
/// Dimensions of L, [L, L], [L, [L, L]], ... until it stabilizes.
std::vector<std::size_t> lower_central_series(const LieAlg& l);
bool lie_is_solvable(const LieAlg& l);
bool lie_is_nilpotent(const LieAlg& l);

/// Basis (rows) of the center.
Mat lie_center(const LieAlg& l);
/// Nonabelian with irreducible adjoint module.
bool lie_is_simple(const LieAlg& l, MeatAxe& ma);

}  // namespace plesken
