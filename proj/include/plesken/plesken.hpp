#pragma once

#include <cstddef>
#include <vector>

#include "plesken/group_algebra.hpp"
#include "plesken/lie_algebra.hpp"

namespace plesken {

/// The Lie algebra L[G] spanned by g^ = g - g^{-1} inside k[G], with basis
/// g^ for one element g of each pair {g, g^{-1}} of elements of order > 2
/// (the one with smaller index), in element order. The ambient rows are the
/// group algebra coordinates of the basis.
LieAlg build_plesken(const Group& g, const Field& f);

/// (|G| - t - 1) / 2 with t the number of involutions.
std::size_t dim_formula(const Group& g);

/// Element index of the group element g with b_i = g - g^{-1}, per basis index.
std::vector<std::size_t> plesken_basis_elements(const Group& g);

/// The image e * L of L[G] under a central idempotent e, with the induced
/// bracket. Blocks b and b* with b != b* are projected together, since only
/// e_b + e_{b*} maps L into itself.
struct BlockProjection {
  std::vector<std::size_t> blocks;
  Vec idempotent;
  LieAlg algebra;
  /// Indices of the L basis elements whose images form the summand basis.
  std::vector<std::size_t> pivots;
  /// Row k holds the coordinates of e * b_k in the summand basis.
  Mat projection;
};

struct Projections {
  std::vector<BlockProjection> summands;
  /// Whether the summand dimensions add up to dim L.
  bool direct = false;
};

Projections project_onto_blocks(const LieAlg& l, const GroupAlgebra& kg, const BlockDecomposition& bd);

}  // namespace plesken
