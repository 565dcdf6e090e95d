#pragma once

#include <cstdint>
#include <vector>

#include "plesken/groups.hpp"
#include "plesken/matrix.hpp"
#include "plesken/meataxe.hpp"

namespace plesken {

/// The group algebra k[G]; elements are coefficient vectors indexed by
/// element index. The Group must outlive the algebra.
class GroupAlgebra {
 public:
  GroupAlgebra(const Group& g, Field f) : g_(&g), f_(std::move(f)) {}

  const Group& group() const { return *g_; }
  const Field& field() const { return f_; }
  std::size_t dim() const { return g_->order(); }

  Vec zero() const { return Vec(dim(), 0); }
  Vec one() const { return basis(g_->identity()); }
  Vec basis(std::size_t g) const;

  Vec mul(const Vec& x, const Vec& y) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(Elem c, const Vec& x) const;
  /// Anti-involution induced by g -> g^{-1}.
  Vec star(const Vec& x) const;
  /// Image of x under right multiplication by the group element s.
  Vec times_element(const Vec& x, std::size_t s) const;

  /// k[G] as a right module over itself, acted on by the group generators.
  Module right_regular_module() const;
  /// Permutation module on the points moved by the generating permutations.
  Module permutation_module() const;

 private:
  void check(const Vec& x) const;
  const Group* g_;
  Field f_;
};

/// Class sums, one per conjugacy class, in class order.
std::vector<Vec> center_basis(const GroupAlgebra& kg, const ConjugacyData& cd);

/// Class multiplication coefficients: a[(i * r + j) * r + k] is the number of
/// pairs (x, y) in C_i x C_j with x y equal to the representative of C_k.
std::vector<std::uint32_t> class_constants(const Group& g, const ConjugacyData& cd);

/// Smallest k such that F_{p^k} is a splitting field for G: the p^k-power map
/// fixes every p-regular class.
unsigned splitting_field_degree(const Group& g, const ConjugacyData& cd, std::uint32_t p);

struct BlockDecomposition {
  std::vector<Vec> idempotents;
  std::vector<std::size_t> dims;
  std::vector<bool> defect_zero;
  /// Index of the block whose idempotent is star(e_j).
  std::vector<std::size_t> dual;
  /// Index of the block containing the trivial module.
  std::size_t principal = 0;
};

/// Primitive central idempotents of k[G]. The principal block comes first,
/// then the others by decreasing dimension.
BlockDecomposition block_idempotents(const GroupAlgebra& kg, const ConjugacyData& cd, MeatAxe& ma);

/// Basis (rows) of the right ideal x * k[G].
Mat right_ideal_basis(const GroupAlgebra& kg, const Vec& x);

/// Matrices of right multiplication by a basis of the two-sided ideal e * k[G]
/// (e central), acting on that ideal in the same basis; a faithful matrix
/// realization of the block algebra.
std::vector<Mat> block_algebra_matrices(const GroupAlgebra& kg, const Vec& e);

/// Jacobson radical of the algebra spanned by the given matrices acting
/// faithfully on a common space, as coefficient rows over those matrices.
/// An element acts trivially on every composition factor iff it is radical.
Mat radical(const std::vector<Mat>& algebra, MeatAxe& ma);

/// Whether the block B = e * k[G] has zero radical. By Wedderburn's theorem
/// dim B >= dim(S)^2 / dim End(S) for any simple B-module S, with equality iff
/// B is simple; one simple submodule of B is found and the count compared.
bool block_is_semisimple(const GroupAlgebra& kg, const Vec& e, MeatAxe& ma);

}  // namespace plesken
