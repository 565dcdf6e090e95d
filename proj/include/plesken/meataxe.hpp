#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plesken/matrix.hpp"

namespace plesken {

/// A finite-dimensional module given by the matrices of a generating set of
/// the acting algebra; vectors are rows and act as v -> v * A.
struct Module {
  Field field;
  std::size_t dim = 0;
  std::vector<Mat> gens;

  Module(Field f, std::size_t d, std::vector<Mat> g) : field(std::move(f)), dim(d), gens(std::move(g)) {}
};

/// Contragredient module (A^{-1})^T; generators must be invertible.
Module dual_module(const Module& m);
/// Module with transposed generators (the dual for the algebra action).
Module transposed_module(const Module& m);
/// Diagonal action A (x) B on the tensor product; generator lists must match.
Module tensor_product(const Module& a, const Module& b);

/// Basis (rows) of the submodule generated by the rows of `seeds`, listed in
/// the order found by spinning.
Mat spin(const Module& m, const Mat& seeds);
/// Action on the invariant subspace with the given basis, in its coordinates.
Module restrict_module(const Module& m, const Mat& basis);
/// Action on m / span(basis). The quotient basis is the image of unit vectors
/// at the non-pivot columns of the echelon form of `basis`; those unit vectors
/// are returned in `reps` if requested.
Module quotient_module(const Module& m, const Mat& basis, Mat* reps = nullptr);
/// Action on upper / lower for invariant subspaces lower <= upper (ambient
/// bases); `reps` receives ambient lifts of the section basis.
Module section(const Module& m, const Mat& lower, const Mat& upper, Mat* reps = nullptr);

/// A replayable random element of the algebra generated by a module's
/// generators: products over a growing pool, then a linear combination.
struct AlgebraWord {
  std::vector<std::pair<std::size_t, std::size_t>> products;
  std::vector<Elem> coeffs;

  Mat evaluate(const Module& m) const;
};

struct CompositionSeries {
  /// Nested invariant subspaces 0 = chain[0] < ... < chain.back() = whole space,
  /// as ambient bases.
  std::vector<Mat> chain;
  /// factors[i] is the action on chain[i+1] / chain[i].
  std::vector<Module> factors;
  /// Ambient lifts of the basis used for each factor.
  std::vector<Mat> reps;
};

/// Randomized Holt-Rees MeatAxe with Norton's irreducibility test. All
/// randomness comes from the seed, so results are reproducible.
class MeatAxe {
 public:
  explicit MeatAxe(std::uint64_t seed, int max_attempts = 200) : rng_(seed), max_attempts_(max_attempts) {}

  /// A proper nonzero submodule, or nullopt when the module is irreducible
  /// (which is then certified).
  std::optional<Mat> proper_submodule(const Module& m);
  bool is_irreducible(const Module& m) { return !proper_submodule(m).has_value(); }
  /// An irreducible submodule inside the invariant subspace `within` (ambient
  /// basis, nonzero).
  Mat minimal_submodule(const Module& m, const Mat& within);
  CompositionSeries composition_series(const Module& m);

  /// Dimension over the base field of End(m) for an irreducible m.
  unsigned endomorphism_degree(const Module& m);
  /// Basis of End(m) for an irreducible m, as matrices acting on rows.
  std::vector<Mat> endomorphism_basis(const Module& m);
  /// Isomorphism test for irreducible modules.
  bool isomorphic(const Module& a, const Module& b);
  /// For irreducible m with invertible generators: a nonzero matrix F with
  /// (uA) F (vA)^T = u F v^T for all generators A, or nullopt if m is not
  /// self-dual.
  std::optional<Mat> invariant_form(const Module& m);

  Rng& rng() { return rng_; }

 private:
  struct GoodPair {
    AlgebraWord word;
    Poly f;
    Mat kernel;
  };
  AlgebraWord random_word(const Module& m, int attempt);
  GoodPair good_pair(const Module& m);
  void series_rec(const Module& m, std::vector<Mat>& chain, int depth);

  Rng rng_;
  int max_attempts_;
};

/// Solutions x (rows) such that v -> sum_t x_t cand_t extends to a module
/// homomorphism a -> b, where v generates a. If `maps` is given it receives
/// the matrix of each such homomorphism (u -> u * Phi).
Mat cyclic_homomorphisms(const Module& a, const Vec& v, const Module& b, const Mat& cand,
                         std::vector<Mat>* maps = nullptr);

}  // namespace plesken
