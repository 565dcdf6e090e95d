#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plesken/lie_algebra.hpp"
#include "plesken/meataxe.hpp"

namespace plesken {

/// One composition factor: Ab(n), a classical type, or unidentified.
struct FactorDescriptor {
  enum class Kind { Abelian, Classical, Unidentified };
  Kind kind = Kind::Unidentified;
  /// Dimension over the field the factor is described over.
  std::size_t dim = 0;
  /// "A", "PA", "B", "C" or "D" for classical factors.
  std::string family;
  unsigned rank = 0;
  /// Degree over the working field of the field the factor is absolutely
  /// simple over; a factor with field_degree e > 1 stands for one of e
  /// Galois-conjugate summands after extending scalars.
  unsigned field_degree = 1;
  /// Other classical types with the same fingerprint, when ambiguous.
  std::vector<std::pair<std::string, unsigned>> alternatives;
  /// Dimension coincidences with exceptional modular algebras, if any.
  std::string note;

  static FactorDescriptor abelian(std::size_t n);
  static FactorDescriptor classical(std::string family, unsigned rank, unsigned field_degree = 1);
  static FactorDescriptor unidentified(std::size_t n);
};

/// "Ab(3)", "B4", "B4^(3)" (for field_degree 3), "?(63)".
std::string to_string(const FactorDescriptor& f);

/// Dimension of the classical algebra: A_n (n+1)^2-1, PA_n (n+1)^2-2,
/// B_n and C_n 2n^2+n, D_n 2n^2-n.
std::size_t classical_dim(const std::string& family, unsigned rank);

/// Representative of the isomorphism class under the low-rank coincidences
/// B1 = C1 = A1, C2 = B2, D3 = A3.
std::pair<std::string, unsigned> canonical_type(const std::string& family, unsigned rank);

/// Basis of the matrix Lie algebra realizing the type: traceless matrices
/// (A), X with X^T J + J X = 0 for the split orthogonal or symplectic J
/// (B, C, D). Returned as flattened n x n matrices.
std::vector<Vec> classical_matrix_basis(const std::string& family, unsigned rank, const Field& f);

/// The classical algebra as structure constants over f; PA_n is sl_{n+1}
/// modulo scalars and needs p | n + 1.
LieAlg reference_classical(const std::string& family, unsigned rank, const Field& f);

/// Quotient by an ideal (rows in L coordinates).
LieAlg quotient_algebra(const LieAlg& l, const Mat& ideal);

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  /// Dimension of a Cartan subalgebra (the Fitting null component of ad x
  /// for a regular x).
  std::size_t toral_dim = 0;
  std::size_t root_count = 0;
  /// Whether a torus splitting over a manageable extension was found; the
  /// root data below is only meaningful then.
  bool split = false;
  unsigned split_degree = 0;
  /// Sorted ranks of ad(e) for the root vectors e.
  std::vector<std::size_t> root_ad_ranks;

  /// Equality of the structural fields (split_degree is incidental).
  bool matches(const Fingerprint& o) const;
};

Fingerprint fingerprint(const LieAlg& l, std::uint64_t seed = 0);

/// Memoizes reference fingerprints per (family, rank, characteristic).
class Classifier {
 public:
  explicit Classifier(std::uint64_t seed = 0) : seed_(seed), ma_(seed) {}

  const Fingerprint& reference_fingerprint(const std::string& family, unsigned rank, std::uint32_t p);

  /// Classifies a simple Lie algebra. Hints are tried first (verification
  /// mode): the first hint whose reference fingerprint matches is returned.
  /// Otherwise every classical type of the right dimension is compared. A
  /// factor whose centroid is a proper extension F_{q^e} is split over that
  /// field and reported as e conjugate factors with field_degree e.
  std::vector<FactorDescriptor> classify_simple(const LieAlg& l, const std::vector<FactorDescriptor>& hints = {});

  MeatAxe& meataxe() { return ma_; }

 private:
  std::vector<FactorDescriptor> classify_absolute(const LieAlg& l, const std::vector<FactorDescriptor>& hints);

  std::uint64_t seed_;
  MeatAxe ma_;
  std::map<std::tuple<std::string, unsigned, std::uint32_t>, Fingerprint> cache_;
};

/// Exceptional modular families whose dimension formula hits n in
/// characteristic p, e.g. "W/K (p^N)"; empty if none.
std::string exceptional_dimension_note(std::size_t n, std::uint32_t p);

}  // namespace plesken
