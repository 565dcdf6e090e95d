#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plesken/classify.hpp"
#include "plesken/group_algebra.hpp"
#include "plesken/groups.hpp"
#include "plesken/meataxe.hpp"

namespace plesken {

/// Degree and Frobenius-Schur indicator of one irreducible character.
struct CharRow {
  std::size_t degree = 0;
  /// +1 orthogonal, -1 symplectic, 0 not self-dual.
  int indicator = 0;
  /// Size of the Galois orbit this character lies in over the working field.
  unsigned field_orbit_size = 1;

  friend bool operator==(const CharRow&, const CharRow&) = default;
};

/// Ordinary character table computed modulo a prime l = 1 (mod exp G) by
/// Dixon's method.
struct OrdinaryCharacters {
  std::uint32_t modulus = 0;
  std::vector<CharRow> rows;
  /// values[i][c] is chi_i on class c, reduced mod l.
  std::vector<std::vector<Elem>> values;
};

OrdinaryCharacters ordinary_characters(const Group& g, const ConjugacyData& cd, std::uint64_t seed = 0);

/// Rows sorted by (degree, indicator desc). Orbit sizes are 1 (splitting field).
std::vector<CharRow> ordinary_char_data(const Group& g);

/// Ordinary rows with orbit sizes under the Galois group of F_q, which acts
/// on characters through the q-power map on classes. Needs gcd(q, |G|) = 1.
std::vector<CharRow> ordinary_char_data_over(const Group& g, const ConjugacyData& cd, std::uint64_t q);

/// Absolutely irreducible modules in characteristic p over F_{p^k}, where k
/// is the splitting degree unless given.
struct ModularCharacters {
  Field field;
  std::vector<CharRow> rows;
  /// modules[i] realizes rows[i]; generators are those of the group.
  std::vector<Module> modules;
};

/// Chops the permutation module and tensor products of the constituents
/// found so far until there are as many irreducibles as p-regular classes.
ModularCharacters modular_irreducibles(const Group& g, const ConjugacyData& cd, std::uint32_t p, MeatAxe& ma,
                                       unsigned field_degree = 0);

/// Matrix of sum_g x_g rho(g) for a module of the group (generators in the
/// group's generator order).
Mat group_algebra_action(const Module& m, const Group& g, const Vec& x);

/// Index of the block whose idempotent acts as the identity on m.
std::size_t block_of(const Module& m, const Group& g, const BlockDecomposition& bd);

/// Factors predicted from (degree, indicator) rows: o_n for indicator +,
/// sp_n for -, gl_n per pair of indicator 0. Field orbit sizes carry over as
/// the field degree of each factor.
struct PredictedDecomposition {
  /// Simple classical factors (canonical types).
  std::vector<FactorDescriptor> factors;
  /// Abelian dimension coming from centers of gl_n and from o_2.
  std::size_t abelian_dim = 0;
  std::size_t gl_pairs = 0;
  /// Pairs with p | n, whose gl_n contributes PA_{n-1} plus two abelian slots.
  std::size_t pa_adjustments = 0;
  /// Dimension sum of all the o_n, sp_n and gl_n.
  std::size_t total_dim = 0;
};

PredictedDecomposition predict_ordinary(const std::vector<CharRow>& rows);
PredictedDecomposition predict_modular(const std::vector<CharRow>& rows, std::uint32_t p);

/// Simple factors of o_n (indicator 1) or sp_n (indicator -1) as canonical
/// classical descriptors; o_2 has none.
std::vector<FactorDescriptor> classical_factors_of(std::size_t n, int indicator, unsigned field_degree = 1);

/// A stored character table, read from a fixture file:
///
///   group psl2 8
///   table ordinary            (or: table brauer 3)
///   1 +
///   7 +
///
/// Lines starting with '#' and blank lines are ignored; a new "group" or
/// "table" line starts a new fixture.
struct CharFixture {
  std::string group_tag;
  std::size_t group_param = 0;
  /// 0 for ordinary tables, otherwise the characteristic.
  std::uint32_t prime = 0;
  std::vector<CharRow> rows;
};

std::vector<CharFixture> parse_fixtures(const std::string& text);
std::vector<CharFixture> read_fixtures(const std::string& path);
std::string format_fixture(const CharFixture& f);

/// "+", "-" or "0".
std::string indicator_symbol(int indicator);

}  // namespace plesken
