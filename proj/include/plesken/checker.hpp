#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "plesken/classify.hpp"
#include "plesken/group_algebra.hpp"
#include "plesken/groups.hpp"
#include "plesken/reptheory.hpp"

namespace plesken {

struct BlockInfo {
  std::size_t dim = 0;
  bool defect_zero = false;
};

struct SummandReport {
  /// Blocks of k[G] whose idempotents cut out this summand (a block and its
  /// dual under g -> g^{-1}).
  std::vector<std::size_t> blocks;
  std::size_t dim = 0;
  bool defect_zero = false;
  /// Composition factors in series order.
  std::vector<FactorDescriptor> factors;
};

/// Blocks, summands and classified composition factors of L over one field.
struct Analysis {
  std::string group;
  std::size_t order = 0;
  std::uint32_t prime = 0;
  unsigned field_degree = 1;
  std::size_t dim_L = 0;
  std::size_t dim_formula = 0;
  std::vector<BlockInfo> blocks;
  std::vector<SummandReport> summands;
  /// Summand dimensions add up to dim L.
  bool direct = false;
};

/// Hints for the simple factors of the summand cut out by the given blocks.
using HintFn = std::function<std::vector<FactorDescriptor>(const std::vector<std::size_t>& blocks)>;

/// Runs projections -> composition series -> classification for the given
/// block decomposition of k[G], k = f.
Analysis analyze(const Group& g, const Field& f, Classifier& c, const BlockDecomposition& bd, const HintFn& hints = {});
/// Same, computing the blocks first.
Analysis analyze(const Group& g, const Field& f, Classifier& c, const HintFn& hints = {});

struct FactorMatch {
  FactorDescriptor predicted;
  bool matched = false;
  std::string computed;
  std::string note;
};

struct DefectZeroCheck {
  std::size_t summand = 0;
  bool classical = false;
  std::string factors;
};

struct ConjectureReport {
  Analysis analysis;
  std::vector<CharRow> brauer;
  PredictedDecomposition predicted;

  bool part1 = false;
  std::size_t projected_dim = 0;
  std::vector<FactorDescriptor> unidentified;
  bool part2 = false;
  std::vector<FactorMatch> part3_matches;
  /// Computed classical factors not accounted for by any prediction.
  std::vector<std::string> unpredicted;
  bool part3 = false;
  std::vector<DefectZeroCheck> part4_blocks;
  bool part4 = false;
  /// Abelian chunk dimension -> count.
  std::map<std::size_t, std::size_t> abelian_summary;
  std::size_t abelian_total = 0;
  std::vector<std::string> notes;

  bool passed() const { return part1 && part2 && part3 && part4; }
};

/// The modular conjecture for G at an odd prime p dividing |G|, over the
/// splitting field F_{p^k} (or the given degree).
ConjectureReport check_conjecture(const Group& g, std::uint32_t p, std::uint64_t seed = 0, unsigned field_degree = 0);

struct OrdinaryReport {
  Analysis analysis;
  std::vector<CharRow> characters;
  PredictedDecomposition predicted;
  std::vector<FactorMatch> matches;
  std::vector<std::string> unpredicted;
  std::size_t abelian_total = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

/// The ordinary decomposition over F_{p^k} for p not dividing |G|: computed
/// simple factors must equal the predicted multiset and the abelian
/// dimensions must agree.
OrdinaryReport check_ordinary(const Group& g, std::uint32_t p, std::uint64_t seed = 0, unsigned field_degree = 1);

struct ImplicationReport {
  bool l_solvable = false;
  bool g_solvable = false;
  bool l_nilpotent = false;
  bool g2_nilpotent = false;
  /// L solvable => G solvable (stated for characteristic 0; recorded here).
  bool solvable_holds = false;
  /// L nilpotent => G^2 nilpotent.
  bool nilpotent_holds = false;
};

ImplicationReport check_implications(const Group& g, std::uint32_t p);

/// Matches predictions against computed simple factors (canonical types,
/// multiset, each computed factor used once). A match that only works up
/// to field degree or through a candidate set is kept with a note.
std::vector<FactorMatch> match_factors(const std::vector<FactorDescriptor>& predicted,
                                       const std::vector<FactorDescriptor>& computed,
                                       std::vector<std::string>* unmatched_computed = nullptr);

}  // namespace plesken
