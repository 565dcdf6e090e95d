#include "plesken/checker.hpp"

#include <algorithm>

#include "plesken/error.hpp"
#include "plesken/liestruct.hpp"
#include "plesken/plesken.hpp"

namespace plesken {

namespace {

using TypeKey = std::pair<std::string, unsigned>;

TypeKey key_of(const FactorDescriptor& f) { return canonical_type(f.family, f.rank); }

bool is_classical(const FactorDescriptor& f) { return f.kind == FactorDescriptor::Kind::Classical; }

// Drops the first hint of the same type as each classified factor, so that
// equal-looking hints (B1 and C1, say) are handed out in order.
void consume_hints(std::vector<FactorDescriptor>& hints, const std::vector<FactorDescriptor>& got) {
  for (const auto& fd : got) {
    if (!is_classical(fd)) continue;
    const auto it = std::find_if(hints.begin(), hints.end(), [&](const FactorDescriptor& h) {
      return is_classical(h) && key_of(h) == key_of(fd);
    });
    if (it != hints.end()) hints.erase(it);
  }
}

std::string join_labels(const std::vector<FactorDescriptor>& fs) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : ", ") + to_string(f);
  return out;
}

}  // namespace

Analysis analyze(const Group& g, const Field& f, Classifier& c, const BlockDecomposition& bd, const HintFn& hints) {
  Analysis a;
  a.group = g.name();
  a.order = g.order();
  a.prime = f.characteristic();
  a.field_degree = f.degree();
  a.dim_formula = dim_formula(g);
  for (std::size_t b = 0; b < bd.idempotents.size(); ++b) a.blocks.push_back({bd.dims[b], bd.defect_zero[b]});

  const GroupAlgebra kg(g, f);
  const LieAlg l = build_plesken(g, f);
  a.dim_L = l.dim();
  const Projections pr = project_onto_blocks(l, kg, bd);
  a.direct = pr.direct;
  for (const auto& s : pr.summands) {
    SummandReport sr;
    sr.blocks = s.blocks;
    sr.dim = s.algebra.dim();
    sr.defect_zero = std::all_of(s.blocks.begin(), s.blocks.end(), [&](std::size_t b) { return bd.defect_zero[b]; });
    std::vector<FactorDescriptor> left = hints ? hints(s.blocks) : std::vector<FactorDescriptor>{};
    for (const auto& fac : lie_composition_series(s.algebra, c.meataxe()).factors) {
      if (fac.abelian) {
        sr.factors.push_back(FactorDescriptor::abelian(fac.dim));
        continue;
      }
      const auto got = c.classify_simple(*fac.algebra, left);
      consume_hints(left, got);
      sr.factors.insert(sr.factors.end(), got.begin(), got.end());
    }
    a.summands.push_back(std::move(sr));
  }
  return a;
}

Analysis analyze(const Group& g, const Field& f, Classifier& c, const HintFn& hints) {
  const GroupAlgebra kg(g, f);
  const BlockDecomposition bd = block_idempotents(kg, conjugacy_classes(g), c.meataxe());
  return analyze(g, f, c, bd, hints);
}

std::vector<FactorMatch> match_factors(const std::vector<FactorDescriptor>& predicted,
                                       const std::vector<FactorDescriptor>& computed,
                                       std::vector<std::string>* unmatched_computed) {
  std::vector<FactorDescriptor> pool;
  for (const auto& c : computed)
    if (is_classical(c)) pool.push_back(c);
  std::vector<bool> used(pool.size(), false);
  std::vector<FactorMatch> out;
  for (const auto& p : predicted) out.push_back({p, false, "", ""});

  // Identical labels first, then isomorphic types, then candidate sets, then
  // matches up to field degree.
  auto pass = [&](auto accept, const char* note) {
    for (auto& m : out) {
      if (m.matched) continue;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i] || !accept(m.predicted, pool[i])) continue;
        used[i] = true;
        m.matched = true;
        m.computed = to_string(pool[i]);
        m.note = note;
        break;
      }
    }
  };
  pass([](const FactorDescriptor& p, const FactorDescriptor& c) {
    return p.family == c.family && p.rank == c.rank && p.field_degree == c.field_degree;
  }, "");
  pass([](const FactorDescriptor& p, const FactorDescriptor& c) {
    return key_of(p) == key_of(c) && p.field_degree == c.field_degree;
  }, "");
  pass([](const FactorDescriptor& p, const FactorDescriptor& c) {
    if (p.field_degree != c.field_degree) return false;
    for (const auto& [fam, r] : c.alternatives)
      if (canonical_type(fam, r) == key_of(p)) return true;
    return false;
  }, "matched within a candidate set");
  pass([](const FactorDescriptor& p, const FactorDescriptor& c) { return key_of(p) == key_of(c); },
       "type matches, field degree differs");

  if (unmatched_computed)
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i]) unmatched_computed->push_back(to_string(pool[i]));
  return out;
}

ConjectureReport check_conjecture(const Group& g, std::uint32_t p, std::uint64_t seed, unsigned field_degree) {
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (g.order() % p != 0) throw ValidationError("p must divide |G| for the modular check");
  const ConjugacyData cd = conjugacy_classes(g);
  const unsigned k = field_degree ? field_degree : splitting_field_degree(g, cd, p);
  const Field f = Field::extension(p, k);
  Classifier c(seed);

  const ModularCharacters mc = modular_irreducibles(g, cd, p, c.meataxe(), k);
  const GroupAlgebra kg(g, f);
  const BlockDecomposition bd = block_idempotents(kg, cd, c.meataxe());
  std::vector<std::size_t> block(mc.rows.size());
  for (std::size_t i = 0; i < mc.modules.size(); ++i) block[i] = block_of(mc.modules[i], g, bd);
  auto rows_in = [&](const std::vector<std::size_t>& blocks) {
    std::vector<CharRow> rows;
    for (std::size_t i = 0; i < mc.rows.size(); ++i)
      if (std::find(blocks.begin(), blocks.end(), block[i]) != blocks.end()) rows.push_back(mc.rows[i]);
    return rows;
  };

  ConjectureReport r;
  r.brauer = mc.rows;
  r.predicted = predict_modular(mc.rows, p);
  r.analysis = analyze(g, f, c, bd, [&](const std::vector<std::size_t>& blocks) {
    return predict_modular(rows_in(blocks), p).factors;
  });
  const Analysis& a = r.analysis;

  for (const auto& s : a.summands) r.projected_dim += s.dim;
  r.part1 = a.direct && r.projected_dim == a.dim_L && a.dim_L == a.dim_formula;

  std::vector<FactorDescriptor> computed;
  std::string gl_slots;
  for (const auto& s : a.summands)
    for (const auto& fd : s.factors) {
      if (fd.kind == FactorDescriptor::Kind::Unidentified) r.unidentified.push_back(fd);
      if (fd.kind == FactorDescriptor::Kind::Abelian) {
        ++r.abelian_summary[fd.dim];
        r.abelian_total += fd.dim;
      }
      computed.push_back(fd);
    }
  for (const auto& s : a.summands) {
    const bool has_pa = std::any_of(s.factors.begin(), s.factors.end(), [](const FactorDescriptor& fd) {
      return is_classical(fd) && fd.family == "PA";
    });
    if (!has_pa) continue;
    for (const auto& fd : s.factors)
      if (fd.kind == FactorDescriptor::Kind::Abelian) gl_slots += (gl_slots.empty() ? "" : " + ") + to_string(fd);
  }
  r.part2 = r.unidentified.empty();

  r.part3_matches = match_factors(r.predicted.factors, computed, &r.unpredicted);
  r.part3 = r.unpredicted.empty() &&
            std::all_of(r.part3_matches.begin(), r.part3_matches.end(), [](const FactorMatch& m) { return m.matched; });
  for (const auto& m : r.part3_matches)
    if (!m.note.empty()) r.notes.push_back(to_string(m.predicted) + ": " + m.note);
  if (r.predicted.pa_adjustments > 0)
    r.notes.push_back("gl shells with p | degree: " + std::to_string(r.predicted.pa_adjustments) +
                      "; abelian chunks beside PA: " + (gl_slots.empty() ? "none" : gl_slots));

  // A defect-0 summand must be a direct summand whose simple factors are
  // exactly those predicted for its block, with abelian parts only from gl
  // centers.
  r.part4 = true;
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const auto& s = a.summands[i];
    if (!s.defect_zero) continue;
    const auto pred = predict_modular(rows_in(s.blocks), p);
    std::vector<std::string> extra;
    const auto ms = match_factors(pred.factors, s.factors, &extra);
    std::size_t ab = 0;
    bool unidentified = false;
    for (const auto& fd : s.factors) {
      if (fd.kind == FactorDescriptor::Kind::Abelian) ab += fd.dim;
      if (fd.kind == FactorDescriptor::Kind::Unidentified) unidentified = true;
    }
    const bool ok = r.part1 && !unidentified && extra.empty() && ab == pred.abelian_dim && !pred.factors.empty() &&
                    std::all_of(ms.begin(), ms.end(), [](const FactorMatch& m) { return m.matched; });
    r.part4_blocks.push_back({i, ok, join_labels(s.factors)});
    r.part4 = r.part4 && ok;
  }
  return r;
}

OrdinaryReport check_ordinary(const Group& g, std::uint32_t p, std::uint64_t seed, unsigned field_degree) {
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (g.order() % p == 0) throw ValidationError("p divides |G|; use the modular check");
  const ConjugacyData cd = conjugacy_classes(g);
  const Field f = Field::extension(p, field_degree);
  Classifier c(seed);
  OrdinaryReport r;
  r.characters = ordinary_char_data_over(g, cd, f.order());
  r.predicted = predict_ordinary(r.characters);
  const auto hints = r.predicted.factors;
  r.analysis = analyze(g, f, c, [&](const std::vector<std::size_t>&) { return hints; });

  std::vector<FactorDescriptor> computed;
  bool unidentified = false;
  for (const auto& s : r.analysis.summands)
    for (const auto& fd : s.factors) {
      if (fd.kind == FactorDescriptor::Kind::Abelian) r.abelian_total += fd.dim;
      if (fd.kind == FactorDescriptor::Kind::Unidentified) unidentified = true;
      computed.push_back(fd);
    }
  r.matches = match_factors(r.predicted.factors, computed, &r.unpredicted);
  for (const auto& m : r.matches)
    if (!m.note.empty()) r.notes.push_back(to_string(m.predicted) + ": " + m.note);
  r.passed = r.analysis.direct && !unidentified && r.unpredicted.empty() && r.abelian_total == r.predicted.abelian_dim &&
             std::all_of(r.matches.begin(), r.matches.end(), [](const FactorMatch& m) { return m.matched; });
  return r;
}

ImplicationReport check_implications(const Group& g, std::uint32_t p) {
  const LieAlg l = build_plesken(g, Field::prime(p));
  ImplicationReport r;
  r.l_solvable = lie_is_solvable(l);
  r.l_nilpotent = lie_is_nilpotent(l);
  r.g_solvable = group_is_solvable(g);
  r.g2_nilpotent = group_is_nilpotent(squares_subgroup(g));
  r.solvable_holds = !r.l_solvable || r.g_solvable;
  r.nilpotent_holds = !r.l_nilpotent || r.g2_nilpotent;
  return r;
}

}  // namespace plesken
