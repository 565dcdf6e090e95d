// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plesken/checker.hpp"
#include "plesken/classify.hpp"
#include "plesken/density.hpp"
#include "plesken/error.hpp"
#include "plesken/liestruct.hpp"
#include "plesken/plesken.hpp"
#include "plesken/reptheory.hpp"

using namespace plesken;

namespace {

using Clock = std::chrono::steady_clock;
using Labels = std::vector<std::string>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every analysis produced during the run, for the dimension-sum property.
std::vector<Analysis> g_analyses;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Labels sorted(Labels v) {
  std::sort(v.begin(), v.end());
  return v;
}

Labels labels_of(const std::vector<FactorDescriptor>& fs) {
  Labels out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return sorted(out);
}

Labels all_labels(const Analysis& a) {
  Labels out;
  for (const auto& s : a.summands)
    for (const auto& f : s.factors) out.push_back(to_string(f));
  return sorted(out);
}

Labels repeat(const std::string& s, std::size_t n) { return Labels(n, s); }

Labels concat(std::initializer_list<Labels> parts) {
  Labels out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return sorted(out);
}

std::vector<std::size_t> summand_dims(const Analysis& a) {
  std::vector<std::size_t> d;
  for (const auto& s : a.summands) d.push_back(s.dim);
  std::sort(d.begin(), d.end());
  return d;
}

std::string join(const Labels& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

using Rows = std::vector<std::pair<std::size_t, int>>;

Rows rows_of(const std::vector<CharRow>& rs) {
  Rows out;
  for (const auto& r : rs) out.emplace_back(r.degree, r.indicator);
  std::sort(out.begin(), out.end());
  return out;
}

Rows sorted_rows(Rows r) {
  std::sort(r.begin(), r.end());
  return r;
}

// Criterion 1 --------------------------------------------------------------

void dimension_formula(Outcome& o) {
  struct Case {
    std::string tag;
    std::size_t param;
    std::uint32_t p;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{"psl2", 8, 3, 220},  {"psl2", 8, 5, 220},  {"psl2", 8, 7, 220},
                                   {"psl2", 8, 17, 220}, {"psl2", 8, 71, 220}, {"sl2", 5, 5, 59},
                                   {"symmetric", 3, 5, 1}, {"symmetric", 4, 5, 7}};
  double worst = 0;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const Group g = builtin_group(c.tag, c.param);
    const LieAlg l = build_plesken(g, Field::prime(c.p));
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    const std::string name = g.name() + " mod " + std::to_string(c.p);
    o.require(l.dim() == c.expected, name + " dim " + std::to_string(l.dim()));
    o.require(dim_formula(g) == c.expected, name + " formula " + std::to_string(dim_formula(g)));
    o.require(t < 10, name + " took " + std::to_string(t) + " s");
  }
  o.detail << "8 cases, slowest " << worst << " s";
}

// Criterion 2 --------------------------------------------------------------

void ordinary_split(Outcome& o) {
  const auto r = check_ordinary(builtin_group("psl2", 8), 71);
  g_analyses.push_back(r.analysis);
  const Labels want = concat({repeat("B3", 4), {"D4"}, repeat("B4", 3)});
  Labels simple;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (const auto& s : r.analysis.summands)
    for (const auto& f : s.factors) {
      total += f.dim;
      if (f.kind != FactorDescriptor::Kind::Abelian) {
        simple.push_back(to_string(f));
        dims.push_back(f.dim);
      }
    }
  std::sort(simple.begin(), simple.end());
  std::sort(dims.begin(), dims.end());
  o.require(simple == want, "factors " + join(simple));
  o.require(dims == std::vector<std::size_t>{21, 21, 21, 21, 28, 36, 36, 36}, "dims " + join(dims));
  o.require(total == 220 && r.analysis.dim_L == 220, "total " + std::to_string(total));
  o.require(r.passed, "prediction check");
  o.detail << join(simple);
}

// Criterion 3 --------------------------------------------------------------

void ordinary_nonsplit(Outcome& o) {
  const Group g = builtin_group("psl2", 8);
  {
    const auto r = check_ordinary(g, 17);
    g_analyses.push_back(r.analysis);
    o.require(summand_dims(r.analysis) == std::vector<std::size_t>{21, 21, 21, 21, 28, 108},
              "p=17 summands " + join(summand_dims(r.analysis)));
    for (const auto& s : r.analysis.summands)
      if (s.dim == 108) o.require(labels_of(s.factors) == repeat("B4^(3)", 3), "p=17 108-dim " + join(labels_of(s.factors)));
    o.require(r.passed, "p=17 prediction check");
    o.detail << "p=17: " << join(summand_dims(r.analysis)) << "; ";
  }
  {
    const auto r = check_ordinary(g, 5);
    g_analyses.push_back(r.analysis);
    o.require(summand_dims(r.analysis) == std::vector<std::size_t>{21, 28, 63, 108},
              "p=5 summands " + join(summand_dims(r.analysis)));
    for (const auto& s : r.analysis.summands) {
      if (s.dim == 63) o.require(labels_of(s.factors) == repeat("B3^(3)", 3), "p=5 63-dim " + join(labels_of(s.factors)));
      if (s.dim == 108) o.require(labels_of(s.factors) == repeat("B4^(3)", 3), "p=5 108-dim " + join(labels_of(s.factors)));
    }
    o.require(r.passed, "p=5 prediction check");
    o.detail << "p=5: " << join(summand_dims(r.analysis));
  }
}

// Criterion 4 --------------------------------------------------------------

void modular_sl2_5(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = check_conjecture(builtin_group("sl2", 5), 5);
  const double t = seconds_since(t0);
  g_analyses.push_back(r.analysis);
  const auto& a = r.analysis;
  std::vector<bool> flags;
  for (const auto& b : a.blocks) flags.push_back(b.defect_zero);
  std::sort(flags.begin(), flags.end());
  o.require(a.blocks.size() == 3, "block count " + std::to_string(a.blocks.size()));
  o.require(flags == std::vector<bool>{false, false, true}, "defect-0 flags");
  o.require(summand_dims(a) == std::vector<std::size_t>{10, 12, 37}, "summands " + join(summand_dims(a)));
  const Labels want = concat({repeat("Ab(3)", 5), {"Ab(8)", "Ab(10)", "B1", "C1", "B2", "C2"}});
  o.require(all_labels(a) == want, "factors " + join(all_labels(a)));
  std::size_t defect_zero_summands = 0;
  for (const auto& s : a.summands)
    if (s.defect_zero) {
      ++defect_zero_summands;
      o.require(labels_of(s.factors) == Labels{"B2"}, "defect-0 summand " + join(labels_of(s.factors)));
    }
  o.require(defect_zero_summands == 1, "one defect-0 summand");
  o.require(r.passed(), "conjecture parts");
  o.require(t < 60, "runtime");
  o.detail << join(summand_dims(a)) << ": " << join(all_labels(a));
}

// Criterion 5 --------------------------------------------------------------

void modular_psl2_8_case(Outcome& o, std::uint32_t p, std::size_t blocks, const std::string& simple_label,
                         std::size_t simple_count, const Labels& a1) {
  const auto t0 = Clock::now();
  const auto r = check_conjecture(builtin_group("psl2", 8), p);
  const double t = seconds_since(t0);
  g_analyses.push_back(r.analysis);
  const auto& a = r.analysis;
  const std::string tag = "p=" + std::to_string(p) + " ";
  o.require(a.blocks.size() == blocks, tag + "blocks " + std::to_string(a.blocks.size()));
  o.require(a.summands.size() == simple_count + 1, tag + "summand count " + std::to_string(a.summands.size()));
  std::size_t simple = 0, other = 0;
  for (const auto& s : a.summands) {
    const Labels l = labels_of(s.factors);
    if (l == Labels{simple_label})
      ++simple;
    else {
      ++other;
      o.require(l == a1, tag + "principal summand " + join(l));
    }
  }
  o.require(simple == simple_count && other == 1, tag + "summand shapes");
  o.require(r.passed(), tag + "conjecture parts");
  o.require(t < 300, tag + "runtime");
  o.detail << tag << "over F_" << p << "^" << a.field_degree << " " << t << " s; ";
}

void modular_psl2_8(Outcome& o) {
  modular_psl2_8_case(o, 3, 4, "B4", 3, concat({{"Ab(7)"}, repeat("Ab(21)", 4), {"B3"}}));
  modular_psl2_8_case(o, 7, 5, "B3", 4, concat({repeat("Ab(8)", 3), repeat("Ab(28)", 3), {"D4"}}));
}

// Criterion 6 --------------------------------------------------------------

void character_data(Outcome& o) {
  const Group sl = builtin_group("sl2", 5);
  const Group psl = builtin_group("psl2", 8);
  o.require(rows_of(ordinary_char_data(sl)) ==
                sorted_rows({{1, 1}, {2, -1}, {2, -1}, {3, 1}, {3, 1}, {4, 1}, {4, -1}, {5, 1}, {6, -1}}),
            "SL2(5) ordinary");
  o.require(rows_of(ordinary_char_data(psl)) ==
                sorted_rows({{1, 1}, {7, 1}, {7, 1}, {7, 1}, {7, 1}, {8, 1}, {9, 1}, {9, 1}, {9, 1}}),
            "PSL2(8) ordinary");
  MeatAxe ma(0);
  o.require(rows_of(modular_irreducibles(sl, conjugacy_classes(sl), 5, ma).rows) ==
                sorted_rows({{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}}),
            "SL2(5) mod 5");
  const auto cd = conjugacy_classes(psl);
  o.require(rows_of(modular_irreducibles(psl, cd, 3, ma).rows) == sorted_rows({{1, 1}, {7, 1}, {9, 1}, {9, 1}, {9, 1}}),
            "PSL2(8) mod 3");
  o.require(rows_of(modular_irreducibles(psl, cd, 7, ma).rows) ==
                sorted_rows({{1, 1}, {7, 1}, {7, 1}, {7, 1}, {7, 1}, {8, 1}}),
            "PSL2(8) mod 7");
  o.detail << "2 ordinary and 3 Brauer tables";
}

// Criterion 7 --------------------------------------------------------------

void density(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = density_experiment(10000);
  const double t = seconds_since(t0);
  const double want[4] = {1.0 / 9, 4.0 / 9, 2.0 / 9, 2.0 / 9};
  o.require(r.rows.size() == 4, "row count");
  for (std::size_t i = 0; i < r.rows.size() && i < 4; ++i) {
    const double f = r.rows[i].frequency(r.primes);
    o.require(std::abs(f - want[i]) <= 0.05, "row " + std::to_string(i) + " frequency " + std::to_string(f));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f ", f);
    o.detail << buf;
  }
  o.require(t < 30, "runtime");
  o.detail << "over " << r.primes << " primes, " << t << " s";
}

// Criterion 8 --------------------------------------------------------------

bool lie_axioms(const LieAlg& l, std::uint64_t seed) {
  // Exhaustive up to dimension 60, random triples above.
  return l.is_antisymmetric() && l.satisfies_jacobi(l.dim() <= 60 ? 0 : 3000, seed);
}

void properties(Outcome& o) {
  // Lie axioms on Plesken algebras, their block summands, their simple
  // composition factors and the reference classical algebras.
  std::size_t algebras = 0;
  MeatAxe ma(0);
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"sl2", 5, 5}, {"symmetric", 4, 5}, {"alternating", 5, 5}, {"psl2", 7, 3}, {"quaternion", 0, 3},
           {"psl2", 8, 71}}) {
    const Group g = builtin_group(tag, n);
    const Field f = Field::prime(p);
    const LieAlg l = build_plesken(g, f);
    ++algebras;
    o.require(lie_axioms(l, algebras), g.name() + " L axioms");
    const GroupAlgebra kg(g, f);
    const auto bd = block_idempotents(kg, conjugacy_classes(g), ma);
    for (const auto& s : project_onto_blocks(l, kg, bd).summands) {
      ++algebras;
      o.require(lie_axioms(s.algebra, algebras), g.name() + " summand axioms");
      if (s.algebra.dim() > 60) continue;
      for (const auto& fac : lie_composition_series(s.algebra, ma).factors)
        if (fac.algebra) {
          ++algebras;
          o.require(lie_axioms(*fac.algebra, algebras), g.name() + " factor axioms");
        }
    }
  }
  for (const auto& [fam, r, p] : std::vector<std::tuple<std::string, unsigned, std::uint32_t>>{
           {"A", 2, 5}, {"B", 2, 5}, {"C", 3, 7}, {"D", 4, 5}, {"B", 3, 7}}) {
    ++algebras;
    o.require(lie_axioms(reference_classical(fam, r, Field::prime(p)), algebras), fam + std::to_string(r) + " axioms");
  }
  o.detail << algebras << " algebras; ";

  // Seed independence of factor multisets.
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"sl2", 5, 5}, {"alternating", 5, 5}, {"symmetric", 4, 3}, {"psl2", 7, 3}, {"psl2", 7, 7}}) {
    const Group g = builtin_group(tag, n);
    Labels first;
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto r = check_conjecture(g, p, seed);
      g_analyses.push_back(r.analysis);
      const Labels l = all_labels(r.analysis);
      if (seed == 0)
        first = l;
      else
        o.require(l == first, g.name() + " mod " + std::to_string(p) + " seed " + std::to_string(seed));
    }
  }
  {
    const Group g = builtin_group("psl2", 8);
    Labels first;
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto r = check_ordinary(g, 17, seed);
      g_analyses.push_back(r.analysis);
      if (seed == 0)
        first = all_labels(r.analysis);
      else
        o.require(all_labels(r.analysis) == first, "PSL2(8) mod 17 seed " + std::to_string(seed));
    }
  }

  // Block idempotents: orthogonal, idempotent, summing to 1.
  std::size_t decompositions = 0;
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"sl2", 5, 5}, {"symmetric", 4, 3}, {"alternating", 5, 3}, {"dihedral", 6, 3}, {"psl2", 7, 7},
           {"symmetric", 4, 5}, {"psl2", 8, 3}}) {
    const Group g = builtin_group(tag, n);
    const auto cd = conjugacy_classes(g);
    const Field f = Field::extension(p, splitting_field_degree(g, cd, p));
    const GroupAlgebra kg(g, f);
    const auto bd = block_idempotents(kg, cd, ma);
    Vec sum = kg.zero();
    for (std::size_t i = 0; i < bd.idempotents.size(); ++i) {
      sum = kg.add(sum, bd.idempotents[i]);
      for (std::size_t j = 0; j < bd.idempotents.size(); ++j) {
        const Vec prod = kg.mul(bd.idempotents[i], bd.idempotents[j]);
        o.require(prod == (i == j ? bd.idempotents[i] : kg.zero()), g.name() + " idempotent product");
      }
    }
    o.require(sum == kg.one(), g.name() + " idempotents sum to 1");
    ++decompositions;
  }
  o.detail << decompositions << " block decompositions; ";

  // Random groups: sum of squared degrees and the predicted total dimension.
  std::mt19937_64 rng(20240601);
  std::size_t groups = 0, attempts = 0;
  std::vector<std::size_t> orders;
  while (groups < 10 && attempts < 1000) {
    ++attempts;
    const std::size_t degree = 3 + rng() % 6;
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      Perm p(degree);
      for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
      std::shuffle(p.begin(), p.end(), rng);
      // Short cycles keep the generated group small more often.
      if (rng() % 2) {
        Perm q(degree);
        for (std::size_t i = 0; i < degree; ++i) q[i] = static_cast<std::uint32_t>(i);
        const std::size_t a = rng() % degree, b = rng() % degree;
        std::swap(q[a], q[b]);
        p = q;
      }
      gens.push_back(p);
    }
    Group g;
    try {
      g = Group::from_generators(gens, 200);
    } catch (const LimitError&) {
      continue;
    }
    if (g.order() < 2) continue;
    const auto rows = ordinary_char_data(g);
    std::size_t sq = 0;
    for (const auto& r : rows) sq += r.degree * r.degree;
    o.require(sq == g.order(), "sum of squares for order " + std::to_string(g.order()));
    o.require(predict_ordinary(rows).total_dim == dim_formula(g), "predicted total for order " + std::to_string(g.order()));
    orders.push_back(g.order());
    ++groups;
  }
  o.require(groups == 10, "found 10 random groups");
  std::sort(orders.begin(), orders.end());
  o.detail << "random orders " << join(orders) << "; ";

  // Factor dimensions add up on every analysis of the run.
  for (const auto& a : g_analyses) {
    std::size_t summands = 0, factors = 0;
    for (const auto& s : a.summands) {
      summands += s.dim;
      std::size_t in_summand = 0;
      for (const auto& f : s.factors) in_summand += f.dim;
      o.require(in_summand == s.dim, a.group + " summand factor dims");
      factors += in_summand;
    }
    o.require(summands == a.dim_L && factors == a.dim_L, a.group + " dimension sum");
  }
  o.detail << g_analyses.size() << " analyses summed";
}

// Criterion 9 --------------------------------------------------------------

// Rank of {g - g^{-1}} over F_5 by plain Gaussian elimination, using only the
// element list and permutation inversion.
std::size_t naive_span_dim(const Group& g) {
  constexpr int p = 5;
  const std::size_t n = g.order();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g.element(i)] = i;
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = (v[i] + 1) % p;
    const std::size_t j = index.at(invert(g.element(i)));
    v[j] = (v[j] + p - 1) % p;
    rows.push_back(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    int inv = 1;
    while (rows[rank][col] * inv % p != 1) ++inv;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col]) {
        const int c = rows[r][col];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] = ((rows[r][k] - c * rows[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

void brute_force(Outcome& o) {
  std::vector<Group> groups;
  for (std::size_t n = 2; n <= 6; ++n) groups.push_back(builtin_group("cyclic", n));
  groups.push_back(builtin_group("symmetric", 3));
  groups.push_back(builtin_group("dihedral", 4));
  groups.push_back(builtin_group("quaternion"));
  groups.push_back(builtin_group("alternating", 4));
  groups.push_back(builtin_group("symmetric", 4));
  MeatAxe ma(0);
  std::size_t abelian = 0;
  for (const auto& g : groups) {
    const std::size_t naive = naive_span_dim(g);
    const LieAlg l = build_plesken(g, Field::prime(5));
    o.require(naive == dim_formula(g) && l.dim() == naive, g.name() + " span " + std::to_string(naive));
    if (!l.is_abelian() || l.dim() == 0) continue;
    ++abelian;
    const auto series = lie_composition_series(l, ma);
    o.require(series.factors.size() == 1 && series.factors[0].abelian && series.factors[0].dim == l.dim(),
              g.name() + " abelian L is one chunk");
  }
  o.detail << groups.size() << " groups, " << abelian << " with nonzero abelian L";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"dimension formula", dimension_formula},
      {"ordinary decomposition, PSL2(8) mod 71", ordinary_split},
      {"non-split ordinary primes 17 and 5", ordinary_nonsplit},
      {"modular SL2(5) mod 5", modular_sl2_5},
      {"modular PSL2(8) mod 3 and 7", modular_psl2_8},
      {"character degrees and indicators", character_data},
      {"density of splitting patterns", density},
      {"property suites", properties},
      {"brute-force span oracle", brute_force},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double t = seconds_since(t0);
    if (!o.ok) ++failed;
    char head[96];
    std::snprintf(head, sizeof head, "%s %zu. %-42s %7.2f s  ", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t);
    std::cout << head << o.detail.str() << std::endl;
  }
  return failed ? 1 : 0;
}
