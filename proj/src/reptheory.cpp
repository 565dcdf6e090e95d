#include "plesken/reptheory.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "plesken/error.hpp"

namespace plesken {

namespace {

std::uint32_t dixon_prime(std::size_t order, std::size_t exponent) {
  for (std::uint64_t l = exponent + 1;; l += exponent)
    if (l * l > 4 * order && is_prime_number(l)) return static_cast<std::uint32_t>(l);
}

Vec random_vec(const Field& f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& c : v) c = f.random(rng);
  return v;
}

bool row_less(const CharRow& a, const CharRow& b) {
  return std::tie(a.degree, a.indicator) < std::tie(b.degree, b.indicator);
}

}  // namespace

OrdinaryCharacters ordinary_characters(const Group& g, const ConjugacyData& cd, std::uint64_t seed) {
  const std::size_t r = cd.num_classes();
  const std::size_t n = g.order();
  OrdinaryCharacters out;
  out.modulus = dixon_prime(n, g.exponent());
  const Field f = Field::prime(out.modulus);
  const auto a = class_constants(g, cd);

  // Central characters w (w_0 = 1) satisfy w M_i = w_i w with
  // M_i[k][j] = a_{ijk}.
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < r; ++i) {
    Mat m(f, r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m(k, j) = f.from_int(a[(i * r + j) * r + k]);
    mats.push_back(std::move(m));
  }
  Rng rng(seed ^ 0xd1c0ULL);
  Mat combo(f, r, r);
  const Vec coeff = random_vec(f, r, rng);
  for (std::size_t i = 0; i < r; ++i) combo = combo + coeff[i] * mats[i];
  std::vector<Mat> pieces = generalized_eigensplit(combo, Mat::identity(f, r), rng);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Mat> next;
    for (auto& p : pieces) {
      if (p.rows() == 1) {
        next.push_back(std::move(p));
        continue;
      }
      for (auto& q : generalized_eigensplit(mats[i], p, rng)) next.push_back(std::move(q));
    }
    pieces = std::move(next);
  }
  if (pieces.size() != r) throw std::logic_error("class matrices did not split into characters");

  const Elem order = f.from_int(static_cast<std::int64_t>(n));
  std::vector<std::pair<CharRow, std::vector<Elem>>> table;
  for (const auto& p : pieces) {
    Vec w = p.row_vec(0);
    const Elem s0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, s0);
    Elem s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s = f.add(s, f.div(f.mul(w[j], w[cd.inverse_class[j]]), f.from_int(static_cast<std::int64_t>(cd.size(j)))));
    const Elem d2 = f.div(order, s);
    std::size_t d = 1;
    while (d * d <= n && f.from_int(static_cast<std::int64_t>(d * d)) != d2) ++d;
    if (d * d > n) throw std::logic_error("no character degree fits the class data");
    std::vector<Elem> chi(r);
    for (std::size_t j = 0; j < r; ++j)
      chi[j] = f.div(f.mul(w[j], f.from_int(static_cast<std::int64_t>(d))), f.from_int(static_cast<std::int64_t>(cd.size(j))));
    Elem nu = 0;
    for (std::size_t j = 0; j < r; ++j)
      nu = f.add(nu, f.mul(f.from_int(static_cast<std::int64_t>(cd.size(j))), chi[cd.power_map(g, j, 2)]));
    const std::int64_t ind = f.lift_symmetric(f.div(nu, order));
    if (ind < -1 || ind > 1) throw std::logic_error("Frobenius-Schur sum outside {-1, 0, 1}");
    table.push_back({CharRow{d, static_cast<int>(ind), 1}, std::move(chi)});
  }
  std::sort(table.begin(), table.end(), [](const auto& x, const auto& y) {
    if (row_less(x.first, y.first)) return true;
    if (row_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  std::size_t sq = 0;
  for (auto& [row, vals] : table) {
    sq += row.degree * row.degree;
    out.rows.push_back(row);
    out.values.push_back(std::move(vals));
  }
  if (sq != n) throw std::logic_error("character degrees do not square-sum to |G|");
  return out;
}

std::vector<CharRow> ordinary_char_data(const Group& g) { return ordinary_characters(g, conjugacy_classes(g)).rows; }

std::vector<CharRow> ordinary_char_data_over(const Group& g, const ConjugacyData& cd, std::uint64_t q) {
  if (std::gcd(q, static_cast<std::uint64_t>(g.order())) != 1) throw ValidationError("field order must be coprime to |G|");
  const OrdinaryCharacters oc = ordinary_characters(g, cd);
  const std::size_t r = cd.num_classes();
  const auto qe = static_cast<std::int64_t>(q % g.exponent());
  std::vector<std::size_t> perm(r);
  for (std::size_t c = 0; c < r; ++c) perm[c] = cd.power_map(g, c, qe);
  // Row i goes to the row with values chi_i(C^q).
  std::vector<std::size_t> image(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Elem> v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = oc.values[i][perm[c]];
    const auto it = std::find(oc.values.begin(), oc.values.end(), v);
    if (it == oc.values.end()) throw std::logic_error("Galois image of a character not found");
    image[i] = static_cast<std::size_t>(it - oc.values.begin());
  }
  std::vector<CharRow> rows = oc.rows;
  for (std::size_t i = 0; i < r; ++i) {
    unsigned len = 1;
    for (std::size_t j = image[i]; j != i; j = image[j]) ++len;
    rows[i].field_orbit_size = len;
  }
  return rows;
}

Mat group_algebra_action(const Module& m, const Group& g, const Vec& x) {
  const Field& f = m.field;
  std::vector<Mat> rho;
  rho.reserve(g.order());
  rho.push_back(Mat::identity(f, m.dim));
  for (std::size_t i = 1; i < g.order(); ++i) rho.push_back(rho[g.parent(i)] * m.gens[g.parent_gen(i)]);
  Mat out(f, m.dim, m.dim);
  f.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < g.order(); ++i)
      if (x[i]) ops.axpy(out.row(0), x[i], rho[i].row(0), m.dim * m.dim);
  });
  return out;
}

std::size_t block_of(const Module& m, const Group& g, const BlockDecomposition& bd) {
  const Mat id = Mat::identity(m.field, m.dim);
  for (std::size_t b = 0; b < bd.idempotents.size(); ++b)
    if (group_algebra_action(m, g, bd.idempotents[b]) == id) return b;
  throw std::logic_error("module lies in no block");
}

ModularCharacters modular_irreducibles(const Group& g, const ConjugacyData& cd, std::uint32_t p, MeatAxe& ma,
                                       unsigned field_degree) {
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported");
  const unsigned k = field_degree ? field_degree : splitting_field_degree(g, cd, p);
  const Field f = Field::extension(p, k);
  const GroupAlgebra kg(g, f);
  const std::size_t target = cd.num_p_regular(p);

  std::vector<Module> found;
  auto absorb = [&](const Module& m) {
    for (const auto& fac : ma.composition_series(m).factors) {
      bool seen = false;
      for (const auto& x : found)
        if (x.dim == fac.dim && ma.isomorphic(x, fac)) {
          seen = true;
          break;
        }
      if (!seen) found.push_back(fac);
    }
  };
  absorb(kg.permutation_module());
  constexpr std::size_t kMaxTensorDim = 1024;
  std::set<std::pair<std::size_t, std::size_t>> done;
  bool progress = true;
  while (found.size() < target && progress) {
    progress = false;
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n && found.size() < target; ++i)
      for (std::size_t j = i; j < n && found.size() < target; ++j) {
        if (!done.insert({i, j}).second || found[i].dim * found[j].dim > kMaxTensorDim) continue;
        absorb(tensor_product(found[i], found[j]));
        progress = true;
      }
  }
  if (found.size() != target)
    throw LimitError("found " + std::to_string(found.size()) + " of " + std::to_string(target) +
                     " modular irreducibles within the tensor size limit");

  std::vector<std::pair<CharRow, Module>> rows;
  for (auto& m : found) {
    if (ma.endomorphism_degree(m) != 1) throw std::logic_error("irreducible not absolutely irreducible over splitting field");
    int ind = 0;
    if (auto form = ma.invariant_form(m)) {
      const Mat t = form->transpose();
      if (t == *form)
        ind = 1;
      else if (t == f.neg(1) * *form)
        ind = -1;
      else
        throw std::logic_error("invariant form neither symmetric nor alternating");
    }
    rows.push_back({CharRow{m.dim, ind, 1}, std::move(m)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return row_less(x.first, y.first); });
  ModularCharacters out{f, {}, {}};
  for (auto& [r, m] : rows) {
    out.rows.push_back(r);
    out.modules.push_back(std::move(m));
  }
  return out;
}

std::vector<FactorDescriptor> classical_factors_of(std::size_t n, int indicator, unsigned field_degree) {
  std::vector<FactorDescriptor> out;
  auto add = [&](const char* fam, std::size_t r) { out.push_back(FactorDescriptor::classical(fam, static_cast<unsigned>(r), field_degree)); };
  if (indicator == 1) {
    if (n == 3)
      add("B", 1);
    else if (n == 4) {
      add("A", 1);
      add("A", 1);
    } else if (n >= 5) {
      add(n % 2 ? "B" : "D", n / 2);
    }
  } else if (indicator == -1) {
    if (n % 2) throw ValidationError("symplectic character of odd degree");
    add("C", n / 2);
  } else {
    throw ValidationError("indicator 0 characters come in pairs");
  }
  return out;
}

namespace {

PredictedDecomposition predict(const std::vector<CharRow>& rows, std::uint32_t p) {
  PredictedDecomposition out;
  std::map<std::pair<std::size_t, unsigned>, std::size_t> complex_rows;
  for (const auto& r : rows) {
    if (r.indicator == 0) {
      ++complex_rows[{r.degree, r.field_orbit_size}];
      continue;
    }
    const std::size_t n = r.degree;
    for (auto& fd : classical_factors_of(n, r.indicator, r.field_orbit_size)) out.factors.push_back(std::move(fd));
    if (r.indicator == 1) {
      out.total_dim += n * (n - 1) / 2;
      if (n == 2) out.abelian_dim += 1;
    } else {
      out.total_dim += n * (n + 1) / 2;
    }
  }
  for (const auto& [key, count] : complex_rows) {
    const auto [n, s] = key;
    if (count % 2) throw ValidationError("unpaired character of indicator 0");
    for (std::size_t i = 0; i < count / 2; ++i) {
      ++out.gl_pairs;
      out.total_dim += n * n;
      if (p != 0 && n % p == 0) {
        ++out.pa_adjustments;
        out.factors.push_back(FactorDescriptor::classical("PA", static_cast<unsigned>(n - 1), s));
        out.abelian_dim += 2;
      } else {
        if (n > 1) out.factors.push_back(FactorDescriptor::classical("A", static_cast<unsigned>(n - 1), s));
        out.abelian_dim += 1;
      }
    }
  }
  return out;
}

}  // namespace

PredictedDecomposition predict_ordinary(const std::vector<CharRow>& rows) { return predict(rows, 0); }
PredictedDecomposition predict_modular(const std::vector<CharRow>& rows, std::uint32_t p) { return predict(rows, p); }

std::string indicator_symbol(int indicator) { return indicator > 0 ? "+" : indicator < 0 ? "-" : "0"; }

std::vector<CharFixture> parse_fixtures(const std::string& text) {
  std::vector<CharFixture> out;
  std::istringstream in(text);
  std::string line, tag;
  std::size_t param = 0;
  bool have_group = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("fixture line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "group") {
      if (!(ls >> tag)) fail("missing group tag");
      param = 0;
      ls >> param;
      have_group = true;
    } else if (word == "table") {
      if (!have_group) fail("table before any group line");
      std::string kind;
      ls >> kind;
      CharFixture fx{tag, param, 0, {}};
      if (kind == "brauer") {
        if (!(ls >> fx.prime) || fx.prime < 3) fail("brauer table needs an odd prime");
      } else if (kind != "ordinary") {
        fail("unknown table kind '" + kind + "'");
      }
      out.push_back(std::move(fx));
    } else {
      if (out.empty()) fail("row before any table line");
      CharRow r;
      try {
        r.degree = std::stoul(word);
      } catch (const std::exception&) {
        fail("bad degree '" + word + "'");
      }
      std::string ind;
      if (!(ls >> ind)) fail("missing indicator");
      if (ind == "+")
        r.indicator = 1;
      else if (ind == "-")
        r.indicator = -1;
      else if (ind == "0")
        r.indicator = 0;
      else
        fail("indicator must be +, - or 0");
      if (r.degree == 0) fail("degree must be positive");
      out.back().rows.push_back(r);
    }
  }
  return out;
}

std::vector<CharFixture> read_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

std::string format_fixture(const CharFixture& f) {
  std::ostringstream os;
  os << "group " << f.group_tag << " " << f.group_param << "\n";
  if (f.prime)
    os << "table brauer " << f.prime << "\n";
  else
    os << "table ordinary\n";
  for (const auto& r : f.rows) os << r.degree << " " << indicator_symbol(r.indicator) << "\n";
  return os.str();
}

}  // namespace plesken
