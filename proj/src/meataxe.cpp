#include "plesken/meataxe.hpp"

#include <algorithm>
#include <stdexcept>

#include "plesken/error.hpp"

namespace plesken {

Module dual_module(const Module& m) {
  std::vector<Mat> g;
  for (const auto& a : m.gens) {
    auto inv = inverse(a);
    if (!inv) throw ValidationError("dual module needs invertible generators");
    g.push_back(inv->transpose());
  }
  return Module(m.field, m.dim, std::move(g));
}

Module transposed_module(const Module& m) {
  std::vector<Mat> g;
  for (const auto& a : m.gens) g.push_back(a.transpose());
  return Module(m.field, m.dim, std::move(g));
}

Module tensor_product(const Module& a, const Module& b) {
  if (a.gens.size() != b.gens.size()) throw ValidationError("tensor product needs matching generators");
  std::vector<Mat> g;
  const std::size_t n = a.dim * b.dim;
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    const Mat& x = a.gens[k];
    const Mat& y = b.gens[k];
    Mat t(a.field, n, n);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        const Elem c = x(i, j);
        if (!c) continue;
        for (std::size_t r = 0; r < b.dim; ++r)
          for (std::size_t s = 0; s < b.dim; ++s) t(i * b.dim + r, j * b.dim + s) = a.field.mul(c, y(r, s));
      }
    g.push_back(std::move(t));
  }
  return Module(a.field, n, std::move(g));
}

Mat spin(const Module& m, const Mat& seeds) {
  EchelonBasis eb(m.field, m.dim);
  for (std::size_t i = 0; i < seeds.rows(); ++i) eb.add(seeds.row_vec(i));
  for (std::size_t i = 0; i < eb.size() && eb.size() < m.dim; ++i) {
    const Vec b = eb.vectors()[i];
    for (const auto& a : m.gens) {
      eb.add(vec_mul(b, a));
      if (eb.size() == m.dim) break;
    }
  }
  return eb.basis();
}

Module restrict_module(const Module& m, const Mat& basis) {
  std::vector<Mat> g;
  for (const auto& a : m.gens) g.push_back(restrict_action(a, basis));
  return Module(m.field, basis.rows(), std::move(g));
}

Module quotient_module(const Module& m, const Mat& basis, Mat* reps) {
  const auto e = rref(basis);
  std::vector<bool> is_pivot(m.dim, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const Field& f = m.field;
  auto project = [&](Vec v) {
    f.visit([&](const auto& ops) {
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Elem c = v[e.pivots[r]];
        if (c) ops.axpy(v.data(), ops.neg(c), e.rows.row(r), m.dim);
      }
    });
    Vec out(free.size());
    for (std::size_t j = 0; j < free.size(); ++j) out[j] = v[free[j]];
    return out;
  };
  std::vector<Mat> g;
  for (const auto& a : m.gens) {
    Mat q(f, 0, free.size());
    for (auto c : free) q.append_row(project(a.row_vec(c)));
    g.push_back(std::move(q));
  }
  if (reps) {
    *reps = Mat(f, free.size(), m.dim);
    for (std::size_t j = 0; j < free.size(); ++j) (*reps)(j, free[j]) = 1;
  }
  return Module(f, free.size(), std::move(g));
}

Module section(const Module& m, const Mat& lower, const Mat& upper, Mat* reps) {
  const Module up = restrict_module(m, upper);
  EchelonBasis eb(m.field, m.dim);
  for (std::size_t i = 0; i < upper.rows(); ++i) eb.add(upper.row_vec(i));
  Mat low(m.field, 0, upper.rows());
  for (std::size_t i = 0; i < lower.rows(); ++i) {
    auto c = eb.coords(lower.row_vec(i));
    if (!c) throw ValidationError("section: lower subspace not contained in upper");
    low.append_row(*c);
  }
  Mat r(m.field);
  Module q = quotient_module(up, low, &r);
  if (reps) *reps = r * upper;
  return q;
}

Mat AlgebraWord::evaluate(const Module& m) const {
  std::vector<Mat> pool = m.gens;
  for (const auto& [i, j] : products) pool.push_back(pool[i] * pool[j]);
  Mat theta(m.field, m.dim, m.dim);
  for (std::size_t t = 0; t < coeffs.size() && t < pool.size(); ++t)
    if (coeffs[t]) theta = theta + coeffs[t] * pool[t];
  return theta;
}

AlgebraWord MeatAxe::random_word(const Module& m, int attempt) {
  AlgebraWord w;
  const std::size_t k = m.gens.size();
  if (k == 0) return w;
  const std::size_t nprod = std::min<std::size_t>(2 + static_cast<std::size_t>(attempt) / 8, 8);
  std::size_t pool = k;
  for (std::size_t s = 0; s < nprod; ++s) {
    w.products.emplace_back(rng_() % pool, rng_() % pool);
    ++pool;
  }
  w.coeffs.resize(pool);
  for (auto& c : w.coeffs) c = m.field.random(rng_);
  return w;
}

namespace {

unsigned factor_degree_bound(int attempt) { return attempt < 10 ? 2u : attempt < 40 ? 4u : 8u; }

}  // namespace

std::optional<Mat> MeatAxe::proper_submodule(const Module& m) {
  if (m.dim <= 1) return std::nullopt;
  for (int attempt = 0; attempt < max_attempts_; ++attempt) {
    const AlgebraWord w = random_word(m, attempt);
    const Mat theta = w.evaluate(m);
    for (const auto& [f, e] : factor(charpoly(theta), rng_, factor_degree_bound(attempt))) {
      const Mat n = eval_poly(f, theta);
      const Mat k = left_kernel(n);
      Mat seed(m.field, 0, m.dim);
      seed.append_row(k.row_span(0));
      Mat u = spin(m, seed);
      if (u.rows() < m.dim) return u;
      if (k.rows() != static_cast<std::size_t>(f.degree())) continue;
      const Mat kt = kernel(n);
      Mat seed_t(m.field, 0, m.dim);
      seed_t.append_row(kt.row_span(0));
      const Mat ut = spin(transposed_module(m), seed_t);
      if (ut.rows() < m.dim) return kernel(ut);
      return std::nullopt;
    }
  }
  throw std::runtime_error("MeatAxe: no conclusive splitting element found");
}

Mat MeatAxe::minimal_submodule(const Module& m, const Mat& within) {
  if (within.rows() == 0) throw ValidationError("minimal_submodule of the zero subspace");
  Mat cur = within;
  Module sub = restrict_module(m, cur);
  for (;;) {
    auto s = proper_submodule(sub);
    if (!s) return cur;
    cur = *s * cur;
    sub = restrict_module(sub, *s);
  }
}

void MeatAxe::series_rec(const Module& m, std::vector<Mat>& chain, int depth) {
  if (depth > 10000) throw std::logic_error("composition series recursion too deep");
  auto s = proper_submodule(m);
  if (!s) {
    chain.push_back(Mat::identity(m.field, m.dim));
    return;
  }
  const Mat& u = *s;
  std::vector<Mat> lower;
  series_rec(restrict_module(m, u), lower, depth + 1);
  for (auto& c : lower) chain.push_back(c * u);
  Mat reps(m.field);
  const Module q = quotient_module(m, u, &reps);
  std::vector<Mat> upper;
  series_rec(q, upper, depth + 1);
  for (auto& c : upper) chain.push_back(vstack(u, c * reps));
}

CompositionSeries MeatAxe::composition_series(const Module& m) {
  CompositionSeries cs;
  cs.chain.push_back(Mat(m.field, 0, m.dim));
  if (m.dim == 0) return cs;
  std::vector<Mat> chain;
  series_rec(m, chain, 0);
  for (auto& c : chain) cs.chain.push_back(std::move(c));
  for (std::size_t i = 1; i < cs.chain.size(); ++i) {
    Mat reps(m.field);
    cs.factors.push_back(section(m, cs.chain[i - 1], cs.chain[i], &reps));
    cs.reps.push_back(std::move(reps));
  }
  return cs;
}

MeatAxe::GoodPair MeatAxe::good_pair(const Module& m) {
  for (int attempt = 0; attempt < max_attempts_; ++attempt) {
    AlgebraWord w = random_word(m, attempt);
    const Mat theta = w.evaluate(m);
    for (const auto& [f, e] : factor(charpoly(theta), rng_, factor_degree_bound(attempt))) {
      Mat k = left_kernel(eval_poly(f, theta));
      if (k.rows() == static_cast<std::size_t>(f.degree())) return {std::move(w), f, std::move(k)};
    }
  }
  throw std::runtime_error("MeatAxe: no good algebra element found");
}

Mat cyclic_homomorphisms(const Module& a, const Vec& v, const Module& b, const Mat& cand,
                         std::vector<Mat>* maps) {
  const Field& f = a.field;
  const std::size_t n = a.dim, nb = b.dim, k = a.gens.size();
  // Standard basis of a from v, remembering how each vector was reached.
  EchelonBasis eb(f, n);
  std::vector<std::pair<std::size_t, std::size_t>> word;
  eb.add(v);
  word.emplace_back(0, 0);
  for (std::size_t i = 0; i < eb.size() && eb.size() < n; ++i) {
    const Vec bi = eb.vectors()[i];
    for (std::size_t g = 0; g < k; ++g)
      if (eb.add(vec_mul(bi, a.gens[g]))) word.emplace_back(i, g);
  }
  if (eb.size() != n) throw std::logic_error("cyclic_homomorphisms: v does not generate the module");
  const Mat bm = eb.basis();
  const Mat binv = *inverse(bm);
  std::vector<Mat> alpha;
  for (const auto& g : a.gens) alpha.push_back(bm * g * binv);

  std::vector<Mat> images;  // per candidate: images of the standard basis
  Mat rel(f, 0, k * n * nb);
  for (std::size_t t = 0; t < cand.rows(); ++t) {
    Mat c(f, n, nb);
    std::copy(cand.row(t), cand.row(t) + nb, c.row(0));
    for (std::size_t i = 1; i < n; ++i) {
      const Vec img = vec_mul(c.row_vec(word[i].first), b.gens[word[i].second]);
      std::copy(img.begin(), img.end(), c.row(i));
    }
    Vec flat;
    flat.reserve(k * n * nb);
    for (std::size_t g = 0; g < k; ++g) {
      const Mat d = c * b.gens[g] - alpha[g] * c;
      for (std::size_t i = 0; i < n; ++i) flat.insert(flat.end(), d.row(i), d.row(i) + nb);
    }
    rel.append_row(flat);
    images.push_back(std::move(c));
  }
  Mat sol = left_kernel(rel);
  if (maps) {
    maps->clear();
    for (std::size_t s = 0; s < sol.rows(); ++s) {
      Mat phi(f, n, nb);
      for (std::size_t t = 0; t < cand.rows(); ++t)
        if (sol(s, t)) phi = phi + sol(s, t) * images[t];
      maps->push_back(binv * phi);
    }
  }
  return sol;
}

unsigned MeatAxe::endomorphism_degree(const Module& m) {
  if (m.dim == 0) return 0;
  if (m.dim == 1) return 1;
  const GoodPair gp = good_pair(m);
  return static_cast<unsigned>(cyclic_homomorphisms(m, gp.kernel.row_vec(0), m, gp.kernel).rows());
}

std::vector<Mat> MeatAxe::endomorphism_basis(const Module& m) {
  if (m.dim == 0) return {};
  if (m.dim == 1) return {Mat::identity(m.field, 1)};
  const GoodPair gp = good_pair(m);
  std::vector<Mat> maps;
  cyclic_homomorphisms(m, gp.kernel.row_vec(0), m, gp.kernel, &maps);
  return maps;
}

bool MeatAxe::isomorphic(const Module& a, const Module& b) {
  if (a.dim != b.dim || a.field != b.field || a.gens.size() != b.gens.size()) return false;
  if (a.dim == 0) return true;
  if (a.dim == 1) {
    for (std::size_t g = 0; g < a.gens.size(); ++g)
      if (a.gens[g](0, 0) != b.gens[g](0, 0)) return false;
    return true;
  }
  const GoodPair gp = good_pair(a);
  const Mat kb = left_kernel(eval_poly(gp.f, gp.word.evaluate(b)));
  if (kb.rows() != gp.kernel.rows()) return false;
  return cyclic_homomorphisms(a, gp.kernel.row_vec(0), b, kb).rows() > 0;
}

std::optional<Mat> MeatAxe::invariant_form(const Module& m) {
  if (m.dim == 0) return std::nullopt;
  const Module d = dual_module(m);
  if (m.dim == 1) {
    for (std::size_t g = 0; g < m.gens.size(); ++g)
      if (m.gens[g](0, 0) != d.gens[g](0, 0)) return std::nullopt;
    return Mat::identity(m.field, 1);
  }
  const GoodPair gp = good_pair(m);
  const Mat kd = left_kernel(eval_poly(gp.f, gp.word.evaluate(d)));
  if (kd.rows() != gp.kernel.rows()) return std::nullopt;
  std::vector<Mat> maps;
  cyclic_homomorphisms(m, gp.kernel.row_vec(0), d, kd, &maps);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

}  // namespace plesken
