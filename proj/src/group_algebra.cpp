#include "plesken/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "plesken/error.hpp"

namespace plesken {

void GroupAlgebra::check(const Vec& x) const {
  if (x.size() != dim()) throw ValidationError("group algebra element of wrong length");
}

Vec GroupAlgebra::basis(std::size_t g) const {
  Vec v = zero();
  v[g] = 1;
  return v;
}

Vec GroupAlgebra::mul(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  Vec out = zero();
  std::vector<std::size_t> ny;
  for (std::size_t b = 0; b < y.size(); ++b)
    if (y[b]) ny.push_back(b);
  f_.visit([&](const auto& ops) {
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (!x[a]) continue;
      for (auto b : ny) {
        const std::size_t ab = g_->mul(a, b);
        out[ab] = ops.add(out[ab], ops.mul(x[a], y[b]));
      }
    }
  });
  return out;
}

Vec GroupAlgebra::add(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  Vec out = x;
  f_.visit([&](const auto& ops) { ops.axpy(out.data(), 1, y.data(), out.size()); });
  return out;
}

Vec GroupAlgebra::sub(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  Vec out = x;
  f_.visit([&](const auto& ops) { ops.axpy(out.data(), ops.neg(1), y.data(), out.size()); });
  return out;
}

Vec GroupAlgebra::scale(Elem c, const Vec& x) const {
  Vec out = x;
  f_.visit([&](const auto& ops) { ops.scale(out.data(), c, out.size()); });
  return out;
}

Vec GroupAlgebra::bracket(const Vec& x, const Vec& y) const { return sub(mul(x, y), mul(y, x)); }

Vec GroupAlgebra::star(const Vec& x) const {
  check(x);
  Vec out = zero();
  for (std::size_t a = 0; a < x.size(); ++a) out[g_->inverse(a)] = x[a];
  return out;
}

Vec GroupAlgebra::times_element(const Vec& x, std::size_t s) const {
  check(x);
  Vec out = zero();
  for (std::size_t a = 0; a < x.size(); ++a) out[g_->mul(a, s)] = x[a];
  return out;
}

Module GroupAlgebra::right_regular_module() const {
  std::vector<Mat> gens;
  for (auto s : g_->generators()) {
    Mat m(f_, dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) m(a, g_->mul(a, s)) = 1;
    gens.push_back(std::move(m));
  }
  return Module(f_, dim(), std::move(gens));
}

Module GroupAlgebra::permutation_module() const {
  std::vector<Mat> gens;
  const std::size_t n = g_->degree();
  for (const auto& p : g_->generator_perms()) {
    Mat m(f_, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, p[i]) = 1;
    gens.push_back(std::move(m));
  }
  return Module(f_, n, std::move(gens));
}

std::vector<Vec> center_basis(const GroupAlgebra& kg, const ConjugacyData& cd) {
  std::vector<Vec> out;
  for (const auto& cls : cd.classes) {
    Vec v = kg.zero();
    for (auto x : cls) v[x] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::uint32_t> class_constants(const Group& g, const ConjugacyData& cd) {
  const std::size_t r = cd.num_classes();
  std::vector<std::uint32_t> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = cd.rep(k);
    for (std::size_t i = 0; i < r; ++i)
      for (auto x : cd.classes[i]) {
        const std::size_t j = cd.class_of[g.mul(g.inverse(x), z)];
        ++a[(i * r + j) * r + k];
      }
  }
  return a;
}

unsigned splitting_field_degree(const Group& g, const ConjugacyData& cd, std::uint32_t p) {
  const auto reg = cd.p_regular(p);
  const std::size_t e = g.exponent();
  // p-power maps only depend on p^k mod exp(G).
  std::uint64_t pk = p % e;
  for (unsigned k = 1; k <= 64; ++k) {
    bool fixed = true;
    for (std::size_t c = 0; c < cd.num_classes() && fixed; ++c)
      if (reg[c] && cd.power_map(g, c, static_cast<std::int64_t>(pk)) != c) fixed = false;
    if (fixed) return k;
    pk = pk * p % e;
  }
  throw std::logic_error("splitting field degree not found");
}

namespace {

// Commutative algebra Z(k[G]) in the class-sum basis.
struct Center {
  Field f;
  std::size_t r;
  std::vector<Elem> a;  // structure constants reduced into f

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(r, 0);
    f.visit([&](const auto& ops) {
      for (std::size_t i = 0; i < r; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < r; ++j) {
          if (!y[j]) continue;
          ops.axpy(out.data(), ops.mul(x[i], y[j]), a.data() + (i * r + j) * r, r);
        }
      }
    });
    return out;
  }
  Vec pow(Vec x, std::uint64_t e) const {
    Vec acc(r, 0);
    acc[0] = 1;  // the identity class comes first
    while (e) {
      if (e & 1) acc = mul(acc, x);
      e >>= 1;
      if (e) x = mul(x, x);
    }
    return acc;
  }
  Mat mult_matrix(const Vec& x) const {
    Mat m(f, 0, r);
    for (std::size_t c = 0; c < r; ++c) {
      Vec z(r, 0);
      z[c] = 1;
      m.append_row(mul(z, x));
    }
    return m;
  }
};

// Coordinates of right multiplication by s on an invariant subspace.
Mat element_action(const GroupAlgebra& kg, const EchelonBasis& eb, std::size_t s) {
  Mat m(kg.field(), 0, eb.size());
  for (const auto& b : eb.vectors()) {
    auto c = eb.coords(kg.times_element(b, s));
    if (!c) throw std::logic_error("ideal not invariant under right multiplication");
    m.append_row(*c);
  }
  return m;
}

EchelonBasis ideal_echelon(const GroupAlgebra& kg, const Vec& x) {
  EchelonBasis eb(kg.field(), kg.dim());
  for (std::size_t g = 0; g < kg.dim(); ++g) eb.add(kg.times_element(x, g));
  return eb;
}

}  // namespace

Mat right_ideal_basis(const GroupAlgebra& kg, const Vec& x) { return ideal_echelon(kg, x).basis(); }

std::vector<Mat> block_algebra_matrices(const GroupAlgebra& kg, const Vec& e) {
  const EchelonBasis eb = ideal_echelon(kg, e);
  std::vector<Mat> out;
  for (const auto& bt : eb.vectors()) {
    Mat m(kg.field(), 0, eb.size());
    for (const auto& bs : eb.vectors()) {
      auto c = eb.coords(kg.mul(bs, bt));
      if (!c) throw ValidationError("e * k[G] is not closed under multiplication");
      m.append_row(*c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Mat radical(const std::vector<Mat>& algebra, MeatAxe& ma) {
  if (algebra.empty()) throw ValidationError("radical of an empty algebra basis");
  const Field& f = algebra[0].field();
  const Module m(f, algebra[0].rows(), algebra);
  const auto cs = ma.composition_series(m);
  std::size_t width = 0;
  for (const auto& fac : cs.factors) width += fac.dim * fac.dim;
  Mat t(f, 0, width);
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    Vec row;
    row.reserve(width);
    for (const auto& fac : cs.factors)
      for (std::size_t r = 0; r < fac.dim; ++r) row.insert(row.end(), fac.gens[i].row(r), fac.gens[i].row(r) + fac.dim);
    t.append_row(row);
  }
  return left_kernel(t);
}

bool block_is_semisimple(const GroupAlgebra& kg, const Vec& e, MeatAxe& ma) {
  const EchelonBasis eb = ideal_echelon(kg, e);
  const std::size_t d = eb.size();
  std::vector<Mat> gens;
  for (auto s : kg.group().generators()) gens.push_back(element_action(kg, eb, s));
  const Module m(kg.field(), d, std::move(gens));
  const Mat s = ma.minimal_submodule(m, Mat::identity(kg.field(), d));
  const unsigned es = ma.endomorphism_degree(restrict_module(m, s));
  const std::size_t n = s.rows();
  return (n * n) % es == 0 && n * n / es == d;
}

BlockDecomposition block_idempotents(const GroupAlgebra& kg, const ConjugacyData& cd, MeatAxe& ma) {
  const Field& f = kg.field();
  const std::size_t r = cd.num_classes();
  Center z{f, r, {}};
  for (auto c : class_constants(kg.group(), cd)) z.a.push_back(f.from_int(c));

  // {x : x^q = x} is a split semisimple subalgebra spanned by the block idempotents.
  Mat frob(f, 0, r);
  for (std::size_t c = 0; c < r; ++c) {
    Vec u(r, 0);
    u[c] = 1;
    frob.append_row(z.pow(u, f.order()));
  }
  const Mat fixed = left_kernel(frob - Mat::identity(f, r));

  std::vector<Mat> pieces{fixed};
  for (std::size_t i = 0; i < fixed.rows(); ++i) {
    const Mat mk = z.mult_matrix(fixed.row_vec(i));
    std::vector<Mat> next;
    for (const auto& p : pieces) {
      if (p.rows() == 1) {
        next.push_back(p);
        continue;
      }
      for (auto& q : generalized_eigensplit(mk, p, ma.rng())) next.push_back(std::move(q));
    }
    pieces = std::move(next);
  }

  struct Item {
    Vec e;
    std::size_t dim;
    bool principal;
  };
  std::vector<Item> items;
  for (const auto& p : pieces) {
    if (p.rows() != 1) throw std::logic_error("center did not split into idempotents");
    const Vec v = p.row_vec(0);
    const Vec v2 = z.mul(v, v);
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    const Elem scale = f.div(v[i], v2[i]);
    Vec e(kg.dim(), 0);
    for (std::size_t g = 0; g < kg.dim(); ++g) e[g] = f.mul(scale, v[cd.class_of[g]]);
    Elem aug = 0;
    for (auto c : e) aug = f.add(aug, c);
    const std::size_t d = ideal_echelon(kg, e).size();
    items.push_back({std::move(e), d, aug != 0});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.principal != b.principal) return a.principal;
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.e < b.e;
  });

  BlockDecomposition bd;
  for (auto& it : items) {
    bd.dims.push_back(it.dim);
    bd.idempotents.push_back(std::move(it.e));
  }
  for (const auto& e : bd.idempotents) {
    const Vec es = kg.star(e);
    const auto pos = std::find(bd.idempotents.begin(), bd.idempotents.end(), es);
    if (pos == bd.idempotents.end()) throw std::logic_error("star of a block idempotent is not a block idempotent");
    bd.dual.push_back(static_cast<std::size_t>(pos - bd.idempotents.begin()));
    bd.defect_zero.push_back(block_is_semisimple(kg, e, ma));
  }
  return bd;
}

}  // namespace plesken
