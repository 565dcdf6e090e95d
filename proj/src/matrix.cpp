#include "plesken/matrix.hpp"

#include <algorithm>

#include "plesken/error.hpp"

namespace plesken {

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(f, 0, cols);
  m.a_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

void Mat::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw ValidationError("row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(field_, 0, cols_);
  for (auto i : idx) m.append_row(row_span(i));
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

bool is_zero_vec(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

namespace {

void check_same(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw ValidationError("matrices over different fields");
}

// out_row = sum_k a[k] * B_k for a row vector a.
void row_times(const PrimeOps& ops, const Elem* a, std::size_t n, const Mat& b, Elem* out,
               std::vector<std::uint64_t>& acc) {
  const std::size_t m = b.cols();
  acc.assign(m, 0);
  const std::uint64_t p = ops.p;
  const std::uint64_t bound = (p - 1) * (p - 1);
  const std::uint64_t limit = bound ? (~std::uint64_t{0} - p) / bound : ~std::uint64_t{0};
  std::uint64_t pending = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t c = a[k];
    if (!c) continue;
    const Elem* br = b.row(k);
    for (std::size_t j = 0; j < m; ++j) acc[j] += c * br[j];
    if (++pending >= limit) {
      for (auto& x : acc) x %= p;
      pending = 0;
    }
  }
  for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<Elem>(acc[j] % p);
}

void row_times(const ZechOps& ops, const Elem* a, std::size_t n, const Mat& b, Elem* out,
               std::vector<std::uint64_t>&) {
  std::fill(out, out + b.cols(), 0);
  for (std::size_t k = 0; k < n; ++k)
    if (a[k]) ops.axpy(out, a[k], b.row(k), b.cols());
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
  Mat c(a.field(), a.rows(), b.cols());
  a.field().visit([&](const auto& ops) {
    std::vector<std::uint64_t> acc;
    for (std::size_t i = 0; i < a.rows(); ++i) row_times(ops, a.row(i), a.cols(), b, c.row(i), acc);
  });
  return c;
}

Vec vec_mul(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw ValidationError("vector-matrix dimension mismatch");
  Vec out(m.cols());
  m.field().visit([&](const auto& ops) {
    std::vector<std::uint64_t> acc;
    row_times(ops, v.data(), v.size(), m, out.data(), acc);
  });
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix sum dimension mismatch");
  Mat c = a;
  a.field().visit([&](const auto& ops) {
    for (std::size_t i = 0; i < a.rows(); ++i) ops.axpy(c.row(i), 1, b.row(i), a.cols());
  });
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix difference dimension mismatch");
  Mat c = a;
  a.field().visit([&](const auto& ops) {
    const Elem m1 = ops.neg(1);
    for (std::size_t i = 0; i < a.rows(); ++i) ops.axpy(c.row(i), m1, b.row(i), a.cols());
  });
  return c;
}

Mat operator*(Elem c, const Mat& a) {
  Mat r = a;
  a.field().visit([&](const auto& ops) {
    for (std::size_t i = 0; i < a.rows(); ++i) ops.scale(r.row(i), c, a.cols());
  });
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.cols() != b.cols()) throw ValidationError("vstack column mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < b.rows(); ++i) c.append_row(b.row_span(i));
  return c;
}

namespace {

template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
    ops.scale(m.row(r) + c, ops.inv(m(r, c)), cols - c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      ops.axpy(m.row(i) + c, ops.neg(m(i, c)), m.row(r) + c, cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Mat& m) {
  Mat r = m;
  auto piv = m.field().visit([&](const auto& ops) { return rref_in_place(ops, r); });
  std::vector<std::size_t> keep(piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i) keep[i] = i;
  return {r.select_rows(keep), std::move(piv)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel(const Mat& m) {
  const auto e = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Mat k(f, 0, m.cols());
  Vec x(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = f.neg(e.rows(r, free));
    k.append_row(x);
  }
  return k;
}

Mat left_kernel(const Mat& m) { return kernel(m.transpose()); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw ValidationError("solve dimension mismatch");
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + a.cols(), aug.row(i));
    aug(i, a.cols()) = b[i];
  }
  const auto e = rref(aug);
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rows(r, a.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i), m.row(i) + n, aug.row(i));
    aug(i, n + i) = 1;
  }
  const auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) std::copy(e.rows.row(i) + n, e.rows.row(i) + 2 * n, inv.row(i));
  return inv;
}

Poly charpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Mat h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap_ranges(h.row(piv), h.row(piv) + n, h.row(c + 1));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    const Elem inv = f.inv(h(c + 1, c));
    for (std::size_t j = c + 2; j < n; ++j) {
      if (h(j, c) == 0) continue;
      const Elem u = f.mul(h(j, c), inv);
      f.visit([&](const auto& ops) { ops.axpy(h.row(j), ops.neg(u), h.row(c + 1), n); });
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) = f.add(h(i, c + 1), f.mul(u, h(i, j)));
    }
  }
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, 1));
  const Poly x = Poly::x(f);
  for (std::size_t mIdx = 1; mIdx <= n; ++mIdx) {
    const std::size_t k = mIdx - 1;
    Poly cur = (x - Poly::constant(f, h(k, k))) * p[k];
    Elem t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      if (t == 0) break;
      const Elem c = f.mul(t, h(i, k));
      if (c) cur = cur - c * p[i];
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

Mat eval_poly(const Poly& f, const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Mat acc(m.field(), n, n);
  for (int d = f.degree(); d >= 0; --d) {
    acc = acc * m;
    const Elem c = f[static_cast<std::size_t>(d)];
    if (c)
      for (std::size_t i = 0; i < n; ++i) acc(i, i) = m.field().add(acc(i, i), c);
  }
  return acc;
}

bool EchelonBasis::add(const Vec& v) {
  if (v.size() != n_) throw ValidationError("vector length mismatch");
  Vec w = v;
  Vec combo(input_.size() + 1, 0);
  combo.back() = 1;
  field_.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < ech_.size(); ++i) {
      const Elem c = w[pivots_[i]];
      if (!c) continue;
      const Elem mc = ops.neg(c);
      ops.axpy(w.data(), mc, ech_[i].data(), n_);
      ops.axpy(combo.data(), mc, combo_[i].data(), combo_[i].size());
    }
  });
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Elem inv = field_.inv(w[piv]);
  field_.visit([&](const auto& ops) {
    ops.scale(w.data(), inv, n_);
    ops.scale(combo.data(), inv, combo.size());
  });
  ech_.push_back(std::move(w));
  combo_.push_back(std::move(combo));
  pivots_.push_back(piv);
  input_.push_back(v);
  return true;
}

void EchelonBasis::reduce(Vec& v) const {
  field_.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < ech_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c) ops.axpy(v.data(), ops.neg(c), ech_[i].data(), n_);
    }
  });
}

bool EchelonBasis::contains(const Vec& v) const {
  Vec w = v;
  reduce(w);
  return is_zero_vec(w);
}

std::optional<Vec> EchelonBasis::coords(const Vec& v) const {
  if (v.size() != n_) throw ValidationError("vector length mismatch");
  Vec w = v;
  Vec out(input_.size(), 0);
  field_.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < ech_.size(); ++i) {
      const Elem c = w[pivots_[i]];
      if (!c) continue;
      ops.axpy(w.data(), ops.neg(c), ech_[i].data(), n_);
      ops.axpy(out.data(), c, combo_[i].data(), combo_[i].size());
    }
  });
  if (!is_zero_vec(w)) return std::nullopt;
  return out;
}

namespace {

// Minimal polynomial of v under w -> w M.
Poly local_minpoly(const Mat& m, const Vec& v) {
  const Field& f = m.field();
  EchelonBasis eb(f, m.cols());
  Vec w = v;
  while (eb.add(w)) w = vec_mul(w, m);
  const auto c = *eb.coords(w);
  std::vector<Elem> coeffs(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = f.neg(c[i]);
  coeffs.back() = 1;
  return Poly(f, std::move(coeffs));
}

}  // namespace

Poly minpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("minimal polynomial of a non-square matrix");
  const Field& f = m.field();
  Poly acc = Poly::constant(f, 1);
  Vec e(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    // Skip vectors already annihilated by the current polynomial.
    if (is_zero_vec(vec_mul(e, eval_poly(acc, m)))) continue;
    acc = lcm(acc, local_minpoly(m, e));
  }
  return acc;
}

Mat restrict_action(const Mat& m, const Mat& basis) {
  EchelonBasis eb(m.field(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!eb.add(basis.row_vec(i))) throw ValidationError("basis rows are dependent");
  Mat r(m.field(), 0, basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    auto c = eb.coords(vec_mul(basis.row_vec(i), m));
    if (!c) throw ValidationError("subspace is not invariant");
    r.append_row(*c);
  }
  return r;
}

std::vector<Mat> generalized_eigensplit(const Mat& m, const Mat& subspace, Rng& rng) {
  if (m.rows() != m.cols() || subspace.cols() != m.rows())
    throw ValidationError("eigensplit dimension mismatch");
  std::vector<Mat> out;
  if (subspace.rows() == 0) return out;
  const Mat r = restrict_action(m, subspace);
  for (const auto& [g, e] : factor(charpoly(r), rng)) {
    Mat ge = eval_poly(g, r);
    Mat pw = ge;
    for (unsigned i = 1; i < e; ++i) pw = pw * ge;
    out.push_back(left_kernel(pw) * subspace);
  }
  return out;
}

}  // namespace plesken
