#include "plesken/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plesken/error.hpp"
#include "plesken/liestruct.hpp"

namespace plesken {

FactorDescriptor FactorDescriptor::abelian(std::size_t n) {
  FactorDescriptor f;
  f.kind = Kind::Abelian;
  f.dim = n;
  return f;
}

FactorDescriptor FactorDescriptor::classical(std::string family, unsigned rank, unsigned field_degree) {
  FactorDescriptor f;
  f.kind = Kind::Classical;
  f.dim = classical_dim(family, rank);
  f.family = std::move(family);
  f.rank = rank;
  f.field_degree = field_degree;
  return f;
}

FactorDescriptor FactorDescriptor::unidentified(std::size_t n) {
  FactorDescriptor f;
  f.kind = Kind::Unidentified;
  f.dim = n;
  return f;
}

std::string to_string(const FactorDescriptor& f) {
  std::ostringstream os;
  switch (f.kind) {
    case FactorDescriptor::Kind::Abelian:
      os << "Ab(" << f.dim << ")";
      break;
    case FactorDescriptor::Kind::Classical:
      os << f.family << f.rank;
      for (const auto& [fam, r] : f.alternatives) os << "|" << fam << r;
      break;
    case FactorDescriptor::Kind::Unidentified:
      os << "?(" << f.dim << ")";
      break;
  }
  if (f.field_degree > 1) os << "^(" << f.field_degree << ")";
  return os.str();
}

std::size_t classical_dim(const std::string& family, unsigned rank) {
  const std::size_t n = rank;
  if (family == "A") return (n + 1) * (n + 1) - 1;
  if (family == "PA") return (n + 1) * (n + 1) - 2;
  if (family == "B" || family == "C") return 2 * n * n + n;
  if (family == "D") return 2 * n * n - n;
  throw ValidationError("unknown classical family '" + family + "'");
}

std::pair<std::string, unsigned> canonical_type(const std::string& family, unsigned rank) {
  if (rank == 1 && (family == "B" || family == "C")) return {"A", 1};
  if (rank == 2 && family == "C") return {"B", 2};
  if (rank == 3 && family == "D") return {"A", 3};
  return {family, rank};
}

namespace {

Vec unit_matrix(std::size_t n, std::size_t i, std::size_t j, Elem v = 1) {
  Vec m(n * n, 0);
  m[i * n + j] = v;
  return m;
}

Vec matmul(const Field& f, const Vec& a, const Vec& b, std::size_t n) {
  Vec c(n * n, 0);
  f.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i * n + k]) ops.axpy(c.data() + i * n, a[i * n + k], b.data() + k * n, n);
  });
  return c;
}

std::size_t matrix_size(const std::string& family, unsigned rank) {
  if (family == "A" || family == "PA") return rank + 1;
  if (family == "B") return 2 * rank + 1;
  if (family == "C" || family == "D") return 2 * rank;
  throw ValidationError("unknown classical family '" + family + "'");
}

LieAlg algebra_from_matrices(const Field& f, const std::vector<Vec>& basis, std::size_t n) {
  const std::size_t d = basis.size();
  EchelonBasis eb(f, n * n);
  for (const auto& b : basis)
    if (!eb.add(b)) throw std::logic_error("dependent matrix basis");
  LieAlg l(f, d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = s + 1; t < d; ++t) {
      Vec br = matmul(f, basis[s], basis[t], n);
      const Vec ts = matmul(f, basis[t], basis[s], n);
      for (std::size_t i = 0; i < br.size(); ++i) br[i] = f.sub(br[i], ts[i]);
      const auto co = eb.coords(br);
      if (!co) throw std::logic_error("matrix algebra not closed under the bracket");
      for (std::size_t k = 0; k < d; ++k) {
        l.c(s, t, k) = (*co)[k];
        l.c(t, s, k) = f.neg((*co)[k]);
      }
    }
  return l;
}

}  // namespace

std::vector<Vec> classical_matrix_basis(const std::string& family, unsigned rank, const Field& f) {
  if (rank == 0) throw ValidationError("classical rank must be positive");
  if (family == "PA") throw UnsupportedError("PA is a quotient, not a matrix algebra");
  const std::size_t n = matrix_size(family, rank);
  std::vector<Vec> out;
  if (family == "A") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) out.push_back(unit_matrix(n, i, j));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Vec h = unit_matrix(n, k, k);
      h[(k + 1) * n + k + 1] = f.neg(1);
      out.push_back(std::move(h));
    }
    return out;
  }
  // Form matrix J; the algebra is {X : X^T J + J X = 0}.
  Vec j(n * n, 0);
  if (family == "C") {
    for (std::size_t i = 0; i < rank; ++i) {
      j[i * n + rank + i] = 1;
      j[(rank + i) * n + i] = f.neg(1);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) j[i * n + n - 1 - i] = 1;
  }
  Mat t(f, 0, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec x = unit_matrix(n, a, b);
      const Vec xt = unit_matrix(n, b, a);
      Vec img = matmul(f, xt, j, n);
      const Vec jx = matmul(f, j, x, n);
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = f.add(img[i], jx[i]);
      t.append_row(img);
    }
  const Mat k = left_kernel(t);
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(k.row_vec(i));
  return out;
}

LieAlg quotient_algebra(const LieAlg& l, const Mat& ideal) {
  Mat reps(l.field());
  const Module q = quotient_module(l.adjoint_module(), ideal, &reps);
  return factor_algebra(l, reps, q.gens);
}

LieAlg reference_classical(const std::string& family, unsigned rank, const Field& f) {
  const std::uint32_t p = f.characteristic();
  if (family == "PA") {
    if ((rank + 1) % p != 0) throw UnsupportedError("PA_n needs p | n + 1");
    const std::size_t n = rank + 1;
    const auto basis = classical_matrix_basis("A", rank, f);
    const LieAlg sl = algebra_from_matrices(f, basis, n);
    // The identity is traceless here and spans the center.
    EchelonBasis eb(f, n * n);
    for (const auto& b : basis) eb.add(b);
    Vec id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    Mat center(f, 0, basis.size());
    center.append_row(*eb.coords(id));
    return quotient_algebra(sl, center);
  }
  if (family == "A" && (rank + 1) % p == 0) throw UnsupportedError("sl_n with p | n is not simple; use PA");
  return algebra_from_matrices(f, classical_matrix_basis(family, rank, f), matrix_size(family, rank));
}

bool Fingerprint::matches(const Fingerprint& o) const {
  if (std::tie(dim, derived_dim, center_dim, killing_rank, toral_dim, root_count) !=
      std::tie(o.dim, o.derived_dim, o.center_dim, o.killing_rank, o.toral_dim, o.root_count))
    return false;
  if (split && o.split) return root_ad_ranks == o.root_ad_ranks;
  return true;
}

namespace {

std::size_t t_valuation(const Poly& f) {
  std::size_t v = 0;
  while (v < f.coeffs().size() && f.coeffs()[v] == 0) ++v;
  return v;
}

Poly drop_t_power(const Poly& f, std::size_t v) {
  return Poly(f.field(), std::vector<Elem>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(v), f.coeffs().end()));
}

/// Degree k of the extension over which g splits, or 0 if that extension
/// would exceed the table limit.
unsigned splitting_degree(const Poly& g) {
  const std::uint64_t q = g.field().order();
  unsigned kmax = 0;
  for (std::uint64_t qq = q; qq <= Field::kMaxTableOrder; qq *= q) ++kmax;
  if (kmax == 0) return 0;
  unsigned k = 1;
  for (const auto& [part, e] : squarefree_factorization(g)) {
    int covered = 0;
    for (const auto& [d, prod] : distinct_degree_split(part, kmax)) {
      covered += prod.degree();
      k = std::lcm(k, d);
    }
    if (covered != part.degree()) return 0;
  }
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) size *= q;
  return size <= Field::kMaxTableOrder ? k : 0;
}

Vec random_vec(const Field& f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& c : v) c = f.random(rng);
  return v;
}

Mat map_entries(const Mat& m, const Embedding& emb) {
  Mat out(emb.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = emb(m(i, j));
  return out;
}

/// Root vector ad-ranks for the Cartan subalgebra h (rows) after extending
/// scalars by degree k, or nullopt when the torus does not split there.
std::optional<std::vector<std::size_t>> root_data(const LieAlg& l, const Mat& h, unsigned k, Rng& rng) {
  const Field& f = l.field();
  const std::size_t d = l.dim(), r = h.rows();
  LieAlg le = l;
  Mat he = h;
  if (k > 1) {
    const Field e = Field::extension(f.characteristic(), f.degree() * k);
    const Embedding emb = embed(f, e, rng);
    le = l.base_change(emb);
    he = map_entries(h, emb);
  }
  const Field& fe = le.field();
  std::vector<Mat> pieces{Mat::identity(fe, d)};
  for (std::size_t i = 0; i < r; ++i) {
    const Mat m = le.ad(he.row_vec(i));
    std::vector<Mat> next;
    for (auto& p : pieces) {
      if (p.rows() == 1) {
        next.push_back(std::move(p));
        continue;
      }
      for (auto& q : generalized_eigensplit(m, p, rng)) next.push_back(std::move(q));
    }
    pieces = std::move(next);
  }
  if (pieces.size() != d - r + 1) return std::nullopt;
  std::vector<std::size_t> ranks;
  bool zero_seen = false;
  for (const auto& p : pieces) {
    if (!zero_seen && p.rows() == r && rank(vstack(he, p)) == r) {
      zero_seen = true;
      continue;
    }
    if (p.rows() != 1) return std::nullopt;
    ranks.push_back(rank(le.ad(p.row_vec(0))));
  }
  if (!zero_seen) return std::nullopt;
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

Fingerprint fingerprint(const LieAlg& l, std::uint64_t seed) {
  Fingerprint fp;
  const Field& f = l.field();
  const std::size_t d = l.dim();
  fp.dim = d;
  if (d == 0) return fp;
  {
    Mat all(f, d * d, d);
    std::copy(l.constants().begin(), l.constants().end(), all.row(0));
    fp.derived_dim = rank(all);
  }
  fp.center_dim = lie_center(l).rows();

  std::vector<Mat> ads, adt;
  for (std::size_t j = 0; j < d; ++j) {
    ads.push_back(l.ad_basis(j));
    adt.push_back(ads.back().transpose());
  }
  Mat killing(f, d, d);
  f.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Elem s = 0;
        const Elem* a = ads[i].row(0);
        const Elem* b = adt[j].row(0);
        for (std::size_t t = 0; t < d * d; ++t)
          if (a[t] && b[t]) s = ops.add(s, ops.mul(a[t], b[t]));
        killing(i, j) = killing(j, i) = s;
      }
  });
  fp.killing_rank = rank(killing);

  // Cartan subalgebra from a regular element; prefer one whose torus splits
  // over the smallest extension.
  Rng rng(seed ^ 0x5eedf00dULL);
  constexpr int kRankDraws = 40;
  constexpr int kMaxDraws = 6000;
  std::size_t rmin = d;
  unsigned best_k = 0;
  Vec best_x;
  int since_best = 0;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Vec x = random_vec(f, d, rng);
    const Mat a = l.ad(x);
    const Poly cp = charpoly(a);
    const std::size_t v = t_valuation(cp);
    if (v < rmin) {
      rmin = v;
      best_k = 0;
      best_x.clear();
    }
    if (draw < kRankDraws || v != rmin) continue;
    const unsigned k = splitting_degree(drop_t_power(cp, v));
    if (k != 0 && (best_k == 0 || k < best_k)) {
      best_k = k;
      best_x = x;
      since_best = 0;
    }
    ++since_best;
    if (best_k == 0 || (best_k > 1 && since_best < 200 && draw + 1 < kMaxDraws)) continue;
    Mat pw = l.ad(best_x);
    Mat acc = Mat::identity(f, d);
    for (std::size_t i = 0; i < rmin; ++i) acc = acc * pw;
    const Mat h = left_kernel(acc);
    fp.toral_dim = h.rows();
    fp.root_count = d - h.rows();
    if (h.rows() == rmin) {
      if (auto ranks = root_data(l, h, best_k, rng)) {
        fp.split = true;
        fp.split_degree = best_k;
        fp.root_ad_ranks = std::move(*ranks);
        return fp;
      }
    }
    best_k = 0;
    best_x.clear();
  }
  fp.toral_dim = rmin;
  fp.root_count = d - rmin;
  return fp;
}

const Fingerprint& Classifier::reference_fingerprint(const std::string& family, unsigned rank, std::uint32_t p) {
  const auto key = std::make_tuple(family, rank, p);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const LieAlg ref = reference_classical(family, rank, Field::prime(p));
  return cache_.emplace(key, fingerprint(ref, seed_ + 7919 * rank + p)).first->second;
}

std::vector<FactorDescriptor> Classifier::classify_simple(const LieAlg& l, const std::vector<FactorDescriptor>& hints) {
  const Module adj = l.adjoint_module();
  const unsigned e = ma_.endomorphism_degree(adj);
  if (e <= 1) return classify_absolute(l, hints);

  const Field& f = l.field();
  const std::uint32_t p = f.characteristic();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < f.degree() * e; ++i) size *= p;
  auto unidentified = [&] {
    auto u = FactorDescriptor::unidentified(l.dim());
    u.note = "centroid of degree " + std::to_string(e) + " beyond the supported field size";
    return std::vector<FactorDescriptor>{u};
  };
  if (size > Field::kMaxTableOrder) return unidentified();

  // A non-scalar centroid element generates F_{q^e}; its eigenspaces over
  // that field are the conjugate simple summands.
  const auto endo = ma_.endomorphism_basis(adj);
  const Mat* z = nullptr;
  for (const auto& m : endo) {
    const Mat scalar = m(0, 0) * Mat::identity(f, l.dim());
    if (!(m == scalar)) {
      z = &m;
      break;
    }
  }
  if (!z) return unidentified();
  const Field big = Field::extension(p, f.degree() * e);
  const Embedding emb = embed(f, big, ma_.rng());
  const LieAlg lb = l.base_change(emb);
  const auto pieces = generalized_eigensplit(map_entries(*z, emb), Mat::identity(big, l.dim()), ma_.rng());
  if (pieces.size() != e) return unidentified();
  for (const auto& pc : pieces)
    if (pc.rows() * e != l.dim()) return unidentified();

  std::vector<FactorDescriptor> out;
  for (auto fd : classify_absolute(lb.restrict_to(pieces[0]), hints)) {
    fd.field_degree *= e;
    for (unsigned i = 0; i < e; ++i) out.push_back(fd);
  }
  return out;
}

std::vector<FactorDescriptor> Classifier::classify_absolute(const LieAlg& l, const std::vector<FactorDescriptor>& hints) {
  const std::uint32_t p = l.field().characteristic();
  const std::size_t d = l.dim();
  const Fingerprint fp = fingerprint(l, seed_ + d);
  if (fp.center_dim != 0 || fp.derived_dim != d) throw ValidationError("classify_simple called on a non-simple algebra");

  for (const auto& h : hints) {
    if (h.kind != FactorDescriptor::Kind::Classical || classical_dim(h.family, h.rank) != d) continue;
    if (h.family == "A" && (h.rank + 1) % p == 0) continue;
    if (fp.matches(reference_fingerprint(h.family, h.rank, p))) return {FactorDescriptor::classical(h.family, h.rank)};
  }

  std::vector<std::pair<std::string, unsigned>> cands;
  for (unsigned r = 1; classical_dim("A", r) <= d + 1; ++r) {
    if ((r + 1) % p != 0 && classical_dim("A", r) == d) cands.emplace_back("A", r);
    if ((r + 1) % p == 0 && r >= 2 && classical_dim("PA", r) == d) cands.emplace_back("PA", r);
  }
  for (unsigned r = 2; classical_dim("B", r) <= d; ++r)
    if (classical_dim("B", r) == d) cands.emplace_back("B", r);
  for (unsigned r = 3; classical_dim("C", r) <= d; ++r)
    if (classical_dim("C", r) == d) cands.emplace_back("C", r);
  for (unsigned r = 4; classical_dim("D", r) <= d; ++r)
    if (classical_dim("D", r) == d) cands.emplace_back("D", r);

  std::vector<std::pair<std::string, unsigned>> found;
  for (const auto& [fam, r] : cands)
    if (fp.matches(reference_fingerprint(fam, r, p))) found.emplace_back(fam, r);
  if (found.empty()) {
    auto u = FactorDescriptor::unidentified(d);
    u.note = exceptional_dimension_note(d, p);
    return {u};
  }
  auto fd = FactorDescriptor::classical(found[0].first, found[0].second);
  fd.alternatives.assign(found.begin() + 1, found.end());
  return {fd};
}

std::string exceptional_dimension_note(std::size_t n, std::uint32_t p) {
  std::vector<std::string> hits;
  for (std::uint64_t pn = p; pn <= n + 1; pn *= p) {
    if (pn == n) hits.push_back("W/K (p^N)");
    if (pn == n + 1) hits.push_back("H (p^N - 1)");
    if (n > 1 && (n - 1) % pn == 0 && (n - 1) / pn >= 2) hits.push_back("S ((m-1)p^N + 1)");
  }
  if (p == 5)
    for (std::uint64_t q = 125; q <= n; q *= 5)
      if (q == n) hits.push_back("M (5^(n1+n2+1))");
  std::string out;
  for (const auto& h : hits) out += (out.empty() ? "" : ", ") + h;
  return out;
}

}  // namespace plesken
