#include "plesken/poly.hpp"

#include <algorithm>
#include <sstream>

#include "plesken/error.hpp"

namespace plesken {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  strip();
}

void Poly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }
Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  const Elem li = field_.inv(lead());
  return li * *this;
}

Elem Poly::eval(Elem a) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, a), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]));
  return Poly(field_, std::move(d));
}

std::string Poly::format() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    if (!unit || i == 0) os << (field_.is_prime() ? field_.format(c_[i]) : "(" + field_.format(c_[i]) + ")");
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& f = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& f = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  f.visit([&](const auto& ops) {
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i]) ops.axpy(v.data() + i, a.c_[i], b.c_.data(), b.c_.size());
  });
  return Poly(f, std::move(v));
}

Poly operator*(Elem c, const Poly& a) {
  std::vector<Elem> v(a.c_);
  a.field().visit([&](const auto& ops) { ops.scale(v.data(), c, v.size()); });
  return Poly(a.field(), std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> quo(r.size() - db, 0);
  const Elem binv = f.inv(b.lead());
  f.visit([&](const auto& ops) {
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const Elem c = ops.mul(r[i], binv);
      quo[i - db] = c;
      ops.axpy(r.data() + (i - db), ops.neg(c), bc.data(), db + 1);
    }
  });
  r.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return divmod(a * b, gcd(a, b)).first.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly acc = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) acc = (acc * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return acc;
}

namespace {

Poly one(const Field& f) { return Poly::constant(f, 1); }

bool is_one(const Poly& p) { return p.degree() == 0 && p[0] == 1; }

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root_exp = F.order() / p;
  std::vector<Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(F, std::move(v));
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  const std::uint64_t q = f.field().order();
  Poly h = x % g;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, q, g);
    if (!is_one(gcd(h - x, g))) return false;
  }
  return true;
}

std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& f) {
  if (f.is_zero()) throw ValidationError("square-free factorization of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly g = f.monic();
  if (g.degree() < 1) return out;
  const Field& F = f.field();
  const unsigned p = F.characteristic();
  Poly c = gcd(g, g.derivative());
  Poly w = divmod(g, c).first;
  unsigned i = 1;
  while (!is_one(w)) {
    Poly y = gcd(w, c);
    Poly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [h, e] : squarefree_factorization(pth_root(c))) out.emplace_back(h, e * p);
  }
  return out;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree_split(const Poly& f, unsigned max_degree) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  const std::uint64_t q = f.field().order();
  Poly h = x % g;
  unsigned i = 1;
  while (g.degree() >= 2 * static_cast<int>(i)) {
    if (i > max_degree) return out;
    h = powmod(h, q, g);
    Poly d = gcd(g, h - x);
    if (!is_one(d)) {
      out.emplace_back(i, d);
      g = divmod(g, d).first;
      h = h % g;
    }
    ++i;
  }
  if (g.degree() > 0 && static_cast<unsigned>(g.degree()) <= max_degree)
    out.emplace_back(static_cast<unsigned>(g.degree()), g.monic());
  return out;
}

std::map<unsigned, unsigned> factor_distinct_degree(const Poly& f) {
  if (f.is_zero()) throw ValidationError("factorization of the zero polynomial");
  const Poly g = f.monic();
  if (g.degree() >= 1 && !is_one(gcd(g, g.derivative())))
    throw ValidationError("polynomial is not square-free");
  std::map<unsigned, unsigned> out;
  for (const auto& [d, prod] : distinct_degree_split(g))
    out[d] += static_cast<unsigned>(prod.degree()) / d;
  return out;
}

std::vector<Poly> equal_degree_split(const Poly& f, unsigned d, Rng& rng) {
  const Field& F = f.field();
  const Poly g = f.monic();
  if (g.degree() <= static_cast<int>(d)) return {g};
  const std::uint64_t q = F.order();
  const int n = g.degree();
  for (;;) {
    std::vector<Elem> rc(static_cast<std::size_t>(n));
    for (auto& c : rc) c = F.random(rng);
    Poly a(F, std::move(rc));
    if (a.degree() < 1) continue;
    // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
    Poly t = a;
    Poly fr = a;
    for (unsigned j = 1; j < d; ++j) {
      fr = powmod(fr, q, g);
      t = (t * fr) % g;
    }
    Poly b = powmod(t, (q - 1) / 2, g) - one(F);
    Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < n) {
      auto left = equal_degree_split(h, d, rng);
      auto right = equal_degree_split(divmod(g, h).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, Rng& rng, unsigned max_degree) {
  std::vector<std::pair<Poly, unsigned>> out;
  for (const auto& [sf, e] : squarefree_factorization(f)) {
    for (const auto& [d, prod] : distinct_degree_split(sf, max_degree)) {
      for (auto& irr : equal_degree_split(prod, d, rng)) out.emplace_back(std::move(irr), e);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

std::size_t root_count(const Poly& f) {
  if (f.is_zero()) throw ValidationError("root count of the zero polynomial");
  if (f.degree() < 1) return 0;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  const Poly h = powmod(x, f.field().order(), g);
  return static_cast<std::size_t>(gcd(h - x, g).degree());
}

std::vector<Elem> roots(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw ValidationError("roots of the zero polynomial");
  if (f.degree() < 1) return {};
  const Field& F = f.field();
  const Poly g = f.monic();
  const Poly x = Poly::x(F);
  const Poly lin = gcd(powmod(x, F.order(), g) - x, g);
  std::vector<Elem> out;
  if (lin.degree() < 1) return out;
  for (const auto& l : equal_degree_split(lin, 1, rng)) out.push_back(F.neg(l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

Poly find_irreducible(const Field& prime_field, unsigned k) {
  if (!prime_field.is_prime()) throw ValidationError("find_irreducible expects a prime field");
  if (k == 0) throw ValidationError("degree must be positive");
  const std::uint32_t p = prime_field.characteristic();
  for (std::uint64_t n = 0;; ++n) {
    std::vector<Elem> c(k + 1, 0);
    std::uint64_t m = n;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<Elem>(m % p);
      m /= p;
    }
    if (m) throw std::logic_error("no irreducible polynomial found");
    c[k] = 1;
    Poly f(prime_field, std::move(c));
    if (is_irreducible(f)) return f;
  }
}

}  // namespace plesken
