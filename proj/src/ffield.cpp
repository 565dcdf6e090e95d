#include "plesken/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "plesken/error.hpp"
#include "plesken/poly.hpp"

namespace plesken {

namespace detail {

struct FieldImpl {
  std::uint32_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  // Extension tables; empty for prime fields.
  std::vector<std::uint32_t> exp_enc;     // exp_enc[e] = digit code of g^e
  std::vector<std::uint32_t> code_of_enc;  // digit code -> Zech code
  std::vector<std::uint32_t> zech;
  Elem minus_one = 0;
};

}  // namespace detail

namespace {

using detail::FieldImpl;

std::vector<std::uint32_t> digits_of(std::uint64_t enc, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = static_cast<std::uint32_t>(enc % p);
    enc /= p;
  }
  return d;
}

std::uint64_t enc_of(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint64_t e = 0;
  for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
  return e;
}

// Product of two residues modulo the monic modulus, on digit vectors.
std::vector<std::uint32_t> mulmod_digits(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b,
                                         const std::vector<std::uint32_t>& modulus,
                                         std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (unsigned d = 2 * k - 1; d >= k && d < 2 * k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> r(k);
  for (unsigned i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint32_t> pow_digits(std::vector<std::uint32_t> base, std::uint64_t e,
                                      const std::vector<std::uint32_t>& modulus,
                                      std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::vector<std::uint32_t> acc(k, 0);
  acc[0] = 1;
  while (e) {
    if (e & 1) acc = mulmod_digits(acc, base, modulus, p);
    base = mulmod_digits(base, base, modulus, p);
    e >>= 1;
  }
  return acc;
}

void build_tables(FieldImpl& f) {
  const std::uint32_t p = f.p;
  const unsigned k = f.k;
  const std::uint64_t q = f.q;
  const auto factors = prime_factors(q - 1);
  std::vector<std::uint32_t> one(k, 0);
  one[0] = 1;
  std::vector<std::uint32_t> g;
  for (std::uint64_t cand = p; cand < q; ++cand) {
    auto d = digits_of(cand, p, k);
    bool primitive = true;
    for (auto r : factors) {
      if (pow_digits(d, (q - 1) / r, f.modulus, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = std::move(d);
      break;
    }
  }
  if (g.empty()) throw std::logic_error("no primitive element found");

  f.exp_enc.assign(q - 1, 0);
  f.code_of_enc.assign(q, 0);
  auto cur = one;
  for (std::uint64_t e = 0; e < q - 1; ++e) {
    const auto enc = enc_of(cur, p);
    f.exp_enc[e] = static_cast<std::uint32_t>(enc);
    f.code_of_enc[enc] = static_cast<std::uint32_t>(e + 1);
    cur = mulmod_digits(cur, g, f.modulus, p);
  }
  f.zech.assign(q - 1, 0);
  for (std::uint64_t d = 0; d < q - 1; ++d) {
    auto digits = digits_of(f.exp_enc[d], p, k);
    digits[0] = (digits[0] + 1) % p;
    f.zech[d] = f.code_of_enc[enc_of(digits, p)];
  }
  f.minus_one = f.code_of_enc[p - 1];
}

std::shared_ptr<const FieldImpl> make_prime(std::uint32_t p) {
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (!is_prime_number(p)) throw ValidationError("field characteristic must be prime");
  auto impl = std::make_shared<FieldImpl>();
  impl->p = p;
  impl->k = 1;
  impl->q = p;
  impl->modulus = {0, 1};
  return impl;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::shared_ptr<const FieldImpl>>&
field_cache() {
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
                  std::shared_ptr<const FieldImpl>>
      cache;
  return cache;
}

}  // namespace

Elem PrimeOps::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    const std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  std::lock_guard lock(cache_mutex());
  auto& cache = field_cache();
  const auto key = std::make_pair(p, std::vector<std::uint32_t>{0, 1});
  if (auto it = cache.find(key); it != cache.end()) return Field(it->second);
  auto impl = make_prime(p);
  cache.emplace(key, impl);
  return Field(impl);
}

Field Field::extension(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw ValidationError("extension degree must be positive");
  if (degree == 1) return prime(p);
  const Poly f = find_irreducible(prime(p), degree);
  std::vector<std::uint32_t> mod(f.coeffs().begin(), f.coeffs().end());
  return with_modulus(p, std::move(mod));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  const Field base = prime(p);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw ValidationError("modulus must be monic of positive degree");
  for (auto c : modulus)
    if (c >= p) throw ValidationError("modulus coefficient out of range");
  if (modulus.size() == 2 && modulus[0] == 0) return base;
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  {
    std::lock_guard lock(cache_mutex());
    auto& cache = field_cache();
    if (auto it = cache.find({p, modulus}); it != cache.end()) return Field(it->second);
  }
  if (k == 1) throw ValidationError("prime fields are represented with modulus x");
  std::vector<Elem> pc(modulus.begin(), modulus.end());
  if (!is_irreducible(Poly(base, pc))) throw ValidationError("modulus is not irreducible");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxTableOrder) throw LimitError("field order exceeds table limit");
  }
  auto impl = std::make_shared<FieldImpl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;
  impl->modulus = modulus;
  build_tables(*impl);
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = field_cache().emplace(std::make_pair(p, std::move(modulus)), impl);
  return Field(it->second);
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

PrimeOps Field::prime_ops() const { return PrimeOps{impl_->p}; }
ZechOps Field::zech_ops() const {
  return ZechOps{static_cast<std::uint32_t>(impl_->q - 1), impl_->zech.data(), impl_->minus_one};
}

Elem Field::add(Elem a, Elem b) const {
  return visit([&](const auto& ops) { return ops.add(a, b); });
}
Elem Field::sub(Elem a, Elem b) const {
  return visit([&](const auto& ops) { return ops.sub(a, b); });
}
Elem Field::neg(Elem a) const {
  return visit([&](const auto& ops) { return ops.neg(a); });
}
Elem Field::mul(Elem a, Elem b) const {
  return visit([&](const auto& ops) { return ops.mul(a, b); });
}
Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return visit([&](const auto& ops) { return ops.inv(a); });
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (!is_prime()) {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t qm1 = impl_->q - 1;
    const std::uint64_t x = (static_cast<unsigned __int128>(a - 1) * (e % qm1)) % qm1;
    return static_cast<Elem>(x + 1);
  }
  Elem acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  if (is_prime()) return static_cast<Elem>(r);
  return impl_->code_of_enc[static_cast<std::size_t>(r)];
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  const auto p = impl_->p;
  if (is_prime()) {
    std::uint64_t acc = 0;
    // y is 0 in the prime field representation, only c_0 survives
    if (!coeffs.empty()) acc = coeffs[0] % p;
    return static_cast<Elem>(acc);
  }
  if (coeffs.size() > impl_->k) throw ValidationError("coefficient vector too long");
  std::vector<std::uint32_t> d(impl_->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % p;
  return impl_->code_of_enc[enc_of(d, p)];
}

std::vector<std::uint32_t> Field::to_coeffs(Elem a) const {
  if (is_prime()) return {a};
  const std::uint64_t enc = a == 0 ? 0 : impl_->exp_enc[a - 1];
  return digits_of(enc, impl_->p, impl_->k);
}

Elem Field::generator() const {
  if (is_prime()) return 0;
  return impl_->code_of_enc[impl_->p];
}

Elem Field::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, impl_->q - 1);
  return static_cast<Elem>(dist(rng));
}

std::int64_t Field::to_int(Elem a) const {
  if (is_prime()) return a;
  const std::uint64_t enc = a == 0 ? 0 : impl_->exp_enc[a - 1];
  return enc < impl_->p ? static_cast<std::int64_t>(enc) : -1;
}

std::int64_t Field::lift_symmetric(Elem a) const {
  const std::int64_t r = to_int(a);
  if (r < 0) throw ValidationError("element is not in the prime subfield");
  const std::int64_t p = impl_->p;
  return r > p / 2 ? r - p : r;
}

std::string Field::format(Elem a) const {
  if (is_prime()) return std::to_string(a);
  const auto d = to_coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 'y';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus;
}

std::string Field::name() const {
  if (is_prime()) return "F_" + std::to_string(impl_->p);
  return "F_" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k);
}

Embedding embed(const Field& small, const Field& big, Rng& rng) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
    throw ValidationError("no embedding between these fields");
  const auto q = small.order();
  std::vector<Elem> table(q);
  if (small.is_prime()) {
    for (std::uint64_t i = 0; i < q; ++i) table[i] = big.from_int(static_cast<std::int64_t>(i));
    return Embedding(small, big, std::move(table));
  }
  if (small == big) {
    for (std::uint64_t i = 0; i < q; ++i) table[i] = static_cast<Elem>(i);
    return Embedding(small, big, std::move(table));
  }
  std::vector<Elem> mc;
  for (auto c : small.modulus()) mc.push_back(big.from_int(c));
  auto rts = roots(Poly(big, mc), rng);
  if (rts.empty()) throw std::logic_error("modulus has no root in the extension");
  const Elem r = *std::min_element(rts.begin(), rts.end());
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto d = small.to_coeffs(static_cast<Elem>(i));
    Elem acc = 0;
    for (std::size_t j = d.size(); j-- > 0;) acc = big.add(big.mul(acc, r), big.from_int(d[j]));
    table[i] = acc;
  }
  return Embedding(small, big, std::move(table));
}

}  // namespace plesken
