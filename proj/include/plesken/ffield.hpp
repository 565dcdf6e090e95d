#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace plesken {

/// A field element. Its meaning depends on the owning Field: residues for
/// prime fields, Zech-log codes for extensions. In every field 0 is zero and 1
/// is one.
using Elem = std::uint32_t;

using Rng = std::mt19937_64;

/// Arithmetic in F_p by plain residues.
struct PrimeOps {
  std::uint32_t p;

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const;

  /// dst[i] += c * src[i]
  void axpy(Elem* dst, Elem c, const Elem* src, std::size_t n) const {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<Elem>((dst[i] + cc * src[i]) % p);
  }
  void scale(Elem* dst, Elem c, std::size_t n) const {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<Elem>(cc * dst[i] % p);
  }
};

/// Arithmetic in F_{p^k} through Zech logarithms. A nonzero element g^e is
/// coded as e + 1, where g is a fixed primitive element.
struct ZechOps {
  std::uint32_t qm1;         // q - 1
  const std::uint32_t* zech;  // zech[d] = code of 1 + g^d
  Elem minus_one;

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = (a - 1) + (b - 1);
    if (e >= qm1) e -= qm1;
    return e + 1;
  }
  Elem add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t d = b >= a ? b - a : b + qm1 - a;
    const Elem z = zech[d];
    if (z == 0) return 0;
    std::uint32_t e = (a - 1) + (z - 1);
    if (e >= qm1) e -= qm1;
    return e + 1;
  }
  Elem neg(Elem a) const { return mul(a, minus_one); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const {
    const std::uint32_t e = a - 1;
    return (e == 0 ? 0 : qm1 - e) + 1;
  }

  void axpy(Elem* dst, Elem c, const Elem* src, std::size_t n) const {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
      const Elem s = src[i];
      if (s == 0) continue;
      dst[i] = add(dst[i], mul(c, s));
    }
  }
  void scale(Elem* dst, Elem c, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) dst[i] = mul(c, dst[i]);
  }
};

namespace detail {
struct FieldImpl;
}

/// A finite field F_q, q = p^k with p odd. Cheap to copy (shared immutable
/// tables). Extension fields are realized as F_p[y]/(f) for a monic
/// irreducible f found by lexicographic search unless given explicitly.
class Field {
 public:
  /// Largest field order for which extension tables are built.
  static constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 22;

  static Field prime(std::uint32_t p);
  static Field extension(std::uint32_t p, unsigned degree);
  /// `modulus` holds the coefficients c_0..c_k of a monic polynomial over F_p.
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  bool is_prime() const { return degree() == 1; }
  /// Coefficients of the defining polynomial over F_p, low degree first.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, characteristic()); }

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const;
  /// Element sum_i c_i y^i where y is the class of x in F_p[x]/(f).
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> to_coeffs(Elem a) const;
  /// The class of x (a root of the modulus).
  Elem generator() const;
  Elem random(Rng& rng) const;
  /// Integer in [0, p) when `a` lies in the prime field, -1 otherwise.
  std::int64_t to_int(Elem a) const;
  std::string format(Elem a) const;
  /// Residue in (-p/2, p/2] for prime-subfield elements.
  std::int64_t lift_symmetric(Elem a) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }
  std::string name() const;

  template <class F>
  decltype(auto) visit(F&& f) const {
    if (is_prime()) return f(prime_ops());
    return f(zech_ops());
  }

  PrimeOps prime_ops() const;
  ZechOps zech_ops() const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// A field embedding F_{p^k} -> F_{p^m} (k | m), fixed by sending the
/// generator of the small field to a root of its modulus in the big field.
class Embedding {
 public:
  Embedding(Field small, Field big, std::vector<Elem> table)
      : small_(std::move(small)), big_(std::move(big)), table_(std::move(table)) {}
  Elem operator()(Elem a) const { return table_[a]; }
  const Field& source() const { return small_; }
  const Field& target() const { return big_; }

 private:
  Field small_;
  Field big_;
  std::vector<Elem> table_;
};

/// Embedding of `small` into `big`; both must share the characteristic and
/// the degree of `small` must divide that of `big`.
Embedding embed(const Field& small, const Field& big, Rng& rng);

bool is_prime_number(std::uint64_t n);

}  // namespace plesken
