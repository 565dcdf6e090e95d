#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "plesken/ffield.hpp"

namespace plesken {

/// Dense univariate polynomial; coefficients low degree first, trailing zeros
/// stripped. The zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly x(const Field& f);
  /// c * x^n
  static Poly monomial(const Field& f, Elem c, std::size_t n);
  /// Polynomial with small integer coefficients, low degree first.
  static Poly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const;
  Elem eval(Elem a) const;
  Poly derivative() const;
  std::string format() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Elem c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void strip();
  Field field_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);

bool is_irreducible(const Poly& f);

/// Square-free decomposition: f = lead * prod g_i^{e_i} with g_i square-free
/// and pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_factorization(const Poly& f);

/// Distinct-degree stage of Cantor-Zassenhaus on a square-free polynomial.
/// Returns (d, product of all irreducible factors of degree d) for d up to
/// `max_degree`; factors of larger degree are left out.
std::vector<std::pair<unsigned, Poly>> distinct_degree_split(const Poly& f, unsigned max_degree = ~0u);

/// Factor degrees with multiplicities for a square-free f over F_p; throws
/// ValidationError if f is zero or not square-free.
std::map<unsigned, unsigned> factor_distinct_degree(const Poly& f);

/// Splits a product of distinct monic irreducibles of degree d.
std::vector<Poly> equal_degree_split(const Poly& f, unsigned d, Rng& rng);

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// degree. Factors of degree above `max_degree` are dropped.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, Rng& rng,
                                              unsigned max_degree = ~0u);

/// Number of distinct roots in the coefficient field.
std::size_t root_count(const Poly& f);
std::vector<Elem> roots(const Poly& f, Rng& rng);

/// First monic irreducible of degree k over F_p; candidates
/// x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered lexicographically by
/// (c_{k-1}, ..., c_0).
Poly find_irreducible(const Field& prime_field, unsigned k);

}  // namespace plesken
