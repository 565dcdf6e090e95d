#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plesken {

/// Permutation of {0, ..., n-1} as its image list.
using Perm = std::vector<std::uint32_t>;

/// Composition "first a, then b": (a*b)[x] = b[a[x]].
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);

/// Parses cycle notation with 1-based points, e.g. "(1,2)(3,4)". "()" is the
/// identity. The result acts on max(points seen, min_degree) points.
Perm parse_cycles(const std::string& text, std::size_t min_degree = 0);
std::string format_cycles(const Perm& p);

/// A fully enumerated finite permutation group.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// extending by the generators in the given order; this makes the numbering
/// reproducible. Products follow the permutation convention above, so that
/// permutation matrices give a homomorphism for the right action on row vectors.
class Group {
 public:
  static constexpr std::size_t kDefaultCap = 2000;
  static constexpr std::size_t kMaxOrder = 10000;

  static Group from_generators(std::vector<Perm> gens, std::size_t cap = kDefaultCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, std::int64_t m) const;
  std::size_t element_order(std::size_t a) const { return orders_[a]; }
  std::size_t exponent() const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  /// Generator permutations as given (after removing duplicates of the identity).
  const std::vector<Perm>& generator_perms() const { return gens_; }
  /// Element indices of the generators.
  const std::vector<std::size_t>& generators() const { return gen_idx_; }
  /// Breadth-first tree: element(i) = element(parent(i)) * generator(parent_gen(i)).
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_gen(std::size_t i) const { return parent_gen_[i]; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<std::size_t> gen_idx_;
  std::vector<Perm> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::string name_;
};

/// Built-in groups. Tags: "symmetric"/"sym" (n), "alternating"/"alt" (n),
/// "dihedral" (n, order 2n), "cyclic" (n), "quaternion" (order 8), "klein",
/// "sl2" (q), "psl2" (q). SL2(q) acts on nonzero column vectors of F_q^2,
/// PSL2(q) on the projective line.
Group builtin_group(const std::string& tag, std::size_t param = 0, std::size_t cap = Group::kDefaultCap);

/// Reads a group file: one generator per line in cycle notation, blank lines
/// and lines starting with '#' ignored.
Group group_from_text(const std::string& text, std::size_t cap = Group::kDefaultCap);
Group group_from_file(const std::string& path, std::size_t cap = Group::kDefaultCap);

struct ConjugacyData {
  std::vector<std::vector<std::size_t>> classes;  // first element is the representative
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> element_order;  // per class
  std::vector<std::size_t> inverse_class;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t rep(std::size_t c) const { return classes[c][0]; }
  std::size_t size(std::size_t c) const { return classes[c].size(); }
  /// Class of m-th powers of elements of class c.
  std::size_t power_map(const Group& g, std::size_t c, std::int64_t m) const;
  /// Per class: element order coprime to p.
  std::vector<bool> p_regular(std::size_t p) const;
  std::size_t num_p_regular(std::size_t p) const;
};

ConjugacyData conjugacy_classes(const Group& g);

std::size_t involution_count(const Group& g);

/// Membership flags of the subgroup generated by the given elements.
std::vector<bool> subgroup_closure(const Group& g, const std::vector<std::size_t>& gens);
/// Enumerated group on the same points generated by the given elements.
Group subgroup(const Group& g, const std::vector<bool>& members);
Group squares_subgroup(const Group& g);
bool group_is_nilpotent(const Group& g);
bool group_is_solvable(const Group& g);
bool group_is_abelian(const Group& g);

}  // namespace plesken
