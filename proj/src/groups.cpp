#include "plesken/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "plesken/error.hpp"

namespace plesken {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

void validate_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) throw ValidationError("generator is not a bijection");
    seen[x] = true;
  }
}

}  // namespace

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

Perm parse_cycles(const std::string& text, std::size_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::size_t max_pt = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ValidationError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ValidationError("expected a point in cycle notation: " + text);
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000000) throw ValidationError("point out of range");
        ++i;
      }
      if (v == 0) throw ValidationError("points are 1-based");
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      max_pt = std::max(max_pt, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ValidationError("unterminated cycle: " + text);
    ++i;
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  Perm p(std::max(max_pt, min_degree));
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(p.size(), false);
  for (const auto& c : cycles) {
    for (auto x : c) {
      if (used[x]) throw ValidationError("point repeated in cycle notation: " + text);
      used[x] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ',';
      first = false;
      os << j + 1;
      j = p[j];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Group Group::from_generators(std::vector<Perm> gens, std::size_t cap) {
  // The full multiplication table is kept, so the order is bounded regardless of the cap.
  cap = std::min(cap, kMaxOrder);
  Group g;
  for (const auto& p : gens) g.degree_ = std::max(g.degree_, p.size());
  for (auto& p : gens) {
    validate_perm(p);
    const std::size_t old = p.size();
    p.resize(g.degree_);
    for (std::size_t i = old; i < g.degree_; ++i) p[i] = static_cast<std::uint32_t>(i);
    if (is_identity(p)) continue;
    if (std::find(g.gens_.begin(), g.gens_.end(), p) != g.gens_.end()) continue;
    g.gens_.push_back(p);
  }
  Perm id(g.degree_);
  std::iota(id.begin(), id.end(), 0u);
  std::unordered_map<Perm, std::size_t, PermHash> index;
  g.elements_.push_back(id);
  g.parent_.push_back(0);
  g.parent_gen_.push_back(0);
  index.emplace(id, 0);
  const std::size_t ng = g.gens_.size();
  std::vector<std::size_t> right;  // right[i * ng + j] = index of element(i) * gen(j)
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      Perm c = compose(g.elements_[i], g.gens_[j]);
      auto [it, fresh] = index.emplace(c, g.elements_.size());
      if (fresh) {
        if (g.elements_.size() >= cap)
          throw LimitError("group order exceeds the cap of " + std::to_string(cap));
        g.elements_.push_back(std::move(c));
        g.parent_.push_back(i);
        g.parent_gen_.push_back(j);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = g.elements_.size();
  for (const auto& p : g.gens_) g.gen_idx_.push_back(index.at(p));
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) g.table_[a * n] = static_cast<std::uint32_t>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const std::size_t pb = g.parent_[b], jb = g.parent_gen_[b];
    for (std::size_t a = 0; a < n; ++a)
      g.table_[a * n + b] = static_cast<std::uint32_t>(right[g.table_[a * n + pb] * ng + jb]);
  }
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) {
        g.inv_[a] = b;
        break;
      }
  g.orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t x = a, k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.orders_[a] = k;
  }
  return g;
}

std::size_t Group::power(std::size_t a, std::int64_t m) const {
  const auto o = static_cast<std::int64_t>(orders_[a]);
  std::int64_t e = ((m % o) + o) % o;
  std::size_t acc = 0, b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::optional<std::size_t> Group::index_of(const Perm& p) const {
  Perm q = p;
  if (q.size() > degree_) return std::nullopt;
  for (std::size_t i = q.size(); i < degree_; ++i) q.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == q) return i;
  return std::nullopt;
}

namespace {

// Arithmetic in a small field F_q (any characteristic), used only to build
// matrix groups as permutation groups. Elements are base-p digit codes.
struct SmallField {
  std::size_t p = 0, k = 0, q = 0;
  std::vector<std::uint32_t> add, mul;
  std::uint32_t primitive = 0;

  std::uint32_t neg(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < q; ++b)
      if (add[a * q + b] == 0) return b;
    return 0;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul[a * q + b] == 1) return b;
    throw std::logic_error("zero has no inverse");
  }
};

bool prime_power(std::size_t q, std::size_t& p, std::size_t& k) {
  if (q < 2) return false;
  for (std::size_t d = 2; d <= q; ++d) {
    if (q % d) continue;
    p = d;
    k = 0;
    std::size_t r = q;
    while (r % d == 0) {
      r /= d;
      ++k;
    }
    return r == 1;
  }
  return false;
}

SmallField small_field(std::size_t q) {
  SmallField f;
  if (!prime_power(q, f.p, f.k)) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  if (q > 4096) throw LimitError("field order too large for a matrix group");
  f.q = q;
  const std::size_t p = f.p, k = f.k;
  auto digits = [&](std::size_t e) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = e % p;
      e /= p;
    }
    return d;
  };
  auto code = [&](const std::vector<std::size_t>& d) {
    std::size_t e = 0;
    for (std::size_t i = k; i-- > 0;) e = e * p + d[i];
    return static_cast<std::uint32_t>(e);
  };
  f.add.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      auto da = digits(a), db = digits(b);
      for (std::size_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
      f.add[a * q + b] = code(da);
    }
  // Try monic moduli until multiplication has no zero divisors.
  for (std::size_t m = 0; m < q; ++m) {
    std::vector<std::size_t> mod = digits(m);  // x^k = -sum mod_i x^i
    std::vector<std::uint32_t> table(q * q);
    bool field = true;
    for (std::size_t a = 0; a < q && field; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::size_t> prod(2 * k, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (std::size_t d = 2 * k; d-- > k;) {
          const std::size_t c = prod[d];
          prod[d] = 0;
          for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
        }
        prod.resize(k);
        const auto r = code(prod);
        if (a && b && r == 0) {
          field = false;
          break;
        }
        table[a * q + b] = r;
      }
    if (!field) continue;
    f.mul = std::move(table);
    break;
  }
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::size_t ord = 1;
    while (x != 1) {
      x = f.mul[x * q + g];
      ++ord;
    }
    if (ord == q - 1) {
      f.primitive = g;
      break;
    }
  }
  return f;
}

using Mat2 = std::array<std::uint32_t, 4>;  // row-major a b / c d

Perm act_on_vectors(const SmallField& f, const Mat2& m) {
  const std::size_t q = f.q;
  Perm p(q * q - 1);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      const std::uint32_t nx = f.add[f.mul[m[0] * q + x] * q + f.mul[m[1] * q + y]];
      const std::uint32_t ny = f.add[f.mul[m[2] * q + x] * q + f.mul[m[3] * q + y]];
      p[x * q + y - 1] = static_cast<std::uint32_t>(nx * q + ny - 1);
    }
  return p;
}

Perm act_on_line(const SmallField& f, const Mat2& m) {
  const std::size_t q = f.q;
  Perm p(q + 1);
  auto point = [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    if (y == 0) return static_cast<std::uint32_t>(q);
    return f.mul[x * q + f.inv(y)];
  };
  for (std::uint32_t x = 0; x <= q; ++x) {
    const std::uint32_t vx = x < q ? x : 1, vy = x < q ? 1 : 0;
    const std::uint32_t nx = f.add[f.mul[m[0] * q + vx] * q + f.mul[m[1] * q + vy]];
    const std::uint32_t ny = f.add[f.mul[m[2] * q + vx] * q + f.mul[m[3] * q + vy]];
    p[x] = point(nx, ny);
  }
  return p;
}

std::vector<Mat2> sl2_generators(const SmallField& f) {
  const std::uint32_t w = f.primitive;
  return {Mat2{1, 1, 0, 1}, Mat2{0, f.neg(1), 1, 0}, Mat2{w, 0, 0, f.inv(w)}};
}

Perm cycle_perm(std::size_t n, const std::vector<std::uint32_t>& cyc) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return p;
}

Perm full_cycle(std::size_t n) {
  std::vector<std::uint32_t> c(n);
  std::iota(c.begin(), c.end(), 0u);
  return cycle_perm(n, c);
}

Group quaternion_group(std::size_t cap) {
  // Units 1,i,j,k with signs; index = 2*unit + (negative ? 1 : 0).
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left = [&](int u) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      const int v = x / 2;
      const int s = (x % 2 ? -1 : 1) * sign_mul[u][v];
      p[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(2 * unit_mul[u][v] + (s < 0 ? 1 : 0));
    }
    return p;
  };
  return Group::from_generators({left(1), left(2)}, cap);
}

}  // namespace

Group builtin_group(const std::string& tag_in, std::size_t n, std::size_t cap) {
  std::string tag = tag_in;
  std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::tolower(c); });
  Group g;
  std::string name;
  if (tag == "symmetric" || tag == "sym") {
    if (n < 1) throw ValidationError("symmetric group needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) gens = {cycle_perm(n, {0, 1}), full_cycle(n)};
    else gens = {Perm{0}};
    g = Group::from_generators(gens, cap);
    name = "S" + std::to_string(n);
  } else if (tag == "alternating" || tag == "alt") {
    if (n < 1) throw ValidationError("alternating group needs n >= 1");
    std::vector<Perm> gens{Perm(n)};
    std::iota(gens[0].begin(), gens[0].end(), 0u);
    for (std::uint32_t i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
    g = Group::from_generators(gens, cap);
    name = "A" + std::to_string(n);
  } else if (tag == "cyclic") {
    if (n < 1) throw ValidationError("cyclic group needs n >= 1");
    g = Group::from_generators({full_cycle(n)}, cap);
    name = "C" + std::to_string(n);
  } else if (tag == "dihedral") {
    if (n < 1) throw ValidationError("dihedral group needs n >= 1");
    if (n == 1) {
      g = Group::from_generators({cycle_perm(2, {0, 1})}, cap);
    } else if (n == 2) {
      g = Group::from_generators({parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")}, cap);
    } else {
      Perm refl(n);
      for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
      g = Group::from_generators({full_cycle(n), refl}, cap);
    }
    name = "D" + std::to_string(n);
  } else if (tag == "quaternion" || tag == "q8") {
    g = quaternion_group(cap);
    name = "Q8";
  } else if (tag == "klein" || tag == "v4") {
    g = Group::from_generators({parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")}, cap);
    name = "V4";
  } else if (tag == "sl2" || tag == "psl2") {
    const SmallField f = small_field(n);
    std::vector<Perm> gens;
    for (const auto& m : sl2_generators(f)) gens.push_back(tag == "sl2" ? act_on_vectors(f, m) : act_on_line(f, m));
    g = Group::from_generators(gens, cap);
    name = (tag == "sl2" ? "SL2(" : "PSL2(") + std::to_string(n) + ")";
  } else {
    throw ValidationError("unknown group tag: " + tag_in);
  }
  g.set_name(name);
  return g;
}

Group group_from_text(const std::string& text, std::size_t cap) {
  std::istringstream is(text);
  std::string line;
  std::vector<Perm> gens;
  while (std::getline(is, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    gens.push_back(parse_cycles(line.substr(b)));
  }
  if (gens.empty()) throw ValidationError("group file lists no generators");
  Group g = Group::from_generators(std::move(gens), cap);
  g.set_name("file");
  return g;
}

Group group_from_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Group g = group_from_text(ss.str(), cap);
  g.set_name(path);
  return g;
}

std::size_t ConjugacyData::power_map(const Group& g, std::size_t c, std::int64_t m) const {
  return class_of[g.power(rep(c), m)];
}

std::vector<bool> ConjugacyData::p_regular(std::size_t p) const {
  std::vector<bool> out(num_classes());
  for (std::size_t c = 0; c < num_classes(); ++c) out[c] = element_order[c] % p != 0;
  return out;
}

std::size_t ConjugacyData::num_p_regular(std::size_t p) const {
  const auto f = p_regular(p);
  return static_cast<std::size_t>(std::count(f.begin(), f.end(), true));
}

ConjugacyData conjugacy_classes(const Group& g) {
  ConjugacyData cd;
  const std::size_t n = g.order();
  constexpr std::size_t kNone = ~std::size_t{0};
  cd.class_of.assign(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    if (cd.class_of[x] != kNone) continue;
    const std::size_t c = cd.classes.size();
    std::vector<std::size_t> cls{x};
    cd.class_of[x] = c;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto s : g.generators()) {
        const std::size_t y = g.mul(g.mul(g.inverse(s), cls[i]), s);
        if (cd.class_of[y] == kNone) {
          cd.class_of[y] = c;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.element_order.push_back(g.element_order(x));
    cd.classes.push_back(std::move(cls));
  }
  for (std::size_t c = 0; c < cd.num_classes(); ++c)
    cd.inverse_class.push_back(cd.class_of[g.inverse(cd.rep(c))]);
  return cd;
}

std::size_t involution_count(const Group& g) {
  std::size_t t = 0;
  for (std::size_t a = 0; a < g.order(); ++a) t += g.element_order(a) == 2;
  return t;
}

std::vector<bool> subgroup_closure(const Group& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto s : gens) {
      const std::size_t y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

namespace {

// A small generating set of the subgroup with the given members.
std::vector<std::size_t> generating_set(const Group& g, const std::vector<bool>& members) {
  std::vector<std::size_t> gens;
  std::vector<bool> span = subgroup_closure(g, gens);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!members[x] || span[x]) continue;
    gens.push_back(x);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

std::size_t commutator(const Group& g, std::size_t x, std::size_t y) {
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

// Subgroup generated by commutators [h, k], h in a, k in b.
std::vector<bool> commutator_subgroup(const Group& g, const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> comm(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (b[y]) comm[commutator(g, x, y)] = true;
  }
  return subgroup_closure(g, generating_set(g, comm));
}

std::size_t count(const std::vector<bool>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

}  // namespace

Group subgroup(const Group& g, const std::vector<bool>& members) {
  std::vector<Perm> perms;
  for (auto x : generating_set(g, members)) perms.push_back(g.element(x));
  if (perms.empty()) perms.push_back(g.element(0));
  return Group::from_generators(std::move(perms), std::max(g.order(), std::size_t{1}));
}

Group squares_subgroup(const Group& g) {
  std::vector<bool> sq(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) sq[g.mul(x, x)] = true;
  return subgroup(g, subgroup_closure(g, generating_set(g, sq)));
}

bool group_is_nilpotent(const Group& g) {
  const std::vector<bool> all(g.order(), true);
  std::vector<bool> cur = all;
  for (;;) {
    const std::size_t before = count(cur);
    if (before == 1) return true;
    cur = commutator_subgroup(g, cur, all);
    if (count(cur) == before) return false;
  }
}

bool group_is_solvable(const Group& g) {
  std::vector<bool> cur(g.order(), true);
  for (;;) {
    const std::size_t before = count(cur);
    if (before == 1) return true;
    cur = commutator_subgroup(g, cur, cur);
    if (count(cur) == before) return false;
  }
}

bool group_is_abelian(const Group& g) {
  for (auto a : g.generators())
    for (auto b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace plesken
