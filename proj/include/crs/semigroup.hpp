// semigroup.hpp -- finite semigroups as Cayley tables: validation, products,
// word evaluation, and a small zoo of generated instances.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crs {

using elem_t = std::uint16_t;
using word_t = std::vector<elem_t>;  // nonempty sequence of elements

inline constexpr std::size_t kMaxSemigroupSize = 4096;

// Element set {0..n-1} with row-major Cayley table, table[x*n+y] = x*y.
// No identity is assumed anywhere. Immutable after construction; all
// operations on it are pure.
struct Semigroup {
  std::size_t n = 0;
  std::vector<elem_t> table;  // n*n entries
  std::string name;

  elem_t at(std::size_t x, std::size_t y) const { return table[x * n + y]; }
};

struct ValidationReport {
  enum class Kind { ok, closure, assoc };
  Kind kind = Kind::ok;
  std::size_t x = 0, y = 0, z = 0;  // least violating pair/triple

  bool ok() const { return kind == Kind::ok; }
};

// Closure first (entries must index back into {0..n-1}), associativity after;
// the associativity scan would index out of the table otherwise. Reports the
// lexicographically least violation of each kind.
inline ValidationReport validate(Semigroup const& s) {
  if (s.n == 0 || s.table.size() != s.n * s.n)
    throw std::invalid_argument("semigroup table is not n*n");
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y)
      if (s.at(x, y) >= s.n) return {ValidationReport::Kind::closure, x, y, 0};
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y)
      for (std::size_t z = 0; z < s.n; ++z)
        if (s.at(s.at(x, y), z) != s.at(x, s.at(y, z)))
          return {ValidationReport::Kind::assoc, x, y, z};
  return {};
}

inline elem_t multiply(Semigroup const& s, elem_t x, elem_t y) {
  if (x >= s.n || y >= s.n) throw std::out_of_range("element index out of range");
  elem_t r = s.at(x, y);
  if (r >= s.n) throw std::domain_error("table entry out of range (unvalidated semigroup?)");
  return r;
}

// Left fold of the operation over w; associativity makes the grouping moot.
inline elem_t fold_word(Semigroup const& s, word_t const& w) {
  if (w.empty()) throw std::invalid_argument("cannot fold the empty word (no identity)");
  elem_t acc = w[0];
  if (acc >= s.n) throw std::out_of_range("element index out of range");
  for (std::size_t i = 1; i < w.size(); ++i) acc = multiply(s, acc, w[i]);
  return acc;
}

// Membership bitmap for a subset A of a semigroup's elements.
struct ElemSet {
  std::vector<std::uint8_t> bits;

  ElemSet() = default;
  explicit ElemSet(std::size_t n) : bits(n, 0) {}
  static ElemSet of(std::size_t n, std::initializer_list<elem_t> xs) {
    ElemSet a(n);
    for (elem_t x : xs) a.insert(x);
    return a;
  }

  void insert(elem_t x) { bits.at(x) = 1; }
  bool contains(elem_t x) const { return x < bits.size() && bits[x]; }
  bool empty() const {
    for (auto b : bits)
      if (b) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : bits) c += b;
    return c;
  }
  std::vector<elem_t> members() const {
    std::vector<elem_t> m;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) m.push_back(static_cast<elem_t>(i));
    return m;
  }
};

// Pair (i, j) <-> index i*n_t + j. The encoding is fixed so witnesses
// serialize identically everywhere.
inline std::size_t pair_encode(std::size_t j_count, std::size_t i, std::size_t j) {
  return i * j_count + j;
}
inline std::size_t pair_first(std::size_t j_count, std::size_t p) { return p / j_count; }
inline std::size_t pair_second(std::size_t j_count, std::size_t p) { return p % j_count; }

inline Semigroup direct_product(Semigroup const& s, Semigroup const& t,
                                std::size_t max_size = kMaxSemigroupSize) {
  std::size_t n = s.n * t.n;
  if (n > max_size) throw std::length_error("direct product exceeds size cap");
  Semigroup p;
  p.n = n;
  p.name = (s.name.empty() ? "?" : s.name) + " x " + (t.name.empty() ? "?" : t.name);
  p.table.resize(n * n);
  for (std::size_t i1 = 0; i1 < s.n; ++i1)
    for (std::size_t j1 = 0; j1 < t.n; ++j1)
      for (std::size_t i2 = 0; i2 < s.n; ++i2)
        for (std::size_t j2 = 0; j2 < t.n; ++j2) {
          std::size_t a = pair_encode(t.n, i1, j1);
          std::size_t b = pair_encode(t.n, i2, j2);
          p.table[a * n + b] =
              static_cast<elem_t>(pair_encode(t.n, s.at(i1, i2), t.at(j1, j2)));
        }
  return p;
}

// Product set A x B inside the product semigroup's index space.
inline ElemSet product_set(Semigroup const& s, Semigroup const& t, ElemSet const& a,
                           ElemSet const& b) {
  ElemSet ab(s.n * t.n);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (a.contains(static_cast<elem_t>(i)) && b.contains(static_cast<elem_t>(j)))
        ab.insert(static_cast<elem_t>(pair_encode(t.n, i, j)));
  return ab;
}

namespace detail {

inline Semigroup table_semigroup(std::size_t n, std::string name) {
  Semigroup s;
  s.n = n;
  s.name = std::move(name);
  s.table.assign(n * n, 0);
  return s;
}

}  // namespace detail

inline Semigroup make_trivial() {
  return detail::table_semigroup(1, "trivial");
}

// Addition mod n.
inline Semigroup make_cyclic(std::size_t n) {
  if (n < 1 || n > kMaxSemigroupSize) throw std::invalid_argument("cyclic: n out of range");
  auto s = detail::table_semigroup(n, "cyclic(" + std::to_string(n) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = static_cast<elem_t>((x + y) % n);
  return s;
}

inline Semigroup make_left_zero(std::size_t n) {
  if (n < 1 || n > kMaxSemigroupSize) throw std::invalid_argument("left_zero: n out of range");
  auto s = detail::table_semigroup(n, "left_zero(" + std::to_string(n) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = static_cast<elem_t>(x);
  return s;
}

inline Semigroup make_right_zero(std::size_t n) {
  if (n < 1 || n > kMaxSemigroupSize) throw std::invalid_argument("right_zero: n out of range");
  auto s = detail::table_semigroup(n, "right_zero(" + std::to_string(n) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = static_cast<elem_t>(y);
  return s;
}

// Multiplication mod n.
inline Semigroup make_mod_mult(std::size_t n) {
  if (n < 1 || n > kMaxSemigroupSize) throw std::invalid_argument("mod_mult: n out of range");
  auto s = detail::table_semigroup(n, "mod_mult(" + std::to_string(n) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.table[x * n + y] = static_cast<elem_t>((x * y) % n);
  return s;
}

// All self-maps of a d-point set under composition, applied left to right:
// (f*g)(x) = g(f(x)). Map f is encoded as sum of f(i)*d^i.
inline Semigroup make_full_transformation(std::size_t d) {
  if (d < 1 || d > 3) throw std::invalid_argument("full_transformation: d must be 1..3");
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= d;
  auto decode = [d](std::size_t code, std::size_t x) {
    for (std::size_t i = 0; i < x; ++i) code /= d;
    return code % d;
  };
  auto s = detail::table_semigroup(n, "full_transformation(" + std::to_string(d) + ")");
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t code = 0, pow = 1;
      for (std::size_t x = 0; x < d; ++x) {
        code += decode(g, decode(f, x)) * pow;
        pow *= d;
      }
      s.table[f * n + g] = static_cast<elem_t>(code);
    }
  return s;
}

inline Semigroup generate_family(std::string const& family, std::size_t param) {
  if (family == "trivial") return make_trivial();
  if (family == "cyclic") return make_cyclic(param);
  if (family == "left_zero") return make_left_zero(param);
  if (family == "right_zero") return make_right_zero(param);
  if (family == "mod_mult") return make_mod_mult(param);
  if (family == "full_transformation") return make_full_transformation(param);
  throw std::invalid_argument("unknown semigroup family: " + family);
}

}  // namespace crs
