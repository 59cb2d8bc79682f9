// oracles.hpp -- independent brute-force reference implementations used only
// by the test and acceptance suites. These deliberately traverse their search
// spaces in a different order from the library and share none of its
// enumeration code, so agreement is meaningful.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crs/crcore.hpp"
#include "crs/finset.hpp"
#include "crs/semigroup.hpp"

namespace crs::oracle {

inline bool witness_key_less(CrWitness const& x, CrWitness const& y) {
  if (x.m != y.m) return x.m < y.m;
  if (x.t != y.t) return x.t < y.t;
  return x.a < y.a;
}

// Full scan of every candidate: t ranges over bitmasks in descending numeric
// order, words are decoded with a(1) as the LEAST significant digit (the
// reverse of the implementation's order). Keeps the least candidate under the
// canonical (m, t, a) key; no early exit, no shared enumeration code.
inline std::optional<CrWitness> naive_find_witness(Semigroup const& s, ElemSet const& a_set,
                                                   FunFamily const& fam, unsigned r) {
  std::optional<CrWitness> best;
  for (std::uint64_t mask = (std::uint64_t{1} << r); mask-- > 1;) {
    std::vector<unsigned> t;
    for (unsigned i = 0; i < r; ++i)
      if (mask & (std::uint64_t{1} << i)) t.push_back(i + 1);
    std::size_t m = t.size();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j <= m; ++j) total *= s.n;
    for (std::uint64_t code = total; code-- > 0;) {
      word_t a(m + 1);
      std::uint64_t c = code;
      for (std::size_t j = 0; j <= m; ++j) {
        a[j] = static_cast<elem_t>(c % s.n);
        c /= s.n;
      }
      bool all = true;
      for (auto const& f : fam.funs)
        if (!a_set.contains(evaluate_interleaved(s, a, f, t))) {
          all = false;
          break;
        }
      if (all) {
        CrWitness w{m, a, t};
        if (!best || witness_key_less(w, *best)) best = w;
      }
    }
  }
  return best;
}

// Count of r-block systems inside {1..n} by the interval recursion: a block
// with max element M inside {lo..n} can be any of 2^(M-lo) subsets, and the
// rest of the system lives in {M+1..n}.
inline std::uint64_t count_systems_rec(unsigned r, unsigned lo, unsigned n) {
  if (r == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned m = lo; m + (r - 1) <= n; ++m)
    total += (std::uint64_t{1} << (m - lo)) * count_systems_rec(r - 1, m + 1, n);
  return total;
}

inline std::uint64_t count_systems(unsigned r, unsigned n) {
  if (r < 1 || r > n) return 0;
  return count_systems_rec(r, 1, n);
}

// All associative tables on {0..count-1}, found by scanning every table.
inline std::vector<Semigroup> all_semigroups(std::size_t count) {
  std::vector<Semigroup> out;
  std::size_t cells = count * count;
  std::uint64_t tables = 1;
  for (std::size_t i = 0; i < cells; ++i) tables *= count;
  for (std::uint64_t code = 0; code < tables; ++code) {
    Semigroup s;
    s.n = count;
    s.table.resize(cells);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      s.table[i] = static_cast<elem_t>(c % count);
      c /= count;
    }
    if (validate(s).ok()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace crs::oracle
