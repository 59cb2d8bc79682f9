// crcore.hpp -- the combinatorial-richness calculus: interleaved products,
// witness search, the per-k quantifier check with its r(A,k) threshold, and
// the family-indexed theta sets.
//
// Sequences N -> S are finite tables plus a default value read at every
// position past the table; each operation below only reads finitely many
// positions, which is what makes the finite representation faithful.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crs/finset.hpp"
#include "crs/parallel.hpp"
#include "crs/semigroup.hpp"

namespace crs {

struct ExecPolicy {
  unsigned jobs = 1;
  std::uint64_t max_cost = 1'000'000'000;  // abstract search-node budget
};

struct cost_guard_error : std::runtime_error {
  std::uint64_t estimate;
  std::uint64_t limit;
  cost_guard_error(std::uint64_t est, std::uint64_t lim)
      : std::runtime_error("search refused: estimated cost " + std::to_string(est) +
                           " exceeds budget " + std::to_string(lim)),
        estimate(est),
        limit(lim) {}
};

// f(pos) for pos >= 1; table positions first, the default after.
struct SeqFun {
  std::vector<elem_t> values;
  elem_t def = 0;

  elem_t at(std::size_t pos) const {
    if (pos == 0) throw std::out_of_range("sequence positions start at 1");
    return pos <= values.size() ? values[pos - 1] : def;
  }
  std::size_t table_size() const { return values.size(); }

  friend bool operator==(SeqFun const&, SeqFun const&) = default;
};

// Nonempty set of sequences over a common ambient semigroup, deduplicated on
// the restriction to {1..r_max}.
struct FunFamily {
  std::vector<SeqFun> funs;
  std::size_t r_max = 0;

  std::size_t size() const { return funs.size(); }
};

inline FunFamily make_family(std::vector<SeqFun> funs, std::size_t r_max) {
  if (funs.empty()) throw std::invalid_argument("function family must be nonempty");
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  for (auto& f : funs) {
    std::vector<elem_t> v(r_max);
    for (std::size_t p = 1; p <= r_max; ++p) v[p - 1] = f.at(p);
    f.values = std::move(v);
  }
  std::vector<SeqFun> dedup;
  for (auto& f : funs) {
    bool seen = false;
    for (auto const& g : dedup)
      if (g.values == f.values) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(std::move(f));
  }
  return FunFamily{std::move(dedup), r_max};
}

// The existential object of the richness definition: a word a of length m+1
// and indices t(1) < ... < t(m).
struct CrWitness {
  std::size_t m = 0;
  word_t a;                 // m+1 elements
  std::vector<unsigned> t;  // strictly increasing, 1-based

  friend bool operator==(CrWitness const&, CrWitness const&) = default;
};

inline void check_witness_shape(CrWitness const& w) {
  if (w.m < 1) throw std::invalid_argument("witness needs m >= 1");
  if (w.a.size() != w.m + 1) throw std::invalid_argument("witness word must have m+1 elements");
  if (w.t.size() != w.m) throw std::invalid_argument("witness needs m indices");
  for (std::size_t i = 0; i < w.t.size(); ++i) {
    if (w.t[i] < 1) throw std::invalid_argument("witness indices are 1-based");
    if (i > 0 && w.t[i - 1] >= w.t[i])
      throw std::invalid_argument("witness indices must be strictly increasing");
  }
}

// a(1) * f(t(1)) * a(2) * ... * a(m) * f(t(m)) * a(m+1)
inline elem_t evaluate_interleaved(Semigroup const& s, word_t const& a, SeqFun const& f,
                                   std::vector<unsigned> const& t) {
  if (a.size() != t.size() + 1) throw std::invalid_argument("need |a| = |t| + 1");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] >= t[i]) throw std::invalid_argument("t must be strictly increasing");
  elem_t acc = a[0];
  if (acc >= s.n) throw std::out_of_range("element index out of range");
  for (std::size_t j = 0; j < t.size(); ++j) {
    acc = multiply(s, acc, f.at(t[j]));
    acc = multiply(s, acc, a[j + 1]);
  }
  return acc;
}

struct WitnessCheck {
  bool ok = true;
  std::size_t failing_fun = 0;  // index into the family when !ok
};

inline WitnessCheck verify_witness(Semigroup const& s, ElemSet const& a_set,
                                   FunFamily const& fam, CrWitness const& w) {
  check_witness_shape(w);
  for (std::size_t i = 0; i < fam.funs.size(); ++i)
    if (!a_set.contains(evaluate_interleaved(s, w.a, fam.funs[i], w.t))) return {false, i};
  return {};
}

namespace detail {

inline bool next_combination(std::vector<unsigned>& c, unsigned limit) {
  // increasing tuples over {1..limit}, lexicographic
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < limit - (k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline bool next_word(word_t& a, std::size_t s_n) {
  // lexicographic odometer, a[0] most significant
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] + 1u < s_n) {
      ++a[i];
      for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = 0;
      return true;
    }
  }
  return false;
}

// Least word a (lexicographic) putting every precomputed f-value row into
// a_set, or nullopt. rows[f][j] = f(t(j)).
inline std::optional<word_t> least_word_for(Semigroup const& s, ElemSet const& a_set,
                                            std::vector<std::vector<elem_t>> const& rows,
                                            std::size_t m) {
  word_t a(m + 1, 0);
  do {
    bool all = true;
    for (auto const& row : rows) {
      elem_t acc = a[0];
      for (std::size_t j = 0; j < m; ++j) {
        acc = s.at(acc, row[j]);
        acc = s.at(acc, a[j + 1]);
      }
      if (!a_set.contains(acc)) {
        all = false;
        break;
      }
    }
    if (all) return a;
  } while (next_word(a, s.n));
  return std::nullopt;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r = sat_mul(r, base);
  return r;
}

inline std::uint64_t sat_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

// Candidate words and index tuples for one witness search with bound r.
inline std::uint64_t witness_space(unsigned r, std::size_t s_n) {
  std::uint64_t total = 0;
  for (unsigned m = 1; m <= r; ++m)
    total = sat_add(total, sat_mul(sat_binom(r, m), sat_pow(s_n, m + 1)));
  return total;
}

inline void check_family_range(Semigroup const& s, FunFamily const& fam) {
  for (auto const& f : fam.funs) {
    if (f.def >= s.n) throw std::invalid_argument("sequence value out of ambient range");
    for (elem_t v : f.values)
      if (v >= s.n) throw std::invalid_argument("sequence value out of ambient range");
  }
}

}  // namespace detail

// Canonically least witness with t(m) <= r: ordered by m, then t
// lexicographic, then a lexicographic. m <= r is forced by the increasing t.
inline std::optional<CrWitness> find_witness(Semigroup const& s, ElemSet const& a_set,
                                             FunFamily const& fam, unsigned r) {
  if (r < 1) throw std::invalid_argument("bound r must be >= 1");
  if (a_set.bits.size() != s.n) throw std::invalid_argument("element set / semigroup mismatch");
  detail::check_family_range(s, fam);
  if (a_set.empty()) return std::nullopt;
  std::vector<std::vector<elem_t>> rows(fam.funs.size());
  for (unsigned m = 1; m <= r; ++m) {
    std::vector<unsigned> t(m);
    for (unsigned i = 0; i < m; ++i) t[i] = i + 1;
    do {
      for (std::size_t fi = 0; fi < fam.funs.size(); ++fi) {
        rows[fi].resize(m);
        for (unsigned j = 0; j < m; ++j) rows[fi][j] = fam.funs[fi].at(t[j]);
      }
      if (auto a = detail::least_word_for(s, a_set, rows, m))
        return CrWitness{m, std::move(*a), t};
    } while (detail::next_combination(t, r));
  }
  return std::nullopt;
}

struct CrCheck {
  bool ok = true;
  std::vector<SeqFun> counterexample;  // family admitting no witness when !ok
};

namespace detail {

inline SeqFun nth_function(std::uint64_t idx, unsigned r, std::size_t s_n) {
  // lexicographic by values on 1..r, f(1) most significant
  SeqFun f;
  f.values.assign(r, 0);
  for (unsigned p = r; p-- > 0;) {
    f.values[p] = static_cast<elem_t>(idx % s_n);
    idx /= s_n;
  }
  return f;
}

// Visit the ascending k-tuples from {0..num-1} whose first coordinate is i1,
// in lexicographic order. The visitor returns false to stop; the function
// returns false iff stopped.
template <class Visit>
bool combos_with_first(std::uint64_t num, std::uint64_t k, std::uint64_t i1, Visit&& visit) {
  std::vector<std::uint64_t> idx(k);
  idx[0] = i1;
  for (std::uint64_t j = 1; j < k; ++j) idx[j] = i1 + j;
  if (idx[k - 1] >= num) return true;
  for (;;) {
    if (!visit(static_cast<std::vector<std::uint64_t> const&>(idx))) return false;
    std::uint64_t j = k;
    bool advanced = false;
    while (j-- > 1) {
      if (idx[j] < num - (k - j)) {
        ++idx[j];
        for (std::uint64_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;
  }
}

}  // namespace detail

// Every family of size exactly k over {1..r} must admit a witness; smaller
// families are covered by supersets, so only size-k ones are enumerated.
// Parallel workers split on the family's first function; the reported
// counterexample is the lexicographically least regardless of schedule.
inline CrCheck check_cr_at(Semigroup const& s, ElemSet const& a_set, unsigned k, unsigned r,
                           ExecPolicy const& pol = {}) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::uint64_t num_fns = detail::sat_pow(s.n, r);
  std::uint64_t k_eff = std::min<std::uint64_t>(k, num_fns);

  if (a_set.empty()) {
    // nothing can land in an empty target: the first family refutes richness
    std::vector<SeqFun> fam;
    for (std::uint64_t i = 0; i < k_eff; ++i)
      fam.push_back(detail::nth_function(i, r, s.n));
    return {false, std::move(fam)};
  }

  std::uint64_t estimate = detail::sat_mul(detail::sat_binom(num_fns, k_eff),
                                           detail::witness_space(r, s.n));
  if (estimate > pol.max_cost) throw cost_guard_error(estimate, pol.max_cost);

  std::uint64_t first_max = num_fns - k_eff + 1;
  std::vector<std::vector<std::uint64_t>> hits(first_max);
  auto stripe_fails = [&](std::uint64_t i1) {
    // scan families whose least function index is i1, in lexicographic order
    return !detail::combos_with_first(
        num_fns, k_eff, i1, [&](std::vector<std::uint64_t> const& idx) {
          std::vector<SeqFun> funs(k_eff);
          for (std::uint64_t j = 0; j < k_eff; ++j)
            funs[j] = detail::nth_function(idx[j], r, s.n);
          FunFamily fam{std::move(funs), r};
          if (!find_witness(s, a_set, fam, r)) {
            hits[i1] = idx;
            return false;
          }
          return true;
        });
  };
  auto bad = first_index_where(first_max, pol.jobs, stripe_fails);
  if (!bad) return {};
  std::vector<SeqFun> fam;
  for (std::uint64_t i : hits[*bad]) fam.push_back(detail::nth_function(i, r, s.n));
  return {false, std::move(fam)};
}

// Least r <= r_max at which the size-k quantifier check passes.
inline std::optional<unsigned> find_r(Semigroup const& s, ElemSet const& a_set, unsigned k,
                                      unsigned r_max, ExecPolicy const& pol = {}) {
  for (unsigned r = 1; r <= r_max; ++r)
    if (check_cr_at(s, a_set, k, r, pol).ok) return r;
  return std::nullopt;
}

// Index sets L for which some word a realizes the interleaved product in the
// target simultaneously for all family members, with one stored witness each.
struct ThetaSet {
  unsigned domain_bound = 0;
  SetFamily family;               // canonical order
  std::vector<word_t> witnesses;  // aligned with family.sets

  std::optional<word_t> witness_for(finset_t l) const {
    auto it = std::lower_bound(family.sets.begin(), family.sets.end(), l, canonical_less);
    if (it == family.sets.end() || *it != l) return std::nullopt;
    return witnesses[static_cast<std::size_t>(it - family.sets.begin())];
  }
};

inline ThetaSet compute_theta(Semigroup const& s, ElemSet const& a_set, FunFamily const& fam,
                              unsigned n, ExecPolicy const& pol = {}) {
  if (n < 1 || n > 24) throw std::invalid_argument("theta domain bound out of 1..24");
  if (a_set.bits.size() != s.n) throw std::invalid_argument("element set / semigroup mismatch");
  detail::check_family_range(s, fam);
  std::uint64_t subset_count = (std::uint64_t{1} << n) - 1;
  std::uint64_t estimate = detail::sat_mul(
      detail::sat_mul(subset_count, detail::sat_pow(s.n, n + 1)),
      static_cast<std::uint64_t>(fam.funs.size()));
  if (estimate > pol.max_cost) throw cost_guard_error(estimate, pol.max_cost);

  std::vector<finset_t> masks;
  masks.reserve(subset_count);
  for (finset_t m = 1; m <= subset_count; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), canonical_less);

  std::vector<std::optional<word_t>> results(masks.size());
  for_each_index(masks.size(), pol.jobs, [&](std::uint64_t i) {
    auto members = set_members(masks[i]);
    std::size_t m = members.size();
    std::vector<std::vector<elem_t>> rows(fam.funs.size(), std::vector<elem_t>(m));
    for (std::size_t fi = 0; fi < fam.funs.size(); ++fi)
      for (std::size_t j = 0; j < m; ++j) rows[fi][j] = fam.funs[fi].at(members[j]);
    results[i] = detail::least_word_for(s, a_set, rows, m);
  });

  ThetaSet theta;
  theta.domain_bound = n;
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (results[i]) {
      theta.family.sets.push_back(masks[i]);
      theta.witnesses.push_back(std::move(*results[i]));
    }
  return theta;
}

}  // namespace crs
