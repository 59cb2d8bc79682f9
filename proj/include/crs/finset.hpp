// finset.hpp -- nonempty finite subsets of {1..n} as 64-bit masks, block
// sequences, finite-union families, and the bounded IP_r-star check.
//
// Member i of a FinSet is bit (i-1) of the mask; the universe bound is 64.
// Families are kept in a fixed canonical order (max element, then size, then
// numeric mask value) so counterexamples and picks are reproducible.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "crs/parallel.hpp"

namespace crs {

using finset_t = std::uint64_t;  // nonempty; bit i-1 <=> member i

inline constexpr unsigned kMaxUniverse = 64;
inline constexpr unsigned kMaxFuBlocks = 20;
inline constexpr unsigned kDefaultEnumUniverse = 14;

inline unsigned set_min(finset_t s) { return static_cast<unsigned>(std::countr_zero(s)) + 1; }
inline unsigned set_max(finset_t s) { return 64 - static_cast<unsigned>(std::countl_zero(s)); }
inline unsigned set_size(finset_t s) { return static_cast<unsigned>(std::popcount(s)); }

inline finset_t set_from_members(std::vector<unsigned> const& members) {
  finset_t s = 0;
  for (unsigned m : members) {
    if (m < 1 || m > kMaxUniverse) throw std::invalid_argument("set member out of 1..64");
    s |= finset_t{1} << (m - 1);
  }
  if (s == 0) throw std::invalid_argument("finite set must be nonempty");
  return s;
}

inline std::vector<unsigned> set_members(finset_t s) {
  std::vector<unsigned> m;
  while (s) {
    m.push_back(static_cast<unsigned>(std::countr_zero(s)) + 1);
    s &= s - 1;
  }
  return m;
}

// Canonical order on finite sets: max element, then size, then mask value.
inline bool canonical_less(finset_t a, finset_t b) {
  unsigned ma = set_max(a), mb = set_max(b);
  if (ma != mb) return ma < mb;
  unsigned sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

// Deduplicated collection of finite sets in canonical order.
struct SetFamily {
  std::vector<finset_t> sets;

  bool contains(finset_t s) const {
    return std::binary_search(sets.begin(), sets.end(), s, canonical_less);
  }
  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
};

inline SetFamily make_family(std::vector<finset_t> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamily{std::move(sets)};
}

inline SetFamily intersect_families(SetFamily const& x, SetFamily const& y) {
  std::vector<finset_t> out;
  std::set_intersection(x.sets.begin(), x.sets.end(), y.sets.begin(), y.sets.end(),
                        std::back_inserter(out), canonical_less);
  return SetFamily{std::move(out)};
}

// All nonempty subsets of {1..n}, canonically ordered.
inline SetFamily full_family(unsigned n) {
  if (n < 1 || n > 24) throw std::invalid_argument("full_family: n out of 1..24");
  std::vector<finset_t> sets;
  sets.reserve((finset_t{1} << n) - 1);
  for (finset_t m = 1; m < (finset_t{1} << n); ++m) sets.push_back(m);
  std::sort(sets.begin(), sets.end(), canonical_less);
  return SetFamily{std::move(sets)};
}

// Ordered blocks <H_1..H_r> with max H_i < min H_{i+1}.
using BlockSeq = std::vector<finset_t>;

struct BlockSeqReport {
  bool ok = true;
  std::size_t violating_index = 0;  // index of the block undercutting its predecessor
};

inline BlockSeqReport validate_blockseq(BlockSeq const& b) {
  if (b.empty()) throw std::invalid_argument("block sequence must be nonempty");
  for (auto h : b)
    if (h == 0) throw std::invalid_argument("blocks must be nonempty sets");
  for (std::size_t i = 1; i < b.size(); ++i)
    if (set_max(b[i - 1]) >= set_min(b[i])) return {false, i};
  return {};
}

// All 2^r - 1 unions over nonempty subsets of the blocks. Blocks are disjoint
// (max/min chain), so the unions are pairwise distinct.
inline SetFamily fu_enumerate(BlockSeq const& b) {
  auto rep = validate_blockseq(b);
  if (!rep.ok) throw std::invalid_argument("block sequence violates the max/min chain");
  if (b.size() > kMaxFuBlocks) throw std::length_error("finite-union family too large (r > 20)");
  std::size_t r = b.size();
  std::vector<finset_t> unions(std::size_t{1} << r, 0);
  for (std::size_t k = 1; k < unions.size(); ++k) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(k));
    unions[k] = unions[k & (k - 1)] | b[low];
  }
  unions.erase(unions.begin());
  return make_family(std::move(unions));
}

namespace detail {

// Nonempty subsets of {lo..n} in canonical order (shared tail of the global
// canonical order restricted to masks above lo).
inline std::vector<finset_t> canonical_subsets(unsigned lo, unsigned n) {
  std::vector<finset_t> subs;
  if (lo > n) return subs;
  finset_t window = ((n >= 64 ? ~finset_t{0} : (finset_t{1} << n) - 1)) &
                    ~((finset_t{1} << (lo - 1)) - 1);
  // enumerate submasks of window, then canonically sort
  finset_t m = window;
  for (;;) {
    if (m) subs.push_back(m);
    if (m == 0) break;
    m = (m - 1) & window;
  }
  std::sort(subs.begin(), subs.end(), canonical_less);
  return subs;
}

template <class Visit>
bool blockseq_dfs(unsigned r, unsigned n, unsigned lo, BlockSeq& prefix, Visit&& visit) {
  if (r == 0) return visit(static_cast<BlockSeq const&>(prefix));
  if (lo > n || n - lo + 1 < r) return true;  // not enough room left
  for (finset_t h : canonical_subsets(lo, n)) {
    unsigned top = set_max(h);
    if (n - top < r - 1) continue;  // no room for the remaining blocks
    prefix.push_back(h);
    bool keep = blockseq_dfs(r - 1, n, top + 1, prefix, visit);
    prefix.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace detail

// Visits every block sequence of exactly r blocks inside {1..n}, each once,
// in canonical order (block by block, each block ranked canonically within
// its allowed window). visit returns false to stop early.
template <class Visit>
void enumerate_blockseqs(unsigned r, unsigned n, Visit&& visit) {
  if (r < 1) throw std::invalid_argument("block count must be >= 1");
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("universe bound out of 1..64");
  if (r > n) return;  // no system fits
  BlockSeq prefix;
  prefix.reserve(r);
  detail::blockseq_dfs(r, n, 1, prefix, visit);
}

inline std::vector<BlockSeq> collect_blockseqs(unsigned r, unsigned n) {
  std::vector<BlockSeq> out;
  enumerate_blockseqs(r, n, [&](BlockSeq const& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

inline std::uint64_t count_blockseqs(unsigned r, unsigned n) {
  std::uint64_t c = 0;
  enumerate_blockseqs(r, n, [&](BlockSeq const&) {
    ++c;
    return true;
  });
  return c;
}

// Closed-form count of r-block systems inside {1..n} (used for cost
// estimates): choose each block as a nonempty subset of the interval past the
// previous block's max; 2^(M-lo) subsets of {lo..M} have max exactly M.
inline std::uint64_t blockseq_count_dp(unsigned r, unsigned n) {
  if (r > n) return 0;
  std::vector<std::uint64_t> next(n + 2, 1), cur(n + 2, 0);
  auto sat_addc = [](std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  };
  for (unsigned depth = 1; depth <= r; ++depth) {
    for (unsigned lo = n + 1; lo >= 1; --lo) {
      std::uint64_t total = 0;
      std::uint64_t weight = 1;
      for (unsigned m = lo; m <= n; ++m) {
        std::uint64_t sub = next[m + 1];
        std::uint64_t term = (weight != 0 && sub > UINT64_MAX / weight) ? UINT64_MAX : weight * sub;
        total = sat_addc(total, term);
        weight = weight > UINT64_MAX / 2 ? UINT64_MAX : weight * 2;
      }
      cur[lo] = total;
    }
    cur[n + 1] = 0;
    next = cur;
  }
  return next[1];
}

struct IpStarResult {
  bool ok = true;
  BlockSeq counterexample;  // canonically first failing system when !ok
};

namespace detail {

// Membership probe for "some FU element lies in x", given the block masks.
template <class Member>
bool fu_meets(BlockSeq const& b, Member&& member) {
  std::size_t r = b.size();
  std::vector<finset_t> unions(std::size_t{1} << r, 0);
  for (std::size_t k = 1; k < unions.size(); ++k) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(k));
    unions[k] = unions[k & (k - 1)] | b[low];
    if (member(unions[k])) return true;
  }
  return false;
}

struct MaskLookup {
  std::vector<std::uint8_t> dense;  // used when the universe is small
  std::vector<finset_t> sorted;     // plain-value sorted fallback
  bool use_dense = false;

  explicit MaskLookup(SetFamily const& x, unsigned n) {
    if (n <= 24) {
      use_dense = true;
      dense.assign(std::size_t{1} << n, 0);
      for (finset_t s : x.sets) dense[s] = 1;
    } else {
      sorted = x.sets;
      std::sort(sorted.begin(), sorted.end());
    }
  }
  bool operator()(finset_t s) const {
    if (use_dense) return dense[s] != 0;
    return std::binary_search(sorted.begin(), sorted.end(), s);
  }
};

}  // namespace detail

// Does x intersect the finite-union family of every r-block system inside
// {1..n}? Parallel workers split on the first block; each subtree is
// contiguous in canonical order, so the least failing system is exact.
inline IpStarResult is_ip_r_star_within(SetFamily const& x, unsigned r, unsigned n,
                                        unsigned jobs = 1) {
  if (r < 1) throw std::invalid_argument("block count must be >= 1");
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("universe bound out of 1..64");
  if (r > n) return {};  // no systems: vacuously ok
  detail::MaskLookup member(x, n);

  auto first_blocks = detail::canonical_subsets(1, n);
  std::erase_if(first_blocks, [&](finset_t h) { return n - set_max(h) < r - 1; });

  std::vector<BlockSeq> found(first_blocks.size());
  auto fails_under = [&](std::uint64_t i) {
    BlockSeq prefix{first_blocks[i]};
    bool all_ok = detail::blockseq_dfs(r - 1, n, set_max(first_blocks[i]) + 1, prefix,
                                       [&](BlockSeq const& b) {
                                         if (!detail::fu_meets(b, member)) {
                                           found[i] = b;
                                           return false;
                                         }
                                         return true;
                                       });
    return !all_ok;
  };
  auto hit = first_index_where(first_blocks.size(), jobs, fails_under);
  if (!hit) return {};
  return {false, found[*hit]};
}

// Seeded sampled variant for universes too large to sweep. Each sample draws
// blocks left to right: block i is a uniformly random nonempty subset of
// {lo..n-(r-i)}, where lo is one past the previous block's max.
inline IpStarResult is_ip_r_star_sampled(SetFamily const& x, unsigned r, unsigned n,
                                         std::uint64_t samples, std::uint64_t seed) {
  if (r < 1 || n < 1 || n > kMaxUniverse) throw std::invalid_argument("bad ipstar bounds");
  if (r > n) return {};
  detail::MaskLookup member(x, n);
  std::mt19937_64 rng(seed);
  for (std::uint64_t it = 0; it < samples; ++it) {
    BlockSeq b;
    unsigned lo = 1;
    bool valid = true;
    for (unsigned i = 0; i < r; ++i) {
      unsigned hi = n - (r - 1 - i);
      if (lo > hi) {
        valid = false;
        break;
      }
      unsigned width = hi - lo + 1;
      finset_t full = width >= 64 ? ~finset_t{0} : (finset_t{1} << width) - 1;
      std::uniform_int_distribution<finset_t> dist(1, full);
      finset_t h = dist(rng) << (lo - 1);
      b.push_back(h);
      lo = set_max(h) + 1;
    }
    if (!valid) continue;
    if (!detail::fu_meets(b, member)) return {false, b};
  }
  return {};
}

}  // namespace crs
