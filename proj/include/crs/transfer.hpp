// transfer.hpp -- block compression: collapse each block of a system into a
// single value with a filler element, transport a short witness for the
// compressed family back to a long witness over the original positions, and
// check that every theta set meets every bounded block system.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crs/crcore.hpp"
#include "crs/finset.hpp"
#include "crs/semigroup.hpp"

namespace crs {

// A valid block system plus the filler element used between in-block values.
struct CompressionPlan {
  BlockSeq blocks;
  elem_t filler = 0;
};

inline void check_plan(Semigroup const& s, CompressionPlan const& plan) {
  auto rep = validate_blockseq(plan.blocks);
  if (!rep.ok) throw std::invalid_argument("compression plan violates the max/min chain");
  if (plan.filler >= s.n) throw std::invalid_argument("filler element out of range");
}

// g(n) = f(b(n,1)) * d * f(b(n,2)) * d * ... * d * f(b(n,a_n)) for n up to the
// block count, and d past it. Singleton blocks collapse to a bare f value.
inline SeqFun derive_g(Semigroup const& s, SeqFun const& f, CompressionPlan const& plan) {
  check_plan(s, plan);
  SeqFun g;
  g.def = plan.filler;
  g.values.reserve(plan.blocks.size());
  for (finset_t block : plan.blocks) {
    word_t w;
    for (unsigned pos : set_members(block)) {
      if (!w.empty()) w.push_back(plan.filler);
      w.push_back(f.at(pos));
    }
    g.values.push_back(fold_word(s, w));
  }
  return g;
}

struct CompressedWitness {
  finset_t l_set = 0;  // union of the chosen blocks
  word_t c;            // |l_set| + 1 elements
};

// Expand a short witness (m, a, t) for the compressed family into the long
// word over the union of the chosen blocks: a(j) lands on each block's first
// position, the filler everywhere else, a(m+1) at the end.
inline CompressedWitness compress_witness(Semigroup const& s, CompressionPlan const& plan,
                                          CrWitness const& w_g) {
  check_plan(s, plan);
  check_witness_shape(w_g);
  if (w_g.t.back() > plan.blocks.size())
    throw std::invalid_argument("witness index exceeds the block count");
  for (elem_t x : w_g.a)
    if (x >= s.n) throw std::invalid_argument("witness element out of range");

  CompressedWitness out;
  for (std::size_t j = 0; j < w_g.m; ++j) {
    finset_t block = plan.blocks[w_g.t[j] - 1];
    out.l_set |= block;
    bool first = true;
    for ([[maybe_unused]] unsigned pos : set_members(block)) {
      out.c.push_back(first ? w_g.a[j] : plan.filler);
      first = false;
    }
  }
  out.c.push_back(w_g.a[w_g.m]);
  return out;
}

struct CompressionCheck {
  bool ok = true;
  std::size_t failing_fun = 0;
};

// The two evaluation routes must agree element-for-element: the long product
// over (c, f, positions of L) equals the short product over (a, g_f, t).
inline CompressionCheck verify_compression(Semigroup const& s, FunFamily const& fam,
                                           CompressionPlan const& plan, CrWitness const& w_g,
                                           CompressedWitness const& out) {
  if (out.c.size() != set_size(out.l_set) + 1)
    throw std::invalid_argument("compressed word length must be |L| + 1");
  auto positions = set_members(out.l_set);
  for (std::size_t i = 0; i < fam.funs.size(); ++i) {
    elem_t long_side = evaluate_interleaved(s, out.c, fam.funs[i], positions);
    SeqFun g = derive_g(s, fam.funs[i], plan);
    elem_t short_side = evaluate_interleaved(s, w_g.a, g, w_g.t);
    if (long_side != short_side) return {false, i};
  }
  return {};
}

struct Lemma1Result {
  bool ok = true;
  std::vector<SeqFun> family;  // counterexample family when !ok
  BlockSeq system;             // counterexample system when !ok
  std::string detail;          // which route failed
};

struct Lemma1Options {
  bool constructive = false;  // also rebuild each hit through the compression route
  elem_t filler = 0;
  ExecPolicy policy;
};

// For every size-k family over {1..n} and every r-block system inside {1..n},
// the family's theta set must meet the system's finite unions. The
// constructive route additionally finds a short witness for the compressed
// family, expands it, and confirms the expansion lands in theta and in the
// target set.
inline Lemma1Result lemma1_check(Semigroup const& s, ElemSet const& a_set, unsigned k,
                                 unsigned r, unsigned n, Lemma1Options const& opts = {}) {
  if (k < 1 || r < 1) throw std::invalid_argument("k and r must be >= 1");
  if (n < 1 || n > 20) throw std::invalid_argument("universe bound out of 1..20");
  if (a_set.bits.size() != s.n) throw std::invalid_argument("element set / semigroup mismatch");
  if (opts.filler >= s.n) throw std::invalid_argument("filler element out of range");

  std::uint64_t num_fns = detail::sat_pow(s.n, n);
  std::uint64_t k_eff = std::min<std::uint64_t>(k, num_fns);
  std::uint64_t subset_count = (std::uint64_t{1} << n) - 1;
  std::uint64_t theta_cost = detail::sat_mul(detail::sat_mul(subset_count,
                                                             detail::sat_pow(s.n, n + 1)),
                                             k_eff);
  std::uint64_t sys_cost = detail::sat_mul(detail::sat_pow(subset_count, r),
                                           std::uint64_t{1} << r);
  std::uint64_t estimate = detail::sat_mul(detail::sat_binom(num_fns, k_eff),
                                           detail::sat_add(theta_cost, sys_cost));
  if (estimate > opts.policy.max_cost) throw cost_guard_error(estimate, opts.policy.max_cost);

  std::uint64_t first_max = num_fns >= k_eff ? num_fns - k_eff + 1 : 0;
  std::vector<Lemma1Result> hits(first_max);
  ExecPolicy inner{1, opts.policy.max_cost};

  auto stripe_fails = [&](std::uint64_t i1) {
    return !detail::combos_with_first(
        num_fns, k_eff, i1, [&](std::vector<std::uint64_t> const& idx) {
          std::vector<SeqFun> funs(k_eff);
          for (std::uint64_t j = 0; j < k_eff; ++j)
            funs[j] = detail::nth_function(idx[j], n, s.n);
          FunFamily fam{funs, n};
          ThetaSet theta = compute_theta(s, a_set, fam, n, inner);
          detail::MaskLookup in_theta(theta.family, n);

          bool all_ok = true;
          Lemma1Result fail;
          enumerate_blockseqs(r, n, [&](BlockSeq const& b) {
            if (!detail::fu_meets(b, in_theta)) {
              fail = {false, funs, b, "theta misses the system's finite unions"};
              all_ok = false;
              return false;
            }
            if (opts.constructive) {
              CompressionPlan plan{b, opts.filler};
              std::vector<SeqFun> gs;
              gs.reserve(funs.size());
              for (auto const& f : funs) gs.push_back(derive_g(s, f, plan));
              FunFamily g_fam = make_family(std::move(gs), r);
              auto w_g = find_witness(s, a_set, g_fam, r);
              if (!w_g) {
                fail = {false, funs, b, "no short witness for the compressed family"};
                all_ok = false;
                return false;
              }
              auto lw = compress_witness(s, plan, *w_g);
              if (!in_theta(lw.l_set)) {
                fail = {false, funs, b, "expanded index set missing from theta"};
                all_ok = false;
                return false;
              }
              CrWitness long_w{set_size(lw.l_set), lw.c, set_members(lw.l_set)};
              if (!verify_witness(s, a_set, fam, long_w).ok) {
                fail = {false, funs, b, "expanded witness does not land in the target"};
                all_ok = false;
                return false;
              }
              if (!verify_compression(s, fam, plan, *w_g, lw).ok) {
                fail = {false, funs, b, "compression identity violated"};
                all_ok = false;
                return false;
              }
            }
            return true;
          });
          if (!all_ok) {
            hits[i1] = std::move(fail);
            return false;
          }
          return true;
        });
  };
  auto bad = first_index_where(first_max, opts.policy.jobs, stripe_fails);
  if (!bad) return {};
  return hits[*bad];
}

}  // namespace crs
