// product.hpp -- richness witnesses in a direct product, assembled from the
// two factors' theta sets, plus an empirical lower-bound probe for the
// intersection constant of two star families.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crs/crcore.hpp"
#include "crs/finset.hpp"
#include "crs/semigroup.hpp"

namespace crs {

// Componentwise decoding of a family over s x t. Distinct functions can
// collapse after projection; the result is deduplicated.
inline FunFamily project_family(Semigroup const& s, Semigroup const& t, FunFamily const& fam,
                                int coord) {
  if (coord != 1 && coord != 2) throw std::invalid_argument("coordinate must be 1 or 2");
  std::size_t prod_n = s.n * t.n;
  std::vector<SeqFun> out;
  out.reserve(fam.funs.size());
  for (auto const& f : fam.funs) {
    SeqFun p;
    p.values.reserve(f.values.size());
    for (elem_t v : f.values) {
      if (v >= prod_n) throw std::invalid_argument("function value outside the product");
      p.values.push_back(static_cast<elem_t>(coord == 1 ? pair_first(t.n, v)
                                                        : pair_second(t.n, v)));
    }
    if (f.def >= prod_n) throw std::invalid_argument("function default outside the product");
    p.def = static_cast<elem_t>(coord == 1 ? pair_first(t.n, f.def)
                                           : pair_second(t.n, f.def));
    out.push_back(std::move(p));
  }
  return make_family(std::move(out), std::max<std::size_t>(fam.r_max, 1));
}

struct ProductAttempt {
  unsigned l = 0;
  std::size_t theta_a = 0, theta_b = 0, common = 0;
};

struct ProductWitnessResult {
  bool found = false;
  CrWitness witness;  // over the product's index encoding
  unsigned l_used = 0;
  unsigned r_a = 0, r_b = 0;
  std::vector<ProductAttempt> attempts;
  bool verified = false;        // product witness lands in A x B
  bool projections_ok = false;  // both coordinate witnesses land in their factors
  std::string diagnostic;       // why no witness was produced
};

struct ProductOptions {
  std::optional<unsigned> r_a_hint;  // skip the factor richness search when known
  std::optional<unsigned> r_b_hint;
  ExecPolicy policy;
};

namespace detail {

// Interleaved evaluation in s x t without materialising the product table.
inline std::pair<elem_t, elem_t> evaluate_in_product(Semigroup const& s, Semigroup const& t,
                                                     word_t const& c, SeqFun const& f,
                                                     std::vector<unsigned> const& pos) {
  elem_t acc_s = static_cast<elem_t>(pair_first(t.n, c[0]));
  elem_t acc_t = static_cast<elem_t>(pair_second(t.n, c[0]));
  for (std::size_t j = 0; j < pos.size(); ++j) {
    elem_t v = f.at(pos[j]);
    acc_s = s.at(acc_s, static_cast<elem_t>(pair_first(t.n, v)));
    acc_t = t.at(acc_t, static_cast<elem_t>(pair_second(t.n, v)));
    acc_s = s.at(acc_s, static_cast<elem_t>(pair_first(t.n, c[j + 1])));
    acc_t = t.at(acc_t, static_cast<elem_t>(pair_second(t.n, c[j + 1])));
  }
  return {acc_s, acc_t};
}

}  // namespace detail

// Search for a witness placing every family member's product in A x B: take
// both projected families' theta sets over {1..l}, pick the canonically least
// common index set, and zip its two stored words. l starts at the larger of
// the factors' thresholds and grows until l_max.
inline ProductWitnessResult product_witness(Semigroup const& s, ElemSet const& a,
                                            Semigroup const& t, ElemSet const& b,
                                            FunFamily const& fam, unsigned k, unsigned l_max,
                                            ProductOptions const& opts = {}) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  if (fam.size() > k) throw std::invalid_argument("family exceeds the size cap k");
  if (a.bits.size() != s.n || b.bits.size() != t.n)
    throw std::invalid_argument("element set / semigroup mismatch");
  if (a.empty() || b.empty())
    throw std::invalid_argument("target sets must be nonempty");

  ProductWitnessResult res;
  FunFamily g = project_family(s, t, fam, 1);
  FunFamily h = project_family(s, t, fam, 2);

  if (opts.r_a_hint) {
    res.r_a = *opts.r_a_hint;
  } else if (auto ra = find_r(s, a, k, l_max, opts.policy)) {
    res.r_a = *ra;
  } else {
    res.diagnostic = "first factor fails the richness check up to l_max";
    return res;
  }
  if (opts.r_b_hint) {
    res.r_b = *opts.r_b_hint;
  } else if (auto rb = find_r(t, b, k, l_max, opts.policy)) {
    res.r_b = *rb;
  } else {
    res.diagnostic = "second factor fails the richness check up to l_max";
    return res;
  }

  for (unsigned l = std::max(res.r_a, res.r_b); l <= l_max; ++l) {
    ThetaSet theta_a = compute_theta(s, a, g, l, opts.policy);
    ThetaSet theta_b = compute_theta(t, b, h, l, opts.policy);
    SetFamily common = intersect_families(theta_a.family, theta_b.family);
    res.attempts.push_back({l, theta_a.family.size(), theta_b.family.size(), common.size()});
    if (common.empty()) continue;

    finset_t l_set = common.sets.front();  // canonically least
    auto wa = theta_a.witness_for(l_set);
    auto wb = theta_b.witness_for(l_set);
    auto positions = set_members(l_set);
    std::size_t m = positions.size();

    word_t c(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
      c[j] = static_cast<elem_t>(pair_encode(t.n, (*wa)[j], (*wb)[j]));
    res.witness = CrWitness{m, std::move(c), positions};
    res.l_used = l;
    res.found = true;

    res.verified = true;
    res.projections_ok = true;
    for (auto const& f : fam.funs) {
      auto [xs, xt] = detail::evaluate_in_product(s, t, res.witness.a, f, positions);
      if (!a.contains(xs) || !b.contains(xt)) res.verified = false;
    }
    for (auto const& gf : g.funs)
      if (!a.contains(evaluate_interleaved(s, *wa, gf, positions))) res.projections_ok = false;
    for (auto const& hf : h.funs)
      if (!b.contains(evaluate_interleaved(t, *wb, hf, positions))) res.projections_ok = false;
    if (!res.verified)
      throw std::logic_error("product witness failed re-verification");
    return res;
  }

  bool theta_a_empty = !res.attempts.empty() && res.attempts.back().theta_a == 0;
  bool theta_b_empty = !res.attempts.empty() && res.attempts.back().theta_b == 0;
  if (theta_a_empty && theta_b_empty)
    res.diagnostic = "both theta sets stayed empty up to l_max";
  else if (theta_a_empty)
    res.diagnostic = "first factor's theta stayed empty up to l_max";
  else if (theta_b_empty)
    res.diagnostic = "second factor's theta stayed empty up to l_max";
  else
    res.diagnostic = "theta sets never intersected up to l_max";
  return res;
}

struct EstimateReport {
  unsigned u = 0, v = 0, n = 0;
  std::string mode;          // "exhaustive" | "sampled"
  std::string probed_class;  // which family class the probe ranged over
  std::uint64_t pairs = 0;
  unsigned l_lower_bound = 0;  // max over probed pairs of the least passing l
  bool exceeds_n = false;      // some probed pair passed at no l <= n
  SetFamily witness_x, witness_y;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

namespace detail {

// Least l <= n at which x is star-within-n, or nullopt.
inline std::optional<unsigned> least_star_level(SetFamily const& x, unsigned n) {
  for (unsigned l = 1; l <= n; ++l)
    if (is_ip_r_star_within(x, l, n).ok) return l;
  return std::nullopt;
}

}  // namespace detail

// Empirical lower bound for the intersection constant: over probed pairs
// (X, Y) with X star at u and Y star at v, the largest least-l of X intersect
// Y. Exhaustive mode ranges over suffixes of the canonical order (upward
// closed families); their star checks are monotone in the threshold, so the
// probe walks thresholds until the check first fails. Sampled mode draws the
// full family minus a uniform number of uniformly chosen sets.
inline EstimateReport estimate_l(unsigned u, unsigned v, unsigned n, bool sampled,
                                 std::uint64_t seed = 0, std::uint64_t samples = 64,
                                 ExecPolicy const& pol = {}) {
  if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("need 1 <= u, v <= n");
  if (n > 16) throw std::invalid_argument("universe bound out of 1..16");

  EstimateReport rep;
  rep.u = u;
  rep.v = v;
  rep.n = n;
  rep.seed = seed;

  std::uint64_t all_systems = 0;
  for (unsigned l = 1; l <= n; ++l)
    all_systems = detail::sat_add(all_systems,
                                  detail::sat_mul(blockseq_count_dp(l, n), 1ull << l));

  auto probe_pairs = [&](std::vector<SetFamily> const& xs, std::vector<SetFamily> const& ys) {
    unsigned best = 0;
    bool best_exceeds = false;
    for (auto const& x : xs)
      for (auto const& y : ys) {
        ++rep.pairs;
        SetFamily common = intersect_families(x, y);
        auto l = detail::least_star_level(common, n);
        bool exceeds = !l.has_value();
        unsigned level = l.value_or(n + 1);
        if ((exceeds && !best_exceeds) || (exceeds == best_exceeds && level > best)) {
          best = level;
          best_exceeds = exceeds;
          rep.witness_x = x;
          rep.witness_y = y;
        }
      }
    rep.l_lower_bound = best;
    rep.exceeds_n = best_exceeds;
  };

  if (!sampled) {
    rep.mode = "exhaustive";
    rep.probed_class = "canonical-suffix";
    SetFamily all = full_family(n);
    std::uint64_t estimate = detail::sat_mul(detail::sat_mul(all.size(), all.size() / 2 + 1),
                                             all_systems);
    if (estimate > pol.max_cost) throw cost_guard_error(estimate, pol.max_cost);
    auto passing_suffixes = [&](unsigned level) {
      std::vector<SetFamily> out;
      for (std::size_t j = 0; j + 1 <= all.size(); ++j) {
        SetFamily suffix{std::vector<finset_t>(all.sets.begin() + static_cast<long>(j),
                                               all.sets.end())};
        if (!is_ip_r_star_within(suffix, level, n, pol.jobs).ok) break;  // monotone in j
        out.push_back(std::move(suffix));
      }
      return out;
    };
    probe_pairs(passing_suffixes(u), passing_suffixes(v));
    return rep;
  }

  rep.mode = "sampled";
  rep.probed_class = "random-subfamily";
  rep.samples = samples;
  std::uint64_t estimate = detail::sat_mul(detail::sat_mul(samples, samples), all_systems);
  if (estimate > pol.max_cost) throw cost_guard_error(estimate, pol.max_cost);

  std::mt19937_64 rng(seed);
  SetFamily all = full_family(n);
  auto draw_passing = [&](unsigned level) {
    std::vector<SetFamily> out;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::vector<finset_t> sets = all.sets;
      std::uniform_int_distribution<std::size_t> qd(0, sets.size() - 1);
      std::size_t q = qd(rng);
      for (std::size_t drop = 0; drop < q; ++drop) {
        std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
        sets.erase(sets.begin() + static_cast<long>(pick(rng)));
      }
      SetFamily x{std::move(sets)};
      if (is_ip_r_star_within(x, level, n, pol.jobs).ok) out.push_back(std::move(x));
    }
    return out;
  };
  probe_pairs(draw_passing(u), draw_passing(v));
  return rep;
}

}  // namespace crs
