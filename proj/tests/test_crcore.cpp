#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "crs/crcore.hpp"
#include "crs/oracles.hpp"

using namespace crs;

namespace {

SeqFun constant_fun(elem_t v, std::size_t len = 1) {
  return SeqFun{std::vector<elem_t>(len, v), v};
}

FunFamily fam_of(std::vector<SeqFun> funs, std::size_t r_max) {
  return make_family(std::move(funs), r_max);
}

}  // namespace

TEST_CASE("evaluate_interleaved") {
  auto triv = make_trivial();
  CHECK(evaluate_interleaved(triv, {0, 0}, constant_fun(0), {1}) == 0);

  auto lz = make_left_zero(3);
  for (elem_t first = 0; first < 3; ++first)
    CHECK(evaluate_interleaved(lz, {first, 1, 2}, constant_fun(2, 3), {1, 3}) == first);

  auto z3 = make_cyclic(3);
  CHECK(evaluate_interleaved(z3, {1, 2}, constant_fun(2), {1}) == 2);  // 1+2+2 mod 3

  CHECK_THROWS_AS(evaluate_interleaved(z3, {1}, constant_fun(0), {1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_interleaved(z3, {1, 2, 0}, constant_fun(0), {2, 2}),
                  std::invalid_argument);
}

TEST_CASE("verify_witness") {
  auto lz = make_left_zero(2);
  auto a_lz = ElemSet::of(2, {1});
  auto famlz = fam_of({constant_fun(0), constant_fun(1)}, 1);
  CHECK(verify_witness(lz, a_lz, famlz, CrWitness{1, {1, 0}, {1}}).ok);

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  CHECK(verify_witness(z2, zero, fam_of({constant_fun(1)}, 1), CrWitness{1, {1, 0}, {1}}).ok);

  auto parity = fam_of({constant_fun(0), constant_fun(1)}, 1);
  for (elem_t a1 = 0; a1 < 2; ++a1)
    for (elem_t a2 = 0; a2 < 2; ++a2) {
      auto res = verify_witness(z2, zero, parity, CrWitness{1, {a1, a2}, {1}});
      CHECK_FALSE(res.ok);  // the two products differ by 1, cannot both be 0
    }

  CHECK_THROWS_AS(verify_witness(z2, zero, parity, CrWitness{2, {0, 0}, {1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("find_witness canonical results") {
  auto triv = make_trivial();
  auto all = ElemSet::of(1, {0});
  auto w = find_witness(triv, all, fam_of({constant_fun(0)}, 1), 1);
  REQUIRE(w.has_value());
  CHECK(*w == CrWitness{1, {0, 0}, {1}});

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  auto parity = fam_of({constant_fun(0, 2), constant_fun(1, 2)}, 2);
  auto w2 = find_witness(z2, zero, parity, 2);
  REQUIRE(w2.has_value());
  CHECK(*w2 == CrWitness{2, {0, 0, 0}, {1, 2}});

  CHECK_FALSE(find_witness(z2, zero, parity, 1).has_value());
}

TEST_CASE("find_witness agrees with the naive oracle on small instances") {
  auto sweep = [](Semigroup const& s, unsigned r_hi) {
    std::vector<SeqFun> fns;
    unsigned num = 1;
    for (unsigned i = 0; i < r_hi; ++i) num *= static_cast<unsigned>(s.n);
    for (unsigned idx = 0; idx < num; ++idx)
      fns.push_back(detail::nth_function(idx, r_hi, s.n));
    for (std::uint64_t amask = 1; amask < (1ull << s.n); ++amask) {
      ElemSet a(s.n);
      for (std::size_t e = 0; e < s.n; ++e)
        if (amask & (1ull << e)) a.insert(static_cast<elem_t>(e));
      for (unsigned r = 1; r <= r_hi; ++r) {
        for (std::size_t i = 0; i < fns.size(); ++i) {
          for (std::size_t j = i; j < fns.size(); ++j) {
            std::vector<SeqFun> members{fns[i]};
            if (j != i) members.push_back(fns[j]);
            auto fam = make_family(members, r_hi);
            auto got = find_witness(s, a, fam, r);
            auto want = oracle::naive_find_witness(s, a, fam, r);
            CHECK(got.has_value() == want.has_value());
            if (got && want) CHECK(*got == *want);
          }
        }
      }
    }
  };
  sweep(make_cyclic(2), 2);
  sweep(make_left_zero(2), 2);
  sweep(make_mod_mult(3), 2);
}

TEST_CASE("check_cr_at") {
  auto triv = make_trivial();
  auto all = ElemSet::of(1, {0});
  for (unsigned k = 1; k <= 3; ++k) CHECK(check_cr_at(triv, all, k, 1).ok);

  auto lz = make_left_zero(3);
  for (std::uint64_t amask = 1; amask < 8; ++amask) {
    ElemSet a(3);
    for (std::size_t e = 0; e < 3; ++e)
      if (amask & (1ull << e)) a.insert(static_cast<elem_t>(e));
    for (unsigned k = 1; k <= 2; ++k) CHECK(check_cr_at(lz, a, k, 1).ok);
  }

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  auto res = check_cr_at(z2, zero, 2, 1);
  CHECK_FALSE(res.ok);
  REQUIRE(res.counterexample.size() == 2);
  CHECK(res.counterexample[0].values == std::vector<elem_t>{0});
  CHECK(res.counterexample[1].values == std::vector<elem_t>{1});
  CHECK(check_cr_at(z2, zero, 2, 2).ok);

  ElemSet empty(2);
  auto res2 = check_cr_at(z2, empty, 1, 1);
  CHECK_FALSE(res2.ok);  // nothing lands in an empty target
}

TEST_CASE("check_cr_at counterexample is schedule-independent") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  for (unsigned jobs : {1u, 2u, 4u}) {
    auto res = check_cr_at(z2, zero, 3, 2, ExecPolicy{jobs});
    CHECK_FALSE(res.ok);
    REQUIRE(res.counterexample.size() == 3);
    // least family of three distinct functions on {1,2} with no witness
    auto c0 = res.counterexample[0].values;
    auto c1 = res.counterexample[1].values;
    auto c2 = res.counterexample[2].values;
    CHECK(c0 == std::vector<elem_t>{0, 0});
    CHECK(c1 == std::vector<elem_t>{0, 1});
    CHECK(c2 == std::vector<elem_t>{1, 0});
  }
}

TEST_CASE("find_r ground truths") {
  auto triv = make_trivial();
  auto all = ElemSet::of(1, {0});
  CHECK(find_r(triv, all, 3, 4) == 1u);

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  CHECK(find_r(z2, zero, 1, 4) == 1u);
  CHECK(find_r(z2, zero, 2, 4) == 2u);
}

TEST_CASE("richness at r implies richness at r+1 (all tiny semigroups)") {
  auto tables = oracle::all_semigroups(2);
  CHECK(tables.size() == 8);  // the associative tables on two elements
  tables.push_back(make_trivial());
  for (auto const& s : tables) {
    for (std::uint64_t amask = 1; amask < (1ull << s.n); ++amask) {
      ElemSet a(s.n);
      for (std::size_t e = 0; e < s.n; ++e)
        if (amask & (1ull << e)) a.insert(static_cast<elem_t>(e));
      for (unsigned k = 1; k <= 2; ++k)
        for (unsigned r = 1; r <= 2; ++r)
          if (check_cr_at(s, a, k, r).ok) CHECK(check_cr_at(s, a, k, r + 1).ok);
    }
  }
}

TEST_CASE("witness monotonicity under subfamilies") {
  std::mt19937 rng(99);
  auto z3 = make_cyclic(3);
  auto a = ElemSet::of(3, {0, 1});
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<SeqFun> funs;
    std::uniform_int_distribution<int> cnt(2, 4);
    std::uniform_int_distribution<elem_t> el(0, 2);
    int c = cnt(rng);
    for (int i = 0; i < c; ++i) {
      SeqFun f;
      for (int p = 0; p < 3; ++p) f.values.push_back(el(rng));
      f.def = el(rng);
      funs.push_back(std::move(f));
    }
    auto fam = make_family(funs, 3);
    auto w = find_witness(z3, a, fam, 3);
    if (!w) continue;
    // every nonempty subfamily accepts the same witness
    for (std::uint64_t sub = 1; sub < (1ull << fam.size()); ++sub) {
      std::vector<SeqFun> part;
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (sub & (1ull << i)) part.push_back(fam.funs[i]);
      CHECK(verify_witness(z3, a, make_family(part, 3), *w).ok);
    }
  }
}

TEST_CASE("compute_theta examples") {
  auto lz = make_left_zero(2);
  auto a_lz = ElemSet::of(2, {1});
  auto theta_lz = compute_theta(lz, a_lz, fam_of({constant_fun(0, 3)}, 3), 3);
  CHECK(theta_lz.family.size() == 7);  // a(1) settles everything

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  auto parity = fam_of({constant_fun(0, 3), constant_fun(1, 3)}, 3);
  auto theta = compute_theta(z2, zero, parity, 3);
  std::vector<finset_t> expect{set_from_members({1, 2}), set_from_members({1, 3}),
                               set_from_members({2, 3})};
  CHECK(theta.family.sets == expect);  // exactly the even-size index sets

  auto single = compute_theta(z2, zero, fam_of({constant_fun(1, 2)}, 2), 2);
  CHECK(single.family.size() == 3);  // one sequence is always correctable
}

TEST_CASE("theta members are witness-backed") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  auto parity = fam_of({constant_fun(0, 4), constant_fun(1, 4)}, 4);
  auto theta = compute_theta(z2, zero, parity, 4);
  REQUIRE(theta.family.size() == theta.witnesses.size());
  for (std::size_t i = 0; i < theta.family.size(); ++i) {
    auto members = set_members(theta.family.sets[i]);
    CrWitness w{members.size(), theta.witnesses[i], members};
    CHECK(verify_witness(z2, zero, parity, w).ok);
  }
}

TEST_CASE("theta is schedule-independent") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  auto parity = fam_of({constant_fun(0, 4), constant_fun(1, 4)}, 4);
  auto t1 = compute_theta(z2, zero, parity, 4, ExecPolicy{1});
  auto t4 = compute_theta(z2, zero, parity, 4, ExecPolicy{4});
  CHECK(t1.family.sets == t4.family.sets);
  CHECK(t1.witnesses == t4.witnesses);
}

TEST_CASE("cost guard refuses oversized searches") {
  auto t3 = make_full_transformation(3);  // 27 elements
  ElemSet a(t3.n);
  a.insert(0);
  CHECK_THROWS_AS(check_cr_at(t3, a, 3, 6, ExecPolicy{1, 1000}), cost_guard_error);
  try {
    check_cr_at(t3, a, 3, 6, ExecPolicy{1, 1000});
  } catch (cost_guard_error const& e) {
    CHECK(e.estimate > e.limit);
  }
}
