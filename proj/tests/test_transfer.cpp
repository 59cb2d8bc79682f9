#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "crs/oracles.hpp"
#include "crs/transfer.hpp"

using namespace crs;

namespace {

finset_t fs(std::initializer_list<unsigned> members) {
  return set_from_members(std::vector<unsigned>(members));
}

SeqFun random_fun(std::mt19937& rng, std::size_t s_n, std::size_t len) {
  std::uniform_int_distribution<elem_t> el(0, static_cast<elem_t>(s_n - 1));
  SeqFun f;
  for (std::size_t i = 0; i < len; ++i) f.values.push_back(el(rng));
  f.def = el(rng);
  return f;
}

// random r-block system inside {1..hi}
BlockSeq random_blocks(std::mt19937& rng, unsigned r, unsigned hi) {
  BlockSeq b;
  unsigned lo = 1;
  for (unsigned i = 0; i < r; ++i) {
    unsigned room = hi - (r - 1 - i);
    std::uniform_int_distribution<unsigned> first(lo, room);
    unsigned start = first(rng);
    std::vector<unsigned> members{start};
    for (unsigned m = start + 1; m <= room && rng() % 2; ++m) members.push_back(m);
    b.push_back(set_from_members(members));
    lo = set_max(b.back()) + 1;
  }
  return b;
}

CrWitness random_witness(std::mt19937& rng, unsigned r, std::size_t s_n) {
  std::uniform_int_distribution<unsigned> md(1, r);
  unsigned m = md(rng);
  std::vector<unsigned> pool(r);
  for (unsigned i = 0; i < r; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<unsigned> t(pool.begin(), pool.begin() + m);
  std::sort(t.begin(), t.end());
  std::uniform_int_distribution<elem_t> el(0, static_cast<elem_t>(s_n - 1));
  word_t a(m + 1);
  for (auto& x : a) x = el(rng);
  return CrWitness{m, std::move(a), std::move(t)};
}

}  // namespace

TEST_CASE("derive_g") {
  auto z2 = make_cyclic(2);

  // singleton blocks: g is f sampled at the block positions, no filler used
  SeqFun f{{1, 0, 1, 0}, 0};
  CompressionPlan singles{{fs({2}), fs({4})}, 1};
  auto g1 = derive_g(z2, f, singles);
  CHECK(g1.values == std::vector<elem_t>{0, 0});
  CHECK(g1.def == 1);

  // paired blocks with filler 0: g(n) = f(2n-1) + f(2n)
  SeqFun ones{{1, 1, 1, 1}, 1};
  CompressionPlan pairs{{fs({1, 2}), fs({3, 4})}, 0};
  auto g2 = derive_g(z2, ones, pairs);
  CHECK(g2.values == std::vector<elem_t>{0, 0});  // 1+0+1 = 0 twice

  auto lz = make_left_zero(3);
  SeqFun fl{{2, 1, 0}, 0};
  CompressionPlan wide{{fs({1, 2, 3})}, 2};
  CHECK(derive_g(lz, fl, wide).values == std::vector<elem_t>{2});  // left-zero keeps f(b(n,1))
}

TEST_CASE("compress_witness shapes") {
  auto z2 = make_cyclic(2);

  // all-singleton blocks reproduce the witness verbatim
  CompressionPlan singles{{fs({1}), fs({2}), fs({3})}, 0};
  CrWitness w{2, {1, 0, 1}, {1, 3}};
  auto out = compress_witness(z2, singles, w);
  CHECK(out.l_set == fs({1, 3}));
  CHECK(out.c == word_t{1, 0, 1});

  // one interior filler slot per extra block member
  CompressionPlan pairs{{fs({1, 2}), fs({3, 4})}, 0};
  CrWitness w2{1, {1, 1}, {1}};
  auto out2 = compress_witness(z2, pairs, w2);
  CHECK(out2.l_set == fs({1, 2}));
  CHECK(out2.c == word_t{1, 0, 1});

  CHECK(set_size(out2.l_set) + 1 == out2.c.size());
  CHECK_THROWS_AS(compress_witness(z2, pairs, CrWitness{1, {0, 0}, {3}}),
                  std::invalid_argument);
}

TEST_CASE("compression identity on seeded random instances") {
  std::mt19937 rng(2024);
  std::vector<Semigroup> pool{make_trivial(),     make_cyclic(2),  make_cyclic(3),
                              make_cyclic(4),     make_left_zero(2), make_left_zero(4),
                              make_right_zero(3), make_mod_mult(4),  make_full_transformation(2)};
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto const& s = pool[iter % pool.size()];
    std::uniform_int_distribution<unsigned> rd(1, 3);
    unsigned r = rd(rng);
    auto blocks = random_blocks(rng, r, 8);
    std::uniform_int_distribution<int> fc(1, 3);
    std::vector<SeqFun> funs;
    for (int i = 0, c = fc(rng); i < c; ++i) funs.push_back(random_fun(rng, s.n, 8));
    auto fam = make_family(funs, 8);
    auto w = random_witness(rng, r, s.n);
    for (elem_t d = 0; d < s.n; ++d) {
      CompressionPlan plan{blocks, d};
      auto out = compress_witness(s, plan, w);
      CHECK(verify_compression(s, fam, plan, w, out).ok);
      ++checked;
      if (s.n > 2) break;  // sweep every filler only for the tiny semigroups
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("compression identity exhaustively on two-element semigroups") {
  for (auto const& s : oracle::all_semigroups(2)) {
    for (unsigned r = 1; r <= 2; ++r) {
      enumerate_blockseqs(r, 4, [&](BlockSeq const& blocks) {
        for (elem_t d = 0; d < 2; ++d) {
          CompressionPlan plan{blocks, d};
          for (unsigned fcode = 0; fcode < 16; ++fcode) {
            auto fam = make_family({detail::nth_function(fcode, 4, 2)}, 4);
            for (std::uint64_t tmask = 1; tmask < (1u << r); ++tmask) {
              std::vector<unsigned> t;
              for (unsigned i = 0; i < r; ++i)
                if (tmask & (1u << i)) t.push_back(i + 1);
              word_t a(t.size() + 1, 0);
              do {
                CrWitness w{t.size(), a, t};
                auto out = compress_witness(s, plan, w);
                CHECK(verify_compression(s, fam, plan, w, out).ok);
              } while (detail::next_word(a, 2));
            }
          }
        }
        return true;
      });
    }
  }
}

TEST_CASE("membership transfers from the compressed side to the long side") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  std::mt19937 rng(5);
  int transferred = 0;
  for (int iter = 0; iter < 200; ++iter) {
    unsigned r = 1 + iter % 3;
    auto blocks = random_blocks(rng, r, 8);
    std::vector<SeqFun> funs;
    for (int i = 0; i < 2; ++i) funs.push_back(random_fun(rng, 2, 8));
    auto fam = make_family(funs, 8);
    CompressionPlan plan{blocks, static_cast<elem_t>(iter % 2)};
    std::vector<SeqFun> gs;
    for (auto const& f : fam.funs) gs.push_back(derive_g(z2, f, plan));
    auto g_fam = make_family(gs, r);
    auto w_g = find_witness(z2, zero, g_fam, r);
    if (!w_g) continue;
    auto out = compress_witness(z2, plan, *w_g);
    CrWitness long_w{set_size(out.l_set), out.c, set_members(out.l_set)};
    CHECK(verify_witness(z2, zero, fam, long_w).ok);
    ++transferred;
  }
  CHECK(transferred > 50);
}

TEST_CASE("lemma1_check") {
  auto lz = make_left_zero(2);
  auto a_lz = ElemSet::of(2, {0});
  CHECK(lemma1_check(lz, a_lz, 2, 1, 4).ok);

  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  CHECK(lemma1_check(z2, zero, 2, 2, 4).ok);

  // r below the real threshold: the first failing family constrains position
  // 3 only, its theta is every set avoiding 3, and the system <{3}> misses it
  auto res = lemma1_check(z2, zero, 2, 1, 3);
  CHECK_FALSE(res.ok);
  REQUIRE(res.family.size() == 2);
  CHECK(res.family[0].values == std::vector<elem_t>{0, 0, 0});
  CHECK(res.family[1].values == std::vector<elem_t>{0, 0, 1});
  CHECK(res.system == BlockSeq{fs({3})});
}

TEST_CASE("lemma1_check constructive route") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  for (elem_t d = 0; d < 2; ++d) {
    Lemma1Options opts;
    opts.constructive = true;
    opts.filler = d;
    CHECK(lemma1_check(z2, zero, 2, 2, 3, opts).ok);
  }
  auto lz = make_left_zero(2);
  auto a_lz = ElemSet::of(2, {1});
  Lemma1Options opts;
  opts.constructive = true;
  CHECK(lemma1_check(lz, a_lz, 2, 1, 3, opts).ok);
}

TEST_CASE("lemma1_check passes at and above the threshold (tiny sweep)") {
  auto tables = oracle::all_semigroups(2);
  for (auto const& s : tables) {
    for (std::uint64_t amask = 1; amask < 4; ++amask) {
      ElemSet a(2);
      for (std::size_t e = 0; e < 2; ++e)
        if (amask & (1ull << e)) a.insert(static_cast<elem_t>(e));
      for (unsigned k = 1; k <= 2; ++k) {
        auto r = find_r(s, a, k, 3);
        if (!r) continue;
        for (unsigned n = 1; n <= 5; ++n) CHECK(lemma1_check(s, a, k, *r, n).ok);
        for (unsigned n = 1; n <= 4; ++n) CHECK(lemma1_check(s, a, k, *r + 1, n).ok);
      }
    }
  }
}

TEST_CASE("theta passes the star check at the richness threshold") {
  auto z2 = make_cyclic(2);
  auto zero = ElemSet::of(2, {0});
  unsigned k = 2;
  auto r = find_r(z2, zero, k, 4);
  REQUIRE(r == 2u);

  // worst family (the parity pair) for every bound up to 7
  for (unsigned n = 2; n <= 7; ++n) {
    auto parity = make_family({SeqFun{{}, 0}, SeqFun{{}, 1}}, n);
    auto theta = compute_theta(z2, zero, parity, n);
    CHECK(is_ip_r_star_within(theta.family, *r, n).ok);
  }

  // all size-2 families for small bounds
  for (unsigned n = 2; n <= 4; ++n) {
    unsigned num = 1u << n;
    for (unsigned i = 0; i < num; ++i)
      for (unsigned j = i + 1; j < num; ++j) {
        auto fam = make_family(
            {detail::nth_function(i, n, 2), detail::nth_function(j, n, 2)}, n);
        auto theta = compute_theta(z2, zero, fam, n);
        CHECK(is_ip_r_star_within(theta.family, *r, n).ok);
      }
  }
}
