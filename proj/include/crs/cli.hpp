// cli.hpp -- the `crs` command surface. Every subcommand reads JSON files,
// writes one JSON document (stdout or -o), and signals its verdict through
// the exit code: 0 ok/verified, 1 refuted or nothing found, 2 malformed
// input, 3 refused by a size or cost guard.
//
// run_cli is in-process so tests can check byte-determinism directly.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crs/json_io.hpp"
#include "crs/product.hpp"
#include "crs/transfer.hpp"

namespace crs::cli {

inline constexpr unsigned kIpstarExhaustiveLimit = 14;

struct Common {
  unsigned jobs = 1;
  std::uint64_t max_cost = ExecPolicy{}.max_cost;
  std::uint64_t seed = 0;
  bool skip_validate = false;
  std::string format = "json";

  ExecPolicy policy() const { return {jobs, max_cost}; }
};

namespace detail {

inline void add_common(CLI::App& app, Common& c) {
  app.add_option("--jobs", c.jobs, "worker threads (results are schedule-independent)")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--max-cost", c.max_cost, "search-node budget before refusing");
  app.add_option("--seed", c.seed, "seed for any sampling");
  app.add_flag("--skip-validate", c.skip_validate, "accept semigroup tables unvalidated");
  app.add_option("--format", c.format, "output format (json only)");
}

inline void emit(json const& j, std::string const& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
}

inline Semigroup load_semigroup(std::string const& path, Common const& c) {
  Semigroup s = io::parse_semigroup(io::load_json_file(path));
  if (!c.skip_validate) {
    auto rep = validate(s);
    if (!rep.ok())
      throw std::invalid_argument(path + ": table fails validation (run `semigroup validate`"
                                         " for the violation, or pass --skip-validate)");
  }
  return s;
}

inline json witness_json(CrWitness const& w) {
  return json{{"m", w.m}, {"a", w.a}, {"t", w.t}};
}

inline json funs_json(std::vector<SeqFun> const& funs) {
  json fs = json::array();
  for (auto const& f : funs) fs.push_back(io::dump_fun(f));
  return fs;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorial richness toolkit for finite semigroups"};
  app.require_subcommand(1);
  Common common;
  detail::add_common(app, common);

  int exit_code = 0;
  auto refute = [&] { exit_code = 1; };

  // ---- semigroup ----
  auto* sgp = app.add_subcommand("semigroup", "Cayley-table utilities");
  sgp->require_subcommand(1);

  struct {
    std::string family, out;
    std::size_t param = 1;
  } gen_opt;
  auto* gen = sgp->add_subcommand("gen", "generate a named family instance");
  gen->add_option("family", gen_opt.family, "trivial|cyclic|left_zero|right_zero|mod_mult|full_transformation")
      ->required();
  gen->add_option("param", gen_opt.param, "size parameter");
  gen->add_option("-o,--output", gen_opt.out, "output path");
  gen->callback([&] {
    detail::emit(io::dump_semigroup(generate_family(gen_opt.family, gen_opt.param)),
                 gen_opt.out, out);
  });

  struct {
    std::string in, out;
  } val_opt;
  auto* val = sgp->add_subcommand("validate", "check closure and associativity");
  val->add_option("--in", val_opt.in, "semigroup file")->required();
  val->add_option("-o,--output", val_opt.out, "output path");
  val->callback([&] {
    Semigroup s = io::parse_semigroup(io::load_json_file(val_opt.in));
    auto rep = validate(s);
    json j{{"format", kFormatVersion}, {"n", s.n}, {"ok", rep.ok()}};
    if (!rep.ok()) {
      json v{{"x", rep.x}, {"y", rep.y}};
      if (rep.kind == ValidationReport::Kind::assoc) {
        v["kind"] = "associativity";
        v["z"] = rep.z;
      } else {
        v["kind"] = "closure";
      }
      j["violation"] = v;
      refute();
    }
    detail::emit(j, val_opt.out, out);
  });

  struct {
    std::string a, b, out;
  } prod_opt;
  auto* sprod = sgp->add_subcommand("product", "direct product of two tables");
  sprod->add_option("--a", prod_opt.a, "first factor file")->required();
  sprod->add_option("--b", prod_opt.b, "second factor file")->required();
  sprod->add_option("-o,--output", prod_opt.out, "output path");
  sprod->callback([&] {
    auto s = detail::load_semigroup(prod_opt.a, common);
    auto t = detail::load_semigroup(prod_opt.b, common);
    detail::emit(io::dump_semigroup(direct_product(s, t)), prod_opt.out, out);
  });

  // ---- fu ----
  struct {
    std::string blocks, out;
  } fu_opt;
  auto* fu = app.add_subcommand("fu", "finite unions of a block sequence");
  fu->add_option("--blocks", fu_opt.blocks, "blocks file")->required();
  fu->add_option("-o,--output", fu_opt.out, "output path");
  fu->callback([&] {
    json in = io::load_json_file(fu_opt.blocks);
    io::check_format(in, "blocks");
    if (!in.contains("blocks")) throw std::invalid_argument("blocks: missing \"blocks\"");
    BlockSeq b = io::parse_blocks(in["blocks"]);
    auto rep = validate_blockseq(b);
    if (!rep.ok)
      throw std::invalid_argument("block " + std::to_string(rep.violating_index) +
                                  " undercuts its predecessor");
    detail::emit(io::dump_family(fu_enumerate(b)), fu_opt.out, out);
  });

  // ---- ipstar ----
  struct {
    std::string family, out;
    unsigned r = 1, n = 1;
    std::uint64_t samples = 10000;
  } ip_opt;
  auto* ip = app.add_subcommand("ipstar", "does the family meet every r-block system?");
  ip->add_option("--family", ip_opt.family, "set family file")->required();
  ip->add_option("--r", ip_opt.r, "block count")->required();
  ip->add_option("--n", ip_opt.n, "universe bound")->required();
  ip->add_option("--samples", ip_opt.samples, "samples when the universe forces sampling");
  ip->add_option("-o,--output", ip_opt.out, "output path");
  ip->callback([&] {
    SetFamily x = io::parse_family(io::load_json_file(ip_opt.family));
    for (finset_t s : x.sets)
      if (set_max(s) > ip_opt.n)
        throw std::invalid_argument("family member exceeds the universe bound");
    json j{{"format", kFormatVersion}, {"r", ip_opt.r}, {"n", ip_opt.n}};
    IpStarResult res;
    if (ip_opt.n <= kIpstarExhaustiveLimit) {
      res = is_ip_r_star_within(x, ip_opt.r, ip_opt.n, common.jobs);
      j["mode"] = "exhaustive";
    } else {
      res = is_ip_r_star_sampled(x, ip_opt.r, ip_opt.n, ip_opt.samples, common.seed);
      j["mode"] = "sampled";
      j["samples"] = ip_opt.samples;
      j["seed"] = common.seed;
    }
    j["ok"] = res.ok;
    if (!res.ok) {
      j["counterexample"] = io::dump_blocks(res.counterexample);
      refute();
    }
    detail::emit(j, ip_opt.out, out);
  });

  // ---- cr ----
  auto* cr = app.add_subcommand("cr", "combinatorial richness checks");
  cr->require_subcommand(1);

  struct {
    std::string sgp, set, out;
    unsigned k = 1, r = 1;
  } crc_opt;
  auto* crc = cr->add_subcommand("check", "do all size-k families admit witnesses at r?");
  crc->add_option("--sgp", crc_opt.sgp, "semigroup file")->required();
  crc->add_option("--set", crc_opt.set, "target set file")->required();
  crc->add_option("--k", crc_opt.k, "family size cap")->required();
  crc->add_option("--r", crc_opt.r, "index bound")->required();
  crc->add_option("-o,--output", crc_opt.out, "output path");
  crc->callback([&] {
    auto s = detail::load_semigroup(crc_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(crc_opt.set), s.n);
    auto res = check_cr_at(s, a, crc_opt.k, crc_opt.r, common.policy());
    json j{{"format", kFormatVersion}, {"k", crc_opt.k}, {"r", crc_opt.r}, {"ok", res.ok}};
    if (!res.ok) {
      j["counterexample_funs"] = detail::funs_json(res.counterexample);
      refute();
    }
    detail::emit(j, crc_opt.out, out);
  });

  struct {
    std::string sgp, set, out;
    unsigned k = 1, r_max = 1;
  } fr_opt;
  auto* fr = cr->add_subcommand("find-r", "least index bound that works for k");
  fr->add_option("--sgp", fr_opt.sgp, "semigroup file")->required();
  fr->add_option("--set", fr_opt.set, "target set file")->required();
  fr->add_option("--k", fr_opt.k, "family size cap")->required();
  fr->add_option("--r-max", fr_opt.r_max, "give up past this bound")->required();
  fr->add_option("-o,--output", fr_opt.out, "output path");
  fr->callback([&] {
    auto s = detail::load_semigroup(fr_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(fr_opt.set), s.n);
    auto r = find_r(s, a, fr_opt.k, fr_opt.r_max, common.policy());
    json j{{"format", kFormatVersion}, {"k", fr_opt.k}, {"r_max", fr_opt.r_max}};
    j["r"] = r ? json(*r) : json(nullptr);
    if (!r) refute();
    detail::emit(j, fr_opt.out, out);
  });

  struct {
    std::string sgp, set, funs, out;
    unsigned r = 1;
  } wit_opt;
  auto* wit = cr->add_subcommand("witness", "canonically least witness for a family");
  wit->add_option("--sgp", wit_opt.sgp, "semigroup file")->required();
  wit->add_option("--set", wit_opt.set, "target set file")->required();
  wit->add_option("--funs", wit_opt.funs, "function family file")->required();
  wit->add_option("--r", wit_opt.r, "index bound")->required();
  wit->add_option("-o,--output", wit_opt.out, "output path");
  wit->callback([&] {
    auto s = detail::load_semigroup(wit_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(wit_opt.set), s.n);
    auto fam = io::parse_funs(io::load_json_file(wit_opt.funs), s.n, wit_opt.r);
    auto w = find_witness(s, a, fam, wit_opt.r);
    json j{{"format", kFormatVersion}, {"r", wit_opt.r}, {"found", w.has_value()}};
    if (w)
      j["witness"] = detail::witness_json(*w);
    else
      refute();
    detail::emit(j, wit_opt.out, out);
  });

  struct {
    std::string sgp, set, funs, witness, out;
  } cv_opt;
  auto* cvf = cr->add_subcommand("verify", "re-check a witness against a family");
  cvf->add_option("--sgp", cv_opt.sgp, "semigroup file")->required();
  cvf->add_option("--set", cv_opt.set, "target set file")->required();
  cvf->add_option("--funs", cv_opt.funs, "function family file")->required();
  cvf->add_option("--witness", cv_opt.witness, "witness file")->required();
  cvf->add_option("-o,--output", cv_opt.out, "output path");
  cvf->callback([&] {
    auto s = detail::load_semigroup(cv_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(cv_opt.set), s.n);
    auto w = io::parse_witness(io::load_json_file(cv_opt.witness));
    auto fam = io::parse_funs(io::load_json_file(cv_opt.funs), s.n, w.t.back());
    for (elem_t x : w.a)
      if (x >= s.n) throw std::invalid_argument("witness element out of range");
    auto res = verify_witness(s, a, fam, w);
    json j{{"format", kFormatVersion}, {"ok", res.ok}};
    if (!res.ok) {
      j["failing_fun"] = res.failing_fun;
      refute();
    }
    detail::emit(j, cv_opt.out, out);
  });

  // ---- theta ----
  auto* theta = app.add_subcommand("theta", "realizable index-set families");
  theta->require_subcommand(1);

  struct {
    std::string sgp, set, funs, out;
    unsigned n = 1;
  } th_opt;
  auto* thc = theta->add_subcommand("compute", "all realizable index sets up to n");
  thc->add_option("--sgp", th_opt.sgp, "semigroup file")->required();
  thc->add_option("--set", th_opt.set, "target set file")->required();
  thc->add_option("--funs", th_opt.funs, "function family file")->required();
  thc->add_option("--n", th_opt.n, "domain bound")->required();
  thc->add_option("-o,--output", th_opt.out, "output path");
  thc->callback([&] {
    auto s = detail::load_semigroup(th_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(th_opt.set), s.n);
    auto fam = io::parse_funs(io::load_json_file(th_opt.funs), s.n, th_opt.n);
    auto res = compute_theta(s, a, fam, th_opt.n, common.policy());
    json members = json::array(), witnesses = json::array();
    for (std::size_t i = 0; i < res.family.size(); ++i) {
      members.push_back(io::dump_finset(res.family.sets[i]));
      witnesses.push_back(res.witnesses[i]);
    }
    detail::emit(json{{"format", kFormatVersion},
                      {"n", th_opt.n},
                      {"members", members},
                      {"witnesses", witnesses}},
                 th_opt.out, out);
  });

  // ---- transfer ----
  auto* tr = app.add_subcommand("transfer", "block compression machinery");
  tr->require_subcommand(1);

  struct {
    std::string sgp, funs, plan, out;
  } dg_opt;
  auto* dg = tr->add_subcommand("derive-g", "compress each sequence through the blocks");
  dg->add_option("--sgp", dg_opt.sgp, "semigroup file")->required();
  dg->add_option("--funs", dg_opt.funs, "function family file")->required();
  dg->add_option("--plan", dg_opt.plan, "compression plan file")->required();
  dg->add_option("-o,--output", dg_opt.out, "output path");
  dg->callback([&] {
    auto s = detail::load_semigroup(dg_opt.sgp, common);
    auto plan = io::parse_plan(io::load_json_file(dg_opt.plan), s.n);
    unsigned top = set_max(plan.blocks.back());
    auto fam = io::parse_funs(io::load_json_file(dg_opt.funs), s.n, top);
    std::vector<SeqFun> gs;
    for (auto const& f : fam.funs) gs.push_back(derive_g(s, f, plan));
    detail::emit(io::dump_funs(gs), dg_opt.out, out);
  });

  struct {
    std::string sgp, plan, witness, funs, set, out;
  } cp_opt;
  auto* cp = tr->add_subcommand("compress", "expand a short witness through the blocks");
  cp->add_option("--sgp", cp_opt.sgp, "semigroup file")->required();
  cp->add_option("--plan", cp_opt.plan, "compression plan file")->required();
  cp->add_option("--witness", cp_opt.witness, "short witness file")->required();
  cp->add_option("--funs", cp_opt.funs, "verify the witness against this family first");
  cp->add_option("--set", cp_opt.set, "target set for the verification");
  cp->add_option("-o,--output", cp_opt.out, "output path");
  cp->callback([&] {
    auto s = detail::load_semigroup(cp_opt.sgp, common);
    auto plan = io::parse_plan(io::load_json_file(cp_opt.plan), s.n);
    auto w = io::parse_witness(io::load_json_file(cp_opt.witness));
    json j{{"format", kFormatVersion}};
    if (!cp_opt.funs.empty() || !cp_opt.set.empty()) {
      if (cp_opt.funs.empty() || cp_opt.set.empty())
        throw std::invalid_argument("--funs and --set must be given together");
      auto a = io::parse_elemset(io::load_json_file(cp_opt.set), s.n);
      unsigned top = set_max(plan.blocks.back());
      auto fam = io::parse_funs(io::load_json_file(cp_opt.funs), s.n, top);
      std::vector<SeqFun> gs;
      for (auto const& f : fam.funs) gs.push_back(derive_g(s, f, plan));
      auto res = verify_witness(s, a, make_family(gs, plan.blocks.size()), w);
      if (!res.ok) {
        j["ok"] = false;
        j["failing_fun"] = res.failing_fun;
        refute();
        detail::emit(j, cp_opt.out, out);
        return;
      }
      j["ok"] = true;
    }
    auto cw = compress_witness(s, plan, w);
    j["l_set"] = io::dump_finset(cw.l_set);
    j["c"] = cw.c;
    detail::emit(j, cp_opt.out, out);
  });

  struct {
    std::string sgp, funs, plan, witness, out;
  } tv_opt;
  auto* tv = tr->add_subcommand("verify", "check the two evaluation routes agree");
  tv->add_option("--sgp", tv_opt.sgp, "semigroup file")->required();
  tv->add_option("--funs", tv_opt.funs, "function family file")->required();
  tv->add_option("--plan", tv_opt.plan, "compression plan file")->required();
  tv->add_option("--witness", tv_opt.witness, "short witness file")->required();
  tv->add_option("-o,--output", tv_opt.out, "output path");
  tv->callback([&] {
    auto s = detail::load_semigroup(tv_opt.sgp, common);
    auto plan = io::parse_plan(io::load_json_file(tv_opt.plan), s.n);
    auto w = io::parse_witness(io::load_json_file(tv_opt.witness));
    unsigned top = set_max(plan.blocks.back());
    auto fam = io::parse_funs(io::load_json_file(tv_opt.funs), s.n, top);
    auto cw = compress_witness(s, plan, w);
    auto res = verify_compression(s, fam, plan, w, cw);
    json j{{"format", kFormatVersion},
           {"ok", res.ok},
           {"l_set", io::dump_finset(cw.l_set)},
           {"c", cw.c}};
    if (!res.ok) {
      j["failing_fun"] = res.failing_fun;
      refute();
    }
    detail::emit(j, tv_opt.out, out);
  });

  // ---- lemma1 ----
  auto* l1 = app.add_subcommand("lemma1", "theta-meets-every-system check");
  l1->require_subcommand(1);

  struct {
    std::string sgp, set, out;
    unsigned k = 1, r = 1, n = 1;
    bool constructive = false;
    elem_t filler = 0;
  } l1_opt;
  auto* l1c = l1->add_subcommand("check", "every size-k family, every r-block system");
  l1c->add_option("--sgp", l1_opt.sgp, "semigroup file")->required();
  l1c->add_option("--set", l1_opt.set, "target set file")->required();
  l1c->add_option("--k", l1_opt.k, "family size cap")->required();
  l1c->add_option("--r", l1_opt.r, "block count")->required();
  l1c->add_option("--n", l1_opt.n, "universe bound")->required();
  l1c->add_flag("--constructive", l1_opt.constructive,
                "also rebuild each hit through the compression route");
  l1c->add_option("--filler", l1_opt.filler, "filler element for the constructive route");
  l1c->add_option("-o,--output", l1_opt.out, "output path");
  l1c->callback([&] {
    auto s = detail::load_semigroup(l1_opt.sgp, common);
    auto a = io::parse_elemset(io::load_json_file(l1_opt.set), s.n);
    Lemma1Options opts;
    opts.constructive = l1_opt.constructive;
    opts.filler = l1_opt.filler;
    opts.policy = common.policy();
    auto res = lemma1_check(s, a, l1_opt.k, l1_opt.r, l1_opt.n, opts);
    json j{{"format", kFormatVersion},
           {"k", l1_opt.k},
           {"r", l1_opt.r},
           {"n", l1_opt.n},
           {"constructive", l1_opt.constructive},
           {"ok", res.ok}};
    if (!res.ok) {
      j["counterexample"] = json{{"funs", detail::funs_json(res.family)},
                                 {"blocks", io::dump_blocks(res.system)}};
      j["detail"] = res.detail;
      refute();
    }
    detail::emit(j, l1_opt.out, out);
  });

  // ---- product ----
  auto* pr = app.add_subcommand("product", "richness in a direct product");
  pr->require_subcommand(1);

  struct {
    std::string sgp_a, set_a, sgp_b, set_b, funs, out;
    unsigned k = 1, l_max = 1;
  } pw_opt;
  auto* pw = pr->add_subcommand("witness", "assemble a product witness from the factors");
  pw->add_option("--sgp-a", pw_opt.sgp_a, "first factor semigroup")->required();
  pw->add_option("--set-a", pw_opt.set_a, "first factor target set")->required();
  pw->add_option("--sgp-b", pw_opt.sgp_b, "second factor semigroup")->required();
  pw->add_option("--set-b", pw_opt.set_b, "second factor target set")->required();
  pw->add_option("--funs", pw_opt.funs, "family over the product (indices i*n_b + j)")
      ->required();
  pw->add_option("--k", pw_opt.k, "family size cap")->required();
  pw->add_option("--l-max", pw_opt.l_max, "give up past this bound")->required();
  pw->add_option("-o,--output", pw_opt.out, "output path");
  pw->callback([&] {
    auto s = detail::load_semigroup(pw_opt.sgp_a, common);
    auto a = io::parse_elemset(io::load_json_file(pw_opt.set_a), s.n);
    auto t = detail::load_semigroup(pw_opt.sgp_b, common);
    auto b = io::parse_elemset(io::load_json_file(pw_opt.set_b), t.n);
    auto fam = io::parse_funs(io::load_json_file(pw_opt.funs), s.n * t.n, pw_opt.l_max);
    ProductOptions opts;
    opts.policy = common.policy();
    auto res = product_witness(s, a, t, b, fam, pw_opt.k, pw_opt.l_max, opts);
    json attempts = json::array();
    for (auto const& at : res.attempts)
      attempts.push_back(json{{"l", at.l},
                              {"theta_a", at.theta_a},
                              {"theta_b", at.theta_b},
                              {"common", at.common}});
    json j{{"format", kFormatVersion},
           {"found", res.found},
           {"k", pw_opt.k},
           {"l_max", pw_opt.l_max},
           {"transcript",
            json{{"r_a", res.r_a},
                 {"r_b", res.r_b},
                 {"attempts", attempts},
                 {"verified", res.verified},
                 {"projections_ok", res.projections_ok}}}};
    if (res.found) {
      j["witness"] = detail::witness_json(res.witness);
      j["l_used"] = res.l_used;
    } else {
      j["diagnostic"] = res.diagnostic;
      refute();
    }
    detail::emit(j, pw_opt.out, out);
  });

  // ---- lemma2 ----
  auto* l2 = app.add_subcommand("lemma2", "intersection-constant probes");
  l2->require_subcommand(1);

  struct {
    std::string mode = "exhaustive", out;
    unsigned u = 1, v = 1, n = 1;
    std::uint64_t samples = 64;
  } es_opt;
  auto* es = l2->add_subcommand("estimate", "empirical lower bound for the constant");
  es->add_option("--u", es_opt.u, "first star level")->required();
  es->add_option("--v", es_opt.v, "second star level")->required();
  es->add_option("--n", es_opt.n, "universe bound")->required();
  es->add_option("--mode", es_opt.mode, "exhaustive|sampled");
  es->add_option("--samples", es_opt.samples, "families drawn per side in sampled mode");
  es->add_option("-o,--output", es_opt.out, "output path");
  es->callback([&] {
    bool sampled;
    if (es_opt.mode == "exhaustive")
      sampled = false;
    else if (es_opt.mode == "sampled")
      sampled = true;
    else
      throw std::invalid_argument("mode must be exhaustive or sampled");
    auto rep = estimate_l(es_opt.u, es_opt.v, es_opt.n, sampled, common.seed, es_opt.samples,
                          common.policy());
    json j{{"format", kFormatVersion},
           {"u", rep.u},
           {"v", rep.v},
           {"n", rep.n},
           {"mode", rep.mode},
           {"probed_class", rep.probed_class},
           {"pairs", rep.pairs},
           {"l_lower_bound", rep.l_lower_bound},
           {"exceeds_n", rep.exceeds_n},
           {"witness_x", io::dump_family(rep.witness_x)["sets"]},
           {"witness_y", io::dump_family(rep.witness_y)["sets"]}};
    if (sampled) {
      j["seed"] = rep.seed;
      j["samples"] = rep.samples;
    }
    detail::emit(j, es_opt.out, out);
  });

  // global flags may appear after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* node) {
    node->fallthrough();
    for (auto* sub : node->get_subcommands([](CLI::App*) { return true; }))
      allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (cost_guard_error const& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (std::length_error const& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace crs::cli
