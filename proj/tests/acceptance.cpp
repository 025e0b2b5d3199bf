#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "oracles.hpp"
#include "twopro/elevator.hpp"

using namespace twopro;
using namespace twopro::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<std::string> kHosts = {"terminal.2cat.json", "discrete2.2cat.json", "poset01.2cat.json",
                                         "chain012.2cat.json", "cospan.2cat.json",    "isopair.2cat.json",
                                         "host3.2cat.json",    "interval.2cat.json",  "z2.2cat.json"};

const std::vector<std::string> kKx = {"kx_terminal.kx.json", "kx_poset.kx.json", "kx_host3_terminal.kx.json",
                                      "kx_host3_poset.kx.json"};

Outcome axioms() {
  Outcome o;
  for (const auto& h : kHosts) {
    auto start = std::chrono::steady_clock::now();
    auto c = cat2(h);
    std::size_t inst = 0;
    o.expect(!check_two_category(*c), h + " invalid");
    o.expect(interchange_failures(*c, inst) == 0 && inst > 0, h + " interchange");
    o.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), h + " slower than 1 s");
  }
  std::size_t rejected = 0;
  auto cases = corruptions(*cat2("host3.2cat.json"));
  for (const auto& [name, run] : cases) {
    auto v = run();
    bool ok = v && !v->witness.empty();
    o.expect(ok, "corruption not rejected: " + name);
    rejected += ok;
  }
  if (o.ok)
    o.detail = std::to_string(kHosts.size()) + " fixtures, " + std::to_string(rejected) + "/" +
               std::to_string(cases.size()) + " corruptions rejected";
  return o;
}

Outcome yoneda_criterion() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, F] : cat_valued()) {
    for (int a = 0; a < F.source->num_objects(); ++a) {
      Budget b;
      std::string at = name + " @" + std::to_string(a);
      const FinCat& FA = F.fiber[a];
      Yoneda s = yoneda(F.source, F, a, Mode::Strict, b);
      o.expect(is_isomorphism(s.hom.cat, FA, s.h), at + " h not bijective");
      o.expect(compose(s.h, s.l) == identity_functor(FA), at + " h.l");
      o.expect(compose(s.l, s.h) == identity_functor(s.hom.cat), at + " l.h");
      Yoneda p = yoneda(F.source, F, a, Mode::Pseudo, b);
      o.expect(compose(p.h, p.l) == identity_functor(FA), at + " pseudo h.l");
      NatTrans g = yoneda_gamma_nat(p);
      o.expect(!check_nat(p.hom.cat, p.hom.cat, compose(p.l, p.h), identity_functor(p.hom.cat), g) &&
                   is_nat_iso(p.hom.cat, g),
               at + " gamma");
      for (const auto& th : p.hom.objects) {
        Modification gm = yoneda_gamma(p, th);
        PseudoNat st = yoneda_l(p.rep, F, a, p.h.ob[p.hom.find_object(th)]);
        o.expect(!check_modification(p.rep, F, st, th, gm) && is_invertible(F, gm), at + " gamma component");
      }
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " (functor, object) pairs";
  return o;
}

Outcome ll_criterion() {
  Outcome o;
  CatFunctor F = ws().catvalued(fixture("poset01_F.diag.json"));
  Budget b;
  PseudoColimit L = pseudocolim_ll(F, b);
  o.expect(L.cat.num_objects() == 3, "object count " + std::to_string(L.cat.num_objects()));
  for (int x = 0; x < L.cat.num_objects(); ++x)
    for (int y = 0; y < L.cat.num_objects(); ++y) o.expect(L.cat.hom(x, y).size() == 1, "hom not singleton");
  Oracle orc = ll_oracle(F, L);
  for (const auto& [k, v] : orc.classes) o.expect(v.size() == 1, "oracle class count");
  o.expect(orc.classes.size() == 9, "oracle pairs");
  o.expect(!check_pseudocone(F, L.cat, L.lambda), "lambda fails PC0-PC2");
  std::size_t vs = 0;
  for (const auto& [name, A] : small_vertices()) {
    if (A.num_objects() > 3) continue;
    o.expect(universal_check_colim(F, L.cat, L.lambda, A, b).ok(), "universal at " + name);
    ++vs;
  }
  if (o.ok) o.detail = "3 objects, singleton homs, universal at " + std::to_string(vs) + " vertices";
  return o;
}

Outcome homotopy_criterion() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, F] : filtered_diagrams()) {
    Budget b;
    PseudoColimit L = pseudocolim_ll(F, b);
    o.expect(ll_oracle(F, L).one_step_closed && L.closure_ok, name + " one-step relation not closed");
    o.expect(!check_ll_composition_choices(F, L), name + " composition depends on representatives");
    ++n;
  }
  if (o.ok) o.detail = std::to_string(n) + " filtered diagrams";
  return o;
}

Outcome embedding_criterion() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& h : kHosts) {
    auto C = cat2(h);
    ProContext ctx(C);
    for (int a = 0; a < C->num_objects(); ++a)
      for (int b = 0; b < C->num_objects(); ++b) {
        const FinCat& hom = ctx.hom(ctx.c(a), ctx.c(b)).cat();
        HomIndex hi = hom_index(*C, a, b);
        Functor f;
        for (int r : hi.one) f.ob.push_back(ctx.embed_one(r));
        for (int t : hi.two) f.mor.push_back(ctx.embed_two(t));
        o.expect(is_isomorphism(hi.cat, hom, f), h + " embedding not an isomorphism");
        ++pairs;
      }
    for (const auto& [g, f, gf] : C->hcomp1_entries())
      o.expect(ctx.compose(ctx.c(C->src(f)), ctx.c(C->tgt(f)), ctx.c(C->tgt(g)), ctx.embed_one(g),
                           ctx.embed_one(f)) == ctx.embed_one(gf),
               h + " composition square");
    for (const auto& [be, al, r] : C->hcomp2_entries())
      o.expect(ctx.hcompose(ctx.c(C->osrc(al)), ctx.c(C->otgt(al)), ctx.c(C->otgt(be)), ctx.embed_two(be),
                            ctx.embed_two(al)) == ctx.embed_two(r),
               h + " 2-cell square");
  }
  if (o.ok) o.detail = std::to_string(pairs) + " object pairs over " + std::to_string(kHosts.size()) + " hosts";
  return o;
}

Outcome projections_criterion() {
  Outcome o;
  std::size_t homs = 0;
  for (const char* f : {"isopair_X.pro.json", "host3_X.pro.json", "host3_Y.pro.json"}) {
    auto X = pro(f);
    ProContext ctx(X->host);
    const Fin2Cat& I = *X->index;
    for (int i = 0; i < I.num_objects(); ++i) {
      const FinCat& h = ctx.hom(X, ctx.c(X->ob(i))).cat();
      o.expect(ctx.projection_coherence(X, I.id1(i)) == h.id(ctx.projection(X, i)), std::string(f) + " PC0");
    }
    for (const auto& [v, u, vu] : I.hcomp1_entries()) {
      auto ci = ctx.c(X->ob(I.src(u))), ci2 = ctx.c(X->ob(I.tgt(u)));
      int pv = ctx.whisker_post(X, ci2, ci, ctx.embed_one(X->one(u)), ctx.projection_coherence(X, v));
      o.expect(ctx.hom(X, ci).cat().comp(pv, ctx.projection_coherence(X, u)) == ctx.projection_coherence(X, vu),
               std::string(f) + " PC1");
    }
    for (int a = 0; a < I.num_twos(); ++a) {
      int u = I.src2(a), u2 = I.tgt2(a);
      auto ci = ctx.c(X->ob(I.src(u))), ci2 = ctx.c(X->ob(I.tgt(u)));
      int xa = ctx.whisker_pre(X, ci2, ci, ctx.embed_two(X->two(a)), ctx.projection(X, I.tgt(u)));
      o.expect(ctx.hom(X, ci).cat().comp(xa, ctx.projection_coherence(X, u)) == ctx.projection_coherence(X, u2),
               std::string(f) + " PC2");
    }
  }
  for (const char* h : {"isopair.2cat.json", "host3.2cat.json"}) {
    auto C = cat2(h);
    ProContext ctx(C);
    std::vector<ProObjectPtr> fam;
    for (int a = 0; a < C->num_objects(); ++a) fam.push_back(ctx.c(a));
    if (std::string(h) == "host3.2cat.json")
      fam.insert(fam.end(), {pro("host3_X.pro.json"), pro("host3_Y.pro.json")});
    else
      fam.push_back(pro("isopair_X.pro.json"));
    for (const auto& Z : fam)
      for (const auto& X : fam) {
        OracleHom orc = oracle_hom(*C, *Z, *X);
        o.expect(find_isomorphism(ctx.hom(Z, X).cat(), orc.lim.cat).has_value(),
                 "hom(" + Z->name + ", " + X->name + ") differs from pseudocones");
        ++homs;
      }
  }
  if (o.ok) o.detail = "PC0-PC2 on 3 pro-objects, " + std::to_string(homs) + " hom categories match pseudocones";
  return o;
}

Outcome lemma_criterion(unsigned seed) {
  Outcome o;
  LemmaInputs in(seed);
  std::size_t l1 = 0, l2 = 0, l4 = 0, same = 0;
  auto files = lemma_fixtures();
  for (int attempt = 0; attempt < 20000 && (l1 < 50 || l2 < 50 || l4 < 50); ++attempt) {
    auto X = pro(in.pick(files));
    ProContext ctx(X->host);
    const Fin2Cat& C = ctx.host();
    const Fin2Cat& I = *X->index;
    int Cobj = in.below(C.num_objects());
    int i = in.below(I.num_objects()), j = in.below(I.num_objects());
    const auto& rs = C.ones(X->ob(i), Cobj);
    const auto& ss = C.ones(X->ob(j), Cobj);
    auto cc = ctx.c(Cobj);
    if (l1 < 50 && !rs.empty() && !ss.empty()) {
      int r = in.pick(rs), s = in.pick(ss);
      const FinCat& hc = ctx.hom(X, cc).cat();
      int a = ctx.compose(X, ctx.c(X->ob(i)), cc, ctx.embed_one(r), ctx.projection(X, i));
      int b = ctx.compose(X, ctx.c(X->ob(j)), cc, ctx.embed_one(s), ctx.projection(X, j));
      if (!hc.hom(a, b).empty()) {
        int alpha = in.pick(hc.hom(a, b));
        auto w = lemma1_search(ctx, X, Cobj, i, r, j, s, alpha);
        o.expect(!check_lemma1(ctx, X, Cobj, i, r, j, s, alpha, w), "lemma1 witness");
        if (i == j) {
          o.expect(w.u == w.v, "lemma1 u != v for i = j");
          ++same;
        }
        ++l1;
      }
    }
    if (l4 < 50 && !rs.empty()) {
      int f = in.pick(rs), g = in.pick(rs);
      if (!C.twos(f, g).empty()) {
        int t1 = in.pick(C.twos(f, g)), t2 = in.pick(C.twos(f, g));
        auto ci = ctx.c(X->ob(i));
        if (ctx.whisker_pre(X, ci, cc, ctx.embed_two(t1), ctx.projection(X, i)) ==
            ctx.whisker_pre(X, ci, cc, ctx.embed_two(t2), ctx.projection(X, i))) {
          int u = lemma4_search(ctx, X, i, t1, t2);
          int w = C.id2(X->one(u));
          o.expect(I.src(u) == i && C.hcomp2(t1, w) == C.hcomp2(t2, w), "lemma4 witness");
          ++l4;
        }
      }
    }
    if (l2 < 50) {
      auto Y = pro(in.pick(files));
      if (Y->host != X->host) continue;
      auto src = in.below(2) ? X : ctx.c(in.below(C.num_objects()));
      const FinCat& h = ctx.hom(src, Y).cat();
      if (h.num_morphisms() == 0) continue;
      int alpha = in.below(h.num_morphisms());
      int jj = in.below(Y->index->num_objects());
      auto fr = represent_arrow(ctx, src, Y, h.dom(alpha), jj);
      auto gr = represent_arrow(ctx, src, Y, h.cod(alpha), jj);
      auto w = lemma2_search(ctx, src, Y, alpha, jj, fr, gr);
      o.expect(!check_cell_rep(ctx, src, Y, alpha, jj, w.rep), "lemma2 witness");
      if (fr.i == gr.i) o.expect(w.u == w.v, "lemma2 u != v for i = i'");
      ++l2;
    }
  }
  o.expect(l1 == 50 && l2 == 50 && l4 == 50, "not enough valid inputs");
  if (o.ok)
    o.detail = "50 inputs each, seed " + std::to_string(seed) + ", " + std::to_string(same) + " with i = j";
  return o;
}

struct KxBuilt {
  std::unique_ptr<ProContext> ctx;
  KxDiagram d;
  KxCategory k;
};

KxBuilt kx(const std::string& name) {
  KxBuilt b;
  b.ctx = std::make_unique<ProContext>(ws().host_of(fixture(name)));
  b.d = ws().kx_diagram(*b.ctx, fixture(name));
  b.k = kx_build(*b.ctx, b.d);
  return b;
}

Outcome kx_criterion() {
  Outcome o;
  std::string census;
  for (const auto& name : kKx) {
    KxBuilt b = kx(name);
    o.expect(!check_two_category(*b.k.cat), name + " invalid");
    o.expect(kx_filtered_verify(b.k).ok, name + " not 2-filtered");
    census += (census.empty() ? "" : ", ") + std::to_string(b.k.cat->num_objects()) + "/" +
              std::to_string(b.k.cat->num_ones()) + "/" + std::to_string(b.k.cat->num_twos());
  }
  if (o.ok) o.detail = std::to_string(kKx.size()) + " builds, cells " + census;
  return o;
}

Outcome limit_criterion() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& name : kKx) {
    KxBuilt b = kx(name);
    auto Xt = tilde_x(*b.ctx, b.k, b.d);
    std::vector<ProObjectPtr> zs;
    for (int a = 0; a < b.ctx->host().num_objects(); ++a) zs.push_back(b.ctx->c(a));
    for (const auto& x : b.d.X)
      if (std::find(zs.begin(), zs.end(), x) == zs.end()) zs.push_back(x);
    o.expect(zs.size() >= 3, name + " fewer than 3 vertices");
    for (const auto& Z : zs) {
      o.expect(pro_limit_check(*b.ctx, b.d, b.k, Xt, Z).ok(), name + " p not bijective at " + Z->name);
      ++checks;
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " (diagram, vertex) pairs";
  return o;
}

Outcome extension_criterion() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [name, F] : cat_valued()) {
    Budget b;
    for (int a = 0; a < F.source->num_objects(); ++a) {
      HatExtension h = hat_extension(F, *embed_c(F.source, a), b);
      o.expect(find_isomorphism(h.lim.cat, F.fiber[a]).has_value(), name + " hat(cA) differs from F(A)");
      for (const auto& A : {terminal_cat(), discrete_cat({"a", "b"})})
        o.expect(universal_check_lim(h.H, h.lim.cat, h.lim.cone, A, b).ok(), name + " cone not universal");
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " (functor, object) pairs";
  return o;
}

Outcome elevator_criterion(unsigned seed) {
  Outcome o;
  std::mt19937 rng(seed);
  std::vector<std::tuple<Fin2CatPtr, int, int>> pool;
  for (const auto& h : kHosts) {
    auto c = cat2(h);
    for (int a = 0; a < c->num_twos(); ++a)
      for (int b = 0; b < c->num_twos(); ++b)
        if (c->osrc(b) == c->otgt(a)) pool.emplace_back(c, b, a);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 100; ++k) {
    auto [c, b, a] = pool[pick(rng)];
    const Fin2Cat& C = *c;
    auto id = [&](int f) { return "id(" + C.one_name(f) + ")"; };
    std::string lhs = "[" + id(C.src2(b)) + " | " + C.two_name(a) + "] ; [" + C.two_name(b) + " | " + id(C.tgt2(a)) + "]";
    std::string rhs = "[" + C.two_name(b) + " | " + id(C.src2(a)) + "] ; [" + id(C.tgt2(b)) + " | " + C.two_name(a) + "]";
    auto el = parse_elevator(lhs, C), er = parse_elevator(rhs, C);
    o.expect(equal_elevator(el, er, C).equal, "interchange " + lhs);
    for (const auto& e : {el, er}) {
      auto n = normalize_elevator(e, C);
      o.expect(eval_elevator(n, C) == eval_elevator(e, C), "normalize changed value");
      o.expect(normalize_elevator(n, C) == n, "normalize not idempotent");
    }
  }
  std::size_t laws = 0;
  auto confirm = [&](const std::vector<ElevatorEquation>& eqs, const Fin2Cat& D) {
    for (const auto& q : eqs) {
      o.expect(equal_elevator(parse_elevator(q.lhs, D), parse_elevator(q.rhs, D), D).equal, q.law + " " + q.lhs);
      ++laws;
    }
  };
  Budget budget;
  for (const char* h : {"host3.2cat.json", "isopair.2cat.json", "z2.2cat.json"}) {
    auto C = cat2(h);
    auto F = identity_two_functor(C);
    auto ts = enumerate_pseudonats2(F, F, Mode::Pseudo, budget);
    for (const auto& t : ts) {
      if (check_pseudonat2(F, F, t)) continue;
      confirm(render_pseudonat_laws(F, F, t), *C);
    }
  }
  for (const char* f : {"host3_X.pro.json", "isopair_X.pro.json"}) {
    auto X = pro(f);
    for (int d = 0; d < X->host->num_objects(); ++d) {
      auto G = constant_two_functor(X->index_op, X->host, d);
      for (const auto& l : enumerate_pseudonats2(X->diagram, G, Mode::Pseudo, budget)) {
        confirm(render_pseudonat_laws(X->diagram, G, l), *X->host);
        for (const auto& m : enumerate_modifications2(X->diagram, G, l, l, budget))
          confirm(render_modification_laws(X->diagram, G, l, l, m), *X->host);
      }
    }
  }
  if (o.ok) o.detail = "100 pairs, seed " + std::to_string(seed) + ", " + std::to_string(laws) + " rendered laws";
  return o;
}

std::vector<std::vector<std::string>> command_suite() {
  auto f = [](const std::string& n) { return fixture(n).string(); };
  std::vector<std::vector<std::string>> cmds;
  for (const auto& e : std::filesystem::directory_iterator(TWOPRO_FIXTURES)) cmds.push_back({"validate", e.path().string()});
  for (const auto& h : kHosts) cmds.push_back({"filtered", f(h)});
  for (const char* d : {"poset01_F.diag.json", "interval_incl.catvalued.json", "z2_incl.catvalued.json"}) {
    cmds.push_back({"pcolim", f(d)});
    cmds.push_back({"plim", f(d)});
  }
  cmds.push_back({"prohom", f("isopair_X.pro.json"), f("isopair_c1.pro.json")});
  cmds.push_back({"prohom", f("host3_Y.pro.json"), f("host3_X.pro.json")});
  for (const auto& k : kKx) {
    cmds.push_back({"kx", "build", f(k)});
    cmds.push_back({"kx", "verify", f(k)});
  }
  cmds.push_back({"kx", "limit", f("kx_poset.kx.json"), "--vertex", f("isopair_c0.pro.json"), "--vertex",
                  f("isopair_X.pro.json")});
  cmds.push_back({"elevator", "normalize", "--host", f("host3.2cat.json"), "--expr", "[t0_p_q | 1_e]"});
  cmds.push_back({"universal", f("host3_X.pro.json"), "--functor", f("host3_incl.catvalued.json")});
  cmds.push_back({"--max-candidates", "3", "pcolim", f("poset01_F.diag.json")});
  return cmds;
}

Outcome determinism_criterion() {
  Outcome o;
  auto cmds = command_suite();
  auto run_all = [&] {
    std::ostringstream all;
    for (const auto& c : cmds) {
      std::ostringstream out;
      int code = cli::run(c, out);
      all << code << "\n" << out.str();
    }
    return all.str();
  };
  std::string a = run_all(), b = run_all();
  o.expect(a == b, "reports differ between runs");
  if (o.ok) o.detail = std::to_string(cmds.size()) + " commands, " + std::to_string(a.size()) + " bytes identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  unsigned seed = 20261015;
  app.add_option("--seed", seed, "seed for randomized criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"axiom suite", 9, axioms},
      {"yoneda", 60, yoneda_criterion},
      {"construction LL", 10, ll_criterion},
      {"homotopy soundness", 30, homotopy_criterion},
      {"pro embedding", 60, embedding_criterion},
      {"projections", 60, projections_criterion},
      {"lemma searches", 60, [&] { return lemma_criterion(seed); }},
      {"K_X", 60, kx_criterion},
      {"limit comparison", 300, limit_criterion},
      {"extension", 60, extension_criterion},
      {"elevator", 60, [&] { return elevator_criterion(seed); }},
      {"determinism", 60, determinism_criterion},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].run();
    } catch (const Error& e) {
      o.ok = false;
      o.detail = e.violation().describe();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > criteria[n].limit_s) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(static_cast<int>(criteria[n].limit_s)) + " s";
    }
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << n + 1 << ". " << criteria[n].name << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
