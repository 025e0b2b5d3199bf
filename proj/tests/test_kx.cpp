#include <doctest.h>

#include "support.hpp"

using namespace twopro;
using namespace twopro::test;

namespace {

const std::vector<std::string> kDiagrams = {"kx_terminal.kx.json", "kx_poset.kx.json", "kx_host3_terminal.kx.json",
                                            "kx_host3_poset.kx.json"};

struct Built {
  std::unique_ptr<ProContext> ctx;
  KxDiagram d;
  KxCategory k;
};

Built build(const std::string& name) {
  Built b;
  b.ctx = std::make_unique<ProContext>(ws().host_of(fixture(name)));
  b.d = ws().kx_diagram(*b.ctx, fixture(name));
  b.k = kx_build(*b.ctx, b.d);
  return b;
}

struct Census {
  int objects = 0, ones = 0, twos = 0;
};

// Counts decorated representations directly from hom categories in 2-Pro(C).
Census oracle_census(ProContext& ctx, const KxDiagram& d) {
  const Fin2Cat& J = *d.index;
  const Fin2Cat& C = ctx.host();
  Census c;
  for (const auto& x : d.X) c.objects += x->index->num_objects();
  // phi per (a, i, i2, r)
  std::map<std::tuple<int, int, int, int>, std::vector<int>> phis;
  for (int a = 0; a < J.num_ones(); ++a) {
    const auto& Xj = d.X[J.src(a)];
    const auto& Xj2 = d.X[J.tgt(a)];
    for (int i = 0; i < Xj->index->num_objects(); ++i) {
      auto cx = ctx.c(Xj->ob(i));
      const FinCat& h = ctx.hom(Xj2, cx).cat();
      int top = ctx.compose(Xj2, Xj, cx, ctx.projection(Xj, i), d.arrow[a]);
      for (int i2 = 0; i2 < Xj2->index->num_objects(); ++i2)
        for (int r : C.ones(Xj2->ob(i2), Xj->ob(i))) {
          int bot = ctx.compose(Xj2, ctx.c(Xj2->ob(i2)), cx, ctx.embed_one(r), ctx.projection(Xj2, i2));
          auto& v = phis[{a, i, i2, r}];
          for (int m : h.hom(top, bot))
            if (h.is_iso(m)) v.push_back(m);
          c.ones += static_cast<int>(v.size());
        }
    }
  }
  for (int al = 0; al < J.num_twos(); ++al) {
    int a = J.src2(al), b = J.tgt2(al);
    const auto& Xj = d.X[J.osrc(al)];
    const auto& Xj2 = d.X[J.otgt(al)];
    for (int i = 0; i < Xj->index->num_objects(); ++i) {
      auto cx = ctx.c(Xj->ob(i));
      const FinCat& h = ctx.hom(Xj2, cx).cat();
      int xa = ctx.whisker_post(Xj2, Xj, cx, ctx.projection(Xj, i), d.cell[al]);
      for (int i2 = 0; i2 < Xj2->index->num_objects(); ++i2) {
        auto ci2 = ctx.c(Xj2->ob(i2));
        for (int r : C.ones(Xj2->ob(i2), Xj->ob(i)))
          for (int s : C.ones(Xj2->ob(i2), Xj->ob(i)))
            for (int th : C.twos(r, s)) {
              int ct = ctx.whisker_pre(Xj2, ci2, cx, ctx.embed_two(th), ctx.projection(Xj2, i2));
              for (int phi : phis[{a, i, i2, r}])
                for (int psi : phis[{b, i, i2, s}])
                  if (h.comp(ct, phi) == h.comp(psi, xa)) ++c.twos;
            }
      }
    }
  }
  return c;
}

std::vector<ProObjectPtr> vertices(ProContext& ctx, const KxDiagram& d) {
  std::vector<ProObjectPtr> zs;
  for (int a = 0; a < ctx.host().num_objects(); ++a) zs.push_back(ctx.c(a));
  for (const auto& x : d.X)
    if (std::find(zs.begin(), zs.end(), x) == zs.end()) zs.push_back(x);
  return zs;
}

}  // namespace

TEST_CASE("kx builds match an independent census") {
  std::map<std::string, std::tuple<int, int, int>> golden = {{"kx_terminal.kx.json", {2, 4, 6}},
                                                             {"kx_poset.kx.json", {2, 4, 6}},
                                                             {"kx_host3_terminal.kx.json", {2, 3, 3}},
                                                             {"kx_host3_poset.kx.json", {4, 10, 10}}};
  for (const auto& name : kDiagrams) {
    CAPTURE(name);
    Built b = build(name);
    const Fin2Cat& K = *b.k.cat;
    Census o = oracle_census(*b.ctx, b.d);
    CHECK(K.num_objects() == o.objects);
    CHECK(K.num_ones() == o.ones);
    CHECK(K.num_twos() == o.twos);
    CHECK(std::tuple{K.num_objects(), K.num_ones(), K.num_twos()} == golden.at(name));
    CHECK_FALSE(check_two_category(K));
    FilterResult f = kx_filtered_verify(b.k);
    CHECK(f.ok);
    CHECK(f.witness.f0.size() == static_cast<std::size_t>(K.num_objects() * K.num_objects()));
    auto Xt = tilde_x(*b.ctx, b.k, b.d);
    CHECK_FALSE(check_two_functor(Xt->diagram));
  }
}

TEST_CASE("kx budget") {
  auto host = ws().host_of(fixture("kx_host3_poset.kx.json"));
  ProContext ctx(host);
  KxDiagram d = ws().kx_diagram(ctx, fixture("kx_host3_poset.kx.json"));
  try {
    kx_build(ctx, d, 5);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationBudgetExceeded);
  }
}

TEST_CASE("X~ restricted to each stage recovers the stage") {
  for (const auto& name : kDiagrams) {
    CAPTURE(name);
    Built b = build(name);
    auto& ctx = *b.ctx;
    const Fin2Cat& K = *b.k.cat;
    const Fin2Cat& J = *b.d.index;
    auto Xt = tilde_x(ctx, b.k, b.d);
    for (int j = 0; j < J.num_objects(); ++j) {
      const auto& X = b.d.X[j];
      const Fin2Cat& I = *X->index;
      std::vector<int> edge(I.num_ones(), -1);
      for (int i = 0; i < I.num_objects(); ++i) CHECK(Xt->ob(b.k.object_of(i, j)) == X->ob(i));
      for (int u = 0; u < I.num_ones(); ++u) {
        int phi = ctx.projection_coherence(X, u);
        for (int e = 0; e < K.num_ones(); ++e) {
          const KxOne& o = b.k.ones[e];
          if (o.a == J.id1(j) && o.i == I.src(u) && o.i2 == I.tgt(u) && o.r == X->one(u) && o.phi == phi) {
            CHECK(edge[u] < 0);
            edge[u] = e;
          }
        }
        REQUIRE(edge[u] >= 0);
        CHECK(K.src(edge[u]) == b.k.object_of(I.src(u), j));
        CHECK(K.tgt(edge[u]) == b.k.object_of(I.tgt(u), j));
        CHECK(Xt->one(edge[u]) == X->one(u));
      }
      for (int i = 0; i < I.num_objects(); ++i) CHECK(edge[I.id1(i)] == K.id1(b.k.object_of(i, j)));
      for (const auto& [v, u, vu] : I.hcomp1_entries()) CHECK(K.hcomp1(edge[v], edge[u]) == edge[vu]);
      for (int s = 0; s < I.num_twos(); ++s) {
        int found = 0;
        for (int t : K.twos(edge[I.src2(s)], edge[I.tgt2(s)]))
          if (b.k.twos[t].alpha == J.id2(J.id1(j)) && Xt->two(t) == X->two(s)) ++found;
        CHECK(found == 1);
      }
    }
  }
}

// A cone h over X with vertex Z gives h_e = (phi.h_j') after (pi_i.xi_a^-1) for
// each 1-cell e = (a, r, phi) of K_X. Two representations of the same X^a
// related by a 2-cell (id_a, theta) must give composites related by theta.
TEST_CASE("cone components do not depend on the representation") {
  std::size_t checked = 0, nontrivial = 0;
  for (const auto& name : kDiagrams) {
    CAPTURE(name);
    Built b = build(name);
    auto& ctx = *b.ctx;
    const Fin2Cat& K = *b.k.cat;
    const Fin2Cat& J = *b.d.index;
    const Fin2Cat& C = ctx.host();
    for (const auto& Z : vertices(ctx, b.d)) {
      ProConeCategory pc = pro_cone_category(ctx, b.d, Z);
      for (int c = 0; c < pc.lim.cat.num_objects(); ++c) {
        auto h_e = [&](int e) {
          const KxOne& o = b.k.ones[e];
          const auto& Xj = b.d.X[J.src(o.a)];
          const auto& Xj2 = b.d.X[J.tgt(o.a)];
          auto cx = ctx.c(Xj->ob(o.i));
          const FinCat& hj = ctx.hom(Z, Xj).cat();
          int m1 = ctx.whisker_post(Z, Xj, cx, ctx.projection(Xj, o.i), hj.inverse(pc.lim.xi[c][o.a]));
          int m2 = ctx.whisker_pre(Z, Xj2, cx, o.phi, pc.lim.x[c][J.tgt(o.a)]);
          return ctx.hom(Z, cx).cat().comp(m2, m1);
        };
        for (int t = 0; t < K.num_twos(); ++t) {
          if (b.k.twos[t].alpha != J.id2(J.src2(b.k.twos[t].alpha))) continue;
          int e = K.src2(t), e2 = K.tgt2(t);
          const KxOne& o = b.k.ones[e];
          const auto& Xj = b.d.X[J.src(o.a)];
          const auto& Xj2 = b.d.X[J.tgt(o.a)];
          auto cx = ctx.c(Xj->ob(o.i));
          auto ci2 = ctx.c(Xj2->ob(o.i2));
          int th = b.k.twos[t].theta;
          int w = ctx.whisker_pre(Xj2, ci2, cx, ctx.embed_two(th), ctx.projection(Xj2, o.i2));
          int lhs = ctx.hom(Z, cx).cat().comp(ctx.whisker_pre(Z, Xj2, cx, w, pc.lim.x[c][J.tgt(o.a)]), h_e(e));
          CHECK(lhs == h_e(e2));
          ++checked;
          if (e != e2 || th != C.id2(o.r)) ++nontrivial;
        }
      }
    }
  }
  CHECK(checked > 0);
  CHECK(nontrivial > 0);
}

TEST_CASE("limit comparison is bijective") {
  for (const auto& name : kDiagrams) {
    CAPTURE(name);
    Built b = build(name);
    auto Xt = tilde_x(*b.ctx, b.k, b.d);
    auto zs = vertices(*b.ctx, b.d);
    CHECK(zs.size() >= 3);
    for (const auto& Z : zs) {
      CAPTURE(Z->name);
      UniversalReport u = pro_limit_check(*b.ctx, b.d, b.k, Xt, Z);
      CHECK(u.well_defined);
      CHECK(u.objects_bijective);
      CHECK(u.morphisms_bijective);
      CHECK(u.witness.empty());
      if (b.d.index->num_objects() == 1) {
        CHECK(find_isomorphism(b.ctx->hom(Z, Xt).cat(), b.ctx->hom(Z, b.d.X[0]).cat()).has_value());
      }
    }
  }
}

TEST_CASE("hat extension along embedded objects") {
  for (const char* f : {"host3_incl.catvalued.json", "interval_incl.catvalued.json", "z2_incl.catvalued.json"}) {
    CAPTURE(f);
    CatFunctor F = ws().catvalued(fixture(f));
    Budget budget;
    for (int a = 0; a < F.source->num_objects(); ++a) {
      auto cA = embed_c(F.source, a);
      HatExtension h = hat_extension(F, *cA, budget);
      auto iso = find_isomorphism(h.lim.cat, F.fiber[a]);
      REQUIRE(iso.has_value());
      CHECK(h.lim.cone.comp[0] == *iso);
      CHECK_FALSE(check_pseudonat(constant_cat_functor(h.H.source, h.lim.cat), h.H, h.lim.cone));
      for (const auto& A : {terminal_cat(), discrete_cat({"a", "b"})})
        CHECK(universal_check_lim(h.H, h.lim.cat, h.lim.cone, A, budget).ok());
    }
  }
}

TEST_CASE("hat extension of a representable is a pro hom") {
  for (const char* f : {"host3_X.pro.json", "host3_Y.pro.json", "isopair_X.pro.json"}) {
    CAPTURE(f);
    auto X = pro(f);
    ProContext ctx(X->host);
    Budget budget;
    for (int a = 0; a < X->host->num_objects(); ++a) {
      HatExtension h = hat_extension(representable(X->host, a), *X, budget);
      CHECK(find_isomorphism(h.lim.cat, ctx.hom(ctx.c(a), X).cat()).has_value());
      CHECK(universal_check_lim(h.H, h.lim.cat, h.lim.cone, terminal_cat(), budget).ok());
    }
  }
}

TEST_CASE("pro_map") {
  auto host = cat2("host3.2cat.json");
  auto id = identity_two_functor(host);
  for (int a = 0; a < host->num_objects(); ++a) CHECK(pro_map(id, embed_c(host, a))->ob(0) == a);
  auto X = pro("host3_X.pro.json");
  auto Y = pro_map(id, X);
  CHECK(Y->diagram.ob == X->diagram.ob);
  CHECK(Y->diagram.two == X->diagram.two);
  CHECK_FALSE(check_two_functor(Y->diagram));
  auto k = constant_two_functor(host, host, 2);
  auto Z = pro_map(k, X);
  for (int i = 0; i < Z->index->num_objects(); ++i) CHECK(Z->ob(i) == 2);
}

TEST_CASE("extensions through the limit are unique") {
  Budget budget;
  auto host = cat2("host3.2cat.json");
  auto X = pro("host3_X.pro.json");
  int A = *host->find_object("A"), B = *host->find_object("B");
  int e = *host->find_one("e");

  SUBCASE("identity") {
    CatFunctor F = ws().catvalued(fixture("host3_incl.catvalued.json"));
    HatExtension h = hat_extension(F, *X, budget);
    ExtensionReport r =
        universality_faithfulness_check(F, F, identity_pseudonat(F), *X, h.lim.cat, h.lim.cone, budget);
    CHECK(r.unique());
    REQUIRE(r.first);
    CHECK(*r.first == identity_functor(h.lim.cat));
  }
  SUBCASE("precomposition with e") {
    CatFunctor F = representable(host, B), G = representable(host, A);
    PseudoNat theta = yoneda_l(F, G, B, e);
    REQUIRE_FALSE(check_pseudonat(F, G, theta));
    REQUIRE(is_strict(F, G, theta));
    for (const auto& x : {X, pro("host3_Y.pro.json")}) {
      HatExtension g = hat_extension(G, *x, budget);
      ExtensionReport r = universality_faithfulness_check(F, G, theta, *x, g.lim.cat, g.lim.cone, budget);
      CHECK(r.unique());
    }
  }
  SUBCASE("target that is not a limit") {
    CatFunctor F = ws().catvalued(fixture("host3_incl.catvalued.json"));
    HatExtension h = hat_extension(F, *X, budget);
    FinCat two = discrete_cat({"a", "b"});
    FinCat T = product_cat(h.lim.cat, two);
    Functor proj;
    for (int x = 0; x < T.num_objects(); ++x) proj.ob.push_back(x / two.num_objects());
    for (int m = 0; m < T.num_morphisms(); ++m) proj.mor.push_back(m / two.num_morphisms());
    REQUIRE_FALSE(check_functor(T, h.lim.cat, proj));
    PseudoNat cone;
    for (const auto& f : h.lim.cone.comp) cone.comp.push_back(compose(f, proj));
    for (const auto& n : h.lim.cone.coh) cone.coh.push_back(whisker_right(n, proj));
    ExtensionReport r = universality_faithfulness_check(F, F, identity_pseudonat(F), *X, T, cone, budget);
    CHECK(r.extensions > 1);
    CHECK_FALSE(r.unique());
  }
}
