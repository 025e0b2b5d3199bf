#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "oracles.hpp"

using namespace twopro;
using namespace twopro::test;

namespace {

// i |-> Cat(F_i, A) over dualize(I), the hom side of the pseudocone category.
CatFunctor hom_diagram(const CatFunctor& F, const FinCat& A) {
  auto Iop = std::make_shared<const Fin2Cat>(dualize(*F.source));
  CatFunctor H;
  H.source = Iop;
  Budget b;
  std::vector<FunctorCategory> fcs;
  for (const auto& fib : F.fiber) fcs.push_back(functor_category(fib, A, b));
  for (const auto& fc : fcs) H.fiber.push_back(fc.cat);
  auto fidx = [](const FunctorCategory& fc, const Functor& f) {
    return static_cast<int>(std::find(fc.functors.begin(), fc.functors.end(), f) - fc.functors.begin());
  };
  auto nidx = [](const FunctorCategory& fc, int s, int t, const NatTrans& n) {
    for (int m : fc.cat.hom(s, t))
      if (fc.nats[m] == n) return m;
    return -1;
  };
  const Fin2Cat& I = *F.source;
  for (int u = 0; u < I.num_ones(); ++u) {
    const FunctorCategory& from = fcs[I.tgt(u)];
    const FunctorCategory& to = fcs[I.src(u)];
    Functor pre;
    for (const auto& g : from.functors) pre.ob.push_back(fidx(to, compose(g, F.map1[u])));
    for (int m = 0; m < from.cat.num_morphisms(); ++m)
      pre.mor.push_back(nidx(to, pre.ob[from.cat.dom(m)], pre.ob[from.cat.cod(m)],
                             whisker_right(from.nats[m], F.map1[u])));
    H.map1.push_back(std::move(pre));
  }
  for (int a = 0; a < I.num_twos(); ++a) {
    int s = I.osrc(a), t = I.otgt(a);
    const FunctorCategory& from = fcs[t];
    const FunctorCategory& to = fcs[s];
    NatTrans n;
    for (const auto& g : from.functors)
      n.comp.push_back(nidx(to, fidx(to, compose(g, F.map1[I.src2(a)])), fidx(to, compose(g, F.map1[I.tgt2(a)])),
                            whisker_left(g, F.map2[a])));
    H.map2.push_back(std::move(n));
  }
  return H;
}

}  // namespace

TEST_CASE("two-filteredness of fixtures") {
  std::map<std::string, bool> expect = {{"terminal", true}, {"discrete2", false}, {"poset01", true},
                                        {"chain012", true}, {"cospan", true},     {"isopair", true},
                                        {"host3", false},   {"interval", true},   {"z2", true}};
  for (const auto& [name, ok] : expect) {
    CAPTURE(name);
    auto r = check_two_filtered(*cat2(name + ".2cat.json"));
    CHECK(r.ok == ok);
  }
  auto r = check_two_filtered(*cat2("discrete2.2cat.json"));
  CHECK(r.axiom == "F0");
  CHECK(r.counterexample == std::vector<std::string>{"A", "B"});
  auto p = check_two_filtered(*cat2("poset01.2cat.json"));
  CHECK(p.witness.f0.size() == 4);
  for (const auto& [k, w] : p.witness.f0) CHECK(w.e == std::max(k.first, k.second));
}

TEST_CASE("LL on poset01_F") {
  CatFunctor F = ws().catvalued(fixture("poset01_F.diag.json"));
  Budget b;
  PseudoColimit L = pseudocolim_ll(F, b);
  REQUIRE(L.cat.num_objects() == 3);
  CHECK(L.cat.object_name(0) == "(a,0)");
  CHECK(L.cat.object_name(1) == "(b,0)");
  CHECK(L.cat.object_name(2) == "(*,1)");
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(L.cat.hom(x, y).size() == 1);
  CHECK_FALSE(check_fincat(L.cat));
  CHECK(L.closure_ok);
  CHECK_FALSE(check_ll_composition_choices(F, L));
  CHECK_FALSE(check_pseudocone(F, L.cat, L.lambda));
  for (const auto& [name, A] : small_vertices()) {
    CAPTURE(name);
    auto u = universal_check_colim(F, L.cat, L.lambda, A, b);
    CHECK(u.ok());
  }
  Oracle o = ll_oracle(F, L);
  CHECK(o.one_step_closed);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(o.classes[{x, y}].size() == 1);
}

TEST_CASE("LL agrees with the brute-force oracle") {
  for (const auto& [name, F] : filtered_diagrams()) {
    CAPTURE(name);
    Budget b;
    PseudoColimit L = pseudocolim_ll(F, b);
    Oracle o = ll_oracle(F, L);
    CHECK(o.one_step_closed);
    CHECK(L.closure_ok);
    std::map<std::pair<int, int>, std::set<std::vector<Premorphism>>> got;
    for (int m = 0; m < L.cat.num_morphisms(); ++m) got[{L.cat.dom(m), L.cat.cod(m)}].insert(L.members[m]);
    for (auto& [k, v] : o.classes)
      if (v.empty()) o.classes.erase(k);
    for (const auto& [k, v] : o.classes) CHECK(got[k] == v);
    for (int m = 0; m < L.cat.num_morphisms(); ++m) CHECK(L.rep[m] == L.members[m].front());
    CHECK_FALSE(check_fincat(L.cat));
    CHECK_FALSE(check_ll_composition_choices(F, L));
    CHECK_FALSE(check_pseudocone(F, L.cat, L.lambda));
    for (const auto& [vname, A] : small_vertices()) {
      if (vname == "chain3" || vname == "discrete3") continue;
      CAPTURE(vname);
      CHECK(universal_check_colim(F, L.cat, L.lambda, A, b).ok());
    }
  }
}

TEST_CASE("LL over a single index recovers the fiber") {
  auto t = std::make_shared<const Fin2Cat>(terminal_two_category());
  for (const auto& [name, A] : small_vertices()) {
    CAPTURE(name);
    Budget b;
    PseudoColimit L = pseudocolim_ll(constant_cat_functor(t, A), b);
    CHECK(find_isomorphism(L.cat, A).has_value());
  }
}

TEST_CASE("LL on a non-filtered index is an error") {
  auto d = cat2("discrete2.2cat.json");
  Budget b;
  try {
    pseudocolim_ll(constant_cat_functor(d, terminal_cat()), b);
    FAIL("expected NotTwoFiltered");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTwoFiltered);
  }
}

TEST_CASE("wrong cocones are detected") {
  std::size_t found = 0;
  auto diagrams = filtered_diagrams();
  diagrams.push_back({"const z2", constant_cat_functor(cat2("chain012.2cat.json"), z2_group())});
  for (const auto& [name, F] : diagrams) {
    Budget b;
    PseudoColimit L = pseudocolim_ll(F, b);
    const Fin2Cat& I = *F.source;
    for (int u = 0; u < I.num_ones(); ++u) {
      if (u == I.id1(I.src(u))) continue;
      for (std::size_t x = 0; x < L.lambda.coh[u].comp.size(); ++x) {
        int m = L.lambda.coh[u].comp[x];
        for (int alt : L.cat.hom(L.cat.dom(m), L.cat.cod(m))) {
          if (alt == m) continue;
          PseudoNat bad = L.lambda;
          bad.coh[u].comp[x] = alt;
          CAPTURE(name);
          bool rejected = check_pseudocone(F, L.cat, bad).has_value() ||
                          !universal_check_colim(F, L.cat, bad, discrete_cat({"a", "b"}), b).ok();
          CHECK(rejected);
          ++found;
        }
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("pseudocones") {
  auto p = cat2("poset01.2cat.json");
  FinCat one = terminal_cat();
  CatFunctor K = constant_cat_functor(p, one);
  PseudoNat cone = identity_pseudonat(K);
  CHECK_FALSE(check_pseudocone(K, one, cone));
  CHECK_FALSE(check_pc_morphism(K, one, cone, cone, identity_modification(K, cone)));
  Budget b;
  auto T = pseudocone_category(K, one, b);
  CHECK(T.cat.num_objects() == 1);
  CHECK(T.cat.num_morphisms() == 1);

  CatFunctor F = ws().catvalued(fixture("poset01_F.diag.json"));
  FinCat empty;
  CHECK(pseudocone_category(F, empty, b).cat.num_objects() == 0);
}

TEST_CASE("pseudocone category is the pseudolimit of hom categories") {
  for (const char* f : {"poset01_F.diag.json", "z2_incl.catvalued.json"}) {
    CatFunctor F = ws().catvalued(fixture(f));
    for (const auto& [name, A] : small_vertices()) {
      if (name == "chain3" || name == "discrete3") continue;
      CAPTURE(f);
      CAPTURE(name);
      Budget b;
      auto PC = pseudocone_category(F, A, b);
      CatFunctor H = hom_diagram(F, A);
      REQUIRE_FALSE(check_cat_functor(H));
      auto lim = pseudolim_cat(H, b);
      CHECK(PC.cat.num_objects() == lim.cat.num_objects());
      CHECK(PC.cat.num_morphisms() == lim.cat.num_morphisms());
      CHECK(find_isomorphism(PC.cat, lim.cat).has_value());
    }
  }
}

TEST_CASE("pseudolimits") {
  auto t = std::make_shared<const Fin2Cat>(terminal_two_category());
  for (const auto& [name, A] : small_vertices()) {
    CAPTURE(name);
    Budget b;
    auto L = pseudolim_cat(constant_cat_functor(t, A), b);
    CHECK(find_isomorphism(L.cat, A).has_value());
    CHECK(universal_check_lim(constant_cat_functor(t, A), L.cat, L.cone, discrete_cat({"a", "b"}), b).ok());
  }
  auto p = cat2("poset01.2cat.json");
  CatFunctor E = constant_cat_functor(p, terminal_cat());
  E.fiber[0] = FinCat();
  E.map1[*p->find_one("u")].ob.clear();
  E.map1[*p->find_one("u")].mor.clear();
  E.map1[p->id1(0)] = Functor{};
  E.map2[p->id2(p->id1(0))] = NatTrans{};
  E.map2[p->id2(*p->find_one("u"))] = NatTrans{};
  REQUIRE_FALSE(check_cat_functor(E));
  Budget b;
  CHECK(pseudolim_cat(E, b).cat.num_objects() == 0);

  for (const char* f : {"poset01_F.diag.json", "host3_incl.catvalued.json", "interval_incl.catvalued.json",
                        "z2_incl.catvalued.json"}) {
    CAPTURE(f);
    CatFunctor H = ws().catvalued(fixture(f));
    auto L = pseudolim_cat(H, b);
    auto T = pseudocone_category_lim(H, b);
    CHECK(find_isomorphism(L.cat, T.cat).has_value());
    CHECK_FALSE(check_pseudonat(constant_cat_functor(H.source, L.cat), H, L.cone));
    for (const auto& [name, A] : small_vertices()) {
      if (name == "chain3" || name == "discrete3") continue;
      CAPTURE(name);
      CHECK(universal_check_lim(H, L.cat, L.cone, A, b).ok());
    }
  }
}

TEST_CASE("pointwise colimits") {
  auto I = cat2("poset01.2cat.json");
  CatFunctor F = ws().catvalued(fixture("poset01_F.diag.json"));
  std::vector<FinCat> vertices = {terminal_cat(), discrete_cat({"a", "b"})};

  SUBCASE("single-object base reduces to LL") {
    auto base = std::make_shared<const Fin2Cat>(terminal_two_category());
    auto P = std::make_shared<const Fin2Cat>(product_two_category(*I, *base));
    std::vector<int> ob, on, tw;
    for (int i = 0; i < I->num_objects(); ++i) ob.push_back(i);
    for (int u = 0; u < I->num_ones(); ++u) on.push_back(u);
    for (int a = 0; a < I->num_twos(); ++a) tw.push_back(a);
    CatFunctor D = restrict_along(F, P, ob, on, tw);
    REQUIRE_FALSE(check_cat_functor(D));
    Budget b;
    auto r = pointwise_colim_check(I, base, D, vertices, b);
    CHECK(r.ok());
    CHECK(r.L.fiber[0] == pseudocolim_ll(F, b).cat);
  }
  SUBCASE("constant diagram") {
    auto base = cat2("poset01.2cat.json");
    auto P = std::make_shared<const Fin2Cat>(product_two_category(*I, *base));
    FinCat A = discrete_cat({"a", "b"});
    Budget b;
    auto r = pointwise_colim_check(I, base, constant_cat_functor(P, A), vertices, b);
    CHECK(r.ok());
    CHECK(r.L.fiber[0] == pseudocolim_ll(constant_cat_functor(I, A), b).cat);
    CHECK(r.L.fiber[1] == r.L.fiber[0]);
    for (const auto& f : r.L.map1) CHECK(f == identity_functor(r.L.fiber[0]));
  }
  SUBCASE("two-object base") {
    auto base = cat2("poset01.2cat.json");
    auto P = std::make_shared<const Fin2Cat>(product_two_category(*I, *base));
    int n0 = base->num_objects(), n1 = base->num_ones(), n2 = base->num_twos();
    std::vector<int> ob(P->num_objects()), on(P->num_ones()), tw(P->num_twos());
    for (int x = 0; x < P->num_objects(); ++x) ob[x] = x / n0;
    for (int x = 0; x < P->num_ones(); ++x) on[x] = x / n1;
    for (int x = 0; x < P->num_twos(); ++x) tw[x] = x / n2;
    CatFunctor D = restrict_along(F, P, ob, on, tw);
    REQUIRE_FALSE(check_cat_functor(D));
    Budget b;
    auto r = pointwise_colim_check(I, base, D, vertices, b);
    CHECK_FALSE(r.functor_violation);
    CHECK_FALSE(r.naturality_violation);
    CHECK(r.ok());
    CHECK_FALSE(check_cat_functor(r.L));
  }
}
