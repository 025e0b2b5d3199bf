#include "twopro/kx.hpp"

#include <functional>

namespace twopro {

namespace {

Violation bad_diagram(const std::string& law, std::vector<std::string> w) {
  return Violation{ErrorCode::InvalidDiagram, law, std::move(w)};
}

[[noreturn]] void not_closed(const std::string& what) {
  throw Error(ErrorCode::ValidationFailure, "kx-closure", {what});
}

}  // namespace

std::optional<Violation> check_kx_diagram(ProContext& ctx, const KxDiagram& d) {
  const Fin2Cat& J = *d.index;
  if (static_cast<int>(d.X.size()) != J.num_objects() || static_cast<int>(d.arrow.size()) != J.num_ones() ||
      static_cast<int>(d.cell.size()) != J.num_twos())
    return bad_diagram("diagram-shape", {});
  auto hom = [&](int a) -> const FinCat& { return ctx.hom(d.X[J.tgt(a)], d.X[J.src(a)]).cat(); };
  for (int a = 0; a < J.num_ones(); ++a)
    if (d.arrow[a] < 0 || d.arrow[a] >= hom(a).num_objects()) return bad_diagram("arrow", {J.one_name(a)});
  for (int j = 0; j < J.num_objects(); ++j)
    if (d.arrow[J.id1(j)] != ctx.identity(d.X[j])) return bad_diagram("identity", {J.object_name(j)});
  for (const auto& [g, f, gf] : J.hcomp1_entries()) {
    const auto& x = d.X;
    if (d.arrow[gf] != ctx.compose(x[J.tgt(g)], x[J.tgt(f)], x[J.src(f)], d.arrow[f], d.arrow[g]))
      return bad_diagram("composition", {J.one_name(g), J.one_name(f)});
  }
  for (int al = 0; al < J.num_twos(); ++al) {
    const FinCat& h = hom(J.src2(al));
    int c = d.cell[al];
    if (c < 0 || c >= h.num_morphisms() || h.dom(c) != d.arrow[J.src2(al)] || h.cod(c) != d.arrow[J.tgt2(al)])
      return bad_diagram("cell", {J.two_name(al)});
  }
  for (int a = 0; a < J.num_ones(); ++a)
    if (d.cell[J.id2(a)] != hom(a).id(d.arrow[a])) return bad_diagram("cell-identity", {J.one_name(a)});
  for (const auto& [b, a, r] : J.vcomp_entries())
    if (d.cell[r] != hom(J.src2(a)).comp(d.cell[b], d.cell[a]))
      return bad_diagram("cell-vertical", {J.two_name(b), J.two_name(a)});
  for (const auto& [b, a, r] : J.hcomp2_entries()) {
    const auto& x = d.X;
    if (d.cell[r] != ctx.hcompose(x[J.otgt(b)], x[J.otgt(a)], x[J.osrc(a)], d.cell[a], d.cell[b]))
      return bad_diagram("cell-horizontal", {J.two_name(b), J.two_name(a)});
  }
  return std::nullopt;
}

KxDiagram make_kx_diagram(ProContext& ctx, Fin2CatPtr index, std::vector<ProObjectPtr> X, std::vector<int> arrow,
                          std::vector<int> cell) {
  KxDiagram d;
  d.index = index;
  d.index_op = std::make_shared<const Fin2Cat>(dualize(*index));
  d.filtered = check_two_filtered(*index);
  if (!d.filtered.ok) throw Error(ErrorCode::NotTwoFiltered, d.filtered.axiom, d.filtered.counterexample);
  d.X = std::move(X);
  d.arrow = std::move(arrow);
  d.cell = std::move(cell);
  if (auto v = check_kx_diagram(ctx, d)) throw Error(*v);
  return d;
}

KxCategory kx_build(ProContext& ctx, const KxDiagram& d, std::uint64_t max_cells) {
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& J = *d.index;
  KxCategory k;
  auto cat = std::make_shared<Fin2Cat>();
  // Over budget: report the partial census reached so far.
  auto tick = [&] {
    if (k.ones.size() + k.twos.size() < max_cells) return;
    throw Error(ErrorCode::EnumerationBudgetExceeded, "kx-cells",
                {"max_cells=" + std::to_string(max_cells), "objects=" + std::to_string(k.objects.size()),
                 "one_cells=" + std::to_string(k.ones.size()), "two_cells=" + std::to_string(k.twos.size()),
                 "partial"});
  };

  k.object_at.resize(J.num_objects());
  for (int j = 0; j < J.num_objects(); ++j) {
    const Fin2Cat& I = *d.X[j]->index;
    for (int i = 0; i < I.num_objects(); ++i) {
      k.object_at[j].push_back(static_cast<int>(k.objects.size()));
      k.objects.emplace_back(i, j);
      cat->add_object("(" + I.object_name(i) + "," + J.object_name(j) + ")");
    }
  }

  // pi_i.X^a as an object of hom(X^{j'}, c(X^j_i)).
  auto pi_xa = [&](int a, int i) {
    const auto& Xj = d.X[J.src(a)];
    return ctx.compose(d.X[J.tgt(a)], Xj, ctx.c(Xj->ob(i)), ctx.projection(Xj, i), d.arrow[a]);
  };
  auto r_pi = [&](int a, int i2, int r) {
    const auto& Xj2 = d.X[J.tgt(a)];
    return ctx.compose(Xj2, ctx.c(Xj2->ob(i2)), ctx.c(C.tgt(r)), ctx.embed_one(r), ctx.projection(Xj2, i2));
  };

  std::map<KxOne, int> one_index;
  for (int a = 0; a < J.num_ones(); ++a) {
    int j = J.src(a), j2 = J.tgt(a);
    const auto& Xj = d.X[j];
    const auto& Xj2 = d.X[j2];
    for (int i = 0; i < Xj->index->num_objects(); ++i) {
      const FinCat& h = ctx.hom(Xj2, ctx.c(Xj->ob(i))).cat();
      int src = pi_xa(a, i);
      for (int i2 = 0; i2 < Xj2->index->num_objects(); ++i2)
        for (int r : C.ones(Xj2->ob(i2), Xj->ob(i))) {
          int tgt = r_pi(a, i2, r);
          for (int phi : h.hom(src, tgt)) {
            if (!h.is_iso(phi)) continue;
            tick();
            KxOne e{a, i, i2, r, phi};
            int idx = cat->add_one(J.one_name(a) + ":" + Xj->index->object_name(i) + "->" +
                                       Xj2->index->object_name(i2) + ":" + C.one_name(r) + ":" +
                                       h.morphism_name(phi),
                                   k.object_of(i, j), k.object_of(i2, j2));
            one_index[e] = idx;
            k.ones.push_back(e);
          }
        }
    }
  }

  std::map<std::tuple<int, int, int, int>, int> two_index;
  const Fin2Cat& K = *cat;
  for (int e1 = 0; e1 < K.num_ones(); ++e1)
    for (int e2 : K.ones(K.src(e1), K.tgt(e1))) {
      const KxOne& p = k.ones[e1];
      const KxOne& q = k.ones[e2];
      const auto& Xj = d.X[J.src(p.a)];
      const auto& Xj2 = d.X[J.tgt(p.a)];
      auto cx = ctx.c(Xj->ob(p.i));
      const FinCat& h = ctx.hom(Xj2, cx).cat();
      for (int al : J.twos(p.a, q.a)) {
        int pa = ctx.whisker_post(Xj2, Xj, cx, ctx.projection(Xj, p.i), d.cell[al]);
        int rhs = h.comp(q.phi, pa);
        for (int th : C.twos(p.r, q.r)) {
          int tp = ctx.whisker_pre(Xj2, ctx.c(Xj2->ob(p.i2)), cx, ctx.embed_two(th), ctx.projection(Xj2, p.i2));
          if (h.comp(tp, p.phi) != rhs) continue;
          tick();
          int idx = cat->add_two("(" + J.two_name(al) + "," + C.two_name(th) + ")#" +
                                     std::to_string(k.twos.size()),
                                 e1, e2);
          two_index[{e1, e2, al, th}] = idx;
          k.twos.push_back({al, th});
        }
      }
    }

  auto find_one = [&](const KxOne& e) {
    auto it = one_index.find(e);
    if (it == one_index.end()) not_closed(J.one_name(e.a) + "/" + C.one_name(e.r));
    return it->second;
  };
  auto find_two = [&](int e1, int e2, int al, int th) {
    auto it = two_index.find({e1, e2, al, th});
    if (it == two_index.end()) not_closed(J.two_name(al) + "/" + C.two_name(th));
    return it->second;
  };

  for (int o = 0; o < K.num_objects(); ++o) {
    auto [i, j] = k.objects[o];
    int a = J.id1(j);
    int src = pi_xa(a, i);
    const FinCat& h = ctx.hom(d.X[j], ctx.c(d.X[j]->ob(i))).cat();
    cat->set_id1(o, find_one({a, i, i, C.id1(d.X[j]->ob(i)), h.id(src)}));
  }
  for (int e = 0; e < K.num_ones(); ++e)
    cat->set_id2(e, find_two(e, e, J.id2(k.ones[e].a), C.id2(k.ones[e].r)));

  for (int e1 = 0; e1 < K.num_ones(); ++e1)
    for (int e2 = 0; e2 < K.num_ones(); ++e2) {
      if (K.tgt(e1) != K.src(e2)) continue;
      const KxOne& p = k.ones[e1];
      const KxOne& q = k.ones[e2];
      const auto& Xj = d.X[J.src(p.a)];
      const auto& Xj2 = d.X[J.tgt(p.a)];
      const auto& Xj3 = d.X[J.tgt(q.a)];
      auto cx = ctx.c(Xj->ob(p.i));
      const FinCat& h = ctx.hom(Xj3, cx).cat();
      int rq = ctx.whisker_post(Xj3, ctx.c(Xj2->ob(p.i2)), cx, ctx.embed_one(p.r), q.phi);
      int px = ctx.whisker_pre(Xj3, Xj2, cx, p.phi, d.arrow[q.a]);
      int phi = h.comp(rq, px);
      if (phi < 0) not_closed("phi-composite");
      cat->set_hcomp1(e2, e1, find_one({J.hcomp1(q.a, p.a), p.i, q.i2, C.hcomp1(p.r, q.r), phi}));
    }

  std::vector<std::vector<int>> out(K.num_ones());
  for (int t = 0; t < K.num_twos(); ++t) out[K.src2(t)].push_back(t);
  for (int t1 = 0; t1 < K.num_twos(); ++t1)
    for (int t2 : out[K.tgt2(t1)])
      cat->set_vcomp(t2, t1, find_two(K.src2(t1), K.tgt2(t2), J.vcomp(k.twos[t2].alpha, k.twos[t1].alpha),
                                      C.vcomp(k.twos[t2].theta, k.twos[t1].theta)));
  for (int t1 = 0; t1 < K.num_twos(); ++t1)
    for (int t2 = 0; t2 < K.num_twos(); ++t2) {
      if (K.otgt(t1) != K.osrc(t2)) continue;
      int s = K.hcomp1(K.src2(t2), K.src2(t1)), t = K.hcomp1(K.tgt2(t2), K.tgt2(t1));
      cat->set_hcomp2(t2, t1, find_two(s, t, J.hcomp2(k.twos[t2].alpha, k.twos[t1].alpha),
                                       C.hcomp2(k.twos[t1].theta, k.twos[t2].theta)));
    }

  if (auto v = check_two_category(K)) throw Error(ErrorCode::ValidationFailure, "kx-" + v->law, v->witness);
  k.cat = cat;
  return k;
}

FilterResult kx_filtered_verify(const KxCategory& k) { return check_two_filtered(*k.cat); }

ProObjectPtr tilde_x(ProContext& ctx, const KxCategory& k, const KxDiagram& d) {
  std::vector<int> ob, one, two;
  for (auto [i, j] : k.objects) ob.push_back(d.X[j]->ob(i));
  for (const auto& e : k.ones) one.push_back(e.r);
  for (const auto& t : k.twos) two.push_back(t.theta);
  return make_pro("X~", k.cat, ctx.host_ptr(), std::move(ob), std::move(one), std::move(two));
}

ProConeCategory pro_cone_category(ProContext& ctx, const KxDiagram& d, const ProObjectPtr& Z) {
  const Fin2Cat& J = *d.index;
  ProConeCategory pc;
  CatFunctor& N = pc.N;
  N.source = d.index_op;
  for (const auto& x : d.X) N.fiber.push_back(ctx.hom(Z, x).cat());
  for (int a = 0; a < J.num_ones(); ++a) {
    const auto& Xj = d.X[J.src(a)];
    const auto& Xj2 = d.X[J.tgt(a)];
    const FinCat& from = ctx.hom(Z, Xj2).cat();
    Functor f;
    for (int h = 0; h < from.num_objects(); ++h) f.ob.push_back(ctx.compose(Z, Xj2, Xj, d.arrow[a], h));
    for (int m = 0; m < from.num_morphisms(); ++m) f.mor.push_back(ctx.whisker_post(Z, Xj2, Xj, d.arrow[a], m));
    N.map1.push_back(std::move(f));
  }
  for (int be = 0; be < J.num_twos(); ++be) {
    const auto& Xj = d.X[J.osrc(be)];
    const auto& Xj2 = d.X[J.otgt(be)];
    NatTrans t;
    for (int h = 0; h < ctx.hom(Z, Xj2).cat().num_objects(); ++h)
      t.comp.push_back(ctx.whisker_pre(Z, Xj2, Xj, d.cell[be], h));
    N.map2.push_back(std::move(t));
  }
  pc.lim = pseudolim_cat(N, ctx.budget());
  return pc;
}

UniversalReport pro_limit_check(ProContext& ctx, const KxDiagram& d, const KxCategory& k, const ProObjectPtr& Xt,
                                const ProObjectPtr& Z) {
  const Fin2Cat& J = *d.index;
  const ProHom& T = ctx.hom(Z, Xt);
  ProConeCategory pc = pro_cone_category(ctx, d, Z);
  const PseudoLimit& Lc = pc.lim;
  UniversalReport r;
  r.source_objects = Lc.cat.num_objects();
  r.source_morphisms = Lc.cat.num_morphisms();
  r.target_objects = T.cat().num_objects();
  r.target_morphisms = T.cat().num_morphisms();

  // pi_i.h for an object or morphism h of hom(Z, X^j), as a component in hom(Z, c(X^j_i)).
  auto on_obj = [&](int i, int j, int h) {
    const auto& Xj = d.X[j];
    auto cx = ctx.c(Xj->ob(i));
    return ctx.compose(Z, Xj, cx, ctx.projection(Xj, i), h);
  };

  std::vector<int> obj_image(Lc.cat.num_objects(), -1);
  std::vector<char> hit_obj(T.cat().num_objects()), hit_mor(T.cat().num_morphisms());
  for (int c = 0; c < Lc.cat.num_objects(); ++c) {
    std::vector<int> x(k.objects.size()), xi;
    for (std::size_t o = 0; o < k.objects.size(); ++o) {
      auto [i, j] = k.objects[o];
      const ProHom& hz = ctx.hom(Z, ctx.c(d.X[j]->ob(i)));
      x[o] = hz.lim.x[on_obj(i, j, Lc.x[c][j])][0];
    }
    for (const auto& e : k.ones) {
      int j = J.src(e.a), j2 = J.tgt(e.a);
      const auto& Xj = d.X[j];
      const auto& Xj2 = d.X[j2];
      auto cx = ctx.c(Xj->ob(e.i));
      const ProHom& hz = ctx.hom(Z, cx);
      const FinCat& hj = ctx.hom(Z, Xj).cat();
      int ha = hj.inverse(Lc.xi[c][e.a]);
      int m1 = ctx.whisker_post(Z, Xj, cx, ctx.projection(Xj, e.i), ha);
      int m2 = ctx.whisker_pre(Z, Xj2, cx, e.phi, Lc.x[c][j2]);
      int m = hz.cat().comp(m2, m1);
      if (m < 0) throw Error(ErrorCode::ValidationFailure, "pro-limit", {"associativity"});
      xi.push_back(hz.lim.m[hz.cat().inverse(m)][0]);
    }
    int t = T.lim.find_object(x, xi);
    obj_image[c] = t;
    if (t < 0) {
      r.well_defined = false;
      r.witness = {"object", Lc.cat.object_name(c)};
      return r;
    }
    if (hit_obj[t]) r.witness = {"object-collision", T.cat().object_name(t)};
    hit_obj[t] = 1;
  }
  for (int m = 0; m < Lc.cat.num_morphisms(); ++m) {
    std::vector<int> ms;
    for (auto [i, j] : k.objects) {
      const auto& Xj = d.X[j];
      auto cx = ctx.c(Xj->ob(i));
      int w = ctx.whisker_post(Z, Xj, cx, ctx.projection(Xj, i), Lc.m[m][j]);
      ms.push_back(ctx.hom(Z, cx).lim.m[w][0]);
    }
    int t = T.lim.find_morphism(obj_image[Lc.cat.dom(m)], obj_image[Lc.cat.cod(m)], ms);
    if (t < 0) {
      r.well_defined = false;
      r.witness = {"morphism", Lc.cat.morphism_name(m)};
      return r;
    }
    if (hit_mor[t] && r.witness.empty()) r.witness = {"morphism-collision", T.cat().morphism_name(t)};
    hit_mor[t] = 1;
  }
  auto all = [](const std::vector<char>& v) { return std::all_of(v.begin(), v.end(), [](char c) { return c; }); };
  r.objects_bijective = r.source_objects == r.target_objects && all(hit_obj);
  r.morphisms_bijective = r.source_morphisms == r.target_morphisms && all(hit_mor);
  return r;
}

HatExtension hat_extension(const CatFunctor& F, const ProObject& X, Budget& budget) {
  HatExtension h;
  h.H = compose(F, X.diagram);
  h.lim = pseudolim_cat(h.H, budget);
  return h;
}

ExtensionReport universality_faithfulness_check(const CatFunctor& F, const CatFunctor& G, const PseudoNat& theta,
                                                const ProObject& X, const FinCat& target,
                                                const PseudoNat& target_cone, Budget& budget) {
  if (!is_strict(F, G, theta)) throw Error(ErrorCode::InvalidDiagram, "strict-theta");
  const Fin2Cat& I = *X.index_op;
  HatExtension src = hat_extension(F, X, budget);
  const FinCat& S = src.lim.cat;
  const PseudoNat& P = src.lim.cone;

  std::vector<std::vector<int>> obj_cand(S.num_objects());
  for (int x = 0; x < S.num_objects(); ++x)
    for (int y = 0; y < target.num_objects(); ++y) {
      budget.tick();
      bool ok = true;
      for (int i = 0; i < I.num_objects() && ok; ++i)
        ok = target_cone.comp[i].ob[y] == theta.comp[X.ob(i)].ob[P.comp[i].ob[x]];
      for (int u = 0; u < I.num_ones() && ok; ++u)
        ok = target_cone.coh[u].comp[y] == theta.comp[X.ob(I.tgt(u))].mor[P.coh[u].comp[x]];
      if (ok) obj_cand[x].push_back(y);
    }

  ExtensionReport rep;
  Functor e;
  e.ob.assign(S.num_objects(), -1);
  e.mor.assign(S.num_morphisms(), -1);
  std::function<void(int)> mors = [&](int m) {
    if (m == S.num_morphisms()) {
      for (const auto& [g, f, gf] : S.comp_entries())
        if (target.comp(e.mor[g], e.mor[f]) != e.mor[gf]) return;
      for (int x = 0; x < S.num_objects(); ++x)
        if (e.mor[S.id(x)] != target.id(e.ob[x])) return;
      if (rep.extensions++ == 0) rep.first = e;
      return;
    }
    for (int n : target.hom(e.ob[S.dom(m)], e.ob[S.cod(m)])) {
      budget.tick();
      bool ok = true;
      for (int i = 0; i < I.num_objects() && ok; ++i)
        ok = target_cone.comp[i].mor[n] == theta.comp[X.ob(i)].mor[P.comp[i].mor[m]];
      if (!ok) continue;
      e.mor[m] = n;
      mors(m + 1);
    }
    e.mor[m] = -1;
  };
  std::function<void(int)> objs = [&](int x) {
    if (x == S.num_objects()) {
      mors(0);
      return;
    }
    for (int y : obj_cand[x]) {
      e.ob[x] = y;
      objs(x + 1);
    }
    e.ob[x] = -1;
  };
  objs(0);
  return rep;
}

}  // namespace twopro
