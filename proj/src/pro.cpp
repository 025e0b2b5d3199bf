#include "twopro/pro.hpp"

namespace twopro {

namespace {

Error invalid(const std::string& law, std::vector<std::string> w = {}) {
  return Error(ErrorCode::InvalidDiagram, law, std::move(w));
}

Fin2CatPtr terminal_ptr() {
  static const Fin2CatPtr t = std::make_shared<const Fin2Cat>(terminal_two_category());
  return t;
}

}  // namespace

ProObjectPtr make_pro(std::string name, Fin2CatPtr index, Fin2CatPtr host, TwoFunctor diagram) {
  auto p = std::make_shared<ProObject>();
  p->name = std::move(name);
  p->index = index;
  p->index_op = std::make_shared<const Fin2Cat>(dualize(*index));
  p->host = host;
  if (static_cast<int>(diagram.ob.size()) != index->num_objects() ||
      static_cast<int>(diagram.one.size()) != index->num_ones() ||
      static_cast<int>(diagram.two.size()) != index->num_twos())
    throw invalid("diagram-shape", {p->name});
  diagram.source = p->index_op;
  diagram.target = host;
  if (auto v = check_two_functor(diagram)) throw invalid(v->law, v->witness);
  p->diagram = std::move(diagram);
  p->filtered = check_two_filtered(*index);
  if (!p->filtered.ok) throw Error(ErrorCode::NotTwoFiltered, p->filtered.axiom, p->filtered.counterexample);
  return p;
}

ProObjectPtr make_pro(std::string name, Fin2CatPtr index, Fin2CatPtr host, std::vector<int> ob,
                      std::vector<int> one, std::vector<int> two) {
  TwoFunctor d;
  d.ob = std::move(ob);
  d.one = std::move(one);
  d.two = std::move(two);
  return make_pro(std::move(name), std::move(index), std::move(host), std::move(d));
}

ProObjectPtr embed_c(Fin2CatPtr host, int a) {
  int id = host->id1(a);
  return make_pro("c(" + host->object_name(a) + ")", terminal_ptr(), host, {a}, {id}, {host->id2(id)});
}

ProObjectPtr pro_map(const TwoFunctor& F, const ProObjectPtr& X) {
  TwoFunctor d = compose(F, X->diagram);
  return make_pro(X->name, X->index, F.target, std::move(d));
}

int ProHom::ll_object(int j, int i, int r) const {
  int c = homs[j][i].obj_of_one[r];
  if (c < 0) throw Error(ErrorCode::NotComposable, "ll-object", {X->name, Y->name});
  return colim[j].object_of(i, c);
}

std::pair<int, int> ProHom::ll_parts(int j, int o) const {
  auto [i, c] = colim[j].objects[o];
  return {i, homs[j][i].one[c]};
}

ProContext::ProContext(Fin2CatPtr host, std::uint64_t budget) : host_(std::move(host)), budget_(budget) {}

ProObjectPtr ProContext::c(int a) {
  auto it = embedded_.find(a);
  if (it != embedded_.end()) return it->second;
  return embedded_[a] = embed_c(host_, a);
}

const ProHom& ProContext::hom(const ProObjectPtr& X, const ProObjectPtr& Y) {
  auto key = std::make_pair(X.get(), Y.get());
  if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  for (const auto* p : {X.get(), Y.get()})
    if (p->host != host_ && !(*p->host == *host_)) throw invalid("host-mismatch", {p->name});

  const Fin2Cat& C = *host_;
  const Fin2Cat& I = *X->index;
  const Fin2Cat& J = *Y->index;
  auto h = std::make_unique<ProHom>();
  h->X = X;
  h->Y = Y;
  for (int j = 0; j < J.num_objects(); ++j) {
    CatFunctor G;
    G.source = X->index;
    std::vector<HomIndex> hs;
    for (int i = 0; i < I.num_objects(); ++i) {
      hs.push_back(hom_index(C, X->ob(i), Y->ob(j)));
      G.fiber.push_back(hs.back().cat);
    }
    for (int u = 0; u < I.num_ones(); ++u) {
      int i = I.src(u), i2 = I.tgt(u), xu = X->one(u);
      Functor f;
      for (int r : hs[i].one) f.ob.push_back(hs[i2].obj_of_one[C.hcomp1(r, xu)]);
      for (int s : hs[i].two) f.mor.push_back(hs[i2].mor_of_two[C.hcomp2(s, C.id2(xu))]);
      G.map1.push_back(std::move(f));
    }
    for (int a = 0; a < I.num_twos(); ++a) {
      int i = I.osrc(a), i2 = I.otgt(a), xa = X->two(a);
      NatTrans t;
      for (int r : hs[i].one) t.comp.push_back(hs[i2].mor_of_two[C.hcomp2(C.id2(r), xa)]);
      G.map2.push_back(std::move(t));
    }
    h->colim.push_back(pseudocolim_ll(G, X->filtered, budget_));
    h->G.push_back(std::move(G));
    h->homs.push_back(std::move(hs));
  }

  CatFunctor& M = h->M;
  M.source = Y->index_op;
  for (const auto& L : h->colim) M.fiber.push_back(L.cat);
  for (int b = 0; b < J.num_ones(); ++b) {
    int j = J.src(b), j2 = J.tgt(b), yb = Y->one(b);
    const PseudoColimit& from = h->colim[j2];
    Functor f;
    for (int o = 0; o < from.cat.num_objects(); ++o) {
      auto [i, r] = h->ll_parts(j2, o);
      f.ob.push_back(h->ll_object(j, i, C.hcomp1(yb, r)));
    }
    for (int m = 0; m < from.cat.num_morphisms(); ++m) {
      const Premorphism& p = from.rep[m];
      int k = I.tgt(p.u);
      int s = C.hcomp2(C.id2(yb), h->homs[j2][k].two[p.f]);
      f.mor.push_back(h->colim[j].class_of(f.ob[from.cat.dom(m)], f.ob[from.cat.cod(m)],
                                           {p.u, h->homs[j][k].mor_of_two[s], p.v}));
    }
    M.map1.push_back(std::move(f));
  }
  for (int be = 0; be < J.num_twos(); ++be) {
    int j = J.osrc(be), j2 = J.otgt(be);
    int yb = Y->one(J.src2(be)), yb2 = Y->one(J.tgt2(be)), ybe = Y->two(be);
    NatTrans t;
    for (int o = 0; o < h->colim[j2].cat.num_objects(); ++o) {
      auto [i, r] = h->ll_parts(j2, o);
      int s = C.hcomp2(ybe, C.id2(r));
      t.comp.push_back(h->colim[j].class_of(h->ll_object(j, i, C.hcomp1(yb, r)),
                                            h->ll_object(j, i, C.hcomp1(yb2, r)),
                                            {I.id1(i), h->homs[j][i].mor_of_two[s], I.id1(i)}));
    }
    M.map2.push_back(std::move(t));
  }
  h->lim = pseudolim_cat(M, budget_);
  return *(cache_[key] = std::move(h));
}

int ProContext::post_object(const ProHom& xy, int j, const ProHom& xz, int k, int s, int o) {
  auto [i, r] = xy.ll_parts(j, o);
  return xz.ll_object(k, i, host_->hcomp1(s, r));
}

int ProContext::post_morphism(const ProHom& xy, int j, const ProHom& xz, int k, int s, int m) {
  const Fin2Cat& C = *host_;
  const PseudoColimit& L = xy.colim[j];
  const Premorphism& p = L.rep[m];
  int kk = xy.X->index->tgt(p.u);
  int sig = C.hcomp2(C.id2(s), xy.homs[j][kk].two[p.f]);
  return xz.colim[k].class_of(post_object(xy, j, xz, k, s, L.cat.dom(m)),
                              post_object(xy, j, xz, k, s, L.cat.cod(m)),
                              {p.u, xz.homs[k][kk].mor_of_two[sig], p.v});
}

int ProContext::pull_morphism(const ProHom& xy, const ProHom& yz, const ProHom& xz, int f, int k, int m) {
  const Fin2Cat& C = *host_;
  const Fin2Cat& I = *xy.X->index;
  const PseudoColimit& L = yz.colim[k];
  const Premorphism& p = L.rep[m];
  int mm = yz.X->index->tgt(p.u);
  auto [j1, s1] = yz.ll_parts(k, L.cat.dom(m));
  auto [j2, s2] = yz.ll_parts(k, L.cat.cod(m));
  int sig = yz.homs[k][mm].two[p.f];
  auto [im, rm] = xy.ll_parts(mm, xy.lim.x[f][mm]);

  int a = post_morphism(xy, j1, xz, k, s1, xy.lim.xi[f][p.u]);
  int c = post_morphism(xy, j2, xz, k, s2, xy.lim.xi[f][p.v]);
  int tau = C.hcomp2(sig, C.id2(rm));
  const PseudoColimit& out = xz.colim[k];
  int mid = out.class_of(xz.ll_object(k, im, C.src2(tau)), xz.ll_object(k, im, C.tgt2(tau)),
                         {I.id1(im), xz.homs[k][im].mor_of_two[tau], I.id1(im)});
  int r = out.cat.comp(c, out.cat.comp(mid, out.cat.inverse(a)));
  if (r < 0) throw Error(ErrorCode::ValidationFailure, "pro-pullback", {L.cat.morphism_name(m)});
  return r;
}

int ProContext::compose(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int g, int f) {
  const ProHom& xy = hom(X, Y);
  const ProHom& yz = hom(Y, Z);
  const ProHom& xz = hom(X, Z);
  const Fin2Cat& K = *Z->index;
  std::vector<int> x(K.num_objects()), xi(K.num_ones());
  for (int k = 0; k < K.num_objects(); ++k) {
    auto [j, s] = yz.ll_parts(k, yz.lim.x[g][k]);
    x[k] = post_object(xy, j, xz, k, s, xy.lim.x[f][j]);
  }
  for (int c = 0; c < K.num_ones(); ++c) xi[c] = pull_morphism(xy, yz, xz, f, K.src(c), yz.lim.xi[g][c]);
  int r = xz.lim.find_object(x, xi);
  if (r < 0)
    throw Error(ErrorCode::ValidationFailure, "pro-compose", {yz.cat().object_name(g), xy.cat().object_name(f)});
  return r;
}

int ProContext::whisker_post(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int g,
                             int mu) {
  const ProHom& xy = hom(X, Y);
  const ProHom& yz = hom(Y, Z);
  const ProHom& xz = hom(X, Z);
  std::vector<int> ms;
  for (int k = 0; k < Z->index->num_objects(); ++k) {
    auto [j, s] = yz.ll_parts(k, yz.lim.x[g][k]);
    ms.push_back(post_morphism(xy, j, xz, k, s, xy.lim.m[mu][j]));
  }
  int src = compose(X, Y, Z, g, xy.cat().dom(mu));
  int tgt = compose(X, Y, Z, g, xy.cat().cod(mu));
  int r = xz.lim.find_morphism(src, tgt, ms);
  if (r < 0) throw Error(ErrorCode::ValidationFailure, "pro-whisker", {xy.cat().morphism_name(mu)});
  return r;
}

int ProContext::whisker_pre(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int nu,
                            int f) {
  const ProHom& xy = hom(X, Y);
  const ProHom& yz = hom(Y, Z);
  const ProHom& xz = hom(X, Z);
  std::vector<int> ms;
  for (int k = 0; k < Z->index->num_objects(); ++k) ms.push_back(pull_morphism(xy, yz, xz, f, k, yz.lim.m[nu][k]));
  int src = compose(X, Y, Z, yz.cat().dom(nu), f);
  int tgt = compose(X, Y, Z, yz.cat().cod(nu), f);
  int r = xz.lim.find_morphism(src, tgt, ms);
  if (r < 0) throw Error(ErrorCode::ValidationFailure, "pro-whisker", {yz.cat().morphism_name(nu)});
  return r;
}

int ProContext::hcompose(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int nu, int mu) {
  const FinCat& xy = hom(X, Y).cat();
  const FinCat& yz = hom(Y, Z).cat();
  int a = whisker_post(X, Y, Z, yz.dom(nu), mu);
  int b = whisker_pre(X, Y, Z, nu, xy.cod(mu));
  return hom(X, Z).cat().comp(b, a);
}

int ProContext::identity(const ProObjectPtr& X) {
  const ProHom& h = hom(X, X);
  const Fin2Cat& C = *host_;
  const Fin2Cat& I = *X->index;
  std::vector<int> x, xi;
  for (int j = 0; j < I.num_objects(); ++j) x.push_back(h.ll_object(j, j, C.id1(X->ob(j))));
  for (int b = 0; b < I.num_ones(); ++b) {
    int j = I.src(b), j2 = I.tgt(b), xb = X->one(b);
    xi.push_back(h.colim[j].class_of(h.ll_object(j, j2, xb), x[j],
                                     {I.id1(j2), h.homs[j][j2].mor_of_two[C.id2(xb)], b}));
  }
  int r = h.lim.find_object(x, xi);
  if (r < 0) throw Error(ErrorCode::ValidationFailure, "pro-identity", {X->name});
  return r;
}

int ProContext::projection(const ProObjectPtr& X, int i) {
  const ProHom& h = hom(X, c(X->ob(i)));
  int o = h.ll_object(0, i, host_->id1(X->ob(i)));
  return h.lim.find_object({o}, {h.colim[0].cat.id(o)});
}

int ProContext::projection_coherence(const ProObjectPtr& X, int u) {
  const Fin2Cat& I = *X->index;
  int i = I.src(u), i2 = I.tgt(u), xu = X->one(u);
  auto cx = c(X->ob(i));
  const ProHom& h = hom(X, cx);
  int src = projection(X, i);
  int tgt = compose(X, c(X->ob(i2)), cx, embed_one(xu), projection(X, i2));
  int m = h.colim[0].class_of(h.lim.x[src][0], h.lim.x[tgt][0],
                              {u, h.homs[0][i2].mor_of_two[host_->id2(xu)], I.id1(i2)});
  return h.lim.find_morphism(src, tgt, {m});
}

int ProContext::embed_one(int r) {
  const ProHom& h = hom(c(host_->src(r)), c(host_->tgt(r)));
  int o = h.ll_object(0, 0, r);
  return h.lim.find_object({o}, {h.colim[0].cat.id(o)});
}

int ProContext::embed_two(int sigma) {
  int r = host_->src2(sigma), s = host_->tgt2(sigma);
  const ProHom& h = hom(c(host_->src(r)), c(host_->tgt(r)));
  int id = terminal_ptr()->id1(0);
  int m = h.colim[0].class_of(h.ll_object(0, 0, r), h.ll_object(0, 0, s),
                              {id, h.homs[0][0].mor_of_two[sigma], id});
  return h.lim.find_morphism(embed_one(r), embed_one(s), {m});
}

std::optional<Violation> check_arrow_rep(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int f,
                                         int j, const ArrowRep& rep) {
  const Fin2Cat& C = ctx.host();
  auto bad = [&](const std::string& what) {
    return Violation{ErrorCode::ValidationFailure, "arrow-rep", {what, Y->index->object_name(j)}};
  };
  if (rep.i < 0 || rep.i >= X->index->num_objects() || rep.r < 0 || rep.r >= C.num_ones()) return bad("range");
  if (C.src(rep.r) != X->ob(rep.i) || C.tgt(rep.r) != Y->ob(j)) return bad("boundary");
  auto cy = ctx.c(Y->ob(j));
  const FinCat& hc = ctx.hom(X, cy).cat();
  int src = ctx.compose(X, Y, cy, ctx.projection(Y, j), f);
  int tgt = ctx.compose(X, ctx.c(X->ob(rep.i)), cy, ctx.embed_one(rep.r), ctx.projection(X, rep.i));
  if (rep.phi < 0 || rep.phi >= hc.num_morphisms() || hc.dom(rep.phi) != src || hc.cod(rep.phi) != tgt)
    return bad("phi-boundary");
  if (!hc.is_iso(rep.phi)) return bad("phi-invertible");
  return std::nullopt;
}

ArrowRep represent_arrow(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int f, int j) {
  const ProHom& h = ctx.hom(X, Y);
  auto [i, r] = h.ll_parts(j, h.lim.x[f][j]);
  auto cy = ctx.c(Y->ob(j));
  int o = ctx.compose(X, Y, cy, ctx.projection(Y, j), f);
  ArrowRep rep{i, r, ctx.hom(X, cy).cat().id(o)};
  if (auto v = check_arrow_rep(ctx, X, Y, f, j, rep)) throw Error(*v);
  return rep;
}

std::optional<Violation> check_cell_rep(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int alpha,
                                        int j, const CellRep& rep) {
  const FinCat& hxy = ctx.hom(X, Y).cat();
  if (auto v = check_arrow_rep(ctx, X, Y, hxy.dom(alpha), j, rep.from)) return v;
  if (auto v = check_arrow_rep(ctx, X, Y, hxy.cod(alpha), j, rep.to)) return v;
  const Fin2Cat& C = ctx.host();
  auto bad = [&](const std::string& what) {
    return Violation{ErrorCode::ValidationFailure, "cell-rep", {what, hxy.morphism_name(alpha)}};
  };
  if (rep.from.i != rep.k || rep.to.i != rep.k) return bad("index");
  if (rep.theta < 0 || rep.theta >= C.num_twos() || C.src2(rep.theta) != rep.from.r ||
      C.tgt2(rep.theta) != rep.to.r)
    return bad("theta-boundary");
  auto cy = ctx.c(Y->ob(j));
  const FinCat& hc = ctx.hom(X, cy).cat();
  int tp = ctx.whisker_pre(X, ctx.c(X->ob(rep.k)), cy, ctx.embed_two(rep.theta), ctx.projection(X, rep.k));
  int pa = ctx.whisker_post(X, Y, cy, ctx.projection(Y, j), alpha);
  if (hc.comp(tp, rep.from.phi) != hc.comp(rep.to.phi, pa)) return bad("square");
  return std::nullopt;
}

CellRep represent_cell(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int alpha, int j) {
  const ProHom& h = ctx.hom(X, Y);
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& I = *X->index;
  const PseudoColimit& L = h.colim[j];
  int a = h.lim.m[alpha][j];
  const Premorphism& p = L.rep[a];
  auto [i, r] = h.ll_parts(j, L.cat.dom(a));
  auto [i2, s] = h.ll_parts(j, L.cat.cod(a));
  int k = I.tgt(p.u);
  auto cy = ctx.c(Y->ob(j));
  auto side = [&](int ii, int rr, int w) {
    return ArrowRep{k, C.hcomp1(rr, X->one(w)),
                    ctx.whisker_post(X, ctx.c(X->ob(ii)), cy, ctx.embed_one(rr), ctx.projection_coherence(X, w))};
  };
  CellRep rep{k, h.homs[j][k].two[p.f], side(i, r, p.u), side(i2, s, p.v)};
  if (auto v = check_cell_rep(ctx, X, Y, alpha, j, rep)) throw Error(*v);
  return rep;
}

std::optional<Violation> check_lemma1(ProContext& ctx, const ProObjectPtr& X, int Cobj, int i, int r, int j, int s,
                                      int alpha, const Lemma1Witness& w) {
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& I = *X->index;
  auto bad = [&](const std::string& what) {
    return Violation{ErrorCode::ValidationFailure, "lemma1", {what}};
  };
  if (w.u < 0 || w.v < 0 || I.src(w.u) != i || I.src(w.v) != j || I.tgt(w.u) != w.k || I.tgt(w.v) != w.k)
    return bad("index");
  if (w.theta < 0 || C.src2(w.theta) != C.hcomp1(r, X->one(w.u)) || C.tgt2(w.theta) != C.hcomp1(s, X->one(w.v)))
    return bad("theta-boundary");
  auto cc = ctx.c(Cobj);
  const FinCat& hc = ctx.hom(X, cc).cat();
  int sv = ctx.whisker_post(X, ctx.c(X->ob(j)), cc, ctx.embed_one(s), ctx.projection_coherence(X, w.v));
  int ru = ctx.whisker_post(X, ctx.c(X->ob(i)), cc, ctx.embed_one(r), ctx.projection_coherence(X, w.u));
  int tp = ctx.whisker_pre(X, ctx.c(X->ob(w.k)), cc, ctx.embed_two(w.theta), ctx.projection(X, w.k));
  if (hc.comp(sv, alpha) != hc.comp(tp, ru)) return bad("square");
  return std::nullopt;
}

Lemma1Witness lemma1_search(ProContext& ctx, const ProObjectPtr& X, int Cobj, int i, int r, int j, int s,
                            int alpha) {
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& I = *X->index;
  auto cc = ctx.c(Cobj);
  const FinCat& hc = ctx.hom(X, cc).cat();
  if (hc.dom(alpha) != ctx.compose(X, ctx.c(X->ob(i)), cc, ctx.embed_one(r), ctx.projection(X, i)) ||
      hc.cod(alpha) != ctx.compose(X, ctx.c(X->ob(j)), cc, ctx.embed_one(s), ctx.projection(X, j)))
    throw Error(ErrorCode::ValidationFailure, "lemma1", {"alpha-boundary"});
  for (int pass = i == j ? 0 : 1; pass < 2; ++pass)
    for (int k = 0; k < I.num_objects(); ++k)
      for (int u : I.ones(i, k))
        for (int v : I.ones(j, k)) {
          if (pass == 0 && u != v) continue;
          for (int t : C.twos(C.hcomp1(r, X->one(u)), C.hcomp1(s, X->one(v)))) {
            ctx.budget().tick();
            Lemma1Witness w{k, u, v, t};
            if (!check_lemma1(ctx, X, Cobj, i, r, j, s, alpha, w)) return w;
          }
        }
  throw Error(ErrorCode::SearchExhausted, "lemma1", {hc.morphism_name(alpha)});
}

int lemma4_search(ProContext& ctx, const ProObjectPtr& X, int i, int theta, int theta2) {
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& I = *X->index;
  std::vector<int> order{I.id1(i)};
  for (int u = 0; u < I.num_ones(); ++u)
    if (I.src(u) == i && u != I.id1(i)) order.push_back(u);
  for (int u : order) {
    ctx.budget().tick();
    int w = C.id2(X->one(u));
    if (C.hcomp2(theta, w) == C.hcomp2(theta2, w)) return u;
  }
  throw Error(ErrorCode::SearchExhausted, "lemma4", {C.two_name(theta), C.two_name(theta2)});
}

Lemma2Witness lemma2_search(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int alpha, int j,
                            const ArrowRep& f_rep, const ArrowRep& g_rep) {
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& I = *X->index;
  auto cy = ctx.c(Y->ob(j));
  const FinCat& hc = ctx.hom(X, cy).cat();
  auto extend = [&](const ArrowRep& a, int w, int k) {
    int pw = ctx.whisker_post(X, ctx.c(X->ob(a.i)), cy, ctx.embed_one(a.r), ctx.projection_coherence(X, w));
    return ArrowRep{k, C.hcomp1(a.r, X->one(w)), hc.comp(pw, a.phi)};
  };
  const int i = f_rep.i, i2 = g_rep.i;
  for (int pass = i == i2 ? 0 : 1; pass < 2; ++pass)
    for (int k = 0; k < I.num_objects(); ++k)
      for (int u : I.ones(i, k))
        for (int v : I.ones(i2, k)) {
          if (pass == 0 && u != v) continue;
          ArrowRep from = extend(f_rep, u, k), to = extend(g_rep, v, k);
          for (int t : C.twos(from.r, to.r)) {
            ctx.budget().tick();
            CellRep rep{k, t, from, to};
            if (!check_cell_rep(ctx, X, Y, alpha, j, rep)) return {k, u, v, t, rep};
          }
        }
  throw Error(ErrorCode::SearchExhausted, "lemma2", {ctx.hom(X, Y).cat().morphism_name(alpha)});
}

}  // namespace twopro
