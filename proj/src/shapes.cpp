#include "twopro/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace twopro {

namespace {

std::optional<Violation> rename_laws(std::optional<Violation> v) {
  if (!v) return v;
  static const std::map<std::string, std::string> names = {
      {"PN0", "PC0"}, {"PN1", "PC1"}, {"PN2", "PC2"}, {"modification", "PCM"}};
  auto it = names.find(v->law);
  if (it != names.end()) v->law = it->second;
  return v;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FilterResult check_two_filtered(const Fin2Cat& c) {
  FilterResult r;
  if (c.num_objects() == 0) {
    r.axiom = "F0";
    r.counterexample = {"empty"};
    return r;
  }
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      std::optional<FilterWitness::Cocone> w;
      for (int e = 0; e < c.num_objects() && !w; ++e)
        if (!c.ones(a, e).empty() && !c.ones(b, e).empty()) w = {e, c.ones(a, e).front(), c.ones(b, e).front()};
      if (!w) {
        r.axiom = "F0";
        r.counterexample = {c.object_name(a), c.object_name(b)};
        return r;
      }
      r.witness.f0[{a, b}] = *w;
    }
  for (int f = 0; f < c.num_ones(); ++f)
    for (int g : c.ones(c.src(f), c.tgt(f))) {
      std::optional<FilterWitness::Coequal> w;
      for (int h = 0; h < c.num_ones() && !w; ++h) {
        if (c.src(h) != c.tgt(f)) continue;
        for (int al : c.twos(c.hcomp1(h, f), c.hcomp1(h, g)))
          if (c.is_invertible(al)) {
            w = {h, al};
            break;
          }
      }
      if (!w) {
        r.axiom = "F1";
        r.counterexample = {c.one_name(f), c.one_name(g)};
        return r;
      }
      r.witness.f1[{f, g}] = *w;
    }
  for (int al = 0; al < c.num_twos(); ++al)
    for (int be : c.twos(c.src2(al), c.tgt2(al))) {
      int found = -1;
      for (int h = 0; h < c.num_ones() && found < 0; ++h)
        if (c.src(h) == c.otgt(al) && c.hcomp2(c.id2(h), al) == c.hcomp2(c.id2(h), be)) found = h;
      if (found < 0) {
        r.axiom = "F2";
        r.counterexample = {c.two_name(al), c.two_name(be)};
        return r;
      }
      r.witness.f2[{al, be}] = found;
    }
  r.ok = true;
  return r;
}

std::optional<Violation> check_pseudocone(const CatFunctor& F, const FinCat& vertex, const PseudoNat& cone) {
  return rename_laws(check_pseudonat(F, constant_cat_functor(F.source, vertex), cone));
}

std::optional<Violation> check_pc_morphism(const CatFunctor& F, const FinCat& vertex, const PseudoNat& a,
                                           const PseudoNat& b, const Modification& rho) {
  return rename_laws(check_modification(F, constant_cat_functor(F.source, vertex), a, b, rho));
}

TransformCategory pseudocone_category(const CatFunctor& F, const FinCat& vertex, Budget& budget) {
  return hom_transform_category(F, constant_cat_functor(F.source, vertex), Mode::Pseudo, budget);
}

TransformCategory pseudocone_category_lim(const CatFunctor& H, Budget& budget) {
  return hom_transform_category(constant_cat_functor(H.source, terminal_cat()), H, Mode::Pseudo, budget);
}

int PseudoColimit::class_of(int src, int tgt, const Premorphism& p) const {
  auto it = index.find({src, tgt, p.u, p.f, p.v});
  return it == index.end() ? -1 : it->second;
}

bool homotopic(const CatFunctor& F, int C, int D, const Premorphism& p1, const Premorphism& p2) {
  const Fin2Cat& I = *F.source;
  int k1 = I.tgt(p1.u), k2 = I.tgt(p2.u);
  for (int k = 0; k < I.num_objects(); ++k) {
    const FinCat& fk = F.fiber[k];
    for (int w1 : I.ones(k1, k))
      for (int w2 : I.ones(k2, k)) {
        int lhs_f = F.map1[w1].mor[p1.f];
        int rhs_f = F.map1[w2].mor[p2.f];
        const auto& betas = I.twos(I.hcomp1(w1, p1.u), I.hcomp1(w2, p2.u));
        const auto& alphas = I.twos(I.hcomp1(w1, p1.v), I.hcomp1(w2, p2.v));
        for (int be : betas) {
          if (!I.is_invertible(be)) continue;
          int left = fk.comp(rhs_f, F.map2[be].comp[C]);
          for (int al : alphas)
            if (I.is_invertible(al) && left == fk.comp(F.map2[al].comp[D], lhs_f)) return true;
        }
      }
  }
  return false;
}

std::optional<Premorphism> compose_premorphisms(const CatFunctor& F, int D, const Premorphism& p2,
                                                const Premorphism& p1, int w1, int w2, int gamma) {
  const Fin2Cat& I = *F.source;
  if (I.src(w1) != I.tgt(p1.u) || I.src(w2) != I.tgt(p2.u) || I.tgt(w1) != I.tgt(w2)) return std::nullopt;
  if (I.src2(gamma) != I.hcomp1(w1, p1.v) || I.tgt2(gamma) != I.hcomp1(w2, p2.u)) return std::nullopt;
  const FinCat& fk = F.fiber[I.tgt(w1)];
  int f = fk.comp(F.map1[w2].mor[p2.f], fk.comp(F.map2[gamma].comp[D], F.map1[w1].mor[p1.f]));
  return Premorphism{I.hcomp1(w1, p1.u), f, I.hcomp1(w2, p2.v)};
}

PseudoColimit pseudocolim_ll(const CatFunctor& F, Budget& budget) {
  FilterResult filt = check_two_filtered(*F.source);
  return pseudocolim_ll(F, filt, budget);
}

PseudoColimit pseudocolim_ll(const CatFunctor& F, const FilterResult& filt, Budget& budget) {
  const Fin2Cat& I = *F.source;
  if (!filt.ok) throw Error(ErrorCode::NotTwoFiltered, filt.axiom, filt.counterexample);
  PseudoColimit L;
  L.object_at.resize(I.num_objects());
  for (int i = 0; i < I.num_objects(); ++i)
    for (int x = 0; x < F.fiber[i].num_objects(); ++x) {
      L.object_at[i].push_back(static_cast<int>(L.objects.size()));
      L.objects.emplace_back(i, x);
      L.cat.add_object("(" + F.fiber[i].object_name(x) + "," + I.object_name(i) + ")");
    }
  const int n = static_cast<int>(L.objects.size());

  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2) {
      auto [i, C] = L.objects[o1];
      auto [j, D] = L.objects[o2];
      std::vector<Premorphism> ps;
      for (int k = 0; k < I.num_objects(); ++k)
        for (int u : I.ones(i, k))
          for (int v : I.ones(j, k))
            for (int f : F.fiber[k].hom(F.map1[u].ob[C], F.map1[v].ob[D])) ps.push_back({u, f, v});
      std::sort(ps.begin(), ps.end());
      L.premorphisms += ps.size();
      const int m = static_cast<int>(ps.size());
      budget.tick(static_cast<std::uint64_t>(m) * m);
      std::vector<char> rel(static_cast<std::size_t>(m) * m);
      UnionFind uf(m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if ((rel[a * m + b] = homotopic(F, C, D, ps[a], ps[b]))) uf.join(a, b);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (uf.find(a) == uf.find(b) && !rel[a * m + b]) L.closure_ok = false;
      std::map<int, std::vector<Premorphism>> classes;
      for (int a = 0; a < m; ++a) classes[uf.find(a)].push_back(ps[a]);
      for (auto& [root, mem] : classes) {
        const Premorphism& r = mem.front();
        int k = I.tgt(r.u);
        int idx = L.cat.add_morphism(
            "[" + I.one_name(r.u) + "," + F.fiber[k].morphism_name(r.f) + "," + I.one_name(r.v) + "]", o1, o2);
        for (const auto& p : mem) L.index[{o1, o2, p.u, p.f, p.v}] = idx;
        L.rep.push_back(r);
        L.members.push_back(std::move(mem));
      }
    }

  for (int o = 0; o < n; ++o) {
    auto [i, C] = L.objects[o];
    int id = I.id1(i);
    L.cat.set_identity(o, L.class_of(o, o, {id, F.fiber[i].id(C), id}));
  }

  std::vector<std::vector<int>> out(n);
  for (int m = 0; m < L.cat.num_morphisms(); ++m) out[L.cat.dom(m)].push_back(m);
  for (int c1 = 0; c1 < L.cat.num_morphisms(); ++c1)
    for (int c2 : out[L.cat.cod(c1)]) {
      const Premorphism& p1 = L.rep[c1];
      const Premorphism& p2 = L.rep[c2];
      int k1 = I.tgt(p1.u), k2 = I.tgt(p2.u);
      const auto& e = filt.witness.f0.at({k1, k2});
      const auto& q = filt.witness.f1.at({I.hcomp1(e.u, p1.v), I.hcomp1(e.v, p2.u)});
      int D = L.objects[L.cat.cod(c1)].second;
      auto p = compose_premorphisms(F, D, p2, p1, I.hcomp1(q.h, e.u), I.hcomp1(q.h, e.v), q.alpha);
      int r = p ? L.class_of(L.cat.dom(c1), L.cat.cod(c2), *p) : -1;
      if (r < 0) throw Error(ErrorCode::ValidationFailure, "ll-composition", {L.cat.morphism_name(c2), L.cat.morphism_name(c1)});
      L.cat.set_comp(c2, c1, r);
    }

  for (int i = 0; i < I.num_objects(); ++i) {
    Functor li;
    const FinCat& fi = F.fiber[i];
    for (int x = 0; x < fi.num_objects(); ++x) li.ob.push_back(L.object_of(i, x));
    for (int f = 0; f < fi.num_morphisms(); ++f)
      li.mor.push_back(L.class_of(li.ob[fi.dom(f)], li.ob[fi.cod(f)], {I.id1(i), f, I.id1(i)}));
    L.lambda.comp.push_back(std::move(li));
  }
  for (int u = 0; u < I.num_ones(); ++u) {
    int i = I.src(u), j = I.tgt(u);
    NatTrans t;
    for (int x = 0; x < F.fiber[i].num_objects(); ++x) {
      int y = F.map1[u].ob[x];
      t.comp.push_back(L.class_of(L.object_of(i, x), L.object_of(j, y), {u, F.fiber[j].id(y), I.id1(j)}));
    }
    L.lambda.coh.push_back(std::move(t));
  }
  return L;
}

std::optional<Violation> check_ll_composition_choices(const CatFunctor& F, const PseudoColimit& L) {
  const Fin2Cat& I = *F.source;
  const FinCat& c = L.cat;
  for (int c1 = 0; c1 < c.num_morphisms(); ++c1)
    for (int c2 = 0; c2 < c.num_morphisms(); ++c2) {
      if (c.dom(c2) != c.cod(c1)) continue;
      int expect = c.comp(c2, c1);
      int D = L.objects[c.cod(c1)].second;
      for (const auto& p1 : L.members[c1])
        for (const auto& p2 : L.members[c2]) {
          int k1 = I.tgt(p1.u), k2 = I.tgt(p2.u);
          for (int k = 0; k < I.num_objects(); ++k)
            for (int w1 : I.ones(k1, k))
              for (int w2 : I.ones(k2, k))
                for (int g : I.twos(I.hcomp1(w1, p1.v), I.hcomp1(w2, p2.u))) {
                  if (!I.is_invertible(g)) continue;
                  auto p = compose_premorphisms(F, D, p2, p1, w1, w2, g);
                  int got = p ? L.class_of(c.dom(c1), c.cod(c2), *p) : -1;
                  if (got != expect)
                    return Violation{ErrorCode::AxiomViolation, "composition-choice",
                                     {c.morphism_name(c2), c.morphism_name(c1), I.one_name(w1),
                                      I.one_name(w2), I.two_name(g)}};
                }
        }
    }
  return std::nullopt;
}

int PseudoLimit::find_object(const std::vector<int>& xs, const std::vector<int>& xis) const {
  auto it = object_index.find({xs, xis});
  return it == object_index.end() ? -1 : it->second;
}

int PseudoLimit::find_morphism(int src, int tgt, const std::vector<int>& ms) const {
  auto it = morphism_index.find({src, tgt, ms});
  return it == morphism_index.end() ? -1 : it->second;
}

PseudoLimit pseudolim_cat(const CatFunctor& H, Budget& budget) {
  const Fin2Cat& c = *H.source;
  const int no = c.num_objects(), n1 = c.num_ones();
  // 1-cells are decided right after the later of their endpoints.
  std::vector<std::vector<int>> closing(no);
  std::vector<int> rank(n1);
  for (int u = 0; u < n1; ++u) closing[std::max(c.src(u), c.tgt(u))].push_back(u);
  {
    int r = 0;
    for (int x = 0; x < no; ++x)
      for (int u : closing[x]) rank[u] = r++;
  }
  std::vector<std::vector<std::tuple<int, int, int>>> comp_at(n1);
  for (const auto& [g, f, gf] : c.hcomp1_entries()) {
    int last = std::max({rank[g], rank[f], rank[gf]});
    int who = last == rank[g] ? g : last == rank[f] ? f : gf;
    comp_at[who].emplace_back(g, f, gf);
  }
  std::vector<std::vector<int>> two_at(n1);
  for (int a = 0; a < c.num_twos(); ++a)
    two_at[rank[c.src2(a)] > rank[c.tgt2(a)] ? c.src2(a) : c.tgt2(a)].push_back(a);

  PseudoLimit L;
  std::vector<int> x(no, -1), xi(n1, -1);

  auto cocycle_ok = [&](int u) {
    for (const auto& [g, f, gf] : comp_at[u]) {
      const FinCat& t = H.fiber[c.tgt(g)];
      if (t.comp(xi[g], H.map1[g].mor[xi[f]]) != xi[gf]) return false;
    }
    for (int a : two_at[u]) {
      const FinCat& t = H.fiber[c.otgt(a)];
      if (xi[c.src2(a)] != t.comp(xi[c.tgt2(a)], H.map2[a].comp[x[c.osrc(a)]])) return false;
    }
    return true;
  };

  std::vector<std::pair<std::vector<int>, std::vector<int>>> objs;
  std::function<void(int)> start = [&](int ob) {
    if (ob == no) {
      objs.emplace_back(x, xi);
      return;
    }
    for (int v = 0; v < H.fiber[ob].num_objects(); ++v) {
      budget.tick();
      x[ob] = v;
      std::function<void(std::size_t)> ones = [&](std::size_t k) {
        if (k == closing[ob].size()) {
          start(ob + 1);
          return;
        }
        int u = closing[ob][k];
        const FinCat& t = H.fiber[c.tgt(u)];
        int from = H.map1[u].ob[x[c.src(u)]];
        if (u == c.id1(c.src(u))) {
          xi[u] = t.id(x[ob]);
          if (cocycle_ok(u)) ones(k + 1);
        } else {
          for (int m : t.hom(from, x[c.tgt(u)])) {
            if (!t.is_iso(m)) continue;
            budget.tick();
            xi[u] = m;
            if (cocycle_ok(u)) ones(k + 1);
          }
        }
        xi[u] = -1;
      };
      ones(0);
    }
    x[ob] = -1;
  };
  start(0);
  std::sort(objs.begin(), objs.end());
  for (auto& [xs, xis] : objs) {
    int idx = L.cat.add_object("x" + std::to_string(L.x.size()));
    L.object_index[{xs, xis}] = idx;
    L.x.push_back(xs);
    L.xi.push_back(xis);
  }

  std::vector<std::vector<int>> mor_at(no);
  for (int u = 0; u < n1; ++u) mor_at[std::max(c.src(u), c.tgt(u))].push_back(u);
  const int n = static_cast<int>(L.x.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> m(no, -1);
      std::vector<std::vector<int>> found;
      std::function<void(int)> go = [&](int ob) {
        if (ob == no) {
          found.push_back(m);
          return;
        }
        for (int f : H.fiber[ob].hom(L.x[a][ob], L.x[b][ob])) {
          budget.tick();
          m[ob] = f;
          bool ok = true;
          for (int u : mor_at[ob]) {
            const FinCat& t = H.fiber[c.tgt(u)];
            if (t.comp(m[c.tgt(u)], L.xi[a][u]) != t.comp(L.xi[b][u], H.map1[u].mor[m[c.src(u)]])) {
              ok = false;
              break;
            }
          }
          if (ok) go(ob + 1);
        }
        m[ob] = -1;
      };
      go(0);
      for (auto& ms : found) {
        int idx = L.cat.add_morphism("m" + std::to_string(L.m.size()), a, b);
        L.morphism_index[{a, b, ms}] = idx;
        L.m.push_back(std::move(ms));
      }
    }
  for (int a = 0; a < n; ++a) {
    std::vector<int> ids;
    for (int ob = 0; ob < no; ++ob) ids.push_back(H.fiber[ob].id(L.x[a][ob]));
    L.cat.set_identity(a, L.find_morphism(a, a, ids));
  }
  std::vector<std::vector<int>> out(n);
  for (int m = 0; m < L.cat.num_morphisms(); ++m) out[L.cat.dom(m)].push_back(m);
  for (int m1 = 0; m1 < L.cat.num_morphisms(); ++m1)
    for (int m2 : out[L.cat.cod(m1)]) {
      std::vector<int> ms;
      for (int ob = 0; ob < no; ++ob) ms.push_back(H.fiber[ob].comp(L.m[m2][ob], L.m[m1][ob]));
      L.cat.set_comp(m2, m1, L.find_morphism(L.cat.dom(m1), L.cat.cod(m2), ms));
    }

  for (int ob = 0; ob < no; ++ob) {
    Functor p;
    for (int a = 0; a < n; ++a) p.ob.push_back(L.x[a][ob]);
    for (const auto& ms : L.m) p.mor.push_back(ms[ob]);
    L.cone.comp.push_back(std::move(p));
  }
  for (int u = 0; u < n1; ++u) {
    NatTrans t;
    for (int a = 0; a < n; ++a) t.comp.push_back(L.xi[a][u]);
    L.cone.coh.push_back(std::move(t));
  }
  return L;
}

namespace {

UniversalReport compare(const TransformCategory& target, std::size_t src_objects, std::size_t src_morphisms,
                        const std::function<PseudoNat(int)>& on_obj,
                        const std::function<std::tuple<int, int, Modification>(int)>& on_mor) {
  UniversalReport r;
  r.source_objects = src_objects;
  r.source_morphisms = src_morphisms;
  r.target_objects = target.objects.size();
  r.target_morphisms = target.morphisms.size();
  std::vector<int> obj_img(src_objects);
  std::vector<int> hit_obj(target.objects.size()), hit_mor(target.morphisms.size());
  for (std::size_t g = 0; g < src_objects; ++g) {
    obj_img[g] = target.find_object(on_obj(static_cast<int>(g)));
    if (obj_img[g] < 0) {
      r.well_defined = false;
      r.witness = {"object", std::to_string(g)};
      return r;
    }
    ++hit_obj[obj_img[g]];
  }
  for (std::size_t t = 0; t < src_morphisms; ++t) {
    auto [s, d, m] = on_mor(static_cast<int>(t));
    int img = target.find_morphism(obj_img[s], obj_img[d], m);
    if (img < 0) {
      r.well_defined = false;
      r.witness = {"morphism", std::to_string(t)};
      return r;
    }
    ++hit_mor[img];
  }
  r.objects_bijective = std::all_of(hit_obj.begin(), hit_obj.end(), [](int h) { return h == 1; });
  r.morphisms_bijective = std::all_of(hit_mor.begin(), hit_mor.end(), [](int h) { return h == 1; });
  if (!r.objects_bijective) {
    auto it = std::find_if(hit_obj.begin(), hit_obj.end(), [](int h) { return h != 1; });
    r.witness = {"object-image", target.cat.object_name(static_cast<int>(it - hit_obj.begin())),
                 std::to_string(*it)};
  } else if (!r.morphisms_bijective) {
    auto it = std::find_if(hit_mor.begin(), hit_mor.end(), [](int h) { return h != 1; });
    r.witness = {"morphism-image", target.cat.morphism_name(static_cast<int>(it - hit_mor.begin())),
                 std::to_string(*it)};
  }
  return r;
}

}  // namespace

UniversalReport universal_check_colim(const CatFunctor& F, const FinCat& L, const PseudoNat& lambda,
                                      const FinCat& vertex, Budget& budget) {
  const Fin2Cat& I = *F.source;
  FunctorCategory fc = functor_category(L, vertex, budget);
  TransformCategory pc = pseudocone_category(F, vertex, budget);
  auto on_obj = [&](int g) {
    const Functor& G = fc.functors[g];
    PseudoNat t;
    for (int i = 0; i < I.num_objects(); ++i) t.comp.push_back(compose(G, lambda.comp[i]));
    for (int u = 0; u < I.num_ones(); ++u) t.coh.push_back(whisker_left(G, lambda.coh[u]));
    return t;
  };
  auto on_mor = [&](int m) {
    Modification md;
    for (int i = 0; i < I.num_objects(); ++i) md.comp.push_back(whisker_right(fc.nats[m], lambda.comp[i]));
    return std::make_tuple(fc.cat.dom(m), fc.cat.cod(m), md);
  };
  return compare(pc, fc.functors.size(), fc.nats.size(), on_obj, on_mor);
}

UniversalReport universal_check_lim(const CatFunctor& H, const FinCat& L, const PseudoNat& cone,
                                    const FinCat& vertex, Budget& budget) {
  const Fin2Cat& I = *H.source;
  FunctorCategory fc = functor_category(vertex, L, budget);
  TransformCategory cones =
      hom_transform_category(constant_cat_functor(H.source, vertex), H, Mode::Pseudo, budget);
  auto on_obj = [&](int g) {
    const Functor& G = fc.functors[g];
    PseudoNat t;
    for (int i = 0; i < I.num_objects(); ++i) t.comp.push_back(compose(cone.comp[i], G));
    for (int u = 0; u < I.num_ones(); ++u) t.coh.push_back(whisker_right(cone.coh[u], G));
    return t;
  };
  auto on_mor = [&](int m) {
    Modification md;
    for (int i = 0; i < I.num_objects(); ++i) md.comp.push_back(whisker_left(cone.comp[i], fc.nats[m]));
    return std::make_tuple(fc.cat.dom(m), fc.cat.cod(m), md);
  };
  return compare(cones, fc.functors.size(), fc.nats.size(), on_obj, on_mor);
}

bool PointwiseReport::ok() const {
  if (functor_violation || naturality_violation) return false;
  return std::all_of(universal.begin(), universal.end(), [](const UniversalReport& r) { return r.ok(); });
}

PointwiseReport pointwise_colim_check(Fin2CatPtr index, Fin2CatPtr base, const CatFunctor& D,
                                      const std::vector<FinCat>& vertices, Budget& budget) {
  const Fin2Cat& I = *index;
  const Fin2Cat& C = *base;
  const int n0 = C.num_objects(), n1 = C.num_ones(), n2 = C.num_twos();
  auto obj = [&](int i, int c) { return i * n0 + c; };
  auto one = [&](int u, int f) { return u * n1 + f; };
  auto two = [&](int a, int s) { return a * n2 + s; };
  FilterResult filt = check_two_filtered(I);

  PointwiseReport rep;
  std::vector<CatFunctor> rows;
  for (int c = 0; c < n0; ++c) {
    std::vector<int> ob, on, tw;
    for (int i = 0; i < I.num_objects(); ++i) ob.push_back(obj(i, c));
    for (int u = 0; u < I.num_ones(); ++u) on.push_back(one(u, C.id1(c)));
    for (int a = 0; a < I.num_twos(); ++a) tw.push_back(two(a, C.id2(C.id1(c))));
    rows.push_back(restrict_along(D, index, ob, on, tw));
    rep.fibers.push_back(pseudocolim_ll(rows.back(), filt, budget));
  }

  CatFunctor& L = rep.L;
  L.source = base;
  for (const auto& f : rep.fibers) L.fiber.push_back(f.cat);
  for (int f = 0; f < n1; ++f) {
    const PseudoColimit& s = rep.fibers[C.src(f)];
    const PseudoColimit& t = rep.fibers[C.tgt(f)];
    Functor fn;
    for (auto [i, x] : s.objects) fn.ob.push_back(t.object_of(i, D.map1[one(I.id1(i), f)].ob[x]));
    for (int m = 0; m < s.cat.num_morphisms(); ++m) {
      const Premorphism& p = s.rep[m];
      int k = I.tgt(p.u);
      Premorphism q{p.u, D.map1[one(I.id1(k), f)].mor[p.f], p.v};
      fn.mor.push_back(t.class_of(fn.ob[s.cat.dom(m)], fn.ob[s.cat.cod(m)], q));
    }
    L.map1.push_back(std::move(fn));
  }
  for (int sg = 0; sg < n2; ++sg) {
    const PseudoColimit& s = rep.fibers[C.osrc(sg)];
    const PseudoColimit& t = rep.fibers[C.otgt(sg)];
    const Functor& f0 = L.map1[C.src2(sg)];
    const Functor& f1 = L.map1[C.tgt2(sg)];
    NatTrans n;
    for (std::size_t o = 0; o < s.objects.size(); ++o) {
      auto [i, x] = s.objects[o];
      int id = I.id1(i);
      Premorphism q{id, D.map2[two(I.id2(id), sg)].comp[x], id};
      n.comp.push_back(t.class_of(f0.ob[o], f1.ob[o], q));
    }
    L.map2.push_back(std::move(n));
  }
  rep.functor_violation = check_cat_functor(L);

  if (!rep.functor_violation) {
    for (int i = 0; i < I.num_objects() && !rep.naturality_violation; ++i) {
      std::vector<int> ob, on, tw;
      for (int c = 0; c < n0; ++c) ob.push_back(obj(i, c));
      for (int f = 0; f < n1; ++f) on.push_back(one(I.id1(i), f));
      for (int s = 0; s < n2; ++s) tw.push_back(two(I.id2(I.id1(i)), s));
      CatFunctor Di = restrict_along(D, base, ob, on, tw);
      PseudoNat t;
      for (int c = 0; c < n0; ++c) t.comp.push_back(rep.fibers[c].lambda.comp[i]);
      for (int f = 0; f < n1; ++f) t.coh.push_back(identity_nat(L.fiber[C.tgt(f)], compose(L.map1[f], t.comp[C.src(f)])));
      rep.naturality_violation = check_pseudonat(Di, L, t);
      if (!rep.naturality_violation && !is_strict(Di, L, t))
        rep.naturality_violation = Violation{ErrorCode::CoherenceViolation, "2-naturality", {I.object_name(i)}};
    }
  }
  for (int c = 0; c < n0; ++c)
    for (const auto& v : vertices)
      rep.universal.push_back(universal_check_colim(rows[c], rep.fibers[c].cat, rep.fibers[c].lambda, v, budget));
  return rep;
}

}  // namespace twopro
