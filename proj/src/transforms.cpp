#include "twopro/transforms.hpp"

#include <algorithm>
#include <functional>

namespace twopro {

namespace {

Violation preservation(std::string law, std::vector<std::string> w) {
  return {ErrorCode::PreservationViolation, std::move(law), std::move(w)};
}

Violation coherence(std::string law, std::vector<std::string> w) {
  return {ErrorCode::CoherenceViolation, std::move(law), std::move(w)};
}

// Assignment order for transformation searches: objects in index order, each
// followed by the 1-cells whose endpoints are then both assigned. Equations
// are attached to the step at which their last ingredient becomes known.
struct Schedule {
  struct Step {
    bool object;
    int index;
    std::vector<std::tuple<int, int, int>> pn1;  // (g, f, gf)
    std::vector<int> pn2;                        // 2-cells
    std::vector<int> ones;                       // 1-cells whose endpoints close here
  };
  std::vector<Step> steps;

  explicit Schedule(const Fin2Cat& c) {
    std::vector<int> pos_obj(c.num_objects()), pos_one(c.num_ones(), -1);
    for (int x = 0; x < c.num_objects(); ++x) {
      pos_obj[x] = static_cast<int>(steps.size());
      steps.push_back({true, x, {}, {}, {}});
      for (int f = 0; f < c.num_ones(); ++f) {
        if (std::max(c.src(f), c.tgt(f)) != x) continue;
        pos_one[f] = static_cast<int>(steps.size());
        steps.back().ones.push_back(f);
        steps.push_back({false, f, {}, {}, {}});
      }
    }
    for (const auto& [g, f, gf] : c.hcomp1_entries())
      steps[std::max({pos_one[g], pos_one[f], pos_one[gf]})].pn1.emplace_back(g, f, gf);
    for (int a = 0; a < c.num_twos(); ++a)
      steps[std::max(pos_one[c.src2(a)], pos_one[c.tgt2(a)])].pn2.push_back(a);
  }
};

bool is_identity_nat(const FinCat& b, const Functor& f, const NatTrans& n) {
  for (std::size_t x = 0; x < n.comp.size(); ++x)
    if (n.comp[x] != b.id(f.ob[x])) return false;
  return true;
}

}  // namespace

std::optional<Violation> check_two_functor(const TwoFunctor& F) {
  const Fin2Cat& c = *F.source;
  const Fin2Cat& d = *F.target;
  if (static_cast<int>(F.ob.size()) != c.num_objects() || static_cast<int>(F.one.size()) != c.num_ones() ||
      static_cast<int>(F.two.size()) != c.num_twos())
    return preservation("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x)
    if (F.ob[x] < 0 || F.ob[x] >= d.num_objects()) return preservation("object-map", {c.object_name(x)});
  for (int f = 0; f < c.num_ones(); ++f) {
    int g = F.one[f];
    if (g < 0 || g >= d.num_ones() || d.src(g) != F.ob[c.src(f)] || d.tgt(g) != F.ob[c.tgt(f)])
      return preservation("1-cell-boundary", {c.one_name(f)});
  }
  for (int a = 0; a < c.num_twos(); ++a) {
    int b = F.two[a];
    if (b < 0 || b >= d.num_twos() || d.src2(b) != F.one[c.src2(a)] || d.tgt2(b) != F.one[c.tgt2(a)])
      return preservation("2-cell-boundary", {c.two_name(a)});
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (F.one[c.id1(x)] != d.id1(F.ob[x])) return preservation("identity-1", {c.object_name(x)});
  for (int f = 0; f < c.num_ones(); ++f)
    if (F.two[c.id2(f)] != d.id2(F.one[f])) return preservation("identity-2", {c.one_name(f)});
  for (const auto& [g, f, r] : c.hcomp1_entries())
    if (F.one[r] != d.hcomp1(F.one[g], F.one[f]))
      return preservation("hcomp1", {c.one_name(g), c.one_name(f)});
  for (const auto& [b, a, r] : c.vcomp_entries())
    if (F.two[r] != d.vcomp(F.two[b], F.two[a])) return preservation("vcomp", {c.two_name(b), c.two_name(a)});
  for (const auto& [b, a, r] : c.hcomp2_entries())
    if (F.two[r] != d.hcomp2(F.two[b], F.two[a]))
      return preservation("hcomp2", {c.two_name(b), c.two_name(a)});
  return std::nullopt;
}

void validate_two_functor(const TwoFunctor& f) {
  if (auto v = check_two_functor(f)) throw Error(*v);
}

TwoFunctor identity_two_functor(Fin2CatPtr c) {
  TwoFunctor f{c, c, {}, {}, {}};
  for (int x = 0; x < c->num_objects(); ++x) f.ob.push_back(x);
  for (int x = 0; x < c->num_ones(); ++x) f.one.push_back(x);
  for (int x = 0; x < c->num_twos(); ++x) f.two.push_back(x);
  return f;
}

TwoFunctor constant_two_functor(Fin2CatPtr source, Fin2CatPtr target, int obj) {
  TwoFunctor f{source, target, {}, {}, {}};
  f.ob.assign(source->num_objects(), obj);
  f.one.assign(source->num_ones(), target->id1(obj));
  f.two.assign(source->num_twos(), target->id2(target->id1(obj)));
  return f;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h{f.source, g.target, {}, {}, {}};
  for (int x : f.ob) h.ob.push_back(g.ob[x]);
  for (int x : f.one) h.one.push_back(g.one[x]);
  for (int x : f.two) h.two.push_back(g.two[x]);
  return h;
}

std::optional<Violation> check_cat_functor(const CatFunctor& F) {
  const Fin2Cat& c = *F.source;
  if (static_cast<int>(F.fiber.size()) != c.num_objects() || static_cast<int>(F.map1.size()) != c.num_ones() ||
      static_cast<int>(F.map2.size()) != c.num_twos())
    return preservation("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x)
    if (auto v = check_fincat(F.fiber[x])) {
      v->witness.insert(v->witness.begin(), c.object_name(x));
      return v;
    }
  for (int f = 0; f < c.num_ones(); ++f)
    if (check_functor(F.fiber[c.src(f)], F.fiber[c.tgt(f)], F.map1[f]))
      return preservation("1-cell-functor", {c.one_name(f)});
  for (int a = 0; a < c.num_twos(); ++a)
    if (check_nat(F.fiber[c.osrc(a)], F.fiber[c.otgt(a)], F.map1[c.src2(a)], F.map1[c.tgt2(a)], F.map2[a]))
      return preservation("2-cell-naturality", {c.two_name(a)});
  for (int x = 0; x < c.num_objects(); ++x)
    if (F.map1[c.id1(x)] != identity_functor(F.fiber[x])) return preservation("identity-1", {c.object_name(x)});
  for (int f = 0; f < c.num_ones(); ++f)
    if (F.map2[c.id2(f)] != identity_nat(F.fiber[c.tgt(f)], F.map1[f]))
      return preservation("identity-2", {c.one_name(f)});
  for (const auto& [g, f, r] : c.hcomp1_entries())
    if (F.map1[r] != compose(F.map1[g], F.map1[f])) return preservation("hcomp1", {c.one_name(g), c.one_name(f)});
  for (const auto& [b, a, r] : c.vcomp_entries())
    if (F.map2[r] != vcompose(F.fiber[c.otgt(a)], F.map2[b], F.map2[a]))
      return preservation("vcomp", {c.two_name(b), c.two_name(a)});
  for (const auto& [b, a, r] : c.hcomp2_entries()) {
    NatTrans h = hcompose(F.fiber[c.otgt(b)], F.map2[b], F.map1[c.src2(b)], F.map2[a], F.map1[c.tgt2(a)]);
    if (F.map2[r] != h) return preservation("hcomp2", {c.two_name(b), c.two_name(a)});
  }
  return std::nullopt;
}

void validate_cat_functor(const CatFunctor& f) {
  if (auto v = check_cat_functor(f)) throw Error(*v);
}

CatFunctor constant_cat_functor(Fin2CatPtr source, const FinCat& value) {
  CatFunctor f{source, {}, {}, {}};
  f.fiber.assign(source->num_objects(), value);
  Functor id = identity_functor(value);
  f.map1.assign(source->num_ones(), id);
  f.map2.assign(source->num_twos(), identity_nat(value, id));
  return f;
}

CatFunctor representable(Fin2CatPtr cp, int a) {
  const Fin2Cat& c = *cp;
  CatFunctor r{cp, {}, {}, {}};
  std::vector<HomIndex> hs;
  for (int d = 0; d < c.num_objects(); ++d) {
    hs.push_back(hom_index(c, a, d));
    r.fiber.push_back(hs.back().cat);
  }
  for (int f = 0; f < c.num_ones(); ++f) {
    const HomIndex& s = hs[c.src(f)];
    const HomIndex& t = hs[c.tgt(f)];
    Functor fn;
    for (int h : s.one) fn.ob.push_back(t.obj_of_one[c.hcomp1(f, h)]);
    for (int b : s.two) fn.mor.push_back(t.mor_of_two[c.hcomp2(c.id2(f), b)]);
    r.map1.push_back(std::move(fn));
  }
  for (int al = 0; al < c.num_twos(); ++al) {
    const HomIndex& s = hs[c.osrc(al)];
    const HomIndex& t = hs[c.otgt(al)];
    NatTrans n;
    for (int h : s.one) n.comp.push_back(t.mor_of_two[c.hcomp2(al, c.id2(h))]);
    r.map2.push_back(std::move(n));
  }
  return r;
}

CatFunctor restrict_along(const CatFunctor& f, Fin2CatPtr source, const std::vector<int>& ob,
                          const std::vector<int>& one, const std::vector<int>& two) {
  CatFunctor r{std::move(source), {}, {}, {}};
  for (int x : ob) r.fiber.push_back(f.fiber[x]);
  for (int x : one) r.map1.push_back(f.map1[x]);
  for (int x : two) r.map2.push_back(f.map2[x]);
  return r;
}

CatFunctor compose(const CatFunctor& f, const TwoFunctor& x) {
  return restrict_along(f, x.source, x.ob, x.one, x.two);
}

std::optional<Violation> check_pseudonat(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t) {
  const Fin2Cat& c = *F.source;
  if (static_cast<int>(t.comp.size()) != c.num_objects() || static_cast<int>(t.coh.size()) != c.num_ones())
    return coherence("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x)
    if (check_functor(F.fiber[x], G.fiber[x], t.comp[x])) return coherence("component", {c.object_name(x)});
  for (int f = 0; f < c.num_ones(); ++f) {
    int s = c.src(f), d = c.tgt(f);
    if (check_nat(F.fiber[s], G.fiber[d], compose(G.map1[f], t.comp[s]), compose(t.comp[d], F.map1[f]), t.coh[f]))
      return coherence("coherence-naturality", {c.one_name(f)});
    if (!is_nat_iso(G.fiber[d], t.coh[f])) return coherence("coherence-invertible", {c.one_name(f)});
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (!is_identity_nat(G.fiber[x], t.comp[x], t.coh[c.id1(x)])) return coherence("PN0", {c.object_name(x)});
  for (const auto& [g, f, gf] : c.hcomp1_entries()) {
    const FinCat& e = G.fiber[c.tgt(g)];
    const FinCat& fc = F.fiber[c.src(f)];
    for (int x = 0; x < fc.num_objects(); ++x) {
      int lhs = e.comp(t.coh[g].comp[F.map1[f].ob[x]], G.map1[g].mor[t.coh[f].comp[x]]);
      if (lhs != t.coh[gf].comp[x]) return coherence("PN1", {c.one_name(g), c.one_name(f), fc.object_name(x)});
    }
  }
  for (int a = 0; a < c.num_twos(); ++a) {
    int f = c.src2(a), f1 = c.tgt2(a);
    const FinCat& gd = G.fiber[c.otgt(a)];
    const FinCat& fc = F.fiber[c.osrc(a)];
    for (int x = 0; x < fc.num_objects(); ++x) {
      int lhs = gd.comp(t.coh[f1].comp[x], G.map2[a].comp[t.comp[c.osrc(a)].ob[x]]);
      int rhs = gd.comp(t.comp[c.otgt(a)].mor[F.map2[a].comp[x]], t.coh[f].comp[x]);
      if (lhs != rhs) return coherence("PN2", {c.two_name(a), fc.object_name(x)});
    }
  }
  return std::nullopt;
}

void validate_pseudonat(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t) {
  if (auto v = check_pseudonat(F, G, t)) throw Error(*v);
}

bool is_strict(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t) {
  const Fin2Cat& c = *F.source;
  for (int f = 0; f < c.num_ones(); ++f) {
    int d = c.tgt(f);
    if (compose(G.map1[f], t.comp[c.src(f)]) != compose(t.comp[d], F.map1[f])) return false;
    if (!is_identity_nat(G.fiber[d], compose(t.comp[d], F.map1[f]), t.coh[f])) return false;
  }
  return true;
}

std::optional<Violation> check_modification(const CatFunctor& F, const CatFunctor& G,
                                            const PseudoNat& theta, const PseudoNat& eta,
                                            const Modification& rho) {
  const Fin2Cat& c = *F.source;
  if (static_cast<int>(rho.comp.size()) != c.num_objects()) return coherence("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x)
    if (check_nat(F.fiber[x], G.fiber[x], theta.comp[x], eta.comp[x], rho.comp[x]))
      return coherence("modification-component", {c.object_name(x)});
  for (int f = 0; f < c.num_ones(); ++f) {
    int s = c.src(f), d = c.tgt(f);
    const FinCat& gd = G.fiber[d];
    for (int x = 0; x < F.fiber[s].num_objects(); ++x) {
      int lhs = gd.comp(rho.comp[d].comp[F.map1[f].ob[x]], theta.coh[f].comp[x]);
      int rhs = gd.comp(eta.coh[f].comp[x], G.map1[f].mor[rho.comp[s].comp[x]]);
      if (lhs != rhs) return coherence("modification", {c.one_name(f), F.fiber[s].object_name(x)});
    }
  }
  return std::nullopt;
}

void validate_modification(const CatFunctor& F, const CatFunctor& G, const PseudoNat& theta,
                           const PseudoNat& eta, const Modification& rho) {
  if (auto v = check_modification(F, G, theta, eta, rho)) throw Error(*v);
}

PseudoNat identity_pseudonat(const CatFunctor& F) {
  const Fin2Cat& c = *F.source;
  PseudoNat t;
  for (int x = 0; x < c.num_objects(); ++x) t.comp.push_back(identity_functor(F.fiber[x]));
  for (int f = 0; f < c.num_ones(); ++f) t.coh.push_back(identity_nat(F.fiber[c.tgt(f)], F.map1[f]));
  return t;
}

Modification identity_modification(const CatFunctor& G, const PseudoNat& t) {
  Modification m;
  for (std::size_t x = 0; x < t.comp.size(); ++x) m.comp.push_back(identity_nat(G.fiber[x], t.comp[x]));
  return m;
}

Modification vcompose(const CatFunctor& G, const Modification& rho2, const Modification& rho1) {
  Modification m;
  for (std::size_t x = 0; x < rho1.comp.size(); ++x)
    m.comp.push_back(vcompose(G.fiber[x], rho2.comp[x], rho1.comp[x]));
  return m;
}

bool is_invertible(const CatFunctor& G, const Modification& rho) {
  for (std::size_t x = 0; x < rho.comp.size(); ++x)
    if (!is_nat_iso(G.fiber[x], rho.comp[x])) return false;
  return true;
}

Modification inverse(const CatFunctor& G, const Modification& rho) {
  Modification m;
  for (std::size_t x = 0; x < rho.comp.size(); ++x) m.comp.push_back(inverse_nat(G.fiber[x], rho.comp[x]));
  return m;
}

int TransformCategory::find_object(const PseudoNat& t) const {
  auto it = object_index.find(t);
  return it == object_index.end() ? -1 : it->second;
}

int TransformCategory::find_morphism(int src, int tgt, const Modification& m) const {
  auto it = morphism_index_.find({src, tgt, m});
  return it == morphism_index_.end() ? -1 : it->second;
}

TransformCategory hom_transform_category(const CatFunctor& F, const CatFunctor& G, Mode mode,
                                         Budget& budget) {
  const Fin2Cat& c = *F.source;
  Schedule sched(c);
  std::vector<std::vector<Functor>> cands(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) cands[x] = enumerate_functors(F.fiber[x], G.fiber[x], budget);

  std::vector<int> pick(c.num_objects(), -1);
  PseudoNat cur;
  cur.comp.resize(c.num_objects());
  cur.coh.resize(c.num_ones());
  std::map<std::tuple<int, int, int>, std::vector<NatTrans>> coh_cache;
  std::vector<PseudoNat> found;

  auto coh_candidates = [&](int f) -> const std::vector<NatTrans>& {
    int s = c.src(f), d = c.tgt(f);
    auto key = std::make_tuple(f, pick[s], pick[d]);
    auto it = coh_cache.find(key);
    if (it != coh_cache.end()) return it->second;
    std::vector<NatTrans> out;
    Functor lhs = compose(G.map1[f], cur.comp[s]);
    Functor rhs = compose(cur.comp[d], F.map1[f]);
    const FinCat& gd = G.fiber[d];
    if (mode == Mode::Strict || f == c.id1(s)) {
      if (lhs == rhs) out.push_back(identity_nat(gd, lhs));
    } else {
      for (auto& n : enumerate_nats(F.fiber[s], gd, lhs, rhs, budget))
        if (is_nat_iso(gd, n)) out.push_back(std::move(n));
    }
    return coh_cache.emplace(key, std::move(out)).first->second;
  };

  auto step_ok = [&](const Schedule::Step& st) {
    for (const auto& [g, f, gf] : st.pn1) {
      const FinCat& e = G.fiber[c.tgt(g)];
      for (int x = 0; x < F.fiber[c.src(f)].num_objects(); ++x)
        if (e.comp(cur.coh[g].comp[F.map1[f].ob[x]], G.map1[g].mor[cur.coh[f].comp[x]]) != cur.coh[gf].comp[x])
          return false;
    }
    for (int a : st.pn2) {
      int s = c.osrc(a), d = c.otgt(a);
      const FinCat& gd = G.fiber[d];
      for (int x = 0; x < F.fiber[s].num_objects(); ++x) {
        int lhs = gd.comp(cur.coh[c.tgt2(a)].comp[x], G.map2[a].comp[cur.comp[s].ob[x]]);
        int rhs = gd.comp(cur.comp[d].mor[F.map2[a].comp[x]], cur.coh[c.src2(a)].comp[x]);
        if (lhs != rhs) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == sched.steps.size()) {
      found.push_back(cur);
      return;
    }
    const auto& st = sched.steps[k];
    if (st.object) {
      for (std::size_t i = 0; i < cands[st.index].size(); ++i) {
        budget.tick();
        pick[st.index] = static_cast<int>(i);
        cur.comp[st.index] = cands[st.index][i];
        if (step_ok(st)) rec(k + 1);
      }
      pick[st.index] = -1;
    } else {
      for (const auto& n : coh_candidates(st.index)) {
        budget.tick();
        cur.coh[st.index] = n;
        if (step_ok(st)) rec(k + 1);
      }
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());

  TransformCategory tc;
  for (std::size_t i = 0; i < found.size(); ++i) {
    tc.object_index.emplace(found[i], static_cast<int>(i));
    tc.cat.add_object("t" + std::to_string(i));
  }
  tc.objects = std::move(found);

  // Modifications between each ordered pair of objects.
  std::vector<std::vector<int>> pos1_at(c.num_objects());
  for (int f = 0; f < c.num_ones(); ++f) pos1_at[std::max(c.src(f), c.tgt(f))].push_back(f);
  const int n = static_cast<int>(tc.objects.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const PseudoNat& th = tc.objects[a];
      const PseudoNat& et = tc.objects[b];
      std::vector<std::vector<NatTrans>> comps(c.num_objects());
      bool empty = false;
      for (int x = 0; x < c.num_objects() && !empty; ++x) {
        comps[x] = enumerate_nats(F.fiber[x], G.fiber[x], th.comp[x], et.comp[x], budget);
        empty = comps[x].empty();
      }
      if (empty) continue;
      Modification m;
      m.comp.resize(c.num_objects());
      std::vector<Modification> mods;
      std::function<void(int)> go = [&](int x) {
        if (x == c.num_objects()) {
          mods.push_back(m);
          return;
        }
        for (const auto& cand : comps[x]) {
          budget.tick();
          m.comp[x] = cand;
          bool ok = true;
          for (int f : pos1_at[x]) {
            int s = c.src(f), d = c.tgt(f);
            const FinCat& gd = G.fiber[d];
            for (int y = 0; y < F.fiber[s].num_objects() && ok; ++y)
              ok = gd.comp(m.comp[d].comp[F.map1[f].ob[y]], th.coh[f].comp[y]) ==
                   gd.comp(et.coh[f].comp[y], G.map1[f].mor[m.comp[s].comp[y]]);
            if (!ok) break;
          }
          if (ok) go(x + 1);
        }
      };
      go(0);
      for (auto& md : mods) {
        int idx = tc.cat.add_morphism("m" + std::to_string(tc.morphisms.size()), a, b);
        tc.morphism_index_.emplace(std::make_tuple(a, b, md), idx);
        tc.morphisms.push_back(std::move(md));
      }
    }
  for (int a = 0; a < n; ++a)
    tc.cat.set_identity(a, tc.find_morphism(a, a, identity_modification(G, tc.objects[a])));
  std::vector<std::vector<int>> out(n);
  for (int m = 0; m < tc.cat.num_morphisms(); ++m) out[tc.cat.dom(m)].push_back(m);
  for (int m1 = 0; m1 < tc.cat.num_morphisms(); ++m1)
    for (int m2 : out[tc.cat.cod(m1)]) {
      Modification v = vcompose(G, tc.morphisms[m2], tc.morphisms[m1]);
      tc.cat.set_comp(m2, m1, tc.find_morphism(tc.cat.dom(m1), tc.cat.cod(m2), v));
    }
  return tc;
}

PseudoNat yoneda_l(const CatFunctor& rep, const CatFunctor& F, int a, int x) {
  const Fin2Cat& c = *rep.source;
  std::vector<HomIndex> hs;
  for (int d = 0; d < c.num_objects(); ++d) hs.push_back(hom_index(c, a, d));
  PseudoNat t;
  for (int d = 0; d < c.num_objects(); ++d) {
    Functor fn;
    for (int h : hs[d].one) fn.ob.push_back(F.map1[h].ob[x]);
    for (int b : hs[d].two) fn.mor.push_back(F.map2[b].comp[x]);
    t.comp.push_back(std::move(fn));
  }
  for (int f = 0; f < c.num_ones(); ++f) {
    Functor lhs = compose(F.map1[f], t.comp[c.src(f)]);
    t.coh.push_back(identity_nat(F.fiber[c.tgt(f)], lhs));
  }
  return t;
}

Yoneda yoneda(Fin2CatPtr c, const CatFunctor& F, int a, Mode mode, Budget& budget) {
  Yoneda y;
  y.rep = representable(c, a);
  y.hom = hom_transform_category(y.rep, F, mode, budget);
  y.id_a = *y.rep.fiber[a].find_object(c->one_name(c->id1(a)));
  for (const auto& t : y.hom.objects) y.h.ob.push_back(t.comp[a].ob[y.id_a]);
  for (const auto& m : y.hom.morphisms) y.h.mor.push_back(m.comp[a].comp[y.id_a]);

  const FinCat& fa = F.fiber[a];
  std::vector<PseudoNat> lx;
  for (int x = 0; x < fa.num_objects(); ++x) {
    lx.push_back(yoneda_l(y.rep, F, a, x));
    y.l.ob.push_back(y.hom.find_object(lx.back()));
  }
  for (int m = 0; m < fa.num_morphisms(); ++m) {
    Modification md;
    for (int d = 0; d < c->num_objects(); ++d) {
      NatTrans n;
      for (int k = 0; k < y.rep.fiber[d].num_objects(); ++k) {
        int h = *c->find_one(y.rep.fiber[d].object_name(k));
        n.comp.push_back(F.map1[h].mor[m]);
      }
      md.comp.push_back(std::move(n));
    }
    int s = y.l.ob[fa.dom(m)], t = y.l.ob[fa.cod(m)];
    y.l.mor.push_back(s < 0 || t < 0 ? -1 : y.hom.find_morphism(s, t, md));
  }
  return y;
}

Modification yoneda_gamma(const Yoneda& y, const PseudoNat& theta) {
  const Fin2Cat& c = *y.rep.source;
  Modification g;
  for (int d = 0; d < c.num_objects(); ++d) {
    NatTrans n;
    for (int k = 0; k < y.rep.fiber[d].num_objects(); ++k) {
      int h = *c.find_one(y.rep.fiber[d].object_name(k));
      n.comp.push_back(theta.coh[h].comp[y.id_a]);
    }
    g.comp.push_back(std::move(n));
  }
  return g;
}

NatTrans yoneda_gamma_nat(const Yoneda& y) {
  NatTrans n;
  for (int t = 0; t < y.hom.cat.num_objects(); ++t) {
    int src = y.l.ob[y.h.ob[t]];
    n.comp.push_back(src < 0 ? -1 : y.hom.find_morphism(src, t, yoneda_gamma(y, y.hom.objects[t])));
  }
  return n;
}

std::optional<Violation> check_pseudonat2(const TwoFunctor& F, const TwoFunctor& G, const PseudoNat2& t) {
  const Fin2Cat& c = *F.source;
  const Fin2Cat& d = *F.target;
  if (static_cast<int>(t.comp.size()) != c.num_objects() || static_cast<int>(t.coh.size()) != c.num_ones())
    return coherence("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x) {
    int k = t.comp[x];
    if (k < 0 || k >= d.num_ones() || d.src(k) != F.ob[x] || d.tgt(k) != G.ob[x])
      return coherence("component", {c.object_name(x)});
  }
  for (int f = 0; f < c.num_ones(); ++f) {
    int a = t.coh[f];
    int lhs = d.hcomp1(G.one[f], t.comp[c.src(f)]);
    int rhs = d.hcomp1(t.comp[c.tgt(f)], F.one[f]);
    if (a < 0 || a >= d.num_twos() || d.src2(a) != lhs || d.tgt2(a) != rhs)
      return coherence("coherence-boundary", {c.one_name(f)});
    if (!d.is_invertible(a)) return coherence("coherence-invertible", {c.one_name(f)});
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (t.coh[c.id1(x)] != d.id2(t.comp[x])) return coherence("PN0", {c.object_name(x)});
  for (const auto& [g, f, gf] : c.hcomp1_entries()) {
    int lhs = d.vcomp(d.hcomp2(t.coh[g], d.id2(F.one[f])), d.hcomp2(d.id2(G.one[g]), t.coh[f]));
    if (lhs != t.coh[gf]) return coherence("PN1", {c.one_name(g), c.one_name(f)});
  }
  for (int a = 0; a < c.num_twos(); ++a) {
    int lhs = d.vcomp(t.coh[c.tgt2(a)], d.hcomp2(G.two[a], d.id2(t.comp[c.osrc(a)])));
    int rhs = d.vcomp(d.hcomp2(d.id2(t.comp[c.otgt(a)]), F.two[a]), t.coh[c.src2(a)]);
    if (lhs != rhs) return coherence("PN2", {c.two_name(a)});
  }
  return std::nullopt;
}

std::optional<Violation> check_modification2(const TwoFunctor& F, const TwoFunctor& G,
                                             const PseudoNat2& theta, const PseudoNat2& eta,
                                             const Modification2& rho) {
  const Fin2Cat& c = *F.source;
  const Fin2Cat& d = *F.target;
  if (static_cast<int>(rho.comp.size()) != c.num_objects()) return coherence("table-size", {});
  for (int x = 0; x < c.num_objects(); ++x) {
    int r = rho.comp[x];
    if (r < 0 || r >= d.num_twos() || d.src2(r) != theta.comp[x] || d.tgt2(r) != eta.comp[x])
      return coherence("modification-component", {c.object_name(x)});
  }
  for (int f = 0; f < c.num_ones(); ++f) {
    int lhs = d.vcomp(d.hcomp2(rho.comp[c.tgt(f)], d.id2(F.one[f])), theta.coh[f]);
    int rhs = d.vcomp(eta.coh[f], d.hcomp2(d.id2(G.one[f]), rho.comp[c.src(f)]));
    if (lhs != rhs) return coherence("modification", {c.one_name(f)});
  }
  return std::nullopt;
}

std::vector<PseudoNat2> enumerate_pseudonats2(const TwoFunctor& F, const TwoFunctor& G, Mode mode,
                                              Budget& budget) {
  const Fin2Cat& c = *F.source;
  const Fin2Cat& d = *F.target;
  Schedule sched(c);
  PseudoNat2 cur;
  cur.comp.assign(c.num_objects(), -1);
  cur.coh.assign(c.num_ones(), -1);
  std::vector<PseudoNat2> out;

  auto step_ok = [&](const Schedule::Step& st) {
    for (const auto& [g, f, gf] : st.pn1)
      if (d.vcomp(d.hcomp2(cur.coh[g], d.id2(F.one[f])), d.hcomp2(d.id2(G.one[g]), cur.coh[f])) != cur.coh[gf])
        return false;
    for (int a : st.pn2)
      if (d.vcomp(cur.coh[c.tgt2(a)], d.hcomp2(G.two[a], d.id2(cur.comp[c.osrc(a)]))) !=
          d.vcomp(d.hcomp2(d.id2(cur.comp[c.otgt(a)]), F.two[a]), cur.coh[c.src2(a)]))
        return false;
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == sched.steps.size()) {
      out.push_back(cur);
      return;
    }
    const auto& st = sched.steps[k];
    if (st.object) {
      for (int r : d.ones(F.ob[st.index], G.ob[st.index])) {
        budget.tick();
        cur.comp[st.index] = r;
        if (step_ok(st)) rec(k + 1);
      }
    } else {
      int f = st.index;
      int lhs = d.hcomp1(G.one[f], cur.comp[c.src(f)]);
      int rhs = d.hcomp1(cur.comp[c.tgt(f)], F.one[f]);
      bool only_id = mode == Mode::Strict || f == c.id1(c.src(f));
      for (int a : d.twos(lhs, rhs)) {
        if (only_id ? a != d.id2(lhs) : !d.is_invertible(a)) continue;
        budget.tick();
        cur.coh[f] = a;
        if (step_ok(st)) rec(k + 1);
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Modification2> enumerate_modifications2(const TwoFunctor& F, const TwoFunctor& G,
                                                    const PseudoNat2& theta, const PseudoNat2& eta,
                                                    Budget& budget) {
  const Fin2Cat& c = *F.source;
  const Fin2Cat& d = *F.target;
  std::vector<std::vector<int>> at(c.num_objects());
  for (int f = 0; f < c.num_ones(); ++f) at[std::max(c.src(f), c.tgt(f))].push_back(f);
  Modification2 cur;
  cur.comp.assign(c.num_objects(), -1);
  std::vector<Modification2> out;
  std::function<void(int)> rec = [&](int x) {
    if (x == c.num_objects()) {
      out.push_back(cur);
      return;
    }
    for (int r : d.twos(theta.comp[x], eta.comp[x])) {
      budget.tick();
      cur.comp[x] = r;
      bool ok = true;
      for (int f : at[x]) {
        int lhs = d.vcomp(d.hcomp2(cur.comp[c.tgt(f)], d.id2(F.one[f])), theta.coh[f]);
        int rhs = d.vcomp(eta.coh[f], d.hcomp2(d.id2(G.one[f]), cur.comp[c.src(f)]));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace twopro
