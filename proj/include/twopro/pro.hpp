#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twopro/shapes.hpp"

namespace twopro {

// X: I^op -> C, stored as a 2-functor on dualize(I). For u: i -> i' in I,
// one(u) is X_u: X_{i'} -> X_i.
struct ProObject {
  std::string name;
  Fin2CatPtr index, index_op, host;
  TwoFunctor diagram;
  FilterResult filtered;

  int ob(int i) const { return diagram.ob[i]; }
  int one(int u) const { return diagram.one[u]; }
  int two(int a) const { return diagram.two[a]; }
};
using ProObjectPtr = std::shared_ptr<const ProObject>;

// Throws NotTwoFiltered or InvalidDiagram. The diagram's source is replaced
// by dualize(index).
ProObjectPtr make_pro(std::string name, Fin2CatPtr index, Fin2CatPtr host, TwoFunctor diagram);
ProObjectPtr make_pro(std::string name, Fin2CatPtr index, Fin2CatPtr host, std::vector<int> ob,
                      std::vector<int> one, std::vector<int> two);
ProObjectPtr embed_c(Fin2CatPtr host, int a);
// Same index, diagram F.X.
ProObjectPtr pro_map(const TwoFunctor& F, const ProObjectPtr& X);

// 2-Pro(C)(X, Y) = Lim_j Colim_i C(X_i, Y_j).
struct ProHom {
  ProObjectPtr X, Y;
  std::vector<std::vector<HomIndex>> homs;  // [j][i] = C(X_i, Y_j)
  std::vector<CatFunctor> G;                 // per j: i |-> C(X_i, Y_j)
  std::vector<PseudoColimit> colim;          // per j
  CatFunctor M;                              // over dualize(J)
  PseudoLimit lim;

  const FinCat& cat() const { return lim.cat; }
  // LL object of colim[j] for the host 1-cell r: X_i -> Y_j.
  int ll_object(int j, int i, int r) const;
  // (i, r) for an LL object of colim[j].
  std::pair<int, int> ll_parts(int j, int o) const;
  // Host 2-cell of a fiber morphism of G[j] at index k.
  int two_cell(int j, int k, int f) const { return homs[j][k].two[f]; }
};

// Computes and caches hom categories; all 2-Pro(C) arithmetic goes through here.
class ProContext {
 public:
  explicit ProContext(Fin2CatPtr host, std::uint64_t budget = Budget::kDefault);

  const Fin2Cat& host() const { return *host_; }
  Fin2CatPtr host_ptr() const { return host_; }
  Budget& budget() { return budget_; }

  const ProHom& hom(const ProObjectPtr& X, const ProObjectPtr& Y);
  std::size_t cached_homs() const { return cache_.size(); }
  ProObjectPtr c(int a);

  // g.f for objects g of hom(Y, Z) and f of hom(X, Y).
  int compose(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int g, int f);
  // g.mu for an object g of hom(Y, Z) and a morphism mu of hom(X, Y).
  int whisker_post(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int g, int mu);
  // nu.f for a morphism nu of hom(Y, Z) and an object f of hom(X, Y).
  int whisker_pre(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int nu, int f);
  // Horizontal composite nu * mu.
  int hcompose(const ProObjectPtr& X, const ProObjectPtr& Y, const ProObjectPtr& Z, int nu, int mu);

  int identity(const ProObjectPtr& X);
  // pi_i as an object of hom(X, c(X_i)).
  int projection(const ProObjectPtr& X, int i);
  // pi_u: pi_i => c(X_u).pi_i' for u: i -> i', a morphism of hom(X, c(X_i)).
  int projection_coherence(const ProObjectPtr& X, int u);
  // c on 1-cells and 2-cells: objects and morphisms of hom(c A, c B).
  int embed_one(int r);
  int embed_two(int sigma);

 private:
  int post_object(const ProHom& xy, int j, const ProHom& xz, int k, int s, int o);
  int post_morphism(const ProHom& xy, int j, const ProHom& xz, int k, int s, int m);
  // f^*_k: colim^{YZ}[k] -> colim^{XZ}[k] on morphisms.
  int pull_morphism(const ProHom& xy, const ProHom& yz, const ProHom& xz, int f, int k, int m);

  Fin2CatPtr host_;
  Budget budget_;
  std::map<std::pair<const ProObject*, const ProObject*>, std::unique_ptr<ProHom>> cache_;
  std::map<int, ProObjectPtr> embedded_;
};

// Arrow representation (r, phi) of f at j: phi: pi_j.f => c(r).pi_i in
// hom(X, c(Y_j)), invertible.
struct ArrowRep {
  int i = -1, r = -1, phi = -1;
};
std::optional<Violation> check_arrow_rep(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y,
                                         int f, int j, const ArrowRep& rep);
ArrowRep represent_arrow(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int f, int j);

// Cell representation of alpha: f => g at j: theta: r => s with
// theta.pi_k after phi equal to psi after pi_j.alpha.
struct CellRep {
  int k = -1, theta = -1;
  ArrowRep from, to;
};
std::optional<Violation> check_cell_rep(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y,
                                        int alpha, int j, const CellRep& rep);
CellRep represent_cell(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int alpha, int j);

// (k, u, v, theta) with (s.pi_v) after alpha equal to (theta.pi_k) after (r.pi_u)
// in hom(X, c(C)); alpha: (r, i) -> (s, j).
struct Lemma1Witness {
  int k = -1, u = -1, v = -1, theta = -1;
};
std::optional<Violation> check_lemma1(ProContext& ctx, const ProObjectPtr& X, int C, int i, int r, int j,
                                      int s, int alpha, const Lemma1Witness& w);
Lemma1Witness lemma1_search(ProContext& ctx, const ProObjectPtr& X, int C, int i, int r, int j, int s,
                            int alpha);

// id_i if it works, else the least u: i -> i' with theta.X_u = theta'.X_u.
int lemma4_search(ProContext& ctx, const ProObjectPtr& X, int i, int theta, int theta2);

// (k, u, v, theta) such that (theta, r.X_u, r.pi_u after phi, s.X_v, s.pi_v after psi)
// represents alpha: f => g at j.
struct Lemma2Witness {
  int k = -1, u = -1, v = -1, theta = -1;
  CellRep rep;
};
Lemma2Witness lemma2_search(ProContext& ctx, const ProObjectPtr& X, const ProObjectPtr& Y, int alpha, int j,
                            const ArrowRep& f_rep, const ArrowRep& g_rep);

}  // namespace twopro
