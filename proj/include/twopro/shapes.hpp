#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twopro/transforms.hpp"

namespace twopro {

// Deterministic witnesses for F0-F2, first in lexicographic index order.
struct FilterWitness {
  struct Cocone { int e, u, v; };     // F0: u: A -> E, v: B -> E
  struct Coequal { int h, alpha; };   // F1: alpha: hf => hg invertible
  std::map<std::pair<int, int>, Cocone> f0;
  std::map<std::pair<int, int>, Coequal> f1;
  std::map<std::pair<int, int>, int> f2;  // h with h.alpha = h.beta
};

struct FilterResult {
  bool ok = false;
  FilterWitness witness;
  std::string axiom;                    // failing axiom when !ok
  std::vector<std::string> counterexample;
};

FilterResult check_two_filtered(const Fin2Cat& c);

// Cocones over a Cat-valued diagram are transformations F => const(A).
// theta_u: theta_i => theta_j.F_u; PC1/PC2/PCM are PN1/PN2 and the
// modification equation for that target.
std::optional<Violation> check_pseudocone(const CatFunctor& F, const FinCat& vertex, const PseudoNat& cone);
std::optional<Violation> check_pc_morphism(const CatFunctor& F, const FinCat& vertex, const PseudoNat& a,
                                           const PseudoNat& b, const Modification& rho);
TransformCategory pseudocone_category(const CatFunctor& F, const FinCat& vertex, Budget& budget);
// Cones of limit type with terminal vertex: x_i in H_i and invertible
// xi_u: H_u x_s -> x_t.
TransformCategory pseudocone_category_lim(const CatFunctor& H, Budget& budget);

// Construction LL.
struct Premorphism {
  int u, f, v;  // u: i -> k, f a morphism of F(k), v: j -> k
  auto operator<=>(const Premorphism&) const = default;
};

struct PseudoColimit {
  FinCat cat;
  std::vector<std::pair<int, int>> objects;          // (i, C)
  std::vector<std::vector<int>> object_at;            // [i][C] -> object
  std::vector<Premorphism> rep;                       // per morphism, the least member
  std::vector<std::vector<Premorphism>> members;      // per morphism, sorted
  PseudoNat lambda;                                   // F => const(cat)
  bool closure_ok = true;                             // one-step relation is an equivalence
  std::size_t premorphisms = 0;

  int object_of(int i, int c) const { return object_at[i][c]; }
  // Class of a premorphism between two objects, or -1.
  int class_of(int src, int tgt, const Premorphism& p) const;

  std::map<std::tuple<int, int, int, int, int>, int> index;
};

// True when the quadruple (w1, w2, alpha, beta) exists for p1, p2 in the hom
// from (C, i) to (D, j).
bool homotopic(const CatFunctor& F, int C, int D, const Premorphism& p1, const Premorphism& p2);
// Composite premorphism for a choice (w1, w2, gamma), or nullopt if the
// choice has the wrong boundaries.
std::optional<Premorphism> compose_premorphisms(const CatFunctor& F, int D, const Premorphism& p2,
                                                const Premorphism& p1, int w1, int w2, int gamma);

PseudoColimit pseudocolim_ll(const CatFunctor& F, const FilterResult& filt, Budget& budget);
PseudoColimit pseudocolim_ll(const CatFunctor& F, Budget& budget);

// Checks that composition of classes does not depend on representatives or
// on the cocone choice (k, w1, w2, gamma). Returns the first disagreement.
std::optional<Violation> check_ll_composition_choices(const CatFunctor& F, const PseudoColimit& L);

// Pseudolimit by descent data over any finite index.
struct PseudoLimit {
  FinCat cat;
  std::vector<std::vector<int>> x;    // per object, x_i
  std::vector<std::vector<int>> xi;   // per object, xi_u: H_u x_s -> x_t
  std::vector<std::vector<int>> m;    // per morphism, m_i
  PseudoNat cone;                     // const(cat) => H

  int find_object(const std::vector<int>& xs, const std::vector<int>& xis) const;
  int find_morphism(int src, int tgt, const std::vector<int>& ms) const;

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> object_index;
  std::map<std::tuple<int, int, std::vector<int>>, int> morphism_index;
};

PseudoLimit pseudolim_cat(const CatFunctor& H, Budget& budget);

struct UniversalReport {
  bool well_defined = true;
  bool objects_bijective = false;
  bool morphisms_bijective = false;
  std::size_t source_objects = 0, source_morphisms = 0;
  std::size_t target_objects = 0, target_morphisms = 0;
  std::vector<std::string> witness;
  bool ok() const { return well_defined && objects_bijective && morphisms_bijective; }
};

// Precomposition with lambda: Cat(L, A) -> PC(F, A).
UniversalReport universal_check_colim(const CatFunctor& F, const FinCat& L, const PseudoNat& lambda,
                                      const FinCat& vertex, Budget& budget);
// Postcomposition with the cone: Cat(A, L) -> cones over H with vertex A.
UniversalReport universal_check_lim(const CatFunctor& H, const FinCat& L, const PseudoNat& cone,
                                    const FinCat& vertex, Budget& budget);

// A diagram of Cat-valued functors on C indexed by I, given as a 2-functor
// on I x C. The fiberwise LL colimits are assembled into L: C -> Cat.
struct PointwiseReport {
  CatFunctor L;
  std::vector<PseudoColimit> fibers;
  std::optional<Violation> functor_violation;
  std::optional<Violation> naturality_violation;
  std::vector<UniversalReport> universal;  // per (object of C, vertex)
  bool ok() const;
};

PointwiseReport pointwise_colim_check(Fin2CatPtr index, Fin2CatPtr base, const CatFunctor& D,
                                      const std::vector<FinCat>& vertices, Budget& budget);

}  // namespace twopro
