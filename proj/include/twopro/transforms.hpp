#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "twopro/fincat.hpp"
#include "twopro/twocat.hpp"

namespace twopro {

using Fin2CatPtr = std::shared_ptr<const Fin2Cat>;

// A strict 2-functor between tabulated 2-categories.
struct TwoFunctor {
  Fin2CatPtr source, target;
  std::vector<int> ob, one, two;
};

std::optional<Violation> check_two_functor(const TwoFunctor& f);
void validate_two_functor(const TwoFunctor& f);
TwoFunctor identity_two_functor(Fin2CatPtr c);
TwoFunctor constant_two_functor(Fin2CatPtr source, Fin2CatPtr target, int obj);
// g after f.
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);

// A 2-functor into Cat; fibers are finite categories.
struct CatFunctor {
  Fin2CatPtr source;
  std::vector<FinCat> fiber;
  std::vector<Functor> map1;
  std::vector<NatTrans> map2;
};

std::optional<Violation> check_cat_functor(const CatFunctor& f);
void validate_cat_functor(const CatFunctor& f);
CatFunctor constant_cat_functor(Fin2CatPtr source, const FinCat& value);
// C(a, -).
CatFunctor representable(Fin2CatPtr c, int a);
// F after X, for X a 2-functor into the source of F.
CatFunctor compose(const CatFunctor& f, const TwoFunctor& x);
// Restriction along the object/1-cell/2-cell maps of x (x need not be checked).
CatFunctor restrict_along(const CatFunctor& f, Fin2CatPtr source, const std::vector<int>& ob,
                          const std::vector<int>& one, const std::vector<int>& two);

// theta: F => G. comp[C]: FC -> GC. coh[f] for f: C -> D is a natural
// transformation Gf.theta_C => theta_D.Ff, indexed by objects of FC.
struct PseudoNat {
  std::vector<Functor> comp;
  std::vector<NatTrans> coh;
  bool operator==(const PseudoNat&) const = default;
  auto operator<=>(const PseudoNat&) const = default;
};

// rho: theta => eta, comp[C]: theta_C => eta_C.
struct Modification {
  std::vector<NatTrans> comp;
  bool operator==(const Modification&) const = default;
  auto operator<=>(const Modification&) const = default;
};

std::optional<Violation> check_pseudonat(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t);
void validate_pseudonat(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t);
bool is_strict(const CatFunctor& F, const CatFunctor& G, const PseudoNat& t);
std::optional<Violation> check_modification(const CatFunctor& F, const CatFunctor& G,
                                            const PseudoNat& theta, const PseudoNat& eta,
                                            const Modification& rho);
void validate_modification(const CatFunctor& F, const CatFunctor& G, const PseudoNat& theta,
                           const PseudoNat& eta, const Modification& rho);

PseudoNat identity_pseudonat(const CatFunctor& F);
Modification identity_modification(const CatFunctor& G, const PseudoNat& t);
// Componentwise vertical composite rho2 after rho1.
Modification vcompose(const CatFunctor& G, const Modification& rho2, const Modification& rho1);
bool is_invertible(const CatFunctor& G, const Modification& rho);
Modification inverse(const CatFunctor& G, const Modification& rho);

enum class Mode { Strict, Pseudo };

// Hom(F, G) or Hom_p(F, G): transformations as objects, modifications as
// morphisms. Objects are in lexicographic order of their component tables.
struct TransformCategory {
  FinCat cat;
  std::vector<PseudoNat> objects;
  std::vector<Modification> morphisms;
  std::map<PseudoNat, int> object_index;

  int find_object(const PseudoNat& t) const;
  int find_morphism(int src, int tgt, const Modification& m) const;

 private:
  friend TransformCategory hom_transform_category(const CatFunctor&, const CatFunctor&, Mode, Budget&);
  std::map<std::tuple<int, int, Modification>, int> morphism_index_;
};

TransformCategory hom_transform_category(const CatFunctor& F, const CatFunctor& G, Mode mode,
                                         Budget& budget);

// Yoneda. With R = C(A,-): h sends theta to theta_A(id_A), l sends x to the
// strict transformation f |-> Ff(x).
struct Yoneda {
  CatFunctor rep;
  TransformCategory hom;
  Functor h;  // hom.cat -> F(A)
  Functor l;  // F(A) -> hom.cat
  int id_a = -1;  // id_A as an object of R(A)
};

Yoneda yoneda(Fin2CatPtr c, const CatFunctor& F, int a, Mode mode, Budget& budget);
PseudoNat yoneda_l(const CatFunctor& rep, const CatFunctor& F, int a, int x);
// Canonical modification l(h(theta)) => theta, with (Gamma_D)_f = (theta_f)_{id_A}.
Modification yoneda_gamma(const Yoneda& y, const PseudoNat& theta);
// Gamma assembled as a natural transformation l.h => id on hom.cat.
NatTrans yoneda_gamma_nat(const Yoneda& y);

// Transformations between 2-functors into a tabulated 2-category. comp[C] is
// a 1-cell FC -> GC, coh[f] a 2-cell Gf.theta_C => theta_D.Ff.
struct PseudoNat2 {
  std::vector<int> comp;
  std::vector<int> coh;
  bool operator==(const PseudoNat2&) const = default;
  auto operator<=>(const PseudoNat2&) const = default;
};
struct Modification2 {
  std::vector<int> comp;
  bool operator==(const Modification2&) const = default;
};

std::optional<Violation> check_pseudonat2(const TwoFunctor& F, const TwoFunctor& G, const PseudoNat2& t);
std::optional<Violation> check_modification2(const TwoFunctor& F, const TwoFunctor& G,
                                             const PseudoNat2& theta, const PseudoNat2& eta,
                                             const Modification2& rho);
std::vector<PseudoNat2> enumerate_pseudonats2(const TwoFunctor& F, const TwoFunctor& G, Mode mode,
                                              Budget& budget);
std::vector<Modification2> enumerate_modifications2(const TwoFunctor& F, const TwoFunctor& G,
                                                    const PseudoNat2& theta, const PseudoNat2& eta,
                                                    Budget& budget);

}  // namespace twopro
