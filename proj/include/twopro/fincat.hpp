#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "twopro/error.hpp"

namespace twopro {

// A finite category with every composite tabulated. Cells are addressed by
// dense indices; names are kept for reports and file round trips.
class FinCat {
 public:
  int add_object(std::string name);
  int add_morphism(std::string name, int dom, int cod);
  void set_identity(int obj, int mor);
  void set_comp(int g, int f, int gf);

  int num_objects() const { return static_cast<int>(obj_names_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names_.size()); }
  const std::string& object_name(int a) const { return obj_names_[a]; }
  const std::string& morphism_name(int m) const { return mor_names_[m]; }
  int dom(int m) const { return dom_[m]; }
  int cod(int m) const { return cod_[m]; }
  int id(int a) const { return ident_[a]; }
  bool has_identity(int a) const { return ident_[a] >= 0; }

  // g∘f, or -1 when no entry is tabulated.
  int comp(int g, int f) const;
  // Composite of a sequence listed in diagrammatic order (first applied first).
  int then(std::initializer_list<int> ms) const;

  const std::vector<int>& hom(int a, int b) const;
  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_morphism(const std::string& name) const;

  // Two-sided inverse, or -1.
  int inverse(int m) const;
  bool is_iso(int m) const { return inverse(m) >= 0; }

  std::size_t num_comp_entries() const { return comp_.size(); }
  // All tabulated entries as (g, f, g∘f), sorted.
  std::vector<std::tuple<int, int, int>> comp_entries() const;

  bool operator==(const FinCat& o) const;

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::vector<int> dom_, cod_, ident_;
  std::unordered_map<std::string, int> obj_index_, mor_index_;
  std::unordered_map<std::uint64_t, std::vector<int>> homs_;
  std::unordered_map<std::uint64_t, int> comp_;
  mutable std::unordered_map<int, int> inverse_cache_;
};

struct Functor {
  std::vector<int> ob;
  std::vector<int> mor;
  bool operator==(const Functor&) const = default;
  auto operator<=>(const Functor&) const = default;
};

// Components indexed by objects of the source category.
struct NatTrans {
  std::vector<int> comp;
  bool operator==(const NatTrans&) const = default;
  auto operator<=>(const NatTrans&) const = default;
};

std::optional<Violation> check_fincat(const FinCat& c);
std::optional<Violation> check_functor(const FinCat& a, const FinCat& b, const Functor& f);
std::optional<Violation> check_nat(const FinCat& a, const FinCat& b, const Functor& f,
                                   const Functor& g, const NatTrans& eta);

Functor identity_functor(const FinCat& a);
// g∘f as functors.
Functor compose(const Functor& g, const Functor& f);
NatTrans identity_nat(const FinCat& b, const Functor& f);
// Vertical composite (eta after theta), componentwise in b.
NatTrans vcompose(const FinCat& b, const NatTrans& eta, const NatTrans& theta);
// Whiskering: h∘eta and eta∘k.
NatTrans whisker_left(const Functor& h, const NatTrans& eta);
NatTrans whisker_right(const NatTrans& eta, const Functor& k);
// Horizontal composite beta*alpha for alpha: f => f1 (a -> b) and beta: g => g1
// (b -> c): component at x is beta_{f1 x} after g(alpha_x).
NatTrans hcompose(const FinCat& c, const NatTrans& beta, const Functor& g, const NatTrans& alpha,
                  const Functor& f1);
bool is_nat_iso(const FinCat& b, const NatTrans& eta);
NatTrans inverse_nat(const FinCat& b, const NatTrans& eta);

FinCat terminal_cat();
FinCat discrete_cat(const std::vector<std::string>& names);
// Objects and morphisms are pairs, index a * |b| + b.
FinCat product_cat(const FinCat& a, const FinCat& b);

std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b, Budget& budget);
std::vector<NatTrans> enumerate_nats(const FinCat& a, const FinCat& b, const Functor& f,
                                     const Functor& g, Budget& budget);

// Cat(a, b) as a finite category: functors and natural transformations.
struct FunctorCategory {
  FinCat cat;
  std::vector<Functor> functors;
  std::vector<NatTrans> nats;
};
FunctorCategory functor_category(const FinCat& a, const FinCat& b, Budget& budget);

// Bijective on objects and morphisms and a valid functor.
bool is_isomorphism(const FinCat& a, const FinCat& b, const Functor& f);
std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b);

// Names of the form "x,y,..." for tuples of indices.
std::string join_names(const std::vector<std::string>& parts, char open, char close);

}  // namespace twopro
