#pragma once

#include <optional>
#include <vector>

#include "twopro/pro.hpp"

namespace twopro {

// A strict diagram J^op -> 2-Pro(C). For a: j -> j' in J, arrow[a] is an
// object of hom(X^{j'}, X^j); for alpha: a => b, cell[alpha] is a morphism
// arrow[a] -> arrow[b].
struct KxDiagram {
  Fin2CatPtr index, index_op;
  FilterResult filtered;
  std::vector<ProObjectPtr> X;
  std::vector<int> arrow;
  std::vector<int> cell;
};

std::optional<Violation> check_kx_diagram(ProContext& ctx, const KxDiagram& d);
// Fills index_op and filtered, then validates. Throws NotTwoFiltered or InvalidDiagram.
KxDiagram make_kx_diagram(ProContext& ctx, Fin2CatPtr index, std::vector<ProObjectPtr> X, std::vector<int> arrow,
                          std::vector<int> cell);

// 1-cell (a, r, phi): (i, j) -> (i', j'); phi: pi_i.X^a => c(r).pi_i' in
// hom(X^{j'}, c(X^j_i)).
struct KxOne {
  int a, i, i2, r, phi;
  auto operator<=>(const KxOne&) const = default;
};
struct KxTwo {
  int alpha, theta;
};

struct KxCategory {
  Fin2CatPtr cat;
  std::vector<std::pair<int, int>> objects;  // (i, j)
  std::vector<std::vector<int>> object_at;   // [j][i]
  std::vector<KxOne> ones;
  std::vector<KxTwo> twos;
  int object_of(int i, int j) const { return object_at[j][i]; }
};

constexpr std::uint64_t kDefaultMaxCells = 20000;

// Throws EnumerationBudgetExceeded past max_cells 1-cells plus 2-cells, and
// ValidationFailure if the assembled tables are not closed or not lawful.
KxCategory kx_build(ProContext& ctx, const KxDiagram& d, std::uint64_t max_cells = kDefaultMaxCells);
FilterResult kx_filtered_verify(const KxCategory& k);
ProObjectPtr tilde_x(ProContext& ctx, const KxCategory& k, const KxDiagram& d);

// Pseudocones over X with vertex Z, presented as the pseudolimit of
// j |-> hom(Z, X^j). Objects carry h_j and xi_a: X^a.h_j' -> h_j.
struct ProConeCategory {
  CatFunctor N;
  PseudoLimit lim;
};
ProConeCategory pro_cone_category(ProContext& ctx, const KxDiagram& d, const ProObjectPtr& Z);

// The comparison p from cones with vertex Z to hom(Z, X~).
UniversalReport pro_limit_check(ProContext& ctx, const KxDiagram& d, const KxCategory& k, const ProObjectPtr& Xt,
                                const ProObjectPtr& Z);

// F^ X as the pseudolimit of i |-> F(X_i) over I^op.
struct HatExtension {
  CatFunctor H;
  PseudoLimit lim;
};
HatExtension hat_extension(const CatFunctor& F, const ProObject& X, Budget& budget);

// Functors E: F^X -> target with cone_i.E = theta_{X_i}.P_i and matching
// coherences, for a strict theta: F => G and a cone over G.X with vertex target.
struct ExtensionReport {
  std::size_t extensions = 0;
  std::optional<Functor> first;
  bool unique() const { return extensions == 1; }
};
ExtensionReport universality_faithfulness_check(const CatFunctor& F, const CatFunctor& G, const PseudoNat& theta,
                                                const ProObject& X, const FinCat& target,
                                                const PseudoNat& target_cone, Budget& budget);

}  // namespace twopro
