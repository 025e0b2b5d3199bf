#pragma once

#include <string>
#include <vector>

#include "twopro/transforms.hpp"

namespace twopro {

// Rows are read top to bottom. Within a row the leftmost column is applied
// last, so "[b | a]" is the horizontal composite b a.
struct ElevatorColumn {
  int two = -1;  // for identity columns, id2 of the 1-cell
  bool identity = false;
  bool operator==(const ElevatorColumn&) const = default;
};

struct ElevatorExpr {
  std::vector<std::vector<ElevatorColumn>> rows;
  bool operator==(const ElevatorExpr&) const = default;
};

// Grammar: expr := row (";" row)*, row := "[" column ("|" column)* "]",
// column := IDENT | "id(" IDENT ")". Throws SyntaxError (witness: line,
// column), UnknownCell or BoundaryMismatch (witness: row, column).
ElevatorExpr parse_elevator(const std::string& text, const Fin2Cat& c);
std::string render_elevator(const ElevatorExpr& e, const Fin2Cat& c);

int eval_row(const std::vector<ElevatorColumn>& row, const Fin2Cat& c);
int eval_elevator(const ElevatorExpr& e, const Fin2Cat& c);

// One non-identity column per row, cells moved up past each other while the
// lower one sits further left.
ElevatorExpr normalize_elevator(const ElevatorExpr& e, const Fin2Cat& c);

struct ElevatorEquality {
  bool equal = false;
  int lhs = -1, rhs = -1;
  std::string lhs_normal, rhs_normal;
};
// Decided by evaluation. Throws BoundaryMismatch when the outer boundaries differ.
ElevatorEquality equal_elevator(const ElevatorExpr& a, const ElevatorExpr& b, const Fin2Cat& c);

struct ElevatorEquation {
  std::string law;
  std::vector<std::string> at;
  std::string lhs, rhs;
};
// PN0-PN2 instances of t: F => G as DSL text; with G constant these are the
// cocone laws.
std::vector<ElevatorEquation> render_pseudonat_laws(const TwoFunctor& F, const TwoFunctor& G, const PseudoNat2& t);
std::vector<ElevatorEquation> render_modification_laws(const TwoFunctor& F, const TwoFunctor& G,
                                                       const PseudoNat2& theta, const PseudoNat2& eta,
                                                       const Modification2& rho);

}  // namespace twopro
