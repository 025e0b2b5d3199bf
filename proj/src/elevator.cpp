#include "twopro/elevator.hpp"

#include <cctype>

namespace twopro {

namespace {

bool ident_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\'' || ch == '-' ||
         ch == '*';
}

class Parser {
 public:
  Parser(const std::string& s, const Fin2Cat& c) : s_(s), c_(c) {}

  ElevatorExpr parse() {
    ElevatorExpr e;
    e.rows.push_back(row());
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == ';') {
      advance();
      e.rows.push_back(row());
      skip_ws();
    }
    if (pos_ != s_.size()) fail("expected ';' or end of input");
    return e;
  }

 private:
  std::vector<ElevatorColumn> row() {
    expect('[');
    std::vector<ElevatorColumn> cols{column()};
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '|') {
      advance();
      cols.push_back(column());
      skip_ws();
    }
    expect(']');
    return cols;
  }

  ElevatorColumn column() {
    skip_ws();
    int line = line_, col = col_;
    std::string name = ident();
    skip_ws();
    if (name == "id" && pos_ < s_.size() && s_[pos_] == '(') {
      advance();
      skip_ws();
      line = line_, col = col_;
      std::string one = ident();
      expect(')');
      auto f = c_.find_one(one);
      if (!f) throw Error(ErrorCode::UnknownCell, "one-cell", {one, std::to_string(line), std::to_string(col)});
      return {c_.id2(*f), true};
    }
    auto a = c_.find_two(name);
    if (!a) throw Error(ErrorCode::UnknownCell, "two-cell", {name, std::to_string(line), std::to_string(col)});
    return {*a, false};
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) advance();
    if (pos_ == start) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError, what, {std::to_string(line_), std::to_string(col_)});
  }

  const std::string& s_;
  const Fin2Cat& c_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

[[noreturn]] void mismatch(std::size_t row, std::size_t col) {
  throw Error(ErrorCode::BoundaryMismatch, "elevator", {std::to_string(row), std::to_string(col)});
}

int position(const std::vector<ElevatorColumn>& row) {
  for (std::size_t m = 0; m < row.size(); ++m)
    if (!row[m].identity) return static_cast<int>(m);
  return -1;
}

}  // namespace

ElevatorExpr parse_elevator(const std::string& text, const Fin2Cat& c) {
  ElevatorExpr e = Parser(text, c).parse();
  int prev = -1;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const auto& row = e.rows[r];
    for (std::size_t m = 0; m + 1 < row.size(); ++m)
      if (c.osrc(row[m].two) != c.otgt(row[m + 1].two)) mismatch(r + 1, m + 2);
    int v = eval_row(row, c);
    if (prev >= 0 && c.tgt2(prev) != c.src2(v)) mismatch(r + 1, 0);
    prev = v;
  }
  return e;
}

std::string render_elevator(const ElevatorExpr& e, const Fin2Cat& c) {
  std::string out;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (r) out += " ; ";
    out += "[";
    for (std::size_t m = 0; m < e.rows[r].size(); ++m) {
      const auto& col = e.rows[r][m];
      if (m) out += " | ";
      out += col.identity ? "id(" + c.one_name(c.src2(col.two)) + ")" : c.two_name(col.two);
    }
    out += "]";
  }
  return out;
}

int eval_row(const std::vector<ElevatorColumn>& row, const Fin2Cat& c) {
  int v = row.back().two;
  for (std::size_t m = row.size() - 1; m-- > 0;) {
    v = c.hcomp2(row[m].two, v);
    if (v < 0) mismatch(0, m + 1);
  }
  return v;
}

int eval_elevator(const ElevatorExpr& e, const Fin2Cat& c) {
  int v = eval_row(e.rows.front(), c);
  for (std::size_t r = 1; r < e.rows.size(); ++r) {
    v = c.vcomp(eval_row(e.rows[r], c), v);
    if (v < 0) mismatch(r + 1, 0);
  }
  return v;
}

ElevatorExpr normalize_elevator(const ElevatorExpr& e, const Fin2Cat& c) {
  ElevatorExpr out;
  for (const auto& row : e.rows)
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].identity) continue;
      std::vector<ElevatorColumn> r;
      for (std::size_t m = 0; m < row.size(); ++m) {
        if (m == k || row[m].identity) r.push_back(row[m]);
        else r.push_back({c.id2(m < k ? c.tgt2(row[m].two) : c.src2(row[m].two)), true});
      }
      out.rows.push_back(std::move(r));
    }
  if (out.rows.empty()) {
    out.rows.push_back(e.rows.front());
    return out;
  }
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < out.rows.size(); ++k) {
      auto& r1 = out.rows[k];
      auto& r2 = out.rows[k + 1];
      if (r1.size() != r2.size()) continue;
      int p = position(r1), q = position(r2);
      if (q >= p) continue;
      bool aligned = true;
      for (std::size_t m = 0; m < r1.size() && aligned; ++m) aligned = c.tgt2(r1[m].two) == c.src2(r2[m].two);
      if (!aligned) continue;
      std::vector<ElevatorColumn> top, bottom;
      for (std::size_t m = 0; m < r1.size(); ++m) {
        int mi = static_cast<int>(m);
        top.push_back(mi == q ? r2[m] : ElevatorColumn{c.id2(c.src2(r1[m].two)), true});
        bottom.push_back(mi == p   ? r1[m]
                         : mi == q ? ElevatorColumn{c.id2(c.tgt2(r2[m].two)), true}
                                   : ElevatorColumn{c.id2(c.tgt2(r1[m].two)), true});
      }
      r1 = std::move(top);
      r2 = std::move(bottom);
      swapped = true;
    }
  }
  return out;
}

ElevatorEquality equal_elevator(const ElevatorExpr& a, const ElevatorExpr& b, const Fin2Cat& c) {
  ElevatorEquality r;
  r.lhs = eval_elevator(a, c);
  r.rhs = eval_elevator(b, c);
  if (c.src2(r.lhs) != c.src2(r.rhs) || c.tgt2(r.lhs) != c.tgt2(r.rhs))
    throw Error(ErrorCode::BoundaryMismatch, "equal",
                {c.one_name(c.src2(r.lhs)), c.one_name(c.tgt2(r.lhs)), c.one_name(c.src2(r.rhs)),
                 c.one_name(c.tgt2(r.rhs))});
  r.equal = r.lhs == r.rhs;
  r.lhs_normal = render_elevator(normalize_elevator(a, c), c);
  r.rhs_normal = render_elevator(normalize_elevator(b, c), c);
  return r;
}

std::vector<ElevatorEquation> render_pseudonat_laws(const TwoFunctor& F, const TwoFunctor& G, const PseudoNat2& t) {
  const Fin2Cat& C = *F.source;
  const Fin2Cat& D = *F.target;
  auto two = [&](int a) { return D.two_name(a); };
  auto id = [&](int f) { return "id(" + D.one_name(f) + ")"; };
  std::vector<ElevatorEquation> out;
  for (int x = 0; x < C.num_objects(); ++x)
    out.push_back({"PN0", {C.object_name(x)}, "[" + two(t.coh[C.id1(x)]) + "]", "[" + id(t.comp[x]) + "]"});
  for (const auto& [g, f, gf] : C.hcomp1_entries())
    out.push_back({"PN1",
                   {C.one_name(g), C.one_name(f)},
                   "[" + id(G.one[g]) + " | " + two(t.coh[f]) + "] ; [" + two(t.coh[g]) + " | " + id(F.one[f]) + "]",
                   "[" + two(t.coh[gf]) + "]"});
  for (int a = 0; a < C.num_twos(); ++a) {
    int f = C.src2(a), f1 = C.tgt2(a);
    out.push_back({"PN2",
                   {C.two_name(a)},
                   "[" + two(G.two[a]) + " | " + id(t.comp[C.src(f)]) + "] ; [" + two(t.coh[f1]) + "]",
                   "[" + two(t.coh[f]) + "] ; [" + id(t.comp[C.tgt(f)]) + " | " + two(F.two[a]) + "]"});
  }
  return out;
}

std::vector<ElevatorEquation> render_modification_laws(const TwoFunctor& F, const TwoFunctor& G,
                                                       const PseudoNat2& theta, const PseudoNat2& eta,
                                                       const Modification2& rho) {
  const Fin2Cat& C = *F.source;
  const Fin2Cat& D = *F.target;
  auto two = [&](int a) { return D.two_name(a); };
  auto id = [&](int f) { return "id(" + D.one_name(f) + ")"; };
  std::vector<ElevatorEquation> out;
  for (int f = 0; f < C.num_ones(); ++f)
    out.push_back({"M",
                   {C.one_name(f)},
                   "[" + two(theta.coh[f]) + "] ; [" + two(rho.comp[C.tgt(f)]) + " | " + id(F.one[f]) + "]",
                   "[" + id(G.one[f]) + " | " + two(rho.comp[C.src(f)]) + "] ; [" + two(eta.coh[f]) + "]"});
  return out;
}

}  // namespace twopro
