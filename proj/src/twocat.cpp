#include "twopro/twocat.hpp"

#include <algorithm>

namespace twopro {

int Fin2Cat::add_object(std::string name) {
  int i = num_objects();
  obj_idx_.emplace(name, i);
  obj_.push_back(std::move(name));
  id1_.push_back(-1);
  return i;
}

int Fin2Cat::add_one(std::string name, int src, int tgt) {
  int i = num_ones();
  one_idx_.emplace(name, i);
  one_.push_back(std::move(name));
  one_src_.push_back(src);
  one_tgt_.push_back(tgt);
  id2_.push_back(-1);
  ones_by_hom_[key(src, tgt)].push_back(i);
  return i;
}

int Fin2Cat::add_two(std::string name, int src, int tgt) {
  int i = num_twos();
  two_idx_.emplace(name, i);
  two_.push_back(std::move(name));
  two_src_.push_back(src);
  two_tgt_.push_back(tgt);
  twos_by_hom_[key(src, tgt)].push_back(i);
  inverse_cache_.clear();
  return i;
}

const std::vector<int>& Fin2Cat::ones(int a, int b) const {
  static const std::vector<int> empty;
  auto it = ones_by_hom_.find(key(a, b));
  return it == ones_by_hom_.end() ? empty : it->second;
}

const std::vector<int>& Fin2Cat::twos(int f, int g) const {
  static const std::vector<int> empty;
  auto it = twos_by_hom_.find(key(f, g));
  return it == twos_by_hom_.end() ? empty : it->second;
}

std::optional<int> Fin2Cat::find_object(const std::string& n) const {
  auto it = obj_idx_.find(n);
  return it == obj_idx_.end() ? std::nullopt : std::optional<int>(it->second);
}
std::optional<int> Fin2Cat::find_one(const std::string& n) const {
  auto it = one_idx_.find(n);
  return it == one_idx_.end() ? std::nullopt : std::optional<int>(it->second);
}
std::optional<int> Fin2Cat::find_two(const std::string& n) const {
  auto it = two_idx_.find(n);
  return it == two_idx_.end() ? std::nullopt : std::optional<int>(it->second);
}

int Fin2Cat::inverse2(int a) const {
  auto it = inverse_cache_.find(a);
  if (it != inverse_cache_.end()) return it->second;
  int f = src2(a), g = tgt2(a), r = -1;
  for (int b : twos(g, f)) {
    if (vcomp(b, a) == id2(f) && vcomp(a, b) == id2(g)) {
      r = b;
      break;
    }
  }
  inverse_cache_.emplace(a, r);
  return r;
}

Fin2Cat::Entries Fin2Cat::entries(const Table& t) {
  Entries out;
  out.reserve(t.size());
  for (const auto& [k, v] : t)
    out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Fin2Cat::operator==(const Fin2Cat& o) const {
  return obj_ == o.obj_ && one_ == o.one_ && two_ == o.two_ && one_src_ == o.one_src_ &&
         one_tgt_ == o.one_tgt_ && two_src_ == o.two_src_ && two_tgt_ == o.two_tgt_ &&
         id1_ == o.id1_ && id2_ == o.id2_ && vcomp_entries() == o.vcomp_entries() &&
         hcomp1_entries() == o.hcomp1_entries() && hcomp2_entries() == o.hcomp2_entries();
}

CellRef resolve_cell(const Fin2Cat& c, CellRef::Kind kind, const std::string& id) {
  std::optional<int> i;
  switch (kind) {
    case CellRef::Kind::Object: i = c.find_object(id); break;
    case CellRef::Kind::One: i = c.find_one(id); break;
    case CellRef::Kind::Two: i = c.find_two(id); break;
  }
  if (!i) throw Error(ErrorCode::UnknownCell, "cell", {id});
  return CellRef{kind, *i};
}

namespace {

std::vector<int> sorted_by(int n, const std::vector<std::string>& names) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  std::stable_sort(v.begin(), v.end(), [&](int a, int b) { return names[a] < names[b]; });
  return v;
}

struct Scan {
  const Fin2Cat& c;
  std::vector<int> objs, ones, twos;
  // 2-cells grouped by object boundary, each group in id order.
  std::vector<std::vector<std::vector<int>>> twos_at;
  std::vector<std::vector<std::vector<int>>> ones_at;

  explicit Scan(const Fin2Cat& cat) : c(cat) {
    std::vector<std::string> on, n1, n2;
    for (int i = 0; i < c.num_objects(); ++i) on.push_back(c.object_name(i));
    for (int i = 0; i < c.num_ones(); ++i) n1.push_back(c.one_name(i));
    for (int i = 0; i < c.num_twos(); ++i) n2.push_back(c.two_name(i));
    objs = sorted_by(c.num_objects(), on);
    ones = sorted_by(c.num_ones(), n1);
    twos = sorted_by(c.num_twos(), n2);
  }

  void group() {
    int n = c.num_objects();
    twos_at.assign(n, std::vector<std::vector<int>>(n));
    ones_at.assign(n, std::vector<std::vector<int>>(n));
    for (int f : ones) ones_at[c.src(f)][c.tgt(f)].push_back(f);
    for (int a : twos) twos_at[c.osrc(a)][c.otgt(a)].push_back(a);
  }

  const std::string& o(int x) const { return c.object_name(x); }
  const std::string& n1(int f) const { return c.one_name(f); }
  const std::string& n2(int a) const { return c.two_name(a); }
};

Violation axiom(std::string law, std::vector<std::string> w) {
  return Violation{ErrorCode::AxiomViolation, std::move(law), std::move(w)};
}
Violation missing(std::string law, std::vector<std::string> w) {
  return Violation{ErrorCode::MissingCompositeEntry, std::move(law), std::move(w)};
}

std::optional<Violation> check_names(const Scan& s) {
  auto dup = [](const std::vector<int>& order, auto name) -> std::optional<std::string> {
    for (std::size_t i = 1; i < order.size(); ++i)
      if (name(order[i]) == name(order[i - 1])) return name(order[i]);
    return std::nullopt;
  };
  if (auto d = dup(s.objs, [&](int x) { return s.o(x); }))
    return Violation{ErrorCode::DuplicateId, "object", {*d}};
  if (auto d = dup(s.ones, [&](int x) { return s.n1(x); }))
    return Violation{ErrorCode::DuplicateId, "one_cell", {*d}};
  if (auto d = dup(s.twos, [&](int x) { return s.n2(x); }))
    return Violation{ErrorCode::DuplicateId, "two_cell", {*d}};
  return std::nullopt;
}

std::optional<Violation> check_boundaries(const Scan& s) {
  const Fin2Cat& c = s.c;
  for (int f : s.ones)
    if (c.src(f) < 0 || c.src(f) >= c.num_objects() || c.tgt(f) < 0 ||
        c.tgt(f) >= c.num_objects())
      return Violation{ErrorCode::DanglingBoundary, "one_cell", {s.n1(f)}};
  for (int a : s.twos) {
    if (c.src2(a) < 0 || c.src2(a) >= c.num_ones() || c.tgt2(a) < 0 ||
        c.tgt2(a) >= c.num_ones())
      return Violation{ErrorCode::DanglingBoundary, "two_cell", {s.n2(a)}};
    int f = c.src2(a), g = c.tgt2(a);
    if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g))
      return axiom("parallel-boundary", {s.n2(a), s.n1(f), s.n1(g)});
  }
  for (int x : s.objs) {
    int i = c.id1(x);
    if (i < 0) return missing("id1", {s.o(x)});
    if (i >= c.num_ones() || c.src(i) != x || c.tgt(i) != x)
      return axiom("id1-boundary", {s.o(x), s.n1(i)});
  }
  for (int f : s.ones) {
    int i = c.id2(f);
    if (i < 0) return missing("id2", {s.n1(f)});
    if (i >= c.num_twos() || c.src2(i) != f || c.tgt2(i) != f)
      return axiom("id2-boundary", {s.n1(f), s.n2(i)});
  }
  return std::nullopt;
}

std::optional<Violation> check_table_shapes(const Scan& s) {
  const Fin2Cat& c = s.c;
  for (const auto& [g, f, r] : c.hcomp1_entries()) {
    if (c.src(g) != c.tgt(f)) return axiom("hcomp1-domain", {s.n1(g), s.n1(f)});
    if (r < 0 || r >= c.num_ones() || c.src(r) != c.src(f) || c.tgt(r) != c.tgt(g))
      return axiom("hcomp1-boundary", {s.n1(g), s.n1(f)});
  }
  for (const auto& [b, a, r] : c.vcomp_entries()) {
    if (c.src2(b) != c.tgt2(a)) return axiom("vcomp-domain", {s.n2(b), s.n2(a)});
    if (r < 0 || r >= c.num_twos() || c.src2(r) != c.src2(a) || c.tgt2(r) != c.tgt2(b))
      return axiom("vcomp-boundary", {s.n2(b), s.n2(a)});
  }
  for (int f : s.ones)
    for (int g : s.ones)
      if (c.src(g) == c.tgt(f) && c.hcomp1(g, f) < 0) return missing("hcomp1", {s.n1(g), s.n1(f)});
  for (const auto& [b, a, r] : c.hcomp2_entries()) {
    if (c.osrc(b) != c.otgt(a)) return axiom("hcomp2-domain", {s.n2(b), s.n2(a)});
    int sr = c.hcomp1(c.src2(b), c.src2(a));
    int tr = c.hcomp1(c.tgt2(b), c.tgt2(a));
    if (r < 0 || r >= c.num_twos() || c.src2(r) != sr || c.tgt2(r) != tr)
      return axiom("hcomp2-boundary", {s.n2(b), s.n2(a)});
  }
  for (int a : s.twos) {
    for (int b : s.twos) {
      if (c.src2(b) == c.tgt2(a) && c.vcomp(b, a) < 0) return missing("vcomp", {s.n2(b), s.n2(a)});
    }
  }
  for (int a : s.twos)
    for (int b : s.twos)
      if (c.osrc(b) == c.otgt(a) && c.hcomp2(b, a) < 0)
        return missing("hcomp2", {s.n2(b), s.n2(a)});
  return std::nullopt;
}

std::optional<Violation> check_laws(const Scan& s) {
  const Fin2Cat& c = s.c;
  const int n = c.num_objects();

  // Horizontal composition of 1-cells.
  for (int f : s.ones) {
    if (c.hcomp1(c.id1(c.tgt(f)), f) != f || c.hcomp1(f, c.id1(c.src(f))) != f)
      return axiom("hcomp1-identity", {s.n1(f)});
  }
  for (int f : s.ones)
    for (int y = 0; y < n; ++y)
      for (int g : s.ones_at[c.tgt(f)][y])
        for (int z = 0; z < n; ++z)
          for (int h : s.ones_at[y][z])
            if (c.hcomp1(h, c.hcomp1(g, f)) != c.hcomp1(c.hcomp1(h, g), f))
              return axiom("hcomp1-associativity", {s.n1(h), s.n1(g), s.n1(f)});

  // Each hom is a category under vertical composition.
  for (int a : s.twos) {
    if (c.vcomp(c.id2(c.tgt2(a)), a) != a || c.vcomp(a, c.id2(c.src2(a))) != a)
      return axiom("vcomp-identity", {s.n2(a)});
  }
  for (int a : s.twos)
    for (int b : s.twos_at[c.osrc(a)][c.otgt(a)]) {
      if (c.src2(b) != c.tgt2(a)) continue;
      int ba = c.vcomp(b, a);
      for (int d : s.twos_at[c.osrc(a)][c.otgt(a)]) {
        if (c.src2(d) != c.tgt2(b)) continue;
        if (c.vcomp(d, ba) != c.vcomp(c.vcomp(d, b), a))
          return axiom("vcomp-associativity", {s.n2(d), s.n2(b), s.n2(a)});
      }
    }

  // Horizontal composition of 2-cells.
  for (int f : s.ones)
    for (int g : s.ones) {
      if (c.src(g) != c.tgt(f)) continue;
      if (c.hcomp2(c.id2(g), c.id2(f)) != c.id2(c.hcomp1(g, f)))
        return axiom("identity-functoriality", {s.n1(g), s.n1(f)});
    }
  for (int a : s.twos) {
    int l = c.id2(c.id1(c.otgt(a))), r = c.id2(c.id1(c.osrc(a)));
    if (c.hcomp2(l, a) != a || c.hcomp2(a, r) != a) return axiom("hcomp2-identity", {s.n2(a)});
  }
  for (int a : s.twos)
    for (int y = 0; y < n; ++y)
      for (int b : s.twos_at[c.otgt(a)][y])
        for (int z = 0; z < n; ++z)
          for (int d : s.twos_at[y][z])
            if (c.hcomp2(d, c.hcomp2(b, a)) != c.hcomp2(c.hcomp2(d, b), a))
              return axiom("hcomp2-associativity", {s.n2(d), s.n2(b), s.n2(a)});

  // Interchange: (b'b)∘(a'a) = (b'∘a')(b∘a).
  for (int a : s.twos)
    for (int b : s.twos_at[c.osrc(a)][c.otgt(a)]) {
      if (c.src2(b) != c.tgt2(a)) continue;
      int ba = c.vcomp(b, a);
      for (int z = 0; z < n; ++z)
        for (int a2 : s.twos_at[c.otgt(a)][z])
          for (int b2 : s.twos_at[c.otgt(a)][z]) {
            if (c.src2(b2) != c.tgt2(a2)) continue;
            int lhs = c.vcomp(c.hcomp2(b2, b), c.hcomp2(a2, a));
            int rhs = c.hcomp2(c.vcomp(b2, a2), ba);
            if (lhs != rhs) return axiom("interchange", {s.n2(b2), s.n2(b), s.n2(a2), s.n2(a)});
          }
    }

  // Elevator equation: (a' id_g)∘(id_f' a) = (id_g' a)∘(a' id_f) = a'a.
  for (int a : s.twos)
    for (int z = 0; z < n; ++z)
      for (int a2 : s.twos_at[c.otgt(a)][z]) {
        int f = c.src2(a), g = c.tgt2(a), f2 = c.src2(a2), g2 = c.tgt2(a2);
        int both = c.hcomp2(a2, a);
        int up = c.vcomp(c.hcomp2(a2, c.id2(g)), c.hcomp2(c.id2(f2), a));
        int down = c.vcomp(c.hcomp2(c.id2(g2), a), c.hcomp2(a2, c.id2(f)));
        if (up != both || down != both) return axiom("elevator", {s.n2(a2), s.n2(a)});
      }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_two_category(const Fin2Cat& c) {
  Scan s(c);
  if (auto v = check_names(s)) return v;
  if (auto v = check_boundaries(s)) return v;
  s.group();
  if (auto v = check_table_shapes(s)) return v;
  return check_laws(s);
}

void validate_two_category(const Fin2Cat& c) {
  if (auto v = check_two_category(c)) throw Error(*v);
}

Fin2Cat dualize(const Fin2Cat& c) {
  Fin2Cat d;
  for (int x = 0; x < c.num_objects(); ++x) d.add_object(c.object_name(x));
  for (int f = 0; f < c.num_ones(); ++f) d.add_one(c.one_name(f), c.tgt(f), c.src(f));
  for (int a = 0; a < c.num_twos(); ++a) d.add_two(c.two_name(a), c.src2(a), c.tgt2(a));
  for (int x = 0; x < c.num_objects(); ++x) d.set_id1(x, c.id1(x));
  for (int f = 0; f < c.num_ones(); ++f) d.set_id2(f, c.id2(f));
  for (const auto& [b, a, r] : c.vcomp_entries()) d.set_vcomp(b, a, r);
  for (const auto& [g, f, r] : c.hcomp1_entries()) d.set_hcomp1(f, g, r);
  for (const auto& [b, a, r] : c.hcomp2_entries()) d.set_hcomp2(a, b, r);
  return d;
}

HomIndex hom_index(const Fin2Cat& c, int a, int b) {
  if (a < 0 || a >= c.num_objects() || b < 0 || b >= c.num_objects())
    throw Error(ErrorCode::UnknownObject, "hom_category");
  HomIndex h;
  h.obj_of_one.assign(c.num_ones(), -1);
  h.mor_of_two.assign(c.num_twos(), -1);
  const auto& fs = c.ones(a, b);
  for (int f : fs) {
    h.obj_of_one[f] = h.cat.add_object(c.one_name(f));
    h.one.push_back(f);
  }
  for (int f : fs)
    for (int g : fs)
      for (int al : c.twos(f, g)) {
        h.mor_of_two[al] = h.cat.add_morphism(c.two_name(al), h.obj_of_one[f], h.obj_of_one[g]);
        h.two.push_back(al);
      }
  for (int f : fs) h.cat.set_identity(h.obj_of_one[f], h.mor_of_two[c.id2(f)]);
  for (int al : h.two)
    for (int g : fs)
      for (int be : c.twos(c.tgt2(al), g))
        h.cat.set_comp(h.mor_of_two[be], h.mor_of_two[al], h.mor_of_two[c.vcomp(be, al)]);
  return h;
}

FinCat hom_category(const Fin2Cat& c, int a, int b) { return hom_index(c, a, b).cat; }

Fin2Cat product_two_category(const Fin2Cat& c, const Fin2Cat& d) {
  Fin2Cat p;
  const int n0 = d.num_objects(), n1 = d.num_ones(), n2 = d.num_twos();
  auto pair = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < n0; ++y) p.add_object(pair(c.object_name(x), d.object_name(y)));
  for (int f = 0; f < c.num_ones(); ++f)
    for (int g = 0; g < n1; ++g)
      p.add_one(pair(c.one_name(f), d.one_name(g)), c.src(f) * n0 + d.src(g), c.tgt(f) * n0 + d.tgt(g));
  for (int a = 0; a < c.num_twos(); ++a)
    for (int b = 0; b < n2; ++b)
      p.add_two(pair(c.two_name(a), d.two_name(b)), c.src2(a) * n1 + d.src2(b),
                c.tgt2(a) * n1 + d.tgt2(b));
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < n0; ++y) p.set_id1(x * n0 + y, c.id1(x) * n1 + d.id1(y));
  for (int f = 0; f < c.num_ones(); ++f)
    for (int g = 0; g < n1; ++g) p.set_id2(f * n1 + g, c.id2(f) * n2 + d.id2(g));
  for (const auto& [a2, a1, a] : c.vcomp_entries())
    for (const auto& [b2, b1, b] : d.vcomp_entries()) p.set_vcomp(a2 * n2 + b2, a1 * n2 + b1, a * n2 + b);
  for (const auto& [f2, f1, f] : c.hcomp1_entries())
    for (const auto& [g2, g1, g] : d.hcomp1_entries()) p.set_hcomp1(f2 * n1 + g2, f1 * n1 + g1, f * n1 + g);
  for (const auto& [a2, a1, a] : c.hcomp2_entries())
    for (const auto& [b2, b1, b] : d.hcomp2_entries()) p.set_hcomp2(a2 * n2 + b2, a1 * n2 + b1, a * n2 + b);
  return p;
}

int whisker(const Fin2Cat& c, Side side, int cell, int by) {
  int r = -1;
  if (side == Side::Left) {
    if (c.src(by) != c.otgt(cell)) throw Error(ErrorCode::NotComposable, "whisker", {c.one_name(by), c.two_name(cell)});
    r = c.hcomp2(c.id2(by), cell);
  } else {
    if (c.tgt(by) != c.osrc(cell)) throw Error(ErrorCode::NotComposable, "whisker", {c.two_name(cell), c.one_name(by)});
    r = c.hcomp2(cell, c.id2(by));
  }
  return r;
}

Fin2Cat terminal_two_category() {
  Fin2Cat t;
  t.add_object("*");
  t.add_one("id_*", 0, 0);
  t.add_two("id_id_*", 0, 0);
  t.set_id1(0, 0);
  t.set_id2(0, 0);
  t.set_vcomp(0, 0, 0);
  t.set_hcomp1(0, 0, 0);
  t.set_hcomp2(0, 0, 0);
  return t;
}

}  // namespace twopro
