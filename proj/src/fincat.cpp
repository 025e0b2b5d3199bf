#include "twopro/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace twopro {

int FinCat::add_object(std::string name) {
  int idx = num_objects();
  obj_index_.emplace(name, idx);
  obj_names_.push_back(std::move(name));
  ident_.push_back(-1);
  return idx;
}

int FinCat::add_morphism(std::string name, int dom, int cod) {
  int idx = num_morphisms();
  mor_index_.emplace(name, idx);
  mor_names_.push_back(std::move(name));
  dom_.push_back(dom);
  cod_.push_back(cod);
  homs_[key(dom, cod)].push_back(idx);
  inverse_cache_.clear();
  return idx;
}

void FinCat::set_identity(int obj, int mor) { ident_[obj] = mor; }

void FinCat::set_comp(int g, int f, int gf) {
  comp_[key(g, f)] = gf;
  inverse_cache_.clear();
}

int FinCat::comp(int g, int f) const {
  auto it = comp_.find(key(g, f));
  return it == comp_.end() ? -1 : it->second;
}

int FinCat::then(std::initializer_list<int> ms) const {
  int acc = -1;
  for (int m : ms) {
    acc = acc < 0 ? m : comp(m, acc);
    if (acc < 0) return -1;
  }
  return acc;
}

const std::vector<int>& FinCat::hom(int a, int b) const {
  static const std::vector<int> empty;
  auto it = homs_.find(key(a, b));
  return it == homs_.end() ? empty : it->second;
}

std::optional<int> FinCat::find_object(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::find_morphism(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

int FinCat::inverse(int m) const {
  auto it = inverse_cache_.find(m);
  if (it != inverse_cache_.end()) return it->second;
  int result = -1;
  int a = dom_[m], b = cod_[m];
  if (ident_[a] >= 0 && ident_[b] >= 0) {
    for (int n : hom(b, a)) {
      if (comp(n, m) == ident_[a] && comp(m, n) == ident_[b]) {
        result = n;
        break;
      }
    }
  }
  inverse_cache_.emplace(m, result);
  return result;
}

std::vector<std::tuple<int, int, int>> FinCat::comp_entries() const {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(comp_.size());
  for (const auto& [k, v] : comp_) {
    out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinCat::operator==(const FinCat& o) const {
  return obj_names_ == o.obj_names_ && mor_names_ == o.mor_names_ && dom_ == o.dom_ &&
         cod_ == o.cod_ && ident_ == o.ident_ && comp_entries() == o.comp_entries();
}

namespace {

std::vector<int> order_by_name(int n, const std::function<const std::string&(int)>& name) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return name(x) < name(y); });
  return order;
}

}  // namespace

std::optional<Violation> check_fincat(const FinCat& c) {
  auto mname = [&](int m) -> const std::string& { return c.morphism_name(m); };
  auto oname = [&](int a) -> const std::string& { return c.object_name(a); };
  auto objs = order_by_name(c.num_objects(), oname);
  auto mors = order_by_name(c.num_morphisms(), mname);

  for (int a : objs) {
    int i = c.id(a);
    if (i < 0) return Violation{ErrorCode::MissingCompositeEntry, "identity", {oname(a)}};
    if (c.dom(i) != a || c.cod(i) != a)
      return Violation{ErrorCode::AxiomViolation, "identity-boundary", {oname(a), mname(i)}};
  }
  for (int m : mors) {
    if (c.dom(m) < 0 || c.dom(m) >= c.num_objects() || c.cod(m) < 0 ||
        c.cod(m) >= c.num_objects())
      return Violation{ErrorCode::DanglingBoundary, "morphism", {mname(m)}};
  }
  for (const auto& [g, f, gf] : c.comp_entries()) {
    if (c.dom(g) != c.cod(f))
      return Violation{ErrorCode::AxiomViolation, "non-composable-entry", {mname(g), mname(f)}};
    if (gf < 0 || gf >= c.num_morphisms() || c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
      return Violation{ErrorCode::AxiomViolation, "composite-boundary", {mname(g), mname(f)}};
  }
  std::vector<std::vector<int>> out(c.num_objects());
  for (int m : mors) out[c.dom(m)].push_back(m);
  for (int f : mors) {
    for (int g : out[c.cod(f)]) {
      if (c.comp(g, f) < 0)
        return Violation{ErrorCode::MissingCompositeEntry, "comp", {mname(g), mname(f)}};
    }
  }
  for (int f : mors) {
    if (c.comp(c.id(c.cod(f)), f) != f)
      return Violation{ErrorCode::AxiomViolation, "left-identity", {mname(f)}};
    if (c.comp(f, c.id(c.dom(f))) != f)
      return Violation{ErrorCode::AxiomViolation, "right-identity", {mname(f)}};
  }
  for (int f : mors) {
    for (int g : out[c.cod(f)]) {
      int gf = c.comp(g, f);
      for (int h : out[c.cod(g)]) {
        if (c.comp(h, gf) != c.comp(c.comp(h, g), f))
          return Violation{ErrorCode::AxiomViolation, "associativity",
                           {mname(h), mname(g), mname(f)}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_functor(const FinCat& a, const FinCat& b, const Functor& f) {
  auto bad = [](std::string law, std::vector<std::string> w) {
    return Violation{ErrorCode::PreservationViolation, std::move(law), std::move(w)};
  };
  if (static_cast<int>(f.ob.size()) != a.num_objects() ||
      static_cast<int>(f.mor.size()) != a.num_morphisms())
    return bad("functor-shape", {});
  for (int x = 0; x < a.num_objects(); ++x)
    if (f.ob[x] < 0 || f.ob[x] >= b.num_objects()) return bad("object-map", {a.object_name(x)});
  for (int m = 0; m < a.num_morphisms(); ++m) {
    int fm = f.mor[m];
    if (fm < 0 || fm >= b.num_morphisms() || b.dom(fm) != f.ob[a.dom(m)] ||
        b.cod(fm) != f.ob[a.cod(m)])
      return bad("morphism-boundary", {a.morphism_name(m)});
  }
  for (int x = 0; x < a.num_objects(); ++x)
    if (f.mor[a.id(x)] != b.id(f.ob[x])) return bad("identity", {a.object_name(x)});
  for (const auto& [g, h, gh] : a.comp_entries())
    if (f.mor[gh] != b.comp(f.mor[g], f.mor[h]))
      return bad("composition", {a.morphism_name(g), a.morphism_name(h)});
  return std::nullopt;
}

std::optional<Violation> check_nat(const FinCat& a, const FinCat& b, const Functor& f,
                                   const Functor& g, const NatTrans& eta) {
  auto bad = [](std::string law, std::vector<std::string> w) {
    return Violation{ErrorCode::CoherenceViolation, std::move(law), std::move(w)};
  };
  if (static_cast<int>(eta.comp.size()) != a.num_objects()) return bad("nat-shape", {});
  for (int x = 0; x < a.num_objects(); ++x) {
    int e = eta.comp[x];
    if (e < 0 || e >= b.num_morphisms() || b.dom(e) != f.ob[x] || b.cod(e) != g.ob[x])
      return bad("component-boundary", {a.object_name(x)});
  }
  for (int m = 0; m < a.num_morphisms(); ++m) {
    int lhs = b.comp(g.mor[m], eta.comp[a.dom(m)]);
    int rhs = b.comp(eta.comp[a.cod(m)], f.mor[m]);
    if (lhs < 0 || lhs != rhs) return bad("naturality", {a.morphism_name(m)});
  }
  return std::nullopt;
}

Functor identity_functor(const FinCat& a) {
  Functor f;
  for (int x = 0; x < a.num_objects(); ++x) f.ob.push_back(x);
  for (int m = 0; m < a.num_morphisms(); ++m) f.mor.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h;
  h.ob.reserve(f.ob.size());
  h.mor.reserve(f.mor.size());
  for (int x : f.ob) h.ob.push_back(g.ob[x]);
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

NatTrans identity_nat(const FinCat& b, const Functor& f) {
  NatTrans n;
  for (int y : f.ob) n.comp.push_back(b.id(y));
  return n;
}

NatTrans vcompose(const FinCat& b, const NatTrans& eta, const NatTrans& theta) {
  NatTrans n;
  n.comp.reserve(eta.comp.size());
  for (std::size_t i = 0; i < eta.comp.size(); ++i)
    n.comp.push_back(b.comp(eta.comp[i], theta.comp[i]));
  return n;
}

NatTrans whisker_left(const Functor& h, const NatTrans& eta) {
  NatTrans n;
  for (int e : eta.comp) n.comp.push_back(h.mor[e]);
  return n;
}

NatTrans whisker_right(const NatTrans& eta, const Functor& k) {
  NatTrans n;
  for (int x : k.ob) n.comp.push_back(eta.comp[x]);
  return n;
}

NatTrans hcompose(const FinCat& c, const NatTrans& beta, const Functor& g, const NatTrans& alpha,
                  const Functor& f1) {
  NatTrans n;
  n.comp.reserve(alpha.comp.size());
  for (std::size_t x = 0; x < alpha.comp.size(); ++x)
    n.comp.push_back(c.comp(beta.comp[f1.ob[x]], g.mor[alpha.comp[x]]));
  return n;
}

bool is_nat_iso(const FinCat& b, const NatTrans& eta) {
  return std::all_of(eta.comp.begin(), eta.comp.end(), [&](int e) { return b.is_iso(e); });
}

NatTrans inverse_nat(const FinCat& b, const NatTrans& eta) {
  NatTrans n;
  for (int e : eta.comp) n.comp.push_back(b.inverse(e));
  return n;
}

FinCat terminal_cat() { return discrete_cat({"*"}); }

FinCat discrete_cat(const std::vector<std::string>& names) {
  FinCat c;
  for (const auto& n : names) {
    int x = c.add_object(n);
    int m = c.add_morphism("id_" + n, x, x);
    c.set_identity(x, m);
    c.set_comp(m, m, m);
  }
  return c;
}

FinCat product_cat(const FinCat& a, const FinCat& b) {
  FinCat p;
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < b.num_objects(); ++y)
      p.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  const int nb = b.num_objects(), mb = b.num_morphisms();
  for (int f = 0; f < a.num_morphisms(); ++f)
    for (int g = 0; g < mb; ++g)
      p.add_morphism("(" + a.morphism_name(f) + "," + b.morphism_name(g) + ")",
                     a.dom(f) * nb + b.dom(g), a.cod(f) * nb + b.cod(g));
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < nb; ++y) p.set_identity(x * nb + y, a.id(x) * mb + b.id(y));
  for (const auto& [f2, f1, f] : a.comp_entries())
    for (const auto& [g2, g1, g] : b.comp_entries()) p.set_comp(f2 * mb + g2, f1 * mb + g1, f * mb + g);
  return p;
}

std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b, Budget& budget) {
  std::vector<Functor> out;
  const int na = a.num_objects();
  const int ma = a.num_morphisms();
  Functor f;
  f.ob.assign(na, -1);
  f.mor.assign(ma, -1);

  // Entries of a's table grouped by the largest morphism index they mention,
  // so each check fires as soon as all three cells are assigned.
  std::vector<std::vector<std::tuple<int, int, int>>> checks(ma);
  for (const auto& e : a.comp_entries()) {
    auto [g, h, gh] = e;
    checks[std::max({g, h, gh})].push_back(e);
  }

  std::function<void(int)> assign_mor = [&](int m) {
    budget.tick();
    if (m == ma) {
      out.push_back(f);
      return;
    }
    int x = a.dom(m), y = a.cod(m);
    auto consistent = [&]() {
      for (const auto& [g, h, gh] : checks[m])
        if (b.comp(f.mor[g], f.mor[h]) != f.mor[gh]) return false;
      return true;
    };
    if (m == a.id(x)) {
      f.mor[m] = b.id(f.ob[x]);
      if (consistent()) assign_mor(m + 1);
      f.mor[m] = -1;
      return;
    }
    for (int c : b.hom(f.ob[x], f.ob[y])) {
      f.mor[m] = c;
      if (consistent()) assign_mor(m + 1);
    }
    f.mor[m] = -1;
  };
  std::function<void(int)> assign_ob = [&](int x) {
    budget.tick();
    if (x == na) {
      assign_mor(0);
      return;
    }
    for (int y = 0; y < b.num_objects(); ++y) {
      f.ob[x] = y;
      assign_ob(x + 1);
    }
    f.ob[x] = -1;
  };
  assign_ob(0);
  return out;
}

std::vector<NatTrans> enumerate_nats(const FinCat& a, const FinCat& b, const Functor& f,
                                     const Functor& g, Budget& budget) {
  std::vector<NatTrans> out;
  const int na = a.num_objects();
  NatTrans eta;
  eta.comp.assign(na, -1);
  std::vector<std::vector<int>> checks(na);
  for (int m = 0; m < a.num_morphisms(); ++m) checks[std::max(a.dom(m), a.cod(m))].push_back(m);

  std::function<void(int)> go = [&](int x) {
    budget.tick();
    if (x == na) {
      out.push_back(eta);
      return;
    }
    for (int e : b.hom(f.ob[x], g.ob[x])) {
      eta.comp[x] = e;
      bool ok = true;
      for (int m : checks[x]) {
        if (b.comp(g.mor[m], eta.comp[a.dom(m)]) != b.comp(eta.comp[a.cod(m)], f.mor[m])) {
          ok = false;
          break;
        }
      }
      if (ok) go(x + 1);
    }
    eta.comp[x] = -1;
  };
  go(0);
  return out;
}

FunctorCategory functor_category(const FinCat& a, const FinCat& b, Budget& budget) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(a, b, budget);
  const int n = static_cast<int>(fc.functors.size());
  for (int i = 0; i < n; ++i) fc.cat.add_object("F" + std::to_string(i));
  std::map<std::pair<int, NatTrans>, int> index;
  std::vector<std::vector<std::vector<int>>> by_hom(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (auto& eta : enumerate_nats(a, b, fc.functors[i], fc.functors[j], budget)) {
        int m = fc.cat.add_morphism("n" + std::to_string(fc.nats.size()), i, j);
        index.emplace(std::make_pair(i, eta), m);
        by_hom[i][j].push_back(m);
        if (eta == identity_nat(b, fc.functors[i]) && i == j) fc.cat.set_identity(i, m);
        fc.nats.push_back(std::move(eta));
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int f : by_hom[i][j])
          for (int g : by_hom[j][k]) {
            NatTrans gf = vcompose(b, fc.nats[g], fc.nats[f]);
            fc.cat.set_comp(g, f, index.at({i, gf}));
          }
  return fc;
}

bool is_isomorphism(const FinCat& a, const FinCat& b, const Functor& f) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  if (check_functor(a, b, f)) return false;
  std::vector<char> seen_o(b.num_objects(), 0), seen_m(b.num_morphisms(), 0);
  for (int y : f.ob) {
    if (seen_o[y]) return false;
    seen_o[y] = 1;
  }
  for (int n : f.mor) {
    if (seen_m[n]) return false;
    seen_m[n] = 1;
  }
  return true;
}

std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b) {
  const int n = a.num_objects();
  if (n != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return std::nullopt;
  Functor f;
  f.ob.assign(n, -1);
  f.mor.assign(a.num_morphisms(), -1);
  std::vector<char> used_o(n, 0), used_m(b.num_morphisms(), 0);

  std::vector<int> mors(a.num_morphisms());
  for (int m = 0; m < a.num_morphisms(); ++m) mors[m] = m;
  std::vector<std::vector<std::tuple<int, int, int>>> checks(a.num_morphisms());
  for (const auto& e : a.comp_entries()) {
    auto [g, h, gh] = e;
    checks[std::max({g, h, gh})].push_back(e);
  }
  bool found = false;

  std::function<void(int)> assign_mor = [&](int m) {
    if (found) return;
    if (m == a.num_morphisms()) {
      found = true;
      return;
    }
    for (int c : b.hom(f.ob[a.dom(m)], f.ob[a.cod(m)])) {
      if (used_m[c]) continue;
      if ((m == a.id(a.dom(m))) != (c == b.id(f.ob[a.dom(m)]))) continue;
      f.mor[m] = c;
      bool ok = true;
      for (const auto& [g, h, gh] : checks[m])
        if (b.comp(f.mor[g], f.mor[h]) != f.mor[gh]) {
          ok = false;
          break;
        }
      if (ok) {
        used_m[c] = 1;
        assign_mor(m + 1);
        if (found) return;
        used_m[c] = 0;
      }
    }
    f.mor[m] = -1;
  };
  std::function<void(int)> assign_ob = [&](int x) {
    if (found) return;
    if (x == n) {
      assign_mor(0);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used_o[y]) continue;
      bool ok = true;
      for (int x2 = 0; x2 <= x && ok; ++x2) {
        int y2 = x2 == x ? y : f.ob[x2];
        ok = a.hom(x, x2).size() == b.hom(y, y2).size() &&
             a.hom(x2, x).size() == b.hom(y2, y).size();
      }
      if (!ok) continue;
      f.ob[x] = y;
      used_o[y] = 1;
      assign_ob(x + 1);
      if (found) return;
      used_o[y] = 0;
      f.ob[x] = -1;
    }
  };
  assign_ob(0);
  if (!found) return std::nullopt;
  return f;
}

std::string join_names(const std::vector<std::string>& parts, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  s += close;
  return s;
}

}  // namespace twopro
