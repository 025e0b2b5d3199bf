#include "twopro/io.hpp"
#include "twopro/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace twopro {

namespace {

[[noreturn]] void parse_error(const std::string& what, const std::string& detail = {}) {
  throw Error(ErrorCode::ParseError, what, detail.empty() ? std::vector<std::string>{}
                                                          : std::vector<std::string>{detail});
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) parse_error(what, std::string("missing ") + key);
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) parse_error(what, "expected string");
  return j.get<std::string>();
}

template <typename Lookup>
int ref(const Lookup& idx, const std::string& id, const char* what) {
  auto it = idx.find(id);
  if (it == idx.end()) throw Error(ErrorCode::DanglingBoundary, what, {id});
  return it->second;
}

}  // namespace

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) parse_error(what, "expected object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k == "format") continue;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      parse_error(what, "unknown key " + k);
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "open", {path.string()});
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("json", e.what());
  }
  if (!j.is_object() || !j.contains("format") || j.at("format") != 1)
    parse_error("format", path.string());
  return j;
}

Json resolve_ref(const Json& v, const std::filesystem::path& base) {
  if (v.is_string()) return load_json_file(base / v.get<std::string>());
  if (v.is_object()) return v;
  parse_error("reference", "expected object or path");
}

FinCat fincat_from_json(const Json& j) {
  require_keys(j, {"objects", "morphisms", "identity", "comp"}, "fincat");
  FinCat c;
  std::map<std::string, int> ob, mor;
  for (const auto& o : field(j, "objects", "fincat")) {
    std::string id = str(o, "fincat.objects");
    if (ob.count(id)) throw Error(ErrorCode::DuplicateId, "object", {id});
    ob[id] = c.add_object(id);
  }
  for (const auto& m : field(j, "morphisms", "fincat")) {
    require_keys(m, {"id", "src", "tgt"}, "fincat.morphism");
    std::string id = str(field(m, "id", "morphism"), "morphism.id");
    if (mor.count(id)) throw Error(ErrorCode::DuplicateId, "morphism", {id});
    mor[id] = c.add_morphism(id, ref(ob, str(field(m, "src", "morphism"), "src"), "morphism"),
                             ref(ob, str(field(m, "tgt", "morphism"), "tgt"), "morphism"));
  }
  for (const auto& [o, m] : field(j, "identity", "fincat").items())
    c.set_identity(ref(ob, o, "identity"), ref(mor, str(m, "identity"), "identity"));
  std::set<std::pair<int, int>> seen;
  for (const auto& e : field(j, "comp", "fincat")) {
    require_keys(e, {"g", "f", "result"}, "fincat.comp");
    int g = ref(mor, str(field(e, "g", "comp"), "g"), "comp");
    int f = ref(mor, str(field(e, "f", "comp"), "f"), "comp");
    if (!seen.insert({g, f}).second)
      throw Error(ErrorCode::DuplicateId, "comp-entry", {c.morphism_name(g), c.morphism_name(f)});
    c.set_comp(g, f, ref(mor, str(field(e, "result", "comp"), "result"), "comp"));
  }
  return c;
}

Json fincat_to_json(const FinCat& c) {
  Json j;
  j["objects"] = Json::array();
  for (int x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
  j["morphisms"] = Json::array();
  for (int m = 0; m < c.num_morphisms(); ++m)
    j["morphisms"].push_back({{"id", c.morphism_name(m)},
                              {"src", c.object_name(c.dom(m))},
                              {"tgt", c.object_name(c.cod(m))}});
  j["identity"] = Json::object();
  for (int x = 0; x < c.num_objects(); ++x)
    if (c.has_identity(x)) j["identity"][c.object_name(x)] = c.morphism_name(c.id(x));
  j["comp"] = Json::array();
  for (const auto& [g, f, r] : c.comp_entries())
    j["comp"].push_back({{"g", c.morphism_name(g)},
                         {"f", c.morphism_name(f)},
                         {"result", c.morphism_name(r)}});
  return j;
}

Fin2Cat parse_two_category(const Json& j) {
  require_keys(j, {"objects", "one_cells", "two_cells", "id1", "id2", "vcomp", "hcomp1", "hcomp2"},
               "2cat");
  auto sorted_ids = [&](const Json& arr, const char* what, auto get) {
    std::vector<std::string> ids;
    for (const auto& e : arr) ids.push_back(get(e));
    std::vector<std::string> s = ids;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] == s[i - 1]) throw Error(ErrorCode::DuplicateId, what, {s[i]});
    return s;
  };
  const Json& objs = field(j, "objects", "2cat");
  const Json& ones = field(j, "one_cells", "2cat");
  const Json& twos = field(j, "two_cells", "2cat");
  if (!objs.is_array() || !ones.is_array() || !twos.is_array()) parse_error("2cat", "expected arrays");
  auto oid = sorted_ids(objs, "object", [](const Json& e) { return str(e, "object"); });
  auto cell_id = [](const Json& e) {
    require_keys(e, {"id", "src", "tgt"}, "cell");
    return str(field(e, "id", "cell"), "cell.id");
  };
  auto id1s = sorted_ids(ones, "one_cell", cell_id);
  auto id2s = sorted_ids(twos, "two_cell", cell_id);

  std::map<std::string, const Json*> one_raw, two_raw;
  for (const auto& e : ones) one_raw[e.at("id").get<std::string>()] = &e;
  for (const auto& e : twos) two_raw[e.at("id").get<std::string>()] = &e;

  Fin2Cat c;
  std::map<std::string, int> ob, o1, o2;
  for (const auto& id : oid) ob[id] = c.add_object(id);
  for (const auto& id : id1s) {
    const Json& e = *one_raw[id];
    o1[id] = c.add_one(id, ref(ob, str(field(e, "src", "one_cell"), "src"), "one_cell.src"),
                       ref(ob, str(field(e, "tgt", "one_cell"), "tgt"), "one_cell.tgt"));
  }
  for (const auto& id : id2s) {
    const Json& e = *two_raw[id];
    o2[id] = c.add_two(id, ref(o1, str(field(e, "src", "two_cell"), "src"), "two_cell.src"),
                       ref(o1, str(field(e, "tgt", "two_cell"), "tgt"), "two_cell.tgt"));
  }
  for (const auto& [o, f] : field(j, "id1", "2cat").items())
    c.set_id1(ref(ob, o, "id1"), ref(o1, str(f, "id1"), "id1"));
  for (const auto& [f, a] : field(j, "id2", "2cat").items())
    c.set_id2(ref(o1, f, "id2"), ref(o2, str(a, "id2"), "id2"));

  auto table = [&](const char* name, const std::map<std::string, int>& idx, auto set) {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : field(j, name, "2cat")) {
      require_keys(e, {"g", "f", "result"}, name);
      int g = ref(idx, str(field(e, "g", name), name), name);
      int f = ref(idx, str(field(e, "f", name), name), name);
      int r = ref(idx, str(field(e, "result", name), name), name);
      if (!seen.insert({g, f}).second)
        throw Error(ErrorCode::DuplicateId, std::string(name) + "-entry",
                    {e.at("g").get<std::string>(), e.at("f").get<std::string>()});
      set(g, f, r);
    }
  };
  table("vcomp", o2, [&](int g, int f, int r) { c.set_vcomp(g, f, r); });
  table("hcomp1", o1, [&](int g, int f, int r) { c.set_hcomp1(g, f, r); });
  table("hcomp2", o2, [&](int g, int f, int r) { c.set_hcomp2(g, f, r); });
  return c;
}

Fin2Cat load_two_category(const Json& j) {
  Fin2Cat c = parse_two_category(j);
  validate_two_category(c);
  return c;
}

Json two_category_to_json(const Fin2Cat& c) {
  Json j;
  j["format"] = 1;
  j["objects"] = Json::array();
  for (int x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
  j["one_cells"] = Json::array();
  for (int f = 0; f < c.num_ones(); ++f)
    j["one_cells"].push_back({{"id", c.one_name(f)},
                              {"src", c.object_name(c.src(f))},
                              {"tgt", c.object_name(c.tgt(f))}});
  j["two_cells"] = Json::array();
  for (int a = 0; a < c.num_twos(); ++a)
    j["two_cells"].push_back({{"id", c.two_name(a)},
                              {"src", c.one_name(c.src2(a))},
                              {"tgt", c.one_name(c.tgt2(a))}});
  j["id1"] = Json::object();
  for (int x = 0; x < c.num_objects(); ++x)
    if (c.id1(x) >= 0) j["id1"][c.object_name(x)] = c.one_name(c.id1(x));
  j["id2"] = Json::object();
  for (int f = 0; f < c.num_ones(); ++f)
    if (c.id2(f) >= 0) j["id2"][c.one_name(f)] = c.two_name(c.id2(f));
  auto dump = [](const Fin2Cat::Entries& es, auto name) {
    Json arr = Json::array();
    for (const auto& [g, f, r] : es) arr.push_back({{"g", name(g)}, {"f", name(f)}, {"result", name(r)}});
    return arr;
  };
  auto n1 = [&](int f) { return c.one_name(f); };
  auto n2 = [&](int a) { return c.two_name(a); };
  j["vcomp"] = dump(c.vcomp_entries(), n2);
  j["hcomp1"] = dump(c.hcomp1_entries(), n1);
  j["hcomp2"] = dump(c.hcomp2_entries(), n2);
  return j;
}

namespace {

int fc_object(const FinCat& c, const std::string& n, const char* what) {
  auto r = c.find_object(n);
  if (!r) throw Error(ErrorCode::UnknownObject, what, {n});
  return *r;
}

int fc_morphism(const FinCat& c, const std::string& n, const char* what) {
  auto r = c.find_morphism(n);
  if (!r) throw Error(ErrorCode::UnknownCell, what, {n});
  return *r;
}

int c2_object(const Fin2Cat& c, const std::string& n, const char* what) {
  auto r = c.find_object(n);
  if (!r) throw Error(ErrorCode::UnknownObject, what, {n});
  return *r;
}

int c2_one(const Fin2Cat& c, const std::string& n, const char* what) {
  auto r = c.find_one(n);
  if (!r) throw Error(ErrorCode::UnknownCell, what, {n});
  return *r;
}

int c2_two(const Fin2Cat& c, const std::string& n, const char* what) {
  auto r = c.find_two(n);
  if (!r) throw Error(ErrorCode::UnknownCell, what, {n});
  return *r;
}

const Json* entry(const Json& table, const std::string& key) {
  if (!table.is_object()) parse_error("table", "expected object");
  auto it = table.find(key);
  return it == table.end() ? nullptr : &*it;
}

// Object, 1-cell and 2-cell tables of a strict 2-functor; identity cells may
// be left out.
TwoFunctor two_functor_tables(const Json& j, const Fin2Cat& s, const Fin2Cat& t) {
  TwoFunctor f;
  const Json& mo = field(j, "map_obj", "functor");
  const Json& m1 = field(j, "map_1", "functor");
  const Json& m2 = field(j, "map_2", "functor");
  for (const auto* tbl : {&mo, &m1, &m2})
    if (!tbl->is_object()) parse_error("functor", "expected object tables");
  for (const auto& [k, v] : mo.items()) (void)v, c2_object(s, k, "map_obj");
  for (const auto& [k, v] : m1.items()) (void)v, c2_one(s, k, "map_1");
  for (const auto& [k, v] : m2.items()) (void)v, c2_two(s, k, "map_2");
  for (int x = 0; x < s.num_objects(); ++x) {
    const Json* e = entry(mo, s.object_name(x));
    if (!e) parse_error("map_obj", "missing " + s.object_name(x));
    f.ob.push_back(c2_object(t, str(*e, "map_obj"), "map_obj"));
  }
  std::vector<int> id_of(s.num_ones(), -1);
  for (int x = 0; x < s.num_objects(); ++x) id_of[s.id1(x)] = x;
  for (int u = 0; u < s.num_ones(); ++u) {
    const Json* e = entry(m1, s.one_name(u));
    if (e) f.one.push_back(c2_one(t, str(*e, "map_1"), "map_1"));
    else if (id_of[u] >= 0) f.one.push_back(t.id1(f.ob[id_of[u]]));
    else parse_error("map_1", "missing " + s.one_name(u));
  }
  for (int a = 0; a < s.num_twos(); ++a) {
    const Json* e = entry(m2, s.two_name(a));
    if (e) f.two.push_back(c2_two(t, str(*e, "map_2"), "map_2"));
    else if (s.id2(s.src2(a)) == a) f.two.push_back(t.id2(f.one[s.src2(a)]));
    else parse_error("map_2", "missing " + s.two_name(a));
  }
  return f;
}

}  // namespace

Functor functor_from_json(const Json& j, const FinCat& a, const FinCat& b) {
  require_keys(j, {"objects", "morphisms"}, "functor-table");
  Functor f;
  const Json& obs = field(j, "objects", "functor-table");
  const Json& ms = field(j, "morphisms", "functor-table");
  for (const auto& [k, v] : obs.items()) (void)v, fc_object(a, k, "functor-table");
  for (const auto& [k, v] : ms.items()) (void)v, fc_morphism(a, k, "functor-table");
  for (int x = 0; x < a.num_objects(); ++x) {
    const Json* e = entry(obs, a.object_name(x));
    if (!e) parse_error("functor-table", "missing " + a.object_name(x));
    f.ob.push_back(fc_object(b, str(*e, "functor-table"), "functor-table"));
  }
  for (int m = 0; m < a.num_morphisms(); ++m) {
    const Json* e = entry(ms, a.morphism_name(m));
    if (e) f.mor.push_back(fc_morphism(b, str(*e, "functor-table"), "functor-table"));
    else if (a.id(a.dom(m)) == m) f.mor.push_back(b.id(f.ob[a.dom(m)]));
    else parse_error("functor-table", "missing " + a.morphism_name(m));
  }
  return f;
}

NatTrans nat_from_json(const Json& j, const FinCat& a, const FinCat& b) {
  NatTrans t;
  for (const auto& [k, v] : j.items()) (void)v, fc_object(a, k, "component-table");
  for (int x = 0; x < a.num_objects(); ++x) {
    const Json* e = entry(j, a.object_name(x));
    if (!e) parse_error("component-table", "missing " + a.object_name(x));
    t.comp.push_back(fc_morphism(b, str(*e, "component-table"), "component-table"));
  }
  return t;
}

Json functor_to_json(const FinCat& a, const FinCat& b, const Functor& f) {
  Json j;
  j["objects"] = Json::object();
  for (int x = 0; x < a.num_objects(); ++x) j["objects"][a.object_name(x)] = b.object_name(f.ob[x]);
  j["morphisms"] = Json::object();
  for (int m = 0; m < a.num_morphisms(); ++m) j["morphisms"][a.morphism_name(m)] = b.morphism_name(f.mor[m]);
  return j;
}

struct Workspace::Impl {
  struct Doc {
    Json json;
    std::filesystem::path base;
    std::string key;  // canonical path, empty when inline
  };
  static Doc deref(const Json& v, const std::filesystem::path& base);

  Fin2CatPtr two_category(const Json& v, const std::filesystem::path& base);
  CatFunctor catvalued(const Json& v, const std::filesystem::path& base);
  TwoFunctor functor(const Json& v, const std::filesystem::path& base);
  LoadedPseudoNat pseudonat(const Json& v, const std::filesystem::path& base);
  LoadedModification modification(const Json& v, const std::filesystem::path& base);
  ProObjectPtr pro_object(const Json& v, const std::filesystem::path& base);
  Fin2CatPtr host_of(const Json& v, const std::filesystem::path& base);
  KxDiagram kx_diagram(ProContext& ctx, const Json& v, const std::filesystem::path& base);

  std::map<std::string, Fin2CatPtr> cats;
  std::map<std::string, ProObjectPtr> pros;
};

Workspace::Impl::Doc Workspace::Impl::deref(const Json& v, const std::filesystem::path& base) {
  if (v.is_string()) {
    std::filesystem::path p = base / v.get<std::string>();
    Json j = load_json_file(p);
    return {std::move(j), p.parent_path(), std::filesystem::weakly_canonical(p).string()};
  }
  if (v.is_object()) return {v, base, {}};
  parse_error("reference", "expected object or path");
}

Fin2CatPtr Workspace::Impl::two_category(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  if (!d.key.empty())
    if (auto it = cats.find(d.key); it != cats.end()) return it->second;
  auto c = std::make_shared<const Fin2Cat>(load_two_category(d.json));
  if (!d.key.empty()) cats[d.key] = c;
  return c;
}

CatFunctor Workspace::Impl::catvalued(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  const Json& j = d.json;
  require_keys(j, {"source", "fibers", "map_1", "map_2"}, "catvalued");
  CatFunctor F;
  F.source = two_category(field(j, "source", "catvalued"), d.base);
  const Fin2Cat& c = *F.source;
  const Json& fibers = field(j, "fibers", "catvalued");
  const Json& m1 = field(j, "map_1", "catvalued");
  const Json& m2 = field(j, "map_2", "catvalued");
  for (const auto& [k, x] : fibers.items()) (void)x, c2_object(c, k, "fibers");
  for (const auto& [k, x] : m1.items()) (void)x, c2_one(c, k, "map_1");
  for (const auto& [k, x] : m2.items()) (void)x, c2_two(c, k, "map_2");
  for (int x = 0; x < c.num_objects(); ++x) {
    const Json* e = entry(fibers, c.object_name(x));
    if (!e) parse_error("fibers", "missing " + c.object_name(x));
    F.fiber.push_back(fincat_from_json(*e));
    if (auto v2 = check_fincat(F.fiber.back())) throw Error(*v2);
  }
  for (int u = 0; u < c.num_ones(); ++u) {
    const FinCat& a = F.fiber[c.src(u)];
    const Json* e = entry(m1, c.one_name(u));
    if (e) F.map1.push_back(functor_from_json(*e, a, F.fiber[c.tgt(u)]));
    else if (c.id1(c.src(u)) == u) F.map1.push_back(identity_functor(a));
    else parse_error("map_1", "missing " + c.one_name(u));
  }
  for (int al = 0; al < c.num_twos(); ++al) {
    const Json* e = entry(m2, c.two_name(al));
    const FinCat& a = F.fiber[c.osrc(al)];
    const FinCat& b = F.fiber[c.otgt(al)];
    if (e) F.map2.push_back(nat_from_json(*e, a, b));
    else if (c.id2(c.src2(al)) == al) F.map2.push_back(identity_nat(b, F.map1[c.src2(al)]));
    else parse_error("map_2", "missing " + c.two_name(al));
  }
  validate_cat_functor(F);
  return F;
}

TwoFunctor Workspace::Impl::functor(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  require_keys(d.json, {"source", "target", "map_obj", "map_1", "map_2"}, "functor");
  auto s = two_category(field(d.json, "source", "functor"), d.base);
  auto t = two_category(field(d.json, "target", "functor"), d.base);
  TwoFunctor f = two_functor_tables(d.json, *s, *t);
  f.source = s;
  f.target = t;
  validate_two_functor(f);
  return f;
}

Workspace::LoadedPseudoNat Workspace::Impl::pseudonat(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  const Json& j = d.json;
  require_keys(j, {"F", "G", "components", "coherences"}, "pseudonat");
  LoadedPseudoNat r;
  r.F = catvalued(field(j, "F", "pseudonat"), d.base);
  r.G = catvalued(field(j, "G", "pseudonat"), d.base);
  if (r.F.source != r.G.source && !(*r.F.source == *r.G.source))
    throw Error(ErrorCode::InvalidDiagram, "pseudonat-source");
  const Fin2Cat& c = *r.F.source;
  const Json& comps = field(j, "components", "pseudonat");
  const Json& cohs = field(j, "coherences", "pseudonat");
  for (const auto& [k, x] : comps.items()) (void)x, c2_object(c, k, "components");
  for (const auto& [k, x] : cohs.items()) (void)x, c2_one(c, k, "coherences");
  for (int x = 0; x < c.num_objects(); ++x) {
    const Json* e = entry(comps, c.object_name(x));
    if (!e) parse_error("components", "missing " + c.object_name(x));
    r.theta.comp.push_back(functor_from_json(*e, r.F.fiber[x], r.G.fiber[x]));
  }
  for (int u = 0; u < c.num_ones(); ++u) {
    const Json* e = entry(cohs, c.one_name(u));
    const FinCat& b = r.G.fiber[c.tgt(u)];
    if (e) r.theta.coh.push_back(nat_from_json(*e, r.F.fiber[c.src(u)], b));
    else if (c.id1(c.src(u)) == u) r.theta.coh.push_back(identity_nat(b, r.theta.comp[c.src(u)]));
    else parse_error("coherences", "missing " + c.one_name(u));
  }
  validate_pseudonat(r.F, r.G, r.theta);
  return r;
}

Workspace::LoadedModification Workspace::Impl::modification(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  const Json& j = d.json;
  require_keys(j, {"theta", "eta", "components"}, "modification");
  LoadedModification r;
  r.theta = pseudonat(field(j, "theta", "modification"), d.base);
  r.eta = pseudonat(field(j, "eta", "modification"), d.base);
  const Fin2Cat& c = *r.theta.F.source;
  const Json& comps = field(j, "components", "modification");
  for (const auto& [k, x] : comps.items()) (void)x, c2_object(c, k, "components");
  for (int x = 0; x < c.num_objects(); ++x) {
    const Json* e = entry(comps, c.object_name(x));
    if (!e) parse_error("components", "missing " + c.object_name(x));
    r.rho.comp.push_back(nat_from_json(*e, r.theta.F.fiber[x], r.theta.G.fiber[x]));
  }
  validate_modification(r.theta.F, r.theta.G, r.theta.theta, r.eta.theta, r.rho);
  return r;
}

ProObjectPtr Workspace::Impl::pro_object(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  if (!d.key.empty())
    if (auto it = pros.find(d.key); it != pros.end()) return it->second;
  const Json& j = d.json;
  require_keys(j, {"name", "index", "host", "diagram"}, "pro_object");
  auto index = two_category(field(j, "index", "pro_object"), d.base);
  auto host = two_category(field(j, "host", "pro_object"), d.base);
  const Json& dj = field(j, "diagram", "pro_object");
  require_keys(dj, {"map_obj", "map_1", "map_2"}, "pro_object.diagram");
  TwoFunctor f = two_functor_tables(dj, *index, *host);
  std::string name = j.contains("name") ? str(j.at("name"), "name")
                     : d.key.empty()    ? std::string("X")
                                        : std::filesystem::path(d.key).filename().string();
  auto p = make_pro(name, index, host, std::move(f));
  if (!d.key.empty()) pros[d.key] = p;
  return p;
}

Fin2CatPtr Workspace::Impl::host_of(const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  return two_category(field(d.json, "host", "host"), d.base);
}

KxDiagram Workspace::Impl::kx_diagram(ProContext& ctx, const Json& v, const std::filesystem::path& base) {
  Doc d = deref(v, base);
  const Json& j = d.json;
  require_keys(j, {"index", "host", "objects", "arrows", "cells", "xi"}, "kx");
  auto J = two_category(field(j, "index", "kx"), d.base);
  auto host = two_category(field(j, "host", "kx"), d.base);
  if (host != ctx.host_ptr() && !(*host == ctx.host())) throw Error(ErrorCode::InvalidDiagram, "host-mismatch");
  const Json& objs = field(j, "objects", "kx");
  const Json& arrows = field(j, "arrows", "kx");
  const Json& cells = field(j, "cells", "kx");
  static const Json empty = Json::object();
  const Json& xis = j.contains("xi") ? j.at("xi") : empty;
  for (const auto& [k, x] : objs.items()) (void)x, c2_object(*J, k, "objects");
  for (const auto& [k, x] : arrows.items()) (void)x, c2_one(*J, k, "arrows");
  for (const auto& [k, x] : xis.items()) (void)x, c2_one(*J, k, "xi");
  for (const auto& [k, x] : cells.items()) (void)x, c2_two(*J, k, "cells");

  std::vector<ProObjectPtr> X;
  for (int o = 0; o < J->num_objects(); ++o) {
    const Json* e = entry(objs, J->object_name(o));
    if (!e) parse_error("objects", "missing " + J->object_name(o));
    X.push_back(pro_object(*e, d.base));
  }
  const Fin2Cat& C = ctx.host();

  // A premorphism [u, sigma, v] of colim[jj] in hom(A, B), as a class.
  auto premorphism = [&](const ProHom& h, int jj, int src, int tgt, const Json& e, const char* what) {
    if (!e.is_array() || e.size() != 3) parse_error(what, "expected [u, cell, v]");
    const Fin2Cat& I = *h.X->index;
    int u = c2_one(I, str(e[0], what), what);
    int sig = c2_two(C, str(e[1], what), what);
    int w = c2_one(I, str(e[2], what), what);
    int k = I.tgt(u);
    int f = I.tgt(w) == k ? h.homs[jj][k].mor_of_two[sig] : -1;
    int m = f < 0 ? -1 : h.colim[jj].class_of(src, tgt, {u, f, w});
    if (m < 0) throw Error(ErrorCode::InvalidDiagram, what, {e[0].get<std::string>(), e[1].get<std::string>()});
    return m;
  };

  std::vector<int> arrow(J->num_ones(), -1), cell(J->num_twos(), -1);
  for (int a = 0; a < J->num_ones(); ++a) {
    const auto& Y = X[J->src(a)];
    const auto& Xa = X[J->tgt(a)];
    const ProHom& h = ctx.hom(Xa, Y);
    const Json* e = entry(arrows, J->one_name(a));
    if (!e) {
      if (J->id1(J->src(a)) == a) arrow[a] = ctx.identity(Y);
      continue;
    }
    std::vector<int> x;
    for (int i = 0; i < Y->index->num_objects(); ++i) {
      const Json* c = entry(*e, Y->index->object_name(i));
      if (!c || !c->is_array() || c->size() != 2) parse_error("arrows", "expected [r, i] for " + J->one_name(a));
      int r = c2_one(C, str((*c)[0], "arrows"), "arrows");
      int i2 = c2_object(*Xa->index, str((*c)[1], "arrows"), "arrows");
      if (C.src(r) != Xa->ob(i2) || C.tgt(r) != Y->ob(i)) throw Error(ErrorCode::InvalidDiagram, "arrow-boundary", {C.one_name(r)});
      x.push_back(h.ll_object(i, i2, r));
    }
    const Json* xi = entry(xis, J->one_name(a));
    std::vector<int> found;
    for (int o = 0; o < h.cat().num_objects(); ++o) {
      if (h.lim.x[o] != x) continue;
      bool ok = true;
      if (xi) {
        const Fin2Cat& Iy = *Y->index;
        for (const auto& [cn, pe] : xi->items()) {
          int c = c2_one(Iy, cn, "xi");
          int m = premorphism(h, Iy.src(c), h.M.map1[c].ob[x[Iy.tgt(c)]], x[Iy.src(c)], pe, "xi");
          ok = ok && h.lim.xi[o][c] == m;
        }
      }
      if (ok) found.push_back(o);
    }
    if (found.size() != 1)
      throw Error(ErrorCode::InvalidDiagram, found.empty() ? "arrow-missing" : "arrow-ambiguous", {J->one_name(a)});
    arrow[a] = found[0];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [g, f, gf] : J->hcomp1_entries())
      if (arrow[gf] < 0 && arrow[f] >= 0 && arrow[g] >= 0) {
        arrow[gf] = ctx.compose(X[J->tgt(g)], X[J->tgt(f)], X[J->src(f)], arrow[f], arrow[g]);
        changed = true;
      }
  }
  for (int a = 0; a < J->num_ones(); ++a)
    if (arrow[a] < 0) parse_error("arrows", "missing " + J->one_name(a));

  for (int al = 0; al < J->num_twos(); ++al) {
    int a = J->src2(al), b = J->tgt2(al);
    const auto& Y = X[J->src(a)];
    const ProHom& h = ctx.hom(X[J->tgt(a)], Y);
    const Json* e = entry(cells, J->two_name(al));
    if (!e) {
      if (J->id2(a) == al) cell[al] = h.cat().id(arrow[a]);
      continue;
    }
    std::vector<int> ms;
    for (int i = 0; i < Y->index->num_objects(); ++i) {
      const Json* c = entry(*e, Y->index->object_name(i));
      if (!c) parse_error("cells", "missing component " + Y->index->object_name(i));
      ms.push_back(premorphism(h, i, h.lim.x[arrow[a]][i], h.lim.x[arrow[b]][i], *c, "cells"));
    }
    cell[al] = h.lim.find_morphism(arrow[a], arrow[b], ms);
    if (cell[al] < 0) throw Error(ErrorCode::InvalidDiagram, "cell-missing", {J->two_name(al)});
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [b, a, r] : J->vcomp_entries())
      if (cell[r] < 0 && cell[a] >= 0 && cell[b] >= 0) {
        const ProHom& h = ctx.hom(X[J->otgt(a)], X[J->osrc(a)]);
        cell[r] = h.cat().comp(cell[b], cell[a]);
        changed = true;
      }
    for (const auto& [b, a, r] : J->hcomp2_entries())
      if (cell[r] < 0 && cell[a] >= 0 && cell[b] >= 0) {
        cell[r] = ctx.hcompose(X[J->otgt(b)], X[J->otgt(a)], X[J->osrc(a)], cell[a], cell[b]);
        changed = true;
      }
  }
  for (int al = 0; al < J->num_twos(); ++al)
    if (cell[al] < 0) parse_error("cells", "missing " + J->two_name(al));
  return make_kx_diagram(ctx, J, std::move(X), std::move(arrow), std::move(cell));
}

Workspace::Workspace() : impl_(std::make_unique<Impl>()) {}
Workspace::~Workspace() = default;

namespace {
Json file_ref(const std::filesystem::path& p) { return p.filename().string(); }
std::filesystem::path dir_of(const std::filesystem::path& p) {
  return p.has_parent_path() ? p.parent_path() : std::filesystem::path(".");
}
}  // namespace

Fin2CatPtr Workspace::two_category(const std::filesystem::path& p) {
  return impl_->two_category(file_ref(p), dir_of(p));
}
CatFunctor Workspace::catvalued(const std::filesystem::path& p) { return impl_->catvalued(file_ref(p), dir_of(p)); }
TwoFunctor Workspace::functor(const std::filesystem::path& p) { return impl_->functor(file_ref(p), dir_of(p)); }
Workspace::LoadedPseudoNat Workspace::pseudonat(const std::filesystem::path& p) {
  return impl_->pseudonat(file_ref(p), dir_of(p));
}
Workspace::LoadedModification Workspace::modification(const std::filesystem::path& p) {
  return impl_->modification(file_ref(p), dir_of(p));
}
ProObjectPtr Workspace::pro_object(const std::filesystem::path& p) {
  return impl_->pro_object(file_ref(p), dir_of(p));
}
Fin2CatPtr Workspace::host_of(const std::filesystem::path& p) { return impl_->host_of(file_ref(p), dir_of(p)); }
KxDiagram Workspace::kx_diagram(ProContext& ctx, const std::filesystem::path& p) {
  return impl_->kx_diagram(ctx, file_ref(p), dir_of(p));
}

}  // namespace twopro
