#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "twopro/elevator.hpp"
#include "twopro/io.hpp"
#include "twopro/workspace.hpp"

namespace twopro::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::uint64_t max_candidates = Budget::kDefault;
  std::uint64_t max_cells = kDefaultMaxCells;
};

Json new_report(const std::string& command) {
  Json r;
  r["format"] = 1;
  r["command"] = command;
  r["axiom_checks"] = Json::array();
  r["witness_tables"] = Json::object();
  r["counts"] = Json::object();
  r["universal"] = Json::object();
  return r;
}

Json violation_json(const Violation& v) {
  return {{"code", error_code_name(v.code)}, {"law", v.law}, {"witness", v.witness}};
}

void add_check(Json& r, const std::string& law, const std::optional<Violation>& v) {
  Json c = {{"law", law}, {"ok", !v}};
  if (v) c["violation"] = violation_json(*v);
  r["axiom_checks"].push_back(std::move(c));
}

bool all_checks_ok(const Json& r) {
  return std::all_of(r["axiom_checks"].begin(), r["axiom_checks"].end(),
                     [](const Json& c) { return c["ok"].get<bool>(); });
}

Json census(const FinCat& c) {
  Json homs = Json::object();
  bool singleton = true;
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      auto n = c.hom(a, b).size();
      if (n) homs[c.object_name(a) + " -> " + c.object_name(b)] = n;
      if (n > 1) singleton = false;
    }
  return {{"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}, {"hom_sizes", homs},
          {"homs_singleton", singleton}};
}

Json universal_json(const UniversalReport& u) {
  Json j = {{"well_defined", u.well_defined},
            {"objects_bijective", u.objects_bijective},
            {"morphisms_bijective", u.morphisms_bijective},
            {"source", {{"objects", u.source_objects}, {"morphisms", u.source_morphisms}}},
            {"target", {{"objects", u.target_objects}, {"morphisms", u.target_morphisms}}}};
  if (!u.witness.empty()) j["witness"] = u.witness;
  return j;
}

std::vector<std::pair<std::string, FinCat>> test_vertices() {
  return {{"terminal", terminal_cat()}, {"discrete2", discrete_cat({"a", "b"})}};
}

Json filter_tables(const Fin2Cat& c, const FilterResult& f) {
  Json t;
  t["F0"] = Json::array();
  for (const auto& [k, w] : f.witness.f0)
    t["F0"].push_back({{"objects", {c.object_name(k.first), c.object_name(k.second)}},
                       {"e", c.object_name(w.e)},
                       {"u", c.one_name(w.u)},
                       {"v", c.one_name(w.v)}});
  t["F1"] = Json::array();
  for (const auto& [k, w] : f.witness.f1)
    t["F1"].push_back({{"one_cells", {c.one_name(k.first), c.one_name(k.second)}},
                       {"h", c.one_name(w.h)},
                       {"alpha", c.two_name(w.alpha)}});
  t["F2"] = Json::array();
  for (const auto& [k, h] : f.witness.f2)
    t["F2"].push_back({{"two_cells", {c.two_name(k.first), c.two_name(k.second)}}, {"h", c.one_name(h)}});
  return t;
}

int cmd_validate(const fs::path& path, Json& r) {
  Json j = load_json_file(path);
  Workspace ws;
  std::string kind;
  if (j.contains("one_cells")) {
    kind = "2cat";
    Fin2Cat c = parse_two_category(j);
    auto v = check_two_category(c);
    add_check(r, "two-category", v);
    r["counts"] = {{"objects", c.num_objects()}, {"one_cells", c.num_ones()}, {"two_cells", c.num_twos()}};
  } else if (j.contains("fibers")) {
    kind = "catvalued";
    CatFunctor F = ws.catvalued(path);
    add_check(r, "cat-valued-functor", std::nullopt);
    r["counts"] = {{"objects", F.source->num_objects()}, {"fibers", F.fiber.size()}};
  } else if (j.contains("map_obj")) {
    kind = "functor";
    ws.functor(path);
    add_check(r, "two-functor", std::nullopt);
  } else if (j.contains("coherences")) {
    kind = "pseudonat";
    auto t = ws.pseudonat(path);
    add_check(r, "pseudonat", std::nullopt);
    r["strict"] = is_strict(t.F, t.G, t.theta);
  } else if (j.contains("eta")) {
    kind = "modification";
    ws.modification(path);
    add_check(r, "modification", std::nullopt);
  } else if (j.contains("diagram")) {
    kind = "pro_object";
    auto X = ws.pro_object(path);
    add_check(r, "pro-object", std::nullopt);
    r["counts"] = {{"objects", X->index->num_objects()}, {"one_cells", X->index->num_ones()},
                   {"two_cells", X->index->num_twos()}};
  } else if (j.contains("arrows")) {
    kind = "kx_diagram";
    ProContext ctx(ws.host_of(path));
    KxDiagram d = ws.kx_diagram(ctx, path);
    add_check(r, "kx-diagram", std::nullopt);
    r["counts"] = {{"objects", d.index->num_objects()}};
  } else {
    throw Error(ErrorCode::ParseError, "kind", {path.string()});
  }
  r["kind"] = kind;
  bool ok = all_checks_ok(r);
  r["verdict"] = ok ? "valid" : "invalid";
  return ok ? 0 : 1;
}

int cmd_filtered(const fs::path& path, Json& r) {
  Workspace ws;
  auto c = ws.two_category(path);
  FilterResult f = check_two_filtered(*c);
  r["verdict"] = f.ok ? "2-filtered" : "not 2-filtered";
  r["witness_tables"] = filter_tables(*c, f);
  if (!f.ok) r["counterexample"] = {{"axiom", f.axiom}, {"cells", f.counterexample}};
  return f.ok ? 0 : 1;
}

int cmd_pcolim(const fs::path& path, const Options& o, Json& r) {
  Workspace ws;
  CatFunctor F = ws.catvalued(path);
  Budget budget(o.max_candidates);
  PseudoColimit L = pseudocolim_ll(F, budget);
  const Fin2Cat& I = *F.source;
  r["counts"] = census(L.cat);
  r["counts"]["premorphisms"] = L.premorphisms;
  Json objs = Json::array(), mors = Json::array();
  for (int x = 0; x < L.cat.num_objects(); ++x) objs.push_back(L.cat.object_name(x));
  for (int m = 0; m < L.cat.num_morphisms(); ++m) {
    const Premorphism& p = L.rep[m];
    int k = I.tgt(p.u);
    mors.push_back({{"name", L.cat.morphism_name(m)},
                    {"src", L.cat.object_name(L.cat.dom(m))},
                    {"tgt", L.cat.object_name(L.cat.cod(m))},
                    {"representative", {I.one_name(p.u), F.fiber[k].morphism_name(p.f), I.one_name(p.v)}},
                    {"class_size", L.members[m].size()}});
  }
  r["witness_tables"] = {{"objects", objs}, {"morphisms", mors}};
  add_check(r, "homotopy-closure",
            L.closure_ok ? std::nullopt
                         : std::optional<Violation>(Violation{ErrorCode::AxiomViolation, "homotopy-closure", {}}));
  add_check(r, "composition-choices", check_ll_composition_choices(F, L));
  add_check(r, "lambda-pseudocone", check_pseudocone(F, L.cat, L.lambda));
  bool uni = true;
  for (const auto& [name, A] : test_vertices()) {
    UniversalReport u = universal_check_colim(F, L.cat, L.lambda, A, budget);
    r["universal"][name] = universal_json(u);
    uni = uni && u.ok();
  }
  bool ok = all_checks_ok(r) && uni;
  r["verdict"] = ok ? "pseudocolimit" : "failed";
  return ok ? 0 : 1;
}

int cmd_plim(const fs::path& path, const Options& o, Json& r) {
  Workspace ws;
  CatFunctor H = ws.catvalued(path);
  Budget budget(o.max_candidates);
  PseudoLimit L = pseudolim_cat(H, budget);
  const Fin2Cat& c = *H.source;
  r["counts"] = census(L.cat);
  Json objs = Json::array();
  for (int x = 0; x < L.cat.num_objects(); ++x) {
    Json comps = Json::object(), xis = Json::object();
    for (int i = 0; i < c.num_objects(); ++i) comps[c.object_name(i)] = H.fiber[i].object_name(L.x[x][i]);
    for (int u = 0; u < c.num_ones(); ++u) xis[c.one_name(u)] = H.fiber[c.tgt(u)].morphism_name(L.xi[x][u]);
    objs.push_back({{"name", L.cat.object_name(x)}, {"x", comps}, {"xi", xis}});
  }
  r["witness_tables"] = {{"objects", objs}};
  CatFunctor K = constant_cat_functor(H.source, L.cat);
  add_check(r, "cone", check_pseudonat(K, H, L.cone));
  bool uni = true;
  for (const auto& [name, A] : test_vertices()) {
    UniversalReport u = universal_check_lim(H, L.cat, L.cone, A, budget);
    r["universal"][name] = universal_json(u);
    uni = uni && u.ok();
  }
  bool ok = all_checks_ok(r) && uni;
  r["verdict"] = ok ? "pseudolimit" : "failed";
  return ok ? 0 : 1;
}

Json prohom_tables(const ProHom& h, const Fin2Cat& C) {
  const Fin2Cat& J = *h.Y->index;
  const Fin2Cat& I = *h.X->index;
  Json objs = Json::array(), mors = Json::array();
  for (int x = 0; x < h.cat().num_objects(); ++x) {
    Json comps = Json::object();
    for (int j = 0; j < J.num_objects(); ++j) {
      auto [i, r] = h.ll_parts(j, h.lim.x[x][j]);
      comps[J.object_name(j)] = {C.one_name(r), I.object_name(i)};
    }
    objs.push_back({{"name", h.cat().object_name(x)}, {"components", comps}});
  }
  for (int m = 0; m < h.cat().num_morphisms(); ++m) {
    Json comps = Json::object();
    for (int j = 0; j < J.num_objects(); ++j) {
      const Premorphism& p = h.colim[j].rep[h.lim.m[m][j]];
      comps[J.object_name(j)] = {I.one_name(p.u), C.two_name(h.two_cell(j, I.tgt(p.u), p.f)), I.one_name(p.v)};
    }
    mors.push_back({{"name", h.cat().morphism_name(m)},
                    {"src", h.cat().object_name(h.cat().dom(m))},
                    {"tgt", h.cat().object_name(h.cat().cod(m))},
                    {"components", comps}});
  }
  return {{"objects", objs}, {"morphisms", mors}};
}

int cmd_prohom(const fs::path& x, const fs::path& y, const Options& o, Json& r) {
  Workspace ws;
  auto X = ws.pro_object(x);
  auto Y = ws.pro_object(y);
  ProContext ctx(X->host, o.max_candidates);
  const ProHom& h = ctx.hom(X, Y);
  r["counts"] = census(h.cat());
  r["witness_tables"] = prohom_tables(h, ctx.host());
  r["verdict"] = "computed";
  return 0;
}

int cmd_kx(const std::string& action, const fs::path& path, const std::vector<std::string>& vertices,
           const Options& o, Json& r) {
  Workspace ws;
  ProContext ctx(ws.host_of(path), o.max_candidates);
  KxDiagram d = ws.kx_diagram(ctx, path);
  KxCategory k = kx_build(ctx, d, o.max_cells);
  const Fin2Cat& K = *k.cat;
  const Fin2Cat& C = ctx.host();
  const Fin2Cat& J = *d.index;
  r["counts"] = {{"objects", K.num_objects()}, {"one_cells", K.num_ones()}, {"two_cells", K.num_twos()}};
  if (action == "build") {
    Json ones = Json::array(), twos = Json::array();
    for (int e = 0; e < K.num_ones(); ++e) {
      const KxOne& c = k.ones[e];
      ones.push_back({{"name", K.one_name(e)},
                      {"src", K.object_name(K.src(e))},
                      {"tgt", K.object_name(K.tgt(e))},
                      {"a", J.one_name(c.a)},
                      {"r", C.one_name(c.r)}});
    }
    for (int t = 0; t < K.num_twos(); ++t)
      twos.push_back({{"name", K.two_name(t)},
                      {"src", K.one_name(K.src2(t))},
                      {"tgt", K.one_name(K.tgt2(t))},
                      {"alpha", J.two_name(k.twos[t].alpha)},
                      {"theta", C.two_name(k.twos[t].theta)}});
    r["witness_tables"] = {{"one_cells", ones}, {"two_cells", twos}};
    add_check(r, "two-category", check_two_category(K));
    r["verdict"] = "built";
    return all_checks_ok(r) ? 0 : 1;
  }
  if (action == "verify") {
    add_check(r, "two-category", check_two_category(K));
    FilterResult f = kx_filtered_verify(k);
    r["witness_tables"] = filter_tables(K, f);
    add_check(r, "2-filtered",
              f.ok ? std::nullopt
                   : std::optional<Violation>(Violation{ErrorCode::NotTwoFiltered, f.axiom, f.counterexample}));
    bool ok = all_checks_ok(r);
    r["verdict"] = ok ? "2-filtered" : "not 2-filtered";
    return ok ? 0 : 1;
  }
  if (vertices.empty()) throw Error(ErrorCode::ParseError, "kx-limit", {"--vertex required"});
  auto Xt = tilde_x(ctx, k, d);
  bool ok = true;
  for (const auto& v : vertices) {
    auto Z = ws.pro_object(v);
    UniversalReport u = pro_limit_check(ctx, d, k, Xt, Z);
    r["universal"][fs::path(v).filename().string()] = universal_json(u);
    ok = ok && u.ok();
  }
  r["verdict"] = ok ? "limit" : "not a limit";
  return ok ? 0 : 1;
}

std::string read_expr(const std::string& e) {
  std::error_code ec;
  if (fs::is_regular_file(e, ec)) {
    std::ifstream in(e);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return e;
}

int cmd_elevator(const std::string& action, const fs::path& host, const std::vector<std::string>& exprs, Json& r) {
  Workspace ws;
  auto c = ws.two_category(host);
  auto need = action == "equal" ? 2u : 1u;
  if (exprs.size() != need) throw Error(ErrorCode::ParseError, "elevator", {"expected " + std::to_string(need) + " --expr"});
  std::vector<ElevatorExpr> es;
  for (const auto& e : exprs) es.push_back(parse_elevator(read_expr(e), *c));
  auto cell = [&](int a) {
    return Json{{"cell", c->two_name(a)}, {"src", c->one_name(c->src2(a))}, {"tgt", c->one_name(c->tgt2(a))}};
  };
  if (action == "eval") {
    r["value"] = cell(eval_elevator(es[0], *c));
    r["verdict"] = "evaluated";
    return 0;
  }
  if (action == "normalize") {
    ElevatorExpr n = normalize_elevator(es[0], *c);
    r["normal_form"] = render_elevator(n, *c);
    r["value"] = cell(eval_elevator(n, *c));
    r["verdict"] = "normalized";
    return 0;
  }
  ElevatorEquality eq = equal_elevator(es[0], es[1], *c);
  r["lhs"] = cell(eq.lhs);
  r["rhs"] = cell(eq.rhs);
  r["normal_forms"] = {eq.lhs_normal, eq.rhs_normal};
  r["verdict"] = eq.equal ? "equal" : "unequal";
  return eq.equal ? 0 : 1;
}

int cmd_universal(const fs::path& x, const std::string& functor, const std::string& theta, const Options& o,
                  Json& r) {
  Workspace ws;
  auto X = ws.pro_object(x);
  Budget budget(o.max_candidates);
  CatFunctor F;
  std::optional<Workspace::LoadedPseudoNat> t;
  if (!theta.empty()) {
    t = ws.pseudonat(theta);
    F = t->F;
  } else if (!functor.empty()) {
    F = ws.catvalued(functor);
  } else {
    throw Error(ErrorCode::ParseError, "universal", {"--functor or --theta required"});
  }
  if (F.source != X->host && !(*F.source == *X->host)) throw Error(ErrorCode::InvalidDiagram, "host-mismatch");
  HatExtension h = hat_extension(F, *X, budget);
  r["counts"] = census(h.lim.cat);
  CatFunctor K = constant_cat_functor(h.H.source, h.lim.cat);
  add_check(r, "cone", check_pseudonat(K, h.H, h.lim.cone));
  bool ok = true;
  for (const auto& [name, A] : test_vertices()) {
    UniversalReport u = universal_check_lim(h.H, h.lim.cat, h.lim.cone, A, budget);
    r["universal"][name] = universal_json(u);
    ok = ok && u.ok();
  }
  if (t) {
    HatExtension g = hat_extension(t->G, *X, budget);
    ExtensionReport e = universality_faithfulness_check(t->F, t->G, t->theta, *X, g.lim.cat, g.lim.cone, budget);
    r["universal"]["extensions"] = e.extensions;
    ok = ok && e.unique();
  }
  ok = ok && all_checks_ok(r);
  r["verdict"] = ok ? "universal" : "failed";
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Finite 2-categories, pseudo-colimits and 2-pro-objects", "twopro"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-candidates", o.max_candidates, "enumeration budget");
  app.add_option("--max-cells", o.max_cells, "K_X cell budget");

  std::string name;
  std::function<int(Json&)> action;
  std::string p1, p2, sub, host, functor, theta;
  std::vector<std::string> vertices, exprs;

  auto* validate = app.add_subcommand("validate", "validate any input file");
  validate->add_option("path", p1)->required();
  validate->callback([&] { action = [&](Json& r) { return cmd_validate(p1, r); }; });

  auto* filtered = app.add_subcommand("filtered", "decide 2-filteredness");
  filtered->add_option("path", p1)->required();
  filtered->callback([&] { action = [&](Json& r) { return cmd_filtered(p1, r); }; });

  auto* pcolim = app.add_subcommand("pcolim", "pseudo-colimit of a Cat-valued diagram");
  pcolim->add_option("diagram", p1)->required();
  pcolim->callback([&] { action = [&](Json& r) { return cmd_pcolim(p1, o, r); }; });

  auto* plim = app.add_subcommand("plim", "pseudo-limit of a Cat-valued diagram");
  plim->add_option("diagram", p1)->required();
  plim->callback([&] { action = [&](Json& r) { return cmd_plim(p1, o, r); }; });

  auto* prohom = app.add_subcommand("prohom", "hom category between 2-pro-objects");
  prohom->add_option("X", p1)->required();
  prohom->add_option("Y", p2)->required();
  prohom->callback([&] { action = [&](Json& r) { return cmd_prohom(p1, p2, o, r); }; });

  auto* kx = app.add_subcommand("kx", "K_X construction");
  kx->add_option("action", sub)->required()->check(CLI::IsMember({"build", "verify", "limit"}));
  kx->add_option("diagram", p1)->required();
  kx->add_option("--vertex", vertices, "test vertex pro_object files");
  kx->callback([&] { action = [&](Json& r) { return cmd_kx(sub, p1, vertices, o, r); }; });

  auto* elev = app.add_subcommand("elevator", "2-cell pasting expressions");
  elev->add_option("action", sub)->required()->check(CLI::IsMember({"eval", "normalize", "equal"}));
  elev->add_option("--host", host)->required();
  elev->add_option("--expr", exprs, "expression text or file")->required()->allow_extra_args(false);
  elev->callback([&] { action = [&](Json& r) { return cmd_elevator(sub, host, exprs, r); }; });

  auto* uni = app.add_subcommand("universal", "extension of a Cat-valued functor to 2-pro-objects");
  uni->add_option("X", p1)->required();
  uni->add_option("--functor", functor, "catvalued file");
  uni->add_option("--theta", theta, "pseudonat file; checks unique extension");
  uni->callback([&] { action = [&](Json& r) { return cmd_universal(p1, functor, theta, o, r); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Json r = new_report("");
    r["error"] = {{"code", "ParseError"}, {"law", "usage"}, {"witness", {e.what()}}};
    out << r.dump(2) << "\n";
    return 1;
  }

  Json r = new_report(app.get_subcommands().front()->get_name());
  int code;
  try {
    code = action(r);
  } catch (const Error& e) {
    r["error"] = violation_json(e.violation());
    code = e.code() == ErrorCode::EnumerationBudgetExceeded ? 2 : 1;
  } catch (const fs::filesystem_error& e) {
    r["error"] = {{"code", "IoError"}, {"law", "filesystem"}, {"witness", {e.what()}}};
    code = 1;
  }
  out << r.dump(2) << "\n";
  return code;
}

}  // namespace twopro::cli
