#include <doctest.h>

#include <functional>
#include <random>

#include "support.hpp"
#include "twopro/elevator.hpp"

using namespace twopro;
using namespace twopro::test;

namespace {

const std::vector<std::string> kHosts = {"poset01.2cat.json", "chain012.2cat.json", "cospan.2cat.json",
                                         "isopair.2cat.json", "host3.2cat.json",    "interval.2cat.json",
                                         "z2.2cat.json"};

std::string id(const Fin2Cat& c, int f) { return "id(" + c.one_name(f) + ")"; }

int eval(const std::string& s, const Fin2Cat& c) { return eval_elevator(parse_elevator(s, c), c); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::ParseError;
}

// Horizontally composable (beta, alpha) pairs drawn uniformly with a fixed seed.
std::vector<std::tuple<Fin2CatPtr, int, int>> random_pairs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::tuple<Fin2CatPtr, int, int>> pool;
  for (const auto& h : kHosts) {
    auto c = cat2(h);
    for (int a = 0; a < c->num_twos(); ++a)
      for (int b = 0; b < c->num_twos(); ++b)
        if (c->osrc(b) == c->otgt(a)) pool.emplace_back(c, b, a);
  }
  std::vector<std::tuple<Fin2CatPtr, int, int>> out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t k = 0; k < n; ++k) out.push_back(pool[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("parse and render") {
  auto c = cat2("host3.2cat.json");
  auto e = parse_elevator("[t0_p_q | id(e)] ; [1_q|1_e]", *c);
  REQUIRE(e.rows.size() == 2);
  CHECK(e.rows[0].size() == 2);
  CHECK(e.rows[0][1].identity);
  CHECK_FALSE(e.rows[1][1].identity);
  CHECK(render_elevator(e, *c) == "[t0_p_q | id(e)] ; [1_q | 1_e]");
  CHECK(parse_elevator(render_elevator(e, *c), *c) == e);
  CHECK(eval_elevator(e, *c) == c->hcomp2(*c->find_two("t0_p_q"), c->id2(*c->find_one("e"))));
  auto iso = cat2("isopair.2cat.json");
  auto u = iso->find_one("u");
  REQUIRE(u);
  CHECK(eval("[id(u)]", *iso) == iso->id2(*u));
}

TEST_CASE("interchange on seeded random pairs") {
  std::size_t n = 0;
  for (const auto& [c, b, a] : random_pairs(100, 20261015)) {
    const Fin2Cat& C = *c;
    CAPTURE(C.two_name(b));
    CAPTURE(C.two_name(a));
    int whole = eval("[" + C.two_name(b) + " | " + C.two_name(a) + "]", C);
    int down = eval("[" + C.two_name(b) + " | " + id(C, C.src2(a)) + "] ; [" + id(C, C.tgt2(b)) + " | " +
                        C.two_name(a) + "]",
                    C);
    int up = eval("[" + id(C, C.src2(b)) + " | " + C.two_name(a) + "] ; [" + C.two_name(b) + " | " +
                      id(C, C.tgt2(a)) + "]",
                  C);
    CHECK(whole == C.hcomp2(b, a));
    CHECK(down == whole);
    CHECK(up == whole);
    // the four-cell form with identity second factors
    int lhs = C.hcomp2(C.vcomp(C.id2(C.tgt2(b)), b), C.vcomp(C.id2(C.tgt2(a)), a));
    int rhs = C.vcomp(C.hcomp2(C.id2(C.tgt2(b)), C.id2(C.tgt2(a))), C.hcomp2(b, a));
    CHECK(lhs == rhs);
    ++n;
  }
  CHECK(n == 100);
}

TEST_CASE("interchange with vertical composites") {
  for (const auto& h : kHosts) {
    auto c = cat2(h);
    const Fin2Cat& C = *c;
    for (const auto& [b, a, ba] : C.vcomp_entries())
      for (const auto& [b2, a2, ba2] : C.vcomp_entries()) {
        if (C.osrc(a2) != C.otgt(a)) continue;
        std::string rows = "[" + C.two_name(a2) + " | " + C.two_name(a) + "] ; [" + C.two_name(b2) + " | " +
                           C.two_name(b) + "]";
        CHECK(eval(rows, C) == C.hcomp2(ba2, ba));
      }
  }
}

TEST_CASE("normalize preserves value and is idempotent") {
  std::size_t n = 0;
  for (const auto& [c, b, a] : random_pairs(100, 7)) {
    const Fin2Cat& C = *c;
    std::vector<std::string> exprs = {
        "[" + C.two_name(b) + " | " + C.two_name(a) + "]",
        "[" + id(C, C.src2(b)) + " | " + C.two_name(a) + "] ; [" + C.two_name(b) + " | " + id(C, C.tgt2(a)) + "]",
        "[" + C.two_name(b) + " | " + id(C, C.src2(a)) + "] ; [" + id(C, C.tgt2(b)) + " | " + C.two_name(a) + "]",
        "[" + id(C, C.src2(b)) + " | " + id(C, C.src2(a)) + "]"};
    for (const auto& s : exprs) {
      auto e = parse_elevator(s, C);
      auto n1 = normalize_elevator(e, C);
      CHECK(eval_elevator(n1, C) == eval_elevator(e, C));
      CHECK(normalize_elevator(n1, C) == n1);
      for (const auto& row : n1.rows) {
        int live = 0;
        for (const auto& col : row) live += col.identity ? 0 : 1;
        CHECK(live <= 1);
      }
      ++n;
    }
    // the two slid forms share a normal form
    CHECK(normalize_elevator(parse_elevator(exprs[1], C), C) == normalize_elevator(parse_elevator(exprs[2], C), C));
  }
  CHECK(n == 400);
}

TEST_CASE("rendered transformation laws hold") {
  Budget budget;
  std::size_t pn1 = 0, pn2 = 0, pc1 = 0, pcm = 0;
  auto check_laws = [](const std::vector<ElevatorEquation>& laws, const Fin2Cat& D, std::size_t& n1,
                       std::size_t& n2) {
    for (const auto& law : laws) {
      CAPTURE(law.lhs);
      CAPTURE(law.rhs);
      auto r = equal_elevator(parse_elevator(law.lhs, D), parse_elevator(law.rhs, D), D);
      CHECK(r.equal);
      if (law.law == "PN1" || law.law == "M") ++n1;
      if (law.law == "PN2") ++n2;
    }
  };
  for (const auto& h : {"host3.2cat.json", "isopair.2cat.json", "z2.2cat.json", "interval.2cat.json"}) {
    auto C = cat2(h);
    auto F = identity_two_functor(C);
    auto ts = enumerate_pseudonats2(F, F, Mode::Pseudo, budget);
    REQUIRE_FALSE(ts.empty());
    std::size_t dummy = 0;
    for (const auto& t : ts) {
      REQUIRE_FALSE(check_pseudonat2(F, F, t));
      check_laws(render_pseudonat_laws(F, F, t), *C, pn1, pn2);
    }
    for (std::size_t x = 0; x < ts.size() && x < 4; ++x)
      for (std::size_t y = 0; y < ts.size() && y < 4; ++y)
        for (const auto& m : enumerate_modifications2(F, F, ts[x], ts[y], budget))
          check_laws(render_modification_laws(F, F, ts[x], ts[y], m), *C, pcm, dummy);
  }
  // cocones: transformations into a constant 2-functor
  for (const char* f : {"host3_X.pro.json", "host3_Y.pro.json", "isopair_X.pro.json"}) {
    auto X = pro(f);
    const TwoFunctor& F = X->diagram;
    for (int d = 0; d < X->host->num_objects(); ++d) {
      auto G = constant_two_functor(X->index_op, X->host, d);
      auto ls = enumerate_pseudonats2(F, G, Mode::Pseudo, budget);
      std::size_t dummy = 0;
      for (const auto& l : ls) {
        check_laws(render_pseudonat_laws(F, G, l), *X->host, pc1, dummy);
        for (const auto& m : enumerate_modifications2(F, G, l, l, budget))
          check_laws(render_modification_laws(F, G, l, l, m), *X->host, pcm, dummy);
      }
    }
  }
  CHECK(pn1 > 0);
  CHECK(pn2 > 0);
  CHECK(pc1 > 0);
  CHECK(pcm > 0);
}

TEST_CASE("elevator errors") {
  auto c = cat2("host3.2cat.json");
  const Fin2Cat& C = *c;
  CHECK(code_of([&] { parse_elevator("[t0_p_q", C); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_elevator("t0_p_q]", C); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_elevator("[t0_p_q] ;", C); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_elevator("[nope]", C); }) == ErrorCode::UnknownCell);
  CHECK(code_of([&] { parse_elevator("[id(nope)]", C); }) == ErrorCode::UnknownCell);
  CHECK(code_of([&] { parse_elevator("[t0_p_q | t0_p_q]", C); }) == ErrorCode::BoundaryMismatch);
  CHECK(code_of([&] { parse_elevator("[1_p] ; [1_q]", C); }) == ErrorCode::BoundaryMismatch);
  CHECK(code_of([&] { equal_elevator(parse_elevator("[1_p]", C), parse_elevator("[1_q]", C), C); }) ==
        ErrorCode::BoundaryMismatch);
  try {
    parse_elevator("[t0_p_q]\n; [", C);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    REQUIRE(e.violation().witness.size() == 2);
    CHECK(e.violation().witness[0] == "2");
    CHECK(e.violation().witness[1] == "4");
  }
  try {
    parse_elevator("[t0_p_q]\n; [x]", C);
    FAIL("expected UnknownCell");
  } catch (const Error& e) {
    CHECK(e.violation().witness == std::vector<std::string>{"x", "2", "4"});
  }
  auto r = equal_elevator(parse_elevator("[t0_p_q]", C), parse_elevator("[t1_p_q]", C), C);
  CHECK_FALSE(r.equal);
  CHECK(r.lhs_normal == "[t0_p_q]");
}
