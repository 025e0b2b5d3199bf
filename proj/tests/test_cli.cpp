#include <doctest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "support.hpp"
#include "twopro/io.hpp"

using namespace twopro;
using namespace twopro::test;

namespace {

struct Result {
  int code;
  std::string text;
  Json report;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = cli::run(args, out);
  Result r{code, out.str(), {}};
  if (!r.text.empty() && r.text[0] == '{') r.report = Json::parse(r.text);
  return r;
}

std::string f(const std::string& name) { return fixture(name).string(); }

}  // namespace

TEST_CASE("validate every fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(TWOPRO_FIXTURES)) {
    CAPTURE(entry.path().string());
    auto r = run({"validate", entry.path().string()});
    CHECK(r.code == 0);
    CHECK(r.report["verdict"] == "valid");
    CHECK(r.report["format"] == 1);
  }
  auto r = run({"validate", f("host3.2cat.json")});
  CHECK(r.report["kind"] == "2cat");
  CHECK(r.report["counts"]["two_cells"] == 14);
  CHECK(run({"validate", f("poset01_F.diag.json")}).report["kind"] == "catvalued");
  CHECK(run({"validate", f("host3_X.pro.json")}).report["kind"] == "pro_object");
  CHECK(run({"validate", f("kx_poset.kx.json")}).report["kind"] == "kx_diagram");
}

TEST_CASE("report keys are ordered") {
  auto r = run({"validate", f("terminal.2cat.json")});
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.report.items()) keys.push_back(k);
  REQUIRE(keys.size() >= 6);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 6) ==
        std::vector<std::string>{"format", "command", "axiom_checks", "witness_tables", "counts", "universal"});
}

TEST_CASE("validate rejects a corrupted table") {
  Json j = load_json_file(fixture("host3.2cat.json"));
  for (auto& e : j["vcomp"])
    if (e["g"] == "1_q" && e["f"] == "t0_p_q") e["result"] = "t1_p_q";
  auto path = std::filesystem::temp_directory_path() / "twopro_corrupt.2cat.json";
  std::ofstream(path) << j.dump();
  auto r = run({"validate", path.string()});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "invalid");
  const Json& v = r.report["axiom_checks"][0]["violation"];
  CHECK(v["code"] == "AxiomViolation");
  CHECK_FALSE(v["witness"].empty());
  std::filesystem::remove(path);
}

TEST_CASE("filtered") {
  auto r = run({"filtered", f("poset01.2cat.json")});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "2-filtered");
  CHECK(r.report["witness_tables"]["F0"].size() == 4);
  r = run({"filtered", f("discrete2.2cat.json")});
  CHECK(r.code == 1);
  CHECK(r.report["counterexample"]["axiom"] == "F0");
}

TEST_CASE("pcolim and plim") {
  auto r = run({"pcolim", f("poset01_F.diag.json")});
  CHECK(r.code == 0);
  CHECK(r.report["counts"]["objects"] == 3);
  CHECK(r.report["counts"]["homs_singleton"] == true);
  CHECK(r.report["universal"]["terminal"]["objects_bijective"] == true);
  CHECK(r.report["universal"]["discrete2"]["morphisms_bijective"] == true);
  r = run({"plim", f("poset01_F.diag.json")});
  CHECK(r.code == 0);
  CHECK(r.report["counts"]["objects"] == 2);
}

TEST_CASE("prohom") {
  auto r = run({"prohom", f("isopair_X.pro.json"), f("isopair_c1.pro.json")});
  CHECK(r.code == 0);
  CHECK(r.report["counts"]["objects"] == 3);
  CHECK(r.report["counts"]["morphisms"] == 9);
}

TEST_CASE("kx") {
  auto r = run({"kx", "build", f("kx_host3_poset.kx.json")});
  CHECK(r.code == 0);
  CHECK(r.report["counts"]["one_cells"] == 10);
  r = run({"kx", "verify", f("kx_host3_poset.kx.json")});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "2-filtered");
  r = run({"kx", "limit", f("kx_poset.kx.json"), "--vertex", f("isopair_c0.pro.json"), "--vertex",
           f("isopair_X.pro.json")});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "limit");
  CHECK(r.report["universal"].size() == 2);
  r = run({"kx", "limit", f("kx_poset.kx.json")});
  CHECK(r.code == 1);
  r = run({"--max-cells", "3", "kx", "build", f("kx_host3_poset.kx.json")});
  CHECK(r.code == 2);
  CHECK(r.report["error"]["code"] == "EnumerationBudgetExceeded");
  CHECK(r.report["error"]["witness"] ==
        Json::array({"max_cells=3", "objects=4", "one_cells=3", "two_cells=0", "partial"}));
}

TEST_CASE("elevator") {
  auto host = f("host3.2cat.json");
  auto r = run({"elevator", "eval", "--host", host, "--expr", "[t0_p_q | id(e)]"});
  CHECK(r.code == 0);
  CHECK(r.report["value"]["cell"] == "t0_p.e_q.e");
  r = run({"elevator", "equal", "--host", host, "--expr", "[t0_p_q | 1_e]", "--expr", "[t0_p.e_q.e]"});
  CHECK(r.code == 0);
  r = run({"elevator", "equal", "--host", host, "--expr", "[t0_p_q]", "--expr", "[t1_p_q]"});
  CHECK(r.code == 1);
  r = run({"elevator", "eval", "--host", host, "--expr", "[t0_p_q | t0_p_q]"});
  CHECK(r.code == 1);
  CHECK(r.report["error"]["code"] == "BoundaryMismatch");
  r = run({"elevator", "eval", "--host", host, "--expr", "[t0_p_q"});
  CHECK(r.report["error"]["code"] == "SyntaxError");
}

TEST_CASE("universal") {
  auto r = run({"universal", f("host3_X.pro.json"), "--functor", f("host3_incl.catvalued.json")});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "universal");
  r = run({"universal", f("host3_X.pro.json"), "--functor", f("z2_incl.catvalued.json")});
  CHECK(r.code == 1);
  CHECK(r.report["error"]["code"] == "InvalidDiagram");
}

TEST_CASE("usage and budget errors") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(r.report["error"]["code"] == "ParseError");
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.text.find("validate") != std::string::npos);
  r = run({"validate", f("missing.json")});
  CHECK(r.code == 1);
  CHECK(r.report["error"]["code"] == "IoError");
  r = run({"--max-candidates", "3", "pcolim", f("poset01_F.diag.json")});
  CHECK(r.code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::vector<std::string>> cmds = {
      {"validate", f("host3.2cat.json")},
      {"pcolim", f("poset01_F.diag.json")},
      {"prohom", f("host3_Y.pro.json"), f("host3_X.pro.json")},
      {"kx", "build", f("kx_host3_poset.kx.json")},
  };
  for (const auto& c : cmds) CHECK(run(c).text == run(c).text);
}
