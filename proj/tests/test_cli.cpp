#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GJS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(GJS_DATA_DIR) + "/" + name; }

std::string temp_graph(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("gjs_test_" + name + ".graph");
  std::ofstream(path) << text;
  return path.string();
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("trace") {
  auto r = run("--json trace " + data("a2.graph") + " --loop v,w,v");
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["tau"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["rows"][0]["t_phi"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

  auto all = run("--json trace " + data("a2.graph") + " --all-loops --max-len 4");
  REQUIRE(all.code == 0);
  bool saw_one = false;
  const auto rows = json_of(all)["rows"];
  for (const auto& row : rows) saw_one = saw_one || std::abs(row["tau"].get<double>() - 1.0) < 1e-12;
  CHECK(saw_one);
  CHECK(run("trace " + data("a2.graph") + " --loop v,w,v").out.find("0.5") != std::string::npos);
}

TEST_CASE("moments, cumulants and freeness") {
  auto m = run("--json moments " + data("a3.graph") + " --paths 'v1,w,v1;v1,w,v1'");
  REQUIRE(m.code == 0);
  CHECK(json_of(m)["pass"].get<bool>());

  auto k = run("--json cumulants " + data("a3.graph") + " --paths 'v1,w,v2;v2,w,v1'");
  REQUIRE(k.code == 0);
  CHECK(json_of(k)["closed_form"]["v1"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

  auto f = run("--json freeness " + data("two_odd_line.graph") + " --order 4");
  REQUIRE(f.code == 0);
  CHECK(json_of(f)["pass"].get<bool>());
}

TEST_CASE("factor reports") {
  auto a2 = json_of(run("--json factor " + data("a2.graph")));
  CHECK(a2["verdict"] == "M2(L(Z))");
  CHECK(a2["factor"] == false);
  auto two = json_of(run("--json factor " + data("two_vertex_q2.graph")));
  CHECK(two["factor"] == true);
  CHECK(two["diffuse"][0]["parameter"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));
  auto k14 = run("factor " + data("k1_4.graph"));
  CHECK(k14.code == 0);
  CHECK(k14.out.find("LF(3)") != std::string::npos);
  // Weights from the command line override the file.
  auto w = json_of(run("--json --weights 0.8,0.2 factor " + data("two_vertex_q2.graph")));
  REQUIRE(w["atoms"].size() == 1);
  CHECK(w["atoms"][0]["trace"].get<double>() == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("gram and verify") {
  auto g = run("--json gram " + data("a3.graph"));
  REQUIRE(g.code == 0);
  CHECK(json_of(g)["pass"].get<bool>());
  auto v = run("--json verify --suite combinatorics");
  REQUIRE(v.code == 0);
  CHECK(json_of(v)["failed"].get<int>() == 0);
}

TEST_CASE("verification failures exit with 1") {
  CHECK(run("--tol 1e-20 trace " + data("a3.graph") + " --all-loops --max-len 6").code == 1);
  CHECK(run("--tol 1e-20 cumulants " + data("a3.graph") + " --paths 'v1,w,v2;v2,w,v1'").code == 1);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("trace " + data("missing.graph") + " --loop v,w,v").code == 2);
  CHECK(run("trace " + data("a2.graph") + " --loop v,v").code == 2);
  CHECK(run("--pf --weights 1,2 factor " + data("a2.graph")).code == 2);
  CHECK(run("verify --suite nosuch").code == 2);
  auto unknown = temp_graph("unknown", R"({"vertices": [{"id": "v", "parity": "even", "colour": 1},
    {"id": "w", "parity": "odd"}], "edges": [{"u": "v", "v": "w"}]})");
  CHECK(run("factor " + unknown).code == 2);
  auto top = temp_graph("top", R"({"vertices": [{"id": "v", "parity": "even"}, {"id": "w", "parity": "odd"}],
    "edges": [{"u": "v", "v": "w"}], "name": "x"})");
  CHECK(run("factor " + top).code == 2);
  auto same = temp_graph("same", R"({"vertices": [{"id": "v", "parity": "even"}, {"id": "w", "parity": "even"}],
    "edges": [{"u": "v", "v": "w"}]})");
  CHECK(run("factor " + same).code == 2);
  auto broken = temp_graph("broken", "{ not json");
  CHECK(run("factor " + broken).code == 2);
}

TEST_CASE("missing weights mean the eigenvector weighting") {
  auto ok = temp_graph("pf", R"({"vertices": [{"id": "v", "parity": "even"}, {"id": "w", "parity": "odd"},
    {"id": "u", "parity": "even"}], "edges": [{"u": "v", "v": "w", "mult": 1}, {"u": "w", "v": "u"}]})");
  auto r = run("--json factor " + ok);
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["verdict"].get<std::string>().rfind("LF(1.14213562", 0) == 0);
}
