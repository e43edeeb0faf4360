/*
   Copyright 2026 The u2split Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

const std::string kData = U2SPLIT_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "u2split");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = u2split::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("u2split_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("invariants") {
  SUBCASE("gl-mode file gives jordan numbers only") {
    Run r = cli({"invariants", data("jordan3_gl_f5.json")});
    REQUIRE(r.code == 0);
    const json j = r.j();
    CHECK(j["jordan"].size() == 1);
    CHECK(j["jordan"][0]["r"] == 3);
    CHECK(j["quad"].empty());
    CHECK(j["herm"].empty());
    CHECK_FALSE(j.contains("eps"));
  }
  SUBCASE("identity isopair: one cell type, its quadratic invariant is b") {
    Run r = cli({"invariants", data("identity_orth_f5.json")});
    REQUIRE(r.code == 0);
    const json j = r.j();
    REQUIRE(j["jordan"].size() == 1);
    CHECK(j["jordan"][0]["n"] == 2);
    REQUIRE(j["quad"].size() == 1);
    CHECK(j["quad"][0]["square_classes"] == json::array({1, 2}));
    CHECK(j["herm"].empty());
  }
  SUBCASE("twisted fixture has two rank-1 quadratic invariants") {
    Run r = cli({"invariants", data("twisted_k1_f3.json")});
    REQUIRE(r.code == 0);
    const json q = r.j()["quad"];
    REQUIRE(q.size() == 2);
    for (const auto& e : q) CHECK(e["gram"].size() == 1);
    CHECK(q[0]["r"] == 1);
    CHECK(q[1]["r"] == 3);
  }
  SUBCASE("text mode prints square-class tuples") {
    Run r = cli({"invariants", data("identity_orth_f5.json"), "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1, 2)") != std::string::npos);
  }
}

TEST_CASE("decide") {
  Run minus = cli({"decide", data("minus_identity_sp_f3.json"), "--mode", "sp"});
  CHECK(minus.code == 1);
  CHECK(minus.j()["failed"] == json::array({"(iii)"}));

  Run id = cli({"decide", data("identity_orth_f5.json"), "--mode", "orth"});
  CHECK(id.code == 0);
  CHECK(id.j()["splittable"] == true);

  Run cell3 = cli({"decide", data("unipotent_cell3_orth_f3.json"), "--mode", "orth"});
  CHECK(cell3.code == 1);
  CHECK(cell3.j()["failed"] == json::array({"(iv)"}));

  CHECK(cli({"decide", data("jordan3_gl_f5.json"), "--mode", "gl"}).code == 0);
  // Wrong eps for the mode is a validation failure.
  CHECK(cli({"decide", data("minus_identity_sp_f3.json"), "--mode", "orth"}).code == 3);
}

TEST_CASE("factor") {
  SUBCASE("sp3 on -I") {
    Run r = cli({"factor", data("minus_identity_sp_f3.json"), "--mode", "sp3"});
    REQUIRE(r.code == 0);
    const json j = r.j();
    CHECK(j["factors"].size() == 3);
    CHECK(j["verified"] == true);
    CHECK(j["diagnostics"]["commutation"] == true);
    CHECK(j["diagnostics"]["stabilization"] == true);
  }
  SUBCASE("gl on a size-3 Jordan cell") {
    Run r = cli({"factor", data("jordan3_gl_f5.json"), "--mode", "gl"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["factors"].size() == 2);
    CHECK(r.j()["verified"] == true);
  }
  SUBCASE("orth2 on a failing instance") {
    CHECK(cli({"factor", data("unipotent_cell3_orth_f3.json"), "--mode", "orth2"}).code == 1);
    CHECK(cli({"factor", data("minus_identity_sp_f3.json"), "--mode", "sp2"}).code == 1);
  }
  SUBCASE("budget exhaustion emits a certificate") {
    Run r = cli({"factor", data("sp4_f3_transport.json"), "--mode", "sp2", "--transport-budget", "1"});
    REQUIRE(r.code == 4);
    const json j = r.j();
    CHECK(j["error"] == "TransportBudgetExceeded");
    CHECK(j["invariants_match"] == true);
    CHECK(j["model_factors"].size() == 2);
  }
  SUBCASE("output re-verifies and is byte-stable") {
    Run a = cli({"factor", data("sp4_f3_transport.json"), "--mode", "sp2", "--seed", "7"});
    Run b = cli({"factor", data("sp4_f3_transport.json"), "--mode", "sp2", "--seed", "7"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const std::string path = temp_file("factored.json", a.out);
    Run v = cli({"factor", path, "--verify-only"});
    CHECK(v.code == 0);
    CHECK(v.j()["verified"] == true);
    CHECK(cli({"verify", path}).code == 0);

    json tampered = a.j();
    tampered["factors"][0][0][0] = 2;
    const std::string bad = temp_file("tampered.json", tampered.dump());
    Run t = cli({"factor", bad, "--verify-only"});
    CHECK(t.code == 3);
    CHECK(t.j()["verified"] == false);
  }
  SUBCASE("seed defaults to U2SPLIT_SEED") {
    Run flag = cli({"factor", data("sp4_f3_transport.json"), "--mode", "sp2", "--seed", "99"});
    setenv("U2SPLIT_SEED", "99", 1);
    Run env = cli({"factor", data("sp4_f3_transport.json"), "--mode", "sp2"});
    unsetenv("U2SPLIT_SEED");
    CHECK(flag.code == 0);
    CHECK(flag.out == env.out);
  }
}

TEST_CASE("oracle") {
  Run sp2 = cli({"oracle", "--group", "sp", "--dim", "2", "--field", "3"});
  CHECK(sp2.code == 0);
  CHECK(sp2.j()["agree"] == true);
  CHECK(sp2.j()["set_size"] == 23);

  Run sp4 = cli({"oracle", "--group", "sp", "--dim", "4", "--field", "3", "--depth", "3"});
  CHECK(sp4.code == 0);
  CHECK(sp4.j()["set_size"] == 51840);
  CHECK(sp4.j()["theorem"] == "symplectic3");

  Run orth = cli({"oracle", "--group", "orth", "--dim", "3", "--field", "3", "--form", "diag:1,1,2"});
  CHECK(orth.code == 0);
  CHECK(orth.j()["group_order"] == 48);

  CHECK(cli({"oracle", "--group", "gl", "--dim", "4", "--field", "3"}).code == 5);
  CHECK(cli({"oracle", "--group", "gl", "--dim", "2", "--field", "3", "--theorem", "symplectic2"}).code == 3);
}

TEST_CASE("model fixtures") {
  Run tw = cli({"model", "--field", "3", "twisted", "--k", "1"});
  REQUIRE(tw.code == 0);
  std::ifstream shipped(data("twisted_k1_f3.json"));
  std::stringstream ss;
  ss << shipped.rdbuf();
  CHECK(tw.out == ss.str());

  Run box = cli({"model", "--field", "5", "--eps", "-1", "boxed", "--b", "[[1,0],[0,2]]", "--c", "[[0,1],[1,0]]"});
  REQUIRE(box.code == 0);
  CHECK(cli({"verify", temp_file("boxed.json", box.out)}).code == 0);

  Run hyp = cli({"model", "--field", "3", "--eps", "-1", "hyperbolic-ext", "--v", "[[1,1],[0,1]]"});
  REQUIRE(hyp.code == 0);
  CHECK(hyp.j()["gram"].size() == 4);
  CHECK(cli({"verify", temp_file("hyp.json", hyp.out)}).code == 0);
}

TEST_CASE("errors") {
  CHECK(cli({"decide", data("nope.json"), "--mode", "sp"}).code == 2);
  CHECK(cli({"decide", temp_file("broken.json", "{\"field\": "), "--mode", "sp"}).code == 2);
  CHECK(cli({"decide", temp_file("nou.json", "{\"field\": \"F_3\"}"), "--mode", "gl"}).code == 2);
  CHECK(cli({"decide", data("minus_identity_sp_f3.json"), "--mode", "bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  const std::string nonisometry =
      temp_file("noniso.json", R"({"field":"F_3","eps":-1,"gram":[[0,1],[-1,0]],"u":[[1,1],[1,1]]})");
  CHECK(cli({"decide", nonisometry, "--mode", "sp"}).code == 3);
  Run v = cli({"verify", nonisometry});
  CHECK(v.code == 3);
  CHECK(v.j()["valid"] == false);
  const std::string ragged = temp_file("ragged.json", R"({"field":"F_3","u":[[1,0],[0]]})");
  CHECK(cli({"invariants", ragged}).code == 3);
}
