#include <doctest.h>

#include "wrb/commands.hpp"

using namespace wrb;
using json = nlohmann::ordered_json;

namespace {

std::string problem(const char* name) { return std::string(WRB_PROBLEMS_DIR) + "/" + name; }

struct Run {
  int rc;
  json report;
  std::string err;
};

Run run(CommandOptions o, const std::string& format = "json") {
  std::string out, err;
  const int rc = run_cli(o, format, out, err);
  Run r{rc, json(), err};
  if (rc != 2 && format == "json") r.report = json::parse(out);
  return r;
}

CommandOptions opts(const char* command, const char* file) {
  CommandOptions o;
  o.command = command;
  o.problem_path = problem(file);
  return o;
}

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("rb-check on the one-dimensional example") {
    auto o = opts("rb-check", "one_dim.json");
    o.operator_name = "T_minus";
    const Run r = run(o);
    CHECK(r.rc == 0);
    CHECK(r.report["verdict"] == true);
    CHECK(r.report["command"]["name"] == "rb-check");
    o.operator_name = "T_plus";
    const Run bad = run(o);
    CHECK(bad.rc == 1);
    CHECK(bad.report["defect"]["entries"][0]["value"][0] == "-2");
  }

  TEST_CASE("cohomology tables") {
    auto o = opts("cohomology", "one_dim.json");
    o.operator_name = "T_minus";
    o.max_degree = 2;
    CHECK(run(o).report["h_dims"] == json::array({1, 0, 0}));
    o.operator_name = "T_zero";
    o.max_degree = 3;
    CHECK(run(o).report["h_dims"] == json::array({1, 1, 1, 1}));
    o.operator_name = "T_plus";
    const Run e = run(o);
    CHECK(e.rc == 2);
    CHECK(e.err.find("not a weighted Rota-Baxter") != std::string::npos);
  }

  TEST_CASE("extend the zero deformation") {
    auto o = opts("extend", "one_dim.json");
    o.deformation = "D_zero";
    const Run r = run(o);
    CHECK(r.rc == 0);
    CHECK(r.report["next_term"] == json::array({json::array({"0"})}));
    auto d = opts("extend", "dual_numbers.json");
    d.deformation = "D_identity";
    CHECK(run(d).rc == 1);
    d.command = "obstruct";
    CHECK(run(d).rc == 0);
  }

  TEST_CASE("errors exit with status 2") {
    auto o = opts("rb-check", "one_dim.json");
    o.operator_name = "missing";
    CHECK(run(o).rc == 2);
    o.command = "frobnicate";
    CHECK(run(o).rc == 2);
    auto p = opts("validate", "does_not_exist.json");
    CHECK(run(p).rc == 2);
    auto q = opts("rb-check", "one_dim.json");
    q.sweep = true;
    q.action = "ad";
    CHECK(run(q).rc == 2);  // --weight missing
    auto f = opts("validate", "one_dim.json");
    CHECK(run(f, "yaml").rc == 2);
  }

  TEST_CASE("sweeps report no disagreements") {
    for (const char* file : {"one_dim.json", "dual_numbers.json"})
      for (const char* w : {"0", "1", "-1", "1/2"}) {
        auto o = opts("rb-check", file);
        o.sweep = true;
        o.action = "ad";
        o.weight = w;
        const Run r = run(o);
        CHECK(r.rc == 0);
        CHECK(r.report["disagreements"] == 0);
      }
  }

  TEST_CASE("every command runs on the shipped files") {
    auto u = opts("nijenhuis", "upper_triangular.json");
    u.operator_name = "P11";
    CHECK(run(u).rc == 0);
    u.element = "0,1,0";
    CHECK(run(u).rc == 0);
    u.element = "0,1";
    CHECK(run(u).rc == 2);
    auto e = opts("deform-check", "upper_triangular.json");
    e.equivalence = "E_shift";
    CHECK(run(e).rc == 0);
    auto y = opts("ybe-check", "upper_triangular.json");
    y.tensor = "r_unit";
    y.weight = "1";
    CHECK(run(y).rc == 0);
    y.tensor.reset();
    y.operator_name = "T_minus";
    CHECK(run(y).rc == 0);
    auto l = opts("lie-check", "upper_triangular.json");
    l.operator_name = "L_minus";
    CHECK(run(l).rc == 0);
    l.operator_name = "T_minus";
    CHECK(run(l).rc == 0);
    auto b = opts("bridge", "dual_numbers.json");
    b.operator_name = "T_half";
    CHECK(run(b).rc == 0);
    auto v = opts("validate", "upper_triangular.json");
    CHECK(run(v).rc == 0);
    auto c = opts("cohomology", "upper_triangular.json");
    c.operator_name = "L_minus";
    CHECK(run(c).report["h_dims"] == json::array({3, 6, 3, 0}));
  }

  TEST_CASE("text reports render tables") {
    auto o = opts("cohomology", "one_dim.json");
    o.operator_name = "T_minus";
    std::string out, err;
    CHECK(run_cli(o, "text", out, err) == 0);
    CHECK(out.find("dim H^n") != std::string::npos);
    CHECK(out.find("h_dims: [1, 0, 0, 0]") != std::string::npos);
  }

  TEST_CASE("reports are deterministic") {
    auto o = opts("rb-check", "dual_numbers.json");
    o.sweep = true;
    o.action = "ad";
    o.weight = "1/2";
    std::string a, b, err;
    run_cli(o, "json", a, err);
    run_cli(o, "json", b, err);
    CHECK(a == b);
  }
}
