#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "superslice/catalogue.hpp"
#include "superslice/pipeline.hpp"

using namespace superslice;

namespace {

std::string write_temp(const std::string& name, const Json& j) {
  auto p = std::filesystem::temp_directory_path() / ("superslice_" + name + ".json");
  std::ofstream(p) << j.dump();
  return p.string();
}

const Json* find_stage(const Report& r, const std::string& name) {
  for (const auto& s : r.body["stages"])
    if (s["stage"] == name) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("catalogue algebra survives a JSON round trip") {
  for (auto g : {build_sl(2, 0), build_osp_1_2(), build_sl(2, 1)}) {
    auto back = parse_algebra_json(algebra_to_json(g));
    CHECK(back.dim() == g.dim());
    CHECK(back.bracket_entries().size() == g.bracket_entries().size());
    auto a = g.bracket_entries(), b = back.bracket_entries();
    for (std::size_t n = 0; n < a.size(); ++n) {
      CHECK(a[n].i == b[n].i);
      CHECK(a[n].j == b[n].j);
      CHECK(a[n].k == b[n].k);
      CHECK(a[n].c == b[n].c);
    }
    CHECK(back.form() == g.form());
    auto path = write_temp("roundtrip", algebra_to_json(g));
    CHECK(parse_algebra_file(path).bracket_entries().size() == a.size());
    std::filesystem::remove(path);
  }
}

TEST_CASE("Heisenberg file with labels and one bracket") {
  Json j = {{"basis", {{{"label", "p"}, {"parity", "even"}}, {{"label", "q"}, {"parity", "even"}}, {{"label", "z"}, {"parity", "even"}}}},
            {"brackets", {{{"i", "p"}, {"j", "q"}, {"k", "z"}, {"c_num", 1}, {"c_den", 1}}}}};
  auto path = write_temp("heis", j);
  auto g = load_algebra(path);
  CHECK(g.dim() == 3);
  CHECK(g.structure_constant(1, 0, 2) == -1);
  CHECK_FALSE(g.has_form());
  std::filesystem::remove(path);
}

TEST_CASE("antisymmetry violation is rejected with its indices") {
  Json j = {{"basis", {{{"label", "a"}}, {{"label", "b"}}}},
            {"brackets", {{{"i", 0}, {"j", 1}, {"k", 0}, {"c_num", 1}}, {{"i", 1}, {"j", 0}, {"k", 0}, {"c_num", 1}}}}};
  try {
    parse_algebra_json(j);
    FAIL("accepted a symmetric bracket");
  } catch (const InvariantViolation& e) {
    std::vector<std::size_t> want{0, 1, 0};
    std::vector<std::size_t> alt{1, 0, 0};
    CHECK((e.where() == want || e.where() == alt));
  }
  CHECK_THROWS_AS(parse_algebra_json(Json{{"brackets", Json::array()}}), Error);
  Json bad_label = {{"basis", {{{"label", "a"}}}}, {"brackets", {{{"i", "a"}, {"j", "x"}, {"k", "a"}, {"c_num", 1}}}}};
  CHECK_THROWS_AS(parse_algebra_json(bad_label), Error);
  CHECK_THROWS_AS(load_algebra("no-such-algebra"), Error);
}

TEST_CASE("sl2 and osp(1|2) pipelines pass end to end") {
  for (std::string a : {"sl2", "osp12"}) {
    JobConfig c;
    c.algebra = a;
    c.trials = 5;
    c.seed = 1;
    auto r = run_pipeline(c);
    CAPTURE(r.body_text());
    CHECK(r.pass);
    CHECK_FALSE(r.body.contains("failure"));
    REQUIRE(find_stage(r, "pva_miura"));
    if (a == "osp12") {
      const auto* cert = find_stage(r, "certificate");
      REQUIRE(cert);
      CHECK((*cert)["odd"]["rank"] == 1);
      CHECK((*cert)["odd"]["target"] == 1);
    }
  }
}

TEST_CASE("a hand-edited grading fails at the grading stage only") {
  JobConfig c;
  c.grading = "e12=1/2,h1=0,e21=-1/2";
  auto r = run_pipeline(c);
  CHECK_FALSE(r.pass);
  CHECK(r.body["failure"]["stage"] == "grading");
  CHECK(find_stage(r, "grading"));
  CHECK_FALSE(find_stage(r, "chart"));
  CHECK_FALSE(r.timings.contains("chart"));
}

TEST_CASE("identical configurations give identical report bodies") {
  JobConfig c;
  c.algebra = "sl(2|1)";
  c.seed = 42;
  c.trials = 3;
  auto a = run_pipeline(c), b = run_pipeline(c);
  CHECK(a.body_text() == b.body_text());
  c.seed = 43;
  auto d = run_pipeline(c);
  CHECK(d.pass);
}

TEST_CASE("config validation and the level notice") {
  JobConfig c;
  c.trials = 0;
  CHECK_THROWS_AS(run_pipeline(c), Error);
  c.trials = 2;
  c.coefficients = "other";
  CHECK_THROWS_AS(run_task(c, Task::Cohomology), Error);
  c.coefficients = "slice";
  c.level = "3";
  auto r = run_task(c, Task::Cohomology);
  CHECK(r.pass);
  REQUIRE(r.body["notices"].size() == 1);
  // cutoff below the largest generator weight
  JobConfig p;
  p.algebra = "sl3";
  p.max_weight2 = 4;
  auto h = run_task(p, Task::PvaH0);
  CHECK_FALSE(h.pass);
  CHECK(h.body["failure"]["stage"] == "pva_h0");
}

TEST_CASE("orbit subcommand conjugates numerically") {
  JobConfig c;
  c.orbit_point = "e21 + 3*h1 + 2*e12";
  c.orbit_by = "5*e12";
  auto r = run_task(c, Task::Orbit);
  REQUIRE(r.pass);
  // f + (b - s) h + (a + 2 s b - s^2) e with a = 2, b = 3, s = 5
  CHECK((*find_stage(r, "orbit"))["result"] == "7*e12 - 2*h1 + e21");
  c.orbit_by = "h1";
  CHECK_FALSE(run_task(c, Task::Orbit).pass);
}

TEST_CASE("text mirror carries the verdict") {
  JobConfig c;
  auto r = run_task(c, Task::SliceChart);
  auto t = r.text();
  CHECK(t.find("invariant=z_e12 + z_h1^2") != std::string::npos);
  CHECK(t.find("pass: true") != std::string::npos);
  auto j = Json::parse(r.json());
  CHECK(j.contains("report"));
  CHECK(j.contains("timings"));
}
