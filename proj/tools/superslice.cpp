// superslice command line driver.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "superslice/grading.hpp"
#include "superslice/pipeline.hpp"

using namespace superslice;

namespace {

struct Options {
  JobConfig cfg;
  std::string max_weight, output, format = "json";
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--algebra", o.cfg.algebra, "catalogue name (sl2, sl3, sl(2|1), osp12, ...) or JSON file");
  app->add_option("--nilpotent", o.cfg.nilpotent, "\"principal\" or an expression in basis labels");
  app->add_option("--grading", o.cfg.grading, "\"dynkin\" or label=weight,... with half-integer weights");
  app->add_option("--trials", o.cfg.trials, "random trials for invariance and certificates");
  app->add_option("--seed", o.cfg.seed, "seed for every random draw");
  app->add_option("--max-weight", o.max_weight, "weight cutoff, e.g. 3 or 5/2");
  app->add_option("--level", o.cfg.level, "level k (accepted, not used classically)");
  app->add_option("--output", o.output, "write the report here instead of stdout");
  app->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slodowy slices, Miura maps and classical W-superalgebras over Q"};
  app.require_subcommand(1);
  Options o;
  std::optional<Task> task;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Task t) {
    auto* s = parent->add_subcommand(name, help);
    add_common(s, o);
    s->callback([&task, t] { task = t; });
    return s;
  };

  auto* alg = app.add_subcommand("algebra", "algebra input");
  alg->require_subcommand(1);
  leaf(alg, "validate", "load the algebra and check its invariants", Task::AlgebraValidate);

  auto* sl = app.add_subcommand("slice", "gauge fixing and slice invariants");
  sl->require_subcommand(1);
  leaf(sl, "chart", "print the invariants and the gauge", Task::SliceChart);
  leaf(sl, "check-invariance", "seeded random invariance trials", Task::SliceInvariance);

  auto* mi = app.add_subcommand("miura", "finite Miura map");
  mi->require_subcommand(1);
  leaf(mi, "show", "restriction of the invariants to f + g_{-1/2} + g_0", Task::MiuraShow);
  leaf(mi, "certify", "Jacobian rank certificate of injectivity", Task::MiuraCertify);

  auto* co = leaf(&app, "cohomology", "truncated Chevalley-Eilenberg cohomology of g_+", Task::Cohomology);
  co->add_option("--coefficients", o.cfg.coefficients, "regular or slice")->check(CLI::IsMember({"regular", "slice"}));

  auto* pv = app.add_subcommand("pva", "classical W-superalgebra checks");
  pv->require_subcommand(1);
  leaf(pv, "h0", "truncated H^0 of the graded BRST complex", Task::PvaH0);
  leaf(pv, "qcheck", "Q^2 = 0 and Q as a derivation of the lambda-bracket", Task::PvaQcheck);
  leaf(pv, "miura-check", "graded Miura map intertwines lambda-brackets", Task::PvaMiura);

  auto* orb = leaf(&app, "orbit", "conjugate a point by exp of an element of g_+", Task::Orbit);
  orb->add_option("--point", o.cfg.orbit_point, "Z as an expression in basis labels")->required();
  orb->add_option("--by", o.cfg.orbit_by, "Y in g_{>=1/2}");

  leaf(&app, "run", "full pipeline", Task::Run);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!o.max_weight.empty()) o.cfg.max_weight2 = parse_half_integer(o.max_weight);
    Report r = run_task(o.cfg, *task);
    const std::string out = o.format == "text" ? r.text() : r.json();
    if (o.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(o.output);
      if (!f) throw Error("cannot write " + o.output);
      f << out;
    }
    return r.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
