#include "superslice/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "superslice/catalogue.hpp"
#include "superslice/cohomology.hpp"
#include "superslice/pva.hpp"

namespace superslice {

namespace {

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json optional_failure(const std::optional<std::string>& f) { return f ? Json(*f) : Json(nullptr); }

std::map<std::string, int> parse_weights(const std::string& s) {
  std::map<std::string, int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("grading entry '" + item + "' is not label=weight");
    auto trim = [](std::string t) {
      t.erase(0, t.find_first_not_of(' '));
      t.erase(t.find_last_not_of(' ') + 1);
      return t;
    };
    out[trim(item.substr(0, eq))] = parse_half_integer(trim(item.substr(eq + 1)));
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const JobConfig& c) : cfg_(c) {
    Json conf;
    conf["algebra"] = c.algebra;
    conf["nilpotent"] = c.nilpotent;
    conf["grading"] = c.grading;
    conf["trials"] = c.trials;
    conf["seed"] = c.seed;
    conf["max_weight"] = c.max_weight2 ? Json(half_integer_text(*c.max_weight2)) : Json(nullptr);
    if (c.level) conf["level"] = *c.level;
    rep_.body["config"] = conf;
    rep_.body["notices"] = Json::array();
    if (c.level) notice("level k = " + *c.level + " is accepted but unused: the classical computations do not depend on it");
    rep_.body["stages"] = Json::array();
  }

  void notice(const std::string& s) { rep_.body["notices"].push_back(s); }

  template <class F>
  void stage(const std::string& name, F&& body) {
    if (failed_) return;
    const auto t0 = std::chrono::steady_clock::now();
    Json out;
    try {
      out = body();
    } catch (const Error& e) {
      out = {{"pass", false}, {"error", e.what()}};
      if (auto* iv = dynamic_cast<const InvariantViolation*>(&e)) out["where"] = iv->where();
      if (auto* ge = dynamic_cast<const GradingError*>(&e)) out["degree"] = half_integer_text(ge->weight2());
    }
    rep_.timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json rec = {{"stage", name}};
    rec.update(out);
    rep_.body["stages"].push_back(rec);
    if (!out.value("pass", false)) {
      failed_ = true;
      Json f = {{"stage", name}};
      if (out.contains("error")) f["message"] = out["error"];
      else if (out.contains("failure")) f["message"] = out["failure"];
      rep_.body["failure"] = f;
    }
  }

  Report finish() {
    rep_.pass = !failed_;
    rep_.body["pass"] = rep_.pass;
    return std::move(rep_);
  }

  // pipeline state
  const JobConfig& cfg_;
  std::optional<LieSuperalgebra> g;
  std::optional<Sl2Triple> triple;
  std::optional<GoodGrading> grading;
  std::optional<SliceChart> chart;
  std::optional<MiuraImage> miura;
  std::optional<BrstComplex> brst;

  void load() {
    stage("algebra", [&] {
      g.emplace(load_algebra(cfg_.algebra));
      for (const auto& n : g->notes()) notice(n);
      Json o;
      o["name"] = g->name();
      o["dim"] = {{"even", g->even_dim()}, {"odd", g->odd_dim()}};
      o["structure_constants"] = g->bracket_entries().size();
      o["form"] = g->has_form();
      // construction already ran these; repeat them so the record stands alone
      auto jac = find_jacobi_violation(*g);
      o["jacobi"] = jac ? Json(std::vector<std::size_t>(jac->begin(), jac->end())) : Json("ok");
      o["pass"] = !jac;
      return o;
    });
  }

  void make_triple() {
    stage("triple", [&] {
      Vector f;
      if (cfg_.nilpotent == "principal") {
        if (!g->principal()) throw Error(g->name() + " has no catalogue principal nilpotent; pass --nilpotent");
        f = *g->principal();
      } else {
        f = parse_vector(*g, cfg_.nilpotent);
      }
      triple = sl2_triple_for(*g, f);
      verify_triple(*g, *triple);
      return Json{{"e", g->render(triple->e)}, {"h", g->render(triple->h)}, {"f", g->render(triple->f)}, {"pass", true}};
    });
  }

  void make_grading() {
    stage("grading", [&] {
      Json o;
      if (cfg_.grading == "dynkin") {
        grading = dynkin_grading(*g, *triple);
      } else {
        grading = grading_from_weights(*g, parse_weights(cfg_.grading));
        validate_good_grading(*g, *grading, triple->f);
      }
      o["kind"] = cfg_.grading == "dynkin" ? "dynkin" : "explicit";
      Json w = Json::object();
      for (std::size_t i = 0; i < g->dim(); ++i) w[g->label(i)] = half_integer_text(grading->weight2[i]);
      o["weights"] = w;
      o["good"] = true;
      o["pass"] = true;
      return o;
    });
  }

  void make_chart() {
    stage("decomposition", [&] {
      auto d = graded_slice_decomposition(*g, *grading, *triple);
      Json pieces = Json::array();
      for (const auto& p : d.pieces)
        pieces.push_back({{"degree", half_integer_text(p.weight2)},
                          {"dim", p.indices.size()},
                          {"centralizer", p.centralizer.size()},
                          {"image", p.image.size()}});
      const bool ok = centralizer_dimension_identity(*g, *grading, triple->e);
      return Json{{"pieces", pieces}, {"dimension_identity", ok}, {"pass", ok}};
    });
    stage("chart", [&] {
      chart = gauge_fix(*g, *triple, *grading);
      const auto& c = *chart;
      Json gens = Json::array();
      std::size_t even = 0, odd = 0;
      for (std::size_t k = 0; k < c.generators.size(); ++k) {
        const auto& s = c.generators[k];
        (s.parity == Parity::Even ? even : odd)++;
        gens.push_back({{"label", s.label},
                        {"vector", g->render(s.vector)},
                        {"degree", half_integer_text(s.weight2)},
                        {"conformal_weight", half_integer_text(s.conformal_weight2())},
                        {"parity", parity_name(s.parity)},
                        {"invariant", c.invariants[k].to_string()}});
      }
      Json gauge = Json::object();
      for (auto i : c.plus) gauge[g->label(i)] = c.gauge[i].to_string();
      auto ce = centralizer(*g, triple->e);
      std::size_t ce_even = 0;
      for (const auto& v : ce.vectors)
        if (g->parity_of(v) == Parity::Even) ++ce_even;
      Json checks;
      checks["parity"] = optional_failure(check_chart_parity(c));
      checks["weights"] = optional_failure(check_chart_weights(c));
      checks["round_trip"] = optional_failure(check_round_trip(c));
      checks["dimension_accounting"] = optional_failure(check_dimension_accounting(c));
      bool ok = even == ce_even && odd == ce.dim() - ce_even;
      for (const auto& [k, v] : checks.items()) ok = ok && v.is_null();
      return Json{{"generators", gens},
                  {"gauge", gauge},
                  {"centralizer_dim", {{"even", ce_even}, {"odd", ce.dim() - ce_even}}},
                  {"checks", checks},
                  {"pass", ok}};
    });
  }

  void invariance() {
    stage("invariance", [&] {
      auto r = verify_invariance(*chart, cfg_.trials, cfg_.seed);
      return Json{{"trials", r.trials}, {"counterexample", optional_failure(r.counterexample)}, {"pass", r.pass}};
    });
  }

  void make_miura() {
    stage("miura", [&] {
      miura = finite_miura(*chart);
      Json imgs = Json::array();
      for (std::size_t k = 0; k < miura->images.size(); ++k)
        imgs.push_back({{"generator", miura->generators[k].label}, {"image", miura->images[k].to_string()}});
      auto bad = check_miura_parity(*miura);
      return Json{{"images", imgs}, {"witness", vector_json(miura->witness)},
                  {"parity", optional_failure(bad)}, {"pass", !bad}};
    });
  }

  void certificate() {
    stage("certificate", [&] {
      auto c = injectivity_certificate(*miura, cfg_.trials, cfg_.seed);
      auto points = [](const std::vector<WitnessPoint>& ps) {
        Json a = Json::array();
        for (const auto& p : ps) a.push_back({{"source", p.source}, {"values", vector_json(p.values)}, {"rank", p.rank}});
        return a;
      };
      return Json{{"even", {{"rank", c.even_rank}, {"target", c.even_target}, {"points", points(c.even_points)}}},
                  {"odd", {{"rank", c.odd_rank}, {"target", c.odd_target}, {"points", points(c.odd_points)}}},
                  {"pass", c.pass}};
    });
  }

  static Json table_json(const CohomologyTable& t) {
    Json a = Json::array();
    for (const auto& [key, d] : t.dims)
      a.push_back({{"k", key.first}, {"weight", half_integer_text(key.second)}, {"dim", d}});
    return a;
  }

  void cohomology(const std::string& coefficients) {
    stage("cohomology_" + coefficients, [&] {
      Json o;
      if (coefficients == "regular") {
        const int cutoff = cfg_.max_weight2.value_or(8);
        auto idx = grading->indices_at_least(1);
        std::vector<int> w;
        for (auto i : idx) w.push_back(grading->weight2[i]);
        auto n = basis_subalgebra(*g, idx, g->name() + "_+");
        auto cx = build_ce_complex(n, w, cutoff);
        auto t = compute_cohomology(cx);
        bool ok = true;
        for (const auto& [key, d] : t.dims) ok = ok && d == (key == std::make_pair(0, 0) ? 1u : 0u);
        ok = ok && t.at(0, 0) == 1;
        o["cutoff"] = half_integer_text(cutoff);
        o["table"] = table_json(t);
        o["expected"] = "constants only";
        o["pass"] = ok;
      } else {
        const int cutoff = cfg_.max_weight2.value_or(8);
        auto cx = build_slice_ce_complex(*chart, cutoff);
        auto t = compute_cohomology(cx);
        std::vector<int> w;
        std::vector<Parity> p;
        for (const auto& s : chart->generators) {
          w.push_back(s.conformal_weight2());
          p.push_back(s.parity);
        }
        auto expect = free_monomial_counts(w, p, cutoff, false);
        bool ok = true;
        for (const auto& [key, d] : t.dims) {
          const std::size_t want = key.first == 0 ? expect[key.second] : 0;
          ok = ok && d == want;
        }
        for (int wt = 0; wt <= cutoff; ++wt) ok = ok && t.at(0, wt) == expect[wt];
        o["cutoff"] = half_integer_text(cutoff);
        o["table"] = table_json(t);
        o["expected"] = "functions on the slice";
        o["pass"] = ok;
      }
      return o;
    });
  }

  int pva_cutoff() const {
    int top = 0;
    for (const auto& s : chart->generators) top = std::max(top, s.conformal_weight2());
    if (cfg_.max_weight2 && *cfg_.max_weight2 < top)
      throw Error("--max-weight " + half_integer_text(*cfg_.max_weight2) + " is below the largest generator weight " +
                  half_integer_text(top));
    return cfg_.max_weight2.value_or(std::max(6, top));
  }

  void make_brst() {
    stage("brst", [&] {
      brst.emplace(*chart);
      Json q = Json::object();
      for (std::size_t v = 0; v < brst->ring()->size(); ++v)
        q[brst->ring()->info(v).name] = brst->Q_generator(v).to_string();
      return Json{{"fields", brst->field_basis().size()}, {"ghosts", brst->ghost_basis().size()}, {"Q", q}, {"pass", true}};
    });
  }

  void qcheck() {
    stage("pva_qcheck", [&] {
      auto sq = check_q_squared(*brst);
      auto sk = check_skewsymmetry(brst->pva());
      auto der = check_q_bracket_derivation(*brst);
      return Json{{"q_squared", optional_failure(sq)},
                  {"skewsymmetry", optional_failure(sk)},
                  {"bracket_derivation", optional_failure(der)},
                  {"pass", !sq && !sk && !der}};
    });
  }

  void h0() {
    stage("pva_h0", [&] {
      const int cutoff = pva_cutoff();
      auto h = h0_truncated(*brst, cutoff);
      Json rows = Json::array();
      for (const auto& [w, d] : h.dims)
        rows.push_back({{"weight", half_integer_text(w)}, {"dim", d}, {"expected", h.expected.at(w)}, {"h1", h.higher.at(w)}});
      Json reps = Json::array();
      for (const auto& r : h.representatives) reps.push_back(r.to_string());
      return Json{{"cutoff", half_integer_text(cutoff)},
                  {"table", rows},
                  {"representatives", reps},
                  {"representatives_closed", h.representatives_closed},
                  {"pass", h.pass()}};
    });
  }

  void miura_check() {
    stage("pva_miura", [&] {
      const int cutoff = pva_cutoff();
      auto m = graded_miura(*chart);
      auto r = check_miura_intertwining(m, *brst, cutoff);
      Json imgs = Json::array();
      for (const auto& im : m.images) imgs.push_back(im.to_string());
      return Json{{"cutoff", half_integer_text(cutoff)},
                  {"images", imgs},
                  {"pairs", r.pairs},
                  {"failure", optional_failure(r.failure)},
                  {"pass", r.pass}};
    });
  }

  void orbit() {
    stage("orbit", [&] {
      if (cfg_.orbit_point.empty()) throw Error("orbit needs --point");
      Vector z = parse_vector(*g, cfg_.orbit_point);
      Vector y = cfg_.orbit_by.empty() ? Vector(g->dim()) : parse_vector(*g, cfg_.orbit_by);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0 && grading->weight2[i] < 1) throw Error("--by must lie in g_{>=1/2}; " + g->label(i) + " does not");
      auto out = adjoint_orbit_map(*g, z, y);
      return Json{{"point", g->render(z)}, {"by", g->render(y)}, {"result", g->render(out)}, {"pass", true}};
    });
  }

 private:
  Report rep_;
  bool failed_ = false;
};

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      bool flat = v.is_object();
      if (flat)
        for (const auto& [k, x] : v.items()) flat = flat && x.is_primitive();
      if (flat) {
        os << pad << "-";
        for (const auto& [k, x] : v.items()) os << " " << k << "=" << (x.is_string() ? x.get<std::string>() : x.dump());
        os << "\n";
      } else if (v.is_object()) {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

void JobConfig::validate() const {
  if (trials < 1) throw Error("--trials must be positive");
  if (max_weight2 && *max_weight2 < 0) throw Error("--max-weight must be nonnegative");
  if (coefficients != "regular" && coefficients != "slice") throw Error("--coefficients must be regular or slice");
  if (algebra.empty()) throw Error("--algebra is required");
}

std::string Report::json() const {
  Json j;
  j["report"] = body;
  j["timings"] = timings;
  return j.dump(2) + "\n";
}

std::string Report::text() const {
  std::ostringstream os;
  render_text(os, body, 0);
  os << "timings:\n";
  for (const auto& [k, v] : timings.items()) os << "  " << k << ": " << v.get<double>() << " s\n";
  return os.str();
}

Report run_task(const JobConfig& config, Task task) {
  config.validate();
  Runner r(config);
  r.load();
  if (task == Task::AlgebraValidate) return r.finish();
  r.make_triple();
  r.make_grading();
  if (task == Task::Orbit) {
    r.orbit();
    return r.finish();
  }
  if (task == Task::Cohomology && config.coefficients == "regular") {
    r.cohomology("regular");
    return r.finish();
  }
  r.make_chart();
  switch (task) {
    case Task::SliceChart:
      break;
    case Task::SliceInvariance:
      r.invariance();
      break;
    case Task::MiuraShow:
      r.make_miura();
      break;
    case Task::MiuraCertify:
      r.make_miura();
      r.certificate();
      break;
    case Task::Cohomology:
      r.cohomology("slice");
      break;
    case Task::PvaH0:
      r.make_brst();
      r.h0();
      break;
    case Task::PvaQcheck:
      r.make_brst();
      r.qcheck();
      break;
    case Task::PvaMiura:
      r.make_brst();
      r.miura_check();
      break;
    case Task::Run:
      r.invariance();
      r.make_miura();
      r.certificate();
      r.cohomology("regular");
      r.cohomology("slice");
      r.make_brst();
      r.qcheck();
      r.h0();
      r.miura_check();
      break;
    default:
      break;
  }
  return r.finish();
}

}  // namespace superslice
