#include "mixed3geo/suites.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "mixed3geo/errors.hpp"
#include "mixed3geo/rng.hpp"

namespace mixed3geo {

namespace {

constexpr std::uint64_t kVectorStreamSalt = 0x9E3779B97F4A7C15ull;

const MixedThreeStructure* structure_of(const Model& m) {
  if (auto* h = std::get_if<HypersurfaceModel>(&m)) return &h->S;
  if (auto* f = std::get_if<FlatMixedModel>(&m)) return &f->S;
  return nullptr;
}

const MetricField& metric_of(const Model& m) {
  if (auto* a = std::get_if<AmbientModel>(&m)) return a->G;
  if (auto* p = std::get_if<ProductModel>(&m)) return p->G;
  return structure_of(m)->g;
}

VecD draw(SplitMix64& rng, int d) {
  VecD v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

// Random affine vector field X^k = a_k + sum_j B_kj x_j, so brackets and
// Nijenhuis evaluations see genuinely nonconstant arguments.
VectorField affine_field(int d, const VecD& a, const MatD& B) {
  std::vector<ScalarField> comps(d);
  for (int k = 0; k < d; ++k) {
    const double ak = a[k];
    const VecD row = B.row(k);
    comps[k] = ScalarField::from_expr(d, [ak, row, d](const std::vector<Jet2>& u) {
      Jet2 s = Jet2::constant(ak, d);
      for (int j = 0; j < d; ++j) s = s + row[j] * u[j];
      return s;
    });
  }
  return VectorField(std::move(comps));
}

struct Track {
  double max = 0.0;
  VecD worst;
  void upd(double r, const VecD& p) {
    if (r >= max) {
      max = r;
      worst = p;
    }
  }
};

struct SuiteRun {
  const SuiteSpec& spec;
  Tolerances tol;
  RunReport report;

  explicit SuiteRun(const SuiteSpec& s) : spec(s) {
    auto bump = [&](const char* key, double& slot) {
      auto it = s.tol_overrides.find(key);
      if (it != s.tol_overrides.end()) slot = it->second;
    };
    bump("algebraic", tol.algebraic);
    bump("one-deriv", tol.one_deriv);
    bump("two-deriv", tol.two_deriv);
    report.spec = s;
  }

  double tol_for(const std::string& id, double dflt) const {
    auto it = spec.tol_overrides.find(id);
    return it != spec.tol_overrides.end() ? it->second : dflt;
  }

  void assert_max(const std::string& id, const Track& t, double dflt_tol) {
    const double tv = tol_for(id, dflt_tol);
    report.assertions.push_back(
        {id, t.max, tv, t.max <= tv, t.worst.size() ? t.worst : VecD()});
  }

  void absorb(const StructureReport& sr, const std::string& prefix = "") {
    for (const auto& ax : sr.axioms) {
      const std::string id = prefix + ax.id;
      const double tv = tol_for(id, ax.tol);
      report.assertions.push_back({id, ax.max_residual, tv,
                                   ax.max_residual <= tv, ax.worst_point});
    }
  }

  void note(const std::string& s) { report.notes.push_back(s); }

  // One case per (point, vector tuple); `body` throws DegeneratePlane /
  // NullPivot on degenerate draws and is retried with fresh vectors up to
  // 100 times before the case is recorded as skipped.
  template <class Body>
  void cases(const std::vector<Point>& pts, SplitMix64& rng, Body&& body) {
    for (const auto& p : pts) {
      for (int v = 0; v < spec.vectors_per_point; ++v) {
        ++report.cases;
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
          try {
            body(p, rng);
            done = true;
          } catch (const DegeneratePlane&) {
          } catch (const NullPivot&) {
          }
        }
        if (!done) ++report.skipped;
      }
    }
  }

  void finish() {
    Track skips;
    skips.max = report.cases ? double(report.skipped) / double(report.cases) : 0.0;
    if (report.cases) assert_max("skip-fraction", skips, 0.10);
    report.pass = true;
    for (const auto& a : report.assertions) report.pass = report.pass && a.pass;
  }
};

const HypersurfaceModel& require_sasakian_model(const Model& m,
                                                const std::string& suite) {
  if (auto* h = std::get_if<HypersurfaceModel>(&m)) return *h;
  throw ConfigError(suite + ": suite requires a mixed 3-Sasakian model");
}

const ProductModel& require_product_model(const Model& m, const std::string& suite) {
  if (auto* p = std::get_if<ProductModel>(&m)) return *p;
  throw ConfigError(suite + ": suite requires a product model");
}

const MixedThreeStructure& require_structure(const Model& m, const std::string& suite) {
  if (const auto* s = structure_of(m)) return *s;
  throw ConfigError(suite + ": suite requires a model with a mixed 3-structure");
}

void suite_axioms(SuiteRun& run, const Model& model, const std::vector<Point>& pts) {
  if (auto* a = std::get_if<AmbientModel>(&model)) {
    run.absorb(validate_hyper_parahermitian(a->J, a->G, pts, run.tol));
  } else if (auto* p = std::get_if<ProductModel>(&model)) {
    run.absorb(validate_hyper_parahermitian(p->J, p->G, pts, run.tol));
  } else {
    run.absorb(validate_mixed_3_structure(*structure_of(model), pts, run.tol));
  }
}

void suite_contact_class(SuiteRun& run, const Model& model,
                         const std::vector<Point>& pts) {
  const auto& S = require_structure(model, run.spec.suite_id);
  for (int a = 0; a < 3; ++a) {
    auto cls = classify_contact_class(S.phi[a], S.xi[a], S.eta[a], S.g,
                                      MixedThreeStructure::r[a], pts, run.tol);
    run.absorb(cls.report, "a" + std::to_string(a + 1) + "-");
    std::ostringstream os;
    os << "structure " << (a + 1) << ": paracontact-metric="
       << (cls.paracontact_metric ? "yes" : "no")
       << " para-k-contact=" << (cls.para_k_contact ? "yes" : "no")
       << " r-sasakian=" << (cls.r_sasakian ? "yes" : "no");
    run.note(os.str());
  }
}

void suite_einstein(SuiteRun& run, const Model& model, const std::vector<Point>& pts) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  const int n = (d - 3) / 4;
  const double c = -h.sigma * (4 * n + 2);
  Track t;
  for (const auto& p : pts) {
    auto pack = riemann(h.S.g, p);
    t.upd((pack.ricci - c * pack.g0).lpNorm<Eigen::Infinity>(), p.coords);
  }
  run.assert_max("einstein-ricci-proportional", t, run.tol.one_deriv);
}

void suite_scalar(SuiteRun& run, const Model& model, const std::vector<Point>& pts) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  const int n = (d - 3) / 4;
  const double want = -h.sigma * (4 * n + 2) * (4 * n + 3);
  Track t;
  for (const auto& p : pts) {
    auto pack = riemann(h.S.g, p);
    t.upd(std::abs(pack.scalar - want), p.coords);
  }
  run.assert_max("scalar-constant", t, run.tol.two_deriv);
}

void suite_sectional(SuiteRun& run, const Model& model, const std::vector<Point>& pts,
                     SplitMix64& rng) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  Track t;
  std::optional<CurvaturePack> pack;
  const Point* at = nullptr;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    if (at != &p) {
      pack.emplace(riemann(h.S.g, p));
      at = &p;
    }
    const VecD X = draw(r, d), Y = draw(r, d);
    t.upd(std::abs(sectional(*pack, X, Y) + h.sigma), p.coords);
  });
  run.assert_max("sectional-constant", t, run.tol.one_deriv);
}

void suite_lemma31(SuiteRun& run, const Model& model, const std::vector<Point>& pts,
                   SplitMix64& rng) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  std::array<Track, 3> t;
  std::optional<CurvaturePack> pack;
  std::array<TwoFormValue, 3> deta{TwoFormValue(d), TwoFormValue(d), TwoFormValue(d)};
  std::array<MatD, 3> phi0;
  const Point* at = nullptr;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    if (at != &p) {
      pack.emplace(riemann(h.S.g, p));
      for (int a = 0; a < 3; ++a) {
        deta[a] = d_oneform(h.S.eta[a], p);
        phi0[a] = h.S.phi[a].values(p);
      }
      at = &p;
    }
    const VecD X = draw(r, d), Y = draw(r, d), Z = draw(r, d), W = draw(r, d);
    for (int a = 0; a < 3; ++a)
      t[a].upd(lemma_curvature_phi_residual(*pack, deta[a], phi0[a],
                                            MixedThreeStructure::r[a],
                                            h.S.epsilon[a], X, Y, Z, W),
               p.coords);
  });
  for (int a = 0; a < 3; ++a)
    run.assert_max("curvature-phi-identity-" + std::to_string(a + 1), t[a],
                   run.tol.one_deriv);
}

void suite_p_symmetry(SuiteRun& run, const Model& model,
                      const std::vector<Point>& pts, SplitMix64& rng) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  Track skew_first, skew_second, pair_exchange, reversal, printed;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    const MatD g0 = h.S.g.values(p);
    const VecD X1 = draw(r, d), X2 = draw(r, d), X3 = draw(r, d), X4 = draw(r, d);
    for (int a = 0; a < 3; ++a) {
      const TwoFormValue de = d_oneform(h.S.eta[a], p);
      const double P = p_tensor(de, g0, X1, X2, X3, X4);
      skew_first.upd(std::abs(P + p_tensor(de, g0, X2, X1, X3, X4)), p.coords);
      skew_second.upd(std::abs(P + p_tensor(de, g0, X1, X2, X4, X3)), p.coords);
      pair_exchange.upd(std::abs(P + p_tensor(de, g0, X3, X4, X1, X2)), p.coords);
      const double rev = p_tensor(de, g0, X4, X3, X2, X1);
      reversal.upd(std::abs(P + rev), p.coords);
      printed.upd(std::abs(P - rev), p.coords);
    }
  });
  run.assert_max("p-skew-first-pair", skew_first, run.tol.algebraic);
  run.assert_max("p-skew-second-pair", skew_second, run.tol.algebraic);
  run.assert_max("p-pair-exchange-antisymmetry", pair_exchange, run.tol.algebraic);
  run.assert_max("p-full-reversal-antisymmetry", reversal, run.tol.algebraic);
  std::ostringstream os;
  os << "symmetric full-reversal variant has residual " << printed.max
     << "; it contradicts the three asserted symmetries, whose composition "
        "forces the antisymmetric version (documented discrepancy, not asserted)";
  run.note(os.str());
}

void suite_ricci_xi(SuiteRun& run, const Model& model, const std::vector<Point>& pts,
                    SplitMix64& rng) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  const double two_n = d - 1;  // the contact-structure n of each constituent
  std::array<Track, 3> t;
  std::optional<CurvaturePack> pack;
  const Point* at = nullptr;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    if (at != &p) {
      pack.emplace(riemann(h.S.g, p));
      at = &p;
    }
    const VecD X = draw(r, d);
    for (int a = 0; a < 3; ++a) {
      const VecD xi = h.S.xi[a].values(p);
      const double eta = h.S.eta[a].apply(p, X);
      t[a].upd(std::abs(X.dot(pack->ricci * xi) -
                        two_n * MixedThreeStructure::r[a] * eta),
               p.coords);
    }
  });
  for (int a = 0; a < 3; ++a)
    run.assert_max("ricci-xi-" + std::to_string(a + 1), t[a], run.tol.one_deriv);
}

void suite_q_tensor(SuiteRun& run, const Model& model, const std::vector<Point>& pts,
                    SplitMix64& rng) {
  const auto& h = require_sasakian_model(model, run.spec.suite_id);
  const int d = h.S.dim();
  Track closed_form, frame_sum;
  std::optional<CurvaturePack> pack;
  MatD phi3;
  std::optional<Frame> frame;
  const Point* at = nullptr;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    if (at != &p) {
      pack.emplace(riemann(h.S.g, p));
      phi3 = h.S.phi[2].values(p);
      frame.emplace(orthonormal_frame(pack->g0));
      at = &p;
    }
    const VecD X = draw(r, d), Y = draw(r, d);
    const double q = q_tensor(*pack, phi3, h.sigma, X, Y);
    closed_form.upd(std::abs(q + 2.0 * h.sigma * X.dot(pack->g0 * (phi3 * Y))),
                    p.coords);
    frame_sum.upd(std::abs(q - q_tensor_frame_sum(*pack, phi3, *frame, X, Y)),
                  p.coords);
  });
  run.assert_max("q-closed-form", closed_form, run.tol.two_deriv);
  run.assert_max("q-frame-sum", frame_sum, run.tol.two_deriv);
}

void suite_domega(SuiteRun& run, const Model& model, const std::vector<Point>& pts) {
  const auto& pr = require_product_model(model, run.spec.suite_id);
  const int d = pr.chart->dim();
  VecD dt = VecD::Unit(d, d - 1);
  std::array<Track, 3> t;
  for (const auto& p : pts) {
    for (int a = 0; a < 3; ++a) {
      const ThreeFormValue lhs = d_twoform(pr.Omega[a], p);
      const ThreeFormValue rhs =
          wedge_1_2(2.0 * pr.sigma * dt, pr.Omega[a].eval(p));
      t[a].upd((lhs - rhs).max_abs(), p.coords);
    }
  }
  for (int a = 0; a < 3; ++a)
    run.assert_max("domega-" + std::to_string(a + 1), t[a], run.tol.one_deriv);
}

void suite_nijenhuis(SuiteRun& run, const Model& model,
                     const std::vector<Point>& pts, SplitMix64& rng) {
  const auto& pr = require_product_model(model, run.spec.suite_id);
  const int d = pr.chart->dim();
  std::array<Track, 3> t;
  run.cases(pts, rng, [&](const Point& p, SplitMix64& r) {
    MatD BX(d, d), BY(d, d);
    const VecD aX = draw(r, d), aY = draw(r, d);
    for (int i = 0; i < d; ++i) {
      BX.row(i) = 0.5 * draw(r, d).transpose();
      BY.row(i) = 0.5 * draw(r, d).transpose();
    }
    const VectorField X = affine_field(d, aX, BX);
    const VectorField Y = affine_field(d, aY, BY);
    for (int a = 0; a < 3; ++a)
      t[a].upd(nijenhuis(pr.J[a], X, Y, p).lpNorm<Eigen::Infinity>(), p.coords);
  });
  for (int a = 0; a < 3; ++a)
    run.assert_max("nijenhuis-" + std::to_string(a + 1), t[a], run.tol.two_deriv);
}

void suite_kashiwada(SuiteRun& run, const Model& model,
                     const std::vector<Point>& pts) {
  const auto& S = require_structure(model, run.spec.suite_id);
  const StructureReport contact = validate_mixed_3_contact(S, pts, run.tol);
  Tolerances relaxed{10 * run.tol.algebraic, 10 * run.tol.one_deriv,
                     10 * run.tol.two_deriv};
  const StructureReport sasakian = validate_mixed_3_sasakian(S, pts, relaxed);
  double contact_res = 0.0, sasakian_res = 0.0;
  VecD worst;
  for (const auto& ax : contact.axioms) contact_res = std::max(contact_res, ax.max_residual);
  for (const auto& ax : sasakian.axioms) {
    if (ax.max_residual >= sasakian_res) {
      sasakian_res = ax.max_residual;
      worst = ax.worst_point;
    }
  }
  std::ostringstream os;
  os << "contact premise " << (contact.overall ? "holds" : "fails")
     << " (max residual " << contact_res << ")";
  run.note(os.str());
  Track t;
  t.max = contact.overall ? sasakian_res : 0.0;
  t.worst = worst;
  run.assert_max("kashiwada-implication", t, 10 * run.tol.one_deriv);
}

void suite_fd_crosscheck(SuiteRun& run, const Model& model,
                         const std::vector<Point>& pts) {
  std::vector<std::pair<std::string, const ScalarField*>> fields;
  auto add_metric = [&](const std::string& tag, const MetricField& g) {
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i; j < g.dim(); ++j)
        fields.push_back({tag, &g.component(i, j)});
  };
  auto add_endo = [&](const std::string& tag, const EndoField& e) {
    for (int i = 0; i < e.dim(); ++i)
      for (int j = 0; j < e.dim(); ++j)
        fields.push_back({tag, &e.component(i, j)});
  };
  const MetricField& g = metric_of(model);
  const MixedThreeStructure* S = structure_of(model);
  add_metric("g", g);
  if (S) {
    for (int a = 0; a < 3; ++a) {
      const std::string n = std::to_string(a + 1);
      add_endo("phi" + n, S->phi[a]);
      for (int i = 0; i < S->dim(); ++i) {
        fields.push_back({"xi" + n, &S->xi[a].component(i)});
        fields.push_back({"eta" + n, &S->eta[a].component(i)});
      }
    }
  } else if (auto* a = std::get_if<AmbientModel>(&model)) {
    for (int i = 0; i < 3; ++i) add_endo("J" + std::to_string(i + 1), a->J[i]);
  } else if (auto* p = std::get_if<ProductModel>(&model)) {
    for (int i = 0; i < 3; ++i) add_endo("J" + std::to_string(i + 1), p->J[i]);
  }

  Track fd;
  for (const auto& p : pts) {
    for (const auto& [tag, f] : fields) {
      const Jet2 j = (*f)(p);
      // Richardson extrapolation of the central-difference oracle: the
      // leading h^2 truncation term cancels between steps h and h/2, which
      // the stiffest chart-edge components need to meet the 1e-4 budget.
      const Jet2 o1 = fd_oracle(*f, p, 1e-3);
      const Jet2 o2 = fd_oracle(*f, p, 5e-4);
      const Jet2 o = (4.0 * o2 - o1) / 3.0;
      // relative per derivative order: err <= tol * (1 + |value|_inf)
      const double grad_rel = (j.grad - o.grad).lpNorm<Eigen::Infinity>() /
                              (1.0 + j.grad.lpNorm<Eigen::Infinity>());
      const double hess_rel = (j.hess - o.hess).lpNorm<Eigen::Infinity>() /
                              (1.0 + j.hess.lpNorm<Eigen::Infinity>());
      fd.upd(std::max(grad_rel, hess_rel), p.coords);
    }
  }
  run.assert_max("jet-vs-fd", fd, run.tol_for("jet-vs-fd", 1e-4));

  Track two_paths;
  for (const auto& p : pts) {
    auto pack = riemann(g, p);
    Frame frame = orthonormal_frame(pack.g0);
    two_paths.upd((ricci_frame(pack, frame) - pack.ricci).lpNorm<Eigen::Infinity>(),
                  p.coords);
  }
  run.assert_max("ricci-two-paths", two_paths, run.tol.algebraic);
}

}  // namespace

RunReport run_suite(const SuiteSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteRun run(spec);
  Model model = make_model(spec.model_key, spec.seed);
  ChartPtr chart = model_chart_ptr(model);
  if (spec.points < 1 || spec.vectors_per_point < 1)
    throw ConfigError("points and vectors must be positive");
  const std::vector<Point> pts = sample_points(chart, spec.points, spec.seed);
  SplitMix64 rng(spec.seed ^ kVectorStreamSalt);

  const std::string& id = spec.suite_id;
  if (id == "axioms") suite_axioms(run, model, pts);
  else if (id == "contact-class") suite_contact_class(run, model, pts);
  else if (id == "einstein") suite_einstein(run, model, pts);
  else if (id == "scalar") suite_scalar(run, model, pts);
  else if (id == "sectional") suite_sectional(run, model, pts, rng);
  else if (id == "lemma31") suite_lemma31(run, model, pts, rng);
  else if (id == "p-symmetry") suite_p_symmetry(run, model, pts, rng);
  else if (id == "ricci-xi") suite_ricci_xi(run, model, pts, rng);
  else if (id == "q-tensor") suite_q_tensor(run, model, pts, rng);
  else if (id == "domega") suite_domega(run, model, pts);
  else if (id == "nijenhuis") suite_nijenhuis(run, model, pts, rng);
  else if (id == "kashiwada") suite_kashiwada(run, model, pts);
  else if (id == "fd-crosscheck") suite_fd_crosscheck(run, model, pts);
  else throw ConfigError("unknown suite: " + id);

  run.finish();
  const auto t1 = std::chrono::steady_clock::now();
  run.report.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return run.report;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = spec.suite_id;
  j["model"] = spec.model_key;
  j["seed"] = spec.seed;
  j["points"] = spec.points;
  j["vectors"] = spec.vectors_per_point;
  j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : assertions) {
    nlohmann::ordered_json ja;
    ja["id"] = a.id;
    ja["residual"] = a.residual;
    ja["tol"] = a.tol;
    ja["pass"] = a.pass;
    ja["worst_point"] = nlohmann::ordered_json::array();
    for (int i = 0; i < a.worst_point.size(); ++i)
      ja["worst_point"].push_back(a.worst_point[i]);
    j["assertions"].push_back(std::move(ja));
  }
  j["cases"] = cases;
  j["skipped"] = skipped;
  j["notes"] = notes;
  j["pass"] = pass;
  j["wall_ms"] = wall_ms;
  return j;
}

std::string emit_report(const RunReport& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.to_json().dump(2) << "\n";
  } else if (format == "csv") {
    os << "suite,model,assertion,residual,tol,pass\n";
    for (const auto& a : r.assertions)
      os << r.spec.suite_id << "," << r.spec.model_key << "," << a.id << ","
         << a.residual << "," << a.tol << "," << (a.pass ? "true" : "false")
         << "\n";
  } else if (format == "text") {
    os << "suite " << r.spec.suite_id << " on " << r.spec.model_key << " (seed "
       << r.spec.seed << ", " << r.spec.points << " points, "
       << r.spec.vectors_per_point << " vectors/point)\n";
    for (const auto& a : r.assertions)
      os << "  [" << (a.pass ? "PASS" : "FAIL") << "] " << a.id
         << "  residual=" << a.residual << "  tol=" << a.tol << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    if (r.cases)
      os << "  cases=" << r.cases << " skipped=" << r.skipped << "\n";
    os << "  " << (r.pass ? "PASS" : "FAIL") << " (" << r.wall_ms << " ms)\n";
  } else {
    throw ConfigError("unknown report format: " + format);
  }
  return os.str();
}

std::vector<std::pair<std::string, std::string>> suite_registry() {
  return {
      {"axioms", "structure-defining algebraic identities of the model"},
      {"contact-class", "per-structure contact classification ladder"},
      {"domega", "exterior derivative of the fundamental 2-forms on the product"},
      {"einstein", "Ricci tensor proportional to the metric"},
      {"fd-crosscheck", "jet derivatives vs finite differences; Ricci two ways"},
      {"kashiwada", "contact identities imply the covariant-derivative identities"},
      {"lemma31", "curvature/phi exchange identity with the P tensor"},
      {"nijenhuis", "integrability of the product structures"},
      {"p-symmetry", "index symmetries of the P tensor"},
      {"q-tensor", "Q tensor closed form and frame-sum agreement"},
      {"ricci-xi", "Ricci contracted with the characteristic vector fields"},
      {"scalar", "constant scalar curvature"},
      {"sectional", "constant sectional curvature"},
  };
}

std::string list_models_text() {
  std::ostringstream os;
  for (const auto& [k, v] : model_registry()) os << k << "  " << v << "\n";
  return os.str();
}

std::string list_suites_text() {
  std::ostringstream os;
  for (const auto& [k, v] : suite_registry()) os << k << "  " << v << "\n";
  return os.str();
}

}  // namespace mixed3geo
