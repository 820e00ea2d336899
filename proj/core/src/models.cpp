#include "mixed3geo/models.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"
#include "mixed3geo/rng.hpp"

namespace mixed3geo {

namespace {

constexpr std::array<double, 3> kTau{-1.0, -1.0, +1.0};

// Ambient block data: G4 = diag(1,1,-1,-1); J3 = diag(j,-j) with j the 2x2
// rotation; J1 swaps the two 2-blocks; J2 = J1 J3.
MatD block_metric() {
  MatD g = MatD::Zero(4, 4);
  g.diagonal() << 1, 1, -1, -1;
  return g;
}

std::array<MatD, 3> block_structures() {
  MatD j1 = MatD::Zero(4, 4), j3 = MatD::Zero(4, 4);
  j1(0, 2) = j1(2, 0) = j1(1, 3) = j1(3, 1) = 1;
  j3(1, 0) = 1; j3(0, 1) = -1;
  j3(2, 3) = 1; j3(3, 2) = -1;
  return {j1, j1 * j3, j3};
}

struct AmbientData {
  int dim;
  MatD G0;
  std::array<MatD, 3> J0;
};

AmbientData ambient_data(int m) {
  const int dim = 4 * (m + 1);
  AmbientData out{dim, MatD::Zero(dim, dim), {}};
  const MatD g4 = block_metric();
  const auto j4 = block_structures();
  for (int a = 0; a < 3; ++a) out.J0[a] = MatD::Zero(dim, dim);
  for (int b = 0; b <= m; ++b) {
    out.G0.block<4, 4>(4 * b, 4 * b) = g4;
    for (int a = 0; a < 3; ++a) out.J0[a].block<4, 4>(4 * b, 4 * b) = j4[a];
  }
  return out;
}

std::vector<std::string> coord_names(const std::string& prefix, int dim) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Shared per-chart data for the graph-chart hypersurface. All induced
// tensor components are closed-form expressions in the free coordinates and
// w = x_{i0}, evaluated in jet arithmetic, so first and second derivatives
// of every component are exact.
struct HyperCore {
  int dim_amb, dim, s, i0;
  double solve_sign;
  VecD Gdiag;
  std::array<MatD, 3> J0;
  std::vector<int> amb;  // chart index -> ambient index

  struct Workspace {
    std::vector<Jet2> x;   // ambient embedding components
    std::vector<Jet2> wg;  // wg[a] = d_a w
  };

  Workspace eval(const std::vector<Jet2>& u) const {
    const double gii = Gdiag[i0];
    Jet2 radicand = Jet2::constant(gii * s, dim);
    for (int a = 0; a < dim; ++a)
      radicand = radicand - (gii * Gdiag[amb[a]]) * (u[a] * u[a]);
    const Jet2 w = solve_sign * sqrt(radicand);
    Workspace ws;
    ws.x.resize(dim_amb);
    for (int a = 0; a < dim; ++a) ws.x[amb[a]] = u[a];
    ws.x[i0] = w;
    ws.wg.reserve(dim);
    for (int a = 0; a < dim; ++a)
      ws.wg.push_back((-gii * Gdiag[amb[a]]) * (u[a] / w));
    return ws;
  }

  // eta^a(T_b) = G(J_a T_b, x), with T_b = e_{amb[b]} + w_b e_{i0}. The
  // normal part of J_a T_b is then s * eta^a(T_b) N. For s = +1 this is the
  // usual unit-sphere normalization; for s = -1 it flips (xi, eta) together,
  // which is the orientation that satisfies d eta^a = Phi_a.
  Jet2 eta_comp(const Workspace& ws, int a, int b) const {
    Jet2 acc = Jet2::constant(0.0, dim);
    for (int k = 0; k < dim_amb; ++k) {
      const double col_free = J0[a](k, amb[b]);
      const double col_solved = J0[a](k, i0);
      Jet2 jt = Jet2::constant(col_free, dim) + col_solved * ws.wg[b];
      acc = acc + Gdiag[k] * (jt * ws.x[k]);
    }
    return acc;
  }
};

using HyperCorePtr = std::shared_ptr<const HyperCore>;

MetricField induced_metric(const HyperCorePtr& core) {
  const int d = core->dim;
  std::vector<ScalarField> comps(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      comps[a * d + b] = ScalarField::from_expr(d, [core, a, b](const std::vector<Jet2>& u) {
        auto ws = core->eval(u);
        Jet2 out = core->Gdiag[core->i0] * (ws.wg[a] * ws.wg[b]);
        if (a == b) out = out + core->Gdiag[core->amb[a]];
        return out;
      });
  return MetricField(d, std::move(comps));
}

VectorField induced_xi(const HyperCorePtr& core, int a) {
  const int d = core->dim;
  std::vector<ScalarField> comps(d);
  for (int al = 0; al < d; ++al)
    comps[al] = ScalarField::from_expr(d, [core, a, al](const std::vector<Jet2>& u) {
      auto ws = core->eval(u);
      // xi_a = -s tau_a J_a x, read at the free ambient indices
      Jet2 acc = Jet2::constant(0.0, core->dim);
      for (int k = 0; k < core->dim_amb; ++k) {
        const double c = core->J0[a](core->amb[al], k);
        if (c != 0.0) acc = acc + c * ws.x[k];
      }
      return (-core->s * kTau[a]) * acc;
    });
  return VectorField(std::move(comps));
}

OneForm induced_eta(const HyperCorePtr& core, int a) {
  const int d = core->dim;
  std::vector<ScalarField> comps(d);
  for (int b = 0; b < d; ++b)
    comps[b] = ScalarField::from_expr(d, [core, a, b](const std::vector<Jet2>& u) {
      auto ws = core->eval(u);
      return core->eta_comp(ws, a, b);
    });
  return OneForm(std::move(comps));
}

EndoField induced_phi(const HyperCorePtr& core, int a) {
  const int d = core->dim;
  std::vector<ScalarField> comps(d * d);
  for (int al = 0; al < d; ++al)
    for (int b = 0; b < d; ++b)
      comps[al * d + b] =
          ScalarField::from_expr(d, [core, a, al, b](const std::vector<Jet2>& u) {
            auto ws = core->eval(u);
            // phi_a T_b = J_a T_b - s eta^a(T_b) N, free component al
            const int k = core->amb[al];
            Jet2 jt = Jet2::constant(core->J0[a](k, core->amb[b]), core->dim) +
                      core->J0[a](k, core->i0) * ws.wg[b];
            return jt - static_cast<double>(core->s) * (core->eta_comp(ws, a, b) * ws.x[k]);
          });
  return EndoField(d, std::move(comps));
}

ScalarField lift_field(const ScalarField& f, const ChartPtr& base_chart, int dim) {
  const int bd = f.dim();
  return ScalarField(dim, [f, base_chart, bd, dim](const Point& p) {
    Point q{base_chart, p.coords.head(bd)};
    Jet2 j = f(q);
    Jet2 out = Jet2::constant(j.val, dim);
    out.grad.head(bd) = j.grad;
    out.hess.topLeftCorner(bd, bd) = j.hess;
    return out;
  });
}

}  // namespace

AmbientModel flat_paraquaternionic(int m) {
  if (m < 0) throw ConfigError("flat_paraquaternionic: m must be >= 0");
  const AmbientData data = ambient_data(m);
  const int d = data.dim;
  auto chart = std::make_shared<Chart>("flat-pq:" + std::to_string(m),
                                       coord_names("x", d), VecD::Constant(d, -1.2),
                                       VecD::Constant(d, 1.2));
  AmbientModel out;
  out.m = m;
  out.chart = chart;
  out.G0 = data.G0;
  out.J0 = data.J0;
  out.G = MetricField::constant(d, data.G0);
  for (int a = 0; a < 3; ++a) out.J[a] = EndoField::constant(d, data.J0[a]);
  return out;
}

HypersurfaceModel pseudo_sphere_at(int m, int s, const VecD& ambient_point) {
  if (m < 1) throw ConfigError("pseudo_sphere: m must be >= 1");
  if (s != 1 && s != -1) throw ConfigError("pseudo_sphere: s must be +1 or -1");
  const AmbientData data = ambient_data(m);
  const int da = data.dim;
  if (ambient_point.size() != da)
    throw BadSeedPoint("pseudo_sphere_at: wrong ambient dimension");
  if (std::abs(ambient_point.dot(data.G0 * ambient_point) - s) > 1e-9)
    throw BadSeedPoint("pseudo_sphere_at: point not on the level set");

  // solve the ambient coordinate of largest |component| whose metric sign
  // matches s, so the radicand is positive around the seed
  int i0 = -1;
  double best = 0.0;
  for (int i = 0; i < da; ++i) {
    if (data.G0(i, i) != s) continue;
    if (std::abs(ambient_point[i]) > best) {
      best = std::abs(ambient_point[i]);
      i0 = i;
    }
  }
  if (i0 < 0 || best < 0.1)
    throw BadSeedPoint("pseudo_sphere_at: no usable solving coordinate");

  auto core = std::make_shared<HyperCore>();
  core->dim_amb = da;
  core->dim = da - 1;
  core->s = s;
  core->i0 = i0;
  core->solve_sign = ambient_point[i0] > 0 ? 1.0 : -1.0;
  core->Gdiag = data.G0.diagonal();
  core->J0 = data.J0;
  for (int i = 0; i < da; ++i)
    if (i != i0) core->amb.push_back(i);

  const int d = core->dim;
  VecD seed_chart(d), lo(d), hi(d);
  std::vector<std::string> names;
  for (int a = 0; a < d; ++a) {
    seed_chart[a] = ambient_point[core->amb[a]];
    lo[a] = seed_chart[a] - 0.3;
    hi[a] = seed_chart[a] + 0.3;
    names.push_back("u" + std::to_string(core->amb[a]));
  }
  const double gii = core->Gdiag[i0];
  const VecD gdiag = core->Gdiag;
  const auto amb = core->amb;
  Constraint radicand{"radicand", [gii, gdiag, amb, s, d](const VecD& u) {
                        double r = gii * s;
                        for (int a = 0; a < d; ++a)
                          r -= gii * gdiag[amb[a]] * u[a] * u[a];
                        return r;
                      }};
  auto chart = std::make_shared<Chart>(
      "pseudo-sphere:" + std::to_string(m) + ":" + (s > 0 ? "+1" : "-1"), names,
      lo, hi, std::vector<Constraint>{radicand});

  HypersurfaceModel out;
  out.m = m;
  out.s = s;
  out.sigma = -s;
  out.chart = chart;
  out.G0 = data.G0;
  out.J0 = data.J0;
  out.solve_index = i0;
  out.solve_sign = core->solve_sign;
  out.amb = core->amb;
  out.seed_ambient = ambient_point;
  out.S.g = induced_metric(core);
  for (int a = 0; a < 3; ++a) {
    out.S.phi[a] = induced_phi(core, a);
    out.S.xi[a] = induced_xi(core, a);
    out.S.eta[a] = induced_eta(core, a);
    out.S.epsilon[a] = kTau[a] * s;
  }
  out.S.sigma = out.sigma;
  return out;
}

HypersurfaceModel pseudo_sphere(int m, int s, std::uint64_t seed) {
  if (m < 1) throw ConfigError("pseudo_sphere: m must be >= 1");
  if (s != 1 && s != -1) throw ConfigError("pseudo_sphere: s must be +1 or -1");
  const AmbientData data = ambient_data(m);
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    VecD y(data.dim);
    for (int i = 0; i < data.dim; ++i) y[i] = rng.uniform(-1.0, 1.0);
    const double q = s * y.dot(data.G0 * y);
    if (q <= 0.04) continue;
    VecD x = y / std::sqrt(q);
    try {
      return pseudo_sphere_at(m, s, x);
    } catch (const BadSeedPoint&) {
      continue;
    }
  }
  throw BadSeedPoint("pseudo_sphere: no usable seed point after 1000 draws");
}

VecD HypersurfaceModel::embed(const Point& p) const {
  auto jets = embed_jets(p);
  VecD out(static_cast<int>(jets.size()));
  for (size_t i = 0; i < jets.size(); ++i) out[static_cast<int>(i)] = jets[i].val;
  return out;
}

std::vector<Jet2> HypersurfaceModel::embed_jets(const Point& p) const {
  const int d = chart->dim();
  const int da = d + 1;
  auto u = coordinate_jets(p);
  const double gii = G0(solve_index, solve_index);
  Jet2 radicand = Jet2::constant(gii * s, d);
  for (int a = 0; a < d; ++a)
    radicand = radicand - (gii * G0(amb[a], amb[a])) * (u[a] * u[a]);
  std::vector<Jet2> x(da);
  for (int a = 0; a < d; ++a) x[amb[a]] = u[a];
  x[solve_index] = solve_sign * sqrt(radicand);
  return x;
}

ProductModel product_with_line(std::shared_ptr<const HypersurfaceModel> base) {
  const int bd = base->chart->dim();
  const int d = bd + 1;
  {
    auto probe = sample_points(base->chart, 4, 1234);
    if (!validate_mixed_3_contact(base->S, probe).overall)
      throw ConfigError("product_with_line: base is not mixed 3-contact");
  }
  const double sigma = base->sigma;

  VecD lo(d), hi(d);
  lo.head(bd) = base->chart->lo();
  hi.head(bd) = base->chart->hi();
  lo[bd] = -1.0;
  hi[bd] = 1.0;
  auto names = base->chart->coord_names();
  names.push_back("t");
  std::vector<Constraint> constraints;
  for (const auto& c : base->chart->constraints())
    constraints.push_back(Constraint{c.name, [fn = c.fn, bd](const VecD& u) {
                                       return fn(u.head(bd));
                                     }});
  auto chart = std::make_shared<Chart>("product:" + base->chart->id(), names, lo,
                                       hi, std::move(constraints));

  auto lift = [&](const ScalarField& f) { return lift_field(f, base->chart, d); };

  ProductModel out;
  out.base = base;
  out.chart = chart;
  out.sigma = sigma;

  std::vector<ScalarField> gc(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i < bd && j < bd)
        gc[i * d + j] = lift(base->S.g.component(i, j));
      else if (i == bd && j == bd)
        gc[i * d + j] = ScalarField::constant(d, -sigma);
      else
        gc[i * d + j] = ScalarField::constant(d, 0.0);
    }
  out.G = MetricField(d, std::move(gc));

  for (int a = 0; a < 3; ++a) {
    std::vector<ScalarField> jc(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i < bd && j < bd)
          jc[i * d + j] = lift(base->S.phi[a].component(i, j));
        else if (i < bd && j == bd)
          jc[i * d + j] = -kTau[a] * lift(base->S.xi[a].component(i));
        else if (i == bd && j < bd)
          jc[i * d + j] = lift(base->S.eta[a].component(j));
        else
          jc[i * d + j] = ScalarField::constant(d, 0.0);
      }
    out.J[a] = EndoField(d, std::move(jc));

    TwoFormField omega(d);
    TwoFormField phi2 = fundamental_2form_field(base->S.g, base->S.phi[a]);
    for (int i = 0; i < bd; ++i) {
      for (int j = i + 1; j < bd; ++j) omega.packed(i, j) = lift(phi2.packed(i, j));
      omega.packed(i, bd) = sigma * lift(base->S.eta[a].component(i));
    }
    out.Omega[a] = omega;
  }
  return out;
}

FlatMixedModel flat_mixed(int m) {
  if (m < 1) throw ConfigError("flat_mixed: m must be >= 1");
  const int hdim = 4 * m;
  const int d = hdim + 3;
  const std::array<double, 3> eps{-1.0, -1.0, +1.0};

  MatD g0 = MatD::Zero(d, d);
  const MatD g4 = block_metric();
  const auto j4 = block_structures();
  std::array<MatD, 3> f0;
  for (int a = 0; a < 3; ++a) f0[a] = MatD::Zero(d, d);
  for (int b = 0; b < m; ++b) {
    g0.block<4, 4>(4 * b, 4 * b) = g4;
    for (int a = 0; a < 3; ++a) f0[a].block<4, 4>(4 * b, 4 * b) = j4[a];
  }
  for (int a = 0; a < 3; ++a) g0(hdim + a, hdim + a) = eps[a];
  // vertical action: phi_a(xi_b) = tau_b xi_c, phi_b(xi_a) = -tau_a xi_c
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    f0[a](hdim + c, hdim + b) = kTau[b];
    f0[b](hdim + c, hdim + a) = -kTau[a];
  }

  auto chart = std::make_shared<Chart>("flat-mixed:" + std::to_string(m),
                                       coord_names("x", d), VecD::Constant(d, -1.2),
                                       VecD::Constant(d, 1.2));
  FlatMixedModel out;
  out.m = m;
  out.chart = chart;
  out.S.g = MetricField::constant(d, g0);
  for (int a = 0; a < 3; ++a) {
    out.S.phi[a] = EndoField::constant(d, f0[a]);
    out.S.xi[a] = VectorField::constant(d, VecD::Unit(d, hdim + a));
    out.S.eta[a] = OneForm::constant(d, VecD::Unit(d, hdim + a));
    out.S.epsilon[a] = eps[a];
  }
  out.S.sigma = -1.0;
  return out;
}

Model make_model(const std::string& key, std::uint64_t seed) {
  auto parse_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      throw ConfigError("bad model key: " + key);
    }
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      const size_t pos = s.find(':', start);
      if (pos == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
    return parts;
  };
  const auto parts = split(key);
  if (parts.size() == 2 && parts[0] == "flat-pq")
    return flat_paraquaternionic(parse_int(parts[1]));
  if (parts.size() == 2 && parts[0] == "flat-mixed")
    return flat_mixed(parse_int(parts[1]));
  if (parts.size() == 3 && parts[0] == "pseudo-sphere")
    return pseudo_sphere(parse_int(parts[1]), parse_int(parts[2]), seed);
  if (parts.size() == 4 && parts[0] == "product" && parts[1] == "pseudo-sphere") {
    auto base = std::make_shared<HypersurfaceModel>(
        pseudo_sphere(parse_int(parts[2]), parse_int(parts[3]), seed));
    return product_with_line(base);
  }
  throw ConfigError("unknown model key: " + key);
}

std::vector<std::pair<std::string, std::string>> model_registry() {
  return {
      {"flat-mixed:1", "flat R^{4,3} with constant mixed metric 3-structure tensors"},
      {"flat-pq:1", "flat paraquaternionic R^{4,4} with constant (J_a, G)"},
      {"product:pseudo-sphere:1:+1", "pseudo-sphere:1:+1 x R product model"},
      {"product:pseudo-sphere:1:-1", "pseudo-sphere:1:-1 x R product model"},
      {"pseudo-sphere:1:+1", "dim-7 pseudo-sphere, negative mixed 3-Sasakian"},
      {"pseudo-sphere:1:-1", "dim-7 pseudo-hyperbolic space, positive mixed 3-Sasakian"},
  };
}

const Chart& model_chart(const Model& model) { return *model_chart_ptr(model); }

ChartPtr model_chart_ptr(const Model& model) {
  return std::visit([](const auto& m) { return m.chart; }, model);
}

}  // namespace mixed3geo
