#include "hjls/selftest.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "hjls/errors.hpp"
#include "hjls/integrator.hpp"
#include "hjls/reachability.hpp"
#include "hjls/snapshot_io.hpp"
#include "hjls/spatial.hpp"
#include "hjls/term.hpp"

namespace hjls {

namespace {

double max_derivative_error(DerivativeScheme s, std::size_t n) {
  const Grid g = create_grid({-std::numbers::pi}, {std::numbers::pi}, {n}, {0});
  const auto f = sample(g, [](std::span<const double> x) { return std::sin(x[0]); });
  const auto d = upwind_derivative(s, g, f, 0);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = std::cos(g.axis_nodes(0)[i]);
    err = std::max({err, std::abs(d.left[i] - exact), std::abs(d.right[i] - exact)});
  }
  return err;
}

CheckResult check_order(DerivativeScheme s, double expected) {
  const double e40 = max_derivative_error(s, 40);
  const double e80 = max_derivative_error(s, 80);
  const double e160 = max_derivative_error(s, 160);
  const double r1 = std::log2(e40 / e80);
  const double r2 = std::log2(e80 / e160);
  std::ostringstream os;
  os << "observed orders " << r1 << ", " << r2 << " (expected " << expected << " +/- 0.4)";
  return {"order of accuracy: " + std::string(scheme_name(s)),
          std::abs(r1 - expected) <= 0.4 && std::abs(r2 - expected) <= 0.4, os.str()};
}

CheckResult check_weno_weights() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<double, 5> d{};
    for (auto& x : d) x = u(rng);
    const auto ws = weno_weights(d);
    worst = std::max(worst, std::abs(ws.w[0] + ws.w[1] + ws.w[2] - 1.0));
  }
  std::ostringstream os;
  os << "max |sum w - 1| = " << worst;
  return {"WENO weights sum to one", worst <= 1e-14, os.str()};
}

CheckResult check_rk_algebra() {
  const double lambda = -0.8;
  const double dt = 0.1;
  const ScalarField y0({1}, 1.0);
  SchemeFunction term = [lambda](double, const ScalarField& y) {
    TermOutput out{ScalarField(y.shape()), INFINITY, false};
    out.delta[0] = lambda * y[0];
    return out;
  };
  IntegratorOptions opts;
  opts.max_step = dt;
  const double z = lambda * dt;
  const std::array<double, 3> taylor{1 + z, 1 + z + z * z / 2, 1 + z + z * z / 2 + z * z * z / 6};
  double worst = 0.0;
  for (int order = 1; order <= 3; ++order) {
    const auto r = ode_cfl(order, term, {0.0, dt}, y0, opts);
    worst = std::max(worst, std::abs(r.y_final[0] - taylor[order - 1]));
  }
  std::ostringstream os;
  os << "max deviation from Taylor polynomials " << worst;
  return {"TVD-RK stage algebra", worst <= 1e-14, os.str()};
}

CheckResult check_max_principle() {
  const std::size_t n = 100;
  const Grid g = create_grid({0.0}, {1.0}, {n}, {0});
  auto v = sample(g, [](std::span<const double> x) { return x[0] > 0.25 && x[0] < 0.5 ? 1.0 : 0.0; });
  const double lo = v.min_value();
  const double hi = v.max_value();
  const auto scheme = lax_friedrichs_scheme(g, linear_advection_term({1.0}, DerivativeScheme::First));
  IntegratorOptions opts;
  opts.single_step = true;
  bool ok = true;
  double t = 0.0;
  for (int k = 0; k < 200 && ok; ++k) {
    auto r = ode_cfl_1(scheme, {t, 1e9}, v, opts);
    v = std::move(r.y_final);
    t = r.t_final;
    ok = v.min_value() >= lo && v.max_value() <= hi;
  }
  return {"max principle (1-d advection)", ok, ok ? "range preserved over 200 steps" : "range violated"};
}

CheckResult check_hamiltonian() {
  const RocketParams q;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-64, 64), th(-std::numbers::pi, std::numbers::pi), ps(-5, 5);
  double worst_hom = 0.0;
  double worst_dense = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::array<double, 3> s{xs(rng), xs(rng), th(rng)};
    const std::array<double, 3> p{ps(rng), ps(rng), ps(rng)};
    const std::array<double, 3> p2{2 * p[0], 2 * p[1], 2 * p[2]};
    worst_hom = std::max(worst_hom, std::abs(rockets_hamiltonian_at(s, p2, q) - 2 * rockets_hamiltonian_at(s, p, q)));
    worst_hom = std::max(worst_hom, std::abs(rockets_hamiltonian_oracle(0, s, p2, q) -
                                             2 * rockets_hamiltonian_oracle(0, s, p, q)));
    worst_dense = std::max(worst_dense, std::abs(rockets_hamiltonian_oracle(0, s, p, q) -
                                                 rockets_hamiltonian_dense(s, p, q, 21)));
  }
  std::ostringstream os;
  os << "homogeneity " << worst_hom << ", corners vs dense " << worst_dense;
  return {"rockets Hamiltonian homogeneity and corner enumeration", worst_hom <= 1e-12 && worst_dense <= 1e-9,
          os.str()};
}

CheckResult check_small_brt() {
  auto problem = make_rockets_problem(11, 0.3, 3);
  const auto res = solve_brt(problem);
  bool nested = res.snapshots.size() == 4;
  for (std::size_t k = 1; nested && k < res.snapshots.size(); ++k) {
    for (std::size_t i = 0; i < res.snapshots[k].size(); ++i) {
      if (res.snapshots[k][i] > res.snapshots[k - 1][i]) {
        nested = false;
        break;
      }
    }
  }
  return {"BRT tube nesting (11^3 grid)", nested, std::to_string(res.snapshots.size()) + " snapshots"};
}

CheckResult check_round_trip() {
  const Grid g = create_grid({0, 0}, {1, 1}, {5, 7});
  const auto f = sample(g, [](std::span<const double> x) { return std::exp(x[0]) - x[1] / 3.0; });
  const auto path = std::filesystem::temp_directory_path() / "hjls_selftest_roundtrip.f64";
  export_field(f, g, path);
  const auto back = import_field(path);
  std::filesystem::remove(path);
  return {"snapshot round trip", back == f, "bit-identical"};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  auto guarded = [&out](auto&& fn, const char* name) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };
  const std::array<std::pair<DerivativeScheme, double>, 4> orders{
      {{DerivativeScheme::First, 1.0}, {DerivativeScheme::Eno2, 2.0}, {DerivativeScheme::Eno3, 3.0},
       {DerivativeScheme::Weno5, 5.0}}};
  for (auto [s, k] : orders) guarded([s = s, k = k] { return check_order(s, k); }, "order of accuracy");
  guarded(check_weno_weights, "WENO weights");
  guarded(check_rk_algebra, "TVD-RK stage algebra");
  guarded(check_max_principle, "max principle");
  guarded(check_hamiltonian, "rockets Hamiltonian");
  guarded(check_small_brt, "BRT nesting");
  guarded(check_round_trip, "snapshot round trip");
  return out;
}

}  // namespace hjls
