#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "tunnelsplit/exact_vd.hpp"
#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/wkb.hpp"

using namespace tunnelsplit;

namespace {

PotentialModel unit_quartic(double eta) {
  return PotentialModel::quartic_tilt(1.0 / (8 * eta * eta), eta, 0.0, {});
}

SpectrumResult harmonic_spectrum(int N, int count = 5) {
  const auto h = build_grid_hamiltonian([](double x) { return 0.5 * x * x; }, {}, {-12.0, 12.0}, N);
  return eigen_lowest(h, count);
}

}  // namespace

TEST_CASE("harmonic spectrum carries the second-order stencil shift") {
  const auto s = harmonic_spectrum(4096);
  const double dx = 24.0 / 4095;
  for (int k = 0; k < 5; ++k) {
    // <p^4> in the k-th oscillator state is 3 (2k^2 + 2k + 1) / 4.
    const double shift = -dx * dx * (2.0 * k * k + 2.0 * k + 1.0) / 32.0;
    CAPTURE(k);
    CHECK(s.eigenvalues[k] - (k + 0.5) == doctest::Approx(shift).epsilon(1e-3));
  }
}

// The ground-state shift is dx^2 / 32 = 1.07e-6 at N = 4096 on [-12, 12].
TEST_CASE("harmonic spectrum within 1e-6" * doctest::may_fail()) {
  const auto s = harmonic_spectrum(4096);
  for (int k = 0; k < 3; ++k) {
    CAPTURE(k);
    CHECK(std::fabs(s.eigenvalues[k] - (k + 0.5)) < 1e-6);
  }
}

TEST_CASE("harmonic eigenvectors") {
  const auto s = harmonic_spectrum(4096, 6);
  CHECK(s.orthonormality_residual() < 1e-8);
  for (int k = 0; k < 6; ++k) {
    CAPTURE(k);
    CHECK(node_count(s, s.eigenvectors[k], s.x(0), s.x(s.N - 1)) == k);
    CHECK(*std::max_element(s.eigenvectors[k].begin(), s.eigenvectors[k].end()) > 0.0);
  }
  for (std::size_t k = 1; k < s.eigenvalues.size(); ++k)
    CHECK(s.eigenvalues[k] > s.eigenvalues[k - 1]);
}

TEST_CASE("particle in a box") {
  const double L = M_PI;
  const int N = 1024;
  const auto h = build_grid_hamiltonian([](double) { return 0.0; }, {}, {0.0, L}, N);
  const auto s = eigen_lowest(h, 4, false);
  // The grid ends are the outermost unknowns; the walls sit one spacing beyond them.
  const double dx = h.dx, box = (N + 1) * dx;
  for (int k = 1; k <= 4; ++k) {
    const double sn = std::sin(k * M_PI / (2.0 * (N + 1)));
    const double discrete = 2.0 * sn * sn / (dx * dx);
    const double continuum = k * k * M_PI * M_PI / (2 * box * box);
    CHECK(s.eigenvalues[k - 1] == doctest::Approx(discrete).epsilon(1e-12));
    CHECK(std::fabs(s.eigenvalues[k - 1] - continuum) < continuum * k * k * dx * dx);
  }
}

TEST_CASE("richardson ratio shows second order") {
  const auto r = richardson(
      [](int N) {
        const auto h =
            build_grid_hamiltonian([](double x) { return 0.5 * x * x; }, {}, {-12.0, 12.0}, N);
        return eigen_lowest(h, 1, false).eigenvalues[0];
      },
      1024);
  CHECK(r.ratio == doctest::Approx(4.0).epsilon(0.2));
  CHECK(std::fabs(r.extrapolated - 0.5) < 1e-8);
}

TEST_CASE("input checks") {
  const auto q = unit_quartic(5.0);
  CHECK_ERROR_KIND(build_grid_hamiltonian(q, {-6.0, 6.0}, 4096), ErrorKind::configuration);
  const auto h = build_grid_hamiltonian([](double x) { return x * x; }, {}, {-5.0, 5.0}, 256);
  CHECK_ERROR_KIND(eigen_lowest(h, 65), ErrorKind::precondition);
  CHECK_ERROR_KIND(build_grid_hamiltonian([](double x) { return x; }, {}, {-5.0, 5.0}, 100),
                   ErrorKind::invalid_input);
  auto s = harmonic_spectrum(1024);
  WellParameters p;
  p.a = p.b = 5.0;
  p.barrier_height = 10.0;
  CHECK_ERROR_KIND(pair_doublet(s, p, 0), ErrorKind::pairing);
}

TEST_CASE("symmetric quartic doublet") {
  const auto q = unit_quartic(6.0);
  const auto o = oracle_splitting(q, 0);
  const auto& s = o.spectrum;
  CHECK(o.index_lower == 0);
  CHECK(o.index_upper == 1);
  CHECK(o.E_lower == doctest::Approx(0.5).epsilon(0.05));
  CHECK(s.orthonormality_residual() < 1e-8);

  const auto st = localized_states(s, 0);
  CHECK(st.right_mass >= 0.99);
  CHECK(st.right_mass <= 1.0 + 1e-12);
  CHECK(st.left_mass >= 0.99);
  CHECK(std::fabs(st.overlap) < 1e-3);

  // Mirror symmetry: the grid is symmetric about the node at 0.
  const int i0 = static_cast<int>(std::lround(-s.x_min / s.dx));
  REQUIRE(std::fabs(s.x(i0)) < 1e-12);
  double worst = 0.0;
  for (int j = -i0; j <= i0; ++j)
    worst = std::max(worst, std::fabs(st.psi_R[i0 + j] - st.psi_L[i0 - j]));
  CHECK(worst < 1e-6);

  const double w = wronskian_splitting(st, q.units());
  CHECK(rel_diff(w, o.gap) < 0.05);
  LocalizedStates swapped = st;
  std::swap(swapped.psi_R0, swapped.psi_L0);
  std::swap(swapped.dpsi_R0, swapped.dpsi_L0);
  CHECK(wronskian_splitting(swapped, q.units()) == w);
  CHECK(wronskian_splitting(st, {1.0, 0.5, 1.0}) == doctest::Approx(2 * w).epsilon(1e-15));

  const auto tp = turning_points(o.params, 0);
  CHECK(node_count(s, s.eigenvectors[0], tp.left, tp.right) == 0);
  CHECK(node_count(s, s.eigenvectors[1], tp.left, tp.right) == 1);

  const auto amp = forbidden_amplitudes(q, s, st, o.params);
  CHECK(rel_diff(amp.splitting, o.gap) < 0.10);
}

// The quartic well departs from a parabola within a few oscillator lengths; the
// overlap reaches 0.993 at separation 10 and 0.995 at 12.
TEST_CASE("right-localized state matches the oscillator state on the quartic" *
          doctest::may_fail()) {
  for (double eta : {5.0, 6.0}) {
    const auto o = oracle_splitting(unit_quartic(eta), 0);
    const auto st = localized_states(o.spectrum, 0);
    const double ov = harmonic_overlap(o.spectrum, st, o.params);
    MESSAGE("eta ", eta, " overlap ", ov);
    CHECK(ov > 0.999);
  }
}

TEST_CASE("right-localized state matches the oscillator state on the piecewise well") {
  const auto m = VdParameters::from_alpha(4.0, 0, 0.0, {}).model();
  const auto o = oracle_splitting(m, 0);
  const auto st = localized_states(o.spectrum, 0);
  CHECK(harmonic_overlap(o.spectrum, st, o.params) > 0.999);
}

TEST_CASE("grid convergence") {
  const std::vector<PotentialModel> models = {
      unit_quartic(5.0), unit_quartic(5.5), unit_quartic(6.0),
      VdParameters::from_alpha(4.0, 0, 0.0, {}).model()};
  for (const auto& m : models) {
    OracleOptions fine;
    fine.N = 8192;
    const double a = oracle_splitting(m, 0).gap;
    const double b = oracle_splitting(m, 0, fine).gap;
    CHECK(rel_diff(a, b) < 1e-3);
  }
}

TEST_CASE("one-quantum resonance pairs left level l with right level l+1") {
  const auto p = VdParameters::from_alpha(4.0, 1, 0.0, {});
  OracleOptions opts;
  opts.N = 65536;
  const auto o = oracle_splitting(p.model(), 0, opts);
  CHECK(o.index_lower == 1);
  CHECK(o.index_upper == 2);
  CHECK(o.E_lower == doctest::Approx(1.5).epsilon(0.01));
  const auto lv = vd_eigenlevels(p, 0);
  CHECK(rel_diff(o.gap, lv.gap()) < 0.01);
  const auto st = localized_states(o.spectrum, 0);
  CHECK(rel_diff(wronskian_splitting(st, p.units), o.gap) < 0.10);
  const auto tp = turning_points(o.params, 0);
  CHECK(node_count(o.spectrum, o.spectrum.eigenvectors[o.index_lower], tp.left, tp.right) == 0);
  CHECK(node_count(o.spectrum, o.spectrum.eigenvectors[o.index_upper], tp.left, tp.right) == 1);
  const auto amp = forbidden_amplitudes(p.model(), o.spectrum, st, o.params);
  CHECK(rel_diff(amp.splitting, o.gap) < 0.10);
}
