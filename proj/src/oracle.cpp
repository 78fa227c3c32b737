#include "tunnelsplit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "tunnelsplit/error.hpp"
#include "tunnelsplit/numeric/quadrature.hpp"

namespace tunnelsplit {
namespace {

using ld = long double;

constexpr double kPairWindow = 0.25;
constexpr int kMaxInverseIterations = 8;

// LU of a tridiagonal matrix with partial pivoting, LAPACK gttrf layout.
struct TridiagonalLu {
  std::vector<ld> dl, d, du, du2;
  std::vector<char> swapped;

  TridiagonalLu(const GridHamiltonian& h, ld shift) {
    const int n = h.N;
    d.resize(n);
    for (int i = 0; i < n; ++i) d[i] = h.diagonal[i] - shift;
    dl.assign(n - 1, h.off_diagonal);
    du.assign(n - 1, h.off_diagonal);
    du2.assign(n > 2 ? n - 2 : 0, 0.0L);
    swapped.assign(n - 1, 0);
    ld scale = std::fabs(h.off_diagonal);
    for (ld v : h.diagonal) scale = std::max(scale, std::fabs(v));
    const ld tiny = scale * std::numeric_limits<ld>::epsilon();
    for (int i = 0; i + 1 < n; ++i) {
      if (std::fabs(d[i]) >= std::fabs(dl[i])) {
        if (d[i] == 0.0L) d[i] = tiny;
        const ld f = dl[i] / d[i];
        dl[i] = f;
        d[i + 1] -= f * du[i];
      } else {
        const ld f = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = f;
        const ld t = du[i];
        du[i] = d[i + 1];
        d[i + 1] = t - f * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -f * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    if (d[n - 1] == 0.0L) d[n - 1] = tiny;
  }

  void solve(std::vector<ld>& b) const {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const ld t = b[i];
        b[i] = b[i + 1];
        b[i + 1] = t - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

ld norm2(const std::vector<ld>& v) {
  ld s = 0.0L;
  for (ld x : v) s += x * x;
  return std::sqrt(s);
}

ld residual(const GridHamiltonian& h, const std::vector<ld>& v, ld lambda) {
  const int n = h.N;
  ld worst = 0.0L;
  for (int i = 0; i < n; ++i) {
    ld r = (h.diagonal[i] - lambda) * v[i];
    if (i > 0) r += h.off_diagonal * v[i - 1];
    if (i + 1 < n) r += h.off_diagonal * v[i + 1];
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

ld kth_eigenvalue(const GridHamiltonian& h, int k, ld lo, ld hi) {
  for (int it = 0; it < 200; ++it) {
    const ld mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(h, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5L * (lo + hi);
}

// Simpson-free trapezoid of f over grid nodes with x >= 0 (right) or x <= 0.
double half_line_integral(const SpectrumResult& s, const std::vector<double>& f, bool right) {
  double sum = 0.0;
  for (int i = 0; i + 1 < s.N; ++i) {
    const double x0 = s.x(i), x1 = s.x(i + 1);
    if (right ? x1 <= 0.0 : x0 >= 0.0) continue;
    double a = x0, b = x1, fa = f[i], fb = f[i + 1];
    const double cross = (0.0 - x0) / (x1 - x0);
    if (x0 < 0.0 && x1 > 0.0) {
      const double f0 = f[i] + cross * (f[i + 1] - f[i]);
      if (right) {
        a = 0.0;
        fa = f0;
      } else {
        b = 0.0;
        fb = f0;
      }
    }
    sum += 0.5 * (fa + fb) * (b - a);
  }
  return sum;
}

// Five-point Lagrange value and slope at x0.
std::pair<double, double> value_and_slope(const SpectrumResult& s, const std::vector<double>& f,
                                          double x0) {
  int c = static_cast<int>(std::lround((x0 - s.x_min) / s.dx));
  c = std::clamp(c, 2, s.N - 3);
  double xs[5], w[5], dw[5];
  for (int j = 0; j < 5; ++j) xs[j] = s.x(c - 2 + j);
  for (int j = 0; j < 5; ++j) {
    double denom = 1.0, prod = 1.0, dsum = 0.0;
    for (int k = 0; k < 5; ++k) {
      if (k == j) continue;
      denom *= xs[j] - xs[k];
      prod *= x0 - xs[k];
    }
    for (int k = 0; k < 5; ++k) {
      if (k == j) continue;
      double p = 1.0;
      for (int m = 0; m < 5; ++m)
        if (m != j && m != k) p *= x0 - xs[m];
      dsum += p;
    }
    w[j] = prod / denom;
    dw[j] = dsum / denom;
  }
  double v = 0.0, d = 0.0;
  for (int j = 0; j < 5; ++j) {
    v += w[j] * f[c - 2 + j];
    d += dw[j] * f[c - 2 + j];
  }
  return {v, d};
}

void check_grid_size(int N) {
  if (N < kMinGridSize) {
    std::ostringstream os;
    os << "grid size " << N << " below the minimum " << kMinGridSize;
    throw Error(ErrorKind::invalid_input, os.str());
  }
}

}  // namespace

GridDomain default_domain(const PotentialModel& model, int N, double margin) {
  check_grid_size(N);
  const double lho = model.units().oscillator_length();
  const double left = -model.left_minimum() + margin * lho;
  const double right = model.right_minimum() + margin * lho;
  int i0 = static_cast<int>(std::lround((N - 1) * left / (left + right)));
  i0 = std::clamp(i0, 1, N - 2);
  const double dx = std::max(left / i0, right / (N - 1 - i0));
  return {-i0 * dx, (N - 1 - i0) * dx};
}

GridHamiltonian build_grid_hamiltonian(const std::function<double(double)>& potential,
                                       const Units& units, const GridDomain& domain, int N) {
  units.validate();
  check_grid_size(N);
  if (!(domain.x_max > domain.x_min) || !std::isfinite(domain.x_min) || !std::isfinite(domain.x_max))
    throw Error(ErrorKind::invalid_input, "grid domain must be a finite non-empty interval");
  GridHamiltonian h;
  h.x_min = domain.x_min;
  h.x_max = domain.x_max;
  h.N = N;
  h.dx = (domain.x_max - domain.x_min) / (N - 1);
  h.units = units;
  const ld kin = static_cast<ld>(units.hbar) * units.hbar / (static_cast<ld>(units.mass) * h.dx * h.dx);
  h.off_diagonal = -0.5L * kin;
  h.diagonal.resize(N);
  for (int i = 0; i < N; ++i) {
    const double v = potential(h.x(i));
    if (!std::isfinite(v)) throw Error(ErrorKind::numerical, "potential is not finite on the grid");
    h.diagonal[i] = kin + v;
  }
  return h;
}

GridHamiltonian build_grid_hamiltonian(const PotentialModel& model, const GridDomain& domain, int N) {
  const double lho = model.units().oscillator_length();
  const double need_left = model.left_minimum() - kDefaultMargin * lho;
  const double need_right = model.right_minimum() + kDefaultMargin * lho;
  const double slack = 1e-9 * lho;
  if (domain.x_min > need_left + slack || domain.x_max < need_right - slack) {
    std::ostringstream os;
    os << "grid domain [" << domain.x_min << ", " << domain.x_max << "] must extend to ["
       << need_left << ", " << need_right << "] (8 oscillator lengths beyond the minima)";
    throw Error(ErrorKind::configuration, os.str());
  }
  return build_grid_hamiltonian([&](double x) { return model.value(x); }, model.units(), domain, N);
}

int count_below(const GridHamiltonian& h, ld E) {
  const ld e2 = h.off_diagonal * h.off_diagonal;
  const ld tiny = std::numeric_limits<ld>::min() / std::numeric_limits<ld>::epsilon();
  int count = 0;
  ld q = 1.0L;
  for (int i = 0; i < h.N; ++i) {
    q = (h.diagonal[i] - E) - (i > 0 ? e2 / q : 0.0L);
    if (q == 0.0L) q = -tiny;
    if (q < 0.0L) ++count;
  }
  return count;
}

double SpectrumResult::orthonormality_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < eigenvectors.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      long double s = 0.0L;
      for (int k = 0; k < N; ++k) s += static_cast<ld>(eigenvectors[i][k]) * eigenvectors[j][k];
      const double v = static_cast<double>(s * dx) - (i == j ? 1.0 : 0.0);
      worst = std::max(worst, std::fabs(v));
    }
  return worst;
}

SpectrumResult eigen_lowest(const GridHamiltonian& h, int count, bool with_vectors) {
  if (count < 1) throw Error(ErrorKind::invalid_input, "eigenvalue count must be positive");
  if (count > h.N / 4) {
    std::ostringstream os;
    os << "requested " << count << " eigenvalues but at most N/4 = " << h.N / 4 << " are resolved";
    throw Error(ErrorKind::precondition, os.str());
  }
  SpectrumResult s;
  s.x_min = h.x_min;
  s.dx = h.dx;
  s.N = h.N;
  s.units = h.units;

  const ld off = std::fabs(h.off_diagonal);
  ld lo = h.diagonal[0], hi = h.diagonal[0];
  for (ld v : h.diagonal) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  lo -= 2.0L * off + 1.0L;
  hi += 2.0L * off + 1.0L;

  std::vector<ld> lambdas(count);
  ld floor = lo;
  for (int k = 0; k < count; ++k) {
    lambdas[k] = kth_eigenvalue(h, k, floor, hi);
    floor = lambdas[k] - 16.0L * std::numeric_limits<ld>::epsilon() * std::fabs(lambdas[k]) - 1e-30L;
    floor = std::max(lo, floor);
  }
  for (int k = 0; k < count; ++k) {
    s.eigenvalues.push_back(static_cast<double>(lambdas[k]));
    if (k > 0 && !(s.eigenvalues[k] > s.eigenvalues[k - 1])) {
      std::ostringstream os;
      os << "eigenvalues " << k - 1 << " and " << k << " coincide in double precision ("
         << s.eigenvalues[k] << "); doublet unresolved on this grid";
      throw Error(ErrorKind::numerical, os.str());
    }
  }
  if (!with_vectors) return s;

  const ld scale = hi - lo;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uni(0.5, 1.5);
  std::vector<std::vector<ld>> basis;
  for (int k = 0; k < count; ++k) {
    const TridiagonalLu lu(h, lambdas[k]);
    std::vector<ld> v(h.N);
    for (auto& x : v) x = uni(rng);
    ld res = 0.0L;
    bool done = false;
    for (int it = 0; it < kMaxInverseIterations && !done; ++it) {
      lu.solve(v);
      for (const auto& u : basis) {
        ld dot = 0.0L;
        for (int i = 0; i < h.N; ++i) dot += u[i] * v[i];
        for (int i = 0; i < h.N; ++i) v[i] -= dot * u[i];
      }
      const ld nv = norm2(v);
      if (!(nv > 0.0L) || !std::isfinite(static_cast<double>(nv)))
        throw Error(ErrorKind::numerical, "inverse iteration collapsed");
      for (auto& x : v) x /= nv;
      res = residual(h, v, lambdas[k]);
      done = it >= 1 && res <= 1e-12L * scale;
    }
    if (!done) {
      std::ostringstream os;
      os << "inverse iteration stagnated for level index " << k << " (residual "
         << static_cast<double>(res) << ")";
      throw Error(ErrorKind::numerical, os.str());
    }
    basis.push_back(v);
  }
  const ld inv_sqrt_dx = 1.0L / std::sqrt(static_cast<ld>(h.dx));
  for (const auto& v : basis) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
    const ld f = (v[imax] < 0 ? -1.0L : 1.0L) * inv_sqrt_dx;
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<double>(v[i] * f);
    s.eigenvectors.push_back(std::move(out));
  }
  return s;
}

std::pair<int, int> pair_doublet(SpectrumResult& spectrum, const WellParameters& params, int l) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  const double q = params.units.quantum();
  const double centre = (l + params.n + 0.5 + 0.5 * params.epsilon) * q;
  std::vector<int> hits;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    if (std::fabs(spectrum.eigenvalues[i] - centre) <= kPairWindow * q) hits.push_back(static_cast<int>(i));
  if (hits.size() != 2) {
    std::ostringstream os;
    os << hits.size() << " eigenvalues within " << kPairWindow << " hbar omega of " << centre
       << " for level " << l << ", expected a doublet";
    throw Error(ErrorKind::pairing, os.str());
  }
  spectrum.pairs[l] = {hits[0], hits[1]};
  return spectrum.pairs[l];
}

OracleSplitting oracle_splitting(const PotentialModel& model, int l, const OracleOptions& opts) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  OracleSplitting r;
  r.l = l;
  r.params = extract_well_parameters(model);
  const double q = r.params.units.quantum();
  const double centre = (l + r.params.n + 0.5 + 0.5 * r.params.epsilon) * q;
  const GridHamiltonian h =
      build_grid_hamiltonian(model, default_domain(model, opts.N, opts.margin), opts.N);
  const int count = count_below(h, static_cast<ld>(centre + kPairWindow * q));
  if (count < 2) {
    std::ostringstream os;
    os << "only " << count << " eigenvalues below the pairing window of level " << l;
    throw Error(ErrorKind::pairing, os.str());
  }
  r.spectrum = eigen_lowest(h, count);
  std::tie(r.index_lower, r.index_upper) = pair_doublet(r.spectrum, r.params, l);
  r.E_lower = r.spectrum.eigenvalues[r.index_lower];
  r.E_upper = r.spectrum.eigenvalues[r.index_upper];
  r.gap = r.E_upper - r.E_lower;
  return r;
}

LocalizedStates localized_states(const SpectrumResult& spectrum, int l) {
  const auto it = spectrum.pairs.find(l);
  if (it == spectrum.pairs.end())
    throw Error(ErrorKind::precondition, "no doublet recorded for this level");
  const auto& lower = spectrum.eigenvectors.at(it->second.first);
  const auto& upper = spectrum.eigenvectors.at(it->second.second);
  const double c = 1.0 / std::sqrt(2.0);

  LocalizedStates best;
  best.right_mass = -1.0;
  for (int sigma : {1, -1}) {
    LocalizedStates st;
    st.l = l;
    st.sigma = sigma;
    st.psi_R.resize(spectrum.N);
    st.psi_L.resize(spectrum.N);
    for (int i = 0; i < spectrum.N; ++i) {
      st.psi_R[i] = c * (lower[i] + sigma * upper[i]);
      st.psi_L[i] = c * (lower[i] - sigma * upper[i]);
    }
    std::vector<double> sq(spectrum.N);
    for (int i = 0; i < spectrum.N; ++i) sq[i] = st.psi_R[i] * st.psi_R[i];
    st.right_mass = half_line_integral(spectrum, sq, true);
    if (st.right_mass > best.right_mass) best = std::move(st);
  }
  if (best.right_mass <= 0.9) {
    std::ostringstream os;
    os << "doublet of level " << l << " does not separate into localized states (right mass "
       << best.right_mass << ")";
    throw Error(ErrorKind::degeneracy_structure, os.str());
  }
  std::vector<double> f(spectrum.N);
  for (int i = 0; i < spectrum.N; ++i) f[i] = best.psi_L[i] * best.psi_L[i];
  best.left_mass = half_line_integral(spectrum, f, false);
  for (int i = 0; i < spectrum.N; ++i) f[i] = best.psi_L[i] * best.psi_R[i];
  best.overlap = half_line_integral(spectrum, f, true);
  std::tie(best.psi_R0, best.dpsi_R0) = value_and_slope(spectrum, best.psi_R, 0.0);
  std::tie(best.psi_L0, best.dpsi_L0) = value_and_slope(spectrum, best.psi_L, 0.0);
  return best;
}

double wronskian_splitting(const LocalizedStates& s, const Units& units) {
  units.validate();
  return units.hbar * units.hbar / units.mass *
         std::fabs(s.psi_L0 * s.dpsi_R0 - s.psi_R0 * s.dpsi_L0);
}

int node_count(const SpectrumResult& spectrum, const std::vector<double>& psi, double x1, double x2) {
  if (x2 < x1) std::swap(x1, x2);
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::fabs(v));
  const double floor = 1e-12 * peak;
  int nodes = 0, last = 0;
  for (int i = 0; i < spectrum.N; ++i) {
    const double x = spectrum.x(i);
    if (x < x1 || x > x2) continue;
    if (std::fabs(psi[i]) < floor) continue;
    const int sg = psi[i] > 0 ? 1 : -1;
    if (last != 0 && sg != last) ++nodes;
    last = sg;
  }
  return nodes;
}

ForbiddenAmplitudes forbidden_amplitudes(const PotentialModel& model, const SpectrumResult& spectrum,
                                         const LocalizedStates& states, const WellParameters& params) {
  const auto it = spectrum.pairs.find(states.l);
  if (it == spectrum.pairs.end())
    throw Error(ErrorKind::precondition, "no doublet recorded for this level");
  const double E = 0.5 * (spectrum.eigenvalues[it->second.first] + spectrum.eigenvalues[it->second.second]);
  const TurningPoints tp = turning_points(params, states.l);
  const Units& u = params.units;

  ForbiddenAmplitudes out;
  out.x_from = 0.5 * tp.left;
  out.x_to = 0.5 * tp.right;
  auto p = [&](double x) {
    const double r = 2.0 * u.mass * (model.value(x) - E);
    if (!(r > 0)) throw Error(ErrorKind::not_a_barrier, "fit region is not classically forbidden");
    return std::sqrt(r);
  };

  // Each amplitude is fitted on the side of x = 0 where its state grows; the
  // partner's small admixture decays there instead of swamping it.
  const int i0 = static_cast<int>(std::lround(-spectrum.x_min / spectrum.dx));
  const int lo = static_cast<int>(std::ceil((out.x_from - spectrum.x_min) / spectrum.dx));
  const int hi = static_cast<int>(std::floor((out.x_to - spectrum.x_min) / spectrum.dx));
  if (i0 - lo < 4 || hi - i0 < 4)
    throw Error(ErrorKind::precondition, "forbidden region spans too few grid points");

  numeric::QuadratureOptions q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  auto fit = [&](int from, int to, const std::vector<double>& psi, int sign) {
    const int stride = std::max(1, (to - from) / 20);
    std::vector<double> v;
    for (int i = from; i <= to; i += stride) {
      const double x = spectrum.x(i);
      const double action = (i == i0 ? 0.0 : numeric::integrate(p, 0.0, x, q).value) / u.hbar;
      v.push_back(psi[i] * std::sqrt(p(x)) * std::exp(-sign * action));
    }
    return v;
  };
  const std::vector<double> nr = fit(i0, hi, states.psi_R, 1);
  const std::vector<double> nl = fit(lo, i0, states.psi_L, -1);
  auto summarize = [](const std::vector<double>& v, double& mean, double& spread) {
    mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    spread = (*mx - *mn) / std::fabs(mean);
  };
  summarize(nr, out.N_R, out.spread_R);
  summarize(nl, out.N_L, out.spread_L);
  out.splitting = 2.0 * u.hbar / u.mass * std::fabs(out.N_L * out.N_R);
  return out;
}

double harmonic_overlap(const SpectrumResult& spectrum, const LocalizedStates& states,
                        const WellParameters& params) {
  const int k = states.l + params.n;
  const double lho = params.oscillator_length();
  const double norm0 = std::pow(3.14159265358979323846, -0.25) / std::sqrt(lho);
  long double sum = 0.0L;
  for (int i = 0; i < spectrum.N; ++i) {
    const double xi = (spectrum.x(i) - params.b) / lho;
    double prev = 0.0, cur = norm0 * std::exp(-0.5 * xi * xi);
    for (int j = 0; j < k; ++j) {
      const double next = std::sqrt(2.0 / (j + 1)) * xi * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
      prev = cur;
      cur = next;
    }
    sum += static_cast<long double>(cur) * states.psi_R[i];
  }
  return std::fabs(static_cast<double>(sum * spectrum.dx));
}

RichardsonResult richardson(const std::function<double(int)>& value_at_size, int N) {
  check_grid_size(N);
  RichardsonResult r;
  r.coarse = value_at_size(N);
  r.medium = value_at_size(2 * N - 1);
  r.fine = value_at_size(4 * N - 3);
  r.ratio = (r.coarse - r.medium) / (r.medium - r.fine);
  r.extrapolated = r.fine + (r.fine - r.medium) / 3.0;
  r.error_estimate = std::fabs(r.coarse - r.extrapolated);
  return r;
}

}  // namespace tunnelsplit
