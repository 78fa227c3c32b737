#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tunnelsplit/potential.hpp"

namespace tunnelsplit {

struct GridDomain {
  double x_min = 0.0;
  double x_max = 0.0;
};

// Second-order finite-difference Hamiltonian on N equally spaced points with
// psi = 0 one spacing beyond each end.
struct GridHamiltonian {
  double x_min = 0.0;
  double x_max = 0.0;
  int N = 0;
  double dx = 0.0;
  std::vector<long double> diagonal;  // hbar^2 / (m dx^2) + V(x_i)
  long double off_diagonal = 0.0L;    // -hbar^2 / (2 m dx^2)
  Units units;

  double x(int i) const { return x_min + i * dx; }
};

inline constexpr int kMinGridSize = 256;
inline constexpr int kDefaultGridSize = 4096;
inline constexpr double kDefaultMargin = 8.0;  // in oscillator lengths

// [-a - margin, b + margin] widened slightly so that x = 0 is a grid node.
GridDomain default_domain(const PotentialModel& model, int N = kDefaultGridSize,
                          double margin = kDefaultMargin);

// Throws configuration if the domain leaves less than 8 l_ho beyond a minimum.
GridHamiltonian build_grid_hamiltonian(const PotentialModel& model, const GridDomain& domain,
                                       int N = kDefaultGridSize);
// Arbitrary potential, no margin check.
GridHamiltonian build_grid_hamiltonian(const std::function<double(double)>& potential,
                                       const Units& units, const GridDomain& domain, int N);

// Number of eigenvalues below E.
int count_below(const GridHamiltonian& h, long double E);

struct SpectrumResult {
  double x_min = 0.0;
  double dx = 0.0;
  int N = 0;
  Units units;
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // sum psi_i^2 dx = 1, largest entry positive
  std::map<int, std::pair<int, int>> pairs;       // level l -> (lower, upper) indices

  double x(int i) const { return x_min + i * dx; }
  // max |<psi_i|psi_j> - delta_ij|.
  double orthonormality_residual() const;
};

// Lowest `count` eigenpairs; count <= N/4.
SpectrumResult eigen_lowest(const GridHamiltonian& h, int count, bool with_vectors = true);

// Finds the two eigenvalues within 0.25 hbar omega of (l + n + 1/2 + eps/2) hbar
// omega and records them in spectrum.pairs. Throws pairing otherwise.
std::pair<int, int> pair_doublet(SpectrumResult& spectrum, const WellParameters& params, int l);

struct OracleOptions {
  int N = kDefaultGridSize;
  double margin = kDefaultMargin;
};

struct OracleSplitting {
  int l = 0;
  WellParameters params;
  int index_lower = 0;
  int index_upper = 0;
  double E_lower = 0.0;
  double E_upper = 0.0;
  double gap = 0.0;
  SpectrumResult spectrum;  // eigenpairs up to index_upper
};

OracleSplitting oracle_splitting(const PotentialModel& model, int l, const OracleOptions& opts = {});

struct LocalizedStates {
  int l = 0;
  std::vector<double> psi_R;  // (psi_lower + sigma psi_upper) / sqrt2
  std::vector<double> psi_L;  // (psi_lower - sigma psi_upper) / sqrt2
  int sigma = 1;
  double right_mass = 0.0;  // int_0^inf psi_R^2
  double left_mass = 0.0;   // int_-inf^0 psi_L^2
  double overlap = 0.0;     // int_0^inf psi_L psi_R
  double psi_R0 = 0.0, dpsi_R0 = 0.0, psi_L0 = 0.0, dpsi_L0 = 0.0;
};

// Throws degeneracy_structure if neither sign puts 90% of psi_R at x > 0.
LocalizedStates localized_states(const SpectrumResult& spectrum, int l);

// (hbar^2 / m) |psi_L(0) psi_R'(0) - psi_R(0) psi_L'(0)|.
double wronskian_splitting(const LocalizedStates& states, const Units& units);

// Sign changes of psi on [x1, x2], ignoring entries below 1e-12 max|psi|.
int node_count(const SpectrumResult& spectrum, const std::vector<double>& psi, double x1, double x2);

// Fit of psi_R = N_R p^-1/2 exp(int_0^x p/hbar) and psi_L = N_L p^-1/2
// exp(-int_0^x p/hbar) over the central half of the forbidden region, psi_R
// on x >= 0 and psi_L on x <= 0.
struct ForbiddenAmplitudes {
  double N_R = 0.0;
  double N_L = 0.0;
  double spread_R = 0.0;  // relative max deviation over the fit points
  double spread_L = 0.0;
  double splitting = 0.0;  // 2 (hbar/m) |N_L N_R|
  double x_from = 0.0;
  double x_to = 0.0;
};
ForbiddenAmplitudes forbidden_amplitudes(const PotentialModel& model, const SpectrumResult& spectrum,
                                         const LocalizedStates& states, const WellParameters& params);

// |<psi_R | phi_{l+n}(x - b)>| with phi_k the harmonic eigenfunction.
double harmonic_overlap(const SpectrumResult& spectrum, const LocalizedStates& states,
                        const WellParameters& params);

// Values on spacings dx, dx/2, dx/4 (grid sizes N, 2N-1, 4N-3).
struct RichardsonResult {
  double coarse = 0.0;
  double medium = 0.0;
  double fine = 0.0;
  double ratio = 0.0;         // (coarse - medium) / (medium - fine), 4 for second order
  double extrapolated = 0.0;  // fine + (fine - medium) / 3
  double error_estimate = 0.0;  // |coarse - extrapolated|, the error at N
};
RichardsonResult richardson(const std::function<double(int)>& value_at_size, int N);

}  // namespace tunnelsplit
