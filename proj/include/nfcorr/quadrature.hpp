#ifndef NFCORR_QUADRATURE_HPP
#define NFCORR_QUADRATURE_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace nfcorr {

// Controls the per-aperture tensor Gauss-Legendre rule used by the
// near-field Kirchhoff integral and its node-doubling convergence ladder.
struct QuadratureSpec {
    int base_order = 24;     // GL nodes per axis per panel
    int refine_level = 1;    // extra panel splits near the emitter projection
    double tolerance = 1e-6; // relative, estimated by node doubling
    int max_doublings = 4;

    void validate() const;
};

// Estimated convergence state of one quadrature ladder.
struct QuadratureDiagnostics {
    double estimated_rel_error = 0.0;
    int final_order = 0;       // nodes per axis at acceptance
    long long evaluations = 0; // total integrand evaluations
    bool converged = false;
};

// Thrown when the node-doubling ladder fails to reach tolerance; carries
// the last two estimates so callers can judge how far off they are.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, std::complex<double> last,
                     std::complex<double> previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}

    std::complex<double> last_estimate;
    std::complex<double> previous_estimate;
};

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Nodes and weights of the n-point Gauss-Legendre rule, cached per thread.
const GaussLegendreRule& gauss_legendre(int n);

// Fixed-tree pairwise summation; the reduction order depends only on the
// element count, so results are reproducible regardless of who calls it.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

}  // namespace nfcorr

#endif
