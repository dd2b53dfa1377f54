#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdirichlet/numeric.hpp"

namespace mdirichlet {

// Moment growth certificate: |moment(k)| <= constant * (1+|k|)^order.
struct GrowthBound {
    int order = 0;
    double constant = 1.0;

    double at(long long k) const {
        return constant * std::pow(1.0 + std::abs(static_cast<double>(k)), order);
    }
};

struct DistributionFlags {
    bool hermitian = false;
    bool positive = false;        // caller-asserted; finite sections must stay PSD
    bool finite_measure = false;
    bool szego = false;           // log-integrable absolutely continuous part
};

// Exact atomic structure, when the distribution is a finite combination of
// normalized arc length and unit point masses. Enables the reorganized
// (suffix-sum) evaluation path in the dirichlet module.
struct SpectralAtoms {
    cplx lebesgue_weight{0.0, 0.0};
    std::vector<std::pair<cplx, cplx>> points;  // (weight, unit-modulus location)
};

// A distribution on the unit circle represented by its Fourier moment oracle
// moment(k), together with a growth certificate and caller-supplied flags.
// Immutable after construction.
class Distribution {
public:
    Distribution() : Distribution(zero()) {}

    // Returns the k-th Fourier moment; every evaluation is checked against
    // the growth certificate.
    cplx moment(long long k) const;

    const GrowthBound& growth() const noexcept { return impl_->growth; }
    const DistributionFlags& flags() const noexcept { return impl_->flags; }
    const std::string& label() const noexcept { return impl_->label; }
    const std::optional<SpectralAtoms>& atoms() const noexcept { return impl_->atoms; }
    bool is_zero() const noexcept { return impl_->structurally_zero; }

    // Builders.
    static Distribution lebesgue();                       // moments delta_{k,0}
    static Distribution point_mass(cplx location);        // |location| = 1, moments location^{-k}
    static Distribution binomial_weight(int order);       // Poisson extension (1-z)^{-(order+1)}
    static Distribution zero();
    static Distribution moment_window(std::string label, std::map<long long, cplx> window,
                                      DistributionFlags flags);
    static Distribution from_oracle(std::string label, std::function<cplx(long long)> moment,
                                    GrowthBound growth, DistributionFlags flags);
    static Distribution linear_combination(const std::vector<std::pair<cplx, Distribution>>& terms);

    Distribution derivative() const;  // moments |k| * moment(k)
    Distribution scaled(cplx c) const;
    Distribution real_part() const;   // Poisson extension Re(P)
    Distribution imag_part() const;   // Poisson extension Im(P)

    // Test helper: same oracle and certificate, atomic structure hidden, so
    // the generic double-sum path is forced downstream.
    Distribution without_atoms() const;

private:
    struct Impl {
        std::function<cplx(long long)> moment;
        GrowthBound growth;
        DistributionFlags flags;
        std::string label;
        std::optional<SpectralAtoms> atoms;
        bool structurally_zero = false;
    };

    explicit Distribution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static Distribution make(Impl impl);

    std::shared_ptr<const Impl> impl_;
};

// Finite Toeplitz section with entries [j,k] = moment(k - j).
Eigen::MatrixXcd toeplitz_truncation(const Distribution& mu, int size);

// Minimum eigenvalue of the size x size Toeplitz section. Requires the
// hermitian flag. A strictly negative value refutes positivity.
double positivity_probe(const Distribution& mu, int size);

// Poisson extension at |z| < 1, certified within tol by the growth bound.
cplx poisson_eval(const Distribution& mu, cplx z, double tol = 1e-12);

// From the pair (mu0, mu1) of a rank-two model, produce the equivalent
// (intercept, slope) pair: slope = mu1, intercept = mu0 - Q(D mu1), where Q
// keeps the strictly anti-analytic moments (k < 0).
std::pair<Distribution, Distribution> intercept_slope_convert(const Distribution& mu0,
                                                              const Distribution& mu1);

}  // namespace mdirichlet
