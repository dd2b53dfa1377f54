#include "mdirichlet/distribution.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mdirichlet {

namespace {

std::string format_cplx(cplx z) {
    std::ostringstream os;
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    }
    return os.str();
}

}  // namespace

Distribution Distribution::make(Impl impl) {
    return Distribution(std::make_shared<const Impl>(std::move(impl)));
}

cplx Distribution::moment(long long k) const {
    cplx v = impl_->moment(k);
    double bound = impl_->growth.at(k) * (1.0 + 1e-9) + 1e-300;
    if (std::abs(v) > bound) {
        std::ostringstream os;
        os << "moment growth certificate violated for '" << impl_->label << "' at k=" << k
           << ": |" << format_cplx(v) << "| > " << bound;
        throw std::logic_error(os.str());
    }
    if (impl_->flags.hermitian) {
        // hermitian symmetry is enforced structurally: mirror negative k.
        return v;
    }
    return v;
}

Distribution Distribution::lebesgue() {
    Impl impl;
    impl.moment = [](long long k) { return k == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0); };
    impl.growth = {0, 1.0};
    impl.flags = {true, true, true, true};
    impl.label = "lebesgue";
    impl.atoms = SpectralAtoms{cplx(1.0, 0.0), {}};
    return make(std::move(impl));
}

Distribution Distribution::point_mass(cplx location) {
    if (std::abs(std::abs(location) - 1.0) > 1e-12)
        throw std::invalid_argument("point_mass: location must have unit modulus");
    location /= std::abs(location);
    Impl impl;
    cplx w = location;
    impl.moment = [w](long long k) {
        // w^{-k} = conj(w)^k on the circle
        return std::pow(std::conj(w), static_cast<double>(k));
    };
    impl.growth = {0, 1.0};
    impl.flags = {true, true, true, false};
    impl.label = "point:" + format_cplx(location);
    impl.atoms = SpectralAtoms{cplx(0.0, 0.0), {{cplx(1.0, 0.0), location}}};
    return make(std::move(impl));
}

Distribution Distribution::binomial_weight(int order) {
    if (order < 0) throw std::invalid_argument("binomial_weight: order must be >= 0");
    Impl impl;
    int N = order;
    impl.moment = [N](long long k) {
        if (k < 0) return cplx(0.0, 0.0);
        return cplx(binom(k + N, N), 0.0);
    };
    // binom(k+N, N) = prod_j (k+j)/j <= (1+k)^N
    impl.growth = {order, 1.0};
    impl.flags = {false, false, false, false};
    impl.label = "binom:" + std::to_string(order);
    return make(std::move(impl));
}

Distribution Distribution::zero() {
    Impl impl;
    impl.moment = [](long long) { return cplx(0.0, 0.0); };
    impl.growth = {0, 0.0};
    impl.flags = {true, true, true, false};
    impl.label = "zero";
    impl.atoms = SpectralAtoms{};
    impl.structurally_zero = true;
    return make(std::move(impl));
}

Distribution Distribution::moment_window(std::string label, std::map<long long, cplx> window,
                                         DistributionFlags flags) {
    Impl impl;
    double constant = 0.0;
    int order = 0;
    for (const auto& [k, v] : window) {
        double mag = std::abs(v);
        constant = std::max(constant, mag / std::pow(1.0 + std::abs(static_cast<double>(k)), order));
    }
    auto win = std::make_shared<const std::map<long long, cplx>>(std::move(window));
    std::string lbl = label;
    impl.moment = [win, lbl](long long k) {
        auto it = win->find(k);
        if (it == win->end()) {
            throw std::out_of_range("moment window of '" + lbl + "' has no entry at k=" +
                                    std::to_string(k));
        }
        return it->second;
    };
    impl.growth = {order, constant * (1.0 + 1e-12)};
    impl.flags = flags;
    impl.label = std::move(label);
    return make(std::move(impl));
}

Distribution Distribution::from_oracle(std::string label, std::function<cplx(long long)> moment,
                                       GrowthBound growth, DistributionFlags flags) {
    Impl impl;
    impl.moment = std::move(moment);
    impl.growth = growth;
    impl.flags = flags;
    impl.label = std::move(label);
    return make(std::move(impl));
}

Distribution Distribution::linear_combination(
    const std::vector<std::pair<cplx, Distribution>>& terms) {
    Impl impl;
    auto parts = std::make_shared<const std::vector<std::pair<cplx, Distribution>>>(terms);
    impl.moment = [parts](long long k) {
        cplx acc(0.0, 0.0);
        for (const auto& [c, d] : *parts) acc += c * d.moment(k);
        return acc;
    };
    int order = 0;
    double constant = 0.0;
    bool hermitian = true, positive = true, finite = true, all_zero = true;
    bool szego = false;
    for (const auto& [c, d] : terms) {
        order = std::max(order, d.growth().order);
        constant += std::abs(c) * d.growth().constant;
        const auto& f = d.flags();
        bool real_coeff = (c.imag() == 0.0);
        hermitian = hermitian && f.hermitian && real_coeff;
        bool conic = real_coeff && c.real() >= 0.0;
        positive = positive && f.positive && conic;
        finite = finite && f.finite_measure;
        if (conic && c.real() > 0.0 && f.szego) szego = true;
        if (!(d.is_zero() || c == cplx(0.0, 0.0))) all_zero = false;
    }
    szego = szego && positive;
    impl.growth = {order, constant};
    impl.flags = {hermitian, positive, finite, szego};
    impl.structurally_zero = all_zero;

    std::ostringstream lbl;
    lbl << "lin:";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) lbl << "+";
        lbl << format_cplx(terms[i].first) << "*" << terms[i].second.label();
    }
    impl.label = lbl.str();

    SpectralAtoms atoms;
    bool atomic = true;
    for (const auto& [c, d] : terms) {
        if (!d.atoms()) {
            atomic = false;
            break;
        }
        atoms.lebesgue_weight += c * d.atoms()->lebesgue_weight;
        for (const auto& [w, loc] : d.atoms()->points) atoms.points.emplace_back(c * w, loc);
    }
    if (atomic) impl.atoms = std::move(atoms);
    return make(std::move(impl));
}

Distribution Distribution::derivative() const {
    if (impl_->structurally_zero) return zero();
    if (impl_->atoms && impl_->atoms->points.empty()) return zero();  // D of arc length vanishes
    Impl impl;
    auto inner = impl_;
    impl.moment = [inner](long long k) {
        return static_cast<double>(std::abs(k)) * inner->moment(k);
    };
    impl.growth = {impl_->growth.order + 1, impl_->growth.constant};
    impl.flags = {impl_->flags.hermitian, false, false, false};
    impl.label = "deriv:" + impl_->label;
    return make(std::move(impl));
}

Distribution Distribution::scaled(cplx c) const { return linear_combination({{c, *this}}); }

Distribution Distribution::real_part() const {
    Impl impl;
    auto inner = impl_;
    impl.moment = [inner](long long k) {
        return 0.5 * (inner->moment(k) + std::conj(inner->moment(-k)));
    };
    impl.growth = {impl_->growth.order, impl_->growth.constant};
    impl.flags = {true, false, impl_->flags.finite_measure, false};
    impl.label = "re:" + impl_->label;
    if (impl_->atoms) {
        SpectralAtoms atoms;
        atoms.lebesgue_weight = cplx(impl_->atoms->lebesgue_weight.real(), 0.0);
        for (const auto& [w, loc] : impl_->atoms->points)
            atoms.points.emplace_back(cplx(w.real(), 0.0), loc);
        impl.atoms = std::move(atoms);
    }
    return make(std::move(impl));
}

Distribution Distribution::imag_part() const {
    Impl impl;
    auto inner = impl_;
    const cplx half_over_i(0.0, -0.5);
    impl.moment = [inner, half_over_i](long long k) {
        return half_over_i * (inner->moment(k) - std::conj(inner->moment(-k)));
    };
    impl.growth = {impl_->growth.order, impl_->growth.constant};
    impl.flags = {true, false, impl_->flags.finite_measure, false};
    impl.label = "im:" + impl_->label;
    if (impl_->atoms) {
        SpectralAtoms atoms;
        atoms.lebesgue_weight = cplx(impl_->atoms->lebesgue_weight.imag(), 0.0);
        for (const auto& [w, loc] : impl_->atoms->points)
            atoms.points.emplace_back(cplx(w.imag(), 0.0), loc);
        impl.atoms = std::move(atoms);
    }
    return make(std::move(impl));
}

Distribution Distribution::without_atoms() const {
    Impl impl;
    auto inner = impl_;
    impl.moment = [inner](long long k) { return inner->moment(k); };
    impl.growth = impl_->growth;
    impl.flags = impl_->flags;
    impl.label = impl_->label;
    impl.atoms = std::nullopt;
    return make(std::move(impl));
}

Eigen::MatrixXcd toeplitz_truncation(const Distribution& mu, int size) {
    if (size < 1) throw std::invalid_argument("toeplitz_truncation: size must be positive");
    Eigen::MatrixXcd T(size, size);
    std::vector<cplx> diag(size);
    for (int d = 0; d < size; ++d) diag[d] = mu.moment(d);
    for (int j = 0; j < size; ++j) {
        for (int k = 0; k < size; ++k) {
            T(j, k) = k >= j ? diag[k - j] : std::conj(diag[j - k]);
        }
    }
    return T;
}

double positivity_probe(const Distribution& mu, int size) {
    if (!mu.flags().hermitian)
        throw std::invalid_argument("positivity_probe: '" + mu.label() + "' is not hermitian");
    Eigen::MatrixXcd T = toeplitz_truncation(mu, size);
    using MatLD = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
    MatLD Tl = T.cast<std::complex<long double>>();
    Eigen::SelfAdjointEigenSolver<MatLD> es(Tl, Eigen::EigenvaluesOnly);
    return static_cast<double>(es.eigenvalues().minCoeff());
}

cplx poisson_eval(const Distribution& mu, cplx z, double tol) {
    double r = std::abs(z);
    if (r >= 1.0) throw std::invalid_argument("poisson_eval: point must lie in the open disc");
    if (mu.is_zero()) return {0.0, 0.0};
    if (tol <= 0.0) throw std::invalid_argument("poisson_eval: tol must be positive");

    const auto& g = mu.growth();
    // find K with 2 * sum_{k>K} M (1+k)^N r^k < tol
    long long K = 8;
    while (2.0 * certified_power_tail(g.constant, r, g.order, K + 1) >= tol) {
        K *= 2;
        if (K > (1LL << 40))
            throw std::runtime_error("poisson_eval: certificate cannot reach tolerance");
    }
    KahanComplex acc;
    std::complex<long double> zp(1.0L, 0.0L);
    std::complex<long double> zl(z.real(), z.imag());
    acc.add(std::complex<long double>(mu.moment(0)));
    for (long long k = 1; k <= K; ++k) {
        zp *= zl;
        cplx mk = mu.moment(k);
        cplx mnk = mu.moment(-k);
        acc.add(std::complex<long double>(mk) * zp);
        acc.add(std::complex<long double>(mnk) * std::conj(zp));
    }
    auto v = acc.value();
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::pair<Distribution, Distribution> intercept_slope_convert(const Distribution& mu0,
                                                              const Distribution& mu1) {
    Distribution dm1 = mu1.derivative();
    if (dm1.is_zero()) return {mu0, mu1};
    // intercept moments: mu0(k) - |k| mu1(k) for k < 0, mu0(k) otherwise
    Distribution m0 = mu0;
    GrowthBound g{std::max(mu0.growth().order, dm1.growth().order),
                  mu0.growth().constant + dm1.growth().constant};
    auto oracle = [m0, dm1](long long k) {
        cplx v = m0.moment(k);
        if (k < 0) v -= dm1.moment(k);
        return v;
    };
    Distribution intercept = Distribution::from_oracle("intercept(" + mu0.label() + "," + mu1.label() + ")",
                                                       std::move(oracle), g, {});
    return {intercept, mu1};
}

}  // namespace mdirichlet
