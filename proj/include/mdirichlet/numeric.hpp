#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mdirichlet {

using cplx = std::complex<double>;

// Compensated accumulator. The double-sum evaluators add up to ~1e9 terms;
// a long double carry keeps the rounding error near eps_ld * sum|t|.
template <typename T>
class KahanSum {
public:
    void add(T term) {
        T y = term - carry_;
        T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T carry_{};
};

class KahanComplex {
public:
    void add(std::complex<long double> term) {
        re_.add(term.real());
        im_.add(term.imag());
    }
    std::complex<long double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum<long double> re_;
    KahanSum<long double> im_;
};

// binom(k, n) for small fixed n and possibly large k, exact while the
// product stays inside the long double mantissa.
inline long double binom_ld(long long k, int n) {
    if (n < 0 || k < n) return 0.0L;
    long double acc = 1.0L;
    for (int i = 0; i < n; ++i) acc *= static_cast<long double>(k - i) / static_cast<long double>(i + 1);
    return acc;
}

inline double binom(long long k, int n) { return static_cast<double>(binom_ld(k, n)); }

inline double factorial(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// Certified upper bound for sum_{k >= from} (1+k)^p * A * rho^k, 0 <= rho < 1.
// Terms are added until the ratio test gives a convergent geometric majorant
// for the remainder.
inline double certified_power_tail(double A, double rho, int p, long long from) {
    if (A == 0.0 || rho == 0.0) {
        return (from == 0 && p >= 0) ? A : (from <= 0 ? A : 0.0);
    }
    if (rho >= 1.0) throw std::invalid_argument("certified_power_tail: rho must be < 1");
    long double sum = 0.0L;
    long double term = A * std::pow(1.0L + static_cast<long double>(from), p) *
                       std::pow(static_cast<long double>(rho), static_cast<long double>(from));
    long long k = from;
    for (;;) {
        double q = rho * std::pow(1.0 + 1.0 / static_cast<double>(k + 2), p);
        if (q < 0.9) {
            sum += term / (1.0L - static_cast<long double>(q));
            break;
        }
        sum += term;
        ++k;
        term *= rho * std::pow((1.0L + k) / static_cast<long double>(k), p);
        if (k > from + 10'000'000) throw std::runtime_error("certified_power_tail: no convergence");
    }
    return static_cast<double>(sum) * (1.0 + 1e-12);
}

// Deterministic RNG helpers. std::uniform_real_distribution is not pinned
// across standard libraries, so doubles are produced from raw bits.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // xorshift64* — fixed algorithm, identical stream everywhere.
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    cplx unit_circle() {
        double t = uniform(0.0, 2.0 * pi());
        return {std::cos(t), std::sin(t)};
    }

    static constexpr double pi() { return 3.14159265358979323846; }

private:
    std::uint64_t state_;
};

// Gauss–Legendre nodes/weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(DeterministicRng::pi() * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

// In-place radix-2 FFT, sign = -1 forward / +1 inverse (unscaled).
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * DeterministicRng::pi() / static_cast<double>(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace mdirichlet
