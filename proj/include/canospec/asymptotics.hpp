#ifndef CANOSPEC_ASYMPTOTICS_HPP
#define CANOSPEC_ASYMPTOTICS_HPP

// Per-order asymptotic models: the exponents gamma_1 > gamma_2 > gamma_3
// of the two-term expansion of det A_alpha(mu), the second-order
// eigenvalue predictors, the alpha=3 delta_n law, and the minimal
// eigenvalue growth formula.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "canospec/order.hpp"
#include "canospec/precision.hpp"
#include "canospec/vandermonde.hpp"

namespace canospec {

template <class R>
struct AsymptoticModel {
    OperatorOrder order;
    std::vector<R> c; // cos(l pi/(2 alpha)), l = 1,3,..,2k-1 (odd alpha)
                      // or cos(j pi/alpha), j = 1..k-1 (even alpha)
    std::vector<R> s; // matching sines
    R sigma{};
    R gamma1{}, gamma2{}, gamma3{};
    R ratio{};            // -K2/K1 = 2/sin^2(pi/(2 alpha))
    R offset{};           // asymptotic base offset: 0 (odd) or pi/2 (even)
    int numerator_factor; // 2 for alpha >= 3, 1 for alpha = 2
};

template <class R>
AsymptoticModel<R> model(const OperatorOrder& order)
{
    using std::cos;
    using std::sin;
    using std::sqrt;
    if (order.alpha < 2)
        throw std::domain_error("model: alpha=1 has the exact spectrum (n pi)^2, no expansion");

    const R pi = pi_v<R>();
    AsymptoticModel<R> m;
    m.order = order;
    m.ratio = laplace_constants<R>(order).ratio;
    m.offset = order.even ? pi / R(2) : R(0);
    m.numerator_factor = order.alpha == 2 ? 1 : 2;

    const int k = order.k;
    if (order.even) {
        for (int j = 1; j <= k - 1; ++j) {
            m.c.push_back(cos(R(j) * pi / R(order.alpha)));
            m.s.push_back(sin(R(j) * pi / R(order.alpha)));
        }
        if (order.alpha == 2) {
            // degenerate k=1 case, read off det A_2 = 8(1 - cos mu cosh mu)
            m.sigma = R(1);
            m.gamma1 = R(1);
            m.gamma2 = R(0);
            m.gamma3 = R(-1);
        } else {
            m.sigma = R(1);
            for (int j = 1; j <= k - 2; ++j)
                m.sigma += R(2) * m.c[static_cast<std::size_t>(j - 1)];
            const R ck1 = m.c.back(); // c_{k-1}
            m.gamma1 = m.sigma + R(2) * ck1;
            m.gamma2 = m.sigma + ck1;
            m.gamma3 = m.sigma;
        }
    } else {
        for (int l = 1; l <= 2 * k - 1; l += 2) {
            m.c.push_back(cos(R(l) * pi / R(2 * order.alpha)));
            m.s.push_back(sin(R(l) * pi / R(2 * order.alpha)));
        }
        if (order.alpha == 3) {
            // degenerate k=1 case, read off the closed form (growth cosh(mu sqrt3))
            m.sigma = R(0);
            m.gamma1 = sqrt(R(3));
            m.gamma2 = sqrt(R(3)) / R(2);
            m.gamma3 = R(0);
        } else {
            m.sigma = R(0);
            for (int j = 1; j <= k - 2; ++j)
                m.sigma += R(2) * m.c[static_cast<std::size_t>(j - 1)]; // c_{2j-1}
            const R c3 = m.c[static_cast<std::size_t>(k - 2)]; // c_{2k-3}
            const R c1 = m.c[static_cast<std::size_t>(k - 1)]; // c_{2k-1}
            m.gamma1 = m.sigma + R(2) * c3 + R(2) * c1;
            m.gamma2 = m.sigma + R(2) * c3 + c1;
            m.gamma3 = m.sigma + c3 + R(2) * c1;
        }
    }
    return m;
}

// delta_n ~ 8 (-1)^{floor(n/2)+1} e^{-(pi sqrt3/2) n} for the odd-index
// alpha=3 roots.  Even n have delta_n = 0 exactly.
template <class R>
R predict_delta3(int n)
{
    using std::exp;
    using std::sqrt;
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("predict_delta3: n must be odd and >= 3 (delta is exactly 0 for even n)");
    const R mag = R(8) * exp(-(pi_v<R>() * sqrt(R(3)) / R(2)) * R(n));
    return ((n / 2) % 2 == 0) ? -mag : mag; // sign (-1)^{floor(n/2)+1}
}

template <class R>
struct MuPrediction {
    int n = 0;
    R base{};
    R correction{};
    R error_scale{};

    R value() const { return base + correction; }
};

template <class R>
MuPrediction<R> predict_mu(const OperatorOrder& order, int n)
{
    using std::cos;
    using std::sin;
    using std::exp;
    using std::sqrt;
    if (order.alpha < 2)
        throw std::domain_error("predict_mu: alpha=1 spectrum is exact, use spectrum1");
    if (n < 1)
        throw std::domain_error("predict_mu: n must be >= 1");

    const R pi = pi_v<R>();
    const R alpha = R(order.alpha);
    const R sin_half = sin(pi / (R(2) * alpha));
    const R amp = R(1) / (sin_half * sin_half);

    MuPrediction<R> p;
    p.n = n;
    if (order.even) {
        p.base = pi / R(2) + R(n) * pi;
        const R sign = (n % 2 == 0) ? R(-1) : R(1); // (-1)^{n+1}
        p.correction = R(order.alpha == 2 ? 1 : 2) * sign * amp *
                       exp(-p.base * sin(pi / alpha)) * cos(p.base * cos(pi / alpha));
        p.error_scale = exp(-R(2) * R(n) * pi * sin(pi / alpha));
    } else {
        p.base = R(n) * pi;
        if (order.alpha == 3) {
            // cos(pi/3) = 1/2 is rational: sin(n pi/2) vanishes exactly for
            // even n, and for odd n the stronger delta_n law applies.
            p.correction = (n % 2 == 0) ? R(0) : predict_delta3<R>(n);
            p.error_scale = exp(-R(n) * pi * sqrt(R(3)));
        } else {
            const R sign = (n % 2 == 0) ? R(1) : R(-1); // (-1)^n
            p.correction = R(2) * sign * amp * exp(-R(n) * pi * sin(pi / alpha)) *
                           sin(R(n) * pi * cos(pi / alpha));
            p.error_scale = exp(-R(n) * pi * sin(R(2) * pi / alpha));
        }
    }
    return p;
}

// lambda_min asymptotics sqrt(8 pi alpha) (4 alpha / e)^{2 alpha},
// evaluated in log form so large alpha cannot overflow.
template <class R>
R predict_lambda_min(int alpha)
{
    using std::exp;
    using std::log;
    if (alpha < 1)
        throw std::domain_error("predict_lambda_min: alpha must be >= 1");
    const R a = R(alpha);
    const R log_value = log(R(8) * pi_v<R>() * a) / R(2) + R(2) * a * (log(R(4) * a) - R(1));
    return exp(log_value);
}

// Asymptotic first index n_0 ~ 4 alpha / (pi e); a hint, not exact.
template <class R>
R predict_first_index(int alpha)
{
    using std::exp;
    if (alpha < 1)
        throw std::domain_error("predict_first_index: alpha must be >= 1");
    return R(4) * R(alpha) / (pi_v<R>() * exp(R(1)));
}

} // namespace canospec

#endif
