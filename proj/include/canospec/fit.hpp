#ifndef CANOSPEC_FIT_HPP
#define CANOSPEC_FIT_HPP

// Small least-squares helpers: a straight-line fit and the two-term
// exponential-trigonometric fit that recovers -K2/K1 from samples of the
// normalized determinant.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "canospec/asymptotics.hpp"
#include "canospec/order.hpp"
#include "canospec/precision.hpp"
#include "canospec/spectral_matrix.hpp"

namespace canospec {

template <class R>
struct LineFit {
    R slope{};
    R intercept{};
};

template <class R>
LineFit<R> fit_line(const std::vector<R>& x, const std::vector<R>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need at least two matching samples");
    const R n = R(static_cast<int>(x.size()));
    R sx(0), sy(0), sxx(0), sxy(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const R det = n * sxx - sx * sx;
    if (det == R(0))
        throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit<R> f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy * sxx - sx * sxy) / det;
    return f;
}

// Fit F(mu) ~ A * trig(mu) + B * e^{-(gamma1-gamma2) mu} * trig(s mu)
// over a grid and return -B/A, the numeric estimate of -K2/K1.
// trig is sin for odd alpha, cos for even alpha; s = cos(pi/alpha).
template <class R>
R fit_laplace_ratio(const OperatorOrder& order, const R& mu_lo, const R& mu_hi, const R& step,
                    int precision_bits)
{
    using std::cos;
    using std::sin;
    using std::exp;
    if (order.alpha < 4)
        throw std::domain_error("fit_laplace_ratio: the two-term expansion needs alpha >= 4");
    if (!(R(0) < mu_lo && mu_lo < mu_hi) || !(step > R(0)))
        throw std::invalid_argument("fit_laplace_ratio: bad window");

    const auto m = model<R>(order);
    const R decay = m.gamma1 - m.gamma2;
    const R s = cos(pi_v<R>() / R(order.alpha));
    const auto phase = calibrate_det_phase<R>(order, precision_bits);

    // 2x2 normal equations for the basis (b1, b2)
    R a11(0), a12(0), a22(0), r1(0), r2(0);
    for (R mu = mu_lo; mu <= mu_hi; mu += step) {
        const R y = normalized_real_det(order, mu, precision_bits, phase);
        const R b1 = order.even ? cos(mu) : sin(mu);
        const R b2 = exp(-decay * mu) * (order.even ? cos(s * mu) : sin(s * mu));
        a11 += b1 * b1;
        a12 += b1 * b2;
        a22 += b2 * b2;
        r1 += b1 * y;
        r2 += b2 * y;
    }
    const R det = a11 * a22 - a12 * a12;
    if (det == R(0))
        throw std::runtime_error("fit_laplace_ratio: singular normal equations");
    const R A = (r1 * a22 - r2 * a12) / det;
    const R B = (a11 * r2 - a12 * r1) / det;
    if (A == R(0))
        throw std::runtime_error("fit_laplace_ratio: vanishing leading coefficient");
    return -B / A;
}

} // namespace canospec

#endif
