#ifndef CANOSPEC_SPECTRAL_MATRIX_HPP
#define CANOSPEC_SPECTRAL_MATRIX_HPP

// Characteristic matrix A_alpha(mu) of the clamped eigenvalue problem and
// overflow-safe evaluation of its determinant.  The exponentially growing
// column factors e^{mu*Re(eta_j)} are kept out of the stored mantissas:
// column j of the represented matrix is mantissa column j times
// e^{column_exponents[j]}.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "canospec/order.hpp"
#include "canospec/precision.hpp"
#include "canospec/scaled_value.hpp"
#include "canospec/svd.hpp"

namespace canospec {

template <class R>
struct ScaledComplexMatrix {
    OperatorOrder order;
    R mu{};
    std::vector<complex_t<R>> entries; // row-major, size() x size() mantissas
    std::vector<R> column_exponents;
    int precision_bits = 53;

    int size() const { return order.size(); }

    const complex_t<R>& at(int r, int c) const
    {
        return entries[static_cast<std::size_t>(r) * size() + c];
    }
    complex_t<R>& at(int r, int c)
    {
        return entries[static_cast<std::size_t>(r) * size() + c];
    }

    // entry of the represented (unscaled) matrix; overflows for large mu
    complex_t<R> represented(int r, int c) const
    {
        using std::exp;
        return at(r, c) * exp(column_exponents[static_cast<std::size_t>(c)]);
    }
};

// Rows 0..alpha-1 hold the Vandermonde block eta_j^r (boundary conditions
// at x = 0); rows alpha..2alpha-1 hold e^{mu eta_j} eta_j^r (x = 1), with
// the growing part of |e^{mu eta_j}| factored into the column exponent.
template <class R>
ScaledComplexMatrix<R> build_matrix(const OperatorOrder& order, const R& mu, int precision_bits)
{
    using std::cos;
    using std::sin;
    using std::exp;
    if (!(mu > R(0)))
        throw std::domain_error("build_matrix: mu must be positive");
    check_precision_bits(precision_bits);

    const int n = order.size();
    ScaledComplexMatrix<R> m;
    m.order = order;
    m.mu = mu;
    m.precision_bits = precision_bits;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    m.column_exponents.resize(static_cast<std::size_t>(n));

    const auto angles = direction_angles<R>(order);
    for (int j = 0; j < n; ++j) {
        const R theta = angles[static_cast<std::size_t>(j)];
        const R re = cos(theta);
        const R im = sin(theta);
        const R grow = re > R(0) ? re : R(0);
        const R decay = re < R(0) ? re : R(0);
        m.column_exponents[static_cast<std::size_t>(j)] = mu * grow;
        // the whole column is divided by e^{mu grow}: the x=0 block decays,
        // the x=1 block keeps only the non-growing part of e^{mu eta}
        const R top_damp = exp(-mu * grow);
        const R damp = exp(mu * decay);
        for (int r = 0; r < order.alpha; ++r) {
            m.at(r, j) = unit_phase<R>(R(r) * theta) * top_damp;
            m.at(order.alpha + r, j) = unit_phase<R>(mu * im + R(r) * theta) * damp;
        }
    }
    return m;
}

// Determinant of the mantissa matrix by LU with partial pivoting, plus a
// growth-aware roundoff bound used to decide whether a computed sign is
// trustworthy near the noise floor.
template <class R>
struct DetEvaluation {
    ScaledValue<R> det;           // determinant of the represented matrix
    complex_t<R> mantissa_det{};  // raw product of pivots (no rescaling)
    R log_noise{};                // log of the roundoff bound on mantissa_det
};

template <class R>
DetEvaluation<R> det_with_diagnostics(const ScaledComplexMatrix<R>& m)
{
    using C = complex_t<R>;
    using std::abs;
    using std::log;

    const int n = m.size();
    std::vector<C> a = m.entries;
    auto at = [&](int r, int c) -> C& { return a[static_cast<std::size_t>(r) * n + c]; };

    // scale of the input mantissa matrix; roundoff committed at any step
    // is at least eps * this scale and is amplified by later steps, so the
    // per-step growth term is clamped below by it
    R scale0(0);
    for (const C& v : a)
        scale0 = std::max(scale0, R(abs(v)));

    C det(1);
    R log_growth(0);
    bool singular = false;
    for (int k = 0; k < n && !singular; ++k) {
        int piv = k;
        R amax(0);
        for (int r = k; r < n; ++r)
            for (int c = k; c < n; ++c) {
                const R v = abs(at(r, c));
                if (c == k && v > abs(at(piv, k)))
                    piv = r;
                if (v > amax)
                    amax = v;
            }
        if (amax == R(0)) {
            singular = true;
            break;
        }
        log_growth += log(std::max(amax, scale0));
        if (piv != k) {
            for (int c = 0; c < n; ++c)
                std::swap(at(k, c), at(piv, c));
            det = -det;
        }
        const C pivot = at(k, k);
        if (pivot == C(0)) {
            singular = true;
            break;
        }
        det *= pivot;
        for (int r = k + 1; r < n; ++r) {
            const C f = at(r, k) / pivot;
            at(r, k) = C(0);
            for (int c = k + 1; c < n; ++c)
                at(r, c) -= f * at(k, c);
        }
    }

    DetEvaluation<R> result;
    R sum_exp(0);
    for (const R& e : m.column_exponents)
        sum_exp += e;
    if (singular) {
        result.mantissa_det = C(0);
        result.det = ScaledValue<R>(C(0), R(0));
        result.log_noise = -std::numeric_limits<R>::infinity();
        return result;
    }
    result.mantissa_det = det;
    result.det = ScaledValue<R>::from(det, sum_exp);
    result.log_noise = log(eps_v<R>() * R(n) * R(n)) + log_growth;
    return result;
}

template <class R>
ScaledValue<R> scaled_determinant(const ScaledComplexMatrix<R>& m)
{
    return det_with_diagnostics(m).det;
}

// Constant phase of det A_alpha(mu) on the real mu-axis.  The determinant
// is e^{i theta} times a real-valued real-analytic function of mu; theta
// is measured once per order and verified at a second point.
template <class R>
struct DetPhase {
    R theta{};
    complex_t<R> rotation{}; // e^{-i theta}
    R calibration_mu{};
};

namespace detail {

// distance of arg(z) from {0, pi}
template <class R>
R phase_defect(const complex_t<R>& z)
{
    using std::abs;
    using std::atan2;
    return atan2(abs(imag(z)), abs(real(z)));
}

} // namespace detail

template <class R>
DetPhase<R> calibrate_det_phase(const OperatorOrder& order, int precision_bits)
{
    using std::abs;
    using std::arg;
    using std::exp;
    using std::log;
    check_precision_bits(precision_bits);

    const R tol = R(1e-6);
    const R margin = log(R(1e3)); // calibration point must sit well above the noise floor
    R mu = R(1);
    for (int attempt = 0; attempt < 500; ++attempt, mu += R(0.1)) {
        const auto d1 = det_with_diagnostics(build_matrix(order, mu, precision_bits));
        if (d1.mantissa_det == complex_t<R>(0) ||
            log(abs(d1.mantissa_det)) < d1.log_noise + margin)
            continue;
        const R theta = arg(d1.mantissa_det);
        const complex_t<R> rotation = unit_phase<R>(-theta);

        const R mu2 = mu + R(1);
        const auto d2 = det_with_diagnostics(build_matrix(order, mu2, precision_bits));
        if (d2.mantissa_det == complex_t<R>(0) ||
            log(abs(d2.mantissa_det)) < d2.log_noise + margin)
            continue;
        if (detail::phase_defect<R>(d2.mantissa_det * rotation) > tol)
            continue;
        DetPhase<R> phase;
        phase.theta = theta;
        phase.rotation = rotation;
        phase.calibration_mu = mu;
        return phase;
    }
    throw std::runtime_error("det phase calibration failed for alpha=" + std::to_string(order.alpha) +
                             ": phase not constant along the real axis (matrix construction bug?)");
}

// One sample of the root-finding objective
// F(mu) = Re(det A_alpha(mu) e^{-i theta}) / e^{sum of column exponents}.
// `reliable` is false when |F| sits below the LU roundoff bound, i.e. the
// sign carries no information at this precision.
template <class R>
struct DetSample {
    R mu{};
    R f{};
    bool reliable = true;
};

template <class R>
DetSample<R> normalized_real_det_sample(const OperatorOrder& order, const R& mu, int precision_bits,
                                        const DetPhase<R>& phase)
{
    using std::abs;
    using std::log;
    const auto d = det_with_diagnostics(build_matrix(order, mu, precision_bits));
    DetSample<R> s;
    s.mu = mu;
    s.f = real(d.mantissa_det * phase.rotation);
    s.reliable = d.mantissa_det != complex_t<R>(0) &&
                 log(abs(d.mantissa_det)) > d.log_noise;
    return s;
}

template <class R>
R normalized_real_det(const OperatorOrder& order, const R& mu, int precision_bits,
                      const DetPhase<R>& phase)
{
    return normalized_real_det_sample(order, mu, precision_bits, phase).f;
}

template <class R>
R normalized_real_det(const OperatorOrder& order, const R& mu, int precision_bits)
{
    const auto phase = calibrate_det_phase<R>(order, precision_bits);
    return normalized_real_det(order, mu, precision_bits, phase);
}

// Smallest singular value of the column-rescaled matrix (every column
// exponent set to 0).  It vanishes at the same mu as the determinant and
// stands in for the matrix-eigenvalue-moduli scan of the reference plots.
template <class R>
ScaledValue<R> smallest_singular_value(const ScaledComplexMatrix<R>& m)
{
    const int n = m.size();
    std::vector<complex_t<R>> colmajor(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            colmajor[static_cast<std::size_t>(c) * n + r] = m.at(r, c);
    const auto sigma = singular_values_jacobi<R>(std::move(colmajor), n);
    return ScaledValue<R>::from(complex_t<R>(sigma.back(), R(0)), R(0));
}

} // namespace canospec

#endif
