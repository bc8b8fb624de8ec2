#ifndef CANOSPEC_EIGENSOLVER_HPP
#define CANOSPEC_EIGENSOLVER_HPP

// Eigenvalue enumeration for arbitrary order: scan the normalized real
// determinant on a pi/8 grid, bracket sign changes, refine by bisection
// plus safeguarded secant, and assign the asymptotic index n to each
// root.  alpha <= 3 roots are cross-checked against the closed forms.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "canospec/asymptotics.hpp"
#include "canospec/exact_forms.hpp"
#include "canospec/order.hpp"
#include "canospec/precision.hpp"
#include "canospec/spectral_matrix.hpp"

namespace canospec {

enum class RootMethod {
    general_det,
    closed_form_alpha2,
    closed_form_alpha3_even,
    transcendental_alpha3_odd,
};

inline const char* to_string(RootMethod m)
{
    switch (m) {
    case RootMethod::general_det: return "general_det";
    case RootMethod::closed_form_alpha2: return "closed_form_alpha2";
    case RootMethod::closed_form_alpha3_even: return "closed_form_alpha3_even";
    case RootMethod::transcendental_alpha3_odd: return "transcendental_alpha3_odd";
    }
    return "unknown";
}

template <class R>
struct EigenvalueRecord {
    int alpha = 0;
    int n = 0;
    R mu{};
    R lambda{};   // mu^{2 alpha}
    R delta{};    // mu - n pi (odd alpha) or mu - (pi/2 + n pi) (even alpha)
    R residual{}; // |F(mu)| at the accepted root
    int precision_bits = 53;
    RootMethod method = RootMethod::general_det;
};

namespace detail {

template <class R>
R refinement_tolerance(int precision_bits, const R& mu)
{
    using std::abs;
    using std::ldexp;
    using std::max;
    R scale = mu < R(1) ? R(1) : mu;
    R tol = scale;
    for (int i = 0; i < precision_bits - 10; ++i)
        tol /= R(2);
    const R floor_tol = R(4) * eps_v<R>() * scale;
    return tol > floor_tol ? tol : floor_tol;
}

template <class R, class F>
R refine_root(F&& f, R a, R b, R fa, R fb, int precision_bits)
{
    using std::abs;
    if (!((fa < R(0)) != (fb < R(0))))
        throw std::runtime_error("refine_root: bracket does not straddle a sign change");

    // secant steps with a forced bisection every other iteration, so the
    // bracket width is guaranteed to halve at least every two steps
    const R tol = refinement_tolerance<R>(precision_bits, (a + b) / R(2));
    bool force_bisect = false;
    for (int it = 0; it < 400 && b - a > tol; ++it) {
        R x;
        if (!force_bisect && fb != fa) {
            x = (a * fb - b * fa) / (fb - fa);
            const R margin = (b - a) / R(64);
            if (!(x > a + margin && x < b - margin))
                x = (a + b) / R(2);
        } else {
            x = (a + b) / R(2);
        }
        const R fx = f(x);
        if (fx == R(0)) {
            a = b = x;
            break;
        }
        if ((fx < R(0)) == (fa < R(0))) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        force_bisect = !force_bisect;
    }
    return (a + b) / R(2);
}

} // namespace detail

// All positive roots of det A_alpha(mu) in [mu_lo, mu_hi].  The grid step
// pi/8 is far below the asymptotic root spacing pi; grid points whose
// determinant sits below the LU noise floor do not contribute sign
// information and are skipped when bracketing.
template <class R>
std::vector<R> find_roots(const OperatorOrder& order, const R& mu_lo, const R& mu_hi,
                          int precision_bits)
{
    if (!(R(0) < mu_lo && mu_lo < mu_hi))
        throw std::domain_error("find_roots: need 0 < mu_lo < mu_hi");
    check_precision_bits(precision_bits);

    const auto phase = calibrate_det_phase<R>(order, precision_bits);
    auto f = [&](const R& mu) { return normalized_real_det(order, mu, precision_bits, phase); };
    auto sample = [&](const R& mu) {
        return normalized_real_det_sample(order, mu, precision_bits, phase);
    };

    const R step = pi_v<R>() / R(8);
    std::vector<R> roots;
    bool have_prev = false;
    R prev_mu{}, prev_f{};
    for (R mu = mu_lo;; mu += step) {
        if (mu > mu_hi)
            mu = mu_hi;
        const auto s = sample(mu);
        if (s.reliable) {
            if (s.f == R(0)) {
                roots.push_back(mu);
            } else if (have_prev && (prev_f < R(0)) != (s.f < R(0))) {
                roots.push_back(detail::refine_root<R>(f, prev_mu, mu, prev_f, s.f, precision_bits));
            }
            have_prev = true;
            prev_mu = mu;
            prev_f = s.f;
        }
        if (mu == mu_hi)
            break;
    }
    return roots;
}

template <class R>
struct IndexedSpectrum {
    std::vector<EigenvalueRecord<R>> records;
    std::vector<std::string> anomalies;
};

// n = round(mu/pi) for odd alpha, round(mu/pi - 1/2) for even alpha.
// Collisions and gaps are surfaced as anomalies, never dropped.
template <class R>
IndexedSpectrum<R> assign_indices(const OperatorOrder& order, const std::vector<R>& roots)
{
    using std::floor;
    const R pi = pi_v<R>();
    IndexedSpectrum<R> out;
    int prev_n = 0;
    bool have_prev = false;
    for (const R& mu : roots) {
        const R pos = order.even ? mu / pi - R(0.5) : mu / pi;
        const int n = static_cast<int>(floor(pos + R(0.5)));
        EigenvalueRecord<R> rec;
        rec.alpha = order.alpha;
        rec.n = n;
        rec.mu = mu;
        const R base = order.even ? pi / R(2) + R(n) * pi : R(n) * pi;
        rec.delta = mu - base;
        if (have_prev) {
            if (n == prev_n)
                out.anomalies.push_back("index collision at n=" + std::to_string(n));
            else if (n != prev_n + 1)
                out.anomalies.push_back("index gap between n=" + std::to_string(prev_n) +
                                        " and n=" + std::to_string(n));
        }
        prev_n = n;
        have_prev = true;
        out.records.push_back(rec);
    }
    return out;
}

namespace detail {

template <class R>
R int_pow(R base, int e)
{
    R r(1);
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Cross-validate against the closed forms and fill lambda/residual/method.
template <class R>
void finalize_records(const OperatorOrder& order, IndexedSpectrum<R>& spec, int precision_bits,
                      const DetPhase<R>& phase)
{
    using std::abs;
    const R pi = pi_v<R>();
    for (auto& rec : spec.records) {
        rec.precision_bits = precision_bits;
        const R tol = refinement_tolerance<R>(precision_bits, rec.mu);
        rec.method = RootMethod::general_det;
        if (order.alpha == 3) {
            if (rec.n % 2 == 0 && abs(rec.mu - R(rec.n) * pi) <= R(64) * tol) {
                // the factor sin(mu/2) certifies the root exactly at n pi
                rec.mu = R(rec.n) * pi;
                rec.delta = R(0);
                rec.method = RootMethod::closed_form_alpha3_even;
            } else {
                const R res = odd_equation_residual3(rec.mu);
                const R res_tol = R(1e-10) > R(1e4) * tol ? R(1e-10) : R(1e4) * tol;
                if (abs(res) <= res_tol)
                    rec.method = RootMethod::transcendental_alpha3_odd;
                else
                    spec.anomalies.push_back("alpha=3 root mu=" + std::to_string(static_cast<double>(rec.mu)) +
                                             " fails both closed-form checks");
            }
        } else if (order.alpha == 2) {
            const R res = eq2_residual(rec.mu);
            const R res_tol = R(1e-10) > R(1e4) * tol ? R(1e-10) : R(1e4) * tol;
            if (abs(res) <= res_tol)
                rec.method = RootMethod::closed_form_alpha2;
            else
                spec.anomalies.push_back("alpha=2 root mu=" + std::to_string(static_cast<double>(rec.mu)) +
                                         " does not solve cos mu = 1/cosh mu");
        }
        rec.lambda = int_pow(rec.mu, 2 * order.alpha);
        rec.residual = abs(normalized_real_det(order, rec.mu, precision_bits, phase));
    }
}

} // namespace detail

// First `count` eigenvalue records, scanning upward from mu = 0.1 (mu = 0
// is the degenerate non-eigenvalue root) and extending the window until
// enough roots are found.
template <class R>
IndexedSpectrum<R> spectrum(const OperatorOrder& order, int count, int precision_bits)
{
    using std::abs;
    if (count < 1)
        throw std::domain_error("spectrum: count must be >= 1");
    check_precision_bits(precision_bits);

    const R pi = pi_v<R>();
    const R lo = R(0.1);
    R hi = (predict_first_index<R>(order.alpha) + R(count) + R(3)) * pi;
    std::vector<R> roots;
    for (int attempt = 0; attempt < 12; ++attempt) {
        roots = find_roots(order, lo, hi, precision_bits);
        if (static_cast<int>(roots.size()) >= count)
            break;
        hi += R(count - static_cast<int>(roots.size()) + 2) * pi;
    }
    if (static_cast<int>(roots.size()) < count)
        throw std::runtime_error("spectrum: found only " + std::to_string(roots.size()) + " of " +
                                 std::to_string(count) + " requested roots for alpha=" +
                                 std::to_string(order.alpha));
    roots.resize(static_cast<std::size_t>(count));
    auto spec = assign_indices(order, roots);
    const auto phase = calibrate_det_phase<R>(order, precision_bits);
    detail::finalize_records(order, spec, precision_bits, phase);
    return spec;
}

template <class R>
EigenvalueRecord<R> min_eigenvalue(const OperatorOrder& order, int precision_bits)
{
    auto spec = spectrum<R>(order, 1, precision_bits);
    return spec.records.front();
}

} // namespace canospec

#endif
