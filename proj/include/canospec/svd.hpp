#ifndef CANOSPEC_SVD_HPP
#define CANOSPEC_SVD_HPP

// One-sided Jacobi singular values for small dense complex matrices.
// Columns are rotated pairwise until mutually orthogonal; the singular
// values are then the column norms.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "canospec/precision.hpp"

namespace canospec {

// a: n x n, column-major.  Returns singular values sorted descending.
template <class R>
std::vector<R> singular_values_jacobi(std::vector<complex_t<R>> a, int n, int max_sweeps = 60)
{
    using C = complex_t<R>;
    using std::abs;
    using std::sqrt;

    if (n <= 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("singular_values_jacobi: bad dimensions");

    auto col = [&](int j) { return a.data() + static_cast<std::size_t>(j) * n; };
    const R tol = R(16) * R(n) * eps_v<R>();

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                C* ap = col(p);
                C* aq = col(q);
                R gpp(0), gqq(0);
                C gpq(0);
                for (int i = 0; i < n; ++i) {
                    gpp += norm(ap[i]);
                    gqq += norm(aq[i]);
                    gpq += conj(ap[i]) * aq[i];
                }
                const R off = abs(gpq);
                if (gpp == R(0) || gqq == R(0) || off <= tol * sqrt(gpp * gqq))
                    continue;
                rotated = true;
                // absorb the phase of the Gram entry, then a real rotation
                const C phase = gpq / off;
                const R tau = (gqq - gpp) / (R(2) * off);
                R t;
                if (tau >= R(0))
                    t = R(1) / (tau + sqrt(R(1) + tau * tau));
                else
                    t = R(-1) / (-tau + sqrt(R(1) + tau * tau));
                const R c = R(1) / sqrt(R(1) + t * t);
                const R s = c * t;
                for (int i = 0; i < n; ++i) {
                    const C vq = conj(phase) * aq[i];
                    const C vp = ap[i];
                    ap[i] = c * vp - s * vq;
                    aq[i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            std::vector<R> sigma(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                R sum(0);
                for (int i = 0; i < n; ++i)
                    sum += norm(col(j)[i]);
                sigma[static_cast<std::size_t>(j)] = sqrt(sum);
            }
            std::sort(sigma.begin(), sigma.end(), [](const R& x, const R& y) { return x > y; });
            return sigma;
        }
    }
    throw std::runtime_error("one-sided Jacobi did not converge after " + std::to_string(max_sweeps) +
                             " sweeps (n=" + std::to_string(n) + ")");
}

} // namespace canospec

#endif
