#ifndef CANOSPEC_NUMBER_THEORY_HPP
#define CANOSPEC_NUMBER_THEORY_HPP

// Rationality of cos(pi/alpha) by exact arithmetic.  The engine is the
// iterate chain of phi(y) = 2y^2 - 1, which satisfies
// phi^n(cos t) = cos(2^n t).  A witness polynomial P with P(cos(pi/beta)) = 0
// for a divisor beta of alpha is scanned over every rational-root-theorem
// candidate; since no candidate is a root, cos(pi/beta) is irrational, and
// cos(pi/alpha) is irrational because cos of an integer multiple of an angle
// is an integer polynomial of cos of the angle.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "canospec/int_polynomial.hpp"

namespace canospec {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Guard: phi^n has degree 2^n with coefficients of about 1.28 * 2^n bits,
// so the dense coefficient list is ~4^n bits in total.  n = 14 is ~100 MB;
// beyond that the memory cost is unjustifiable (n = 20 would be tens of GB).
inline constexpr int max_phi_iterate = 14;

namespace detail {

// Coefficients of the Chebyshev polynomial T_m, m = 2^n, via the closed
// form T_m(y) = (m/2) sum_k (-1)^k (m-k-1)!/(k! (m-2k)!) (2y)^{m-2k},
// built with an exact term-to-term ratio.  Much cheaper than repeated
// polynomial squaring at large n.
inline IntPolynomial chebyshev_power_of_two(int n)
{
    const long long m = 1LL << n;
    std::vector<BigInt> coeff(static_cast<std::size_t>(m) + 1, BigInt(0));
    BigRational term = BigRational(BigInt(1) << (m - 1)); // k = 0 term
    for (long long k = 0; 2 * k <= m; ++k) {
        if (boost::multiprecision::denominator(term) != 1)
            throw std::logic_error("chebyshev coefficient recurrence left a denominator");
        BigInt c = boost::multiprecision::numerator(term);
        if (k % 2 != 0)
            c = -c;
        coeff[static_cast<std::size_t>(m - 2 * k)] = c;
        if (2 * k < m)
            term = term * BigRational((m - 2 * k) * (m - 2 * k - 1), 4 * (k + 1) * (m - k - 1));
    }
    return IntPolynomial(std::move(coeff));
}

} // namespace detail

// n-th iterate of phi(y) = 2y^2 - 1, i.e. T_{2^n}.  Cached; exact.
inline const IntPolynomial& phi_iterate(int n)
{
    if (n < 1)
        throw std::domain_error("phi_iterate: n must be >= 1");
    if (n > max_phi_iterate)
        throw ResourceLimitError("phi_iterate: n=" + std::to_string(n) + " exceeds the memory guard n<=" +
                                 std::to_string(max_phi_iterate));
    static std::mutex mtx;
    static std::map<int, IntPolynomial> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, detail::chebyshev_power_of_two(n)).first;
    return it->second;
}

// One rational-root-theorem candidate together with the exact outcome of
// evaluating P there.  `scaled_value_bits` is the bit length of the integer
// q^deg * P(p/q); the exact rational value itself is retained only while it
// stays below a size cap, but sign and is_root are always exact.
struct CandidateCheck {
    BigRational candidate;
    bool is_root = false;
    int sign = 0;                         // sign of P(candidate)
    std::uint64_t scaled_value_bits = 0;  // bit length of |q^deg P(p/q)|
    std::optional<BigRational> value;     // exact P(candidate) if retained
};

// Values whose scaled integer or denominator exceeds this many bits are
// summarized by sign and bit length instead of being stored in full; the
// cap also bounds the gcd work in rational normalization.
inline constexpr std::uint64_t value_retention_bits = 4096;

namespace detail {

// Fixed-size two's-free accumulator: positive and negative magnitude parts
// accumulated separately so no borrows occur until the final subtraction.
struct SplitAccumulator {
    std::vector<std::uint64_t> pos, neg;

    explicit SplitAccumulator(std::size_t bits)
        : pos(bits / 64 + 3, 0), neg(bits / 64 + 3, 0)
    {
    }

    void add(const BigInt& term, std::uint64_t bit_offset)
    {
        if (term == 0)
            return;
        std::vector<std::uint64_t>& acc = term > 0 ? pos : neg;
        std::vector<std::uint64_t> limbs;
        boost::multiprecision::export_bits(BigInt(abs(term)), std::back_inserter(limbs), 64, false);
        const std::size_t word = static_cast<std::size_t>(bit_offset / 64);
        const unsigned shift = static_cast<unsigned>(bit_offset % 64);
        unsigned __int128 carry = 0;
        std::uint64_t spill = 0; // high part of the previous shifted limb
        std::size_t i = 0;
        for (; i < limbs.size(); ++i) {
            std::uint64_t lo = shift ? (limbs[i] << shift) | spill : limbs[i];
            spill = shift ? limbs[i] >> (64 - shift) : 0;
            carry += acc[word + i];
            carry += lo;
            acc[word + i] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
        carry += acc[word + i];
        carry += spill;
        acc[word + i] = static_cast<std::uint64_t>(carry);
        carry >>= 64;
        for (std::size_t k = word + i + 1; carry != 0; ++k) {
            carry += acc[k];
            acc[k] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
    }

    // sign and magnitude of pos - neg; magnitude returned as limbs
    std::pair<int, std::vector<std::uint64_t>> resolve() const
    {
        int cmp = 0;
        for (std::size_t i = pos.size(); i-- > 0 && cmp == 0;)
            cmp = pos[i] < neg[i] ? -1 : (pos[i] > neg[i] ? 1 : 0);
        std::vector<std::uint64_t> mag(pos.size(), 0);
        if (cmp == 0)
            return {0, mag};
        const auto& big = cmp > 0 ? pos : neg;
        const auto& small = cmp > 0 ? neg : pos;
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < mag.size(); ++i) {
            const std::uint64_t s = small[i] + borrow;
            borrow = (s < borrow) || (big[i] < s) ? 1 : 0;
            mag[i] = big[i] - s;
        }
        return {cmp, mag};
    }
};

inline std::uint64_t limb_bit_length(const std::vector<std::uint64_t>& limbs)
{
    for (std::size_t i = limbs.size(); i-- > 0;)
        if (limbs[i] != 0)
            return 64 * static_cast<std::uint64_t>(i) + std::bit_width(limbs[i]);
    return 0;
}

inline BigInt limbs_to_int(const std::vector<std::uint64_t>& limbs)
{
    BigInt v;
    boost::multiprecision::import_bits(v, limbs.rbegin(), limbs.rend(), 64, true);
    return v;
}

// Exact evaluation of N = q^d P(s p / q) for q = 2^j, by adding each
// coefficient term c_i p^i at bit offset j (d - i).  Avoids the quadratic
// cost of rational Horner on the degree-4096 witness polynomials.
inline CandidateCheck check_pow2_candidate(const IntPolynomial& poly, const BigInt& p, int s,
                                           std::uint64_t j)
{
    const int d = poly.degree();
    std::uint64_t max_coeff_bits = 1;
    for (const BigInt& c : poly.coefficients)
        if (c != 0)
            max_coeff_bits = std::max<std::uint64_t>(max_coeff_bits, msb(BigInt(abs(c))) + 1);
    const std::uint64_t p_bits = msb(p) + 1;
    SplitAccumulator acc(j * static_cast<std::uint64_t>(d) +
                         max_coeff_bits + p_bits * static_cast<std::uint64_t>(d) + 192);

    BigInt ppow(1);
    for (int i = 0; i <= d; ++i) {
        const BigInt& c = poly.coefficients[static_cast<std::size_t>(i)];
        if (c != 0) {
            BigInt term = c * ppow;
            if (s < 0 && i % 2 != 0)
                term = -term;
            acc.add(term, j * static_cast<std::uint64_t>(d - i));
        }
        if (i < d && p != 1)
            ppow *= p;
    }

    auto [sign, mag] = acc.resolve();
    CandidateCheck chk;
    chk.candidate = BigRational(s < 0 ? BigInt(-p) : p, BigInt(1) << j);
    chk.sign = sign;
    chk.is_root = sign == 0;
    chk.scaled_value_bits = limb_bit_length(mag);
    const std::uint64_t denom_bits = j * static_cast<std::uint64_t>(d);
    if (chk.scaled_value_bits <= value_retention_bits && denom_bits <= value_retention_bits) {
        BigInt num = limbs_to_int(mag);
        if (sign < 0)
            num = -num;
        chk.value = BigRational(num, BigInt(1) << (j * static_cast<std::uint64_t>(d)));
    }
    return chk;
}

// General exact path: integer Horner of N = q^d P(s p / q).
inline CandidateCheck check_general_candidate(const IntPolynomial& poly, const BigInt& p,
                                              const BigInt& q, int s)
{
    const int d = poly.degree();
    std::vector<BigInt> qpow(static_cast<std::size_t>(d) + 1);
    qpow[0] = 1;
    for (int t = 1; t <= d; ++t)
        qpow[static_cast<std::size_t>(t)] = qpow[static_cast<std::size_t>(t - 1)] * q;
    const BigInt sp = s < 0 ? BigInt(-p) : p;
    BigInt n = poly.leading();
    for (int i = d - 1; i >= 0; --i)
        n = n * sp + poly.coefficients[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(d - i)];

    CandidateCheck chk;
    chk.candidate = BigRational(sp, q);
    chk.sign = n == 0 ? 0 : (n > 0 ? 1 : -1);
    chk.is_root = n == 0;
    chk.scaled_value_bits = n == 0 ? 0 : static_cast<std::uint64_t>(msb(BigInt(abs(n)))) + 1;
    const std::uint64_t denom_bits =
        q == 1 ? 0 : (static_cast<std::uint64_t>(msb(q)) + 1) * static_cast<std::uint64_t>(d);
    if (chk.scaled_value_bits <= value_retention_bits && denom_bits <= value_retention_bits)
        chk.value = BigRational(n, qpow[static_cast<std::size_t>(d)]);
    return chk;
}

// positive divisors; trial division with a primality guard on the cofactor
inline std::vector<BigInt> positive_divisors(BigInt n, std::size_t max_count)
{
    if (n < 0)
        n = -n;
    if (n == 0)
        throw std::domain_error("positive_divisors: zero has no finite divisor list");
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            factors.emplace_back(p, e);
    }
    if (n > 1) {
        if (n >= BigInt(1000000) * BigInt(1000000))
            throw ResourceLimitError("positive_divisors: cofactor too large to certify prime");
        factors.emplace_back(n, 1);
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        BigInt pe(1);
        for (int t = 1; t <= e; ++t) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pe);
                if (divs.size() > max_count)
                    throw ResourceLimitError("positive_divisors: divisor count exceeds cap");
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace detail

// Evaluate P at every rational-root-theorem candidate +-p/q (p | constant,
// q | leading, coprime).  Candidates of the form p/2^j take the fast
// shifted-addition path; everything is exact.
inline std::vector<CandidateCheck> rational_root_scan(const IntPolynomial& poly)
{
    if (poly.is_zero())
        throw std::domain_error("rational_root_scan: zero polynomial");
    if (poly.constant() == 0)
        throw std::domain_error("rational_root_scan: zero constant term (y = 0 is a root; factor it out)");
    if (poly.degree() == 0)
        return {};

    const auto ps = detail::positive_divisors(poly.constant(), 4096);
    const auto qs = detail::positive_divisors(poly.leading(), 100000);

    struct Job {
        BigInt p, q;
        int s;
        std::int64_t pow2; // exponent j if q = 2^j, else -1
    };
    std::vector<Job> jobs;
    for (const BigInt& q : qs) {
        const std::uint64_t bits = msb(q);
        const std::int64_t j = (BigInt(1) << bits) == q ? static_cast<std::int64_t>(bits) : -1;
        for (const BigInt& p : ps) {
            if (gcd(p, q) != 1)
                continue;
            jobs.push_back({p, q, 1, j});
            jobs.push_back({p, q, -1, j});
        }
    }

    std::vector<CandidateCheck> out(jobs.size());
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Job& job = jobs[i];
            out[i] = job.pow2 >= 0
                         ? detail::check_pow2_candidate(poly, job.p, job.s,
                                                        static_cast<std::uint64_t>(job.pow2))
                         : detail::check_general_candidate(poly, job.p, job.q, job.s);
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), jobs.size());
    if (workers <= 1 || jobs.size() < 16) {
        run(0, jobs.size());
    } else {
        std::vector<std::future<void>> tasks;
        const std::size_t chunk = (jobs.size() + workers - 1) / workers;
        for (std::size_t lo = 0; lo < jobs.size(); lo += chunk)
            tasks.push_back(std::async(std::launch::async, run, lo, std::min(lo + chunk, jobs.size())));
        for (auto& t : tasks)
            t.get();
    }
    return out;
}

// Witness for the irrationality of cos(pi/beta): an integer polynomial P
// with P(cos(pi/beta)) = 0.  For prime beta = p, Fermat gives
// 2^{p-1} = 1 (mod p), so phi^{p-1}(cos(pi/p)) = cos((l p + 1) pi / p)
// = (-1)^l cos(pi/p) with l = (2^{p-1}-1)/p, hence
// P = phi^{p-1}(y) - (-1)^l y.  beta = 9 works the same way with n = 6.
struct WitnessSpec {
    int beta = 0;
    int sign = 1; // the (-1)^l in P = phi^n(y) - sign * y, or +1 for beta in {4, 6}
    IntPolynomial polynomial;
};

namespace detail {

inline IntPolynomial phi_shift_witness(int n, std::int64_t ell)
{
    IntPolynomial p = phi_iterate(n);
    const BigInt sign = ell % 2 == 0 ? BigInt(1) : BigInt(-1);
    p.coefficients[1] -= sign;
    p.trim();
    return p;
}

} // namespace detail

// Pick a usable divisor beta of alpha and build its witness.  Preference
// order keeps the witness degree small.  beta = 6 uses 4y^2 - 3, the
// minimal polynomial of cos(pi/6); beta = 4 uses 2y^2 - 1.  Prime
// witnesses above 13 would need polynomials of degree > 2^13 and are
// refused by the memory guard.
inline WitnessSpec witness_polynomial(int alpha)
{
    if (alpha < 4)
        throw std::domain_error("witness_polynomial: alpha must be >= 4");
    WitnessSpec w;
    if (alpha % 4 == 0) {
        w.beta = 4;
        w.polynomial = IntPolynomial::from_ints({-1, 0, 2});
        return w;
    }
    if (alpha % 6 == 0) {
        // 2 phi^2(y) + 1 vanishes at cos(pi/6) because phi^2(cos(pi/6)) =
        // cos(2 pi/3) = -1/2; its rational roots +-1/2 fall outside (1/2, 1)
        w.beta = 6;
        w.polynomial = IntPolynomial::from_ints({3, 0, -16, 0, 16});
        return w;
    }
    if (alpha % 5 == 0) {
        w.beta = 5;
        w.sign = -1; // l = (2^4 - 1)/5 = 3
        w.polynomial = detail::phi_shift_witness(4, 3);
        return w;
    }
    if (alpha % 9 == 0) {
        w.beta = 9;
        w.sign = -1; // l = (2^6 - 1)/9 = 7
        w.polynomial = detail::phi_shift_witness(6, 7);
        return w;
    }
    for (int p : {7, 11, 13}) {
        if (alpha % p == 0) {
            const std::int64_t ell = ((std::int64_t(1) << (p - 1)) - 1) / p;
            w.beta = p;
            w.sign = ell % 2 == 0 ? 1 : -1;
            w.polynomial = detail::phi_shift_witness(p - 1, ell);
            return w;
        }
    }
    throw ResourceLimitError("witness_polynomial: every usable divisor of alpha=" + std::to_string(alpha) +
                             " is a prime above 13; witness degree would exceed the memory guard");
}

// A fully evaluated witness: the polynomial plus the complete candidate
// scan.  The phi-based witnesses do have rational roots (phi^n(-1) = 1 and
// phi^n(1/2) = -1/2 for every n, so one of +-1, -+1/2 is always a root),
// but every such root lies outside (1/2, 1) while cos(pi/beta) sits inside
// that interval for beta >= 4; that exclusion is what the certificate
// records.  Memoized per beta because the beta = 13 scan costs seconds.
struct WitnessCertificate {
    WitnessSpec witness;
    std::vector<CandidateCheck> checks;
    bool has_rational_root = false;          // some candidate is a root
    bool root_inside_interval = false;       // a root lies in (1/2, 1): fatal
};

namespace detail {

inline std::shared_ptr<const WitnessCertificate> certificate_for(const WitnessSpec& spec)
{
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const WitnessCertificate>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(spec.beta);
        if (it != cache.end())
            return it->second;
    }
    auto cert = std::make_shared<WitnessCertificate>();
    cert->witness = spec;
    cert->checks = rational_root_scan(spec.polynomial);
    for (const auto& c : cert->checks) {
        if (!c.is_root)
            continue;
        cert->has_rational_root = true;
        if (c.candidate > BigRational(1, 2) && c.candidate < 1)
            cert->root_inside_interval = true;
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(spec.beta, std::move(cert)).first->second;
}

} // namespace detail

struct RationalityVerdict {
    int alpha = 0;
    bool is_rational = false;
    std::optional<BigRational> value; // present iff rational
    int witness_divisor = 0;          // 0 when rational or deferred
    std::shared_ptr<const WitnessCertificate> certificate; // present iff certified irrational
    bool certified = true;            // false when the witness hit the memory guard
    std::string note;
};

// cos(pi/1) = -1, cos(pi/2) = 0, cos(pi/3) = 1/2; irrational for
// alpha >= 4, with an exact certificate whenever a witness divisor with
// prime factor <= 13 exists.
inline RationalityVerdict is_cos_rational(int alpha)
{
    if (alpha < 1)
        throw std::domain_error("is_cos_rational: alpha must be >= 1");
    RationalityVerdict v;
    v.alpha = alpha;
    if (alpha <= 3) {
        v.is_rational = true;
        v.value = alpha == 1 ? BigRational(-1) : alpha == 2 ? BigRational(0) : BigRational(1, 2);
        return v;
    }
    try {
        const auto cert = detail::certificate_for(witness_polynomial(alpha));
        if (cert->root_inside_interval)
            throw std::logic_error("is_cos_rational: witness polynomial has a rational root inside "
                                   "(1/2, 1), where cos(pi/beta) lives; the exclusion argument broke");
        v.witness_divisor = cert->witness.beta;
        v.certificate = cert;
    } catch (const ResourceLimitError& e) {
        v.certified = false;
        v.note = std::string("witness deferred: ") + e.what() +
                 "; irrationality of cos(pi/n) for n >= 4 is recorded as a known fact (Niven)";
    }
    return v;
}

// The spectrum contains an arithmetic progression iff cos(pi/alpha) is a
// nonzero rational, i.e. alpha = 1 or alpha = 3.
inline bool has_arithmetic_progression(int alpha)
{
    const auto v = is_cos_rational(alpha);
    return v.is_rational && *v.value != 0;
}

} // namespace canospec

#endif
