// Command-line front end: spectra, determinant scans, verification
// suites, and rationality certificates.  Data goes to stdout or to the
// --output file (written atomically); diagnostics go to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "canospec/asymptotics.hpp"
#include "canospec/eigensolver.hpp"
#include "canospec/exact_forms.hpp"
#include "canospec/fit.hpp"
#include "canospec/io.hpp"
#include "canospec/number_theory.hpp"
#include "canospec/spectral_matrix.hpp"

namespace {

using namespace canospec;

int resolve_precision(const std::optional<int>& flag)
{
    int bits = 53;
    if (const char* env = std::getenv("CANONICAL_SPECTRA_PRECISION"))
        bits = std::atoi(env);
    if (flag)
        bits = *flag;
    check_precision_bits(bits);
    return bits;
}

void emit(const std::string& data, const std::string& output_path)
{
    if (output_path.empty())
        std::cout << data;
    else
        write_file_atomic(output_path, data);
}

struct MuRange {
    double lo = 0, hi = 0, step = 0;
};

MuRange parse_mu_range(const std::string& text)
{
    MuRange r;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--mu", "expected lo:hi:step");
    try {
        r.lo = std::stod(text.substr(0, c1));
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--mu", "expected numeric lo:hi:step");
    }
    if (!(r.lo > 0) || r.hi < r.lo || !(r.step > 0))
        throw CLI::ValidationError("--mu", "need 0 < lo <= hi and step > 0");
    return r;
}

template <class R>
int run_spectrum(int alpha, int count, int bits, const std::string& format,
                 const std::string& output_path)
{
    const OperatorOrder order(alpha);
    const auto spec = spectrum<R>(order, count, bits);
    for (const auto& a : spec.anomalies)
        std::cerr << "anomaly: " << a << "\n";
    if (format == "json")
        emit(spectrum_to_json(spec.records).dump(2) + "\n", output_path);
    else if (format == "csv")
        emit(spectrum_to_csv(spec.records), output_path);
    else
        throw CLI::ValidationError("--format", "spectrum supports csv or json");
    return 0;
}

template <class R>
std::vector<ScanRow<R>> compute_scan(const OperatorOrder& order, const MuRange& range, int bits)
{
    std::vector<ScanRow<R>> rows;
    const R lo = R(range.lo), hi = R(range.hi), step = R(range.step);
    for (R mu = lo;; mu += step) {
        if (mu > hi)
            mu = hi;
        const auto matrix = build_matrix<R>(order, mu, bits);
        ScanRow<R> row;
        row.mu = mu;
        row.log_abs_det_scaled = scaled_determinant(matrix).log_abs();
        row.smallest_singular_value = smallest_singular_value(matrix).value().real();
        rows.push_back(row);
        if (mu == hi)
            break;
        if (range.lo == range.hi)
            break;
    }
    return rows;
}

template <class R>
int run_scan(int alpha, const MuRange& range, int bits, const std::string& format,
             const std::string& output_path)
{
    if (range.step > 3.14159265358979323846 / 8 + 1e-12)
        throw CLI::ValidationError("--mu", "step must be <= pi/8");
    const OperatorOrder order(alpha);
    const auto rows = compute_scan<R>(order, range, bits);
    if (format == "csv") {
        emit(scan_to_csv(rows), output_path);
    } else if (format == "svg") {
        emit(scan_to_svg(rows, "log |det| (scaled)"), output_path);
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            if constexpr (std::is_same_v<R, double>) {
                row["mu"] = r.mu;
                row["log_abs_det_scaled"] = r.log_abs_det_scaled;
                row["smallest_singular_value"] = r.smallest_singular_value;
            } else {
                row["mu"] = format_number(r.mu);
                row["log_abs_det_scaled"] = format_number(r.log_abs_det_scaled);
                row["smallest_singular_value"] = format_number(r.smallest_singular_value);
            }
            arr.push_back(std::move(row));
        }
        emit(arr.dump(2) + "\n", output_path);
    } else {
        throw CLI::ValidationError("--format", "scan supports csv, json or svg");
    }
    return 0;
}

struct Report {
    int failures = 0;

    void line(bool ok, const std::string& what)
    {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        if (!ok)
            ++failures;
    }
};

int verify_table()
{
    Report rep;
    const int bits = 200;
    const auto spec = spectrum<BigFloat>(OperatorOrder(3), 10, bits);
    const struct {
        int n;
        double mu;
    } table[] = {{3, 9.4270555708}, {5, 15.7079533785}, {7, 21.9911486179},
                 {9, 28.2743338821}, {11, 34.5575191894}};
    for (const auto& t : table) {
        bool found = false;
        for (const auto& r : spec.records) {
            if (r.n == t.n) {
                const double err = std::abs(static_cast<double>(r.mu) - t.mu);
                rep.line(err < 1e-9, "table n=" + std::to_string(t.n) + " |mu - " +
                                         format_number(t.mu) + "| = " + format_number(err));
                found = true;
            }
        }
        if (!found)
            rep.line(false, "table n=" + std::to_string(t.n) + " missing from spectrum");
    }
    return rep.failures == 0 ? 0 : 1;
}

int verify_closed_form()
{
    Report rep;
    std::mt19937_64 rng(20240711);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        Det3Parameters<double> p;
        p.a = {dist(rng), dist(rng)};
        p.b = {dist(rng), dist(rng)};
        do {
            p.omega = {dist(rng), dist(rng)};
        } while (std::abs(p.omega) < 0.2);
        const auto closed = det3_general(p);
        const auto brute = det3_brute(p);
        const double scale = std::max(std::abs(brute), 1e-30);
        worst = std::max(worst, std::abs(closed - brute) / scale);
    }
    rep.line(worst < 1e-10, "closed-form alpha=3: worst relative error vs cofactor determinant = " +
                                format_number(worst));

    // det A_2(mu) proportional to 8 (1 - cos mu cosh mu)
    const OperatorOrder order2(2);
    const auto m_ref = build_matrix<double>(order2, 0.5, 53);
    const auto ratio = scaled_determinant(m_ref).value() / std::complex<double>(det2_mu(0.5));
    double worst2 = 0;
    for (double mu = 0.1; mu <= 20.0; mu += 0.1) {
        const auto general = scaled_determinant(build_matrix<double>(order2, mu, 53)).value();
        const auto oracle = ratio * std::complex<double>(det2_mu(mu));
        const double scale = std::max(std::abs(oracle), 1e-12);
        worst2 = std::max(worst2, std::abs(general - oracle) / scale);
    }
    rep.line(worst2 < 1e-10,
             "closed-form alpha=2: worst relative error vs 8(1 - cos mu cosh mu) = " + format_number(worst2));
    return rep.failures == 0 ? 0 : 1;
}

int verify_asymptotics(int alpha)
{
    Report rep;
    if (alpha < 4) {
        std::cerr << "asymptotics check needs alpha >= 4\n";
        return 1;
    }
    const int bits = max_precision_bits;
    const OperatorOrder order(alpha);
    const auto spec = spectrum<BigFloat>(order, 24, bits);
    std::vector<BigFloat> xs, ys;
    for (const auto& r : spec.records) {
        if (r.n < 10 || r.n > 20)
            continue;
        const auto pred = predict_mu<BigFloat>(order, r.n);
        const BigFloat err = abs(r.mu - pred.value());
        if (err == 0)
            continue;
        xs.push_back(BigFloat(r.n));
        ys.push_back(log(err));
    }
    if (xs.size() < 5) {
        std::cerr << "not enough indexed roots in n=[10,20]\n";
        return 1;
    }
    const auto fitted = fit_line(xs, ys);
    const BigFloat pi = pi_v<BigFloat>();
    const BigFloat target = order.even ? -2 * pi * sin(pi / alpha) : -pi * sin(2 * pi / alpha);
    const double rel = static_cast<double>(abs(fitted.slope - target) / abs(target));
    rep.line(rel < 0.2, "asymptotics alpha=" + std::to_string(alpha) + ": residual log-slope " +
                            format_number(static_cast<double>(fitted.slope)) + " vs target " +
                            format_number(static_cast<double>(target)) + " (relative gap " +
                            format_number(rel) + ")");
    return rep.failures == 0 ? 0 : 1;
}

int verify_lambda_min(int alpha_max)
{
    Report rep;
    double prev_ratio = 0;
    for (int alpha = 1; alpha <= alpha_max; ++alpha) {
        double lambda;
        if (alpha == 1) {
            lambda = spectrum1<double>(1);
        } else {
            const auto rec = min_eigenvalue<double>(OperatorOrder(alpha), 53);
            lambda = rec.lambda;
        }
        const double ratio = lambda / predict_lambda_min<double>(alpha);
        const bool ok = ratio > 0.90 && ratio < 1.00 && ratio > prev_ratio;
        rep.line(ok, "lambda-min alpha=" + std::to_string(alpha) + ": ratio to asymptotic formula = " +
                         format_number(ratio));
        prev_ratio = ratio;
    }
    return rep.failures == 0 ? 0 : 1;
}

int run_rationality(int alpha, const std::string& output_path)
{
    const auto verdict = is_cos_rational(alpha);
    emit(verdict_to_json(verdict).dump(2) + "\n", output_path);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"clamped 2a-th order operator spectra: compute, scan, verify, certify"};
    app.require_subcommand(1);

    int alpha = 3;
    int count = 5;
    int alpha_max = 6;
    std::optional<int> precision_flag;
    std::string format = "csv";
    std::string output_path;
    std::string mu_text;
    std::string check = "table";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "operator order parameter a (operator order 2a)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--precision", precision_flag,
                        "mantissa bits (default 53; env CANONICAL_SPECTRA_PRECISION overrides default)");
        cmd->add_option("--output", output_path, "output file (default stdout)");
    };

    auto* sp = app.add_subcommand("spectrum", "first eigenvalues as CSV or JSON");
    add_common(sp);
    sp->add_option("--count", count, "number of eigenvalues")->check(CLI::PositiveNumber);
    sp->add_option("--format", format, "csv or json");

    auto* sc = app.add_subcommand("scan", "determinant and singular-value scan over mu");
    add_common(sc);
    sc->add_option("--mu", mu_text, "range lo:hi:step (raw mu, not multiples of pi)")->required();
    sc->add_option("--format", format, "csv, json or svg");

    auto* ve = app.add_subcommand("verify", "named verification suite, exit 0 iff all pass");
    add_common(ve);
    ve->add_option("--check", check, "table | closed-form | asymptotics | lambda-min");
    ve->add_option("--alpha-max", alpha_max, "largest alpha for lambda-min")->check(CLI::PositiveNumber);

    auto* ra = app.add_subcommand("rationality", "JSON certificate for cos(pi/alpha)");
    add_common(ra);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            const int bits = resolve_precision(precision_flag);
            return bits <= 53 ? run_spectrum<double>(alpha, count, bits, format, output_path)
                              : run_spectrum<BigFloat>(alpha, count, bits, format, output_path);
        }
        if (sc->parsed()) {
            const int bits = resolve_precision(precision_flag);
            const auto range = parse_mu_range(mu_text);
            return bits <= 53 ? run_scan<double>(alpha, range, bits, format, output_path)
                              : run_scan<BigFloat>(alpha, range, bits, format, output_path);
        }
        if (ve->parsed()) {
            if (check == "table")
                return verify_table();
            if (check == "closed-form")
                return verify_closed_form();
            if (check == "asymptotics")
                return verify_asymptotics(alpha);
            if (check == "lambda-min")
                return verify_lambda_min(alpha_max);
            std::cerr << "unknown check '" << check << "'\n";
            return 2;
        }
        if (ra->parsed())
            return run_rationality(alpha, output_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
