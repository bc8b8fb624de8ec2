#ifndef CANOSPEC_IO_HPP
#define CANOSPEC_IO_HPP

// Serialization: CSV and JSON for eigenvalue records and scan rows, a
// minimal deterministic SVG line chart, and an atomic file writer.
// Native doubles are printed as shortest round-trip decimals; extended
// precision values carry enough digits to reparse bit-exactly.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "canospec/eigensolver.hpp"
#include "canospec/number_theory.hpp"
#include "canospec/precision.hpp"

namespace canospec {

inline std::string format_number(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string format_number(const BigFloat& x)
{
    return x.str(std::numeric_limits<BigFloat>::max_digits10, std::ios_base::scientific);
}

inline void parse_number(const std::string& s, double& out)
{
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_number: bad double '" + s + "'");
}

inline void parse_number(const std::string& s, BigFloat& out)
{
    out = BigFloat(s);
}

// temp file in the target directory, then rename: readers never observe a
// partially written file
inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const auto tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        out << contents;
        if (!out.flush())
            throw std::runtime_error("write_file_atomic: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline constexpr const char* spectrum_csv_header = "alpha,n,mu,lambda,delta,residual,method,precision_bits";

template <class R>
std::string spectrum_to_csv(const std::vector<EigenvalueRecord<R>>& records)
{
    std::string out = spectrum_csv_header;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.alpha);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += format_number(r.mu);
        out += ',';
        out += format_number(r.lambda);
        out += ',';
        out += format_number(r.delta);
        out += ',';
        out += format_number(r.residual);
        out += ',';
        out += to_string(r.method);
        out += ',';
        out += std::to_string(r.precision_bits);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline RootMethod method_from_string(const std::string& s)
{
    for (RootMethod m : {RootMethod::general_det, RootMethod::closed_form_alpha2,
                         RootMethod::closed_form_alpha3_even, RootMethod::transcendental_alpha3_odd})
        if (s == to_string(m))
            return m;
    throw std::invalid_argument("unknown root method '" + s + "'");
}

} // namespace detail

template <class R>
std::vector<EigenvalueRecord<R>> spectrum_from_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != spectrum_csv_header)
        throw std::invalid_argument("spectrum_from_csv: missing or wrong header");
    std::vector<EigenvalueRecord<R>> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 8)
            throw std::invalid_argument("spectrum_from_csv: expected 8 fields, got " +
                                        std::to_string(f.size()));
        EigenvalueRecord<R> r;
        r.alpha = std::stoi(f[0]);
        r.n = std::stoi(f[1]);
        parse_number(f[2], r.mu);
        parse_number(f[3], r.lambda);
        parse_number(f[4], r.delta);
        parse_number(f[5], r.residual);
        r.method = detail::method_from_string(f[6]);
        r.precision_bits = std::stoi(f[7]);
        records.push_back(std::move(r));
    }
    return records;
}

template <class R>
nlohmann::json spectrum_to_json(const std::vector<EigenvalueRecord<R>>& records)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["alpha"] = r.alpha;
        row["n"] = r.n;
        if constexpr (std::is_same_v<R, double>) {
            row["mu"] = r.mu;
            row["lambda"] = r.lambda;
            row["delta"] = r.delta;
            row["residual"] = r.residual;
        } else {
            // extended precision does not fit a JSON number; strings round-trip
            row["mu"] = format_number(r.mu);
            row["lambda"] = format_number(r.lambda);
            row["delta"] = format_number(r.delta);
            row["residual"] = format_number(r.residual);
        }
        row["method"] = to_string(r.method);
        row["precision_bits"] = r.precision_bits;
        arr.push_back(std::move(row));
    }
    return arr;
}

template <class R>
struct ScanRow {
    R mu{};
    R log_abs_det_scaled{};
    R smallest_singular_value{};
};

inline constexpr const char* scan_csv_header = "mu,log_abs_det_scaled,smallest_singular_value";

template <class R>
std::string scan_to_csv(const std::vector<ScanRow<R>>& rows)
{
    std::string out = scan_csv_header;
    out += '\n';
    for (const auto& r : rows) {
        out += format_number(r.mu);
        out += ',';
        out += format_number(r.log_abs_det_scaled);
        out += ',';
        out += format_number(r.smallest_singular_value);
        out += '\n';
    }
    return out;
}

template <class R>
std::vector<ScanRow<R>> scan_from_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != scan_csv_header)
        throw std::invalid_argument("scan_from_csv: missing or wrong header");
    std::vector<ScanRow<R>> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 3)
            throw std::invalid_argument("scan_from_csv: expected 3 fields");
        ScanRow<R> r;
        parse_number(f[0], r.mu);
        parse_number(f[1], r.log_abs_det_scaled);
        parse_number(f[2], r.smallest_singular_value);
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace detail {

inline nlohmann::json rational_to_json(const BigRational& r)
{
    nlohmann::json j;
    j["numerator"] = boost::multiprecision::numerator(r).str();
    j["denominator"] = boost::multiprecision::denominator(r).str();
    return j;
}

// full decimal strings only below this size; bigger values are summarized
inline constexpr std::uint64_t json_value_bits_cap = 4096;

} // namespace detail

// JSON certificate mirroring the verdict; big integers as decimal strings.
// Candidate values whose scaled integer exceeds the cap are summarized by
// sign and bit length (the exact data the scan certifies).
inline nlohmann::json verdict_to_json(const RationalityVerdict& v)
{
    nlohmann::json j;
    j["alpha"] = v.alpha;
    j["is_rational"] = v.is_rational;
    j["arithmetic_progression"] = v.is_rational && v.value && *v.value != 0;
    if (v.value)
        j["value"] = detail::rational_to_json(*v.value);
    if (!v.is_rational) {
        j["certified"] = v.certified;
        if (!v.note.empty())
            j["note"] = v.note;
        if (v.certificate) {
            const auto& cert = *v.certificate;
            j["witness_divisor"] = cert.witness.beta;
            j["witness_sign"] = cert.witness.sign;
            j["witness_degree"] = cert.witness.polynomial.degree();
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : cert.witness.polynomial.coefficients)
                coeffs.push_back(c.str());
            j["witness_polynomial"] = std::move(coeffs);
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& chk : cert.checks) {
                nlohmann::json c;
                c["candidate"] = detail::rational_to_json(chk.candidate);
                c["is_root"] = chk.is_root;
                c["sign"] = chk.sign;
                c["scaled_value_bits"] = chk.scaled_value_bits;
                if (chk.value && chk.scaled_value_bits <= detail::json_value_bits_cap)
                    c["value"] = detail::rational_to_json(*chk.value);
                else
                    c["value_omitted"] = true;
                checks.push_back(std::move(c));
            }
            j["candidates_checked"] = std::move(checks);
            j["has_rational_root"] = cert.has_rational_root;
            j["root_inside_interval"] = cert.root_inside_interval;
            j["exclusion_interval"] = "(1/2, 1)"; // where cos(pi/beta) lives for beta >= 4
        }
    }
    return j;
}

namespace detail {

inline std::string svg_coord(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

} // namespace detail

// Single-curve SVG 1.1 line chart.  The horizontal axis is mu in units of
// pi; output is a pure function of the data (no timestamps or ids).
template <class R>
std::string scan_to_svg(const std::vector<ScanRow<R>>& rows, const std::string& y_label)
{
    if (rows.size() < 2)
        throw std::invalid_argument("scan_to_svg: need at least two rows");
    const double width = 800, height = 400, ml = 60, mr = 15, mt = 15, mb = 40;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
        const double x = static_cast<double>(r.mu) / 3.14159265358979323846;
        const double y = static_cast<double>(r.log_abs_det_scaled);
        pts.emplace_back(x, y);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin)
        xmax = xmin + 1;
    if (ymax == ymin)
        ymax = ymin + 1;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"400\" "
           "viewBox=\"0 0 800 400\">\n";
    svg += "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : pts) {
        const double px = ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
        const double py = height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
        svg += detail::svg_coord(px);
        svg += ',';
        svg += detail::svg_coord(py);
        svg += ' ';
    }
    svg += "\"/>\n";
    svg += "<text x=\"400\" y=\"392\" text-anchor=\"middle\" font-size=\"14\">mu / pi</text>\n";
    svg += "<text x=\"14\" y=\"200\" text-anchor=\"middle\" font-size=\"14\" "
           "transform=\"rotate(-90 14 200)\">" + y_label + "</text>\n";
    // integer pi-multiple ticks
    for (int t = static_cast<int>(std::ceil(xmin)); t <= static_cast<int>(std::floor(xmax)); ++t) {
        const double px = ml + (t - xmin) / (xmax - xmin) * (width - ml - mr);
        svg += "<line x1=\"" + detail::svg_coord(px) + "\" y1=\"" + detail::svg_coord(height - mb) +
               "\" x2=\"" + detail::svg_coord(px) + "\" y2=\"" + detail::svg_coord(height - mb + 5) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + detail::svg_coord(px) + "\" y=\"" + detail::svg_coord(height - mb + 18) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(t) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace canospec

#endif
