#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "canospec/eigensolver.hpp"
#include "canospec/io.hpp"
#include "canospec/number_theory.hpp"
#include "canospec/precision.hpp"

using namespace canospec;

namespace {

template <class R>
std::vector<EigenvalueRecord<R>> sample_records()
{
    std::vector<EigenvalueRecord<R>> recs;
    EigenvalueRecord<R> a;
    a.alpha = 2;
    a.n = 1;
    a.mu = R(4.730040744862704);
    a.lambda = R(500.56390391266571);
    a.delta = R(0.01765176477831352);
    a.residual = R(1.25e-13);
    a.precision_bits = 53;
    a.method = RootMethod::closed_form_alpha2;
    recs.push_back(a);
    EigenvalueRecord<R> b;
    b.alpha = 2;
    b.n = 2;
    b.mu = R(7.853204624095838);
    b.lambda = R(3803.5370633940623);
    b.delta = R(-0.0007775136971528399);
    b.residual = R(0);
    b.precision_bits = 53;
    b.method = RootMethod::general_det;
    recs.push_back(b);
    return recs;
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST(NumberFormat, DoubleRoundTripsBitExactly)
{
    for (const double x : {0.1, -1.0 / 3.0, 4.730040744862704, 1e-300, 2.2250738585072014e-308,
                           123456789.123456789, 0.0}) {
        double back = 0.0;
        parse_number(format_number(x), back);
        EXPECT_EQ(back, x);
    }
}

TEST(NumberFormat, BigFloatRoundTripsBitExactly)
{
    const BigFloat values[] = {
        pi_v<BigFloat>(),
        sqrt(BigFloat(3)) / 2,
        BigFloat(1) / 3,
        exp(BigFloat(-40)),
    };
    for (const BigFloat& x : values) {
        BigFloat back;
        parse_number(format_number(x), back);
        EXPECT_EQ(back, x);
    }
}

TEST(NumberFormat, RejectsGarbage)
{
    double out = 0.0;
    EXPECT_THROW(parse_number("not-a-number", out), std::invalid_argument);
    EXPECT_THROW(parse_number("1.5extra", out), std::invalid_argument);
}

TEST(SpectrumCsv, RoundTripsBitExactly)
{
    const auto recs = sample_records<double>();
    const auto csv = spectrum_to_csv(recs);
    const auto back = spectrum_from_csv<double>(csv);
    ASSERT_EQ(back.size(), recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        EXPECT_EQ(back[i].alpha, recs[i].alpha);
        EXPECT_EQ(back[i].n, recs[i].n);
        EXPECT_EQ(back[i].mu, recs[i].mu);
        EXPECT_EQ(back[i].lambda, recs[i].lambda);
        EXPECT_EQ(back[i].delta, recs[i].delta);
        EXPECT_EQ(back[i].residual, recs[i].residual);
        EXPECT_EQ(back[i].method, recs[i].method);
        EXPECT_EQ(back[i].precision_bits, recs[i].precision_bits);
    }
}

TEST(SpectrumCsv, BigFloatRoundTripsBitExactly)
{
    auto recs = sample_records<BigFloat>();
    recs[0].mu = pi_v<BigFloat>() * 3;
    recs[0].precision_bits = 246;
    const auto back = spectrum_from_csv<BigFloat>(spectrum_to_csv(recs));
    ASSERT_EQ(back.size(), recs.size());
    EXPECT_EQ(back[0].mu, recs[0].mu);
    EXPECT_EQ(back[1].delta, recs[1].delta);
}

TEST(SpectrumCsv, RejectsMalformedInput)
{
    EXPECT_THROW(spectrum_from_csv<double>("wrong,header\n"), std::invalid_argument);
    const std::string missing_field = std::string(spectrum_csv_header) + "\n1,2,3\n";
    EXPECT_THROW(spectrum_from_csv<double>(missing_field), std::invalid_argument);
    const std::string bad_method = std::string(spectrum_csv_header) +
                                   "\n2,1,4.7,500.5,0.01,1e-13,no_such_method,53\n";
    EXPECT_THROW(spectrum_from_csv<double>(bad_method), std::invalid_argument);
}

TEST(SpectrumJson, CarriesAllFields)
{
    const auto j = spectrum_to_json(sample_records<double>());
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["alpha"], 2);
    EXPECT_EQ(j[0]["n"], 1);
    EXPECT_EQ(j[0]["method"], "closed_form_alpha2");
    EXPECT_DOUBLE_EQ(j[0]["mu"].get<double>(), 4.730040744862704);
    // extended precision is serialized as strings
    const auto jb = spectrum_to_json(sample_records<BigFloat>());
    EXPECT_TRUE(jb[0]["mu"].is_string());
}

TEST(ScanCsv, RoundTripsBitExactly)
{
    std::vector<ScanRow<double>> rows;
    for (int i = 0; i < 20; ++i)
        rows.push_back({0.3 * i + 0.1, std::sin(0.7 * i) * 40.0, std::exp(-0.3 * i)});
    const auto back = scan_from_csv<double>(scan_to_csv(rows));
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(back[i].mu, rows[i].mu);
        EXPECT_EQ(back[i].log_abs_det_scaled, rows[i].log_abs_det_scaled);
        EXPECT_EQ(back[i].smallest_singular_value, rows[i].smallest_singular_value);
    }
    EXPECT_THROW(scan_from_csv<double>("bad header\n"), std::invalid_argument);
}

TEST(AtomicWrite, WritesAndReplaces)
{
    const auto dir = std::filesystem::temp_directory_path() / "canospec_io_test";
    std::filesystem::create_directories(dir);
    const auto target = dir / "out.txt";
    write_file_atomic(target, "first");
    EXPECT_EQ(read_file(target), "first");
    write_file_atomic(target, "second version");
    EXPECT_EQ(read_file(target), "second version");
    // no temp file left behind
    EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    std::filesystem::remove_all(dir);
}

TEST(AtomicWrite, FailsOnMissingDirectory)
{
    EXPECT_THROW(write_file_atomic("/nonexistent-dir-xyz/file.txt", "x"), std::exception);
}

TEST(Svg, DeterministicAndWellFormed)
{
    std::vector<ScanRow<double>> rows;
    for (int i = 0; i <= 40; ++i)
        rows.push_back({0.25 * i + 0.1, std::cos(0.9 * i) * 25.0, 0.0});
    const auto a = scan_to_svg(rows, "log |det|");
    const auto b = scan_to_svg(rows, "log |det|");
    EXPECT_EQ(a, b); // pure function of the data
    EXPECT_NE(a.find("<svg xmlns"), std::string::npos);
    EXPECT_NE(a.find("<polyline"), std::string::npos);
    EXPECT_NE(a.find("log |det|"), std::string::npos);
    EXPECT_NE(a.find("mu / pi"), std::string::npos);
    EXPECT_EQ(a.find("timestamp"), std::string::npos);
    // axis tick at mu = pi exists (x spans past 3 pi)
    EXPECT_NE(a.find(">1</text>"), std::string::npos);
    EXPECT_THROW(scan_to_svg(std::vector<ScanRow<double>>{{1.0, 2.0, 3.0}}, "y"),
                 std::invalid_argument);
}

TEST(VerdictJson, RationalCase)
{
    const auto j = verdict_to_json(is_cos_rational(3));
    EXPECT_EQ(j["alpha"], 3);
    EXPECT_TRUE(j["is_rational"].get<bool>());
    EXPECT_TRUE(j["arithmetic_progression"].get<bool>());
    EXPECT_EQ(j["value"]["numerator"], "1");
    EXPECT_EQ(j["value"]["denominator"], "2");
    // cos(pi/2) = 0 is rational but gives no progression
    const auto j2 = verdict_to_json(is_cos_rational(2));
    EXPECT_TRUE(j2["is_rational"].get<bool>());
    EXPECT_FALSE(j2["arithmetic_progression"].get<bool>());
}

TEST(VerdictJson, CertifiedIrrationalCase)
{
    const auto j = verdict_to_json(is_cos_rational(4));
    EXPECT_FALSE(j["is_rational"].get<bool>());
    EXPECT_FALSE(j["arithmetic_progression"].get<bool>());
    EXPECT_TRUE(j["certified"].get<bool>());
    EXPECT_EQ(j["witness_divisor"], 4);
    EXPECT_EQ(j["witness_degree"], 2);
    EXPECT_EQ(j["exclusion_interval"], "(1/2, 1)");
    EXPECT_FALSE(j["root_inside_interval"].get<bool>());
    // 2y^2 - 1 ascending: -1, 0, 2
    const auto coeffs = j["witness_polynomial"];
    ASSERT_EQ(coeffs.size(), 3u);
    EXPECT_EQ(coeffs[0], "-1");
    EXPECT_EQ(coeffs[2], "2");
    EXPECT_EQ(j["candidates_checked"].size(), 4u);
    for (const auto& c : j["candidates_checked"])
        EXPECT_TRUE(c.contains("value") || c.value("value_omitted", false));
}

TEST(VerdictJson, DeferredCase)
{
    const auto j = verdict_to_json(is_cos_rational(17));
    EXPECT_FALSE(j["is_rational"].get<bool>());
    EXPECT_FALSE(j["certified"].get<bool>());
    EXPECT_TRUE(j.contains("note"));
    EXPECT_FALSE(j.contains("witness_divisor"));
}
