#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "stack_file.hpp"
#include "su11/su11.hpp"
#include "test_support.hpp"

using namespace su11;
using su11::cli::Json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = su11::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

std::string matrix_arg(const Matrix& m) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", m.alpha().real(), m.alpha().imag(), m.beta().real(),
                  m.beta().imag());
    return buf;
}

std::string data_file(const std::string& name) { return std::string(SU11_DATA_DIR) + "/" + name; }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("su11_cli_test_" + name);
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

// --- stack files ------------------------------------------------------------

TEST(StackFile, ParsesAllKeys) {
    std::istringstream in(
        "# header\n"
        "ambient 1.2   # glass-ish\n"
        "substrate 1.2\n"
        "wavelength 500\n"
        "angle 12.5\n"
        "pol p\n"
        "\n"
        "layer 2.0 10\n"
        "layer 1.4 +20.5\n");
    const auto s = su11::cli::parse_stack(in);
    EXPECT_EQ(s.ambient_index, 1.2);
    EXPECT_EQ(s.substrate_index, 1.2);
    EXPECT_EQ(s.wavelength, 500);
    EXPECT_EQ(s.incidence_angle_deg, 12.5);
    EXPECT_EQ(s.polarization, Polarization::p);
    ASSERT_EQ(s.layers.size(), 2u);
    EXPECT_EQ(s.layers[1].index, 1.4);
    EXPECT_EQ(s.layers[1].thickness, 20.5);
}

TEST(StackFile, SubstrateDefaultsToAmbient) {
    std::istringstream in("ambient 1.33\nwavelength 1\n");
    EXPECT_EQ(su11::cli::parse_stack(in).substrate_index, 1.33);
}

TEST(StackFile, Rejects) {
    for (const char* text : {"wavelength 1\n", "ambient 1\n", "ambient 1\nwavelength 1\nfoo 2\n",
                             "ambient 1\nambient 1\nwavelength 1\n", "ambient 1x\nwavelength 1\n",
                             "ambient 1\nwavelength 1\nlayer 1.5\n", "ambient 1\nwavelength 1\npol q\n",
                             "ambient inf\nwavelength 1\n", "ambient nan\nwavelength 1\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(su11::cli::parse_stack(in), su11::cli::ParseError) << text;
    }
}

// --- classify ----------------------------------------------------------------

TEST(CmdClassify, HyperbolicExample) {
    const auto j = run_json({"classify", "--matrix", "2,0,1.7320508,0"});
    EXPECT_EQ(j["class"], "A");
    EXPECT_NEAR(j["trace"].get<double>(), 4.0, 1e-7);
    EXPECT_EQ(j["fixed_points"]["kind"], "pair_boundary");
    EXPECT_NEAR(j["fixed_points"]["points"][0]["re"].get<double>(), 1.0, 1e-7);
    EXPECT_NEAR(j["fixed_points"]["points"][1]["re"].get<double>(), -1.0, 1e-7);
    EXPECT_EQ(j["fixed_points"]["points"][0]["region"], "boundary");
}

TEST(CmdClassify, IdentityDegenerate) {
    const auto j = run_json({"classify", "--matrix", "1,0,0,0"});
    EXPECT_EQ(j["class"], "N");
    EXPECT_EQ(j["degenerate"], true);
    EXPECT_EQ(j["fixed_points"]["kind"], "all_points");
}

TEST(CmdClassify, QuarterWaveStack) {
    const auto j = run_json({"classify", "--stack", data_file("quarter_wave.stack")});
    EXPECT_EQ(j["class"], "K");
}

TEST(CmdClassify, TextReport) {
    const auto r = run({"classify", "--matrix", "1,0,0,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("class: N\n"), std::string::npos);
    EXPECT_NE(r.out.find("degenerate: true\n"), std::string::npos);
}

// --- iwasawa -----------------------------------------------------------------

TEST(CmdIwasawa, Identity) {
    const auto j = run_json({"iwasawa", "--matrix", "1,0,0,0"});
    EXPECT_EQ(j["phi"], 0.0);
    EXPECT_EQ(j["xi"], 0.0);
    EXPECT_EQ(j["nu"], 0.0);
    EXPECT_EQ(j["magnification"], 1.0);
}

TEST(CmdIwasawa, KnownProduct) {
    const auto m = make_k(kPi / 2) * make_a(1.0) * make_n(0.5);
    const auto j = run_json({"iwasawa", "--matrix", matrix_arg(m)});
    EXPECT_NEAR(j["phi"].get<double>(), kPi / 2, 1e-11);
    EXPECT_NEAR(j["xi"].get<double>(), 1.0, 1e-11);
    EXPECT_NEAR(j["nu"].get<double>(), 0.5, 1e-11);
}

TEST(CmdIwasawa, ResidualOnRandomMatrices) {
    su11::testing::Random rng(90);
    for (int k = 0; k < 1000; ++k) {
        const auto j = run_json({"iwasawa", "--matrix", matrix_arg(rng.matrix(4.0))});
        EXPECT_LE(j["recomposition_residual"].get<double>(), 1e-9);
    }
}

// --- conjugate -----------------------------------------------------------------

TEST(CmdConjugate, RotationNeedsIdentity) {
    const auto j = run_json({"conjugate", "--matrix", matrix_arg(make_k(1.2))});
    EXPECT_EQ(j["conjugator"]["alpha"]["re"], 1.0);
    EXPECT_EQ(j["conjugator"]["beta"]["re"], 0.0);
    EXPECT_EQ(j["canonical_form"]["subgroup"], "K");
}

TEST(CmdConjugate, HyperbolicExample) {
    const auto j = run_json({"conjugate", "--matrix", "2,0,1.7320508075688772,0"});
    EXPECT_EQ(j["canonical_form"]["subgroup"], "A");
    EXPECT_NEAR(j["canonical_form"]["parameter"].get<double>(), 2 * std::acosh(2.0), 1e-9);
    EXPECT_LE(j["off_form_residual"].get<double>(), 1e-8);
}

TEST(CmdConjugate, NilpotentRoundTrip) {
    su11::testing::Random rng(91);
    const auto m = conjugate(make_n(1.5), rng.matrix(1.0));
    const auto j = run_json({"conjugate", "--matrix", matrix_arg(m)});
    EXPECT_EQ(j["canonical_form"]["subgroup"], "N");
    EXPECT_LE(j["off_form_residual"].get<double>(), 1e-8);
    EXPECT_GT(j["canonical_form"]["parameter"].get<double>(), 0.0);
}

TEST(CmdConjugate, DegenerateExitCode) {
    EXPECT_EQ(run({"conjugate", "--matrix", "1,0,0,0"}).code, su11::cli::kDegenerate);
    EXPECT_EQ(run({"conjugate", "--stack", data_file("half_wave.stack")}).code, su11::cli::kDegenerate);
}

// --- sl2r ----------------------------------------------------------------------

TEST(CmdSl2r, Lens) {
    const auto j = run_json({"sl2r", "--matrix", matrix_arg(make_n(3.0))});
    EXPECT_EQ(j["sl2r"]["a11"], 1.0);
    EXPECT_EQ(j["sl2r"]["a12"], 0.0);
    EXPECT_EQ(j["sl2r"]["a21"], 3.0);
    EXPECT_EQ(j["sl2r"]["a22"], 1.0);
    EXPECT_EQ(j["reading"][2], "lens of power 3");
}

TEST(CmdSl2r, RotationByPi) {
    const auto j = run_json({"sl2r", "--matrix", matrix_arg(make_k(kPi))});
    EXPECT_NEAR(j["factors"]["phi"].get<double>(), kPi, 1e-11);
    EXPECT_EQ(j["reading"][0], "rotation by 3.14159265359 rad");
}

TEST(CmdSl2r, IdentitySystem) {
    const auto j = run_json({"sl2r", "--matrix", "1,0,0,0"});
    EXPECT_EQ(j["reading"][0], "identity system");
}

TEST(CmdSl2r, CanonicalBasis) {
    const auto j = run_json({"sl2r", "--canonical", "--matrix", "2,0,1.7320508075688772,0"});
    EXPECT_NEAR(j["sl2r"]["a11"].get<double>(), 2 + std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(j["sl2r"]["a12"].get<double>(), 0.0, 1e-9);
    EXPECT_NEAR(j["sl2r"]["a21"].get<double>(), 0.0, 1e-9);
}

// --- coefficients ----------------------------------------------------------------

TEST(CmdCoefficients, QuarterWave) {
    const auto j = run_json({"coefficients", "--stack", data_file("quarter_wave.stack")});
    EXPECT_NEAR(j["reflectance"].get<double>(), 0.147928994083, 1e-12);
    EXPECT_NEAR(j["energy_sum"].get<double>(), 1.0, 1e-12);
}

// --- orbit -----------------------------------------------------------------------

TEST(CmdOrbit, RotationCsv) {
    const auto path = temp_path("k.csv");
    const auto r = run({"orbit", "--subgroup", "K", "--seed", "0.5,0", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = read_lines(path);
    ASSERT_EQ(lines.size(), 257u);
    EXPECT_EQ(lines[0], "parameter,re,im");
    for (std::size_t k = 1; k < lines.size(); ++k) {
        double p, re, im;
        ASSERT_EQ(std::sscanf(lines[k].c_str(), "%lf,%lf,%lf", &p, &re, &im), 3);
        EXPECT_NEAR(re * re + im * im, 0.25, kGeo);
    }
}

TEST(CmdOrbit, AbelianEndpoints) {
    const auto path = temp_path("a.csv");
    ASSERT_EQ(run({"orbit", "--subgroup", "A", "--seed", "0.2,0.1", "--range", "-14,14", "--out", path.string()}).code, 0);
    const auto lines = read_lines(path);
    double p, re, im;
    std::sscanf(lines[1].c_str(), "%lf,%lf,%lf", &p, &re, &im);
    EXPECT_LT(std::abs(std::complex<double>(re, im) - std::complex<double>(0, 1)), 1e-3);
    std::sscanf(lines.back().c_str(), "%lf,%lf,%lf", &p, &re, &im);
    EXPECT_LT(std::abs(std::complex<double>(re, im) - std::complex<double>(0, -1)), 1e-3);
}

TEST(CmdOrbit, NilpotentSvg) {
    const auto path = temp_path("n.svg");
    ASSERT_EQ(run({"orbit", "--subgroup", "N", "--seed", "0.3,-0.2", "--format", "svg", "--out", path.string()}).code, 0);
    std::ifstream in(path);
    const std::string svg((std::istreambuf_iterator<char>(in)), {});
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("<path d=\"M"), std::string::npos);
    EXPECT_NE(svg.find("width=\"512\" height=\"512\""), std::string::npos);
}

TEST(CmdOrbit, Errors) {
    const auto path = temp_path("bad.csv").string();
    EXPECT_EQ(run({"orbit", "--subgroup", "K", "--seed", "0.5", "--out", path}).code, su11::cli::kParse);
    EXPECT_EQ(run({"orbit", "--subgroup", "K", "--seed", "0.5,0", "--range", "1,0", "--out", path}).code,
              su11::cli::kParse);
    EXPECT_EQ(run({"orbit", "--subgroup", "Q", "--seed", "0.5,0", "--out", path}).code, su11::cli::kParse);
    EXPECT_EQ(run({"orbit", "--subgroup", "K", "--seed", "0.5,0", "--n", "1", "--out", path}).code, su11::cli::kParse);
    EXPECT_EQ(run({"orbit", "--subgroup", "K", "--seed", "0.5,0", "--out", "/nonexistent/dir/x.csv"}).code,
              su11::cli::kIo);
}

// --- errors and global behaviour ----------------------------------------------------

TEST(CliErrors, ExitCodes) {
    EXPECT_EQ(run({"classify", "--matrix", "1,0,0"}).code, su11::cli::kParse);
    EXPECT_EQ(run({"classify", "--matrix", "a,b,c,d"}).code, su11::cli::kParse);
    EXPECT_EQ(run({"classify"}).code, su11::cli::kParse);
    EXPECT_EQ(run({"classify", "--matrix", "1,0,0,0", "--stack", data_file("quarter_wave.stack")}).code,
              su11::cli::kParse);
    EXPECT_EQ(run({"frobnicate"}).code, su11::cli::kParse);
    EXPECT_EQ(run({}).code, su11::cli::kParse);
    EXPECT_EQ(run({"classify", "--matrix", "1,0,1,0"}).code, su11::cli::kDeterminant);
    EXPECT_EQ(run({"classify", "--stack", "/nonexistent.stack"}).code, su11::cli::kIo);
    EXPECT_EQ(run({"--help"}).code, su11::cli::kOk);

    const auto evanescent = temp_path("evanescent.stack");
    std::ofstream(evanescent) << "ambient 1.5\nwavelength 500\nangle 60\nlayer 1.0 10\n";
    EXPECT_EQ(run({"classify", "--stack", evanescent.string()}).code, su11::cli::kEvanescent);

    const auto mismatched = temp_path("mismatched.stack");
    std::ofstream(mismatched) << "ambient 1.0\nsubstrate 1.5\nwavelength 500\nlayer 1.2 10\n";
    EXPECT_EQ(run({"classify", "--stack", mismatched.string()}).code, su11::cli::kDeterminant);
}

TEST(CliErrors, TolFlag) {
    EXPECT_EQ(run({"--tol", "1e-9", "classify", "--matrix", "2,0,1.7320508,0"}).code, su11::cli::kDeterminant);
    EXPECT_EQ(run({"classify", "--tol", "1e-6", "--matrix", "2,0,1.7320508,0"}).code, su11::cli::kOk);
    EXPECT_EQ(run({"--tol", "-1", "classify", "--matrix", "1,0,0,0"}).code, su11::cli::kParse);
}

TEST(CliProperties, Deterministic) {
    for (const auto& cmd : {"classify", "iwasawa", "conjugate", "sl2r", "coefficients"}) {
        const std::vector<std::string> args{"--json", cmd, "--stack", data_file("hl_mirror.stack")};
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

TEST(CliProperties, JsonEchoRoundTrips) {
    su11::testing::Random rng(92);
    for (int k = 0; k < 100; ++k) {
        const auto s = su11::testing::class_sample(rng, static_cast<ClassTag>(k % 3));
        for (const auto& cmd : {"classify", "iwasawa", "conjugate", "sl2r", "coefficients"}) {
            const auto first = run_json({cmd, "--matrix", matrix_arg(s.matrix)});
            const auto& echo = first["matrix"];
            char buf[200];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", echo["alpha"]["re"].get<double>(),
                          echo["alpha"]["im"].get<double>(), echo["beta"]["re"].get<double>(),
                          echo["beta"]["im"].get<double>());
            const auto second = run_json({cmd, "--matrix", buf});
            // Every number agrees to the printed 12 significant digits (1e-9 absolute
            // for quantities that are zero up to rounding noise).
            const auto a = first.flatten();
            const auto b = second.flatten();
            ASSERT_EQ(a.size(), b.size());
            for (const auto& [key, value] : a.items()) {
                // Prose fields repeat numbers already compared above.
                if (key.find("family") != std::string::npos || key.find("reading") != std::string::npos) continue;
                if (value.is_number()) {
                    const double x = value.get<double>();
                    const double y = b[key].get<double>();
                    EXPECT_NEAR(x, y, 1e-9 * std::max(1.0, std::abs(x))) << cmd << " " << key;
                } else {
                    EXPECT_EQ(value, b[key]) << cmd << " " << key;
                }
            }
        }
    }
}

}  // namespace
