#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "su11/su11.hpp"

namespace su11::cli {

enum ExitCode : int {
    kOk = 0,
    kParse = 2,
    kDeterminant = 3,
    kEvanescent = 4,
    kDegenerate = 5,
    kIo = 6,
};

/// Input-validation tolerance when --tol is not given; typed decimals rarely
/// satisfy |alpha|^2 - |beta|^2 = 1 to 1e-9.
inline constexpr double kDefaultInputTol = 1e-6;

using Json = nlohmann::ordered_json;

// Report builders, one per subcommand. The matrix is the validated input.
Json classify_report(const Matrix& m);
Json iwasawa_report(const Matrix& m);
Json conjugate_report(const Matrix& m);
Json sl2r_report(const Matrix& m, bool canonical);
Json coefficients_report(const Matrix& m);

/// Plain-text rendering of a report.
std::string render_text(const Json& report);

std::string orbit_csv(const Orbit<double>& orbit);
std::string orbit_svg(const Orbit<double>& orbit);

/// "reA,imA,reB,imB", validated against tol and then renormalized.
Matrix parse_matrix(const std::string& text, double tol);

/// Entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su11::cli
