#include "stack_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace su11::cli {

double parse_real(const std::string& token, const std::string& what) {
    double value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty() || !std::isfinite(value)) {
        throw ParseError("invalid number for " + what + ": '" + token + "'");
    }
    return value;
}

LayerStack<double> parse_stack(std::istream& in) {
    LayerStack<double> stack;
    bool have_ambient = false;
    bool have_substrate = false;
    bool have_wavelength = false;
    std::set<std::string> seen;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;

        const std::string where = "line " + std::to_string(line_no);
        const std::string& key = tokens[0];
        auto expect_args = [&](std::size_t n) {
            if (tokens.size() != n + 1) {
                throw ParseError(where + ": '" + key + "' takes " + std::to_string(n) + " value(s)");
            }
        };
        if (key != "layer" && !seen.insert(key).second) throw ParseError(where + ": duplicate '" + key + "'");

        if (key == "ambient") {
            expect_args(1);
            stack.ambient_index = parse_real(tokens[1], where + " ambient");
            have_ambient = true;
        } else if (key == "substrate") {
            expect_args(1);
            stack.substrate_index = parse_real(tokens[1], where + " substrate");
            have_substrate = true;
        } else if (key == "wavelength") {
            expect_args(1);
            stack.wavelength = parse_real(tokens[1], where + " wavelength");
            have_wavelength = true;
        } else if (key == "angle") {
            expect_args(1);
            stack.incidence_angle_deg = parse_real(tokens[1], where + " angle");
        } else if (key == "pol") {
            expect_args(1);
            if (tokens[1] == "s") {
                stack.polarization = Polarization::s;
            } else if (tokens[1] == "p") {
                stack.polarization = Polarization::p;
            } else {
                throw ParseError(where + ": pol must be 's' or 'p'");
            }
        } else if (key == "layer") {
            expect_args(2);
            stack.layers.push_back(
                {parse_real(tokens[1], where + " layer index"), parse_real(tokens[2], where + " layer thickness")});
        } else {
            throw ParseError(where + ": unknown keyword '" + key + "'");
        }
    }
    if (!have_ambient) throw ParseError("stack file has no 'ambient' line");
    if (!have_wavelength) throw ParseError("stack file has no 'wavelength' line");
    if (!have_substrate) stack.substrate_index = stack.ambient_index;
    return stack;
}

LayerStack<double> read_stack_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read stack file '" + path + "'");
    return parse_stack(in);
}

}  // namespace su11::cli
