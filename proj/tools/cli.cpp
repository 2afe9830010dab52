#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "stack_file.hpp"

namespace su11::cli {
namespace {

/// Numbers are rounded to the printed precision so JSON and text agree.
double rounded(double x) { return std::stod(format_real(x)); }

Json complex_json(std::complex<double> z) { return Json{{"re", rounded(z.real())}, {"im", rounded(z.imag())}}; }

Json point_json(const Point& p) {
    Json j;
    if (p.is_infinite()) {
        j["infinity"] = true;
    } else {
        j = complex_json(p.value());
    }
    j["region"] = to_string(p.region());
    return j;
}

Json matrix_json(const Matrix& m) {
    return Json{{"alpha", complex_json(m.alpha())}, {"beta", complex_json(m.beta())}};
}

std::string signed_tag(ClassTag tag, TraceSign sign) {
    std::string s = to_string(tag);
    return (tag != ClassTag::K && sign == TraceSign::minus) ? "-" + s : s;
}

const char* parameter_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::K: return "phi";
        case ClassTag::A: return "xi";
        case ClassTag::N: return "nu";
    }
    return "?";
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<double> split_reals(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_real(text.substr(start, comma - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() != count) {
        throw ParseError(what + " needs " + std::to_string(count) + " comma-separated numbers");
    }
    return values;
}

// --- text rendering -------------------------------------------------------

std::string scalar_text(const Json& v) {
    if (v.is_object()) {
        std::string s = v.contains("infinity") ? "inf" : format_complex({v["re"].get<double>(), v["im"].get<double>()});
        if (v.contains("region")) s += " (" + v["region"].get<std::string>() + ")";
        return s;
    }
    if (v.is_number()) return format_real(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_leaf(const Json& v) {
    return !v.is_array() && (!v.is_object() || v.contains("re") || v.contains("infinity"));
}

void render(const Json& node, int depth, std::string& out) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [key, value] : node.items()) {
        if (is_leaf(value)) {
            out += indent + key + ": " + scalar_text(value) + "\n";
        } else if (value.is_array()) {
            out += indent + key + ":\n";
            for (const auto& item : value) {
                if (is_leaf(item)) {
                    out += indent + "  - " + scalar_text(item) + "\n";
                } else {
                    out += indent + "  -\n";
                    render(item, depth + 2, out);
                }
            }
        } else {
            out += indent + key + ":\n";
            render(value, depth + 1, out);
        }
    }
}

// --- commands -------------------------------------------------------------

struct Input {
    std::string matrix;
    std::string stack;
};

Matrix load_input(const Input& in, double tol) {
    if (in.matrix.empty() == in.stack.empty()) throw ParseError("give exactly one of --matrix or --stack");
    if (!in.matrix.empty()) return parse_matrix(in.matrix, tol);
    return build_matrix(read_stack_file(in.stack), tol).renormalized();
}

void add_input_options(CLI::App* sub, Input& in) {
    sub->add_option("--matrix", in.matrix, "transfer matrix as reA,imA,reB,imB");
    sub->add_option("--stack", in.stack, "layer stack file");
}

std::string orbit_marker_svg(std::complex<double> z) {
    return "<circle cx=\"" + format_real(256 + 256 * z.real()) + "\" cy=\"" + format_real(256 - 256 * z.imag()) +
           "\" r=\"3\" fill=\"black\"/>\n";
}

}  // namespace

Matrix parse_matrix(const std::string& text, double tol) {
    const auto v = split_reals(text, 4, "--matrix");
    return Matrix::make({v[0], v[1]}, {v[2], v[3]}, tol).renormalized();
}

Json classify_report(const Matrix& m) {
    const auto cls = classify(m);
    const auto fp = fixed_points(m);
    Json points = Json::array();
    for (const auto& p : points_of(fp)) points.push_back(point_json(p));

    Json j;
    j["command"] = "classify";
    j["matrix"] = matrix_json(m);
    j["class"] = to_string(cls.tag);
    j["trace"] = rounded(cls.trace);
    j["trace_squared"] = rounded(cls.trace * cls.trace);
    j["trace_sign"] = to_string(cls.sign);
    j["degenerate"] = cls.degenerate;
    j["fixed_points"] = Json{{"kind", variant_name(fp)}, {"points", points}};
    return j;
}

Json iwasawa_report(const Matrix& m) {
    const auto f = decompose(m);
    Json j;
    j["command"] = "iwasawa";
    j["matrix"] = matrix_json(m);
    j["phi"] = rounded(f.phi);
    j["xi"] = rounded(f.xi);
    j["nu"] = rounded(f.nu);
    j["magnification"] = rounded(magnification(f));
    j["recomposition_residual"] = rounded(recompose(f).distance(m));
    return j;
}

Json conjugate_report(const Matrix& m) {
    const auto red = reduce_to_canonical(m);
    const auto& cls = red.classification;
    Json j;
    j["command"] = "conjugate";
    j["matrix"] = matrix_json(m);
    j["class"] = to_string(cls.tag);
    j["trace_sign"] = to_string(cls.sign);
    j["conjugator"] = matrix_json(red.family.canonical_member);
    j["family"] = red.family.family_parameter_description;
    j["canonical_form"] = Json{{"subgroup", signed_tag(cls.tag, cls.sign)},
                               {"parameter_name", parameter_name(cls.tag)},
                               {"parameter", rounded(red.parameter)},
                               {"matrix", matrix_json(red.reduced)}};
    j["off_form_residual"] = rounded(canonical_residual(red.reduced, cls.tag, cls.sign));
    j["trace_difference"] = rounded(std::abs(red.reduced.trace() - m.trace()));
    return j;
}

Json sl2r_report(const Matrix& m, bool canonical) {
    Matrix source = m;
    Json j;
    j["command"] = "sl2r";
    j["matrix"] = matrix_json(m);
    if (canonical) {
        const auto red = reduce_to_canonical(m);
        j["conjugator"] = matrix_json(red.family.canonical_member);
        source = red.reduced;
    }
    const auto r = to_sl2r(source);
    const auto f = real_iwasawa(r);
    j["sl2r"] = Json{{"a11", rounded(r.a11)}, {"a12", rounded(r.a12)}, {"a21", rounded(r.a21)}, {"a22", rounded(r.a22)}};
    j["determinant"] = rounded(r.determinant());
    j["factors"] = Json{{"phi", rounded(f.phi)}, {"xi", rounded(f.xi)}, {"nu", rounded(f.nu)}};
    j["reading"] = split_lines(physical_reading(f));
    return j;
}

Json coefficients_report(const Matrix& m) {
    const auto c = coefficients(m);
    Json j;
    j["command"] = "coefficients";
    j["matrix"] = matrix_json(m);
    j["R"] = complex_json(c.reflection);
    j["T"] = complex_json(c.transmission);
    j["reflectance"] = rounded(std::norm(c.reflection));
    j["transmittance"] = rounded(std::norm(c.transmission));
    j["energy_sum"] = rounded(std::norm(c.reflection) + std::norm(c.transmission));
    return j;
}

std::string render_text(const Json& report) {
    std::string out;
    render(report, 0, out);
    return out;
}

std::string orbit_csv(const Orbit<double>& orbit) {
    std::string out = "parameter,re,im\n";
    for (const auto& s : orbit.samples) {
        out += format_real(s.parameter) + ",";
        if (s.point.is_infinite()) {
            out += "inf,inf\n";
        } else {
            out += format_real(s.point.value().real()) + "," + format_real(s.point.value().imag()) + "\n";
        }
    }
    return out;
}

std::string orbit_svg(const Orbit<double>& orbit) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" "
        "viewBox=\"0 0 512 512\">\n"
        "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n"
        "<circle cx=\"256\" cy=\"256\" r=\"256\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    std::string d;
    bool pen_down = false;
    for (const auto& s : orbit.samples) {
        if (s.point.is_infinite()) {
            pen_down = false;
            continue;
        }
        const auto z = s.point.value();
        d += (pen_down ? " L" : (d.empty() ? "M" : " M")) + format_real(256 + 256 * z.real()) + "," +
             format_real(256 - 256 * z.imag());
        pen_down = true;
    }
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\"/>\n";
    switch (orbit.subgroup) {
        case ClassTag::K: out += orbit_marker_svg({0, 0}); break;
        case ClassTag::A:
            out += orbit_marker_svg({0, 1});
            out += orbit_marker_svg({0, -1});
            break;
        case ClassTag::N: out += orbit_marker_svg({0, 1}); break;
    }
    out += "</svg>\n";
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SU(1,1) multilayer classification toolkit", "su11"};
    app.fallthrough();
    app.require_subcommand(1);

    bool json = false;
    double tol = kDefaultInputTol;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--tol", tol, "tolerance for validating input matrices")->check(CLI::PositiveNumber);

    Input input;
    bool canonical = false;

    auto* classify_cmd = app.add_subcommand("classify", "trace class, fixed points");
    auto* iwasawa_cmd = app.add_subcommand("iwasawa", "K(phi) A(xi) N(nu) factors");
    auto* conjugate_cmd = app.add_subcommand("conjugate", "reduce to canonical subgroup form");
    auto* sl2r_cmd = app.add_subcommand("sl2r", "real ABCD picture and its factorisation");
    auto* coeff_cmd = app.add_subcommand("coefficients", "reflection and transmission coefficients");
    for (auto* sub : {classify_cmd, iwasawa_cmd, conjugate_cmd, sl2r_cmd, coeff_cmd}) add_input_options(sub, input);
    sl2r_cmd->add_flag("--canonical", canonical, "conjugate to canonical form before mapping");

    auto* orbit_cmd = app.add_subcommand("orbit", "sampled subgroup orbit as CSV or SVG");
    std::string subgroup_name;
    std::string seed_text;
    std::string range_text;
    int n_samples = kDefaultOrbitSamples;
    std::string out_path;
    std::string format = "csv";
    orbit_cmd->add_option("--subgroup", subgroup_name, "K, A or N")->required()->check(CLI::IsMember({"K", "A", "N"}));
    orbit_cmd->add_option("--seed", seed_text, "seed point re,im")->required();
    orbit_cmd->add_option("--range", range_text, "parameter range lo,hi");
    orbit_cmd->add_option("--n", n_samples, "number of samples");
    orbit_cmd->add_option("--out", out_path, "output file")->required();
    orbit_cmd->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

    std::vector<const char*> argv{"su11"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    auto emit = [&](const Json& report) {
        out << (json ? report.dump(2) + "\n" : render_text(report));
    };

    try {
        if (orbit_cmd->parsed()) {
            const auto seed = split_reals(seed_text, 2, "--seed");
            const ClassTag tag = subgroup_name == "K" ? ClassTag::K : subgroup_name == "A" ? ClassTag::A : ClassTag::N;
            auto [lo, hi] = default_range<double>(tag);
            if (!range_text.empty()) {
                const auto r = split_reals(range_text, 2, "--range");
                lo = r[0];
                hi = r[1];
            }
            const auto o = orbit(tag, Point(seed[0], seed[1]), lo, hi, n_samples);
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw IoError("cannot write '" + out_path + "'");
            file << (format == "svg" ? orbit_svg(o) : orbit_csv(o));
            if (!file.flush()) throw IoError("cannot write '" + out_path + "'");

            Json j;
            j["command"] = "orbit";
            j["subgroup"] = subgroup_name;
            j["seed"] = point_json(o.seed);
            j["range"] = Json::array({rounded(lo), rounded(hi)});
            j["samples"] = n_samples;
            j["format"] = format;
            j["output"] = out_path;
            emit(j);
            return kOk;
        }

        const Matrix m = load_input(input, tol);
        if (classify_cmd->parsed()) emit(classify_report(m));
        if (iwasawa_cmd->parsed()) emit(iwasawa_report(m));
        if (conjugate_cmd->parsed()) emit(conjugate_report(m));
        if (sl2r_cmd->parsed()) emit(sl2r_report(m, canonical));
        if (coeff_cmd->parsed()) emit(coefficients_report(m));
        return kOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidRange& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DeterminantViolation& e) {
        err << "error: " << e.what() << "\n";
        return kDeterminant;
    } catch (const ZeroTransmission& e) {
        err << "error: " << e.what() << "\n";
        return kDeterminant;
    } catch (const EvanescentWave& e) {
        err << "error: " << e.what() << "\n";
        return kEvanescent;
    } catch (const DegenerateMatrix& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
}

}  // namespace su11::cli
