#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "su11/stack.hpp"

namespace su11::cli {

/// Malformed command-line or file input (exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output (exit code 6).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Line-oriented stack description:
 *
 *     # comment
 *     ambient 1.0
 *     substrate 1.0        (defaults to the ambient index)
 *     wavelength 550
 *     angle 30             (degrees, default 0)
 *     pol s                (s or p, default s)
 *     layer 1.5 91.6667    (index, thickness; repeated, in order)
 */
LayerStack<double> parse_stack(std::istream& in);
LayerStack<double> read_stack_file(const std::string& path);

/// Strict decimal parse of the whole token; throws ParseError.
double parse_real(const std::string& token, const std::string& what);

}  // namespace su11::cli
