// Classifies a quarter-wave layer and reduces it to a pure rotation.
#include <iostream>

#include "su11/su11.hpp"

int main() {
    su11::LayerStack<double> stack;
    stack.wavelength = 600.0;
    stack.layers.push_back({1.5, 600.0 / (4 * 1.5)});

    const auto m = su11::build_matrix(stack);
    const auto cls = su11::classify(m);
    const auto red = su11::reduce_to_canonical(m);
    const auto c = su11::coefficients(m);

    std::cout << "trace " << su11::format_real(cls.trace) << ", class " << su11::to_string(cls.tag) << "\n"
              << "|R|^2 = " << su11::format_real(std::norm(c.reflection)) << "\n"
              << "canonical form K(" << su11::format_real(red.parameter) << ")\n";
}
