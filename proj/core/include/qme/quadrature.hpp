// quadrature.hpp — Adaptive quadrature for scalar time integrals

#pragma once

#include <functional>

namespace qme {

// Integrates f over [a, b] with an adaptive Gauss-Kronrod rule.
// Throws IntegrationError if the error estimate exceeds the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

} // namespace qme
