#include "alleemem/gain.hpp"

#include <cmath>

namespace alleemem {

static double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);  // e <= 1, no overflow for large negative z
    return e / (1.0 + e);
}

double gain(const GainSpec& spec, double z) {
    if (spec.kind == GainKind::Sigmoid) return sigmoid(z);
    // Soboleva, factored so the largest exponential is pulled out of both
    // numerator and denominator (stable to |z| ~ 700 for O(1) parameters).
    const double a = spec.a, b = spec.b, c = spec.c, d = spec.d;
    if (z >= 0.0) {
        double num = std::exp((a - c) * z) - std::exp(-(b + c) * z);
        double den = 1.0 + std::exp(-(c + d) * z);
        return num / den;
    }
    double num = std::exp((a + d) * z) - std::exp((d - b) * z);
    double den = std::exp((c + d) * z) + 1.0;
    return num / den;
}

double gain_derivative(const GainSpec& spec, double z) {
    if (spec.kind == GainKind::Sigmoid) {
        double g = sigmoid(z);
        return g * (1.0 - g);
    }
    // Quotient rule on N/D with the same exponential factored out of
    // N, N', D, D' (the factors cancel in (N'D - ND')/D^2).
    const double a = spec.a, b = spec.b, c = spec.c, d = spec.d;
    double Ns, Nps, Ds, Dps;
    if (z >= 0.0) {
        double e1 = std::exp((a - c) * z), e2 = std::exp(-(b + c) * z);
        double e3 = std::exp(-(c + d) * z);
        Ns = e1 - e2;
        Nps = a * e1 + b * e2;
        Ds = 1.0 + e3;
        Dps = c - d * e3;
    } else {
        double e1 = std::exp((a + d) * z), e2 = std::exp((d - b) * z);
        double e3 = std::exp((c + d) * z);
        Ns = e1 - e2;
        Nps = a * e1 + b * e2;
        Ds = e3 + 1.0;
        Dps = c * e3 - d;
    }
    return (Nps * Ds - Ns * Dps) / (Ds * Ds);
}

}  // namespace alleemem
