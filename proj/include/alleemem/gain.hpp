#pragma once

namespace alleemem {

enum class GainKind { Sigmoid, Soboleva };

// Gain nonlinearity. The sigmoid has no parameters; the Soboleva form
// (e^{az} - e^{-bz}) / (e^{cz} + e^{-dz}) uses a,b,c,d.
struct GainSpec {
    GainKind kind = GainKind::Sigmoid;
    double a = 1.0, b = 1.0, c = 1.0, d = 1.0;

    static GainSpec sigmoid() { return GainSpec{}; }
    static GainSpec soboleva(double a, double b, double c, double d) {
        return GainSpec{GainKind::Soboleva, a, b, c, d};
    }
};

// G(z); overflow-safe for |z| up to ~700.
double gain(const GainSpec& spec, double z);

// dG/dz, analytic (sigmoid: G(1-G); soboleva: quotient rule).
double gain_derivative(const GainSpec& spec, double z);

}  // namespace alleemem
