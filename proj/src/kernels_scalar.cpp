#include "alleemem/kernels.hpp"

namespace alleemem {
namespace {

// Accumulation orders here are the contract: the AVX2 variants reproduce the
// same per-element operation sequences so results match bit for bit. Keep
// mul and add separate (the library is built with -ffp-contract=off; a fused
// multiply-add would round differently).

void matvec_uW(const double* W, std::size_t nu, std::size_t nv,
               const double* u, double* out) {
    for (std::size_t j = 0; j < nv; ++j) out[j] = 0.0;
    for (std::size_t i = 0; i < nu; ++i) {
        const double s = u[i];
        const double* row = W + i * nv;
        for (std::size_t j = 0; j < nv; ++j) out[j] += s * row[j];
    }
}

void matvec_Wv(const double* W, std::size_t nu, std::size_t nv,
               const double* v, double* out) {
    for (std::size_t i = 0; i < nu; ++i) {
        const double* row = W + i * nv;
        double b[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t j = 0; j < nv; ++j) b[j & 3] += row[j] * v[j];
        out[i] = (b[0] + b[1]) + (b[2] + b[3]);
    }
}

void colnorms(const double* W, std::size_t nu, std::size_t nv, double* S) {
    for (std::size_t j = 0; j < nv; ++j) S[j] = 0.0;
    for (std::size_t i = 0; i < nu; ++i) {
        const double* row = W + i * nv;
        for (std::size_t j = 0; j < nv; ++j) S[j] += row[j] * row[j];
    }
}

inline double clip_pm(double w, double clip) {
    w = w < -clip ? -clip : w;  // matches max(w, -clip)
    return w > clip ? clip : w;  // matches min(w, clip)
}

void update_oja_family(double* W, std::size_t nu, std::size_t nv,
                       const double* u, const double* v, double eta,
                       double invK, const double* f, double clip) {
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        if (f) {
            for (std::size_t j = 0; j < nv; ++j) {
                const double t = (v[j] * (ui - (row[j] * v[j]) * invK)) * f[j];
                row[j] = clip_pm(row[j] + eta * t, clip);
            }
        } else {
            for (std::size_t j = 0; j < nv; ++j) {
                const double t = v[j] * (ui - (row[j] * v[j]) * invK);
                row[j] = clip_pm(row[j] + eta * t, clip);
            }
        }
    }
}

void update_signed_const(double* W, std::size_t nu, std::size_t nv,
                         const double* u, const double* v, double eta,
                         double pos, double neg, double clip) {
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        for (std::size_t j = 0; j < nv; ++j) {
            const double incr = ui * v[j] > 0.0 ? pos : neg;
            row[j] = clip_pm(row[j] + eta * incr, clip);
        }
    }
}

void update_weight_dep(double* W, std::size_t nu, std::size_t nv,
                       const double* u, const double* v, double eta,
                       double pos, double neg, double clip) {
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        for (std::size_t j = 0; j < nv; ++j) {
            double w = row[j];
            // written to mirror max(w, 0) / min(w, 1) exactly (incl. -0.0 -> +0.0)
            w = w > 0.0 ? w : 0.0;
            w = w < 1.0 ? w : 1.0;
            const double incr = ui * v[j] > 0.0 ? pos * (1.0 - w) : neg * w;
            row[j] = clip_pm(row[j] + eta * incr, clip);
        }
    }
}

void update_allee_traced(double* W, std::size_t nu, std::size_t nv,
                         const double* u, const double* v, double eta,
                         double invK, const double* f,
                         double trace_pos, double trace_neg, double clip) {
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        for (std::size_t j = 0; j < nv; ++j) {
            const double t = (v[j] * (ui - (row[j] * v[j]) * invK)) * f[j];
            const double trace = ui * v[j] > 0.0 ? trace_pos : trace_neg;
            row[j] = clip_pm(row[j] + eta * (t + trace), clip);
        }
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {matvec_uW, matvec_Wv,         colnorms,
                              update_oja_family, update_signed_const,
                              update_weight_dep, update_allee_traced};
    return k;
}

}  // namespace alleemem
