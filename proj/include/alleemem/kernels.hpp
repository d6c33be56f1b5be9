#pragma once

#include <cstddef>

namespace alleemem {

// Hot inner loops of the associative-memory harness. The scalar variants are
// the semantic reference; the AVX2 variants must produce bit-identical
// results (accumulation orders are pinned: sign-matvec over pre runs
// i-outer/j-inner, the post-matvec uses four interleaved accumulators
// combined as (a0+a1)+(a2+a3) in both implementations).
struct Kernels {
    // out[j] = sum_i u[i] * W[i*nv + j]  (u is +-1)
    void (*matvec_uW)(const double* W, std::size_t nu, std::size_t nv,
                      const double* u, double* out);
    // out[i] = sum_j W[i*nv + j] * v[j]  (v is +-1), 4-bucket accumulation
    void (*matvec_Wv)(const double* W, std::size_t nu, std::size_t nv,
                      const double* v, double* out);
    // S[j] = sum_i W[i*nv + j]^2
    void (*colnorms)(const double* W, std::size_t nu, std::size_t nv, double* S);
    // W_ij = clip(W_ij + eta * v_j (u_i - W_ij v_j invK) * f_j, +-clip)
    // (hebbian: invK = 0 and f = nullptr; oja: f = nullptr; allee: f = factors)
    void (*update_oja_family)(double* W, std::size_t nu, std::size_t nv,
                              const double* u, const double* v, double eta,
                              double invK, const double* f, double clip);
    // W_ij = clip(W_ij + eta * (uv > 0 ? pos : neg), +-clip) with uv = u_i v_j
    // (covers stdp_pair and stdp_continuous, whose increments are constants)
    void (*update_signed_const)(double* W, std::size_t nu, std::size_t nv,
                                const double* u, const double* v, double eta,
                                double pos, double neg, double clip);
    // w = clamp(W_ij, 0, 1);
    // W_ij = clip(W_ij + eta * (uv > 0 ? pos*(1-w) : neg*w), +-clip)
    void (*update_weight_dep)(double* W, std::size_t nu, std::size_t nv,
                              const double* u, const double* v, double eta,
                              double pos, double neg, double clip);
    // allee + constant trace: W_ij = clip(W_ij + eta * (allee_ij +
    //   (uv > 0 ? trace_pos : trace_neg)), +-clip)
    void (*update_allee_traced)(double* W, std::size_t nu, std::size_t nv,
                                const double* u, const double* v, double eta,
                                double invK, const double* f,
                                double trace_pos, double trace_neg, double clip);
};

enum class SimdMode { Auto, Scalar, Avx2 };

// Active kernel set. Chosen once: AVX2 when the CPU supports it, overridable
// via ALLEEMEM_SIMD=scalar|avx2|auto.
const Kernels& active_kernels();
const char* active_kernels_name();

// Explicit sets, for equivalence tests.
const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when not compiled in / unsupported

}  // namespace alleemem
