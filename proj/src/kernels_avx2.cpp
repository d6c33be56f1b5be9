#include <immintrin.h>

#include "alleemem/kernels.hpp"

// AVX2 variants of the scalar kernels. Every lane performs the same
// operation sequence as the scalar reference (separate mul + add, same
// min/max order, buckets laid out so lane l sees exactly the j = l (mod 4)
// subsequence), so outputs are bit-identical. No FMA intrinsics: the scalar
// path has none and fusing would round differently.

namespace alleemem {
namespace detail {
namespace {

void matvec_uW(const double* W, std::size_t nu, std::size_t nv,
               const double* u, double* out) {
    for (std::size_t j = 0; j < nv; ++j) out[j] = 0.0;
    for (std::size_t i = 0; i < nu; ++i) {
        const double s = u[i];
        const __m256d sv = _mm256_set1_pd(s);
        const double* row = W + i * nv;
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d acc = _mm256_add_pd(
                _mm256_loadu_pd(out + j), _mm256_mul_pd(sv, _mm256_loadu_pd(row + j)));
            _mm256_storeu_pd(out + j, acc);
        }
        for (; j < nv; ++j) out[j] += s * row[j];
    }
}

void matvec_Wv(const double* W, std::size_t nu, std::size_t nv,
               const double* v, double* out) {
    for (std::size_t i = 0; i < nu; ++i) {
        const double* row = W + i * nv;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(row + j),
                                                   _mm256_loadu_pd(v + j)));
        alignas(32) double b[4];
        _mm256_store_pd(b, acc);
        for (; j < nv; ++j) b[j & 3] += row[j] * v[j];
        out[i] = (b[0] + b[1]) + (b[2] + b[3]);
    }
}

void colnorms(const double* W, std::size_t nu, std::size_t nv, double* S) {
    for (std::size_t j = 0; j < nv; ++j) S[j] = 0.0;
    for (std::size_t i = 0; i < nu; ++i) {
        const double* row = W + i * nv;
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d w = _mm256_loadu_pd(row + j);
            _mm256_storeu_pd(S + j, _mm256_add_pd(_mm256_loadu_pd(S + j),
                                                  _mm256_mul_pd(w, w)));
        }
        for (; j < nv; ++j) S[j] += row[j] * row[j];
    }
}

inline __m256d clip_pm4(__m256d w, __m256d neg_clip, __m256d pos_clip) {
    return _mm256_min_pd(_mm256_max_pd(w, neg_clip), pos_clip);
}

inline double clip_pm(double w, double clip) {
    w = w < -clip ? -clip : w;
    return w > clip ? clip : w;
}

void update_oja_family(double* W, std::size_t nu, std::size_t nv,
                       const double* u, const double* v, double eta,
                       double invK, const double* f, double clip) {
    const __m256d eta_v = _mm256_set1_pd(eta);
    const __m256d invk_v = _mm256_set1_pd(invK);
    const __m256d clip_v = _mm256_set1_pd(clip);
    const __m256d nclip_v = _mm256_set1_pd(-clip);
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        const __m256d ui_v = _mm256_set1_pd(ui);
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d w = _mm256_loadu_pd(row + j);
            const __m256d vj = _mm256_loadu_pd(v + j);
            __m256d t = _mm256_mul_pd(
                vj, _mm256_sub_pd(ui_v, _mm256_mul_pd(_mm256_mul_pd(w, vj), invk_v)));
            if (f) t = _mm256_mul_pd(t, _mm256_loadu_pd(f + j));
            const __m256d nw = _mm256_add_pd(w, _mm256_mul_pd(eta_v, t));
            _mm256_storeu_pd(row + j, clip_pm4(nw, nclip_v, clip_v));
        }
        for (; j < nv; ++j) {
            double t = v[j] * (ui - (row[j] * v[j]) * invK);
            if (f) t = t * f[j];
            row[j] = clip_pm(row[j] + eta * t, clip);
        }
    }
}

void update_signed_const(double* W, std::size_t nu, std::size_t nv,
                         const double* u, const double* v, double eta,
                         double pos, double neg, double clip) {
    const __m256d eta_v = _mm256_set1_pd(eta);
    const __m256d pos_v = _mm256_set1_pd(pos);
    const __m256d neg_v = _mm256_set1_pd(neg);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d clip_v = _mm256_set1_pd(clip);
    const __m256d nclip_v = _mm256_set1_pd(-clip);
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        const __m256d ui_v = _mm256_set1_pd(ui);
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d w = _mm256_loadu_pd(row + j);
            const __m256d uv = _mm256_mul_pd(ui_v, _mm256_loadu_pd(v + j));
            const __m256d mask = _mm256_cmp_pd(uv, zero, _CMP_GT_OQ);
            const __m256d incr = _mm256_blendv_pd(neg_v, pos_v, mask);
            const __m256d nw = _mm256_add_pd(w, _mm256_mul_pd(eta_v, incr));
            _mm256_storeu_pd(row + j, clip_pm4(nw, nclip_v, clip_v));
        }
        for (; j < nv; ++j) {
            const double incr = ui * v[j] > 0.0 ? pos : neg;
            row[j] = clip_pm(row[j] + eta * incr, clip);
        }
    }
}

void update_weight_dep(double* W, std::size_t nu, std::size_t nv,
                       const double* u, const double* v, double eta,
                       double pos, double neg, double clip) {
    const __m256d eta_v = _mm256_set1_pd(eta);
    const __m256d pos_v = _mm256_set1_pd(pos);
    const __m256d neg_v = _mm256_set1_pd(neg);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d clip_v = _mm256_set1_pd(clip);
    const __m256d nclip_v = _mm256_set1_pd(-clip);
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        const __m256d ui_v = _mm256_set1_pd(ui);
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d w = _mm256_loadu_pd(row + j);
            const __m256d w01 = _mm256_min_pd(_mm256_max_pd(w, zero), one);
            const __m256d uv = _mm256_mul_pd(ui_v, _mm256_loadu_pd(v + j));
            const __m256d mask = _mm256_cmp_pd(uv, zero, _CMP_GT_OQ);
            const __m256d incr = _mm256_blendv_pd(
                _mm256_mul_pd(neg_v, w01),
                _mm256_mul_pd(pos_v, _mm256_sub_pd(one, w01)), mask);
            const __m256d nw = _mm256_add_pd(w, _mm256_mul_pd(eta_v, incr));
            _mm256_storeu_pd(row + j, clip_pm4(nw, nclip_v, clip_v));
        }
        for (; j < nv; ++j) {
            double w = row[j];
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
    const __m256d eta_v = _mm256_set1_pd(eta);
    const __m256d invk_v = _mm256_set1_pd(invK);
    const __m256d tp_v = _mm256_set1_pd(trace_pos);
    const __m256d tn_v = _mm256_set1_pd(trace_neg);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d clip_v = _mm256_set1_pd(clip);
    const __m256d nclip_v = _mm256_set1_pd(-clip);
    for (std::size_t i = 0; i < nu; ++i) {
        double* row = W + i * nv;
        const double ui = u[i];
        const __m256d ui_v = _mm256_set1_pd(ui);
        std::size_t j = 0;
        for (; j + 4 <= nv; j += 4) {
            const __m256d w = _mm256_loadu_pd(row + j);
            const __m256d vj = _mm256_loadu_pd(v + j);
            __m256d t = _mm256_mul_pd(
                vj, _mm256_sub_pd(ui_v, _mm256_mul_pd(_mm256_mul_pd(w, vj), invk_v)));
            t = _mm256_mul_pd(t, _mm256_loadu_pd(f + j));
            const __m256d uv = _mm256_mul_pd(ui_v, vj);
            const __m256d mask = _mm256_cmp_pd(uv, zero, _CMP_GT_OQ);
            const __m256d trace = _mm256_blendv_pd(tn_v, tp_v, mask);
            const __m256d nw =
                _mm256_add_pd(w, _mm256_mul_pd(eta_v, _mm256_add_pd(t, trace)));
            _mm256_storeu_pd(row + j, clip_pm4(nw, nclip_v, clip_v));
        }
        for (; j < nv; ++j) {
            const double t = (v[j] * (ui - (row[j] * v[j]) * invK)) * f[j];
            const double trace = ui * v[j] > 0.0 ? trace_pos : trace_neg;
            row[j] = clip_pm(row[j] + eta * (t + trace), clip);
        }
    }
}

}  // namespace

const Kernels& avx2_kernels_impl() {
    static const Kernels k = {matvec_uW, matvec_Wv,         colnorms,
                              update_oja_family, update_signed_const,
                              update_weight_dep, update_allee_traced};
    return k;
}

}  // namespace detail
}  // namespace alleemem
