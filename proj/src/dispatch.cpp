#include <cstdlib>
#include <stdexcept>
#include <string>

#include "alleemem/kernels.hpp"

namespace alleemem {

#if defined(ALLEEMEM_HAVE_AVX2)
namespace detail {
const Kernels& avx2_kernels_impl();
}

const Kernels* avx2_kernels() {
    return __builtin_cpu_supports("avx2") ? &detail::avx2_kernels_impl() : nullptr;
}
#else
const Kernels* avx2_kernels() { return nullptr; }
#endif

namespace {

SimdMode requested_mode() {
    const char* env = std::getenv("ALLEEMEM_SIMD");
    if (!env || !*env) return SimdMode::Auto;
    const std::string s(env);
    if (s == "auto") return SimdMode::Auto;
    if (s == "scalar") return SimdMode::Scalar;
    if (s == "avx2") return SimdMode::Avx2;
    throw std::runtime_error("ALLEEMEM_SIMD must be scalar, avx2, or auto (got \"" + s + "\")");
}

const Kernels* resolve() {
    switch (requested_mode()) {
        case SimdMode::Scalar:
            return &scalar_kernels();
        case SimdMode::Avx2: {
            const Kernels* k = avx2_kernels();
            if (!k)
                throw std::runtime_error(
                    "ALLEEMEM_SIMD=avx2 requested but AVX2 kernels are unavailable "
                    "(CPU or build lacks AVX2 support)");
            return k;
        }
        case SimdMode::Auto:
        default: {
            const Kernels* k = avx2_kernels();
            return k ? k : &scalar_kernels();
        }
    }
}

}  // namespace

const Kernels& active_kernels() {
    static const Kernels* chosen = resolve();
    return *chosen;
}

const char* active_kernels_name() {
    return &active_kernels() == &scalar_kernels() ? "scalar" : "avx2";
}

}  // namespace alleemem
