#include "armatch/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace armatch::kern {

#ifdef ARMATCH_HAVE_AVX2
const Kernels& avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#ifdef ARMATCH_HAVE_AVX2
    static const Kernels* k = __builtin_cpu_supports("avx2") ? &avx2_kernels_impl() : nullptr;
    return k;
#else
    return nullptr;
#endif
}

const Kernels& active_kernels() {
    // ARMATCH_KERNEL=scalar pins the reference implementation (results are
    // bit-identical either way; the override exists for cross-checking).
    static const Kernels& k = []() -> const Kernels& {
        const char* forced = std::getenv("ARMATCH_KERNEL");
        if (forced && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
        return avx2_kernels() ? *avx2_kernels() : scalar_kernels();
    }();
    return k;
}

} // namespace armatch::kern
