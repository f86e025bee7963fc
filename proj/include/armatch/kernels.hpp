#pragma once

#include <cstddef>
#include <cstdint>

namespace armatch::kern {

// Word-level bit kernels backing EdgeSet. All functions operate on arrays of
// n 64-bit words; dst may alias a or b.
struct Kernels {
    const char* name;
    void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n); // a & ~b
    void (*bit_xor)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
    std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n); // (a & b) != 0
    bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);  // (a & ~b) == 0
};

// Portable reference implementation. The equivalence tests treat this as the
// ground truth for the vector variants.
const Kernels& scalar_kernels();

// AVX2 variant; nullptr when the binary was built without it or the CPU
// lacks AVX2 at runtime.
const Kernels* avx2_kernels();

// Selected once at startup: AVX2 when available, scalar otherwise.
const Kernels& active_kernels();

} // namespace armatch::kern
