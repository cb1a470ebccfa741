#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dagtopo::kernels {

// Number of common elements of two strictly increasing u32 sequences.
// The scalar version is the reference; the AVX2 version must agree bit
// for bit on every input (equivalence-tested).
using IntersectCountFn = std::uint64_t (*)(const std::uint32_t*, std::size_t,
                                           const std::uint32_t*, std::size_t);

std::uint64_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                     const std::uint32_t* b, std::size_t nb);

#if defined(DAGTOPO_HAVE_AVX2)
std::uint64_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb);
#endif

// Implementation picked at startup from CPU capabilities.
IntersectCountFn active_intersect_count();
std::string_view active_kernel_name();

// Test hook: true forces the scalar path regardless of CPU support.
void force_scalar_kernels(bool on);

inline std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b) {
    return active_intersect_count()(a.data(), a.size(), b.data(), b.size());
}

}  // namespace dagtopo::kernels
