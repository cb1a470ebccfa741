#include "dagtopo/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace dagtopo::kernels {

std::uint64_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                     const std::uint32_t* b, std::size_t nb) {
    // Galloping pays off when one list dwarfs the other (hub directories).
    if (na > nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    std::uint64_t hits = 0;
    if (na == 0) return 0;
    if (nb / na >= 32) {
        const std::uint32_t* lo = b;
        const std::uint32_t* bend = b + nb;
        for (std::size_t i = 0; i < na; ++i) {
            lo = std::lower_bound(lo, bend, a[i]);
            if (lo == bend) break;
            if (*lo == a[i]) ++hits;
        }
        return hits;
    }
    std::size_t i = 0, j = 0;
    while (i < na && j < nb) {
        std::uint32_t x = a[i], y = b[j];
        hits += (x == y);
        i += (x <= y);
        j += (y <= x);
    }
    return hits;
}

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(DAGTOPO_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace

void force_scalar_kernels(bool on) { g_force_scalar.store(on); }

IntersectCountFn active_intersect_count() {
#if defined(DAGTOPO_HAVE_AVX2)
    static const bool avx2 = cpu_has_avx2();
    if (avx2 && !g_force_scalar.load(std::memory_order_relaxed))
        return &intersect_count_avx2;
#endif
    return &intersect_count_scalar;
}

std::string_view active_kernel_name() {
#if defined(DAGTOPO_HAVE_AVX2)
    if (active_intersect_count() == &intersect_count_avx2) return "avx2";
#endif
    return "scalar";
}

}  // namespace dagtopo::kernels
