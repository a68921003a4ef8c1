#include "homcert/bitops.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace homcert::bitops {

namespace scalar {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        dst[i] ^= src[i];
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool is_zero(const std::uint64_t* a, std::size_t nwords) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        acc |= a[i];
    return acc == 0;
}

}  // namespace scalar

namespace {

struct KernelTable {
    void (*xor_into)(std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*,
                                  std::size_t);
    bool (*is_zero)(const std::uint64_t*, std::size_t);
};

constexpr KernelTable kScalarTable{&scalar::xor_into, &scalar::and_popcount,
                                   &scalar::is_zero};

#if defined(HOMCERT_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::xor_into, &avx2::and_popcount,
                                 &avx2::is_zero};

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") != 0;
}
#else
bool cpu_has_avx2() {
    return false;
}
#endif

struct Dispatch {
    Backend backend;
    const KernelTable* table;

    Dispatch() : backend(Backend::scalar), table(&kScalarTable) {
#if defined(HOMCERT_HAVE_AVX2)
        if (cpu_has_avx2()) {
            backend = Backend::avx2;
            table = &kAvx2Table;
        }
#endif
        // Environment override; an unsatisfiable request falls back to scalar
        // rather than aborting, since this is a tuning knob, not an API.
        if (const char* env = std::getenv("HOMCERT_KERNEL")) {
            if (std::strcmp(env, "scalar") == 0) {
                backend = Backend::scalar;
                table = &kScalarTable;
            }
#if defined(HOMCERT_HAVE_AVX2)
            else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) {
                backend = Backend::avx2;
                table = &kAvx2Table;
            }
#endif
        }
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Backend active_backend() {
    return dispatch().backend;
}

bool avx2_supported() {
    return cpu_has_avx2();
}

void force_backend(Backend b) {
    if (b == Backend::avx2) {
#if defined(HOMCERT_HAVE_AVX2)
        if (!cpu_has_avx2())
            throw std::invalid_argument("force_backend: avx2 not supported on this CPU");
        dispatch().backend = Backend::avx2;
        dispatch().table = &kAvx2Table;
        return;
#else
        throw std::invalid_argument("force_backend: avx2 not available in this build");
#endif
    }
    dispatch().backend = Backend::scalar;
    dispatch().table = &kScalarTable;
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    dispatch().table->xor_into(dst, src, nwords);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords) {
    return dispatch().table->and_popcount(a, b, nwords);
}

bool is_zero(const std::uint64_t* a, std::size_t nwords) {
    return dispatch().table->is_zero(a, nwords);
}

}  // namespace homcert::bitops
