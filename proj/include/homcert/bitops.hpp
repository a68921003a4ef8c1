#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels for packed GF(2) row arithmetic.  Every kernel has a
// scalar reference implementation and (on x86) an AVX2 variant; the active
// backend is picked once at startup from CPUID and can be overridden with
// force_backend() or the HOMCERT_KERNEL environment variable ("scalar" or
// "avx2").  All variants must agree bit-for-bit; tests/test_gf2.cpp checks
// them against each other on randomized inputs.

namespace homcert::bitops {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool avx2_supported();

// Throws std::invalid_argument if the requested backend is not available on
// this machine.  Intended for tests and benchmarking, not normal operation.
void force_backend(Backend b);

// dst ^= src, over nwords 64-bit words.
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);

// popcount(a & b) -- the GF(2) inner product is its low bit.
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);

bool is_zero(const std::uint64_t* a, std::size_t nwords);

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);
bool is_zero(const std::uint64_t* a, std::size_t nwords);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t nwords);
bool is_zero(const std::uint64_t* a, std::size_t nwords);
}  // namespace avx2
#endif

}  // namespace homcert::bitops
