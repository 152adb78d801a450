#pragma once

// Data-parallel F_p kernels used by every row-reduction in the toolkit.
//
// Elements are stored one per byte with values in [0, p), p <= 7. Each kernel
// has a scalar reference implementation and an AVX2 variant; the active table
// is chosen once from CPUID. Setting NBE_FORCE_SCALAR=1 in the environment
// pins the scalar table.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace nbe::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c,
               std::uint8_t p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(std::uint8_t* dst, std::size_t n, std::uint8_t c, std::uint8_t p);
  // sum a[i] * b[i] mod p
  std::uint8_t (*dot)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p);
  // index of the first nonzero byte, n if none
  std::size_t (*first_nonzero)(const std::uint8_t* a, std::size_t n);
};

namespace scalar {
void axpy(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c, std::uint8_t p);
void scale(std::uint8_t* dst, std::size_t n, std::uint8_t c, std::uint8_t p);
std::uint8_t dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p);
std::size_t first_nonzero(const std::uint8_t* a, std::size_t n);
}  // namespace scalar

#if (defined(__x86_64__) || defined(__i386__)) && !defined(NBE_DISABLE_AVX2_KERNELS)
#define NBE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c, std::uint8_t p);
void scale(std::uint8_t* dst, std::size_t n, std::uint8_t c, std::uint8_t p);
std::uint8_t dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p);
std::size_t first_nonzero(const std::uint8_t* a, std::size_t n);
}  // namespace avx2
#endif

bool available(Isa isa);

/// Table for a specific ISA. Throws Unsupported when the CPU lacks it.
const KernelTable& table(Isa isa);

/// The table selected at startup.
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
                     std::uint8_t c, std::uint8_t p) {
  active().axpy(dst.data(), src.data(), dst.size(), c, p);
}

inline void scale_mod(std::span<std::uint8_t> dst, std::uint8_t c, std::uint8_t p) {
  active().scale(dst.data(), dst.size(), c, p);
}

inline std::uint8_t dot_mod(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                            std::uint8_t p) {
  return active().dot(a.data(), b.data(), a.size(), p);
}

inline std::size_t first_nonzero(std::span<const std::uint8_t> a) {
  return active().first_nonzero(a.data(), a.size());
}

}  // namespace nbe::kernels
