#include "nbe/kernels/fp_kernels.hpp"

namespace nbe::kernels::scalar {

void axpy(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t c,
          std::uint8_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint8_t>((dst[i] + c * src[i]) % p);
  }
}

void scale(std::uint8_t* dst, std::size_t n, std::uint8_t c, std::uint8_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint8_t>((c * dst[i]) % p);
  }
}

std::uint8_t dot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<unsigned>(a[i]) * b[i];
  return static_cast<std::uint8_t>(acc % p);
}

std::size_t first_nonzero(const std::uint8_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) return i;
  }
  return n;
}

}  // namespace nbe::kernels::scalar
