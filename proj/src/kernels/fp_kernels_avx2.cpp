#include "nbe/kernels/fp_kernels.hpp"

#ifdef NBE_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace nbe::kernels::avx2 {

namespace {

// 16-entry table (c * i) mod p, broadcast to both lanes for vpshufb.
__attribute__((target("avx2"))) __m256i mul_table(std::uint8_t c, std::uint8_t p) {
  alignas(16) std::uint8_t lut[16] = {};
  for (unsigned i = 0; i < p; ++i) lut[i] = static_cast<std::uint8_t>((c * i) % p);
  const __m128i half = _mm_load_si128(reinterpret_cast<const __m128i*>(lut));
  return _mm256_broadcastsi128_si256(half);
}

}  // namespace

__attribute__((target("avx2"))) void axpy(std::uint8_t* dst, const std::uint8_t* src,
                                          std::size_t n, std::uint8_t c, std::uint8_t p) {
  if (c == 0) return;
  const __m256i lut = mul_table(c, p);
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
  const __m256i pm1 = _mm256_set1_epi8(static_cast<char>(p - 1));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i r = _mm256_add_epi8(d, _mm256_shuffle_epi8(lut, s));
    const __m256i over = _mm256_cmpgt_epi8(r, pm1);
    r = _mm256_sub_epi8(r, _mm256_and_si256(over, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + c * src[i]) % p);
}

__attribute__((target("avx2"))) void scale(std::uint8_t* dst, std::size_t n, std::uint8_t c,
                                           std::uint8_t p) {
  const __m256i lut = mul_table(c, p);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(lut, d));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((c * dst[i]) % p);
}

__attribute__((target("avx2"))) std::uint8_t dot(const std::uint8_t* a, const std::uint8_t* b,
                                                 std::size_t n, std::uint8_t p) {
  // maddubs pairs sum to at most 2 * 6 * 6 = 72; 256 rounds stay below 2^15.
  constexpr std::size_t kFlush = 256;
  const __m256i ones = _mm256_set1_epi16(1);
  __m256i acc32 = _mm256_setzero_si256();
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc16 = _mm256_setzero_si256();
    for (std::size_t r = 0; r < kFlush && i + 32 <= n; ++r, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      acc16 = _mm256_add_epi16(acc16, _mm256_maddubs_epi16(va, vb));
    }
    acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(acc16, ones));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc32);
  std::uint64_t total = 0;
  for (std::int32_t v : lanes) total += static_cast<std::uint32_t>(v);
  for (; i < n; ++i) total += static_cast<unsigned>(a[i]) * b[i];
  return static_cast<std::uint8_t>(total % p);
}

__attribute__((target("avx2"))) std::size_t first_nonzero(const std::uint8_t* a, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const unsigned zmask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    if (zmask != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~zmask));
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return i;
  }
  return n;
}

}  // namespace nbe::kernels::avx2

#endif
