#include "gc/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace gc::kernels::detail {

namespace {

int avx2_weight(const uint8_t* acc, int planes, size_t stride) {
  int w = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (size_t j = 0; j < stride; j += 32) {
    __m256i any = zero;
    for (int t = 0; t < planes; ++t)
      any = _mm256_or_si256(any, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + size_t(t) * stride + j)));
    uint32_t zmask = uint32_t(_mm256_movemask_epi8(_mm256_cmpeq_epi8(any, zero)));
    w += 32 - __builtin_popcount(zmask);
  }
  return w;
}

int avx2_add_weight(uint8_t* acc, const uint8_t* src, int planes, size_t stride, int p) {
  const __m256i vp = _mm256_set1_epi8(char(p));
  const __m256i zero = _mm256_setzero_si256();
  int w = 0;
  for (size_t j = 0; j < stride; j += 32) {
    __m256i any = zero;
    for (int t = 0; t < planes; ++t) {
      auto* a = reinterpret_cast<__m256i*>(acc + size_t(t) * stride + j);
      auto* s = reinterpret_cast<const __m256i*>(src + size_t(t) * stride + j);
      __m256i sum = _mm256_add_epi8(_mm256_loadu_si256(a), _mm256_loadu_si256(s));
      // sum - p wraps above sum when sum < p
      sum = _mm256_min_epu8(sum, _mm256_sub_epi8(sum, vp));
      _mm256_storeu_si256(a, sum);
      any = _mm256_or_si256(any, sum);
    }
    uint32_t zmask = uint32_t(_mm256_movemask_epi8(_mm256_cmpeq_epi8(any, zero)));
    w += 32 - __builtin_popcount(zmask);
  }
  return w;
}

const Ops kAvx2{Isa::Avx2, avx2_add_weight, avx2_weight};

}  // namespace

const Ops* avx2_impl() { return &kAvx2; }

}  // namespace gc::kernels::detail

#else

namespace gc::kernels::detail {
const Ops* avx2_impl() { return nullptr; }
}  // namespace gc::kernels::detail

#endif
