#include "gc/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>

namespace gc::kernels::detail {

namespace {

int nonzero_lanes(uint8x16_t any) {
  uint8x16_t nz = vminq_u8(any, vdupq_n_u8(1));
  return int(vaddvq_u8(nz));
}

int neon_weight(const uint8_t* acc, int planes, size_t stride) {
  int w = 0;
  for (size_t j = 0; j < stride; j += 16) {
    uint8x16_t any = vdupq_n_u8(0);
    for (int t = 0; t < planes; ++t) any = vorrq_u8(any, vld1q_u8(acc + size_t(t) * stride + j));
    w += nonzero_lanes(any);
  }
  return w;
}

int neon_add_weight(uint8_t* acc, const uint8_t* src, int planes, size_t stride, int p) {
  const uint8x16_t vp = vdupq_n_u8(uint8_t(p));
  int w = 0;
  for (size_t j = 0; j < stride; j += 16) {
    uint8x16_t any = vdupq_n_u8(0);
    for (int t = 0; t < planes; ++t) {
      uint8_t* a = acc + size_t(t) * stride + j;
      uint8x16_t sum = vaddq_u8(vld1q_u8(a), vld1q_u8(src + size_t(t) * stride + j));
      sum = vminq_u8(sum, vsubq_u8(sum, vp));
      vst1q_u8(a, sum);
      any = vorrq_u8(any, sum);
    }
    w += nonzero_lanes(any);
  }
  return w;
}

const Ops kNeon{Isa::Neon, neon_add_weight, neon_weight};

}  // namespace

const Ops* neon_impl() { return &kNeon; }

}  // namespace gc::kernels::detail

#else

namespace gc::kernels::detail {
const Ops* neon_impl() { return nullptr; }
}  // namespace gc::kernels::detail

#endif
