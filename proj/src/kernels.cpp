#include "gc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gc::kernels {

namespace detail {
const Ops* avx2_impl();
const Ops* neon_impl();
}  // namespace detail

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

namespace {

int scalar_add_weight(uint8_t* acc, const uint8_t* src, int planes, size_t stride, int p) {
  size_t total = size_t(planes) * stride;
  for (size_t i = 0; i < total; ++i) {
    int s = acc[i] + src[i];
    acc[i] = uint8_t(s >= p ? s - p : s);
  }
  int w = 0;
  for (size_t j = 0; j < stride; ++j) {
    uint8_t any = 0;
    for (int t = 0; t < planes; ++t) any |= acc[size_t(t) * stride + j];
    w += any != 0;
  }
  return w;
}

int scalar_weight(const uint8_t* acc, int planes, size_t stride) {
  int w = 0;
  for (size_t j = 0; j < stride; ++j) {
    uint8_t any = 0;
    for (int t = 0; t < planes; ++t) any |= acc[size_t(t) * stride + j];
    w += any != 0;
  }
  return w;
}

const Ops kScalar{Isa::Scalar, scalar_add_weight, scalar_weight};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
  if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
  return detail::avx2_impl();
}

const Ops* neon_ops() { return detail::neon_impl(); }

const Ops& ops_by_name(const std::string& name) {
  if (name == "scalar") return kScalar;
  const Ops* o = nullptr;
  if (name == "avx2")
    o = avx2_ops();
  else if (name == "neon")
    o = neon_ops();
  else
    throw std::invalid_argument("unknown kernel: " + name);
  if (!o) throw std::invalid_argument("kernel not available on this machine: " + name);
  return *o;
}

const Ops& best_ops() {
  if (const char* env = std::getenv("GC_KERNEL")) return ops_by_name(env);
  if (auto o = avx2_ops()) return *o;
  if (auto o = neon_ops()) return *o;
  return kScalar;
}

}  // namespace gc::kernels
