#pragma once
// Inner loop of the minimum-weight enumeration.
//
// A vector over F_{p^m} is stored as m digit planes of `stride` bytes (one
// F_p digit per byte, stride a multiple of 32, padding zero).

#include <cstddef>
#include <cstdint>
#include <string>

namespace gc::kernels {

enum class Isa { Scalar, Avx2, Neon };
const char* isa_name(Isa isa);

struct Ops {
  Isa isa;
  // acc += src digitwise mod p over planes*stride bytes; returns the number of
  // positions j < stride with a nonzero digit in some plane.
  int (*add_weight)(uint8_t* acc, const uint8_t* src, int planes, size_t stride, int p);
  int (*weight)(const uint8_t* acc, int planes, size_t stride);
};

// Largest prime the byte kernels accept (2p - 2 must fit in a byte).
inline constexpr int kMaxPrime = 127;

const Ops& scalar_ops();
// nullptr when not compiled in or not supported by this CPU.
const Ops* avx2_ops();
const Ops* neon_ops();
// Best available; GC_KERNEL=scalar|avx2|neon overrides.
const Ops& best_ops();
// Throws std::invalid_argument for an unknown or unavailable name.
const Ops& ops_by_name(const std::string& name);

}  // namespace gc::kernels
