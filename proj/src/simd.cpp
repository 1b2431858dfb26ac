#include "gdqm/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace gdqm::simd {

const Ops* avx2_ops_table();  // defined in simd_avx2.cpp

const Ops* avx2_ops_if_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return avx2_ops_table();
  }
#endif
  return nullptr;
}

namespace {

const Ops& select() {
  if (const char* env = std::getenv("GDQM_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops();
  }
  if (const Ops* v = avx2_ops_if_supported()) return *v;
  return scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops& selected = select();
  return selected;
}

}  // namespace gdqm::simd
