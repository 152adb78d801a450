#include <cstdlib>
#include <cstring>

#include "nbe/error.hpp"
#include "nbe/kernels/fp_kernels.hpp"

namespace nbe::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::axpy, &scalar::scale, &scalar::dot,
                              &scalar::first_nonzero};

#ifdef NBE_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::axpy, &avx2::scale, &avx2::dot,
                            &avx2::first_nonzero};
#endif

const KernelTable& select() {
  const char* force = std::getenv("NBE_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') return kScalar;
#ifdef NBE_HAVE_AVX2_KERNELS
  if (available(Isa::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#ifdef NBE_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) {
    throw Unsupported("kernel ISA " + std::string(isa_name(isa)) + " not available on this CPU");
  }
#ifdef NBE_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

}  // namespace nbe::kernels
