#include <atomic>
#include <cstdlib>
#include <string>

#include "hadinv/core/errors.hpp"
#include "kernels/variants.hpp"

namespace hadinv::kernels {

namespace {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(HADINV_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(HADINV_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* lookup(Isa isa) noexcept {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalarTable;
#if defined(HADINV_HAVE_AVX2)
    case Isa::avx2:
      return &detail::kAvx2Table;
#endif
#if defined(HADINV_HAVE_NEON)
    case Isa::neon:
      return &detail::kNeonTable;
#endif
    default:
      return nullptr;
  }
}

const KernelTable* initial_selection() noexcept {
  if (const char* env = std::getenv("HADINV_SIMD"); env != nullptr) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa)) {
        if (const KernelTable* t = lookup(isa)) return t;
      }
    }
  }
  const auto isas = available();
  return lookup(isas.back());
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> selected{initial_selection()};
  return selected;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() noexcept { return detail::kScalarTable; }

std::vector<Isa> available() noexcept {
  std::vector<Isa> out{Isa::scalar};
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (lookup(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& table(Isa isa) {
  const KernelTable* t = lookup(isa);
  if (t == nullptr) {
    throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) +
                          "' is not available on this build/CPU");
  }
  return *t;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_release); }

}  // namespace hadinv::kernels
