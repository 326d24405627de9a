#pragma once

#include "hadinv/core/kernels.hpp"

namespace hadinv::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(HADINV_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(HADINV_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace hadinv::kernels::detail
