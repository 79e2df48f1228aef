#pragma once

#include <cstddef>

namespace arxdw::kernels::detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  double (*sum_sq_diff)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*sub)(const double*, const double*, double*, std::size_t);
};

const KernelTable& scalar_table();

// nullptr when the build target has no AVX2 code path or the CPU lacks it.
const KernelTable* avx2_table_if_supported();

}  // namespace arxdw::kernels::detail
