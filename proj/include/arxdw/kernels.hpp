#pragma once

#include <cstddef>

// Data-parallel reduction kernels used by the statistic and diagnostic code
// paths. A scalar reference implementation always exists; on x86-64 an AVX2
// variant is selected at runtime when the CPU supports it. Both variants are
// equivalence-tested against each other.
//
// The closed-loop simulation itself is feedback-sequential and works on
// (p+2)-dimensional vectors, so it does not go through these kernels.

namespace arxdw::kernels {

enum class Backend { scalar, avx2 };

// Backend currently driving the kernels.
Backend active_backend();
const char* backend_name();

// Force a backend. Returns false (and leaves the dispatch unchanged) if the
// requested backend is not available on this CPU. Not meant to be called
// concurrently with kernel use.
bool set_backend(Backend b);

// Re-run CPU detection and pick the best available backend.
void autodetect_backend();

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i x[i]^2
double sum_squares(const double* x, std::size_t n);

// sum_{i>=1} (x[i] - x[i-1])^2
double sum_sq_diff(const double* x, std::size_t n);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// out[i] = a[i] - b[i]
void sub(const double* a, const double* b, double* out, std::size_t n);

}  // namespace arxdw::kernels
