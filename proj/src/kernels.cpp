#include "arxdw/kernels.hpp"

#include "kernels_internal.hpp"

namespace arxdw::kernels {
namespace {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_squares(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_sq_diff(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = x[i] - x[i - 1];
    acc += d * d;
  }
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

}  // namespace scalar

struct Dispatch {
  detail::KernelTable table;
  Backend backend;
  Dispatch() { reset(); }
  void reset() {
    if (const detail::KernelTable* t = detail::avx2_table_if_supported()) {
      table = *t;
      backend = Backend::avx2;
    } else {
      table = detail::scalar_table();
      backend = Backend::scalar;
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

namespace detail {

const KernelTable& scalar_table() {
  static const KernelTable t{&scalar::dot, &scalar::sum_squares,
                             &scalar::sum_sq_diff, &scalar::axpy, &scalar::sub};
  return t;
}

}  // namespace detail

Backend active_backend() { return dispatch().backend; }

const char* backend_name() {
  return dispatch().backend == Backend::avx2 ? "avx2" : "scalar";
}

bool set_backend(Backend b) {
  if (b == Backend::scalar) {
    dispatch().table = detail::scalar_table();
    dispatch().backend = Backend::scalar;
    return true;
  }
  if (const detail::KernelTable* t = detail::avx2_table_if_supported()) {
    dispatch().table = *t;
    dispatch().backend = Backend::avx2;
    return true;
  }
  return false;
}

void autodetect_backend() { dispatch().reset(); }

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().table.dot(a, b, n);
}

double sum_squares(const double* x, std::size_t n) {
  return dispatch().table.sum_squares(x, n);
}

double sum_sq_diff(const double* x, std::size_t n) {
  return dispatch().table.sum_sq_diff(x, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  dispatch().table.axpy(a, x, y, n);
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  dispatch().table.sub(a, b, out, n);
}

}  // namespace arxdw::kernels
