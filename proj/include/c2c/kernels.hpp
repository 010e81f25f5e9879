#pragma once

#include <cstddef>

// Dense double-precision kernels behind the model's inner loops. Every kernel
// has a scalar reference implementation and, on x86-64, an AVX2 variant; the
// active variant is chosen once at startup and can be forced for testing.
//
// The AVX2 kernels use mul+add (no FMA), so every elementwise kernel is
// bit-identical to the scalar reference. Only the horizontal reductions
// (dot, matvec, norm_sq) reassociate and may differ in the last bits.

namespace c2c::kern {

enum class Backend { kScalar, kAvx2 };

bool avx2_supported();
Backend active_backend();
void set_backend(Backend b);  // throws ConfigError if unsupported
const char* backend_name();

// y = sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

// x *= a
void scale(double a, double* x, std::size_t n);

// out = a (.) b
void hadamard(const double* a, const double* b, double* out, std::size_t n);

// out = a + b
void add(const double* a, const double* b, double* out, std::size_t n);

// y = M x           (M row-major, rows x cols; |x| = cols, |y| = rows)
void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);

// y += M^T x        (|x| = rows, |y| = cols)
void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);

// M += u v^T        (|u| = rows, |v| = cols)
void outer_acc(const double* u, std::size_t rows, const double* v, std::size_t cols, double* m);

// sum_i x[i]^2
double norm_sq(const double* x, std::size_t n);

}  // namespace c2c::kern
