#include "c2c/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "c2c/errors.hpp"

namespace c2c::kern {

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void add(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot(m + r * cols, x, cols);
}

void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) axpy(x[r], m + r * cols, y, cols);
}

void outer_acc(const double* u, std::size_t rows, const double* v, std::size_t cols, double* m) {
    for (std::size_t r = 0; r < rows; ++r) axpy(u[r], v, m + r * cols, cols);
}

double norm_sq(const double* x, std::size_t n) { return dot(x, x, n); }

}  // namespace scalar

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

#if defined(C2C_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
void add(const double* a, const double* b, double* out, std::size_t n);
void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
void outer_acc(const double* u, std::size_t rows, const double* v, std::size_t cols, double* m);
double norm_sq(const double* x, std::size_t n);
}  // namespace avx2
#endif

namespace {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    void (*hadamard)(const double*, const double*, double*, std::size_t);
    void (*add)(const double*, const double*, double*, std::size_t);
    void (*matvec)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*matvec_t_acc)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*outer_acc)(const double*, std::size_t, const double*, std::size_t, double*);
    double (*norm_sq)(const double*, std::size_t);
};

constexpr KernelTable kScalarTable = {
    scalar::dot,    scalar::axpy,         scalar::scale,     scalar::hadamard, scalar::add,
    scalar::matvec, scalar::matvec_t_acc, scalar::outer_acc, scalar::norm_sq,
};

#if defined(C2C_HAVE_AVX2)
constexpr KernelTable kAvx2Table = {
    avx2::dot,    avx2::axpy,         avx2::scale,     avx2::hadamard, avx2::add,
    avx2::matvec, avx2::matvec_t_acc, avx2::outer_acc, avx2::norm_sq,
};
#endif

Backend pick_default_backend() {
    if (const char* env = std::getenv("C2C_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::kAvx2;
    }
    return avx2_supported() ? Backend::kAvx2 : Backend::kScalar;
}

Backend g_backend = pick_default_backend();
const KernelTable* g_table = nullptr;

const KernelTable* table_for(Backend b) {
#if defined(C2C_HAVE_AVX2)
    if (b == Backend::kAvx2) return &kAvx2Table;
#endif
    (void)b;
    return &kScalarTable;
}

const KernelTable& table() {
    if (g_table == nullptr) g_table = table_for(g_backend);
    return *g_table;
}

}  // namespace

bool avx2_supported() {
#if defined(C2C_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
    if (b == Backend::kAvx2 && !avx2_supported())
        throw ConfigError("AVX2 kernels not available on this machine");
    g_backend = b;
    g_table = table_for(b);
}

const char* backend_name() { return g_backend == Backend::kAvx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) { return table().dot(a, b, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }
void scale(double a, double* x, std::size_t n) { table().scale(a, x, n); }
void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    table().hadamard(a, b, out, n);
}
void add(const double* a, const double* b, double* out, std::size_t n) { table().add(a, b, out, n); }
void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    table().matvec(m, rows, cols, x, y);
}
void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    table().matvec_t_acc(m, rows, cols, x, y);
}
void outer_acc(const double* u, std::size_t rows, const double* v, std::size_t cols, double* m) {
    table().outer_acc(u, rows, v, cols, m);
}
double norm_sq(const double* x, std::size_t n) { return table().norm_sq(x, n); }

}  // namespace c2c::kern
