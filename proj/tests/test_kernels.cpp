#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "c2c/kernels.hpp"
#include "c2c/rng.hpp"

using namespace c2c;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -2.0, double hi = 2.0) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

struct BackendGuard {
    kern::Backend saved;
    BackendGuard() : saved(kern::active_backend()) {}
    ~BackendGuard() { kern::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar dot and matvec basics") {
    BackendGuard guard;
    kern::set_backend(kern::Backend::kScalar);

    const double a[] = {1.0, 2.0, 3.0};
    const double b[] = {4.0, 5.0, 6.0};
    CHECK(kern::dot(a, b, 3) == doctest::Approx(32.0));

    // y = M x with M = [[1,0],[0,1],[2,3]]
    const double m[] = {1, 0, 0, 1, 2, 3};
    const double x[] = {7, 9};
    double y[3];
    kern::matvec(m, 3, 2, x, y);
    CHECK(y[0] == 7.0);
    CHECK(y[1] == 9.0);
    CHECK(y[2] == 41.0);

    // y += M^T x
    double yt[2] = {0, 0};
    const double xt[] = {1, 1, 1};
    kern::matvec_t_acc(m, 3, 2, xt, yt);
    CHECK(yt[0] == 3.0);
    CHECK(yt[1] == 4.0);
}

TEST_CASE("outer_acc accumulates u v^T") {
    BackendGuard guard;
    kern::set_backend(kern::Backend::kScalar);
    const double u[] = {2.0, -1.0};
    const double v[] = {3.0, 5.0, 7.0};
    std::vector<double> m(6, 1.0);
    kern::outer_acc(u, 2, v, 3, m.data());
    CHECK(m[0] == 7.0);   // 1 + 2*3
    CHECK(m[2] == 15.0);  // 1 + 2*7
    CHECK(m[3] == -2.0);  // 1 - 3
}

#if defined(__x86_64__)
TEST_CASE("avx2 variants agree with the scalar reference") {
    if (!kern::avx2_supported()) return;
    BackendGuard guard;
    Rng rng(42);

    // sizes straddling the 4-lane width, including remainders
    for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 33u, 130u}) {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);

        kern::set_backend(kern::Backend::kScalar);
        const double dot_s = kern::dot(a.data(), b.data(), n);
        auto had_s = std::vector<double>(n);
        kern::hadamard(a.data(), b.data(), had_s.data(), n);
        auto axpy_s = b;
        kern::axpy(0.37, a.data(), axpy_s.data(), n);

        kern::set_backend(kern::Backend::kAvx2);
        const double dot_v = kern::dot(a.data(), b.data(), n);
        auto had_v = std::vector<double>(n);
        kern::hadamard(a.data(), b.data(), had_v.data(), n);
        auto axpy_v = b;
        kern::axpy(0.37, a.data(), axpy_v.data(), n);

        // reductions reassociate; elementwise kernels must match bitwise
        CHECK(dot_v == doctest::Approx(dot_s).epsilon(1e-13));
        CHECK(had_v == had_s);
        CHECK(axpy_v == axpy_s);
    }
}

TEST_CASE("avx2 matvec agrees with scalar within reduction tolerance") {
    if (!kern::avx2_supported()) return;
    BackendGuard guard;
    Rng rng(7);
    const std::size_t rows = 13, cols = 37;
    auto m = random_vec(rng, rows * cols);
    auto x = random_vec(rng, cols);

    std::vector<double> y_s(rows), y_v(rows);
    kern::set_backend(kern::Backend::kScalar);
    kern::matvec(m.data(), rows, cols, x.data(), y_s.data());
    kern::set_backend(kern::Backend::kAvx2);
    kern::matvec(m.data(), rows, cols, x.data(), y_v.data());
    for (std::size_t r = 0; r < rows; ++r)
        CHECK(y_v[r] == doctest::Approx(y_s[r]).epsilon(1e-13));

    std::vector<double> t_s(cols, 0.1), t_v(cols, 0.1);
    auto u = random_vec(rng, rows);
    kern::set_backend(kern::Backend::kScalar);
    kern::matvec_t_acc(m.data(), rows, cols, u.data(), t_s.data());
    kern::set_backend(kern::Backend::kAvx2);
    kern::matvec_t_acc(m.data(), rows, cols, u.data(), t_v.data());
    CHECK(t_v == t_s);  // row-wise axpy: elementwise, exact
}
#endif

TEST_CASE("norm_sq is a sum of squares") {
    const double x[] = {3.0, 4.0};
    CHECK(kern::norm_sq(x, 2) == doctest::Approx(25.0));
}
