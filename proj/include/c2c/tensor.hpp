#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "c2c/kernels.hpp"

namespace c2c {

using Vec = std::vector<double>;

// Row-major dense matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double* row(std::size_t r) { return a.data() + r * cols; }
    const double* row(std::size_t r) const { return a.data() + r * cols; }

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::size_t size() const { return a.size(); }
    void fill(double v) { a.assign(a.size(), v); }
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline void sigmoid_inplace(Vec& v) {
    for (double& x : v) x = sigmoid(x);
}

inline void tanh_inplace(Vec& v) {
    for (double& x : v) x = std::tanh(x);
}

inline Vec concat(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Numerically stable softmax (max subtraction).
inline Vec softmax(const Vec& scores) {
    assert(!scores.empty());
    double m = scores[0];
    for (double s : scores)
        if (s > m) m = s;
    Vec out(scores.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out[i] = std::exp(scores[i] - m);
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return out;
}

inline bool all_finite(const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(x[i])) return false;
    return true;
}

}  // namespace c2c
