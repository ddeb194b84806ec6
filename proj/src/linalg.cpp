#include "ambc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ambc/errors.hpp"

namespace ambc {

CVector::CVector(std::size_t n) : data_(n) {
    if (n == 0) throw DimensionError("CVector: length must be at least 1");
}

CVector::CVector(std::initializer_list<Complex> entries) : data_(entries) {
    if (data_.empty()) throw DimensionError("CVector: length must be at least 1");
}

CVector::CVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    if (data_.empty()) throw DimensionError("CVector: length must be at least 1");
}

double CVector::squared_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
}

double CVector::norm() const noexcept { return std::sqrt(squared_norm()); }

CVector& CVector::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("CMatrix: both dimensions must be at least 1");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (rows == 0 || cols == 0) throw DimensionError("CMatrix: both dimensions must be at least 1");
    if (data_.size() != rows * cols) {
        throw DimensionError("CMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double CMatrix::frobenius_norm_sq() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
}

CVector CMatrix::apply(const CVector& x) const {
    if (x.size() != cols_) throw DimensionError("CMatrix::apply: length mismatch");
    CVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc = 0.0;
        const Complex* row = &data_[r * cols_];
        for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
    return y;
}

CVector CMatrix::apply_adjoint(const CVector& x) const {
    if (x.size() != rows_) throw DimensionError("CMatrix::apply_adjoint: length mismatch");
    CVector y(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const Complex xr = x[r];
        const Complex* row = &data_[r * cols_];
        for (std::size_t c = 0; c < cols_; ++c) y[c] += std::conj(row[c]) * xr;
    }
    return y;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("CMatrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("CMatrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Complex inner(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner: length mismatch (" + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + ")");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(const CVector& v) { return v.norm(); }

CMatrix outer(const CVector& a, const CVector& b) {
    CMatrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * std::conj(b[c]);
    return m;
}

namespace {

// Hermitian Gram matrix, dense row-major, d x d.
struct Gram {
    std::size_t d;
    std::vector<Complex> g;

    CVector apply(const CVector& x) const {
        CVector y(d);
        for (std::size_t r = 0; r < d; ++r) {
            Complex acc = 0.0;
            const Complex* row = &g[r * d];
            for (std::size_t c = 0; c < d; ++c) acc += row[c] * x[c];
            y[r] = acc;
        }
        return y;
    }
};

// A^H A when cols <= rows (iterate on the right vector), A A^H otherwise.
Gram form_gram(const CMatrix& a, bool right_side) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Gram gram{right_side ? cols : rows, {}};
    gram.g.assign(gram.d * gram.d, Complex{});
    if (right_side) {
        for (std::size_t k = 0; k < rows; ++k)
            for (std::size_t i = 0; i < cols; ++i) {
                const Complex aki = std::conj(a(k, i));
                for (std::size_t j = i; j < cols; ++j) gram.g[i * cols + j] += aki * a(k, j);
            }
    } else {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = i; j < rows; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < cols; ++k) acc += a(i, k) * std::conj(a(j, k));
                gram.g[i * rows + j] = acc;
            }
    }
    for (std::size_t i = 0; i < gram.d; ++i) {
        gram.g[i * gram.d + i] = gram.g[i * gram.d + i].real();
        for (std::size_t j = i + 1; j < gram.d; ++j) gram.g[j * gram.d + i] = std::conj(gram.g[i * gram.d + j]);
    }
    return gram;
}

CVector column(const Gram& gram, std::size_t j) {
    CVector col(gram.d);
    for (std::size_t r = 0; r < gram.d; ++r) col[r] = gram.g[r * gram.d + j];
    return col;
}

// ||y - (x^H y) x|| for unit x, y.
double sine_distance(const CVector& x, const CVector& y) {
    const Complex proj = inner(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(y[i] - proj * x[i]);
    return std::sqrt(s);
}

// Largest Rayleigh quotient reached by a short power iteration on
// G - lambda x x^H, kept orthogonal to x. Lower bound on the second eigenvalue.
double second_eigenvalue_lower_bound(const Gram& gram, const CVector& x, double lambda) {
    constexpr int kSteps = 30;
    double best_norm = -1.0;
    CVector start(gram.d);
    for (std::size_t j = 0; j < gram.d; ++j) {
        CVector col = column(gram, j);
        const Complex p = inner(x, col);
        for (std::size_t i = 0; i < gram.d; ++i) col[i] -= p * x[i];
        const double n = col.norm();
        if (n > best_norm) {
            best_norm = n;
            start = std::move(col);
        }
    }
    if (best_norm <= 1e-300) return 0.0;
    CVector y = (1.0 / best_norm) * start;
    double lambda2 = 0.0;
    for (int it = 0; it < kSteps; ++it) {
        CVector gy = gram.apply(y);
        const Complex py = inner(x, y);
        // (G - lambda x x^H) y, then re-orthogonalise against x.
        for (std::size_t i = 0; i < gram.d; ++i) gy[i] -= lambda * py * x[i];
        lambda2 = std::max(lambda2, inner(y, gy).real());
        const Complex p = inner(x, gy);
        for (std::size_t i = 0; i < gram.d; ++i) gy[i] -= p * x[i];
        const double n = gy.norm();
        if (n <= 1e-300) break;
        y = (1.0 / n) * std::move(gy);
    }
    return lambda2;
}

}  // namespace

SingularTriplet dominant_singular_triplet(const CMatrix& a, double tol, int max_iter) {
    if (!(tol > 0.0)) throw DomainError("dominant_singular_triplet: tol must be positive");
    if (max_iter < 1) throw DomainError("dominant_singular_triplet: max_iter must be at least 1");
    if (a.frobenius_norm_sq() == 0.0) throw DegenerateInputError("dominant_singular_triplet: zero matrix");

    const bool right_side = a.cols() <= a.rows();
    const Gram gram = form_gram(a, right_side);

    // Start from the Gram column with the largest diagonal entry.
    std::size_t j0 = 0;
    for (std::size_t j = 1; j < gram.d; ++j)
        if (gram.g[j * gram.d + j].real() > gram.g[j0 * gram.d + j0].real()) j0 = j;
    CVector x = column(gram, j0);
    x *= 1.0 / x.norm();

    double sine = 1.0;
    int it = 0;
    while (it < max_iter) {
        ++it;
        CVector y = gram.apply(x);
        const double ny = y.norm();
        if (ny == 0.0) throw DegenerateInputError("dominant_singular_triplet: iterate annihilated");
        y *= 1.0 / ny;
        sine = sine_distance(x, y);
        x = std::move(y);
        if (sine <= tol) break;
    }
    if (sine > tol) {
        throw ConvergenceError("dominant_singular_triplet: no convergence after " + std::to_string(it) +
                                   " iterations (sine distance " + std::to_string(sine) + ")",
                               sine, it);
    }

    const double lambda = inner(x, gram.apply(x)).real();

    SingularTriplet out;
    out.iterations = it;
    if (right_side) {
        CVector u = a.apply(x);
        out.sigma = u.norm();
        u *= 1.0 / out.sigma;
        out.right = std::move(x);
        out.left = std::move(u);
    } else {
        CVector v = a.apply_adjoint(x);
        out.sigma = v.norm();
        v *= 1.0 / out.sigma;
        out.left = std::move(x);
        out.right = std::move(v);
    }

    for (std::size_t i = 0; i < out.right.size(); ++i) {
        const double mag = std::abs(out.right[i]);
        if (mag > 1e-12) {
            const Complex phase = std::conj(out.right[i]) / mag;
            out.right *= phase;
            out.left *= phase;
            out.right[i] = mag;
            break;
        }
    }

    CVector r = a.apply_adjoint(out.left);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= out.sigma * out.right[i];
    out.residual = r.norm() / out.sigma;

    if (gram.d >= 2) {
        const double lambda2 = second_eigenvalue_lower_bound(gram, right_side ? out.right : out.left, lambda);
        out.degenerate = (lambda - lambda2) < 1e-8 * lambda;
    }
    return out;
}

}  // namespace ambc
