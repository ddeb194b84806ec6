#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ambc {

using Complex = std::complex<double>;

// Dense complex column vector. Never empty.
class CVector {
public:
    explicit CVector(std::size_t n);
    CVector(std::initializer_list<Complex> entries);
    explicit CVector(std::vector<Complex> entries);

    std::size_t size() const noexcept { return data_.size(); }

    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }

    std::span<Complex> entries() noexcept { return data_; }
    std::span<const Complex> entries() const noexcept { return data_; }

    double squared_norm() const noexcept;
    double norm() const noexcept;

    CVector& operator*=(Complex s);
    friend CVector operator*(Complex s, CVector v) { return v *= s; }

    bool operator==(const CVector&) const = default;

private:
    std::vector<Complex> data_;
};

// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    double frobenius_norm_sq() const noexcept;

    // A x and A^H x.
    CVector apply(const CVector& x) const;
    CVector apply_adjoint(const CVector& x) const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

// a^H b, conjugate-linear in the first argument.
Complex inner(const CVector& a, const CVector& b);

double norm(const CVector& v);

// a b^H
CMatrix outer(const CVector& a, const CVector& b);

struct SingularTriplet {
    double sigma = 0.0;
    CVector left{1};
    CVector right{1};
    // ||A^H left - sigma right|| / sigma at return.
    double residual = 0.0;
    int iterations = 0;
    // Top two eigenvalues of the Gram matrix agree to better than 1e-8 relative.
    bool degenerate = false;
};

// Largest singular value of A with unit singular vectors, by power iteration on
// the smaller of A^H A and A A^H. Stops once the sine distance between
// successive iterates drops below tol. The first entry of `right` with modulus
// above 1e-12 is made real and positive.
SingularTriplet dominant_singular_triplet(const CMatrix& a, double tol = 1e-10, int max_iter = 20000);

}  // namespace ambc
