#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ebchan {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
/// Row-major real 3x3 matrix: m[row][col].
using Mat3 = std::array<Vec3, 3>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * dim_ + col]; }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] ComplexMatrix transpose() const;
    [[nodiscard]] Complex trace() const noexcept;
    [[nodiscard]] bool is_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix, ascending.
struct HermitianSpectrum {
    std::vector<double> values;

    [[nodiscard]] double min() const { return values.front(); }
    [[nodiscard]] double max() const { return values.back(); }
    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

/// Cyclic complex Jacobi. Throws NotHermitian if the input deviates from
/// its adjoint by more than tol::kHermiticity, NonFinite on NaN/Inf.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose on the second tensor factor: ((i,j),(k,l)) -> ((i,l),(k,j)).
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

// ---------------------------------------------------------------------------
// Real 3x3 helpers.

Mat3 identity3() noexcept;
Mat3 diag3(const Vec3& d) noexcept;
Mat3 matmul(const Mat3& a, const Mat3& b) noexcept;
Vec3 matvec(const Mat3& a, const Vec3& v) noexcept;
Mat3 transpose(const Mat3& a) noexcept;
double det(const Mat3& a) noexcept;
double dot(const Vec3& a, const Vec3& b) noexcept;
Vec3 cross(const Vec3& a, const Vec3& b) noexcept;
double norm(const Vec3& v) noexcept;
double max_abs_diff(const Mat3& a, const Mat3& b) noexcept;
double max_abs_diff(const Vec3& a, const Vec3& b) noexcept;

/// m = u * diag(s with s[2] multiplied by sign) * v^T, with u, v in SO(3),
/// s >= 0 sorted descending, and sign the sign of det(m) (+1 when m is
/// numerically singular).
struct Svd3 {
    Mat3 u;
    Vec3 s;
    Mat3 v;
    int sign;

    [[nodiscard]] Vec3 signed_values() const noexcept { return {s[0], s[1], sign * s[2]}; }
};

/// One-sided Jacobi SVD. Throws NonFinite on NaN/Inf entries.
Svd3 svd3(const Mat3& m);

}  // namespace ebchan
