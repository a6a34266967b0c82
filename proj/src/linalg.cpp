#include "ebchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ebchan/errors.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw BadDimension("ComplexMatrix: dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DimensionMismatch("ComplexMatrix: rows must form a square matrix");
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("ComplexMatrix::operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("ComplexMatrix::operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("ComplexMatrix product");
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff");
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
    return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_of_product");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return t;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q).
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const Complex phase = apq / g;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * g);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
    const Complex phase_conj = std::conj(phase);
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;
}

}  // namespace

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_finite()) throw NonFinite("hermitian_eigenvalues: non-finite entry");
    const double defect = hermiticity_defect(m);
    if (defect > tol::kHermiticity) {
        throw NotHermitian("hermitian_eigenvalues: max |m - m^dagger| = " + std::to_string(defect));
    }
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize so the rotation algebra sees an exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    // Sweep until the off-diagonal mass is below the absolute threshold AND
    // every remaining entry is negligible next to its diagonal pair
    // (|a_pq| <= eps sqrt|a_pp a_qq|). The second rule keeps tiny eigenvalues
    // accurate relative to their own size, e.g. +-1e-20 pairs on a zero
    // diagonal that an absolute stop would report as 0.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
        const bool small = off_diagonal_norm(a) < threshold;
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g <= std::numeric_limits<double>::min()) continue;
                if (small && g <= eps * std::sqrt(std::abs(a(p, p).real() * a(q, q).real()))) continue;
                jacobi_rotate(a, p, q);
                rotated = true;
            }
        if (!rotated) break;
    }

    HermitianSpectrum spectrum;
    spectrum.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) spectrum.values[i] = a(i, i).real();
    std::sort(spectrum.values.begin(), spectrum.values.end());
    return spectrum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b) {
        throw DimensionMismatch("partial_transpose: matrix dim " + std::to_string(m.dim()) + " != " +
                                std::to_string(dim_a) + " x " + std::to_string(dim_b));
    }
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            for (std::size_t k = 0; k < dim_a; ++k)
                for (std::size_t l = 0; l < dim_b; ++l)
                    out(i * dim_b + l, k * dim_b + j) = m(i * dim_b + j, k * dim_b + l);
    return out;
}

// ---------------------------------------------------------------------------

Mat3 identity3() noexcept { return diag3({1.0, 1.0, 1.0}); }

Mat3 diag3(const Vec3& d) noexcept {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = d[i];
    return m;
}

Mat3 matmul(const Mat3& a, const Mat3& b) noexcept {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Vec3 matvec(const Mat3& a, const Vec3& v) noexcept {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return out;
}

Mat3 transpose(const Mat3& a) noexcept {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[j][i] = a[i][j];
    return t;
}

double det(const Mat3& a) noexcept {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double dot(const Vec3& a, const Vec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& v) noexcept { return std::sqrt(dot(v, v)); }

double max_abs_diff(const Mat3& a, const Mat3& b) noexcept {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

double max_abs_diff(const Vec3& a, const Vec3& b) noexcept {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

namespace {

Vec3 column(const Mat3& m, int j) noexcept { return {m[0][j], m[1][j], m[2][j]}; }

void set_column(Mat3& m, int j, const Vec3& v) noexcept {
    for (int i = 0; i < 3; ++i) m[i][j] = v[i];
}

Vec3 scaled(const Vec3& v, double s) noexcept { return {v[0] * s, v[1] * s, v[2] * s}; }

// Unit vector orthogonal to the unit vector u.
Vec3 any_orthogonal(const Vec3& u) noexcept {
    int smallest = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) < std::abs(u[smallest])) smallest = i;
    Vec3 e{};
    e[smallest] = 1.0;
    Vec3 w = cross(u, e);
    return scaled(w, 1.0 / norm(w));
}

}  // namespace

Svd3 svd3(const Mat3& m) {
    for (const auto& row : m)
        for (double x : row)
            if (!std::isfinite(x)) throw NonFinite("svd3: non-finite entry");

    // One-sided Jacobi: rotate columns of w = m v until mutually orthogonal.
    Mat3 w = m;
    Mat3 v = identity3();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < 2; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const Vec3 wi = column(w, i);
                const Vec3 wj = column(w, j);
                const double alpha = dot(wi, wi);
                const double beta = dot(wj, wj);
                const double gamma = dot(wi, wj);
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                if (zeta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int k = 0; k < 3; ++k) {
                    const double a = w[k][i];
                    const double b = w[k][j];
                    w[k][i] = c * a - s * b;
                    w[k][j] = s * a + c * b;
                    const double va = v[k][i];
                    const double vb = v[k][j];
                    v[k][i] = c * va - s * vb;
                    v[k][j] = s * va + c * vb;
                }
            }
        if (!rotated) break;
    }

    std::array<int, 3> order{0, 1, 2};
    Vec3 norms{norm(column(w, 0)), norm(column(w, 1)), norm(column(w, 2))};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return norms[a] > norms[b]; });

    Mat3 ws{};
    Mat3 vs{};
    Svd3 out{};
    for (int j = 0; j < 3; ++j) {
        set_column(ws, j, column(w, order[j]));
        set_column(vs, j, column(v, order[j]));
        out.s[j] = norms[order[j]];
    }
    // Sorting may have made v improper; flipping a column pair keeps m = w v^T.
    if (det(vs) < 0.0) {
        set_column(ws, 2, scaled(column(ws, 2), -1.0));
        set_column(vs, 2, scaled(column(vs, 2), -1.0));
    }
    out.v = vs;

    Vec3 u0{1.0, 0.0, 0.0};
    if (out.s[0] > 0.0) u0 = scaled(column(ws, 0), 1.0 / out.s[0]);
    Vec3 u1{};
    if (out.s[1] > 0.0) {
        u1 = scaled(column(ws, 1), 1.0 / out.s[1]);
        u1 = {u1[0] - dot(u0, u1) * u0[0], u1[1] - dot(u0, u1) * u0[1], u1[2] - dot(u0, u1) * u0[2]};
        u1 = scaled(u1, 1.0 / norm(u1));
    } else {
        u1 = out.s[0] > 0.0 ? any_orthogonal(u0) : Vec3{0.0, 1.0, 0.0};
    }
    const Vec3 u2 = cross(u0, u1);
    set_column(out.u, 0, u0);
    set_column(out.u, 1, u1);
    set_column(out.u, 2, u2);

    const bool singular = out.s[2] <= 4.0 * eps * std::max(out.s[0], std::numeric_limits<double>::min());
    out.sign = (singular || dot(column(ws, 2), u2) >= 0.0) ? 1 : -1;
    return out;
}

}  // namespace ebchan
