#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cocycle {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static CMatrix diagonal(std::span<const Complex> d);
    static CMatrix diagonal(std::span<const double> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const { return data_; }
    std::span<Complex> data() { return data_; }

    std::vector<Complex> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Complex> v);
    /// Columns [begin, begin + count).
    CMatrix columns(std::size_t begin, std::size_t count) const;
    static CMatrix from_columns(const std::vector<std::vector<Complex>>& cols, std::size_t rows);

    CMatrix adjoint() const;
    CMatrix conj() const;
    Complex trace() const;
    Complex determinant() const;
    double frobenius_norm() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);
std::vector<Complex> operator*(const CMatrix& a, std::span<const Complex> v);

/// ‖a - b‖_F. Shapes must agree.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

/// Block-diagonal a ⊕ b.
CMatrix block_diagonal(const CMatrix& a, const CMatrix& b);

double norm2(std::span<const Complex> v);
/// ⟨a, b⟩ = Σ conj(a_i)·b_i.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);

struct EigenResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Throws NotHermitian when
/// ‖M − M†‖_F > hermitian_tol·(1+‖M‖_F) and NoConvergence past the sweep cap.
/// Each eigenvector is phase-fixed so its first largest-magnitude entry is
/// real and positive.
EigenResult hermitian_eig(const CMatrix& m, double hermitian_tol = kDefaultTol);

/// Singular values (descending) and right singular vectors of an arbitrary
/// matrix, by Householder QR followed by one-sided Jacobi.
struct SvdResult {
    std::vector<double> singular_values;  // length cols, descending
    CMatrix right_vectors;                // cols × cols unitary
};
SvdResult singular_value_decomposition(const CMatrix& m);

/// Orthonormal basis (as columns) of {v : ‖Mv‖ ≤ tol·‖v‖·(1+‖M‖_F)}.
/// Returns a cols×0 matrix when the kernel is trivial.
CMatrix null_space(const CMatrix& m, double tol = kDefaultTol);

/// Number of singular values above tol·(1+‖M‖_F).
std::size_t numerical_rank(const CMatrix& m, double tol = kDefaultTol);

/// ‖M†M − I‖_F ≤ tol. Non-square input is never unitary.
bool is_unitary(const CMatrix& m, double tol = kDefaultTol);

/// Orthonormalizes the columns of m (modified Gram–Schmidt, two passes).
CMatrix orthonormalize_columns(const CMatrix& m);

/// Groups indices of ascending `values` into runs whose consecutive gaps are
/// at most `gap`. Returns [begin, end) ranges.
std::vector<std::pair<std::size_t, std::size_t>> cluster_sorted(std::span<const double> values,
                                                                double gap);

}  // namespace cocycle
