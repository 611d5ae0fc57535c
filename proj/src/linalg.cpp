#include "cocycle/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cocycle/error.hpp"

namespace cocycle {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("CMatrix: data size mismatch");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("CMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

std::vector<Complex> CMatrix::column(std::size_t c) const {
    std::vector<Complex> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void CMatrix::set_column(std::size_t c, std::span<const Complex> v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMatrix CMatrix::columns(std::size_t begin, std::size_t count) const {
    CMatrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, begin + c);
    return m;
}

CMatrix CMatrix::from_columns(const std::vector<std::vector<Complex>>& cols, std::size_t rows) {
    CMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m = *this;
    for (auto& v : m.data_) v = std::conj(v);
    return m;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Complex CMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 1) return data_[0];
    if (n == 2) return data_[0] * data_[3] - data_[1] * data_[2];
    CMatrix lu = *this;
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
        if (lu(piv, k) == Complex{}) return 0.0;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = lu(r, k) / lu(k, k);
            for (std::size_t c = k; c < n; ++c) lu(r, c) -= f * lu(k, c);
        }
    }
    return det;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix +: shape");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix -: shape");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix *: shape");
    CMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

std::vector<Complex> operator*(const CMatrix& a, std::span<const Complex> v) {
    if (a.cols() != v.size()) throw std::invalid_argument("CMatrix * vector: shape");
    std::vector<Complex> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * v[k];
    return r;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) { return (a - b).frobenius_norm(); }

CMatrix block_diagonal(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

namespace {

// 2×2 unitary [[v00, v01], [v10, v11]] with V†·[[a, b], [conj(b), d]]·V diagonal.
struct Rotation {
    Complex v00, v01, v10, v11;
};

Rotation jacobi_rotation(double a, double d, Complex b) {
    const double mag = std::abs(b);
    // polar() keeps |phase| = 1 even when b is subnormal
    const Complex phase = std::polar(1.0, std::arg(b));
    const double theta = (d - a) / (2.0 * mag);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex pc = std::conj(phase);
    return {c, s, -s * pc, c * pc};
}

// cols p, q of m ← [m_p, m_q]·V
void rotate_columns(CMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Complex mp = m(i, p), mq = m(i, q);
        m(i, p) = mp * r.v00 + mq * r.v10;
        m(i, q) = mp * r.v01 + mq * r.v11;
    }
}

// rows p, q of m ← V†·[m_p; m_q]
void rotate_rows_adjoint(CMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Complex mp = m(p, j), mq = m(q, j);
        m(p, j) = std::conj(r.v00) * mp + std::conj(r.v10) * mq;
        m(q, j) = std::conj(r.v01) * mp + std::conj(r.v11) * mq;
    }
}

void fix_phase(CMatrix& v, std::size_t col) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double m = std::abs(v(i, col));
        if (m > best_mag * (1.0 + 1e-12)) {
            best = i;
            best_mag = m;
        }
    }
    if (best_mag <= 0.0) return;
    const Complex u = std::conj(v(best, col)) / best_mag;
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) *= u;
    v(best, col) = best_mag;
}

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-12;

}  // namespace

EigenResult hermitian_eig(const CMatrix& m, double hermitian_tol) {
    if (!m.is_square()) throw NotHermitian("matrix is not square");
    const std::size_t n = m.rows();
    const double norm = m.frobenius_norm();
    if (frobenius_distance(m, m.adjoint()) > hermitian_tol * (1.0 + norm)) {
        throw NotHermitian("‖M − M†‖_F exceeds tolerance");
    }

    // Symmetrize so rounding asymmetry does not leak into the sweep.
    CMatrix a = 0.5 * (m + m.adjoint());
    CMatrix v = CMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    int sweep = 0;
    for (;; ++sweep) {
        const double off = off_norm();
        if (off == 0.0 || off <= kOffDiagonalThreshold * norm) break;
        if (sweep == kMaxSweeps) {
            throw NoConvergence("Jacobi sweep cap reached with off-diagonal norm " +
                                std::to_string(off));
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                if (std::abs(b) == 0.0) continue;
                const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), b);
                rotate_columns(a, p, q, r);
                rotate_rows_adjoint(a, p, q, r);
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, r);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenResult out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
        fix_phase(out.vectors, k);
    }
    return out;
}

namespace {

// Upper-triangular factor of a Householder QR (m ≥ n), returned as n×n.
CMatrix householder_r(CMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<Complex> v(m);
    for (std::size_t k = 0; k < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < m; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const Complex x0 = a(k, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * xnorm;
        for (std::size_t i = k; i < m; ++i) v[i] = a(i, k);
        v[k] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k; i < m; ++i) vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (std::size_t i = k; i < m; ++i) v[i] /= vnorm;
        for (std::size_t j = k; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += std::conj(v[i]) * a(i, j);
            for (std::size_t i = k; i < m; ++i) a(i, j) -= 2.0 * v[i] * s;
        }
    }
    CMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = a(i, j);
    return r;
}

}  // namespace

SvdResult singular_value_decomposition(const CMatrix& m) {
    const std::size_t n = m.cols();
    CMatrix w = m.rows() > n ? householder_r(m) : m;
    CMatrix v = CMatrix::identity(n);
    const double eps = 1e-15 * static_cast<double>(std::max<std::size_t>(1, w.rows()));
    // Columns this small are zero for every rank threshold in use; rotating
    // them only feeds subnormal noise into v.
    const double negligible = std::pow(1e-20 * w.frobenius_norm(), 2);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t i = 0; i < w.rows(); ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                if (alpha <= negligible || beta <= negligible) continue;
                if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Rotation r = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, r);
                rotate_columns(v, p, q, r);
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < w.rows(); ++i) s += std::norm(w(i, j));
        sigma[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.singular_values.resize(n);
    out.right_vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.singular_values[k] = sigma[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.right_vectors(i, k) = v(i, order[k]);
        fix_phase(out.right_vectors, k);
    }
    return out;
}

CMatrix null_space(const CMatrix& m, double tol) {
    const double threshold = tol * (1.0 + m.frobenius_norm());
    const SvdResult svd = singular_value_decomposition(m);
    std::size_t rank = 0;
    while (rank < svd.singular_values.size() && svd.singular_values[rank] > threshold) ++rank;
    return svd.right_vectors.columns(rank, m.cols() - rank);
}

std::size_t numerical_rank(const CMatrix& m, double tol) {
    const double threshold = tol * (1.0 + m.frobenius_norm());
    const SvdResult svd = singular_value_decomposition(m);
    return static_cast<std::size_t>(std::count_if(svd.singular_values.begin(),
                                                  svd.singular_values.end(),
                                                  [&](double s) { return s > threshold; }));
}

bool is_unitary(const CMatrix& m, double tol) {
    if (!m.is_square()) return false;
    return frobenius_distance(m.adjoint() * m, CMatrix::identity(m.rows())) <= tol;
}

CMatrix orthonormalize_columns(const CMatrix& m) {
    CMatrix q = m;
    for (std::size_t j = 0; j < q.cols(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex s = 0.0;
                for (std::size_t i = 0; i < q.rows(); ++i) s += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) -= s * q(i, k);
            }
        }
        double n = 0.0;
        for (std::size_t i = 0; i < q.rows(); ++i) n += std::norm(q(i, j));
        n = std::sqrt(n);
        if (n == 0.0) throw std::invalid_argument("orthonormalize_columns: dependent columns");
        for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) /= n;
    }
    return q;
}

std::vector<std::pair<std::size_t, std::size_t>> cluster_sorted(std::span<const double> values,
                                                                double gap) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > gap) {
            if (i > begin) runs.emplace_back(begin, i);
            begin = i;
        }
    }
    return runs;
}

}  // namespace cocycle
