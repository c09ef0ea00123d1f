// mat.hpp -- dense square matrices over Q(i), sized for 4x4 Lie theory.
//
// Everything is by value; a Matrix<N> is an aggregate of N*N exact scalars.
// The only sizes used are 2 (Pauli factors) and 4 (the algebras themselves).

#ifndef GRADINGS_MAT_HPP
#define GRADINGS_MAT_HPP

#include "gradings/exact.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradings {

template <std::size_t N>
class Matrix {
public:
    Matrix() = default;

    // Row-major list of N*N entries.
    static Matrix from_rows(std::initializer_list<GaussianRational> entries) {
        if (entries.size() != N * N)
            throw std::invalid_argument("Matrix::from_rows: wrong entry count");
        Matrix m;
        std::size_t k = 0;
        for (const auto& e : entries) m.e_[k++] = e;
        return m;
    }

    [[nodiscard]] static Matrix identity() {
        Matrix m;
        for (std::size_t j = 0; j < N; ++j) m.at(j, j) = GaussianRational{1};
        return m;
    }

    // Elementary matrix with a single 1 in row j, column k (0-based).
    [[nodiscard]] static Matrix unit(std::size_t j, std::size_t k) {
        Matrix m;
        m.at(j, k) = GaussianRational{1};
        return m;
    }

    [[nodiscard]] static Matrix diagonal(const std::array<GaussianRational, N>& d) {
        Matrix m;
        for (std::size_t j = 0; j < N; ++j) m.at(j, j) = d[j];
        return m;
    }

    [[nodiscard]] GaussianRational& at(std::size_t row, std::size_t col) {
        return e_[row * N + col];
    }
    [[nodiscard]] const GaussianRational& at(std::size_t row, std::size_t col) const {
        return e_[row * N + col];
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& e : e_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend Matrix operator*(const GaussianRational& s, const Matrix& a) {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = s * a.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t l = 0; l < N; ++l) {
                GaussianRational acc;
                for (std::size_t k = 0; k < N; ++k) acc += a.at(j, k) * b.at(k, l);
                r.at(j, l) = acc;
            }
        return r;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix r;
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) r.at(k, j) = at(j, k);
        return r;
    }

    [[nodiscard]] Matrix conjugate() const {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = conj(e_[k]);
        return r;
    }

    // Conjugate transpose.
    [[nodiscard]] Matrix dagger() const { return conjugate().transpose(); }

    [[nodiscard]] GaussianRational trace() const {
        GaussianRational t;
        for (std::size_t j = 0; j < N; ++j) t += at(j, j);
        return t;
    }

    [[nodiscard]] bool is_hermitian() const { return *this == dagger(); }

    [[nodiscard]] GaussianRational determinant() const {
        Matrix work = *this;
        GaussianRational det{1};
        for (std::size_t col = 0; col < N; ++col) {
            std::size_t pivot = col;
            while (pivot < N && work.at(pivot, col).is_zero()) ++pivot;
            if (pivot == N) return GaussianRational{};
            if (pivot != col) {
                for (std::size_t k = 0; k < N; ++k)
                    std::swap(work.at(pivot, k), work.at(col, k));
                det = -det;
            }
            det *= work.at(col, col);
            const GaussianRational inv = inverse(work.at(col, col));
            for (std::size_t row = col + 1; row < N; ++row) {
                if (work.at(row, col).is_zero()) continue;
                const GaussianRational f = work.at(row, col) * inv;
                for (std::size_t k = col; k < N; ++k)
                    work.at(row, k) -= f * work.at(col, k);
            }
        }
        return det;
    }

    [[nodiscard]] std::optional<Matrix> inverse_matrix() const {
        Matrix work = *this;
        Matrix inv = identity();
        for (std::size_t col = 0; col < N; ++col) {
            std::size_t pivot = col;
            while (pivot < N && work.at(pivot, col).is_zero()) ++pivot;
            if (pivot == N) return std::nullopt;
            if (pivot != col)
                for (std::size_t k = 0; k < N; ++k) {
                    std::swap(work.at(pivot, k), work.at(col, k));
                    std::swap(inv.at(pivot, k), inv.at(col, k));
                }
            const GaussianRational d = gradings::inverse(work.at(col, col));
            for (std::size_t k = 0; k < N; ++k) {
                work.at(col, k) *= d;
                inv.at(col, k) *= d;
            }
            for (std::size_t row = 0; row < N; ++row) {
                if (row == col || work.at(row, col).is_zero()) continue;
                const GaussianRational f = work.at(row, col);
                for (std::size_t k = 0; k < N; ++k) {
                    work.at(row, k) -= f * work.at(col, k);
                    inv.at(row, k) -= f * inv.at(col, k);
                }
            }
        }
        return inv;
    }

    [[nodiscard]] bool is_invertible() const { return !determinant().is_zero(); }

    // Space-separated row-major entries in the scalar text form.
    [[nodiscard]] std::string to_text() const {
        std::string out;
        for (std::size_t k = 0; k < N * N; ++k) {
            if (k) out += ' ';
            out += format_scalar(e_[k]);
        }
        return out;
    }

    [[nodiscard]] static Matrix from_text(const std::string& text) {
        std::istringstream in(text);
        Matrix m;
        std::string tok;
        std::size_t k = 0;
        while (in >> tok) {
            if (k == N * N) throw std::invalid_argument("Matrix::from_text: too many entries");
            m.e_[k++] = parse_scalar(tok);
        }
        if (k != N * N) throw std::invalid_argument("Matrix::from_text: too few entries");
        return m;
    }

private:
    std::array<GaussianRational, N * N> e_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

[[nodiscard]] inline Mat4 bracket(const Mat4& a, const Mat4& b) { return a * b - b * a; }

// The scalar c with y = c*x, if one exists (x nonzero).
template <std::size_t N>
[[nodiscard]] std::optional<GaussianRational> scalar_ratio(const Matrix<N>& y,
                                                           const Matrix<N>& x) {
    std::optional<GaussianRational> c;
    for (std::size_t r = 0; r < N && !c; ++r)
        for (std::size_t col = 0; col < N && !c; ++col)
            if (!x.at(r, col).is_zero()) c = y.at(r, col) / x.at(r, col);
    if (!c) return std::nullopt;
    if (!(y == *c * x)) return std::nullopt;
    return c;
}

// Kronecker product: (A (x) B)[2*j1+j2][2*k1+k2] = A[j1][k1] * B[j2][k2].
[[nodiscard]] inline Mat4 tensor(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
            for (std::size_t k1 = 0; k1 < 2; ++k1)
                for (std::size_t k2 = 0; k2 < 2; ++k2)
                    r.at(2 * j1 + j2, 2 * k1 + k2) = a.at(j1, k1) * b.at(j2, k2);
    return r;
}

// Real Pauli-type basis of 2x2 matrices: s0 = I, s1 and s3 the standard
// symmetric/diagonal involutions, and s2 = s1*s3 (so s2^2 = -I; every
// entry stays rational).
[[nodiscard]] inline Mat2 pauli(std::size_t k) {
    const GaussianRational one{1};
    switch (k) {
        case 0: return Mat2::from_rows({one, 0, 0, one});
        case 1: return Mat2::from_rows({0, one, one, 0});
        case 2: return Mat2::from_rows({0, -one, one, 0});
        case 3: return Mat2::from_rows({one, 0, 0, -one});
        default: throw std::invalid_argument("pauli: index out of range");
    }
}

// ===========================================================================
// Sylvester signature of a hermitian matrix, by exact congruence reduction
// ===========================================================================

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

// Diagonalises M by congruence transformations (M -> S M S^dagger) without
// ever leaving Q(i).  A nonzero diagonal pivot d contributes sign(d); if the
// active diagonal is entirely zero but some off-diagonal entry a survives,
// the hyperbolic 2x2 block [[0,a],[conj(a),0]] contributes one +1 and one -1.
template <std::size_t N>
[[nodiscard]] Signature signature(const Matrix<N>& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("signature: matrix is not hermitian");
    Matrix<N> w = m;
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < N; ++j) active.push_back(j);
    Signature sig;

    const auto erase = [&active](std::size_t idx) {
        for (auto it = active.begin(); it != active.end(); ++it)
            if (*it == idx) {
                active.erase(it);
                return;
            }
    };

    while (!active.empty()) {
        std::size_t pivot = N;
        for (std::size_t j : active)
            if (!w.at(j, j).is_zero()) {
                pivot = j;
                break;
            }
        if (pivot != N) {
            const GaussianRational d = w.at(pivot, pivot);  // real by hermiticity
            (d.re > 0 ? sig.positive : sig.negative) += 1;
            const GaussianRational dinv = inverse(d);
            Matrix<N> next = w;
            for (std::size_t l : active)
                for (std::size_t c : active) {
                    if (l == pivot || c == pivot) continue;
                    next.at(l, c) = w.at(l, c) - w.at(l, pivot) * dinv * w.at(pivot, c);
                }
            w = next;
            erase(pivot);
            continue;
        }
        // Entire active diagonal vanished; look for an off-diagonal entry.
        std::size_t j = N, k = N;
        for (std::size_t a : active) {
            for (std::size_t b : active)
                if (a < b && !w.at(a, b).is_zero()) {
                    j = a;
                    k = b;
                    break;
                }
            if (j != N) break;
        }
        if (j == N) {
            sig.zero += active.size();
            break;
        }
        // Hyperbolic block: eliminate rows/columns j and k against the
        // inverse of [[0,a],[conj(a),0]].
        const GaussianRational a = w.at(j, k);
        const GaussianRational ainv = inverse(a);
        const GaussianRational acinv = inverse(conj(a));
        sig.positive += 1;
        sig.negative += 1;
        Matrix<N> next = w;
        for (std::size_t l : active)
            for (std::size_t c : active) {
                if (l == j || l == k || c == j || c == k) continue;
                next.at(l, c) = w.at(l, c) - w.at(l, k) * ainv * w.at(j, c)
                                          - w.at(l, j) * acinv * w.at(k, c);
            }
        w = next;
        erase(j);
        erase(k);
    }
    return sig;
}

}  // namespace gradings

#endif  // GRADINGS_MAT_HPP
