// subspace.hpp -- exact linear algebra on spaces of 4x4 matrices.
//
// Two coordinate pictures are used throughout:
//   * complex: a Mat4 is a vector in Q(i)^16 (row-major entries);
//   * real:    a Mat4 is a vector in Q^32 (entries split re,im interleaved).
// A single elimination engine, templated on the field, powers both.

#ifndef GRADINGS_SUBSPACE_HPP
#define GRADINGS_SUBSPACE_HPP

#include "gradings/exact.hpp"
#include "gradings/mat.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gradings {

[[nodiscard]] inline bool scalar_is_zero(const Rational& a) { return a == 0; }
[[nodiscard]] inline bool scalar_is_zero(const GaussianRational& a) { return a.is_zero(); }
[[nodiscard]] inline Rational scalar_inverse(const Rational& a) {
    if (a == 0) throw std::domain_error("scalar_inverse: zero");
    return 1 / a;
}
[[nodiscard]] inline GaussianRational scalar_inverse(const GaussianRational& a) {
    return inverse(a);
}

[[nodiscard]] inline std::vector<GaussianRational> flatten_complex(const Mat4& m) {
    std::vector<GaussianRational> v;
    v.reserve(16);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) v.push_back(m.at(j, k));
    return v;
}

[[nodiscard]] inline std::vector<Rational> flatten_real(const Mat4& m) {
    std::vector<Rational> v;
    v.reserve(32);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            v.push_back(m.at(j, k).re);
            v.push_back(m.at(j, k).im);
        }
    return v;
}

// ===========================================================================
// Reduced row echelon accumulator
// ===========================================================================

template <typename F>
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

    // Fully reduces v against the stored rows.
    [[nodiscard]] std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (scalar_is_zero(c)) continue;
            const F f = c;  // pivot entries are normalised to 1
            for (std::size_t k = 0; k < width_; ++k) v[k] = v[k] - f * rows_[r][k];
        }
        return v;
    }

    [[nodiscard]] bool contains(const std::vector<F>& v) const {
        const auto r = reduce(v);
        for (const auto& e : r)
            if (!scalar_is_zero(e)) return false;
        return true;
    }

    // Adds v to the span; returns false if v was already contained.
    bool insert(std::vector<F> v) {
        if (v.size() != width_) throw std::invalid_argument("RowSpace::insert: width mismatch");
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < width_ && scalar_is_zero(v[p])) ++p;
        if (p == width_) return false;
        const F inv = scalar_inverse(v[p]);
        for (std::size_t k = 0; k < width_; ++k) v[k] = inv * v[k];
        // Eliminate the new pivot column from older rows, keep rows ordered
        // by pivot position.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F f = rows_[r][p];
            if (scalar_is_zero(f)) continue;
            for (std::size_t k = 0; k < width_; ++k)
                rows_[r][k] = rows_[r][k] - f * v[k];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

private:
    std::size_t width_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

// Solves sum_j x_j basis[j] = target exactly; nullopt when inconsistent.
// Free coordinates (dependent basis) are set to zero.
template <typename F>
[[nodiscard]] std::optional<std::vector<F>>
solve_coordinates(const std::vector<std::vector<F>>& basis, const std::vector<F>& target) {
    const std::size_t m = basis.size();
    const std::size_t height = target.size();
    for (const auto& b : basis)
        if (b.size() != height)
            throw std::invalid_argument("solve_coordinates: dimension mismatch");

    // Augmented system, unknowns in columns.
    std::vector<std::vector<F>> a(height, std::vector<F>(m + 1));
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t j = 0; j < m; ++j) a[r][j] = basis[j][r];
        a[r][m] = target[r];
    }

    std::vector<std::size_t> pivot_row_of_col(m, height);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < height; ++col) {
        std::size_t pr = row;
        while (pr < height && scalar_is_zero(a[pr][col])) ++pr;
        if (pr == height) continue;
        std::swap(a[pr], a[row]);
        const F inv = scalar_inverse(a[row][col]);
        for (std::size_t k = col; k <= m; ++k) a[row][k] = inv * a[row][k];
        for (std::size_t r = 0; r < height; ++r) {
            if (r == row || scalar_is_zero(a[r][col])) continue;
            const F f = a[r][col];
            for (std::size_t k = col; k <= m; ++k) a[r][k] = a[r][k] - f * a[row][k];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < height; ++r)
        if (!scalar_is_zero(a[r][m])) return std::nullopt;

    std::vector<F> x(m);
    for (std::size_t col = 0; col < m; ++col)
        if (pivot_row_of_col[col] != height) x[col] = a[pivot_row_of_col[col]][m];
    return x;
}

// Basis of { x : E x = 0 } for the equation matrix E (rows = equations).
template <typename F>
[[nodiscard]] std::vector<std::vector<F>>
kernel_basis(std::vector<std::vector<F>> e, std::size_t unknowns) {
    for (const auto& r : e)
        if (r.size() != unknowns) throw std::invalid_argument("kernel_basis: width mismatch");
    const std::size_t height = e.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < height; ++col) {
        std::size_t pr = row;
        while (pr < height && scalar_is_zero(e[pr][col])) ++pr;
        if (pr == height) continue;
        std::swap(e[pr], e[row]);
        const F inv = scalar_inverse(e[row][col]);
        for (std::size_t k = col; k < unknowns; ++k) e[row][k] = inv * e[row][k];
        for (std::size_t r = 0; r < height; ++r) {
            if (r == row || scalar_is_zero(e[r][col])) continue;
            const F f = e[r][col];
            for (std::size_t k = col; k < unknowns; ++k) e[r][k] = e[r][k] - f * e[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(unknowns);
        v[free] = F(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -e[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ===========================================================================
// Subspaces of the 4x4 matrices
// ===========================================================================

// Span over Q(i).
class ComplexSubspace {
public:
    using Field = GaussianRational;
    static constexpr std::size_t coord_width = 16;
    [[nodiscard]] static std::vector<Field> flatten(const Mat4& m) { return flatten_complex(m); }

    [[nodiscard]] static ComplexSubspace span(std::vector<Mat4> basis) {
        ComplexSubspace s;
        s.basis_ = std::move(basis);
        for (const auto& b : s.basis_)
            if (!s.rows_.insert(flatten_complex(b)))
                throw std::invalid_argument("ComplexSubspace::span: dependent basis");
        return s;
    }

    [[nodiscard]] const std::vector<Mat4>& basis() const { return basis_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }

    [[nodiscard]] bool contains(const Mat4& x) const {
        return rows_.contains(flatten_complex(x));
    }

    [[nodiscard]] std::optional<std::vector<GaussianRational>> coordinates(const Mat4& x) const {
        std::vector<std::vector<GaussianRational>> cols;
        cols.reserve(basis_.size());
        for (const auto& b : basis_) cols.push_back(flatten_complex(b));
        return solve_coordinates(cols, flatten_complex(x));
    }

    [[nodiscard]] bool same_span(const ComplexSubspace& other) const {
        if (dim() != other.dim()) return false;
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

private:
    ComplexSubspace() : rows_(16) {}
    std::vector<Mat4> basis_;
    RowSpace<GaussianRational> rows_;
};

// Span over Q (the matrices themselves may have imaginary entries; only the
// coefficients are restricted to the reals).
class RealSubspace {
public:
    using Field = Rational;
    static constexpr std::size_t coord_width = 32;
    [[nodiscard]] static std::vector<Field> flatten(const Mat4& m) { return flatten_real(m); }

    [[nodiscard]] static RealSubspace span(std::vector<Mat4> basis) {
        RealSubspace s;
        s.basis_ = std::move(basis);
        for (const auto& b : s.basis_)
            if (!s.rows_.insert(flatten_real(b)))
                throw std::invalid_argument("RealSubspace::span: dependent basis");
        return s;
    }

    [[nodiscard]] const std::vector<Mat4>& basis() const { return basis_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }

    [[nodiscard]] bool contains(const Mat4& x) const { return rows_.contains(flatten_real(x)); }

    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const Mat4& x) const {
        std::vector<std::vector<Rational>> cols;
        cols.reserve(basis_.size());
        for (const auto& b : basis_) cols.push_back(flatten_real(b));
        return solve_coordinates(cols, flatten_real(x));
    }

    [[nodiscard]] bool same_span(const RealSubspace& other) const {
        if (dim() != other.dim()) return false;
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

private:
    RealSubspace() : rows_(32) {}
    std::vector<Mat4> basis_;
    RowSpace<Rational> rows_;
};

}  // namespace gradings

#endif  // GRADINGS_SUBSPACE_HPP
