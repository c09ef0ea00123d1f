// exact.hpp -- exact scalar arithmetic for the grading verifier.
//
// All computation in this library is exact: the scalar field is Q(i),
// the Gaussian rationals, represented as a pair of arbitrary-precision
// rationals.  No floating point appears anywhere.

#ifndef GRADINGS_EXACT_HPP
#define GRADINGS_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradings {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe constructor for a rational n/d.  boost's two-argument rational
// constructor requires the fraction to already be in lowest terms with a
// positive denominator; division normalises unconditionally, so we build
// through it.
[[nodiscard]] inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

[[nodiscard]] inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// ===========================================================================
// GaussianRational: elements of Q(i)
// ===========================================================================

struct GaussianRational {
    Rational re{};
    Rational im{};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(long long r) : re(make_rational(r)) {}                // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] bool is_real() const { return im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
};

[[nodiscard]] inline GaussianRational conj(const GaussianRational& a) {
    return {a.re, -a.im};
}

// |a|^2 = a * conj(a), a non-negative rational.
[[nodiscard]] inline Rational norm_sq(const GaussianRational& a) {
    return a.re * a.re + a.im * a.im;
}

[[nodiscard]] inline GaussianRational inverse(const GaussianRational& a) {
    if (a.is_zero()) throw std::domain_error("inverse: division by zero in Q(i)");
    const Rational n = norm_sq(a);
    return {a.re / n, -a.im / n};
}

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * inverse(b);
}

[[nodiscard]] inline GaussianRational imaginary_unit() {
    return {Rational(0), Rational(1)};
}

// a/conj(a) for nonzero a.  For an antilinear map J this is the eigenvalue
// matched by the scaling a: if J(X) = lambda*X then J(a*X) = conj(a)*lambda*X
// equals a*X exactly when lambda = a/conj(a).  On the eight half-axes
// {1,-1,i,-i,1+i,...} the ratio is a fourth root of unity.
[[nodiscard]] inline GaussianRational phase_ratio(const GaussianRational& a) {
    return a / conj(a);
}

// ===========================================================================
// Text form.  Scalars are written  a/b+c/d*i  with each part optional:
//   "0", "1", "-1/2", "2*i", "-1/3*i", "1+1*i", "1/2-3/4*i"
// ===========================================================================

[[nodiscard]] inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

[[nodiscard]] inline std::string format_scalar(const GaussianRational& a) {
    if (a.is_zero()) return "0";
    std::string out;
    if (a.re != 0) out += format_rational(a.re);
    if (a.im != 0) {
        if (a.im > 0 && !out.empty()) out += "+";
        out += format_rational(a.im);
        out += "*i";
    }
    return out;
}

[[nodiscard]] inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty literal");
    const auto slash = text.find('/');
    const auto parse_int = [](std::string_view t) -> Integer {
        if (t.empty()) throw std::invalid_argument("parse_rational: empty integer part");
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) throw std::invalid_argument("parse_rational: sign without digits");
        for (std::size_t j = k; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw std::invalid_argument("parse_rational: bad character in '" + std::string(t) + "'");
        return Integer(std::string(t));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// Parses the scalar grammar produced by format_scalar.
[[nodiscard]] inline GaussianRational parse_scalar(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_scalar: empty literal");
    // A trailing "*i" marks an imaginary term; an interior sign (not at
    // position 0) separates real and imaginary parts.  Rational literals
    // contain no interior signs, so the split is unambiguous.
    if (text.size() < 2 || text.substr(text.size() - 2) != "*i")
        return {parse_rational(text)};
    const std::string_view body = text.substr(0, text.size() - 2);
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            const std::string_view real_part = body.substr(0, k);
            std::string_view imag_part = body.substr(k);
            if (imag_part[0] == '+') imag_part.remove_prefix(1);
            return {parse_rational(real_part), parse_rational(imag_part)};
        }
    }
    return {Rational(0), parse_rational(body)};
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& a) {
    return os << format_scalar(a);
}

// ===========================================================================
// Scaling multipliers for antilinear eigenvectors
// ===========================================================================
//
// If an antilinear involution J satisfies J(X) = lambda X with lambda a
// fourth root of unity, then alpha X is a fixed vector of J whenever
// alpha/conj(alpha) = lambda.  One convenient representative alpha per
// admissible lambda:
[[nodiscard]] inline std::optional<GaussianRational>
real_multiplier_for_eigenvalue(const GaussianRational& lambda) {
    const GaussianRational one{1};
    const GaussianRational i = imaginary_unit();
    if (lambda == one) return GaussianRational{1};
    if (lambda == -one) return i;
    if (lambda == i) return one + i;
    if (lambda == -i) return one - i;
    return std::nullopt;
}

}  // namespace gradings

#endif  // GRADINGS_EXACT_HPP
