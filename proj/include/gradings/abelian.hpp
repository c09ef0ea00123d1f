// abelian.hpp -- finitely generated abelian groups, exactly.
//
// The universal grading group of a decomposition is presented as
// Z^n / (row space of a relation matrix); the Smith normal form over Z
// turns that presentation into invariant factors together with the image
// of each original generator.

#ifndef GRADINGS_ABELIAN_HPP
#define GRADINGS_ABELIAN_HPP

#include "gradings/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradings {

using IntMatrix = std::vector<std::vector<Integer>>;

[[nodiscard]] inline IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j) m[j][j] = 1;
    return m;
}

[[nodiscard]] inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix r(rows, std::vector<Integer>(cols, 0));
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[j][k] == 0) continue;
            for (std::size_t l = 0; l < cols; ++l) r[j][l] += a[j][k] * b[k][l];
        }
    return r;
}

// Determinant by fraction-free-ish rational elimination; used only to check
// unimodularity in tests, sizes are tiny.
[[nodiscard]] inline Rational int_determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) w[j][k] = Rational(a[j][k]);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(w[p], w[col]);
            det = -det;
        }
        det *= w[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w[r][col] == 0) continue;
            const Rational f = w[r][col] / w[col][col];
            for (std::size_t k = col; k < n; ++k) w[r][k] -= f * w[col][k];
        }
    }
    return det;
}

struct SmithDecomposition {
    IntMatrix d;  // diagonal, d = u * a * v
    IntMatrix u;  // unimodular row operations
    IntMatrix v;  // unimodular column operations
};

// Smith normal form with transforms: d = u*a*v, diagonal entries
// non-negative with d[t] | d[t+1] (zeros trailing).
[[nodiscard]] inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    SmithDecomposition s{a, int_identity(m), int_identity(n)};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    const auto swap_rows = [&](std::size_t x, std::size_t y) {
        std::swap(d[x], d[y]);
        std::swap(u[x], u[y]);
    };
    const auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : d) std::swap(row[x], row[y]);
        for (auto& row : v) std::swap(row[x], row[y]);
    };
    const auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t k = 0; k < n; ++k) d[dst][k] += f * d[src][k];
        for (std::size_t k = 0; k < m; ++k) u[dst][k] += f * u[src][k];
    };
    const auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t r = 0; r < m; ++r) d[r][dst] += f * d[r][src];
        for (std::size_t r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
    };
    const auto negate_row = [&](std::size_t r) {
        for (auto& e : d[r]) e = -e;
        for (auto& e : u[r]) e = -e;
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // Locate a nonzero entry of the trailing submatrix.
        std::size_t pr = m, pc = n;
        for (std::size_t r = t; r < m && pr == m; ++r)
            for (std::size_t c = t; c < n; ++c)
                if (d[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == m) break;
        if (pr != t) swap_rows(pr, t);
        if (pc != t) swap_cols(pc, t);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < m; ++r) {
                while (d[r][t] != 0) {
                    const Integer q = d[r][t] / d[t][t];
                    add_row(r, t, -q);
                    if (d[r][t] != 0) {
                        swap_rows(r, t);
                        dirty = true;
                    }
                }
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                while (d[t][c] != 0) {
                    const Integer q = d[t][c] / d[t][t];
                    add_col(c, t, -q);
                    if (d[t][c] != 0) {
                        swap_cols(c, t);
                        dirty = true;
                    }
                }
            }
            if (dirty) continue;

            // Pivot must divide the whole remaining submatrix; if not, fold
            // the offending row in and restart the reduction.
            bool divides = true;
            for (std::size_t r = t + 1; r < m && divides; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (d[r][c] % d[t][t] != 0) {
                        add_row(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) negate_row(t);
    }
    return s;
}

// ===========================================================================
// Groups and their elements
// ===========================================================================

// Z^rank x Z_{f1} x Z_{f2} x ... with f1 | f2 | ... (all >= 2).
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> factors;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    [[nodiscard]] std::string to_string() const {
        if (rank == 0 && factors.empty()) return "0";
        std::string out;
        if (rank == 1) out = "Z";
        else if (rank >= 2) out = "Z^" + std::to_string(rank);
        for (const auto& f : factors) {
            if (!out.empty()) out += " x ";
            out += "Z_" + f.str();
        }
        return out;
    }
};

// Invariant factors from an arbitrary torsion list: split into prime powers,
// then greedily rebuild the divisibility chain from the top.
[[nodiscard]] inline std::vector<Integer> invariant_factors(std::vector<Integer> torsion) {
    std::map<Integer, std::vector<Integer>> powers_by_prime;
    for (Integer t : torsion) {
        if (t < 2) throw std::invalid_argument("invariant_factors: factor < 2");
        for (Integer p = 2; p * p <= t; ++p)
            while (t % p == 0) {
                Integer q = p;
                while (t % p == 0) {
                    t /= p;
                    if (t % p == 0) q *= p;
                }
                // q is the full p-power that divided the original t.
                powers_by_prime[p].push_back(q);
            }
        if (t > 1) powers_by_prime[t].push_back(t);
    }
    for (auto& [p, list] : powers_by_prime)
        std::sort(list.begin(), list.end());
    std::vector<Integer> chain;
    for (;;) {
        Integer top = 1;
        for (auto& [p, list] : powers_by_prime)
            if (!list.empty()) {
                top *= list.back();
                list.pop_back();
            }
        if (top == 1) break;
        chain.push_back(top);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

[[nodiscard]] inline bool isomorphic(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.rank != b.rank) return false;
    return invariant_factors(a.factors) == invariant_factors(b.factors);
}

// "Z^3", "Z x Z_2 x Z_2", "Z_4 x Z_4", "Z_4^2", "0"
[[nodiscard]] inline AbelianGroup parse_group(const std::string& text) {
    AbelianGroup g;
    std::istringstream in(text);
    std::string tok;
    std::vector<Integer> torsion;
    bool any = false;
    while (in >> tok) {
        if (tok == "x") continue;
        any = true;
        if (tok == "0") continue;
        if (tok.empty() || tok[0] != 'Z')
            throw std::invalid_argument("parse_group: bad token '" + tok + "'");
        std::string body = tok.substr(1);
        std::size_t count = 1;
        if (const auto caret = body.find('^'); caret != std::string::npos) {
            count = std::stoul(body.substr(caret + 1));
            body = body.substr(0, caret);
        }
        if (body.empty()) {
            g.rank += count;
        } else if (body[0] == '_') {
            const Integer f(body.substr(1));
            for (std::size_t k = 0; k < count; ++k) torsion.push_back(f);
        } else {
            throw std::invalid_argument("parse_group: bad token '" + tok + "'");
        }
    }
    if (!any) throw std::invalid_argument("parse_group: empty text");
    g.factors = invariant_factors(std::move(torsion));
    return g;
}

// An element of an AbelianGroup: free coordinates, then one coordinate per
// invariant factor reduced to [0, f).
struct GroupElement {
    std::vector<Integer> free;
    std::vector<Integer> torsion;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    [[nodiscard]] std::string to_string() const {
        std::string out = "(";
        bool first = true;
        for (const auto& c : free) {
            if (!first) out += ",";
            out += c.str();
            first = false;
        }
        for (const auto& c : torsion) {
            if (!first) out += ",";
            out += c.str();
            first = false;
        }
        return out + ")";
    }
};

struct QuotientPresentation {
    AbelianGroup group;
    std::vector<GroupElement> generator_images;  // image of each of the n generators
};

// Z^n modulo the subgroup generated by the given relation rows.
[[nodiscard]] inline QuotientPresentation
quotient_by_relations(std::size_t n, const IntMatrix& relations) {
    for (const auto& r : relations)
        if (r.size() != n) throw std::invalid_argument("quotient_by_relations: width mismatch");

    IntMatrix diag;
    IntMatrix v = int_identity(n);
    if (!relations.empty()) {
        auto s = smith_normal_form(relations);
        diag = std::move(s.d);
        v = std::move(s.v);
    }

    // In coordinates y = x * v the relation lattice is spanned by
    // d_t * e_t; coordinate t therefore lives in Z/d_t (d_t = 0 meaning Z).
    std::vector<Integer> modulus(n, 0);
    const std::size_t diag_len = std::min(diag.size(), n);
    for (std::size_t t = 0; t < diag_len; ++t) modulus[t] = diag[t][t];

    QuotientPresentation q;
    std::vector<std::size_t> free_coords, torsion_coords;
    for (std::size_t t = 0; t < n; ++t) {
        if (modulus[t] == 0) {
            free_coords.push_back(t);
        } else if (modulus[t] >= 2) {
            torsion_coords.push_back(t);
            q.group.factors.push_back(modulus[t]);
        }
        // modulus 1: coordinate collapses entirely.
    }
    q.group.rank = free_coords.size();

    for (std::size_t j = 0; j < n; ++j) {
        GroupElement e;
        for (std::size_t t : free_coords) e.free.push_back(v[j][t]);
        for (std::size_t t : torsion_coords) {
            Integer c = v[j][t] % modulus[t];
            if (c < 0) c += modulus[t];
            e.torsion.push_back(c);
        }
        q.generator_images.push_back(std::move(e));
    }
    return q;
}

}  // namespace gradings

#endif  // GRADINGS_ABELIAN_HPP
