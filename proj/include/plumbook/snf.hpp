#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace plumbook {

/// Finitely generated abelian group Z^free_rank ⊕ ⊕ Z/t for t in torsion.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    [[nodiscard]] bool trivial() const { return free_rank == 0 && torsion.empty(); }

    [[nodiscard]] std::string str() const {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < free_rank; ++i) {
            os << (first ? "" : " + ") << "Z";
            first = false;
        }
        for (const auto& t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        return os.str();
    }
};

struct SnfResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;

    /// Diagonal entries, including units and zeros, of length min(rows, cols).
    [[nodiscard]] std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }

    /// Cokernel of the matrix viewed as a map Z^cols → Z^rows.
    [[nodiscard]] AbelianGroup cokernel() const { return {free_rank, torsion}; }
};

namespace detail {

inline bool divides(const Integer& a, const Integer& b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

}  // namespace detail

/// Smith normal form with transforms: U·M·V = D, U and V unimodular.
inline SnfResult smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    IntMatrix D = M;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        D.add_row(dst, src, k);
        U.add_row(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        D.add_col(dst, src, k);
        V.add_col(dst, src, k);
    };

    const std::size_t r = std::min(m, n);
    for (std::size_t t = 0; t < r; ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pr == m || abs(D(i, j)) < abs(D(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) break;
            D.swap_rows(t, pr);
            U.swap_rows(t, pr);
            D.swap_cols(t, pc);
            V.swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                row_op(i, t, -(D(i, t) / D(t, t)));
                if (D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                col_op(j, t, -(D(t, j) / D(t, t)));
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Enforce divisibility against the rest of the block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!detail::divides(D(t, t), D(i, j))) {
                        row_op(t, i, 1);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }

    SnfResult res;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (D(i, i) == 0) continue;
        ++nonzero;
        if (D(i, i) > 1) res.torsion.push_back(D(i, i));
    }
    res.free_rank = m - nonzero;
    res.D = std::move(D);
    res.U = std::move(U);
    res.V = std::move(V);
    return res;
}

/// Cokernel of M: Z^cols → Z^rows.
inline AbelianGroup cokernel(const IntMatrix& M) { return smith_normal_form(M).cokernel(); }

}  // namespace plumbook
