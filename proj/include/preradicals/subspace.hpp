#pragma once

#include "preradicals/limits.hpp"
#include "preradicals/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace preradicals {

/// A subspace of F_p^n held by its unique reduced row-echelon basis,
/// one basis vector per row. Two subspaces are equal iff their bases
/// are bit-identical, which turns subobject classes into decidable
/// equality.
struct Subspace {
    int ambient = 0;
    Matrix basis; // RREF, basis.cols == ambient, basis.rows == dim

    Subspace() = default;

    /// Canonicalize the row space of `vectors` (need not be in RREF).
    static Subspace span(int ambient_dim, Matrix vectors) {
        if (vectors.cols != ambient_dim)
            throw shape_error("span: vector length differs from ambient dimension");
        rref_in_place(vectors);
        Subspace s;
        s.ambient = ambient_dim;
        s.basis = std::move(vectors);
        return s;
    }

    static Subspace zero(int ambient_dim, int p) {
        Subspace s;
        s.ambient = ambient_dim;
        s.basis = Matrix(0, ambient_dim, p);
        return s;
    }

    static Subspace full(int ambient_dim, int p) {
        Subspace s;
        s.ambient = ambient_dim;
        s.basis = Matrix::identity(ambient_dim, p);
        return s;
    }

    int dim() const { return basis.rows; }
    int p() const { return basis.p; }
    bool is_zero() const { return basis.rows == 0; }
    bool is_full() const { return basis.rows == ambient; }

    bool operator==(const Subspace&) const = default;
};

/// Nullspace of m as a canonical subspace of F_p^cols.
inline Subspace kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<int> free_cols;
    {
        size_t k = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (k < pivots.size() && pivots[k] == c)
                ++k;
            else
                free_cols.push_back(c);
        }
    }
    Field f(m.p);
    Matrix vectors(static_cast<int>(free_cols.size()), m.cols, m.p);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        vectors.at(static_cast<int>(i), free_cols[i]) = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            vectors.at(static_cast<int>(i), pivots[k]) = f.neg(r.at(static_cast<int>(k), free_cols[i]));
    }
    return Subspace::span(m.cols, std::move(vectors));
}

/// Column space of m as a canonical subspace of F_p^rows.
inline Subspace image_basis(const Matrix& m) {
    return Subspace::span(m.rows, transpose(m));
}

/// Does `a` contain the vector `v`? (v reduces to zero against a's basis)
inline bool subspace_contains_vector(const Subspace& a, std::vector<int> v) {
    if (static_cast<int>(v.size()) != a.ambient)
        throw shape_error("contains: vector length differs from ambient dimension");
    Field f(a.basis.p);
    for (int row = 0; row < a.basis.rows; ++row) {
        int lead = -1;
        for (int c = 0; c < a.ambient; ++c)
            if (a.basis.at(row, c)) {
                lead = c;
                break;
            }
        if (lead >= 0 && v[lead]) {
            int factor = v[lead];
            for (int c = 0; c < a.ambient; ++c)
                v[c] = f.sub(v[c], f.mul(factor, a.basis.at(row, c)));
        }
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// a >= b as subobjects.
inline bool subspace_contains(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw shape_error("contains: ambient dimension mismatch");
    for (int i = 0; i < b.basis.rows; ++i) {
        std::vector<int> v(b.basis.e.begin() + static_cast<size_t>(i) * b.ambient,
                           b.basis.e.begin() + static_cast<size_t>(i + 1) * b.ambient);
        if (!subspace_contains_vector(a, std::move(v)))
            return false;
    }
    return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw shape_error("sum: ambient dimension mismatch");
    Matrix stacked(a.basis.rows + b.basis.rows, a.ambient, a.basis.p);
    std::copy(a.basis.e.begin(), a.basis.e.end(), stacked.e.begin());
    std::copy(b.basis.e.begin(), b.basis.e.end(), stacked.e.begin() + a.basis.e.size());
    return Subspace::span(a.ambient, std::move(stacked));
}

/// Intersection via the kernel of the stacked bases: solve
/// basisA^T u = basisB^T v and read off the common vectors.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw shape_error("intersect: ambient dimension mismatch");
    const int ka = a.dim(), kb = b.dim();
    Field f(a.basis.p);
    Matrix sys(a.ambient, ka + kb, a.basis.p);
    for (int i = 0; i < a.ambient; ++i) {
        for (int j = 0; j < ka; ++j)
            sys.at(i, j) = a.basis.at(j, i);
        for (int j = 0; j < kb; ++j)
            sys.at(i, ka + j) = f.neg(b.basis.at(j, i));
    }
    Subspace coeffs = kernel_basis(sys);
    Matrix vectors(coeffs.dim(), a.ambient, a.basis.p);
    for (int r = 0; r < coeffs.dim(); ++r)
        for (int c = 0; c < a.ambient; ++c) {
            int acc = 0;
            for (int j = 0; j < ka; ++j)
                acc = f.add(acc, f.mul(coeffs.basis.at(r, j), a.basis.at(j, c)));
            vectors.at(r, c) = acc;
        }
    return Subspace::span(a.ambient, std::move(vectors));
}

/// Annihilator in the dual space (coordinates in the dual basis):
/// phi is in ann(a) iff phi(v) = 0 for every v in a.
inline Subspace annihilator(const Subspace& a) {
    return kernel_basis(a.basis);
}

/// Image of a subspace under a linear map given by `m` (columns act on
/// coordinates of the source ambient space).
inline Subspace push_subspace(const Matrix& m, const Subspace& a) {
    if (m.cols != a.ambient)
        throw shape_error("push: map source dimension differs from ambient");
    return image_basis(mul(m, transpose(a.basis)));
}

/// Preimage of a subspace under the linear map `m`.
inline Subspace pull_subspace(const Matrix& m, const Subspace& b) {
    if (m.rows != b.ambient)
        throw shape_error("pull: map target dimension differs from ambient");
    Subspace ann = annihilator(b);
    if (ann.dim() == 0)
        return Subspace::full(m.cols, m.p);
    return kernel_basis(mul(ann.basis, m));
}

/// Solve basis^T x = v, assuming v lies in the subspace.
inline std::vector<int> coordinates_in(const Subspace& a, const std::vector<int>& v) {
    Field f(a.basis.p);
    std::vector<int> rest(v);
    std::vector<int> coords(a.dim(), 0);
    for (int row = 0; row < a.basis.rows; ++row) {
        int lead = -1;
        for (int c = 0; c < a.ambient; ++c)
            if (a.basis.at(row, c)) {
                lead = c;
                break;
            }
        if (lead < 0)
            continue;
        coords[row] = rest[lead];
        if (rest[lead]) {
            int factor = rest[lead];
            for (int c = 0; c < a.ambient; ++c)
                rest[c] = f.sub(rest[c], f.mul(factor, a.basis.at(row, c)));
        }
    }
    for (int x : rest)
        if (x)
            throw shape_error("coordinates_in: vector not in subspace");
    return coords;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

/// Gaussian binomial (n over k)_p: the number of k-dim subspaces of F_p^n.
inline std::int64_t gaussian_binomial(int n, int k, int p) {
    if (k < 0 || k > n)
        return 0;
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(p, n - i) - 1;
        den *= ipow(p, i + 1) - 1;
    }
    return num / den;
}

/// All distinct canonical subspaces of F_p^n, each exactly once,
/// sorted by (dim, basis bytes). Enumerates RREF matrices directly:
/// choose pivot columns, then fill the free positions.
inline std::vector<Subspace> enumerate_subspaces(int ambient_dim, int p, const Limits& limits = {}) {
    Field f(p);
    if (ambient_dim > limits.max_enum_ambient_dim || p > limits.max_enum_prime)
        throw capacity_error("subspace enumeration bound exceeded: dim " + std::to_string(ambient_dim) +
                             " over F_" + std::to_string(p));
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(ambient_dim, p));
    for (int k = 1; k <= ambient_dim; ++k) {
        // iterate over pivot column combinations
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i)
            piv[i] = i;
        while (true) {
            // free positions: (row i, col j) with j > piv[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < ambient_dim; ++j)
                    if (std::find(piv.begin(), piv.end(), j) == piv.end())
                        free_pos.emplace_back(i, j);
            std::vector<int> fill(free_pos.size(), 0);
            while (true) {
                Matrix b(k, ambient_dim, p);
                for (int i = 0; i < k; ++i)
                    b.at(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    b.at(free_pos[t].first, free_pos[t].second) = fill[t];
                Subspace s;
                s.ambient = ambient_dim;
                s.basis = std::move(b);
                out.push_back(std::move(s));
                // next fill
                size_t t = 0;
                while (t < fill.size() && fill[t] == p - 1)
                    fill[t++] = 0;
                if (t == fill.size())
                    break;
                ++fill[t];
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[i] == ambient_dim - k + i)
                --i;
            if (i < 0)
                break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j)
                piv[j] = piv[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const Subspace& x, const Subspace& y) {
        if (x.dim() != y.dim())
            return x.dim() < y.dim();
        return x.basis.e < y.basis.e;
    });
    return out;
}

} // namespace preradicals
