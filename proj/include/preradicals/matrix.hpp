#pragma once

#include "preradicals/field.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace preradicals {

/// Dense matrix over F_p, row-major, entries always reduced mod p.
/// Zero-row or zero-column shapes are legal and show up constantly as
/// components of morphisms between representations of different support.
struct Matrix {
    int rows = 0;
    int cols = 0;
    int p = 2;
    std::vector<int> e;

    Matrix() = default;
    Matrix(int r, int c, int prime)
        : rows(r), cols(c), p(prime), e(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    static Matrix from_rows(int prime, std::initializer_list<std::initializer_list<int>> rws) {
        Matrix m(static_cast<int>(rws.size()), rws.size() ? static_cast<int>(rws.begin()->size()) : 0, prime);
        Field f(prime);
        int i = 0;
        for (const auto& row : rws) {
            int j = 0;
            for (int x : row)
                m.at(i, j++) = f.reduce(x);
            ++i;
        }
        return m;
    }

    static Matrix identity(int n, int prime) {
        Matrix m(n, n, prime);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (int x : e)
            if (x)
                return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows, m.p);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows || a.p != b.p)
        throw shape_error("matrix product shape mismatch");
    Field f(a.p);
    Matrix c(a.rows, b.cols, a.p);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (!aik)
                continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.p != b.p)
        throw shape_error("matrix sum shape mismatch");
    Field f(a.p);
    Matrix c(a.rows, a.cols, a.p);
    for (size_t i = 0; i < a.e.size(); ++i)
        c.e[i] = f.add(a.e[i], b.e[i]);
    return c;
}

inline Matrix scale(int c, const Matrix& m) {
    Field f(m.p);
    Matrix r = m;
    for (int& x : r.e)
        x = f.mul(c, x);
    return r;
}

inline std::vector<int> mul_vec(const Matrix& m, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw shape_error("matrix-vector shape mismatch");
    Field f(m.p);
    std::vector<int> out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
    return out;
}

/// Row-reduce in place to reduced row-echelon form; returns pivot columns.
/// Row space is preserved; zero rows are dropped.
inline std::vector<int> rref_in_place(Matrix& m) {
    Field f(m.p);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        int inv = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j)
            m.at(r, j) = f.mul(inv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !m.at(i, c))
                continue;
            int factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.e.resize(static_cast<size_t>(r) * m.cols);
    m.rows = r;
    return pivots;
}

inline std::pair<Matrix, std::vector<int>> rref(Matrix m) {
    auto pivots = rref_in_place(m);
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) {
    return static_cast<int>(rref(m).second.size());
}

} // namespace preradicals
