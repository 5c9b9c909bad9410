/**************************************************************************
 * linalg.hpp
 *
 * Copyright 2026 The crcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace crcodes {

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix() = default;

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw Error(Errc::dimension_mismatch, "matrix entry count does not match its shape");
        for (Element e : data_)
            if (!field_->contains(e))
                throw Error(Errc::invalid_argument, "entry " + std::to_string(e) + " outside GF(" +
                                                        std::to_string(field_->q()) + ")");
    }

    /// Rows of element codes, e.g. {{1, 1, 1, 0}, {0, 1, 2, 1}}.
    static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<unsigned>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<Element> entries;
        entries.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
            for (unsigned v : row) entries.push_back(static_cast<Element>(v));
        }
        return Matrix(std::move(field), r, c, std::move(entries));
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Element>& entries() const { return data_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (Element e : data_)
            if (e != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error(Errc::dimension_mismatch, "matrix product shapes");
        const Field& f = *field_;
        Matrix out(field_, rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < o.cols_; ++c) {
                Element acc = 0;
                for (std::size_t i = 0; i < cols_; ++i) acc = f.add(acc, f.mul((*this)(r, i), o(i, c)));
                out(r, c) = acc;
            }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
               (field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_));
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Element> data_;
};

inline Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
    Element acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

struct RowEchelon {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; columns scanned left to right, rows top to bottom.
inline RowEchelon rref(const Matrix& input) {
    Matrix m = input;
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const Element scale = f.inv(m(row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Element factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), row, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of the right null space {x : M x^T = 0}, one vector per row.
inline Matrix kernel(const Matrix& m) {
    const RowEchelon e = rref(m);
    const Field& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    const std::size_t dim = m.cols() - e.rank;
    Matrix basis(m.field(), dim, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (std::size_t i = 0; i < e.rank; ++i) basis(out, e.pivots[i]) = f.neg(e.reduced(i, free));
        ++out;
    }
    return basis;
}

/// G * G^T. Zero exactly when the rows span a self-orthogonal code.
inline Matrix gram(const Matrix& g) { return g * g.transpose(); }

} // namespace crcodes
