#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

/// Small dense row-major matrix over an exact field.
template<class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Gauss-Jordan elimination in place; returns the pivot columns.
template<class T>
std::vector<std::size_t> rref(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == T(0)) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, row);
        const T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == T(0)) {
                continue;
            }
            const T f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template<class T>
std::size_t rank(Matrix<T> m)
{
    return rref(m).size();
}

/// Unique solution of A x = b, or nullopt when the system is inconsistent
/// or underdetermined.
template<class T>
std::optional<std::vector<T>> solve_unique(const Matrix<T>& a, const std::vector<T>& b)
{
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve_unique: right-hand side has wrong length");
    }
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) {
        return std::nullopt;
    }
    if (pivots.size() != a.cols()) {
        return std::nullopt;
    }
    std::vector<T> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug(i, a.cols());
    }
    return x;
}

}  // namespace k3
