#pragma once
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ro2ss/local2.hpp"

namespace ro2ss {

/// Dense matrix over the 2-local integers.  Map matrices are integer valued;
/// Smith transforms may carry odd denominators (odd numbers are units).
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (auto& r : rows) {
            assert(r.size() == cols_);
            for (auto x : r) a_.emplace_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Local2(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Local2& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }
    const Local2& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<Local2> col(std::size_t c) const {
        std::vector<Local2> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    void set_col(std::size_t c, const std::vector<Local2>& v) {
        assert(v.size() == rows_);
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
    }
    void append_col(const std::vector<Local2>& v) {
        assert(rows_ == v.size() || cols_ == 0);
        if (cols_ == 0 && rows_ == 0) rows_ = v.size();
        assert(v.size() == rows_);
        std::vector<Local2> b((cols_ + 1) * rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) b[r * (cols_ + 1) + c] = at(r, c);
            b[r * (cols_ + 1) + cols_] = v[r];
        }
        ++cols_;
        a_ = std::move(b);
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols_ == y.rows_);
        Mat z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return z;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    void scale_row(std::size_t i, Local2 u) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) *= u;
    }
    void scale_col(std::size_t j, Local2 u) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, j) *= u;
    }
    /// row_i -= f * row_s
    void row_axpy(std::size_t i, std::size_t s, Local2 f) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= f * at(s, c);
    }
    /// col_j -= f * col_s
    void col_axpy(std::size_t j, std::size_t s, Local2 f) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, j) -= f * at(r, s);
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Local2> a_;
};

} // namespace ro2ss
