#pragma once

#include "brauer/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace brauer {

template <class T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const ExactMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const
    {
        ExactMatrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        ExactMatrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    ExactMatrix scaled(const T& s) const
    {
        ExactMatrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    bool is_zero_matrix() const
    {
        for (auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    template <class F>
    auto map(F f) const -> ExactMatrix<decltype(f(std::declval<T>()))>
    {
        ExactMatrix<decltype(f(std::declval<T>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Fraction-free elimination. Every division is exact because the entries stay
// minors of the input; column skipping keeps that true for rank-deficient input.
template <class T>
struct BareissResult {
    std::size_t rank = 0;
    int sign = 1;
    T last_pivot = T(1);
};

template <class T>
BareissResult<T> bareiss(ExactMatrix<T> m)
{
    BareissResult<T> res;
    T prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            res.sign = -res.sign;
        }
        const T piv = m(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            const T lead = m(i, col);
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                T v = piv * m(i, j);
                if (!is_zero(lead) && !is_zero(m(row, j))) v = v - lead * m(row, j);
                m(i, j) = is_zero(v) ? v : div_exact(v, prev);
            }
            m(i, col) = T(0);
        }
        prev = piv;
        res.last_pivot = piv;
        ++row;
    }
    res.rank = row;
    return res;
}

template <class T>
std::size_t matrix_rank(const ExactMatrix<T>& m) { return bareiss(m).rank; }

template <class T>
T matrix_det(const ExactMatrix<T>& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return T(1);
    auto res = bareiss(m);
    if (res.rank < m.rows()) return T(0);
    return res.sign > 0 ? res.last_pivot : T(-res.last_pivot);
}

// Over Q(d): scale each row by the lcm of its denominators, then eliminate
// over Q[d].
ExactMatrix<PolyQ> clear_denominators(const ExactMatrix<RatFunc>& m, std::vector<PolyQ>* row_scale = nullptr);
std::size_t matrix_rank(const ExactMatrix<RatFunc>& m);
RatFunc matrix_det(const ExactMatrix<RatFunc>& m);

// Sparse vectors keyed by column, sorted, no zeros.
template <class T>
using SparseVec = std::vector<std::pair<std::uint64_t, T>>;

template <class T>
T sparse_get(const SparseVec<T>& v, std::uint64_t col)
{
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::uint64_t c) { return e.first < c; });
    if (it != v.end() && it->first == col) return it->second;
    return T(0);
}

// a*x + b*y
template <class T>
SparseVec<T> sparse_axpby(const T& a, const SparseVec<T>& x, const T& b, const SparseVec<T>& y)
{
    SparseVec<T> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            T v = a * x[i].second;
            if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            T v = b * y[j].second;
            if (!is_zero(v)) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            T v = a * x[i].second + b * y[j].second;
            if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

// Incremental row echelon form for rank certificates of large sparse systems.
// Over Z rows are eliminated fraction-free and kept primitive; over fields
// pivots are normalized to one.
template <class T>
class Echelon {
public:
    // Returns true if the row was independent of the rows already added.
    bool add(SparseVec<T> v)
    {
        reduce(v);
        if (v.empty()) return false;
        if constexpr (is_field<T>::value) {
            T inv = T(1) / v.front().second;
            for (auto& e : v) e.second = e.second * inv;
        } else {
            make_primitive(v);
        }
        std::uint64_t col = v.front().first;
        pivots_.emplace(col, std::move(v));
        return true;
    }
    bool in_span(SparseVec<T> v) const
    {
        reduce(v);
        return v.empty();
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::uint64_t, SparseVec<T>> pivots_;

    void reduce(SparseVec<T>& v) const
    {
        // A pivot row has no entry left of its pivot, so entries before k are
        // never disturbed and one left-to-right sweep suffices.
        std::size_t k = 0;
        while (k < v.size()) {
            auto it = pivots_.find(v[k].first);
            if (it == pivots_.end()) {
                ++k;
                continue;
            }
            const SparseVec<T>& p = it->second;
            T c = v[k].second;
            if constexpr (is_field<T>::value) {
                v = sparse_axpby(T(1), v, T(-c), p);
            } else {
                T pc = p.front().second;
                Int g = gcd(c, pc);
                T a = pc / g, b = c / g;
                v = sparse_axpby(a, v, T(-b), p);
                make_primitive(v);
            }
        }
    }

    static void make_primitive(SparseVec<T>& v)
    {
        if constexpr (!is_field<T>::value) {
            if (v.empty()) return;
            Int g = 0;
            for (auto& e : v) {
                g = gcd(g, Int(e.second));
                if (g == 1) break;
            }
            if (v.front().second < 0) g = -g;
            if (g != 1)
                for (auto& e : v) e.second = div_exact(e.second, g);
        }
    }
};

}  // namespace brauer
