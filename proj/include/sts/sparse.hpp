#pragma once

// Sparse matrices over an exact ring. Row-major maps; no stored zeros.

#include "sts/ring.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace sts {

template <class R>
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : nrows_(rows), ncols_(cols), rows_(rows) {}

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    const std::map<int, R>& row(int i) const { return rows_[i]; }

    R get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? ring_ops<R>::zero() : it->second;
    }

    void set(int i, int j, const R& v) {
        if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_) throw std::out_of_range("SparseMat::set");
        if (ring_ops<R>::is_zero(v))
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }

    void add(int i, int j, const R& v) {
        if (ring_ops<R>::is_zero(v)) return;
        auto [it, ins] = rows_[i].try_emplace(j, v);
        if (!ins) {
            it->second = it->second + v;
            if (ring_ops<R>::is_zero(it->second)) rows_[i].erase(it);
        }
    }

    size_t nnz() const {
        size_t n = 0;
        for (auto& r : rows_) n += r.size();
        return n;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("SparseMat: dim mismatch");
        SparseMat r(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); i++)
            for (auto& [k, va] : a.rows_[i])
                for (auto& [j, vb] : b.rows_[k]) r.add(i, j, va * vb);
        return r;
    }

    std::vector<R> apply(const std::vector<R>& x) const {
        std::vector<R> y(nrows_, ring_ops<R>::zero());
        for (int i = 0; i < nrows_; i++)
            for (auto& [j, v] : rows_[i]) y[i] = y[i] + v * x[j];
        return y;
    }

    SparseMat transpose() const {
        SparseMat t(ncols_, nrows_);
        for (int i = 0; i < nrows_; i++)
            for (auto& [j, v] : rows_[i]) t.set(j, i, v);
        return t;
    }

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; i++) m.set(i, i, ring_ops<R>::one());
        return m;
    }

    bool operator==(const SparseMat& o) const {
        return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
    }

  private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<std::map<int, R>> rows_;
};

}  // namespace sts
