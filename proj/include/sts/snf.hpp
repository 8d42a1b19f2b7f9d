#pragma once

// Smith normal form over Euclidean domains (Z, F[H], fields) with optional
// unimodular transforms, plus rank / kernel / image helpers, an exact
// Bareiss determinant and the signature of a symmetric integer matrix.
//
// Pivoting is Markowitz fill-count with euclidean-size tie-breaking; cube
// complexes are sparse and coefficient growth is the thing to contain.

#include "sts/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace sts {

template <class R>
struct SNFResult {
    std::vector<R> diag;  // divisibility chain, unit-normalized
    int rank = 0;         // number of nonzero diagonal entries
    std::optional<SparseMat<R>> left, left_inv, right, right_inv;
    // left * A * right == diag(diag) when transforms were requested
};

template <class R>
class SNFWorker {
    using ops = ring_ops<R>;

  public:
    SNFWorker(const SparseMat<R>& a, bool transforms)
        : n_(a.rows()), m_(a.cols()), rows_(a.rows()), cols_(a.cols()), track_(transforms) {
        for (int i = 0; i < n_; i++)
            for (auto& [j, v] : a.row(i)) {
                rows_[i][j] = v;
                cols_[j].insert(i);
            }
        if (track_) {
            U = SparseMat<R>::identity(n_);
            Ui = SparseMat<R>::identity(n_);
            V = SparseMat<R>::identity(m_);
            Vi = SparseMat<R>::identity(m_);
        }
    }

    SNFResult<R> run() {
        int t = 0;
        while (true) {
            auto piv = pick_pivot(t);
            if (!piv) break;
            auto [pr, pc] = *piv;
            swap_rows(t, pr);
            swap_cols(t, pc);
            clear_cross(t);
            t++;
        }
        fix_chain(t);
        normalize(t);

        SNFResult<R> res;
        res.rank = t;
        int d = std::min(n_, m_);
        res.diag.assign(d, ops::zero());
        for (int i = 0; i < t; i++) res.diag[i] = get(i, i);
        if (track_) {
            res.left = U;
            res.left_inv = Ui;
            res.right = V;
            res.right_inv = Vi;
        }
        return res;
    }

  private:
    int n_, m_;
    std::vector<std::map<int, R>> rows_;
    std::vector<std::set<int>> cols_;
    bool track_;
    SparseMat<R> U, Ui, V, Vi;

    R get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? ops::zero() : it->second;
    }

    void put(int i, int j, const R& v) {
        if (ops::is_zero(v)) {
            rows_[i].erase(j);
            cols_[j].erase(i);
        } else {
            rows_[i][j] = v;
            cols_[j].insert(i);
        }
    }

    // --- elementary operations (mirrored into the transforms) -------------

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (auto& [j, v] : rows_[a]) cols_[j].erase(a);
        for (auto& [j, v] : rows_[b]) cols_[j].erase(b);
        std::swap(rows_[a], rows_[b]);
        for (auto& [j, v] : rows_[a]) cols_[j].insert(a);
        for (auto& [j, v] : rows_[b]) cols_[j].insert(b);
        if (track_) {
            mat_swap_rows(U, a, b);
            mat_swap_cols(Ui, a, b);
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        std::set<int> touched = cols_[a];
        touched.insert(cols_[b].begin(), cols_[b].end());
        for (int i : touched) {
            std::optional<R> va, vb;
            auto ita = rows_[i].find(a);
            if (ita != rows_[i].end()) va = ita->second;
            auto itb = rows_[i].find(b);
            if (itb != rows_[i].end()) vb = itb->second;
            rows_[i].erase(a);
            rows_[i].erase(b);
            if (vb) rows_[i][a] = *vb;
            if (va) rows_[i][b] = *va;
        }
        std::swap(cols_[a], cols_[b]);
        if (track_) {
            mat_swap_cols(V, a, b);
            mat_swap_rows(Vi, a, b);
        }
    }

    // row[dst] += f * row[src]
    void addmul_row(int dst, int src, const R& f) {
        if (ops::is_zero(f)) return;
        std::vector<std::pair<int, R>> srow(rows_[src].begin(), rows_[src].end());
        for (auto& [j, v] : srow) put(dst, j, get(dst, j) + f * v);
        if (track_) {
            mat_addmul_row(U, dst, src, f);
            mat_addmul_col(Ui, src, dst, ops::zero() - f);
        }
    }

    // col[dst] += f * col[src]
    void addmul_col(int dst, int src, const R& f) {
        if (ops::is_zero(f)) return;
        std::vector<int> idx(cols_[src].begin(), cols_[src].end());
        for (int i : idx) put(i, dst, get(i, dst) + f * get(i, src));
        if (track_) {
            mat_addmul_col(V, dst, src, f);
            mat_addmul_row(Vi, src, dst, ops::zero() - f);
        }
    }

    // row[i] *= u with u a unit
    void scale_row(int i, const R& u) {
        std::vector<int> idx;
        for (auto& [j, v] : rows_[i]) idx.push_back(j);
        for (int j : idx) put(i, j, get(i, j) * u);
        if (track_) {
            mat_scale_row(U, i, u);
            mat_scale_col(Ui, i, ops::quot(ops::one(), u));
        }
    }

    static void mat_swap_rows(SparseMat<R>& m, int a, int b) {
        std::vector<std::pair<int, R>> ra(m.row(a).begin(), m.row(a).end());
        std::vector<std::pair<int, R>> rb(m.row(b).begin(), m.row(b).end());
        for (auto& [j, v] : ra) m.set(a, j, ops::zero());
        for (auto& [j, v] : rb) m.set(b, j, ops::zero());
        for (auto& [j, v] : ra) m.set(b, j, v);
        for (auto& [j, v] : rb) m.set(a, j, v);
    }
    static void mat_swap_cols(SparseMat<R>& m, int a, int b) {
        for (int i = 0; i < m.rows(); i++) {
            R va = m.get(i, a), vb = m.get(i, b);
            m.set(i, a, vb);
            m.set(i, b, va);
        }
    }
    static void mat_addmul_row(SparseMat<R>& m, int dst, int src, const R& f) {
        std::vector<std::pair<int, R>> srow(m.row(src).begin(), m.row(src).end());
        for (auto& [j, v] : srow) m.add(dst, j, f * v);
    }
    static void mat_addmul_col(SparseMat<R>& m, int dst, int src, const R& f) {
        for (int i = 0; i < m.rows(); i++) {
            R v = m.get(i, src);
            if (!ops::is_zero(v)) m.add(i, dst, f * v);
        }
    }
    static void mat_scale_row(SparseMat<R>& m, int i, const R& u) {
        std::vector<std::pair<int, R>> srow(m.row(i).begin(), m.row(i).end());
        for (auto& [j, v] : srow) m.set(i, j, v * u);
    }
    static void mat_scale_col(SparseMat<R>& m, int j, const R& u) {
        for (int i = 0; i < m.rows(); i++) {
            R v = m.get(i, j);
            if (!ops::is_zero(v)) m.set(i, j, v * u);
        }
    }

    // --- pivoting and elimination ------------------------------------------

    std::optional<std::pair<int, int>> pick_pivot(int t) const {
        std::optional<std::pair<int, int>> best;
        double best_cost = 0, best_size = 0;
        for (int i = t; i < n_; i++) {
            if (rows_[i].empty()) continue;
            int rn = 0;
            for (auto& [jj, vv] : rows_[i])
                if (jj >= t) rn++;
            for (auto& [j, v] : rows_[i]) {
                if (j < t) continue;
                int cn = 0;
                for (int ii : cols_[j])
                    if (ii >= t) cn++;
                double cost = double(rn - 1) * double(cn - 1);
                double sz = ops::size(v);
                if (!best || cost < best_cost || (cost == best_cost && sz < best_size)) {
                    best = {{i, j}};
                    best_cost = cost;
                    best_size = sz;
                }
            }
        }
        return best;
    }

    // reduce row t and column t to zero outside the pivot (t,t)
    void clear_cross(int t) {
        while (true) {
            // column
            while (true) {
                int i = -1;
                for (int ii : cols_[t])
                    if (ii != t) {
                        i = ii;
                        break;
                    }
                if (i < 0) break;
                R q = ops::round_quot(get(i, t), get(t, t));
                addmul_row(i, t, ops::zero() - q);
                if (!ops::is_zero(get(i, t))) swap_rows(i, t);  // strictly smaller remainder
            }
            // row
            while (true) {
                int j = -1;
                for (auto& [jj, v] : rows_[t])
                    if (jj != t) {
                        j = jj;
                        break;
                    }
                if (j < 0) break;
                R q = ops::round_quot(get(t, j), get(t, t));
                addmul_col(j, t, ops::zero() - q);
                if (!ops::is_zero(get(t, j))) swap_cols(j, t);
            }
            if (col_clear(t) && row_clear(t)) break;
        }
    }

    bool col_clear(int t) const {
        for (int i : cols_[t])
            if (i != t) return false;
        return true;
    }
    bool row_clear(int t) const {
        for (auto& [j, v] : rows_[t])
            if (j != t) return false;
        return true;
    }

    // enforce d_i | d_j for i < j
    void fix_chain(int t) {
        for (int i = 0; i < t; i++) {
            for (int j = i + 1; j < t; j++) {
                if (ops::divides(get(i, i), get(j, j))) continue;
                addmul_row(i, j, ops::one());  // row i gains entry at (i, j)
                while (!ops::is_zero(get(i, j))) {
                    R q = ops::round_quot(get(i, i), get(i, j));
                    addmul_col(i, j, ops::zero() - q);
                    if (ops::is_zero(get(i, i))) {
                        swap_cols(i, j);
                        continue;
                    }
                    if (!ops::is_zero(get(i, j))) {
                        q = ops::round_quot(get(i, j), get(i, i));
                        addmul_col(j, i, ops::zero() - q);
                    }
                }
                R s = get(j, i);  // fill in row j; divisible by the new gcd pivot
                if (!ops::is_zero(s)) addmul_row(j, i, ops::zero() - ops::quot(s, get(i, i)));
                assert(ops::is_zero(get(j, i)) && ops::is_zero(get(i, j)));
            }
        }
    }

    void normalize(int t) {
        for (int i = 0; i < t; i++) {
            R u = ops::normalize_unit(get(i, i));
            if (!(u == ops::one())) scale_row(i, ops::quot(ops::one(), u));
        }
    }
};

template <class R>
SNFResult<R> smith_normal_form(const SparseMat<R>& a, bool with_transforms = false) {
    return SNFWorker<R>(a, with_transforms).run();
}

template <class R>
int rank(const SparseMat<R>& a) {
    return smith_normal_form(a).rank;
}

// Columns form a basis of ker(a); the basis spans a direct summand because
// it comes from a unimodular transform.
template <class R>
SparseMat<R> kernel_basis(const SparseMat<R>& a) {
    auto s = smith_normal_form(a, true);
    int k = a.cols() - s.rank;
    SparseMat<R> ker(a.cols(), k);
    for (int j = 0; j < k; j++)
        for (int i = 0; i < a.cols(); i++) {
            R v = s.right->get(i, s.rank + j);
            if (!ring_ops<R>::is_zero(v)) ker.set(i, j, v);
        }
    return ker;
}

template <class R>
SparseMat<R> image_basis(const SparseMat<R>& a) {
    auto s = smith_normal_form(a, true);
    SparseMat<R> im(a.rows(), s.rank);
    for (int j = 0; j < s.rank; j++)
        for (int i = 0; i < a.rows(); i++) {
            R v = s.left_inv->get(i, j) * s.diag[j];
            if (!ring_ops<R>::is_zero(v)) im.set(i, j, v);
        }
    return im;
}

// --- dense exact helpers -----------------------------------------------------

// Bareiss fraction-free determinant.
Int det_bareiss(std::vector<std::vector<Int>> m);

// Signature of a symmetric matrix with exact rational pivoting.
int symmetric_signature(const std::vector<std::vector<Rat>>& m);

}  // namespace sts
