#include "bridgecover/snf.hpp"

#include <stdexcept>
#include <utility>

namespace bridgecover {

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
    IntegerMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

namespace {

// Working copy with row-major storage and cheap row/column swaps.
struct Work {
    int rows, cols;
    std::vector<std::vector<Integer>> a;

    explicit Work(const IntegerMatrix& m) : rows(m.rows()), cols(m.cols()), a(m.rows()) {
        for (int r = 0; r < rows; ++r) {
            a[r].resize(cols);
            for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
        }
    }
    void swap_rows(int i, int j) { std::swap(a[i], a[j]); }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
    }
};

bool smaller_abs(const Integer& x, const Integer& best_abs) { return abs(x) < best_abs; }

// Moves the nonzero entry of least absolute value in the trailing block to (t, t).
bool place_pivot(Work& w, int t) {
    int bi = -1, bj = -1;
    Integer best;
    for (int i = t; i < w.rows; ++i)
        for (int j = t; j < w.cols; ++j) {
            const auto& x = w.a[i][j];
            if (x == 0) continue;
            if (bi < 0 || smaller_abs(x, best)) {
                bi = i;
                bj = j;
                best = abs(x);
            }
        }
    if (bi < 0) return false;
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);
    return true;
}

// Smallest nonzero entry in pivot row/column t (beyond the pivot) moved onto the pivot.
void repivot_cross(Work& w, int t) {
    int bi = t, bj = t;
    Integer best = abs(w.a[t][t]);
    for (int i = t + 1; i < w.rows; ++i)
        if (w.a[i][t] != 0 && smaller_abs(w.a[i][t], best)) {
            bi = i;
            bj = t;
            best = abs(w.a[i][t]);
        }
    for (int j = t + 1; j < w.cols; ++j)
        if (w.a[t][j] != 0 && smaller_abs(w.a[t][j], best)) {
            bi = t;
            bj = j;
            best = abs(w.a[t][j]);
        }
    w.swap_rows(t, bi);
    w.swap_cols(t, bj);
}

template <bool Parallel>
bool clear_cross(Work& w, int t) {
    const Integer pivot = w.a[t][t];
    const auto& prow = w.a[t];
    int dirty = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(| : dirty) if (Parallel)
    for (int i = t + 1; i < w.rows; ++i) {
        auto& row = w.a[i];
        if (row[t] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), row[t].get_mpz_t(), pivot.get_mpz_t());
        for (int j = t; j < w.cols; ++j)
            if (prow[j] != 0) row[j] -= f * prow[j];
        dirty |= row[t] != 0 ? 1 : 0;
    }
    // Column operations only touch row t of the trailing block once column t is clear.
    std::vector<Integer> factors(w.cols);
    for (int j = t + 1; j < w.cols; ++j)
        if (w.a[t][j] != 0) mpz_fdiv_q(factors[j].get_mpz_t(), w.a[t][j].get_mpz_t(), pivot.get_mpz_t());
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
    for (int i = t; i < w.rows; ++i) {
        auto& row = w.a[i];
        if (row[t] == 0) continue;
        for (int j = t + 1; j < w.cols; ++j)
            if (factors[j] != 0) row[j] -= factors[j] * row[t];
    }
    for (int j = t + 1; j < w.cols; ++j) dirty |= w.a[t][j] != 0 ? 1 : 0;
    for (int i = t + 1; i < w.rows; ++i) dirty |= w.a[i][t] != 0 ? 1 : 0;
    return dirty != 0;
}

// Adds a row holding an entry not divisible by the pivot into row t.
bool fix_divisibility(Work& w, int t) {
    const Integer& pivot = w.a[t][t];
    for (int i = t + 1; i < w.rows; ++i)
        for (int j = t + 1; j < w.cols; ++j) {
            if (mpz_divisible_p(w.a[i][j].get_mpz_t(), pivot.get_mpz_t()) != 0) continue;
            for (int c = t; c < w.cols; ++c) w.a[t][c] += w.a[i][c];
            return true;
        }
    return false;
}

template <bool Parallel>
std::vector<Integer> snf_impl(const IntegerMatrix& mat) {
    Work w(mat);
    const int n = std::min(w.rows, w.cols);
    std::vector<Integer> diag;
    diag.reserve(n);
    for (int t = 0; t < n; ++t) {
        if (!place_pivot(w, t)) break;
        while (true) {
            if (clear_cross<Parallel>(w, t)) {
                repivot_cross(w, t);
                continue;
            }
            if (fix_divisibility(w, t)) continue;
            break;
        }
        diag.push_back(abs(w.a[t][t]));
    }
    diag.resize(n, Integer(0));
    return diag;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntegerMatrix& mat) { return snf_impl<false>(mat); }

std::vector<Integer> smith_normal_form_parallel(const IntegerMatrix& mat) { return snf_impl<true>(mat); }

int rank_from_snf(const std::vector<Integer>& diagonal) {
    int r = 0;
    for (const auto& d : diagonal) r += d != 0 ? 1 : 0;
    return r;
}

}  // namespace bridgecover
