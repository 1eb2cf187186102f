#include "syz/matrix.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace syz {

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.field() != field_) throw std::invalid_argument("mixed field tags");
    data_[r * cols_ + c] = v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    if (field_ != o.field_) throw std::invalid_argument("mixed field tags");
    ExactMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::identity(const Field& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

RowReduceResult row_reduce(const ExactMatrix& m) {
    RowReduceResult res{m, 0, {}, {}};
    ExactMatrix& a = res.echelon;
    const Field& f = m.field();
    std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // first nonzero in column order
        std::size_t pr = row;
        while (pr < nr && a.at(pr, col).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t c = 0; c < nc; ++c)
                std::swap(a.at(pr, c), a.at(row, c));
        Scalar inv = a.at(row, col).inv();
        for (std::size_t c = col; c < nc; ++c)
            a.at(row, c) = a.at(row, c) * inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (std::size_t c = col; c < nc; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    // kernel basis from the free columns
    std::vector<bool> is_pivot(nc, false);
    for (auto c : res.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(nc, Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < res.pivot_cols.size(); ++i)
            v[res.pivot_cols[i]] = -a.at(i, c);
        res.kernel_basis.push_back(std::move(v));
    }
    return res;
}

std::size_t rank(const ExactMatrix& m) {
    // forward elimination only
    ExactMatrix a = m;
    std::size_t nr = m.rows(), nc = m.cols(), row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pr = row;
        while (pr < nr && a.at(pr, col).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t c = col; c < nc; ++c)
                std::swap(a.at(pr, c), a.at(row, c));
        Scalar inv = a.at(row, col).inv();
        for (std::size_t r = row + 1; r < nr; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col) * inv;
            for (std::size_t c = col; c < nc; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
        }
        ++row;
    }
    return row;
}

bool solve(const ExactMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs size mismatch");
    const Field& f = m.field();
    ExactMatrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto rr = row_reduce(aug);
    for (auto c : rr.pivot_cols)
        if (c == m.cols()) return false; // inconsistent
    x.assign(m.cols(), Scalar::zero(f));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.echelon.at(i, m.cols());
    return true;
}

// Left-looking sparse elimination over GF(p); rows are processed in order
// of increasing fill to keep pivot rows short.
std::size_t sparse_rank_gfp(std::vector<SparseRowGF> rows, std::size_t ncols, std::uint32_t p) {
    std::vector<std::int32_t> pivot_of_col(ncols, -1);
    std::vector<SparseRowGF> pivots;
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows[a].size() < rows[b].size();
    });

    std::vector<std::uint64_t> work(ncols, 0);
    std::vector<std::int32_t> touched;
    touched.reserve(1024);
    std::size_t rk = 0;

    auto inv_mod = [&](std::uint64_t a) -> std::uint64_t {
        std::int64_t t = 0, newt = 1, r = p, newr = (std::int64_t)a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += p;
        return (std::uint64_t)t;
    };

    // Pivot rows are monic with their pivot at their smallest column, so an
    // axpy at column c only touches columns >= c; sweeping columns in
    // increasing order with a min-heap therefore never revisits a column.
    std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> heap;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const SparseRowGF& src = rows[order[oi]];
        if (src.empty()) continue;
        touched.clear();
        for (auto& [c, v] : src) {
            work[c] = (work[c] + v) % p;
            touched.push_back(c);
            heap.push(c);
        }
        std::int32_t pivot_col = -1;
        while (!heap.empty()) {
            std::int32_t c = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top() == c) heap.pop();
            std::uint64_t v = work[c] % p;
            work[c] = v;
            if (v == 0) continue;
            std::int32_t pr = pivot_of_col[c];
            if (pr < 0) {
                if (pivot_col < 0) pivot_col = c;
                continue; // tail entry, stays in work until gather
            }
            std::uint64_t factor = p - v;
            const SparseRowGF& pv = pivots[pr];
            for (auto& [pc, pval] : pv) {
                if (work[pc] == 0) {
                    touched.push_back(pc);
                    if (pc != c) heap.push(pc);
                }
                work[pc] = (work[pc] + factor * pval) % p;
            }
            work[c] = 0;
        }
        // gather
        SparseRowGF out;
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (auto c : touched) {
            std::uint64_t v = work[c] % p;
            if (v != 0) out.emplace_back(c, (std::uint32_t)v);
            work[c] = 0;
        }
        if (out.empty()) continue;
        pivot_col = out.front().first;
        // normalize to monic on the pivot column
        std::uint64_t inv = inv_mod(out.front().second);
        for (auto& [c, v] : out) v = (std::uint32_t)((std::uint64_t)v * inv % p);
        pivot_of_col[pivot_col] = (std::int32_t)pivots.size();
        pivots.push_back(std::move(out));
        ++rk;
    }
    return rk;
}

std::size_t sparse_rank_q(std::vector<SparseRowQ> rows, std::size_t ncols) {
    std::vector<std::int32_t> pivot_of_col(ncols, -1);
    std::vector<SparseRowQ> pivots;
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows[a].size() < rows[b].size();
    });

    std::size_t rk = 0;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        // dense-in-map workspace
        std::vector<std::pair<std::int32_t, mpq_class>> cur(rows[order[oi]]);
        std::sort(cur.begin(), cur.end(), [](auto& a, auto& b) { return a.first < b.first; });
        bool progress = true;
        while (progress && !cur.empty()) {
            progress = false;
            std::int32_t c = cur.front().first;
            std::int32_t pr = pivot_of_col[c];
            if (pr >= 0) {
                // cur -= cur[0] * pivot  (pivot monic at c)
                mpq_class factor = cur.front().second;
                SparseRowQ merged;
                merged.reserve(cur.size() + pivots[pr].size());
                std::size_t i = 0, j = 0;
                const SparseRowQ& pv = pivots[pr];
                while (i < cur.size() || j < pv.size()) {
                    if (j == pv.size() || (i < cur.size() && cur[i].first < pv[j].first)) {
                        merged.push_back(cur[i++]);
                    } else if (i == cur.size() || pv[j].first < cur[i].first) {
                        merged.emplace_back(pv[j].first, -factor * pv[j].second);
                        ++j;
                    } else {
                        mpq_class v = cur[i].second - factor * pv[j].second;
                        if (v != 0) merged.emplace_back(cur[i].first, v);
                        ++i; ++j;
                    }
                }
                cur = std::move(merged);
                progress = true;
            }
        }
        if (cur.empty()) continue;
        mpq_class inv = 1 / cur.front().second;
        for (auto& [c, v] : cur) v *= inv;
        pivot_of_col[cur.front().first] = (std::int32_t)pivots.size();
        pivots.push_back(std::move(cur));
        ++rk;
    }
    return rk;
}

std::size_t sparse_rank(const Field& f, const std::vector<SparseRow>& rows, std::size_t ncols) {
    if (f.is_q()) {
        std::vector<SparseRowQ> qr(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (auto& [c, v] : rows[i])
                if (!v.is_zero()) qr[i].emplace_back(c, v.rational());
        return sparse_rank_q(std::move(qr), ncols);
    }
    std::vector<SparseRowGF> gr(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i])
            if (!v.is_zero()) gr[i].emplace_back(c, v.residue());
    return sparse_rank_gfp(std::move(gr), ncols, f.p);
}

} // namespace syz
