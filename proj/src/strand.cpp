#include "syz/strand.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace syz {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Exponent pair_monomial(std::size_t d, int a, int b) {
    Exponent e(d, 0);
    e[(std::size_t)a] += 1;
    e[(std::size_t)b] += 1;
    return e;
}

// Reduction of each degree-2 monomial to quotient coordinates of
// S_2 / span(quadrics): column maps built from the row-reduced quadric
// matrix. Non-pivot monomials map to a unit vector; pivot monomials map to
// minus the non-pivot tail of their echelon row.
struct Degree2Quotient {
    std::size_t dim = 0;                 // dim (S/I)_2
    std::vector<SparseRow> reduce;       // per degree-2 monomial column
    std::map<Exponent, std::size_t> monomial_index;
};

Degree2Quotient build_quotient(const QuadraticSystem& q) {
    const RingPtr& R = q.ring();
    const Field& f = R->field();
    auto mons = monomials_of_degree(R->nvars(), 2);
    Degree2Quotient out;
    for (std::size_t c = 0; c < mons.size(); ++c) out.monomial_index[mons[c]] = c;

    auto rr = row_reduce(coefficient_matrix(R, q.quadrics(), 2));
    std::vector<long> pivot_row(mons.size(), -1);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) pivot_row[rr.pivot_cols[i]] = (long)i;
    std::vector<long> quot_index(mons.size(), -1);
    for (std::size_t c = 0; c < mons.size(); ++c)
        if (pivot_row[c] < 0) quot_index[c] = (long)out.dim++;

    out.reduce.resize(mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c) {
        if (pivot_row[c] < 0) {
            out.reduce[c].push_back({(std::int32_t)quot_index[c], Scalar::one(f)});
        } else {
            std::size_t i = (std::size_t)pivot_row[c];
            for (std::size_t c2 = 0; c2 < mons.size(); ++c2) {
                if (quot_index[c2] < 0) continue;
                const Scalar& v = rr.echelon.at(i, c2);
                if (!v.is_zero()) out.reduce[c].push_back({(std::int32_t)quot_index[c2], -v});
            }
        }
    }
    return out;
}

void add_sparse(SparseRow& row, std::int32_t col, const Scalar& v) {
    row.push_back({col, v});
}

void finalize_sparse(SparseRow& row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second = merged.back().second + v;
        else
            merged.push_back({c, v});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& p) { return p.second.is_zero(); }),
                 merged.end());
    row = std::move(merged);
}

} // namespace

QuadraticSystem::QuadraticSystem(RingPtr ring, const std::vector<MultiPoly>& quadrics)
    : ring_(std::move(ring)) {
    for (const auto& p : quadrics) {
        if (p.is_zero()) continue;
        if (!p.is_coarse_homogeneous() || p.coarse_degree() != 2)
            throw std::invalid_argument("quadratic system needs homogeneous degree-2 input");
    }
    std::vector<MultiPoly> nonzero;
    for (const auto& p : quadrics)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) return;
    auto rr = row_reduce(coefficient_matrix(ring_, nonzero, 2));
    auto mons = monomials_of_degree(ring_->nvars(), 2);
    const Field& f = ring_->field();
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < mons.size(); ++c) {
            const Scalar& v = rr.echelon.at(i, c);
            if (!v.is_zero()) terms.push_back({mons[c], v});
        }
        quadrics_.push_back(MultiPoly(ring_, std::move(terms)));
        (void)f;
    }
}

QuadraticSystem QuadraticSystem::from_ideal(const PolyIdeal& ideal) {
    std::vector<MultiPoly> qs;
    for (const auto& g : ideal.generators())
        if (!g.is_zero() && g.is_coarse_homogeneous() && g.coarse_degree() == 2)
            qs.push_back(g);
    return QuadraticSystem(ideal.ring(), qs);
}

std::vector<std::size_t> koszul_strand_betti(const QuadraticSystem& q, std::size_t i_max,
                                             std::size_t max_cells) {
    const RingPtr& R = q.ring();
    const Field& f = R->field();
    const std::size_t d = R->nvars();
    auto quot = build_quotient(q);

    std::vector<std::size_t> betti;
    for (std::size_t m = 1; m <= i_max; ++m) {
        if (m > d) {
            betti.push_back(0);
            break;
        }
        if (binom(d, m) > max_cells / d)
            throw std::length_error("strand size guard exceeded");
        auto mid_sets = subsets((int)d, (int)m);
        auto low_sets = subsets((int)d, (int)m - 1);
        auto top_sets = subsets((int)d, (int)m + 1);
        std::map<std::vector<int>, std::size_t> mid_index, low_index;
        for (std::size_t i = 0; i < mid_sets.size(); ++i) mid_index[mid_sets[i]] = i;
        for (std::size_t i = 0; i < low_sets.size(); ++i) low_index[low_sets[i]] = i;

        const std::size_t mid_dim = mid_sets.size() * d;
        const std::size_t low_dim = low_sets.size() * quot.dim;

        // d1: e_S (x) x_v  ->  sum_k (-1)^k e_{S \ s_k} (x) [x_{s_k} x_v]
        std::vector<SparseRow> d1;
        d1.reserve(mid_dim);
        for (const auto& S : mid_sets)
            for (std::size_t v = 0; v < d; ++v) {
                SparseRow row;
                for (std::size_t k = 0; k < S.size(); ++k) {
                    std::vector<int> rest = S;
                    rest.erase(rest.begin() + (long)k);
                    std::size_t block = low_index[rest] * quot.dim;
                    std::size_t mono = quot.monomial_index[pair_monomial(d, S[k], (int)v)];
                    for (const auto& [c, val] : quot.reduce[mono])
                        add_sparse(row, (std::int32_t)(block + (std::size_t)c),
                                   (k % 2 == 0) ? val : -val);
                }
                finalize_sparse(row);
                d1.push_back(std::move(row));
            }
        std::size_t rank1 = sparse_rank(f, d1, low_dim);
        d1.clear();
        d1.shrink_to_fit();

        // d2: e_T -> sum_j (-1)^j e_{T \ t_j} (x) x_{t_j}
        std::vector<SparseRow> d2;
        d2.reserve(top_sets.size());
        for (const auto& T : top_sets) {
            SparseRow row;
            for (std::size_t j = 0; j < T.size(); ++j) {
                std::vector<int> rest = T;
                rest.erase(rest.begin() + (long)j);
                Scalar s = (j % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                add_sparse(row, (std::int32_t)(mid_index[rest] * d + (std::size_t)T[j]), s);
            }
            finalize_sparse(row);
            d2.push_back(std::move(row));
        }
        std::size_t rank2 = sparse_rank(f, d2, mid_dim);

        std::size_t b = mid_dim - rank1 - rank2;
        betti.push_back(b);
        if (b == 0) break;
    }
    return betti;
}

std::vector<LinearSyzygy> linear_first_syzygies(const QuadraticSystem& q) {
    const RingPtr& R = q.ring();
    const std::size_t d = R->nvars();
    const std::size_t r = q.count();
    std::vector<MultiPoly> cubics;
    cubics.reserve(r * d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t v = 0; v < d; ++v)
            cubics.push_back(q.quadrics()[i] * MultiPoly::variable(R, v));
    std::vector<LinearSyzygy> out;
    if (cubics.empty()) return out;
    auto rr = row_reduce(coefficient_matrix(R, cubics, 3).transpose());
    for (const auto& vec : rr.kernel_basis) {
        ExactMatrix m(R->field(), r, d);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t v = 0; v < d; ++v) m.set(i, v, vec[i * d + v]);
        out.push_back(LinearSyzygy(R, std::move(m)));
    }
    return out;
}

std::size_t syzygy_rank(const LinearSyzygy& s) { return rank(s.coefficients); }

KoszulRepresentative koszul_representative(const QuadraticSystem& q, const LinearSyzygy& s) {
    const RingPtr& R = q.ring();
    const Field& f = R->field();
    const std::size_t d = R->nvars();
    const std::size_t r = q.count();
    if (s.coefficients.rows() != r || s.coefficients.cols() != d)
        throw std::invalid_argument("syzygy shape does not match the quadratic system");

    auto mons = monomials_of_degree(d, 2);
    std::map<Exponent, std::size_t> mono_index;
    for (std::size_t c = 0; c < mons.size(); ++c) mono_index[mons[c]] = c;

    // targets T_k = sum_i coeff(i,k) q_i as degree-2 coefficient vectors
    std::vector<std::vector<Scalar>> target(d, std::vector<Scalar>(mons.size(), Scalar::zero(f)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar& c = s.coefficients.at(i, k);
            if (c.is_zero()) continue;
            for (const auto& t : q.quadrics()[i].terms()) {
                std::size_t col = mono_index.at(t.exp);
                target[k][col] = target[k][col] + c * t.coeff;
            }
        }

    // Solve for a Koszul representative z = sum_{a<b} e_ab (x) L_ab with
    // (dz)_k = T_k in S_2, where (dz)_k = sum_{a<k} x_a L_ak - sum_{b>k} x_b L_kb.
    auto pairs = subsets((int)d, 2);
    std::map<std::vector<int>, std::size_t> pair_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;
    const std::size_t nunk = pairs.size() * d; // w_{ab,v}
    const std::size_t neq = d * mons.size();
    ExactMatrix A(f, neq, nunk);
    std::vector<Scalar> b;
    b.reserve(neq);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t col = 0; col < mons.size(); ++col) b.push_back(target[k][col]);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        int a = pairs[pi][0], bb = pairs[pi][1];
        for (std::size_t v = 0; v < d; ++v) {
            std::size_t u = pi * d + v;
            // x_a * x_v contributes to equation block k = b with +1
            std::size_t col_av = mono_index.at(pair_monomial(d, a, (int)v));
            A.set((std::size_t)bb * mons.size() + col_av,
                  u, A.at((std::size_t)bb * mons.size() + col_av, u) + Scalar::one(f));
            // x_b * x_v contributes to equation block k = a with -1
            std::size_t col_bv = mono_index.at(pair_monomial(d, bb, (int)v));
            A.set((std::size_t)a * mons.size() + col_bv,
                  u, A.at((std::size_t)a * mons.size() + col_bv, u) - Scalar::one(f));
        }
    }
    std::vector<Scalar> w;
    if (!solve(A, b, w))
        throw std::logic_error("linear syzygy has no Koszul representative");

    // gauge freedom: z + sum_T mu_T d(e_T), d(e_T) = sum_j (-1)^j e_{T\t_j} (x) x_{t_j}
    auto z_at = [&](int a, int bb, std::size_t v) -> const Scalar& {
        return w[pair_index.at({a, bb}) * d + v];
    };
    auto feasible = [&](const std::vector<bool>& keep,
                        std::map<std::vector<int>, Scalar>* out) -> bool {
        // mu values pinned by pairs outside the kept set must be consistent
        std::map<std::vector<int>, Scalar> pinned;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            int a = pairs[pi][0], bb = pairs[pi][1];
            if (keep[(std::size_t)a] && keep[(std::size_t)bb]) continue;
            for (std::size_t v = 0; v < d; ++v) {
                const Scalar& zv = z_at(a, bb, v);
                if ((int)v == a || (int)v == bb) {
                    if (!zv.is_zero()) return false;
                    continue;
                }
                std::vector<int> T = {a, bb, (int)v};
                std::sort(T.begin(), T.end());
                std::size_t pos = 0;
                while (T[pos] != (int)v) ++pos;
                // z + (-1)^pos mu = 0
                Scalar mu = (pos % 2 == 0) ? -zv : zv;
                auto it = pinned.find(T);
                if (it == pinned.end())
                    pinned.emplace(T, mu);
                else if (!(it->second == mu))
                    return false;
            }
        }
        if (out) *out = std::move(pinned);
        return true;
    };

    std::vector<bool> best(d, true);
    if (d <= 16) {
        bool found = false;
        for (std::size_t size = 0; size <= d && !found; ++size)
            for (const auto& S : subsets((int)d, (int)size)) {
                std::vector<bool> keep(d, false);
                for (int v : S) keep[(std::size_t)v] = true;
                if (feasible(keep, nullptr)) {
                    best = keep;
                    found = true;
                    break;
                }
            }
    } else {
        // greedy removal for large rings
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t v = 0; v < d; ++v) {
                if (!best[v]) continue;
                best[v] = false;
                if (feasible(best, nullptr))
                    progress = true;
                else
                    best[v] = true;
            }
        }
    }

    std::map<std::vector<int>, Scalar> pinned;
    feasible(best, &pinned);

    KoszulRepresentative rep;
    for (std::size_t v = 0; v < d; ++v)
        if (best[v]) rep.support.push_back(v);
    for (const auto& P : pairs) {
        int a = P[0], bb = P[1];
        if (!best[(std::size_t)a] || !best[(std::size_t)bb]) continue;
        MultiPoly L(R);
        for (std::size_t v = 0; v < d; ++v) {
            Scalar c = z_at(a, bb, v);
            if ((int)v != a && (int)v != bb) {
                std::vector<int> T = {a, bb, (int)v};
                std::sort(T.begin(), T.end());
                auto it = pinned.find(T);
                if (it != pinned.end()) {
                    std::size_t pos = 0;
                    while (T[pos] != (int)v) ++pos;
                    c = (pos % 2 == 0) ? c + it->second : c - it->second;
                }
            }
            if (!c.is_zero()) L = L + MultiPoly::variable(R, v).scaled(c);
        }
        if (!L.is_zero()) rep.forms[{a, bb}] = L;
    }
    return rep;
}

std::size_t support_dimension(const QuadraticSystem& q, const LinearSyzygy& s) {
    return koszul_representative(q, s).support.size();
}

std::size_t quadric_rank(const MultiPoly& quadric) {
    const RingPtr& R = quadric.ring();
    const Field& f = R->field();
    // characteristic 2 cannot occur: Field::prime only admits odd primes
    if (quadric.is_zero()) return 0;
    if (!quadric.is_coarse_homogeneous() || quadric.coarse_degree() != 2)
        throw std::invalid_argument("quadric rank needs a homogeneous quadric");
    std::size_t d = R->nvars();
    ExactMatrix g(f, d, d);
    Scalar half = Scalar::from_int(f, 2).inv();
    for (const auto& t : quadric.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t v = 0; v < d; ++v)
            for (std::int32_t e = 0; e < t.exp[v]; ++e) idx.push_back(v);
        if (idx.size() == 1) {
            g.set(idx[0], idx[0], t.coeff);
        } else if (idx[0] == idx[1]) {
            g.set(idx[0], idx[0], t.coeff);
        } else {
            Scalar h = t.coeff * half;
            g.set(idx[0], idx[1], h);
            g.set(idx[1], idx[0], h);
        }
    }
    return rank(g);
}

std::size_t two_lp(const QuadraticSystem& q, std::size_t i_max, std::size_t max_cells) {
    auto b = koszul_strand_betti(q, i_max, max_cells);
    std::size_t lp = 0;
    for (std::size_t m = 0; m < b.size(); ++m)
        if (b[m] != 0) lp = m + 1;
    return lp;
}

} // namespace syz
