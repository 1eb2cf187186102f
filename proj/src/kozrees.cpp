#include "syz/kozrees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace syz {

namespace {

std::vector<std::vector<int>> combinations(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > d) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == d - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

} // namespace

std::string subset_var_name(const std::string& prefix, const std::vector<int>& idx) {
    bool small = true;
    for (int v : idx)
        if (v > 9) small = false;
    std::string s = prefix;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (!small && i) s += "_";
        s += std::to_string(idx[i]);
    }
    return s;
}

// ---- SkewLinearMatrix ----

SkewLinearMatrix::SkewLinearMatrix(RingPtr ring, int size)
    : ring_(std::move(ring)), d_(size) {
    if (d_ < 1) throw std::invalid_argument("skew matrix size must be positive");
    upper_.assign((std::size_t)d_ * (d_ - 1) / 2, MultiPoly(ring_));
}

std::size_t SkewLinearMatrix::idx(int i, int j) const {
    // i < j, 1-based; row-major over the strict upper triangle
    return (std::size_t)(i - 1) * d_ - (std::size_t)i * (i - 1) / 2 + (j - i - 1);
}

MultiPoly SkewLinearMatrix::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > d_ || j > d_) throw std::out_of_range("skew entry index");
    if (i == j) return MultiPoly(ring_);
    if (i < j) return upper_[idx(i, j)];
    return -upper_[idx(j, i)];
}

void SkewLinearMatrix::set(int i, int j, const MultiPoly& p) {
    if (i < 1 || j <= i || j > d_) throw std::out_of_range("skew entry index (need i < j)");
    if (p.ring().get() != ring_.get()) throw std::invalid_argument("ring mismatch");
    if (p.coarse_degree() > 1) throw std::invalid_argument("skew entries must be linear");
    upper_[idx(i, j)] = p;
}

RingPtr skew_ring(int d, const Field& f) {
    std::vector<VarInfo> vars;
    for (int i = 1; i <= d; ++i) vars.push_back({"x" + std::to_string(i), VarRole::X, {i}});
    for (const auto& ij : combinations(d, 2))
        vars.push_back({subset_var_name("y", ij), VarRole::Y, ij});
    return std::make_shared<RingSpec>(f, std::move(vars));
}

SkewLinearMatrix generic_skew_matrix(const RingPtr& ring, int d) {
    SkewLinearMatrix m(ring, d);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            int vi = ring->var_index(subset_var_name("y", {i, j}));
            if (vi < 0) throw std::invalid_argument("ring lacks skew variables");
            MultiPoly v = MultiPoly::variable(ring, (std::size_t)vi);
            m.set(i, j, (i + j) % 2 == 0 ? v : -v);
        }
    return m;
}

SkewLinearMatrix cycle_skew_matrix(const RingPtr& ring, int d, bool flip_corner) {
    SkewLinearMatrix m(ring, d);
    auto var = [&](int i, int j) {
        int vi = ring->var_index(subset_var_name("y", {i, j}));
        if (vi < 0) throw std::invalid_argument("ring lacks cycle variables");
        return MultiPoly::variable(ring, (std::size_t)vi);
    };
    for (int i = 1; i < d; ++i) m.set(i, i + 1, -var(i, i + 1));
    int corner_sign = ((1 + d) % 2 == 0 ? 1 : -1) * (flip_corner ? -1 : 1);
    m.set(1, d, corner_sign > 0 ? var(1, d) : -var(1, d));
    return m;
}

namespace {

MultiPoly pfaffian_rec(const SkewLinearMatrix& m, const std::vector<int>& idx) {
    if (idx.empty()) return MultiPoly::constant(m.ring(), Scalar::one(m.ring()->field()));
    MultiPoly out(m.ring());
    for (std::size_t t = 1; t < idx.size(); ++t) {
        MultiPoly e = m.entry(idx[0], idx[t]);
        if (e.is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        MultiPoly term = e * pfaffian_rec(m, rest);
        out = t % 2 == 1 ? out + term : out - term;
    }
    return out;
}

MultiPoly det_rec(const SkewLinearMatrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    if (rows.empty()) return MultiPoly::constant(m.ring(), Scalar::one(m.ring()->field()));
    MultiPoly out(m.ring());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        MultiPoly e = m.entry(rows[0], cols[t]);
        if (e.is_zero()) continue;
        std::vector<int> r(rows.begin() + 1, rows.end());
        std::vector<int> c;
        for (std::size_t s = 0; s < cols.size(); ++s)
            if (s != t) c.push_back(cols[s]);
        MultiPoly term = e * det_rec(m, r, c);
        out = t % 2 == 0 ? out + term : out - term;
    }
    return out;
}

} // namespace

MultiPoly pfaffian(const SkewLinearMatrix& m) {
    if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian needs even size");
    std::vector<int> idx(m.size());
    std::iota(idx.begin(), idx.end(), 1);
    return pfaffian_rec(m, idx);
}

MultiPoly skew_determinant(const SkewLinearMatrix& m) {
    std::vector<int> idx(m.size());
    std::iota(idx.begin(), idx.end(), 1);
    return det_rec(m, idx, idx);
}

// ---- ideal families ----

PolyIdeal koszul_cycle_generators(int d, int i, const Field& f) {
    if (i < 1 || i > d - 1) throw std::invalid_argument("need 1 <= i <= d-1");
    std::vector<VarInfo> vars;
    for (int k = 1; k <= d; ++k) vars.push_back({"x" + std::to_string(k), VarRole::X, {k}});
    auto ysets = combinations(d, i);
    for (const auto& K : ysets) vars.push_back({subset_var_name("y", K), VarRole::Y, K});
    auto ring = std::make_shared<RingSpec>(f, std::move(vars));
    RingPtr R = ring;

    std::map<std::vector<int>, std::size_t> yvar;
    for (std::size_t k = 0; k < ysets.size(); ++k) yvar[ysets[k]] = d + k;

    std::vector<MultiPoly> gens;
    for (const auto& I : combinations(d, i + 1)) {
        MultiPoly z(R);
        for (std::size_t j = 0; j < I.size(); ++j) {
            std::vector<int> K;
            for (std::size_t t = 0; t < I.size(); ++t)
                if (t != j) K.push_back(I[t]);
            MultiPoly term = MultiPoly::variable(R, (std::size_t)(I[j] - 1)) *
                             MultiPoly::variable(R, yvar.at(K));
            z = j % 2 == 0 ? z + term : z - term;
        }
        gens.push_back(std::move(z));
    }
    return PolyIdeal(R, std::move(gens));
}

WeightedConfig weight_configuration(const OrientedComplex& c) {
    if (!c.is_pure() || c.is_void())
        throw std::invalid_argument("weight configuration needs a pure nonvoid complex");
    int d = c.vertex_count();
    WeightedConfig w;
    w.ambient = (std::size_t)d + 1;
    for (int k = 1; k <= d; ++k) {
        Multidegree col(w.ambient, 0);
        col[(std::size_t)k] = 1;
        w.columns.push_back(std::move(col));
        w.names.push_back("x" + std::to_string(k));
    }
    for (const auto& fct : c.facets()) {
        Multidegree col(w.ambient, 0);
        col[0] = 1;
        for (int v : fct) col[(std::size_t)v] -= 1;
        std::vector<int> s = fct;
        std::sort(s.begin(), s.end());
        w.columns.push_back(std::move(col));
        w.names.push_back(subset_var_name("y", s));
    }
    return w;
}

namespace {

// ring k[x_1..x_d, y_sigma per facet] with the toric fine grading
RingPtr facet_ring(const OrientedComplex& c, const Field& f) {
    auto w = weight_configuration(c);
    std::vector<VarInfo> vars;
    int d = c.vertex_count();
    for (int k = 1; k <= d; ++k) vars.push_back({"x" + std::to_string(k), VarRole::X, {k}});
    for (const auto& fct : c.facets()) {
        std::vector<int> s = fct;
        std::sort(s.begin(), s.end());
        vars.push_back({subset_var_name("y", s), VarRole::Y, s});
    }
    auto ring = std::make_shared<RingSpec>(f, std::move(vars));
    ring->set_fine_grading(w.columns);
    return ring;
}

} // namespace

PolyIdeal pseudomanifold_ideal(const OrientedComplex& c, const Field& f) {
    auto rep = validate_pseudomanifold(c);
    if (!rep.ok())
        throw std::invalid_argument("not an oriented pseudomanifold: " +
                                    rep.failing_witness.value_or("unknown"));
    RingPtr R = facet_ring(c, f);
    int d = c.vertex_count();
    int n = c.dimension();

    // ridge -> list of (opposite vertex, sorted facet)
    std::map<std::vector<int>, std::vector<std::pair<int, std::vector<int>>>> ridges;
    for (const auto& fct : c.facets()) {
        std::vector<int> s = fct;
        std::sort(s.begin(), s.end());
        for (int k = 0; k <= n; ++k) {
            std::vector<int> r;
            for (int t = 0; t <= n; ++t)
                if (t != k) r.push_back(s[t]);
            ridges[r].emplace_back(s[k], s);
        }
    }
    std::vector<MultiPoly> gens;
    for (auto& [r, occ] : ridges) {
        if (occ.size() != 2) continue;
        std::sort(occ.begin(), occ.end());
        auto term = [&](const std::pair<int, std::vector<int>>& o) {
            int xi = R->var_index("x" + std::to_string(o.first));
            int yi = R->var_index(subset_var_name("y", o.second));
            return MultiPoly::variable(R, (std::size_t)xi) *
                   MultiPoly::variable(R, (std::size_t)yi);
        };
        gens.push_back(term(occ[0]) - term(occ[1]));
    }
    (void)d;
    return PolyIdeal(R, std::move(gens));
}

PolyIdeal skew_matrix_ideal(const SkewLinearMatrix& m, const std::vector<std::size_t>& x,
                            bool with_pfaffian) {
    if ((int)x.size() != m.size()) throw std::invalid_argument("column size mismatch");
    if (with_pfaffian && m.size() % 2 != 0)
        throw std::invalid_argument("pfaffian needs even size");
    const RingPtr& R = m.ring();
    std::vector<MultiPoly> gens;
    for (int i = 1; i <= m.size(); ++i) {
        MultiPoly row(R);
        for (int j = 1; j <= m.size(); ++j) {
            MultiPoly e = m.entry(i, j);
            if (e.is_zero()) continue;
            row = row + e * MultiPoly::variable(R, x[(std::size_t)j - 1]);
        }
        if (!row.is_zero()) gens.push_back(std::move(row));
    }
    if (with_pfaffian) {
        MultiPoly pf = pfaffian(m);
        if (!pf.is_zero()) gens.push_back(pf.monic(MonomialOrder::grevlex()));
    }
    return PolyIdeal(R, std::move(gens));
}

PolyIdeal cycle_specialization(int d, const Field& f) {
    if (d < 4) throw std::invalid_argument("cycle specialization needs d >= 4");
    RingPtr R = facet_ring(cycle_complex(d), f);
    SkewLinearMatrix m = cycle_skew_matrix(R, d, /*flip_corner=*/d % 2 == 0);
    std::vector<std::size_t> x(d);
    std::iota(x.begin(), x.end(), 0);
    return skew_matrix_ideal(m, x, /*with_pfaffian=*/d % 2 == 0);
}

} // namespace syz
