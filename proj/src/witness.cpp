#include "syz/witness.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "syz/kozrees.hpp"
#include "syz/toricbetti.hpp"

namespace syz {

namespace {

bool is_linear_or_zero(const MultiPoly& p) {
    return p.is_zero() || (p.is_coarse_homogeneous() && p.coarse_degree() == 1);
}

// coefficient vector of a linear form over the ring variables
std::vector<Scalar> linear_coeffs(const MultiPoly& p) {
    const RingPtr& R = p.ring();
    std::vector<Scalar> out(R->nvars(), Scalar::zero(R->field()));
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < R->nvars(); ++v)
            if (t.exp[v] == 1) out[v] = t.coeff;
    return out;
}

// ---- univariate polynomial helpers (dense, low-to-high) ----

using UniPoly = std::vector<Scalar>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Scalar c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - c * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// interpolate coefficients of a degree-<=n polynomial from n+1 samples
UniPoly uni_interpolate(const Field& f, const std::vector<Scalar>& xs,
                        const std::vector<Scalar>& ys) {
    std::size_t n = xs.size();
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar pw = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, pw);
            pw = pw * xs[i];
        }
    }
    std::vector<Scalar> c;
    if (!solve(m, ys, c)) throw std::logic_error("interpolation failed");
    return c;
}

Scalar det_of(ExactMatrix m) {
    const Field& f = m.field();
    std::size_t n = m.rows();
    Scalar det = Scalar::one(f);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(f);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det = det * m.at(c, c);
        Scalar inv = m.at(c, c).inv();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Scalar factor = m.at(r, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(c, j);
        }
    }
    return det;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
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

// membership tester for the degree-3 span S_1 * I_2 (closure step)
class CubicSpanTester {
public:
    CubicSpanTester(const QuadraticSystem& q) : ring_(q.ring()) {
        std::vector<MultiPoly> cubics;
        for (const auto& g : q.quadrics())
            for (std::size_t v = 0; v < ring_->nvars(); ++v)
                cubics.push_back(g * MultiPoly::variable(ring_, v));
        mons_ = monomials_of_degree(ring_->nvars(), 3);
        if (!cubics.empty()) {
            auto rr = row_reduce(coefficient_matrix(ring_, cubics, 3));
            rref_ = std::make_unique<ExactMatrix>(rr.echelon);
            pivots_ = rr.pivot_cols;
            rank_ = rr.rank;
        }
        for (std::size_t c = 0; c < mons_.size(); ++c) idx_[mons_[c]] = c;
    }

    bool contains(const MultiPoly& cubic) const {
        if (cubic.is_zero()) return true;
        if (!cubic.is_coarse_homogeneous() || cubic.coarse_degree() != 3) return false;
        const Field& f = ring_->field();
        std::vector<Scalar> v(mons_.size(), Scalar::zero(f));
        for (const auto& t : cubic.terms()) v[idx_.at(t.exp)] = t.coeff;
        for (std::size_t i = 0; i < rank_; ++i) {
            const Scalar c = v[pivots_[i]]; // copy: the loop below overwrites v[pivots_[i]]
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < mons_.size(); ++j)
                v[j] = v[j] - c * rref_->at(i, j);
        }
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }

private:
    RingPtr ring_;
    std::vector<Exponent> mons_;
    std::map<Exponent, std::size_t> idx_;
    std::unique_ptr<ExactMatrix> rref_;
    std::vector<std::size_t> pivots_;
    std::size_t rank_ = 0;
};

std::size_t pair_slot(std::size_t s, std::size_t i, std::size_t j) {
    // row-major index of pair (i < j) among pairs of {0..s-1}
    return i * s - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

LinearFormMatrix::LinearFormMatrix(RingPtr ring, std::size_t p, std::size_t q)
    : ring_(std::move(ring)), p_(p), q_(q), entries_(p * q, MultiPoly(ring_)) {
    if (p == 0 || q == 0) throw std::invalid_argument("empty matrix of linear forms");
}

void LinearFormMatrix::set(std::size_t i, std::size_t j, const MultiPoly& v) {
    if (!is_linear_or_zero(v))
        throw std::invalid_argument("matrix entries must be homogeneous linear or zero");
    entries_[i * q_ + j] = v;
}

MultiPoly LinearFormMatrix::minor2(std::size_t i1, std::size_t i2, std::size_t j1,
                                   std::size_t j2) const {
    return at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1);
}

OneGenericityReport is_one_generic(const LinearFormMatrix& m, GenericityMode mode,
                                   std::size_t samples, std::uint64_t seed) {
    const RingPtr& R = m.ring();
    const Field& f = R->field();
    std::size_t p = m.rows(), q = m.cols();
    if (p > q) throw std::invalid_argument("matrix has more rows than columns; transpose first");

    OneGenericityReport rep;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (m.at(i, j).is_zero()) {
                rep.one_generic = false;
                rep.exact = true;
                rep.evidence = "zero entry at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")";
                return rep;
            }

    auto rank_of_combination = [&](const std::vector<Scalar>& u) -> std::size_t {
        ExactMatrix c(f, q, R->nvars());
        for (std::size_t j = 0; j < q; ++j) {
            std::vector<Scalar> acc(R->nvars(), Scalar::zero(f));
            for (std::size_t i = 0; i < p; ++i) {
                if (u[i].is_zero()) continue;
                auto row = linear_coeffs(m.at(i, j));
                for (std::size_t v = 0; v < R->nvars(); ++v)
                    acc[v] = acc[v] + u[i] * row[v];
            }
            for (std::size_t v = 0; v < R->nvars(); ++v) c.set(j, v, acc[v]);
        }
        return rank(c);
    };

    if (mode == GenericityMode::Exact2xQ) {
        if (p != 2) throw std::invalid_argument("exact mode needs exactly two rows");
        if (q > R->nvars()) throw std::invalid_argument("exact mode needs q <= dim V");
        // coefficient matrices of the two rows
        ExactMatrix c1(f, q, R->nvars()), c2(f, q, R->nvars());
        for (std::size_t j = 0; j < q; ++j) {
            auto r1 = linear_coeffs(m.at(0, j));
            auto r2 = linear_coeffs(m.at(1, j));
            for (std::size_t v = 0; v < R->nvars(); ++v) {
                c1.set(j, v, r1[v]);
                c2.set(j, v, r2[v]);
            }
        }
        // Each q x q minor of a*c1 + b*c2 is a binary form of degree q;
        // the matrix is 1-generic iff the minors have no common projective
        // root: gcd of the dehomogenized forms is constant and not every
        // minor vanishes at (0:1).
        std::vector<Scalar> ts;
        for (long t = 0; (std::size_t)ts.size() < q + 1; ++t) ts.push_back(Scalar::from_int(f, t));
        UniPoly g; // running gcd of f(1, t)
        bool some_minor_nonzero = false;
        bool infinity_root_everywhere = true;
        for (const auto& cols : k_subsets((int)R->nvars(), (int)q)) {
            std::vector<Scalar> vals;
            for (const auto& t : ts) {
                ExactMatrix sub(f, q, q);
                for (std::size_t r = 0; r < q; ++r)
                    for (std::size_t c = 0; c < q; ++c)
                        sub.set(r, c, c1.at(r, (std::size_t)cols[c]) +
                                          t * c2.at(r, (std::size_t)cols[c]));
                vals.push_back(det_of(sub));
            }
            UniPoly coeffs = uni_interpolate(f, ts, vals);
            uni_trim(coeffs);
            if (coeffs.empty()) continue; // identically zero minor
            some_minor_nonzero = true;
            // coefficient of t^q is the value at the point at infinity
            if (coeffs.size() == q + 1 && !coeffs[q].is_zero()) infinity_root_everywhere = false;
            g = g.empty() ? coeffs : uni_gcd(g, coeffs);
            if (g.size() == 1 && !infinity_root_everywhere) break; // constant gcd, proven
        }
        rep.exact = true;
        if (!some_minor_nonzero) {
            rep.one_generic = false;
            rep.evidence = "all pencil minors vanish identically";
        } else if (infinity_root_everywhere) {
            rep.one_generic = false;
            rep.evidence = "all pencil minors vanish on the second row's combination";
        } else if (g.size() > 1) {
            rep.one_generic = false;
            rep.evidence = "pencil minors share a root (gcd degree " +
                           std::to_string(g.size() - 1) + ")";
        } else {
            rep.one_generic = true;
            rep.evidence = "pencil minor gcd is constant";
        }
        return rep;
    }

    // randomized mode: deterministic small-coefficient screen, then N samples
    rep.exact = false;
    rep.seed = seed;
    rep.samples = samples;
    std::vector<std::vector<Scalar>> screen;
    if (p <= 6) {
        std::vector<Scalar> u(p, Scalar::zero(f));
        std::vector<int> digits(p, 0);
        while (true) {
            std::size_t i = 0;
            while (i < p && digits[i] == 2) digits[i++] = 0;
            if (i == p) break;
            ++digits[i];
            bool nonzero = false;
            for (std::size_t k = 0; k < p; ++k) {
                u[k] = Scalar::from_int(f, digits[k] == 2 ? -1 : digits[k]);
                nonzero |= digits[k] != 0;
            }
            if (nonzero) screen.push_back(u);
        }
    }
    std::mt19937_64 rng(seed);
    double space = f.is_q() ? 1999.0 : (double)f.p;
    auto random_scalar = [&]() {
        if (f.is_q()) return Scalar::from_int(f, (long)(rng() % 1999) - 999);
        return Scalar::from_int(f, (long)(rng() % f.p));
    };
    for (std::size_t n = 0; n < samples; ++n) {
        std::vector<Scalar> u;
        bool nonzero = false;
        for (std::size_t i = 0; i < p; ++i) {
            u.push_back(random_scalar());
            nonzero |= !u.back().is_zero();
        }
        if (nonzero) screen.push_back(u);
    }
    for (const auto& u : screen) {
        if (rank_of_combination(u) < q) {
            rep.one_generic = false;
            rep.failing_combination = u;
            rep.evidence = "row combination with dependent entries found";
            return rep;
        }
    }
    rep.one_generic = true;
    rep.failure_bound = 1.0;
    double per = (double)q / space;
    if (per < 1.0) {
        rep.failure_bound = 1.0;
        for (std::size_t n = 0; n < samples; ++n) rep.failure_bound *= per;
    }
    rep.evidence = "no rank drop in " + std::to_string(screen.size()) + " combinations";
    return rep;
}

std::optional<std::vector<Scalar>> quadric_span_member(const MultiPoly& q,
                                                       const QuadraticSystem& basis) {
    const Field& f = basis.ring()->field();
    if (q.is_zero()) return std::vector<Scalar>(basis.count(), Scalar::zero(f));
    if (!q.is_coarse_homogeneous() || q.coarse_degree() != 2) return std::nullopt;
    auto mons = monomials_of_degree(basis.ring()->nvars(), 2);
    std::map<Exponent, std::size_t> idx;
    for (std::size_t c = 0; c < mons.size(); ++c) idx[mons[c]] = c;
    ExactMatrix m(f, mons.size(), basis.count());
    for (std::size_t i = 0; i < basis.count(); ++i)
        for (const auto& t : basis.quadrics()[i].terms()) m.set(idx[t.exp], i, t.coeff);
    std::vector<Scalar> b(mons.size(), Scalar::zero(f));
    for (const auto& t : q.terms()) b[idx[t.exp]] = t.coeff;
    std::vector<Scalar> x;
    if (!solve(m, b, x)) return std::nullopt;
    return x;
}

WitnessCertificate scroll_extract(const QuadraticSystem& i2,
                                  const std::vector<MultiPoly>& w_basis,
                                  const std::vector<MultiPoly>& y_assign) {
    const RingPtr& R = i2.ring();
    std::size_t s = w_basis.size();
    if (s < 2 || y_assign.size() != s)
        throw std::invalid_argument("scroll needs matching rows of length >= 2");
    if (rank(coefficient_matrix(R, w_basis, 1)) != s)
        throw std::invalid_argument("scroll first row must be independent linear forms");

    LinearFormMatrix phi(R, 2, s);
    for (std::size_t j = 0; j < s; ++j) {
        phi.set(0, j, w_basis[j]);
        phi.set(1, j, y_assign[j]);
    }
    WitnessCertificate cert{CertKind::Scroll, phi, i2.quadrics(), {}, std::nullopt, ""};
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            MultiPoly minor = phi.minor2(0, 1, i, j);
            auto coords = quadric_span_member(minor, i2);
            if (!coords)
                throw std::runtime_error("scroll minor (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") is not in the quadric span");
            cert.proofs.push_back({"minor(" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")",
                                   minor, *coords, false, ""});
        }
    cert.genericity = (s <= R->nvars())
                          ? is_one_generic(phi, GenericityMode::Exact2xQ)
                          : is_one_generic(phi, GenericityMode::Randomized);
    cert.note = "2 x " + std::to_string(s) + " scroll";
    return cert;
}

WitnessCertificate pfaffian_extract(const QuadraticSystem& i2,
                                    const std::vector<MultiPoly>& w_basis,
                                    const std::vector<MultiPoly>& y_assign) {
    const RingPtr& R = i2.ring();
    std::size_t s = w_basis.size();
    if (s < 4) throw std::invalid_argument("pfaffian net needs at least four border forms");
    if (y_assign.size() != s * (s - 1) / 2)
        throw std::invalid_argument("y assignment must cover all pairs");
    if (rank(coefficient_matrix(R, w_basis, 1)) != s)
        throw std::invalid_argument("border forms must be independent");

    auto y_at = [&](std::size_t i, std::size_t j) -> const MultiPoly& {
        return y_assign[pair_slot(s, std::min(i, j), std::max(i, j))];
    };

    // bordered skew matrix: row/column 0 carries the w forms
    LinearFormMatrix n(R, s + 1, s + 1);
    for (std::size_t t = 0; t < s; ++t) {
        n.set(0, t + 1, w_basis[t]);
        n.set(t + 1, 0, -w_basis[t]);
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            n.set(i + 1, j + 1, y_at(i, j));
            n.set(j + 1, i + 1, -y_at(i, j));
        }

    WitnessCertificate cert{CertKind::PfaffianNet, n, i2.quadrics(), {}, std::nullopt, ""};

    // bordered Pfaffians = the three-term elements; all must be in span(I_2)
    for (const auto& t : k_subsets((int)s, 3)) {
        std::size_t i = t[0], j = t[1], k = t[2];
        MultiPoly e = y_at(i, j) * w_basis[k] - y_at(i, k) * w_basis[j] +
                      y_at(j, k) * w_basis[i];
        auto coords = quadric_span_member(e, i2);
        if (!coords)
            throw std::runtime_error("three-term element (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                     ") is not in the quadric span");
        cert.proofs.push_back({"pfaff(0," + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "," + std::to_string(k + 1) + ")",
                               e, *coords, false, ""});
    }

    // y-only Pfaffians: direct membership, or the closure step w_i1 * P in S_1 * I_2
    CubicSpanTester closure(i2);
    for (const auto& t : k_subsets((int)s, 4)) {
        std::size_t i = t[0], j = t[1], k = t[2], l = t[3];
        MultiPoly p = y_at(i, j) * y_at(k, l) - y_at(i, k) * y_at(j, l) +
                      y_at(i, l) * y_at(j, k);
        std::string label = "pfaff(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "," + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
        auto coords = quadric_span_member(p, i2);
        if (coords) {
            cert.proofs.push_back({label, p, *coords, false, ""});
            continue;
        }
        if (!closure.contains(w_basis[i] * p))
            throw std::runtime_error(label + " fails both direct membership and the closure step");
        cert.proofs.push_back({label, p, {}, true,
                               "w_" + std::to_string(i + 1) +
                                   " * P lies in S_1 * I_2; membership follows for prime "
                                   "nondegenerate ideals"});
    }
    cert.note = "bordered " + std::to_string(s + 1) + " x " + std::to_string(s + 1) +
                " pfaffian net";
    return cert;
}

namespace {

SyzygyFrame frame_from_representative(const QuadraticSystem& i2, const LinearSyzygy& s,
                                      std::size_t want_support) {
    auto rep = koszul_representative(i2, s);
    if (rep.support.size() != want_support)
        throw std::invalid_argument("syzygy support dimension " +
                                    std::to_string(rep.support.size()) + ", expected " +
                                    std::to_string(want_support));
    const RingPtr& R = i2.ring();
    SyzygyFrame out;
    for (std::size_t v : rep.support) out.w_basis.push_back(MultiPoly::variable(R, v));
    auto form = [&](std::size_t a, std::size_t b) -> MultiPoly {
        auto it = rep.forms.find({(int)rep.support[a], (int)rep.support[b]});
        return it == rep.forms.end() ? MultiPoly(R) : it->second;
    };
    if (want_support == 3) {
        // y_i = (-1)^(i+1) L_{complement pair}, positions 1-based
        out.y_assign = {form(1, 2), -form(0, 2), form(0, 1)};
    } else {
        // y_ij = (-1)^(i+j) L_{complement pair}, positions 1-based
        std::size_t n = want_support;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<std::size_t> comp;
                for (std::size_t t = 0; t < n; ++t)
                    if (t != i && t != j) comp.push_back(t);
                MultiPoly L = form(comp[0], comp[1]);
                out.y_assign.push_back(((i + j) % 2 == 0) ? L : -L);
            }
    }
    return out;
}

} // namespace

SyzygyFrame scroll_frame(const QuadraticSystem& i2, const LinearSyzygy& s) {
    return frame_from_representative(i2, s, 3);
}

SyzygyFrame pfaffian_frame(const QuadraticSystem& i2, const LinearSyzygy& s) {
    return frame_from_representative(i2, s, 4);
}

WitnessCertificate bipartite_block_extract(const WitnessCertificate& cert, bool is_semigroup) {
    if (cert.kind != CertKind::PfaffianNet)
        throw std::invalid_argument("bipartite block extraction needs a pfaffian-net certificate");
    if (!is_semigroup)
        throw std::invalid_argument("bipartite block extraction needs a semigroup ideal");
    const LinearFormMatrix& n = cert.matrix;
    const RingPtr& R = n.ring();
    std::size_t s = n.rows() - 1; // block indices 1..s

    auto nonzero = [&](std::size_t i, std::size_t j) { return !n.at(i + 1, j + 1).is_zero(); };
    std::ostringstream pattern;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (nonzero(i, j)) pattern << " (" << i + 1 << "," << j + 1 << ")";

    for (const auto& t : k_subsets((int)s, 3))
        if (nonzero(t[0], t[1]) && nonzero(t[0], t[2]) && nonzero(t[1], t[2]))
            throw std::runtime_error("semigroup pattern has a triangle (" +
                                     std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) +
                                     "," + std::to_string(t[2] + 1) + "); pattern:" +
                                     pattern.str());

    QuadraticSystem i2(R, cert.quadric_basis);
    CubicSpanTester closure(i2);

    // lexicographically smallest (A, B) with zero A-A block and complete A x B
    std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;
    for (std::size_t v = 2; v <= s; ++v)
        for (const auto& a : k_subsets((int)s, (int)v)) {
            bool azero = true;
            for (std::size_t x = 0; x < a.size() && azero; ++x)
                for (std::size_t y = x + 1; y < a.size(); ++y)
                    if (nonzero(a[x], a[y])) {
                        azero = false;
                        break;
                    }
            if (!azero) continue;
            std::vector<int> rest;
            for (int t = 0; t < (int)s; ++t)
                if (std::find(a.begin(), a.end(), t) == a.end()) rest.push_back(t);
            for (std::size_t w = 2; w <= rest.size(); ++w)
                for (const auto& bi : k_subsets((int)rest.size(), (int)w)) {
                    std::vector<int> b;
                    for (int x : bi) b.push_back(rest[x]);
                    bool complete = true;
                    for (int x : a)
                        for (int y : b)
                            if (!nonzero(std::min(x, y), std::max(x, y))) complete = false;
                    if (complete) candidates.push_back({a, b});
                }
        }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& [a, b] : candidates) {
        LinearFormMatrix m(R, a.size(), b.size());
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < b.size(); ++y) m.set(x, y, n.at(a[x] + 1, b[y] + 1));
        OneGenericityReport gen =
            (a.size() == 2 && b.size() <= R->nvars())
                ? is_one_generic(m, GenericityMode::Exact2xQ)
                : is_one_generic(m, GenericityMode::Randomized);
        if (!gen.one_generic) continue;

        WitnessCertificate out{CertKind::BipartiteBlock, m, cert.quadric_basis, {}, gen, ""};
        bool ok = true;
        for (std::size_t x1 = 0; x1 < a.size() && ok; ++x1)
            for (std::size_t x2 = x1 + 1; x2 < a.size() && ok; ++x2)
                for (std::size_t y1 = 0; y1 < b.size() && ok; ++y1)
                    for (std::size_t y2 = y1 + 1; y2 < b.size() && ok; ++y2) {
                        MultiPoly minor = m.minor2(x1, x2, y1, y2);
                        std::string label = "minor(" + std::to_string(x1 + 1) + "," +
                                            std::to_string(x2 + 1) + ";" +
                                            std::to_string(y1 + 1) + "," +
                                            std::to_string(y2 + 1) + ")";
                        auto coords = quadric_span_member(minor, i2);
                        if (coords) {
                            out.proofs.push_back({label, minor, *coords, false, ""});
                        } else if (closure.contains(n.at(0, a[x1] + 1) * minor)) {
                            out.proofs.push_back({label, minor, {}, true,
                                                  "closure step through the border form"});
                        } else {
                            ok = false;
                        }
                    }
        if (!ok) continue;
        std::ostringstream note;
        note << "block A = {";
        for (std::size_t x = 0; x < a.size(); ++x) note << (x ? "," : "") << a[x] + 1;
        note << "}, B = {";
        for (std::size_t y = 0; y < b.size(); ++y) note << (y ? "," : "") << b[y] + 1;
        note << "}";
        out.note = note.str();
        return out;
    }
    throw std::runtime_error("no complete bipartite block with v,w >= 2; pattern:" +
                             pattern.str());
}

std::vector<WitnessCertificate> bipyramid_scan(const OrientedComplex& delta, const Field& f) {
    if (!delta.is_pure()) throw std::invalid_argument("bipyramid scan needs a pure complex");
    auto a = configuration_from_weights(weight_configuration(delta));
    RingPtr R = configuration_ring(a, f);

    std::vector<std::vector<int>> facet_sets;
    for (const auto& fac : delta.facets()) {
        auto s = fac;
        std::sort(s.begin(), s.end());
        facet_sets.push_back(s);
    }
    auto is_facet = [&](const std::vector<int>& s) {
        return std::find(facet_sets.begin(), facet_sets.end(), s) != facet_sets.end();
    };
    auto facet_var = [&](const std::vector<int>& s) {
        int idx = R->var_index(subset_var_name("y", s));
        if (idx < 0) throw std::logic_error("facet variable not found");
        return MultiPoly::variable(R, (std::size_t)idx);
    };

    std::vector<WitnessCertificate> out;
    int d = delta.vertex_count();
    for (int va = 1; va <= d; ++va)
        for (int vb = va + 1; vb <= d; ++vb) {
            std::vector<std::vector<int>> ridges;
            for (const auto& s : facet_sets) {
                if (std::find(s.begin(), s.end(), va) == s.end()) continue;
                std::vector<int> sigma;
                for (int v : s)
                    if (v != va) sigma.push_back(v);
                if (std::find(sigma.begin(), sigma.end(), vb) != sigma.end()) continue;
                std::vector<int> other = sigma;
                other.push_back(vb);
                std::sort(other.begin(), other.end());
                if (!is_facet(other)) continue;
                if (std::find(ridges.begin(), ridges.end(), sigma) == ridges.end())
                    ridges.push_back(sigma);
            }
            if (ridges.empty()) continue;
            std::sort(ridges.begin(), ridges.end());
            std::size_t k = ridges.size();

            LinearFormMatrix m(R, 2, k + 1);
            m.set(0, 0, MultiPoly::variable(R, (std::size_t)(va - 1)));
            m.set(1, 0, MultiPoly::variable(R, (std::size_t)(vb - 1)));
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<int> with_b = ridges[i], with_a = ridges[i];
                with_b.push_back(vb);
                with_a.push_back(va);
                std::sort(with_b.begin(), with_b.end());
                std::sort(with_a.begin(), with_a.end());
                m.set(0, i + 1, facet_var(with_b));
                m.set(1, i + 1, facet_var(with_a));
            }

            WitnessCertificate cert{CertKind::Bipyramid, m, {}, {}, std::nullopt, ""};
            for (std::size_t c1 = 0; c1 < k + 1; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < k + 1; ++c2) {
                    MultiPoly minor = m.minor2(0, 1, c1, c2);
                    if (!minor.is_zero() && !minor.fine_multidegree().has_value())
                        throw std::logic_error("bipyramid minor is not degree-balanced");
                    cert.proofs.push_back({"minor(" + std::to_string(c1 + 1) + "," +
                                               std::to_string(c2 + 1) + ")",
                                           minor, {}, false, "fine degree balanced"});
                }
            cert.note = "poles (" + std::to_string(va) + "," + std::to_string(vb) +
                        "), k = " + std::to_string(k);
            out.push_back(std::move(cert));
        }
    return out;
}

} // namespace syz
