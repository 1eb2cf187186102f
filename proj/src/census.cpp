#include "syz/census.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syz/kozrees.hpp"
#include "syz/toricbetti.hpp"

namespace syz {

long long binom_ll(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> betti_formulas(long long g, long long d) {
    if (g < 0 || d <= g) throw std::invalid_argument("need d > g >= 0");
    long long r = d - g;
    std::vector<long long> out;
    out.push_back(binom_ll(r, 2) - g);                                      // b_2
    if (r >= 2) out.push_back((r - 1) * (binom_ll(r - 1, 2) - g) - binom_ll(r - 1, 3));
    for (long long i = 4; i <= r + 1; ++i)
        out.push_back(binom_ll(r - 1, i) - (r - 1) * binom_ll(r - 1, i - 1) +
                      g * binom_ll(r - 1, i - 2));
    return out;
}

CurveBettiTable curve_table(long long g, long long d) {
    long long r = d - g;
    auto b = betti_formulas(g, d); // b[0] = b_2, ..., b[r-1] = b_{r+1}
    CurveBettiTable t;
    t.row1 = {b[0], r >= 2 ? b[1] : 0};
    for (long long i = 4; i <= r + 1; ++i) t.row2.push_back(b[i - 2]);
    t.totals.assign((std::size_t)std::max<long long>(r, 1), 0);
    t.totals[0] = 1;
    if (r >= 2) t.totals[1] = b[0];
    if (r >= 3) t.totals[2] = b[1] + (r + 1 >= 4 ? b[2] : 0);
    for (long long h = 3; h <= r - 1; ++h) t.totals[(std::size_t)h] = b[h];
    return t;
}

std::vector<std::pair<long, long>> feasible_pairs(long g_max) {
    std::vector<std::pair<long, long>> out;
    for (long g = 0; g <= g_max; ++g)
        for (long d = g + 2; d <= g + 60; ++d) {
            auto b = betti_formulas(g, d);
            if (b.size() < 2 || b[0] <= 0 || b[1] <= 0) continue;
            bool ok = true;
            for (std::size_t i = 2; i < b.size(); ++i)
                if (b[i] < 0) ok = false;
            if (ok) out.push_back({g, d});
        }
    return out;
}

std::vector<Prop51Hit> prop51_scan(long long r_max) {
    std::vector<Prop51Hit> out;
    for (long long r = 2; r <= r_max; ++r) {
        __int128 num = (__int128)r * r * r - r - 3;
        __int128 den = 3 * (__int128)(r - 1);
        if (num % den != 0) continue;
        long long d = (long long)(num / den);
        out.push_back({r, d, d >= r});
    }
    return out;
}

long two_lp_threshold(long g, long d) {
    long a = d - g - (g + 1) / 2;
    return std::max<long>(a - 1, 0);
}

// ---- lattice polygons ----

namespace {

using Pt = LatticePolygon::Point;

long long cross3(const Pt& o, const Pt& a, const Pt& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

long long gcd_ll(long long a, long long b) { return std::gcd(std::abs(a), std::abs(b)); }

long long twice_area_of(const std::vector<Pt>& v) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % v.size()];
        s += a.first * b.second - a.second * b.first;
    }
    return s;
}

} // namespace

LatticePolygon::LatticePolygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) throw std::invalid_argument("polygon needs at least three vertices");
    if (twice_area_of(verts_) < 0) std::reverse(verts_.begin(), verts_.end());
    std::size_t m = verts_.size();
    for (std::size_t i = 0; i < m; ++i) {
        long long c = cross3(verts_[i], verts_[(i + 1) % m], verts_[(i + 2) % m]);
        if (c <= 0)
            throw std::invalid_argument(
                "polygon vertices must be extreme points in convex position");
    }
    // rotate so the lexicographically smallest vertex comes first
    auto it = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), it, verts_.end());
}

std::vector<Pt> LatticePolygon::lattice_points() const {
    long long x0 = verts_[0].first, x1 = x0, y0 = verts_[0].second, y1 = y0;
    for (const auto& v : verts_) {
        x0 = std::min(x0, v.first);
        x1 = std::max(x1, v.first);
        y0 = std::min(y0, v.second);
        y1 = std::max(y1, v.second);
    }
    std::vector<Pt> out;
    std::size_t m = verts_.size();
    for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < m && inside; ++i)
                if (cross3(verts_[i], verts_[(i + 1) % m], {x, y}) < 0) inside = false;
            if (inside) out.push_back({x, y});
        }
    return out;
}

PickStats pick_stats(const LatticePolygon& p) {
    const auto& v = p.vertices();
    PickStats s;
    s.twice_area = twice_area_of(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % v.size()];
        s.boundary += gcd_ll(b.first - a.first, b.second - a.second);
    }
    long long twice_interior = s.twice_area - s.boundary + 2;
    if (twice_interior < 0 || twice_interior % 2 != 0)
        throw std::logic_error("Pick identity violated");
    s.interior = twice_interior / 2;
    s.degree = s.twice_area;
    return s;
}

namespace {

std::vector<Pt> edge_vectors(const LatticePolygon& p) {
    const auto& v = p.vertices();
    std::vector<Pt> e;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % v.size()];
        e.push_back({b.first - a.first, b.second - a.second});
    }
    return e;
}

} // namespace

bool unimodular_equivalent(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.vertices().size() != b.vertices().size()) return false;
    auto ea = edge_vectors(a);
    auto eb0 = edge_vectors(b);
    std::size_t m = ea.size();
    // orientation-reversing maps traverse the edge cycle backwards, negated
    std::vector<Pt> ebr(m);
    for (std::size_t i = 0; i < m; ++i)
        ebr[i] = {-eb0[m - 1 - i].first, -eb0[m - 1 - i].second};
    for (const auto& eb : {eb0, ebr}) {
        for (std::size_t s = 0; s < m; ++s) {
            // solve U * ea[0] = eb[s], U * ea[1] = eb[s+1] over Q
            long long det = ea[0].first * ea[1].second - ea[0].second * ea[1].first;
            if (det == 0) continue; // consecutive polygon edges are never parallel
            // U = [eb[s] eb[s+1]] * [ea[0] ea[1]]^{-1}, entries times det
            long long u00 = eb[s].first * ea[1].second - eb[(s + 1) % m].first * ea[0].second;
            long long u01 = -eb[s].first * ea[1].first + eb[(s + 1) % m].first * ea[0].first;
            long long u10 = eb[s].second * ea[1].second - eb[(s + 1) % m].second * ea[0].second;
            long long u11 = -eb[s].second * ea[1].first + eb[(s + 1) % m].second * ea[0].first;
            if (u00 % det || u01 % det || u10 % det || u11 % det) continue;
            u00 /= det;
            u01 /= det;
            u10 /= det;
            u11 /= det;
            if (std::abs(u00 * u11 - u01 * u10) != 1) continue;
            bool all = true;
            for (std::size_t i = 0; i < m && all; ++i) {
                const Pt& e = ea[i];
                const Pt& f = eb[(s + i) % m];
                if (u00 * e.first + u01 * e.second != f.first ||
                    u10 * e.first + u11 * e.second != f.second)
                    all = false;
            }
            if (all) return true;
        }
    }
    return false;
}

std::vector<LatticePolygon> enumerate_polygons(long edge_bound) {
    const long long max_2a = 8; // boundary 4, interior 3
    struct Vec {
        long long x, y, g;
    };
    std::vector<Vec> vs;
    for (long long x = -edge_bound; x <= edge_bound; ++x)
        for (long long y = -edge_bound; y <= edge_bound; ++y) {
            if (x == 0 && y == 0) continue;
            long long g = gcd_ll(x, y);
            if (g <= 3) vs.push_back({x, y, g});
        }
    auto half = [](const Vec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    std::sort(vs.begin(), vs.end(), [&](const Vec& a, const Vec& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        long long c = a.x * b.y - a.y * b.x;
        if (c != 0) return c > 0;
        return std::abs(a.x) + std::abs(a.y) < std::abs(b.x) + std::abs(b.y);
    });
    auto cross_v = [](const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; };

    std::vector<LatticePolygon> reps;
    auto offer = [&](const std::vector<Pt>& verts) {
        LatticePolygon p(verts);
        auto st = pick_stats(p);
        bool wanted = (st.boundary == 4 && st.interior >= 0 && st.interior <= 3) ||
                      (st.boundary == 5 && st.interior <= 1);
        if (!wanted) return;
        for (const auto& r : reps)
            if (unimodular_equivalent(r, p)) return;
        reps.push_back(p);
    };

    // convex polygons = edge-vector chains in strictly increasing angular
    // order summing to zero; total boundary count is the gcd sum
    std::vector<std::size_t> chain;
    std::function<void(std::size_t, long long, long long, long long, std::size_t)> rec =
        [&](std::size_t start, long long sx, long long sy, long long gsum, std::size_t want) {
            if (chain.size() + 1 == want) {
                // the closing edge is determined
                Vec last{-sx, -sy, gcd_ll(sx, sy)};
                if ((last.x == 0 && last.y == 0) || last.g > 3) return;
                if (gsum + last.g < 4 || gsum + last.g > 5) return;
                const Vec& prev = vs[chain.back()];
                const Vec& first = vs[chain.front()];
                long long c1 = cross_v(prev, last);
                long long c2 = cross_v(last, first);
                if (c1 <= 0 || c1 > max_2a || c2 <= 0 || c2 > max_2a) return;
                // the closing edge must come after the last chosen in angle order
                if (half(last) < half(prev) ||
                    (half(last) == half(prev) && cross_v(last, prev) > 0))
                    return;
                std::vector<Pt> verts;
                long long px = 0, py = 0;
                for (std::size_t idx : chain) {
                    verts.push_back({px, py});
                    px += vs[idx].x;
                    py += vs[idx].y;
                }
                verts.push_back({px, py});
                if (twice_area_of(verts) > max_2a) return;
                offer(verts);
                return;
            }
            for (std::size_t i = start; i < vs.size(); ++i) {
                const Vec& v = vs[i];
                if (gsum + v.g + (long long)(want - chain.size() - 1) > 5) continue;
                if (!chain.empty()) {
                    long long c = cross_v(vs[chain.back()], v);
                    if (c <= 0 || c > max_2a) continue;
                }
                chain.push_back(i);
                rec(i + 1, sx + v.x, sy + v.y, gsum + v.g, want);
                chain.pop_back();
            }
        };
    for (std::size_t k = 3; k <= 5; ++k) rec(0, 0, 0, 0, k);

    std::sort(reps.begin(), reps.end(), [](const LatticePolygon& a, const LatticePolygon& b) {
        auto sa = pick_stats(a), sb = pick_stats(b);
        if (sa.boundary != sb.boundary) return sa.boundary < sb.boundary;
        if (sa.interior != sb.interior) return sa.interior < sb.interior;
        if (a.vertices().size() != b.vertices().size())
            return a.vertices().size() < b.vertices().size();
        return a.vertices() < b.vertices();
    });
    return reps;
}

// ---- variable-entry scroll search ----

std::optional<LinearFormMatrix> find_variable_scroll(const QuadraticSystem& q,
                                                     std::size_t ncols) {
    const RingPtr& R = q.ring();
    std::size_t n = R->nvars();
    if (ncols < 2 || ncols > n) return std::nullopt;

    // lazy membership cache for binomials v_a v_b - v_c v_d
    std::size_t nm = n * (n + 1) / 2;
    auto mid = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a - 1) / 2 + (b - a);
    };
    std::vector<signed char> cache(nm * nm, -1);
    auto member = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        std::size_t m1 = mid(a, b), m2 = mid(c, d);
        if (m1 == m2) return true;
        signed char& e = cache[m1 * nm + m2];
        if (e < 0) {
            auto p = MultiPoly::variable(R, a) * MultiPoly::variable(R, b) -
                     MultiPoly::variable(R, c) * MultiPoly::variable(R, d);
            e = quadric_span_member(p, q).has_value() ? 1 : 0;
            cache[m2 * nm + m1] = e;
        }
        return e == 1;
    };

    // columns are ordered variable pairs (top, bottom), top != bottom
    std::vector<std::pair<std::size_t, std::size_t>> cols;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) cols.push_back({a, b});

    std::vector<std::size_t> pick;
    std::optional<LinearFormMatrix> found;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (found) return;
        if (pick.size() == ncols) {
            LinearFormMatrix m(R, 2, ncols);
            for (std::size_t j = 0; j < ncols; ++j) {
                m.set(0, j, MultiPoly::variable(R, cols[pick[j]].first));
                m.set(1, j, MultiPoly::variable(R, cols[pick[j]].second));
            }
            if (is_one_generic(m, GenericityMode::Exact2xQ).one_generic) found = m;
            return;
        }
        for (std::size_t i = start; i < cols.size() && !found; ++i) {
            bool ok = true;
            for (std::size_t j : pick) {
                // variables distinct along each row, minors in the span
                if (cols[j].first == cols[i].first || cols[j].second == cols[i].second) {
                    ok = false;
                    break;
                }
                if (!member(cols[j].first, cols[i].second, cols[i].first, cols[j].second)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return found;
}

// ---- polygon pipeline ----

PolygonReport polygon_report(const LatticePolygon& p, const Field& f) {
    PolygonReport rep;
    rep.stats = pick_stats(p);
    rep.threshold = two_lp_threshold((long)rep.stats.interior, (long)rep.stats.degree);

    auto pts = p.lattice_points();
    long long x0 = pts[0].first, y0 = pts[0].second;
    for (const auto& q : pts) {
        x0 = std::min(x0, q.first);
        y0 = std::min(y0, q.second);
    }
    std::vector<Multidegree> cols;
    for (const auto& q : pts) cols.push_back({1, q.first - x0, q.second - y0});
    PointConfiguration a(3, cols);

    RingPtr R = configuration_ring(a, f);
    QuadraticSystem qsys(R, toric_quadrics(R));
    rep.quadrics = qsys.count();
    rep.strand = koszul_strand_betti(qsys, 6);
    rep.two_lp = qsys.count() == 0 ? 0 : two_lp(qsys, 6);

    auto t = hochster_betti(a, 4, f);
    rep.quadratically_generated =
        t.coarse_at(1, 3) == 0 && t.coarse_at(1, 2) == rep.quadrics;

    rep.applicable = rep.quadratically_generated && rep.two_lp == 2;
    if (rep.quadratically_generated && rep.two_lp >= 2) {
        auto w = find_variable_scroll(qsys, 3);
        rep.witness_found = w.has_value();
        if (w)
            for (std::size_t i = 0; i < 2; ++i) {
                std::string row;
                for (std::size_t j = 0; j < w->cols(); ++j)
                    row += (j ? " " : "") + w->at(i, j).str();
                rep.witness_rows.push_back(row);
            }
    }
    if (!rep.applicable)
        rep.status = "not applicable";
    else
        rep.status = rep.witness_found ? "conjecture-verified" : "witness-not-found";
    return rep;
}

// ---- small pseudomanifold scan ----

namespace {

// consistent orientation of a pure 2-complex whose edges each lie in two
// facets; returns oriented facets or nullopt when nonorientable/disconnected
std::optional<std::vector<std::vector<int>>> orient_facets(
    const std::vector<std::array<int, 3>>& tris) {
    std::size_t m = tris.size();
    // adjacency via shared edges
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            int shared = 0;
            for (int u : tris[i])
                for (int v : tris[j])
                    if (u == v) ++shared;
            if (shared == 2) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    // sign +1: (a,b,c); sign -1: (a,c,b). A facet traverses its edges
    // a->b->c->a (or reversed); adjacent facets must traverse the shared
    // edge in opposite directions.
    auto direction = [&](std::size_t t, int sign, int u, int v) {
        // +1 if the oriented triangle traverses u->v, -1 if v->u
        const auto& tr = tris[t];
        int iu = -1, iv = -1;
        for (int k = 0; k < 3; ++k) {
            if (tr[k] == u) iu = k;
            if (tr[k] == v) iv = k;
        }
        int fwd = ((iu + 1) % 3 == iv) ? 1 : -1; // in the (a,b,c) order
        return fwd * sign;
    };
    std::vector<int> sign(m, 0);
    std::vector<std::size_t> stack = {0};
    sign[0] = 1;
    std::size_t seen = 1;
    while (!stack.empty()) {
        std::size_t t = stack.back();
        stack.pop_back();
        for (std::size_t u : adj[t]) {
            // shared edge
            int e0 = -1, e1 = -1;
            for (int x : tris[t])
                for (int y : tris[u])
                    if (x == y) (e0 < 0 ? e0 : e1) = x;
            int need = -direction(t, sign[t], e0, e1);
            if (sign[u] == 0) {
                sign[u] = direction(u, 1, e0, e1) == need ? 1 : -1;
                stack.push_back(u);
                ++seen;
            } else if (direction(u, sign[u], e0, e1) != need) {
                return std::nullopt; // nonorientable
            }
        }
    }
    if (seen != m) return std::nullopt; // dual graph disconnected
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& t = tris[i];
        if (sign[i] > 0)
            out.push_back({t[0], t[1], t[2]});
        else
            out.push_back({t[0], t[2], t[1]});
    }
    return out;
}

} // namespace

PseudomanifoldScanReport small_pseudomanifold_scan(int max_vertices, const Field& f) {
    PseudomanifoldScanReport report;
    std::map<std::string, std::size_t> seen; // canonical form -> entry index

    for (int d = 4; d <= max_vertices; ++d) {
        std::vector<std::array<int, 3>> tris;
        for (int a = 1; a <= d; ++a)
            for (int b = a + 1; b <= d; ++b)
                for (int c = b + 1; c <= d; ++c) tris.push_back({a, b, c});
        std::size_t t = tris.size();
        // edge ids
        auto eid = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            return (u - 1) * d + (v - 1);
        };
        std::vector<std::array<int, 3>> tri_edges(t);
        for (std::size_t i = 0; i < t; ++i)
            tri_edges[i] = {eid(tris[i][0], tris[i][1]), eid(tris[i][0], tris[i][2]),
                            eid(tris[i][1], tris[i][2])};

        std::vector<int> edge_count((std::size_t)d * d, 0);
        for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
            // every included edge in exactly two facets, all vertices used
            std::fill(edge_count.begin(), edge_count.end(), 0);
            int vtx_used = 0;
            bool bad = false;
            for (std::size_t i = 0; i < t && !bad; ++i) {
                if (!(mask >> i & 1)) continue;
                for (int e : tri_edges[i])
                    if (++edge_count[(std::size_t)e] > 2) bad = true;
                for (int v : tris[i]) vtx_used |= 1 << v;
            }
            if (bad) continue;
            for (std::size_t e = 0; e < edge_count.size(); ++e)
                if (edge_count[e] == 1) bad = true;
            if (bad) continue;
            bool all_vertices = true;
            for (int v = 1; v <= d; ++v)
                if (!(vtx_used >> v & 1)) all_vertices = false;
            if (!all_vertices) continue;

            std::vector<std::array<int, 3>> chosen;
            for (std::size_t i = 0; i < t; ++i)
                if (mask >> i & 1) chosen.push_back(tris[i]);
            auto oriented = orient_facets(chosen);
            if (!oriented) continue;

            OrientedComplex c(d, *oriented);
            if (!validate_pseudomanifold(c).ok()) continue;
            std::string key = canonical_form(c);
            auto it = seen.find(key);
            if (it != seen.end()) {
                ++report.entries[it->second].labelings;
                continue;
            }

            PseudomanifoldScanEntry entry{c, 1, {}, 0, 0, false, false};
            auto J = pseudomanifold_ideal(c, f);
            auto qsys = QuadraticSystem::from_ideal(J);
            entry.strand = koszul_strand_betti(qsys, 6);
            entry.two_lp = two_lp(qsys, 6);

            // bipyramid certificates: minors are fine-degree-balanced
            // binomials, hence lie in the ambient toric ideal; the 2 x (k+1)
            // matrices have pairwise distinct variable entries and are
            // 1-generic, so k >= n yields the conjectured witness
            for (const auto& cert : bipyramid_scan(c, f))
                entry.max_bipyramid_k =
                    std::max(entry.max_bipyramid_k, cert.matrix.cols() - 1);
            std::size_t n = entry.two_lp;
            if (n >= 2) {
                // scroll search against the toric ideal's quadric span
                RingPtr RA = configuration_ring(
                    configuration_from_weights(weight_configuration(c)), f);
                QuadraticSystem toric(RA, toric_quadrics(RA));
                entry.scroll_found = find_variable_scroll(toric, n + 1).has_value();
                entry.counterexample = !entry.scroll_found && entry.max_bipyramid_k < n;
            }
            if (entry.counterexample) ++report.counterexamples;
            seen[key] = report.entries.size();
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

} // namespace syz
