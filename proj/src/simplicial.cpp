#include "syz/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace syz {

namespace {

// parity of the permutation sorting v; +1 even, -1 odd
int sort_parity(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
    return sign;
}

std::string face_str(const std::vector<int>& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "]";
}

} // namespace

OrientedComplex::OrientedComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : d_(vertex_count), facets_(std::move(facets)) {
    if (d_ < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::vector<int>> seen;
    n_ = -1;
    for (const auto& f : facets_) {
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > d_)
                throw std::invalid_argument("vertex label out of range in facet " + face_str(f));
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("repeated vertex in facet " + face_str(f));
        }
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate facet " + face_str(f));
        n_ = std::max(n_, (int)f.size() - 1);
    }
}

bool OrientedComplex::is_pure() const {
    for (const auto& f : facets_)
        if ((int)f.size() != n_ + 1) return false;
    return true;
}

std::vector<std::vector<int>> OrientedComplex::faces_of_dim(int j) const {
    std::set<std::vector<int>> out;
    for (const auto& f : facets_) {
        if ((int)f.size() < j + 1) continue;
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        // all (j+1)-subsets of s
        std::vector<int> idx(j + 1);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> face(j + 1);
            for (int k = 0; k <= j; ++k) face[k] = s[idx[k]];
            out.insert(std::move(face));
            int k = j;
            while (k >= 0 && idx[k] == (int)s.size() - (j + 1 - k)) --k;
            if (k < 0) break;
            ++idx[k];
            for (int t = k + 1; t <= j; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::size_t> OrientedComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int j = 0; j <= n_; ++j) f.push_back(faces_of_dim(j).size());
    return f;
}

bool OrientedComplex::has_face(const std::vector<int>& sorted_vertices) const {
    for (const auto& f : facets_) {
        if (f.size() < sorted_vertices.size()) continue;
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        if (std::includes(s.begin(), s.end(), sorted_vertices.begin(), sorted_vertices.end()))
            return true;
    }
    return false;
}

PseudomanifoldReport validate_pseudomanifold(const OrientedComplex& c) {
    PseudomanifoldReport rep;
    rep.is_pure = c.is_pure() && !c.is_void() && c.dimension() >= 0;
    if (!rep.is_pure) {
        rep.failing_witness = "complex is not pure of positive size";
        return rep;
    }
    int n = c.dimension();
    const auto& facets = c.facets();

    // ridge -> list of (facet index, induced sign)
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> ridges;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        std::vector<int> s = facets[fi];
        int parity = sort_parity(s);
        std::sort(s.begin(), s.end());
        for (int k = 0; k <= n; ++k) {
            std::vector<int> r;
            for (int t = 0; t <= n; ++t)
                if (t != k) r.push_back(s[t]);
            int sign = (k % 2 == 0 ? 1 : -1) * parity;
            ridges[r].emplace_back(fi, sign);
        }
    }
    rep.ridge_condition = true;
    rep.orientations_cancel = true;
    for (const auto& [r, occ] : ridges) {
        if (occ.size() != 2) {
            rep.ridge_condition = false;
            if (!rep.failing_witness)
                rep.failing_witness = "ridge " + face_str(r) + " lies in " +
                                      std::to_string(occ.size()) + " facets";
        } else if (occ[0].second + occ[1].second != 0) {
            rep.orientations_cancel = false;
            if (!rep.failing_witness)
                rep.failing_witness = "orientations do not cancel across ridge " + face_str(r);
        }
    }

    // dual graph connectivity
    std::vector<std::vector<std::size_t>> adj(facets.size());
    for (const auto& [r, occ] : ridges)
        for (std::size_t a = 0; a < occ.size(); ++a)
            for (std::size_t b = a + 1; b < occ.size(); ++b) {
                adj[occ[a].first].push_back(occ[b].first);
                adj[occ[b].first].push_back(occ[a].first);
            }
    std::vector<char> seen(facets.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t cnt = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++cnt;
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    rep.strongly_connected = cnt == facets.size();
    if (!rep.strongly_connected && !rep.failing_witness)
        rep.failing_witness = "dual graph is disconnected";
    return rep;
}

ExactMatrix boundary_matrix(const OrientedComplex& c, int j, const Field& f) {
    if (j < 0 || j > std::max(c.dimension(), 0))
        throw std::out_of_range("boundary dimension out of range");
    auto cols_faces = c.faces_of_dim(j);
    if (j == 0) {
        ExactMatrix m(f, 1, cols_faces.size());
        for (std::size_t i = 0; i < cols_faces.size(); ++i)
            m.at(0, i) = Scalar::one(f);
        return m;
    }
    auto rows_faces = c.faces_of_dim(j - 1);
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < rows_faces.size(); ++i) row_of[rows_faces[i]] = i;

    // parity sign for columns at facet level (orientation of the listed order)
    std::map<std::vector<int>, int> col_sign;
    if (j == c.dimension())
        for (const auto& fac : c.facets()) {
            if ((int)fac.size() != j + 1) continue;
            std::vector<int> s = fac;
            int parity = sort_parity(s);
            std::sort(s.begin(), s.end());
            col_sign[s] = parity;
        }

    ExactMatrix m(f, rows_faces.size(), cols_faces.size());
    for (std::size_t ci = 0; ci < cols_faces.size(); ++ci) {
        const auto& face = cols_faces[ci];
        int base = 1;
        auto it = col_sign.find(face);
        if (it != col_sign.end()) base = it->second;
        for (int k = 0; k <= j; ++k) {
            std::vector<int> r;
            for (int t = 0; t <= j; ++t)
                if (t != k) r.push_back(face[t]);
            int sign = base * (k % 2 == 0 ? 1 : -1);
            m.at(row_of.at(r), ci) = Scalar::from_int(f, sign);
        }
    }
    return m;
}

HomologyDims homology_dims(const OrientedComplex& c, const Field& f) {
    HomologyDims h;
    if (c.is_void()) return h;
    if (c.dimension() < 0) { // only the empty face
        h.h_minus_one = 1;
        return h;
    }
    int n = c.dimension();
    std::vector<std::size_t> nfaces(n + 1), rk(n + 2, 0);
    for (int j = 0; j <= n; ++j) {
        nfaces[j] = c.faces_of_dim(j).size();
        auto m = boundary_matrix(c, j, f);
        // sparse rank (boundary matrices are very sparse)
        std::vector<SparseRow> rows(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t cidx = 0; cidx < m.cols(); ++cidx)
                if (!m.at(r, cidx).is_zero())
                    rows[r].emplace_back((std::int32_t)cidx, m.at(r, cidx));
        // rank of the transpose equals rank
        rk[j] = sparse_rank(f, rows, m.cols());
    }
    h.dims.resize(n + 1);
    for (int j = 0; j <= n; ++j)
        h.dims[j] = nfaces[j] - rk[j] - rk[j + 1];
    return h;
}

OrientedComplex alexander_dual(const OrientedComplex& c) {
    int d = c.vertex_count();
    if (d > 22) throw std::invalid_argument("alexander_dual: vertex count too large");
    std::uint32_t full = d == 32 ? 0xffffffffu : ((1u << d) - 1);
    // face bitmask set of c (downward closure of facets)
    std::vector<char> is_face(full + 1, 0);
    bool has_any = !c.is_void();
    if (has_any) is_face[0] = 1;
    for (const auto& fac : c.facets()) {
        std::uint32_t m = 0;
        for (int v : fac) m |= 1u << (v - 1);
        // all subsets of m
        std::uint32_t s = m;
        while (true) {
            is_face[s] = 1;
            if (s == 0) break;
            s = (s - 1) & m;
        }
    }
    // dual faces: complements of non-faces
    std::vector<char> dual(full + 1, 0);
    for (std::uint32_t g = 0; g <= full; ++g)
        if (!is_face[g]) dual[full ^ g] = 1;
    // maximal ones
    std::vector<std::vector<int>> facets;
    bool dual_nonvoid = false;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!dual[m]) continue;
        dual_nonvoid = true;
        bool maximal = true;
        for (int v = 0; v < d && maximal; ++v)
            if (!(m & (1u << v)) && dual[m | (1u << v)]) maximal = false;
        if (!maximal) continue;
        std::vector<int> fac;
        for (int v = 0; v < d; ++v)
            if (m & (1u << v)) fac.push_back(v + 1);
        facets.push_back(std::move(fac));
    }
    if (dual_nonvoid && facets.size() == 1 && facets[0].empty())
        return OrientedComplex(d, {{}});
    if (!dual_nonvoid) return OrientedComplex(d, {});
    // drop the empty facet if a nonempty one exists
    facets.erase(std::remove_if(facets.begin(), facets.end(),
                                [](const std::vector<int>& f) { return f.empty(); }),
                 facets.end());
    return OrientedComplex(d, std::move(facets));
}

// ---- catalog ----

OrientedComplex cycle_complex(int d) {
    if (d < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < d; ++i) facets.push_back({i, i + 1});
    facets.push_back({d, 1});
    return OrientedComplex(d, std::move(facets));
}

OrientedComplex simplex_boundary(int k) {
    if (k < 1) throw std::invalid_argument("simplex boundary needs k >= 1");
    std::vector<std::vector<int>> facets;
    for (int omit = 0; omit <= k; ++omit) {
        std::vector<int> f;
        for (int v = 0; v <= k; ++v)
            if (v != omit) f.push_back(v + 1);
        if (omit % 2 == 1 && f.size() >= 2) std::swap(f[0], f[1]);
        facets.push_back(std::move(f));
    }
    return OrientedComplex(k + 1, std::move(facets));
}

OrientedComplex bipyramid(const OrientedComplex& base) {
    if (base.is_void() || !base.is_pure())
        throw std::invalid_argument("bipyramid needs a pure nonvoid base");
    int d = base.vertex_count();
    std::vector<std::vector<int>> facets;
    for (const auto& f : base.facets()) {
        std::vector<int> up = f;
        up.push_back(d + 1);
        facets.push_back(std::move(up));
        std::vector<int> down = f;
        if (down.size() >= 2) std::swap(down[0], down[1]);
        down.push_back(d + 2);
        facets.push_back(std::move(down));
    }
    return OrientedComplex(d + 2, std::move(facets));
}

OrientedComplex octahedron_complex() { return bipyramid(cycle_complex(4)); }

std::string canonical_form(const OrientedComplex& c) {
    int d = c.vertex_count();
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::string best;
    do {
        std::set<std::vector<int>> relabeled;
        for (const auto& f : c.facets()) {
            std::vector<int> g;
            for (int v : f) g.push_back(perm[v - 1]);
            std::sort(g.begin(), g.end());
            relabeled.insert(std::move(g));
        }
        std::string s;
        for (const auto& f : relabeled) s += face_str(f);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// orient a pure 2-dimensional facet set consistently; returns empty on failure
std::vector<std::vector<int>> orient_surface(const std::vector<std::vector<int>>& tris) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> edge_facets;
    auto edges_of = [](const std::vector<int>& t) {
        return std::vector<std::pair<int, int>>{
            {std::min(t[0], t[1]), std::max(t[0], t[1])},
            {std::min(t[0], t[2]), std::max(t[0], t[2])},
            {std::min(t[1], t[2]), std::max(t[1], t[2])}};
    };
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (auto e : edges_of(tris[i])) edge_facets[e].push_back(i);
    // orientation sign per facet relative to the sorted listing
    std::vector<int> sign(tris.size(), 0);
    // directed-edge occurrence of sorted triangle t with sign s: edge (a,b)
    // appears with coefficient from the boundary formula
    auto edge_sign = [](const std::vector<int>& t, const std::pair<int, int>& e) {
        // t sorted {a<b<c}: boundary = (b,c) - (a,c) + (a,b)
        if (e.first == t[1] && e.second == t[2]) return 1;
        if (e.first == t[0] && e.second == t[2]) return -1;
        return 1; // (a,b)
    };
    for (std::size_t start = 0; start < tris.size(); ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (auto e : edges_of(tris[i])) {
                const auto& occ = edge_facets[e];
                if (occ.size() != 2) return {};
                std::size_t j = occ[0] == i ? occ[1] : occ[0];
                int need = -sign[i] * edge_sign(tris[i], e) / edge_sign(tris[j], e);
                if (sign[j] == 0) {
                    sign[j] = need;
                    stack.push_back(j);
                } else if (sign[j] != need) {
                    return {};
                }
            }
        }
    }
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        std::vector<int> t = tris[i];
        if (sign[i] < 0) std::swap(t[0], t[1]);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::vector<OrientedComplex> sphere7_list() {
    // all 3-subsets of {1..7}
    std::vector<std::vector<int>> tris;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c) tris.push_back({a, b, c});
    auto edge_id = [](int a, int b) { return a * 8 + b; };

    std::vector<OrientedComplex> found;
    std::set<std::string> seen;
    std::vector<std::size_t> chosen;
    std::vector<int> edge_cnt(64, 0);
    int odd_edges = 0, used_edges = 0;
    auto bump = [&](int e, int delta) {
        if (delta > 0) {
            if (edge_cnt[e] == 0) ++used_edges;
            odd_edges += edge_cnt[e] == 0 ? 1 : -1;
        } else {
            odd_edges += edge_cnt[e] == 2 ? 1 : -1;
            if (edge_cnt[e] == 1) --used_edges;
        }
        edge_cnt[e] += delta;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (used_edges > 15) return;
        if (odd_edges > 3 * (int)(10 - chosen.size())) return;
        if (chosen.size() == 10) {
            if (odd_edges != 0) return;
            std::vector<std::vector<int>> fac;
            for (auto i : chosen) fac.push_back(tris[i]);
            auto oriented = orient_surface(fac);
            if (oriented.empty()) return;
            OrientedComplex c(7, oriented);
            if (c.f_vector() != std::vector<std::size_t>{7, 15, 10}) return;
            auto rep = validate_pseudomanifold(c);
            if (!rep.ok()) return;
            auto h = homology_dims(c, Field::prime(32003));
            if (h.dims != std::vector<std::size_t>{0, 0, 1}) return;
            auto key = canonical_form(c);
            if (seen.insert(key).second) found.push_back(std::move(c));
            return;
        }
        if (next >= tris.size()) return;
        if (tris.size() - next < 10 - chosen.size()) return;
        // option 1: take tris[next] if no edge exceeds 2
        const auto& t = tris[next];
        int e1 = edge_id(t[0], t[1]), e2 = edge_id(t[0], t[2]), e3 = edge_id(t[1], t[2]);
        if (edge_cnt[e1] < 2 && edge_cnt[e2] < 2 && edge_cnt[e3] < 2) {
            bump(e1, 1); bump(e2, 1); bump(e3, 1);
            chosen.push_back(next);
            rec(next + 1);
            chosen.pop_back();
            bump(e1, -1); bump(e2, -1); bump(e3, -1);
        }
        // option 2: skip, unless skipping strands a half-open edge forever
        // (cheap prune: a triangle containing vertex 1 must eventually cover
        // its edges; we rely on the count prune only)
        rec(next + 1);
    };
    // symmetry breaking: by relabeling, facet {1,2,3} can be assumed present
    chosen.push_back(0);
    bump(edge_id(1, 2), 1);
    bump(edge_id(1, 3), 1);
    bump(edge_id(2, 3), 1);
    rec(1);
    std::sort(found.begin(), found.end(), [](const OrientedComplex& a, const OrientedComplex& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return found;
}

OrientedComplex catalog(const std::string& name, const std::vector<int>& params) {
    if (name == "cycle") {
        if (params.size() != 1) throw std::invalid_argument("cycle needs one parameter");
        return cycle_complex(params[0]);
    }
    if (name == "simplex_boundary") {
        if (params.size() != 1) throw std::invalid_argument("simplex_boundary needs one parameter");
        return simplex_boundary(params[0]);
    }
    if (name == "octahedron") return octahedron_complex();
    if (name == "bipyramid") {
        if (params.size() != 1) throw std::invalid_argument("bipyramid needs the base cycle size");
        return bipyramid(cycle_complex(params[0]));
    }
    throw std::invalid_argument("unknown catalog complex '" + name + "'");
}

} // namespace syz
