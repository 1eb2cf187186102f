#include "syz/toricbetti.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace syz {

PointConfiguration::PointConfiguration(std::size_t ambient, std::vector<Multidegree> columns,
                                       std::vector<std::string> names)
    : p_(ambient), cols_(std::move(columns)), names_(std::move(names)) {
    for (const auto& c : cols_)
        if (c.size() != p_) throw std::invalid_argument("column dimension mismatch");
    std::set<Multidegree> distinct(cols_.begin(), cols_.end());
    if (distinct.size() != cols_.size())
        throw std::invalid_argument("configuration columns must be distinct");
    if (!names_.empty() && names_.size() != cols_.size())
        throw std::invalid_argument("name count mismatch");
    if (names_.empty())
        for (std::size_t i = 0; i < cols_.size(); ++i)
            names_.push_back("x" + std::to_string(i + 1));

    // grading vector: solve A^T omega = (1,...,1) over Q
    if (!cols_.empty() && p_ > 0) {
        Field q = Field::rationals();
        ExactMatrix at(q, cols_.size(), p_);
        for (std::size_t r = 0; r < cols_.size(); ++r)
            for (std::size_t c = 0; c < p_; ++c)
                at.at(r, c) = Scalar::from_int(q, cols_[r][c]);
        std::vector<Scalar> ones(cols_.size(), Scalar::one(q));
        std::vector<Scalar> x;
        if (solve(at, ones, x)) {
            graded_ = true;
            for (const auto& v : x) omega_.push_back(v.rational());
        }
    }
}

long PointConfiguration::level_of(const Multidegree& m) const {
    if (!graded_) throw std::logic_error("configuration is not graded");
    if (m.size() != p_) throw std::invalid_argument("multidegree dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t c = 0; c < p_; ++c) acc += omega_[c] * (long)m[c];
    if (acc.get_den() != 1) throw std::invalid_argument("non-integral level");
    if (!acc.get_num().fits_slong_p()) throw std::overflow_error("level overflow");
    return acc.get_num().get_si();
}

PointConfiguration configuration_from_weights(const WeightedConfig& w) {
    return PointConfiguration(w.ambient, w.columns, w.names);
}

std::vector<Multidegree> integer_kernel_basis(const PointConfiguration& a) {
    std::size_t q = a.size(), p = a.ambient();
    // M = [A^T | I], integer row reduction; rows with zero A^T part carry a
    // lattice basis of ker_Z(A) in the identity part
    std::vector<std::vector<mpz_class>> m(q, std::vector<mpz_class>(p + q, 0));
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < p; ++c) m[r][c] = a.columns()[r][c];
        m[r][p + r] = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < p && row < q; ++col) {
        while (true) {
            // pivot: nonzero entry of least absolute value at or below `row`
            std::size_t best = q;
            for (std::size_t r = row; r < q; ++r) {
                if (m[r][col] == 0) continue;
                if (best == q || mpz_cmpabs(m[r][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0)
                    best = r;
            }
            if (best == q) break;
            std::swap(m[best], m[row]);
            bool clean = true;
            for (std::size_t r = row + 1; r < q; ++r) {
                if (m[r][col] == 0) continue;
                mpz_class f = m[r][col] / m[row][col]; // truncated
                if (f != 0)
                    for (std::size_t c = col; c < p + q; ++c) m[r][c] -= f * m[row][c];
                if (m[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[row][col] != 0) ++row;
    }
    std::vector<Multidegree> out;
    for (std::size_t r = row; r < q; ++r) {
        Multidegree v(q);
        for (std::size_t c = 0; c < q; ++c) {
            if (!m[r][p + c].fits_slong_p()) throw std::overflow_error("kernel entry overflow");
            v[c] = m[r][p + c].get_si();
        }
        out.push_back(std::move(v));
    }
    return out;
}

RingPtr configuration_ring(const PointConfiguration& a, const Field& f) {
    std::vector<VarInfo> vars;
    for (std::size_t i = 0; i < a.size(); ++i) vars.push_back({a.names()[i], VarRole::Aux, {}});
    auto ring = std::make_shared<RingSpec>(f, std::move(vars));
    ring->set_fine_grading(a.columns());
    return ring;
}

std::vector<MultiPoly> toric_quadrics(const RingPtr& R) {
    if (!R->has_fine_grading()) throw std::invalid_argument("toric_quadrics needs a fine grading");
    const Field& f = R->field();
    std::map<Multidegree, std::vector<Exponent>> fibers;
    for (const auto& e : monomials_of_degree(R->nvars(), 2)) fibers[R->fine_degree(e)].push_back(e);
    std::vector<MultiPoly> out;
    for (const auto& [deg, mons] : fibers)
        for (std::size_t i = 1; i < mons.size(); ++i)
            out.push_back(MultiPoly::monomial(R, mons[0], Scalar::one(f)) -
                          MultiPoly::monomial(R, mons[i], Scalar::one(f)));
    return out;
}

PolyIdeal toric_ideal(const PointConfiguration& a, const Field& f) {
    if (!a.graded()) throw std::invalid_argument("toric_ideal needs a graded configuration");
    RingPtr R = configuration_ring(a, f);

    std::vector<MultiPoly> gens;
    for (const auto& v : integer_kernel_basis(a)) {
        Exponent plus(a.size(), 0), minus(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (v[i] > 0) plus[i] = (std::int32_t)v[i];
            if (v[i] < 0) minus[i] = (std::int32_t)(-v[i]);
        }
        gens.push_back(MultiPoly::monomial(R, plus, Scalar::one(f)) -
                       MultiPoly::monomial(R, minus, Scalar::one(f)));
    }
    PolyIdeal lattice(R, std::move(gens));
    Exponent all(a.size(), 1);
    return saturate(lattice, MultiPoly::monomial(R, all, Scalar::one(f)));
}

SemigroupLevels::SemigroupLevels(const PointConfiguration& a, long tmax)
    : a_(a), tmax_(tmax) {
    if (!a.graded()) throw std::invalid_argument("semigroup levels need a graded configuration");
    if (tmax < 0) throw std::invalid_argument("negative level bound");
    levels_.resize(tmax + 1);
    levels_[0].insert(Multidegree(a.ambient(), 0));
    for (long t = 1; t <= tmax; ++t)
        for (const auto& m : levels_[t - 1])
            for (const auto& col : a.columns()) {
                Multidegree s = m;
                for (std::size_t c = 0; c < s.size(); ++c) s[c] += col[c];
                levels_[t].insert(std::move(s));
            }
}

const std::set<Multidegree>& SemigroupLevels::level(long t) const {
    if (t < 0 || t > tmax_) throw std::out_of_range("level out of range");
    return levels_[(std::size_t)t];
}

bool SemigroupLevels::contains(const Multidegree& m) const {
    long t;
    try {
        t = a_.level_of(m);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (t < 0) return false;
    if (t > tmax_) throw std::logic_error("semigroup levels not computed far enough");
    return levels_[(std::size_t)t].count(m) > 0;
}

OrientedComplex fiber_complex(const PointConfiguration& a, const Multidegree& m,
                              const SemigroupLevels& levels) {
    std::size_t q = a.size();
    if (q > 31) throw std::invalid_argument("fiber complex limited to 31 columns");
    if (!levels.contains(m)) return OrientedComplex((int)q, {});
    auto minus = [&](const Multidegree& s, std::size_t i) {
        Multidegree r = s;
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= a.columns()[i][c];
        return r;
    };
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < q; ++i)
        if (levels.contains(minus(m, i))) verts.push_back(i);
    if (verts.empty()) return OrientedComplex((int)q, {{}});

    // enumerate all faces as bitmasks (downward-closed by the semigroup
    // property, so DFS over increasing indices covers everything)
    std::unordered_set<std::uint32_t> faces;
    faces.insert(0);
    std::function<void(std::uint32_t, const Multidegree&, std::size_t)> rec =
        [&](std::uint32_t mask, const Multidegree& rem, std::size_t from) {
            for (std::size_t t = from; t < verts.size(); ++t) {
                Multidegree r = minus(rem, verts[t]);
                if (!levels.contains(r)) continue;
                std::uint32_t nm = mask | (1u << verts[t]);
                faces.insert(nm);
                if (faces.size() > 4000000)
                    throw std::runtime_error("fiber complex too large");
                rec(nm, r, t + 1);
            }
        };
    rec(0, m, 0);

    std::vector<std::vector<int>> facets;
    for (auto mask : faces) {
        bool maximal = true;
        for (auto v : verts)
            if (!(mask & (1u << v)) && faces.count(mask | (1u << v))) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<int> f;
        for (std::size_t v = 0; v < q; ++v)
            if (mask & (1u << v)) f.push_back((int)v + 1);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    return OrientedComplex((int)q, std::move(facets));
}

void BettiTable::add(long i, const Multidegree& m, long coarse_degree, std::size_t dim) {
    if (dim == 0) return;
    fine[{i, m}] += dim;
    coarse[{i, coarse_degree}] += dim;
}

std::size_t BettiTable::coarse_at(long i, long j) const {
    auto it = coarse.find({i, j});
    return it == coarse.end() ? 0 : it->second;
}

long BettiTable::max_index() const {
    long mi = 0;
    for (const auto& [k, v] : coarse)
        if (v > 0) mi = std::max(mi, k.first);
    return mi;
}

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> t((std::size_t)max_index() + 1, 0);
    for (const auto& [k, v] : coarse) t[(std::size_t)k.first] += v;
    return t;
}

std::string BettiTable::diagram() const {
    long imax = max_index();
    long rmax = 0;
    for (const auto& [k, v] : coarse)
        if (v > 0) rmax = std::max(rmax, k.second - k.first);
    std::ostringstream os;
    os << "total:";
    for (auto t : totals()) os << " " << t;
    os << "\n";
    for (long r = 0; r <= rmax; ++r) {
        os << r << ":";
        for (long i = 0; i <= imax; ++i) {
            std::size_t v = coarse_at(i, i + r);
            if (v == 0)
                os << " --";
            else
                os << " " << v;
        }
        os << "\n";
    }
    return os.str();
}

BettiTable hochster_betti(const PointConfiguration& a, long max_coarse_degree,
                          const Field& f) {
    if (!a.graded()) throw std::invalid_argument("hochster_betti needs a graded configuration");
    BettiTable table;
    table.bound = max_coarse_degree;
    table.add(0, Multidegree(a.ambient(), 0), 0, 1);
    SemigroupLevels levels(a, max_coarse_degree);
    for (long t = 2; t <= max_coarse_degree; ++t) {
        for (const auto& m : levels.level(t)) {
            OrientedComplex delta = fiber_complex(a, m, levels);
            if (delta.is_void() || delta.facets().empty()) continue;
            // universal vertex: cone, acyclic
            const auto& facets = delta.facets();
            bool cone = false;
            if (!facets.empty() && !facets[0].empty()) {
                for (int v : facets[0]) {
                    bool universal = true;
                    for (const auto& fc : facets)
                        if (!std::binary_search(fc.begin(), fc.end(), v)) {
                            universal = false;
                            break;
                        }
                    if (universal) {
                        cone = true;
                        break;
                    }
                }
            }
            if (cone) continue;
            auto h = homology_dims(delta, f);
            for (std::size_t j = 0; j < h.dims.size(); ++j)
                if (h.dims[j] > 0) table.add(1 + (long)j, m, t, h.dims[j]);
        }
    }
    return table;
}

PointConfiguration identify_vertices(const PointConfiguration& a, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("cannot identify a coordinate with itself");
    if (i < 1 || j < 1 || i >= a.ambient() || j >= a.ambient())
        throw std::invalid_argument("identify_vertices: coordinate out of range");
    std::vector<Multidegree> cols;
    std::vector<std::string> names;
    std::set<Multidegree> seen;
    for (std::size_t c = 0; c < a.size(); ++c) {
        Multidegree col = a.columns()[c];
        col[i] += col[j];
        col.erase(col.begin() + (long)j);
        if (!seen.insert(col).second) continue;
        cols.push_back(std::move(col));
        names.push_back(a.names()[c]);
    }
    return PointConfiguration(a.ambient() - 1, std::move(cols), std::move(names));
}

} // namespace syz
