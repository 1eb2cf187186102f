#include "syz/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace syz {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

long exp_deg(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0L); }

// polynomial with terms sorted descending under the active order
struct OrdPoly {
    std::vector<Term> terms;
    bool empty() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
};

OrdPoly to_ord(const MultiPoly& p, const MonomialOrder& ord) {
    OrdPoly o{p.terms()};
    std::sort(o.terms.begin(), o.terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.exp, b.exp) > 0;
    });
    return o;
}

MultiPoly from_ord(const RingPtr& ring, const OrdPoly& p) {
    return MultiPoly(ring, p.terms);
}

// merge r += c * shift(g by m), both sorted
void axpy_shift(OrdPoly& r, const Scalar& c, const Exponent& m, const OrdPoly& g,
                const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(r.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < r.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            out.push_back(std::move(r.terms[i++]));
            continue;
        }
        Exponent ge = g.terms[j].exp;
        for (std::size_t k = 0; k < ge.size(); ++k) ge[k] += m[k];
        if (i == r.terms.size()) {
            out.push_back({std::move(ge), c * g.terms[j].coeff});
            ++j;
            continue;
        }
        int cmp = ord.compare(r.terms[i].exp, ge);
        if (cmp > 0) {
            out.push_back(std::move(r.terms[i++]));
        } else if (cmp < 0) {
            out.push_back({std::move(ge), c * g.terms[j].coeff});
            ++j;
        } else {
            Scalar v = r.terms[i].coeff + c * g.terms[j].coeff;
            if (!v.is_zero()) out.push_back({r.terms[i].exp, v});
            ++i;
            ++j;
        }
    }
    // drop exact zeros already handled
    r.terms = std::move(out);
}

// full reduction of p by basis; returns normal form
OrdPoly reduce_full(OrdPoly p, const std::vector<OrdPoly>& basis, const MonomialOrder& ord) {
    std::vector<Term> tail;
    while (!p.empty()) {
        const Term& t = p.lead();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (divides(g.lead().exp, t.exp)) {
                Scalar c = -(t.coeff / g.lead().coeff);
                axpy_shift(p, c, exp_sub(t.exp, g.lead().exp), g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    return OrdPoly{std::move(tail)};
}

struct Pair {
    std::size_t i, j;
    Exponent lcm;
    long sugar;
};

std::vector<OrdPoly> buchberger(std::vector<OrdPoly> basis, const MonomialOrder& ord) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const OrdPoly& p) { return p.empty(); }),
                basis.end());
    std::vector<long> sugar(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        long d = 0;
        for (const auto& t : basis[i].terms) d = std::max(d, exp_deg(t.exp));
        sugar[i] = d;
    }
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        Exponent l = exp_lcm(basis[i].lead().exp, basis[j].lead().exp);
        long s = std::max(sugar[i] + exp_deg(l) - exp_deg(basis[i].lead().exp),
                          sugar[j] + exp_deg(l) - exp_deg(basis[j].lead().exp));
        pairs.push_back({i, j, std::move(l), s});
        pending.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    while (!pairs.empty()) {
        // sugar strategy: smallest sugar, then smallest lcm in the order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].sugar < pairs[best].sugar ||
                (pairs[k].sugar == pairs[best].sugar &&
                 ord.compare(pairs[k].lcm, pairs[best].lcm) < 0))
                best = k;
        }
        Pair pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + (long)best);
        pending.erase({pr.i, pr.j});

        const Exponent& li = basis[pr.i].lead().exp;
        const Exponent& lj = basis[pr.j].lead().exp;
        // first Buchberger criterion: coprime leads
        {
            bool coprime = true;
            for (std::size_t k = 0; k < li.size(); ++k)
                if (li[k] > 0 && lj[k] > 0) {
                    coprime = false;
                    break;
                }
            if (coprime) continue;
        }
        // chain criterion
        {
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j || basis[k].empty()) continue;
                if (!divides(basis[k].lead().exp, pr.lcm)) continue;
                auto key1 = std::minmax(pr.i, k);
                auto key2 = std::minmax(pr.j, k);
                if (!pending.count({key1.first, key1.second}) &&
                    !pending.count({key2.first, key2.second}))
                    skip = true;
            }
            if (skip) continue;
        }
        // s-polynomial
        OrdPoly s;
        axpy_shift(s, basis[pr.j].lead().coeff, exp_sub(pr.lcm, li), basis[pr.i], ord);
        axpy_shift(s, -basis[pr.i].lead().coeff, exp_sub(pr.lcm, lj), basis[pr.j], ord);
        OrdPoly nf = reduce_full(std::move(s), basis, ord);
        if (nf.empty()) continue;
        std::size_t idx = basis.size();
        basis.push_back(std::move(nf));
        sugar.push_back(pr.sugar);
        for (std::size_t i = 0; i < idx; ++i)
            if (!basis[i].empty()) add_pair(i, idx);
    }
    return basis;
}

std::vector<OrdPoly> interreduce(std::vector<OrdPoly> basis, const MonomialOrder& ord) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<OrdPoly> min;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].empty()) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].empty()) continue;
            if (divides(basis[j].lead().exp, basis[i].lead().exp)) {
                if (basis[j].lead().exp != basis[i].lead().exp || j < i)
                    redundant = true;
            }
        }
        if (!redundant) min.push_back(basis[i]);
    }
    // tail-reduce each against the others; make monic
    std::vector<OrdPoly> out(min.size());
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<OrdPoly> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        OrdPoly r = reduce_full(min[i], others, ord);
        Scalar inv = r.lead().coeff.inv();
        for (auto& t : r.terms) t.coeff = t.coeff * inv;
        out[i] = std::move(r);
    }
    std::sort(out.begin(), out.end(), [&](const OrdPoly& a, const OrdPoly& b) {
        return ord.compare(a.lead().exp, b.lead().exp) < 0;
    });
    return out;
}

} // namespace

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.ring().get() != ring_.get()) throw std::invalid_argument("ring mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (ring_->has_fine_grading()) {
        for (const auto& g : gens_)
            if (!g.fine_multidegree())
                throw std::invalid_argument("generator not homogeneous in the fine grading: " + g.str());
    }
}

std::vector<MultiPoly> buchberger_reduced(const std::vector<MultiPoly>& gens,
                                          const MonomialOrder& ord) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens[0].ring();
    std::vector<OrdPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(to_ord(g, ord));
    auto gb = interreduce(buchberger(std::move(basis), ord), ord);
    std::vector<MultiPoly> out;
    for (auto& g : gb) out.push_back(from_ord(ring, g));
    return out;
}

const std::vector<MultiPoly>& PolyIdeal::reduced_gb(const MonomialOrder& ord) const {
    auto key = ord.key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto gb = buchberger_reduced(gens_, ord);
    // sanity: every input generator must reduce to zero
    for (const auto& g : gens_)
        if (!normal_form(g, gb, ord).is_zero())
            throw std::logic_error("groebner basis does not contain its input");
    return cache_.emplace(key, std::move(gb)).first->second;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord) {
    std::vector<OrdPoly> b;
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(to_ord(g, ord));
    return from_ord(p.ring(), reduce_full(to_ord(p, ord), b, ord));
}

bool PolyIdeal::contains(const MultiPoly& p, const MonomialOrder& ord) const {
    if (p.is_zero()) return true;
    return normal_form(p, reduced_gb(ord), ord).is_zero();
}

bool PolyIdeal::is_unit() const {
    const auto& gb = reduced_gb();
    return gb.size() == 1 && gb[0].coarse_degree() == 0;
}

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b) {
    // structural ring comparison: same field, same variables in the same order
    if (a.ring().get() != b.ring().get()) {
        if (a.ring()->field() != b.ring()->field() ||
            a.ring()->nvars() != b.ring()->nvars())
            throw std::invalid_argument("ring mismatch");
        for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
            if (a.ring()->var(i).name != b.ring()->var(i).name)
                throw std::invalid_argument("ring mismatch");
    }
    const auto& ga = a.reduced_gb();
    const auto& gb = b.reduced_gb();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        const auto& ta = ga[i].terms();
        const auto& tb = gb[i].terms();
        if (ta.size() != tb.size()) return false;
        for (std::size_t t = 0; t < ta.size(); ++t)
            if (ta[t].exp != tb[t].exp || ta[t].coeff != tb[t].coeff) return false;
    }
    return true;
}

namespace {

// I : v^inf for a single variable, via grevlex with v smallest; valid for
// coarse-homogeneous ideals.
std::vector<MultiPoly> saturate_variable(const RingPtr& ring,
                                         const std::vector<MultiPoly>& gens,
                                         std::size_t v) {
    auto ord = MonomialOrder::grevlex_var_last(ring->nvars(), v);
    auto gb = buchberger_reduced(gens, ord);
    std::vector<MultiPoly> out;
    for (const auto& g : gb) {
        std::int32_t m = 0;
        bool first = true;
        for (const auto& t : g.terms()) {
            m = first ? t.exp[v] : std::min(m, t.exp[v]);
            first = false;
        }
        if (m == 0) {
            out.push_back(g);
            continue;
        }
        std::vector<Term> terms = g.terms();
        for (auto& t : terms) t.exp[v] -= m;
        out.push_back(MultiPoly(ring, std::move(terms)));
    }
    return out;
}

} // namespace

PolyIdeal saturate_by_elimination(const PolyIdeal& ideal, const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by zero");
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();
    std::vector<VarInfo> vars = ring->vars();
    vars.push_back({"@t", VarRole::Aux, {}});
    auto ext = std::make_shared<RingSpec>(ring->field(), std::move(vars));
    auto lift = [&](const MultiPoly& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Exponent e = t.exp;
            e.push_back(0);
            terms.push_back({std::move(e), t.coeff});
        }
        return MultiPoly(ext, std::move(terms));
    };
    std::vector<MultiPoly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(lift(g));
    // t*f - 1
    MultiPoly tf = lift(f) * MultiPoly::variable(ext, n);
    gens.push_back(tf - MultiPoly::constant(ext, Scalar::one(ring->field())));
    MonomialOrder ord = MonomialOrder::elimination(1);
    ord.priority.push_back(n);
    for (std::size_t i = 0; i < n; ++i) ord.priority.push_back(i);
    auto gb = buchberger_reduced(gens, ord);
    std::vector<MultiPoly> out;
    for (const auto& g : gb) {
        bool uses_t = false;
        for (const auto& t : g.terms())
            if (t.exp[n] != 0) uses_t = true;
        if (uses_t) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Exponent e = t.exp;
            e.pop_back();
            terms.push_back({std::move(e), t.coeff});
        }
        out.push_back(MultiPoly(ideal.ring(), std::move(terms)));
    }
    return PolyIdeal(ideal.ring(), std::move(out));
}

PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by zero");
    const RingPtr& ring = ideal.ring();
    bool homogeneous = true;
    for (const auto& g : ideal.generators())
        if (!g.is_coarse_homogeneous()) homogeneous = false;
    bool monomial_f = f.terms().size() == 1;
    if (homogeneous && monomial_f) {
        std::vector<MultiPoly> gens = ideal.generators();
        const Exponent& e = f.terms()[0].exp;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) gens = saturate_variable(ring, gens, v);
        return PolyIdeal(ring, buchberger_reduced(gens, MonomialOrder::grevlex()));
    }
    return saturate_by_elimination(ideal, f);
}

long krull_dimension(const PolyIdeal& ideal) {
    if (ideal.is_unit()) return kDimensionOfUnitIdeal;
    const auto& gb = ideal.reduced_gb();
    std::size_t n = ideal.ring()->nvars();
    // supports of the initial ideal's generators
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb) {
        const Exponent& l = g.lead(MonomialOrder::grevlex()).exp;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (l[i] > 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    // max |S| with no support contained in S: branch on excluding a variable
    // of the first fully-contained support
    long best = -1;
    std::vector<char> excluded(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t nexcluded) {
        if ((long)(n - nexcluded) <= best) return; // bound
        const std::vector<std::size_t>* bad = nullptr;
        for (const auto& s : supports) {
            bool contained = true;
            for (auto v : s)
                if (excluded[v]) {
                    contained = false;
                    break;
                }
            if (contained) {
                bad = &s;
                break;
            }
        }
        if (!bad) {
            best = std::max(best, (long)(n - nexcluded));
            return;
        }
        for (auto v : *bad) {
            excluded[v] = 1;
            rec(nexcluded + 1);
            excluded[v] = 0;
        }
    };
    rec(0);
    return best;
}

long codimension(const PolyIdeal& ideal) {
    long d = krull_dimension(ideal);
    if (d == kDimensionOfUnitIdeal) return (long)ideal.ring()->nvars();
    return (long)ideal.ring()->nvars() - d;
}

namespace {

void minimalize_monomials(std::vector<Exponent>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
        return exp_deg(a) < exp_deg(b);
    });
    std::vector<Exponent> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
}

void poly_sub_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long shift) {
    if (a.size() < b.size() + (std::size_t)shift) a.resize(b.size() + (std::size_t)shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + (std::size_t)shift] -= b[i];
}
void poly_add_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long shift) {
    if (a.size() < b.size() + (std::size_t)shift) a.resize(b.size() + (std::size_t)shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + (std::size_t)shift] += b[i];
}

std::vector<mpz_class> hilbert_rec(std::vector<Exponent> gens, std::size_t nvars) {
    minimalize_monomials(gens);
    if (gens.empty()) return {1};
    if (!gens.empty() && exp_deg(gens[0]) == 0) return {0}; // unit ideal
    // pure powers: product of (1 - t^a_i)
    bool pure = true;
    for (const auto& g : gens) {
        int nz = 0;
        for (auto e : g)
            if (e > 0) ++nz;
        if (nz > 1) {
            pure = false;
            break;
        }
    }
    if (pure) {
        std::vector<mpz_class> num{1};
        for (const auto& g : gens) {
            std::vector<mpz_class> next = num;
            poly_sub_shifted(next, num, exp_deg(g));
            num = std::move(next);
        }
        return num;
    }
    // pivot: most frequent variable among non-pure generators
    std::vector<std::size_t> freq(nvars, 0);
    for (const auto& g : gens) {
        int nz = 0;
        for (auto e : g)
            if (e > 0) ++nz;
        if (nz > 1)
            for (std::size_t v = 0; v < nvars; ++v)
                if (g[v] > 0) ++freq[v];
    }
    std::size_t pivot = (std::size_t)(std::max_element(freq.begin(), freq.end()) - freq.begin());
    // HS(S/M) = HS(S/(M + <x>)) + t * HS(S/(M : x))
    std::vector<Exponent> plus; // M + <x>, restricted
    Exponent xv(nvars, 0);
    xv[pivot] = 1;
    plus.push_back(xv);
    for (const auto& g : gens)
        if (g[pivot] == 0) plus.push_back(g);
    std::vector<Exponent> colon;
    for (const auto& g : gens) {
        Exponent h = g;
        if (h[pivot] > 0) --h[pivot];
        colon.push_back(std::move(h));
    }
    auto a = hilbert_rec(std::move(plus), nvars);
    auto b = hilbert_rec(std::move(colon), nvars);
    poly_add_shifted(a, b, 1);
    return a;
}

} // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Exponent> gens, std::size_t nvars) {
    return hilbert_rec(std::move(gens), nvars);
}

mpz_class hilbert_degree(const PolyIdeal& ideal) {
    for (const auto& g : ideal.generators())
        if (!g.is_coarse_homogeneous())
            throw std::invalid_argument("hilbert_degree needs a homogeneous ideal");
    const auto& gb = ideal.reduced_gb();
    std::size_t n = ideal.ring()->nvars();
    std::vector<Exponent> leads;
    for (const auto& g : gb) leads.push_back(g.lead(MonomialOrder::grevlex()).exp);
    auto num = hilbert_numerator(std::move(leads), n);
    long codim = codimension(ideal);
    // divide by (1-t)^codim
    for (long k = 0; k < codim; ++k) {
        // num / (1-t): q_i = sum_{j<=i} num_j; exact iff total sum is 0
        std::vector<mpz_class> q(num.size() ? num.size() - 1 : 0, 0);
        mpz_class acc = 0;
        for (std::size_t i = 0; i < num.size(); ++i) {
            acc += num[i];
            if (i + 1 == num.size()) {
                if (acc != 0) throw std::logic_error("hilbert numerator not divisible by (1-t)^codim");
                break;
            }
            q[i] = acc;
        }
        num = std::move(q);
        if (num.empty()) num = {0};
    }
    mpz_class deg = 0;
    for (const auto& c : num) deg += c;
    return deg;
}

} // namespace syz
