#include "syz/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace syz {

RingSpec::RingSpec(Field f, std::vector<VarInfo> vars)
    : field_(f), vars_(std::move(vars)) {
    std::vector<std::string> names;
    for (auto& v : vars_) names.push_back(v.name);
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw std::invalid_argument("duplicate variable names");
}

int RingSpec::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return (int)i;
    return -1;
}

void RingSpec::set_fine_grading(std::vector<Multidegree> per_var) {
    if (per_var.size() != vars_.size())
        throw std::invalid_argument("fine grading size mismatch");
    for (auto& d : per_var)
        if (d.size() != per_var[0].size())
            throw std::invalid_argument("fine grading rank mismatch");
    fine_ = std::move(per_var);
}

Multidegree RingSpec::fine_degree(const Exponent& e) const {
    if (fine_.empty()) throw std::logic_error("ring has no fine grading");
    Multidegree d(fine_rank(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            for (std::size_t k = 0; k < d.size(); ++k)
                d[k] += (std::int64_t)e[i] * fine_[i][k];
    return d;
}

MonomialOrder MonomialOrder::grevlex_var_last(std::size_t nvars, std::size_t v) {
    MonomialOrder o = grevlex();
    o.priority.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        if (i != v) o.priority.push_back(i);
    o.priority.push_back(v);
    return o;
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    std::size_t n = a.size();
    auto pvar = [&](std::size_t k) { return priority.empty() ? k : priority[k]; };
    auto lex_cmp = [&]() {
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t v = pvar(k);
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    };
    auto grevlex_cmp = [&](std::size_t from, std::size_t to) {
        long da = 0, db = 0;
        for (std::size_t k = from; k < to; ++k) {
            da += a[pvar(k)];
            db += b[pvar(k)];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t k = to; k-- > from;) {
            std::size_t v = pvar(k);
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    };
    switch (kind) {
        case Kind::Lex: return lex_cmp();
        case Kind::GrevLex: return grevlex_cmp(0, n);
        case Kind::Block: {
            int c = grevlex_cmp(0, block);
            if (c != 0) return c;
            return grevlex_cmp(block, n);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::string s;
    switch (kind) {
        case Kind::Lex: s = "lex"; break;
        case Kind::GrevLex: s = "grevlex"; break;
        case Kind::Block: s = "block" + std::to_string(block); break;
    }
    for (auto v : priority) s += ":" + std::to_string(v);
    return s;
}

namespace {
const MonomialOrder kCanonical = MonomialOrder::grevlex();
}

void MultiPoly::normalize() {
    for (auto& t : terms_)
        if (t.exp.size() != ring_->nvars())
            throw std::invalid_argument("exponent length mismatch");
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kCanonical.compare(a.exp, b.exp) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(t);
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

static void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get()) throw std::invalid_argument("ring mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly(ring_);
    MultiPoly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Exponent e = a.exp;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exp[i];
            t.push_back({std::move(e), a.coeff * b.coeff});
        }
    return MultiPoly(ring_, std::move(t));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (ring_.get() != o.ring_.get()) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t v) {
    Exponent e(ring->nvars(), 0);
    e[v] = 1;
    return monomial(ring, e, Scalar::one(ring->field()));
}

MultiPoly MultiPoly::constant(const RingPtr& ring, const Scalar& c) {
    return monomial(ring, Exponent(ring->nvars(), 0), c);
}

MultiPoly MultiPoly::monomial(const RingPtr& ring, const Exponent& e, const Scalar& c) {
    MultiPoly p(ring);
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
}

long MultiPoly::coarse_degree() const {
    long d = -1;
    for (const auto& t : terms_)
        d = std::max(d, (long)std::accumulate(t.exp.begin(), t.exp.end(), 0));
    return d;
}

bool MultiPoly::is_coarse_homogeneous() const {
    if (terms_.empty()) return true;
    long d = std::accumulate(terms_[0].exp.begin(), terms_[0].exp.end(), 0);
    for (const auto& t : terms_)
        if (std::accumulate(t.exp.begin(), t.exp.end(), 0) != d) return false;
    return true;
}

std::optional<Multidegree> MultiPoly::fine_multidegree() const {
    if (!ring_->has_fine_grading()) throw std::logic_error("ring has no fine grading");
    if (terms_.empty()) return Multidegree(ring_->fine_rank(), 0);
    Multidegree d = ring_->fine_degree(terms_[0].exp);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ring_->fine_degree(terms_[i].exp) != d) return std::nullopt;
    return d;
}

const Term& MultiPoly::lead(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("lead of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i].exp, terms_[best].exp) > 0) best = i;
    return terms_[best];
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    return scaled(lead(ord).coeff.inv());
}

std::string monomial_str(const RingSpec& ring, const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var(i).name;
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool neg = false;
        if (!ring_->field().is_q()) {
            // print residues above p/2 as negatives for readability
            if (t.coeff.residue() > ring_->field().p / 2) {
                neg = true;
                c = -t.coeff;
            }
        } else if (t.coeff.rational() < 0) {
            neg = true;
            c = -t.coeff;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono = monomial_str(*ring_, t.exp);
        if (!c.is_one())
            os << c.str() << (mono == "1" ? "" : "*");
        else if (mono == "1") {
            os << "1";
            continue;
        }
        if (mono != "1") os << mono;
    }
    return os.str();
}

// ---- parsing ----

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    long integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    // factor := name[^int] | int
    bool factor(Exponent& e, Scalar& c) {
        skip();
        if (pos >= s.size()) return false;
        if (std::isdigit((unsigned char)s[pos])) {
            long v = integer();
            c = c * Scalar::from_int(ring->field(), v);
            return true;
        }
        if (!std::isalpha((unsigned char)s[pos]) && s[pos] != '_') return false;
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        std::string name = s.substr(start, pos - start);
        int idx = ring->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        long pw = 1;
        if (eat('^')) pw = integer();
        if (pw < 0) fail("negative exponent");
        e[(std::size_t)idx] += (std::int32_t)pw;
        return true;
    }

    MultiPoly run() {
        std::vector<Term> terms;
        bool expect_term = true;
        int sign = 1;
        while (true) {
            skip();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                ++pos;
                sign = 1;
                expect_term = true;
                continue;
            }
            if (s[pos] == '-') {
                ++pos;
                sign = -1;
                expect_term = true;
                continue;
            }
            if (!expect_term) fail("expected '+' or '-'");
            Exponent e(ring->nvars(), 0);
            Scalar c = Scalar::from_int(ring->field(), sign);
            if (!factor(e, c)) fail("expected term");
            while (eat('*'))
                if (!factor(e, c)) fail("expected factor after '*'");
            terms.push_back({std::move(e), c});
            expect_term = false;
            sign = 1;
        }
        if (expect_term && !terms.empty()) fail("dangling operator");
        return MultiPoly(ring, std::move(terms));
    }
};

} // namespace

MultiPoly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    return p.run();
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, long degree) {
    std::vector<Exponent> out;
    Exponent cur(nvars, 0);
    // enumerate recursively, then sort by canonical order descending
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rem) {
        if (i + 1 == nvars) {
            cur[i] = (std::int32_t)rem;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (long k = rem; k >= 0; --k) {
            cur[i] = (std::int32_t)k;
            rec(i + 1, rem - k);
        }
        cur[i] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    if (degree >= 0) rec(0, degree);
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
        return kCanonical.compare(a, b) > 0;
    });
    return out;
}

ExactMatrix coefficient_matrix(const RingPtr& ring, const std::vector<MultiPoly>& polys, long degree) {
    for (const auto& p : polys) {
        require_same_ring(ring, p.ring());
        if (!p.is_zero() && (!p.is_coarse_homogeneous() || p.coarse_degree() != degree))
            throw std::invalid_argument("non-homogeneous input to coefficient_matrix");
    }
    auto monos = monomials_of_degree(ring->nvars(), degree);
    std::map<Exponent, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    ExactMatrix m(ring->field(), polys.size(), monos.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& t : polys[r].terms())
            m.at(r, col.at(t.exp)) = t.coeff;
    return m;
}

} // namespace syz
