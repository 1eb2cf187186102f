#ifndef SYZ_RING_HPP
#define SYZ_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syz/field.hpp"
#include "syz/matrix.hpp"

namespace syz {

using Exponent = std::vector<std::int32_t>;
using Multidegree = std::vector<std::int64_t>;

enum class VarRole { X, Y, Aux };

struct VarInfo {
    std::string name;
    VarRole role = VarRole::Aux;
    // for X vars: the vertex index; for Y vars: the face / index set
    std::vector<int> label;
};

// Polynomial ring description: named variables, optional fine Z^k grading
// (one column per variable), coarse weight 1 per variable.
class RingSpec {
public:
    RingSpec(Field f, std::vector<VarInfo> vars);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const VarInfo& var(std::size_t i) const { return vars_[i]; }
    const std::vector<VarInfo>& vars() const { return vars_; }
    int var_index(const std::string& name) const; // -1 if unknown

    bool has_fine_grading() const { return !fine_.empty(); }
    std::size_t fine_rank() const { return fine_.empty() ? 0 : fine_[0].size(); }
    const Multidegree& fine_degree_of_var(std::size_t i) const { return fine_[i]; }
    void set_fine_grading(std::vector<Multidegree> per_var);

    Multidegree fine_degree(const Exponent& e) const;

private:
    Field field_;
    std::vector<VarInfo> vars_;
    std::vector<Multidegree> fine_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

// Monomial orders; `priority` remaps variable significance (priority[k] is
// the index of the k-th most significant variable; empty = declared order).
struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };
    Kind kind = Kind::GrevLex;
    std::size_t block = 0; // Block: the first `block` priority slots are the
                           // eliminated block
    std::vector<std::size_t> priority;

    static MonomialOrder lex() { return {Kind::Lex, 0, {}}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0, {}}; }
    static MonomialOrder elimination(std::size_t nblock) { return {Kind::Block, nblock, {}}; }
    // grevlex with variable v made smallest (used by reverse-lex saturation)
    static MonomialOrder grevlex_var_last(std::size_t nvars, std::size_t v);

    int compare(const Exponent& a, const Exponent& b) const; // sign of a-b
    std::string key() const;
};

struct Term {
    Exponent exp;
    Scalar coeff;
};

// Multivariate polynomial; terms kept sorted descending under the ring's
// canonical grevlex order, no zero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const;

    static MultiPoly variable(const RingPtr& ring, std::size_t v);
    static MultiPoly constant(const RingPtr& ring, const Scalar& c);
    static MultiPoly monomial(const RingPtr& ring, const Exponent& e, const Scalar& c);

    long coarse_degree() const; // max over terms (sum of exponents)
    bool is_coarse_homogeneous() const;
    // common fine multidegree of all terms, or nullopt if inhomogeneous
    std::optional<Multidegree> fine_multidegree() const;

    const Term& lead(const MonomialOrder& ord) const;
    MultiPoly monic(const MonomialOrder& ord) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize();
};

// Parses text like "x1*y12 - x3*y23 + 2*x1^2" against the ring's names.
MultiPoly parse_poly(const RingPtr& ring, const std::string& text);

// All exponent vectors of the given total degree, in descending canonical
// grevlex order (fixed column convention for coefficient matrices).
std::vector<Exponent> monomials_of_degree(std::size_t nvars, long degree);

// rows = polys, cols = monomials of the coarse degree. Throws on
// non-homogeneous input.
ExactMatrix coefficient_matrix(const RingPtr& ring, const std::vector<MultiPoly>& polys, long degree);

std::string monomial_str(const RingSpec& ring, const Exponent& e);

} // namespace syz

#endif
