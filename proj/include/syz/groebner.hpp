#ifndef SYZ_GROEBNER_HPP
#define SYZ_GROEBNER_HPP

#include <map>
#include <string>
#include <vector>

#include "syz/ring.hpp"

namespace syz {

// Ideal presented by generators, with a reduced-GB cache per order key.
class PolyIdeal {
public:
    PolyIdeal(RingPtr ring, std::vector<MultiPoly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    const std::vector<MultiPoly>& reduced_gb(const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    bool contains(const MultiPoly& p, const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    bool is_unit() const;

private:
    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    mutable std::map<std::string, std::vector<MultiPoly>> cache_;
};

// Full normal form against a (Groebner) basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord);

std::vector<MultiPoly> buchberger_reduced(const std::vector<MultiPoly>& gens,
                                          const MonomialOrder& ord);

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b);

// I : f^inf. Uses the reverse-lex variable trick when I is coarse
// homogeneous and f is a product of variables; falls back to the
// auxiliary-variable elimination otherwise.
PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f);
// Reference path: adjoin t, add t*f - 1, eliminate t.
PolyIdeal saturate_by_elimination(const PolyIdeal& ideal, const MultiPoly& f);

// Krull dimension of the quotient ring (affine). Unit ideal yields
// kDimensionOfUnitIdeal.
inline constexpr long kDimensionOfUnitIdeal = -0x7fffffff;
long krull_dimension(const PolyIdeal& ideal);
long codimension(const PolyIdeal& ideal);

// Degree of the projective scheme via the Hilbert series of the initial
// ideal: numerator divided by (1-t)^codim, evaluated at t = 1.
mpz_class hilbert_degree(const PolyIdeal& ideal);

// Hilbert series numerator of a monomial ideal given by exponent vectors,
// as coefficients of 1 + c_1 t + ... (dense).
std::vector<mpz_class> hilbert_numerator(std::vector<Exponent> gens, std::size_t nvars);

} // namespace syz

#endif
