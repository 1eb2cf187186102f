#ifndef SYZ_STRAND_HPP
#define SYZ_STRAND_HPP

#include <vector>

#include "syz/groebner.hpp"

namespace syz {

// The degree-2 part of an ideal, as a row-reduced basis of quadrics. All
// strand computations work from this data alone (pure linear algebra, no
// Groebner bases).
class QuadraticSystem {
public:
    QuadraticSystem(RingPtr ring, const std::vector<MultiPoly>& quadrics);

    const RingPtr& ring() const { return ring_; }
    std::size_t dim_v() const { return ring_->nvars(); }
    std::size_t count() const { return quadrics_.size(); } // r
    const std::vector<MultiPoly>& quadrics() const { return quadrics_; }

    // degree-2 generators of an ideal (higher-degree generators ignored)
    static QuadraticSystem from_ideal(const PolyIdeal& ideal);

private:
    RingPtr ring_;
    std::vector<MultiPoly> quadrics_; // linearly independent, row-reduced
};

// Linear first syzygy sum_i l_i q_i = 0: coefficient matrix entry (i, k) is
// the coefficient of variable x_k in l_i.
struct LinearSyzygy {
    RingPtr ring;
    ExactMatrix coefficients; // r x d
    LinearSyzygy(RingPtr r, ExactMatrix m) : ring(std::move(r)), coefficients(std::move(m)) {}
};

// b_{1,2}..b_{imax, imax+1} of S/I from Koszul homology
//   Wedge^{m+1}V -> Wedge^m V (x) V -> Wedge^{m-1}V (x) (S/I)_2,
// stopping early after the first zero (linear-strand connectivity). The
// guard rejects middle terms larger than max_cells.
std::vector<std::size_t> koszul_strand_betti(const QuadraticSystem& q, std::size_t i_max,
                                             std::size_t max_cells = 5000000);

// basis of the space of linear first syzygies
std::vector<LinearSyzygy> linear_first_syzygies(const QuadraticSystem& q);

// rank of the coefficient matrix: dimension of the smallest generator
// subspace the syzygy factors through
std::size_t syzygy_rank(const LinearSyzygy& s);

// Gauge-minimized Koszul representative z = sum_{a<b} e_a ^ e_b (x) L_ab of
// a first syzygy: the minimal variable support (ascending indices) and the
// nonzero pair forms L_ab, all pairs inside the support.
struct KoszulRepresentative {
    std::vector<std::size_t> support;
    std::map<std::pair<int, int>, MultiPoly> forms;
};
KoszulRepresentative koszul_representative(const QuadraticSystem& q, const LinearSyzygy& s);

// dimension of the smallest coordinate-variable subspace W with a Koszul
// representative of the syzygy in Wedge^2 W (x) V, minimized over the
// boundary gauge freedom
std::size_t support_dimension(const QuadraticSystem& q, const LinearSyzygy& s);

// rank of the symmetric Gram matrix (characteristic != 2)
std::size_t quadric_rank(const MultiPoly& quadric);

// max{ i <= i_max : b_{i,i+1} != 0 }
std::size_t two_lp(const QuadraticSystem& q, std::size_t i_max,
                   std::size_t max_cells = 5000000);

} // namespace syz

#endif
