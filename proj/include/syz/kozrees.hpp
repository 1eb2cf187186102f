#ifndef SYZ_KOZREES_HPP
#define SYZ_KOZREES_HPP

#include <string>
#include <vector>

#include "syz/groebner.hpp"
#include "syz/simplicial.hpp"

namespace syz {

// Skew-symmetric matrix of linear forms; only the strict upper triangle is
// stored, the diagonal is zero and entry(j,i) = -entry(i,j).
class SkewLinearMatrix {
public:
    SkewLinearMatrix(RingPtr ring, int size);

    const RingPtr& ring() const { return ring_; }
    int size() const { return d_; }

    MultiPoly entry(int i, int j) const; // 1-based, signed
    void set(int i, int j, const MultiPoly& p); // requires i < j, degree <= 1

private:
    RingPtr ring_;
    int d_;
    std::vector<MultiPoly> upper_;
    std::size_t idx(int i, int j) const;
};

// Ring k[x_1..x_d, y_{ij} (i<j)] and the generic skew matrix with the
// alternating-sign convention entry(i,j) = (-1)^{i+j} y_{ij}.
RingPtr skew_ring(int d, const Field& f);
SkewLinearMatrix generic_skew_matrix(const RingPtr& ring, int d);
// the cycle specialization: only supradiagonal and corner entries survive;
// flip_corner negates the corner variable (the even-d change of coordinates)
SkewLinearMatrix cycle_skew_matrix(const RingPtr& ring, int d, bool flip_corner);

// Pfaffian by expansion along the first row; requires even size.
MultiPoly pfaffian(const SkewLinearMatrix& m);
// determinant of the full skew matrix (test oracle for pfaffian^2 = det)
MultiPoly skew_determinant(const SkewLinearMatrix& m);

// Generators z_I = sum_j (-1)^{j+1} x_{a_j} y_{I \ a_j} over all (i+1)-sets
// I = {a_1 < ... < a_{i+1}} in [d]; the ring has x_1..x_d and one y_K per
// i-subset K.
PolyIdeal koszul_cycle_generators(int d, int i, const Field& f);

// The binomial quadrics x_i y_sigma - x_j y_tau over interior ridges
// sigma \ {i} = tau \ {j}, normalized so that (i, sigma) < (j, tau)
// lexicographically. The ring carries the fine toric grading of
// weight_configuration.
PolyIdeal pseudomanifold_ideal(const OrientedComplex& c, const Field& f);

// Entries of M * x (x = given column of ring variables, by index), plus the
// Pfaffian when requested (sign-normalized so the canonical lead
// coefficient is positive).
PolyIdeal skew_matrix_ideal(const SkewLinearMatrix& m, const std::vector<std::size_t>& x,
                            bool with_pfaffian);

// The cycle specialization in 2d variables: d binomial quadrics, plus the
// degree-d/2 Pfaffian when d is even. Carries the toric grading.
PolyIdeal cycle_specialization(int d, const Field& f);

struct WeightedConfig {
    std::size_t ambient = 0; // d + 1 coordinates, e_0 first
    std::vector<Multidegree> columns;
    std::vector<std::string> names; // variable correspondence
};

// Columns e_1..e_d for the vertices, then wt(sigma) = e_0 - sum e_{i_j}
// per facet, in facet order.
WeightedConfig weight_configuration(const OrientedComplex& c);

std::string subset_var_name(const std::string& prefix, const std::vector<int>& idx);

} // namespace syz

#endif
