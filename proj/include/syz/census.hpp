#ifndef SYZ_CENSUS_HPP
#define SYZ_CENSUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syz/simplicial.hpp"
#include "syz/strand.hpp"
#include "syz/witness.hpp"

namespace syz {

// exact binomial coefficient (small arguments)
long long binom_ll(long long n, long long k);

// For a nonspecial, normally generated and presented curve of genus g and
// degree d in P^r (r = d - g) whose resolution has exactly two strands,
// the Hilbert function determines every graded Betti number. Returns
// (b_2, ..., b_{r+1}) per the closed formulas:
//   b_2 = C(d-g, 2) - g
//   b_3 = (d-g-1) * (C(d-g-1, 2) - g) - C(d-g-1, 3)
//   b_i = C(d-g-1, i) - (d-g-1) * C(d-g-1, i-1) + g * C(d-g-1, i-2), i >= 4
std::vector<long long> betti_formulas(long long g, long long d);

// the two-strand diagram assembled from betti_formulas: totals indexed by
// homological degree 0..r-1; row1 = (b_2, b_3) at indices 1, 2; row2 =
// (b_4, ..., b_{r+1}) at indices 2..r-1
struct CurveBettiTable {
    std::vector<long long> totals;
    std::vector<long long> row1;
    std::vector<long long> row2;
};
CurveBettiTable curve_table(long long g, long long d);

// all (g, d) with g <= g_max for which the formula values can be Betti
// numbers: b_2 > 0, b_3 > 0 (a linear first syzygy exists) and b_i >= 0
// for i >= 4
std::vector<std::pair<long, long>> feasible_pairs(long g_max);

// Integrality scan for d = (r^3 - r - 3) / (3(r - 1)): raw integral hits
// with the domain side-constraints (d >= r, hence g = d - r >= 0) recorded.
// No hit passes the side constraints.
struct Prop51Hit {
    long long r;
    long long d;
    bool side_ok;
};
std::vector<Prop51Hit> prop51_scan(long long r_max);

// curve-side lower bound on the strand length from the divisor degree:
// writing d = g + ceil(g/2) + a, the strand length is at least a - 1
long two_lp_threshold(long g, long d);

// Convex lattice polygon: vertices are extreme points, stored
// counterclockwise starting at the lexicographically smallest vertex.
class LatticePolygon {
public:
    using Point = std::pair<long long, long long>;
    explicit LatticePolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    std::vector<Point> lattice_points() const; // sorted, boundary + interior

private:
    std::vector<Point> verts_;
};

struct PickStats {
    long long twice_area = 0;
    long long boundary = 0;
    long long interior = 0;
    long long degree = 0; // = twice_area, the self-intersection of the divisor
};
PickStats pick_stats(const LatticePolygon& p);

// whether two polygons differ by a unimodular map plus translation
bool unimodular_equivalent(const LatticePolygon& a, const LatticePolygon& b);

// All polygons with (boundary, interior) in {(4,0),(4,1),(4,2),(4,3),
// (5,0),(5,1)} — equivalently floor(i/2) + boundary <= 5 with boundary in
// {4,5} — up to unimodular equivalence. Brute force over edge vectors with
// components bounded by edge_bound (9 suffices; re-run with 12 to
// cross-validate stability).
std::vector<LatticePolygon> enumerate_polygons(long edge_bound = 9);

// Search for a 2 x ncols matrix with entries among the ring variables,
// distinct along each row and down each column, whose 2x2 minors all lie in
// span(I_2) and which is 1-generic. First hit in deterministic order.
std::optional<LinearFormMatrix> find_variable_scroll(const QuadraticSystem& q,
                                                     std::size_t ncols);

struct PolygonReport {
    PickStats stats;
    std::size_t quadrics = 0;
    bool quadratically_generated = false;
    std::vector<std::size_t> strand;
    std::size_t two_lp = 0;
    long threshold = 0;       // two_lp_threshold(interior, degree)
    bool applicable = false;  // quadratically generated with strand length 2
    bool witness_found = false;
    std::vector<std::string> witness_rows; // rendered matrix when found
    std::string status;       // conjecture-verified | witness-not-found | not applicable
};
// Toric-surface pipeline for one polygon: points (1, x, y), toric quadrics,
// linear strand, generation degree from the fiber-complex Betti table, and
// (when applicable) the variable-entry scroll witness search.
PolygonReport polygon_report(const LatticePolygon& p, const Field& f);

struct PseudomanifoldScanEntry {
    OrientedComplex complex; // oriented representative of the type
    std::size_t labelings = 0;
    std::vector<std::size_t> strand;
    std::size_t two_lp = 0;
    std::size_t max_bipyramid_k = 0; // over certificates with verified minors
    bool scroll_found = false;
    bool counterexample = false; // strand length n but no matching witness
};
struct PseudomanifoldScanReport {
    std::vector<PseudomanifoldScanEntry> entries;
    std::size_t counterexamples = 0;
};
// Enumerate all orientable two-dimensional pseudomanifolds on at most
// max_vertices vertices (up to isomorphism), build their facet ideals, and
// check the strand-length-n-forces-a-witness claim on each.
PseudomanifoldScanReport small_pseudomanifold_scan(int max_vertices, const Field& f);

} // namespace syz

#endif
