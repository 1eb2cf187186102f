#ifndef SYZ_TORICBETTI_HPP
#define SYZ_TORICBETTI_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "syz/groebner.hpp"
#include "syz/kozrees.hpp"
#include "syz/simplicial.hpp"

namespace syz {

// Integer point configuration with columns a_1..a_q in Z^p. A grading
// vector omega with omega . a_i = 1 for all i is computed over Q when one
// exists; graded() reports whether it does.
class PointConfiguration {
public:
    PointConfiguration(std::size_t ambient, std::vector<Multidegree> columns,
                       std::vector<std::string> names = {});

    std::size_t ambient() const { return p_; }
    std::size_t size() const { return cols_.size(); }
    const std::vector<Multidegree>& columns() const { return cols_; }
    const std::vector<std::string>& names() const { return names_; }

    bool graded() const { return graded_; }
    // omega . m; throws if ungraded or the value is not an integer
    long level_of(const Multidegree& m) const;

private:
    std::size_t p_;
    std::vector<Multidegree> cols_;
    std::vector<std::string> names_;
    bool graded_ = false;
    std::vector<mpq_class> omega_;
};

PointConfiguration configuration_from_weights(const WeightedConfig& w);

// Basis of the full integer kernel lattice ker_Z(A) (saturated), via
// integer row reduction of [A^T | I].
std::vector<Multidegree> integer_kernel_basis(const PointConfiguration& a);

// Polynomial ring on the configuration's columns, carrying the fine
// A-grading (the ring toric_ideal computes in).
RingPtr configuration_ring(const PointConfiguration& a, const Field& f);

// The toric ideal I_A: lattice-basis binomials saturated by the product of
// all variables. The ring carries the fine A-grading.
PolyIdeal toric_ideal(const PointConfiguration& a, const Field& f);

// Spanning set of the degree-2 graded piece (I_A)_2 in a fine-graded ring
// (e.g. configuration_ring): one binomial per pair of degree-2 monomials
// sharing a fine degree. No Groebner basis needed.
std::vector<MultiPoly> toric_quadrics(const RingPtr& ring);

// Level sets of the semigroup N-A under the grading.
class SemigroupLevels {
public:
    SemigroupLevels(const PointConfiguration& a, long tmax);
    long tmax() const { return tmax_; }
    const std::set<Multidegree>& level(long t) const;
    // membership of m in N-A; requires level_of(m) <= tmax
    bool contains(const Multidegree& m) const;

private:
    const PointConfiguration& a_;
    long tmax_;
    std::vector<std::set<Multidegree>> levels_;
};

// Hochster fiber complex Delta_m: faces are the subsets I of {1..q} with
// m - sum_{i in I} a_i in the semigroup. Returned through its facets
// (orientation-free); void when m is not in the semigroup.
OrientedComplex fiber_complex(const PointConfiguration& a, const Multidegree& m,
                              const SemigroupLevels& levels);

struct BettiTable {
    // fine entries: (homological index i of S/I, multidegree) -> dim
    std::map<std::pair<long, Multidegree>, std::size_t> fine;
    // coarse view: (i, coarse degree j) -> dim
    std::map<std::pair<long, long>, std::size_t> coarse;
    long bound = 0; // max coarse degree computed

    void add(long i, const Multidegree& m, long coarse_degree, std::size_t dim);
    std::size_t coarse_at(long i, long j) const;
    long max_index() const;
    std::vector<std::size_t> totals() const; // per homological index
    std::string diagram() const; // rows j - i, columns i, "--" for zero
};

// Betti numbers of S/I_A from reduced homology of the fiber complexes:
// b_{1+j, m} = dim H~_j(Delta_m) over all semigroup elements with coarse
// degree <= max_coarse_degree; b_{0,0} = 1. Complexes with a universal
// vertex are skipped as acyclic.
BettiTable hochster_betti(const PointConfiguration& a, long max_coarse_degree,
                          const Field& f);

// Replace coordinate j by coordinate i in all columns (then drop j and
// deduplicate columns). Coordinates are 1-based vertex positions; 0 is the
// grading coordinate and may not be identified.
PointConfiguration identify_vertices(const PointConfiguration& a, std::size_t i, std::size_t j);

} // namespace syz

#endif
