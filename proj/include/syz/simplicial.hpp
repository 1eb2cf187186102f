#ifndef SYZ_SIMPLICIAL_HPP
#define SYZ_SIMPLICIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "syz/matrix.hpp"

namespace syz {

// Simplicial complex given by its facets. Vertices are labeled 1..d. The
// listed vertex order of a facet encodes its orientation (by permutation
// parity); faces below facet level are kept in sorted form.
//
// An empty facet list is the void complex (no faces at all); a single empty
// facet encodes the complex whose only face is the empty set.
class OrientedComplex {
public:
    OrientedComplex(int vertex_count, std::vector<std::vector<int>> facets);

    int vertex_count() const { return d_; }
    int dimension() const { return n_; } // max facet size - 1; -1 for {∅}/void
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_pure() const;

    // all faces of dimension j (sorted vertex lists, sorted lexicographically)
    std::vector<std::vector<int>> faces_of_dim(int j) const;
    std::vector<std::size_t> f_vector() const; // (f_0, ..., f_n)
    bool has_face(const std::vector<int>& sorted_vertices) const;

private:
    int d_;
    int n_;
    std::vector<std::vector<int>> facets_;
};

struct PseudomanifoldReport {
    bool is_pure = false;
    bool ridge_condition = false;
    bool orientations_cancel = false;
    bool strongly_connected = false;
    std::optional<std::string> failing_witness;
    bool ok() const {
        return is_pure && ridge_condition && orientations_cancel && strongly_connected;
    }
};

PseudomanifoldReport validate_pseudomanifold(const OrientedComplex& c);

// Matrix of the boundary map from j-chains to (j-1)-chains. Rows are the
// (j-1)-faces, columns the j-faces, both in sorted face order; j = 0 gives
// the augmentation row. Columns at facet level carry the parity sign of the
// listed facet orientation.
ExactMatrix boundary_matrix(const OrientedComplex& c, int j, const Field& f);

struct HomologyDims {
    std::size_t h_minus_one = 0; // 1 exactly for the complex {∅}
    std::vector<std::size_t> dims; // reduced h_0 .. h_n
};

HomologyDims homology_dims(const OrientedComplex& c, const Field& f);

// The complex whose faces are the complements of the non-faces of c,
// taken over the vertex set 1..vertex_count. Output facets are sorted
// (duality carries no orientation).
OrientedComplex alexander_dual(const OrientedComplex& c);

// ---- catalog ----

OrientedComplex cycle_complex(int d);
OrientedComplex simplex_boundary(int k);      // boundary of the k-simplex
OrientedComplex bipyramid(const OrientedComplex& base);
OrientedComplex octahedron_complex();
// all combinatorial types of 7-vertex triangulations of the 2-sphere with
// f-vector (7, 15, 10), consistently oriented, deduplicated by isomorphism
std::vector<OrientedComplex> sphere7_list();

OrientedComplex catalog(const std::string& name, const std::vector<int>& params);

// isomorphism-invariant fingerprint (minimum over all vertex relabelings);
// practical for vertex counts <= 8
std::string canonical_form(const OrientedComplex& c);

} // namespace syz

#endif
