#ifndef SYZ_WITNESS_HPP
#define SYZ_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syz/simplicial.hpp"
#include "syz/strand.hpp"

namespace syz {

// p x q matrix of homogeneous linear forms (zero entries allowed).
class LinearFormMatrix {
public:
    LinearFormMatrix(RingPtr ring, std::size_t p, std::size_t q);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return p_; }
    std::size_t cols() const { return q_; }

    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }
    void set(std::size_t i, std::size_t j, const MultiPoly& v); // linear or zero

    MultiPoly minor2(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const;

private:
    RingPtr ring_;
    std::size_t p_, q_;
    std::vector<MultiPoly> entries_;
};

enum class GenericityMode { Exact2xQ, Randomized };

struct OneGenericityReport {
    bool one_generic = false; // randomized mode: "no counterexample found"
    bool exact = false;       // true when the verdict is a proof
    std::string evidence;
    // randomized transcript
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double failure_bound = 0.0; // P(wrongly reporting 1-generic)
    std::vector<Scalar> failing_combination; // row combination with rank drop
};

// Def-style 1-genericity: no zero entry reachable by row/column operations.
// Exact2xQ (p = 2, q <= dim V): gcd of the q x q pencil minors as binary
// forms; Randomized: deterministic small-coefficient screen plus N random
// row combinations, each checked for a rank drop of the combined row.
OneGenericityReport is_one_generic(const LinearFormMatrix& m, GenericityMode mode,
                                   std::size_t samples = 50, std::uint64_t seed = 1);

enum class CertKind { Scroll, PfaffianNet, BipartiteBlock, Bipyramid };

struct MembershipProof {
    std::string label;          // which minor / Pfaffian / triple
    MultiPoly element;          // the polynomial whose membership is claimed
    std::vector<Scalar> coords; // coordinates in the quadric basis
    bool via_closure = false;   // verified through x * P in S_1 * I_2
    std::string note;
};

struct WitnessCertificate {
    CertKind kind;
    LinearFormMatrix matrix;
    std::vector<MultiPoly> quadric_basis; // the I_2 basis the proofs refer to
    std::vector<MembershipProof> proofs;
    std::optional<OneGenericityReport> genericity;
    std::string note;
};

// Exact coordinates of q in the quadric basis; nullopt when q is not a
// homogeneous quadric (degree guard) or not in the span.
std::optional<std::vector<Scalar>> quadric_span_member(const MultiPoly& q,
                                                       const QuadraticSystem& basis);

// 2 x (n+2) scroll witness: rows (w_1..w_{n+2}) and (y_1..y_{n+2}); every
// 2x2 minor must lie in span(I_2). Throws with the offending (i, j)
// otherwise.
WitnessCertificate scroll_extract(const QuadraticSystem& i2,
                                  const std::vector<MultiPoly>& w_basis,
                                  const std::vector<MultiPoly>& y_assign);

// Pfaffian-net witness: bordered (n+4)x(n+4) skew matrix with first row the
// n+3 forms of w_basis and y-block y_assign (pair-indexed, row-major over
// 0 <= i < j < n+3). All three-term elements y_ij w_k - y_ik w_j + y_jk w_i
// must lie in span(I_2); y-only 4x4 Pfaffians are verified directly or via
// the closure step (w * P in S_1 * I_2).
WitnessCertificate pfaffian_extract(const QuadraticSystem& i2,
                                    const std::vector<MultiPoly>& w_basis,
                                    const std::vector<MultiPoly>& y_assign);

// Derives (w_basis, y_assign) for the extractors from a first syzygy's
// gauge-minimized Koszul representative. Scroll shape needs support n+2=3,
// Pfaffian-net shape support n+3=4.
struct SyzygyFrame {
    std::vector<MultiPoly> w_basis;
    std::vector<MultiPoly> y_assign; // size matches the target extractor
};
SyzygyFrame scroll_frame(const QuadraticSystem& i2, const LinearSyzygy& s);
SyzygyFrame pfaffian_frame(const QuadraticSystem& i2, const LinearSyzygy& s);

// Semigroup zero-pattern step: checks the nonzero pattern of the y-block is
// triangle-free and searches for a complete bipartite block K_{v,w}
// (v,w >= 2, zero A-A block) whose submatrix is 1-generic. Lexicographically
// smallest block reported. Throws (with the pattern attached) when no block
// qualifies.
WitnessCertificate bipartite_block_extract(const WitnessCertificate& cert, bool is_semigroup);

// Prop-style bipyramid detection: for each vertex pair (a, b), collect the
// ridges sigma with both cones facets; emit the 2 x (k+1) matrix
// [[x_a, y_{sigma+b}...], [x_b, y_{sigma+a}...]] and verify every 2x2 minor
// is fine-degree balanced in the weight grading.
std::vector<WitnessCertificate> bipyramid_scan(const OrientedComplex& delta, const Field& f);

} // namespace syz

#endif
