#include "syz/registry.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "syz/census.hpp"
#include "syz/groebner.hpp"
#include "syz/kozrees.hpp"
#include "syz/simplicial.hpp"
#include "syz/strand.hpp"
#include "syz/toricbetti.hpp"
#include "syz/witness.hpp"

namespace syz {

namespace {

std::string num(long long v) { return std::to_string(v); }

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string((long long)v[i]);
    return s;
}

PointConfiguration twisted_cubic_config() {
    return PointConfiguration(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

// 7-vertex triangulation of the 2-sphere whose toric quadric space has
// dimension 17 (unique among the seven-vertex types; pinned facet list)
OrientedComplex seventeen_quadric_sphere() {
    return OrientedComplex(7, {{1, 2, 3}, {2, 1, 4}, {1, 3, 4}, {3, 2, 5}, {2, 4, 5},
                               {4, 3, 6}, {3, 5, 6}, {5, 4, 7}, {4, 6, 7}, {6, 5, 7}});
}

QuadraticSystem toric_system(const PointConfiguration& a, const Field& f) {
    RingPtr R = configuration_ring(a, f);
    return QuadraticSystem(R, toric_quadrics(R));
}

MultiPoly variable_product(const RingPtr& R) {
    Exponent e(R->nvars(), 1);
    return MultiPoly::monomial(R, e, Scalar::one(R->field()));
}

ResultKV compute_twisted_cubic(const Field& f) {
    auto a = twisted_cubic_config();
    auto q = toric_system(a, f);
    ResultKV kv;
    kv.push_back({"quadrics", num((long long)q.count())});
    kv.push_back({"strand", join(koszul_strand_betti(q, 4))});
    kv.push_back({"two_lp", num((long long)two_lp(q, 4))});
    auto t = hochster_betti(a, 3, f);
    kv.push_back({"totals", join(t.totals())});
    kv.push_back({"diagram", t.diagram()});
    return kv;
}

// the odd / even specializations of the generic skew cycle matrix
ResultKV compute_cycle(const Field& f, int d, long bound) {
    PolyIdeal J = cycle_specialization(d, f);
    auto q = QuadraticSystem::from_ideal(J);
    ResultKV kv;
    kv.push_back({"generators", num((long long)J.generators().size())});
    kv.push_back({"quadrics", num((long long)q.count())});
    long long rank_max = 0;
    for (const auto& g : J.generators())
        if (g.coarse_degree() == 2)
            rank_max = std::max(rank_max, (long long)quadric_rank(g));
    kv.push_back({"quadric_rank_max", num(rank_max)});
    for (const auto& g : J.generators())
        if (g.coarse_degree() == 3) kv.push_back({"cubic", g.str()});
    auto syz = linear_first_syzygies(q);
    kv.push_back({"linear_syzygies", num((long long)syz.size())});
    if (syz.size() == 1) {
        kv.push_back({"syzygy_rank", num((long long)syzygy_rank(syz[0]))});
        kv.push_back({"support_dimension", num((long long)support_dimension(q, syz[0]))});
    }
    kv.push_back({"codimension", num(codimension(J))});
    if (bound > 0) {
        kv.push_back({"degree", hilbert_degree(J).get_str()});
        auto a = configuration_from_weights(weight_configuration(cycle_complex(d)));
        auto t = hochster_betti(a, bound, f);
        kv.push_back({"totals", join(t.totals())});
        kv.push_back({"diagram", t.diagram()});
    }
    return kv;
}

ResultKV compute_five_cycle(const Field& f) { return compute_cycle(f, 5, 7); }
ResultKV compute_six_cycle(const Field& f) { return compute_cycle(f, 6, 9); }
ResultKV compute_seven_cycle(const Field& f) { return compute_cycle(f, 7, 0); }
ResultKV compute_eight_cycle(const Field& f) { return compute_cycle(f, 8, 0); }

ResultKV compute_octahedron(const Field& f) {
    auto c = octahedron_complex();
    auto J = pseudomanifold_ideal(c, f);
    auto q = QuadraticSystem::from_ideal(J);
    ResultKV kv;
    kv.push_back({"quadrics", num((long long)q.count())});
    kv.push_back({"strand", join(koszul_strand_betti(q, 5))});
    kv.push_back({"two_lp", num((long long)two_lp(q, 5))});
    std::size_t max_k = 0;
    for (const auto& cert : bipyramid_scan(c, f))
        max_k = std::max(max_k, cert.matrix.cols() - 1);
    kv.push_back({"bipyramid_max_k", num((long long)max_k)});
    auto a = configuration_from_weights(weight_configuration(c));
    auto t = hochster_betti(a, 4, f);
    kv.push_back({"tor_2_degree_3", num((long long)t.coarse_at(2, 3))});
    auto sat = saturate(J, variable_product(J.ring()));
    bool eq = ideal_equal(sat, toric_ideal(a, f));
    kv.push_back({"saturation_equals_toric", eq ? "yes" : "no"});
    return kv;
}

ResultKV compute_sphere7(const Field& f) {
    auto a = configuration_from_weights(weight_configuration(seventeen_quadric_sphere()));
    auto q = toric_system(a, f);
    ResultKV kv;
    kv.push_back({"quadrics", num((long long)q.count())});
    kv.push_back({"strand", join(koszul_strand_betti(q, 5))});
    kv.push_back({"two_lp", num((long long)two_lp(q, 5))});
    auto I = toric_ideal(a, f);
    kv.push_back({"degree", hilbert_degree(I).get_str()});
    kv.push_back({"codimension", num(codimension(I))});
    return kv;
}

ResultKV compute_sphere7_full(const Field& f) {
    auto a = configuration_from_weights(weight_configuration(seventeen_quadric_sphere()));
    auto t = hochster_betti(a, 13, f);
    ResultKV kv;
    kv.push_back({"totals", join(t.totals())});
    kv.push_back({"diagram", t.diagram()});
    return kv;
}

ResultKV compute_identified_sphere(const Field& f) {
    auto a = configuration_from_weights(weight_configuration(seventeen_quadric_sphere()));
    auto b = identify_vertices(a, 1, 7);
    auto q = toric_system(b, f);
    ResultKV kv;
    kv.push_back({"columns", num((long long)b.size())});
    kv.push_back({"quadrics", num((long long)q.count())});
    kv.push_back({"strand", join(koszul_strand_betti(q, 5))});
    auto I = toric_ideal(b, f);
    kv.push_back({"degree", hilbert_degree(I).get_str()});
    kv.push_back({"codimension", num(codimension(I))});
    // the vertex identification on the complex side: relabel 7 -> 1; the
    // resulting complex has a ridge lying in four facets
    std::vector<std::vector<int>> facets;
    std::map<int, int> relabel{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 1}};
    OrientedComplex sphere = seventeen_quadric_sphere();
    for (auto fac : sphere.facets()) {
        for (int& v : fac) v = relabel.at(v);
        facets.push_back(fac);
    }
    auto rep = validate_pseudomanifold(OrientedComplex(6, facets));
    kv.push_back({"ridge_condition", rep.ridge_condition ? "yes" : "no"});
    kv.push_back({"failing_witness", rep.failing_witness.value_or("")});
    return kv;
}

ResultKV compute_genus7(const Field&) {
    ResultKV kv;
    kv.push_back({"betti_formulas_7_13", join(betti_formulas(7, 13))});
    auto t = curve_table(7, 13);
    kv.push_back({"totals", join(t.totals)});
    kv.push_back({"row1", join(t.row1)});
    kv.push_back({"row2", join(t.row2)});
    std::string fp;
    for (auto [g, d] : feasible_pairs(7)) fp += "(" + num(g) + "," + num(d) + ") ";
    kv.push_back({"feasible_pairs", fp});
    long long constrained = 0;
    for (const auto& h : prop51_scan(1000000))
        if (h.side_ok) ++constrained;
    kv.push_back({"integral_solutions", num(constrained)});
    return kv;
}

} // namespace

const std::vector<RegistryEntry>& example_registry() {
    static const std::vector<RegistryEntry> entries = {
        {"twisted-cubic",
         "rational normal cubic: 3 quadrics, linear strand (3,2), both engines",
         "32003", 3, false,
         {{"quadrics", "3"},
          {"strand", "3 2 0"},
          {"two_lp", "2"},
          {"totals", "1 3 2"},
          {"diagram", "total: 1 3 2\n0: 1 -- --\n1: -- 3 2\n"}},
         &compute_twisted_cubic},
        {"five-cycle",
         "odd cycle specialization d=5: five rank-4 quadrics, one linear "
         "syzygy of rank 5, codimension 4",
         "32003", 7, false,
         {{"generators", "5"},
          {"quadrics", "5"},
          {"quadric_rank_max", "4"},
          {"linear_syzygies", "1"},
          {"syzygy_rank", "5"},
          {"support_dimension", "5"},
          {"codimension", "4"},
          {"degree", "11"},
          {"totals", "1 5 12 10 2"},
          {"diagram",
           "total: 1 5 12 10 2\n"
           "0: 1 -- -- -- --\n"
           "1: -- 5 1 -- --\n"
           "2: -- -- 11 10 1\n"
           "3: -- -- -- -- 1\n"}},
         &compute_five_cycle},
        {"six-cycle",
         "even cycle specialization d=6: six quadrics plus the cubic "
         "Pfaffian, one linear syzygy of rank 6, codimension 5, degree 21",
         "32003", 9, false,
         {{"generators", "7"},
          {"quadrics", "6"},
          {"quadric_rank_max", "4"},
          {"cubic", "y12*y34*y56 - y23*y45*y16"},
          {"linear_syzygies", "1"},
          {"syzygy_rank", "6"},
          {"support_dimension", "6"},
          {"codimension", "5"},
          {"degree", "21"},
          {"totals", "1 7 22 22 7 1"},
          {"diagram",
           "total: 1 7 22 22 7 1\n"
           "0: 1 -- -- -- -- --\n"
           "1: -- 6 1 -- -- --\n"
           "2: -- 1 21 21 1 --\n"
           "3: -- -- -- 1 6 --\n"
           "4: -- -- -- -- -- 1\n"}},
         &compute_six_cycle},
        {"seven-cycle",
         "odd cycle specialization d=7: strand and dimension only",
         "32003", 0, false,
         {{"generators", "7"},
          {"quadrics", "7"},
          {"quadric_rank_max", "4"},
          {"linear_syzygies", "1"},
          {"syzygy_rank", "7"},
          {"support_dimension", "7"},
          {"codimension", "6"}},
         &compute_seven_cycle},
        {"eight-cycle",
         "even cycle specialization d=8: strand and dimension only",
         "32003", 0, false,
         {{"generators", "9"},
          {"quadrics", "8"},
          {"quadric_rank_max", "4"},
          {"linear_syzygies", "1"},
          {"syzygy_rank", "8"},
          {"support_dimension", "8"},
          {"codimension", "7"}},
         &compute_eight_cycle},
        {"octahedron",
         "facet ideal of the octahedron: pole pairs give 2x5 bipyramid "
         "matrices; Tor_2 of the toric quotient in degree 3 is nonzero",
         "32003", 4, false,
         {{"quadrics", "12"},
          {"strand", "12 6 1 0"},
          {"two_lp", "3"},
          {"bipyramid_max_k", "4"},
          {"tor_2_degree_3", "64"},
          {"saturation_equals_toric", "yes"}},
         &compute_octahedron},
        {"seventeen-quadric-sphere",
         "pinned 7-vertex sphere triangulation: 17 toric quadrics, linear "
         "strand (17,19,1), degree 73, codimension 9",
         "32003", 0, false,
         {{"quadrics", "17"},
          {"strand", "17 19 1 0"},
          {"two_lp", "3"},
          {"degree", "73"},
          {"codimension", "9"}},
         &compute_sphere7},
        {"seventeen-quadric-sphere-full",
         "full Betti diagram of the pinned 7-vertex sphere (coarse bound 13; "
         "needs well over 6 GB of memory)",
         "32003", 13, true,
         {{"totals", "1 21 163 447 631 575 377 168 47 8"},
          {"diagram",
           "total: 1 21 163 447 631 575 377 168 47 8\n"
           "0: 1 -- -- -- -- -- -- -- -- --\n"
           "1: -- 17 19 1 -- -- -- -- -- --\n"
           "2: -- 4 144 444 500 209 8 -- -- --\n"
           "3: -- -- -- 2 131 365 333 93 2 --\n"
           "4: -- -- -- -- -- 1 36 75 45 8\n"}},
         &compute_sphere7_full},
        {"identified-sphere",
         "vertex identification 7 -> 1 on the pinned 7-vertex sphere: "
         "degree 56, linear strand (19,30,1), a ridge in four facets",
         "32003", 0, false,
         {{"columns", "16"},
          {"quadrics", "19"},
          {"strand", "19 30 1 0"},
          {"degree", "56"},
          {"codimension", "9"},
          {"ridge_condition", "no"},
          {"failing_witness", "ridge [1,4] lies in 4 facets"}},
         &compute_identified_sphere},
        {"genus-seven-numerics",
         "two-strand curve numerics: genus-7 degree-13 table, the "
         "genus/degree feasibility list, and the integrality scan",
         "Q", 0, false,
         {{"betti_formulas_7_13", "8 5 25 46 30 7"},
          {"totals", "1 8 30 46 30 7"},
          {"row1", "8 5"},
          {"row2", "25 46 30 7"},
          {"feasible_pairs",
           "(0,3) (1,5) (2,6) (3,8) (4,9) (5,11) (6,12) (7,13) (7,14) "},
          {"integral_solutions", "0"}},
         &compute_genus7},
    };
    return entries;
}

const RegistryEntry* find_example(const std::string& name) {
    for (const auto& e : example_registry())
        if (e.name == name) return &e;
    return nullptr;
}

VerifyResult verify_example(const RegistryEntry& e, const Field& f) {
    VerifyResult r;
    r.actual = e.compute(f);
    r.ok = (r.actual == e.expected);
    if (!r.ok) {
        std::ostringstream os;
        std::map<std::string, std::string> exp(e.expected.begin(), e.expected.end()),
            act(r.actual.begin(), r.actual.end());
        for (const auto& [k, v] : exp) {
            auto it = act.find(k);
            if (it == act.end())
                os << k << ": expected \"" << v << "\", missing\n";
            else if (it->second != v)
                os << k << ": expected \"" << v << "\", got \"" << it->second << "\"\n";
        }
        for (const auto& [k, v] : act)
            if (!exp.count(k)) os << k << ": unexpected \"" << v << "\"\n";
        if (os.str().empty()) os << "key order differs\n";
        r.diff = os.str();
    }
    return r;
}

Field parse_field_spec(const std::string& spec) {
    if (spec == "Q" || spec == "q") return Field::rationals();
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
        p = std::stoul(spec, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("field spec must be \"Q\" or a prime: " + spec);
    }
    if (pos != spec.size() || p < 2)
        throw std::invalid_argument("field spec must be \"Q\" or a prime: " + spec);
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be prime: " + spec);
    return Field::prime((std::uint32_t)p);
}

} // namespace syz
