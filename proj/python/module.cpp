// Python bindings: a thin, text-oriented surface over the core library.
// Inputs are the same JSON documents the CLI accepts; outputs are plain
// Python values or JSON strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "syz/census.hpp"
#include "syz/jsonio.hpp"
#include "syz/kozrees.hpp"
#include "syz/registry.hpp"
#include "syz/strand.hpp"
#include "syz/toricbetti.hpp"
#include "syz/witness.hpp"

namespace py = pybind11;
using namespace syz;

namespace {

Field field_of(const std::string& spec) { return parse_field_spec(spec); }

PointConfiguration configuration_of(const ParsedInput& in) {
    if (in.kind == InputKind::Configuration) return *in.configuration;
    if (in.kind == InputKind::Complex)
        return configuration_from_weights(weight_configuration(*in.complex));
    if (in.kind == InputKind::Polygon) {
        auto pts = in.polygon->lattice_points();
        long long x0 = pts[0].first, y0 = pts[0].second;
        for (const auto& q : pts) {
            x0 = std::min(x0, q.first);
            y0 = std::min(y0, q.second);
        }
        std::vector<Multidegree> cols;
        for (const auto& q : pts) cols.push_back({1, q.first - x0, q.second - y0});
        return PointConfiguration(3, cols);
    }
    throw InputError("input", "need a complex, configuration, or polygon");
}

QuadraticSystem quadratic_system_of(const ParsedInput& in, const Field& f) {
    if (in.kind == InputKind::Ideal) return QuadraticSystem::from_ideal(*in.ideal);
    auto a = configuration_of(in);
    RingPtr R = configuration_ring(a, f);
    return QuadraticSystem(R, toric_quadrics(R));
}

} // namespace

PYBIND11_MODULE(_syzforge, m) {
    m.doc() = "linear strands, Betti tables, and determinantal witnesses";

    m.def(
        "input_kind",
        [](const std::string& text) {
            switch (parse_input_text(text, Field::rationals()).kind) {
                case InputKind::Complex: return "complex";
                case InputKind::Configuration: return "configuration";
                case InputKind::Polygon: return "polygon";
                case InputKind::Ideal: return "ideal";
            }
            return "unknown";
        },
        py::arg("text"), "Classify a JSON input document.");

    m.def(
        "validate_complex",
        [](const std::string& text) {
            auto in = parse_input_text(text, Field::rationals());
            if (in.kind != InputKind::Complex)
                throw InputError("input", "expected a simplicial complex document");
            auto rep = validate_pseudomanifold(*in.complex);
            py::dict d;
            d["vertices"] = in.complex->vertex_count();
            d["facets"] = in.complex->facets().size();
            d["dimension"] = in.complex->dimension();
            d["pure"] = rep.is_pure;
            d["ridge_condition"] = rep.ridge_condition;
            d["orientations_cancel"] = rep.orientations_cancel;
            d["strongly_connected"] = rep.strongly_connected;
            d["pseudomanifold"] = rep.ok();
            if (rep.failing_witness) d["failing_witness"] = *rep.failing_witness;
            return d;
        },
        py::arg("text"), "Pseudomanifold validation report for a complex document.");

    m.def(
        "ideal_generators",
        [](const std::string& text, const std::string& field, bool facet) {
            Field f = field_of(field);
            auto in = parse_input_text(text, f);
            PolyIdeal I = [&] {
                if (in.kind == InputKind::Ideal) return *in.ideal;
                if (in.kind == InputKind::Complex && facet)
                    return pseudomanifold_ideal(*in.complex, f);
                return toric_ideal(configuration_of(in), f);
            }();
            std::vector<std::string> gens;
            for (const auto& g : I.generators()) gens.push_back(g.str());
            return gens;
        },
        py::arg("text"), py::arg("field") = "32003", py::arg("facet") = false,
        "Generators of the toric (or facet) ideal, as strings.");

    m.def(
        "betti_diagram",
        [](const std::string& text, long bound, const std::string& field) {
            Field f = field_of(field);
            auto a = configuration_of(parse_input_text(text, f));
            return hochster_betti(a, bound, f).diagram();
        },
        py::arg("text"), py::arg("bound"), py::arg("field") = "32003",
        "Betti diagram from the fiber-complex engine, coarse degree <= bound.");

    m.def(
        "betti_table_json",
        [](const std::string& text, long bound, const std::string& field) {
            Field f = field_of(field);
            auto a = configuration_of(parse_input_text(text, f));
            return betti_table_json(hochster_betti(a, bound, f));
        },
        py::arg("text"), py::arg("bound"), py::arg("field") = "32003",
        "Full Betti table (fine and coarse) as a JSON string.");

    m.def(
        "strand",
        [](const std::string& text, std::size_t imax, const std::string& field) {
            Field f = field_of(field);
            auto q = quadratic_system_of(parse_input_text(text, f), f);
            return py::make_tuple(koszul_strand_betti(q, imax), two_lp(q, imax));
        },
        py::arg("text"), py::arg("imax") = 6, py::arg("field") = "32003",
        "Linear strand via the Koszul engine: (betti numbers, strand length).");

    m.def(
        "witness",
        [](const std::string& text, std::size_t ncols, std::uint64_t seed,
           const std::string& field) -> std::optional<std::string> {
            Field f = field_of(field);
            auto in = parse_input_text(text, f);
            auto q = quadratic_system_of(in, f);
            std::string out;
            for (const auto& s : linear_first_syzygies(q)) {
                try {
                    auto fr = scroll_frame(q, s);
                    out += witness_certificate_json(scroll_extract(q, fr.w_basis, fr.y_assign));
                    continue;
                } catch (const std::exception&) {
                }
                try {
                    auto fr = pfaffian_frame(q, s);
                    out += witness_certificate_json(
                        pfaffian_extract(q, fr.w_basis, fr.y_assign));
                } catch (const std::exception&) {
                }
            }
            std::size_t n = ncols ? ncols : two_lp(q, 6) + 1;
            if (auto w = find_variable_scroll(q, n)) {
                WitnessCertificate cert{CertKind::Scroll, *w, q.quadrics(), {},
                                        is_one_generic(*w, GenericityMode::Exact2xQ), ""};
                if (!cert.genericity->exact)
                    cert.genericity =
                        is_one_generic(*w, GenericityMode::Randomized, 50, seed);
                cert.note = "variable-entry 2 x " + std::to_string(n) + " scroll";
                out += witness_certificate_json(cert);
            }
            if (out.empty()) return std::nullopt;
            return out;
        },
        py::arg("text"), py::arg("ncols") = 0, py::arg("seed") = 1,
        py::arg("field") = "32003",
        "Witness certificates as concatenated JSON documents, or None.");

    m.def("list_examples", [] {
        std::vector<py::dict> out;
        for (const auto& e : example_registry()) {
            py::dict d;
            d["name"] = e.name;
            d["summary"] = e.summary;
            d["slow"] = e.slow;
            out.push_back(std::move(d));
        }
        return out;
    });

    m.def(
        "verify_example",
        [](const std::string& name, const std::string& field) {
            const RegistryEntry* e = find_example(name);
            if (!e) throw std::invalid_argument("unknown example: " + name);
            Field f = field_of(field.empty() ? e->default_field : field);
            auto r = verify_example(*e, f);
            py::dict d;
            d["ok"] = r.ok;
            d["checks"] = r.actual.size();
            d["diff"] = r.diff;
            return d;
        },
        py::arg("name"), py::arg("field") = "",
        "Recompute a pinned example and compare against its stored values.");

    m.def(
        "polygon_census",
        [](long edge_bound, const std::string& field) {
            Field f = field_of(field);
            std::vector<std::string> out;
            for (const auto& p : enumerate_polygons(edge_bound))
                out.push_back(polygon_report_json(polygon_report(p, f)));
            return out;
        },
        py::arg("edge_bound") = 9, py::arg("field") = "32003",
        "Reports for all small lattice polygons, as JSON strings.");

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
}
