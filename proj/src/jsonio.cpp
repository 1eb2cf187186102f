#include "syz/jsonio.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace syz {

namespace {

using nlohmann::json;

long long require_int(const json& j, const std::string& loc) {
    if (!j.is_number_integer()) throw InputError(loc, "expected an integer");
    return j.get<long long>();
}

const json& require_array(const json& j, const std::string& key, const std::string& loc) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_array())
        throw InputError(loc, "expected an array field \"" + key + "\"");
    return *it;
}

ParsedInput parse_complex(const json& j) {
    long long d = require_int(j.at("vertices"), "vertices");
    const json& facets = require_array(j, "facets", "facets");
    std::vector<std::vector<int>> fs;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::string loc = "facets[" + std::to_string(i) + "]";
        if (!facets[i].is_array()) throw InputError(loc, "expected a vertex list");
        std::vector<int> fac;
        for (const auto& v : facets[i]) {
            long long label = require_int(v, loc);
            if (label < 1 || label > d)
                throw InputError(loc, "vertex label " + std::to_string(label) +
                                          " outside 1.." + std::to_string(d));
            if (std::find(fac.begin(), fac.end(), (int)label) != fac.end())
                throw InputError(loc, "repeated vertex " + std::to_string(label));
            fac.push_back((int)label);
        }
        fs.push_back(std::move(fac));
    }
    ParsedInput out{InputKind::Complex, {}, {}, {}, {}};
    try {
        out.complex.emplace((int)d, std::move(fs));
    } catch (const std::exception& e) {
        throw InputError("facets", e.what());
    }
    if (j.contains("dim")) {
        long long n = require_int(j.at("dim"), "dim");
        if (n != out.complex->dimension())
            throw InputError("dim", "declared dimension " + std::to_string(n) +
                                        " but facets have dimension " +
                                        std::to_string(out.complex->dimension()));
    }
    return out;
}

ParsedInput parse_configuration(const json& j) {
    long long p = require_int(j.at("ambient"), "ambient");
    if (p <= 0) throw InputError("ambient", "ambient dimension must be positive");
    const json& cols = require_array(j, "columns", "columns");
    std::vector<Multidegree> columns;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::string loc = "columns[" + std::to_string(i) + "]";
        if (!cols[i].is_array() || cols[i].size() != (std::size_t)p)
            throw InputError(loc, "expected " + std::to_string(p) + " coordinates");
        Multidegree m;
        for (const auto& x : cols[i]) m.push_back(require_int(x, loc));
        columns.push_back(std::move(m));
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
        const json& nm = require_array(j, "names", "names");
        for (const auto& n : nm) {
            if (!n.is_string()) throw InputError("names", "expected strings");
            names.push_back(n.get<std::string>());
        }
        if (names.size() != columns.size())
            throw InputError("names", "name count differs from column count");
    }
    ParsedInput out{InputKind::Configuration, {}, {}, {}, {}};
    try {
        out.configuration.emplace((std::size_t)p, std::move(columns), std::move(names));
    } catch (const std::exception& e) {
        throw InputError("columns", e.what());
    }
    return out;
}

ParsedInput parse_polygon(const json& j) {
    const json& verts = require_array(j, "vertices", "vertices");
    std::vector<LatticePolygon::Point> pts;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string loc = "vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array() || verts[i].size() != 2)
            throw InputError(loc, "expected a pair [x, y]");
        pts.push_back({require_int(verts[i][0], loc), require_int(verts[i][1], loc)});
    }
    ParsedInput out{InputKind::Polygon, {}, {}, {}, {}};
    try {
        out.polygon.emplace(std::move(pts));
    } catch (const std::exception& e) {
        throw InputError("vertices", e.what());
    }
    return out;
}

ParsedInput parse_ideal(const json& j, const Field& f) {
    const json& vars = require_array(j, "vars", "vars");
    std::vector<VarInfo> vi;
    for (const auto& v : vars) {
        if (!v.is_string()) throw InputError("vars", "expected variable name strings");
        vi.push_back({v.get<std::string>(), VarRole::Aux, {}});
    }
    if (vi.empty()) throw InputError("vars", "need at least one variable");
    RingPtr R;
    try {
        R = std::make_shared<RingSpec>(f, vi);
    } catch (const std::exception& e) {
        throw InputError("vars", e.what());
    }
    const json& gens = require_array(j, "gens", "gens");
    std::vector<MultiPoly> ps;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string loc = "gens[" + std::to_string(i) + "]";
        if (!gens[i].is_string()) throw InputError(loc, "expected a polynomial string");
        MultiPoly p;
        try {
            p = parse_poly(R, gens[i].get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(loc, e.what());
        }
        if (!p.is_coarse_homogeneous())
            throw InputError(loc, "generator is not homogeneous");
        ps.push_back(std::move(p));
    }
    ParsedInput out{InputKind::Ideal, {}, {}, {}, {}};
    out.ideal.emplace(R, std::move(ps));
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json matrix_json(const LinearFormMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < m.cols(); ++jx) row.push_back(m.at(i, jx).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

ParsedInput parse_input_text(const std::string& text, const Field& f) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("byte " + std::to_string(e.byte), e.what());
    }
    if (!j.is_object()) throw InputError("document", "expected a JSON object");
    if (j.contains("gens")) return parse_ideal(j, f);
    if (j.contains("columns")) return parse_configuration(j);
    if (j.contains("facets")) return parse_complex(j);
    if (j.contains("vertices")) {
        if (j.at("vertices").is_array()) return parse_polygon(j);
        throw InputError("document", "\"vertices\" is a number but no \"facets\" given");
    }
    throw InputError("document",
                     "unrecognized shape: expected facets / columns / vertices / gens");
}

ParsedInput parse_input_file(const std::string& path, const Field& f) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input_text(ss.str(), f);
}

std::string betti_table_json(const BettiTable& t) {
    json j;
    j["bound"] = t.bound;
    json entries = json::array();
    for (const auto& [key, dim] : t.coarse) {
        json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["dim"] = dim;
        entries.push_back(std::move(e));
    }
    j["coarse"] = std::move(entries);
    j["totals"] = t.totals();
    j["diagram"] = t.diagram();
    return dump(j);
}

std::string witness_certificate_json(const WitnessCertificate& c) {
    json j;
    switch (c.kind) {
        case CertKind::Scroll: j["kind"] = "scroll"; break;
        case CertKind::PfaffianNet: j["kind"] = "pfaffian-net"; break;
        case CertKind::BipartiteBlock: j["kind"] = "bipartite-block"; break;
        case CertKind::Bipyramid: j["kind"] = "bipyramid"; break;
    }
    j["matrix"] = matrix_json(c.matrix);
    json basis = json::array();
    for (const auto& q : c.quadric_basis) basis.push_back(q.str());
    j["quadric_basis"] = std::move(basis);
    json proofs = json::array();
    for (const auto& p : c.proofs) {
        json e;
        e["label"] = p.label;
        e["element"] = p.element.str();
        json coords = json::array();
        for (const auto& x : p.coords) coords.push_back(x.str());
        e["coords"] = std::move(coords);
        e["via_closure"] = p.via_closure;
        e["note"] = p.note;
        proofs.push_back(std::move(e));
    }
    j["proofs"] = std::move(proofs);
    if (c.genericity) {
        json g;
        g["one_generic"] = c.genericity->one_generic;
        g["exact"] = c.genericity->exact;
        g["evidence"] = c.genericity->evidence;
        if (!c.genericity->exact) {
            g["seed"] = c.genericity->seed;
            g["samples"] = c.genericity->samples;
            g["failure_bound"] = c.genericity->failure_bound;
        }
        if (!c.genericity->failing_combination.empty()) {
            json fc = json::array();
            for (const auto& x : c.genericity->failing_combination) fc.push_back(x.str());
            g["failing_combination"] = std::move(fc);
        }
        j["genericity"] = std::move(g);
    }
    j["note"] = c.note;
    return dump(j);
}

std::string polygon_report_json(const PolygonReport& r) {
    json j;
    j["twice_area"] = r.stats.twice_area;
    j["boundary"] = r.stats.boundary;
    j["interior"] = r.stats.interior;
    j["degree"] = r.stats.degree;
    j["quadrics"] = r.quadrics;
    j["quadratically_generated"] = r.quadratically_generated;
    j["strand"] = r.strand;
    j["two_lp"] = r.two_lp;
    j["threshold"] = r.threshold;
    j["applicable"] = r.applicable;
    j["witness_found"] = r.witness_found;
    j["witness_rows"] = r.witness_rows;
    j["status"] = r.status;
    return dump(j);
}

std::string scan_report_json(const PseudomanifoldScanReport& r) {
    json j;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json x;
        x["vertices"] = e.complex.vertex_count();
        x["facets"] = e.complex.facets();
        x["labelings"] = e.labelings;
        x["strand"] = e.strand;
        x["two_lp"] = e.two_lp;
        x["max_bipyramid_k"] = e.max_bipyramid_k;
        x["scroll_found"] = e.scroll_found;
        x["counterexample"] = e.counterexample;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["counterexamples"] = r.counterexamples;
    return dump(j);
}

} // namespace syz
