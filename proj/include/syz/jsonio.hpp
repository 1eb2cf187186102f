#ifndef SYZ_JSONIO_HPP
#define SYZ_JSONIO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "syz/census.hpp"
#include "syz/groebner.hpp"
#include "syz/simplicial.hpp"
#include "syz/toricbetti.hpp"
#include "syz/witness.hpp"

namespace syz {

// parse failure with the JSON location that caused it
class InputError : public std::runtime_error {
public:
    InputError(const std::string& location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(location) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

enum class InputKind { Complex, Configuration, Polygon, Ideal };

// exactly one member is set, matching `kind`
struct ParsedInput {
    InputKind kind;
    std::optional<OrientedComplex> complex;
    std::optional<PointConfiguration> configuration;
    std::optional<LatticePolygon> polygon;
    std::optional<PolyIdeal> ideal;
};

// Dispatch on document shape:
//   {"vertices": d, "facets": [[v,...],...]}      -> OrientedComplex
//   {"ambient": p, "columns": [[..],..], "names"?} -> PointConfiguration
//   {"vertices": [[x,y],...]}                      -> LatticePolygon
//   {"vars": [..], "gens": ["..",..]}              -> PolyIdeal (coarse
//                                                     homogeneous generators)
ParsedInput parse_input_text(const std::string& text, const Field& f);
ParsedInput parse_input_file(const std::string& path, const Field& f);

// serializers (ASCII JSON, 2-space indent, trailing newline; byte-stable)
std::string betti_table_json(const BettiTable& t);
std::string witness_certificate_json(const WitnessCertificate& c);
std::string polygon_report_json(const PolygonReport& r);
std::string scan_report_json(const PseudomanifoldScanReport& r);

} // namespace syz

#endif
