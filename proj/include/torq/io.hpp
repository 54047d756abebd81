#ifndef TORQ_IO_HPP
#define TORQ_IO_HPP

#include <string>

#include "json.hpp"
#include "torq/sheafcalc.hpp"

namespace torq::io {

using json = nlohmann::json;

/// File-level failure (missing file, malformed JSON); maps to exit 1,
/// while torq::error (semantic failure) maps to exit 2.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integers are JSON numbers while exactly representable in a double
/// (|v| <= 2^53 - 1) and decimal strings beyond that; both are accepted
/// on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// Matrices carry explicit "rows"/"cols" and row-major "entries".
/// phi1 is stored as the matrix of M -> Mhat on column vectors
/// (rows = rank of Mhat), phi2 as Mhat -> Z^rays (rows = rays).
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

json divisor_to_json(const WeilDivisor& d);
/// The "fan" field may be inline or a path relative to base_dir.
WeilDivisor divisor_from_json(const json& j, const std::string& base_dir);

json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const json& j, const std::string& base_dir);

json ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const json& j);

json presentation_to_json(const QuotientPresentation& qp);
QuotientPresentation presentation_from_json(const json& j,
                                            const std::string& base_dir);

/// Parses the file; throws io_error on I/O or JSON syntax problems.
json load_json_file(const std::string& path);

/// The document kind ("fan", "divisor", "triangle", "presentation",
/// "ideal"); throws torq::error if absent or unknown.
std::string document_kind(const json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing
/// newline. All emitters above produce deterministic structures, so
/// output is byte-stable.
std::string dump_canonical(const json& j);

} // namespace torq::io

#endif
