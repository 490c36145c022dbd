// JSON (de)serialization for quivers, walls, slices and verdicts.
// Rationals travel as "p" / "p/q" strings so they round-trip bit-exactly.
#ifndef QVL_JSON_IO_HPP
#define QVL_JSON_IO_HPP

#include "qvl/localize.hpp"

#include <json.hpp>

namespace qvl {

using json = nlohmann::json;

json int_to_json(const Int& v);
json intvec_to_json(const IntVec& v);
json ratvec_to_json(const RatVec& v);
IntVec intvec_from_json(const json& j);
RatVec ratvec_from_json(const json& j);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json wall_to_json(const HyperplaneFamily& f);
json analysis_to_json(const Arrangement& arr, bool star);
json verdict_to_json(const Verdict& v);
json slice_to_json(const SliceData& s);
json rep_type_to_json(const RepType& rt);
json leaves_to_json(const LeavesResult& lr);
json slice_transfer_to_json(const SliceTransferReport& rep);

} // namespace qvl

#endif
