#include "qvl/json_io.hpp"

#include "qvl/errors.hpp"

#include <limits>

namespace qvl {

json int_to_json(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        return rat_to_string(Rat(v));
    return static_cast<long long>(v);
}

json intvec_to_json(const IntVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(int_to_json(x));
    return a;
}

json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

static Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = parse_rational(j.get<std::string>());
        if (rat_den(r) != 1) throw input_error("expected an integer, got a fraction");
        return rat_num(r);
    }
    throw input_error("expected an integer");
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    IntVec v;
    for (auto& e : j) v.push_back(int_from_json(e));
    return v;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of rationals");
    RatVec v;
    for (auto& e : j) {
        if (e.is_number_integer())
            v.push_back(Rat(e.get<long long>()));
        else if (e.is_string())
            v.push_back(parse_rational(e.get<std::string>()));
        else
            throw input_error("expected an integer or a 'p/q' string");
    }
    return v;
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (auto [t, h] : q.arrows) arrows.push_back(json::array({t, h}));
    return json{{"vertices", q.n}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw input_error("quiver JSON needs 'vertices' and 'arrows'");
    Quiver q;
    q.n = j.at("vertices").get<int>();
    for (auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2) throw input_error("arrow must be a pair [tail, head]");
        q.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return q;
}

json wall_to_json(const HyperplaneFamily& f) {
    return json{{"normal", intvec_to_json(f.wall.normal)},
                {"kind", f.wall.imaginary ? "imaginary" : "real"},
                {"m", int_to_json(f.wall.m)},
                {"w_bar", int_to_json(f.wall.w_bar)},
                {"v_bar", int_to_json(f.wall.v_bar)},
                {"singular_offsets", ratvec_to_json(f.offsets)},
                {"shift_modulus", int_to_json(f.shift_modulus)}};
}

json analysis_to_json(const Arrangement& arr, bool star) {
    json walls = json::array();
    for (auto& f : arr.families) walls.push_back(wall_to_json(f));
    json out{{"class", arr.base.cls.label()},
             {"v", intvec_to_json(arr.base.v_input)},
             {"w", intvec_to_json(arr.base.w)},
             {"flat", arr.base.flatness.flat},
             {"flat_fast_path", arr.base.flatness.fast_path},
             {"dominantized", arr.base.dominantized},
             {"v_dominant", intvec_to_json(arr.base.v_dominant)},
             {"empty_variety", arr.base.empty_variety},
             {"walls", walls},
             {"star", star}};
    if (arr.base.dominantized) {
        json chain = json::array();
        for (int i : arr.base.chain) chain.push_back(i);
        out["chain"] = chain;
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    json walls = json::array();
    for (auto& d : v.walls) {
        json e{{"normal", intvec_to_json(d.normal)},
               {"pairing", rat_to_string(d.pairing)},
               {"relevant", d.relevant}};
        if (d.has_threshold) e["threshold"] = rat_to_string(d.threshold);
        if (d.side != 0) e["side"] = d.side > 0 ? "+" : "-";
        walls.push_back(std::move(e));
    }
    return json{{"question", v.question},
                {"holds", v.holds},
                {"confidence", to_string(v.confidence)},
                {"basis", v.basis},
                {"walls", walls}};
}

json slice_to_json(const SliceData& s) {
    json j = quiver_to_json(s.slice_quiver);
    j["v_bar"] = intvec_to_json(s.v_bar);
    j["w_bar"] = intvec_to_json(s.w_bar);
    json eta = json::array();
    for (auto& row : s.eta) eta.push_back(intvec_to_json(row));
    j["eta"] = eta;
    return j;
}

json rep_type_to_json(const RepType& rt) {
    json summands = json::array();
    for (auto& [root, mult] : rt.summands)
        summands.push_back(json{{"root", intvec_to_json(root)}, {"multiplicity", int_to_json(mult)}});
    return json{{"v0", intvec_to_json(rt.v0)}, {"summands", summands}, {"minimal", rt.minimal}};
}

json leaves_to_json(const LeavesResult& lr) {
    json leaves = json::array();
    for (auto& rt : lr.leaves) leaves.push_back(rep_type_to_json(rt));
    return json{{"is_wall", lr.is_wall}, {"leaves", leaves}};
}

json slice_transfer_to_json(const SliceTransferReport& rep) {
    json entries = json::array();
    for (auto& e : rep.entries)
        entries.push_back(json{{"normal", intvec_to_json(e.wall.normal)},
                               {"lambda_bar", rat_to_string(e.lambda_bar)},
                               {"theta_bar", rat_to_string(e.theta_bar)},
                               {"verdict", verdict_to_json(e.verdict)}});
    return json{{"ambient_holds", rep.ambient.holds},
                {"entries", entries},
                {"violation", rep.violation}};
}

} // namespace qvl
