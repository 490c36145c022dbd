#include "qvl/slice.hpp"

#include "qvl/errors.hpp"
#include "qvl/weights.hpp"

namespace qvl {

Rat eta_apply_row(const SliceData& s, size_t row, const RatVec& lambda) {
    if (row >= s.eta.size()) throw input_error("eta row out of range");
    return dot(lambda, s.eta[row]);
}

static int to_arrow_count(const Int& value, const char* what) {
    if (value < 0 || value > 1000000)
        throw internal_error(std::string(what) + ": representation type is inconsistent");
    return static_cast<int>(value);
}

SliceData slice_quiver(const Quiver& q, const IntVec& w, const RepType& rt) {
    check_index_dim(q, w.size(), "slice_quiver w");
    check_index_dim(q, rt.v0.size(), "slice_quiver v0");
    for (auto& [root, mult] : rt.summands) {
        check_index_dim(q, root.size(), "slice_quiver summand");
        if (mult <= 0) throw input_error("slice_quiver: nonpositive multiplicity");
    }

    SliceData s;
    int k = static_cast<int>(rt.summands.size());
    s.slice_quiver.n = k;
    for (int i = 0; i < k; ++i) {
        const IntVec& vi = rt.summands[i].first;
        Int norm2 = cartan_pair(q, vi, vi);  // 2 for a real root, 0 for delta multiples
        int loops = to_arrow_count(1 - norm2 / 2, "slice loops");
        for (int l = 0; l < loops; ++l) s.slice_quiver.arrows.emplace_back(i, i);
        for (int j = i + 1; j < k; ++j) {
            int a = to_arrow_count(-cartan_pair(q, vi, rt.summands[j].first), "slice arrows");
            for (int l = 0; l < a; ++l) s.slice_quiver.arrows.emplace_back(i, j);
        }
        s.v_bar.push_back(rt.summands[i].second);
        Int wb = dot(w, vi) - cartan_pair(q, rt.v0, vi);
        if (wb < 0) throw internal_error("slice framing: representation type is inconsistent");
        s.w_bar.push_back(wb);
        s.eta.push_back(vi);
    }
    return s;
}

SliceData rank1_slice(const Quiver& q, const IntVec& v, const IntVec& w,
                      const IntVec& wall_normal) {
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("rank1_slice: unsupported quiver class");
    if (!is_dominant(q, {w, v})) throw input_error("rank1_slice: weight is not dominant");
    check_index_dim(q, wall_normal.size(), "rank1_slice wall");

    IntVec d;
    bool imaginary = false;
    if (cls.has_delta()) {
        d = delta(q);
        imaginary = wall_normal == d;
    }

    SliceData s;
    s.slice_quiver.n = 1;
    s.eta.push_back(wall_normal);
    if (imaginary) {
        Int lv = level(q, w);
        Int m;
        if (lv == 1) {
            // v = n*delta on the level-one wall
            for (int i = 0; i < q.n; ++i)
                if (v[i] % d[i] != 0 || (i > 0 && v[i] / d[i] != v[0] / d[0]))
                    throw input_error("rank1_slice: v is not a multiple of delta");
            m = v[0] / d[0];
            if (m <= 1) throw input_error("rank1_slice: not a classical wall");
        } else {
            m = max_shift(q, {w, v}, d);
            if (m < 1) throw input_error("rank1_slice: not a classical wall");
        }
        s.slice_quiver.arrows.emplace_back(0, 0);
        s.v_bar.push_back(m);
        s.w_bar.push_back(lv);
        return s;
    }

    if (cartan_pair(q, wall_normal, wall_normal) != 2)
        throw input_error("rank1_slice: wall normal not recognized");
    Int m = max_shift(q, {w, v}, wall_normal);
    if (m < 1) throw input_error("rank1_slice: not a classical wall");
    Int pairing = dot(w, wall_normal) - cartan_pair(q, v, wall_normal);  // <nu, beta>
    s.v_bar.push_back(m);
    s.w_bar.push_back(pairing + 2 * m);
    return s;
}

} // namespace qvl
