#include "qvl/weights.hpp"

#include "qvl/errors.hpp"

namespace qvl {

static void check_fw(const Quiver& q, const FramedWeight& fw) {
    check_index_dim(q, fw.framing.size(), "framed weight");
    check_index_dim(q, fw.c.size(), "framed weight");
    for (auto& v : fw.framing)
        if (v < 0) throw input_error("framing must be nonnegative");
}

IntVec coroot_pairings(const Quiver& q, const FramedWeight& fw) {
    check_fw(q, fw);
    auto c = cartan_matrix(q);
    IntVec d(q.n);
    for (int i = 0; i < q.n; ++i) {
        Int s = fw.framing[i];
        for (int j = 0; j < q.n; ++j) s -= c[i][j] * fw.c[j];
        d[i] = s;
    }
    return d;
}

bool is_dominant(const Quiver& q, const FramedWeight& fw) {
    for (auto& d : coroot_pairings(q, fw))
        if (d < 0) return false;
    return true;
}

Int level(const Quiver& q, const IntVec& w) {
    check_index_dim(q, w.size(), "level");
    return dot(w, delta(q));
}

ConjugationResult dominant_conjugate(const Quiver& q, const FramedWeight& fw) {
    check_fw(q, fw);
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("dominant_conjugate: unsupported quiver class");

    ConjugationResult res{fw.c, {}};
    auto cm = cartan_matrix(q);
    auto pairing = [&](int i) {
        Int s = fw.framing[i];
        for (int j = 0; j < q.n; ++j) s -= cm[i][j] * res.c[j];
        return s;
    };
    auto find_negative = [&]() {
        for (int i = 0; i < q.n; ++i)
            if (pairing(i) < 0) return i;
        return -1;
    };
    int neg = find_negative();
    if (neg < 0) return res;

    if (cls.affine() && level(q, fw.framing) < 1)
        throw input_error("dominant_conjugate: affine framing of level < 1");

    Int cap = 100;
    for (auto& v : fw.c) cap += 10 * abs(v);
    for (auto& v : fw.framing) cap += 10 * v;
    for (Int it = 0; neg >= 0; ++it) {
        if (it >= cap) throw internal_error("dominant_conjugate: termination guard tripped");
        res.c[neg] += pairing(neg);  // the reflection s_neg; pairing is negative here
        res.chain.push_back(neg);
        neg = find_negative();
    }
    return res;
}

bool is_weight(const Quiver& q, const FramedWeight& fw) {
    check_fw(q, fw);
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("is_weight: unsupported quiver class");
    if (cls.affine() && level(q, fw.framing) < 1)
        throw input_error("is_weight: affine framing must have level >= 1");

    // Descend to the dominant conjugate, rejecting as soon as omega - mu
    // leaves the positive root cone.
    IntVec c = fw.c;
    for (auto& v : c)
        if (v < 0) return false;
    auto cm = cartan_matrix(q);
    auto pairing = [&](int i) {
        Int s = fw.framing[i];
        for (int j = 0; j < q.n; ++j) s -= cm[i][j] * c[j];
        return s;
    };
    for (;;) {
        int neg = -1;
        for (int i = 0; i < q.n; ++i)
            if (pairing(i) < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return true;  // dominant with all c >= 0
        c[neg] += pairing(neg);
        if (c[neg] < 0) return false;
    }
}

Int max_shift(const Quiver& q, const FramedWeight& nu, const IntVec& root_coords) {
    check_fw(q, nu);
    check_index_dim(q, root_coords.size(), "max_shift");
    if (!is_dominant(q, nu)) throw input_error("max_shift: weight is not dominant");

    // nu + m*beta has c-coordinates v - m*b; membership forces them >= 0,
    // which bounds the search.
    Int bound = -1;
    for (int i = 0; i < q.n; ++i)
        if (root_coords[i] > 0) {
            Int cap = nu.c[i] / root_coords[i];
            if (bound < 0 || cap < bound) bound = cap;
        }
    if (bound < 0) throw input_error("max_shift: root has no positive entry");

    Int m = 0;
    for (Int k = 1; k <= bound; ++k) {
        IntVec c(q.n);
        for (int i = 0; i < q.n; ++i) c[i] = nu.c[i] - k * root_coords[i];
        if (!is_weight(q, {nu.framing, c})) break;
        m = k;
    }
    return m;
}

} // namespace qvl
