// Test-only flatness oracle. Scans every v0 <= v directly and compares the
// inequality against the best achievable right-hand side: real summands never
// change it, and the number of imaginary summands is maximized by splitting
// the remainder into as many delta's as fit. No multiset search involved.
#ifndef QVL_TESTS_FLAT_ORACLE_HPP
#define QVL_TESTS_FLAT_ORACLE_HPP

#include "qvl/quiver.hpp"

namespace qvl_tests {

inline bool oracle_flat(const qvl::Quiver& q, const qvl::IntVec& v, const qvl::IntVec& w) {
    using qvl::Int;
    using qvl::IntVec;
    auto cls = qvl::classify(q);
    qvl::IntVec d;
    if (cls.has_delta()) d = qvl::delta(q);

    Int lhs = 2 * qvl::dot(w, v) - qvl::cartan_pair(q, v, v);
    IntVec v0(v.size(), 0);
    for (;;) {
        bool is_v = true;
        for (size_t i = 0; i < v.size(); ++i)
            if (v0[i] != v[i]) is_v = false;
        if (!is_v) {
            Int s = 0;
            if (!d.empty()) {
                bool first = true;
                for (size_t i = 0; i < v.size(); ++i) {
                    Int cap = (v[i] - v0[i]) / d[i];
                    if (first || cap < s) s = cap;
                    first = false;
                }
            }
            Int rhs = 2 * qvl::dot(w, v0) - qvl::cartan_pair(q, v0, v0) + 2 * s;
            if (rhs > lhs) return false;
        }
        size_t i = 0;
        while (i < v0.size() && v0[i] == v[i]) v0[i] = 0, ++i;
        if (i == v0.size()) break;
        v0[i] += 1;
    }
    return true;
}

// enumerate all nonnegative vectors of a given total over n slots
inline void compositions(int n, int total, std::vector<qvl::IntVec>& out) {
    qvl::IntVec cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            cur[pos] = k;
            self(self, pos + 1, rest - k);
        }
    };
    if (n > 0) rec(rec, 0, total);
}

// all nonnegative vectors with sum <= cap
inline std::vector<qvl::IntVec> vectors_up_to(int n, int cap) {
    std::vector<qvl::IntVec> out;
    for (int t = 0; t <= cap; ++t) compositions(n, t, out);
    return out;
}

} // namespace qvl_tests

#endif
