#include "qvl/flatness.hpp"

#include "qvl/errors.hpp"
#include "qvl/weights.hpp"

#include <algorithm>
#include <map>

namespace qvl {

namespace {

// Shared enumeration core. Maximizes
//     2*w.rem - (rem,rem)_2 + sum of per-part bonuses
// over all nonempty multisets of pool roots with componentwise sum <= target,
// where rem = target - sum and (.,.)_2 is the doubled Tits form. Memoized on
// (remaining vector, minimal part index). Everything is kept doubled so the
// arithmetic stays integral.
struct DecompositionSearch {
    const Quiver& q;
    const IntVec& w;
    std::vector<IntVec> roots;
    std::vector<Int> bonus;
    long long budget;
    // value plus the index of the part chosen next (-1 = stop here)
    std::map<std::pair<int, IntVec>, std::pair<Int, int>> memo;

    Int stop_value(const IntVec& rem) const {
        return 2 * dot(w, rem) - cartan_pair(q, rem, rem);
    }

    static bool fits(const IntVec& root, const IntVec& rem) {
        for (size_t i = 0; i < rem.size(); ++i)
            if (root[i] > rem[i]) return false;
        return true;
    }

    std::pair<Int, int> best(const IntVec& rem, int idx) {
        auto key = std::make_pair(idx, rem);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (--budget < 0) throw budget_error("decomposition enumeration exceeded budget");
        Int best_val = stop_value(rem);
        int choice = -1;
        for (int j = idx; j < static_cast<int>(roots.size()); ++j) {
            if (!fits(roots[j], rem)) continue;
            IntVec next = rem;
            for (size_t i = 0; i < next.size(); ++i) next[i] -= roots[j][i];
            Int val = best(next, j).first + bonus[j];
            if (val > best_val) {
                best_val = val;
                choice = j;
            }
        }
        auto res = std::make_pair(best_val, choice);
        memo[key] = res;
        return res;
    }

    // Maximum over nonempty multisets; nullopt when no root fits at all.
    std::optional<Int> run(const IntVec& target) {
        std::optional<Int> best_val;
        for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
            if (!fits(roots[j], target)) continue;
            IntVec next = target;
            for (size_t i = 0; i < next.size(); ++i) next[i] -= roots[j][i];
            Int val = best(next, j).first + bonus[j];
            if (!best_val || val > *best_val) best_val = val;
        }
        return best_val;
    }

    // Reconstructs a multiset achieving at least `value`.
    Decomposition reconstruct(const IntVec& target, const Int& value) {
        for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
            if (!fits(roots[j], target)) continue;
            IntVec rem = target;
            for (size_t i = 0; i < rem.size(); ++i) rem[i] -= roots[j][i];
            if (best(rem, j).first + bonus[j] < value) continue;
            Decomposition d;
            d.parts.push_back(roots[j]);
            int idx = j;
            for (;;) {
                int choice = best(rem, idx).second;
                if (choice < 0) break;
                d.parts.push_back(roots[choice]);
                for (size_t i = 0; i < rem.size(); ++i) rem[i] -= roots[choice][i];
                idx = choice;
            }
            d.v0 = rem;
            return d;
        }
        throw internal_error("decomposition reconstruction failed");
    }
};

void check_dim_vector(const Quiver& q, const IntVec& v, const char* what) {
    check_index_dim(q, v.size(), what);
    for (auto& x : v)
        if (x < 0) throw input_error(std::string(what) + ": negative entry");
}

} // namespace

FlatnessReport is_flat(const Quiver& q, const IntVec& v, const IntVec& w,
                       long long budget, bool use_fast_path) {
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("is_flat: unsupported quiver class");
    check_dim_vector(q, v, "is_flat v");
    check_dim_vector(q, w, "is_flat w");

    if (use_fast_path && is_dominant(q, {w, v})) return {true, true, std::nullopt};

    DecompositionSearch search{q, w, {}, {}, budget, {}};
    for (auto& r : positive_roots_upto(q, v)) {
        search.roots.push_back(r.coords);
        search.bonus.push_back(2 - cartan_pair(q, r.coords, r.coords));
    }
    Int lhs = 2 * dot(w, v) - cartan_pair(q, v, v);
    auto max_rhs = search.run(v);
    if (!max_rhs || *max_rhs <= lhs) return {true, false, std::nullopt};
    return {false, false, search.reconstruct(v, *max_rhs)};
}

bool is_irreducible_dim(const Quiver& q, const IntVec& v0, const IntVec& w,
                        const std::vector<Root>& allowed_summands, long long budget) {
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("is_irreducible_dim: unsupported quiver class");
    check_dim_vector(q, v0, "is_irreducible_dim v0");
    check_dim_vector(q, w, "is_irreducible_dim w");

    IntVec framed(v0);
    framed.push_back(1);
    if (!is_root(framed_quiver(q, w), framed)) return false;

    IntVec d;
    if (cls.has_delta()) d = delta(q);
    DecompositionSearch search{q, w, {}, {}, budget, {}};
    for (auto& r : allowed_summands) {
        bool dup = false;
        for (auto& seen : search.roots)
            if (seen == r.coords) dup = true;
        if (dup) continue;
        search.roots.push_back(r.coords);
        // only summands equal to delta itself enter the count s
        search.bonus.push_back(!d.empty() && r.coords == d ? Int(2) : Int(0));
    }
    Int lhs = 2 * dot(w, v0) - cartan_pair(q, v0, v0);
    auto max_rhs = search.run(v0);
    return !max_rhs || *max_rhs < lhs;
}

LeavesResult leaves_on_wall(const Quiver& q, const IntVec& v, const IntVec& w,
                            const IntVec& wall_normal) {
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("leaves_on_wall: unsupported quiver class");
    check_dim_vector(q, v, "leaves_on_wall v");
    check_dim_vector(q, w, "leaves_on_wall w");
    check_index_dim(q, wall_normal.size(), "leaves_on_wall wall");
    if (!is_dominant(q, {w, v})) throw input_error("leaves_on_wall: weight is not dominant");

    IntVec d;
    bool imaginary = false;
    if (cls.has_delta()) {
        d = delta(q);
        imaginary = wall_normal == d;
    }
    if (!imaginary) {
        bool positive = false;
        for (auto& x : wall_normal) {
            if (x < 0) throw input_error("leaves_on_wall: wall normal not recognized");
            if (x > 0) positive = true;
        }
        if (!positive || cartan_pair(q, wall_normal, wall_normal) != 2)
            throw input_error("leaves_on_wall: wall normal not recognized");
    }

    LeavesResult out;
    if (imaginary && level(q, w) == 1) {
        // v = n*delta; leaves are indexed by the partitions of n
        Int n = -1;
        for (int i = 0; i < q.n; ++i) {
            if (v[i] % d[i] != 0) throw input_error("leaves_on_wall: v is not a multiple of delta");
            Int k = v[i] / d[i];
            if (n >= 0 && k != n) throw input_error("leaves_on_wall: v is not a multiple of delta");
            n = k;
        }
        if (n <= 1) {
            out.is_wall = false;
            out.leaves.push_back({v, {}, false});
            return out;
        }
        out.is_wall = true;
        // all partitions of n, parts descending within each
        std::vector<std::vector<Int>> parts_list;
        std::vector<Int> cur;
        auto rec = [&](auto&& self, Int rest, Int maxpart) -> void {
            if (rest == 0) {
                parts_list.push_back(cur);
                return;
            }
            for (Int p = std::min(rest, maxpart); p >= 1; --p) {
                cur.push_back(p);
                self(self, rest - p, p);
                cur.pop_back();
            }
        };
        rec(rec, n, n);
        std::sort(parts_list.begin(), parts_list.end(),
                  [](const std::vector<Int>& a, const std::vector<Int>& b) {
                      if (a.size() != b.size()) return a.size() > b.size();
                      return a < b;
                  });
        IntVec zero(q.n, 0);
        for (auto& tau : parts_list) {
            RepType rt{zero, {}, false};
            for (auto& p : tau) rt.summands.emplace_back(d, p);
            out.leaves.push_back(std::move(rt));
        }
        out.leaves.back().minimal = true;  // one-part partition sorts last
        return out;
    }

    const IntVec& b = imaginary ? d : wall_normal;
    Int m = max_shift(q, {w, v}, b);
    out.is_wall = m >= 1;
    for (Int i = 0; i <= m; ++i) {
        IntVec v0(q.n);
        for (int j = 0; j < q.n; ++j) v0[j] = v[j] - i * b[j];
        RepType rt{std::move(v0), {}, false};
        if (i > 0) rt.summands.emplace_back(b, i);
        out.leaves.push_back(std::move(rt));
    }
    if (out.is_wall) out.leaves.back().minimal = true;
    return out;
}

} // namespace qvl
