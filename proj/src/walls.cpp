#include "qvl/walls.hpp"

#include "qvl/errors.hpp"
#include "qvl/weights.hpp"

#include <algorithm>
#include <set>

namespace qvl {

WallAnalysis classical_walls(const Quiver& q, const IntVec& v, const IntVec& w,
                             long long budget) {
    WallAnalysis out;
    out.cls = classify(q);
    if (!out.cls.supported()) throw unsupported_error("classical_walls: unsupported quiver class");
    out.v_input = v;
    out.w = w;
    out.flatness = is_flat(q, v, w, budget);
    if (!out.flatness.flat)
        throw input_error("classical_walls: moment map is not flat (see is_flat for a witness)");

    auto conj = dominant_conjugate(q, {w, v});
    out.v_dominant = conj.c;
    out.chain = conj.chain;
    out.dominantized = !conj.chain.empty();
    for (auto& x : out.v_dominant)
        if (x < 0) out.empty_variety = true;
    if (out.empty_variety) return out;

    const IntVec& vd = out.v_dominant;
    FramedWeight nu{w, vd};
    for (auto& r : positive_roots_upto(q, vd)) {
        if (r.imaginary) continue;
        Int m = max_shift(q, nu, r.coords);
        if (m < 1) continue;
        Int pairing = dot(w, r.coords) - cartan_pair(q, vd, r.coords);
        out.walls.push_back({r.coords, false, m, pairing + 2 * m, m});
    }
    if (out.cls.has_delta()) {
        IntVec d = delta(q);
        Int lv = level(q, w);
        if (lv >= 2) {
            Int m = max_shift(q, nu, d);
            if (m >= 1) out.walls.push_back({d, true, m, lv, m});
        } else if (lv == 1) {
            bool multiple = true;
            Int n = 0;
            for (int i = 0; i < q.n; ++i) {
                if (vd[i] % d[i] != 0 || (i > 0 && vd[i] / d[i] != n)) {
                    multiple = false;
                    break;
                }
                n = vd[i] / d[i];
            }
            if (multiple && n > 1) out.walls.push_back({d, true, n, lv, n});
        }
    }
    std::sort(out.walls.begin(), out.walls.end(),
              [](const Wall& a, const Wall& b) { return a.normal < b.normal; });
    return out;
}

HyperplaneFamily singular_family(const Wall& wall) {
    HyperplaneFamily f;
    f.wall = wall;
    Int g = 0;
    for (auto& x : wall.normal) g = boost::multiprecision::gcd(g, x);
    f.shift_modulus = g == 0 ? Int(1) : g;

    if (wall.w_bar > 100000 || wall.v_bar > 1000)
        throw budget_error("singular_family: offset enumeration too large");
    std::set<Rat> offsets;
    Rat half(wall.w_bar, 2);
    if (!wall.imaginary) {
        for (Int i = 1; i < wall.w_bar; ++i) offsets.insert(half - Rat(i));
    } else {
        for (Int qq = 1; qq <= wall.v_bar; ++qq)
            for (Int p = 1; p < wall.w_bar * qq; ++p) {
                if (boost::multiprecision::gcd(p, qq) != 1) continue;
                offsets.insert(half - Rat(p, qq));
            }
    }
    f.offsets.assign(offsets.begin(), offsets.end());
    return f;
}

Arrangement singular_hyperplanes(const Quiver& q, const IntVec& v, const IntVec& w,
                                 long long budget) {
    Arrangement arr;
    arr.base = classical_walls(q, v, w, budget);
    for (auto& wall : arr.base.walls) arr.families.push_back(singular_family(wall));
    return arr;
}

bool is_generic_stability(const Quiver& q, const IntVec& v, const RatVec& theta) {
    check_index_dim(q, theta.size(), "is_generic_stability theta");
    for (auto& r : positive_roots_upto(q, v))
        if (dot(theta, r.coords) == 0) return false;
    return true;
}

RatVec coset_offsets(const HyperplaneFamily& f, const Rat& p) {
    RatVec out;
    Rat g(f.shift_modulus);
    for (auto& s : f.offsets) {
        Rat diff = (p - s) / g;
        if (rat_den(diff) == 1) out.push_back(s);
    }
    return out;
}

bool family_relevant(const HyperplaneFamily& f, const RatVec& lambda) {
    return !coset_offsets(f, dot(lambda, f.wall.normal)).empty();
}

std::vector<HyperplaneFamily> relevant_walls(const std::vector<HyperplaneFamily>& families,
                                             const RatVec& lambda) {
    std::vector<HyperplaneFamily> out;
    for (auto& f : families)
        if (family_relevant(f, lambda)) out.push_back(f);
    return out;
}

bool verify_star(const std::vector<HyperplaneFamily>& families) {
    for (auto& f : families) {
        Rat g(f.shift_modulus);
        // split the sorted offsets into shift cosets
        std::vector<RatVec> cosets;
        for (auto& s : f.offsets) {
            bool placed = false;
            for (auto& c : cosets) {
                Rat diff = (s - c.front()) / g;
                if (rat_den(diff) == 1) {
                    c.push_back(s);
                    placed = true;
                    break;
                }
            }
            if (!placed) cosets.push_back({s});
        }
        for (auto& c : cosets) {
            // offsets are globally sorted, hence sorted within the coset;
            // they must advance in steps of exactly g
            for (size_t i = 0; i + 1 < c.size(); ++i)
                if (c[i + 1] - c[i] != g) return false;
        }
    }
    return true;
}

} // namespace qvl
