#include "qvl/localize.hpp"

#include "qvl/errors.hpp"

#include <algorithm>

namespace qvl {

std::string to_string(Confidence c) {
    return c == Confidence::Proven ? "proven" : "conjectural";
}

static Confidence coverage(const QuiverClass& cls) {
    return cls.jordan() || cls.type_a() ? Confidence::Proven : Confidence::Conjectural;
}

bool is_singular_parameter(const std::vector<HyperplaneFamily>& families, const RatVec& lambda) {
    for (auto& f : families) {
        Rat p = dot(lambda, f.wall.normal);
        if (std::binary_search(f.offsets.begin(), f.offsets.end(), p)) return true;
    }
    return false;
}

// Wall-by-wall breakdown shared by the verdicts. When theta is supplied the
// threshold is oriented: the pairing must exceed the coset maximum on the
// positive side, or stay below the coset minimum on the negative side.
static std::vector<WallDetail> wall_details(const std::vector<HyperplaneFamily>& families,
                                            const RatVec& lambda, const RatVec* theta) {
    std::vector<WallDetail> out;
    for (auto& f : families) {
        WallDetail d;
        d.normal = f.wall.normal;
        d.pairing = dot(lambda, f.wall.normal);
        RatVec coset = coset_offsets(f, d.pairing);
        d.relevant = !coset.empty();
        if (theta) {
            Rat tp = dot(*theta, f.wall.normal);
            d.side = tp > 0 ? 1 : tp < 0 ? -1 : 0;
        }
        if (d.relevant) {
            d.has_threshold = true;
            if (d.side >= 0) {
                d.threshold = coset.back();
                d.satisfied = !theta || d.pairing > d.threshold;
            } else {
                d.threshold = coset.front();
                d.satisfied = d.pairing < d.threshold;
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

Verdict derived_localization(const Quiver& q, const Arrangement& arr, const RatVec& lambda) {
    check_index_dim(q, lambda.size(), "lambda");
    Verdict v;
    v.question = "derived";
    v.holds = !is_singular_parameter(arr.families, lambda);
    v.confidence = coverage(arr.base.cls);
    v.basis = "derived localization <=> parameter off the singular hyperplanes";
    v.walls = wall_details(arr.families, lambda, nullptr);
    return v;
}

Verdict finite_homological_dimension(const Quiver& q, const Arrangement& arr,
                                     const RatVec& lambda) {
    Verdict v = derived_localization(q, arr, lambda);
    v.question = "finite_homological_dimension";
    v.basis = "finite homological dimension <=> derived localization";
    return v;
}

Verdict gamma_exact(const Quiver& q, const Arrangement& arr, const RatVec& lambda,
                    const RatVec& theta) {
    check_index_dim(q, lambda.size(), "lambda");
    check_index_dim(q, theta.size(), "theta");
    if (!is_generic_stability(q, arr.base.v_input, theta))
        throw stability_error("gamma_exact: stability parameter lies on a GIT wall");

    Verdict v;
    v.question = "gamma_exact";
    v.basis = "quantum chamber: pairing beyond every relevant singular offset";
    v.confidence = coverage(arr.base.cls);
    v.walls = wall_details(arr.families, lambda, &theta);
    v.holds = true;
    for (auto& d : v.walls)
        if (d.relevant && !d.satisfied) v.holds = false;
    return v;
}

Verdict abelian_localization(const Quiver& q, const Arrangement& arr, const RatVec& lambda,
                             const RatVec& theta) {
    Verdict v = gamma_exact(q, arr, lambda, theta);
    v.question = "abelian";
    v.basis = "quantum chamber + regular parameter";
    v.holds = v.holds && !is_singular_parameter(arr.families, lambda);
    return v;
}

Verdict o_regular(const Quiver& q, const Arrangement& arr, const RatVec& lambda) {
    Verdict v = derived_localization(q, arr, lambda);
    v.question = "o_regular";
    v.basis = "category-O singular locus = singular locus";
    return v;
}

SliceTransferReport slice_transfer_check(const Quiver& q, const Arrangement& arr,
                                         const RatVec& lambda, const RatVec& theta,
                                         long long budget) {
    SliceTransferReport rep;
    rep.ambient = abelian_localization(q, arr, lambda, theta);
    for (auto& wall : arr.base.walls) {
        SliceTransferEntry e;
        e.wall = wall;
        e.lambda_bar = dot(lambda, wall.normal);
        e.theta_bar = dot(theta, wall.normal);
        Quiver slice = quiver_preset(wall.imaginary ? "jordan" : "A1");
        Arrangement sub = singular_hyperplanes(slice, {wall.v_bar}, {wall.w_bar}, budget);
        e.verdict = abelian_localization(slice, sub, {e.lambda_bar}, {e.theta_bar});
        rep.entries.push_back(std::move(e));
    }
    if (rep.ambient.holds)
        for (auto& e : rep.entries)
            if (!e.verdict.holds) rep.violation = true;
    return rep;
}

Verdict derived_localization(const Quiver& q, const IntVec& v, const IntVec& w,
                             const RatVec& lambda, long long budget) {
    return derived_localization(q, singular_hyperplanes(q, v, w, budget), lambda);
}

Verdict gamma_exact(const Quiver& q, const IntVec& v, const IntVec& w, const RatVec& lambda,
                    const RatVec& theta, long long budget) {
    return gamma_exact(q, singular_hyperplanes(q, v, w, budget), lambda, theta);
}

Verdict abelian_localization(const Quiver& q, const IntVec& v, const IntVec& w,
                             const RatVec& lambda, const RatVec& theta, long long budget) {
    return abelian_localization(q, singular_hyperplanes(q, v, w, budget), lambda, theta);
}

Verdict o_regular(const Quiver& q, const IntVec& v, const IntVec& w, const RatVec& lambda,
                  long long budget) {
    return o_regular(q, singular_hyperplanes(q, v, w, budget), lambda);
}

} // namespace qvl
