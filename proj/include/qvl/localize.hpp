// Decision layer for localization questions at a parameter pair (lambda, theta).
//
// Relevance of a wall is decided by essential-coset membership; the side
// test compares the pairing lambda.b only against singular offsets in the
// same shift coset, with the normal oriented so that theta.b > 0. Verdicts
// carry a Proven tag exactly for finite type A, affine type A and the Jordan
// quiver; everything else supported is reported as Conjectural.
#ifndef QVL_LOCALIZE_HPP
#define QVL_LOCALIZE_HPP

#include "qvl/slice.hpp"
#include "qvl/walls.hpp"

#include <string>

namespace qvl {

enum class Confidence { Proven, Conjectural };

std::string to_string(Confidence c);

struct WallDetail {
    IntVec normal;
    Rat pairing;           // lambda . normal
    bool relevant = false;
    bool has_threshold = false;
    Rat threshold;         // extreme singular offset in the coset, theta-oriented
    int side = 0;          // sign of theta . normal, 0 when no theta is involved
    bool satisfied = true;
};

struct Verdict {
    std::string question;
    bool holds = false;
    Confidence confidence = Confidence::Conjectural;
    std::string basis;
    std::vector<WallDetail> walls;
};

bool is_singular_parameter(const std::vector<HyperplaneFamily>& families, const RatVec& lambda);

Verdict derived_localization(const Quiver& q, const Arrangement& arr, const RatVec& lambda);
// Same predicate under its algebraic name.
Verdict finite_homological_dimension(const Quiver& q, const Arrangement& arr, const RatVec& lambda);

// Exactness of the global-section functor: on every relevant wall the
// pairing must lie strictly beyond the extreme singular offset of its coset,
// on the side selected by theta. Throws stability_error for non-generic theta.
Verdict gamma_exact(const Quiver& q, const Arrangement& arr, const RatVec& lambda,
                    const RatVec& theta);

Verdict abelian_localization(const Quiver& q, const Arrangement& arr, const RatVec& lambda,
                             const RatVec& theta);

Verdict o_regular(const Quiver& q, const Arrangement& arr, const RatVec& lambda);

struct SliceTransferEntry {
    Wall wall;
    Rat lambda_bar;
    Rat theta_bar;
    Verdict verdict;
};

struct SliceTransferReport {
    Verdict ambient;
    std::vector<SliceTransferEntry> entries;
    bool violation = false;  // ambient holds but some slice fails: a bug, never expected
};

SliceTransferReport slice_transfer_check(const Quiver& q, const Arrangement& arr,
                                         const RatVec& lambda, const RatVec& theta,
                                         long long budget = kDefaultBudget);

// Convenience wrappers that build the arrangement internally.
Verdict derived_localization(const Quiver& q, const IntVec& v, const IntVec& w,
                             const RatVec& lambda, long long budget = kDefaultBudget);
Verdict gamma_exact(const Quiver& q, const IntVec& v, const IntVec& w, const RatVec& lambda,
                    const RatVec& theta, long long budget = kDefaultBudget);
Verdict abelian_localization(const Quiver& q, const IntVec& v, const IntVec& w,
                             const RatVec& lambda, const RatVec& theta,
                             long long budget = kDefaultBudget);
Verdict o_regular(const Quiver& q, const IntVec& v, const IntVec& w, const RatVec& lambda,
                  long long budget = kDefaultBudget);

} // namespace qvl

#endif
