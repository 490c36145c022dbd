// Test-only weight multiplicity oracle for finite type, via the Freudenthal
// recursion. Independent of the reflection-descent membership test it is used
// to check: roots are enumerated here by a direct box scan and all inner
// products are computed from the Cartan matrix alone.
#ifndef QVL_TESTS_FREUDENTHAL_HPP
#define QVL_TESTS_FREUDENTHAL_HPP

#include "qvl/quiver.hpp"

#include <map>
#include <vector>

namespace qvl_tests {

using qvl::Int;
using qvl::IntVec;
using qvl::Quiver;

// Multiplicity table of L(omega) on the cone {mu = omega - c.alpha : c >= 0},
// indexed by c, for sum(c) <= depth.
class FreudenthalTable {
  public:
    FreudenthalTable(const Quiver& q, const IntVec& w, long depth) : q_(q), w_(w) {
        n_ = q.n;
        cartan_ = qvl::cartan_matrix(q);
        enumerate_roots();
        fill(depth);
    }

    Int multiplicity(const IntVec& c) const {
        auto it = table_.find(c);
        return it == table_.end() ? Int(0) : it->second;
    }

    bool is_weight(const IntVec& c) const {
        for (auto& x : c)
            if (x < 0) return false;
        return multiplicity(c) > 0;
    }

  private:
    // 2*(mu, mu') for mu = omega - c.alpha, mu' = omega - c'.alpha, up to the
    // common (omega, omega) term which always cancels in differences:
    // store n(c,c') = 2*(omega,omega) - 2 w.c' - 2 w.c + 2 c^T C c'... all
    // callers use differences of norms, so the (omega,omega) constant is
    // dropped: norm2(c) = -4 w.c + 2 c^T C c + (rho terms handled separately).
    Int pair_with_root(const IntVec& c, const IntVec& a) const {
        // 2*(omega - c.alpha, a.alpha) = 2 w.a - 2 c^T C a
        Int s = 0;
        for (int i = 0; i < n_; ++i) {
            Int row = 0;
            for (int j = 0; j < n_; ++j) row += cartan_[i][j] * a[j];
            s += (2 * w_[i]) * a[i] - 2 * c[i] * row;
        }
        return s;
    }

    // 2(Lambda+rho,Lambda+rho) - 2(mu+rho,mu+rho) with mu = Lambda - c.alpha:
    // = 4 sum c_i (w_i + 1) - 2 c^T C c
    Int denom(const IntVec& c) const {
        Int s = 0;
        for (int i = 0; i < n_; ++i) {
            Int row = 0;
            for (int j = 0; j < n_; ++j) row += cartan_[i][j] * c[j];
            s += 4 * c[i] * (w_[i] + 1) - 2 * c[i] * row;
        }
        return s;
    }

    void enumerate_roots() {
        // box scan: finite ADE positive roots have entries <= 6
        IntVec b(n_, 0), bound(n_, 6);
        for (;;) {
            int i = 0;
            while (i < n_ && b[i] == bound[i]) b[i] = 0, ++i;
            if (i == n_) break;
            b[i] += 1;
            Int norm2 = 0;
            for (int r = 0; r < n_; ++r) {
                Int row = 0;
                for (int s = 0; s < n_; ++s) row += cartan_[r][s] * b[s];
                norm2 += b[r] * row;
            }
            if (norm2 == 2) roots_.push_back(b);
        }
    }

    void fill(long depth) {
        table_[IntVec(n_, 0)] = 1;
        // proceed by height of omega - mu, so higher weights are ready
        for (long h = 1; h <= depth; ++h) {
            std::vector<IntVec> next;
            enumerate_height(h, next);
            for (auto& c : next) {
                Int num = 0;
                for (auto& a : roots_) {
                    for (Int k = 1;; ++k) {
                        IntVec up(n_);
                        bool ok = true;
                        for (int i = 0; i < n_; ++i) {
                            up[i] = c[i] - k * a[i];
                            if (up[i] < 0) ok = false;
                        }
                        if (!ok) break;
                        Int mult = multiplicity(up);
                        if (mult > 0) num += mult * pair_with_root(up, a);
                    }
                }
                Int den = denom(c);
                if (num == 0) continue;  // multiplicity zero
                if (den == 0) throw std::logic_error("freudenthal: zero denominator with nonzero sum");
                if ((2 * num) % den != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
                table_[c] = 2 * num / den;
            }
        }
    }

    void enumerate_height(long h, std::vector<IntVec>& out) {
        IntVec c(n_, 0);
        rec_height(0, h, c, out);
    }

    void rec_height(int pos, long rest, IntVec& c, std::vector<IntVec>& out) {
        if (pos == n_ - 1) {
            c[pos] = rest;
            out.push_back(c);
            return;
        }
        for (long k = 0; k <= rest; ++k) {
            c[pos] = k;
            rec_height(pos + 1, rest - k, c, out);
        }
    }

    Quiver q_;
    IntVec w_;
    int n_;
    std::vector<IntVec> cartan_;
    std::vector<IntVec> roots_;
    std::map<IntVec, Int> table_;
};

} // namespace qvl_tests

#endif
