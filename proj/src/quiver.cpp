#include "qvl/quiver.hpp"

#include "qvl/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace qvl {

std::string QuiverClass::label() const {
    switch (kind) {
        case Kind::Jordan: return "jordan";
        case Kind::Unsupported: return "unsupported";
        default: break;
    }
    std::ostringstream os;
    os << (family == Family::A ? 'A' : family == Family::D ? 'D' : 'E') << rank;
    if (kind == Kind::Affine) os << '~';
    return os.str();
}

static void check_arrows(const Quiver& q) {
    for (auto [t, h] : q.arrows)
        if (t < 0 || h < 0 || t >= q.n || h >= q.n)
            throw input_error("arrow endpoint out of range");
    if (q.n <= 0) throw input_error("quiver needs at least one vertex");
}

void check_index_dim(const Quiver& q, size_t dim, const char* what) {
    if (dim != static_cast<size_t>(q.n))
        throw input_error(std::string(what) + ": vector length does not match vertex count");
}

// Undirected adjacency with multiplicities; loops on the diagonal.
static std::vector<std::vector<int>> multiplicity_matrix(const Quiver& q) {
    std::vector<std::vector<int>> m(q.n, std::vector<int>(q.n, 0));
    for (auto [t, h] : q.arrows) {
        if (t == h) {
            m[t][t] += 1;  // one loop
        } else {
            m[t][h] += 1;
            m[h][t] += 1;
        }
    }
    return m;
}

bool is_connected(const Quiver& q) {
    check_arrows(q);
    std::vector<std::vector<int>> adj(q.n);
    for (auto [t, h] : q.arrows)
        if (t != h) {
            adj[t].push_back(h);
            adj[h].push_back(t);
        }
    std::vector<char> seen(q.n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                bfs.push(v);
            }
    }
    return cnt == q.n;
}

static std::vector<IntVec> cartan_unchecked(const Quiver& q) {
    auto m = multiplicity_matrix(q);
    std::vector<IntVec> c(q.n, IntVec(q.n, 0));
    for (int i = 0; i < q.n; ++i) {
        c[i][i] = 2 - 2 * m[i][i];  // loops count twice
        for (int j = 0; j < q.n; ++j)
            if (i != j) c[i][j] = -m[i][j];
    }
    return c;
}

// Determinant of the leading k x k block, exact.
static Rat leading_minor(const std::vector<IntVec>& c, int k) {
    std::vector<RatVec> a(k, RatVec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = Rat(c[i][j]);
    Rat det = 1;
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < k; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int cc = col; cc < k; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    return det;
}

// Rational nullspace of the (symmetric) Cartan matrix. Returns nullity and,
// when it is 1, the primitive integer kernel vector with positive first entry.
static int nullspace_dim(const std::vector<IntVec>& c, IntVec* kernel) {
    int n = static_cast<int>(c.size());
    std::vector<RatVec> a(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(c[i][j]);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        Rat d = a[row][col];
        for (int cc = 0; cc < n; ++cc) a[row][cc] /= d;
        for (int r = 0; r < n; ++r)
            if (r != row && a[r][col] != 0) {
                Rat f = a[r][col];
                for (int cc = 0; cc < n; ++cc) a[r][cc] -= f * a[row][cc];
            }
        pivot_col.push_back(col);
        ++row;
    }
    int nullity = n - row;
    if (nullity == 1 && kernel) {
        // The unique free column determines the kernel vector.
        std::vector<char> is_pivot(n, 0);
        for (int pc : pivot_col) is_pivot[pc] = 1;
        int free_col = 0;
        while (is_pivot[free_col]) ++free_col;
        RatVec x(n, Rat(0));
        x[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free_col];
        Int lcm = 1;
        for (auto& v : x) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
        IntVec k(n);
        Int g = 0;
        for (int i = 0; i < n; ++i) {
            k[i] = rat_num(x[i]) * (lcm / rat_den(x[i]));
            g = boost::multiprecision::gcd(g, k[i]);
        }
        if (g != 0)
            for (auto& v : k) v /= g;
        // orient positively
        Int s = 0;
        for (auto& v : k)
            if (v != 0) {
                s = v;
                break;
            }
        if (s < 0)
            for (auto& v : k) v = -v;
        *kernel = k;
    }
    return nullity;
}

// Arm lengths of a tree around a branch vertex.
static std::vector<int> arm_lengths(const std::vector<std::vector<int>>& m, int center) {
    int n = static_cast<int>(m.size());
    std::vector<int> arms;
    for (int nb = 0; nb < n; ++nb) {
        if (nb == center || m[center][nb] == 0) continue;
        int len = 1, prev = center, cur = nb;
        for (;;) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != prev && k != cur && m[cur][k] > 0) {
                    next = k;
                    break;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

QuiverClass classify(const Quiver& q) {
    check_arrows(q);
    if (!is_connected(q)) throw input_error("quiver is disconnected");
    auto m = multiplicity_matrix(q);

    if (q.n == 1) {
        if (m[0][0] == 0) return {Kind::Finite, Family::A, 1};
        if (m[0][0] == 1) return {Kind::Jordan, Family::A, 0};
        return {Kind::Unsupported, Family::A, 0};
    }
    for (int i = 0; i < q.n; ++i)
        if (m[i][i] > 0) return {Kind::Unsupported, Family::A, 0};

    auto c = cartan_unchecked(q);
    IntVec kernel;
    int nullity = nullspace_dim(c, &kernel);

    if (nullity == 0) {
        for (int k = 1; k <= q.n; ++k)
            if (leading_minor(c, k) <= 0) return {Kind::Unsupported, Family::A, 0};
        // positive definite: simply-laced Dynkin diagram
        std::vector<int> deg(q.n, 0);
        for (int i = 0; i < q.n; ++i)
            for (int j = 0; j < q.n; ++j)
                if (i != j) deg[i] += m[i][j];
        int branch = -1;
        for (int i = 0; i < q.n; ++i) {
            if (deg[i] > 3) return {Kind::Unsupported, Family::A, 0};
            if (deg[i] == 3) {
                if (branch >= 0) return {Kind::Unsupported, Family::A, 0};
                branch = i;
            }
        }
        if (branch < 0) return {Kind::Finite, Family::A, q.n};
        auto arms = arm_lengths(m, branch);
        if (arms.size() != 3) return {Kind::Unsupported, Family::A, 0};
        if (arms[0] == 1 && arms[1] == 1) return {Kind::Finite, Family::D, q.n};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            return {Kind::Finite, Family::E, q.n};
        return {Kind::Unsupported, Family::A, 0};
    }

    if (nullity == 1) {
        for (auto& v : kernel)
            if (v <= 0) return {Kind::Unsupported, Family::A, 0};
        // connected, corank 1, positive kernel: untwisted affine diagram
        std::vector<int> deg(q.n, 0);
        for (int i = 0; i < q.n; ++i)
            for (int j = 0; j < q.n; ++j)
                if (i != j) deg[i] += m[i][j];
        int deg3 = 0, deg4 = 0, branch = -1;
        for (int i = 0; i < q.n; ++i) {
            if (deg[i] > 4) return {Kind::Unsupported, Family::A, 0};
            if (deg[i] == 4) {
                ++deg4;
                branch = i;
            }
            if (deg[i] == 3) {
                ++deg3;
                branch = i;
            }
        }
        if (deg3 == 0 && deg4 == 0) return {Kind::Affine, Family::A, q.n - 1};
        if (deg4 == 1 && deg3 == 0 && q.n == 5) return {Kind::Affine, Family::D, 4};
        if (deg4 == 0 && deg3 == 2) return {Kind::Affine, Family::D, q.n - 1};
        if (deg4 == 0 && deg3 == 1) {
            auto arms = arm_lengths(m, branch);
            if (arms.size() == 3) {
                if (arms[0] == 2 && arms[1] == 2 && arms[2] == 2)
                    return {Kind::Affine, Family::E, 6};
                if (arms[0] == 1 && arms[1] == 3 && arms[2] == 3)
                    return {Kind::Affine, Family::E, 7};
                if (arms[0] == 1 && arms[1] == 2 && arms[2] == 5)
                    return {Kind::Affine, Family::E, 8};
            }
        }
        return {Kind::Unsupported, Family::A, 0};
    }
    return {Kind::Unsupported, Family::A, 0};
}

std::vector<IntVec> cartan_matrix(const Quiver& q) {
    if (!classify(q).supported()) throw unsupported_error("cartan_matrix: unsupported quiver class");
    return cartan_unchecked(q);
}

Int cartan_pair(const Quiver& q, const IntVec& a, const IntVec& b) {
    check_index_dim(q, a.size(), "cartan_pair");
    check_index_dim(q, b.size(), "cartan_pair");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += 2 * a[i] * b[i];
    for (auto [t, h] : q.arrows) s -= a[t] * b[h] + a[h] * b[t];
    return s;
}

Rat tits_form(const Quiver& q, const IntVec& a, const IntVec& b) {
    return Rat(cartan_pair(q, a, b), 2);
}

IntVec delta(const Quiver& q) {
    auto cls = classify(q);
    if (cls.jordan()) return IntVec{1};
    if (!cls.affine()) throw input_error("delta: quiver has no imaginary root");
    IntVec kernel;
    int nullity = nullspace_dim(cartan_unchecked(q), &kernel);
    if (nullity != 1) throw internal_error("delta: affine Cartan matrix without 1-dim kernel");
    return kernel;
}

std::vector<Root> positive_roots_upto(const Quiver& q, const IntVec& bound) {
    auto cls = classify(q);
    if (!cls.supported()) throw unsupported_error("positive_roots_upto: unsupported quiver class");
    check_index_dim(q, bound.size(), "positive_roots_upto");
    for (auto& v : bound)
        if (v < 0) throw input_error("positive_roots_upto: negative bound");

    Int cells = 1;
    for (auto& v : bound) {
        cells *= v + 1;
        if (cells > 100000000) throw budget_error("positive_roots_upto: bound box too large");
    }

    std::vector<Root> out;
    IntVec b(bound.size(), 0);
    for (;;) {
        // odometer increment
        size_t i = 0;
        while (i < b.size() && b[i] == bound[i]) {
            b[i] = 0;
            ++i;
        }
        if (i == b.size()) break;
        b[i] += 1;
        Int norm2 = cartan_pair(q, b, b);  // = 2 * tits
        if (norm2 == 2) {
            out.push_back({b, false});
        } else if (norm2 == 0) {
            // psd classes: norm 0 means kernel, i.e. a multiple of delta
            out.push_back({b, true});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Root& x, const Root& y) { return x.coords < y.coords; });
    return out;
}

Quiver framed_quiver(const Quiver& q, const IntVec& w) {
    check_index_dim(q, w.size(), "framed_quiver");
    Quiver f;
    f.n = q.n + 1;
    f.arrows = q.arrows;
    Int total = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) throw input_error("framed_quiver: negative framing");
        total += w[i];
        if (total > 1000000) throw budget_error("framed_quiver: framing too large");
        for (Int k = 0; k < w[i]; ++k) f.arrows.emplace_back(static_cast<int>(i), q.n);
    }
    return f;
}

bool is_root(const Quiver& q, const IntVec& beta_in) {
    check_index_dim(q, beta_in.size(), "is_root");
    IntVec beta = beta_in;
    bool all_nonpos = true, all_nonneg = true, zero = true;
    for (auto& v : beta) {
        if (v > 0) all_nonpos = false;
        if (v < 0) all_nonneg = false;
        if (v != 0) zero = false;
    }
    if (zero) return false;
    if (!all_nonneg && !all_nonpos) return false;
    if (all_nonpos)
        for (auto& v : beta) v = -v;

    auto m = multiplicity_matrix(q);
    auto c = cartan_unchecked(q);
    int n = q.n;
    auto pairing = [&](const IntVec& b, int i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += c[i][j] * b[j];
        return s;
    };
    Int norm2 = cartan_pair(q, beta, beta);
    if (norm2 >= 4) return false;  // tits norm >= 2
    if (norm2 == 2) {
        // candidate real root: descend to a simple root
        for (;;) {
            int pos = -1;
            Int height = 0, support = 0;
            for (int i = 0; i < n; ++i) {
                height += beta[i];
                if (beta[i] != 0) ++support;
            }
            if (support == 1 && height == 1) return true;  // simple, loop-free by norm
            for (int i = 0; i < n; ++i)
                if (m[i][i] == 0 && beta[i] > 0 && pairing(beta, i) > 0) {
                    pos = i;
                    break;
                }
            if (pos < 0) return false;  // cannot happen for norm 1, defensive exit
            beta[pos] -= pairing(beta, pos);
            if (beta[pos] < 0) return false;
        }
    }
    // candidate imaginary root: descend into the fundamental region
    for (;;) {
        int pos = -1;
        for (int i = 0; i < n; ++i)
            if (m[i][i] == 0 && beta[i] > 0 && pairing(beta, i) > 0) {
                pos = i;
                break;
            }
        if (pos < 0) break;
        beta[pos] -= pairing(beta, pos);
        if (beta[pos] < 0) return false;
    }
    // terminal: all loop-free pairings <= 0; root iff the support is connected
    std::vector<char> in_support(n, 0);
    int first = -1, support_size = 0;
    for (int i = 0; i < n; ++i)
        if (beta[i] > 0) {
            in_support[i] = 1;
            ++support_size;
            if (first < 0) first = i;
        }
    if (first < 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(first);
    seen[first] = 1;
    int cnt = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v = 0; v < n; ++v)
            if (in_support[v] && !seen[v] && m[u][v] > 0) {
                seen[v] = 1;
                ++cnt;
                bfs.push(v);
            }
    }
    return cnt == support_size;
}

static Quiver path_quiver(int n) {
    Quiver q;
    q.n = n;
    for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
    return q;
}

Quiver quiver_preset(const std::string& name) {
    auto bad = [&]() { return input_error("unknown preset: '" + name + "'"); };
    if (name == "jordan") {
        Quiver q;
        q.n = 1;
        q.arrows.emplace_back(0, 0);
        return q;
    }
    if (name.size() < 2) throw bad();
    bool affine = name.back() == '~';
    std::string core = affine ? name.substr(0, name.size() - 1) : name;
    char fam = core[0];
    int rank = 0;
    try {
        size_t used = 0;
        rank = std::stoi(core.substr(1), &used);
        if (used + 1 != core.size()) throw bad();
    } catch (const std::exception&) {
        throw bad();
    }
    if (fam == 'A' && rank >= 1 && rank <= 8) {
        if (!affine) return path_quiver(rank);
        if (rank == 1) {
            Quiver q;
            q.n = 2;
            q.arrows = {{0, 1}, {0, 1}};
            return q;
        }
        Quiver q = path_quiver(rank + 1);
        q.arrows.emplace_back(rank, 0);
        return q;
    }
    if (fam == 'D' && rank >= 4 && rank <= 8) {
        Quiver q = path_quiver(rank - 1);
        q.n = rank;
        q.arrows.emplace_back(rank - 3, rank - 1);
        if (affine) {
            q.n = rank + 1;
            q.arrows.emplace_back(1, rank);
        }
        return q;
    }
    if (fam == 'E' && rank >= 6 && rank <= 8) {
        Quiver q = path_quiver(rank - 1);
        q.n = rank;
        q.arrows.emplace_back(rank == 6 ? 2 : rank == 7 ? 3 : 4, rank - 1);
        if (affine) {
            q.n = rank + 1;
            if (rank == 6) q.arrows.emplace_back(rank - 1, rank);  // third arm to length 2
            if (rank == 7) q.arrows.emplace_back(5, rank);         // middle arm to length 3
            if (rank == 8) q.arrows.emplace_back(0, rank);         // long arm to length 5
        }
        return q;
    }
    throw bad();
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (int r = 1; r <= 8; ++r) out.push_back("A" + std::to_string(r));
    for (int r = 4; r <= 8; ++r) out.push_back("D" + std::to_string(r));
    for (int r = 6; r <= 8; ++r) out.push_back("E" + std::to_string(r));
    for (int r = 1; r <= 8; ++r) out.push_back("A" + std::to_string(r) + "~");
    for (int r = 4; r <= 8; ++r) out.push_back("D" + std::to_string(r) + "~");
    for (int r = 6; r <= 8; ++r) out.push_back("E" + std::to_string(r) + "~");
    out.push_back("jordan");
    return out;
}

} // namespace qvl
