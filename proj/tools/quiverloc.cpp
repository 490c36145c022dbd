// quiverloc - exact combinatorics of quiver varieties from the command line.
//
// Subcommands: analyze, decide, roots, walls, leaves, slice.
// Exit codes: 0 ok, 1 parse error, 2 unsupported quiver class,
//             3 non-generic stability parameter, 4 enumeration budget exceeded.
#include "qvl/errors.hpp"
#include "qvl/json_io.hpp"
#include "qvl/localize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qvl;

struct Args {
    std::string preset;
    std::string quiver_file;
    std::string v_str, w_str, lambda_str, theta_str, bound_str, wall_str;
    std::string leaf = "rank1";
    std::string out_file;
    bool json_out = false;
    long long budget = kDefaultBudget;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) parts.push_back(cur);
    if (!s.empty() && s.back() == ',') parts.push_back("");
    return parts;
}

IntVec parse_int_list(const std::string& s, const char* what) {
    if (s.empty()) throw input_error(std::string("missing ") + what);
    IntVec out;
    for (auto& p : split_commas(s)) {
        Rat r = parse_rational(p);
        if (rat_den(r) != 1) throw input_error(std::string(what) + ": expected integers");
        out.push_back(rat_num(r));
    }
    return out;
}

RatVec parse_rat_list(const std::string& s, const char* what) {
    if (s.empty()) throw input_error(std::string("missing ") + what);
    RatVec out;
    for (auto& p : split_commas(s)) out.push_back(parse_rational(p));
    return out;
}

Quiver load_quiver(const Args& a) {
    if (!a.preset.empty() && !a.quiver_file.empty())
        throw input_error("give either --preset or --quiver, not both");
    if (!a.preset.empty()) return quiver_preset(a.preset);
    if (!a.quiver_file.empty()) {
        std::ifstream in(a.quiver_file);
        if (!in) throw input_error("cannot open quiver file: " + a.quiver_file);
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw input_error(std::string("bad quiver JSON: ") + e.what());
        }
        return quiver_from_json(j);
    }
    throw input_error("a quiver is required: --preset NAME or --quiver FILE");
}

IntVec parse_wall(const Quiver& q, const std::string& s) {
    if (s.empty()) throw input_error("missing --wall");
    if (s == "delta") return delta(q);
    IntVec n = parse_int_list(s, "--wall");
    check_index_dim(q, n.size(), "--wall");
    return n;
}

void emit(const Args& a, const json& j, const std::string& text) {
    std::string payload = a.json_out ? j.dump(2) + "\n" : text;
    if (!a.out_file.empty()) {
        std::ofstream out(a.out_file);
        if (!out) throw input_error("cannot open output file: " + a.out_file);
        out << (a.json_out ? payload : j.dump(2) + "\n");
        if (!a.json_out) std::cout << text;
    } else {
        std::cout << payload;
    }
}

std::string describe_walls(const Arrangement& arr, bool star) {
    std::ostringstream os;
    os << "class:        " << arr.base.cls.label() << "\n";
    os << "flat:         " << (arr.base.flatness.flat ? "yes" : "no")
       << (arr.base.flatness.fast_path ? " (dominant fast path)" : "") << "\n";
    if (arr.base.dominantized)
        os << "dominantized: v' = " << vec_to_string(arr.base.v_dominant) << " after "
           << arr.base.chain.size() << " reflections\n";
    if (arr.base.empty_variety) {
        os << "variety is empty (dominant conjugate leaves the dimension cone)\n";
        return os.str();
    }
    if (arr.families.empty()) {
        os << "walls:        none\n";
        return os.str();
    }
    os << "walls:\n";
    for (auto& f : arr.families) {
        os << "  normal=" << vec_to_string(f.wall.normal)
           << " kind=" << (f.wall.imaginary ? "imaginary" : "real") << " m=" << f.wall.m
           << " v_bar=" << f.wall.v_bar << " w_bar=" << f.wall.w_bar << " offsets={";
        for (size_t i = 0; i < f.offsets.size(); ++i)
            os << (i ? "," : "") << rat_to_string(f.offsets[i]);
        os << "} shift=" << f.shift_modulus << "\n";
    }
    os << "star:         " << (star ? "ok" : "VIOLATED") << "\n";
    return os.str();
}

std::string describe_verdict(const Verdict& v) {
    std::ostringstream os;
    os << v.question << ": " << (v.holds ? "holds" : "fails") << " [" << to_string(v.confidence)
       << "; " << v.basis << "]\n";
    for (auto& d : v.walls) {
        os << "  wall " << vec_to_string(d.normal) << " pairing=" << rat_to_string(d.pairing)
           << (d.relevant ? " relevant" : " not relevant");
        if (d.relevant && d.has_threshold) {
            os << " threshold=" << rat_to_string(d.threshold);
            if (d.side != 0) os << " side=" << (d.side > 0 ? "+" : "-");
        }
        os << "\n";
    }
    return os.str();
}

int cmd_analyze(const Args& a) {
    Quiver q = load_quiver(a);
    IntVec v = parse_int_list(a.v_str, "--v");
    IntVec w = parse_int_list(a.w_str, "--w");
    Arrangement arr = singular_hyperplanes(q, v, w, a.budget);
    bool star = verify_star(arr.families);
    emit(a, analysis_to_json(arr, star), describe_walls(arr, star));
    return 0;
}

int cmd_walls(const Args& a) { return cmd_analyze(a); }

int cmd_decide(const Args& a) {
    Quiver q = load_quiver(a);
    IntVec v = parse_int_list(a.v_str, "--v");
    IntVec w = parse_int_list(a.w_str, "--w");
    RatVec lambda = parse_rat_list(a.lambda_str, "--lambda");
    RatVec theta = parse_rat_list(a.theta_str, "--theta");
    Arrangement arr = singular_hyperplanes(q, v, w, a.budget);

    Verdict der = derived_localization(q, arr, lambda);
    Verdict gam = gamma_exact(q, arr, lambda, theta);
    Verdict abe = abelian_localization(q, arr, lambda, theta);
    Verdict oreg = o_regular(q, arr, lambda);
    SliceTransferReport st = slice_transfer_check(q, arr, lambda, theta, a.budget);

    json j{{"class", arr.base.cls.label()},
           {"lambda", ratvec_to_json(lambda)},
           {"theta", ratvec_to_json(theta)},
           {"verdicts",
            json{{"derived", verdict_to_json(der)},
                 {"gamma_exact", verdict_to_json(gam)},
                 {"abelian", verdict_to_json(abe)},
                 {"o_regular", verdict_to_json(oreg)}}},
           {"slice_transfer", slice_transfer_to_json(st)}};
    std::ostringstream os;
    os << describe_verdict(der) << describe_verdict(gam) << describe_verdict(abe)
       << describe_verdict(oreg);
    os << "slice transfer: " << (st.violation ? "VIOLATED" : "consistent") << " ("
       << st.entries.size() << " walls)\n";
    emit(a, j, os.str());
    return 0;
}

int cmd_roots(const Args& a) {
    Quiver q = load_quiver(a);
    IntVec bound = parse_int_list(a.bound_str, "--bound");
    auto roots = positive_roots_upto(q, bound);
    json arr = json::array();
    std::ostringstream os;
    for (auto& r : roots) {
        arr.push_back(json{{"coords", intvec_to_json(r.coords)},
                           {"kind", r.imaginary ? "imaginary" : "real"}});
        os << vec_to_string(r.coords) << (r.imaginary ? " imaginary" : " real") << "\n";
    }
    os << roots.size() << " roots\n";
    emit(a, json{{"roots", arr}}, os.str());
    return 0;
}

int cmd_leaves(const Args& a) {
    Quiver q = load_quiver(a);
    IntVec v = parse_int_list(a.v_str, "--v");
    IntVec w = parse_int_list(a.w_str, "--w");
    IntVec wall = parse_wall(q, a.wall_str);
    LeavesResult lr = leaves_on_wall(q, v, w, wall);
    std::ostringstream os;
    os << (lr.is_wall ? "classical wall" : "not a wall") << ", " << lr.leaves.size()
       << " representation type(s)\n";
    for (auto& rt : lr.leaves) {
        os << "  v0=" << vec_to_string(rt.v0);
        for (auto& [root, mult] : rt.summands)
            os << " + " << mult << " x " << vec_to_string(root);
        if (rt.minimal) os << "   [minimal]";
        os << "\n";
    }
    emit(a, leaves_to_json(lr), os.str());
    return 0;
}

int cmd_slice(const Args& a) {
    Quiver q = load_quiver(a);
    IntVec v = parse_int_list(a.v_str, "--v");
    IntVec w = parse_int_list(a.w_str, "--w");
    IntVec wall = parse_wall(q, a.wall_str);
    SliceData s;
    if (a.leaf == "rank1") {
        s = rank1_slice(q, v, w, wall);
    } else {
        LeavesResult lr = leaves_on_wall(q, v, w, wall);
        size_t idx;
        if (a.leaf == "minimal") {
            idx = lr.leaves.size() - 1;
        } else {
            try {
                idx = std::stoul(a.leaf);
            } catch (const std::exception&) {
                throw input_error("--leaf must be 'minimal', 'rank1' or an index");
            }
            if (idx >= lr.leaves.size()) throw input_error("--leaf index out of range");
        }
        s = slice_quiver(q, w, lr.leaves[idx]);
    }
    std::ostringstream os;
    os << "slice quiver: " << classify(s.slice_quiver).label() << " v_bar="
       << vec_to_string(s.v_bar) << " w_bar=" << vec_to_string(s.w_bar) << "\n";
    emit(a, slice_to_json(s), os.str());
    return 0;
}

void add_common(CLI::App* sub, Args& a, bool needs_vw) {
    sub->add_option("--preset", a.preset, "preset quiver name (A1..E8, A1~..E8~, jordan)");
    sub->add_option("--quiver", a.quiver_file, "quiver JSON file");
    if (needs_vw) {
        sub->add_option("--v", a.v_str, "dimension vector, comma separated");
        sub->add_option("--w", a.w_str, "framing vector, comma separated");
    }
    sub->add_flag("--json", a.json_out, "machine readable output");
    sub->add_option("--out", a.out_file, "write JSON report to a file");
    sub->add_option("--budget", a.budget, "decomposition enumeration node cap");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of quiver varieties"};
    app.require_subcommand(1);
    Args a;

    auto* analyze = app.add_subcommand("analyze", "classification, flatness, walls, offsets");
    add_common(analyze, a, true);
    auto* walls = app.add_subcommand("walls", "alias of analyze");
    add_common(walls, a, true);
    auto* decide = app.add_subcommand("decide", "localization verdicts at (lambda, theta)");
    add_common(decide, a, true);
    decide->add_option("--lambda", a.lambda_str, "quantization parameter, rationals");
    decide->add_option("--theta", a.theta_str, "stability parameter, rationals");
    auto* roots = app.add_subcommand("roots", "positive roots up to a bound");
    add_common(roots, a, false);
    roots->add_option("--bound", a.bound_str, "componentwise bound, comma separated");
    auto* leaves = app.add_subcommand("leaves", "representation types over a wall");
    add_common(leaves, a, true);
    leaves->add_option("--wall", a.wall_str, "wall normal: comma vector or 'delta'");
    auto* slice = app.add_subcommand("slice", "slice quiver data");
    add_common(slice, a, true);
    slice->add_option("--wall", a.wall_str, "wall normal: comma vector or 'delta'");
    slice->add_option("--leaf", a.leaf, "'rank1' (default), 'minimal' or a leaf index");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(a);
        if (walls->parsed()) return cmd_walls(a);
        if (decide->parsed()) return cmd_decide(a);
        if (roots->parsed()) return cmd_roots(a);
        if (leaves->parsed()) return cmd_leaves(a);
        if (slice->parsed()) return cmd_slice(a);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const qvl::stability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qvl::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qvl::unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qvl::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
