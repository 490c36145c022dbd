#include "qvl/rational.hpp"

#include "qvl/errors.hpp"

#include <cctype>
#include <sstream>

namespace qvl {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

static bool parse_int(const std::string& s, Int& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = Int(s);
    return true;
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Int p, q;
    if (slash == std::string::npos) {
        if (!parse_int(s, p)) throw input_error("cannot parse rational: '" + s + "'");
        return Rat(p);
    }
    if (!parse_int(s.substr(0, slash), p) || !parse_int(s.substr(slash + 1), q))
        throw input_error("cannot parse rational: '" + s + "'");
    if (q == 0) throw input_error("zero denominator in rational: '" + s + "'");
    return Rat(p, q);
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

std::string vec_to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

} // namespace qvl
