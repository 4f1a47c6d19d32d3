#include "mvdual/rational.hpp"

namespace mvd {

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal", 0);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true)) throw parse_error("bad rational numerator '" + num + "'", 0);
    if (!digits_ok(den, false)) throw parse_error("bad rational denominator '" + den + "'", slash + 1);
    Int n(num), d(den);
    if (sgn(d) == 0) throw parse_error("zero denominator in '" + s + "'", slash + 1);
    return Rat(n, d);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

bool in_unit_cube(const Vec& v) {
    for (const auto& c : v)
        if (!in_unit_interval(c)) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("dot: dimension mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vsub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vadd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vadd: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vscale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (c.sign() != 0) return false;
    return true;
}

}  // namespace mvd
