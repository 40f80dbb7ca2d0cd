#include "parahoric/rational.hpp"

#include <cctype>

namespace parahoric {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view s) {
    const std::string text(s);
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den) || den.find('-') != std::string::npos)
        throw validation_error("bad_rational", "malformed rational '" + text + "' (expected p or p/q)");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw validation_error("bad_rational", "malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw validation_error("bad_rational", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string qvec_str(const QVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_str(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace parahoric
