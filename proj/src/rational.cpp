#include "leibcoh/rational.hpp"

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {
bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
} // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
        throw ParseError("unparsable rational coefficient: '" + s + "'");
    Rational q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw ParseError("unparsable rational coefficient: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in coefficient: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace leibcoh
