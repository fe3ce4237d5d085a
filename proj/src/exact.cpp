#include "obcalc/exact.hpp"

#include "obcalc/errors.hpp"

namespace obcalc {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rat q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
}

std::string rat_string(const Rat& q) {
    // mpq_get_str omits "/den" when den == 1; inputs are kept canonical.
    return q.get_str();
}

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const std::string num_part = s.substr(0, slash);
    auto is_int_literal = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    // mpz_set_str rejects a leading '+'
    auto strip_plus = [](const std::string& t) { return t[0] == '+' ? t.substr(1) : t; };
    if (!is_int_literal(num_part)) return std::nullopt;
    Int num(strip_plus(num_part));
    if (slash == std::string::npos) return Rat(num);
    const std::string den_part = s.substr(slash + 1);
    if (!is_int_literal(den_part)) return std::nullopt;
    Int den(strip_plus(den_part));
    if (den == 0) return std::nullopt;
    return make_rat(num, den);
}

} // namespace obcalc
