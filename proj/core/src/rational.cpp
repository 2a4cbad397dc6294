#include "novipot/rational.hpp"

#include "novipot/errors.hpp"

#include <cctype>
#include <limits>

namespace novipot {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::string_view digits = s;
        if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
        if (!all_digits(digits)) throw DomainError("malformed integer '" + s + "'");
        return Integer(s, 10);
    }
    throw DomainError("expected an integer, got " + j.dump());
}

nlohmann::json rational_to_json(const Rational& q) {
    return nlohmann::json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer() || (j.is_string() && j.get<std::string>().find('/') == std::string::npos)) {
        return Rational(integer_from_json(j));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (!j.is_array() || j.size() != 2) throw DomainError("expected [num, den], got " + j.dump());
    const Integer d = integer_from_json(j[1]);
    if (d == 0) throw DomainError("zero denominator in " + j.dump());
    Rational q(integer_from_json(j[0]), d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
        throw DomainError("expected a machine integer, got " + to_string(q));
    }
    return q.get_num().get_si();
}

}  // namespace novipot
