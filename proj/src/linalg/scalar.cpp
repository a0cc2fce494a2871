#include "nilab/linalg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilab::linalg {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Scalar out;
    out.get_num() = mpz_class(std::string(num), 10);
    if (slash == std::string_view::npos) {
        out.get_den() = 1;
        return out;
    }
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    out.get_den() = mpz_class(std::string(den), 10);
    if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out.canonicalize();
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); });
}

}  // namespace nilab::linalg
