#include "constellab/rational.hpp"

#include <cctype>
#include <limits>

namespace constellab {

namespace {

bool looks_like_rational(std::string_view text) {
    if (text.empty()) return false;
    bool seen_digit = false;
    bool seen_slash = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '-' || c == '+') {
            // Sign allowed at the start of the numerator or denominator.
            if (i != 0 && text[i - 1] != '/') return false;
        } else if (c == '/') {
            if (seen_slash || !seen_digit) return false;
            seen_slash = true;
            seen_digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else {
            return false;
        }
    }
    return seen_digit;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (!looks_like_rational(text))
        throw InputError("not a rational number: '" + std::string(text) + "'");
    Rational value;
    // mpq_class::set_str accepts "p/q" directly but does not reduce;
    // canonicalize() also normalizes the sign of the denominator.
    if (value.set_str(std::string(text), 10) != 0)
        throw InputError("not a rational number: '" + std::string(text) + "'");
    if (value.get_den() == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // base was canonical, so num^e / den^e already is.
    return result;
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

long to_long(const Rational& value) {
    if (!is_integer(value))
        throw InternalError("expected an integer, got " + to_string(value));
    if (!value.get_num().fits_slong_p())
        throw InternalError("integer out of range: " + to_string(value));
    return value.get_num().get_si();
}

}  // namespace constellab
