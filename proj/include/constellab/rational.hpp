#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace constellab {

/// Error in user-supplied data (problem files, CLI flags, precondition
/// violations on inputs).  The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violation of an internal invariant or of an identity that is supposed to
/// hold by theorem.  The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational number.  All arithmetic in the library is exact; floating
/// point never appears on any computational path.
using Rational = mpq_class;

/// Parse "p", "-p" or "p/q" (q > 0 after normalization).  Throws InputError
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, gcd = 1).
std::string to_string(const Rational& value);

/// Exact b^e for e >= 0.
Rational pow(const Rational& base, unsigned long exponent);

/// Absolute value.
inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// True if the value is an integer (denominator 1).
bool is_integer(const Rational& value);

/// Value as long; throws InternalError if not an integer or out of range.
long to_long(const Rational& value);

/// Least common multiple of the denominators of a range of rationals;
/// the minimal positive integer t with t*x integral for every x.
template <typename Range>
mpz_class common_denominator(const Range& values) {
    mpz_class scale = 1;
    for (const Rational& v : values) {
        mpz_class den = v.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        scale = scale / g * den;
    }
    return scale;
}

}  // namespace constellab
