#include <jumpnum/types.hpp>

#include <limits>

namespace jumpnum {

void validate_pair(const Int& p, const Int& q) {
    if (p < 2) {
        throw ValidationError("p < 2 (need p >= 2)");
    }
    if (p >= q) {
        throw ValidationError("p >= q (need p < q)");
    }
    if (gcd(p, q) != 1) {
        throw ValidationError("gcd(p, q) != 1 (need a coprime pair)");
    }
}

void validate_pair_list(const PairList& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        try {
            validate_pair(pairs[i].p, pairs[i].q);
        } catch (const ValidationError& e) {
            throw ValidationError("pair " + std::to_string(i + 1) + ": " + e.what());
        }
    }
}

Int exact_div(const Int& a, const Int& b) {
    Int quo, rem;
    divide_qr(a, b, quo, rem);
    if (rem != 0) {
        throw std::logic_error("exact_div: " + b.str() + " does not divide " + a.str());
    }
    return quo;
}

Int floor_div(const Int& a, const Int& b) {
    // cpp_int division truncates toward zero; b > 0 here.
    Int quo, rem;
    divide_qr(a, b, quo, rem);
    if (rem != 0 && a < 0) {
        --quo;
    }
    return quo;
}

std::int64_t checked_int64(const Int& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("value does not fit in 64 bits: " + value.str());
    }
    return value.convert_to<std::int64_t>();
}

std::string to_fraction(const Rational& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace jumpnum
