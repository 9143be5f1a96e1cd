#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumpnum {

// All arithmetic in this library is exact.  Jumping numbers are rationals
// and the lattice coefficients grow multiplicatively with the number of
// characteristic pairs, so everything runs on arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Vertices of an Enriques tree are numbered 1..s in blow-up order.
using VertexIndex = std::int64_t;

/// Thrown when an input violates one of the documented preconditions.
/// The message names the violated condition; the CLI prints it verbatim.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown by the text-grammar parsers; carries the byte offset of the
/// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// One characteristic (Puiseux) pair of a plane branch.  The tree of the
/// singularity is the connected sum of the trees T_{p,q} of its pairs.
struct PuiseuxPair {
    Int p;
    Int q;

    friend bool operator==(const PuiseuxPair&, const PuiseuxPair&) = default;
};

using PairList = std::vector<PuiseuxPair>;

/// Requires 2 <= p < q and gcd(p,q) = 1; throws ValidationError otherwise.
void validate_pair(const Int& p, const Int& q);

/// Same check for every pair; error messages carry the 1-based pair index.
void validate_pair_list(const PairList& pairs);

/// Quotient of an exact division; throws std::logic_error if b does not
/// divide a (used where divisibility is a structural invariant).
Int exact_div(const Int& a, const Int& b);

/// Floor of a/b for b > 0.
Int floor_div(const Int& a, const Int& b);

/// Narrows to int64, failing loudly instead of wrapping.
std::int64_t checked_int64(const Int& value);

/// "num/den" in lowest terms, or just "num" for integers.
std::string to_fraction(const Rational& value);

}  // namespace jumpnum
