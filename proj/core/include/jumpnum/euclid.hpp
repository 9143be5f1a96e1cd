#pragma once

#include <jumpnum/types.hpp>

namespace jumpnum {

/// Euclidean-algorithm data for a coprime pair (p,q), 2 <= p < q, together
/// with the auxiliary sequences (f_j) and (delta_j) driving the coefficient
/// formulas of the exceptional lattice:
///
///     f_j     = f_{j-2} + a_j delta_j          (1 <= j <= m)
///     delta_j = delta_{j-2} + a_{j-1} f_{j-2}  (2 <= j <= m+1)
///
/// with f_{-1} = f_0 = 0 and delta_0 = delta_1 = 1.  The remainders satisfy
/// r_j = -f_{j-1} q + delta_j p for odd j and r_j = delta_j q - f_{j-1} p for
/// even j; at the end f_m = q, delta_{m+1} = p when m is odd and f_m = p,
/// delta_{m+1} = q when m is even.
///
/// Index offsets: f is stored shifted by one so that f[j+1] holds f_j
/// (j runs from -1); delta[j] holds delta_j (j from 0).  The accessors
/// below take the mathematical index.
struct EuclidData {
    Int p;
    Int q;
    std::vector<Int> quotients;   // a_1..a_m, quotients[j-1] = a_j
    std::vector<Int> remainders;  // r_0..r_m, remainders[j] = r_j; r_0 = q, r_1 = p, r_m = 1
    std::vector<Int> f;           // f_{-1}..f_m, f[j+1] = f_j
    std::vector<Int> delta;       // delta_0..delta_{m+1}, delta[j] = delta_j

    int length() const { return static_cast<int>(quotients.size()); }  // m

    const Int& a(int j) const { return quotients.at(static_cast<std::size_t>(j - 1)); }
    const Int& r(int j) const { return remainders.at(static_cast<std::size_t>(j)); }
    const Int& f_at(int j) const { return f.at(static_cast<std::size_t>(j + 1)); }
    const Int& delta_at(int j) const { return delta.at(static_cast<std::size_t>(j)); }

    /// a_1 + ... + a_m; equals the vertex count of the tree T_{p,q}.
    Int quotient_sum() const;
};

/// Runs the Euclidean algorithm on (p,q) and fills in the auxiliary
/// sequences.  Requires 2 <= p < q and gcd(p,q) = 1 (so m >= 2).
EuclidData euclid_expand(const Int& p, const Int& q);

}  // namespace jumpnum
