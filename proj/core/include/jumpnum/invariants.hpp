#pragma once

#include <jumpnum/types.hpp>

#include <optional>

namespace jumpnum {

/// Puiseux characteristic (m; beta_1, ..., beta_g) of a singular branch:
/// multiplicity m >= 2 and the strictly increasing characteristic
/// exponents, each beta_j > m and not divisible by m_j, where
/// m_1 = m, m_{j+1} = gcd(m_j, beta_j), and m_{g+1} = 1.
struct PuiseuxCharacteristic {
    Int m;
    std::vector<Int> beta;

    int exponent_count() const { return static_cast<int>(beta.size()); }  // g
    std::vector<Int> gcd_chain() const;                                   // m_1..m_{g+1}
    void validate() const;

    static PuiseuxCharacteristic make(Int m, std::vector<Int> beta);

    friend bool operator==(const PuiseuxCharacteristic&, const PuiseuxCharacteristic&) = default;
};

/// Canonical minimal generators (beta_bar_0, ..., beta_bar_g) of the
/// semigroup of a branch: beta_bar_0 is the least nonzero element,
/// beta_bar_j the least element not divisible by m_j.  The single-element
/// list (1) stands for the semigroup of a smooth germ.
struct SemigroupGenerators {
    std::vector<Int> beta_bar;

    bool smooth() const { return beta_bar.size() == 1 && beta_bar[0] == 1; }
    int count() const { return static_cast<int>(beta_bar.size()) - 1; }  // g
    std::vector<Int> gcd_chain() const;                                  // m_1..m_{g+1}
    void validate() const;

    static SemigroupGenerators make(std::vector<Int> beta_bar);

    friend bool operator==(const SemigroupGenerators&, const SemigroupGenerators&) = default;
};

/// Recursion beta_bar_{j+1} = (m_j/m_{j+1}) beta_bar_j + beta_{j+1} - beta_j
/// with beta_bar_0 = m and beta_bar_1 = beta_1.
SemigroupGenerators semigroup_from_characteristic(const PuiseuxCharacteristic& c);

/// Exact inverse of semigroup_from_characteristic; rejects the smooth
/// semigroup (1), which has no characteristic exponents.
PuiseuxCharacteristic characteristic_from_semigroup(const SemigroupGenerators& s);

/// Computes the numerical semigroup generated by `gens` (membership up to
/// min*max, which exceeds its Frobenius number) and extracts the canonical
/// generators.  The result does not depend on which generating set of the
/// same semigroup is supplied.  Rejects sets with gcd != 1 and semigroups
/// that are not plane-branch semigroups.
SemigroupGenerators canonicalize_generators(std::vector<Int> gens);

/// p_j = m_j/m_{j+1}, q_j = (beta_j - beta_{j-1} + m_j)/m_{j+1} with
/// beta_0 = m_1; the tree of the branch is T_{p_1,q_1} # ... # T_{p_g,q_g}.
PairList characteristic_to_pairs(const PuiseuxCharacteristic& c);

/// Inverse of characteristic_to_pairs; rejects the empty list (smooth).
PuiseuxCharacteristic pairs_to_characteristic(const PairList& pairs);

/// Puiseux characteristic of the strict transform after one blow-up:
///   (m; beta_1 - m, ...)                      if beta_1 > 2m
///   (beta_1 - m; m, beta_2 - beta_1 + m, ...) if beta_1 < 2m, (beta_1 - m) does not divide m
///   (beta_1 - m; beta_2 - beta_1 + m, ...)    if (beta_1 - m) divides m
/// Returns nullopt once the strict transform is smooth.
std::optional<PuiseuxCharacteristic> blowup_characteristic(const PuiseuxCharacteristic& c);

/// Multiplicities of the successive strict transforms through the minimal
/// log resolution, trailing 1s included; equals the weight vector of the
/// Enriques diagram.
std::vector<Int> multiplicity_sequence(const PuiseuxCharacteristic& c);

/// The three encodings of one singularity, kept mutually consistent.  A
/// smooth germ has no characteristic, the semigroup (1) and no pairs.
struct CurveInvariants {
    std::optional<PuiseuxCharacteristic> characteristic;
    SemigroupGenerators semigroup;
    PairList pairs;
    std::vector<Int> gcd_chain;  // m_1..m_{g+1}

    bool smooth() const { return !characteristic.has_value(); }

    static CurveInvariants from_characteristic(PuiseuxCharacteristic c);
    static CurveInvariants from_semigroup(SemigroupGenerators s);
    static CurveInvariants from_generators(std::vector<Int> gens);
    static CurveInvariants from_pairs(PairList pairs);
};

}  // namespace jumpnum
