#pragma once

#include <jumpnum/enriques.hpp>
#include <jumpnum/jumping.hpp>

#include <random>

namespace jumpnum {

/// Plain-data verification result; discrepancies are data, not exceptions.
struct VerificationReport {
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// The exact integer -floor(xi mu*C) . E_rho for xi = x / e_rho, evaluated
/// as -sum over alpha of floor(x e_alpha / e_rho) (E_alpha . E_rho).
/// E_rho contributes x/e_rho as a jumping number iff this is >= 2.
Int contribution_value(const EnriquesTree& tree, VertexIndex rho, const Int& x);

/// True iff xi e_rho is an integer and contribution_value(...) >= 2.
/// Requires 0 < xi < 1 and rho relevant.
bool contribution_test(const EnriquesTree& tree, VertexIndex rho, const Rational& xi);

/// Rediscovers the jumping numbers from first principles: scans every
/// x in [1, e_rho) at every relevant position and keeps the values that
/// pass the contribution test.  Fills numbers, segments (one per relevant
/// position) and the gcd chain; qbar is left to the formula routes.
JumpingReport oracle_jumping_numbers(const EnriquesTree& tree);

/// The classical candidate superset { (k_alpha + n)/e_alpha < 1 : n >= 0 }
/// over all vertices; every jumping number lies in it.
std::vector<Rational> candidate_set(const EnriquesTree& tree);

/// Compares the two formula routes and the oracle, values and contributor
/// sets both; reports the first discrepancy per comparison.
VerificationReport verify_formula(const PairList& pairs);

/// Independent R-set oracle: scans k in [1, mpq) for
/// frac(k/pq) + frac(q'k/p) > 1 with exact rational arithmetic.
std::vector<Int> r_set_bruteforce(const Int& p, const Int& q, const Int& m);

/// Recomputes the closed-form lattice coefficients (the Euclid-sequence
/// formulas inside each T_{p,q}, the prefix scaling across a junction, the
/// junction weight/coefficient values, the suffix affine relation) and
/// compares them against the back-substituted linear algebra.
VerificationReport coefficient_closed_form_check(const PairList& pairs);

/// The monomial (term) ideal of an equation has jumping numbers
/// (a p_1 + b q_1)/(p_1 q_1 pi) with pi = p_2...p_g; its first
/// |R(p_1,q_1)| values must equal the first jumping numbers of the curve.
VerificationReport term_ideal_initial_check(const PairList& pairs);

// --- enumeration and sampling helpers for verification drivers ---

/// All coprime pairs 2 <= p <= max_p, p < q <= max_q, lexicographic.
std::vector<PuiseuxPair> coprime_pairs(const Int& max_p, const Int& max_q);

/// Every pair list of length 1..max_g over coprime_pairs(max_p, max_q).
std::vector<PairList> exhaustive_pair_lists(int max_g, const Int& max_p, const Int& max_q);

/// Uniform-ish random valid pair list with g <= max_g, p <= max_p, q <= max_q.
PairList random_pair_list(std::mt19937_64& rng, int max_g, int max_p, int max_q);

/// Random valid Puiseux characteristic with g <= max_g and all entries
/// <= max_value.
PuiseuxCharacteristic random_characteristic(std::mt19937_64& rng, int max_g, int max_value);

}  // namespace jumpnum
