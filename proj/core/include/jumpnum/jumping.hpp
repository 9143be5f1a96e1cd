#pragma once

#include <jumpnum/invariants.hpp>
#include <jumpnum/types.hpp>

#include <optional>

namespace jumpnum {

/// Parameters of the sets R^m(p,q): a coprime pair 2 <= p < q, a translate
/// count m >= 1 and the unique 0 < q' < p with q q' = -1 (mod p).
struct RSetParams {
    Int p;
    Int q;
    Int m;
    Int q_prime;

    RSetParams(Int p_in, Int q_in, Int m_in);
};

/// R(p,q) = { ap + bq : a,b >= 1, ap + bq < pq }, ascending.
std::vector<Int> r_set(const Int& p, const Int& q);

/// R^m(p,q): the union of the translates j*pq + R(p,q), j = 0..m-1.
std::vector<Int> r_m_set(const Int& p, const Int& q, const Int& m);

/// qbar_1 = q_1 and qbar_j = (m_{j-1}/m_{j+1}) qbar_{j-1} - p_j + q_j,
/// where m_j = p_j ... p_g; equivalently qbar_j = beta_bar_j / m_{j+1}.
std::vector<Int> qbar_sequence(const PairList& pairs);

/// One jumping number with the relevant vertices that contribute it.
struct JumpingNumber {
    Rational value;
    std::vector<VertexIndex> contributors;  // ascending, nonempty

    friend bool operator==(const JumpingNumber&, const JumpingNumber&) = default;
};

/// The numbers one relevant vertex contributes: { x / denominator } with
/// x running over R^{m_{j+1}}(p_j, qbar_j) for the formula, or over the
/// accepted contribution-test values for the oracle.
struct SegmentSet {
    VertexIndex junction = 0;
    Int denominator;
    std::vector<Rational> values;  // ascending

    friend bool operator==(const SegmentSet&, const SegmentSet&) = default;
};

/// All jumping numbers < 1 of one singularity.  The union of the segment
/// sets equals the deduplicated sorted list; contributor sets are merged
/// when a number appears in several segments.
struct JumpingReport {
    std::vector<JumpingNumber> numbers;  // ascending by value
    std::vector<SegmentSet> segments;    // j = 1..g
    std::vector<Int> qbar;               // qbar_1..qbar_g
    std::vector<Int> gcd_chain;          // m_1..m_{g+1}

    /// Log-canonical threshold: the smallest jumping number; absent for a
    /// smooth germ.
    std::optional<Rational> lct() const;
};

/// Closed formula over the pair list: segment j contributes
/// (1/(m_j qbar_j)) R^{m_{j+1}}(p_j, qbar_j) at the j-th junction vertex.
/// The empty list yields the empty report.
JumpingReport jumping_numbers_from_tree(const PairList& pairs);

/// Closed formula over the canonical semigroup generators: segment j
/// contributes (1/lcm(m_j, beta_bar_j)) R^{m_{j+1}}(m_j/m_{j+1},
/// beta_bar_j/m_{j+1}).  Agrees with the tree route on converted input.
JumpingReport jumping_numbers_from_semigroup(const SemigroupGenerators& s);

/// Junction vertices r_1 + ... + r_j - (j-1) computed from the pair list
/// alone (r_j = quotient sum of the j-th pair).
std::vector<VertexIndex> junction_vertices_of(const PairList& pairs);

/// Sorted deduplicated numbers with merged contributor sets.
std::vector<JumpingNumber> merge_segment_sets(const std::vector<SegmentSet>& segments);

/// Jumping numbers up to `bound` >= 1 via periodicity: every xi + n with
/// xi in the report or xi = 1 and n >= 0.
std::vector<Rational> extend_by_periodicity(const JumpingReport& report, const Rational& bound);

}  // namespace jumpnum
