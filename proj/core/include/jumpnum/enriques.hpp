#pragma once

#include <jumpnum/euclid.hpp>
#include <jumpnum/types.hpp>

#include <string_view>

namespace jumpnum {

/// Graphical kind of an edge of an Enriques tree.
enum class EdgeKind { Slant, Horizontal, Vertical };

std::string_view to_string(EdgeKind kind);

/// The Enriques tree of a branch singularity: the connected sum
/// T_{p_1,q_1} # ... # T_{p_g,q_g}.  Vertices are 1..s in blow-up order;
/// edge i-1 (0-based) joins P_i to P_{i+1}.  Junction vertices, where two
/// consecutive segments are glued, belong to the earlier segment.
///
/// A default-constructed tree has no vertices and stands for a smooth germ.
struct EnriquesTree {
    PairList pairs;
    VertexIndex vertex_count = 0;
    std::vector<EdgeKind> edge_kinds;   // size vertex_count - 1 (or 0)
    std::vector<int> segment_of;       // per vertex, 1-based segment index; 0 = none

    bool trivial() const { return vertex_count == 0; }
    int segments() const { return static_cast<int>(pairs.size()); }

    EdgeKind incoming_edge(VertexIndex beta) const {  // edge [P_{beta-1}, P_beta]
        return edge_kinds.at(static_cast<std::size_t>(beta - 2));
    }

    /// Junction vertices r_1 + ... + r_j - (j-1) for j = 1..g; the last one
    /// is the top vertex s.
    std::vector<VertexIndex> junction_vertices() const;
};

/// Proximity relations of the tree: prox(beta) is the set of alpha < beta
/// with P_beta proximate to P_alpha.  Every point beyond the root is
/// proximate to its predecessor; satellite points (incoming edge horizontal
/// or vertical) are proximate to one earlier point as well.
struct ProximityTable {
    std::vector<std::vector<VertexIndex>> sets;  // sets[beta-1], ascending, size <= 2

    VertexIndex size() const { return static_cast<VertexIndex>(sets.size()); }
    const std::vector<VertexIndex>& prox(VertexIndex beta) const {
        return sets.at(static_cast<std::size_t>(beta - 1));
    }
    bool is_satellite(VertexIndex beta) const { return prox(beta).size() == 2; }

    /// prox^{-1}: points proximate to alpha, per vertex.
    std::vector<std::vector<VertexIndex>> inverse() const;
};

/// One divisor of the exceptional lattice in all three bases: e over the
/// strict transforms E_alpha, w over the total transforms W_alpha, b over
/// the branch basis B_alpha (dual to -E_alpha).
struct LatticeDivisor {
    std::vector<Int> e;
    std::vector<Int> w;
    std::vector<Int> b;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Tree of the minimal log resolution of x^p - y^q = 0: one vertex per
/// quotient step, the first a_1 edges slant, then groups of a_2, ...,
/// a_{m-1}, a_m - 1 edges alternating horizontal/vertical starting with
/// horizontal.
EnriquesTree build_tpq(const Int& p, const Int& q);

/// Glues the top vertex of `a` to the root of `b`.  Both operands must be
/// nonempty.  A single-vertex tree is the neutral element.
EnriquesTree connected_sum(const EnriquesTree& a, const EnriquesTree& b);

/// The one-vertex tree (neutral element of the connected sum).
EnriquesTree single_vertex_tree();

/// Left fold of connected_sum over build_tpq; the empty list gives the
/// trivial tree of a smooth germ.
EnriquesTree from_pairs(const PairList& pairs);

ProximityTable proximity(const EnriquesTree& tree);

/// Intersection matrix -Pi Pi^T of the strict transforms E_alpha on the
/// final surface, where Pi is the (upper unitriangular) proximity matrix.
IntMatrix intersection_matrix(const EnriquesTree& tree);

/// Nonzero entries (alpha, E_alpha . E_rho) of one column of the
/// intersection matrix, ascending in alpha.  `inverse` is prox.inverse().
std::vector<std::pair<VertexIndex, int>> intersection_column(
    const ProximityTable& prox, const std::vector<std::vector<VertexIndex>>& inverse,
    VertexIndex rho);

/// Reconstructs a divisor from any one coordinate vector, using that the
/// proximity matrix is unitriangular:
///   e_beta  = w_beta + sum over prox(beta) of e_alpha    (w -> e, forward)
///   b_alpha = w_alpha - sum over prox^{-1}(alpha) of w_beta   (w -> b)
LatticeDivisor divisor_from_e(const ProximityTable& prox, std::vector<Int> e);
LatticeDivisor divisor_from_w(const ProximityTable& prox, std::vector<Int> w);
LatticeDivisor divisor_from_b(const ProximityTable& prox, std::vector<Int> b);

/// The branch divisor D = B_s = mu*C - C~ of the singularity: the unique
/// lattice divisor with D . E_beta = -delta_{beta,s}.  Its w-vector is the
/// multiplicity (weight) vector of the Enriques diagram.
LatticeDivisor branch_divisor(const EnriquesTree& tree);

/// Coefficients k_alpha of the relative canonical divisor K = sum W_alpha
/// = sum k_alpha E_alpha; they satisfy k_beta = 1 + sum over prox(beta).
std::vector<Int> canonical_coeffs(const EnriquesTree& tree);

/// Vertices rho whose exceptional curve meets at least three other
/// components of the reduced total transform (the strict transform counts
/// at the top vertex only).  For a unibranch tree these are exactly the
/// junction vertices.
std::vector<VertexIndex> relevant_positions(const EnriquesTree& tree);

}  // namespace jumpnum
