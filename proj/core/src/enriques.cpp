#include <jumpnum/enriques.hpp>

#include <algorithm>
#include <cassert>
#include <map>

namespace jumpnum {

namespace {

// Materialized trees hold per-vertex vectors; refuse sizes that would
// exhaust memory long before any computation finishes.
constexpr VertexIndex kMaxVertices = VertexIndex{1} << 22;

VertexIndex checked_vertex_count(const Int& count) {
    if (count > kMaxVertices) {
        throw ValidationError("tree too large to materialize (" + count.str() + " vertices)");
    }
    return checked_int64(count);
}

}  // namespace

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Slant: return "slant";
        case EdgeKind::Horizontal: return "horizontal";
        case EdgeKind::Vertical: return "vertical";
    }
    return "?";
}

std::vector<VertexIndex> EnriquesTree::junction_vertices() const {
    std::vector<VertexIndex> junctions(pairs.size(), 0);
    for (VertexIndex v = 1; v <= vertex_count; ++v) {
        const int seg = segment_of[static_cast<std::size_t>(v - 1)];
        if (seg >= 1) {
            junctions[static_cast<std::size_t>(seg - 1)] = v;
        }
    }
    return junctions;
}

EnriquesTree build_tpq(const Int& p, const Int& q) {
    const EuclidData euclid = euclid_expand(p, q);
    const int m = euclid.length();

    EnriquesTree tree;
    tree.pairs = {PuiseuxPair{p, q}};
    tree.vertex_count = checked_vertex_count(euclid.quotient_sum());
    tree.segment_of.assign(static_cast<std::size_t>(tree.vertex_count), 1);

    tree.edge_kinds.reserve(static_cast<std::size_t>(tree.vertex_count - 1));
    for (int j = 1; j <= m; ++j) {
        // The last group loses one slot: a tree with a_1+...+a_m vertices
        // has only a_1+...+a_m - 1 edges.
        Int group = (j == m) ? Int(euclid.a(j) - 1) : euclid.a(j);
        EdgeKind kind = (j == 1)        ? EdgeKind::Slant
                        : (j % 2 == 0) ? EdgeKind::Horizontal
                                       : EdgeKind::Vertical;
        for (Int i = 0; i < group; ++i) {
            tree.edge_kinds.push_back(kind);
        }
    }
    assert(static_cast<VertexIndex>(tree.edge_kinds.size()) == tree.vertex_count - 1);
    return tree;
}

EnriquesTree single_vertex_tree() {
    EnriquesTree tree;
    tree.vertex_count = 1;
    tree.segment_of = {0};
    return tree;
}

EnriquesTree connected_sum(const EnriquesTree& a, const EnriquesTree& b) {
    if (a.trivial() || b.trivial()) {
        throw ValidationError("connected sum requires nonempty operands");
    }
    if (b.vertex_count == 1 && b.pairs.empty()) {
        return a;
    }
    if (a.vertex_count == 1 && a.pairs.empty()) {
        return b;
    }

    EnriquesTree sum;
    sum.pairs = a.pairs;
    sum.pairs.insert(sum.pairs.end(), b.pairs.begin(), b.pairs.end());
    sum.vertex_count = checked_vertex_count(Int(a.vertex_count) + b.vertex_count - 1);

    sum.edge_kinds = a.edge_kinds;
    sum.edge_kinds.insert(sum.edge_kinds.end(), b.edge_kinds.begin(), b.edge_kinds.end());

    // The glued vertex {P_r = P'_1} keeps the earlier segment index.
    sum.segment_of = a.segment_of;
    const int shift = a.segments();
    for (std::size_t i = 1; i < b.segment_of.size(); ++i) {
        sum.segment_of.push_back(b.segment_of[i] + shift);
    }
    return sum;
}

EnriquesTree from_pairs(const PairList& pairs) {
    validate_pair_list(pairs);
    EnriquesTree tree;  // trivial: the smooth germ
    for (const PuiseuxPair& pair : pairs) {
        EnriquesTree segment = build_tpq(pair.p, pair.q);
        tree = tree.trivial() ? std::move(segment) : connected_sum(tree, segment);
    }
    return tree;
}

ProximityTable proximity(const EnriquesTree& tree) {
    ProximityTable table;
    table.sets.resize(static_cast<std::size_t>(tree.vertex_count));
    for (VertexIndex beta = 2; beta <= tree.vertex_count; ++beta) {
        auto& set = table.sets[static_cast<std::size_t>(beta - 1)];
        const EdgeKind kind = tree.incoming_edge(beta);
        if (kind == EdgeKind::Slant) {
            set = {beta - 1};  // free point
            continue;
        }
        // Satellite: also proximate to the start of the proper L-shape
        // branch ending at P_beta.  Walk back over the maximal run of
        // edges of the same kind; the branch starts one vertex earlier.
        VertexIndex t = beta - 1;  // first edge of the run is [P_t, P_{t+1}]
        while (t - 1 >= 1 && tree.incoming_edge(t) == kind) {
            --t;
        }
        if (t == 1) {
            throw ValidationError("satellite chain reaches the root: not a unibranch tree");
        }
        set = {t - 1, beta - 1};
    }
    return table;
}

std::vector<std::vector<VertexIndex>> ProximityTable::inverse() const {
    std::vector<std::vector<VertexIndex>> inv(sets.size());
    for (VertexIndex beta = 1; beta <= size(); ++beta) {
        for (VertexIndex alpha : prox(beta)) {
            inv[static_cast<std::size_t>(alpha - 1)].push_back(beta);
        }
    }
    return inv;
}

std::vector<std::pair<VertexIndex, int>> intersection_column(
    const ProximityTable& prox, const std::vector<std::vector<VertexIndex>>& inverse,
    VertexIndex rho) {
    // Column rho of -Pi Pi^T.  Off the diagonal,
    //   E_alpha . E_rho = [alpha and rho are proximity-related]
    //                     - #{gamma proximate to both alpha and rho},
    // and a point is proximate to both only as the satellite gamma whose
    // two parents they are.
    std::map<VertexIndex, int> entries;
    entries[rho] = -1 - static_cast<int>(inverse[static_cast<std::size_t>(rho - 1)].size());
    for (VertexIndex alpha : prox.prox(rho)) {
        entries[alpha] += 1;
    }
    for (VertexIndex gamma : inverse[static_cast<std::size_t>(rho - 1)]) {
        entries[gamma] += 1;
        if (prox.is_satellite(gamma)) {
            for (VertexIndex parent : prox.prox(gamma)) {
                if (parent != rho) {
                    entries[parent] -= 1;
                }
            }
        }
    }
    std::vector<std::pair<VertexIndex, int>> column;
    for (const auto& [alpha, value] : entries) {
        if (value != 0) {
            column.emplace_back(alpha, value);
        }
    }
    return column;
}

IntMatrix intersection_matrix(const EnriquesTree& tree) {
    if (tree.vertex_count > 4096) {
        throw ValidationError("tree too large for a dense intersection matrix");
    }
    const ProximityTable table = proximity(tree);
    const auto inv = table.inverse();
    const auto s = static_cast<std::size_t>(tree.vertex_count);

    IntMatrix matrix(s, std::vector<int>(s, 0));
    for (VertexIndex rho = 1; rho <= tree.vertex_count; ++rho) {
        for (const auto& [alpha, value] : intersection_column(table, inv, rho)) {
            matrix[static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(rho - 1)] = value;
        }
    }
    return matrix;
}

LatticeDivisor divisor_from_w(const ProximityTable& prox, std::vector<Int> w) {
    const VertexIndex s = prox.size();
    LatticeDivisor divisor;
    divisor.w = std::move(w);
    divisor.e.resize(static_cast<std::size_t>(s));
    for (VertexIndex beta = 1; beta <= s; ++beta) {
        Int value = divisor.w[static_cast<std::size_t>(beta - 1)];
        for (VertexIndex alpha : prox.prox(beta)) {
            value += divisor.e[static_cast<std::size_t>(alpha - 1)];
        }
        divisor.e[static_cast<std::size_t>(beta - 1)] = value;
    }
    const auto inv = prox.inverse();
    divisor.b.resize(static_cast<std::size_t>(s));
    for (VertexIndex alpha = 1; alpha <= s; ++alpha) {
        Int value = divisor.w[static_cast<std::size_t>(alpha - 1)];
        for (VertexIndex beta : inv[static_cast<std::size_t>(alpha - 1)]) {
            value -= divisor.w[static_cast<std::size_t>(beta - 1)];
        }
        divisor.b[static_cast<std::size_t>(alpha - 1)] = value;
    }
    return divisor;
}

LatticeDivisor divisor_from_e(const ProximityTable& prox, std::vector<Int> e) {
    const VertexIndex s = prox.size();
    std::vector<Int> w(static_cast<std::size_t>(s));
    for (VertexIndex beta = 1; beta <= s; ++beta) {
        Int value = e[static_cast<std::size_t>(beta - 1)];
        for (VertexIndex alpha : prox.prox(beta)) {
            value -= e[static_cast<std::size_t>(alpha - 1)];
        }
        w[static_cast<std::size_t>(beta - 1)] = value;
    }
    LatticeDivisor divisor = divisor_from_w(prox, std::move(w));
    divisor.e = std::move(e);
    return divisor;
}

LatticeDivisor divisor_from_b(const ProximityTable& prox, std::vector<Int> b) {
    const VertexIndex s = prox.size();
    const auto inv = prox.inverse();
    std::vector<Int> w(static_cast<std::size_t>(s));
    for (VertexIndex alpha = s; alpha >= 1; --alpha) {
        Int value = b[static_cast<std::size_t>(alpha - 1)];
        for (VertexIndex beta : inv[static_cast<std::size_t>(alpha - 1)]) {
            value += w[static_cast<std::size_t>(beta - 1)];
        }
        w[static_cast<std::size_t>(alpha - 1)] = value;
    }
    LatticeDivisor divisor = divisor_from_w(prox, std::move(w));
    divisor.b = std::move(b);
    return divisor;
}

LatticeDivisor branch_divisor(const EnriquesTree& tree) {
    if (tree.trivial()) {
        return {};
    }
    std::vector<Int> b(static_cast<std::size_t>(tree.vertex_count), 0);
    b.back() = 1;
    return divisor_from_b(proximity(tree), std::move(b));
}

std::vector<Int> canonical_coeffs(const EnriquesTree& tree) {
    std::vector<Int> ones(static_cast<std::size_t>(tree.vertex_count), 1);
    return divisor_from_w(proximity(tree), std::move(ones)).e;
}

std::vector<VertexIndex> relevant_positions(const EnriquesTree& tree) {
    if (tree.trivial()) {
        return {};
    }
    const ProximityTable table = proximity(tree);
    const auto inv = table.inverse();
    std::vector<VertexIndex> relevant;
    for (VertexIndex rho = 1; rho <= tree.vertex_count; ++rho) {
        int valence = (rho == tree.vertex_count) ? 1 : 0;  // strict transform meets E_s
        for (const auto& [alpha, value] : intersection_column(table, inv, rho)) {
            if (alpha != rho) {
                valence += value;
            }
        }
        if (valence >= 3) {
            relevant.push_back(rho);
        }
    }
    return relevant;
}

}  // namespace jumpnum
