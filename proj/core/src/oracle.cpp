#include <jumpnum/oracle.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace jumpnum {

namespace {

std::string describe_pairs(const PairList& pairs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out << (i ? ";" : "") << pairs[i].p << "," << pairs[i].q;
    }
    return out.str();
}

std::vector<Int> pair_gcd_chain(const PairList& pairs) {
    std::vector<Int> chain(pairs.size() + 1, Int(1));
    for (std::size_t j = pairs.size(); j-- > 0;) {
        chain[j] = pairs[j].p * chain[j + 1];
    }
    return chain;
}

Int column_contribution(const std::vector<std::pair<VertexIndex, int>>& column,
                        const std::vector<Int>& e, const Int& e_rho, const Int& x) {
    Int value = 0;
    for (const auto& [alpha, n] : column) {
        value -= floor_div(x * e[static_cast<std::size_t>(alpha - 1)], e_rho) * n;
    }
    return value;
}

// First index at which two number lists disagree, as a message; empty if equal.
std::string compare_numbers(const char* left_name, const std::vector<JumpingNumber>& left,
                            const char* right_name, const std::vector<JumpingNumber>& right) {
    std::ostringstream out;
    const std::size_t common = std::min(left.size(), right.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (left[i].value != right[i].value) {
            out << left_name << " vs " << right_name << ": value #" << i + 1 << " differs: "
                << to_fraction(left[i].value) << " vs " << to_fraction(right[i].value);
            return out.str();
        }
        if (left[i].contributors != right[i].contributors) {
            out << left_name << " vs " << right_name << ": contributors of "
                << to_fraction(left[i].value) << " differ";
            return out.str();
        }
    }
    if (left.size() != right.size()) {
        out << left_name << " vs " << right_name << ": " << left.size() << " vs " << right.size()
            << " jumping numbers";
        return out.str();
    }
    return {};
}

std::string compare_segments(const char* left_name, const std::vector<SegmentSet>& left,
                             const char* right_name, const std::vector<SegmentSet>& right) {
    std::ostringstream out;
    if (left.size() != right.size()) {
        out << left_name << " vs " << right_name << ": " << left.size() << " vs " << right.size()
            << " segments";
        return out.str();
    }
    for (std::size_t j = 0; j < left.size(); ++j) {
        if (left[j].junction != right[j].junction) {
            out << left_name << " vs " << right_name << ": segment " << j + 1
                << " junction differs: " << left[j].junction << " vs " << right[j].junction;
            return out.str();
        }
        if (left[j].values != right[j].values) {
            out << left_name << " vs " << right_name << ": segment " << j + 1 << " values differ";
            return out.str();
        }
    }
    return {};
}

}  // namespace

Int contribution_value(const EnriquesTree& tree, VertexIndex rho, const Int& x) {
    const ProximityTable prox = proximity(tree);
    const auto column = intersection_column(prox, prox.inverse(), rho);
    const LatticeDivisor divisor = branch_divisor(tree);
    return column_contribution(column, divisor.e, divisor.e[static_cast<std::size_t>(rho - 1)], x);
}

bool contribution_test(const EnriquesTree& tree, VertexIndex rho, const Rational& xi) {
    if (xi <= 0 || xi >= 1) {
        throw ValidationError("xi must satisfy 0 < xi < 1");
    }
    const std::vector<VertexIndex> relevant = relevant_positions(tree);
    if (std::find(relevant.begin(), relevant.end(), rho) == relevant.end()) {
        throw ValidationError("vertex " + std::to_string(rho) + " is not a relevant position");
    }
    const LatticeDivisor divisor = branch_divisor(tree);
    const Int& e_rho = divisor.e[static_cast<std::size_t>(rho - 1)];
    if (e_rho % denominator(xi) != 0) {
        return false;  // xi e_rho is not an integer
    }
    const Int x = exact_div(e_rho, denominator(xi)) * numerator(xi);
    return contribution_value(tree, rho, x) >= 2;
}

JumpingReport oracle_jumping_numbers(const EnriquesTree& tree) {
    JumpingReport report;
    report.gcd_chain = pair_gcd_chain(tree.pairs);
    if (tree.trivial()) {
        return report;
    }

    const ProximityTable prox = proximity(tree);
    const auto inverse = prox.inverse();
    const LatticeDivisor divisor = branch_divisor(tree);

    for (VertexIndex rho : relevant_positions(tree)) {
        const auto column = intersection_column(prox, inverse, rho);
        const Int& e_rho = divisor.e[static_cast<std::size_t>(rho - 1)];

        SegmentSet segment;
        segment.junction = rho;
        segment.denominator = e_rho;
        for (Int x = 1; x < e_rho; ++x) {
            if (column_contribution(column, divisor.e, e_rho, x) >= 2) {
                segment.values.emplace_back(x, e_rho);
            }
        }
        report.segments.push_back(std::move(segment));
    }
    report.numbers = merge_segment_sets(report.segments);
    return report;
}

std::vector<Rational> candidate_set(const EnriquesTree& tree) {
    if (tree.trivial()) {
        return {};
    }
    const LatticeDivisor divisor = branch_divisor(tree);
    const std::vector<Int> k = canonical_coeffs(tree);
    std::set<Rational> candidates;
    for (std::size_t alpha = 0; alpha < k.size(); ++alpha) {
        for (Int n = k[alpha]; n < divisor.e[alpha]; ++n) {
            candidates.emplace(n, divisor.e[alpha]);
        }
    }
    return {candidates.begin(), candidates.end()};
}

VerificationReport verify_formula(const PairList& pairs) {
    validate_pair_list(pairs);
    VerificationReport report;

    const JumpingReport by_tree = jumping_numbers_from_tree(pairs);
    const SemigroupGenerators generators =
        pairs.empty() ? SemigroupGenerators{{Int(1)}}
                      : semigroup_from_characteristic(pairs_to_characteristic(pairs));
    const JumpingReport by_semigroup = jumping_numbers_from_semigroup(generators);
    const JumpingReport by_oracle = oracle_jumping_numbers(from_pairs(pairs));

    const std::string location = " [pairs " + describe_pairs(pairs) + "]";
    for (std::string message :
         {compare_numbers("tree", by_tree.numbers, "semigroup", by_semigroup.numbers),
          compare_segments("tree", by_tree.segments, "semigroup", by_semigroup.segments),
          compare_numbers("tree", by_tree.numbers, "oracle", by_oracle.numbers),
          compare_segments("tree", by_tree.segments, "oracle", by_oracle.segments)}) {
        if (!message.empty()) {
            report.mismatches.push_back(message + location);
        }
    }
    return report;
}

std::vector<Int> r_set_bruteforce(const Int& p, const Int& q, const Int& m) {
    const RSetParams params(p, q, m);
    std::vector<Int> values;
    const Int pq = p * q;
    for (Int k = 1; k < m * pq; ++k) {
        const Rational sum = Rational(k % pq, pq) + Rational((params.q_prime * k) % p, p);
        if (sum > 1) {
            values.push_back(k);
        }
    }
    return values;
}

VerificationReport coefficient_closed_form_check(const PairList& pairs) {
    validate_pair_list(pairs);
    VerificationReport report;
    auto mismatch = [&report, &pairs](const std::string& message) {
        report.mismatches.push_back(message + " [pairs " + describe_pairs(pairs) + "]");
    };

    // Closed forms from the Euclid sequences inside each single T_{p,q}:
    // the coefficients of B_r and of W_1 in the strict-transform basis.
    for (const PuiseuxPair& pair : pairs) {
        const EuclidData euclid = euclid_expand(pair.p, pair.q);
        const EnriquesTree tree = build_tpq(pair.p, pair.q);
        const ProximityTable prox = proximity(tree);
        const std::vector<Int> branch_e = branch_divisor(tree).e;
        std::vector<Int> w1(static_cast<std::size_t>(tree.vertex_count), 0);
        w1[0] = 1;
        const std::vector<Int> w1_e = divisor_from_w(prox, std::move(w1)).e;

        std::size_t alpha = 0;
        for (int j = 0; j < euclid.length(); ++j) {
            for (Int k = 1; k <= euclid.a(j + 1); ++k, ++alpha) {
                const Int factor = euclid.f_at(j - 1) + k * euclid.delta_at(j + 1);
                const Int expected_b = factor * (j % 2 == 0 ? pair.p : pair.q);
                const Int expected_w1 =
                    (j % 2 == 0) ? Int(euclid.delta_at(j) + k * euclid.f_at(j)) : factor;
                if (branch_e[alpha] != expected_b) {
                    mismatch("e(B_r) closed form at vertex " + std::to_string(alpha + 1) +
                             " of T_{" + pair.p.str() + "," + pair.q.str() + "}: " +
                             branch_e[alpha].str() + " vs " + expected_b.str());
                }
                if (w1_e[alpha] != expected_w1) {
                    mismatch("e(W_1) closed form at vertex " + std::to_string(alpha + 1) +
                             " of T_{" + pair.p.str() + "," + pair.q.str() + "}: " +
                             w1_e[alpha].str() + " vs " + expected_w1.str());
                }
            }
        }
    }

    if (pairs.empty()) {
        return report;
    }

    const EnriquesTree full = from_pairs(pairs);
    const LatticeDivisor divisor = branch_divisor(full);
    const std::vector<VertexIndex> junctions = junction_vertices_of(pairs);
    const std::vector<Int> chain = pair_gcd_chain(pairs);
    const std::vector<Int> qbar = qbar_sequence(pairs);

    // Junction values: weight m_{j+1} and coefficient m_j qbar_j.
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto at = static_cast<std::size_t>(junctions[j] - 1);
        if (divisor.w[at] != chain[j + 1]) {
            mismatch("junction weight " + std::to_string(j + 1) + ": " + divisor.w[at].str() +
                     " vs " + chain[j + 1].str());
        }
        if (divisor.e[at] != chain[j] * qbar[j]) {
            mismatch("junction coefficient " + std::to_string(j + 1) + ": " +
                     divisor.e[at].str() + " vs " + Int(chain[j] * qbar[j]).str());
        }
    }

    // Prefix scaling: below the junction of each proper prefix, the full
    // branch divisor is the prefix's scaled by the junction weight.
    for (std::size_t j = 1; j < pairs.size(); ++j) {
        const PairList prefix(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(j));
        const std::vector<Int> prefix_e = branch_divisor(from_pairs(prefix)).e;
        const auto junction = static_cast<std::size_t>(junctions[j - 1]);
        const Int& factor = divisor.w[junction - 1];
        for (std::size_t alpha = 0; alpha < junction; ++alpha) {
            if (divisor.e[alpha] != factor * prefix_e[alpha]) {
                mismatch("prefix scaling at vertex " + std::to_string(alpha + 1) + " (prefix " +
                         std::to_string(j) + "): " + divisor.e[alpha].str() + " vs " +
                         Int(factor * prefix_e[alpha]).str());
                break;
            }
        }
    }

    // Suffix affine relation: for every prefix sum S_j = S_{j-1} # T_j, the
    // coefficients over the last segment are an affine combination of that
    // segment's own B- and W_1-coefficients.
    for (std::size_t j = 1; j < pairs.size(); ++j) {
        const PairList upto(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(j + 1));
        const std::vector<Int> upto_e = branch_divisor(from_pairs(upto)).e;
        const PairList before(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(j));
        const std::vector<Int> before_e = branch_divisor(from_pairs(before)).e;

        const EnriquesTree last = build_tpq(pairs[j].p, pairs[j].q);
        const ProximityTable last_prox = proximity(last);
        const std::vector<Int> last_b = branch_divisor(last).e;
        std::vector<Int> w1(static_cast<std::size_t>(last.vertex_count), 0);
        w1[0] = 1;
        const std::vector<Int> last_w1 = divisor_from_w(last_prox, std::move(w1)).e;

        const Int scale = before_e.back() - 1;
        const std::size_t offset = before_e.size() - 1;
        for (std::size_t alpha = 0; alpha < last_b.size(); ++alpha) {
            const Int expected = scale * last_w1[alpha] * pairs[j].p + last_b[alpha];
            if (upto_e[offset + alpha] != expected) {
                mismatch("suffix relation at vertex " + std::to_string(offset + alpha + 1) +
                         " (prefix " + std::to_string(j) + "): " + upto_e[offset + alpha].str() +
                         " vs " + expected.str());
                break;
            }
        }
    }

    return report;
}

VerificationReport term_ideal_initial_check(const PairList& pairs) {
    validate_pair_list(pairs);
    if (pairs.empty()) {
        throw ValidationError("term-ideal check needs at least one pair");
    }
    VerificationReport report;

    const Int pi = pair_gcd_chain(pairs)[1];  // p_2 ... p_g
    const std::vector<Int> first_numerators = r_set(pairs[0].p, pairs[0].q);
    const Int denominator = pairs[0].p * pairs[0].q * pi;

    const JumpingReport curve = jumping_numbers_from_tree(pairs);
    if (curve.numbers.size() < first_numerators.size()) {
        report.mismatches.push_back("curve has fewer jumping numbers than |R(p_1,q_1)| [pairs " +
                                    describe_pairs(pairs) + "]");
        return report;
    }
    for (std::size_t i = 0; i < first_numerators.size(); ++i) {
        const Rational expected(first_numerators[i], denominator);
        if (curve.numbers[i].value != expected) {
            report.mismatches.push_back("term-ideal value #" + std::to_string(i + 1) +
                                        " differs: " + to_fraction(curve.numbers[i].value) +
                                        " vs " + to_fraction(expected) + " [pairs " +
                                        describe_pairs(pairs) + "]");
            break;
        }
    }
    return report;
}

std::vector<PuiseuxPair> coprime_pairs(const Int& max_p, const Int& max_q) {
    std::vector<PuiseuxPair> pairs;
    for (Int p = 2; p <= max_p; ++p) {
        for (Int q = p + 1; q <= max_q; ++q) {
            if (gcd(p, q) == 1) {
                pairs.push_back({p, q});
            }
        }
    }
    return pairs;
}

std::vector<PairList> exhaustive_pair_lists(int max_g, const Int& max_p, const Int& max_q) {
    const std::vector<PuiseuxPair> alphabet = coprime_pairs(max_p, max_q);
    std::vector<PairList> lists;
    std::vector<PairList> previous = {PairList{}};
    for (int g = 1; g <= max_g; ++g) {
        std::vector<PairList> current;
        for (const PairList& stem : previous) {
            for (const PuiseuxPair& pair : alphabet) {
                PairList next = stem;
                next.push_back(pair);
                current.push_back(std::move(next));
            }
        }
        lists.insert(lists.end(), current.begin(), current.end());
        previous = std::move(current);
    }
    return lists;
}

PairList random_pair_list(std::mt19937_64& rng, int max_g, int max_p, int max_q) {
    std::uniform_int_distribution<int> genus(1, max_g);
    std::uniform_int_distribution<int> p_dist(2, max_p);
    PairList pairs;
    const int g = genus(rng);
    for (int j = 0; j < g; ++j) {
        for (;;) {
            const int p = p_dist(rng);
            std::uniform_int_distribution<int> q_dist(p + 1, std::max(p + 1, max_q));
            const int q = q_dist(rng);
            if (std::gcd(p, q) == 1) {
                pairs.push_back({Int(p), Int(q)});
                break;
            }
        }
    }
    return pairs;
}

PuiseuxCharacteristic random_characteristic(std::mt19937_64& rng, int max_g, int max_value) {
    std::uniform_int_distribution<int> genus(1, max_g);
    std::uniform_int_distribution<int> factor(2, 3);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int g = genus(rng);
        // Divisibility chain m_{g+1} = 1 | m_g | ... | m_1.
        std::vector<long long> chain(static_cast<std::size_t>(g) + 1, 1);
        for (int j = g; j-- > 0;) {
            chain[static_cast<std::size_t>(j)] = chain[static_cast<std::size_t>(j) + 1] * factor(rng);
        }
        if (2 * chain[0] >= max_value) {
            continue;  // no room for beta_1 > m
        }
        std::vector<Int> beta;
        long long previous = chain[0];
        bool stuck = false;
        for (int j = 0; j < g && !stuck; ++j) {
            const long long mj = chain[static_cast<std::size_t>(j)];
            const long long mnext = chain[static_cast<std::size_t>(j) + 1];
            std::vector<long long> candidates;
            for (long long c = previous + 1; c <= max_value; ++c) {
                if (std::gcd(mj, c) == mnext) {
                    candidates.push_back(c);
                }
            }
            if (candidates.empty()) {
                stuck = true;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            previous = candidates[pick(rng)];
            beta.emplace_back(previous);
        }
        if (stuck) {
            continue;
        }
        return PuiseuxCharacteristic::make(Int(chain[0]), std::move(beta));
    }
    throw std::logic_error("random_characteristic: no valid sample found");
}

}  // namespace jumpnum
