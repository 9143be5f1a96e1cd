#include <jumpnum/jumping.hpp>

#include <jumpnum/euclid.hpp>

#include <boost/integer/mod_inverse.hpp>

#include <algorithm>
#include <set>

namespace jumpnum {

std::vector<JumpingNumber> merge_segment_sets(const std::vector<SegmentSet>& segments) {
    std::vector<std::pair<Rational, VertexIndex>> entries;
    for (const SegmentSet& segment : segments) {
        for (const Rational& value : segment.values) {
            entries.emplace_back(value, segment.junction);
        }
    }
    // Stable: a value shared by several segments keeps its contributors in
    // segment order, which is ascending junction order.
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<JumpingNumber> numbers;
    for (auto it = entries.begin(); it != entries.end();) {
        JumpingNumber number{it->first, {}};
        for (; it != entries.end() && it->first == number.value; ++it) {
            number.contributors.push_back(it->second);
        }
        numbers.push_back(std::move(number));
    }
    return numbers;
}

namespace {

std::vector<Rational> scaled(const std::vector<Int>& numerators, const Int& denominator) {
    std::vector<Rational> values;
    values.reserve(numerators.size());
    for (const Int& x : numerators) {
        values.emplace_back(x, denominator);
    }
    return values;
}

}  // namespace

RSetParams::RSetParams(Int p_in, Int q_in, Int m_in)
    : p(std::move(p_in)), q(std::move(q_in)), m(std::move(m_in)) {
    validate_pair(p, q);
    if (m < 1) {
        throw ValidationError("translate count m < 1");
    }
    const Int inverse = boost::integer::mod_inverse(Int(q % p), p);
    q_prime = p - inverse;
    if ((q * q_prime + 1) % p != 0) {
        throw std::logic_error("mod_inverse returned a wrong inverse");
    }
}

std::vector<Int> r_set(const Int& p, const Int& q) {
    validate_pair(p, q);
    const Int size = (p - 1) * (q - 1) / 2;
    if (size > (Int(1) << 23)) {
        throw ValidationError("R(" + p.str() + "," + q.str() + ") too large to materialize (" +
                              size.str() + " elements)");
    }
    // Elements ap + bq with a,b >= 1 below pq are pairwise distinct.
    std::vector<Int> values;
    for (Int a = 1; a * p + q < p * q; ++a) {
        for (Int b = 1; a * p + b * q < p * q; ++b) {
            values.push_back(a * p + b * q);
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<Int> r_m_set(const Int& p, const Int& q, const Int& m) {
    if (m < 1) {
        throw ValidationError("translate count m < 1");
    }
    const std::vector<Int> base = r_set(p, q);
    std::vector<Int> values;
    for (Int j = 0; j < m; ++j) {
        const Int shift = j * p * q;
        for (const Int& x : base) {
            values.push_back(shift + x);
        }
    }
    return values;  // translates are disjoint ascending blocks
}

std::vector<Int> qbar_sequence(const PairList& pairs) {
    validate_pair_list(pairs);
    std::vector<Int> qbar;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (j == 0) {
            qbar.push_back(pairs[0].q);
        } else {
            // m_{j-1}/m_{j+1} = p_{j-1} p_j.
            qbar.push_back(pairs[j - 1].p * pairs[j].p * qbar.back() - pairs[j].p + pairs[j].q);
        }
    }
    return qbar;
}

std::vector<VertexIndex> junction_vertices_of(const PairList& pairs) {
    std::vector<VertexIndex> junctions;
    Int position = 1;
    for (const PuiseuxPair& pair : pairs) {
        position += euclid_expand(pair.p, pair.q).quotient_sum() - 1;
        junctions.push_back(checked_int64(position));
    }
    return junctions;
}

std::optional<Rational> JumpingReport::lct() const {
    if (numbers.empty()) {
        return std::nullopt;
    }
    return numbers.front().value;
}

JumpingReport jumping_numbers_from_tree(const PairList& pairs) {
    validate_pair_list(pairs);
    JumpingReport report;
    report.gcd_chain.assign(pairs.size() + 1, Int(1));
    for (std::size_t j = pairs.size(); j-- > 0;) {
        report.gcd_chain[j] = pairs[j].p * report.gcd_chain[j + 1];
    }
    report.qbar = qbar_sequence(pairs);

    const std::vector<VertexIndex> junctions = junction_vertices_of(pairs);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        SegmentSet segment;
        segment.junction = junctions[j];
        segment.denominator = report.gcd_chain[j] * report.qbar[j];
        segment.values = scaled(r_m_set(pairs[j].p, report.qbar[j], report.gcd_chain[j + 1]),
                                segment.denominator);
        report.segments.push_back(std::move(segment));
    }
    report.numbers = merge_segment_sets(report.segments);
    return report;
}

JumpingReport jumping_numbers_from_semigroup(const SemigroupGenerators& s) {
    s.validate();
    JumpingReport report;
    report.gcd_chain = s.gcd_chain();
    if (s.smooth()) {
        return report;
    }

    const std::vector<VertexIndex> junctions =
        junction_vertices_of(characteristic_to_pairs(characteristic_from_semigroup(s)));
    for (std::size_t j = 1; j < s.beta_bar.size(); ++j) {
        const Int p = exact_div(report.gcd_chain[j - 1], report.gcd_chain[j]);
        const Int q = exact_div(s.beta_bar[j], report.gcd_chain[j]);
        report.qbar.push_back(q);

        SegmentSet segment;
        segment.junction = junctions[j - 1];
        segment.denominator = lcm(report.gcd_chain[j - 1], s.beta_bar[j]);
        segment.values = scaled(r_m_set(p, q, report.gcd_chain[j]), segment.denominator);
        report.segments.push_back(std::move(segment));
    }
    report.numbers = merge_segment_sets(report.segments);
    return report;
}

std::vector<Rational> extend_by_periodicity(const JumpingReport& report, const Rational& bound) {
    if (bound < 1) {
        throw ValidationError("bound < 1");
    }
    std::set<Rational> values;
    std::vector<Rational> bases = {Rational(1)};
    for (const JumpingNumber& number : report.numbers) {
        bases.push_back(number.value);
    }
    for (const Rational& base : bases) {
        for (Rational value = base; value <= bound; value += 1) {
            values.insert(value);
        }
    }
    return {values.begin(), values.end()};
}

}  // namespace jumpnum
