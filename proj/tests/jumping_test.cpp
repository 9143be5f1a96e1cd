#include <jumpnum/jumping.hpp>

#include <jumpnum/oracle.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace jumpnum;

namespace {

std::vector<Int> ints(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
}

Rational rat(long long num, long long den) { return Rational(num, den); }

std::vector<Rational> values_of(const JumpingReport& report) {
    std::vector<Rational> values;
    for (const JumpingNumber& number : report.numbers) {
        values.push_back(number.value);
    }
    return values;
}

// The eight jumping numbers of the semigroup (4,6,13), ascending.
const std::vector<Rational> kReport4_6_13 = {rat(5, 12),  rat(15, 26), rat(17, 26), rat(19, 26),
                                             rat(21, 26), rat(23, 26), rat(11, 12), rat(25, 26)};

}  // namespace

TEST_SUITE("jumping") {

TEST_CASE("R(p,q)") {
    CHECK(r_set(2, 3) == ints({5}));
    CHECK(r_set(5, 7) == ints({12, 17, 19, 22, 24, 26, 27, 29, 31, 32, 33, 34}));
    CHECK(r_set(2, 13) == ints({15, 17, 19, 21, 23, 25}));
}

TEST_CASE("R(p,q) cardinality and shift closure") {
    for (int p = 2; p <= 20; ++p) {
        for (int q = p + 1; q <= 20; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            const std::vector<Int> values = r_set(p, q);
            REQUIRE(Int(2 * values.size()) == Int(p - 1) * (q - 1));
            const std::set<Int> lookup(values.begin(), values.end());
            for (const Int& k : values) {
                if (k + p < Int(p) * q) {
                    REQUIRE(lookup.count(k + p) == 1);
                }
            }
        }
    }
}

TEST_CASE("R^m(p,q)") {
    CHECK(r_m_set(2, 3, 5) == ints({5, 11, 17, 23, 29}));
    CHECK(r_m_set(7, 9, 1) == r_set(7, 9));
    CHECK(r_m_set(2, 3, 2) == ints({5, 11}));
    CHECK_THROWS_AS(r_m_set(2, 3, 0), ValidationError);
}

TEST_CASE("R-set parameters") {
    CHECK(RSetParams(5, 7, 1).q_prime == 2);   // 7*2 = 14 = -1 mod 5
    CHECK(RSetParams(2, 13, 3).q_prime == 1);  // p = 2 forces q' = 1
    CHECK(RSetParams(5, 36, 2).q_prime == 4);  // 36*4 = 144 = -1 mod 5
    CHECK_THROWS_AS(RSetParams(5, 7, 0), ValidationError);
}

TEST_CASE("qbar sequences") {
    CHECK(qbar_sequence({{2, 3}, {5, 11}}) == ints({3, 36}));
    CHECK(qbar_sequence({{2, 3}, {2, 3}}) == ints({3, 13}));
    CHECK(qbar_sequence({{7, 12}}) == ints({12}));
}

TEST_CASE("jumping numbers of T_{2,3} # T_{5,11}") {
    const JumpingReport report = jumping_numbers_from_tree({{2, 3}, {5, 11}});
    const auto found = std::find_if(report.numbers.begin(), report.numbers.end(),
                                    [](const JumpingNumber& n) { return n.value == rat(11, 30); });
    REQUIRE(found != report.numbers.end());
    CHECK(found->contributors == std::vector<VertexIndex>{3, 9});
    CHECK(report.lct() == rat(5, 30));
    CHECK(report.qbar == ints({3, 36}));
    CHECK(report.gcd_chain == ints({10, 5, 1}));
}

TEST_CASE("jumping numbers of a single pair are R(p,q)/pq") {
    const JumpingReport report = jumping_numbers_from_tree({{5, 7}});
    std::vector<Rational> expected;
    for (const Int& x : r_set(5, 7)) {
        expected.emplace_back(x, 35);
    }
    CHECK(values_of(report) == expected);
    CHECK(report.lct() == rat(12, 35));
    for (const JumpingNumber& number : report.numbers) {
        CHECK(number.contributors == std::vector<VertexIndex>{5});
    }
}

TEST_CASE("jumping numbers of T_{2,3} # T_{2,3}") {
    CHECK(values_of(jumping_numbers_from_tree({{2, 3}, {2, 3}})) == kReport4_6_13);
}

TEST_CASE("jumping numbers from the semigroup") {
    CHECK(values_of(jumping_numbers_from_semigroup(SemigroupGenerators::make(ints({4, 6, 13})))) ==
          kReport4_6_13);

    const JumpingReport report =
        jumping_numbers_from_semigroup(SemigroupGenerators::make(ints({10, 15, 36})));
    const std::vector<Rational> values = values_of(report);
    CHECK(std::find(values.begin(), values.end(), rat(11, 30)) != values.end());

    CHECK(values_of(jumping_numbers_from_semigroup(SemigroupGenerators::make(ints({5, 7})))) ==
          values_of(jumping_numbers_from_tree({{5, 7}})));
}

TEST_CASE("smooth germs have no jumping numbers below 1") {
    CHECK(jumping_numbers_from_tree({}).numbers.empty());
    CHECK(!jumping_numbers_from_tree({}).lct().has_value());
    CHECK(jumping_numbers_from_semigroup(SemigroupGenerators{{Int(1)}}).numbers.empty());
}

TEST_CASE("lct") {
    CHECK(jumping_numbers_from_tree({{2, 3}}).lct() == rat(5, 6));
    CHECK(jumping_numbers_from_semigroup(SemigroupGenerators::make(ints({4, 6, 13}))).lct() ==
          rat(5, 12));
}

TEST_CASE("extension by periodicity") {
    const JumpingReport cusp = jumping_numbers_from_tree({{2, 3}});
    CHECK(extend_by_periodicity(cusp, 2) ==
          std::vector<Rational>{rat(5, 6), rat(1, 1), rat(11, 6), rat(2, 1)});
    CHECK(extend_by_periodicity(jumping_numbers_from_tree({}), 2) ==
          std::vector<Rational>{rat(1, 1), rat(2, 1)});

    const JumpingReport t57 = jumping_numbers_from_tree({{5, 7}});
    std::vector<Rational> expected = values_of(t57);
    expected.push_back(rat(1, 1));
    CHECK(extend_by_periodicity(t57, 1) == expected);
    CHECK_THROWS_AS(extend_by_periodicity(t57, rat(1, 2)), ValidationError);
}

TEST_CASE("howald agreement for single pairs up to 50") {
    for (const PuiseuxPair& pair : coprime_pairs(50, 50)) {
        // The sums a/p + b/q with a < p, b < q are pairwise distinct.
        std::vector<Rational> expected;
        for (Int a = 1; a < pair.p; ++a) {
            for (Int b = 1; Rational(a, pair.p) + Rational(b, pair.q) < 1; ++b) {
                expected.push_back(Rational(a, pair.p) + Rational(b, pair.q));
            }
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE(values_of(jumping_numbers_from_tree({pair})) == expected);
    }
}

TEST_CASE("report invariants on random pair lists") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        const PairList pairs = random_pair_list(rng, 3, 5, 17);
        const JumpingReport report = jumping_numbers_from_tree(pairs);

        // Values in (0,1), strictly increasing, every contributor recorded.
        std::size_t violations = 0;
        for (std::size_t k = 0; k < report.numbers.size(); ++k) {
            if (report.numbers[k].value <= 0 || report.numbers[k].value >= 1 ||
                report.numbers[k].contributors.empty() ||
                (k && report.numbers[k - 1].value >= report.numbers[k].value)) {
                ++violations;
            }
        }
        REQUIRE(violations == 0);
        // The union of the segment sets is the number list.
        std::vector<Rational> from_segments;
        for (const SegmentSet& segment : report.segments) {
            from_segments.insert(from_segments.end(), segment.values.begin(),
                                 segment.values.end());
        }
        std::sort(from_segments.begin(), from_segments.end());
        from_segments.erase(std::unique(from_segments.begin(), from_segments.end()),
                            from_segments.end());
        REQUIRE(from_segments == values_of(report));

        // The two formula routes agree through the conversions.
        const JumpingReport by_semigroup = jumping_numbers_from_semigroup(
            semigroup_from_characteristic(pairs_to_characteristic(pairs)));
        REQUIRE(report.numbers == by_semigroup.numbers);
        REQUIRE(report.qbar == by_semigroup.qbar);
    }
}

}  // TEST_SUITE
