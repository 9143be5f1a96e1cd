#include <jumpnum/invariants.hpp>

#include <jumpnum/euclid.hpp>

#include <algorithm>
#include <set>

namespace jumpnum {

namespace {

std::string nth(const char* name, std::size_t j) {
    return std::string(name) + "_" + std::to_string(j);
}

// Membership table of the numerical semigroup generated by gens, up to
// bound inclusive.
std::vector<char> semigroup_closure(const std::vector<Int>& gens, std::size_t bound) {
    std::vector<char> member(bound + 1, 0);
    member[0] = 1;
    for (const Int& gen : gens) {
        if (gen > static_cast<std::int64_t>(bound)) {
            continue;
        }
        const auto step = static_cast<std::size_t>(checked_int64(gen));
        for (std::size_t i = step; i <= bound; ++i) {
            member[i] = static_cast<char>(member[i] | member[i - step]);
        }
    }
    return member;
}

}  // namespace

std::vector<Int> PuiseuxCharacteristic::gcd_chain() const {
    std::vector<Int> chain = {m};
    for (const Int& b : beta) {
        chain.push_back(gcd(chain.back(), b));
    }
    return chain;
}

void PuiseuxCharacteristic::validate() const {
    if (m < 2) {
        throw ValidationError("multiplicity m < 2");
    }
    if (beta.empty()) {
        throw ValidationError("no characteristic exponents (smooth germs have no characteristic)");
    }
    if (beta.front() <= m) {
        throw ValidationError("beta_1 <= m");
    }
    for (std::size_t j = 1; j < beta.size(); ++j) {
        if (beta[j] <= beta[j - 1]) {
            throw ValidationError(nth("beta", j + 1) + " <= " + nth("beta", j) +
                                  " (exponents must increase)");
        }
    }
    const std::vector<Int> chain = gcd_chain();
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] % chain[j] == 0) {
            throw ValidationError(nth("beta", j + 1) + " divisible by " + nth("m", j + 1));
        }
    }
    if (chain.back() != 1) {
        throw ValidationError(nth("m", beta.size() + 1) + " != 1 (gcd chain must reach 1)");
    }
}

PuiseuxCharacteristic PuiseuxCharacteristic::make(Int m, std::vector<Int> beta) {
    PuiseuxCharacteristic c{std::move(m), std::move(beta)};
    c.validate();
    return c;
}

std::vector<Int> SemigroupGenerators::gcd_chain() const {
    std::vector<Int> chain = {beta_bar.front()};
    for (std::size_t j = 1; j < beta_bar.size(); ++j) {
        chain.push_back(gcd(chain.back(), beta_bar[j]));
    }
    return chain;
}

void SemigroupGenerators::validate() const {
    if (beta_bar.empty()) {
        throw ValidationError("no generators");
    }
    if (smooth()) {
        return;
    }
    if (beta_bar.front() < 2) {
        throw ValidationError("beta_bar_0 < 2 (only the smooth semigroup (1) may start lower)");
    }
    const std::vector<Int> chain = gcd_chain();
    for (std::size_t j = 1; j < beta_bar.size(); ++j) {
        if (beta_bar[j] % chain[j - 1] == 0) {
            throw ValidationError(nth("beta_bar", j) + " divisible by " + nth("m", j));
        }
        if (j == 1) {
            if (beta_bar[1] <= beta_bar[0]) {
                throw ValidationError("beta_bar_1 <= beta_bar_0");
            }
        } else if (beta_bar[j] * chain[j - 1] <= chain[j - 2] * beta_bar[j - 1]) {
            // beta_bar_j > (m_{j-1}/m_j) beta_bar_{j-1}, cleared of denominators.
            throw ValidationError(nth("beta_bar", j) + " <= (" + nth("m", j - 1) + "/" +
                                  nth("m", j) + ")*" + nth("beta_bar", j - 1) +
                                  " (strong increase violated)");
        }
    }
    if (chain.back() != 1) {
        throw ValidationError(nth("m", beta_bar.size()) + " != 1 (gcd chain must reach 1)");
    }
}

SemigroupGenerators SemigroupGenerators::make(std::vector<Int> beta_bar) {
    SemigroupGenerators s{std::move(beta_bar)};
    s.validate();
    return s;
}

SemigroupGenerators semigroup_from_characteristic(const PuiseuxCharacteristic& c) {
    c.validate();
    const std::vector<Int> chain = c.gcd_chain();
    std::vector<Int> beta_bar = {c.m, c.beta.front()};
    for (std::size_t j = 1; j < c.beta.size(); ++j) {
        beta_bar.push_back(exact_div(chain[j - 1], chain[j]) * beta_bar.back() + c.beta[j] -
                           c.beta[j - 1]);
    }
    return SemigroupGenerators::make(std::move(beta_bar));
}

PuiseuxCharacteristic characteristic_from_semigroup(const SemigroupGenerators& s) {
    s.validate();
    if (s.smooth()) {
        throw ValidationError("smooth germ has no Puiseux characteristic");
    }
    const std::vector<Int> chain = s.gcd_chain();
    std::vector<Int> beta = {s.beta_bar[1]};
    for (std::size_t j = 2; j < s.beta_bar.size(); ++j) {
        beta.push_back(s.beta_bar[j] - exact_div(chain[j - 2], chain[j - 1]) * s.beta_bar[j - 1] +
                       beta.back());
    }
    return PuiseuxCharacteristic::make(s.beta_bar.front(), std::move(beta));
}

SemigroupGenerators canonicalize_generators(std::vector<Int> gens) {
    if (gens.empty()) {
        throw ValidationError("no generators");
    }
    Int overall = 0;
    Int smallest, largest;
    for (const Int& gen : gens) {
        if (gen < 1) {
            throw ValidationError("generators must be positive integers");
        }
        overall = gcd(overall, gen);
        if (smallest == 0 || gen < smallest) smallest = gen;
        if (gen > largest) largest = gen;
    }
    if (overall != 1) {
        throw ValidationError("not a unibranch plane-branch semigroup (gcd of generators is " +
                              overall.str() + ", not 1)");
    }
    if (smallest == 1) {
        return SemigroupGenerators{{Int(1)}};  // the smooth germ
    }

    // Membership up to min*max covers every extracted generator: the
    // Frobenius number of a gcd-1 set is below (min-1)(max-1) and each
    // beta_bar_j lies within min of it.
    const Int bound_int = smallest * largest;
    if (bound_int > (Int(1) << 26)) {
        throw ValidationError("generators too large for semigroup closure (bound " +
                              bound_int.str() + ")");
    }
    const auto bound = static_cast<std::size_t>(checked_int64(bound_int));
    const std::vector<char> member = semigroup_closure(gens, bound);

    std::vector<Int> beta_bar = {smallest};
    Int m = smallest;
    while (m != 1) {
        const auto step = static_cast<std::size_t>(checked_int64(m));
        std::size_t found = 0;
        for (std::size_t i = 2; i <= bound; ++i) {
            if (member[i] && i % step != 0) {
                found = i;
                break;
            }
        }
        if (found == 0) {
            throw std::logic_error("semigroup closure bound too small");
        }
        beta_bar.push_back(Int(found));
        m = gcd(m, beta_bar.back());
    }

    SemigroupGenerators canonical;
    try {
        canonical = SemigroupGenerators::make(std::move(beta_bar));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("not a plane-branch semigroup: ") + e.what());
    }

    // The canonical generators must regenerate every input element;
    // otherwise the input semigroup was not a plane-branch semigroup
    // (e.g. {3,4,5}, whose extraction would drop 5).
    const std::vector<char> regenerated =
        semigroup_closure(canonical.beta_bar, static_cast<std::size_t>(checked_int64(largest)));
    for (const Int& gen : gens) {
        if (!regenerated[static_cast<std::size_t>(checked_int64(gen))]) {
            throw ValidationError(
                "not a plane-branch semigroup (canonical generators do not generate " + gen.str() +
                ")");
        }
    }
    return canonical;
}

PairList characteristic_to_pairs(const PuiseuxCharacteristic& c) {
    c.validate();
    const std::vector<Int> chain = c.gcd_chain();
    PairList pairs;
    Int prev_beta = c.m;
    for (std::size_t j = 0; j < c.beta.size(); ++j) {
        PuiseuxPair pair;
        pair.p = exact_div(chain[j], chain[j + 1]);
        pair.q = exact_div(c.beta[j] - prev_beta + chain[j], chain[j + 1]);
        validate_pair(pair.p, pair.q);
        pairs.push_back(std::move(pair));
        prev_beta = c.beta[j];
    }
    return pairs;
}

PuiseuxCharacteristic pairs_to_characteristic(const PairList& pairs) {
    if (pairs.empty()) {
        throw ValidationError("smooth germ has no Puiseux characteristic");
    }
    validate_pair_list(pairs);
    const std::size_t g = pairs.size();
    std::vector<Int> chain(g + 1);  // m_1..m_{g+1}
    chain[g] = 1;
    for (std::size_t j = g; j-- > 0;) {
        chain[j] = pairs[j].p * chain[j + 1];
    }
    std::vector<Int> beta;
    Int prev = chain[0];
    for (std::size_t j = 0; j < g; ++j) {
        prev = pairs[j].q * chain[j + 1] + prev - chain[j];
        beta.push_back(prev);
    }
    return PuiseuxCharacteristic::make(chain[0], std::move(beta));
}

std::optional<PuiseuxCharacteristic> blowup_characteristic(const PuiseuxCharacteristic& c) {
    c.validate();
    const Int& m = c.m;
    const Int& beta1 = c.beta.front();

    if (beta1 > 2 * m) {
        std::vector<Int> beta;
        for (const Int& b : c.beta) {
            beta.push_back(b - m);
        }
        return PuiseuxCharacteristic::make(m, std::move(beta));
    }

    const Int mult = beta1 - m;
    std::vector<Int> beta;
    if (m % mult != 0) {
        beta.push_back(m);
    }
    for (std::size_t j = 1; j < c.beta.size(); ++j) {
        beta.push_back(c.beta[j] - beta1 + m);
    }
    if (beta.empty()) {
        if (mult != 1) {
            throw std::logic_error("blow-up emptied the exponent list at multiplicity > 1");
        }
        return std::nullopt;  // smooth from here on
    }
    return PuiseuxCharacteristic::make(mult, std::move(beta));
}

std::vector<Int> multiplicity_sequence(const PuiseuxCharacteristic& c) {
    // Vertex count of the tree: sum of the quotient sums minus the glued
    // junctions.
    const PairList pairs = characteristic_to_pairs(c);
    Int vertices = 1 - Int(pairs.size());
    for (const PuiseuxPair& pair : pairs) {
        vertices += euclid_expand(pair.p, pair.q).quotient_sum();
    }

    std::vector<Int> sequence;
    std::optional<PuiseuxCharacteristic> current = c;
    while (current) {
        sequence.push_back(current->m);
        current = blowup_characteristic(*current);
    }
    // Once the strict transform is smooth, the remaining blow-ups of the
    // log resolution happen at points of multiplicity 1.
    const auto total = static_cast<std::size_t>(checked_int64(vertices));
    if (sequence.size() > total) {
        throw std::logic_error("multiplicity sequence longer than the resolution");
    }
    sequence.resize(total, Int(1));
    return sequence;
}

CurveInvariants CurveInvariants::from_characteristic(PuiseuxCharacteristic c) {
    c.validate();
    CurveInvariants inv;
    inv.pairs = characteristic_to_pairs(c);
    inv.semigroup = semigroup_from_characteristic(c);
    inv.gcd_chain = c.gcd_chain();
    inv.characteristic = std::move(c);
    return inv;
}

CurveInvariants CurveInvariants::from_semigroup(SemigroupGenerators s) {
    s.validate();
    if (s.smooth()) {
        CurveInvariants inv;
        inv.semigroup = std::move(s);
        inv.gcd_chain = {Int(1)};
        return inv;
    }
    CurveInvariants inv = from_characteristic(characteristic_from_semigroup(s));
    inv.semigroup = std::move(s);  // identical by round trip; keep the given value
    return inv;
}

CurveInvariants CurveInvariants::from_generators(std::vector<Int> gens) {
    return from_semigroup(canonicalize_generators(std::move(gens)));
}

CurveInvariants CurveInvariants::from_pairs(PairList pairs) {
    validate_pair_list(pairs);
    if (pairs.empty()) {
        CurveInvariants inv;
        inv.semigroup = SemigroupGenerators{{Int(1)}};
        inv.gcd_chain = {Int(1)};
        return inv;
    }
    CurveInvariants inv = from_characteristic(pairs_to_characteristic(pairs));
    inv.pairs = std::move(pairs);
    return inv;
}

}  // namespace jumpnum
