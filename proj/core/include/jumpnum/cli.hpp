#pragma once

#include <jumpnum/invariants.hpp>
#include <jumpnum/jumping.hpp>

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace jumpnum::cli {

enum class Encoding { Pairs, Semigroup, Characteristic };
enum class OutputFormat { Text, Json, Dot };

std::string_view encoding_name(Encoding encoding);

/// One input in one of the three text grammars:
///   pairs           "p1,q1;p2,q2;..."   ("" is the smooth germ)
///   semigroup       "g1,g2,..."         (any generating set)
///   characteristic  "m;b1,b2,..."
struct InputSpec {
    Encoding encoding = Encoding::Pairs;
    std::string text;
};

// Grammar: comma separates integers, semicolon separates pairs and the
// multiplicity.  Parse errors carry the byte offset of the offender.
std::vector<Int> parse_int_list(std::string_view text);
PairList parse_pairs(std::string_view text);
PuiseuxCharacteristic parse_characteristic(std::string_view text);

std::string format_int_list(const std::vector<Int>& values);
std::string format_pairs(const PairList& pairs);
std::string format_characteristic(const PuiseuxCharacteristic& c);

/// Parses and validates an input into the three consistent encodings.
CurveInvariants resolve_input(const InputSpec& input);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;         // validation or parse failure
inline constexpr int kExitVerification = 3;  // formula/oracle mismatch or failed selftest

struct JumpOptions {
    InputSpec input;
    OutputFormat format = OutputFormat::Text;
    bool contributors = false;
    bool verify = false;
};

/// Prints the jumping numbers < 1, one "num/den" per line in text mode or
/// a single JSON object.  Nothing is written to `out` on failure.
int cmd_jump(const JumpOptions& options, std::ostream& out, std::ostream& err);

struct ConvertOptions {
    InputSpec input;
    Encoding target = Encoding::Pairs;
};

/// Re-encodes the input; the output line parses back under the same grammar.
int cmd_convert(const ConvertOptions& options, std::ostream& out, std::ostream& err);

struct TreeOptions {
    InputSpec input;
    OutputFormat format = OutputFormat::Text;
};

/// Renders the Enriques diagram: weights, edge kinds, proximity, relevant
/// positions and the e/w/k vectors in text mode, a digraph in dot mode.
int cmd_tree(const TreeOptions& options, std::ostream& out, std::ostream& err);

struct SelftestOptions {
    int rset_max_q = 50;
    int rset_max_m = 4;
    int howald_max_q = 30;
    int exhaustive_max_g = 2;
    int exhaustive_max_p = 5;
    int exhaustive_max_q = 13;
    int random_samples = 100;
    int random_max_g = 3;
    int random_max_p = 5;
    int random_max_q = 17;
    int roundtrip_samples = 1000;
    int roundtrip_max_g = 4;
    int roundtrip_max_value = 200;
    int canonicalize_samples = 200;
    std::uint64_t seed = 1;
    bool corrupt_rset = false;  // test fixture: sabotage one R-set to exercise the failure path
};

/// Runs the whole invariant grid (R-set dual definitions, Howald agreement,
/// formula vs oracle, coefficient closed forms, term-ideal prefix, encoding
/// round trips, canonical-generator invariance) and prints a summary table.
int cmd_selftest(const SelftestOptions& options, std::ostream& out, std::ostream& err);

}  // namespace jumpnum::cli
