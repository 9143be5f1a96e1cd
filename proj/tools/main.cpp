#include <jumpnum/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using jumpnum::cli::Encoding;
using jumpnum::cli::InputSpec;
using jumpnum::cli::OutputFormat;

struct InputFlags {
    std::string pairs;
    std::string semigroup;
    std::string characteristic;
    CLI::Option* pairs_opt = nullptr;
    CLI::Option* semigroup_opt = nullptr;
    CLI::Option* char_opt = nullptr;

    void add_to(CLI::App* cmd) {
        pairs_opt = cmd->add_option("--pairs", pairs, "pair list \"p1,q1;p2,q2;...\"");
        semigroup_opt =
            cmd->add_option("--semigroup", semigroup, "semigroup generators \"g1,g2,...\"");
        char_opt = cmd->add_option("--char", characteristic,
                                   "Puiseux characteristic \"m;b1,b2,...\"");
        pairs_opt->excludes(semigroup_opt)->excludes(char_opt);
        semigroup_opt->excludes(char_opt);
    }

    InputSpec spec(std::ostream& err, bool& ok) const {
        const int given = (pairs_opt->count() ? 1 : 0) + (semigroup_opt->count() ? 1 : 0) +
                          (char_opt->count() ? 1 : 0);
        if (given != 1) {
            err << "error: exactly one of --pairs, --semigroup, --char is required\n";
            ok = false;
            return {};
        }
        ok = true;
        if (pairs_opt->count()) return {Encoding::Pairs, pairs};
        if (semigroup_opt->count()) return {Encoding::Semigroup, semigroup};
        return {Encoding::Characteristic, characteristic};
    }
};

const std::map<std::string, OutputFormat> kJumpFormats{{"text", OutputFormat::Text},
                                                       {"json", OutputFormat::Json}};
const std::map<std::string, OutputFormat> kTreeFormats{{"text", OutputFormat::Text},
                                                       {"dot", OutputFormat::Dot}};
const std::map<std::string, Encoding> kEncodings{{"pairs", Encoding::Pairs},
                                                 {"semigroup", Encoding::Semigroup},
                                                 {"char", Encoding::Characteristic},
                                                 {"characteristic", Encoding::Characteristic}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jumping numbers of plane curve branch singularities"};
    app.require_subcommand(1);

    auto* jump = app.add_subcommand("jump", "compute the jumping numbers < 1");
    InputFlags jump_input;
    jump_input.add_to(jump);
    jumpnum::cli::JumpOptions jump_options;
    jump->add_option("--format", jump_options.format, "output format")
        ->transform(CLI::CheckedTransformer(kJumpFormats, CLI::ignore_case))
        ->default_str("text");
    jump->add_flag("--contributors", jump_options.contributors,
                   "append the contributing relevant vertices to each line");
    jump->add_flag("--verify", jump_options.verify,
                   "cross-check the formula against the resolution oracle first");

    auto* convert = app.add_subcommand("convert", "convert between the three encodings");
    InputFlags convert_input;
    convert_input.add_to(convert);
    jumpnum::cli::ConvertOptions convert_options;
    convert->add_option("--to", convert_options.target, "target encoding")
        ->transform(CLI::CheckedTransformer(kEncodings, CLI::ignore_case))
        ->required();

    auto* tree = app.add_subcommand("tree", "print the Enriques diagram");
    InputFlags tree_input;
    tree_input.add_to(tree);
    jumpnum::cli::TreeOptions tree_options;
    tree->add_option("--format", tree_options.format, "output format")
        ->transform(CLI::CheckedTransformer(kTreeFormats, CLI::ignore_case))
        ->default_str("text");

    auto* selftest = app.add_subcommand("selftest", "run the verification grid");
    jumpnum::cli::SelftestOptions selftest_options;
    selftest->add_option("--max-q", selftest_options.random_max_q,
                         "largest q in randomized pair lists");
    selftest->add_option("--max-g", selftest_options.random_max_g,
                         "largest number of pairs in randomized pair lists");
    selftest->add_option("--seeds", selftest_options.random_samples,
                         "number of randomized pair lists");
    selftest->add_option("--seed", selftest_options.seed, "random seed");
    selftest->add_option("--rset-max-q", selftest_options.rset_max_q,
                         "largest q in the R-set grid");
    selftest->add_option("--howald-max-q", selftest_options.howald_max_q,
                         "largest q in the single-pair grid");
    selftest->add_option("--roundtrips", selftest_options.roundtrip_samples,
                         "number of encoding round-trip samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return jumpnum::cli::kExitUsage;
    }

    bool ok = true;
    if (jump->parsed()) {
        jump_options.input = jump_input.spec(std::cerr, ok);
        if (!ok) return jumpnum::cli::kExitUsage;
        return jumpnum::cli::cmd_jump(jump_options, std::cout, std::cerr);
    }
    if (convert->parsed()) {
        convert_options.input = convert_input.spec(std::cerr, ok);
        if (!ok) return jumpnum::cli::kExitUsage;
        return jumpnum::cli::cmd_convert(convert_options, std::cout, std::cerr);
    }
    if (tree->parsed()) {
        tree_options.input = tree_input.spec(std::cerr, ok);
        if (!ok) return jumpnum::cli::kExitUsage;
        return jumpnum::cli::cmd_tree(tree_options, std::cout, std::cerr);
    }
    return jumpnum::cli::cmd_selftest(selftest_options, std::cout, std::cerr);
}
