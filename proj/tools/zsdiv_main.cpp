// Command-line front end: zero-sum subsequence counting over finite abelian
// groups and principal-ideal-divisor arithmetic in quadratic fields.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zsdiv/commands.hpp"
#include "zsdiv/verify.hpp"
#include "zsdiv/zerosum.hpp"

namespace {

struct GlobalFlags {
    bool json = false;
    std::int64_t max_states = zsdiv::default_max_states;
};

int emit(const zsdiv::CommandResult& result, const GlobalFlags& flags) {
    if (flags.json) {
        std::cout << zsdiv::to_json_text(result) << "\n";
    } else {
        std::cout << zsdiv::to_human_text(result);
    }
    return zsdiv::exit_code(result.status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zsdiv: zero-sum subsequences over class groups and principal ideal divisors"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "emit a single JSON object {status, command, payload, diagnostics}");
    app.add_option("--max-states", flags.max_states,
                   "cap on enumerated selector states (default 2^20)");

    int rc = 0;
    auto run = [&](const zsdiv::CommandResult& r) { rc = emit(r, flags); };

    // davenport <group>
    std::string dav_group;
    auto* dav = app.add_subcommand("davenport", "Davenport constant of a group, e.g. Z6 or Z2xZ2");
    dav->add_option("group", dav_group, "group spec")->required();
    dav->callback([&] { run(zsdiv::cmd_davenport(dav_group)); });

    // zerosum count|list
    auto* zerosum = app.add_subcommand("zerosum", "zero-sum subsequence counting and enumeration");
    zerosum->require_subcommand(1);
    std::string zs_group, zs_seq, zs_method = "ring";
    bool zs_maximal = false;

    auto* count = zerosum->add_subcommand("count", "count zero-sum subsequences n(S)");
    count->add_option("group", zs_group, "group spec")->required();
    count->add_option("sequence", zs_seq, "sequence literal, e.g. \"1^1,3^1,2^2\"")->required();
    count->add_option("--method", zs_method, "char|ring|brute|all (default ring)");
    count->callback([&] {
        run(zsdiv::cmd_zerosum_count(zs_group, zs_seq, zs_method, {flags.max_states}));
    });

    auto* list = zerosum->add_subcommand("list", "list zero-sum selectors in lexicographic order");
    list->add_option("group", zs_group, "group spec")->required();
    list->add_option("sequence", zs_seq, "sequence literal")->required();
    list->add_flag("--maximal", zs_maximal, "only selectors not dominated by another zero-sum selector");
    list->callback([&] {
        run(zsdiv::cmd_zerosum_list(zs_group, zs_seq, zs_maximal, {flags.max_states}));
    });

    // quad factor|divisors|decompose|classgroup|irreducible
    auto* quad = app.add_subcommand("quad", "quadratic field Q(sqrt d) arithmetic");
    quad->require_subcommand(1);
    std::int64_t d = 0;
    std::string elem, alpha, beta;

    auto add_d = [&](CLI::App* cmd) { cmd->add_option("--d", d, "squarefree d")->required(); };

    auto* factor = quad->add_subcommand("factor", "prime ideal factorization with classes");
    add_d(factor);
    factor->add_option("--elem", elem, "element, e.g. \"3+1*sqrt\" or \"18\"")->required();
    factor->callback([&] { run(zsdiv::cmd_quad_factor(d, elem)); });

    auto* divisors = quad->add_subcommand("divisors", "count and list principal ideal divisors");
    add_d(divisors);
    divisors->add_option("--elem", elem, "element")->required();
    divisors->callback([&] { run(zsdiv::cmd_quad_divisors(d, elem, {flags.max_states})); });

    auto* decompose = quad->add_subcommand("decompose",
                                           "maximal decompositions of (alpha, beta)");
    add_d(decompose);
    decompose->add_option("--alpha", alpha, "first generator")->required();
    decompose->add_option("--beta", beta, "second generator")->required();
    decompose->callback([&] { run(zsdiv::cmd_quad_decompose(d, alpha, beta, {flags.max_states})); });

    auto* classgroup = quad->add_subcommand("classgroup", "invariant factors and generator primes");
    add_d(classgroup);
    classgroup->callback([&] { run(zsdiv::cmd_quad_classgroup(d)); });

    auto* irreducible = quad->add_subcommand("irreducible", "n(alpha) = 2 irreducibility verdict");
    add_d(irreducible);
    irreducible->add_option("--elem", elem, "element")->required();
    irreducible->callback([&] { run(zsdiv::cmd_quad_irreducible(d, elem)); });

    // verify
    auto* verify = app.add_subcommand("verify", "run the embedded cross-check suites");
    std::string scope = "all";
    std::uint64_t seed = zsdiv::verify_default_seed;
    verify->add_option("--scope", scope, "group|zerosum|paper|all (default all)");
    verify->add_option("--seed", seed,
                       "seed for the randomized suite (default " +
                           std::to_string(zsdiv::verify_default_seed) + ")");
    verify->callback([&] { run(zsdiv::cmd_verify(scope, seed)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        zsdiv::CommandResult bad;
        bad.status = zsdiv::Status::validation;
        bad.command = "parse";
        bad.diagnostics.push_back(e.what());
        return emit(bad, flags);
    }
    return rc;
}
