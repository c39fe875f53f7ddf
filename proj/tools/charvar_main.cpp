#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "charvar/cache.hpp"
#include "charvar/gensets.hpp"
#include "charvar/nilquot.hpp"
#include "charvar/verify.hpp"

namespace {

using namespace charvar;

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

struct GensOptions {
    std::string group = "sl";
    int n = 2;
    int rank = 1;
    std::string prune;
    std::string format = "text";
    std::string out;
    bool no_cache = false;
    bool ordered_q = false;
    bool lifted = false;
};

int run_gens(const GensOptions& o) {
    if (o.n < 2 || o.rank < 1) {
        std::cerr << "need --n >= 2 and --rank >= 1\n";
        return 2;
    }
    Prune prune = Prune::none;
    if (o.prune == "sl2-identities") {
        if (o.n != 2) {
            std::cerr << "--prune sl2-identities applies to n = 2 only\n";
            return 2;
        }
        prune = Prune::sl2_identities;
    } else if (!o.prune.empty()) {
        std::cerr << "unknown prune: " << o.prune << "\n";
        return 2;
    }

    QuotientCache cache = o.no_cache ? QuotientCache() : QuotientCache(QuotientCache::default_dir());

    GeneratorSet gs;
    if (o.group == "sl") {
        gs = o.lifted ? sln_generators_lifted(o.n, o.rank, cache, prune)
                      : sln_generators(o.n, o.rank, cache, prune);
    } else if (o.group == "gl") {
        gs = gln_generators(o.n, o.rank, cache, prune);
    } else if (o.group == "sp") {
        if (o.n % 2) {
            std::cerr << "sp needs even n\n";
            return 2;
        }
        gs = sp_generators(o.n, o.rank, cache);
    } else if (o.group == "o") {
        gs = so_generators(Group::o, o.n, o.rank, cache, prune);
    } else if (o.group == "so") {
        Group g = o.n % 2 ? Group::so_odd : Group::so_even;
        gs = so_generators(g, o.n, o.rank, cache, prune, o.ordered_q);
    } else {
        std::cerr << "unknown group: " << o.group << "\n";
        return 2;
    }

    std::string text =
        o.format == "json" ? to_json(gs).dump(2) + "\n" : to_text(gs);
    return write_output(text, o.out);
}

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 1;
    int trials = 50;
    std::string format = "text";
};

int run_verify(const VerifyOptions& o) {
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = suite_names();
    } else {
        std::vector<std::string> known = suite_names();
        known.push_back("nagata_higman_n3");
        if (std::find(known.begin(), known.end(), o.suite) == known.end()) {
            std::cerr << "unknown suite: " << o.suite << "\n";
            return 2;
        }
        names.push_back(o.suite);
    }

    bool all_ok = true;
    nlohmann::ordered_json agg = nlohmann::ordered_json::array();
    for (const std::string& name : names) {
        SuiteReport r = run_suite(name, o.trials, o.seed);
        all_ok = all_ok && r.all_pass();
        if (o.format == "json")
            agg.push_back(to_json(r));
        else
            std::cout << to_text(r);
    }
    if (o.format == "json") {
        if (agg.size() == 1)
            std::cout << agg.front().dump(2) << "\n";
        else
            std::cout << agg.dump(2) << "\n";
    }
    return all_ok ? 0 : 1;
}

struct NilquotOptions {
    int n = 2;
    int degree = 1;
    int letters = 1;
    bool stars = false;
    std::string mode = "plain";
    std::string print = "basis";
    bool no_cache = false;
};

int run_nilquot(const NilquotOptions& o) {
    if (o.n < 1 || o.degree < 1 || o.letters < 1) {
        std::cerr << "need --n >= 1, --degree >= 1, --letters >= 1\n";
        return 2;
    }
    IdealMode mode;
    if (o.mode == "plain") {
        mode = IdealMode::plain;
    } else if (o.mode == "symmetric") {
        if (o.n % 2) {
            std::cerr << "symmetric mode needs even n\n";
            return 2;
        }
        mode = IdealMode::symmetric;
    } else {
        std::cerr << "unknown mode: " << o.mode << "\n";
        return 2;
    }
    QuotientCache cache = o.no_cache ? QuotientCache() : QuotientCache(QuotientCache::default_dir());
    const std::vector<Word>& words = cache.get(o.n, Alphabet{o.letters, o.stars, 0}, o.degree, mode);
    if (o.print == "dimension") {
        std::cout << words.size() << "\n";
    } else if (o.print == "basis") {
        for (const Word& w : words) std::cout << w.render() << "\n";
    } else {
        std::cerr << "unknown print mode: " << o.print << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating sets and identity checks for character varieties of free groups"};
    app.require_subcommand(1);

    GensOptions gens;
    CLI::App* cmd_gens = app.add_subcommand("gens", "emit a generating set");
    cmd_gens->add_option("--group", gens.group, "sl | gl | sp | o | so")->required();
    cmd_gens->add_option("--n", gens.n, "matrix size")->required();
    cmd_gens->add_option("--rank", gens.rank, "free-group rank")->required();
    cmd_gens->add_option("--prune", gens.prune, "sl2-identities");
    cmd_gens->add_option("--format", gens.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_gens->add_option("--out", gens.out, "output file (default stdout)");
    cmd_gens->add_flag("--no-cache", gens.no_cache, "skip the on-disk quotient cache");
    cmd_gens->add_flag("--ordered-q", gens.ordered_q, "emit ordered Q tuples instead of multisets");
    cmd_gens->add_flag("--lifted", gens.lifted, "assemble sl sets from the lifted quotient basis");

    VerifyOptions ver;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", ver.suite, "suite name or 'all'");
    cmd_verify->add_option("--seed", ver.seed, "deterministic seed");
    cmd_verify->add_option("--trials", ver.trials, "random trials per case");
    cmd_verify->add_option("--format", ver.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    NilquotOptions nq;
    CLI::App* cmd_nilquot = app.add_subcommand("nilquot", "quotient bases of the power ideals");
    cmd_nilquot->add_option("--n", nq.n, "matrix size")->required();
    cmd_nilquot->add_option("--degree", nq.degree, "homogeneous degree")->required();
    cmd_nilquot->add_option("--letters", nq.letters, "alphabet size")->required();
    cmd_nilquot->add_flag("--stars", nq.stars, "alphabet with involution");
    cmd_nilquot->add_option("--mode", nq.mode, "plain | symmetric");
    cmd_nilquot->add_option("--print", nq.print, "basis | dimension");
    cmd_nilquot->add_flag("--no-cache", nq.no_cache, "skip the on-disk quotient cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_gens->parsed()) return run_gens(gens);
        if (cmd_verify->parsed()) return run_verify(ver);
        if (cmd_nilquot->parsed()) return run_nilquot(nq);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
