// rekit command-line interface.

#include "rekit/automaton_io.hpp"
#include "rekit/build.hpp"
#include "rekit/error.hpp"
#include "rekit/harness.hpp"
#include "rekit/oracle.hpp"
#include "rekit/reduce_nfa.hpp"
#include "rekit/regen.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace rekit;

const std::map<std::string, Construction> kMethods{
    {"pos", Construction::Pos}, {"psnf", Construction::Psnf}, {"follow", Construction::Follow}, {"pd", Construction::Pd}};

Nfa buildAutomaton(const Regex &r, Construction c) {
    switch (c) {
    case Construction::Pos: return positionAutomaton(r);
    case Construction::Psnf: return positionAutomatonSnf(r);
    case Construction::Follow: return followAutomaton(r);
    case Construction::Pd: return pdAutomaton(r);
    }
    throw Error("unknown method");
}

std::uint64_t defaultSeed() {
    if (const char *env = std::getenv("REKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error &) {
            throw Error("REKIT_SEED is not an unsigned integer");
        }
    }
    return 0;
}

// Writes to `path`, or stdout when it is empty.
template <typename F> void withOutput(const std::string &path, F &&write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    write(out);
    if (!out)
        throw Error("failed writing " + path);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Regular expression to NFA conversions, reductions and experiments"};
    app.require_subcommand(1);
    int status = 0;

    const std::uint64_t envSeed = [] {
        try {
            return defaultSeed();
        } catch (const Error &e) {
            std::cerr << "error: " << e.what() << '\n';
            std::exit(2);
        }
    }();

    // gen
    auto *gen = app.add_subcommand("gen", "Sample uniform random regular expressions");
    std::size_t genSize = 0, genK = 0, genCount = 0;
    std::uint64_t genSeed = envSeed;
    std::string genOut;
    gen->add_option("--size", genSize, "Ordinary length")->required();
    gen->add_option("--alphabet", genK, "Alphabet size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--count", genCount, "Number of expressions")->required();
    gen->add_option("--seed", genSeed, "Random seed (default: REKIT_SEED or 0)");
    gen->add_option("--out", genOut, "Output file (default: stdout)");
    gen->callback([&] {
        const auto records = emitDataset(genK, genSize, genCount, genSeed);
        withOutput(genOut, [&](std::ostream &out) { writeDataset(out, records, genSeed); });
    });

    // convert
    auto *convert = app.add_subcommand("convert", "Build an automaton from an expression");
    std::string convMethod, convRe, convFormat = "json";
    convert->add_option("--method", convMethod)->required()->check(CLI::IsMember({"pos", "psnf", "follow", "pd"}));
    convert->add_option("--re", convRe)->required();
    convert->add_option("--format", convFormat)->check(CLI::IsMember({"json", "dot"}));
    convert->callback([&] {
        const Nfa a = buildAutomaton(parse(convRe), kMethods.at(convMethod));
        if (convFormat == "dot")
            std::cout << toDot(a);
        else
            std::cout << toJson(a).dump() << '\n';
    });

    // reduce
    auto *reduce = app.add_subcommand("reduce", "Reduce an automaton by an invariant equivalence");
    std::string redEquiv, redIn;
    reduce->add_option("--equiv", redEquiv)->required()->check(CLI::IsMember({"r", "l", "lr"}));
    reduce->add_option("--in", redIn, "Automaton JSON file")->required()->check(CLI::ExistingFile);
    reduce->callback([&] {
        std::ifstream in(redIn);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw Error(std::string("invalid JSON: ") + e.what());
        }
        const Nfa a = nfaFromJson(doc);
        const Nfa out = redEquiv == "r" ? rEquiv(a) : redEquiv == "l" ? lEquiv(a) : lrEquiv(a);
        std::cout << toJson(out).dump() << '\n';
    });

    // measure
    auto *measure = app.add_subcommand("measure", "Print the measures of an expression as JSON");
    std::string measRe;
    measure->add_option("--re", measRe)->required();
    measure->callback([&] {
        const Regex r = parse(measRe);
        const Measures m = measures(r);
        const Dfa d = minimize(determinize(positionAutomaton(r)));
        nlohmann::ordered_json j;
        j["size"] = m.size;
        j["alph"] = m.alph;
        j["rpn"] = m.rpn;
        j["nullable"] = r.nullable();
        j["snf"] = isSnf(r);
        j["reduced"] = isReduced(r);
        j["snfr"] = isReduced(toSnf(r));
        j["sc"] = d.numStates();
        j["tc"] = d.numTransitions();
        std::cout << j.dump() << '\n';
    });

    // experiment
    auto *experiment = app.add_subcommand("experiment", "Run every construction on random samples");
    ExperimentConfig cfg;
    cfg.seed = envSeed;
    std::string expCsv, expRecords;
    bool oracleAll = false;
    experiment->add_option("--sizes", cfg.sizes, "Comma-separated sizes")->required()->delimiter(',');
    experiment->add_option("--alphabet", cfg.k)->required()->check(CLI::PositiveNumber);
    experiment->add_option("--samples", cfg.samples)->required()->check(CLI::PositiveNumber);
    experiment->add_option("--seed", cfg.seed);
    experiment->add_option("--csv", expCsv, "Statistics CSV (default: stdout)");
    experiment->add_option("--oracle-len", cfg.oracleLength)->check(CLI::Range(0, 9));
    experiment->add_option("--oracle-fraction", cfg.oracleFraction)->check(CLI::Range(0.0, 1.0));
    experiment->add_flag("--oracle-all", oracleAll, "Check every record with the oracle");
    experiment->add_option("--records", expRecords, "Per-expression CSV");
    experiment->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    experiment->callback([&] {
        if (oracleAll)
            cfg.oracleFraction = 1.0;
        const ExperimentResult result = runExperiment(cfg);
        withOutput(expCsv, [&](std::ostream &out) { writeStatsCsv(out, result.stats); });
        if (!expRecords.empty())
            withOutput(expRecords, [&](std::ostream &out) {
                for (std::size_t i = 0; i < result.records.size(); ++i) {
                    std::ostringstream part;
                    writeRecordsCsv(part, result.records[i]);
                    std::string text = part.str();
                    if (i > 0)
                        text.erase(0, text.find('\n') + 1);
                    out << text;
                }
            });
        for (const SampleStats &s : result.stats)
            if (s.at("oracle_failures") > 0 || s.at("qpos_violations") > 0) {
                std::cerr << "error: size " << s.size << " has oracle or structural failures\n";
                status = 1;
            }
    });

    // oracle
    auto *oracle = app.add_subcommand("oracle", "Compare an automaton with its expression on short words");
    std::string orRe, orMethod = "pd";
    std::size_t orLen = 6;
    oracle->add_option("--re", orRe)->required();
    oracle->add_option("--method", orMethod)->check(CLI::IsMember({"pos", "psnf", "follow", "pd"}));
    oracle->add_option("--max-len", orLen)->check(CLI::Range(0, 9));
    oracle->callback([&] {
        const Regex r = parse(orRe);
        const bool ok = equivalentUpTo(r, buildAutomaton(r, kMethods.at(orMethod)), orLen);
        std::cout << (ok ? "PASS" : "FAIL") << '\n';
        status = ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
