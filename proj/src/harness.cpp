#include "rekit/harness.hpp"

#include "rekit/automata.hpp"
#include "rekit/build.hpp"
#include "rekit/error.hpp"
#include "rekit/oracle.hpp"
#include "rekit/reduce_nfa.hpp"
#include "rekit/regen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace rekit {

std::string_view constructionName(Construction c) {
    switch (c) {
    case Construction::Pos: return "pos";
    case Construction::Psnf: return "psnf";
    case Construction::Follow: return "f";
    case Construction::Pd: return "pd";
    }
    return "?";
}

std::string_view reductionName(Reduction r) {
    switch (r) {
    case Reduction::None: return "none";
    case Reduction::Right: return "r";
    case Reduction::Left: return "l";
    case Reduction::LeftRight: return "lr";
    }
    return "?";
}

namespace {

NfaMeasures measureNfa(const Nfa &a) {
    return {a.numStates(), a.numTransitions(), isDeterministic(a), isHomogeneous(a)};
}

Nfa construct(const Regex &r, Construction c) {
    switch (c) {
    case Construction::Pos: return positionAutomaton(r);
    case Construction::Psnf: return positionAutomatonSnf(r);
    case Construction::Follow: return followAutomaton(r);
    case Construction::Pd: return pdAutomaton(r);
    }
    throw Error("unknown construction");
}

} // namespace

ReRecord analyze(const Regex &r, std::size_t index, std::optional<std::size_t> oracleLength) {
    ReRecord rec;
    rec.index = index;
    rec.text = render(r);
    const Measures m = measures(r);
    rec.size = m.size;
    rec.alph = m.alph;
    rec.rpn = m.rpn;
    rec.snf = isSnf(r);
    rec.reduced = isReduced(r);
    rec.snfr = isReduced(toSnf(r));

    std::optional<BoundedLanguage> reference;
    if (oracleLength) {
        rec.oracleChecked = true;
        reference = enumerateRe(r, *oracleLength);
    }
    for (Construction c : kConstructions) {
        const Nfa a = construct(r, c);
        if (c == Construction::Pos) {
            const Dfa minimal = minimize(determinize(a));
            rec.sc = minimal.numStates();
            rec.tc = minimal.numTransitions();
            if (reference && enumerateNfa(minimal.toNfa(), *oracleLength) != *reference)
                rec.oracleAgrees = false;
        }
        if (reference && enumerateNfa(a, *oracleLength) != *reference)
            rec.oracleAgrees = false;
        auto &row = rec.nfa[static_cast<std::size_t>(c)];
        row[static_cast<std::size_t>(Reduction::None)] = measureNfa(a);
        row[static_cast<std::size_t>(Reduction::Right)] = measureNfa(rEquiv(a));
        const Nfa left = lEquiv(a);
        row[static_cast<std::size_t>(Reduction::Left)] = measureNfa(left);
        row[static_cast<std::size_t>(Reduction::LeftRight)] = measureNfa(rEquiv(left));
    }
    return rec;
}

ColumnSummary summarize(std::span<const double> values) {
    if (values.empty())
        throw Error("cannot summarize an empty column");
    double sum = 0;
    for (double v : values)
        sum += v;
    const double avg = sum / static_cast<double>(values.size());
    double sq = 0;
    for (double v : values)
        sq += (v - avg) * (v - avg);
    return {avg, std::sqrt(sq / static_cast<double>(values.size()))};
}

double percentage(std::span<const char> flags) {
    if (flags.empty())
        throw Error("cannot take the percentage of an empty column");
    const auto hits = std::count_if(flags.begin(), flags.end(), [](char f) { return f != 0; });
    return 100.0 * static_cast<double>(hits) / static_cast<double>(flags.size());
}

double SampleStats::at(std::string_view column) const {
    for (const auto &[name, value] : columns)
        if (name == column)
            return value;
    throw Error("unknown statistics column " + std::string(column));
}

namespace {

class Aggregator {
public:
    explicit Aggregator(std::span<const ReRecord> records) : records_(records) {}

    void numeric(const std::string &name, const std::function<double(const ReRecord &)> &get, bool withStd) {
        std::vector<double> v;
        v.reserve(records_.size());
        for (const ReRecord &r : records_)
            v.push_back(get(r));
        const ColumnSummary s = summarize(v);
        out.emplace_back(name + "_avg", s.avg);
        if (withStd)
            out.emplace_back(name + "_std", s.std);
    }

    void flag(const std::string &name, const std::function<bool(const ReRecord &)> &get) {
        std::vector<char> v;
        v.reserve(records_.size());
        for (const ReRecord &r : records_)
            v.push_back(get(r));
        out.emplace_back(name + "_pct", percentage(v));
    }

    // Mean of per-record values over the records where `get` yields one;
    // NaN when none does.
    void mean(const std::string &name, const std::function<std::optional<double>(const ReRecord &)> &get) {
        std::vector<double> v;
        for (const ReRecord &r : records_)
            if (auto x = get(r))
                v.push_back(*x);
        out.emplace_back(name, v.empty() ? std::numeric_limits<double>::quiet_NaN() : summarize(v).avg);
    }

    void count(const std::string &name, const std::function<bool(const ReRecord &)> &pred) {
        out.emplace_back(name, static_cast<double>(std::count_if(records_.begin(), records_.end(), pred)));
    }

    std::vector<std::pair<std::string, double>> out;

private:
    std::span<const ReRecord> records_;
};

std::optional<double> ratio(double num, double den) {
    if (den == 0)
        return std::nullopt;
    return num / den;
}

std::string prefixOf(Construction c, Reduction r) {
    std::string p(constructionName(c));
    if (r != Reduction::None)
        p += "_" + std::string(reductionName(r));
    return p;
}

bool reducedSnf(const ReRecord &r) { return r.reduced && r.snf; }

} // namespace

SampleStats statsAggregate(std::span<const ReRecord> records, std::size_t size, std::size_t k) {
    if (records.empty())
        throw Error("cannot aggregate an empty sample");
    Aggregator g(records);
    g.numeric("size", [](const ReRecord &r) { return static_cast<double>(r.size); }, false);
    g.numeric("alph", [](const ReRecord &r) { return static_cast<double>(r.alph); }, true);
    g.numeric("rpn", [](const ReRecord &r) { return static_cast<double>(r.rpn); }, true);
    g.mean("rpn_alph", [](const ReRecord &r) { return ratio(double(r.rpn), double(r.alph)); });
    g.flag("snf", [](const ReRecord &r) { return r.snf; });
    g.flag("snfr", [](const ReRecord &r) { return r.snfr; });
    g.flag("reduced", [](const ReRecord &r) { return r.reduced; });
    g.flag("rsnf", reducedSnf);
    g.numeric("sc", [](const ReRecord &r) { return static_cast<double>(r.sc); }, true);
    g.numeric("tc", [](const ReRecord &r) { return static_cast<double>(r.tc); }, true);
    g.mean("sc_alph", [](const ReRecord &r) { return ratio(double(r.sc), double(r.alph)); });
    g.mean("tc_alph", [](const ReRecord &r) { return ratio(double(r.tc), double(r.alph)); });

    for (Construction c : kConstructions)
        for (Reduction red : kReductions) {
            const std::string p = prefixOf(c, red);
            auto m = [c, red](const ReRecord &r) -> const NfaMeasures & { return r.at(c, red); };
            g.numeric(p + "_q", [m](const ReRecord &r) { return double(m(r).states); }, false);
            g.numeric(p + "_d", [m](const ReRecord &r) { return double(m(r).transitions); }, false);
            g.flag(p + "_det", [m](const ReRecord &r) { return m(r).deterministic; });
            g.flag(p + "_hom", [m](const ReRecord &r) { return m(r).homogeneous; });
            if (red != Reduction::None)
                g.mean(p + "_decrease_pct", [c, m](const ReRecord &r) {
                    const double before = double(r.at(c, Reduction::None).size());
                    return ratio(100.0 * (before - double(m(r).size())), before);
                });
        }

    using C = Construction;
    using R = Reduction;
    auto q = [](const ReRecord &r, C c) { return double(r.at(c, R::None).states); };
    auto d = [](const ReRecord &r, C c) { return double(r.at(c, R::None).transitions); };
    auto alph1 = [](const ReRecord &r) { return double(r.alph + 1); };
    g.mean("dpos_alph1", [&](const ReRecord &r) { return ratio(d(r, C::Pos), alph1(r)); });
    g.mean("qf_alph1", [&](const ReRecord &r) { return ratio(q(r, C::Follow), alph1(r)); });
    g.mean("df_alph1", [&](const ReRecord &r) { return ratio(d(r, C::Follow), alph1(r)); });
    g.mean("qpd_alph1", [&](const ReRecord &r) { return ratio(q(r, C::Pd), alph1(r)); });
    g.mean("dpd_alph1", [&](const ReRecord &r) { return ratio(d(r, C::Pd), alph1(r)); });
    g.mean("dpd_dpos", [&](const ReRecord &r) { return ratio(d(r, C::Pd), d(r, C::Pos)); });
    g.mean("qpd_qf", [&](const ReRecord &r) { return ratio(q(r, C::Pd), q(r, C::Follow)); });
    g.mean("dpd_df", [&](const ReRecord &r) { return ratio(d(r, C::Pd), d(r, C::Follow)); });

    g.mean("pd_lr_decrease_rsnf_pct", [](const ReRecord &r) -> std::optional<double> {
        if (!reducedSnf(r))
            return std::nullopt;
        const double before = double(r.at(C::Pd, R::None).size());
        return ratio(100.0 * (before - double(r.at(C::Pd, R::LeftRight).size())), before);
    });
    g.count("qpos_violations", [](const ReRecord &r) { return r.at(C::Pos, R::None).states != r.alph + 1; });
    g.count("pd_gt_f_rsnf", [](const ReRecord &r) {
        return reducedSnf(r) && r.at(C::Pd, R::None).size() > r.at(C::Follow, R::None).size();
    });
    g.count("oracle_checked", [](const ReRecord &r) { return r.oracleChecked; });
    g.count("oracle_failures", [](const ReRecord &r) { return !r.oracleAgrees; });

    return {size, k, records.size(), std::move(g.out)};
}

std::vector<std::string> experimentSamples(std::size_t size, std::size_t k, std::size_t samples, std::uint64_t seed) {
    const CountTable table(reGrammar(k), size);
    if (table.count(size) == 0)
        throwEmptyLanguage(size);
    std::vector<std::string> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = rngStream(seed, (static_cast<std::uint64_t>(size) << 32) | i);
        out.push_back(renderSentence(table.grammar(), sampleUniform(table, size, rng)));
    }
    return out;
}

ExperimentResult runExperiment(const ExperimentConfig &config) {
    if (config.oracleLength > BoundedLanguage::kMaxLength)
        throw Error("oracle length must be at most 9");
    const Alphabet alphabet = standardAlphabet(config.k);
    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());

    ExperimentResult result;
    for (std::size_t size : config.sizes) {
        const auto texts = experimentSamples(size, config.k, config.samples, config.seed);
        std::vector<ReRecord> records(texts.size());
        // Every `1/fraction`-th record is oracle-checked.
        auto checked = [&config](std::size_t i) {
            const double f = std::clamp(config.oracleFraction, 0.0, 1.0);
            return std::floor(double(i + 1) * f) > std::floor(double(i) * f);
        };
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failureLock;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < texts.size();) {
                try {
                    const Regex r = parse(texts[i], alphabet);
                    records[i] = analyze(r, i, checked(i) ? std::optional(config.oracleLength) : std::nullopt);
                } catch (...) {
                    std::lock_guard lock(failureLock);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < std::min<std::size_t>(threads, texts.size()); ++t)
            pool.emplace_back(worker);
        worker();
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
        result.stats.push_back(statsAggregate(records, size, config.k));
        result.records.push_back(std::move(records));
    }
    return result;
}

namespace {

std::string formatValue(double v) {
    if (std::isnan(v))
        return "nan";
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

std::vector<std::string> splitCsv(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

} // namespace

void writeStatsCsv(std::ostream &out, std::span<const SampleStats> stats) {
    if (stats.empty())
        return;
    out << "size,k,samples";
    for (const auto &[name, value] : stats.front().columns)
        out << ',' << name;
    out << '\n';
    for (const SampleStats &s : stats) {
        if (s.columns.size() != stats.front().columns.size())
            throw Error("statistics rows have different schemas");
        out << s.size << ',' << s.k << ',' << s.samples;
        for (const auto &[name, value] : s.columns)
            out << ',' << formatValue(value);
        out << '\n';
    }
}

std::vector<SampleStats> readStatsCsv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line))
        return {};
    const auto header = splitCsv(line);
    if (header.size() < 3 || header[0] != "size" || header[1] != "k" || header[2] != "samples")
        throw Error("statistics CSV must start with size,k,samples");
    std::vector<SampleStats> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = splitCsv(line);
        if (fields.size() != header.size())
            throw Error("statistics CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(header.size()));
        SampleStats s;
        try {
            s.size = std::stoull(fields[0]);
            s.k = std::stoull(fields[1]);
            s.samples = std::stoull(fields[2]);
            for (std::size_t i = 3; i < fields.size(); ++i)
                s.columns.emplace_back(header[i], fields[i] == "nan" ? std::numeric_limits<double>::quiet_NaN()
                                                                     : std::stod(fields[i]));
        } catch (const std::logic_error &) {
            throw Error("malformed number in statistics CSV");
        }
        out.push_back(std::move(s));
    }
    return out;
}

void writeRecordsCsv(std::ostream &out, std::span<const ReRecord> records) {
    out << "index,text,size,alph,rpn,snf,reduced,snfr,sc,tc";
    for (Construction c : kConstructions)
        for (Reduction r : kReductions) {
            const std::string p = prefixOf(c, r);
            out << ',' << p << "_q," << p << "_d," << p << "_det," << p << "_hom";
        }
    out << ",oracle_checked,oracle_agrees\n";
    for (const ReRecord &rec : records) {
        out << rec.index << ',' << rec.text << ',' << rec.size << ',' << rec.alph << ',' << rec.rpn << ','
            << rec.snf << ',' << rec.reduced << ',' << rec.snfr << ',' << rec.sc << ',' << rec.tc;
        for (Construction c : kConstructions)
            for (Reduction r : kReductions) {
                const NfaMeasures &m = rec.at(c, r);
                out << ',' << m.states << ',' << m.transitions << ',' << m.deterministic << ',' << m.homogeneous;
            }
        out << ',' << rec.oracleChecked << ',' << rec.oracleAgrees << '\n';
    }
}

} // namespace rekit
