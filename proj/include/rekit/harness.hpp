#pragma once

// Experiment pipeline: generate samples, run every construction and
// reduction, aggregate the measures per size and serialize them as CSV.

#include "rekit/syntax.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rekit {

enum class Construction : std::uint8_t { Pos, Psnf, Follow, Pd };
enum class Reduction : std::uint8_t { None, Right, Left, LeftRight };

inline constexpr std::array kConstructions{Construction::Pos, Construction::Psnf, Construction::Follow,
                                           Construction::Pd};
inline constexpr std::array kReductions{Reduction::None, Reduction::Right, Reduction::Left, Reduction::LeftRight};

/// "pos", "psnf", "f", "pd"
std::string_view constructionName(Construction c);
/// "none", "r", "l", "lr"
std::string_view reductionName(Reduction r);

struct NfaMeasures {
    std::size_t states = 0;
    std::size_t transitions = 0;
    bool deterministic = false;
    bool homogeneous = false;

    std::size_t size() const noexcept { return states + transitions; }
};

/// Everything measured for one expression.
struct ReRecord {
    std::size_t index = 0;
    std::string text;
    std::size_t size = 0;
    std::size_t alph = 0;
    std::size_t rpn = 0;
    bool snf = false;
    bool reduced = false;
    /// Star normal form of the expression is reduced.
    bool snfr = false;
    /// States and transitions of the trimmed minimal DFA.
    std::size_t sc = 0;
    std::size_t tc = 0;
    /// [construction][reduction]
    std::array<std::array<NfaMeasures, 4>, 4> nfa{};
    bool oracleChecked = false;
    bool oracleAgrees = true;

    const NfaMeasures &at(Construction c, Reduction r) const {
        return nfa[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
};

/// Measures one expression. When `oracleLength` is set, the languages of
/// the expression and of every construction are compared up to that length.
ReRecord analyze(const Regex &r, std::size_t index = 0, std::optional<std::size_t> oracleLength = std::nullopt);

struct ColumnSummary {
    double avg = 0;
    double std = 0;
};

/// Mean and population standard deviation. Throws Error on empty input.
ColumnSummary summarize(std::span<const double> values);
/// Percentage of true values. Throws Error on empty input.
double percentage(std::span<const char> flags);

/// Aggregated statistics for one sample size, as named columns in a fixed
/// schema order.
struct SampleStats {
    std::size_t size = 0;
    std::size_t k = 0;
    std::size_t samples = 0;
    std::vector<std::pair<std::string, double>> columns;

    /// Throws Error for an unknown column.
    double at(std::string_view column) const;

    friend bool operator==(const SampleStats &, const SampleStats &) = default;
};

/// Aggregates records; throws Error on empty input.
SampleStats statsAggregate(std::span<const ReRecord> records, std::size_t size, std::size_t k);

struct ExperimentConfig {
    std::vector<std::size_t> sizes;
    std::size_t k = 2;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::size_t oracleLength = 6;
    /// Fraction of records whose languages are checked by the oracle.
    double oracleFraction = 0.05;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct ExperimentResult {
    std::vector<SampleStats> stats;
    std::vector<std::vector<ReRecord>> records; // per size, by sample index
};

/// Generates `samples` uniform expressions of every size and analyzes them.
/// Deterministic in the configuration regardless of `threads`.
ExperimentResult runExperiment(const ExperimentConfig &config);

/// The expressions runExperiment analyzes for one size.
std::vector<std::string> experimentSamples(std::size_t size, std::size_t k, std::size_t samples, std::uint64_t seed);

void writeStatsCsv(std::ostream &out, std::span<const SampleStats> stats);
/// Inverse of writeStatsCsv. Throws Error on a malformed document.
std::vector<SampleStats> readStatsCsv(std::istream &in);

void writeRecordsCsv(std::ostream &out, std::span<const ReRecord> records);

} // namespace rekit
