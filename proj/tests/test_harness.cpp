#include "support.hpp"

#include "rekit/error.hpp"
#include "rekit/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace testing;

TEST_CASE("construction and reduction names") {
    CHECK(constructionName(Construction::Follow) == "f");
    CHECK(constructionName(Construction::Psnf) == "psnf");
    CHECK(reductionName(Reduction::LeftRight) == "lr");
    CHECK(reductionName(Reduction::None) == "none");
}

TEST_CASE("summarize and percentage") {
    const std::vector<double> two{2, 4};
    CHECK(summarize(two).avg == doctest::Approx(3));
    CHECK(summarize(two).std == doctest::Approx(1));
    const std::vector<double> one{7};
    CHECK(summarize(one).std == 0);
    CHECK_THROWS_AS(summarize(std::vector<double>{}), Error);

    const std::vector<char> all{1, 1, 1};
    CHECK(percentage(all) == 100);
    const std::vector<char> quarter{1, 0, 0, 0};
    CHECK(percentage(quarter) == 25);
    CHECK_THROWS_AS(percentage(std::vector<char>{}), Error);
}

TEST_CASE("analyze one expression") {
    const ReRecord r = analyze(re("(a+b)*a"), 3, 6);
    CHECK(r.index == 3);
    CHECK(r.text == "(a+b)*a");
    CHECK(r.size == 7);
    CHECK(r.alph == 3);
    CHECK(r.rpn == 6);
    CHECK(r.snf);
    CHECK(r.reduced);
    CHECK(r.snfr);
    CHECK(r.sc == 2);
    CHECK(r.tc == 4);
    CHECK(r.oracleChecked);
    CHECK(r.oracleAgrees);

    const NfaMeasures &pos = r.at(Construction::Pos, Reduction::None);
    CHECK(pos.states == 4);
    CHECK(pos.transitions == 9);
    CHECK_FALSE(pos.deterministic);
    CHECK(pos.homogeneous);
    CHECK(pos.size() == 13);
    CHECK(r.at(Construction::Follow, Reduction::None).states == 2);
    CHECK(r.at(Construction::Follow, Reduction::None).transitions == 3);
    CHECK(r.at(Construction::Pd, Reduction::None).states == 2);
    CHECK(r.at(Construction::Psnf, Reduction::None).transitions == 9);
    CHECK(r.at(Construction::Pos, Reduction::Right).states == 2);

    const ReRecord unchecked = analyze(re("(a*b*)*"));
    CHECK_FALSE(unchecked.oracleChecked);
    CHECK_FALSE(unchecked.snf);
    CHECK(unchecked.at(Construction::Psnf, Reduction::None).states == 3);
}

TEST_CASE("aggregate columns") {
    std::vector<ReRecord> records{analyze(re("(a+b)*a")), analyze(re("ab")), analyze(re("(a*b*)*"))};
    const SampleStats s = statsAggregate(records, 7, 2);
    CHECK(s.samples == 3);
    CHECK(s.at("alph_avg") == doctest::Approx(7.0 / 3));
    CHECK(s.at("snf_pct") == doctest::Approx(200.0 / 3));
    CHECK(s.at("pos_hom_pct") == 100);
    CHECK(s.at("pos_q_avg") == doctest::Approx(s.at("alph_avg") + 1));
    CHECK(s.at("qpos_violations") == 0);
    CHECK(s.at("oracle_checked") == 0);
    CHECK(s.at("rpn_alph") == doctest::Approx((2.0 + 1.5 + 3.0) / 3));
    CHECK_THROWS_AS(s.at("nope"), Error);
    CHECK_THROWS_AS(statsAggregate({}, 1, 1), Error);

    for (const char *column : {"alph_avg", "alph_std", "rpn_avg", "rpn_std", "snf_pct", "snfr_pct", "sc_avg",
                               "tc_avg", "pos_q_avg", "pos_d_avg", "pos_det_pct", "pos_hom_pct", "f_q_avg",
                               "pd_lr_hom_pct", "psnf_l_det_pct", "dpos_alph1", "pd_lr_decrease_rsnf_pct"})
        CHECK_NOTHROW(s.at(column));
}

TEST_CASE("experiment is deterministic and thread-independent") {
    ExperimentConfig cfg;
    cfg.sizes = {10, 20};
    cfg.k = 3;
    cfg.samples = 60;
    cfg.seed = 17;
    cfg.oracleFraction = 0.5;
    cfg.threads = 1;
    const ExperimentResult one = runExperiment(cfg);
    cfg.threads = 4;
    const ExperimentResult four = runExperiment(cfg);

    std::ostringstream a, b;
    writeStatsCsv(a, one.stats);
    writeStatsCsv(b, four.stats);
    CHECK(a.str() == b.str());
    REQUIRE(one.stats.size() == 2);
    CHECK(one.stats[0].size == 10);
    CHECK(one.stats[1].at("size_avg") == 20);
    CHECK(one.stats[0].at("oracle_checked") == 30);
    CHECK(one.stats[0].at("oracle_failures") == 0);
    CHECK(one.stats[0].at("qpos_violations") == 0);
    CHECK(one.stats[0].at("pos_hom_pct") == 100);

    const auto texts = experimentSamples(20, 3, 60, 17);
    for (std::size_t i = 0; i < texts.size(); ++i)
        CHECK(one.records[1][i].text == texts[i]);

    // Aggregates are recomputable from the records.
    CHECK(statsAggregate(one.records[0], 10, 3) == one.stats[0]);

    cfg.seed = 18;
    std::ostringstream c;
    writeStatsCsv(c, runExperiment(cfg).stats);
    CHECK(c.str() != a.str());
}

TEST_CASE("statistics CSV round trip") {
    ExperimentConfig cfg;
    cfg.sizes = {8, 12};
    cfg.k = 2;
    cfg.samples = 20;
    const ExperimentResult r = runExperiment(cfg);
    std::ostringstream out;
    writeStatsCsv(out, r.stats);
    const std::string text = out.str();
    CHECK(text.rfind("size,k,samples,", 0) == 0);

    std::istringstream in(text);
    const auto back = readStatsCsv(in);
    REQUIRE(back.size() == 2);
    std::ostringstream again;
    writeStatsCsv(again, back);
    CHECK(again.str() == text);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].size == r.stats[i].size);
        REQUIRE(back[i].columns.size() == r.stats[i].columns.size());
        for (std::size_t c = 0; c < back[i].columns.size(); ++c) {
            CHECK(back[i].columns[c].first == r.stats[i].columns[c].first);
            const double x = back[i].columns[c].second, y = r.stats[i].columns[c].second;
            CHECK(((std::isnan(x) && std::isnan(y)) || std::abs(x - y) < 1e-6));
        }
    }

    std::istringstream bad("size,k\n1,2\n");
    CHECK_THROWS_AS(readStatsCsv(bad), Error);
    std::istringstream ragged("size,k,samples,x\n1,2,3\n");
    CHECK_THROWS_AS(readStatsCsv(ragged), Error);
    std::istringstream junk("size,k,samples,x\n1,2,3,abc\n");
    CHECK_THROWS_AS(readStatsCsv(junk), Error);

    std::ostringstream recs;
    writeRecordsCsv(recs, r.records[0]);
    std::istringstream lines(recs.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("index,text,size,alph,rpn,snf,reduced,snfr,sc,tc,pos_q", 0) == 0);
    const std::string all = recs.str();
    CHECK(std::count(all.begin(), all.end(), '\n') == 21);
}

TEST_CASE("experiment errors") {
    ExperimentConfig cfg;
    cfg.sizes = {0};
    CHECK_THROWS_AS(runExperiment(cfg), Error);
    cfg.sizes = {5};
    cfg.oracleLength = 10;
    CHECK_THROWS_AS(runExperiment(cfg), Error);
}
