// Copyright 2026 The qrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrw/harness.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "gtest/gtest.h"
#include "qrw/errors.h"

using namespace qrw;

namespace {

ExperimentPlan small_plan() {
    ExperimentPlan plan;
    plan.sizes = {2};
    plan.shot_grid = {24, 48};
    plan.samples_per_cell = 3;
    plan.backends = {presets::noiseless(), presets::fake_casablanca()};
    plan.mitigation_modes = {false, true};
    plan.master_seed = 99;
    return plan;
}

}  // namespace

TEST(MeanAndSem, Examples) {
    const std::vector<double> v{1.0, 2.0, 3.0};
    const auto m = mean_and_sem(v);
    EXPECT_DOUBLE_EQ(m.mean, 2.0);
    EXPECT_NEAR(m.sem, 0.57735, 1e-5);
    EXPECT_EQ(m.count, 3);
    const std::vector<double> one{4.5};
    EXPECT_EQ(mean_and_sem(one).sem, 0.0);
    EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
    EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(ExperimentPlan, ValidationAndCounts) {
    auto plan = small_plan();
    EXPECT_NO_THROW(plan.validate());
    EXPECT_EQ(plan.ks_for(2), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(plan.cell_count(), 3 * 2 * 3 * 2 * 2);

    auto bad = plan;
    bad.shot_grid = {25};
    EXPECT_THROW(bad.validate(), ParameterError);
    bad.require_multiple_of_24 = false;
    EXPECT_NO_THROW(bad.validate());

    bad = plan;
    bad.sparsity_ks[2] = {3};
    EXPECT_THROW(bad.validate(), ParameterError);
    bad = plan;
    bad.gamma = 1.0;
    EXPECT_THROW(bad.validate(), ParameterError);
    bad = plan;
    bad.samples_per_cell = 0;
    EXPECT_THROW(bad.validate(), ParameterError);
}

TEST(PlanInstance, ThetasSharedAcrossSparsity) {
    const auto plan = small_plan();
    const auto dense = plan_instance(plan, 3, 0, 1);
    const auto sparse = plan_instance(plan, 3, 2, 1);
    EXPECT_EQ(dense.b, sparse.b);
    EXPECT_EQ(sparse.angles.zeroed_count(), 2);
    EXPECT_EQ(sparse.sparsity_level, 0.75);
    for (int l = 0; l < 3; ++l) {
        EXPECT_EQ(dense.angles[l].phi, sparse.angles[l].phi);
        EXPECT_EQ(dense.angles[l].lambda, sparse.angles[l].lambda);
    }
    // Shared-per-size b; different samples draw different angles.
    EXPECT_EQ(plan_instance(plan, 3, 0, 2).b, dense.b);
    EXPECT_NE(plan_instance(plan, 3, 0, 2).angles[0].theta, dense.angles[0].theta);

    auto per_sample = plan;
    per_sample.rhs_policy = RhsPolicy::kPerSample;
    EXPECT_NE(plan_instance(per_sample, 3, 0, 2).b, plan_instance(per_sample, 3, 0, 1).b);
}

TEST(RunPlan, RowAccountingAndOrder) {
    const auto plan = small_plan();
    int64_t last_total = 0;
    int64_t calls = 0;
    const auto result = run_plan(plan, [&](int64_t, int64_t total) {
        last_total = total;
        ++calls;
    });
    EXPECT_EQ(static_cast<int64_t>(result.rows.size()), plan.cell_count());
    EXPECT_EQ(last_total, plan.cell_count());
    EXPECT_GT(calls, 0);
    EXPECT_EQ(result.error_rows, 0);
    std::map<std::tuple<int, int, int, std::string, bool>, int> per_cell;
    for (const auto &r : result.rows) {
        EXPECT_EQ(r.run_id, result.run_id);
        EXPECT_EQ(r.N, 4);
        EXPECT_EQ(r.c, 7);
        ASSERT_TRUE(r.relative_error.has_value());
        ++per_cell[{r.k, r.shots, r.sample_index, r.backend, r.mitigation}];
        if (!r.mitigation) EXPECT_EQ(r.total_retries, 0);
        if (r.mitigation) EXPECT_EQ(r.total_invalid, 0);
        if (r.backend == "noiseless") EXPECT_EQ(r.total_invalid + r.total_retries, 0);
    }
    for (const auto &[key, count] : per_cell) EXPECT_EQ(count, 1);
}

TEST(RunPlan, DeterministicAcrossRerunsAndWorkers) {
    auto plan = small_plan();
    const auto a = run_plan(plan);
    plan.workers = 3;
    const auto b = run_plan(plan);
    EXPECT_EQ(a.run_id, b.run_id);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(row_fingerprint(a.rows[i]), row_fingerprint(b.rows[i]));
}

TEST(RunPlan, RunIdDependsOnResultAffectingFieldsOnly) {
    auto plan = small_plan();
    const auto id = plan_run_id(plan);
    plan.workers = 4;
    EXPECT_EQ(plan_run_id(plan), id);
    plan.master_seed = 100;
    EXPECT_NE(plan_run_id(plan), id);
}

TEST(RunPlan, CommonRandomNumbersAcrossMitigationForDense) {
    ExperimentPlan plan;
    plan.sizes = {3};
    plan.sparsity_ks[3] = {0};
    plan.shot_grid = {48};
    plan.samples_per_cell = 2;
    plan.backends = {presets::fake_boeblingen()};
    plan.mitigation_modes = {false, true};
    const auto result = run_plan(plan);
    ASSERT_EQ(result.rows.size(), 4u);
    for (const auto &off : result.rows) {
        if (off.mitigation) continue;
        for (const auto &on : result.rows) {
            if (on.mitigation && on.sample_index == off.sample_index) {
                EXPECT_EQ(*on.relative_error, *off.relative_error);
            }
        }
    }
}

TEST(RunPlan, RetryExhaustionBecomesErrorRow) {
    ExperimentPlan plan;
    plan.sizes = {3};
    plan.sparsity_ks[3] = {3};
    plan.shot_grid = {96};
    plan.samples_per_cell = 1;
    plan.backends = {presets::fake_boeblingen()};
    plan.mitigation_modes = {true};
    plan.max_retries = 1;
    const auto result = run_plan(plan);
    ASSERT_EQ(result.rows.size(), 1u);
    EXPECT_EQ(result.error_rows, 1);
    EXPECT_TRUE(result.rows[0].failed());
    EXPECT_FALSE(result.rows[0].error.empty());

    std::stringstream csv;
    write_rows_csv(csv, result.rows);
    EXPECT_NE(csv.str().find(",ERROR,"), std::string::npos);
    const auto back = read_rows_csv(csv);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_TRUE(back[0].failed());
    EXPECT_THROW(aggregate(back), ParameterError);
}

TEST(Manifest, RerunReproducesRows) {
    const auto plan = small_plan();
    const auto first = run_plan(plan);
    const auto replay_plan = plan_from_manifest(manifest_json(plan, first));
    EXPECT_EQ(plan_run_id(replay_plan), first.run_id);
    const auto second = run_plan(replay_plan);
    std::stringstream a, b;
    for (const auto &r : first.rows) a << row_fingerprint(r) << '\n';
    for (const auto &r : second.rows) b << row_fingerprint(r) << '\n';
    EXPECT_EQ(a.str(), b.str());
    EXPECT_THROW(plan_from_manifest("{}"), FormatError);
    EXPECT_THROW(plan_from_manifest("not json"), FormatError);
}

TEST(RowsCsv, HeaderAndRoundTrip) {
    const auto result = run_plan(small_plan());
    std::stringstream csv;
    write_rows_csv(csv, result.rows);
    std::string header;
    std::getline(std::stringstream(csv.str()), header);
    EXPECT_EQ(header,
              "run_id,n,N,sparsity_level,k,shots,sample_index,backend,mitigation,gamma,c,relative_error,"
              "total_invalid,total_retries,condition_number,seed,wall_time_ms");
    const auto back = read_rows_csv(csv);
    ASSERT_EQ(back.size(), result.rows.size());
    for (size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(row_fingerprint(back[i]), row_fingerprint(result.rows[i]));
        EXPECT_EQ(back[i].wall_time_ms, result.rows[i].wall_time_ms);
    }
    std::stringstream bad("run_id,n\nx,1\n");
    EXPECT_THROW(read_rows_csv(bad), FormatError);
}

TEST(Aggregate, MatchesBruteForce) {
    const auto result = run_plan(small_plan());
    const auto agg = aggregate(result.rows);
    EXPECT_EQ(agg.size(), 3u * 2 * 2 * 2);
    for (const auto &a : agg) {
        std::vector<double> errs;
        for (const auto &r : result.rows) {
            if (r.n == a.n && r.k == a.k && r.shots == a.shots && r.backend == a.backend &&
                r.mitigation == a.mitigation) {
                errs.push_back(*r.relative_error);
            }
        }
        ASSERT_EQ(static_cast<int64_t>(errs.size()), a.count);
        const auto m = mean_and_sem(errs);
        EXPECT_DOUBLE_EQ(a.mean_relative_error, m.mean);
        EXPECT_DOUBLE_EQ(a.sem_relative_error, m.sem);
        EXPECT_DOUBLE_EQ(a.median_relative_error, median(errs));
        EXPECT_FALSE(a.single_sample);
    }
    std::stringstream csv;
    write_aggregate_csv(csv, agg);
    const auto back = read_aggregate_csv(csv);
    ASSERT_EQ(back.size(), agg.size());
    for (size_t i = 0; i < agg.size(); ++i) {
        EXPECT_EQ(back[i].mean_relative_error, agg[i].mean_relative_error);
        EXPECT_EQ(back[i].backend, agg[i].backend);
        EXPECT_EQ(back[i].mitigation, agg[i].mitigation);
    }
}

TEST(Aggregate, SingleSampleFlag) {
    SweepResultRow r;
    r.n = 2;
    r.N = 4;
    r.shots = 24;
    r.backend = "noiseless";
    r.relative_error = 0.25;
    const std::vector<SweepResultRow> rows{r};
    const auto agg = aggregate(rows);
    ASSERT_EQ(agg.size(), 1u);
    EXPECT_TRUE(agg[0].single_sample);
    EXPECT_EQ(agg[0].sem_relative_error, 0.0);
}

TEST(Table1, LayoutAndMissingCells) {
    std::vector<AggregateRow> rows;
    for (int k = 0; k <= 4; ++k) {
        for (bool mit : {false, true}) {
            AggregateRow a;
            a.n = 4;
            a.N = 16;
            a.k = k;
            a.backend = "fake-casablanca";
            a.mitigation = mit;
            a.shots = 1008;
            a.mean_relative_error = (k == 0 && mit) ? 0.0 : 0.01 * (k + 1);
            rows.push_back(a);
        }
    }
    const auto t = build_table1(rows);
    EXPECT_EQ(t.backend, "fake-casablanca");
    EXPECT_TRUE(t.complete());
    const auto text = t.render();
    EXPECT_NE(text.find("0 (dense)"), std::string::npos);
    EXPECT_NE(text.find("0.9375"), std::string::npos);
    EXPECT_NE(text.find("0.875"), std::string::npos);
    EXPECT_NE(text.find("Un-mitigated"), std::string::npos);
    EXPECT_NE(text.find("0.00"), std::string::npos);
    EXPECT_NE(text.find("5.00"), std::string::npos);
    EXPECT_EQ(text.find("--"), std::string::npos);

    rows.pop_back();
    const auto partial = build_table1(rows);
    EXPECT_FALSE(partial.complete());
    EXPECT_NE(partial.render().find("--"), std::string::npos);

    EXPECT_FALSE(build_table1(rows, "fake-casablanca", 456).complete());
}

TEST(SweepOutputs, WritesRowsAndManifest) {
    const auto plan = small_plan();
    const auto result = run_plan(plan);
    const auto dir = std::filesystem::temp_directory_path() / ("qrw_harness_test_" + result.run_id);
    write_sweep_outputs(plan, result, dir.string());
    EXPECT_TRUE(std::filesystem::exists(dir / "rows.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
    std::ifstream in(dir / "rows.csv");
    EXPECT_EQ(read_rows_csv(in).size(), result.rows.size());
    std::filesystem::remove_all(dir);
}
