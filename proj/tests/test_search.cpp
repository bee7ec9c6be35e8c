#include "sumprod/search.hpp"

#include <catch2/catch.hpp>

#include <numeric>

using namespace sumprod;

namespace {

bool contains_witness(const SpUpperBound& ub, const std::vector<int>& w) {
    return std::find(ub.witnesses.begin(), ub.witnesses.end(), w) != ub.witnesses.end();
}

} // namespace

TEST_CASE("exhaustive oracle small values", "[search]") {
    CHECK(exhaustive_oracle(2, 10).value == 3);
    CHECK(exhaustive_oracle(3, 10).value == 6);

    auto k4 = exhaustive_oracle(4, 12);
    CHECK(k4.value == 9);
    CHECK(contains_witness(k4, {1, 2, 3, 4}));

    CHECK(exhaustive_oracle(1, 5).value == 1);
    CHECK(exhaustive_oracle(1, 5).witnesses == std::vector<std::vector<int>>{{1}});

    CHECK_THROWS_WITH(exhaustive_oracle(4, 25), "oracle budget");
    CHECK_THROWS_WITH(exhaustive_oracle(0, 10), "oracle budget");
    CHECK_THROWS_WITH(exhaustive_oracle(5, 4), "oracle budget");
}

TEST_CASE("branch and bound matches reference rows", "[search]") {
    auto k7 = branch_and_bound_sp(7, 16);
    CHECK(k7.value == 18);
    CHECK(contains_witness(k7, {1, 2, 3, 4, 6, 8, 12}));

    auto k9 = branch_and_bound_sp(9, 20);
    CHECK(k9.value == 25);
    CHECK(contains_witness(k9, {1, 2, 3, 4, 6, 8, 9, 12, 16}));

    auto k10 = branch_and_bound_sp(10, 24);
    CHECK(k10.value <= 30);
    std::vector<int> guess{1, 2, 3, 4, 6, 8, 9, 12, 16, 18};
    CHECK(contains_witness(k10, guess));
    auto stats = max_pair(IntSet(std::vector<Int>(guess.begin(), guess.end())));
    CHECK(stats.sum_size == 30);
    CHECK(stats.product_size == 29);
}

TEST_CASE("branch and bound equals the oracle", "[search][property]") {
    for (int k = 1; k <= 4; ++k)
        for (int M = k; M <= 12; ++M) {
            auto oracle = exhaustive_oracle(k, M);
            auto bb = branch_and_bound_sp(k, M);
            CAPTURE(k, M);
            CHECK(oracle.value == bb.value);
            CHECK(oracle.witnesses == bb.witnesses);
        }
    // Threaded run agrees as well.
    auto oracle = exhaustive_oracle(5, 14);
    auto bb2 = branch_and_bound_sp(5, 14, -1, 2);
    CHECK(oracle.value == bb2.value);
    CHECK(oracle.witnesses == bb2.witnesses);
}

TEST_CASE("search value is monotone in M and witnesses normalized", "[search]") {
    long prev = 1000;
    for (int M : {8, 10, 12, 14, 16}) {
        auto ub = branch_and_bound_sp(4, M);
        CHECK(ub.value <= prev);
        prev = ub.value;
        for (const auto& w : ub.witnesses) {
            long g = 0;
            for (int v : w) g = std::gcd(g, static_cast<long>(v));
            CHECK(g == 1);
        }
    }
}

TEST_CASE("search budget produces flagged partial results", "[search]") {
    auto partial = branch_and_bound_sp(6, 20, 50);
    CHECK_FALSE(partial.exhaustive_up_to_M);
    auto full = branch_and_bound_sp(6, 20);
    CHECK(full.exhaustive_up_to_M);
    CHECK(full.value == 15);
}

TEST_CASE("lower bound record for chain range", "[search]") {
    auto lr = verify_lower_bound(6);
    CHECK(lr.mode == "chains");
    CHECK(lr.all_pass);
    bool found_chain_comp = false;
    for (const auto& comp : lr.components)
        if (comp.at("type") == "chain_certification") {
            found_chain_comp = true;
            CHECK(comp.at("cases") == 56);
            CHECK(comp.at("min_longest").get<long>() >= 15);
        }
    CHECK(found_chain_comp);
    CHECK_THROWS_AS(verify_lower_bound(3), std::invalid_argument);
}

TEST_CASE("lower bound record for 3k-3 range", "[search]") {
    auto lr = verify_lower_bound(8);
    CHECK(lr.mode == "3k3-cases");
    CHECK(lr.all_pass);
    bool grid = false, sidon = false, family = false, growth = false;
    for (const auto& comp : lr.components) {
        std::string type = comp.at("type");
        if (type == "gpsum_grid") {
            grid = true;
            CHECK(comp.at("min_bound").get<long>() >= 22);
        }
        if (type == "sidon_arith") {
            sidon = true;
            CHECK(comp.at("sidon_size") == 36);
        }
        family = family || type == "family_window_suite";
        growth = growth || type == "growth_k8_suite";
    }
    CHECK((grid && sidon && family && growth));
    CHECK(lr.assumptions.size() >= 3);
}

TEST_CASE("certificates for small k", "[search]") {
    auto c5 = assemble_certificate(5, 16);
    CHECK(c5.claimed_value == 12);
    CHECK(c5.all_pass);
    CHECK(contains_witness(c5.upper, {1, 2, 3, 4, 6}));

    auto c2 = assemble_certificate(2, 10);
    CHECK(c2.claimed_value == 3);
    CHECK(c2.all_pass);
    CHECK(c2.lower.mode == "direct");

    CHECK_THROWS_AS(assemble_certificate(10, 24), std::invalid_argument);
    CHECK_THROWS_AS(assemble_certificate(1, 10), std::invalid_argument);
}

TEST_CASE("certificate serialization and revalidation", "[search]") {
    auto cert = assemble_certificate(4, 12);
    auto j = certificate_to_json(cert);
    CHECK(j.at("k") == 4);
    CHECK(j.at("claimed_value") == 9);
    CHECK(j.at("upper").at("value") == 9);
    CHECK(j.at("lower").at("mode") == "chains");
    CHECK(j.at("all_pass") == true);
    bool four_cases = false;
    for (const auto& comp : j.at("lower").at("components"))
        if (comp.at("type") == "chain_certification") four_cases = comp.at("cases") == 4;
    CHECK(four_cases);

    CHECK(revalidate_certificate(j));

    // Tampering is caught.
    auto forged = j;
    forged["upper"]["witnesses"][0][0] = 7;
    CHECK_FALSE(revalidate_certificate(forged));

    auto wrong_value = j;
    wrong_value["claimed_value"] = 10;
    CHECK_FALSE(revalidate_certificate(wrong_value));
}

TEST_CASE("open report for k = 10", "[search]") {
    auto ub = branch_and_bound_sp(10, 24);
    auto j = open_upper_report_json(ub);
    CHECK(j.at("k") == 10);
    CHECK(j.at("claimed_value").is_null());
    CHECK(j.at("lower").at("mode") == "open");
    CHECK(j.at("upper").at("value") <= 30);
}

TEST_CASE("theorem values", "[search]") {
    CHECK(theorem_value(1) == 1);
    CHECK(theorem_value(2) == 3);
    CHECK(theorem_value(7) == 18);
    CHECK(theorem_value(8) == 22);
    CHECK(theorem_value(9) == 25);
    CHECK_THROWS_AS(theorem_value(10), std::invalid_argument);
}

TEST_CASE("table rows are self-consistent", "[search]") {
    for (const Table1Row& row : table1_rows()) {
        IntSet a(std::vector<Int>(row.elements.begin(), row.elements.end()));
        auto mp = max_pair(a);
        CHECK(mp.sum_size == row.sum_size);
        CHECK(mp.product_size == row.product_size);
        CHECK(static_cast<int>(a.size()) == row.k);
        CHECK(mp.maximum == theorem_value(row.k));
    }
}
