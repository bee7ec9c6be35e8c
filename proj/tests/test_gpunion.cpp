#include "sumprod/gpunion.hpp"
#include "sumprod/sets.hpp"

#include <catch2/catch.hpp>

#include <set>

using namespace sumprod;

namespace {

std::vector<Rat> rats(std::initializer_list<long> vals) {
    std::vector<Rat> out;
    for (long v : vals) out.emplace_back(v);
    return out;
}

// Independent |A+A| oracle over the union's elements.
long brute_sumset_size(const GpUnion& u) {
    std::set<Rat> sums;
    std::vector<Rat> all = u.b;
    all.insert(all.end(), u.c.begin(), u.c.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) sums.insert(all[i] + all[j]);
    return static_cast<long>(sums.size());
}

} // namespace

TEST_CASE("gp union construction", "[gpunion]") {
    auto u = make_gp_union(Rat(2), Rat(1), Rat(3), 2, 5);
    CHECK(u.m == 5); // swapped to enforce m >= n
    CHECK(u.x == 1);
    CHECK(u.n == 2);
    CHECK(u.y == 2);

    CHECK_THROWS_WITH(make_gp_union(Rat(1), Rat(2), Rat(2), 4, 4), "progressions intersect");
    CHECK_THROWS_AS(make_gp_union(Rat(1), Rat(2), Rat(1), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_gp_union(Rat(1), Rat(2), make_rat(1, 2), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_gp_union(Rat(1), Rat(2), Rat(3), 0, 3), std::invalid_argument);
}

TEST_CASE("sumset breakdown reproduces the three figures", "[gpunion]") {
    // B = {1,3,9,27}, C = {2,6,18,54}
    auto u2 = make_gp_union(Rat(1), Rat(2), Rat(3), 4, 4);
    auto bd2 = sumset_breakdown(u2);
    CHECK(bd2.bb_cc == rats({4, 12, 36}));
    CHECK(bd2.bb_size == 10);
    CHECK(bd2.cc_size == 10);
    CHECK(bd2.total == brute_sumset_size(u2));
    CHECK(bd2.total >= bd2.inclusion_exclusion_floor());

    // B = {8,12,18,27}, C = {16,24,36,54}
    auto u3 = make_gp_union(Rat(8), Rat(16), make_rat(3, 2), 4, 4);
    auto bd3 = sumset_breakdown(u3);
    CHECK(bd3.bb_bc == rats({24, 36, 54}));

    // B = {1,3,9,27}, C = {4,12,36,108}
    auto u4 = make_gp_union(Rat(1), Rat(4), Rat(3), 4, 4);
    auto bd4 = sumset_breakdown(u4);
    CHECK(bd4.bc_size == 14);
}

TEST_CASE("representation spectrum", "[gpunion]") {
    auto u4 = make_gp_union(Rat(1), Rat(4), Rat(3), 4, 4);
    auto spectrum = rep_spectrum(u4);
    CHECK(spectrum.twice == rats({13, 39}));
    for (const auto& [val, cnt] : spectrum.counts) CHECK(cnt <= 2);
    // The doubly-represented values form a GP with the common ratio.
    CHECK(spectrum.twice[1] / spectrum.twice[0] == 3);

    auto u2 = make_gp_union(Rat(1), Rat(2), Rat(3), 4, 4);
    for (const auto& [val, cnt] : rep_spectrum(u2).counts) CHECK(cnt <= 2);

    auto far = make_gp_union(Rat(1), Rat(100), Rat(3), 3, 3);
    for (const auto& [val, cnt] : rep_spectrum(far).counts) CHECK(cnt == 1);

    CHECK_THROWS_WITH(rep_spectrum(make_gp_union(Rat(1), Rat(8), Rat(2), 3, 2)), "single progression");
}

TEST_CASE("family equation instances", "[gpunion]") {
    CHECK_THROWS_WITH(make_equation_instance(EquationKind::I, Rat(2), Rat(4)), "z in <r>");
    CHECK_THROWS_WITH(make_equation_instance(EquationKind::III, Rat(2), Rat(8)), "z in <r>");
    CHECK_THROWS_WITH(make_equation_instance(EquationKind::II, Rat(2), Rat(1)), "z in <r>");
    CHECK_THROWS_AS(make_equation_instance(EquationKind::I, Rat(1), Rat(3)), std::invalid_argument);
}

TEST_CASE("family solution counting", "[gpunion]") {
    // r = 2 breaks kinds I and II at z = 3.
    auto i_sols = count_family_solutions(make_equation_instance(EquationKind::I, Rat(2), Rat(3)), 4);
    REQUIRE(i_sols.size() >= 2);
    CHECK(std::count(i_sols.begin(), i_sols.end(), FamilySolution{3, 1, 0}) == 1);   // 2^3+1 = (2+1)*3
    CHECK(std::count(i_sols.begin(), i_sols.end(), FamilySolution{1, -1, -1}) == 1); // 2+1 = (1/2+1/2)*3

    auto ii_sols = count_family_solutions(make_equation_instance(EquationKind::II, Rat(2), Rat(3)), 4);
    REQUIRE(ii_sols.size() >= 2);
    CHECK(std::count(ii_sols.begin(), ii_sols.end(), FamilySolution{2, 1, 0}) == 1);  // 2^2+1 = 2+3
    CHECK(std::count(ii_sols.begin(), ii_sols.end(), FamilySolution{0, -1, -1}) == 1); // scaled 2+2 = 1+3

    // Kind III stays at one solution even for r = 2.
    auto iii_sols = count_family_solutions(make_equation_instance(EquationKind::III, Rat(2), Rat(3)), 10);
    CHECK(iii_sols.size() == 1);
    CHECK(iii_sols.front() == FamilySolution{2, 1, 0}); // 2^2-1 = (2-1)*3

    // r = 3, z = 2: exactly one solution in the window (3+1 = (1+1)*2).
    auto r3 = count_family_solutions(make_equation_instance(EquationKind::I, Rat(3), Rat(2)), 6);
    REQUIRE(r3.size() == 1);
    CHECK(r3.front() == FamilySolution{1, 0, 0});

    CHECK_THROWS_AS(count_family_solutions(make_equation_instance(EquationKind::I, Rat(3), Rat(2)), 0),
                    std::invalid_argument);
}

TEST_CASE("family uniqueness for sampled ratios", "[gpunion][property]") {
    // Window-bounded spot check; the acceptance suite runs the full panel.
    for (const char* rs : {"3", "3/2", "5/2", "7/3", "9/4"}) {
        Rat r = parse_rat(rs);
        for (const char* zs : {"2", "5", "7/2", "11/6"}) {
            Rat z = parse_rat(zs);
            if (is_rational_power_of(z, r)) continue;
            for (EquationKind kind : {EquationKind::I, EquationKind::II, EquationKind::III}) {
                auto sols = count_family_solutions(make_equation_instance(kind, r, z), 7);
                CAPTURE(rs, zs, static_cast<int>(kind));
                CHECK(sols.size() <= 1);
            }
        }
    }
}

TEST_CASE("gp8 closed-form lower bound", "[gpunion]") {
    CHECK(gp8_lower_bound(4, 4) == 25);
    CHECK(gp8_lower_bound(5, 4) == 31);
    CHECK(gp8_lower_bound(1, 1) == 3); // clamped min-terms
    CHECK_THROWS_AS(gp8_lower_bound(1, 2), std::invalid_argument);

    // Equality with the parity closed forms for k >= 4.
    for (long k = 4; k <= 64; ++k) {
        long expect = k % 2 ? (k * k - 3 * k + 8) / 2 : (k * k - 3 * k + 10) / 2;
        CHECK(gp8_lower_bound((k + 1) / 2, k / 2) == expect);
    }
}

TEST_CASE("gp8 bound check with intermediates", "[gpunion]") {
    CHECK(check_gp8_bound(make_gp_union(Rat(1), Rat(2), Rat(3), 4, 4)));
    CHECK(check_gp8_bound(make_gp_union(Rat(8), Rat(16), make_rat(3, 2), 4, 4)));
    CHECK_THROWS_WITH(check_gp8_bound(make_gp_union(Rat(1), Rat(3), Rat(2), 5, 3)),
                      "hypothesis r != 2 violated");

    // Leads on one progression: the union is Sidon and passes outright.
    CHECK(check_gp8_bound(make_gp_union(Rat(1), Rat(27), Rat(3), 3, 2)));

    // At r = 2 the single-family control fails: the (B+B) ∩ (C+C) cap
    // min{m-1, n} = 3 is exceeded.
    auto bad = make_gp_union(Rat(1), Rat(3), Rat(2), 5, 3);
    auto bd = sumset_breakdown(bad);
    CHECK(bd.bb_cc.size() > 3);
}

TEST_CASE("intersection caps and cross-sum floor", "[gpunion][property]") {
    for (const char* rs : {"3/2", "3", "5"}) {
        Rat r = parse_rat(rs);
        for (auto [xl, yl] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 5}}) {
            for (long m = 1; m <= 5; ++m)
                for (long n = 1; n <= m; ++n) {
                    GpUnion u;
                    try {
                        u = make_gp_union(Rat(xl), Rat(yl), r, m, n);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    if (on_single_progression(u)) continue;
                    auto bd = sumset_breakdown(u);
                    auto clamp0 = [](long v) { return v > 0 ? v : 0; };
                    CAPTURE(rs, xl, yl, m, n);
                    CHECK(static_cast<long>(bd.bb_cc.size()) <= clamp0(std::min(u.m - 1, u.n)));
                    CHECK(static_cast<long>(bd.bb_bc.size()) <= clamp0(std::min(u.m - 1, u.n)));
                    CHECK(static_cast<long>(bd.cc_bc.size()) <= clamp0(u.n - 1));
                    CHECK(bd.bc_size >= u.m * u.n - clamp0(std::min(u.m - 2, u.n - 1)));
                }
        }
    }
}

TEST_CASE("doubly-represented sums form a progression with ratio r", "[gpunion][property]") {
    for (const char* rs : {"3/2", "3", "5/2", "4"}) {
        Rat r = parse_rat(rs);
        for (auto [xl, yl] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 5}, std::pair{8, 16}})
            for (long m = 2; m <= 5; ++m)
                for (long n = 2; n <= m; ++n) {
                    GpUnion u;
                    try {
                        u = make_gp_union(Rat(xl), Rat(yl), r, m, n);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    if (on_single_progression(u)) continue;
                    auto spectrum = rep_spectrum(u);
                    CAPTURE(rs, xl, yl, m, n);
                    for (const auto& [val, cnt] : spectrum.counts) CHECK(cnt <= 2);
                    for (std::size_t i = 1; i < spectrum.twice.size(); ++i)
                        CHECK(spectrum.twice[i] / spectrum.twice[i - 1] == r);
                }
    }
}

TEST_CASE("single-progression unions are Sidon", "[gpunion]") {
    auto u = make_gp_union(Rat(1), Rat(4), Rat(2), 2, 2); // {1,2} ∪ {4,8}
    REQUIRE(on_single_progression(u));
    long k = u.k();
    CHECK(sumset(union_elements(u)).size() == k * (k + 1) / 2);
}

TEST_CASE("growth bound for r >= 2", "[gpunion]") {
    CHECK(growth_lower_bound(8) == 21);
    CHECK(growth_lower_bound(9) == 26);

    auto u6 = make_gp_union(Rat(1), Rat(2), Rat(4), 3, 3); // {1,4,16} ∪ {2,8,32}
    CHECK(growth_lower_bound(6) == 13);
    CHECK(brute_sumset_size(u6) >= 13);
    CHECK(check_growth_bound(u6));

    CHECK_THROWS_WITH(check_growth_bound(make_gp_union(Rat(1), Rat(2), make_rat(3, 2), 3, 3)),
                      "hypothesis r >= 2 violated");
}

TEST_CASE("k=8 bound", "[gpunion]") {
    CHECK(check_k8_bound(make_gp_union(Rat(1), Rat(5), Rat(2), 7, 1)));
    CHECK(check_k8_bound(make_gp_union(Rat(1), Rat(3), Rat(2), 4, 4)));
    CHECK(check_k8_bound(make_gp_union(Rat(1), Rat(7), make_rat(5, 2), 4, 4)));

    // Alternation broken only between the two largest elements.
    CHECK(check_k8_bound(make_gp_union(Rat(16), Rat(24), Rat(2), 5, 3)));

    CHECK_THROWS_AS(check_k8_bound(make_gp_union(Rat(1), Rat(3), Rat(2), 5, 2)), std::invalid_argument);
    CHECK_THROWS_WITH(check_k8_bound(make_gp_union(Rat(1), Rat(2), make_rat(3, 2), 4, 4)),
                      "hypothesis r >= 2 violated");
}

TEST_CASE("combined gpsum bound", "[gpunion]") {
    CHECK(theorem_gpsum_bound(8, Rat(3)) == 25);
    CHECK(theorem_gpsum_bound(8, Rat(2)) == 22);
    CHECK(theorem_gpsum_bound(9, Rat(2)) == 26);
    CHECK(theorem_gpsum_bound(9, Rat(3)) == 31);
    CHECK(theorem_gpsum_bound(8, make_rat(3, 2)) == 25);

    auto bounds = gpsum_case_bounds(8, Rat(2));
    CHECK_FALSE(bounds.even_neq2.has_value());
    CHECK(bounds.growth == 21);
    CHECK(bounds.k8 == 22);
    CHECK(bounds.selected == 22);

    // Every case bound clears 3k-2 for 8 <= k <= 64 on a ratio sample.
    for (long k = 8; k <= 64; ++k)
        for (const char* rs : {"2", "3/2", "3", "12/7", "9"})
            CHECK(theorem_gpsum_bound(k, parse_rat(rs)) >= 3 * k - 2);

    auto j = gpsum_report_json(8, Rat(2), bounds, 5);
    CHECK(j.at("case_bounds").at("even_neq2").is_null());
    CHECK(j.at("case_bounds").at("k8") == 22);
    CHECK(j.at("selected") == 22);
}
