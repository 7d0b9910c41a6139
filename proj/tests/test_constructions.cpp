#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "test_oracles.hpp"
#include "tokendom/constructions.hpp"
#include "tokendom/exact_solver.hpp"

using namespace tokendom;

namespace {

std::vector<std::uint32_t> ranks_of(const TokenGraph& tg, const std::vector<std::vector<int>>& sets) {
    std::vector<std::uint32_t> out;
    for (const auto& s : sets) out.push_back(tg.rank_of_labels(s));
    return out;
}

} // namespace

TEST_CASE("smallest prime factor") {
    CHECK(smallest_prime_factor(2) == 2);
    CHECK(smallest_prime_factor(9) == 3);
    CHECK(smallest_prime_factor(15) == 3);
    CHECK(smallest_prime_factor(49) == 7);
    CHECK(smallest_prime_factor(97) == 97);
    CHECK_THROWS_AS(smallest_prime_factor(1), invalid_parameter);
}

TEST_CASE("star F_2 construction D_ij") {
    auto d = star_f2_construction(4, 1, 2);
    CHECK(d == std::vector<std::vector<int>>{{1, 2}, {0, 3}, {0, 4}});
    CHECK(d.size() == 3);

    auto d2 = star_f2_construction(2, 1, 2);
    CHECK(d2 == std::vector<std::vector<int>>{{1, 2}});
    TokenGraph tiny(BaseGraph::star(2), 2, Mode::Explicit);
    CHECK(tiny.vertex_count() == 3);
    CHECK(is_dominating(tiny, ranks_of(tiny, d2)).dominating);

    CHECK_THROWS_AS(star_f2_construction(4, 2, 2), invalid_parameter);
    CHECK_THROWS_AS(star_f2_construction(4, 0, 2), invalid_parameter);
    CHECK_THROWS_AS(star_f2_construction(1, 1, 2), invalid_parameter);
}

TEST_CASE("star F_2 construction dominates for every i < j") {
    for (int n : {2, 4, 8, 9}) {
        TokenGraph tg(BaseGraph::star(n), 2, Mode::Explicit);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                auto d = star_f2_construction(n, i, j);
                CHECK(d.size() == static_cast<std::size_t>(n - 1));
                CHECK(is_dominating(tg, ranks_of(tg, d)).dominating);
            }
        }
    }
}

TEST_CASE("star F_2 size matches the exact solver for n = 2..6") {
    for (int n = 2; n <= 6; ++n) {
        TokenGraph tg(BaseGraph::star(n), 2, Mode::Explicit);
        auto exact = exact_min_dominating(tg);
        REQUIRE(exact.optimal);
        CHECK(exact.set.size() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("star F_k: D_1 on n=6, k=3 has the counted size and dominates the far side") {
    auto res = star_fk_construction(6, 3);
    CHECK(res.plan.p == 2);
    CHECK(res.plan.d1.size() == 6); // pairs of [6] with even sum
    for (const auto& member : res.plan.d1) {
        CHECK(member.front() == 0);
        int sum = 0;
        for (int x : member) sum += x;
        CHECK(sum % 2 == 0);
    }
    // claim: every vertex omitting 0 has a neighbor in D_1
    TokenGraph tg(BaseGraph::star(6), 3, Mode::Explicit);
    std::set<Mask> d1_masks;
    for (const auto& member : res.plan.d1) d1_masks.insert(tg.mask_of_labels(member));
    for_each_subset(6, 3, [&](Mask leaves) {
        Mask v = leaves << 1; // k-subsets of the leaves {1..6}
        bool adjacent_to_d1 = false;
        for (Mask w : tg.neighbor_sets(v))
            if (d1_masks.count(w)) adjacent_to_d1 = true;
        CHECK(adjacent_to_d1);
    });
}

TEST_CASE("star F_k sum identity: no far-side vertex evades D_1") {
    // If S - a = 1 (mod p) for all a in A then k = 1 (mod p), impossible
    // when p divides k-1; checked exhaustively.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 4}, {9, 4}, {10, 5}}) {
        int p = smallest_prime_factor(k - 1);
        for_each_subset(n, k, [&](Mask m) {
            int sum = 0;
            for (int pos : mask_positions(m)) sum += pos + 1;
            bool evades = true;
            for (int pos : mask_positions(m))
                if ((sum - (pos + 1)) % p != 1 % p) evades = false;
            CHECK_FALSE(evades);
        });
    }
}

TEST_CASE("star F_k construction is verified dominating") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 4}, {10, 5}}) {
        auto res = star_fk_construction(n, k);
        CHECK(res.certificate.verified);
        CHECK(res.certificate.size == res.certificate.set.size());
        CHECK(res.certificate.lower_bound <= res.certificate.size);
    }
}

TEST_CASE("star F_k partition covers the remainder exactly once") {
    auto res = star_fk_construction(8, 3);
    std::set<std::vector<int>> seen;
    std::size_t total = 0;
    for (const auto& [key, members] : res.plan.partition) {
        auto [i, j] = key;
        CHECK(j >= (3 - 1) / res.plan.p); // pigeonhole floor
        for (const auto& m : members) {
            CHECK(seen.insert(m).second);
            ++total;
        }
    }
    CHECK(total + res.plan.d1.size() == binomial(8, 2));
}

TEST_CASE("star F_k covers: every class part lies in a cover block of its class") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {10, 4}, {10, 5}}) {
        auto res = star_fk_construction(n, k);
        int p = res.plan.p;
        for (const auto& [key, members] : res.plan.partition) {
            auto [i, j] = key;
            if (res.plan.fallback.count(key)) {
                CHECK(j + 1 > static_cast<int>(res.plan.residue_classes[i].size()));
                continue;
            }
            REQUIRE(res.plan.covers.count(key));
            const auto& blocks = res.plan.covers.at(key);
            for (const auto& blk : blocks) CHECK(blk.size() == static_cast<std::size_t>(j) + 1);
            for (const auto& a : members) {
                std::vector<int> part;
                for (int x : a)
                    if (x != 0 && x % p == i) part.push_back(x);
                CHECK(part.size() == static_cast<std::size_t>(j));
                bool covered = false;
                for (const auto& blk : blocks)
                    if (std::includes(blk.begin(), blk.end(), part.begin(), part.end())) covered = true;
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("star F_k n=12 k=3 ratio within the asymptotic constant plus slack") {
    auto res = star_fk_construction(12, 3);
    int p = res.plan.p;
    double bound = 1.0 - 1.0 / p + 1.0 / (3 + p - 1) + 0.15;
    double ratio = static_cast<double>(res.certificate.size) / static_cast<double>(binomial(12, 2));
    CHECK(ratio <= bound);
}

TEST_CASE("star F_k parameter errors") {
    CHECK_THROWS_WITH_AS(star_fk_construction(8, 2), doctest::Contains("star_f2"), invalid_parameter);
    CHECK_THROWS_AS(star_fk_construction(5, 3), invalid_parameter); // k > n/2
}

TEST_CASE("complete F_2 construction") {
    CHECK(complete_f2_construction(6) == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}});
    CHECK(complete_f2_construction(2) == std::vector<std::vector<int>>{{1, 2}});
    auto d7 = complete_f2_construction(7);
    CHECK(d7.size() == 3);
    TokenGraph tg(BaseGraph::complete(7), 2, Mode::Explicit);
    CHECK(is_dominating(tg, ranks_of(tg, d7)).dominating);
    CHECK_THROWS_AS(complete_f2_construction(1), invalid_parameter);
}

TEST_CASE("complete F_2 matches the exact solver for n = 2..8") {
    for (int n = 2; n <= 8; ++n) {
        TokenGraph tg(BaseGraph::complete(n), 2, Mode::Explicit);
        auto exact = exact_min_dominating(tg);
        REQUIRE(exact.optimal);
        CHECK(exact.set.size() == static_cast<std::size_t>(n / 2));
        CHECK(complete_f2_construction(n).size() == static_cast<std::size_t>(n / 2));
    }
}

TEST_CASE("complete F_3 construction: split halves") {
    auto c6 = complete_f3_construction(6);
    CHECK(c6.set == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
    CHECK(c6.size == 2);
    CHECK(c6.verified);
    CHECK(c6.optimal); // matches the Mantel bound

    auto c14 = complete_f3_construction(14);
    CHECK(c14.size == 14);
    CHECK(c14.lower_bound == 14);
    CHECK(c14.verified);
    CHECK(c14.optimal);

    auto c18 = complete_f3_construction(18);
    CHECK(c18.size == 24);
    CHECK(c18.lower_bound == 24);
    CHECK(c18.optimal);
}

TEST_CASE("complete F_3 is verified dominating for n = 4..12") {
    for (int n = 4; n <= 12; ++n) {
        auto cert = complete_f3_construction(n);
        CHECK(cert.verified);
        CHECK(cert.lower_bound <= cert.size);
    }
}

TEST_CASE("mantel bound never exceeds the exact gamma of F_3(K_n)") {
    for (int n = 6; n <= 8; ++n) {
        TokenGraph tg(BaseGraph::complete(n), 3, Mode::Explicit);
        auto exact = exact_min_dominating(tg);
        REQUIRE(exact.optimal);
        CHECK(mantel_lower_bound_f3(n) <= exact.set.size());
    }
}

TEST_CASE("complete F_2 construction dominates through n = 12") {
    for (int n = 2; n <= 12; ++n) {
        TokenGraph tg(BaseGraph::complete(n), 2, Mode::Explicit);
        auto d = complete_f2_construction(n);
        CHECK(d.size() == static_cast<std::size_t>(n / 2));
        CHECK(is_dominating(tg, ranks_of(tg, d)).dominating);
    }
}

TEST_CASE("complete F_k MIS construction") {
    auto c52 = complete_fk_construction(5, 2);
    CHECK(c52.verified);
    CHECK(c52.size <= 2); // (1/2) C(5,1) = 2.5

    auto c73 = complete_fk_construction(7, 3);
    CHECK(c73.verified);
    CHECK(c73.size <= 7); // (1/3) C(7,2) = 7

    auto k1 = complete_fk_construction(9, 1);
    CHECK(k1.size == 1);
    CHECK(k1.set == std::vector<std::vector<int>>{{1}});

    CHECK_THROWS_AS(complete_fk_construction(5, 3), invalid_parameter);
    CHECK_THROWS_AS(complete_fk_construction(40, 12, 1000), resource_limit);
}

TEST_CASE("complete F_k MIS stays within the independence-number bound") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 3}, {8, 4}, {10, 4}, {12, 5}}) {
        auto cert = complete_fk_construction(n, k);
        CHECK(cert.verified);
        CHECK(cert.size <= complete_fk_alpha_upper(n, k));
    }
}

TEST_CASE("theoretical gamma: proved exact cases") {
    auto s92 = theoretical_gamma("star", 9, 2);
    REQUIRE(s92.exact.has_value());
    CHECK(*s92.exact == 8);

    auto c143 = theoretical_gamma("complete", 14, 3);
    REQUIRE(c143.exact.has_value());
    CHECK(*c143.exact == 14);

    auto c62 = theoretical_gamma("complete", 6, 2);
    REQUIRE(c62.exact.has_value());
    CHECK(*c62.exact == 3);

    CHECK_THROWS_AS(theoretical_gamma("path", 5, 2), invalid_parameter);
}

TEST_CASE("theoretical gamma: strict bound materialization for (complete, 10, 4)") {
    auto g = theoretical_gamma("complete", 10, 4);
    CHECK_FALSE(g.exact.has_value());
    CHECK(g.lower == 8);  // (1/16) C(10,3) = 7.5, strict -> 8
    CHECK(g.upper == 30); // (1/4) C(10,3)
    CHECK(g.degree_lower_form == 9); // ceil(C(10,4)/25)
}

TEST_CASE("theoretical gamma brackets the exact solver") {
    struct Case {
        const char* family;
        int n, k;
    };
    std::vector<Case> cases = {{"star", 4, 2},     {"star", 6, 2},     {"star", 6, 3},
                               {"complete", 6, 2}, {"complete", 7, 3}, {"complete", 6, 3},
                               {"complete", 8, 4}, {"star", 7, 3}};
    for (const auto& c : cases) {
        BaseGraph base = std::string(c.family) == "star" ? BaseGraph::star(c.n) : BaseGraph::complete(c.n);
        TokenGraph tg(std::move(base), c.k, Mode::Explicit);
        auto exact = exact_min_dominating(tg);
        REQUIRE(exact.optimal);
        auto g = theoretical_gamma(c.family, c.n, c.k);
        CHECK(g.lower <= exact.set.size());
        CHECK(g.degree_lower_form <= exact.set.size());
        CHECK(exact.set.size() <= g.upper);
        if (g.exact) CHECK(*g.exact == exact.set.size());
    }
}

TEST_CASE("construction_certificate dispatches by family and k") {
    auto a = construction_certificate("star", 6, 2);
    CHECK(a.method == "star-f2-Dij");
    CHECK(a.size == 5);
    CHECK(a.optimal);

    auto b = construction_certificate("complete", 8, 2);
    CHECK(b.method == "complete-f2-disjoint");
    CHECK(b.size == 4);
    CHECK(b.verified);

    auto c = construction_certificate("complete", 6, 3);
    CHECK(c.method == "complete-f3-split-sts");

    auto d = construction_certificate("star", 8, 3);
    CHECK(d.method == "star-fk-residue");
    CHECK(d.verified);

    auto e = construction_certificate("complete", 8, 4);
    CHECK(e.method == "complete-fk-mis");

    CHECK_THROWS_AS(construction_certificate("grid", 4, 2), invalid_parameter);
}
