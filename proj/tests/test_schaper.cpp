#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defect2/schaper.hpp"

#include <random>

using namespace defect2;

static virtual_specht_sum make_sum(std::initializer_list<std::pair<partition, long>> terms)
{
    virtual_specht_sum s;
    for (const auto& [lam, c] : terms)
        s[lam] = c;
    return s;
}

TEST_CASE("small hand-checked sums at p = 3")
{
    // trivial module: unimodular Gram form, empty sum
    CHECK(jantzen_schaper_sum(partition{3}, 3).empty());
    CHECK(jantzen_schaper_sum(partition{7}, 3).empty());

    // sign module of Sym_3: Gram determinant 3! = 6
    CHECK(jantzen_schaper_sum(partition{1, 1, 1}, 3) ==
          make_sum({{partition{2, 1}, 1}, {partition{3}, -1}}));

    // weight-two rows of the principal block of Sym_7
    CHECK(jantzen_schaper_sum(partition{5, 2}, 3) == make_sum({{partition{7}, 1}}));
    CHECK(jantzen_schaper_sum(partition{4, 2, 1}, 3) ==
          make_sum({{partition{4, 3}, 1}, {partition{5, 2}, 1}}));
    CHECK(jantzen_schaper_sum(partition{1, 1, 1, 1, 1, 1, 1}, 3) ==
          make_sum({{partition{2, 2, 2, 1}, -1},
                    {partition{2, 2, 1, 1, 1}, 1},
                    {partition{4, 1, 1, 1}, -1},
                    {partition{4, 2, 1}, 1},
                    {partition{5, 2}, -1},
                    {partition{7}, 1}}));
}

TEST_CASE("support strictly dominates the argument and stays in its block")
{
    std::mt19937 rng(29);
    for (int i = 0; i < 150; ++i) {
        long n = 1 + static_cast<long>(rng() % 14);
        auto all = partitions_of(n);
        partition lam = all[rng() % all.size()];
        for (long p : {3L, 5L}) {
            auto [core, w] = p_core_weight(lam, p);
            for (const auto& [mu, c] : jantzen_schaper_sum(lam, p)) {
                CHECK(c != 0);
                CHECK(strictly_dominates(mu, lam));
                auto [core2, w2] = p_core_weight(mu, p);
                CHECK(core2 == core);
                CHECK(w2 == w);
            }
        }
    }
}

TEST_CASE("independence of the bead count")
{
    std::mt19937 rng(31);
    for (int i = 0; i < 80; ++i) {
        long n = 1 + static_cast<long>(rng() % 12);
        auto all = partitions_of(n);
        partition lam = all[rng() % all.size()];
        for (long p : {3L, 5L}) {
            auto base = jantzen_schaper_sum(lam, p);
            CHECK(jantzen_schaper_sum(lam, p, lam.n + 1) == base);
            CHECK(jantzen_schaper_sum(lam, p, lam.n + 7) == base);
        }
    }
}

TEST_CASE("p-cores have empty sums")
{
    for (long p : {3L, 5L})
        for (long n = 0; n <= 10; ++n)
            for (const partition& lam : partitions_of(n))
                if (is_p_core(lam, p))
                    CHECK(jantzen_schaper_sum(lam, p).empty());
}
