#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defect2/block.hpp"

using namespace defect2;

/* Independent oracle: generate the weight-two partitions over a core by
 * moving beads up runners of the abacus (one bead up two steps, one bead up
 * twice one step, or two beads on distinct runners up one step each). */
static std::set<partition, lex_desc_less> quotient_generate(long p, const partition& core)
{
    long b = abacus_beads(core, p) + 2 * p; // every runner holds >= 2 beads
    beta_set bs(core, b);
    std::set<long> beads(bs.beta.begin(), bs.beta.end());
    std::vector<std::vector<long>> runner(p); // bead values per runner, descending
    for (long x : beads)
        runner[x % p].push_back(x);
    for (auto& r : runner)
        std::sort(r.rbegin(), r.rend());

    auto emit = [&](std::set<long> moved) {
        beta_set out;
        out.bead_count = b;
        out.beta.assign(moved.begin(), moved.end());
        return out.to_partition();
    };

    std::set<partition, lex_desc_less> result;
    for (long r = 0; r < p; ++r) {
        { // top bead up two steps
            std::set<long> m = beads;
            m.erase(runner[r][0]);
            m.insert(runner[r][0] + 2 * p);
            result.insert(emit(m));
        }
        { // top two beads up one step each
            std::set<long> m = beads;
            m.erase(runner[r][0]);
            m.erase(runner[r][1]);
            m.insert(runner[r][0] + p);
            m.insert(runner[r][1] + p);
            result.insert(emit(m));
        }
        for (long s = r + 1; s < p; ++s) { // two runners, one step each
            std::set<long> m = beads;
            m.erase(runner[r][0]);
            m.erase(runner[s][0]);
            m.insert(runner[r][0] + p);
            m.insert(runner[s][0] + p);
            result.insert(emit(m));
        }
    }
    return result;
}

TEST_CASE("block enumeration")
{
    auto blocks = enumerate_defect_two_blocks(3, 7);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].core == partition{1});
    CHECK(blocks[0].n == 7);

    blocks = enumerate_defect_two_blocks(3, 8);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].core == partition{2});
    CHECK(blocks[1].core == partition{1, 1});

    CHECK(enumerate_defect_two_blocks(3, 5).empty());
    CHECK_THROWS_AS(enumerate_defect_two_blocks(4, 10), std::invalid_argument);
}

TEST_CASE("the principal block of Sym_7 at p = 3")
{
    block_descriptor b = block_from_core(3, partition{1});
    CHECK(b.n == 7);
    std::vector<partition> expected = {
        partition{7},          partition{5, 2},          partition{4, 3},
        partition{4, 2, 1},    partition{4, 1, 1, 1},    partition{3, 2, 1, 1},
        partition{2, 2, 2, 1}, partition{2, 2, 1, 1, 1}, partition{1, 1, 1, 1, 1, 1, 1}};
    CHECK(b.parts == expected);
    std::vector<partition> regs = {partition{7}, partition{5, 2}, partition{4, 3},
                                   partition{4, 2, 1}, partition{3, 2, 1, 1}};
    CHECK(b.regulars == regs);
}

TEST_CASE("block membership equals the abacus oracle")
{
    for (long p : {3L, 5L})
        for (long m = 0; m <= 6; ++m)
            for (const partition& core : partitions_of(m)) {
                if (!is_p_core(core, p))
                    continue;
                block_descriptor b = block_from_core(p, core);
                std::set<partition, lex_desc_less> filter(b.parts.begin(), b.parts.end());
                CHECK(filter == quotient_generate(p, core));
                CHECK(static_cast<long>(b.parts.size()) == p * (p + 3) / 2);
            }
}

TEST_CASE("conjugate blocks")
{
    block_descriptor b = block_from_core(3, partition{1});
    CHECK(conjugate_block(b) == b); // self-conjugate core

    block_descriptor c = block_from_core(3, partition{2});
    block_descriptor cc = conjugate_block(c);
    CHECK(cc.core == partition{1, 1});
    CHECK(conjugate_block(cc) == c);
    std::set<partition, lex_desc_less> conj_parts;
    for (const partition& lam : c.parts)
        conj_parts.insert(conjugate(lam));
    CHECK(conj_parts == std::set<partition, lex_desc_less>(cc.parts.begin(), cc.parts.end()));
}

TEST_CASE("rejects non-cores")
{
    CHECK_THROWS_AS(block_from_core(3, partition{3}), std::invalid_argument);
    CHECK_THROWS_AS(block_from_core(3, partition{2, 1}), std::invalid_argument);
}
