#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defect2/quiver.hpp"

using namespace defect2;

TEST_CASE("golden quiver of the Sym_7 principal block at p = 3")
{
    block_tables t = build_decomposition(block_from_core(3, partition{1}));
    ext_quiver q = ext_quiver_of(t);

    auto e = [&](const partition& a, const partition& b) {
        return q.has_edge(q.vertex_index(a), q.vertex_index(b));
    };
    CHECK(q.edges.size() == 6);
    CHECK(e(partition{7}, partition{4, 2, 1}));
    CHECK(e(partition{7}, partition{3, 2, 1, 1}));
    CHECK(e(partition{7}, partition{5, 2}));
    CHECK(e(partition{4, 3}, partition{4, 2, 1}));
    CHECK(e(partition{4, 3}, partition{3, 2, 1, 1}));
    CHECK(e(partition{4, 3}, partition{5, 2}));

    // bipartition via relative p-signs
    std::set<partition, lex_desc_less> plus, minus;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        (q.signs[i] > 0 ? plus : minus).insert(q.vertices[i]);
    CHECK(plus == std::set<partition, lex_desc_less>{partition{7}, partition{4, 3}});
    CHECK(minus == std::set<partition, lex_desc_less>{partition{5, 2}, partition{4, 2, 1},
                                                      partition{3, 2, 1, 1}});

    check_report rep = validate_quiver(q, t.matrix, t.layers);
    CHECK(rep.all_pass());
}

TEST_CASE("validation reports a bipartiteness failure for an odd cycle")
{
    block_tables t = build_decomposition(block_from_core(3, partition{1}));
    ext_quiver q = ext_quiver_of(t);
    // force an odd cycle: connect the two same-sign vertices (7) and (4,3)
    q.edges.insert({q.vertex_index(partition{4, 3}), q.vertex_index(partition{7})});
    check_report rep = validate_quiver(q, t.matrix, t.layers);
    bool bip_failed = false;
    for (const auto& c : rep.checks)
        if (c.id == "bipartite" && !c.pass)
            bip_failed = true;
    CHECK(bip_failed);
}

TEST_CASE("socle partners share the sign of their vertex")
{
    for (long n = 6; n <= 12; ++n)
        for (const auto& b : enumerate_defect_two_blocks(3, n)) {
            block_tables t = build_decomposition(b);
            ext_quiver q = ext_quiver_of(t);
            block_tables tc =
                conjugate(b.core) == b.core ? t : build_decomposition(conjugate_block(b));
            mullineux_table m = build_mullineux(t.matrix, tc.matrix);
            for (const partition& lam : b.regulars) {
                if (!is_p_regular(conjugate(lam), b.p))
                    continue;
                partition partner = m.image(conjugate(lam));
                CHECK(q.signs[q.vertex_index(lam)] == q.signs[q.vertex_index(partner)]);
            }
        }
}

TEST_CASE("edge criterion agrees with layer adjacency in every common row")
{
    for (long n = 6; n <= 12; ++n)
        for (const auto& b : enumerate_defect_two_blocks(3, n)) {
            block_tables t = build_decomposition(b);
            ext_quiver q = ext_quiver_of(t);
            CHECK(validate_quiver(q, t.matrix, t.layers).all_pass());
        }
}

TEST_CASE("DOT round trip")
{
    block_tables t = build_decomposition(block_from_core(3, partition{1}));
    ext_quiver q = ext_quiver_of(t);
    CHECK(parse_dot(emit_dot(q)) == q);
}
