#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defect2/analysis.hpp"

using namespace defect2;

namespace {
const partition lam{7}, mu{5, 2}, nu{4, 3}, eta{4, 2, 1}, teta{3, 2, 1, 1};
const partition tnu{2, 2, 2, 1}, tmu{2, 2, 1, 1, 1}, tlam{1, 1, 1, 1, 1, 1, 1}, phi{4, 1, 1, 1};

algebra_element make_elem(const block_algebra& A,
                          std::initializer_list<std::tuple<partition, partition, partition, rational>> terms)
{
    algebra_element e;
    for (const auto& [row_label, a_label, b_label, c] : terms) {
        long row = A.block.row_index(row_label);
        REQUIRE(row >= 0);
        long a = A.pos_in_row(row, A.block.col_index(a_label));
        long b = A.pos_in_row(row, A.block.col_index(b_label));
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        e.add_term(row, a, b, c);
    }
    return e;
}

/* componentwise equality up to one p-unit per component */
bool component_unit_match(const algebra_element& x, const algebra_element& y, long p)
{
    if (x.terms.size() != y.terms.size())
        return false;
    auto it = y.terms.begin();
    for (const auto& [k, c] : x.terms) {
        if (it->first != k)
            return false;
        rational ratio = c / it->second;
        ratio.canonicalize();
        if (!is_p_unit(ratio, p))
            return false;
        ++it;
    }
    return true;
}
} // namespace

TEST_CASE("golden exponent matrices in the stated indexing")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));

    // 4x4 matrices, rows/columns in the indexing (mu, lam, nu, eta)
    exponent_matrix meta = an.expmats[an.tables.block.row_index(eta)];
    std::vector<partition> idx = {mu, lam, nu, eta};
    std::vector<std::vector<long>> golden = {
        {0, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}};
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            CHECK(meta.at(idx[i], idx[j]) == golden[i][j]);

    exponent_matrix mteta = an.expmats[an.tables.block.row_index(teta)];
    std::vector<partition> idx2 = {eta, lam, nu, teta};
    for (std::size_t i = 0; i < idx2.size(); ++i)
        for (std::size_t j = 0; j < idx2.size(); ++j)
            CHECK(mteta.at(idx2[i], idx2[j]) == golden[i][j]);

    // 2x2 matrices: the gauge-invariant off-diagonal sum is 1
    for (const partition& label : {mu, nu, tnu, tmu}) {
        exponent_matrix m = an.expmats[an.tables.block.row_index(label)];
        REQUIRE(m.index.size() == 2);
        CHECK(m.mat[0][1] + m.mat[1][0] == 1);
        CHECK(m.mat[0][0] == 0);
        CHECK(m.mat[1][1] == 0);
    }

    // 1x1 matrices
    for (const partition& label : {lam, phi, tlam}) {
        exponent_matrix m = an.expmats[an.tables.block.row_index(label)];
        CHECK(m.mat == std::vector<std::vector<long>>{{0}});
    }
}

TEST_CASE("theorem-gauge conditions hold for every regular row of small blocks")
{
    for (long n = 6; n <= 12; ++n)
        for (const auto& b : enumerate_defect_two_blocks(3, n)) {
            block_analysis an = analyze_block(b);
            for (std::size_t r = 0; r < b.parts.size(); ++r) {
                const exponent_matrix& m = an.expmats[r];
                const std::size_t k = m.index.size();
                // triangle inequality and the sum bound
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t c = 0; c < k; ++c) {
                        if (a != c) {
                            long s = m.mat[a][c] + m.mat[c][a];
                            CHECK(s > 0);
                            CHECK(s <= 2);
                        }
                        for (std::size_t d = 0; d < k; ++d)
                            CHECK(m.mat[a][d] + m.mat[d][c] >= m.mat[a][c]);
                    }
                if (!is_p_regular(b.parts[r], b.p))
                    continue;
                // zero column at the row label, layer row at the row label
                long self = -1;
                for (std::size_t a = 0; a < k; ++a)
                    if (m.index[a] == b.parts[r])
                        self = static_cast<long>(a);
                REQUIRE(self >= 0);
                for (std::size_t a = 0; a < k; ++a) {
                    CHECK(m.mat[a][self] == 0);
                    long layer = -1;
                    for (int l = 0; l < 3; ++l)
                        for (long c : an.tables.layers.rows[r][l])
                            if (b.regulars[c] == m.index[a])
                                layer = l;
                    CHECK(m.mat[self][a] == layer);
                }
            }
        }
}

TEST_CASE("edge criterion: off-diagonal sums distinguish quiver edges")
{
    for (long n = 6; n <= 12; ++n)
        for (const auto& b : enumerate_defect_two_blocks(3, n)) {
            block_analysis an = analyze_block(b);
            for (std::size_t r = 0; r < b.parts.size(); ++r) {
                const exponent_matrix& m = an.expmats[r];
                for (std::size_t a = 0; a < m.index.size(); ++a)
                    for (std::size_t c = a + 1; c < m.index.size(); ++c) {
                        bool edge = an.quiver.has_edge(an.quiver.vertex_index(m.index[a]),
                                                       an.quiver.vertex_index(m.index[c]));
                        CHECK((m.mat[a][c] + m.mat[c][a]) == (edge ? 1 : 2));
                    }
            }
        }
}

TEST_CASE("dimension vectors")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    const block_descriptor& b = an.tables.block;

    auto dv = dimension_vector(an.expmats[b.row_index(eta)], an.dims);
    CHECK(dv == std::vector<bigint>{1, 13, 1, 20}); // index (7),(5,2),(4,3),(4,2,1)
    CHECK(dimension_vector(an.expmats[b.row_index(lam)], an.dims) == std::vector<bigint>{1});
    CHECK(dimension_vector(an.expmats[b.row_index(tlam)], an.dims) == std::vector<bigint>{1});

    for (std::size_t r = 0; r < b.parts.size(); ++r) {
        bigint total = 0;
        for (const bigint& d : dimension_vector(an.expmats[r], an.dims))
            total += d;
        CHECK(total == specht_dimension(b.parts[r]));
    }
}

TEST_CASE("idempotents")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    block_algebra A(an.tables);

    std::map<partition, algebra_element, lex_desc_less> e;
    for (const auto& [m, x] : an.pres.idempotents)
        e[m] = x;
    CHECK(e.at(lam).terms.size() == 5);
    CHECK(e.at(eta).terms.size() == 3);

    algebra_element total;
    for (const auto& [m, x] : e) {
        CHECK(A.multiply(x, x) == x);
        for (const auto& [m2, y] : e)
            if (!(m == m2))
                CHECK(A.multiply(x, y).terms.empty());
        total = A.sum(total, x);
    }
    CHECK(total == A.identity());
}

TEST_CASE("golden presentation matches the worked generator list up to component units")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    block_algebra A(an.tables);
    const long p = 3;

    std::map<std::pair<partition, partition>, algebra_element> expected;
    expected[{lam, eta}] =
        make_elem(A, {{eta, lam, eta, 1}, {teta, lam, eta, 3}});
    expected[{eta, lam}] =
        make_elem(A, {{eta, eta, lam, 3}, {teta, eta, lam, -1}});
    expected[{lam, teta}] =
        make_elem(A, {{teta, lam, teta, 1}, {tnu, lam, teta, 3}});
    expected[{teta, lam}] =
        make_elem(A, {{teta, teta, lam, 3}, {tnu, teta, lam, -1}});
    expected[{lam, mu}] = make_elem(A, {{mu, lam, mu, 3}, {eta, lam, mu, 3}});
    expected[{mu, lam}] = make_elem(A, {{mu, mu, lam, 1}, {eta, mu, lam, -1}});
    expected[{nu, eta}] =
        make_elem(A, {{eta, nu, eta, 1}, {teta, nu, eta, 3}});
    expected[{eta, nu}] =
        make_elem(A, {{eta, eta, nu, 3}, {teta, eta, nu, -1}});
    expected[{nu, teta}] =
        make_elem(A, {{teta, nu, teta, 1}, {tmu, nu, teta, 3}});
    expected[{teta, nu}] =
        make_elem(A, {{teta, teta, nu, 3}, {tmu, teta, nu, -1}});
    expected[{mu, nu}] = make_elem(A, {{nu, mu, nu, 3}, {eta, mu, nu, 1}});
    expected[{nu, mu}] = make_elem(A, {{nu, nu, mu, 1}, {eta, nu, mu, -3}});

    CHECK(an.pres.generators.size() == 12);
    int exact = 0;
    for (const auto& [from, to, x] : an.pres.generators) {
        auto it = expected.find({from, to});
        REQUIRE(it != expected.end());
        CHECK(component_unit_match(x, it->second, p));
        if (x == it->second)
            ++exact;
    }
    CHECK(exact >= 8); // the remaining four differ by the dimension-ratio unit

    // a hand-multiplied product of two generators
    auto g = [&](const partition& a, const partition& b) {
        for (const auto& [from, to, x] : an.pres.generators)
            if (from == a && to == b)
                return x;
        REQUIRE(false);
        return algebra_element{};
    };
    CHECK(A.multiply(g(lam, eta), g(eta, lam)) ==
          make_elem(A, {{eta, lam, lam, 3}, {teta, lam, lam, -3}}));
}

TEST_CASE("generator components carry the hull exponents")
{
    for (long n = 6; n <= 11; ++n)
        for (const auto& b : enumerate_defect_two_blocks(3, n)) {
            block_analysis an = analyze_block(b);
            for (const auto& [from, to, x] : an.pres.generators)
                for (const auto& [k, c] : x.terms) {
                    auto [row, a, bb] = k;
                    CHECK(valuation(c, b.p) == an.pres.hull[row].at(from, to));
                }
        }
}
