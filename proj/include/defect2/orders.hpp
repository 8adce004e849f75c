#pragma once

/* Exponent matrices, the ambient split algebra A = (+)_lam Mat_{r_lam}(Q),
 * and the basic-order presentation (idempotents e_mu and generators x_munu).
 *
 * Exponent matrices are normalized so that the column of the row label is
 * zero and its row equals the layer index ("theorem gauge"); with layer
 * index d the unique solution is m_ab = (d(b) - d(a) + s)/2 where s = 1 for
 * odd layer difference and s = 2 otherwise.  For a p-singular label with
 * p-regular conjugate the matrix is transported along the Mullineux map from
 * the conjugate block; for doubly singular labels it is the 1x1 zero matrix.
 *
 * Generators are built against a gauge that may renormalize two-element rows
 * to put the nonzero exponent on the lex-descending upper triangle; that is
 * the normalization used in worked examples of these orders, and gauge
 * choices are per-component diagonal shifts that never change the isomorphism
 * type.  The gauge actually used is recorded in presentation::hull and all
 * lattice checks run against it. */

#include "defect2/quiver.hpp"

namespace defect2 {

struct exponent_matrix {
    partition label;
    std::vector<partition> index;       // r_label, lex descending
    std::vector<std::vector<long>> mat; // non-negative integers, zero diagonal

    long at(const partition& a, const partition& b) const
    {
        long i = -1, j = -1;
        for (std::size_t k = 0; k < index.size(); ++k) {
            if (index[k] == a)
                i = static_cast<long>(k);
            if (index[k] == b)
                j = static_cast<long>(k);
        }
        if (i < 0 || j < 0)
            throw std::invalid_argument("exponent_matrix::at: label not in index");
        return mat[i][j];
    }

    bool operator==(const exponent_matrix& o) const
    {
        return label == o.label && index == o.index && mat == o.mat;
    }
};

namespace detail {

inline std::vector<long> layer_index_of_row(const block_tables& t, long row)
{
    std::vector<long> r;
    for (int l = 0; l < 3; ++l)
        for (long c : t.layers.rows[row][l])
            r.push_back(c);
    std::sort(r.begin(), r.end());
    std::vector<long> d;
    for (long c : r) {
        for (int l = 0; l < 3; ++l)
            for (long cc : t.layers.rows[row][l])
                if (cc == c)
                    d.push_back(l);
    }
    return d; // layer per column of r_row, in column order
}

inline exponent_matrix theorem_gauge_regular(const block_tables& t, long row)
{
    exponent_matrix m;
    m.label = t.block.parts[row];
    std::vector<long> cols = t.matrix.r_of(row);
    std::vector<long> d = layer_index_of_row(t, row);
    for (long c : cols)
        m.index.push_back(t.block.regulars[c]);
    const std::size_t k = cols.size();
    m.mat.assign(k, std::vector<long>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b)
                continue;
            long diff = d[b] - d[a];
            long s = (diff % 2 != 0) ? 1 : 2;
            m.mat[a][b] = (diff + s) / 2;
        }
    return m;
}

} // namespace detail

/* Theorem-gauge exponent matrix of one row label.  For p-singular labels the
 * conjugate block's tables and the Mullineux table (conj -> block) are
 * consulted. */
inline exponent_matrix exponent_matrix_of(const partition& lam0, const block_tables& t,
                                          const block_tables& conj_t,
                                          const mullineux_table& mull)
{
    long row = t.block.row_index(lam0);
    if (row < 0)
        throw std::invalid_argument("exponent_matrix_of: partition not in block");
    const long p = t.block.p;
    if (is_p_regular(lam0, p))
        return detail::theorem_gauge_regular(t, row);

    partition tau = conjugate(lam0);
    if (!is_p_regular(tau, p)) {
        exponent_matrix m; // doubly singular: single constituent, zero matrix
        m.label = lam0;
        for (long c : t.matrix.r_of(row))
            m.index.push_back(t.block.regulars[c]);
        if (m.index.size() != 1)
            throw consistency_error("doubly singular row " + lam0.str() + " is not 1x1");
        m.mat = {{0}};
        return m;
    }

    // transport from the conjugate block: m^lam0_{mu nu} = m^tau_{mu^M nu^M}
    long conj_row = conj_t.block.row_index(tau);
    exponent_matrix src = detail::theorem_gauge_regular(conj_t, conj_row);
    exponent_matrix m;
    m.label = lam0;
    for (long c : t.matrix.r_of(row))
        m.index.push_back(t.block.regulars[c]);
    // inverse Mullineux: regulars(block) -> regulars(conj block)
    auto to_conj = [&](const partition& mu) -> partition {
        for (std::size_t i = 0; i < mull.map.size(); ++i)
            if (mull.to.regulars[mull.map[i]] == mu)
                return mull.from.regulars[i];
        throw consistency_error("mullineux preimage missing for " + mu.str());
    };
    const std::size_t k = m.index.size();
    m.mat.assign(k, std::vector<long>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            m.mat[a][b] = src.at(to_conj(m.index[a]), to_conj(m.index[b]));
    return m;
}

/* Renormalize a two-element row so the nonzero exponent sits at (0,1), the
 * lex-descending upper triangle.  Rows of other sizes are left in theorem
 * gauge. */
inline exponent_matrix example_gauge(exponent_matrix m)
{
    if (m.index.size() == 2 && m.mat[1][0] != 0) {
        std::swap(m.mat[0][1], m.mat[1][0]);
    }
    return m;
}

/* (dim D^mu)_{mu in r_lam0} in index order; sums to d_lam0. */
inline std::vector<bigint> dimension_vector(const exponent_matrix& m,
                                            const std::map<partition, bigint, lex_desc_less>& dims)
{
    std::vector<bigint> out;
    for (const partition& mu : m.index)
        out.push_back(dims.at(mu));
    return out;
}

/* --- the ambient algebra ------------------------------------------------ */

/* Sparse element of A: (row label index, a, b) -> rational, where a and b
 * index r_{row} in column order. */
struct algebra_element {
    std::map<std::tuple<long, long, long>, rational> terms;

    void add_term(long row, long a, long b, const rational& c)
    {
        if (c == 0)
            return;
        auto key = std::make_tuple(row, a, b);
        auto it = terms.find(key);
        if (it == terms.end())
            terms.emplace(key, c);
        else {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    bool operator==(const algebra_element& o) const { return terms == o.terms; }
};

/* Coordinate bookkeeping for A: one matrix block per row of the block. */
struct block_algebra {
    block_descriptor block;
    std::vector<std::vector<long>> r; // per row: column indices with entry 1
    std::vector<long> offset;         // coordinate offset per row
    long dim = 0;                     // sum of |r|^2

    explicit block_algebra(const block_tables& t) : block(t.block)
    {
        for (std::size_t i = 0; i < block.parts.size(); ++i) {
            r.push_back(t.matrix.r_of(static_cast<long>(i)));
            offset.push_back(dim);
            dim += static_cast<long>(r.back().size() * r.back().size());
        }
    }

    long rows() const { return static_cast<long>(r.size()); }
    long rank_of(long row) const { return static_cast<long>(r[row].size()); }

    long coord(long row, long a, long b) const
    {
        return offset[row] + a * rank_of(row) + b;
    }

    /* position of regular column mu inside r[row], or -1 */
    long pos_in_row(long row, long col) const
    {
        for (std::size_t a = 0; a < r[row].size(); ++a)
            if (r[row][a] == col)
                return static_cast<long>(a);
        return -1;
    }

    algebra_element unit(long row, long a, long b, const rational& c = rational(1)) const
    {
        algebra_element e;
        e.add_term(row, a, b, c);
        return e;
    }

    algebra_element identity() const
    {
        algebra_element e;
        for (long row = 0; row < rows(); ++row)
            for (long a = 0; a < rank_of(row); ++a)
                e.add_term(row, a, a, 1);
        return e;
    }

    /* componentwise matrix-unit multiplication */
    algebra_element multiply(const algebra_element& x, const algebra_element& y) const
    {
        algebra_element out;
        for (const auto& [kx, cx] : x.terms) {
            auto [row, a, b] = kx;
            for (long c = 0; c < rank_of(row); ++c) {
                auto it = y.terms.find(std::make_tuple(row, b, c));
                if (it != y.terms.end())
                    out.add_term(row, a, c, cx * it->second);
            }
        }
        return out;
    }

    algebra_element scale(const algebra_element& x, const rational& c) const
    {
        algebra_element out;
        for (const auto& [k, v] : x.terms) {
            auto [row, a, b] = k;
            out.add_term(row, a, b, v * c);
        }
        return out;
    }

    algebra_element sum(const algebra_element& x, const algebra_element& y) const
    {
        algebra_element out = x;
        for (const auto& [k, v] : y.terms) {
            auto [row, a, b] = k;
            out.add_term(row, a, b, v);
        }
        return out;
    }
};

/* --- presentation ------------------------------------------------------- */

struct presentation {
    block_descriptor block;
    std::vector<std::pair<partition, algebra_element>> idempotents; // per regular mu
    // directed edge (mu, nu) -> generator x_munu
    std::vector<std::tuple<partition, partition, algebra_element>> generators;
    std::vector<exponent_matrix> hull; // gauge exponents per row used above
};

enum class exponent_gauge { theorem, example };

/* e_mu = sum over rows lam in c_mu of eps^lam_{mu mu}. */
inline algebra_element idempotent_of(const block_algebra& A, long col)
{
    algebra_element e;
    for (long row = 0; row < A.rows(); ++row) {
        long a = A.pos_in_row(row, col);
        if (a >= 0)
            e.add_term(row, a, a, 1);
    }
    return e;
}

inline presentation build_presentation(const block_tables& t, const block_tables& conj_t,
                                       const mullineux_table& mull, const ext_quiver& q,
                                       exponent_gauge gauge = exponent_gauge::example)
{
    presentation pres;
    pres.block = t.block;
    block_algebra A(t);

    for (std::size_t i = 0; i < t.block.parts.size(); ++i) {
        exponent_matrix m = exponent_matrix_of(t.block.parts[i], t, conj_t, mull);
        pres.hull.push_back(gauge == exponent_gauge::example ? example_gauge(std::move(m))
                                                             : std::move(m));
    }

    for (std::size_t j = 0; j < t.block.regulars.size(); ++j)
        pres.idempotents.emplace_back(t.block.regulars[j],
                                      idempotent_of(A, static_cast<long>(j)));

    for (auto [i, j] : q.edges) {
        long cmu = t.block.col_index(q.vertices[i]);
        long cnu = t.block.col_index(q.vertices[j]);
        // common rows of the two columns
        std::vector<long> common;
        for (long r : t.matrix.c_of(cmu))
            if (t.matrix.entries[r][cnu])
                common.push_back(r);
        if (common.size() != 2)
            throw consistency_error("edge " + q.vertices[i].str() + "|" + q.vertices[j].str() +
                                    " has |c cap c| != 2");
        // common[0] is the lex-greater row (parts are lex descending)
        long rlam = common[0], reta = common[1];
        rational ratio(specht_dimension(t.block.parts[rlam]),
                       specht_dimension(t.block.parts[reta]));
        ratio.canonicalize();

        for (auto [cfrom, cto] : {std::make_pair(cmu, cnu), std::make_pair(cnu, cmu)}) {
            const partition& from = t.block.regulars[cfrom];
            const partition& to = t.block.regulars[cto];
            bool plus_form = lex_compare(from, to) > 0;
            algebra_element x;
            for (long r : {rlam, reta}) {
                long a = A.pos_in_row(r, cfrom), b = A.pos_in_row(r, cto);
                rational coeff = pow_p_q(t.block.p, pres.hull[r].at(from, to));
                if (!plus_form && r == reta)
                    coeff *= -ratio;
                x.add_term(r, a, b, coeff);
            }
            pres.generators.emplace_back(from, to, x);
        }
    }
    return pres;
}

} // namespace defect2
