#pragma once

/* Decomposition matrix and Jantzen-Schaper layers of a defect-two block.
 *
 * Rows are processed in lex-descending order (a linear extension of
 * dominance).  For each row lam the Jantzen-Schaper sum is expanded into
 * simple classes through the rows already computed; the expanded coefficient
 * of D^mu is the filtration layer of mu in row lam (0 = top, 1 = middle,
 * 2 = socle) and is positive exactly where the decomposition number is 1.
 * Every structural property of the weight-two layer theory is asserted along
 * the way; a violation aborts with a diagnostic naming the offending row,
 * which signals a bug in the sum formula rather than bad input. */

#include "defect2/block.hpp"
#include "defect2/schaper.hpp"

#include <array>
#include <optional>

namespace defect2 {

/* Internal cross-check failure: the computation contradicts the weight-two
 * structure theory.  Distinct from invalid_argument (bad user input). */
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

struct decomposition_matrix {
    block_descriptor block;
    std::vector<std::vector<int>> entries; // parts x regulars, values 0/1

    std::vector<long> r_of(long row) const
    {
        std::vector<long> out;
        for (std::size_t j = 0; j < entries[row].size(); ++j)
            if (entries[row][j])
                out.push_back(static_cast<long>(j));
        return out;
    }

    std::vector<long> c_of(long col) const
    {
        std::vector<long> out;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i][col])
                out.push_back(static_cast<long>(i));
        return out;
    }

    /* Cartan entry (D^T D)_{ij} = |c_i  cap c_j| */
    long cartan(long i, long j) const
    {
        long c = 0;
        for (std::size_t r = 0; r < entries.size(); ++r)
            if (entries[r][i] && entries[r][j])
                ++c;
        return c;
    }

    bool operator==(const decomposition_matrix& o) const
    {
        return block == o.block && entries == o.entries;
    }
};

/* Per row: column indices in layers J0, J1, J2 (disjoint, union = r_lam). */
struct layer_table {
    std::vector<std::array<std::vector<long>, 3>> rows;

    bool operator==(const layer_table& o) const { return rows == o.rows; }
};

struct block_tables {
    block_descriptor block;
    decomposition_matrix matrix;
    layer_table layers;
};

inline block_tables build_decomposition(const block_descriptor& b)
{
    const long nrows = static_cast<long>(b.parts.size());
    const long ncols = static_cast<long>(b.regulars.size());
    block_tables t;
    t.block = b;
    t.matrix.block = b;
    t.matrix.entries.assign(nrows, std::vector<int>(ncols, 0));
    t.layers.rows.assign(nrows, {});

    std::map<partition, long, lex_desc_less> row_of;
    for (long i = 0; i < nrows; ++i)
        row_of[b.parts[i]] = i;

    for (long i = 0; i < nrows; ++i) {
        const partition& lam = b.parts[i];
        virtual_specht_sum js = jantzen_schaper_sum(lam, b.p);

        std::vector<long> expanded(ncols, 0);
        for (const auto& [mu, coeff] : js) {
            auto it = row_of.find(mu);
            if (it == row_of.end())
                throw consistency_error("jantzen_schaper_sum left the block at row " + lam.str() +
                                        " (term " + mu.str() + ")");
            if (it->second >= i)
                throw consistency_error("jantzen_schaper_sum support does not dominate " + lam.str());
            for (long j = 0; j < ncols; ++j)
                expanded[j] += coeff * t.matrix.entries[it->second][j];
        }

        const bool reg = is_p_regular(lam, b.p);
        const bool conj_reg = is_p_regular(conjugate(lam), b.p);
        long twos = 0, ones = 0;
        for (long j = 0; j < ncols; ++j) {
            long c = expanded[j];
            if (c < 0 || c > 2)
                throw consistency_error("layer coefficient " + std::to_string(c) +
                                        " outside {0,1,2} at row " + lam.str());
            twos += (c == 2);
            ones += (c == 1);
        }
        if (twos != (conj_reg ? 1 : 0))
            throw consistency_error("socle layer count wrong at row " + lam.str());
        if (reg && conj_reg && ones == 0)
            throw consistency_error("empty middle layer at doubly regular row " + lam.str());
        if (!reg && !conj_reg && ones != 1)
            throw consistency_error("doubly singular row " + lam.str() + " is not a singleton");

        auto& layer = t.layers.rows[i];
        for (long j = 0; j < ncols; ++j) {
            if (reg && b.regulars[j] == lam) {
                if (expanded[j] != 0)
                    throw consistency_error("diagonal coefficient nonzero at row " + lam.str());
                t.matrix.entries[i][j] = 1;
                layer[0].push_back(j);
            } else if (expanded[j] > 0) {
                t.matrix.entries[i][j] = 1;
                layer[expanded[j]].push_back(j);
            }
        }
        if (!reg && !layer[0].empty())
            throw consistency_error("J0 nonempty at p-singular row " + lam.str());
    }
    return t;
}

/* Unique solution of d_lam = sum_{mu in r_lam} dim D^mu over the regular
 * rows; aborts on a non-positive value or a row sum mismatch. */
inline std::map<partition, bigint, lex_desc_less>
simple_dimensions(const decomposition_matrix& D)
{
    const block_descriptor& b = D.block;
    std::map<partition, bigint, lex_desc_less> dim;
    for (const partition& mu : b.regulars) { // lex descending: dominating cols first
        long row = b.row_index(mu);
        bigint d = specht_dimension(mu);
        for (long j : D.r_of(row))
            if (b.regulars[j] != mu)
                d -= dim.at(b.regulars[j]);
        if (d <= 0)
            throw consistency_error("non-positive simple dimension at " + mu.str());
        dim[mu] = d;
    }
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        bigint s = 0;
        for (long j : D.r_of(static_cast<long>(i)))
            s += dim.at(b.regulars[j]);
        if (s != specht_dimension(b.parts[i]))
            throw consistency_error("dimension column mismatch at row " + b.parts[i].str());
    }
    return dim;
}

/* Bijection regulars(conjugate block) -> regulars(block): mu' maps to the
 * unique column whose row set is the conjugate of c_{mu'}.  Columns of a
 * unitriangular 0/1 matrix are pairwise distinct, so failure to match
 * uniquely signals a decomposition bug. */
struct mullineux_table {
    block_descriptor from; // conjugate block
    block_descriptor to;   // block
    std::vector<long> map; // index into from.regulars -> index into to.regulars

    partition image(const partition& mu_conj) const
    {
        long i = from.col_index(mu_conj);
        if (i < 0)
            throw std::invalid_argument("mullineux_table: not a regular label of the source block");
        return to.regulars[map[i]];
    }

    bool operator==(const mullineux_table& o) const
    {
        return from == o.from && to == o.to && map == o.map;
    }
};

inline mullineux_table build_mullineux(const decomposition_matrix& D,
                                       const decomposition_matrix& Dconj)
{
    mullineux_table m;
    m.from = Dconj.block;
    m.to = D.block;
    for (std::size_t jc = 0; jc < Dconj.block.regulars.size(); ++jc) {
        std::set<partition, lex_desc_less> target;
        for (long rc : Dconj.c_of(static_cast<long>(jc)))
            target.insert(conjugate(Dconj.block.parts[rc]));
        long found = -1;
        for (std::size_t j = 0; j < D.block.regulars.size(); ++j) {
            std::set<partition, lex_desc_less> cset;
            for (long r : D.c_of(static_cast<long>(j)))
                cset.insert(D.block.parts[r]);
            if (cset == target) {
                if (found >= 0)
                    throw consistency_error("mullineux: ambiguous column match for " +
                                            Dconj.block.regulars[jc].str());
                found = static_cast<long>(j);
            }
        }
        if (found < 0)
            throw consistency_error("mullineux: no column match for " +
                                    Dconj.block.regulars[jc].str());
        m.map.push_back(found);
    }
    // bijectivity
    std::set<long> image(m.map.begin(), m.map.end());
    if (image.size() != m.map.size() || m.map.size() != D.block.regulars.size())
        throw consistency_error("mullineux: not a bijection");
    return m;
}

/* lam^(T M) when lam and lam^T are both p-regular; must equal the unique
 * socle-layer label of row lam. */
inline std::optional<partition> socle_partner(const partition& lam, const block_tables& t,
                                              const mullineux_table& mull)
{
    long row = t.block.row_index(lam);
    if (row < 0)
        throw std::invalid_argument("socle_partner: partition not in block");
    partition lamT = conjugate(lam);
    if (!(is_p_regular(lam, t.block.p) && is_p_regular(lamT, t.block.p)))
        return std::nullopt;
    partition s = mull.image(lamT);
    const auto& J2 = t.layers.rows[row][2];
    if (J2.size() != 1 || t.block.regulars[J2[0]] != s)
        throw consistency_error("socle partner of " + lam.str() +
                                " disagrees with layer table");
    return s;
}

} // namespace defect2
