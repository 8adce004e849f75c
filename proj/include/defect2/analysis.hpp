#pragma once

/* Full per-block pipeline: decomposition matrix, layers, Mullineux table,
 * simple dimensions, Ext-quiver, exponent matrices and the basic-order
 * presentation, bundled for reporting and verification. */

#include "defect2/lattice.hpp"

namespace defect2 {

struct block_analysis {
    block_tables tables;
    block_tables conj_tables; // equals tables when the core is self-conjugate
    bool self_conjugate = false;
    mullineux_table mull;
    std::map<partition, bigint, lex_desc_less> dims;
    ext_quiver quiver;
    std::vector<exponent_matrix> expmats; // theorem gauge, one per block row
    presentation pres;                    // example gauge
};

inline block_analysis analyze_block(const block_descriptor& b,
                                    exponent_gauge gauge = exponent_gauge::example)
{
    block_analysis an;
    an.tables = build_decomposition(b);
    an.self_conjugate = conjugate(b.core) == b.core;
    an.conj_tables = an.self_conjugate ? an.tables
                                       : build_decomposition(conjugate_block(b));
    an.mull = build_mullineux(an.tables.matrix, an.conj_tables.matrix);
    an.dims = simple_dimensions(an.tables.matrix);
    an.quiver = ext_quiver_of(an.tables);
    for (const partition& lam : b.parts)
        an.expmats.push_back(exponent_matrix_of(lam, an.tables, an.conj_tables, an.mull));
    an.pres = build_presentation(an.tables, an.conj_tables, an.mull, an.quiver, gauge);

    // socle-partner cross-check for every row with a socle layer
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        const partition& lam = b.parts[i];
        if (is_p_regular(lam, b.p) && is_p_regular(conjugate(lam), b.p)) {
            socle_partner(lam, an.tables, an.mull); // throws on mismatch
        } else if (!is_p_regular(lam, b.p) && is_p_regular(conjugate(lam), b.p)) {
            const auto& J2 = an.tables.layers.rows[i][2];
            if (J2.size() != 1 || b.regulars[J2[0]] != an.mull.image(conjugate(lam)))
                throw consistency_error("socle layer of singular row " + lam.str() +
                                        " disagrees with Mullineux");
        }
    }
    return an;
}

/* Human-readable tables: the decomposition matrix in the layout customary
 * for these blocks (dimension column, rows and columns lex descending). */
inline std::string render_markdown(const block_analysis& an)
{
    const block_descriptor& b = an.tables.block;
    std::ostringstream os;
    os << "# Block p=" << b.p << ", core=[" << b.core.str() << "], n=" << b.n << "\n\n";
    os << "## Decomposition matrix\n\n";
    os << "| dim | partition |";
    for (const partition& mu : b.regulars)
        os << " (" << mu.str() << ") |";
    os << "\n|---|---|";
    for (std::size_t j = 0; j < b.regulars.size(); ++j)
        os << "---|";
    os << "\n";
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        os << "| " << specht_dimension(b.parts[i]).get_str() << " | (" << b.parts[i].str()
           << ") |";
        for (std::size_t j = 0; j < b.regulars.size(); ++j)
            os << " " << (an.tables.matrix.entries[i][j] ? "1" : ".") << " |";
        os << "\n";
    }
    os << "\n## Simple dimensions\n\n";
    for (const partition& mu : b.regulars)
        os << "- dim D^(" << mu.str() << ") = " << an.dims.at(mu).get_str() << "\n";
    os << "\n## Ext-quiver edges\n\n";
    for (auto [i, j] : an.quiver.edges)
        os << "- (" << an.quiver.vertices[i].str() << ") -- (" << an.quiver.vertices[j].str()
           << ")\n";
    os << "\n## Exponent matrices (theorem gauge)\n\n";
    for (const auto& m : an.expmats) {
        os << "m^(" << m.label.str() << "), index";
        for (const auto& mu : m.index)
            os << " (" << mu.str() << ")";
        os << ":\n";
        for (const auto& row : m.mat) {
            os << "   ";
            for (long v : row)
                os << " " << v;
            os << "\n";
        }
    }
    return os.str();
}

} // namespace defect2
