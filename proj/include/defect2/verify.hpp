#pragma once

/* Verification suite for a constructed presentation: saturates the generated
 * order inside A and certifies it against the block invariants.
 *
 *  1. self-dual          Lambda^sharp = Lambda under the weighted trace form
 *  2. graduated-projection  eps^lam Lambda matches the hull exponents
 *  3. cartan             rank e_mu Lambda e_nu = |c_mu cap c_nu|
 *  4. radical-square     dim_k e_mu (J/J^2) e_nu = 1 exactly on quiver edges
 *  5. loewy-5            J^5 inside p Lambda, J^4 not
 *  6. cycle-trace        quiver 4-cycles have unit trace, back-and-forth zero
 *  7. amalgamation       projections of e_mu Lambda e_mu are the expected
 *                        congruence lattices
 *
 * Self-duality is tested as integrality plus unimodular covolume: the Gram
 * determinant of the canonical basis has valuation 2*(sum of pivot
 * valuations) - 2N, so Lambda = Lambda^sharp iff T is integral on Lambda and
 * the pivot valuations sum to N.  On small blocks the dual lattice is also
 * compared entry by entry. */

#include "defect2/analysis.hpp"

#include <random>

namespace defect2 {

enum class mutation_kind { none, exponent_bump, drop_generator, scale_p };

inline presentation apply_mutation(presentation pres, mutation_kind kind, std::size_t idx)
{
    if (kind == mutation_kind::none)
        return pres;
    if (idx >= pres.generators.size())
        throw std::invalid_argument("mutation index out of range");
    algebra_element& x = std::get<2>(pres.generators[idx]);
    switch (kind) {
    case mutation_kind::exponent_bump: {
        // raise the exponent of the first component term by one
        auto it = x.terms.begin();
        it->second *= pres.block.p;
        break;
    }
    case mutation_kind::drop_generator:
        pres.generators.erase(pres.generators.begin() + static_cast<long>(idx));
        break;
    case mutation_kind::scale_p:
        for (auto& [k, c] : x.terms)
            c *= pres.block.p;
        break;
    default:
        break;
    }
    return pres;
}

namespace detail {

/* restriction of a lattice to the coordinates selected by pred */
template <class Pred>
p_local_lattice project_lattice(const p_local_lattice& L, Pred pred)
{
    p_local_lattice out(L.p, L.dim);
    for (const auto& [t, r] : L.rows) {
        sparse_vec v;
        for (const auto& [c, x] : r)
            if (pred(c))
                v.emplace_back(c, x);
        out.insert(std::move(v));
    }
    out.canonicalize();
    return out;
}

struct coord_labels {
    std::vector<long> row, a_col, b_col; // per coordinate: block row, column labels

    coord_labels(const block_algebra& A)
        : row(A.dim), a_col(A.dim), b_col(A.dim)
    {
        for (long r = 0; r < A.rows(); ++r) {
            long k = A.rank_of(r);
            for (long a = 0; a < k; ++a)
                for (long b = 0; b < k; ++b) {
                    long t = A.coord(r, a, b);
                    row[t] = r;
                    a_col[t] = A.r[r][a];
                    b_col[t] = A.r[r][b];
                }
        }
    }
};

inline long pivot_val_sum(const p_local_lattice& L)
{
    long s = 0;
    for (const auto& [t, v] : L.pivot_profile())
        s += v;
    return s;
}

} // namespace detail

/* Matrix-level and exponent-matrix invariants of one analyzed block:
 * 0/1 unitriangular entries, column sums, Cartan bounds, and the four
 * defining exponent-matrix conditions (zero column and layer row at the
 * label, the difference relation, the sum bound) plus the triangle
 * inequality. */
inline check_report structural_checks(const block_analysis& an)
{
    check_report rep;
    const block_descriptor& b = an.tables.block;
    const auto& E = an.tables.matrix.entries;
    const long nrows = static_cast<long>(b.parts.size());
    const long ncols = static_cast<long>(b.regulars.size());

    bool entries_ok = true, colsum_ok = true, cartan_ok = true;
    for (long i = 0; i < nrows; ++i)
        for (long j = 0; j < ncols; ++j) {
            if (E[i][j] != 0 && E[i][j] != 1)
                entries_ok = false;
            if (E[i][j] && !dominates(b.regulars[j], b.parts[i]))
                entries_ok = false;
        }
    for (long j = 0; j < ncols; ++j) {
        if (E[b.row_index(b.regulars[j])][j] != 1)
            entries_ok = false;
        long sum = 0;
        for (long i = 0; i < nrows; ++i)
            sum += E[i][j];
        if (sum < 3)
            colsum_ok = false;
        for (long k = 0; k < ncols; ++k) {
            long c = an.tables.matrix.cartan(j, k);
            if (j == k ? c < 3 : c > 2)
                cartan_ok = false;
        }
    }
    rep.add("matrix-unitriangular", entries_ok);
    rep.add("column-sums", colsum_ok);
    rep.add("cartan-bounds", cartan_ok);

    bool exp_ok = true;
    std::string note;
    for (long r = 0; r < nrows && exp_ok; ++r) {
        const exponent_matrix& m = an.expmats[r];
        const std::size_t k = m.index.size();
        for (std::size_t a = 0; a < k && exp_ok; ++a)
            for (std::size_t c = 0; c < k; ++c) {
                if (a != c) {
                    long s = m.mat[a][c] + m.mat[c][a];
                    if (s < 1 || s > 2) {
                        exp_ok = false;
                        note = "sum bound at " + b.parts[r].str();
                    }
                }
                for (std::size_t d = 0; d < k; ++d)
                    if (m.mat[a][d] + m.mat[d][c] < m.mat[a][c]) {
                        exp_ok = false;
                        note = "triangle inequality at " + b.parts[r].str();
                    }
            }
        if (!is_p_regular(b.parts[r], b.p))
            continue;
        long self = -1;
        for (std::size_t a = 0; a < k; ++a)
            if (m.index[a] == b.parts[r])
                self = static_cast<long>(a);
        for (std::size_t a = 0; a < k; ++a) {
            if (m.mat[a][self] != 0) {
                exp_ok = false;
                note = "nonzero label column at " + b.parts[r].str();
            }
            long layer = -1;
            for (int l = 0; l < 3; ++l)
                for (long c : an.tables.layers.rows[r][l])
                    if (b.regulars[c] == m.index[a])
                        layer = l;
            if (m.mat[self][a] != layer) {
                exp_ok = false;
                note = "label row differs from layers at " + b.parts[r].str();
            }
        }
    }
    rep.add("exponent-conditions", exp_ok, note);
    return rep;
}

inline check_report verify_suite(const block_analysis& an,
                                 mutation_kind kind = mutation_kind::none,
                                 std::size_t mutate_idx = 0,
                                 const std::set<std::string>& filter = {})
{
    check_report rep;
    auto wanted = [&](const std::string& id) { return filter.empty() || filter.count(id); };

    const block_descriptor& b = an.tables.block;
    const long p = b.p;
    block_algebra A(an.tables);
    detail::coord_labels lab(A);
    trace_form form = trace_form::of(b);
    presentation pres = apply_mutation(an.pres, kind, mutate_idx);

    p_local_lattice L = saturate_order(A, pres);
    const long N = A.dim;

    std::vector<algebra_element> basis_elems;
    for (const auto& [t, r] : L.rows)
        basis_elems.push_back(to_element(A, r));

    std::map<std::pair<partition, partition>, const algebra_element*> gen_of;
    for (const auto& [from, to, x] : pres.generators)
        gen_of[{from, to}] = &x;
    std::map<partition, const algebra_element*, lex_desc_less> idem_of;
    for (const auto& [mu, e] : pres.idempotents)
        idem_of[mu] = &e;

    if (wanted("self-dual")) {
        bool integral = true;
        std::string note;
        for (std::size_t i = 0; i < basis_elems.size() && integral; ++i)
            for (std::size_t j = i; j < basis_elems.size(); ++j) {
                rational t = trace_pair(basis_elems[i], basis_elems[j], form);
                if (!is_p_integral(t, p)) {
                    integral = false;
                    note = "non-integral pairing";
                    break;
                }
            }
        bool covolume = (L.rank() == N) && (detail::pivot_val_sum(L) == N);
        if (!covolume && note.empty())
            note = "covolume is not 1 (pivot valuations sum to " +
                     std::to_string(detail::pivot_val_sum(L)) + ", expected " +
                     std::to_string(N) + ")";
        bool dual_eq = true;
        if (integral && covolume && N <= 100) {
            p_local_lattice Ls = dual_lattice(A, L, form);
            dual_eq = (Ls == L);
            if (!dual_eq)
                note = "dual basis differs";
        }
        rep.add("self-dual", integral && covolume && dual_eq, note);
    }

    if (wanted("graduated-projection")) {
        bool ok = true;
        std::string note;
        for (long r = 0; r < A.rows() && ok; ++r) {
            p_local_lattice proj =
                detail::project_lattice(L, [&](long t) { return lab.row[t] == r; });
            p_local_lattice hull(p, N);
            long k = A.rank_of(r);
            for (long a = 0; a < k; ++a)
                for (long bcol = 0; bcol < k; ++bcol) {
                    sparse_vec v;
                    v.emplace_back(A.coord(r, a, bcol),
                                   pow_p_q(p, pres.hull[r].mat[a][bcol]));
                    hull.insert(std::move(v));
                }
            hull.canonicalize();
            if (!(proj == hull)) {
                ok = false;
                note = "component " + b.parts[r].str();
            }
        }
        rep.add("graduated-projection", ok, note);
    }

    if (wanted("cartan")) {
        bool ok = true;
        std::string note;
        const long ncols = static_cast<long>(b.regulars.size());
        for (long i = 0; i < ncols && ok; ++i)
            for (long j = i; j < ncols; ++j) {
                long expected = an.tables.matrix.cartan(i, j);
                if (i == j && expected < 3) {
                    ok = false;
                    note = "diagonal Cartan below 3 at " + b.regulars[i].str();
                    break;
                }
                if (i != j && expected > 2) {
                    ok = false;
                    note = "off-diagonal Cartan above 2";
                    break;
                }
                p_local_lattice proj = detail::project_lattice(L, [&](long t) {
                    return lab.a_col[t] == i && lab.b_col[t] == j;
                });
                if (proj.rank() != expected) {
                    ok = false;
                    note = "rank e_mu L e_nu = " + std::to_string(proj.rank()) +
                             " != " + std::to_string(expected) + " at (" +
                             b.regulars[i].str() + "," + b.regulars[j].str() + ")";
                    break;
                }
            }
        rep.add("cartan", ok, note);
    }

    /* Jacobson radical: off-diagonal parts plus the positive-valuation part
     * of each e_mu Lambda e_mu. */
    auto build_radical = [&]() {
        p_local_lattice J(p, N);
        const long ncols = static_cast<long>(b.regulars.size());
        for (const auto& [t, r] : L.rows) {
            for (long i = 0; i < ncols; ++i)
                for (long j = 0; j < ncols; ++j) {
                    if (i == j)
                        continue;
                    sparse_vec v;
                    for (const auto& [c, x] : r)
                        if (lab.a_col[c] == i && lab.b_col[c] == j)
                            v.emplace_back(c, x);
                    J.insert(std::move(v));
                }
        }
        for (long i = 0; i < ncols; ++i) {
            p_local_lattice E = detail::project_lattice(
                L, [&](long t) { return lab.a_col[t] == i && lab.b_col[t] == i; });
            std::vector<sparse_vec> rows;
            for (const auto& [t, r] : E.rows)
                rows.push_back(r);
            // F_p left-nullspace of the reduced row matrix
            std::vector<std::vector<long>> R;
            std::vector<long> cols;
            for (const auto& r : rows)
                for (const auto& [c, x] : r)
                    if (std::find(cols.begin(), cols.end(), c) == cols.end())
                        cols.push_back(c);
            std::sort(cols.begin(), cols.end());
            for (const auto& r : rows) {
                std::vector<long> rr(cols.size(), 0);
                for (const auto& [c, x] : r) {
                    rational res = padic_residue(x, 1, p);
                    long pos = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
                    rr[pos] = res == 0 ? 0 : mpz_get_si(bigint(res.get_num()).get_mpz_t());
                }
                R.push_back(rr);
            }
            // eliminate: find combinations of rows vanishing mod p
            std::vector<std::vector<long>> Y; // identity alongside R
            for (std::size_t k = 0; k < R.size(); ++k) {
                std::vector<long> y(R.size(), 0);
                y[k] = 1;
                Y.push_back(y);
            }
            std::size_t lead = 0;
            for (std::size_t col = 0; col < cols.size() && lead < R.size(); ++col) {
                std::size_t piv = lead;
                while (piv < R.size() && R[piv][col] % p == 0)
                    ++piv;
                if (piv == R.size())
                    continue;
                std::swap(R[piv], R[lead]);
                std::swap(Y[piv], Y[lead]);
                long inv = 1;
                while ((inv * R[lead][col]) % p != 1)
                    ++inv;
                for (std::size_t rr2 = 0; rr2 < R.size(); ++rr2) {
                    if (rr2 == lead)
                        continue;
                    long f = ((R[rr2][col] % p) * inv) % p;
                    if (f == 0)
                        continue;
                    for (std::size_t c2 = 0; c2 < cols.size(); ++c2)
                        R[rr2][c2] = ((R[rr2][c2] - f * R[lead][c2]) % p + p) % p;
                    for (std::size_t c2 = 0; c2 < Y.size(); ++c2)
                        Y[rr2][c2] = ((Y[rr2][c2] - f * Y[lead][c2]) % p + p) % p;
                }
                ++lead;
            }
            for (std::size_t k = lead; k < R.size(); ++k) {
                bool zero = true;
                for (long v2 : R[k])
                    if (v2 % p != 0)
                        zero = false;
                if (!zero)
                    continue;
                sparse_vec combo;
                for (std::size_t m2 = 0; m2 < rows.size(); ++m2)
                    if (Y[k][m2] % p != 0) {
                        sparse_vec tmp = rows[m2];
                        detail::scale(tmp, rational(-(Y[k][m2] % p)));
                        detail::axpy(combo, rational(1), tmp);
                    }
                J.insert(std::move(combo));
            }
            for (const auto& r : rows) {
                sparse_vec v = r;
                detail::scale(v, rational(p));
                J.insert(std::move(v));
            }
        }
        J.canonicalize();
        return J;
    };

    const bool need_radical = wanted("radical-square") || wanted("loewy-5");
    p_local_lattice J, J2;
    if (need_radical) {
        J = build_radical();
        J2 = lattice_product(A, J, J);
    }

    if (wanted("radical-square")) {
        // the radical square of the k-algebra Lambda/p is (J^2 + p Lambda)/p
        p_local_lattice J2k = J2;
        for (const auto& [t, r] : L.rows) {
            sparse_vec v = r;
            detail::scale(v, rational(p));
            J2k.insert(std::move(v));
        }
        J2k.canonicalize();
        bool ok = true;
        std::string note;
        const long ncols = static_cast<long>(b.regulars.size());
        for (long i = 0; i < ncols && ok; ++i)
            for (long j = 0; j < ncols; ++j) {
                auto pred = [&](long t) { return lab.a_col[t] == i && lab.b_col[t] == j; };
                p_local_lattice Jij = detail::project_lattice(J, pred);
                p_local_lattice J2ij = detail::project_lattice(J2k, pred);
                long expected =
                    (i != j && an.quiver.has_edge(an.quiver.vertex_index(b.regulars[i]),
                                                  an.quiver.vertex_index(b.regulars[j])))
                        ? 1
                        : 0;
                if (Jij.rank() != J2ij.rank()) {
                    ok = false;
                    note = "rank drop in J^2 at (" + b.regulars[i].str() + "," +
                             b.regulars[j].str() + ")";
                    break;
                }
                long dim = detail::pivot_val_sum(J2ij) - detail::pivot_val_sum(Jij);
                if (dim != expected) {
                    ok = false;
                    note = "dim e(J/J^2)e = " + std::to_string(dim) + " != " +
                             std::to_string(expected) + " at (" + b.regulars[i].str() + "," +
                             b.regulars[j].str() + ")";
                    break;
                }
            }
        rep.add("radical-square", ok, note);
    }

    if (wanted("loewy-5")) {
        p_local_lattice J4 = lattice_product(A, J2, J2);
        p_local_lattice J5 = lattice_product(A, J4, J);
        p_local_lattice pL = L.scaled(1);
        pL.canonicalize();
        bool five = pL.contains(J5);
        bool four = !pL.contains(J4);
        rep.add("loewy-5", five && four,
                five ? (four ? "" : "J^4 already inside p*Lambda") : "J^5 escapes p*Lambda");
    }

    auto gen = [&](const partition& from, const partition& to) -> const algebra_element* {
        auto it = gen_of.find({from, to});
        return it == gen_of.end() ? nullptr : it->second;
    };

    if (wanted("cycle-trace")) {
        bool ok = true;
        std::string note;
        const long nv = static_cast<long>(an.quiver.vertices.size());
        for (auto [i, j] : an.quiver.edges) {
            const partition& mu = an.quiver.vertices[i];
            const partition& nu = an.quiver.vertices[j];
            const algebra_element *fwd = gen(mu, nu), *bwd = gen(nu, mu);
            if (!fwd || !bwd) {
                ok = false;
                note = "generator missing on edge " + mu.str() + "|" + nu.str();
                break;
            }
            if (trace_pair(A.multiply(*fwd, *bwd), *idem_of[mu], form) != 0 ||
                trace_pair(A.multiply(*bwd, *fwd), *idem_of[nu], form) != 0) {
                ok = false;
                note = "nonzero back-and-forth trace on edge " + mu.str() + "|" + nu.str();
            }
        }
        for (long v0 = 0; v0 < nv && ok; ++v0)
            for (long v1 = 0; v1 < nv; ++v1)
                for (long v2 = 0; v2 < nv; ++v2)
                    for (long v3 = 0; v3 < nv; ++v3) {
                        std::set<long> distinct{v0, v1, v2, v3};
                        if (distinct.size() != 4 || !an.quiver.has_edge(v0, v1) ||
                            !an.quiver.has_edge(v1, v2) || !an.quiver.has_edge(v2, v3) ||
                            !an.quiver.has_edge(v3, v0))
                            continue;
                        const partition &m0 = an.quiver.vertices[v0],
                                        &m1 = an.quiver.vertices[v1],
                                        &m2 = an.quiver.vertices[v2],
                                        &m3 = an.quiver.vertices[v3];
                        long common = 0;
                        for (std::size_t r = 0; r < b.parts.size(); ++r) {
                            const auto& E = an.tables.matrix.entries[r];
                            if (E[b.col_index(m0)] && E[b.col_index(m1)] &&
                                E[b.col_index(m2)] && E[b.col_index(m3)])
                                ++common;
                        }
                        const algebra_element* g01 = gen(m0, m1);
                        const algebra_element* g12 = gen(m1, m2);
                        const algebra_element* g23 = gen(m2, m3);
                        const algebra_element* g30 = gen(m3, m0);
                        if (!g01 || !g12 || !g23 || !g30) {
                            ok = false;
                            note = "generator missing on a 4-cycle";
                            continue;
                        }
                        algebra_element y =
                            A.multiply(A.multiply(*g01, *g12), A.multiply(*g23, *g30));
                        rational t = trace_pair(y, *idem_of[m0], form);
                        /* a 4-cycle supports a nonzero monomial exactly when
                         * its four columns share a (then unique) row, and the
                         * trace of that monomial is a p-unit */
                        bool good = (common == 1) ? is_p_unit(t, p)
                                                  : (common == 0 && y.terms.empty());
                        if (!good) {
                            ok = false;
                            note = "4-cycle at " + m0.str() + "," + m1.str() + "," +
                                     m2.str() + "," + m3.str();
                        }
                    }
        rep.add("cycle-trace", ok, note);
    }

    if (wanted("amalgamation")) {
        bool ok = true;
        std::string note;
        std::mt19937 rng(12345);
        const long ncols = static_cast<long>(b.regulars.size());
        for (long i = 0; i < ncols && ok; ++i) {
            // diagonal coordinates of e_mu Lambda e_mu, one per row of c_mu
            std::vector<long> cs;
            for (long r = 0; r < A.rows(); ++r) {
                long a = A.pos_in_row(r, i);
                if (a >= 0)
                    cs.push_back(A.coord(r, a, a));
            }
            const std::size_t m = cs.size();
            p_local_lattice E = detail::project_lattice(L, [&](long t) {
                return std::find(cs.begin(), cs.end(), t) != cs.end();
            });

            std::vector<std::vector<std::size_t>> subsets;
            if (m <= 6) {
                for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
                    if (__builtin_popcountl(mask) < 2)
                        continue;
                    std::vector<std::size_t> I;
                    for (std::size_t k = 0; k < m; ++k)
                        if (mask & (1ul << k))
                            I.push_back(k);
                    subsets.push_back(I);
                }
            } else {
                std::vector<std::size_t> all(m);
                for (std::size_t k = 0; k < m; ++k)
                    all[k] = k;
                subsets.push_back(all);
                for (int s = 0; s < 32; ++s) {
                    std::vector<std::size_t> I;
                    while (I.size() < 2) {
                        I.clear();
                        for (std::size_t k = 0; k < m; ++k)
                            if (rng() % 2)
                                I.push_back(k);
                        if (I.size() == m)
                            I.clear();
                    }
                    subsets.push_back(I);
                }
            }

            for (const auto& I : subsets) {
                std::vector<long> sel;
                for (std::size_t k : I)
                    sel.push_back(cs[k]);
                p_local_lattice proj = detail::project_lattice(E, [&](long t) {
                    return std::find(sel.begin(), sel.end(), t) != sel.end();
                });
                if (I.size() < m) {
                    // expected: the congruence lattice Gamma_|I|
                    p_local_lattice gamma(p, N);
                    sparse_vec ones;
                    for (long t : sel)
                        ones.emplace_back(t, rational(1));
                    gamma.insert(ones);
                    for (std::size_t k = 1; k < sel.size(); ++k) {
                        sparse_vec v;
                        v.emplace_back(sel[k], rational(p));
                        gamma.insert(std::move(v));
                    }
                    gamma.canonicalize();
                    if (!(proj == gamma)) {
                        ok = false;
                        note = "Gamma_" + std::to_string(I.size()) + " mismatch at e_" +
                                 b.regulars[i].str();
                        break;
                    }
                } else {
                    // full projection: elementary divisors (1, p, ..., p, p^2)
                    std::vector<long> vals;
                    for (const auto& [t, v] : proj.pivot_profile())
                        vals.push_back(v);
                    std::sort(vals.begin(), vals.end());
                    std::vector<long> expected(m, 1);
                    expected.front() = 0;
                    expected.back() = 2;
                    if (m == 1)
                        expected = {0};
                    if (proj.rank() != static_cast<long>(m) || vals != expected) {
                        ok = false;
                        note = "divisor profile mismatch at e_" + b.regulars[i].str();
                        break;
                    }
                }
            }
        }
        rep.add("amalgamation", ok, note);
    }

    return rep;
}

} // namespace defect2
