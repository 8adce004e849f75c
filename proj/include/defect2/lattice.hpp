#pragma once

/* Exact p-local lattice engine over the ambient algebra A.
 *
 * A lattice is held as a canonical echelon basis over Z_(p): one row per
 * pivot coordinate, pivot entries exact powers of p (negative powers allowed,
 * e.g. for duals), every other entry in a pivot column reduced to its p-adic
 * residue.  The canonical form is unique for a given lattice and a fixed
 * coordinate order, so lattice equality is row-by-row equality.  All
 * arithmetic is exact rational; denominators stay prime to p except where a
 * dual computation makes a valuation genuinely negative. */

#include "defect2/orders.hpp"

#include <unordered_set>

namespace defect2 {

using sparse_vec = std::vector<std::pair<long, rational>>; // sorted by coordinate

inline sparse_vec to_vec(const block_algebra& A, const algebra_element& e)
{
    sparse_vec v;
    for (const auto& [k, c] : e.terms) {
        auto [row, a, b] = k;
        v.emplace_back(A.coord(row, a, b), c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

inline algebra_element to_element(const block_algebra& A, const sparse_vec& v)
{
    algebra_element e;
    for (const auto& [t, c] : v) {
        long row = 0;
        while (row + 1 < A.rows() && A.offset[row + 1] <= t)
            ++row;
        long local = t - A.offset[row];
        long k = A.rank_of(row);
        e.add_term(row, local / k, local % k, c);
    }
    return e;
}

namespace detail {

/* w -= c * r, sorted-merge */
inline void axpy(sparse_vec& w, const rational& c, const sparse_vec& r)
{
    if (c == 0)
        return;
    sparse_vec out;
    out.reserve(w.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < w.size() || j < r.size()) {
        if (j >= r.size() || (i < w.size() && w[i].first < r[j].first)) {
            out.push_back(w[i++]);
        } else if (i >= w.size() || r[j].first < w[i].first) {
            rational x = -c * r[j].second;
            x.canonicalize();
            if (x != 0)
                out.emplace_back(r[j].first, x);
            ++j;
        } else {
            rational x = w[i].second - c * r[j].second;
            x.canonicalize();
            if (x != 0)
                out.emplace_back(w[i].first, x);
            ++i, ++j;
        }
    }
    w = std::move(out);
}

inline void scale(sparse_vec& w, const rational& c)
{
    for (auto& [t, x] : w) {
        x *= c;
        x.canonicalize();
    }
}

} // namespace detail

struct p_local_lattice {
    long p = 0;
    long dim = 0;
    std::map<long, sparse_vec> rows; // pivot coordinate -> row
    bool canonical = false;

    p_local_lattice() = default;
    p_local_lattice(long p_, long dim_) : p(p_), dim(dim_) {}

    long rank() const { return static_cast<long>(rows.size()); }

    /* valuation of the pivot entry of each row, keyed by pivot coordinate */
    std::map<long, long> pivot_profile() const
    {
        std::map<long, long> out;
        for (const auto& [t, r] : rows)
            out[t] = valuation(r.front().second, p);
        return out;
    }

    /* Insert the Z_(p)-span of v; returns true if the lattice grew. */
    bool insert(sparse_vec v)
    {
        bool grew = false;
        while (!v.empty()) {
            long t = v.front().first;
            long vt_val = valuation(v.front().second, p);
            auto it = rows.find(t);
            if (it == rows.end()) {
                rational u = pow_p_q(p, vt_val) / v.front().second;
                u.canonicalize();
                detail::scale(v, u); // pivot entry becomes exactly p^vt_val
                rows.emplace(t, std::move(v));
                canonical = false;
                return true;
            }
            long k = valuation(it->second.front().second, p);
            if (vt_val >= k) {
                rational c = v.front().second * pow_p_q(p, -k);
                c.canonicalize();
                detail::axpy(v, c, it->second);
            } else {
                // v has the smaller valuation: it becomes the pivot row
                rational u = pow_p_q(p, vt_val) / v.front().second;
                u.canonicalize();
                detail::scale(v, u);
                std::swap(v, it->second);
                grew = true;
                canonical = false;
                // old pivot row continues reducing (entry p^k, k > vt_val)
            }
        }
        return grew;
    }

    /* Membership of v in the current span (does not modify the lattice). */
    bool contains(sparse_vec v) const
    {
        while (!v.empty()) {
            long t = v.front().first;
            auto it = rows.find(t);
            if (it == rows.end())
                return false;
            long k = valuation(it->second.front().second, p);
            if (valuation(v.front().second, p) < k)
                return false;
            rational c = v.front().second * pow_p_q(p, -k);
            c.canonicalize();
            detail::axpy(v, c, it->second);
        }
        return true;
    }

    bool contains(const p_local_lattice& other) const
    {
        for (const auto& [t, r] : other.rows)
            if (!contains(r))
                return false;
        return true;
    }

    /* Reduce every entry sitting in a pivot column to its p-adic residue.
     * Processing each row's columns in ascending order only touches later
     * columns, so one pass suffices; the result is the unique canonical
     * basis. */
    void canonicalize()
    {
        if (canonical)
            return;
        for (auto& [t0, row] : rows) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    long t = row[i].first;
                    if (t == t0)
                        continue;
                    auto it = rows.find(t);
                    if (it == rows.end())
                        continue;
                    long k = valuation(it->second.front().second, p);
                    rational c = padic_quotient(row[i].second, k, p);
                    if (c != 0) {
                        detail::axpy(row, c, it->second);
                        changed = true;
                        break; // indices shifted; rescan this row
                    }
                }
            }
        }
        canonical = true;
    }

    bool operator==(const p_local_lattice& o) const
    {
        if (p != o.p || rows.size() != o.rows.size())
            return false;
        auto a = *this, b = o; // canonical form is cheap once echelonized
        a.canonicalize();
        b.canonicalize();
        return a.rows == b.rows;
    }

    p_local_lattice scaled(long k) const // multiply the lattice by p^k
    {
        p_local_lattice out(p, dim);
        rational f = pow_p_q(p, k);
        for (const auto& [t, r] : rows) {
            sparse_vec v = r;
            detail::scale(v, f);
            out.rows.emplace(t, std::move(v));
        }
        out.canonical = canonical;
        return out;
    }
};

inline p_local_lattice canonical_basis(long p, long dim, const std::vector<sparse_vec>& spanning)
{
    p_local_lattice L(p, dim);
    for (const auto& v : spanning)
        L.insert(v);
    L.canonicalize();
    return L;
}

inline p_local_lattice canonical_basis(const block_algebra& A, long p,
                                       const std::vector<algebra_element>& spanning)
{
    std::vector<sparse_vec> vs;
    vs.reserve(spanning.size());
    for (const auto& e : spanning)
        vs.push_back(to_vec(A, e));
    return canonical_basis(p, A.dim, vs);
}

/* --- trace form ---------------------------------------------------------- */

/* T(a,b) = (1/n!) sum_lam d_lam Tr(eps^lam a b); weights u_lam = d_lam / n!
 * have nu_p = -2 throughout a defect-two block. */
struct trace_form {
    std::vector<rational> weight; // per block row

    static trace_form of(const block_descriptor& b)
    {
        trace_form f;
        bigint nf = factorial(b.n);
        for (const partition& lam : b.parts) {
            rational u(specht_dimension(lam), nf);
            u.canonicalize();
            f.weight.push_back(u);
        }
        return f;
    }
};

inline rational trace_pair(const algebra_element& a, const algebra_element& b,
                           const trace_form& form)
{
    rational t = 0;
    for (const auto& [k, ca] : a.terms) {
        auto [row, i, j] = k;
        auto it = b.terms.find(std::make_tuple(row, j, i));
        if (it != b.terms.end())
            t += form.weight[row] * ca * it->second;
    }
    t.canonicalize();
    return t;
}

inline rational trace_pair_vec(const block_algebra& A, const sparse_vec& a,
                               const sparse_vec& b, const trace_form& form)
{
    return trace_pair(to_element(A, a), to_element(A, b), form);
}

/* --- dual lattice -------------------------------------------------------- */

/* L-sharp = {a : T(a, L) contained in Z_(p)}, computed from the inverse of
 * the basis matrix; requires L of full rank. */
inline p_local_lattice dual_lattice(const block_algebra& A, const p_local_lattice& L,
                                    const trace_form& form)
{
    const long N = A.dim;
    if (L.rank() != N)
        throw std::invalid_argument("dual_lattice: lattice not of full rank");

    // dense basis matrix in pivot-column order
    std::vector<std::vector<rational>> M(N, std::vector<rational>(N, rational(0)));
    {
        long i = 0;
        for (const auto& [t, r] : L.rows) {
            for (const auto& [c, x] : r)
                M[i][c] = x;
            ++i;
        }
    }
    // invert by Gauss-Jordan
    std::vector<std::vector<rational>> inv(N, std::vector<rational>(N, rational(0)));
    for (long i = 0; i < N; ++i)
        inv[i][i] = 1;
    for (long col = 0; col < N; ++col) {
        long piv = -1;
        for (long r = col; r < N; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw std::invalid_argument("dual_lattice: singular basis matrix");
        std::swap(M[piv], M[col]);
        std::swap(inv[piv], inv[col]);
        rational d = M[col][col];
        for (long c = 0; c < N; ++c) {
            M[col][c] /= d;
            M[col][c].canonicalize();
            inv[col][c] /= d;
            inv[col][c].canonicalize();
        }
        for (long r = 0; r < N; ++r) {
            if (r == col || M[r][col] == 0)
                continue;
            rational f = M[r][col];
            for (long c = 0; c < N; ++c) {
                M[r][c] -= f * M[col][c];
                M[r][c].canonicalize();
                inv[r][c] -= f * inv[col][c];
                inv[r][c].canonicalize();
            }
        }
    }

    // coordinate swap (row,a,b) <-> (row,b,a) and weights per coordinate
    std::vector<long> swap_of(N);
    std::vector<rational> w(N);
    for (long row = 0; row < A.rows(); ++row) {
        long k = A.rank_of(row);
        for (long a = 0; a < k; ++a)
            for (long b = 0; b < k; ++b) {
                swap_of[A.coord(row, a, b)] = A.coord(row, b, a);
                w[A.coord(row, a, b)] = form.weight[row];
            }
    }

    // row i of the dual basis: D[i][u] = inv[ swap(u) ][ i ] / w_u
    std::vector<sparse_vec> dual_rows;
    for (long i = 0; i < N; ++i) {
        sparse_vec v;
        for (long u = 0; u < N; ++u) {
            rational x = inv[swap_of[u]][i] / w[u];
            x.canonicalize();
            if (x != 0)
                v.emplace_back(u, x);
        }
        dual_rows.push_back(std::move(v));
    }
    return canonical_basis(L.p, N, dual_rows);
}

/* --- saturation ----------------------------------------------------------- */

inline std::string vec_key(const sparse_vec& v)
{
    std::string s;
    for (const auto& [t, x] : v) {
        s += std::to_string(t);
        s += ':';
        s += x.get_num().get_str();
        s += '/';
        s += x.get_den().get_str();
        s += ';';
    }
    return s;
}

/* Least multiplicatively closed lattice containing the idempotents and
 * generators: fixed-point iteration on pairwise basis products.  Every
 * iterate must stay inside the graduated hull given by pres.hull; escaping
 * it signals an exponent or generator bug and aborts. */
inline p_local_lattice saturate_order(const block_algebra& A, const presentation& pres,
                                      int max_rounds = 64)
{
    const long p = pres.block.p;

    auto hull_ok = [&](const sparse_vec& v) {
        for (const auto& [t, x] : v) {
            long row = 0;
            while (row + 1 < A.rows() && A.offset[row + 1] <= t)
                ++row;
            long local = t - A.offset[row];
            long k = A.rank_of(row);
            if (valuation(x, p) < pres.hull[row].mat[local / k][local % k])
                return false;
        }
        return true;
    };

    p_local_lattice L(p, A.dim);
    std::vector<algebra_element> gens;
    for (const auto& [mu, e] : pres.idempotents)
        gens.push_back(e);
    for (const auto& [mu, nu, x] : pres.generators)
        gens.push_back(x);
    for (const auto& g : gens) {
        sparse_vec v = to_vec(A, g);
        if (!hull_ok(v))
            throw consistency_error("saturate_order: generator outside graduated hull");
        L.insert(std::move(v));
    }

    std::unordered_set<std::string> seen;
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<algebra_element> basis;
        for (const auto& [t, r] : L.rows)
            basis.push_back(to_element(A, r));
        bool grew = false;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                sparse_vec v = to_vec(A, A.multiply(a, b));
                if (v.empty())
                    continue;
                if (!seen.insert(vec_key(v)).second)
                    continue;
                if (!hull_ok(v))
                    throw consistency_error("saturate_order: product escaped the graduated hull");
                grew |= L.insert(std::move(v));
            }
        if (!grew) {
            L.canonicalize();
            return L;
        }
    }
    throw consistency_error("saturate_order: no fixed point within round limit");
}

/* L*M: span of pairwise products of basis vectors. */
inline p_local_lattice lattice_product(const block_algebra& A, const p_local_lattice& L,
                                       const p_local_lattice& M)
{
    std::vector<algebra_element> lv, mv;
    for (const auto& [t, r] : L.rows)
        lv.push_back(to_element(A, r));
    for (const auto& [t, r] : M.rows)
        mv.push_back(to_element(A, r));
    p_local_lattice out(L.p, A.dim);
    for (const auto& a : lv)
        for (const auto& b : mv)
            out.insert(to_vec(A, A.multiply(a, b)));
    out.canonicalize();
    return out;
}

} // namespace defect2
