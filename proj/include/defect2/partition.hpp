#pragma once

/* Exact partition combinatorics: conjugation, abacus / p-core / p-weight,
 * p-regularity, hook lengths and Specht dimensions, dominance and
 * lexicographic orders, relative p-sign.
 *
 * All values are immutable after construction and safe to share across
 * threads. */

#include "defect2/numbers.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace defect2 {

struct partition {
    std::vector<long> parts; // weakly decreasing, all >= 1; empty = partition of 0
    long n = 0;              // cached sum

    partition() = default;

    explicit partition(std::vector<long> p) : parts(std::move(p))
    {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw std::invalid_argument("partition: parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
            n += parts[i];
        }
    }

    partition(std::initializer_list<long> p) : partition(std::vector<long>(p)) {}

    long rows() const { return static_cast<long>(parts.size()); }
    long part(long i) const { return i < rows() ? parts[i] : 0; } // 0-based, padded

    bool operator==(const partition& o) const { return parts == o.parts; }
    bool operator!=(const partition& o) const { return parts != o.parts; }

    // container ordering only; the domain orders are dominance and lex
    bool operator<(const partition& o) const
    {
        return n != o.n ? n < o.n : parts < o.parts;
    }

    std::string str() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << (i ? "," : "") << parts[i];
        return os.str();
    }
};

/* "4,2,1" -> partition; "" -> empty partition. */
inline partition parse_partition(const std::string& s)
{
    std::vector<long> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ','))
        if (!tok.empty())
            parts.push_back(std::stol(tok));
    return partition(std::move(parts));
}

inline partition conjugate(const partition& lam)
{
    std::vector<long> cols;
    if (!lam.parts.empty()) {
        cols.resize(lam.parts[0]);
        for (long c = 0; c < lam.parts[0]; ++c)
            cols[c] = static_cast<long>(std::count_if(lam.parts.begin(), lam.parts.end(),
                                                      [&](long r) { return r > c; }));
    }
    return partition(std::move(cols));
}

/* First-column hook lengths for a fixed bead count b >= number of parts. */
struct beta_set {
    std::vector<long> beta; // strictly decreasing, >= 0
    long bead_count = 0;

    beta_set() = default;
    beta_set(const partition& lam, long b) : bead_count(b)
    {
        if (b < lam.rows())
            throw std::invalid_argument("beta_set: too few beads");
        beta.resize(b);
        for (long i = 0; i < b; ++i)
            beta[i] = lam.part(i) + (b - 1 - i);
    }

    partition to_partition() const
    {
        std::vector<long> sorted = beta;
        std::sort(sorted.rbegin(), sorted.rend());
        std::vector<long> parts;
        for (long i = 0; i < bead_count; ++i) {
            long part = sorted[i] - (bead_count - 1 - i);
            if (part < 0)
                throw std::invalid_argument("beta_set: not a beta sequence");
            if (part > 0)
                parts.push_back(part);
        }
        return partition(std::move(parts));
    }
};

inline long round_up_multiple(long x, long m) { return ((x + m - 1) / m) * m; }

/* Bead count used for all runner arithmetic: number of parts rounded up to a
 * positive multiple of p. */
inline long abacus_beads(const partition& lam, long p)
{
    return std::max(p, round_up_multiple(lam.rows(), p));
}

/* (p-core, p-weight); |core| + p*weight = n, independent of bead count. */
inline std::pair<partition, long> p_core_weight(const partition& lam, long p)
{
    require_odd_prime(p);
    long b = abacus_beads(lam, p);
    beta_set bs(lam, b);
    std::set<long> beads(bs.beta.begin(), bs.beta.end());
    // push every bead to the bottom of its runner
    std::vector<long> runner_count(p, 0);
    for (long x : beads)
        runner_count[x % p]++;
    long weight = 0;
    for (long x : beads)
        weight += x / p;
    beta_set core_bs;
    core_bs.bead_count = b;
    for (long r = 0; r < p; ++r)
        for (long j = 0; j < runner_count[r]; ++j) {
            core_bs.beta.push_back(r + p * j);
            weight -= j;
        }
    return {core_bs.to_partition(), weight};
}

inline bool is_p_core(const partition& lam, long p)
{
    return p_core_weight(lam, p).second == 0;
}

/* true iff no part value repeats p or more times */
inline bool is_p_regular(const partition& lam, long p)
{
    long run = 1;
    for (std::size_t i = 1; i < lam.parts.size(); ++i) {
        run = (lam.parts[i] == lam.parts[i - 1]) ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return !lam.parts.empty() ? run < p : true;
}

/* Multiset of hook lengths of the diagram. */
inline std::vector<long> hook_lengths(const partition& lam)
{
    long b = std::max<long>(1, lam.rows());
    beta_set bs(lam, b);
    std::set<long> beads(bs.beta.begin(), bs.beta.end());
    std::vector<long> hooks;
    for (long x : bs.beta)
        for (long y = 0; y < x; ++y)
            if (!beads.count(y))
                hooks.push_back(x - y);
    return hooks;
}

/* d_lambda = n! / prod(hooks), exact. */
inline bigint specht_dimension(const partition& lam)
{
    bigint d = factorial(lam.n);
    for (long h : hook_lengths(lam))
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(h));
    return d;
}

enum class dominance { less, equal, greater, incomparable };

inline dominance dominance_compare(const partition& a, const partition& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("dominance_compare: partitions of different n");
    long rows = std::max(a.rows(), b.rows());
    bool a_ge = true, b_ge = true;
    long sa = 0, sb = 0;
    for (long i = 0; i < rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb)
            a_ge = false;
        if (sb < sa)
            b_ge = false;
    }
    if (a_ge && b_ge)
        return dominance::equal;
    if (a_ge)
        return dominance::greater;
    if (b_ge)
        return dominance::less;
    return dominance::incomparable;
}

inline bool dominates(const partition& a, const partition& b)
{
    auto c = dominance_compare(a, b);
    return c == dominance::greater || c == dominance::equal;
}

inline bool strictly_dominates(const partition& a, const partition& b)
{
    return dominance_compare(a, b) == dominance::greater;
}

/* Standard lexicographic comparison on part sequences; total order refining
 * dominance. Returns <0, 0, >0. */
inline int lex_compare(const partition& a, const partition& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("lex_compare: partitions of different n");
    long rows = std::max(a.rows(), b.rows());
    for (long i = 0; i < rows; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) < b.part(i) ? -1 : 1;
    }
    return 0;
}

struct lex_desc_less {
    bool operator()(const partition& a, const partition& b) const
    {
        if (a.n != b.n)
            return a.n < b.n;
        return lex_compare(a, b) > 0;
    }
};

/* Strip one removable p-rim-hook.  strategy "top": hand node in the
 * lowest-numbered row among removable hooks (largest beta value); "bottom":
 * the opposite.  Returns {remaining partition, leg length}, or leg -1 when
 * lam is already a p-core. */
inline std::pair<partition, long> strip_one_p_hook(const partition& lam, long p, bool top)
{
    long b = abacus_beads(lam, p);
    beta_set bs(lam, b);
    std::set<long> beads(bs.beta.begin(), bs.beta.end());
    long chosen = -1;
    for (long x : beads)
        if (x - p >= 0 && !beads.count(x - p))
            if (chosen < 0 || (top ? x > chosen : x < chosen))
                chosen = x;
    if (chosen < 0)
        return {lam, -1};
    long leg = 0;
    for (long y = chosen - p + 1; y < chosen; ++y)
        if (beads.count(y))
            ++leg;
    beads.erase(chosen);
    beads.insert(chosen - p);
    beta_set out;
    out.bead_count = b;
    out.beta.assign(beads.begin(), beads.end());
    return {out.to_partition(), leg};
}

/* (-1)^(sum of leg lengths) over any stripping of lam down to its p-core;
 * independent of the stripping sequence. */
inline int relative_p_sign(const partition& lam, long p, bool top_strategy = true)
{
    require_odd_prime(p);
    partition cur = lam;
    long legs = 0;
    for (;;) {
        auto [next, leg] = strip_one_p_hook(cur, p, top_strategy);
        if (leg < 0)
            break;
        legs += leg;
        cur = next;
    }
    return legs % 2 == 0 ? 1 : -1;
}

/* All partitions of n, lexicographically descending. */
inline std::vector<partition> partitions_of(long n)
{
    std::vector<partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out; // recursion emits in lex descending order already
}

} // namespace defect2
