#pragma once

/* Enumeration of the defect-two blocks of Sym_n at p and of the partitions
 * belonging to a block.  Blocks are identified by their p-core (Nakayama);
 * membership is realized by filtering all partitions of n, which stays the
 * oracle for any faster generation. */

#include "defect2/partition.hpp"

#include <optional>

namespace defect2 {

struct block_descriptor {
    long p = 0;
    partition core;                  // a p-core
    long n = 0;                      // |core| + 2p
    std::vector<partition> parts;    // all block partitions, lex descending
    std::vector<partition> regulars; // p-regular sublist, same order

    long row_index(const partition& lam) const
    {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] == lam)
                return static_cast<long>(i);
        return -1;
    }

    long col_index(const partition& mu) const
    {
        for (std::size_t i = 0; i < regulars.size(); ++i)
            if (regulars[i] == mu)
                return static_cast<long>(i);
        return -1;
    }

    bool operator==(const block_descriptor& o) const
    {
        return p == o.p && core == o.core && n == o.n && parts == o.parts;
    }
};

inline block_descriptor block_from_core(long p, const partition& core)
{
    require_odd_prime(p);
    if (!is_p_core(core, p))
        throw std::invalid_argument("block_from_core: partition has a p-hook, not a p-core");
    block_descriptor b;
    b.p = p;
    b.core = core;
    b.n = core.n + 2 * p;
    for (const partition& lam : partitions_of(b.n)) {
        auto [c, w] = p_core_weight(lam, p);
        if (w == 2 && c == core)
            b.parts.push_back(lam);
    }
    for (const partition& lam : b.parts)
        if (is_p_regular(lam, p))
            b.regulars.push_back(lam);
    if (b.regulars.empty())
        throw std::logic_error("block_from_core: block without p-regular labels");
    return b;
}

/* One descriptor per p-core of size n - 2p, lex descending on cores;
 * empty when n < 2p. */
inline std::vector<block_descriptor> enumerate_defect_two_blocks(long p, long n)
{
    require_odd_prime(p);
    std::vector<block_descriptor> out;
    long m = n - 2 * p;
    if (m < 0)
        return out;
    for (const partition& c : partitions_of(m))
        if (is_p_core(c, p))
            out.push_back(block_from_core(p, c));
    return out;
}

inline block_descriptor conjugate_block(const block_descriptor& b)
{
    return block_from_core(b.p, conjugate(b.core));
}

} // namespace defect2
