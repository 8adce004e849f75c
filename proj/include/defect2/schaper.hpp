#pragma once

/* Jantzen-Schaper virtual sums.
 *
 * jantzen_schaper_sum(lam, p) returns the class sum_{i>0} [S^lam_k(i)] of the
 * Jantzen filtration of the Specht module, expressed in the basis of Specht
 * classes [S^mu].  It is computed by the rim-hook unwrap/rewrap sum formula
 * in its reflection form on beta-numbers: working at the conjugate partition,
 * every ordered pair of beta-numbers u > v and every 0 < k < u - v
 * contributes nu_p(u - v - k) times the sign-normalized class of the set
 * obtained by replacing (u, v) with (u - k, v + k); collisions contribute
 * nothing, and the output classes are conjugated back.
 *
 * The support consists of partitions of n strictly dominating lam and lying
 * in the same p-block (moves with p | u - v - k permute the beta residues),
 * and the result is independent of the bead count once there are n beads. */

#include "defect2/partition.hpp"

#include <map>

namespace defect2 {

using virtual_specht_sum = std::map<partition, long, lex_desc_less>;

inline virtual_specht_sum jantzen_schaper_sum(const partition& lam, long p,
                                              long bead_count = 0)
{
    require_odd_prime(p);
    virtual_specht_sum out;
    if (lam.n == 0)
        return out;
    partition tau = conjugate(lam);
    long b = std::max(bead_count, std::max<long>(lam.n, tau.rows()));
    beta_set bs(tau, b);
    const std::vector<long>& beta = bs.beta; // strictly decreasing
    std::set<long> occupied(beta.begin(), beta.end());

    for (long a = 0; a < b; ++a) {
        for (long c = a + 1; c < b; ++c) {
            long u = beta[a], v = beta[c];
            long span = u - v;
            for (long k = 1; k < span; ++k) {
                if ((span - k) % p != 0)
                    continue;
                long coeff = valuation(span - k, p);
                long un = u - k, vn = v + k;
                if (un == vn)
                    continue;
                // un, vn cannot hit u or v themselves since 0 < k < span
                if (occupied.count(un) || occupied.count(vn))
                    continue;
                std::vector<long> moved = beta;
                moved[a] = un;
                moved[c] = vn;
                long inversions = 0;
                for (std::size_t i = 0; i < moved.size(); ++i)
                    for (std::size_t j = i + 1; j < moved.size(); ++j)
                        if (moved[i] < moved[j])
                            ++inversions;
                int sign = inversions % 2 == 0 ? 1 : -1;
                beta_set nb;
                nb.bead_count = b;
                nb.beta = moved;
                partition mu = conjugate(nb.to_partition());
                long& slot = out[mu];
                slot += sign * coeff;
                if (slot == 0)
                    out.erase(mu);
            }
        }
    }
    return out;
}

} // namespace defect2
