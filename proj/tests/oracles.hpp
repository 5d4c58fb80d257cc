// Independent test oracles: brute-force routes that deliberately avoid the
// library code paths they are used to check.

#ifndef STABLEPOLY_TESTS_ORACLES_HPP_
#define STABLEPOLY_TESTS_ORACLES_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stablepoly/extension.hpp"
#include "stablepoly/funcfield.hpp"
#include "stablepoly/poly.hpp"

namespace oracles {

// --- bit-level GF(2)[x] arithmetic, independent of every library type ---

inline int bits_degree(uint64_t p) {
    int d = -1;
    while (p != 0) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline uint64_t bits_mod(uint64_t p, uint64_t q) {
    const int dq = bits_degree(q);
    for (int i = bits_degree(p); i >= dq; i = bits_degree(p))
        p ^= q << (i - dq);
    return p;
}

// Trial division by every binary polynomial of degree 1..deg/2.
inline bool gf2_bits_irreducible(uint64_t p) {
    const int d = bits_degree(p);
    if (d < 1) throw std::logic_error("constant polynomial");
    for (uint64_t q = 2; bits_degree(q) <= d / 2; ++q)
        if (bits_mod(p, q) == 0) return false;
    return true;
}

// --- trial-division irreducibility over any field context ---
// Uses only ring division, never the distinct-degree test it cross-checks.

inline bool trial_division_irreducible(const stablepoly::Poly& p) {
    const auto& ctx = p.ctx();
    const int d = p.degree();
    if (d < 1) throw std::logic_error("constant polynomial");
    if (d == 1) return true;
    const uint64_t q = ctx.order();
    for (int k = 1; k <= d / 2; ++k) {
        std::vector<uint64_t> odometer(static_cast<size_t>(k), 0);
        while (true) {
            std::vector<stablepoly::FieldElem> cs;
            cs.reserve(static_cast<size_t>(k) + 1);
            for (uint64_t coord : odometer) cs.push_back(ctx.elem(coord));
            cs.push_back(ctx.one());  // monic candidate divisor
            if (poly_mod(p, stablepoly::Poly(ctx, std::move(cs))).is_zero()) return false;
            size_t pos = 0;
            while (pos < odometer.size() && ++odometer[pos] == q) odometer[pos++] = 0;
            if (pos == odometer.size()) break;
        }
    }
    return true;
}

// --- absolute trace over an extension by the direct power sum ---
// The library routes through the relative trace; this sums beta^(2^i) directly.

inline int direct_abs_trace(const stablepoly::ExtCtx& ext, const stablepoly::ExtElem& beta) {
    stablepoly::ExtElem acc = beta;
    stablepoly::ExtElem cur = beta;
    for (int i = 1; i < ext.field_bits(); ++i) {
        cur = cur * cur;
        acc = acc + cur;
    }
    if (acc.is_zero()) return 0;
    if (acc.is_one()) return 1;
    throw std::logic_error("absolute trace sum is not a bit");
}

// --- bounded factor search in F_2[t][x] ---
// Looks for p = g * h with both x-degrees >= 1 and all non-leading
// coefficients of t-degree <= coeff_deg_max; factors are taken monic in x
// (the only unit of F_2[t] is 1). Returns true when a factorization exists.

inline std::vector<stablepoly::TPoly> all_tpolys_up_to(int deg_max) {
    std::vector<stablepoly::TPoly> out;
    for (uint64_t bits = 0; bits < (1ull << (deg_max + 1)); ++bits)
        out.push_back(stablepoly::TPoly::from_bits(bits));
    return out;
}

inline bool has_bounded_factorization(const stablepoly::FFPoly& p, int coeff_deg_max) {
    const long d = p.degree_x();
    if (d < 2) return false;
    const std::vector<stablepoly::TPoly> pool = all_tpolys_up_to(coeff_deg_max);
    for (long dg = 1; dg <= d / 2; ++dg) {
        const long dh = d - dg;
        std::vector<size_t> odometer(static_cast<size_t>(dg + dh), 0);
        while (true) {
            std::vector<stablepoly::TPoly> gc(static_cast<size_t>(dg) + 1);
            std::vector<stablepoly::TPoly> hc(static_cast<size_t>(dh) + 1);
            for (long i = 0; i < dg; ++i) gc[static_cast<size_t>(i)] = pool[odometer[static_cast<size_t>(i)]];
            gc[static_cast<size_t>(dg)] = stablepoly::TPoly::one();
            for (long i = 0; i < dh; ++i)
                hc[static_cast<size_t>(i)] = pool[odometer[static_cast<size_t>(dg + i)]];
            hc[static_cast<size_t>(dh)] = stablepoly::TPoly::one();
            if (ffpoly_mul(stablepoly::FFPoly::from_dense(gc), stablepoly::FFPoly::from_dense(hc)) == p)
                return true;
            size_t pos = 0;
            while (pos < odometer.size() && ++odometer[pos] == pool.size()) odometer[pos++] = 0;
            if (pos == odometer.size()) break;
        }
    }
    return false;
}

}  // namespace oracles

#endif  // STABLEPOLY_TESTS_ORACLES_HPP_
