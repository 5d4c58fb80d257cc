#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stablepoly/extension.hpp"

using namespace stablepoly;

namespace {

Poly from_coords(const FieldCtx& ctx, std::initializer_list<uint64_t> coords) {
    std::vector<FieldElem> cs;
    for (uint64_t c : coords) cs.push_back(ctx.elem(c));
    return Poly(ctx, std::move(cs));
}

// All q^n residue representatives of the extension.
std::vector<ExtElem> all_ext_elems(const ExtCtx& ext) {
    const FieldCtx& base = ext.base();
    const uint64_t q = base.order();
    const int n = ext.ext_degree();
    std::vector<ExtElem> out;
    std::vector<uint64_t> odo(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<FieldElem> cs;
        for (uint64_t v : odo) cs.push_back(base.elem(v));
        out.push_back(ext.from_poly(Poly(base, std::move(cs))));
        size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == q) odo[pos++] = 0;
        if (pos == odo.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("extension construction") {
    const FieldCtx& f2 = FieldCtx::gf2();
    SUBCASE("GF(16) over GF(2): alpha^4 = alpha + 1") {
        ExtCtx ext(f2, from_coords(f2, {1, 1, 0, 0, 1}));
        CHECK(ext.ext_degree() == 4);
        CHECK(ext.field_bits() == 4);
        ExtElem a = ext.alpha();
        ExtElem a4 = a * a * a * a;
        CHECK(a4 == ext.alpha() + ext.one());
    }
    SUBCASE("reducible modulus rejected") {
        CHECK_THROWS_AS(make_extension(f2, from_coords(f2, {1, 0, 1})), ReducibleModulus);
    }
    SUBCASE("GF(16) as a quadratic extension of GF(4)") {
        FieldCtx f4 = make_field(2);
        // count monic irreducible quadratics over GF(4) with the trace criterion
        int count = 0;
        Poly witness(f4);
        for (uint64_t av = 0; av < 4; ++av)
            for (uint64_t bv = 0; bv < 4; ++bv)
                if (quad_irred_trace(f4.one(), f4.elem(av), f4.elem(bv))) {
                    ++count;
                    witness = Poly(f4, {f4.elem(bv), f4.elem(av), f4.one()});
                }
        CHECK(count == 6);  // (q^2 - q)/2 at q = 4
        ExtCtx ext(f4, witness);
        CHECK(ext.field_bits() == 4);
        // h(alpha) = 0 in the quotient ring
        ExtElem val = ext.zero();
        for (int i = ext.modulus().degree(); i >= 0; --i)
            val = val * ext.alpha() + ext.embed(ext.modulus().coeff(i));
        CHECK(val.is_zero());
    }
    SUBCASE("degree-1 extension is legal (used by the Capelli base case)") {
        ExtCtx ext(f2, from_coords(f2, {1, 1}));  // F_2[x]/(x+1)
        CHECK(ext.ext_degree() == 1);
        CHECK(ext.alpha() == ext.one());  // x = 1 mod x+1
        CHECK(ext.rel_trace(ext.alpha()) == f2.one());
    }
    SUBCASE("constant modulus rejected") {
        CHECK_THROWS_AS(make_extension(f2, from_coords(f2, {1})), DegreeMismatch);
    }
}

TEST_CASE("quotient arithmetic") {
    const FieldCtx& f2 = FieldCtx::gf2();
    ExtCtx ext(f2, from_coords(f2, {1, 1, 0, 0, 1}));  // GF(16)
    auto elems = all_ext_elems(ext);
    REQUIRE(elems.size() == 16);
    for (const ExtElem& e : elems) {
        if (e.is_zero()) {
            CHECK_THROWS_AS(ext.inv(e), DivisionByZero);
            continue;
        }
        CHECK(e * ext.inv(e) == ext.one());
        CHECK(ext.pow(e, 15) == ext.one());
    }
    SUBCASE("context mixing") {
        ExtCtx other(f2, from_coords(f2, {1, 1, 0, 0, 1}));
        CHECK_THROWS_AS((void)(ext.one() + other.one()), ContextMismatch);
    }
}

TEST_CASE("relative trace") {
    const FieldCtx& f2 = FieldCtx::gf2();
    ExtCtx ext(f2, from_coords(f2, {1, 1, 0, 0, 1}));  // GF(2)[x]/(x^4+x+1)
    // alpha + alpha^2 + alpha^4 + alpha^8 = 0
    CHECK(ext.rel_trace(ext.alpha()) == f2.zero());
    CHECK(ext.rel_trace(ext.zero()) == f2.zero());
    // n = 4 is even: trace of 1 is 4 * 1 = 0
    CHECK(ext.rel_trace(ext.one()) == f2.zero());
    CHECK(ext.abs_trace(ext.one()) == 0);
    CHECK(ext.abs_trace(ext.alpha()) == 0);
    CHECK(ext.abs_trace(ext.zero()) == 0);

    SUBCASE("the trace lands in the base field") {
        for (const ExtElem& e : all_ext_elems(ext)) {
            // recheck structurally: the sum is fixed by x -> x^q
            ExtElem sum = e;
            ExtElem cur = e;
            for (int i = 1; i < ext.ext_degree(); ++i) {
                cur = ext.frobenius_q(cur);
                sum = sum + cur;
            }
            REQUIRE(ext.frobenius_q(sum) == sum);
            REQUIRE(sum.rep().degree() <= 0);
        }
    }
}

TEST_CASE("trace transitivity matches the direct power sum") {
    SUBCASE("exhaustive at GF(16) and GF(64), all tower shapes") {
        const std::vector<std::pair<int, int>> towers = {{1, 4}, {2, 2}, {1, 6}, {2, 3}, {3, 2}};
        for (auto [m, n] : towers) {
            CAPTURE(m);
            CAPTURE(n);
            FieldCtx base = make_field(m);
            // find an irreducible degree-n polynomial by scanning coordinates
            Poly h(base);
            const uint64_t q = base.order();
            std::vector<uint64_t> odo(static_cast<size_t>(n), 0);
            bool found = false;
            while (!found) {
                std::vector<FieldElem> cs;
                for (uint64_t v : odo) cs.push_back(base.elem(v));
                cs.push_back(base.one());
                Poly cand(base, std::move(cs));
                if (is_irreducible(cand)) {
                    h = cand;
                    found = true;
                }
                size_t pos = 0;
                while (pos < odo.size() && ++odo[pos] == q) odo[pos++] = 0;
                if (pos == odo.size()) break;
            }
            REQUIRE(found);
            ExtCtx ext(base, h);
            for (const ExtElem& e : all_ext_elems(ext))
                REQUIRE(ext.abs_trace(e) == oracles::direct_abs_trace(ext, e));
        }
    }
    SUBCASE("randomized for larger towers with mn <= 12") {
        std::mt19937_64 rng(2024);
        const std::vector<std::pair<int, int>> towers = {{3, 4}, {4, 3}, {6, 2}, {2, 6}};
        for (auto [m, n] : towers) {
            FieldCtx base = make_field(m);
            // random monic polynomials until an irreducible shows up
            Poly h(base);
            for (;;) {
                std::vector<FieldElem> cs;
                for (int i = 0; i < n; ++i) cs.push_back(base.elem(rng() % base.order()));
                cs.push_back(base.one());
                Poly cand(base, std::move(cs));
                if (is_irreducible(cand)) {
                    h = cand;
                    break;
                }
            }
            ExtCtx ext(base, h);
            for (int trial = 0; trial < 300; ++trial) {
                std::vector<FieldElem> cs;
                for (int i = 0; i < n; ++i) cs.push_back(base.elem(rng() % base.order()));
                ExtElem e = ext.from_poly(Poly(base, std::move(cs)));
                REQUIRE(ext.abs_trace(e) == oracles::direct_abs_trace(ext, e));
            }
        }
    }
}
