#include "stablepoly/extension.hpp"

namespace stablepoly {

ExtCtx::ExtCtx(const FieldCtx& base, const Poly& h) : base_(base), h_(make_monic(h)), n_(h.degree()) {
    if (&h.ctx() != &base) throw ContextMismatch("extension modulus over a different base context");
    if (n_ < 1) throw DegreeMismatch("extension modulus must have degree >= 1");
    if (!is_irreducible(h_)) throw ReducibleModulus("extension modulus is reducible over the base field");
}

ExtCtx make_extension(const FieldCtx& base, const Poly& h) { return ExtCtx(base, h); }

ExtElem ExtCtx::alpha() const { return from_poly(Poly::x(base_)); }

ExtElem ExtCtx::embed(FieldElem c) const {
    if (&c.ctx() != &base_) throw ContextMismatch("embedding element from a different base field");
    return ExtElem(Poly(base_, {c}), this);
}

ExtElem ExtCtx::from_poly(const Poly& p) const {
    if (&p.ctx() != &base_) throw ContextMismatch("residue of a polynomial over a different base");
    return ExtElem(poly_mod(p, h_), this);
}

ExtElem ExtCtx::add(const ExtElem& x, const ExtElem& y) const {
    check_ctx(x);
    check_ctx(y);
    return ExtElem(poly_add(x.rep_, y.rep_), this);
}

ExtElem ExtCtx::mul(const ExtElem& x, const ExtElem& y) const {
    check_ctx(x);
    check_ctx(y);
    return ExtElem(poly_mod(poly_mul(x.rep_, y.rep_), h_), this);
}

ExtElem ExtCtx::inv(const ExtElem& x) const {
    check_ctx(x);
    if (x.is_zero()) throw DivisionByZero("inverse of zero extension element");
    // h irreducible and x nonzero of degree < n, so gcd(rep, h) = 1 and the
    // Bezout coefficient of rep is the inverse mod h.
    Egcd<FieldElem> e = poly_egcd(x.rep_, h_);
    return ExtElem(poly_mod(e.u, h_), this);
}

ExtElem ExtCtx::pow(const ExtElem& x, uint64_t k) const {
    check_ctx(x);
    ExtElem r = one();
    ExtElem base = x;
    while (k != 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

ExtElem ExtCtx::frobenius_q(const ExtElem& x) const {
    check_ctx(x);
    Poly rep = x.rep_;
    for (int i = 0; i < base_.field_bits(); ++i) rep = poly_square_mod(rep, h_);
    return ExtElem(std::move(rep), this);
}

FieldElem ExtCtx::rel_trace(const ExtElem& beta) const {
    check_ctx(beta);
    ExtElem acc = beta;
    ExtElem cur = beta;
    for (int i = 1; i < n_; ++i) {
        cur = frobenius_q(cur);
        acc = add(acc, cur);
    }
    if (acc.rep().degree() > 0)
        throw Error("relative trace left the base field; extension modulus arithmetic is broken");
    return acc.rep().is_zero() ? base_.zero() : acc.rep().coeff(0);
}

int ExtCtx::abs_trace(const ExtElem& beta) const { return base_.abs_trace(rel_trace(beta)); }

}  // namespace stablepoly
