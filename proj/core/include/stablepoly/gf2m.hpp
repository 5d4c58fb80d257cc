#ifndef STABLEPOLY_GF2M_HPP_
#define STABLEPOLY_GF2M_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablepoly/errors.hpp"

namespace stablepoly {

class FieldCtx;

/// An element of GF(2^m), stored as its coordinate bitvector in the
/// polynomial basis of the owning context (bit i = coefficient of z^i).
class FieldElem {
  public:
    using CtxType = FieldCtx;

    uint32_t coords() const { return v_; }
    const FieldCtx& ctx() const { return *ctx_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElem operator+(FieldElem o) const;
    FieldElem operator-(FieldElem o) const { return *this + o; }  // char 2
    FieldElem operator*(FieldElem o) const;
    FieldElem operator/(FieldElem o) const;
    FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
    FieldElem& operator*=(FieldElem o) { return *this = *this * o; }
    bool operator==(FieldElem o) const;
    bool operator!=(FieldElem o) const { return !(*this == o); }

    std::string to_hex() const;

  private:
    friend class FieldCtx;
    FieldElem(uint32_t v, const FieldCtx* c) : v_(v), ctx_(c) {}

    uint32_t v_;
    const FieldCtx* ctx_;
};

/// The binary field GF(2^m), realized as GF(2)[z]/(modulus).
///
/// Immutable after construction; safe to share across threads. Elements hold
/// a pointer to their context, so a context must outlive its elements.
/// For m <= 16 multiplication and inversion go through log/antilog tables
/// built at construction; larger fields use carry-less multiply + reduce.
class FieldCtx {
  public:
    static constexpr int kMaxDegree = 32;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = delete;
    FieldCtx& operator=(FieldCtx&&) = delete;

    int degree() const { return m_; }        // m, the extension degree over GF(2)
    int field_bits() const { return m_; }    // log2 of the field order
    uint64_t order() const { return q_; }    // q = 2^m
    uint64_t modulus() const { return mod_; }
    std::string modulus_hex() const;

    FieldElem zero() const { return FieldElem(0, this); }
    FieldElem one() const { return FieldElem(1, this); }
    FieldElem elem(uint64_t coords) const;
    FieldElem from_hex(std::string_view hex) const;

    FieldElem add(FieldElem x, FieldElem y) const;
    FieldElem mul(FieldElem x, FieldElem y) const;
    FieldElem inv(FieldElem x) const;
    FieldElem pow(FieldElem x, uint64_t k) const;
    FieldElem frobenius(FieldElem x) const { return mul(x, x); }

    /// Absolute trace Tr_{q|2}(x) = x + x^2 + x^4 + ... + x^{2^(m-1)}, as a bit.
    int abs_trace(FieldElem x) const;

    /// Shared GF(2) context (modulus z+1); used to state binary polynomials
    /// such as field moduli as ordinary Poly values.
    static const FieldCtx& gf2();

  private:
    friend FieldCtx make_field(int m, std::optional<uint64_t> modulus);

    struct Unchecked {};
    FieldCtx(int m, uint64_t modulus, Unchecked);

    void check_ctx(FieldElem x) const {
        if (x.ctx_ != this) throw ContextMismatch();
    }
    void build_tables();
    uint32_t raw_mul(uint32_t a, uint32_t b) const;

    int m_;
    uint64_t q_;
    uint64_t mod_;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i for a generator g, i < 2(q-1)
    std::vector<uint32_t> log_;  // log_[x] = i with g^i = x, x != 0
};

/// Builds GF(2^m). With no modulus the default table entry for m is used
/// (numerically smallest irreducible of degree m). A supplied modulus must
/// encode an irreducible binary polynomial of degree exactly m.
FieldCtx make_field(int m, std::optional<uint64_t> modulus = std::nullopt);

/// Default modulus for degree m: the numerically smallest bitvector in
/// [2^m, 2^(m+1)) with nonzero constant term that is irreducible over GF(2).
uint64_t default_modulus(int m);

/// Parses a modulus table file, one line per degree, format "m:hex".
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::pair<int, uint64_t>> load_modulus_table(const std::string& path);

/// Looks up m in a parsed table; throws ParseError when absent.
uint64_t modulus_table_lookup(const std::vector<std::pair<int, uint64_t>>& table, int m);

inline FieldElem add(FieldElem x, FieldElem y) { return x + y; }
inline FieldElem mul(FieldElem x, FieldElem y) { return x * y; }
inline FieldElem inv(FieldElem x) { return x.ctx().inv(x); }
inline FieldElem pow(FieldElem x, uint64_t k) { return x.ctx().pow(x, k); }
inline FieldElem frobenius(FieldElem x) { return x.ctx().frobenius(x); }
inline int abs_trace(FieldElem x) { return x.ctx().abs_trace(x); }

inline FieldElem FieldElem::operator+(FieldElem o) const { return ctx_->add(*this, o); }
inline FieldElem FieldElem::operator*(FieldElem o) const { return ctx_->mul(*this, o); }
inline FieldElem FieldElem::operator/(FieldElem o) const { return ctx_->mul(*this, ctx_->inv(o)); }

inline bool FieldElem::operator==(FieldElem o) const {
    if (ctx_ != o.ctx_) throw ContextMismatch();
    return v_ == o.v_;
}

inline FieldElem FieldCtx::add(FieldElem x, FieldElem y) const {
    check_ctx(x);
    check_ctx(y);
    return FieldElem(x.v_ ^ y.v_, this);
}

}  // namespace stablepoly

#endif  // STABLEPOLY_GF2M_HPP_
