#ifndef STABLEPOLY_FUNCFIELD_HPP_
#define STABLEPOLY_FUNCFIELD_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stablepoly/errors.hpp"

namespace stablepoly {

/// Polynomial in t over GF(2), stored as a dense bitvector (bit i of the
/// word array = coefficient of t^i). Always normalized: no trailing zero
/// words, zero = empty.
class TPoly {
  public:
    TPoly() = default;

    static TPoly one() { return from_bits(1); }
    static TPoly t() { return from_bits(2); }
    static TPoly monomial(uint64_t k);
    /// Low 64 coefficients from an integer bit mask.
    static TPoly from_bits(uint64_t bits);

    long degree() const;  // -1 for zero
    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    bool bit(uint64_t i) const;

    TPoly operator+(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    bool operator==(const TPoly& o) const = default;

    const std::vector<uint64_t>& words() const { return w_; }

    std::string to_string() const;  // "t^4+t^2+t"

  private:
    friend std::pair<TPoly, TPoly> tpoly_divmod(const TPoly& p, const TPoly& q);

    void normalize();
    TPoly squared() const;

    std::vector<uint64_t> w_;
};

inline TPoly tpoly_add(const TPoly& p, const TPoly& q) { return p + q; }
inline TPoly tpoly_mul(const TPoly& p, const TPoly& q) { return p * q; }

/// Quotient and remainder with deg(rem) < deg(q). Throws DivisionByZero.
std::pair<TPoly, TPoly> tpoly_divmod(const TPoly& p, const TPoly& q);

/// Polynomial in x with coefficients in F_2[t], stored sparsely in x as
/// (x-degree, coefficient) terms sorted by ascending degree with no zero
/// coefficients. Iterates of x^2 + t keep exactly two terms while their
/// t-coefficients grow, which is what this layout is for.
class FFPoly {
  public:
    FFPoly() = default;
    /// Terms in any order; equal degrees are combined, zeros dropped.
    explicit FFPoly(std::vector<std::pair<uint64_t, TPoly>> terms);
    /// Dense coefficient list, index = degree in x.
    static FFPoly from_dense(const std::vector<TPoly>& dense);

    static FFPoly x() { return FFPoly({{1, TPoly::one()}}); }

    bool is_zero() const { return terms_.empty(); }
    long degree_x() const { return terms_.empty() ? -1 : static_cast<long>(terms_.back().first); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<uint64_t, TPoly>>& terms() const { return terms_; }

    /// Coefficient of x^i (reference to a shared zero when absent).
    const TPoly& coeff(uint64_t i) const;
    const TPoly& leading() const;

    bool operator==(const FFPoly& o) const = default;

    std::string to_string() const;  // "x^8 + (t^4+t^2+t)"

  private:
    void normalize();

    std::vector<std::pair<uint64_t, TPoly>> terms_;
};

FFPoly ffpoly_add(const FFPoly& a, const FFPoly& b);
FFPoly ffpoly_mul(const FFPoly& a, const FFPoly& b);
/// outer(inner(x)) with F_2[t] coefficient arithmetic.
FFPoly ffpoly_compose(const FFPoly& outer, const FFPoly& inner);

/// f(x) = x^2 + t, the stable example.
FFPoly stable_quadratic();

inline constexpr int kMaxClosedFormDepth = 30;

/// The n-th iterate of x^2 + t in closed form:
/// x^(2^n) + t^(2^(n-1)) + ... + t^2 + t. Throws IterationTooDeep outside 1..30.
FFPoly closed_form_iterate(int n);

/// Eisenstein's criterion at the prime t: leading x-coefficient not
/// divisible by t, every other x-coefficient divisible by t, constant
/// x-coefficient not divisible by t^2. For primitive p this certifies
/// irreducibility over F_2(t). Throws ConstantPolynomial for deg_x < 1.
bool eisenstein_at_t(const FFPoly& p);

struct StabilityEntry {
    int n = 0;
    bool matches_closed_form = false;
    bool eisenstein_holds = false;
    bool binomial_shape = false;    // exactly the leading and constant terms
    bool recurrence_holds = false;  // s_n = s_{n-1} + t^(2^(n-1))
    bool primitive = false;         // leading coefficient 1

    bool holds() const {
        return matches_closed_form && eisenstein_holds && binomial_shape && recurrence_holds &&
               primitive;
    }
};

using StabilityTranscript = std::vector<StabilityEntry>;

/// Checks, for each n <= n_max, that the composed iterate of x^2 + t equals
/// the closed form and passes Eisenstein at t, plus the shape invariants.
StabilityTranscript verify_stable_example(int n_max);

std::string stability_transcript_json(const StabilityTranscript& transcript);

}  // namespace stablepoly

#endif  // STABLEPOLY_FUNCFIELD_HPP_
