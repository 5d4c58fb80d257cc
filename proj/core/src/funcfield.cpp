#include "stablepoly/funcfield.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include <json.hpp>

namespace stablepoly {

namespace {

constexpr int kWordBits = 64;

// Interleave a byte's bits with zeros: abcdefgh -> 0a0b0c0d0e0f0g0h.
constexpr std::array<uint16_t, 256> make_spread_table() {
    std::array<uint16_t, 256> table{};
    for (unsigned v = 0; v < 256; ++v) {
        uint16_t s = 0;
        for (int b = 0; b < 8; ++b)
            if ((v >> b) & 1) s = static_cast<uint16_t>(s | (1u << (2 * b)));
        table[v] = s;
    }
    return table;
}

uint64_t spread32(uint32_t v) {
    static constexpr std::array<uint16_t, 256> table = make_spread_table();
    return static_cast<uint64_t>(table[v & 0xff]) |
           static_cast<uint64_t>(table[(v >> 8) & 0xff]) << 16 |
           static_cast<uint64_t>(table[(v >> 16) & 0xff]) << 32 |
           static_cast<uint64_t>(table[(v >> 24) & 0xff]) << 48;
}

void xor_shifted(std::vector<uint64_t>& acc, const std::vector<uint64_t>& src, uint64_t offset) {
    const size_t word_off = offset / kWordBits;
    const int bit_off = static_cast<int>(offset % kWordBits);
    for (size_t k = 0; k < src.size(); ++k) {
        acc[word_off + k] ^= src[k] << bit_off;
        if (bit_off != 0) acc[word_off + k + 1] ^= src[k] >> (kWordBits - bit_off);
    }
}

}  // namespace

void TPoly::normalize() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

TPoly TPoly::from_bits(uint64_t bits) {
    TPoly p;
    if (bits != 0) p.w_.push_back(bits);
    return p;
}

TPoly TPoly::monomial(uint64_t k) {
    TPoly p;
    p.w_.assign(k / kWordBits + 1, 0);
    p.w_.back() = 1ull << (k % kWordBits);
    return p;
}

long TPoly::degree() const {
    if (w_.empty()) return -1;
    uint64_t top = w_.back();
    int bit = kWordBits - 1;
    while (((top >> bit) & 1) == 0) --bit;
    return static_cast<long>((w_.size() - 1) * kWordBits) + bit;
}

bool TPoly::bit(uint64_t i) const {
    const size_t word = i / kWordBits;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % kWordBits)) & 1;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly out;
    out.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= w_[i];
    for (size_t i = 0; i < o.w_.size(); ++i) out.w_[i] ^= o.w_[i];
    out.normalize();
    return out;
}

TPoly TPoly::squared() const {
    TPoly out;
    out.w_.assign(2 * w_.size(), 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        out.w_[2 * i] = spread32(static_cast<uint32_t>(w_[i]));
        out.w_[2 * i + 1] = spread32(static_cast<uint32_t>(w_[i] >> 32));
    }
    out.normalize();
    return out;
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    if (*this == o) return squared();  // (sum t^i)^2 = sum t^2i over GF(2)
    TPoly out;
    out.w_.assign(w_.size() + o.w_.size(), 0);
    for (size_t wi = 0; wi < w_.size(); ++wi) {
        uint64_t word = w_[wi];
        while (word != 0) {
            const int j = std::countr_zero(word);
            word &= word - 1;
            xor_shifted(out.w_, o.w_, wi * kWordBits + static_cast<uint64_t>(j));
        }
    }
    out.normalize();
    return out;
}

std::pair<TPoly, TPoly> tpoly_divmod(const TPoly& p, const TPoly& q) {
    if (q.is_zero()) throw DivisionByZero("division by the zero polynomial in F_2[t]");
    const long dq = q.degree();
    const long dp = p.degree();
    if (dp < dq) return {TPoly(), p};
    std::vector<uint64_t> rw(p.words());
    rw.push_back(0);  // headroom for shifted xors
    std::vector<uint64_t> qw(static_cast<size_t>(dp - dq) / 64 + 1, 0);
    const auto degree_of = [](const std::vector<uint64_t>& w) -> long {
        for (size_t i = w.size(); i-- > 0;)
            if (w[i] != 0) return static_cast<long>(i) * 64 + (63 - std::countl_zero(w[i]));
        return -1;
    };
    for (long deg = degree_of(rw); deg >= dq; deg = degree_of(rw)) {
        const uint64_t shift = static_cast<uint64_t>(deg - dq);
        qw[shift / 64] ^= 1ull << (shift % 64);
        xor_shifted(rw, q.words(), shift);
    }
    TPoly quot, rem;
    quot.w_ = std::move(qw);
    quot.normalize();
    rem.w_ = std::move(rw);
    rem.normalize();
    return {quot, rem};
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (!bit(static_cast<uint64_t>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0) out += '1';
        else if (i == 1) out += 't';
        else out += "t^" + std::to_string(i);
    }
    return out;
}

void FFPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<uint64_t, TPoly>> merged;
    for (auto& [deg, coeff] : terms_) {
        if (!merged.empty() && merged.back().first == deg) merged.back().second += coeff;
        else merged.emplace_back(deg, std::move(coeff));
    }
    std::erase_if(merged, [](const auto& term) { return term.second.is_zero(); });
    terms_ = std::move(merged);
}

FFPoly::FFPoly(std::vector<std::pair<uint64_t, TPoly>> terms) : terms_(std::move(terms)) { normalize(); }

FFPoly FFPoly::from_dense(const std::vector<TPoly>& dense) {
    std::vector<std::pair<uint64_t, TPoly>> terms;
    for (size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) terms.emplace_back(i, dense[i]);
    return FFPoly(std::move(terms));
}

const TPoly& FFPoly::coeff(uint64_t i) const {
    static const TPoly zero;
    for (const auto& [deg, c] : terms_)
        if (deg == i) return c;
    return zero;
}

const TPoly& FFPoly::leading() const {
    static const TPoly zero;
    return terms_.empty() ? zero : terms_.back().second;
}

std::string FFPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [deg, c] = *it;
        if (!out.empty()) out += " + ";
        std::string cs = c.is_one() ? "" : "(" + c.to_string() + ")";
        if (deg == 0) out += cs.empty() ? "1" : cs;
        else {
            if (!cs.empty()) out += cs + "*";
            out += deg == 1 ? "x" : "x^" + std::to_string(deg);
        }
    }
    return out;
}

FFPoly ffpoly_add(const FFPoly& a, const FFPoly& b) {
    std::vector<std::pair<uint64_t, TPoly>> terms(a.terms());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return FFPoly(std::move(terms));
}

FFPoly ffpoly_mul(const FFPoly& a, const FFPoly& b) {
    std::map<uint64_t, TPoly> acc;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) acc[da + db] += ca * cb;
    std::vector<std::pair<uint64_t, TPoly>> terms(acc.begin(), acc.end());
    return FFPoly(std::move(terms));
}

FFPoly ffpoly_compose(const FFPoly& outer, const FFPoly& inner) {
    FFPoly acc;
    FFPoly power({{0, TPoly::one()}});  // inner^0
    uint64_t power_deg = 0;
    for (const auto& [deg, c] : outer.terms()) {
        for (; power_deg < deg; ++power_deg) power = ffpoly_mul(power, inner);
        acc = ffpoly_add(acc, ffpoly_mul(FFPoly({{0, c}}), power));
    }
    return acc;
}

FFPoly stable_quadratic() { return FFPoly({{2, TPoly::one()}, {0, TPoly::t()}}); }

FFPoly closed_form_iterate(int n) {
    if (n < 1 || n > kMaxClosedFormDepth)
        throw IterationTooDeep("closed-form iterate depth must be in 1.." +
                               std::to_string(kMaxClosedFormDepth) + ", got " + std::to_string(n));
    TPoly constant;
    for (int i = 0; i < n; ++i) constant += TPoly::monomial(1ull << i);
    return FFPoly({{1ull << n, TPoly::one()}, {0, std::move(constant)}});
}

bool eisenstein_at_t(const FFPoly& p) {
    if (p.degree_x() < 1) throw ConstantPolynomial("Eisenstein needs degree >= 1 in x");
    const auto divisible_by_t = [](const TPoly& c) { return c.is_zero() || !c.bit(0); };
    if (divisible_by_t(p.leading())) return false;
    const uint64_t top = static_cast<uint64_t>(p.degree_x());
    for (const auto& [deg, c] : p.terms())
        if (deg != top && !divisible_by_t(c)) return false;
    const TPoly& c0 = p.coeff(0);
    // t | c0 already holds here; reject c0 = 0 or t^2 | c0.
    return !c0.is_zero() && c0.bit(1);
}

StabilityTranscript verify_stable_example(int n_max) {
    if (n_max < 1 || n_max > kMaxClosedFormDepth)
        throw IterationTooDeep("stable-example depth must be in 1.." +
                               std::to_string(kMaxClosedFormDepth) + ", got " + std::to_string(n_max));
    const FFPoly f = stable_quadratic();
    StabilityTranscript transcript;
    FFPoly cur;
    TPoly prev_constant;  // constant term of f^(n-1); f^(0) = x has constant 0
    for (int n = 1; n <= n_max; ++n) {
        cur = n == 1 ? f : ffpoly_compose(f, cur);
        StabilityEntry e;
        e.n = n;
        e.matches_closed_form = cur == closed_form_iterate(n);
        e.eisenstein_holds = eisenstein_at_t(cur);
        e.binomial_shape = cur.term_count() == 2 && cur.terms().front().first == 0 &&
                           cur.terms().back().first == (1ull << n);
        const TPoly& s_n = cur.coeff(0);
        e.recurrence_holds = s_n == prev_constant + TPoly::monomial(1ull << (n - 1));
        e.primitive = cur.leading().is_one();
        transcript.push_back(e);
        prev_constant = s_n;
    }
    return transcript;
}

std::string stability_transcript_json(const StabilityTranscript& transcript) {
    nlohmann::json arr = nlohmann::json::array();
    for (const StabilityEntry& e : transcript)
        arr.push_back({{"n", e.n},
                       {"closed_form", e.matches_closed_form},
                       {"eisenstein", e.eisenstein_holds},
                       {"binomial_shape", e.binomial_shape},
                       {"recurrence", e.recurrence_holds},
                       {"primitive", e.primitive},
                       {"holds", e.holds()}});
    return arr.dump();
}

}  // namespace stablepoly
