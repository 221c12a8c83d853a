#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/rational.hpp"

namespace ybx {

// Exponent vector of a monomial; length always equals the context arity.
using ExpVec = std::vector<std::int32_t>;

/**
 * Ambient ring of formal generators, e.g. [q, p] or [s, K1, K2, K3].
 * Value type: two contexts are compatible iff their generator lists match.
 */
class RingCtx {
public:
    RingCtx() = default;
    explicit RingCtx(std::vector<std::string> gens);

    std::size_t arity() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::string& gen(std::size_t idx) const { return gens_.at(idx); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool has(const std::string& name) const { return index_of(name).has_value(); }

    // Same generators plus any of `more` not already present, in order.
    RingCtx extended(const std::vector<std::string>& more) const;

    friend bool operator==(const RingCtx&, const RingCtx&) = default;

private:
    std::vector<std::string> gens_;
};

// A scalar multiple of a single power product; the only substitution images
// mono_subst accepts. coeff must be nonzero.
struct Monomial {
    Rational coeff{1};
    ExpVec exps;
};

/**
 * Sparse multivariate Laurent polynomial over Q.
 *
 * Canonical form: no stored coefficient is zero, so two polynomials are
 * equal iff their term maps are identical. Exponents may be negative.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(RingCtx ctx = RingCtx{}) : ctx_(std::move(ctx)) {}

    static LaurentPoly constant(const RingCtx& ctx, const Rational& c);
    static LaurentPoly generator(const RingCtx& ctx, const std::string& name, std::int32_t exp = 1);
    static LaurentPoly monomial(const RingCtx& ctx, const Monomial& m);

    const RingCtx& ctx() const { return ctx_; }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const Rational& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly operator/(const Rational& c) const;
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    // Ordering on canonical term maps; used where polynomials serve as keys.
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

    // Positive gcd of the absolute coefficient values (0 for the zero poly).
    Rational content() const;
    // Coefficient of the lexicographically least monomial; poly must be nonzero.
    const Rational& lex_least_coeff() const;

    // Remap every monomial by substituting each generator with a fixed
    // monomial image over `target`. Generators without an explicit image map
    // to themselves, which then must exist in `target`. A ring homomorphism.
    LaurentPoly subst(const std::map<std::string, Monomial>& images, const RingCtx& target) const;
    LaurentPoly subst(const std::map<std::string, Monomial>& images) const { return subst(images, ctx_); }

    // Re-express over another context. Generators absent from `target` must
    // have zero exponent in every term.
    LaurentPoly to_ctx(const RingCtx& target) const;

    // Exact quotient this/g in the Laurent ring, or nullopt when g does not
    // divide. Throws division_by_zero when g = 0.
    std::optional<LaurentPoly> exact_div(const LaurentPoly& g) const;

    // Split by the exponent of one generator: exponent -> cofactor with that
    // generator's exponent zeroed (same context).
    std::map<std::int32_t, LaurentPoly> decompose_by(const std::string& name) const;

    std::string to_string() const;

private:
    RingCtx ctx_;
    std::map<ExpVec, Rational> terms_;

    void require_same_ctx(const LaurentPoly& other) const;
};

/**
 * Rational function num/den over a RingCtx.
 *
 * Equality is by cross-multiplication (a/b = c/d iff ad = cb); storage is not
 * GCD-reduced. Display normalization: den is scaled so its lexicographically
 * least monomial has positive coefficient and the coefficients are coprime
 * integers.
 */
class RatFn {
public:
    explicit RatFn(RingCtx ctx = RingCtx{})
        : num_(LaurentPoly(ctx)), den_(LaurentPoly::constant(ctx, 1)) {}
    RatFn(LaurentPoly num, LaurentPoly den);
    explicit RatFn(LaurentPoly num);

    static RatFn constant(const RingCtx& ctx, const Rational& c);
    static RatFn generator(const RingCtx& ctx, const std::string& name, std::int32_t exp = 1);

    const RingCtx& ctx() const { return num_.ctx(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // True when den = 1 after normalization; num() is then the value.
    bool is_poly() const { return den_.is_one(); }
    // Convert to a Laurent polynomial by exact division; not_polynomial if impossible.
    LaurentPoly as_poly() const;

    RatFn operator-() const;
    RatFn pow(int e) const;

    RatFn subst(const std::map<std::string, Monomial>& images, const RingCtx& target) const;
    RatFn subst(const std::map<std::string, Monomial>& images) const { return subst(images, ctx()); }
    RatFn to_ctx(const RingCtx& target) const;

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

RatFn ring_add(const RatFn& a, const RatFn& b);
RatFn ring_sub(const RatFn& a, const RatFn& b);
RatFn ring_mul(const RatFn& a, const RatFn& b);
RatFn ring_div(const RatFn& a, const RatFn& b);
RatFn ring_neg(const RatFn& a);
bool ring_eq(const RatFn& a, const RatFn& b);

inline RatFn operator+(const RatFn& a, const RatFn& b) { return ring_add(a, b); }
inline RatFn operator-(const RatFn& a, const RatFn& b) { return ring_sub(a, b); }
inline RatFn operator*(const RatFn& a, const RatFn& b) { return ring_mul(a, b); }
inline RatFn operator/(const RatFn& a, const RatFn& b) { return ring_div(a, b); }

// Monomial substitution on a rational function; throws division_by_zero when
// the substituted denominator vanishes (possible only for constant images).
RatFn mono_subst(const RatFn& f, const std::map<std::string, Monomial>& images);
RatFn mono_subst(const RatFn& f, const std::map<std::string, Monomial>& images, const RingCtx& target);

// Parse a monomial image from expression text; unsupported_substitution if
// the expression is not a single scalar-times-power-product.
Monomial monomial_of(const RatFn& f);

} // namespace ybx
