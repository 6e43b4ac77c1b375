#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmu/context.hpp"

namespace kmu {

using Int = mpz_class;

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class Polynomial;

/// Thrown by exact_div; carries the nonzero remainder as a witness.
struct InexactDivisionError : Error {
    InexactDivisionError(const std::string& msg, std::string remainder_text)
        : Error(msg + " (remainder: " + remainder_text + ")"),
          remainder(std::move(remainder_text)) {}
    std::string remainder;  // canonical text of a - q*d
};

/// Sparse exact multivariate polynomial over arbitrary-precision integers.
/// Immutable value type; all arithmetic is exact.
class Polynomial {
public:
    struct MonoLess {
        ContextPtr ctx;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ctx->mono_less(a, b);
        }
    };
    using TermMap = std::map<Monomial, Int, MonoLess>;

    explicit Polynomial(ContextPtr ctx);

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, Int value);
    static Polynomial variable(ContextPtr ctx, const std::string& name);
    static Polynomial monomial(ContextPtr ctx, Monomial m, Int coeff);

    /// Recursive-descent parser for the expression grammar: integer
    /// literals, declared variables, + - * ^ ( ), unary minus; '^' takes a
    /// non-negative integer literal exponent.
    static Polynomial parse(ContextPtr ctx, const std::string& text);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree() const;  // total degree; 0 for the zero polynomial

    /// Leading (largest) monomial/coefficient in the context's order.
    const Monomial& leading_monomial() const;
    const Int& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Int& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact quotient: returns q with *this == q * d, or throws
    /// InexactDivisionError when no such q exists in the polynomial ring.
    Polynomial exact_div(const Polynomial& d) const;

    /// Ring homomorphism: every context variable must have an image and all
    /// images must share target_ctx.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment,
                          const ContextPtr& target_ctx) const;

    /// Same-context substitution; unmapped variables map to themselves.
    Polynomial substitute_partial(
        const std::map<std::string, Polynomial>& assignment) const;

    /// Re-express in a context containing (at least) all our variables.
    Polynomial embedded(const ContextPtr& super) const;

    /// Requires every term to have joint degree exactly 1 in zvars; returns
    /// coefficients c_k with *this == sum c_k * zvar_k, each free of zvars.
    std::vector<Polynomial> linear_coeffs(
        const std::vector<std::string>& zvars) const;

    /// GCD of all coefficients (non-negative); 0 for the zero polynomial.
    Int content() const;
    /// *this divided by its content, sign fixed so the leading coefficient
    /// is positive. The zero polynomial maps to itself.
    Polynomial primitive_part() const;

    /// Canonical form: terms in strictly decreasing monomial order,
    /// coefficient then '*'-separated powers, '^' for exponents > 1.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Int& c);
    ContextPtr ctx_;
    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

/// Ambient context plus an ordered generator list; order and signs are part
/// of the value.
struct Ideal {
    ContextPtr context;
    std::vector<Polynomial> gens;

    Ideal(ContextPtr ctx, std::vector<Polynomial> g);
};

}  // namespace kmu
