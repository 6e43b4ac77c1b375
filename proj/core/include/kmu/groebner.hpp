#pragma once

#include <optional>

#include "kmu/polynomial.hpp"

namespace kmu {

struct GroebnerOptions {
    /// Hard ceiling on the number of S-pairs processed.
    std::size_t max_pairs = 200000;
    /// Soft guard; computations above this variable count emit a warning
    /// through the stats, not a failure.
    std::size_t soft_var_limit = 16;
};

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t basis_size = 0;
    bool var_limit_warning = false;
};

struct ResourceCeilingError : Error {
    ResourceCeilingError(const std::string& msg, GroebnerStats s)
        : Error(msg), stats(s) {}
    GroebnerStats stats;
};

/// Exact rational remainder num/den of division by a basis: den is a
/// positive integer with den * p - num in the ideal. den == 1 whenever the
/// remainder is integral.
struct NormalForm {
    Polynomial numerator;
    Int denominator;
    bool is_zero() const { return numerator.is_zero(); }
};

/// Reduced Groebner basis over the rationals, stored with cleared
/// denominators: each element primitive with positive leading coefficient,
/// interreduced. Deterministic for fixed input and order.
class GroebnerBasis {
public:
    static GroebnerBasis compute(const Ideal& source, GroebnerOptions opts = {});

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    const Ideal& source() const { return source_; }
    const GroebnerStats& stats() const { return stats_; }

    /// Full normal form of p: no term of the numerator is divisible by any
    /// basis leading monomial; zero iff p lies in the ideal over Q.
    NormalForm normal_form(const Polynomial& p) const;

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

private:
    GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> basis, Ideal source,
                  GroebnerStats stats)
        : ctx_(std::move(ctx)),
          basis_(std::move(basis)),
          source_(std::move(source)),
          stats_(stats) {}

    ContextPtr ctx_;
    std::vector<Polynomial> basis_;
    Ideal source_;
    GroebnerStats stats_;
};

struct EqualityWitness {
    std::size_t side = 0;          // 1: generator of left missing from right, 2: converse
    std::size_t generator = 0;     // index into the offending side's generator list
    Polynomial remainder;          // its nonzero normal-form numerator
};

struct IdealEquality {
    bool equal = false;
    std::optional<EqualityWitness> witness;
};

/// Mutual membership of generators over the rationals.
IdealEquality ideal_equal(const Ideal& left, const Ideal& right,
                          GroebnerOptions opts = {});

}  // namespace kmu
