#include "kmu/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace kmu {

namespace {

bool mono_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
    return r;
}

/// Full division with cleared denominators: returns (num, den) with
/// den * p - num in the ideal of `basis` over Q and no term of num
/// divisible by any basis leading monomial. Basis elements must have
/// positive leading coefficients.
NormalForm divide(const Polynomial& p, const std::vector<Polynomial>& basis) {
    ContextPtr ctx = p.context();
    Polynomial work = p;
    Polynomial tail = Polynomial::zero(ctx);
    Int den = 1;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Int& lc = work.leading_coefficient();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis)
            if (mono_divides(g.leading_monomial(), lm)) {
                reducer = &g;
                break;
            }
        if (!reducer) {
            Polynomial lt = Polynomial::monomial(ctx, lm, lc);
            tail = tail + lt;
            work = work - lt;
            continue;
        }
        Int d;
        mpz_gcd(d.get_mpz_t(), lc.get_mpz_t(),
                reducer->leading_coefficient().get_mpz_t());
        Int a = reducer->leading_coefficient() / d;  // positive
        Int b = lc / d;
        Polynomial factor = Polynomial::monomial(
            ctx, mono_div(lm, reducer->leading_monomial()), b);
        work = work * a - factor * *reducer;
        tail = tail * a;
        den *= a;
    }
    // strip the common integer factor
    Int g = tail.content();
    if (g != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
        if (g > 1) {
            Polynomial reduced = Polynomial::zero(ctx);
            for (const auto& [m, c] : tail.terms())
                reduced = reduced + Polynomial::monomial(ctx, m, c / g);
            tail = std::move(reduced);
            den /= g;
        }
    } else {
        den = 1;
    }
    return NormalForm{std::move(tail), std::move(den)};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    ContextPtr ctx = f.context();
    Monomial lcm = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Int d;
    mpz_gcd(d.get_mpz_t(), f.leading_coefficient().get_mpz_t(),
            g.leading_coefficient().get_mpz_t());
    Polynomial mf = Polynomial::monomial(ctx, mono_div(lcm, f.leading_monomial()),
                                         g.leading_coefficient() / d);
    Polynomial mg = Polynomial::monomial(ctx, mono_div(lcm, g.leading_monomial()),
                                         f.leading_coefficient() / d);
    return mf * f - mg * g;
}

}  // namespace

GroebnerBasis GroebnerBasis::compute(const Ideal& source, GroebnerOptions opts) {
    ContextPtr ctx = source.context;
    GroebnerStats stats;
    stats.var_limit_warning = ctx->size() > opts.soft_var_limit;

    std::vector<Polynomial> basis;
    for (const auto& p : source.gens)
        if (!p.is_zero()) basis.push_back(p.primitive_part());

    // pair queue: normal strategy, minimal lcm degree first, then input index
    using Pair = std::tuple<std::uint32_t, std::size_t, std::size_t>;
    std::set<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial lcm = mono_lcm(basis[i].leading_monomial(),
                                    basis[j].leading_monomial());
            queue.emplace(total_degree(lcm), i, j);
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        if (stats.pairs_considered >= opts.max_pairs) {
            stats.basis_size = basis.size();
            throw ResourceCeilingError(
                "buchberger: pair ceiling of " + std::to_string(opts.max_pairs) +
                    " exceeded (" + std::to_string(stats.pairs_considered) +
                    " pairs considered, basis size " + std::to_string(basis.size()) +
                    ")",
                stats);
        }
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        ++stats.pairs_considered;

        const Monomial& mi = basis[i].leading_monomial();
        const Monomial& mj = basis[j].leading_monomial();
        // Buchberger's first criterion: coprime leading monomials
        Monomial lcm = mono_lcm(mi, mj);
        if (total_degree(lcm) == total_degree(mi) + total_degree(mj)) continue;

        NormalForm nf = divide(s_polynomial(basis[i], basis[j]), basis);
        ++stats.pairs_reduced;
        if (!nf.is_zero()) {
            basis.push_back(nf.numerator.primitive_part());
            push_pairs(basis.size() - 1);
        }
    }

    // interreduce: drop elements whose leading monomial another divides,
    // then fully reduce each survivor against the rest
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].leading_monomial(), basis[i].leading_monomial()) &&
                (basis[j].leading_monomial() != basis[i].leading_monomial() || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        NormalForm nf = divide(minimal[i], others);
        if (!nf.is_zero()) reduced.push_back(nf.numerator.primitive_part());
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ctx->mono_less(a.leading_monomial(), b.leading_monomial());
              });

    stats.basis_size = reduced.size();
    return GroebnerBasis(ctx, std::move(reduced), source, stats);
}

NormalForm GroebnerBasis::normal_form(const Polynomial& p) const {
    require_same_context(*p.context(), *ctx_, "normal_form");
    return divide(p, basis_);
}

IdealEquality ideal_equal(const Ideal& left, const Ideal& right,
                          GroebnerOptions opts) {
    require_same_context(*left.context, *right.context, "ideal_equal");
    GroebnerBasis gl = GroebnerBasis::compute(left, opts);
    for (std::size_t i = 0; i < right.gens.size(); ++i) {
        NormalForm nf = gl.normal_form(right.gens[i]);
        if (!nf.is_zero())
            return IdealEquality{false, EqualityWitness{2, i, nf.numerator}};
    }
    GroebnerBasis gr = GroebnerBasis::compute(right, opts);
    for (std::size_t i = 0; i < left.gens.size(); ++i) {
        NormalForm nf = gr.normal_form(left.gens[i]);
        if (!nf.is_zero())
            return IdealEquality{false, EqualityWitness{1, i, nf.numerator}};
    }
    return IdealEquality{true, std::nullopt};
}

}  // namespace kmu
