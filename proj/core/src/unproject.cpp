#include "kmu/unproject.hpp"

namespace kmu {

CiData::CiData(ContextPtr ctx, std::vector<Polynomial> v_in,
               std::vector<Polynomial> w_in, PolyMatrix q_in)
    : context(std::move(ctx)), v(std::move(v_in)), w(std::move(w_in)),
      q(std::move(q_in)) {
    const std::size_t r = v.size();
    if (r == 0 || w.size() != r + 1)
        throw Error("CiData: need r generators v and r+1 generators w");
    if (q.rows() != r || q.cols() != r + 1)
        throw Error("CiData: Q must be r x (r+1)");
    for (const auto& p : v) require_same_context(*p.context(), *context, "CiData v");
    for (const auto& p : w) require_same_context(*p.context(), *context, "CiData w");
    require_same_context(*q.context(), *context, "CiData Q");
    PolyMatrix prod = q * PolyMatrix::col_vector(w);
    for (std::size_t i = 0; i < r; ++i)
        if (prod.at(i, 0) != v[i])
            throw Error("CiData: v != Q*w at row " + std::to_string(i + 1));
}

CramerCertificate cramer_certificate(const PolyMatrix& q,
                                     const std::vector<Polynomial>& w,
                                     std::size_t i, std::size_t j) {
    const std::size_t r = q.rows();
    if (q.cols() != r + 1 || w.size() != r + 1)
        throw Error("cramer_certificate: Q must be r x (r+1) with matching w");
    if (i < 1 || j > r + 1 || i >= j)
        throw Error("cramer_certificate: need 1 <= i < j <= r+1");

    std::vector<Polynomial> v;
    PolyMatrix prod = q * PolyMatrix::col_vector(w);
    for (std::size_t m = 0; m < r; ++m) v.push_back(prod.at(m, 0));
    std::vector<Polynomial> g = wedge(q);

    // columns of Q with i and j removed (0-based selection)
    std::vector<std::size_t> keep_cols;
    for (std::size_t c = 0; c < r + 1; ++c)
        if (c != i - 1 && c != j - 1) keep_cols.push_back(c);

    CramerCertificate cert{false, {}, g[i - 1] * w[j - 1] - g[j - 1] * w[i - 1],
                           Polynomial::zero(q.context())};
    Polynomial sum = Polynomial::zero(q.context());
    for (std::size_t m = 1; m <= r; ++m) {
        std::vector<std::size_t> keep_rows;
        for (std::size_t rr = 0; rr < r; ++rr)
            if (rr != m - 1) keep_rows.push_back(rr);
        Polynomial c_m = determinant(q.select(keep_rows, keep_cols));
        if (m % 2 == 0) c_m = -c_m;
        sum = sum + c_m * v[m - 1];
        cert.coefficients.push_back(std::move(c_m));
    }
    cert.rhs = ((i + j + 1) % 2 == 0) ? sum : -sum;
    cert.holds = cert.lhs == cert.rhs;
    if (!cert.holds)
        throw Error("cramer_certificate: identity failed for (i,j) = (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    return cert;
}

namespace {

ContextPtr extend_with(const ContextPtr& ctx, const std::string& tname) {
    if (ctx->has(tname))
        throw Error("unprojection variable '" + tname +
                    "' collides with an existing variable");
    return ctx->extended({tname});
}

}  // namespace

UnprojectionResult unproject_ci(const CiData& data, const std::string& tname) {
    const std::size_t r = data.v.size();
    for (std::size_t i = 1; i <= r + 1; ++i)
        for (std::size_t j = i + 1; j <= r + 1; ++j)
            cramer_certificate(data.q, data.w, i, j);

    std::vector<Polynomial> g = wedge(data.q);
    ContextPtr ext = extend_with(data.context, tname);
    Polynomial t = Polynomial::variable(ext, tname);

    std::vector<Polynomial> gens;
    for (const auto& vi : data.v) gens.push_back(vi.embedded(ext));
    for (std::size_t j = 0; j < r + 1; ++j)
        gens.push_back(t * data.w[j].embedded(ext) - g[j].embedded(ext));

    return UnprojectionResult{UnprojectionKind::Ci,
                              ext,
                              tname,
                              std::move(g),
                              Ideal(ext, std::move(gens)),
                              {},
                              data.q,
                              {},
                              {},
                              {}};
}

// --- Tom ----------------------------------------------------------------

std::string tom_coeff_name(std::size_t i, std::size_t j, std::size_t k) {
    return "a" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(k);
}

std::size_t TomData::pair_index(std::size_t i, std::size_t j) {
    static constexpr std::size_t first_of[] = {0, 0, 0, 3, 5};  // i = 2..4
    if (i < 2 || j <= i || j > 5) throw Error("TomData: bad pair index");
    return first_of[i] + (j - i - 1);
}

namespace {

const std::array<std::pair<std::size_t, std::size_t>, 6> kTomPairs = {
    {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};

SkewMatrix tom_matrix(const ContextPtr& ctx, const std::array<Polynomial, 4>& x,
                      const std::array<Polynomial, 4>& z,
                      const std::array<std::array<Polynomial, 4>, 6>& a) {
    std::vector<Polynomial> upper;
    for (const auto& xi : x) upper.push_back(xi);
    for (std::size_t p = 0; p < 6; ++p) {
        Polynomial e = Polynomial::zero(ctx);
        for (std::size_t k = 0; k < 4; ++k) e = e + a[p][k] * z[k];
        upper.push_back(std::move(e));
    }
    return SkewMatrix::from_upper_triangle(ctx, 5, std::move(upper));
}

}  // namespace

SkewMatrix TomData::matrix() const {
    return tom_matrix(context, x, z, a_coeffs);
}

const TomGeneric& TomGeneric::instance() {
    static const TomGeneric cached = [] {
        std::vector<std::string> names;
        for (const auto& [i, j] : kTomPairs)
            for (std::size_t k = 1; k <= 4; ++k)
                names.push_back(tom_coeff_name(i, j, k));
        for (std::size_t k = 1; k <= 4; ++k) names.push_back("x" + std::to_string(k));
        for (std::size_t k = 1; k <= 4; ++k) names.push_back("z" + std::to_string(k));
        ContextPtr ctx = VarContext::make(std::move(names));

        auto var = [&](const std::string& n) { return Polynomial::variable(ctx, n); };
        std::array<Polynomial, 4> x{var("x1"), var("x2"), var("x3"), var("x4")};
        std::array<Polynomial, 4> z{var("z1"), var("z2"), var("z3"), var("z4")};
        std::array<std::array<Polynomial, 4>, 6> a{
            std::array<Polynomial, 4>{var("a23_1"), var("a23_2"), var("a23_3"), var("a23_4")},
            std::array<Polynomial, 4>{var("a24_1"), var("a24_2"), var("a24_3"), var("a24_4")},
            std::array<Polynomial, 4>{var("a25_1"), var("a25_2"), var("a25_3"), var("a25_4")},
            std::array<Polynomial, 4>{var("a34_1"), var("a34_2"), var("a34_3"), var("a34_4")},
            std::array<Polynomial, 4>{var("a35_1"), var("a35_2"), var("a35_3"), var("a35_4")},
            std::array<Polynomial, 4>{var("a45_1"), var("a45_2"), var("a45_3"), var("a45_4")}};

        TomGeneric g{ctx, {}, PolyMatrix(ctx, 4, 4), {}, {}};
        g.p = pfaffians_odd(tom_matrix(ctx, x, z, a));  // P_0 .. P_4

        // P_1..P_4 are z-linear; collect the coefficient matrix Q.
        for (std::size_t row = 0; row < 4; ++row) {
            auto coeffs = g.p[row + 1].linear_coeffs({"z1", "z2", "z3", "z4"});
            for (std::size_t col = 0; col < 4; ++col)
                g.q.set(row, col, std::move(coeffs[col]));
        }

        for (std::size_t i = 0; i < 4; ++i) g.h.push_back(wedge(g.q.without_row(i)));

        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t e = 0; e < 4; ++e)
                    if (x[i] * g.h[j][e] != x[j] * g.h[i][e])
                        throw Error("TomGeneric: identity x_i H_j = x_j H_i failed");

        for (std::size_t e = 0; e < 4; ++e) g.g.push_back(g.h[3][e].exact_div(x[3]));
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t e = 0; e < 4; ++e)
                if (g.h[j][e].exact_div(x[j]) != g.g[e])
                    throw Error("TomGeneric: H_j / x_j depends on j");
        return g;
    }();
    return cached;
}

std::vector<Polynomial> tom_generic_g() { return TomGeneric::instance().g; }

namespace {

std::map<std::string, Polynomial> tom_assignment(const TomData& d) {
    std::map<std::string, Polynomial> a;
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t k = 1; k <= 4; ++k)
            a.emplace(tom_coeff_name(kTomPairs[p].first, kTomPairs[p].second, k),
                      d.a_coeffs[p][k - 1]);
    for (std::size_t k = 0; k < 4; ++k) {
        a.emplace("x" + std::to_string(k + 1), d.x[k]);
        a.emplace("z" + std::to_string(k + 1), d.z[k]);
    }
    return a;
}

}  // namespace

UnprojectionResult unproject_tom(const TomData& data, const std::string& tname) {
    const TomGeneric& gen = TomGeneric::instance();
    auto assign = tom_assignment(data);
    auto specialize = [&](const Polynomial& p) {
        return p.substitute(assign, data.context);
    };

    std::vector<Polynomial> p, g;
    for (const auto& pi : gen.p) p.push_back(specialize(pi));
    for (const auto& gi : gen.g) g.push_back(specialize(gi));

    PolyMatrix q(data.context, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) q.set(i, j, specialize(gen.q.at(i, j)));
    std::vector<std::vector<Polynomial>> h;
    for (const auto& row : gen.h) {
        std::vector<Polynomial> hr;
        for (const auto& e : row) hr.push_back(specialize(e));
        h.push_back(std::move(hr));
    }

    ContextPtr ext = extend_with(data.context, tname);
    Polynomial t = Polynomial::variable(ext, tname);
    std::vector<Polynomial> gens;
    for (const auto& pi : p) gens.push_back(pi.embedded(ext));
    for (std::size_t i = 0; i < 4; ++i)
        gens.push_back(t * data.z[i].embedded(ext) - g[i].embedded(ext));

    return UnprojectionResult{UnprojectionKind::Tom,
                              ext,
                              tname,
                              std::move(g),
                              Ideal(ext, std::move(gens)),
                              std::move(p),
                              std::move(q),
                              std::move(h),
                              {},
                              {}};
}

// --- Jerry ----------------------------------------------------------------

std::string jerry_a_name(std::size_t i, std::size_t k) {
    return "a" + std::to_string(i) + "_" + std::to_string(k);
}
std::string jerry_b_name(std::size_t i, std::size_t k) {
    return "b" + std::to_string(i) + "_" + std::to_string(k);
}
std::string jerry_c_name(std::size_t k) { return "c_" + std::to_string(k); }

namespace {

SkewMatrix jerry_matrix(const ContextPtr& ctx, const std::array<Polynomial, 3>& x,
                        const std::array<Polynomial, 4>& z,
                        const std::array<std::array<Polynomial, 4>, 3>& ac,
                        const std::array<std::array<Polynomial, 4>, 3>& bc,
                        const std::array<Polynomial, 4>& cc) {
    auto zlinear = [&](const std::array<Polynomial, 4>& coeffs) {
        Polynomial e = Polynomial::zero(ctx);
        for (std::size_t k = 0; k < 4; ++k) e = e + coeffs[k] * z[k];
        return e;
    };
    std::vector<Polynomial> upper;
    upper.push_back(zlinear(cc));                              // (1,2)
    for (std::size_t i = 0; i < 3; ++i) upper.push_back(zlinear(ac[i]));  // (1,3..5)
    for (std::size_t i = 0; i < 3; ++i) upper.push_back(zlinear(bc[i]));  // (2,3..5)
    upper.push_back(x[0]);  // (3,4)
    upper.push_back(x[1]);  // (3,5)
    upper.push_back(x[2]);  // (4,5)
    return SkewMatrix::from_upper_triangle(ctx, 5, std::move(upper));
}

}  // namespace

SkewMatrix JerryData::matrix() const {
    return jerry_matrix(context, x, z, a_coeffs, b_coeffs, c_coeffs);
}

const JerryGeneric& JerryGeneric::instance() {
    static const JerryGeneric cached = [] {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t k = 1; k <= 4; ++k) names.push_back(jerry_a_name(i, k));
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t k = 1; k <= 4; ++k) names.push_back(jerry_b_name(i, k));
        for (std::size_t k = 1; k <= 4; ++k) names.push_back(jerry_c_name(k));
        for (std::size_t k = 1; k <= 3; ++k) names.push_back("x" + std::to_string(k));
        for (std::size_t k = 1; k <= 4; ++k) names.push_back("z" + std::to_string(k));
        ContextPtr ctx = VarContext::make(std::move(names));

        auto var = [&](const std::string& n) { return Polynomial::variable(ctx, n); };
        std::array<Polynomial, 3> x{var("x1"), var("x2"), var("x3")};
        std::array<Polynomial, 4> z{var("z1"), var("z2"), var("z3"), var("z4")};
        auto coeff_row = [&](auto namer, std::size_t i) {
            return std::array<Polynomial, 4>{var(namer(i, 1)), var(namer(i, 2)),
                                             var(namer(i, 3)), var(namer(i, 4))};
        };
        std::array<std::array<Polynomial, 4>, 3> ac{coeff_row(jerry_a_name, 1),
                                                    coeff_row(jerry_a_name, 2),
                                                    coeff_row(jerry_a_name, 3)};
        std::array<std::array<Polynomial, 4>, 3> bc{coeff_row(jerry_b_name, 1),
                                                    coeff_row(jerry_b_name, 2),
                                                    coeff_row(jerry_b_name, 3)};
        std::array<Polynomial, 4> cc{var("c_1"), var("c_2"), var("c_3"), var("c_4")};

        auto zlinear = [&](const auto& coeffs) {
            Polynomial e = Polynomial::zero(ctx);
            for (std::size_t k = 0; k < 4; ++k) e = e + coeffs[k] * z[k];
            return e;
        };
        Polynomial a1 = zlinear(ac[0]), a2 = zlinear(ac[1]), a3 = zlinear(ac[2]);

        JerryGeneric g{ctx, {}, PolyMatrix(ctx, 3, 4), {}, {}, {}, {}};
        g.p = pfaffians_odd(jerry_matrix(ctx, x, z, ac, bc, cc));  // P_1..P_5

        // Q rows: b-row, a-row, then the mixed row using the full z-linear
        // a_2, a_3 as coefficients of the quadratic Pfaffian P_3.
        for (std::size_t k = 0; k < 4; ++k) {
            g.q.set(0, k, bc[0][k] * x[2] - bc[1][k] * x[1] + bc[2][k] * x[0]);
            g.q.set(1, k, ac[0][k] * x[2] - ac[1][k] * x[1] + ac[2][k] * x[0]);
            g.q.set(2, k, cc[k] * x[2] - a2 * bc[2][k] + a3 * bc[1][k]);
        }
        PolyMatrix prod = g.q * PolyMatrix::col_vector({z[0], z[1], z[2], z[3]});
        for (std::size_t i = 0; i < 3; ++i)
            if (prod.at(i, 0) != g.p[i])
                throw Error("JerryGeneric: Q*z != (P_1, P_2, P_3)");

        g.h = wedge(g.q);

        // Factorization at x_3 = 0: Q|_{x3=0} = F * G with
        // det F = a_3 x_1 - a_2 x_2, G rows (b_3^k, Q_2k|_{x3=0}, b_2^k).
        PolyMatrix gm(ctx, 3, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            gm.set(0, k, bc[2][k]);
            gm.set(1, k, -ac[1][k] * x[1] + ac[2][k] * x[0]);
            gm.set(2, k, bc[1][k]);
        }
        std::map<std::string, Polynomial> kill_x3{
            {"x3", Polynomial::zero(ctx)}};
        for (std::size_t i = 0; i < 4; ++i) {
            Polynomial det_i = determinant(gm.without_col(i));
            g.l_polys.push_back(i % 2 == 0 ? -det_i : det_i);  // (-1)^(i+1), 1-based
            Polynomial h0 = g.h[i].substitute_partial(kill_x3);
            g.k_polys.push_back((g.h[i] - h0).exact_div(x[2]));
            g.g.push_back(g.k_polys[i] + a1 * g.l_polys[i]);
            if (g.h[i] != x[2] * g.g[i] - g.l_polys[i] * g.p[1])
                throw Error("JerryGeneric: identity h_i = x_3 g_i - L_i P_2 failed");
        }
        return g;
    }();
    return cached;
}

std::vector<Polynomial> jerry_generic_g() { return JerryGeneric::instance().g; }

namespace {

std::map<std::string, Polynomial> jerry_assignment(const JerryData& d) {
    std::map<std::string, Polynomial> a;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            a.emplace(jerry_a_name(i + 1, k + 1), d.a_coeffs[i][k]);
            a.emplace(jerry_b_name(i + 1, k + 1), d.b_coeffs[i][k]);
        }
    for (std::size_t k = 0; k < 4; ++k) a.emplace(jerry_c_name(k + 1), d.c_coeffs[k]);
    for (std::size_t k = 0; k < 3; ++k) a.emplace("x" + std::to_string(k + 1), d.x[k]);
    for (std::size_t k = 0; k < 4; ++k) a.emplace("z" + std::to_string(k + 1), d.z[k]);
    return a;
}

}  // namespace

UnprojectionResult unproject_jerry(const JerryData& data, const std::string& tname) {
    const JerryGeneric& gen = JerryGeneric::instance();
    auto assign = jerry_assignment(data);
    auto specialize = [&](const Polynomial& p) {
        return p.substitute(assign, data.context);
    };

    std::vector<Polynomial> p, g, h, kp, lp;
    for (const auto& pi : gen.p) p.push_back(specialize(pi));
    for (const auto& gi : gen.g) g.push_back(specialize(gi));
    for (const auto& hi : gen.h) h.push_back(specialize(hi));
    for (const auto& ki : gen.k_polys) kp.push_back(specialize(ki));
    for (const auto& li : gen.l_polys) lp.push_back(specialize(li));
    PolyMatrix q(data.context, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) q.set(i, j, specialize(gen.q.at(i, j)));

    ContextPtr ext = extend_with(data.context, tname);
    Polynomial t = Polynomial::variable(ext, tname);
    std::vector<Polynomial> gens;
    for (const auto& pi : p) gens.push_back(pi.embedded(ext));
    for (std::size_t i = 0; i < 4; ++i)
        gens.push_back(t * data.z[i].embedded(ext) - g[i].embedded(ext));

    return UnprojectionResult{UnprojectionKind::Jerry,
                              ext,
                              tname,
                              std::move(g),
                              Ideal(ext, std::move(gens)),
                              std::move(p),
                              std::move(q),
                              {std::move(h)},
                              std::move(kp),
                              std::move(lp)};
}

}  // namespace kmu
