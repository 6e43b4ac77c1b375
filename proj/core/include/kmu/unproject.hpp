#pragma once

#include <array>

#include "kmu/matrix.hpp"

namespace kmu {

/// Complete intersection inside a complete intersection: v = Q * w with
/// I = (v_1..v_r) sitting inside J = (w_1..w_{r+1}). The relation is
/// validated at construction.
struct CiData {
    ContextPtr context;
    std::vector<Polynomial> v;
    std::vector<Polynomial> w;
    PolyMatrix q;

    CiData(ContextPtr ctx, std::vector<Polynomial> v_in,
           std::vector<Polynomial> w_in, PolyMatrix q_in);
};

struct CramerCertificate {
    bool holds = false;
    std::vector<Polynomial> coefficients;  // c_1 .. c_r
    Polynomial lhs;                        // (wedge Q)_i w_j - (wedge Q)_j w_i
    Polynomial rhs;                        // (-1)^(i+j+1) * sum_m c_m v_m
};

/// Explicit membership witness for (wedge Q)_i w_j - (wedge Q)_j w_i in (v),
/// v = Q * w: c_m = (-1)^(m+1) det(Q with row m and columns i, j removed),
/// lhs = (-1)^(i+j+1) sum_m c_m v_m. Throws if the identity fails. Indices
/// i < j are 1-based.
CramerCertificate cramer_certificate(const PolyMatrix& q,
                                     const std::vector<Polynomial>& w,
                                     std::size_t i, std::size_t j);

/// Tom format: 5x5 skew matrix with first row (x_1..x_4) and lower-block
/// entries a_ij = sum_k a_ij^k z_k for 2 <= i < j <= 5. Slots accept
/// arbitrary polynomials; regular-sequence hypotheses are the caller's
/// responsibility.
struct TomData {
    ContextPtr context;
    std::array<Polynomial, 4> x;
    std::array<Polynomial, 4> z;
    /// a_coeffs[pair][k] where pair runs over (2,3),(2,4),(2,5),(3,4),(3,5),(4,5).
    std::array<std::array<Polynomial, 4>, 6> a_coeffs;

    static std::size_t pair_index(std::size_t i, std::size_t j);  // 1-based i<j

    /// The specialized skew matrix (5.1)-layout built from the slots.
    SkewMatrix matrix() const;
};

/// Jerry format: 5x5 skew matrix with first row (c, a_1, a_2, a_3), second
/// row tail (b_1, b_2, b_3), lower block x_1, x_2, x_3; all of c, a_i, b_i
/// are z-linear with the given coefficients.
struct JerryData {
    ContextPtr context;
    std::array<Polynomial, 3> x;
    std::array<Polynomial, 4> z;
    std::array<std::array<Polynomial, 4>, 3> a_coeffs;
    std::array<std::array<Polynomial, 4>, 3> b_coeffs;
    std::array<Polynomial, 4> c_coeffs;

    SkewMatrix matrix() const;
};

enum class UnprojectionKind { Ci, Tom, Jerry };

/// Unprojection ideal in the extended ring plus all intermediate objects.
struct UnprojectionResult {
    UnprojectionKind kind;
    ContextPtr extended_context;  // input context plus the unprojection variable
    std::string unproj_var;
    std::vector<Polynomial> g;    // unprojection numerators, input context
    Ideal ideal;                  // (gens of I, T*w_j - g_j) in the extended ring

    // intermediates for --show-work; empty where not applicable
    std::vector<Polynomial> pfaffians;       // Tom/Jerry: P in paper order
    std::optional<PolyMatrix> q;             // coefficient matrix
    std::vector<std::vector<Polynomial>> h;  // Tom: H_1..H_4; Jerry: wedge(Q) as one row
    std::vector<Polynomial> k_polys;         // Jerry K_i
    std::vector<Polynomial> l_polys;         // Jerry L_i
};

/// Theorem-4.4 unprojection: g = wedge(Q), ideal (v, T w_j - g_j). Every
/// Cramer certificate is checked along the way.
UnprojectionResult unproject_ci(const CiData& data,
                                const std::string& tname = "T");

/// Cached generic Tom data: the 32-variable ring with independent symbols
/// a_ij^k, x_k, z_k, the Pfaffians P_0..P_4, the z-coefficient matrix Q,
/// the minor rows H_i and the divided numerators g. All defining identities
/// (x_i H_j = x_j H_i, j-independence of H_j / x_j) are verified once at
/// construction.
struct TomGeneric {
    ContextPtr context;                 // a23_1..a45_4, x1..x4, z1..z4
    std::vector<Polynomial> p;          // P_0..P_4
    PolyMatrix q;                       // 4x4
    std::vector<std::vector<Polynomial>> h;  // H_1..H_4, each of length 4
    std::vector<Polynomial> g;          // g_1..g_4

    static const TomGeneric& instance();
};

/// Generic Tom unprojection numerators (computed once, cached).
std::vector<Polynomial> tom_generic_g();

UnprojectionResult unproject_tom(const TomData& data,
                                 const std::string& tname = "T");

/// Cached generic Jerry data in the 35-variable ring with symbols a_i^k,
/// b_i^k, c^k, x_1..x_3, z_1..z_4. Construction verifies the factorization
/// identity h_i = x_3 g_i - L_i P_2.
struct JerryGeneric {
    ContextPtr context;
    std::vector<Polynomial> p;          // P_1..P_5
    PolyMatrix q;                       // 3x4
    std::vector<Polynomial> h;          // wedge(Q)
    std::vector<Polynomial> k_polys;    // K_1..K_4
    std::vector<Polynomial> l_polys;    // L_1..L_4
    std::vector<Polynomial> g;          // g_i = K_i + a_1 L_i

    static const JerryGeneric& instance();
};

std::vector<Polynomial> jerry_generic_g();

UnprojectionResult unproject_jerry(const JerryData& data,
                                   const std::string& tname = "T");

/// Generic-symbol variable names, shared with the JSON front end.
std::string tom_coeff_name(std::size_t i, std::size_t j, std::size_t k);  // a{i}{j}_{k}
std::string jerry_a_name(std::size_t i, std::size_t k);                   // a{i}_{k}
std::string jerry_b_name(std::size_t i, std::size_t k);
std::string jerry_c_name(std::size_t k);

}  // namespace kmu
