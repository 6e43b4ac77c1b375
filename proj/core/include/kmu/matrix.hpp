#pragma once

#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

/// Rectangular matrix of polynomials sharing one context. Row-major storage.
class PolyMatrix {
public:
    PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
    PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols,
               std::vector<Polynomial> entries);

    static PolyMatrix identity(ContextPtr ctx, std::size_t n);
    static PolyMatrix row_vector(std::vector<Polynomial> entries);
    static PolyMatrix col_vector(std::vector<Polynomial> entries);

    const ContextPtr& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Polynomial p);

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool is_zero() const;

    /// Submatrix with the listed rows/columns kept, in the given order.
    PolyMatrix select(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
    PolyMatrix without_row(std::size_t i) const;
    PolyMatrix without_col(std::size_t j) const;

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Skew-symmetric square matrix; skew shape is validated at construction.
class SkewMatrix {
public:
    /// Validates zero diagonal and entry(j,i) == -entry(i,j).
    explicit SkewMatrix(PolyMatrix base);

    /// Builds from the strict upper triangle, row by row:
    /// upper = (a_12, ..., a_1k, a_23, ..., a_{k-1,k}).
    static SkewMatrix from_upper_triangle(ContextPtr ctx, std::size_t k,
                                          std::vector<Polynomial> upper);

    const PolyMatrix& base() const { return base_; }
    std::size_t size() const { return base_.rows(); }
    const ContextPtr& context() const { return base_.context(); }

    /// Principal submatrix with row and column i removed (0-based).
    SkewMatrix without(std::size_t i) const;

private:
    SkewMatrix() = delete;
    PolyMatrix base_;
};

/// Exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss
/// elimination above. det of the 0x0 matrix is 1.
Polynomial determinant(const PolyMatrix& m);

/// Cofactor-expansion determinant for any size; randomized cross-check
/// oracle for the Bareiss path.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// Signed maximal minors of an r x (r+1) matrix: entry i (1-based) is
/// (-1)^(i+1) times the determinant of Q with column i removed.
std::vector<Polynomial> wedge(const PolyMatrix& q);

/// Recursive Pfaffian of an even-size skew matrix; Pf(A)^2 == det(A).
Polynomial pfaffian_even(const SkewMatrix& a);

/// For odd k: entry i (1-based) is Pf(A_i), A_i = A with row/column i deleted.
std::vector<Polynomial> pfaffians_odd(const SkewMatrix& a);

}  // namespace kmu
