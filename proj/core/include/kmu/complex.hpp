#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmu/matrix.hpp"

namespace kmu {

/// Sequence of differentials d_1, ..., d_n where d_i maps step i to step
/// i-1, stored as a rows(d_i) x cols(d_i) matrix with cols(d_i) = rank of
/// step i. Composition-zero d_i * d_{i+1} == 0 is validated on construction.
class ChainComplex {
public:
    ChainComplex(ContextPtr ctx, std::vector<PolyMatrix> diffs);

    const ContextPtr& context() const { return ctx_; }
    std::size_t length() const { return diffs_.size(); }
    /// 1-based: diff(i) is d_i.
    const PolyMatrix& diff(std::size_t i) const;
    /// Rank of the free module at step i, 0 <= i <= length().
    std::size_t rank(std::size_t i) const;

private:
    ContextPtr ctx_;
    std::vector<PolyMatrix> diffs_;
};

/// Koszul complex on 2, 3 or 4 ring elements. Wedge-power bases are ordered
/// colexicographically; for four elements the matrices coincide entry for
/// entry with the fixed conformance fixture (see tests).
ChainComplex koszul_complex(const std::vector<Polynomial>& w);

/// Buchsbaum-Eisenbud complex 0 -> S -> S^k -> S^k -> S of an odd-size skew
/// matrix A: d_2 = A, d_1 the row with i-th entry (-1)^(i+1) Pf(A_i), and
/// d_3 = d_1 transposed.
ChainComplex be_complex(const SkewMatrix& a);

struct SquareReport {
    std::size_t index = 0;        // square between steps index and index-1
    bool shape_ok = false;
    bool commutes = false;
    std::string detail;           // difference matrix or shape diagnostic
};

struct ChainMapReport {
    bool pass = false;
    std::vector<SquareReport> squares;
    std::string to_string() const;
};

/// Checks target.diff(i) * D_i == D_{i-1} * source.diff(i) for every i in
/// 1..source.length(). verticals = (D_0, ..., D_n) with D_i mapping source
/// step i into target step i; the target may be longer than the source.
ChainMapReport verify_chain_map(const ChainComplex& source,
                                const ChainComplex& target,
                                const std::vector<PolyMatrix>& verticals);

/// A verified family of vertical maps between two complexes.
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target,
             std::vector<PolyMatrix> verticals);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    const std::vector<PolyMatrix>& verticals() const { return verticals_; }

private:
    ChainComplex source_, target_;
    std::vector<PolyMatrix> verticals_;
};

/// n-th exterior power of a matrix: entry (I, J) is the minor det M[I, J]
/// over n-subsets I of the rows and J of the columns, both colex ordered.
PolyMatrix exterior_power(const PolyMatrix& m, std::size_t n);

/// Chain map Koszul(v) -> Koszul(w) with verticals wedge^n of Q transposed,
/// for v = Q * w with Q of shape r x (r+1), r in {1, 2, 3}. All squares are
/// verified before returning.
ChainMap koszul_chain_map(const PolyMatrix& q, const std::vector<Polynomial>& v,
                          const std::vector<Polynomial>& w);

/// Colex-ordered n-subsets of {0, ..., m-1}.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t m, std::size_t n);

}  // namespace kmu
