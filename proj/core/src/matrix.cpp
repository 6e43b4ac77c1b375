#include "kmu/matrix.hpp"

#include <numeric>
#include <sstream>

namespace kmu {

PolyMatrix::PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Polynomial::zero(ctx_)) {}

PolyMatrix::PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error("PolyMatrix: entry count does not match shape");
    for (const auto& p : entries_)
        require_same_context(*p.context(), *ctx_, "PolyMatrix");
}

PolyMatrix PolyMatrix::identity(ContextPtr ctx, std::size_t n) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Polynomial::constant(ctx, 1));
    return m;
}

PolyMatrix PolyMatrix::row_vector(std::vector<Polynomial> entries) {
    if (entries.empty()) throw Error("row_vector: empty");
    ContextPtr ctx = entries.front().context();
    std::size_t n = entries.size();
    return PolyMatrix(std::move(ctx), 1, n, std::move(entries));
}

PolyMatrix PolyMatrix::col_vector(std::vector<Polynomial> entries) {
    if (entries.empty()) throw Error("col_vector: empty");
    ContextPtr ctx = entries.front().context();
    std::size_t n = entries.size();
    return PolyMatrix(std::move(ctx), n, 1, std::move(entries));
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("PolyMatrix::at: index out of range");
    return entries_[i * cols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= rows_ || j >= cols_) throw Error("PolyMatrix::set: index out of range");
    require_same_context(*p.context(), *ctx_, "PolyMatrix::set");
    entries_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_context(*ctx_, *o.ctx_, "matrix mul");
    if (cols_ != o.rows_)
        throw Error("matrix mul: shape mismatch (" + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " times " + std::to_string(o.rows_) +
                    "x" + std::to_string(o.cols_) + ")");
    PolyMatrix r(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial s = Polynomial::zero(ctx_);
            for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require_same_context(*ctx_, *o.ctx_, "matrix sub");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix sub: shape mismatch");
    PolyMatrix r(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& row_idx,
                              const std::vector<std::size_t>& col_idx) const {
    PolyMatrix r(ctx_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            r.set(i, j, at(row_idx[i], col_idx[j]));
    return r;
}

static std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> idx;
    idx.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) idx.push_back(i);
    return idx;
}

PolyMatrix PolyMatrix::without_row(std::size_t i) const {
    std::vector<std::size_t> cols(cols_);
    std::iota(cols.begin(), cols.end(), 0);
    return select(all_but(rows_, i), cols);
}

PolyMatrix PolyMatrix::without_col(std::size_t j) const {
    std::vector<std::size_t> rows(rows_);
    std::iota(rows.begin(), rows.end(), 0);
    return select(rows, all_but(cols_, j));
}

std::string PolyMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

SkewMatrix::SkewMatrix(PolyMatrix base) : base_(std::move(base)) {
    if (base_.rows() != base_.cols())
        throw Error("SkewMatrix: matrix is not square");
    for (std::size_t i = 0; i < base_.rows(); ++i) {
        if (!base_.at(i, i).is_zero())
            throw Error("SkewMatrix: nonzero diagonal entry at (" +
                        std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
        for (std::size_t j = i + 1; j < base_.cols(); ++j)
            if (base_.at(j, i) != -base_.at(i, j))
                throw Error("SkewMatrix: entry (" + std::to_string(j + 1) + "," +
                            std::to_string(i + 1) + ") is not the negative of (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

SkewMatrix SkewMatrix::from_upper_triangle(ContextPtr ctx, std::size_t k,
                                           std::vector<Polynomial> upper) {
    if (upper.size() != k * (k - 1) / 2)
        throw Error("SkewMatrix: upper triangle needs k(k-1)/2 entries");
    PolyMatrix m(ctx, k, k);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            m.set(i, j, upper[idx]);
            m.set(j, i, -upper[idx]);
            ++idx;
        }
    return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::without(std::size_t i) const {
    auto idx = all_but(size(), i);
    return SkewMatrix(base_.select(idx, idx));
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.context(), 1);
    if (n == 1) return m.at(0, 0);
    Polynomial det = Polynomial::zero(m.context());
    PolyMatrix rest = m.without_row(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Polynomial cof = m.at(0, j) * determinant_cofactor(rest.without_col(j));
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

// Fraction-free Gaussian elimination (Bareiss); every interior division is
// exact in the polynomial ring.
static Polynomial determinant_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial::zero(m.context())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Polynomial prev = Polynomial::constant(m.context(), 1);
    int sign = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && a[pivot][p].is_zero()) ++pivot;
        if (pivot == n) return Polynomial::zero(m.context());
        if (pivot != p) {
            std::swap(a[pivot], a[p]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i)
            for (std::size_t j = p + 1; j < n; ++j)
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]).exact_div(prev);
        prev = a[p][p];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
    return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

std::vector<Polynomial> wedge(const PolyMatrix& q) {
    if (q.cols() != q.rows() + 1)
        throw Error("wedge: expected an r x (r+1) matrix, got " +
                    std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
    std::vector<Polynomial> out;
    out.reserve(q.cols());
    for (std::size_t i = 0; i < q.cols(); ++i) {
        Polynomial d = determinant(q.without_col(i));
        out.push_back(i % 2 == 0 ? d : -d);
    }
    return out;
}

Polynomial pfaffian_even(const SkewMatrix& a) {
    const std::size_t k = a.size();
    if (k % 2 != 0) throw Error("pfaffian_even: size must be even");
    if (k == 0) return Polynomial::constant(a.context(), 1);
    if (k == 2) return a.base().at(0, 1);
    // Pf(A) = sum_{j=2}^{k} (-1)^j a_{1j} Pf(A_{1j}), indices 1-based.
    Polynomial pf = Polynomial::zero(a.context());
    SkewMatrix a1 = a.without(0);
    for (std::size_t j = 1; j < k; ++j) {
        if (a.base().at(0, j).is_zero()) continue;
        Polynomial t = a.base().at(0, j) * pfaffian_even(a1.without(j - 1));
        pf = ((j + 1) % 2 == 0) ? pf + t : pf - t;
    }
    return pf;
}

std::vector<Polynomial> pfaffians_odd(const SkewMatrix& a) {
    const std::size_t k = a.size();
    if (k % 2 != 1 || k < 3) throw Error("pfaffians_odd: size must be odd and >= 3");
    std::vector<Polynomial> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(pfaffian_even(a.without(i)));
    return out;
}

}  // namespace kmu
