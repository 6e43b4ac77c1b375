#include "kmu/complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kmu {

ChainComplex::ChainComplex(ContextPtr ctx, std::vector<PolyMatrix> diffs)
    : ctx_(std::move(ctx)), diffs_(std::move(diffs)) {
    if (diffs_.empty()) throw Error("ChainComplex: no differentials");
    for (const auto& d : diffs_)
        require_same_context(*d.context(), *ctx_, "ChainComplex");
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        if (diffs_[i].cols() != diffs_[i + 1].rows())
            throw Error("ChainComplex: d_" + std::to_string(i + 1) + " and d_" +
                        std::to_string(i + 2) + " do not compose");
        if (!(diffs_[i] * diffs_[i + 1]).is_zero())
            throw Error("ChainComplex: d_" + std::to_string(i + 1) + " * d_" +
                        std::to_string(i + 2) + " != 0");
    }
}

const PolyMatrix& ChainComplex::diff(std::size_t i) const {
    if (i < 1 || i > diffs_.size())
        throw Error("ChainComplex::diff: index out of range");
    return diffs_[i - 1];
}

std::size_t ChainComplex::rank(std::size_t i) const {
    if (i > diffs_.size()) throw Error("ChainComplex::rank: index out of range");
    return i == 0 ? diffs_[0].rows() : diffs_[i - 1].cols();
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t m, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n > m) return out;
    std::vector<std::size_t> cur(n);
    // enumerate increasing n-subsets, then order colexicographically
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < m; ++v) {
            cur[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                      b.rbegin(), b.rend());
              });
    return out;
}

ChainComplex koszul_complex(const std::vector<Polynomial>& w) {
    const std::size_t n = w.size();
    if (n < 1 || n > 4)
        throw Error("koszul_complex: supported lengths are 1 to 4, got " +
                    std::to_string(n));
    ContextPtr ctx = w.front().context();
    for (const auto& p : w) require_same_context(*p.context(), *ctx, "koszul_complex");

    std::vector<PolyMatrix> diffs;
    for (std::size_t p = 1; p <= n; ++p) {
        auto rows = colex_subsets(n, p - 1);
        auto cols = colex_subsets(n, p);
        std::map<std::vector<std::size_t>, std::size_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

        PolyMatrix d(ctx, rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& subset = cols[j];
            // d(e_I) = sum_t (-1)^(t+1) w_{i_t} e_{I minus i_t}
            for (std::size_t t = 0; t < subset.size(); ++t) {
                std::vector<std::size_t> rest = subset;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
                Polynomial term = (t % 2 == 0) ? w[subset[t]] : -w[subset[t]];
                std::size_t i = row_of.at(rest);
                d.set(i, j, d.at(i, j) + term);
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(ctx, std::move(diffs));
}

ChainComplex be_complex(const SkewMatrix& a) {
    const std::size_t k = a.size();
    if (k % 2 != 1) throw Error("be_complex: skew matrix size must be odd");
    ContextPtr ctx = a.context();
    std::vector<Polynomial> pf = pfaffians_odd(a);
    std::vector<Polynomial> signed_row;
    signed_row.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        signed_row.push_back(i % 2 == 0 ? pf[i] : -pf[i]);
    PolyMatrix d1 = PolyMatrix::row_vector(signed_row);
    PolyMatrix d3 = d1.transpose();
    std::vector<PolyMatrix> diffs{d1, a.base(), std::move(d3)};
    return ChainComplex(ctx, std::move(diffs));
}

std::string ChainMapReport::to_string() const {
    std::ostringstream out;
    out << (pass ? "chain map: PASS" : "chain map: FAIL") << "\n";
    for (const auto& sq : squares) {
        out << "square " << sq.index << ": ";
        if (!sq.shape_ok)
            out << "shape mismatch (" << sq.detail << ")";
        else if (sq.commutes)
            out << "commutes";
        else
            out << "difference\n" << sq.detail;
        out << "\n";
    }
    return out.str();
}

ChainMapReport verify_chain_map(const ChainComplex& source,
                                const ChainComplex& target,
                                const std::vector<PolyMatrix>& verticals) {
    ChainMapReport report;
    if (verticals.size() != source.length() + 1)
        throw Error("verify_chain_map: need " + std::to_string(source.length() + 1) +
                    " vertical maps, got " + std::to_string(verticals.size()));
    if (target.length() < source.length())
        throw Error("verify_chain_map: target complex is shorter than source");

    report.pass = true;
    for (std::size_t i = 1; i <= source.length(); ++i) {
        SquareReport sq;
        sq.index = i;
        const PolyMatrix& td = target.diff(i);
        const PolyMatrix& sd = source.diff(i);
        const PolyMatrix& di = verticals[i];
        const PolyMatrix& dprev = verticals[i - 1];
        if (td.cols() != di.rows() || di.cols() != sd.cols() ||
            dprev.rows() != td.rows() || dprev.cols() != sd.rows()) {
            sq.shape_ok = false;
            std::ostringstream ss;
            ss << "target d_" << i << " is " << td.rows() << "x" << td.cols()
               << ", D_" << i << " is " << di.rows() << "x" << di.cols()
               << ", D_" << i - 1 << " is " << dprev.rows() << "x" << dprev.cols()
               << ", source d_" << i << " is " << sd.rows() << "x" << sd.cols();
            sq.detail = ss.str();
            report.pass = false;
        } else {
            sq.shape_ok = true;
            PolyMatrix diffm = td * di - dprev * sd;
            sq.commutes = diffm.is_zero();
            if (!sq.commutes) {
                sq.detail = diffm.to_string();
                report.pass = false;
            }
        }
        report.squares.push_back(std::move(sq));
    }
    return report;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::vector<PolyMatrix> verticals)
    : source_(std::move(source)),
      target_(std::move(target)),
      verticals_(std::move(verticals)) {
    ChainMapReport r = verify_chain_map(source_, target_, verticals_);
    if (!r.pass) throw Error("ChainMap: squares do not commute\n" + r.to_string());
}

PolyMatrix exterior_power(const PolyMatrix& m, std::size_t n) {
    auto row_subsets = colex_subsets(m.rows(), n);
    auto col_subsets = colex_subsets(m.cols(), n);
    PolyMatrix out(m.context(), row_subsets.size(), col_subsets.size());
    for (std::size_t i = 0; i < row_subsets.size(); ++i)
        for (std::size_t j = 0; j < col_subsets.size(); ++j)
            out.set(i, j, determinant(m.select(row_subsets[i], col_subsets[j])));
    return out;
}

ChainMap koszul_chain_map(const PolyMatrix& q, const std::vector<Polynomial>& v,
                          const std::vector<Polynomial>& w) {
    const std::size_t r = q.rows();
    if (r < 1 || r > 3)
        throw Error("koszul_chain_map: supported r is 1, 2 or 3");
    if (q.cols() != r + 1 || v.size() != r || w.size() != r + 1)
        throw Error("koszul_chain_map: shape mismatch");
    PolyMatrix prod = q * PolyMatrix::col_vector(w);
    for (std::size_t i = 0; i < r; ++i)
        if (prod.at(i, 0) != v[i])
            throw Error("koszul_chain_map: v != Q*w at row " + std::to_string(i + 1));

    ChainComplex source = koszul_complex(v);
    ChainComplex target = koszul_complex(w);
    PolyMatrix qt = q.transpose();
    std::vector<PolyMatrix> verticals;
    for (std::size_t n = 0; n <= r; ++n) verticals.push_back(exterior_power(qt, n));
    return ChainMap(std::move(source), std::move(target), std::move(verticals));
}

}  // namespace kmu
