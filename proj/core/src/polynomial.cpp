#include "kmu/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace kmu {

Polynomial::Polynomial(ContextPtr ctx)
    : ctx_(std::move(ctx)), terms_(MonoLess{ctx_}) {
    if (!ctx_) throw Error("Polynomial requires a context");
}

Polynomial Polynomial::constant(ContextPtr ctx, Int value) {
    Polynomial p(std::move(ctx));
    if (value != 0) p.terms_.emplace(Monomial(p.ctx_->size(), 0), std::move(value));
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, const std::string& name) {
    Polynomial p(std::move(ctx));
    Monomial m(p.ctx_->size(), 0);
    m[p.ctx_->index_of(name)] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, Int coeff) {
    Polynomial p(std::move(ctx));
    if (m.size() != p.ctx_->size())
        throw Error("monomial length does not match context");
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           total_degree(terms_.begin()->first) == 0;
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

const Int& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(*ctx_, *o.ctx_, "add");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_context(*ctx_, *o.ctx_, "sub");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = std::uint64_t(a[i]) + b[i];
        if (s > 0xFFFFFFFFull) throw Error("exponent overflow (32-bit bound)");
        r[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(*ctx_, *o.ctx_, "mul");
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(ctx_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_context(*ctx_, *o.ctx_, "compare");
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

static bool mono_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

static Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
    return r;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    require_same_context(*ctx_, *d.ctx_, "exact_div");
    if (d.is_zero()) throw Error("exact_div: division by zero");
    Polynomial q(ctx_);
    Polynomial r = *this;
    const Monomial& dm = d.leading_monomial();
    const Int& dc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        const Int& rc = r.leading_coefficient();
        if (!mono_divides(dm, rm) || !mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
            throw InexactDivisionError("inexact division", r.to_string());
        Polynomial t = Polynomial::monomial(ctx_, mono_div(rm, dm), rc / dc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& assignment,
    const ContextPtr& target_ctx) const {
    std::vector<const Polynomial*> images(ctx_->size(), nullptr);
    for (const auto& [name, img] : assignment) {
        if (!ctx_->has(name))
            throw Error("substitute: '" + name + "' is not a context variable");
        require_same_context(*img.context(), *target_ctx, "substitute image");
        images[ctx_->index_of(name)] = &img;
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!images[i])
            throw Error("substitute: missing assignment for variable '" +
                        ctx_->name(i) + "'");

    // Per-variable power cache; instances are desk scale.
    std::vector<std::vector<Polynomial>> powers(ctx_->size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_ctx, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
        return cache[e];
    };

    Polynomial result(target_ctx);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target_ctx, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        result = result + t;
    }
    return result;
}

Polynomial Polynomial::substitute_partial(
    const std::map<std::string, Polynomial>& assignment) const {
    std::map<std::string, Polynomial> full = assignment;
    for (const auto& name : ctx_->names())
        if (!full.count(name)) full.emplace(name, Polynomial::variable(ctx_, name));
    return substitute(full, ctx_);
}

Polynomial Polynomial::embedded(const ContextPtr& super) const {
    if (ctx_->same_as(*super)) return *this;
    std::vector<std::size_t> where(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i)
        where[i] = super->index_of(ctx_->name(i));
    Polynomial r(super);
    for (const auto& [m, c] : terms_) {
        Monomial mm(super->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) mm[where[i]] = m[i];
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::linear_coeffs(
    const std::vector<std::string>& zvars) const {
    std::vector<std::size_t> zidx;
    zidx.reserve(zvars.size());
    for (const auto& n : zvars) zidx.push_back(ctx_->index_of(n));

    std::vector<Polynomial> coeffs(zvars.size(), Polynomial::zero(ctx_));
    for (const auto& [m, c] : terms_) {
        std::uint32_t zdeg = 0;
        std::size_t which = 0;
        for (std::size_t k = 0; k < zidx.size(); ++k) {
            zdeg += m[zidx[k]];
            if (m[zidx[k]] > 0) which = k;
        }
        if (zdeg != 1)
            throw Error("linear_coeffs: term " +
                        Polynomial::monomial(ctx_, m, c).to_string() +
                        " has z-degree " + std::to_string(zdeg));
        Monomial stripped = m;
        stripped[zidx[which]] = 0;
        coeffs[which] = coeffs[which] + Polynomial::monomial(ctx_, stripped, c);
    }
    return coeffs;
}

Int Polynomial::content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading_coefficient() < 0) g = -g;
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Int& c = it->second;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool constant_term = total_degree(m) == 0;
        bool wrote_coeff = false;
        if (constant_term || a != 1) {
            out << a.get_str();
            wrote_coeff = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote_coeff) out << "*";
            wrote_coeff = true;
            out << ctx_->name(i);
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

// --- parser -----------------------------------------------------------

namespace {

class Parser {
public:
    Parser(ContextPtr ctx, const std::string& text)
        : ctx_(std::move(ctx)), text_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                             pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            return base.pow(natural());
        }
        return base;
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == '-') {
            eat('-');
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ParseError("expected a number, variable or '('", pos_);
    }

    Polynomial integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Polynomial::constant(ctx_, Int(text_.substr(start, pos_ - start)));
    }

    std::uint32_t natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected an integer exponent", pos_);
        Int v(text_.substr(start, pos_ - start));
        if (v > 0xFFFFFFFFul) throw ParseError("exponent overflow", start);
        return static_cast<std::uint32_t>(v.get_ui());
    }

    Polynomial identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (!ctx_->has(name))
            throw ParseError("undeclared variable '" + name + "'", start);
        return Polynomial::variable(ctx_, name);
    }

    ContextPtr ctx_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(ContextPtr ctx, const std::string& text) {
    return Parser(std::move(ctx), text).run();
}

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> g)
    : context(std::move(ctx)), gens(std::move(g)) {
    for (const auto& p : gens)
        require_same_context(*p.context(), *context, "Ideal");
}

}  // namespace kmu
