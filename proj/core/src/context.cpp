#include "kmu/context.hpp"

#include <cctype>
#include <numeric>

namespace kmu {

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::Grevlex;
    if (name == "lex") return MonomialOrder::Lex;
    throw Error("unknown monomial order '" + name +
                "' (expected grevlex or lex)");
}

static bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

VarContext::VarContext(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_identifier(names_[i]))
            throw Error("invalid variable name '" + names_[i] + "'");
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted)
            throw Error("duplicate variable name '" + names_[i] + "'");
    }
}

std::size_t VarContext::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw Error("undeclared variable '" + name + "'");
    return it->second;
}

ContextPtr VarContext::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    for (const auto& n : extra) {
        if (has(n))
            throw Error("variable '" + n + "' already exists in context");
        all.push_back(n);
    }
    return VarContext::make(std::move(all), order_);
}

std::uint32_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool VarContext::mono_less(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
    // grevlex: compare total degree, then reverse-lex on the tail.
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace kmu
