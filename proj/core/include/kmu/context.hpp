#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace kmu {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextMismatchError : Error {
    using Error::Error;
};

enum class MonomialOrder { Grevlex, Lex };

inline const char* order_name(MonomialOrder o) {
    return o == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

MonomialOrder order_from_name(const std::string& name);

/// Exponent vector; one slot per context variable.
using Monomial = std::vector<std::uint32_t>;

/// An ordered list of distinct variable names together with a monomial order.
/// Contexts are immutable; polynomials hold them by shared_ptr.
class VarContext {
public:
    VarContext(std::vector<std::string> names,
               MonomialOrder order = MonomialOrder::Grevlex);

    static std::shared_ptr<const VarContext>
    make(std::vector<std::string> names,
         MonomialOrder order = MonomialOrder::Grevlex) {
        return std::make_shared<const VarContext>(std::move(names), order);
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    MonomialOrder order() const { return order_; }

    bool has(const std::string& name) const {
        return index_.count(name) != 0;
    }
    std::size_t index_of(const std::string& name) const;

    bool same_as(const VarContext& other) const {
        return order_ == other.order_ && names_ == other.names_;
    }

    /// Returns a new context with extra names appended (same order tag).
    std::shared_ptr<const VarContext>
    extended(const std::vector<std::string>& extra) const;

    /// Strict-weak ordering on exponent vectors in this context's order.
    bool mono_less(const Monomial& a, const Monomial& b) const;

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline void require_same_context(const VarContext& a, const VarContext& b,
                                 const char* where) {
    if (!a.same_as(b))
        throw ContextMismatchError(std::string(where) +
                                   ": operands live in different contexts");
}

std::uint32_t total_degree(const Monomial& m);

}  // namespace kmu
