#ifndef CRITCERT_MONOMIAL_HPP
#define CRITCERT_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace critcert {

// Exponent vector; length equals the ambient variable count.
struct Monomial {
    std::vector<uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exponents(n, 0) {}
    explicit Monomial(std::vector<uint32_t> e) : exponents(std::move(e)) {}

    std::size_t size() const { return exponents.size(); }
    uint32_t operator[](std::size_t i) const { return exponents[i]; }
    uint32_t& operator[](std::size_t i) { return exponents[i]; }

    uint64_t degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), uint64_t{0});
    }

    bool is_constant() const {
        for (auto e : exponents)
            if (e) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > other.exponents[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.exponents.size());
        for (std::size_t i = 0; i < a.exponents.size(); ++i)
            r.exponents[i] = a.exponents[i] + b.exponents[i];
        return r;
    }

    // Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.exponents.size());
        for (std::size_t i = 0; i < a.exponents.size(); ++i)
            r.exponents[i] = a.exponents[i] - b.exponents[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exponents.size());
        for (std::size_t i = 0; i < a.exponents.size(); ++i)
            r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }
    // Storage order only; term ordering for algebra goes through OrderSpec.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

enum class OrderKind { GradedRevLex, Lex, BlockElimination };

// Monomial order. `permutation[p]` is the variable index at significance
// position p (position 0 dominates). BlockElimination compares the first
// `block_size` positions by grevlex, then the rest by grevlex, so those
// leading variables are eliminated.
struct OrderSpec {
    OrderKind kind = OrderKind::GradedRevLex;
    std::size_t block_size = 0;
    std::vector<std::size_t> permutation;  // empty means identity

    static OrderSpec grevlex() { return {}; }
    static OrderSpec lex(std::vector<std::size_t> perm = {}) {
        return {OrderKind::Lex, 0, std::move(perm)};
    }
    static OrderSpec block(std::size_t eliminate_count,
                           std::vector<std::size_t> perm = {}) {
        return {OrderKind::BlockElimination, eliminate_count, std::move(perm)};
    }

    friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
        return a.kind == b.kind && a.block_size == b.block_size &&
               a.permutation == b.permutation;
    }
    friend bool operator<(const OrderSpec& a, const OrderSpec& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.block_size != b.block_size) return a.block_size < b.block_size;
        return a.permutation < b.permutation;
    }
};

// -1, 0, +1 as a < b, a == b, a > b under the order.
int compare(const Monomial& a, const Monomial& b, const OrderSpec& order);

struct MonomialGreater {
    OrderSpec order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, order) > 0;
    }
};

}  // namespace critcert

#endif
