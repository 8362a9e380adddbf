#include "critcert/monomial.hpp"

namespace critcert {

namespace {

inline uint32_t exp_at(const Monomial& m, const OrderSpec& o, std::size_t pos) {
    return o.permutation.empty() ? m[pos] : m[o.permutation[pos]];
}

// grevlex on positions [lo, hi).
int cmp_grevlex(const Monomial& a, const Monomial& b, const OrderSpec& o,
                std::size_t lo, std::size_t hi) {
    uint64_t da = 0, db = 0;
    for (std::size_t p = lo; p < hi; ++p) {
        da += exp_at(a, o, p);
        db += exp_at(b, o, p);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t p = hi; p-- > lo;) {
        uint32_t ea = exp_at(a, o, p), eb = exp_at(b, o, p);
        if (ea != eb) return ea > eb ? -1 : 1;  // larger trailing exponent loses
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b, const OrderSpec& o) {
    for (std::size_t p = 0; p < a.size(); ++p) {
        uint32_t ea = exp_at(a, o, p), eb = exp_at(b, o, p);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const OrderSpec& order) {
    if (a.size() != b.size())
        throw std::invalid_argument("monomial length mismatch in compare");
    switch (order.kind) {
        case OrderKind::Lex:
            return cmp_lex(a, b, order);
        case OrderKind::GradedRevLex:
            return cmp_grevlex(a, b, order, 0, a.size());
        case OrderKind::BlockElimination: {
            int c = cmp_grevlex(a, b, order, 0, order.block_size);
            if (c) return c;
            return cmp_grevlex(a, b, order, order.block_size, a.size());
        }
    }
    return 0;
}

}  // namespace critcert
