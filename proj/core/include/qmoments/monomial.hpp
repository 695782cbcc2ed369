#pragma once

#include <cstdint>
#include <stdexcept>

namespace qmoments {

enum class Var { q, t, x };

/// Power product q^eq * t^et * x^ex with nonnegative exponents.
/// Negative powers live in RatFunc, never here.
struct Monomial {
    std::uint32_t eq = 0;
    std::uint32_t et = 0;
    std::uint32_t ex = 0;

    static Monomial one() { return {}; }
    static Monomial var(Var v, std::uint32_t e = 1) {
        Monomial m;
        m.set(v, e);
        return m;
    }

    std::uint64_t degree() const {
        return std::uint64_t(eq) + et + ex;
    }
    std::uint32_t exp(Var v) const {
        switch (v) {
            case Var::q: return eq;
            case Var::t: return et;
            default: return ex;
        }
    }
    void set(Var v, std::uint32_t e) {
        switch (v) {
            case Var::q: eq = e; break;
            case Var::t: et = e; break;
            default: ex = e; break;
        }
    }

    bool is_one() const { return eq == 0 && et == 0 && ex == 0; }

    bool divides(const Monomial& m) const {
        return eq <= m.eq && et <= m.et && ex <= m.ex;
    }

    Monomial operator*(const Monomial& o) const {
        return {eq + o.eq, et + o.et, ex + o.ex};
    }
    /// Componentwise difference; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        if (!o.divides(*this)) throw std::domain_error("Monomial: non-exact division");
        return {eq - o.eq, et - o.et, ex - o.ex};
    }
    Monomial pow(std::uint32_t e) const { return {eq * e, et * e, ex * e}; }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        return {a.eq < b.eq ? a.eq : b.eq, a.et < b.et ? a.et : b.et, a.ex < b.ex ? a.ex : b.ex};
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with q > t > x; the fixed canonical term order.
inline bool mono_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.eq != b.eq) return a.eq < b.eq;
    if (a.et != b.et) return a.et < b.et;
    return a.ex < b.ex;
}

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

inline const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::t: return "t";
        default: return "x";
    }
}

} // namespace qmoments
