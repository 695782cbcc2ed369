#include "qmoments/families.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qmoments/qcore.hpp"

namespace qmoments {

namespace {

Monomial q_pow(std::uint32_t e) { return Monomial::var(Var::q, e); }
Monomial t_pow(std::uint32_t e) { return Monomial::var(Var::t, e); }
Monomial x_pow(std::uint32_t e) { return Monomial::var(Var::x, e); }

std::uint32_t choose2(int n) { return n < 2 ? 0u : std::uint32_t(n) * (n - 1) / 2; }

// Ordinary binomial as an exact rational; binom(m, 0) = 1 for every m.
BigRat binom(long n, long k) {
    if (k < 0) return BigRat(0);
    if (k == 0) return BigRat(1);
    if (n < 0 || k > n) return BigRat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRat(b.get_str());
}

RatFunc sub_t(const RatFunc& f, const RatFunc& value) { return substitute(f, Var::t, value); }

Poly twist_t_by_q(const Poly& p) {
    return substitute_poly(p, Var::t, Poly::term(BigRat(1), q_pow(1) * t_pow(1)));
}

} // namespace

Poly fib(int n) {
    if (n < 0) return Poly();
    std::vector<Poly::Term> terms;
    for (int k = 0; 2 * k <= n; ++k) {
        BigRat c = binom(n - k, k);
        if (k % 2) c = -c;
        terms.push_back({x_pow(n - 2 * k), c});
    }
    return Poly::from_terms(std::move(terms));
}

Poly fib_t(int n) {
    if (n < 0) return Poly();
    static std::mutex mu;
    static std::vector<Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.push_back(Poly(1));
        cache.push_back(Poly::var(Var::x));
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Poly next = Poly::var(Var::x) * cache[m - 1];
        if (m % 2 == 0)
            next -= cache[m - 2];
        else
            next -= Poly::var(Var::t) * cache[m - 2];
        cache.push_back(std::move(next));
    }
    return cache[n];
}

Poly fib_t_closed(int n) {
    if (n < 0) return Poly();
    std::vector<Poly::Term> terms;
    long h = n / 2;           // floor(n/2)
    long h1 = (n - 1) / 2;    // floor((n-1)/2); n = 0 gives -1, hit only at k = j = 0
    if (n == 0) h1 = -1;
    for (long k = 0; k <= h; ++k) {
        for (long j = 0; j <= k; ++j) {
            BigRat c = binom(h - j, k - j) * binom(h1 - k + j, j);
            if (c.is_zero()) continue;
            if (k % 2) c = -c;
            terms.push_back({t_pow(static_cast<std::uint32_t>(j)) * x_pow(static_cast<std::uint32_t>(n - 2 * k)), c});
        }
    }
    return Poly::from_terms(std::move(terms));
}

Poly qfib(int n) {
    if (n < 0) return Poly();
    Poly sum;
    for (int j = 0; 2 * j <= n; ++j) {
        Poly term = q_binom(n - j, j).times_monomial(q_pow(choose2(j)) * x_pow(n - 2 * j));
        sum += (j % 2) ? -term : term;
    }
    return sum;
}

Poly qlucas(int n) {
    if (n < 0) return Poly();
    if (n == 0) return Poly(1);
    Poly sum;
    for (int k = 0; 2 * k <= n; ++k) {
        // [n]/[n-k] [n-k,k] clears to a polynomial; asserted here.
        Poly weight = (RatFunc(q_int(n) * q_binom(n - k, k)) / RatFunc(q_int(n - k))).as_poly();
        Poly term = weight.times_monomial(q_pow(choose2(k)) * x_pow(n - 2 * k));
        sum += (k % 2) ? -term : term;
    }
    return sum;
}

Poly pqrs(PQRS kind, int n) {
    if (n < 0) return Poly();
    if ((kind == PQRS::P || kind == PQRS::R) && n == 0) return Poly(1);
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        Poly body;
        switch (kind) {
            case PQRS::P: body = q_binom(n + k, 2 * k); break;
            case PQRS::Q: body = q_binom(n + k + 1, 2 * k + 1); break;
            case PQRS::R:
                body = (RatFunc(q_int(2 * n) * q_binom(n + k, 2 * k)) / RatFunc(q_int(n + k)))
                           .as_poly();
                break;
            case PQRS::S:
                body = (RatFunc(q_int(2 * n + 1) * q_binom(n + k + 1, 2 * k + 1)) /
                        RatFunc(q_int(n + k + 1)))
                           .as_poly();
                break;
        }
        Poly term = body.times_monomial(q_pow(choose2(n - k)) * x_pow(k));
        sum += ((n - k) % 2) ? -term : term;
    }
    return sum;
}

Poly tau_fib(int n) {
    return (n % 2 == 0) ? Poly(1) : Poly::var(Var::t);
}

Poly fib_tq(int n) {
    if (n < 0) return Poly();
    static std::mutex mu;
    static std::vector<Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.push_back(Poly(1));
        cache.push_back(Poly::var(Var::x));
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Poly next = Poly::var(Var::x) * twist_t_by_q(cache[m - 1]);
        Poly drop = tau_fib(m - 2) * cache[m - 2];
        next -= drop.times_monomial(q_pow((m - 1) / 2));
        cache.push_back(std::move(next));
    }
    return cache[n];
}

Poly fib_tq_closed(int n) {
    if (n < 0) return Poly();
    bool odd = n % 2;
    int half = n / 2;
    Poly sum;
    for (int k = 0; k <= half; ++k) {
        Poly inner;
        for (int j = 0; j <= k; ++j) {
            Poly prod = q_binom(half - j, k - j) *
                        q_binom(half - k + j - (odd ? 0 : 1), j);
            inner += prod.times_monomial(q_pow((half - k + 1) * j) * t_pow(j));
        }
        Poly term = inner.times_monomial(q_pow(choose2(k)) * x_pow(n - 2 * k));
        sum += (k % 2) ? -term : term;
    }
    return sum;
}

RatFunc tau_lucas(int n) {
    if (n < 0) throw std::invalid_argument("tau_lucas: negative index");
    if (n == 0)
        return RatFunc(Poly(1) + Poly::term(BigRat(1), q_pow(1) * t_pow(1)));
    int m = n / 2;
    if (n % 2 == 0) {
        Poly num = Poly(1) + Poly::term(BigRat(1), q_pow(m + 1) * t_pow(m + 1));
        Poly den = Poly(1) + Poly::term(BigRat(1), q_pow(m) * t_pow(m));
        return RatFunc(num.times_monomial(q_pow(m)), den);
    }
    Poly num = Poly(1) + Poly::var(Var::t, m);
    Poly den = Poly(1) + Poly::var(Var::t, m + 1);
    return RatFunc(num.times_monomial(q_pow(m + 1) * t_pow(1)), den);
}

RatFunc tau_lucas_t(int n) {
    if (n < 0) throw std::invalid_argument("tau_lucas_t: negative index");
    if (n == 0) return RatFunc(Poly(1) + Poly::var(Var::t));
    int m = n / 2;
    if (n % 2 == 0)
        return RatFunc(Poly(1) + Poly::var(Var::t, m + 1), Poly(1) + Poly::var(Var::t, m));
    Poly num = (Poly(1) + Poly::var(Var::t, m)).times_monomial(t_pow(1));
    return RatFunc(num, Poly(1) + Poly::var(Var::t, m + 1));
}

RatFunc lucas_tq(int n) {
    if (n < 0) return RatFunc(0);
    static std::mutex mu;
    static std::vector<RatFunc> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.emplace_back(Poly(1));
        cache.emplace_back(Poly::var(Var::x));
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        RatFunc twisted = sub_t(cache[m - 1], RatFunc(Poly::term(BigRat(1), q_pow(1) * t_pow(1))));
        RatFunc next = RatFunc(Poly::var(Var::x)) * twisted - tau_lucas(m - 2) * cache[m - 2];
        // Even members clear to polynomials; the as_poly assertion also
        // keeps the odd members' denominators at small t-only products
        // instead of compounding across recurrence levels.
        if (m % 2 == 0) next = RatFunc(next.as_poly());
        cache.push_back(std::move(next));
    }
    return cache[n];
}

RatFunc lucas_t(int n) {
    if (n < 0) return RatFunc(0);
    static std::mutex mu;
    static std::vector<RatFunc> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.emplace_back(Poly(1));
        cache.emplace_back(Poly::var(Var::x));
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        RatFunc next =
            RatFunc(Poly::var(Var::x)) * cache[m - 1] - tau_lucas_t(m - 2) * cache[m - 2];
        if (m % 2 == 0) next = RatFunc(next.as_poly());
        cache.push_back(std::move(next));
    }
    return cache[n];
}

static Poly q_tq(int n) {
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        Poly inner;
        for (int j = 0; j <= k; ++j) {
            Poly prod = q_binom(n - j, k - j) * q_binom(n - k + j, j);
            inner += prod.times_monomial(q_pow((n - k + 1) * j) * t_pow(j));
        }
        Poly term = inner.times_monomial(q_pow(choose2(k)) * x_pow(n - k));
        sum += (k % 2) ? -term : term;
    }
    return sum;
}

static Poly p_tq(int n) {
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        Poly inner;
        for (int j = 0; j <= n; ++j) {
            Poly prod = q_binom(n - j, k) * q_binom(k + j - 1, j);
            if (prod.is_zero()) continue;
            inner += prod.times_monomial(q_pow(j * (k + 1)) * t_pow(j));
        }
        Poly term = inner.times_monomial(q_pow(choose2(n - k)) * x_pow(k));
        sum += ((n - k) % 2) ? -term : term;
    }
    return sum;
}

RatFunc pqrs_tq(PQRS kind, int n) {
    if (n < 0) return RatFunc(0);
    switch (kind) {
        case PQRS::Q: {
            static std::mutex mu;
            static std::map<int, RatFunc> cache;
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(n);
            if (it == cache.end()) it = cache.emplace(n, RatFunc(q_tq(n))).first;
            return it->second;
        }
        case PQRS::P:
            return RatFunc(p_tq(n));
        case PQRS::R: {
            // R_n = Q_n - q^(2n-2) t Q_{n-2}, with Q_{-2} = Q_{-1} = 0.
            RatFunc r = pqrs_tq(PQRS::Q, n);
            if (n >= 2) {
                RatFunc drop = pqrs_tq(PQRS::Q, n - 2) *
                               RatFunc(Poly::term(BigRat(1), q_pow(2 * n - 2) * t_pow(1)));
                r = r - drop;
            }
            return r;
        }
        case PQRS::S:
        default: {
            if (n == 0) return RatFunc(Poly(1));
            RatFunc t_over_q(Poly::var(Var::t), Poly::var(Var::q));
            RatFunc r1 = sub_t(pqrs_tq(PQRS::R, n + 1), t_over_q);
            RatFunc r0 = sub_t(pqrs_tq(PQRS::R, n), t_over_q);
            Poly one_tn = Poly(1) + Poly::var(Var::t, n);
            Poly one_tn1 = Poly(1) + Poly::var(Var::t, n + 1);
            RatFunc bracket =
                RatFunc(one_tn) * r1 + RatFunc(one_tn1.times_monomial(q_pow(n))) * r0;
            RatFunc s = bracket / RatFunc(Poly::var(Var::x) * one_tn);
            if (s.den().depends_on(Var::x))
                throw std::domain_error("pqrs_tq: S division by x not exact at n=" +
                                        std::to_string(n));
            return s;
        }
    }
}

Poly r_tq_closed(int n) {
    if (n < 0) return Poly();
    if (n == 0) return Poly(1);  // the k = n weight degenerates at n = 0; R_0 = 1 by definition
    Poly sum;
    for (int k = 0; k <= n; ++k) {
        RatFunc c;
        if (k == n) {
            c = RatFunc(Poly(1) + Poly::term(BigRat(1), q_pow(n) * t_pow(n)));
        } else {
            for (int j = 0; j <= k; ++j) {
                RatFunc ratio(q_binom(n + j - k - 1, j), q_binom(n - 1, j));
                RatFunc term = RatFunc(q_binom(k, j).times_monomial(q_pow((n + 1 - k) * j) * t_pow(j)));
                c += term * ratio;
            }
        }
        Poly coeff = (RatFunc(q_binom(n, k)) * c).as_poly();
        Poly term = coeff.times_monomial(q_pow(choose2(k)) * x_pow(n - k));
        sum += (k % 2) ? -term : term;
    }
    return sum;
}

Poly x_even_part(const Poly& p) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.ex % 2 != 0)
            throw std::domain_error("x_even_part: odd x-power present");
        Monomial m = t.mono;
        m.ex /= 2;
        out.push_back({m, t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

Poly x_odd_part(const Poly& p) {
    std::vector<Poly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.ex % 2 != 1)
            throw std::domain_error("x_odd_part: even x-power present");
        Monomial m = t.mono;
        m.ex = (m.ex - 1) / 2;
        out.push_back({m, t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

RatFunc x_even_part(const RatFunc& f) {
    if (f.den().depends_on(Var::x)) throw std::domain_error("x_even_part: denominator depends on x");
    return RatFunc(x_even_part(f.num()), f.den());
}

RatFunc x_odd_part(const RatFunc& f) {
    if (f.den().depends_on(Var::x)) throw std::domain_error("x_odd_part: denominator depends on x");
    return RatFunc(x_odd_part(f.num()), f.den());
}

namespace {

std::map<std::string, PolyFamily> make_registry() {
    std::map<std::string, PolyFamily> reg;
    const std::vector<Var> vx = {Var::x};
    const std::vector<Var> vtx = {Var::t, Var::x};
    const std::vector<Var> vqx = {Var::q, Var::x};
    const std::vector<Var> vqtx = {Var::q, Var::t, Var::x};
    auto add = [&reg](const std::string& name, std::function<RatFunc(int)> gen, bool alt,
                      std::vector<Var> vars) {
        reg.emplace(name, PolyFamily{name, std::move(gen), alt, std::move(vars)});
    };
    add("fib", [](int n) { return RatFunc(fib(n)); }, true, vx);
    add("fib_t", [](int n) { return RatFunc(fib_t(n)); }, true, vtx);
    add("qfib", [](int n) { return RatFunc(qfib(n)); }, true, vqx);
    add("qlucas", [](int n) { return RatFunc(qlucas(n)); }, true, vqx);
    add("fib_tq", [](int n) { return RatFunc(fib_tq(n)); }, true, vqtx);
    add("lucas_tq", [](int n) { return lucas_tq(n); }, true, vqtx);
    add("P", [](int n) { return RatFunc(pqrs(PQRS::P, n)); }, false, vqx);
    add("Q", [](int n) { return RatFunc(pqrs(PQRS::Q, n)); }, false, vqx);
    add("R", [](int n) { return RatFunc(pqrs(PQRS::R, n)); }, false, vqx);
    add("S", [](int n) { return RatFunc(pqrs(PQRS::S, n)); }, false, vqx);
    add("P_tq", [](int n) { return pqrs_tq(PQRS::P, n); }, false, vqtx);
    add("Q_tq", [](int n) { return pqrs_tq(PQRS::Q, n); }, false, vqtx);
    add("R_tq", [](int n) { return pqrs_tq(PQRS::R, n); }, false, vqtx);
    add("S_tq", [](int n) { return pqrs_tq(PQRS::S, n); }, false, vqtx);
    return reg;
}

const std::map<std::string, PolyFamily>& registry() {
    static const std::map<std::string, PolyFamily> reg = make_registry();
    return reg;
}

} // namespace

const PolyFamily& family(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::ostringstream os;
        os << "unknown family '" << name << "'; valid names:";
        for (const auto& n : family_names()) os << " " << n;
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

} // namespace qmoments
