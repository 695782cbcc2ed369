#include "qmoments/orthopoly.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "qmoments/moments.hpp"
#include "qmoments/qcore.hpp"

namespace qmoments {

namespace {

RatFunc interleaved(MomentKind kind, int n) {
    if (n % 2) return RatFunc(0);
    return moment(kind, n / 2);
}

std::map<std::string, MomentSequence> make_registry() {
    std::map<std::string, MomentSequence> reg;
    auto add = [&reg](const std::string& name, std::function<RatFunc(int)> v) {
        reg.emplace(name, MomentSequence{name, std::move(v)});
    };
    add("qcatalan_full", [](int n) { return interleaved(MomentKind::q_catalan, n); });
    add("qnarayana_full", [](int n) { return interleaved(MomentKind::q_narayana, n); });
    add("central_full", [](int n) { return interleaved(MomentKind::central_qbinom, n); });
    add("typeB_full", [](int n) { return interleaved(MomentKind::typeB_M, n); });
    add("L0", [](int n) { return moment(MomentKind::q_catalan, n); });
    add("L1", [](int n) { return moment(MomentKind::L1_odd, n); });
    add("M0q", [](int n) { return RatFunc(q_binom(2 * n, n)); });
    add("M1q", [](int n) { return RatFunc(q_binom(2 * n + 1, n)); });
    add("A0", [](int n) { return moment(MomentKind::q_narayana, n); });
    add("B0", [](int n) {
        return substitute(moment(MomentKind::q_narayana, n + 1), Var::t,
                          RatFunc(Poly::var(Var::t), Poly::var(Var::q)));
    });
    add("D0", [](int n) { return moment(MomentKind::typeB_M, n); });
    add("E0", [](int n) { return moment(MomentKind::M1_odd, n); });
    return reg;
}

const std::map<std::string, MomentSequence>& registry() {
    static const std::map<std::string, MomentSequence> reg = make_registry();
    return reg;
}

} // namespace

const MomentSequence& moment_sequence(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::ostringstream os;
        os << "unknown moment sequence '" << name << "'; valid names:";
        for (const auto& n : moment_sequence_names()) os << " " << n;
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

const std::vector<std::string>& moment_sequence_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, s] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

Matrix hankel_matrix(const MomentSequence& m, int n) {
    if (n < 0) throw std::invalid_argument("hankel_matrix: negative size");
    Matrix h(n + 1, std::vector<RatFunc>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) h[i][j] = m.value(i + j);
    return h;
}

RatFunc hankel_det(const MomentSequence& m, int n) {
    return det_exact(hankel_matrix(m, n));
}

RatFunc functional_apply(const MomentSequence& m, const RatFunc& p) {
    if (p.den().depends_on(Var::x))
        throw std::domain_error("functional_apply: denominator depends on x");
    RatFunc acc;
    for (std::uint32_t k = 0; k <= p.num().degree(Var::x); ++k) {
        Poly c = p.num().coeff_of(Var::x, k);
        if (!c.is_zero()) acc += RatFunc(c) * m.value(static_cast<int>(k));
    }
    return acc / RatFunc(p.den());
}

std::vector<RatFunc> orthogonal_polys(const MomentSequence& m, int N) {
    std::vector<RatFunc> ps;
    std::vector<RatFunc> norms;  // L(p_k^2)
    for (int n = 0; n <= N; ++n) {
        RatFunc p(Poly::var(Var::x, n));
        for (int k = 0; k < n; ++k) {
            RatFunc cross = functional_apply(m, RatFunc(Poly::var(Var::x, n)) * ps[k]);
            if (cross.is_zero()) continue;
            p -= (cross / norms[k]) * ps[k];
        }
        ps.push_back(p);
        RatFunc norm = functional_apply(m, p * p);
        if (norm.is_zero())
            throw std::domain_error("orthogonal_polys: vanishing Hankel determinant at index " +
                                    std::to_string(n));
        norms.push_back(norm);
        // re-verify L(p_n p_k) = 0 before the member is handed out
        for (int k = 0; k < n; ++k)
            if (!functional_apply(m, p * ps[k]).is_zero())
                throw std::logic_error("orthogonal_polys: orthogonality lost at index " +
                                       std::to_string(n));
    }
    return ps;
}

PolyFamily orthogonal_family(const MomentSequence& m, int N) {
    auto ps = std::make_shared<std::vector<RatFunc>>(orthogonal_polys(m, N));
    PolyFamily fam;
    fam.name = "orth_" + m.name;
    bool symmetric = true;
    for (int k = 0; 2 * k + 1 <= 2 * N && symmetric; ++k)
        symmetric = m.value(2 * k + 1).is_zero();
    fam.alternating_parity = symmetric;
    fam.generator = [ps, N](int n) {
        if (n < 0) return RatFunc(0);
        if (n > N)
            throw std::out_of_range("orthogonal family member beyond the precomputed bound");
        return (*ps)[n];
    };
    return fam;
}

} // namespace qmoments
