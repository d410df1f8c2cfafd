#include "zakfiber/harmonic.hpp"

#include <numeric>

#include "zakfiber/errors.hpp"
#include "zakfiber/parallel.hpp"

namespace zakfiber {
namespace {

constexpr int kDenseCap = 10000;
constexpr double kPi = 3.14159265358979323846;

} // namespace

GroupFunction translate(const GroupFunction& f, int y) {
    const auto& G = *f.group;
    if (y < 0 || y >= G.order()) throw SchemaError("translate: element out of range");
    GroupFunction out{f.group, Eigen::VectorXcd(G.order())};
    const int yi = G.inverse(y);
    for (int x = 0; x < G.order(); ++x)
        out.values[x] = f.values[G.op(yi, x)];
    return out;
}

DualGroup characters(const GroupPtr& H) {
    if (!H) throw SchemaError("characters: null group");
    if (!H->abelian())
        throw ContractError("characters: group is not abelian");
    if (!H->has_invariants())
        throw ContractError("characters: abelian structure unavailable (order above the dense cap)");
    if (H->order() > kDenseCap)
        throw ContractError("characters: dense harmonic work capped at 10^4 elements");

    DualGroup D;
    D.base_ = H;
    D.weight_ = 1.0 / (static_cast<double>(H->order()) * H->weight());
    long long l = 1;
    for (int nj : H->invariants()) l = std::lcm(l, static_cast<long long>(nj));
    D.lcm_ = l;
    D.root_.resize(static_cast<std::size_t>(l));
    for (long long r = 0; r < l; ++r)
        D.root_[static_cast<std::size_t>(r)] =
            std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(l));
    return D;
}

Eigen::VectorXcd fourier(const DualGroup& D, const Eigen::VectorXcd& f) {
    const int n = D.order();
    if (f.size() != n) throw SchemaError("fourier: length mismatch");
    Eigen::VectorXcd out(n);
    const double w = D.base()->weight();
    parallel_for(n, [&](int a) {
        cxd acc(0.0, 0.0);
        for (int x = 0; x < n; ++x) acc += f[x] * std::conj(D.chi(a, x));
        out[a] = acc * w;
    });
    return out;
}

Eigen::VectorXcd fourier_inverse(const DualGroup& D, const Eigen::VectorXcd& g) {
    const int n = D.order();
    if (g.size() != n) throw SchemaError("fourier_inverse: length mismatch");
    Eigen::VectorXcd out(n);
    parallel_for(n, [&](int x) {
        cxd acc(0.0, 0.0);
        for (int a = 0; a < n; ++a) acc += g[a] * D.chi(a, x);
        out[x] = acc * D.weight();
    });
    return out;
}

GroupFunction modulate(const DualGroup& D, const GroupFunction& f, int kappa) {
    if (f.group.get() != D.base().get())
        throw ContractError("modulate: function lives on a different group");
    if (kappa < 0 || kappa >= D.order()) throw SchemaError("modulate: character out of range");
    GroupFunction out{f.group, Eigen::VectorXcd(f.values.size())};
    for (int x = 0; x < D.order(); ++x)
        out.values[x] = D.chi(kappa, x) * f.values[x];
    return out;
}

double parseval_check(const DualGroup& D, const Eigen::VectorXcd& f_on_dual) {
    const int n = D.order();
    if (f_on_dual.size() != n) throw SchemaError("parseval_check: length mismatch");
    double lhs = 0.0;
    for (int x = 0; x < n; ++x) {
        cxd acc(0.0, 0.0);
        for (int a = 0; a < n; ++a) acc += f_on_dual[a] * std::conj(D.chi(a, x));
        lhs += std::norm(acc * D.weight());
    }
    lhs *= D.base()->weight();
    const double rhs = f_on_dual.squaredNorm() * D.weight();
    return std::abs(lhs - rhs);
}

Annihilator annihilator(const DualGroup& Gd, const Subgroup& H) {
    if (H.parent.get() != Gd.base().get())
        throw ContractError("annihilator: subgroup belongs to a different group");
    const int n = Gd.order();
    Annihilator A;
    A.pos.assign(static_cast<std::size_t>(n), -1);
    // kappa annihilates H iff its integer phase vanishes on a generating
    // set; the standalone copy's basis is such a set
    const auto& Hg = H.group;
    if (!Hg) throw ContractError("annihilator: subgroup copy unavailable");
    std::vector<int> gens;
    for (int j = 0; j < Hg->tuple_rank(); ++j)
        gens.push_back(H.members[static_cast<std::size_t>(Hg->basis_element(j))]);
    for (int kappa = 0; kappa < n; ++kappa) {
        bool ann = true;
        for (int g : gens)
            if (Gd.phase(kappa, g) != 0) { ann = false; break; }
        if (ann) {
            A.pos[static_cast<std::size_t>(kappa)] = static_cast<std::int32_t>(A.members.size());
            A.members.push_back(kappa);
        }
    }
    if (static_cast<long long>(A.members.size()) * H.order() != n)
        throw ContractError("annihilator: order is not |G|/|H|");
    // dual weight of the quotient-side pairing: w_G^ / w_H^
    const double w_Gd = Gd.weight();
    const double w_Hd = 1.0 / (static_cast<double>(H.order()) * H.weight);
    A.weight = w_Gd / w_Hd;
    return A;
}

DualQuotientIso dual_quotient_iso(const DualGroup& Gd, const Subgroup& H,
                                  const Annihilator& Hstar, const DualGroup& Hd) {
    const int n = Gd.order();
    DualQuotientIso iso;
    iso.coset_of_char.assign(static_cast<std::size_t>(n), -1);

    // cosets of H^* inside dual(G); same ascending-scan enumeration as for
    // group cosets, so beta is the minimal character index in each coset
    for (int a = 0; a < n; ++a) {
        if (iso.coset_of_char[static_cast<std::size_t>(a)] >= 0) continue;
        const int c = static_cast<int>(iso.beta.size());
        iso.beta.push_back(a);
        for (int kappa : Hstar.members)
            iso.coset_of_char[static_cast<std::size_t>(Gd.add(a, kappa))] =
                static_cast<std::int32_t>(c);
    }
    const int m = Hd.order();
    if (static_cast<int>(iso.beta.size()) != m)
        throw ContractError("dual_quotient_iso: coset count differs from |dual(H)|");

    const auto& Hg = Hd.base();
    iso.hchar_of_coset.assign(static_cast<std::size_t>(m), -1);
    iso.coset_of_hchar.assign(static_cast<std::size_t>(m), -1);
    const long long Lg = Gd.lcm();
    for (int c = 0; c < m; ++c) {
        const int omega = iso.beta[static_cast<std::size_t>(c)];
        // restriction of chi_omega to H, identified through exact phases on
        // the basis of the standalone copy
        std::vector<int> tuple(static_cast<std::size_t>(Hg->tuple_rank()));
        for (int j = 0; j < Hg->tuple_rank(); ++j) {
            const int bj = H.members[static_cast<std::size_t>(Hg->basis_element(j))];
            const long long q = Gd.phase(omega, bj);
            const long long mj = Hg->invariants()[static_cast<std::size_t>(j)];
            if ((q * mj) % Lg != 0)
                throw ContractError("dual_quotient_iso: restriction not a character of H");
            tuple[static_cast<std::size_t>(j)] = static_cast<int>((q * mj / Lg) % mj);
        }
        const int a = Hg->element_from_coords(tuple);
        if (iso.coset_of_hchar[static_cast<std::size_t>(a)] >= 0)
            throw ContractError("dual_quotient_iso: restriction map not injective");
        iso.hchar_of_coset[static_cast<std::size_t>(c)] = a;
        iso.coset_of_hchar[static_cast<std::size_t>(a)] = c;
    }
    return iso;
}

} // namespace zakfiber
