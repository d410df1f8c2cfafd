#include "zakfiber/zak.hpp"

#include "zakfiber/errors.hpp"
#include "zakfiber/parallel.hpp"

namespace zakfiber {

PairCtxPtr make_pair_context(const GroupPtr& G, const Subgroup& H,
                             TransversalPolicy policy, std::uint64_t seed) {
    if (!G) throw SchemaError("make_pair_context: null group");
    if (H.parent.get() != G.get())
        throw ContractError("make_pair_context: subgroup belongs to a different group");
    if (!H.abelian)
        throw ContractError("make_pair_context: subgroup must be abelian");
    if (!H.group || !H.group->has_invariants())
        throw ContractError("make_pair_context: subgroup structure unavailable");

    auto ctx = std::make_shared<PairContext>();
    ctx->G = G;
    ctx->H = H;
    ctx->C = policy == TransversalPolicy::minimal ? right_transversal(G, H)
                                                  : right_transversal_random(G, H, seed);
    ctx->Hd = characters(H.group);
    if (G->abelian() && G->has_invariants() && G->order() <= 10000) {
        ctx->fiber_side = true;
        ctx->Gd = characters(G);
        ctx->Hstar = annihilator(ctx->Gd, H);
        ctx->iso = dual_quotient_iso(ctx->Gd, H, ctx->Hstar, ctx->Hd);
    }
    return ctx;
}

ZakArray zak(const PairCtxPtr& ctx, const GroupFunction& f) {
    if (f.group.get() != ctx->G.get())
        throw ContractError("zak: function lives on a different group");
    const auto& G = *ctx->G;
    const auto& H = ctx->H;
    const int m = ctx->dual_order();
    const int nc = ctx->cosets();
    ZakArray Z{ctx, Eigen::MatrixXcd(m, nc)};
    // one restricted Fourier transform per coset, all rows of that column
    parallel_for(nc, [&](int c) {
        const int gamma = ctx->C.transversal[static_cast<std::size_t>(c)];
        Eigen::VectorXcd slice(m);
        for (int i = 0; i < m; ++i)
            slice[i] = f.values[G.op(H.members[static_cast<std::size_t>(i)], gamma)];
        for (int a = 0; a < m; ++a) {
            cxd acc(0.0, 0.0);
            for (int i = 0; i < m; ++i) acc += slice[i] * std::conj(ctx->Hd.chi(a, i));
            Z.values(a, c) = acc * H.weight;
        }
    });
    return Z;
}

GroupFunction zak_inverse(const ZakArray& Z) {
    const auto& ctx = *Z.ctx;
    const auto& G = *ctx.G;
    if (Z.values.rows() != ctx.dual_order() || Z.values.cols() != ctx.cosets())
        throw SchemaError("zak_inverse: array shape mismatch");
    GroupFunction f{ctx.G, Eigen::VectorXcd(G.order())};
    const double wd = ctx.Hd.weight();
    parallel_for(G.order(), [&](int g) {
        const int c = ctx.C.coset_of[static_cast<std::size_t>(g)];
        const int i = ctx.H.position(ctx.C.h_part[static_cast<std::size_t>(g)]);
        cxd acc(0.0, 0.0);
        for (int a = 0; a < ctx.dual_order(); ++a)
            acc += Z.values(a, c) * ctx.Hd.chi(a, i);
        f.values[g] = acc * wd;
    });
    return f;
}

FiberArray fiberize(const PairCtxPtr& ctx, const GroupFunction& f) {
    if (!ctx->fiber_side)
        throw ContractError("fiberize: requires an abelian ambient group");
    if (f.group.get() != ctx->G.get())
        throw ContractError("fiberize: function lives on a different group");
    const Eigen::VectorXcd fhat = fourier(ctx->Gd, f.values);
    const int m = ctx->dual_order();
    const int s = ctx->Hstar.order();
    FiberArray F{ctx, Eigen::MatrixXcd(m, s)};
    for (int a = 0; a < m; ++a) {
        const int coset = ctx->iso.coset_of_hchar[static_cast<std::size_t>(a)];
        const int beta = ctx->iso.beta[static_cast<std::size_t>(coset)];
        for (int k = 0; k < s; ++k)
            F.values(a, k) = fhat[ctx->Gd.add(beta, ctx->Hstar.members[static_cast<std::size_t>(k)])];
    }
    return F;
}

FiberArray zak_to_fiber(const ZakArray& Z) {
    const auto& ctx = *Z.ctx;
    if (!ctx.fiber_side)
        throw ContractError("zak_to_fiber: requires an abelian ambient group");
    const int m = ctx.dual_order();
    const int nc = ctx.cosets();
    const int s = ctx.Hstar.order();
    if (nc != s) throw ContractError("zak_to_fiber: |H\\G| and |H^*| disagree");
    FiberArray F{Z.ctx, Eigen::MatrixXcd(m, s)};
    // per fiber: twist by beta_alpha(gamma_c^{-1}), then Fourier over the
    // quotient H\G against the characters kappa(gamma_c) it is dual to
    parallel_for(m, [&](int a) {
        const int coset = ctx.iso.coset_of_hchar[static_cast<std::size_t>(a)];
        const int beta = ctx.iso.beta[static_cast<std::size_t>(coset)];
        Eigen::VectorXcd twisted(nc);
        for (int c = 0; c < nc; ++c) {
            const int gamma = ctx.C.transversal[static_cast<std::size_t>(c)];
            const int gamma_inv = ctx.G->inverse(gamma);
            twisted[c] = ctx.Gd.chi(beta, gamma_inv) * Z.values(a, c);
        }
        for (int k = 0; k < s; ++k) {
            const int kappa = ctx.Hstar.members[static_cast<std::size_t>(k)];
            cxd acc(0.0, 0.0);
            for (int c = 0; c < nc; ++c) {
                const int gamma = ctx.C.transversal[static_cast<std::size_t>(c)];
                acc += twisted[c] * std::conj(ctx.Gd.chi(kappa, gamma));
            }
            F.values(a, k) = acc * ctx.C.weight;
        }
    });
    return F;
}

Eigen::VectorXcd translation_bracket(const ZakArray& Zf, const ZakArray& Zg) {
    if (Zf.ctx.get() != Zg.ctx.get())
        throw ContractError("translation_bracket: mismatched contexts");
    const auto& ctx = *Zf.ctx;
    const int m = ctx.dual_order();
    Eigen::VectorXcd out(m);
    for (int a = 0; a < m; ++a) {
        const int neg = ctx.Hd.negate(a);
        // <Zf(neg), Zg(neg)> with the coset weight
        out[a] = Zg.values.row(neg).conjugate().cwiseProduct(Zf.values.row(neg)).sum() *
                 ctx.C.weight;
    }
    return out;
}

} // namespace zakfiber
