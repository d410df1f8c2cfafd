#include "zakfiber/frames.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "zakfiber/errors.hpp"
#include "zakfiber/parallel.hpp"

namespace zakfiber {
namespace {

constexpr double kEigCut = 1e-10;     // "nonzero": lambda > kEigCut * lambda_max
constexpr double kVerdictTol = 1e-8;  // parseval / orthonormal detection

void check_family(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family) {
    for (const auto& f : family) {
        if (f.group.get() != ctx->G.get())
            throw ContractError("frame analysis: family member lives on a different group");
        if (f.values.size() != ctx->G->order())
            throw ContractError("frame analysis: value vector has the wrong length");
    }
}

bool all_zero(const std::vector<GroupFunction>& family) {
    for (const auto& f : family)
        if (f.values.cwiseAbs().maxCoeff() > 0.0) return false;
    return true;
}

std::vector<ZakArray> zak_family(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family) {
    std::vector<ZakArray> zaks;
    zaks.reserve(family.size());
    for (const auto& f : family) zaks.push_back(zak(ctx, f));
    return zaks;
}

/// Eigenvalues of every fiber Gram G(alpha)_{st} = <Zf_t(alpha), Zf_s(alpha)>
/// with the coset-space weight.
std::vector<Eigen::VectorXd> fiber_gram_eigs(const std::vector<ZakArray>& zaks) {
    const PairCtxPtr ctx = zaks.front().ctx;
    const int m = ctx->dual_order();
    const int nc = ctx->cosets();
    const int T = static_cast<int>(zaks.size());
    std::vector<Eigen::VectorXd> eigs(static_cast<std::size_t>(m));
    parallel_for(m, [&](int a) {
        Eigen::MatrixXcd V(nc, T);
        for (int t = 0; t < T; ++t)
            V.col(t) = zaks[static_cast<std::size_t>(t)].values.row(a).transpose();
        const Eigen::MatrixXcd gram = (V.adjoint() * V) * ctx->C.weight;
        eigs[static_cast<std::size_t>(a)] = hermitian_eigenvalues(gram);
    });
    return eigs;
}

} // namespace

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& M) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
    return es.eigenvalues(); // ascending
}

DirectBounds dense_system_bounds(const Eigen::MatrixXcd& U, double scale) {
    DirectBounds out;
    const Eigen::Index n = U.rows();
    const Eigen::Index K = U.cols();
    if (K == 0 || U.cwiseAbs().maxCoeff() == 0.0) return out;
    const Eigen::MatrixXcd M =
        (n <= K) ? Eigen::MatrixXcd((U * U.adjoint()) * scale)
                 : Eigen::MatrixXcd((U.adjoint() * U) * scale);
    const Eigen::VectorXd ev = hermitian_eigenvalues(M);
    const double lmax = ev[ev.size() - 1];
    if (!(lmax > 0.0)) return out;
    const double cut = kEigCut * lmax;
    out.B = lmax;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > cut) {
            if (out.span_dim == 0) out.A = ev[i];
            ++out.span_dim;
        }
    }
    out.degenerate = false;
    return out;
}

FiberBoundsResult fiber_bounds_from_eigs(const std::vector<Eigen::VectorXd>& eigs) {
    FiberBoundsResult out;
    double lmax = 0.0;
    for (const auto& ev : eigs)
        if (ev.size() > 0) lmax = std::max(lmax, ev[ev.size() - 1]);
    if (!(lmax > 0.0)) return out; // zero family: empty table
    const double cut = kEigCut * lmax;
    out.degenerate = false;
    out.A = lmax;
    out.B = lmax;
    for (int a = 0; a < static_cast<int>(eigs.size()); ++a) {
        const Eigen::VectorXd& ev = eigs[static_cast<std::size_t>(a)];
        int dim = 0;
        double lo = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] > cut) {
                if (dim == 0) lo = ev[i];
                ++dim;
            }
        }
        if (dim > 0) {
            out.table.push_back(PerFiberBounds{a, dim, lo, ev[ev.size() - 1]});
            out.A = std::min(out.A, lo);
        }
    }
    return out;
}

void fill_structural_verdicts(FrameReport& rep, const Eigen::MatrixXcd& U,
                              double ambient_weight) {
    const Eigen::MatrixXcd gram = (U.adjoint() * U) * ambient_weight;
    const Eigen::VectorXd ev = hermitian_eigenvalues(gram);
    const double lmax = ev[ev.size() - 1];
    rep.is_frame_for_span = !rep.degenerate;
    rep.is_riesz_sequence = lmax > 0.0 && ev[0] > kEigCut * lmax;
    rep.is_parseval = std::abs(rep.A_direct - 1.0) <= kVerdictTol &&
                      std::abs(rep.B_direct - 1.0) <= kVerdictTol;
    rep.is_orthonormal =
        (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
        kVerdictTol;
}

Eigen::MatrixXcd translate_system_matrix(const PairCtxPtr& ctx,
                                         const std::vector<GroupFunction>& family) {
    check_family(ctx, family);
    const int n = ctx->G->order();
    const int hs = ctx->H.order();
    const int T = static_cast<int>(family.size());
    Eigen::MatrixXcd U(n, static_cast<Eigen::Index>(T) * hs);
    parallel_for(T * hs, [&](int col) {
        const int t = col / hs;
        const int j = col % hs;
        U.col(col) = translate(family[static_cast<std::size_t>(t)], ctx->H.members[static_cast<std::size_t>(j)]).values;
    });
    return U;
}

DirectBounds direct_translate_bounds(const PairCtxPtr& ctx,
                                     const std::vector<GroupFunction>& family) {
    check_family(ctx, family);
    if (family.empty() || all_zero(family)) return {};
    const Eigen::MatrixXcd U = translate_system_matrix(ctx, family);
    return dense_system_bounds(U, ctx->H.weight * ctx->G->weight());
}

FiberBoundsResult fiber_frame_bounds(const std::vector<ZakArray>& zaks,
                                     const RangeFunction& J) {
    FiberBoundsResult out;
    if (zaks.empty()) return out;
    const PairCtxPtr ctx = zaks.front().ctx;
    for (const auto& z : zaks)
        if (z.ctx.get() != ctx.get())
            throw ContractError("fiber_frame_bounds: mismatched contexts");
    if (J.ctx.get() != ctx.get() || J.fiber_count != ctx->dual_order() ||
        J.ambient_dim != ctx->cosets())
        throw ContractError("fiber_frame_bounds: range function does not match the family");
    return fiber_bounds_from_eigs(fiber_gram_eigs(zaks));
}

FrameReport translate_frame_report(const PairCtxPtr& ctx,
                                   const std::vector<GroupFunction>& family) {
    check_family(ctx, family);
    FrameReport rep;
    if (family.empty() || all_zero(family)) {
        rep.degenerate = true;
        return rep;
    }
    const Eigen::MatrixXcd U = translate_system_matrix(ctx, family);
    const DirectBounds d = dense_system_bounds(U, ctx->H.weight * ctx->G->weight());
    const std::vector<ZakArray> zaks = zak_family(ctx, family);
    const RangeFunction J = range_function(zaks);
    const FiberBoundsResult fb = fiber_frame_bounds(zaks, J);

    rep.A_direct = d.A;
    rep.B_direct = d.B;
    rep.span_dim = d.span_dim;
    rep.A_fiber = fb.A;
    rep.B_fiber = fb.B;
    rep.per_fiber = fb.table;
    rep.degenerate = d.degenerate || fb.degenerate;
    rep.residual = std::abs(rep.A_direct - rep.A_fiber) + std::abs(rep.B_direct - rep.B_fiber);
    fill_structural_verdicts(rep, U, ctx->G->weight());
    return rep;
}

FrameReport riesz_check(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family) {
    if (ctx->H.weight != 1.0)
        throw ContractError("riesz_check: requires the counting measure on H (subgroup weight 1)");
    check_family(ctx, family);
    FrameReport rep;
    if (family.empty() || all_zero(family)) {
        rep.degenerate = true;
        return rep;
    }

    const Eigen::MatrixXcd U = translate_system_matrix(ctx, family);
    const Eigen::MatrixXcd gram = (U.adjoint() * U) * ctx->G->weight();
    const Eigen::VectorXd ev = hermitian_eigenvalues(gram);
    const double lmax = ev[ev.size() - 1];
    rep.A_direct = ev[0];
    rep.B_direct = lmax;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] > kEigCut * lmax) ++rep.span_dim;

    const std::vector<ZakArray> zaks = zak_family(ctx, family);
    const std::vector<Eigen::VectorXd> eigs = fiber_gram_eigs(zaks);
    double fmax = 0.0;
    for (const auto& fe : eigs) fmax = std::max(fmax, fe[fe.size() - 1]);
    const double cut = kEigCut * fmax;
    rep.A_fiber = eigs[0][0];
    rep.B_fiber = fmax;
    for (int a = 0; a < static_cast<int>(eigs.size()); ++a) {
        const Eigen::VectorXd& fe = eigs[static_cast<std::size_t>(a)];
        int dim = 0;
        for (Eigen::Index i = 0; i < fe.size(); ++i)
            if (fe[i] > cut) ++dim;
        rep.per_fiber.push_back(PerFiberBounds{a, dim, fe[0], fe[fe.size() - 1]});
        rep.A_fiber = std::min(rep.A_fiber, fe[0]);
    }

    rep.residual = std::abs(rep.A_direct - rep.A_fiber) + std::abs(rep.B_direct - rep.B_fiber);
    fill_structural_verdicts(rep, U, ctx->G->weight());
    return rep;
}

GaborCheck gabor_frame_check(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family) {
    if (!ctx->fiber_side)
        throw ContractError(
            "gabor_frame_check: abelian ambient group with recorded structure required");
    check_family(ctx, family);
    GaborCheck out;
    const int m = ctx->dual_order();
    const int nc = ctx->cosets();
    if (family.empty() || all_zero(family)) {
        out.report.degenerate = true;
        out.support.ctx = ctx;
        out.support.mask.assign(static_cast<std::size_t>(m) * nc, 0);
        return out;
    }

    const int n = ctx->G->order();
    const int hs = ctx->H.order();
    const int ss = ctx->Hstar.order();
    const int T = static_cast<int>(family.size());
    Eigen::MatrixXcd U(n, static_cast<Eigen::Index>(T) * ss * hs);
    parallel_for(T * ss * hs, [&](int col) {
        const int t = col / (ss * hs);
        const int k = (col / hs) % ss;
        const int j = col % hs;
        const GroupFunction mf =
            modulate(ctx->Gd, family[static_cast<std::size_t>(t)], ctx->Hstar.members[static_cast<std::size_t>(k)]);
        U.col(col) = translate(mf, ctx->H.members[static_cast<std::size_t>(j)]).values;
    });
    const double scale = ctx->H.weight * ctx->Hstar.weight * ctx->G->weight();
    const DirectBounds d = dense_system_bounds(U, scale);

    const std::vector<ZakArray> zaks = zak_family(ctx, family);
    out.support = tmi_support(zaks);
    FrameReport& rep = out.report;
    rep.A_direct = d.A;
    rep.B_direct = d.B;
    rep.span_dim = d.span_dim;
    rep.degenerate = d.degenerate || out.support.count() == 0;
    if (!rep.degenerate) {
        bool first = true;
        for (int a = 0; a < m; ++a) {
            int dim = 0;
            double lo = 0.0, hi = 0.0;
            for (int c = 0; c < nc; ++c) {
                if (!out.support.at(a, c)) continue;
                double s = 0.0;
                for (const auto& z : zaks) s += std::norm(z.values(a, c));
                if (dim == 0 || s < lo) lo = s;
                if (dim == 0 || s > hi) hi = s;
                ++dim;
            }
            if (dim == 0) continue;
            rep.per_fiber.push_back(PerFiberBounds{a, dim, lo, hi});
            if (first || lo < rep.A_fiber) rep.A_fiber = lo;
            if (first || hi > rep.B_fiber) rep.B_fiber = hi;
            first = false;
        }
        rep.residual =
            std::abs(rep.A_direct - rep.A_fiber) + std::abs(rep.B_direct - rep.B_fiber);
        fill_structural_verdicts(rep, U, ctx->G->weight());
    }
    return out;
}

double mixed_riesz_property_check(const PairCtxPtr& ctx,
                                  const std::vector<GroupFunction>& family,
                                  const std::vector<Eigen::VectorXcd>& coeff_functions) {
    const FrameReport rep = riesz_check(ctx, family);
    if (coeff_functions.size() != family.size())
        throw SchemaError("mixed_riesz_property_check: one coefficient function per family member");
    const int m = ctx->dual_order();
    for (const auto& c : coeff_functions)
        if (c.size() != m)
            throw SchemaError("mixed_riesz_property_check: coefficient functions live on dual(H)");
    if (rep.degenerate) return 0.0;

    const std::vector<ZakArray> zaks = zak_family(ctx, family);
    const double w_dual = ctx->Hd.weight();
    const int T = static_cast<int>(family.size());
    double lhs = 0.0;
    for (const auto& c : coeff_functions) lhs += c.squaredNorm() * w_dual;
    double mid = 0.0;
    for (int a = 0; a < m; ++a) {
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(ctx->cosets());
        for (int t = 0; t < T; ++t)
            acc += coeff_functions[static_cast<std::size_t>(t)][a] *
                   zaks[static_cast<std::size_t>(t)].values.row(a).transpose();
        mid += acc.squaredNorm() * ctx->C.weight * w_dual;
    }
    return std::max(0.0, rep.A_fiber * lhs - mid) + std::max(0.0, mid - rep.B_fiber * lhs);
}

} // namespace zakfiber
