#include "zakfiber/invariant.hpp"

#include <Eigen/SVD>

#include "zakfiber/errors.hpp"
#include "zakfiber/parallel.hpp"

namespace zakfiber {
namespace {

constexpr double kSigmaFloor = 1e-14;

/// Orthonormal basis of the column span with the project-wide rank policy
/// and deterministic sign normalization.
Eigen::MatrixXcd span_basis(const Eigen::MatrixXcd& columns, double tol_rank) {
    if (columns.cols() == 0)
        return Eigen::MatrixXcd(columns.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double cut = std::max(tol_rank * (sigma.size() ? sigma[0] : 0.0), kSigmaFloor);
    int rank = 0;
    while (rank < sigma.size() && sigma[rank] > cut) ++rank;
    Eigen::MatrixXcd Q = svd.matrixU().leftCols(rank);
    for (int c = 0; c < Q.cols(); ++c) {
        for (int r = 0; r < Q.rows(); ++r) {
            const cxd v = Q(r, c);
            if (std::abs(v) > 1e-12) {
                Q.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return Q;
}

} // namespace

RangeFunction range_from_samples(const PairCtxPtr& ctx, int fiber_count, int ambient_dim,
                                 const std::function<Eigen::MatrixXcd(int)>& fiber_columns,
                                 double tol_rank) {
    RangeFunction J;
    J.ctx = ctx;
    J.fiber_count = fiber_count;
    J.ambient_dim = ambient_dim;
    J.tol_rank = tol_rank;
    J.basis.resize(static_cast<std::size_t>(fiber_count));
    J.dim.assign(static_cast<std::size_t>(fiber_count), 0);
    parallel_for(fiber_count, [&](int a) {
        J.basis[static_cast<std::size_t>(a)] = span_basis(fiber_columns(a), tol_rank);
        J.dim[static_cast<std::size_t>(a)] = static_cast<int>(J.basis[static_cast<std::size_t>(a)].cols());
    });
    return J;
}

RangeFunction range_function(const std::vector<ZakArray>& zaks, double tol_rank) {
    if (zaks.empty()) throw SchemaError("range_function: empty family");
    const PairCtxPtr ctx = zaks.front().ctx;
    for (const auto& z : zaks)
        if (z.ctx.get() != ctx.get())
            throw ContractError("range_function: mismatched contexts");
    const int m = ctx->dual_order();
    const int nc = ctx->cosets();
    const int T = static_cast<int>(zaks.size());
    return range_from_samples(ctx, m, nc,
                       [&](int a) {
                           Eigen::MatrixXcd V(nc, T);
                           for (int t = 0; t < T; ++t)
                               V.col(t) = zaks[static_cast<std::size_t>(t)].values.row(a).transpose();
                           return V;
                       },
                       tol_rank);
}

RangeFunction fiber_range_function(const std::vector<FiberArray>& fibers, double tol_rank) {
    if (fibers.empty()) throw SchemaError("fiber_range_function: empty family");
    const PairCtxPtr ctx = fibers.front().ctx;
    for (const auto& f : fibers)
        if (f.ctx.get() != ctx.get())
            throw ContractError("fiber_range_function: mismatched contexts");
    const int m = ctx->dual_order();
    const int s = ctx->Hstar.order();
    const int T = static_cast<int>(fibers.size());
    return range_from_samples(ctx, m, s,
                       [&](int a) {
                           Eigen::MatrixXcd V(s, T);
                           for (int t = 0; t < T; ++t)
                               V.col(t) = fibers[static_cast<std::size_t>(t)].values.row(a).transpose();
                           return V;
                       },
                       tol_rank);
}

GroupFunction ti_projection(const GroupFunction& g, const RangeFunction& J) {
    if (!J.ctx) throw ContractError("ti_projection: range function has no Zak context");
    const PairCtxPtr ctx = J.ctx;
    if (g.group.get() != ctx->G.get())
        throw ContractError("ti_projection: function lives on a different group");
    if (J.fiber_count != ctx->dual_order() || J.ambient_dim != ctx->cosets())
        throw ContractError("ti_projection: range function shape mismatch");
    ZakArray Z = zak(ctx, g);
    for (int a = 0; a < J.fiber_count; ++a) {
        const auto& Q = J.basis[static_cast<std::size_t>(a)];
        if (Q.cols() == 0) {
            Z.values.row(a).setZero();
        } else {
            const Eigen::VectorXcd fiber = Z.values.row(a).transpose();
            Z.values.row(a) = (Q * (Q.adjoint() * fiber)).transpose();
        }
    }
    return zak_inverse(Z);
}

bool ti_membership(const GroupFunction& g, const RangeFunction& J, double tol) {
    const double nrm = std::sqrt(g.norm_sq());
    if (nrm == 0.0) return true;
    GroupFunction p = ti_projection(g, J);
    const double err = std::sqrt((g.values - p.values).squaredNorm() * g.group->weight());
    return err <= tol * nrm;
}

int TMISupport::count() const {
    int c = 0;
    for (auto v : mask) c += v != 0;
    return c;
}

TMISupport tmi_support(const std::vector<ZakArray>& zaks, double rel_tol) {
    if (zaks.empty()) throw SchemaError("tmi_support: empty family");
    const PairCtxPtr ctx = zaks.front().ctx;
    for (const auto& z : zaks)
        if (z.ctx.get() != ctx.get())
            throw ContractError("tmi_support: mismatched contexts");
    double peak = 0.0;
    for (const auto& z : zaks) peak = std::max(peak, z.values.cwiseAbs().maxCoeff());
    TMISupport E;
    E.ctx = ctx;
    E.threshold = rel_tol * peak;
    const int m = ctx->dual_order();
    const int nc = ctx->cosets();
    E.mask.assign(static_cast<std::size_t>(m) * nc, 0);
    for (const auto& z : zaks)
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < nc; ++c)
                if (std::abs(z.values(a, c)) > E.threshold)
                    E.mask[static_cast<std::size_t>(a) * nc + c] = 1;
    return E;
}

bool tmi_membership(const GroupFunction& g, const TMISupport& E, double tol) {
    const PairCtxPtr ctx = E.ctx;
    if (g.group.get() != ctx->G.get())
        throw ContractError("tmi_membership: function lives on a different group");
    ZakArray Z = zak(ctx, g);
    const double peak = Z.values.cwiseAbs().maxCoeff();
    if (peak == 0.0) return true;
    double off = 0.0;
    for (int a = 0; a < ctx->dual_order(); ++a)
        for (int c = 0; c < ctx->cosets(); ++c)
            if (!E.at(a, c)) off = std::max(off, std::abs(Z.values(a, c)));
    return off <= tol * peak;
}

} // namespace zakfiber
