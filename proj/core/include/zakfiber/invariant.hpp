#pragma once

#include <functional>
#include <vector>

#include "zakfiber/zak.hpp"

namespace zakfiber {

/// Measurable range function at finite scale: one subspace per fiber,
/// held as an orthonormal basis matrix (ambient_dim x dim). Rank decisions
/// use sigma > max(tol_rank * sigma_max, 1e-14) on the singular values of
/// the fiber sample matrix, and every basis vector is sign-normalized
/// (first nonvanishing entry real positive) so bases are reproducible.
///
/// ctx is set for Zak-side range functions (fibers over dual(H), ambient
/// L^2(H\G)) and null for representation-side ones (fibers over the dual
/// of the acting group, ambient l^2 of the generator index set).
struct RangeFunction {
    PairCtxPtr ctx;
    int fiber_count = 0;
    int ambient_dim = 0;
    std::vector<Eigen::MatrixXcd> basis;
    std::vector<int> dim;
    double tol_rank = 1e-10;

    int total_dim() const {
        int t = 0;
        for (int d : dim) t += d;
        return t;
    }
};

/// Core constructor: per fiber, the orthonormalized span of the columns
/// returned by `fiber_columns`. ctx may be null (representation side).
RangeFunction range_from_samples(const PairCtxPtr& ctx, int fiber_count, int ambient_dim,
                                 const std::function<Eigen::MatrixXcd(int)>& fiber_columns,
                                 double tol_rank = 1e-10);

/// J(alpha) = span{ Zf(alpha) : f in family }.
RangeFunction range_function(const std::vector<ZakArray>& zaks, double tol_rank = 1e-10);

/// Same spaces computed on the fiberization side (abelian G); fiber
/// indices align with range_function through the quotient identification.
RangeFunction fiber_range_function(const std::vector<FiberArray>& fibers,
                                   double tol_rank = 1e-10);

/// Fiberwise orthogonal projection onto J: Zak transform, project each
/// fiber, transform back. This is the projector onto the smallest
/// H-translation-invariant space containing the family.
GroupFunction ti_projection(const GroupFunction& g, const RangeFunction& J);

/// ||g - ti_projection(g)|| <= tol * ||g|| (zero functions are members).
bool ti_membership(const GroupFunction& g, const RangeFunction& J, double tol = 1e-8);

/// Support set of a Gabor family in the (alpha, coset) plane:
/// E = { (alpha, c) : some |Zf_t(alpha, c)| exceeds the threshold },
/// threshold = rel_tol * max_t ||Zf_t||_inf.
struct TMISupport {
    PairCtxPtr ctx;
    std::vector<std::uint8_t> mask; // dual_order x cosets, row-major
    double threshold = 0.0;

    bool at(int alpha, int c) const {
        return mask[static_cast<std::size_t>(alpha) * ctx->cosets() + c] != 0;
    }
    int count() const;
};

TMISupport tmi_support(const std::vector<ZakArray>& zaks, double rel_tol = 1e-10);

/// Z g vanishes off E up to tol * ||Zg||_inf.
bool tmi_membership(const GroupFunction& g, const TMISupport& E, double tol = 1e-8);

} // namespace zakfiber
