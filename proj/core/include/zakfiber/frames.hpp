#pragma once

#include <vector>

#include "zakfiber/invariant.hpp"

namespace zakfiber {

/// Extremal eigenvalues of one fiber Gram matrix.
struct PerFiberBounds {
    int fiber = 0;      // character index of dual(H) (row of the Zak domain)
    int dim = 0;        // eigenvalues above the global relative cutoff
    double lower = 0.0; // frame mode: smallest nonzero eigenvalue; Riesz mode: smallest eigenvalue
    double upper = 0.0; // largest eigenvalue
};

/// Optimal bounds of a translate / Riesz / Gabor system computed twice:
/// once from a dense eigensolve on the whole ambient space (the "direct"
/// oracle) and once fiberwise from the Zak picture. The theorem under test
/// says the two pairs coincide; `residual` is |A_direct - A_fiber| +
/// |B_direct - B_fiber|.
///
/// Bounds are taken on the span of the system, so "nonzero eigenvalue"
/// means lambda > 1e-10 * lambda_max with the cutoff relative to the
/// global largest eigenvalue on both routes (the same comparison the
/// direct oracle makes). Riesz bounds use the genuine smallest eigenvalue
/// instead - a singular Gram is exactly what disqualifies a Riesz system.
struct FrameReport {
    double A_direct = 0.0;
    double B_direct = 0.0;
    double A_fiber = 0.0;
    double B_fiber = 0.0;
    std::vector<PerFiberBounds> per_fiber;

    bool is_frame_for_span = false;
    bool is_riesz_sequence = false;
    bool is_parseval = false;
    bool is_orthonormal = false;

    bool degenerate = false; // empty or all-zero family: bounds undefined, left 0
    int span_dim = 0;
    double residual = 0.0;
};

/// Columns are the translates L_xi f_t (t outer, xi inner over H.members),
/// as value vectors on G.
Eigen::MatrixXcd translate_system_matrix(const PairCtxPtr& ctx,
                                         const std::vector<GroupFunction>& family);

struct DirectBounds {
    double A = 0.0;
    double B = 0.0;
    int span_dim = 0;
    bool degenerate = true;
};

/// Whole-space oracle: extremal nonzero eigenvalues of the frame operator
/// S = w_H w_G U U^H of the translate system (computed on whichever of the
/// ambient or coefficient side is smaller; the nonzero spectra agree).
DirectBounds direct_translate_bounds(const PairCtxPtr& ctx,
                                     const std::vector<GroupFunction>& family);

struct FiberBoundsResult {
    double A = 0.0;
    double B = 0.0;
    std::vector<PerFiberBounds> table; // fibers with dim > 0 only
    bool degenerate = true;
};

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& M);

/// Extremal nonzero eigenvalues of scale * U U^H where the columns of U
/// are the system vectors (computed on the smaller of the ambient and
/// coefficient sides; the nonzero spectra agree).
DirectBounds dense_system_bounds(const Eigen::MatrixXcd& U, double scale);

/// Min / max nonzero eigenvalue across fibers from precomputed per-fiber
/// Gram spectra (each ascending), using the cutoff relative to the global
/// largest eigenvalue - the same comparison the direct oracle makes.
FiberBoundsResult fiber_bounds_from_eigs(const std::vector<Eigen::VectorXd>& eigs);

/// Fills the verdict flags of `rep` from the system Gram in the ambient
/// inner product (columns of U, coordinate weight ambient_weight); the
/// Parseval flag reads the already-filled direct bounds.
void fill_structural_verdicts(FrameReport& rep, const Eigen::MatrixXcd& U,
                              double ambient_weight);

/// Fiberwise bounds: per character alpha the Gram matrix
/// G(alpha)_{st} = <Zf_t(alpha), Zf_s(alpha)>_{w_{H\G}}; A is the smallest
/// nonzero eigenvalue over all fibers, B the largest. J certifies that the
/// caller classified the same family (context and shape are checked).
FiberBoundsResult fiber_frame_bounds(const std::vector<ZakArray>& zaks,
                                     const RangeFunction& J);

/// Runs both routes on the translate system {L_xi f_t : xi in H, t} and
/// assembles the report, including the structural verdicts.
FrameReport translate_frame_report(const PairCtxPtr& ctx,
                                   const std::vector<GroupFunction>& family);

/// Riesz-sequence analysis of the translate system. Requires the counting
/// measure on H (w_H = 1); the coefficient space of a Riesz system has no
/// other normalization. Direct side: genuine extremal eigenvalues of the
/// full Gram; fiber side: extremal eigenvalues over all per-fiber Grams.
FrameReport riesz_check(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family);

struct GaborCheck {
    FrameReport report;
    TMISupport support;
};

/// Translation-modulation system {L_xi M_kappa f_t : xi in H, kappa in H^*}
/// on an abelian ambient group, with analysis weights w_H w_{H^*}. Fiber
/// side: the pointwise power S(alpha, c) = sum_t |Zf_t(alpha, c)|^2 over
/// the joint support E; A = min over E, B = max over E.
GaborCheck gabor_frame_check(const PairCtxPtr& ctx, const std::vector<GroupFunction>& family);

/// Evaluates the two-sided Riesz inequality with one coefficient function
/// on dual(H) per family member:
///   A * sum_t ||c_t||^2  <=  || sum_t c_t(.) Zf_t(.) ||^2  <=  B * sum_t ||c_t||^2
/// (all norms with the Zak-domain weights) and returns the violation
/// max(0, A*lhs - mid) + max(0, mid - B*lhs), which the bound theorem
/// forces to vanish up to roundoff. A and B are taken from riesz_check.
double mixed_riesz_property_check(const PairCtxPtr& ctx,
                                  const std::vector<GroupFunction>& family,
                                  const std::vector<Eigen::VectorXcd>& coeff_functions);

} // namespace zakfiber
