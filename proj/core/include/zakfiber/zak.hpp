#pragma once

#include <memory>

#include "zakfiber/harmonic.hpp"

namespace zakfiber {

/// Everything the transforms need about one pair (G, H <= G abelian):
/// the coset section, the dual of the standalone subgroup copy, and, when
/// G itself is abelian, the dual of G with the annihilator of H and the
/// quotient identification dual(G)/H^* = dual(H).
///
/// Fiber rows of both transforms are indexed by characters of H; the
/// quotient identification is what lines the fiberization rows up with
/// the Zak rows, so theorem-level comparisons are index-exact.
struct PairContext {
    GroupPtr G;
    Subgroup H;
    CosetSpace C;
    DualGroup Hd;

    bool fiber_side = false; // true iff G is abelian with recorded structure
    DualGroup Gd;
    Annihilator Hstar;
    DualQuotientIso iso;

    int cosets() const { return C.count(); }
    int dual_order() const { return Hd.order(); }
};

using PairCtxPtr = std::shared_ptr<const PairContext>;

PairCtxPtr make_pair_context(const GroupPtr& G, const Subgroup& H,
                             TransversalPolicy policy = TransversalPolicy::minimal,
                             std::uint64_t seed = 0);

/// Zak transform values: rows are characters alpha of H, columns are
/// cosets c, entry = sum_{xi in H} f(xi gamma_c) conj(chi_alpha(xi)) w_H.
/// Row/column weights w_H^ and w_{H\G} make the transform unitary.
struct ZakArray {
    PairCtxPtr ctx;
    Eigen::MatrixXcd values;

    double norm_sq() const {
        return values.squaredNorm() * ctx->Hd.weight() * ctx->C.weight;
    }
};

/// Fiberization values for abelian G: row alpha holds the Fourier
/// transform of f sampled on the H^*-coset restricting to chi_alpha,
/// entry (alpha, k) = f_hat(beta_alpha kappa_k). Weights w_H^ (rows,
/// through the quotient identification) and w_{H^*} (columns).
struct FiberArray {
    PairCtxPtr ctx;
    Eigen::MatrixXcd values;

    double norm_sq() const {
        return values.squaredNorm() * ctx->Hd.weight() * ctx->Hstar.weight;
    }
};

ZakArray zak(const PairCtxPtr& ctx, const GroupFunction& f);
GroupFunction zak_inverse(const ZakArray& Z);

/// Direct fiberization through the Fourier transform on G (abelian only).
FiberArray fiberize(const PairCtxPtr& ctx, const GroupFunction& f);

/// The Zak-to-fiberization bridge: modulate each Zak fiber by
/// beta_alpha(gamma_c^{-1}) and Fourier-transform it over H\G (whose dual
/// is H^*). Equals fiberize(f) entry for entry; the acceptance suite holds
/// the two routes together at 1e-10.
FiberArray zak_to_fiber(const ZakArray& Z);

/// Bracket of two functions as a function on dual(H):
/// [f,g](alpha) = <Zf(alpha^{-1}), Zg(alpha^{-1})>_{w_{H\G}}, the density
/// whose inverse Fourier transform interpolates <f, L_xi g> over xi in H.
Eigen::VectorXcd translation_bracket(const ZakArray& Zf, const ZakArray& Zg);

} // namespace zakfiber
