#pragma once

#include <vector>

#include "zakfiber/frames.hpp"

namespace zakfiber {

/// Unitary representation of a finite abelian group on C^d: one unitary
/// matrix per group element, together with the character group and the
/// spectral projectors
///     P_alpha = (1/|G|) sum_x conj(chi_alpha(x)) pi(x),
/// which resolve the identity (sum_alpha P_alpha = I, mutually orthogonal,
/// pi(x) = sum_alpha chi_alpha(x) P_alpha).
struct UnitaryRep {
    GroupPtr group; // abelian, with recorded invariants
    int dim = 0;
    std::vector<Eigen::MatrixXcd> matrices;    // per element index
    DualGroup dual;                            // characters of `group`
    std::vector<Eigen::MatrixXcd> projections; // per character index

    int order() const { return group->order(); }
    const Eigen::MatrixXcd& matrix(int x) const {
        return matrices[static_cast<std::size_t>(x)];
    }
    const Eigen::MatrixXcd& projection(int alpha) const {
        return projections[static_cast<std::size_t>(alpha)];
    }
};

/// Builds pi from one unitary image per recorded basis element of G:
/// pi(x) = prod_j U_j^{coord(x, j)}. Checks unitarity, pairwise
/// commutation, the order relations U_j^{N_j} = I, and the homomorphism
/// property, each within 1e-10.
UnitaryRep make_rep_from_generators(const GroupPtr& G,
                                    const std::vector<Eigen::MatrixXcd>& images);

/// Builds pi from one explicit matrix per element (same checks).
UnitaryRep make_rep_from_elements(const GroupPtr& G,
                                  std::vector<Eigen::MatrixXcd> matrices);

/// Bracket of two vectors as a function on the character group:
///     [phi, psi](alpha) = <P_alpha phi, psi> / w_dual,
/// the density interpolating the matrix coefficients:
///     <phi, pi(x) psi> = sum_alpha [phi,psi](alpha) conj(chi_alpha(x)) w_dual.
Eigen::VectorXcd bracket(const UnitaryRep& rep, const Eigen::VectorXcd& phi,
                         const Eigen::VectorXcd& psi);

/// Orthogonal generators: vectors theta_i whose cyclic spaces
/// span{P_alpha theta_i} decompose C^d orthogonally. Carries the diagonal
/// bracket values and the supports Omega_i = {alpha : [theta_i,theta_i](alpha)
/// above threshold}, plus the orthonormal vectors P_alpha theta_i (normalized)
/// that every fiber-side computation expands against.
struct GeneratorFamily {
    std::vector<Eigen::VectorXcd> theta;
    std::vector<Eigen::VectorXd> power;           // per i: [theta_i,theta_i] over the dual
    std::vector<std::vector<std::uint8_t>> omega; // per i: support mask over the dual
    std::vector<Eigen::MatrixXcd> eigenbasis;     // per alpha: columns P_alpha theta_i / norm,
                                                  // one per i with alpha in Omega_i
    std::vector<std::vector<int>> eigenbasis_gen; // generator index of each column

    int count() const { return static_cast<int>(theta.size()); }
    bool supported(int i, int alpha) const {
        return omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha)] != 0;
    }
};

/// Deterministic greedy construction: walk the standard basis, keep the
/// residual of e_k against the cyclic spaces collected so far whenever its
/// norm exceeds 1e-10. Support threshold: 1e-12 * max_alpha [theta,theta].
GeneratorFamily orthogonal_generators(const UnitaryRep& rep);

/// The bracket isometry into l^2(dual x generator index):
///     T(phi)(alpha)_i = 1_{Omega_i}(alpha) [phi,theta_i](alpha)
///                       / sqrt([theta_i,theta_i](alpha)).
/// Rows are characters alpha, columns generator indices i;
/// sum |T phi|^2 w_dual = |phi|^2 and T(pi(x)phi)(alpha) = chi_alpha(x) T(phi)(alpha).
Eigen::MatrixXcd isometry_T(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const Eigen::VectorXcd& phi);

/// J(alpha) = span{T(phi_t)(alpha)} with fibers inside
/// J0(alpha) = span{delta_i : alpha in Omega_i}; the containment is
/// asserted within 1e-9 (its failure would mean a broken isometry).
RangeFunction rep_range_function(const UnitaryRep& rep, const GeneratorFamily& gens,
                                 const std::vector<Eigen::VectorXcd>& family);

/// Frame bounds of the orbit {pi(x) phi_t : x in G, t} on its span, with
/// weight w_G per orbit point: direct dense eigensolve vs per-character
/// Gram matrices of the T-images (no extra weight on the fiber side; the
/// dual weight cancels between analysis sum and norm).
FrameReport rep_frame_check(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const std::vector<Eigen::VectorXcd>& family);

/// Riesz-sequence analysis of the orbit; requires the counting measure on
/// G (group weight 1). Genuine extremal eigenvalues on both routes.
FrameReport rep_riesz_check(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const std::vector<Eigen::VectorXcd>& family);

/// Projection-valued measure of the invariant space classified by J:
/// P(E) projects onto the span of the J(alpha)-slices over alpha in E,
/// pulled back through T. P is additive, P(dual) is the identity on V_J,
/// and pi(x)|_{V_J} = sum_alpha chi_alpha(x) P({alpha}).
Eigen::MatrixXcd pv_measure(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const RangeFunction& J, const std::vector<int>& E);

/// Concrete unitary equivalence with a translation action: the ambient
/// group G_emb = G x Z_K (K = generator count; plain G when K = 1), the
/// subgroup H = G x {0} with w_H = w_G_emb = w_G, and the isometry
/// C^d -> L^2(G_emb) obtained by writing T-images into Zak fibers and
/// inverting. Columns of `isometry` are the images of the standard basis.
struct TranslationEmbedding {
    PairCtxPtr ctx;            // the pair (G_emb, H)
    Eigen::MatrixXcd isometry; // |G_emb| x d
    std::vector<int> char_map; // dual(H) character index -> dual(G) index
    double intertwine_residual = 0.0; // max_x,j || embed(pi(x)e_j) - L_(x,0) embed(e_j) ||
    bool image_translation_invariant = false;
};

/// embed(pi(x) phi) = L_{(x,0)} embed(phi); the image is an H-translation-
/// invariant subspace of L^2(G_emb). Residuals are recomputed on every
/// call and reported in the result.
TranslationEmbedding embed_as_translation(const UnitaryRep& rep,
                                          const GeneratorFamily& gens);

} // namespace zakfiber
