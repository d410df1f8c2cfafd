#include "zakfiber/rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zakfiber/errors.hpp"
#include "zakfiber/parallel.hpp"
#include "zakfiber/rng.hpp"

namespace zakfiber {
namespace {

constexpr double kRelationTol = 1e-10; // unitarity / homomorphism / relation residuals
constexpr double kGenAccept = 1e-10;   // greedy generator acceptance
constexpr double kContainTol = 1e-9;   // fiber containment in the admissible support
constexpr int kRepOrderCap = 4096;     // one dense matrix per element beyond this is absurd

double max_abs(const Eigen::MatrixXcd& M) {
    return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

void require_rep_group(const GroupPtr& G, const char* who) {
    if (!G->abelian() || !G->has_invariants())
        throw ContractError(std::string(who) +
                            ": abelian group with recorded structure required");
    if (G->order() > kRepOrderCap)
        throw ContractError(std::string(who) + ": group too large for per-element matrices");
}

void check_unitary(const Eigen::MatrixXcd& U, const char* who) {
    if (U.cols() != U.rows())
        throw SchemaError(std::string(who) + ": matrices must be square");
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(U.rows(), U.cols());
    if (max_abs(U.adjoint() * U - I) > kRelationTol)
        throw ContractError(std::string(who) + ": matrix is not unitary within 1e-10");
}

void check_homomorphism(const GroupPtr& G, const std::vector<Eigen::MatrixXcd>& mats,
                        const char* who) {
    const int n = G->order();
    const int d = static_cast<int>(mats.front().rows());
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
    if (max_abs(mats[static_cast<std::size_t>(G->identity())] - I) > kRelationTol)
        throw ContractError(std::string(who) + ": identity element image is not the identity");
    double worst = 0.0;
    auto probe = [&](int x, int y) {
        worst = std::max(worst,
                         max_abs(mats[static_cast<std::size_t>(x)] * mats[static_cast<std::size_t>(y)] -
                                 mats[static_cast<std::size_t>(G->op(x, y))]));
    };
    if (n <= 64) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) probe(x, y);
    } else {
        SplitMix64 rng(0x5eed);
        for (int k = 0; k < 10000; ++k)
            probe(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                  static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    }
    if (worst > kRelationTol)
        throw ContractError(std::string(who) + ": homomorphism residual exceeds 1e-10");
}

void build_projections(UnitaryRep& rep) {
    rep.dual = characters(rep.group);
    const int n = rep.order();
    rep.projections.assign(static_cast<std::size_t>(n), Eigen::MatrixXcd());
    parallel_for(n, [&](int a) {
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
        for (int x = 0; x < n; ++x)
            P += std::conj(rep.dual.chi(a, x)) * rep.matrices[static_cast<std::size_t>(x)];
        rep.projections[static_cast<std::size_t>(a)] = P / static_cast<double>(n);
    });
}

void check_family_dim(const UnitaryRep& rep, const std::vector<Eigen::VectorXcd>& family,
                      const char* who) {
    for (const auto& v : family)
        if (v.size() != rep.dim)
            throw SchemaError(std::string(who) + ": vector dimension mismatch");
}

void check_gens_match(const UnitaryRep& rep, const GeneratorFamily& gens, const char* who) {
    if (gens.count() == 0 && rep.dim == 0) return;
    for (const auto& th : gens.theta)
        if (th.size() != rep.dim)
            throw ContractError(std::string(who) +
                                ": generator family does not match the representation");
    if (static_cast<int>(gens.eigenbasis.size()) != rep.order())
        throw ContractError(std::string(who) +
                            ": generator family does not match the representation");
}

bool all_zero_vectors(const std::vector<Eigen::VectorXcd>& family) {
    for (const auto& v : family)
        if (v.size() > 0 && v.cwiseAbs().maxCoeff() > 0.0) return false;
    return true;
}

/// Columns pi(x) phi_t, t outer, x inner.
Eigen::MatrixXcd orbit_matrix(const UnitaryRep& rep, const std::vector<Eigen::VectorXcd>& family) {
    const int n = rep.order();
    const int T = static_cast<int>(family.size());
    Eigen::MatrixXcd U(rep.dim, static_cast<Eigen::Index>(n) * T);
    parallel_for(n * T, [&](int col) {
        const int t = col / n;
        const int x = col % n;
        U.col(col) = rep.matrix(x) * family[static_cast<std::size_t>(t)];
    });
    return U;
}

/// Per-character Gram spectra of the T-images (plain inner product).
std::vector<Eigen::VectorXd> fiber_image_eigs(const UnitaryRep& rep,
                                              const GeneratorFamily& gens,
                                              const std::vector<Eigen::VectorXcd>& family) {
    const int n = rep.order();
    const int K = gens.count();
    const int T = static_cast<int>(family.size());
    std::vector<Eigen::MatrixXcd> images(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t)
        images[static_cast<std::size_t>(t)] = isometry_T(rep, gens, family[static_cast<std::size_t>(t)]);
    std::vector<Eigen::VectorXd> eigs(static_cast<std::size_t>(n));
    parallel_for(n, [&](int a) {
        Eigen::MatrixXcd V(K, T);
        for (int t = 0; t < T; ++t)
            V.col(t) = images[static_cast<std::size_t>(t)].row(a).transpose();
        eigs[static_cast<std::size_t>(a)] = hermitian_eigenvalues(V.adjoint() * V);
    });
    return eigs;
}

} // namespace

UnitaryRep make_rep_from_generators(const GroupPtr& G,
                                    const std::vector<Eigen::MatrixXcd>& images) {
    require_rep_group(G, "make_rep_from_generators");
    const int k = G->tuple_rank();
    if (k == 0)
        throw SchemaError(
            "make_rep_from_generators: the trivial group has no generators; "
            "use make_rep_from_elements");
    if (static_cast<int>(images.size()) != k)
        throw SchemaError("make_rep_from_generators: one image per recorded basis element");
    const Eigen::Index d = images.front().rows();
    for (const auto& U : images) {
        if (U.rows() != d)
            throw SchemaError("make_rep_from_generators: images of mixed dimension");
        check_unitary(U, "make_rep_from_generators");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (max_abs(images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)] -
                        images[static_cast<std::size_t>(j)] * images[static_cast<std::size_t>(i)]) >
                kRelationTol)
                throw ContractError(
                    "make_rep_from_generators: generator images do not commute within 1e-10");

    // powers[j][e] = U_j^e for 0 <= e < N_j, plus the order relation check
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
    std::vector<std::vector<Eigen::MatrixXcd>> powers(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const int Nj = G->invariants()[static_cast<std::size_t>(j)];
        auto& pw = powers[static_cast<std::size_t>(j)];
        pw.resize(static_cast<std::size_t>(Nj));
        pw[0] = I;
        for (int e = 1; e < Nj; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e - 1)] * images[static_cast<std::size_t>(j)];
        if (max_abs(pw[static_cast<std::size_t>(Nj - 1)] * images[static_cast<std::size_t>(j)] - I) > kRelationTol)
            throw ContractError(
                "make_rep_from_generators: generator image violates its order relation");
    }

    UnitaryRep rep;
    rep.group = G;
    rep.dim = static_cast<int>(d);
    const int n = G->order();
    rep.matrices.assign(static_cast<std::size_t>(n), Eigen::MatrixXcd());
    parallel_for(n, [&](int x) {
        Eigen::MatrixXcd M = powers[0][static_cast<std::size_t>(G->coord(x, 0))];
        for (int j = 1; j < k; ++j)
            M = M * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(G->coord(x, j))];
        rep.matrices[static_cast<std::size_t>(x)] = std::move(M);
    });
    check_homomorphism(G, rep.matrices, "make_rep_from_generators");
    build_projections(rep);
    return rep;
}

UnitaryRep make_rep_from_elements(const GroupPtr& G, std::vector<Eigen::MatrixXcd> matrices) {
    require_rep_group(G, "make_rep_from_elements");
    if (static_cast<int>(matrices.size()) != G->order())
        throw SchemaError("make_rep_from_elements: one matrix per group element");
    const Eigen::Index d = matrices.front().rows();
    for (const auto& U : matrices) {
        if (U.rows() != d)
            throw SchemaError("make_rep_from_elements: matrices of mixed dimension");
        check_unitary(U, "make_rep_from_elements");
    }
    check_homomorphism(G, matrices, "make_rep_from_elements");
    UnitaryRep rep;
    rep.group = G;
    rep.dim = static_cast<int>(d);
    rep.matrices = std::move(matrices);
    build_projections(rep);
    return rep;
}

Eigen::VectorXcd bracket(const UnitaryRep& rep, const Eigen::VectorXcd& phi,
                         const Eigen::VectorXcd& psi) {
    if (phi.size() != rep.dim || psi.size() != rep.dim)
        throw SchemaError("bracket: dimension mismatch");
    const int n = rep.order();
    Eigen::VectorXcd out(n);
    const double w_dual = rep.dual.weight();
    for (int a = 0; a < n; ++a)
        out[a] = psi.dot(rep.projection(a) * phi) / w_dual;
    return out;
}

GeneratorFamily orthogonal_generators(const UnitaryRep& rep) {
    const int d = rep.dim;
    const int n = rep.order();
    GeneratorFamily gens;
    std::vector<Eigen::VectorXcd> collected; // orthonormal cyclic-space basis so far
    for (int k = 0; k < d; ++k) {
        Eigen::VectorXcd r = Eigen::VectorXcd::Zero(d);
        r[k] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : collected) r -= b.dot(r) * b;
        if (r.norm() <= kGenAccept) continue;

        const Eigen::VectorXcd diag = bracket(rep, r, r);
        Eigen::VectorXd pw(n);
        for (int a = 0; a < n; ++a) pw[a] = diag[a].real();
        const double tol_pos = 1e-12 * pw.maxCoeff();
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) {
            if (pw[a] > tol_pos) {
                mask[static_cast<std::size_t>(a)] = 1;
                Eigen::VectorXcd u = rep.projection(a) * r;
                collected.push_back(u / u.norm());
            }
        }
        gens.theta.push_back(std::move(r));
        gens.power.push_back(std::move(pw));
        gens.omega.push_back(std::move(mask));
    }

    // Regroup the cyclic eigenvectors by character for fiber-side pullbacks.
    gens.eigenbasis.assign(static_cast<std::size_t>(n), Eigen::MatrixXcd());
    gens.eigenbasis_gen.assign(static_cast<std::size_t>(n), {});
    int total = 0;
    for (int a = 0; a < n; ++a) {
        std::vector<int> ids;
        for (int i = 0; i < gens.count(); ++i)
            if (gens.supported(i, a)) ids.push_back(i);
        Eigen::MatrixXcd B(d, static_cast<Eigen::Index>(ids.size()));
        for (std::size_t c = 0; c < ids.size(); ++c) {
            Eigen::VectorXcd u = rep.projection(a) * gens.theta[static_cast<std::size_t>(ids[c])];
            B.col(static_cast<Eigen::Index>(c)) = u / u.norm();
        }
        gens.eigenbasis[static_cast<std::size_t>(a)] = std::move(B);
        gens.eigenbasis_gen[static_cast<std::size_t>(a)] = std::move(ids);
        total += static_cast<int>(gens.eigenbasis_gen[static_cast<std::size_t>(a)].size());
    }
    if (total != d)
        throw ContractError("orthogonal_generators: cyclic spaces do not add up to the dimension");
    return gens;
}

Eigen::MatrixXcd isometry_T(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const Eigen::VectorXcd& phi) {
    check_gens_match(rep, gens, "isometry_T");
    if (phi.size() != rep.dim) throw SchemaError("isometry_T: vector dimension mismatch");
    const int n = rep.order();
    const int K = gens.count();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, K);
    for (int i = 0; i < K; ++i) {
        const Eigen::VectorXcd b = bracket(rep, phi, gens.theta[static_cast<std::size_t>(i)]);
        for (int a = 0; a < n; ++a)
            if (gens.supported(i, a))
                M(a, i) = b[a] / std::sqrt(gens.power[static_cast<std::size_t>(i)][a]);
    }
    return M;
}

RangeFunction rep_range_function(const UnitaryRep& rep, const GeneratorFamily& gens,
                                 const std::vector<Eigen::VectorXcd>& family) {
    check_gens_match(rep, gens, "rep_range_function");
    check_family_dim(rep, family, "rep_range_function");
    const int n = rep.order();
    const int K = gens.count();
    const int T = static_cast<int>(family.size());
    std::vector<Eigen::MatrixXcd> images(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t)
        images[static_cast<std::size_t>(t)] = isometry_T(rep, gens, family[static_cast<std::size_t>(t)]);
    RangeFunction J = range_from_samples(nullptr, n, K, [&](int a) {
        Eigen::MatrixXcd V(K, T);
        for (int t = 0; t < T; ++t)
            V.col(t) = images[static_cast<std::size_t>(t)].row(a).transpose();
        return V;
    });
    // J(alpha) must sit inside J0(alpha) = span{delta_i : alpha in Omega_i}.
    for (int a = 0; a < n; ++a) {
        const auto& B = J.basis[static_cast<std::size_t>(a)];
        for (Eigen::Index c = 0; c < B.cols(); ++c)
            for (int i = 0; i < K; ++i)
                if (!gens.supported(i, a) && std::abs(B(i, c)) > kContainTol)
                    throw ContractError(
                        "rep_range_function: fiber leaves its admissible coordinate support");
    }
    return J;
}

FrameReport rep_frame_check(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const std::vector<Eigen::VectorXcd>& family) {
    check_gens_match(rep, gens, "rep_frame_check");
    check_family_dim(rep, family, "rep_frame_check");
    FrameReport out;
    if (family.empty() || all_zero_vectors(family)) {
        out.degenerate = true;
        return out;
    }
    const Eigen::MatrixXcd U = orbit_matrix(rep, family);
    const DirectBounds d = dense_system_bounds(U, rep.group->weight());
    const FiberBoundsResult fb = fiber_bounds_from_eigs(fiber_image_eigs(rep, gens, family));
    out.A_direct = d.A;
    out.B_direct = d.B;
    out.span_dim = d.span_dim;
    out.A_fiber = fb.A;
    out.B_fiber = fb.B;
    out.per_fiber = fb.table;
    out.degenerate = d.degenerate || fb.degenerate;
    out.residual = std::abs(out.A_direct - out.A_fiber) + std::abs(out.B_direct - out.B_fiber);
    fill_structural_verdicts(out, U, 1.0);
    return out;
}

FrameReport rep_riesz_check(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const std::vector<Eigen::VectorXcd>& family) {
    if (rep.group->weight() != 1.0)
        throw ContractError("rep_riesz_check: requires the counting measure (group weight 1)");
    check_gens_match(rep, gens, "rep_riesz_check");
    check_family_dim(rep, family, "rep_riesz_check");
    FrameReport out;
    if (family.empty() || all_zero_vectors(family)) {
        out.degenerate = true;
        return out;
    }
    const Eigen::MatrixXcd U = orbit_matrix(rep, family);
    const Eigen::VectorXd ev = hermitian_eigenvalues(U.adjoint() * U);
    const double lmax = ev[ev.size() - 1];
    out.A_direct = ev[0];
    out.B_direct = lmax;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] > 1e-10 * lmax) ++out.span_dim;

    const std::vector<Eigen::VectorXd> eigs = fiber_image_eigs(rep, gens, family);
    double fmax = 0.0;
    for (const auto& fe : eigs) fmax = std::max(fmax, fe[fe.size() - 1]);
    out.A_fiber = eigs[0][0];
    out.B_fiber = fmax;
    for (int a = 0; a < static_cast<int>(eigs.size()); ++a) {
        const Eigen::VectorXd& fe = eigs[static_cast<std::size_t>(a)];
        int dim = 0;
        for (Eigen::Index i = 0; i < fe.size(); ++i)
            if (fe[i] > 1e-10 * fmax) ++dim;
        out.per_fiber.push_back(PerFiberBounds{a, dim, fe[0], fe[fe.size() - 1]});
        out.A_fiber = std::min(out.A_fiber, fe[0]);
    }
    out.residual = std::abs(out.A_direct - out.A_fiber) + std::abs(out.B_direct - out.B_fiber);
    fill_structural_verdicts(out, U, 1.0);
    return out;
}

Eigen::MatrixXcd pv_measure(const UnitaryRep& rep, const GeneratorFamily& gens,
                            const RangeFunction& J, const std::vector<int>& E) {
    check_gens_match(rep, gens, "pv_measure");
    if (J.fiber_count != rep.order() || J.ambient_dim != gens.count())
        throw ContractError("pv_measure: range function does not match the generator family");
    std::vector<int> chars = E;
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
    for (int a : chars) {
        if (a < 0 || a >= rep.order())
            throw SchemaError("pv_measure: character index out of range");
        const auto& B = J.basis[static_cast<std::size_t>(a)];       // K x r
        const auto& eb = gens.eigenbasis[static_cast<std::size_t>(a)]; // d x m
        const auto& ids = gens.eigenbasis_gen[static_cast<std::size_t>(a)];
        for (Eigen::Index c = 0; c < B.cols(); ++c) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rep.dim);
            for (std::size_t p = 0; p < ids.size(); ++p)
                v += B(ids[p], static_cast<Eigen::Index>(c)) * eb.col(static_cast<Eigen::Index>(p));
            P += v * v.adjoint();
        }
    }
    return P;
}

TranslationEmbedding embed_as_translation(const UnitaryRep& rep, const GeneratorFamily& gens) {
    check_gens_match(rep, gens, "embed_as_translation");
    const int K = gens.count();
    if (K == 0)
        throw ContractError("embed_as_translation: at least one generator required");
    const GroupPtr& S = rep.group;
    const int n = S->order();
    const int k = S->tuple_rank();
    const double w = S->weight();

    std::vector<int> inv = S->invariants();
    if (K >= 2) inv.push_back(K);
    const GroupPtr G = make_abelian(inv, w, "embedding");
    std::vector<int> hgens;
    for (int j = 0; j < k; ++j) {
        std::vector<int> t(inv.size(), 0);
        t[static_cast<std::size_t>(j)] = 1;
        hgens.push_back(G->element_from_coords(t));
    }
    const Subgroup H = subgroup_generate(G, hgens, w);
    if (H.order() != n)
        throw ContractError("embed_as_translation: acting-group copy has the wrong order");
    TranslationEmbedding out;
    out.ctx = make_pair_context(G, H);

    // Align dual(H) characters with the representation's character group by
    // matching exact phases on the recorded basis elements.
    out.char_map.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    const long long L = out.ctx->Hd.lcm();
    for (int a = 0; a < n; ++a) {
        std::vector<int> alpha_coords(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            const int pos = H.position(hgens[static_cast<std::size_t>(j)]);
            const long long q = out.ctx->Hd.phase(a, pos);
            const long long Nj = S->invariants()[static_cast<std::size_t>(j)];
            if ((q * Nj) % L != 0)
                throw ContractError("embed_as_translation: character alignment failed");
            alpha_coords[static_cast<std::size_t>(j)] = static_cast<int>((q * Nj / L) % Nj);
        }
        const int alpha = S->element_from_coords(alpha_coords);
        out.char_map[static_cast<std::size_t>(a)] = alpha;
        if (seen[static_cast<std::size_t>(alpha)]++)
            throw ContractError("embed_as_translation: character alignment is not a bijection");
    }

    // Coset c of H is the level set of the appended coordinate; pair it
    // with generator index i(c).
    const int nc = out.ctx->cosets();
    std::vector<int> gen_of_coset(static_cast<std::size_t>(nc), 0);
    if (K >= 2)
        for (int c = 0; c < nc; ++c)
            gen_of_coset[static_cast<std::size_t>(c)] = G->coord(out.ctx->C.transversal[static_cast<std::size_t>(c)], k);

    // Embed the standard basis: write T-images into Zak fibers and invert.
    // Row a of the Zak array holds T(phi) at the negated aligned character,
    // because translation twists fibers by conjugated characters while the
    // representation twists T-images by plain ones.
    out.isometry.resize(static_cast<Eigen::Index>(G->order()), rep.dim);
    std::vector<ZakArray> zaks;
    zaks.reserve(static_cast<std::size_t>(rep.dim));
    std::vector<GroupFunction> embedded(static_cast<std::size_t>(rep.dim));
    for (int j = 0; j < rep.dim; ++j) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(rep.dim);
        e[j] = 1.0;
        const Eigen::MatrixXcd M = isometry_T(rep, gens, e);
        ZakArray Z;
        Z.ctx = out.ctx;
        Z.values.resize(n, nc);
        for (int a = 0; a < n; ++a) {
            const int src = S->inverse(out.char_map[static_cast<std::size_t>(a)]);
            for (int c = 0; c < nc; ++c)
                Z.values(a, c) = M(src, gen_of_coset[static_cast<std::size_t>(c)]);
        }
        embedded[static_cast<std::size_t>(j)] = zak_inverse(Z);
        out.isometry.col(j) = embedded[static_cast<std::size_t>(j)].values;
        zaks.push_back(std::move(Z));
    }

    // Intertwining residual over every group element and basis vector.
    double worst = 0.0;
    for (int x = 0; x < n; ++x) {
        std::vector<int> t(inv.size(), 0);
        for (int j = 0; j < k; ++j) t[static_cast<std::size_t>(j)] = S->coord(x, j);
        const int xe = G->element_from_coords(t);
        for (int j = 0; j < rep.dim; ++j) {
            const Eigen::VectorXcd lhs = out.isometry * rep.matrix(x).col(j);
            const Eigen::VectorXcd rhs = translate(embedded[static_cast<std::size_t>(j)], xe).values;
            worst = std::max(worst, std::sqrt((lhs - rhs).squaredNorm() * G->weight()));
        }
    }
    out.intertwine_residual = worst;

    // The image must be invariant under every H-translation.
    const RangeFunction J = range_function(zaks);
    out.image_translation_invariant = true;
    for (int j = 0; j < rep.dim && out.image_translation_invariant; ++j)
        for (int g : hgens)
            if (!ti_membership(translate(embedded[static_cast<std::size_t>(j)], g), J)) {
                out.image_translation_invariant = false;
                break;
            }
    return out;
}

} // namespace zakfiber
