#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zakfiber/io.hpp"
#include "zakfiber/rng.hpp"

/// Deterministic instance catalogs used by the acceptance suite, the unit
/// tests, and the benchmarks. Everything here is seeded: the same seed
/// always produces the same groups, families, and representations.
namespace zakfiber::instances {

/// One (group, subgroup) pair by name; the context is built on demand so
/// callers can choose the transversal policy.
struct PairSpec {
    std::string name;
    GroupPtr G;
    std::vector<int> h_gens;
    double h_weight = 1.0;
};

/// The transform test matrix: >= 40 pairs covering cyclic groups with
/// divisor subgroups, products with diagonal subgroups, dihedral groups
/// D3..D6 (rotations, <r^2>, a reflection, the center), Heisenberg groups
/// for p = 2, 3 (center and a maximal abelian subgroup), the nonabelian
/// group of order 21 (both factors), and weight-varied copies.
std::vector<PairSpec> zak_pairs();

PairCtxPtr context_of(const PairSpec& spec,
                      TransversalPolicy policy = TransversalPolicy::minimal,
                      std::uint64_t seed = 0);

/// Independent complex values, each coordinate uniform on [-1,1)^2.
GroupFunction random_function(const GroupPtr& G, SplitMix64& rng);
std::vector<GroupFunction> random_family(const GroupPtr& G, int count, SplitMix64& rng);

struct FamilyInstance {
    std::string name;
    PairCtxPtr ctx;
    std::vector<GroupFunction> family;
};

/// >= 200 seeded translate families, |G| <= 96, at most 4 generators,
/// abelian and nonabelian groups, minimal and randomized transversals.
std::vector<FamilyInstance> frame_matrix(std::uint64_t seed);

struct RieszInstance {
    FamilyInstance fam;
    bool expect_dependent = false;
};

/// Unit-weight-subgroup instances for the Riesz-sequence check; at least
/// 20 entries are deliberately linearly dependent (duplicates, translates,
/// combinations of translates, zero members, and pigeonhole overloads).
std::vector<RieszInstance> riesz_matrix(std::uint64_t seed);

/// >= 50 instances on abelian groups (fiber side available) for the
/// translation-modulation system check.
std::vector<FamilyInstance> gabor_matrix(std::uint64_t seed);

/// Standard normal via Box-Muller on the shared generator.
double gaussian(SplitMix64& rng);

/// Haar-ish unitary: QR of a complex Gaussian matrix (exactly unitary up
/// to machine precision, which is all the tests need).
Eigen::MatrixXcd random_unitary(int d, SplitMix64& rng);

/// Random unitary representation of an abelian group: conjugate a random
/// diagonal character tuple by a random unitary.
UnitaryRep random_rep(const GroupPtr& G, int d, SplitMix64& rng);

struct RepInstance {
    std::string name;
    UnitaryRep rep;
    std::vector<Eigen::VectorXcd> vectors;
};

/// >= 100 representations with dim <= 16 on abelian groups of order <= 24,
/// each with a small random vector family.
std::vector<RepInstance> rep_matrix(std::uint64_t seed);

} // namespace zakfiber::instances
