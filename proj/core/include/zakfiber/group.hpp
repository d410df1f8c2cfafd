#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zakfiber/errors.hpp"

namespace zakfiber {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group on element indices 0..n-1 together with its Haar measure,
/// which at this scale is just a positive weight per element.
///
/// Multiplication comes from a dense table for small groups and from a
/// structural formula (mixed-radix digit arithmetic, dihedral or semidirect
/// word rules) otherwise, so groups up to the documented size cap never
/// materialize an n*n table.
///
/// For abelian groups the cyclic decomposition [N1..Nk] is recorded:
/// every element carries mixed-radix coordinates with respect to a fixed
/// basis, `basis[j]` being the element whose coordinate tuple is the j-th
/// unit vector. Groups built from an invariant list index elements by the
/// tuple itself (first coordinate most significant); groups whose abelian
/// structure is discovered after the fact (multiplication tables, subgroup
/// copies) keep their native indexing and only the coordinate map changes.
class FiniteGroup {
public:
    int order() const { return n_; }
    int identity() const { return id_; }
    double weight() const { return weight_; }
    bool abelian() const { return abelian_; }
    const std::string& label() const { return label_; }

    int op(int a, int b) const {
        return table_.empty() ? mul_(a, b) : table_[static_cast<std::size_t>(a) * n_ + b];
    }
    int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    /// g^e for any integer e (negative exponents via the inverse).
    int power(int g, long long e) const;
    int element_order(int g) const;

    /// True when the abelian invariants and coordinates are available.
    /// Nonabelian groups never have them; abelian groups above the dense
    /// cap skip the (quadratic) structure computation.
    bool has_invariants() const { return invariants_known_; }
    const std::vector<int>& invariants() const { return invariants_; }
    int tuple_rank() const { return static_cast<int>(invariants_.size()); }
    int coord(int elem, int j) const {
        if (!coords_.empty())
            return coords_[static_cast<std::size_t>(elem) * invariants_.size() + j];
        // tuple-indexed group above the coordinate-cache cap: decode digits
        return static_cast<int>((elem / radix_[static_cast<std::size_t>(j)]) % invariants_[static_cast<std::size_t>(j)]);
    }
    /// Element whose coordinate tuple is the j-th unit vector.
    int basis_element(int j) const { return basis_[static_cast<std::size_t>(j)]; }
    /// Element with the given coordinate tuple (values reduced mod N_j).
    int element_from_coords(const std::vector<int>& t) const;

private:
    friend class GroupBuilder;
    int n_ = 1;
    int id_ = 0;
    double weight_ = 1.0;
    bool abelian_ = true;
    bool invariants_known_ = true;
    std::string label_;
    std::vector<std::int32_t> table_; // n*n row-major; empty when mul_ is set
    std::function<int(int, int)> mul_;
    std::vector<std::int32_t> inv_;
    std::vector<int> invariants_;     // [N1..Nk], product n
    std::vector<std::int32_t> coords_; // n*k (may be empty for huge tuple-indexed groups)
    std::vector<long long> radix_;     // digit strides for tuple-indexed groups
    std::vector<std::int32_t> basis_;  // k basis elements
};

/// Direct product of cyclic groups Z_N1 x ... x Z_Nk, each invariant >= 2,
/// product capped at 10^6. Element index = mixed-radix encoding of the tuple.
/// An empty list yields the trivial group.
GroupPtr make_abelian(const std::vector<int>& invariants, double weight = 1.0,
                      std::string label = "");

/// Dihedral group of order 2n, 3 <= n <= 512. Element r^a s^e has index
/// a + n*e; relations r^n = s^2 = 1, s r s = r^{-1}.
GroupPtr make_dihedral(int n, double weight = 1.0);

/// Semidirect product Z_p x| Z_q for prime p <= 97 and q | p-1, q >= 2:
/// pairs (a, b) with a in the order-q subgroup of (Z_p)^x and product
/// (a,b)(c,d) = (ac, b + a d). The multiplier subgroup is enumerated as
/// powers of its smallest generator m, and (m^k, b) has index k*p + b.
GroupPtr make_semidirect_axb(int p, int q, double weight = 1.0);

/// Heisenberg group over Z_p, p prime <= 7: triples (x, y, z) with
/// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y') and index x p^2 + y p + z.
GroupPtr make_heisenberg(int p, double weight = 1.0);

/// Group from an explicit multiplication table. The table is validated
/// (identity, inverses, associativity - exhaustively for n <= 512, by
/// 10^4 sampled triples above) and the abelian structure is computed when
/// applicable and within the dense cap.
GroupPtr make_from_table(const std::vector<std::vector<int>>& table, double weight = 1.0,
                         std::string label = "table");

/// Subgroup as a sorted member list plus its own Haar weight, together
/// with a standalone copy (`group`) whose element i is members[i]; the
/// copy carries the abelian invariants whenever H is abelian and small
/// enough for dense harmonic work.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;       // ascending
    std::vector<std::int32_t> pos;  // parent-indexed; -1 for non-members
    double weight = 1.0;
    bool abelian = false;
    GroupPtr group;                 // standalone copy, null above the dense cap

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return pos[static_cast<std::size_t>(g)] >= 0; }
    int position(int g) const { return pos[static_cast<std::size_t>(g)]; }
};

/// Closure of the generator set (empty set gives the trivial subgroup).
Subgroup subgroup_generate(const GroupPtr& G, const std::vector<int>& generators,
                           double weight = 1.0);

enum class TransversalPolicy { minimal, random };

/// Right coset space H\G. Coset ids follow the order of first appearance
/// in an ascending scan, so with the minimal policy transversal[c] is the
/// smallest element index of coset c. Every element factors exactly as
/// g = h_part[g] * transversal[coset_of[g]].
/// The coset weight is forced to weight(G)/weight(H) so that the layered
/// sum over (H, H\G) reproduces the plain sum over G.
struct CosetSpace {
    GroupPtr parent;
    std::vector<int> transversal;
    std::vector<std::int32_t> coset_of;
    std::vector<std::int32_t> h_part;
    double weight = 1.0;
    TransversalPolicy policy = TransversalPolicy::minimal;

    int count() const { return static_cast<int>(transversal.size()); }
};

CosetSpace right_transversal(const GroupPtr& G, const Subgroup& H);

/// Same coset ids as the minimal transversal, but each representative is
/// drawn uniformly from its coset with the documented seeded generator.
/// Used to demonstrate that the analysis pipeline does not depend on the
/// section chosen.
CosetSpace right_transversal_random(const GroupPtr& G, const Subgroup& H,
                                    std::uint64_t seed);

/// | sum_G f(g) w_G  -  sum_c sum_{xi in H} f(xi gamma_c) w_H w_{H\G} |.
/// Exact up to roundoff for every f; the layered-integration identity.
double weil_check(const GroupPtr& G, const Subgroup& H, const CosetSpace& C,
                  const std::vector<std::complex<double>>& f);

} // namespace zakfiber
