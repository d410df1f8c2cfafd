#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "zakfiber/group.hpp"

namespace zakfiber {

using cxd = std::complex<double>;

/// Square-summable function on a group, weighted by the group's Haar weight:
/// ||f||^2 = sum_x |f(x)|^2 w. Values are indexed by element index.
struct GroupFunction {
    GroupPtr group;
    Eigen::VectorXcd values;

    double norm_sq() const { return values.squaredNorm() * group->weight(); }
    /// <f, g> = sum_x f(x) conj(g(x)) w
    cxd inner(const GroupFunction& g) const { return g.values.dot(values) * group->weight(); }
};

/// (L_y f)(x) = f(y^{-1} x).
GroupFunction translate(const GroupFunction& f, int y);

/// Character group of a finite abelian group H with recorded invariants
/// [N1..Nk]: characters are indexed by the same tuples as the elements,
///     chi_a(x) = exp(2 pi i sum_j a_j x_j / N_j),
/// so the dual is a copy of H itself with the dual weight 1/(|H| w_H),
/// the unique normalization that makes the Fourier transform below a
/// bijective isometry.
///
/// Character values are evaluated through an exact integer phase
/// 0 <= q < L = lcm(N_j) and one table of L precomputed roots of unity,
/// so no rounding accumulates across digits.
class DualGroup {
public:
    DualGroup() = default;

    const GroupPtr& base() const { return base_; }
    int order() const { return base_->order(); }
    double weight() const { return weight_; }

    /// Integer phase numerator of chi_a(x) over the common denominator L.
    long long phase(int a, int x) const {
        long long q = 0;
        const auto& inv = base_->invariants();
        for (std::size_t j = 0; j < inv.size(); ++j) {
            const long long nj = inv[j];
            q += (static_cast<long long>(base_->coord(a, static_cast<int>(j))) *
                  base_->coord(x, static_cast<int>(j)) % nj) * (lcm_ / nj);
        }
        return q % lcm_;
    }
    cxd chi(int a, int x) const { return root_[static_cast<std::size_t>(phase(a, x))]; }

    /// Character product / inverse reuse the base group's digit arithmetic:
    /// chi_a chi_b = chi_{a+b}, chi_a^{-1} = chi_{-a}.
    int add(int a, int b) const { return base_->op(a, b); }
    int negate(int a) const { return base_->inverse(a); }

    long long lcm() const { return lcm_; }

private:
    friend DualGroup characters(const GroupPtr&);
    GroupPtr base_;
    double weight_ = 0.0;
    long long lcm_ = 1;
    std::vector<cxd> root_;
};

/// Builds the dual of an abelian group. Requires recorded invariants
/// (nonabelian groups and abelian groups above the dense cap are refused).
DualGroup characters(const GroupPtr& H);

/// f_hat(a) = sum_x f(x) conj(chi_a(x)) w_H for f on the base group.
Eigen::VectorXcd fourier(const DualGroup& D, const Eigen::VectorXcd& f);

/// g_check(x) = sum_a g(a) chi_a(x) w_dual for g on the dual.
Eigen::VectorXcd fourier_inverse(const DualGroup& D, const Eigen::VectorXcd& g);

/// (M_kappa f)(x) = chi_kappa(x) f(x) for f on the (abelian) base group.
GroupFunction modulate(const DualGroup& D, const GroupFunction& f, int kappa);

/// Parseval determining-set residual for f on the dual: the elements of H,
/// viewed as characters of the dual, already resolve norms:
/// | sum_x |sum_a f(a) conj(chi_a(x)) w_dual|^2 w_H  -  sum_a |f(a)|^2 w_dual |.
double parseval_check(const DualGroup& D, const Eigen::VectorXcd& f_on_dual);

/// Annihilator H^* = { kappa in dual(G) : kappa == 1 on H } for a subgroup
/// H of the abelian group G. Carries the weight w_G^ / w_H^ =
/// (|H| w_H)/(|G| w_G), the unique choice under which (a) restriction
/// identifies dual(G)/H^* with dual(H) measure-preservingly and (b) the
/// fiberization transform is unitary.
struct Annihilator {
    std::vector<int> members; // ascending character indices in dual(G)
    std::vector<std::int32_t> pos;
    double weight = 0.0;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int kappa) const { return pos[static_cast<std::size_t>(kappa)] >= 0; }
};

Annihilator annihilator(const DualGroup& Gd, const Subgroup& H);

/// The isomorphism dual(G)/H^* -> dual(H), computed in exact integer
/// arithmetic. beta[c] is the minimal character index representing coset c;
/// hchar_of_coset is the restriction map (a bijection, certified during
/// construction).
struct DualQuotientIso {
    std::vector<int> beta;
    std::vector<std::int32_t> coset_of_char;
    std::vector<int> hchar_of_coset;
    std::vector<int> coset_of_hchar;

    int count() const { return static_cast<int>(beta.size()); }
};

DualQuotientIso dual_quotient_iso(const DualGroup& Gd, const Subgroup& H,
                                  const Annihilator& Hstar, const DualGroup& Hd);

} // namespace zakfiber
