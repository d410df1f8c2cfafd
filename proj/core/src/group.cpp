#include "zakfiber/group.hpp"

#include <algorithm>
#include <numeric>

#include "zakfiber/errors.hpp"
#include "zakfiber/rng.hpp"

namespace zakfiber {
namespace {

constexpr long long kMaxOrder = 1000000;   // hard cap for any constructed group
constexpr int kTableCap = 1024;            // dense n*n tables only below this
constexpr int kDenseCap = 10000;           // dense harmonic / structure work cap
constexpr int kExhaustiveAxiomCap = 512;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

/// Assembles FiniteGroup instances; friend of the class so the factory
/// functions stay free of half-initialized public state.
class GroupBuilder {
public:
    int n = 1;
    int id = 0;
    double weight = 1.0;
    std::string label;
    std::vector<std::int32_t> table;
    std::function<int(int, int)> mul;
    std::vector<std::int32_t> inv;
    int abelian_hint = -1; // -1 detect, 0 known nonabelian, 1 known abelian

    GroupPtr finish(bool skip_axiom_check = false) {
        auto g = std::make_shared<FiniteGroup>();
        g->n_ = n;
        g->id_ = id;
        g->weight_ = weight;
        g->label_ = std::move(label);
        g->table_ = std::move(table);
        g->mul_ = std::move(mul);
        g->inv_ = std::move(inv);
        if (g->table_.empty() && n <= kTableCap) materialize_table(*g);
        if (!skip_axiom_check) check_axioms(*g);
        if (abelian_hint >= 0) g->abelian_ = abelian_hint == 1;
        else detect_abelian(*g);
        if (g->abelian_ && n <= kDenseCap) compute_structure(*g);
        else g->invariants_known_ = false;
        return g;
    }

    /// Variant for make_abelian: indexing is the coordinate encoding itself,
    /// so the structure fields are filled directly instead of rediscovered.
    GroupPtr finish_abelian(const std::vector<int>& invariants) {
        auto g = std::make_shared<FiniteGroup>();
        g->n_ = n;
        g->id_ = 0;
        g->weight_ = weight;
        g->label_ = std::move(label);
        g->mul_ = std::move(mul);
        g->inv_ = std::move(inv);
        g->abelian_ = true;
        g->invariants_known_ = true;
        g->invariants_ = invariants;
        const int k = static_cast<int>(invariants.size());
        if (static_cast<long long>(n) * k <= 8 * kMaxOrder) {
            g->coords_.resize(static_cast<std::size_t>(n) * k);
            for (int e = 0; e < n; ++e) {
                int rest = e;
                for (int j = k - 1; j >= 0; --j) {
                    g->coords_[static_cast<std::size_t>(e) * k + j] = rest % invariants[j];
                    rest /= invariants[j];
                }
            }
        }
        g->basis_.resize(static_cast<std::size_t>(k));
        g->radix_.resize(static_cast<std::size_t>(k));
        long long stride = 1;
        for (int j = k - 1; j >= 0; --j) {
            g->basis_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(stride);
            g->radix_[static_cast<std::size_t>(j)] = stride;
            stride *= invariants[j];
        }
        if (n <= kTableCap) materialize_table(*g);
        check_axioms(*g);
        return g;
    }

    static void materialize_table(FiniteGroup& g) {
        g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
        for (int a = 0; a < g.n_; ++a)
            for (int b = 0; b < g.n_; ++b)
                g.table_[static_cast<std::size_t>(a) * g.n_ + b] =
                    static_cast<std::int32_t>(g.mul_(a, b));
    }

    /// Identity, inverse and associativity invariants. Exhaustive up to
    /// kExhaustiveAxiomCap elements, 10^4 seeded random triples above.
    static void check_axioms(const FiniteGroup& g) {
        const int n = g.order();
        for (int a = 0; a < n; ++a) {
            if (g.op(g.identity(), a) != a || g.op(a, g.identity()) != a)
                throw ContractError("group axiom violated: identity");
            if (g.op(a, g.inverse(a)) != g.identity() ||
                g.op(g.inverse(a), a) != g.identity())
                throw ContractError("group axiom violated: inverse");
        }
        if (n <= kExhaustiveAxiomCap) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                            throw ContractError("group axiom violated: associativity");
        } else {
            SplitMix64 rng(0x5eedULL);
            for (int t = 0; t < 10000; ++t) {
                int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw ContractError("group axiom violated: associativity (sampled)");
            }
        }
    }

    static void detect_abelian(FiniteGroup& g) {
        const int n = g.order();
        if (n <= kExhaustiveAxiomCap) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (g.op(a, b) != g.op(b, a)) { g.abelian_ = false; return; }
            g.abelian_ = true;
            return;
        }
        // above the exhaustive cap a negative answer is still certain,
        // a positive one is sampled; structured factories override anyway
        SplitMix64 rng(0xabe1ULL);
        for (int t = 0; t < 20000; ++t) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (g.op(a, b) != g.op(b, a)) { g.abelian_ = false; return; }
        }
        g.abelian_ = true;
    }

    static void compute_structure(FiniteGroup& g);
    static void set_abelian_known(FiniteGroup& g, bool abelian) {
        g.abelian_ = abelian;
        if (!abelian) g.invariants_known_ = false;
    }
};

namespace {

/// Cyclic decomposition of an abelian group given by an opaque op.
/// Recursive: split off a maximal-order cyclic factor, decompose the
/// quotient, and lift quotient basis elements without changing their
/// order (always possible in a finite abelian group). Returns basis
/// elements with their orders, largest first, each order dividing the
/// previous one.
struct DecompResult {
    std::vector<int> invariants;
    std::vector<int> basis; // element per invariant
};

DecompResult decompose_abelian(int m, const std::function<int(int, int)>& op, int id) {
    DecompResult out;
    if (m <= 1) return out;

    std::vector<int> order(static_cast<std::size_t>(m), 0);
    auto elem_order = [&](int e) {
        int acc = e, k = 1;
        while (acc != id) { acc = op(acc, e); ++k; }
        return k;
    };
    int g1 = id, n1 = 1;
    for (int e = 0; e < m; ++e) {
        order[static_cast<std::size_t>(e)] = elem_order(e);
        if (order[static_cast<std::size_t>(e)] > n1) { n1 = order[static_cast<std::size_t>(e)]; g1 = e; }
    }
    out.invariants.push_back(n1);
    out.basis.push_back(g1);
    if (n1 == m) return out;

    // powers of g1 and cosets of <g1>, coset ids by first appearance
    std::vector<int> pow_g1(static_cast<std::size_t>(n1));
    std::vector<int> in_cyclic(static_cast<std::size_t>(m), -1);
    int acc = id;
    for (int e = 0; e < n1; ++e) {
        pow_g1[static_cast<std::size_t>(e)] = acc;
        in_cyclic[static_cast<std::size_t>(acc)] = e;
        acc = op(acc, g1);
    }
    const int q = m / n1;
    std::vector<int> coset_of(static_cast<std::size_t>(m), -1);
    std::vector<int> rep;
    rep.reserve(static_cast<std::size_t>(q));
    for (int e = 0; e < m; ++e) {
        if (coset_of[static_cast<std::size_t>(e)] >= 0) continue;
        int c = static_cast<int>(rep.size());
        rep.push_back(e);
        for (int t = 0; t < n1; ++t)
            coset_of[static_cast<std::size_t>(op(pow_g1[static_cast<std::size_t>(t)], e))] = c;
    }

    auto qop = [&](int a, int b) {
        return coset_of[static_cast<std::size_t>(
            op(rep[static_cast<std::size_t>(a)], rep[static_cast<std::size_t>(b)]))];
    };
    DecompResult sub = decompose_abelian(q, qop, coset_of[static_cast<std::size_t>(id)]);

    for (std::size_t t = 0; t < sub.invariants.size(); ++t) {
        const int mt = sub.invariants[t];
        int e = rep[static_cast<std::size_t>(sub.basis[t])];
        // e^mt lies in <g1>; divide out g1^{s} with s = dlog / mt to make
        // the lift's order equal mt exactly
        int p = id;
        for (int i = 0; i < mt; ++i) p = op(p, e);
        const int dlog = in_cyclic[static_cast<std::size_t>(p)];
        if (dlog < 0 || dlog % mt != 0)
            throw ContractError("abelian decomposition: lift failed");
        const int s = dlog / mt;
        int adj = id; // g1^{-s}
        for (int i = 0; i < s; ++i) adj = op(adj, g1);
        // invert adj inside <g1>
        adj = pow_g1[static_cast<std::size_t>((n1 - in_cyclic[static_cast<std::size_t>(adj)]) % n1)];
        out.invariants.push_back(mt);
        out.basis.push_back(op(e, adj));
    }
    return out;
}

} // namespace

void GroupBuilder::compute_structure(FiniteGroup& g) {
    const int n = g.order();
    auto op = [&g](int a, int b) { return g.op(a, b); };
    DecompResult d = decompose_abelian(n, op, g.identity());
    const int k = static_cast<int>(d.invariants.size());
    g.invariants_ = d.invariants;
    g.basis_.assign(d.basis.begin(), d.basis.end());
    g.coords_.assign(static_cast<std::size_t>(n) * k, 0);
    g.invariants_known_ = true;
    if (n == 1) return;

    // walk the full tuple box to assign coordinates; also certifies that
    // the basis really is a direct-sum basis (bijection onto the group)
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int elem = g.identity();
    long long total = 1;
    for (int j = 0; j < k; ++j) total *= d.invariants[static_cast<std::size_t>(j)];
    if (total != n) throw ContractError("abelian decomposition: size mismatch");
    for (long long it = 0;; ++it) {
        if (seen[static_cast<std::size_t>(elem)])
            throw ContractError("abelian decomposition: not a bijection");
        seen[static_cast<std::size_t>(elem)] = 1;
        for (int j = 0; j < k; ++j)
            g.coords_[static_cast<std::size_t>(elem) * k + j] =
                static_cast<std::int32_t>(tuple[static_cast<std::size_t>(j)]);
        if (it + 1 == total) break;
        // odometer increment, least-significant coordinate last
        int j = k - 1;
        while (true) {
            ++tuple[static_cast<std::size_t>(j)];
            elem = g.op(elem, d.basis[static_cast<std::size_t>(j)]);
            if (tuple[static_cast<std::size_t>(j)] < d.invariants[static_cast<std::size_t>(j)]) break;
            // coordinate wrapped: elem accumulated basis^N = id in that slot
            tuple[static_cast<std::size_t>(j)] = 0;
            --j;
        }
    }
}

int FiniteGroup::power(int g, long long e) const {
    int base = g;
    if (e < 0) { base = inverse(g); e = -e; }
    int acc = identity();
    while (e > 0) {
        if (e & 1) acc = op(acc, base);
        base = op(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int acc = g, k = 1;
    while (acc != identity()) { acc = op(acc, g); ++k; }
    return k;
}

int FiniteGroup::element_from_coords(const std::vector<int>& t) const {
    if (!invariants_known_ || t.size() != invariants_.size())
        throw SchemaError("element_from_coords: bad tuple");
    int acc = identity();
    for (std::size_t j = 0; j < t.size(); ++j) {
        int v = t[j] % invariants_[j];
        if (v < 0) v += invariants_[j];
        acc = op(acc, power(basis_[j], v));
    }
    return acc;
}

GroupPtr make_abelian(const std::vector<int>& invariants, double weight, std::string label) {
    long long n = 1;
    for (int inv : invariants) {
        if (inv < 2) throw SchemaError("make_abelian: every invariant must be >= 2");
        n *= inv;
        if (n > kMaxOrder) throw SchemaError("make_abelian: order exceeds the 10^6 cap");
    }
    if (weight <= 0) throw SchemaError("group weight must be positive");
    const int k = static_cast<int>(invariants.size());
    std::vector<long long> radix(static_cast<std::size_t>(k), 1);
    for (int j = k - 2; j >= 0; --j) radix[static_cast<std::size_t>(j)] = radix[static_cast<std::size_t>(j) + 1] * invariants[static_cast<std::size_t>(j) + 1];

    GroupBuilder b;
    b.n = static_cast<int>(n);
    b.weight = weight;
    if (label.empty()) {
        label = "Z";
        for (std::size_t j = 0; j < invariants.size(); ++j)
            label += (j ? "xZ" : "") + std::to_string(invariants[j]);
        if (invariants.empty()) label = "Z1";
    }
    b.label = std::move(label);
    auto inv_list = invariants; // captured by value in the lambdas
    b.mul = [inv_list, radix](int a, int e) {
        int out = 0;
        for (std::size_t j = 0; j < inv_list.size(); ++j) {
            const int nj = inv_list[j];
            const int aj = static_cast<int>((a / radix[j]) % nj);
            const int ej = static_cast<int>((e / radix[j]) % nj);
            out += static_cast<int>(((aj + ej) % nj) * radix[j]);
        }
        return out;
    };
    b.inv.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < b.n; ++e) {
        int out = 0;
        for (std::size_t j = 0; j < inv_list.size(); ++j) {
            const int nj = inv_list[j];
            const int ej = static_cast<int>((e / radix[j]) % nj);
            out += static_cast<int>(((nj - ej) % nj) * radix[j]);
        }
        b.inv[static_cast<std::size_t>(e)] = out;
    }
    return b.finish_abelian(invariants);
}

GroupPtr make_dihedral(int n, double weight) {
    if (n < 3 || n > 512) throw SchemaError("make_dihedral: need 3 <= n <= 512");
    if (weight <= 0) throw SchemaError("group weight must be positive");
    GroupBuilder b;
    b.n = 2 * n;
    b.weight = weight;
    b.label = "D" + std::to_string(n);
    b.abelian_hint = 0;
    b.mul = [n](int x, int y) {
        const int a = x % n, e = x / n;
        const int bb = y % n, f = y / n;
        if (e == 0) return (a + bb) % n + n * f;
        return ((a - bb) % n + n) % n + n * ((1 + f) % 2);
    };
    b.inv.resize(static_cast<std::size_t>(2 * n));
    for (int a = 0; a < n; ++a) {
        b.inv[static_cast<std::size_t>(a)] = (n - a) % n;
        b.inv[static_cast<std::size_t>(n + a)] = n + a; // reflections are involutions
    }
    auto g = b.finish();
    return g;
}

GroupPtr make_semidirect_axb(int p, int q, double weight) {
    if (!is_prime(p) || p > 97) throw SchemaError("make_semidirect_axb: p must be prime <= 97");
    if (q < 2 || (p - 1) % q != 0) throw SchemaError("make_semidirect_axb: q must divide p-1, q >= 2");
    if (weight <= 0) throw SchemaError("group weight must be positive");
    // smallest generator of the unique order-q subgroup of (Z_p)^x
    int m = 0;
    for (int a = 2; a < p && m == 0; ++a) {
        long long acc = a % p;
        int ord = 1;
        while (acc != 1) { acc = acc * a % p; ++ord; }
        if (ord == q) m = a;
    }
    if (m == 0) throw SchemaError("make_semidirect_axb: no order-q multiplier found");
    std::vector<int> mpow(static_cast<std::size_t>(q), 1);
    for (int k = 1; k < q; ++k) mpow[static_cast<std::size_t>(k)] = static_cast<int>(
        static_cast<long long>(mpow[static_cast<std::size_t>(k) - 1]) * m % p);

    GroupBuilder b;
    b.n = p * q;
    b.weight = weight;
    b.label = "Z" + std::to_string(p) + "xZ" + std::to_string(q) + "semidirect";
    b.abelian_hint = 0;
    b.mul = [p, q, mpow](int x, int y) {
        const int k1 = x / p, b1 = x % p;
        const int k2 = y / p, b2 = y % p;
        const int k = (k1 + k2) % q;
        const int bb = static_cast<int>((b1 + static_cast<long long>(mpow[static_cast<std::size_t>(k1)]) * b2) % p);
        return k * p + bb;
    };
    b.inv.resize(static_cast<std::size_t>(p * q));
    for (int k = 0; k < q; ++k)
        for (int bb = 0; bb < p; ++bb) {
            const int ki = (q - k) % q;
            const int mi = mpow[static_cast<std::size_t>(ki)];
            const int bi = static_cast<int>((p - static_cast<long long>(mi) * bb % p) % p);
            b.inv[static_cast<std::size_t>(k * p + bb)] = ki * p + bi;
        }
    return b.finish();
}

GroupPtr make_heisenberg(int p, double weight) {
    if (!is_prime(p) || p > 7) throw SchemaError("make_heisenberg: p must be prime <= 7");
    if (weight <= 0) throw SchemaError("group weight must be positive");
    GroupBuilder b;
    b.n = p * p * p;
    b.weight = weight;
    b.label = "Heis" + std::to_string(p);
    b.abelian_hint = 0;
    b.mul = [p](int u, int v) {
        const int x = u / (p * p), y = (u / p) % p, z = u % p;
        const int a = v / (p * p), bb = (v / p) % p, c = v % p;
        return ((x + a) % p) * p * p + ((y + bb) % p) * p + (z + c + x * bb) % p;
    };
    b.inv.resize(static_cast<std::size_t>(p * p * p));
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int z = 0; z < p; ++z)
                b.inv[static_cast<std::size_t>(x * p * p + y * p + z)] =
                    ((p - x) % p) * p * p + ((p - y) % p) * p + ((2 * p - z + x * y) % p) % p;
    return b.finish();
}

GroupPtr make_from_table(const std::vector<std::vector<int>>& table, double weight,
                         std::string label) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw SchemaError("make_from_table: empty table");
    if (n > kTableCap) throw SchemaError("make_from_table: table groups capped at 1024 elements");
    if (weight <= 0) throw SchemaError("group weight must be positive");
    GroupBuilder b;
    b.n = n;
    b.weight = weight;
    b.label = std::move(label);
    b.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n)
            throw SchemaError("make_from_table: table is not n x n");
        for (int c = 0; c < n; ++c) {
            const int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= n) throw SchemaError("make_from_table: entry out of range");
            b.table[static_cast<std::size_t>(a) * n + c] = static_cast<std::int32_t>(v);
        }
    }
    // locate the identity, then read inverses off its column/row
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = b.table[static_cast<std::size_t>(e) * n + a] == a &&
                 b.table[static_cast<std::size_t>(a) * n + e] == a;
        if (ok) id = e;
    }
    if (id < 0) throw ContractError("make_from_table: no identity element");
    b.id = id;
    b.inv.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c)
            if (b.table[static_cast<std::size_t>(a) * n + c] == id &&
                b.table[static_cast<std::size_t>(c) * n + a] == id) {
                b.inv[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(c);
                break;
            }
        if (b.inv[static_cast<std::size_t>(a)] < 0)
            throw ContractError("make_from_table: missing inverse");
    }
    return b.finish();
}

Subgroup subgroup_generate(const GroupPtr& G, const std::vector<int>& generators,
                           double weight) {
    if (!G) throw SchemaError("subgroup_generate: null group");
    if (weight <= 0) throw SchemaError("subgroup weight must be positive");
    const int n = G->order();
    for (int g : generators)
        if (g < 0 || g >= n) throw SchemaError("subgroup_generate: generator out of range");

    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> work{G->identity()};
    in[static_cast<std::size_t>(G->identity())] = 1;
    // closure under right multiplication; in a finite group this reaches
    // inverses as well
    for (std::size_t i = 0; i < work.size(); ++i)
        for (int g : generators) {
            const int next = G->op(work[i], g);
            if (!in[static_cast<std::size_t>(next)]) {
                in[static_cast<std::size_t>(next)] = 1;
                work.push_back(next);
            }
        }

    Subgroup H;
    H.parent = G;
    for (int e = 0; e < n; ++e)
        if (in[static_cast<std::size_t>(e)]) H.members.push_back(e);
    H.pos.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < H.members.size(); ++i)
        H.pos[static_cast<std::size_t>(H.members[i])] = static_cast<std::int32_t>(i);
    H.weight = weight;

    const int m = H.order();
    H.abelian = true;
    for (int i = 0; i < m && H.abelian; ++i)
        for (int j = i + 1; j < m; ++j)
            if (G->op(H.members[static_cast<std::size_t>(i)], H.members[static_cast<std::size_t>(j)]) !=
                G->op(H.members[static_cast<std::size_t>(j)], H.members[static_cast<std::size_t>(i)])) {
                H.abelian = false;
                break;
            }

    if (m <= kDenseCap) {
        GroupBuilder b;
        b.n = m;
        b.id = H.pos[static_cast<std::size_t>(G->identity())];
        b.weight = weight;
        b.label = G->label() + ":subgroup" + std::to_string(m);
        b.abelian_hint = H.abelian ? 1 : 0;
        const auto members = H.members;
        const auto pos = H.pos;
        const GroupPtr parent = G;
        b.mul = [parent, members, pos](int a, int c) {
            return pos[static_cast<std::size_t>(parent->op(members[static_cast<std::size_t>(a)],
                                                           members[static_cast<std::size_t>(c)]))];
        };
        b.inv.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            b.inv[static_cast<std::size_t>(i)] =
                pos[static_cast<std::size_t>(G->inverse(members[static_cast<std::size_t>(i)]))];
        // closure is a subgroup by construction; axioms inherit from the parent
        H.group = b.finish(/*skip_axiom_check=*/true);
    }
    return H;
}

namespace {

CosetSpace enumerate_cosets(const GroupPtr& G, const Subgroup& H) {
    if (H.parent.get() != G.get())
        throw ContractError("coset space: subgroup belongs to a different group");
    const int n = G->order();
    CosetSpace C;
    C.parent = G;
    C.coset_of.assign(static_cast<std::size_t>(n), -1);
    C.h_part.assign(static_cast<std::size_t>(n), -1);
    C.weight = G->weight() / H.weight;
    for (int g = 0; g < n; ++g) {
        if (C.coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        const int c = static_cast<int>(C.transversal.size());
        C.transversal.push_back(g); // ascending scan: minimal representative
        for (int xi : H.members)
            C.coset_of[static_cast<std::size_t>(G->op(xi, g))] = static_cast<std::int32_t>(c);
    }
    return C;
}

void fill_h_parts(const GroupPtr& G, const Subgroup& H, CosetSpace& C) {
    const int n = G->order();
    for (int g = 0; g < n; ++g) {
        const int c = C.coset_of[static_cast<std::size_t>(g)];
        const int h = G->op(g, G->inverse(C.transversal[static_cast<std::size_t>(c)]));
        if (!H.contains(h)) throw ContractError("coset space: factorization left the subgroup");
        C.h_part[static_cast<std::size_t>(g)] = static_cast<std::int32_t>(h);
    }
}

} // namespace

CosetSpace right_transversal(const GroupPtr& G, const Subgroup& H) {
    CosetSpace C = enumerate_cosets(G, H);
    C.policy = TransversalPolicy::minimal;
    fill_h_parts(G, H, C);
    return C;
}

CosetSpace right_transversal_random(const GroupPtr& G, const Subgroup& H, std::uint64_t seed) {
    CosetSpace C = enumerate_cosets(G, H);
    C.policy = TransversalPolicy::random;
    SplitMix64 rng(seed);
    for (std::size_t c = 0; c < C.transversal.size(); ++c) {
        const int xi = H.members[rng.below(static_cast<std::uint64_t>(H.members.size()))];
        C.transversal[c] = G->op(xi, C.transversal[c]);
    }
    fill_h_parts(G, H, C);
    return C;
}

double weil_check(const GroupPtr& G, const Subgroup& H, const CosetSpace& C,
                  const std::vector<std::complex<double>>& f) {
    if (static_cast<int>(f.size()) != G->order())
        throw SchemaError("weil_check: function length mismatch");
    std::complex<double> whole(0.0, 0.0);
    for (const auto& v : f) whole += v;
    whole *= G->weight();
    std::complex<double> layered(0.0, 0.0);
    for (int c = 0; c < C.count(); ++c) {
        std::complex<double> inner(0.0, 0.0);
        for (int xi : H.members)
            inner += f[static_cast<std::size_t>(G->op(xi, C.transversal[static_cast<std::size_t>(c)]))];
        layered += inner;
    }
    layered *= H.weight * C.weight;
    return std::abs(whole - layered);
}

} // namespace zakfiber
