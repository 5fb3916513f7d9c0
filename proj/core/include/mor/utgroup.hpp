#ifndef MOR_UTGROUP_HPP
#define MOR_UTGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mor/bigint.hpp"
#include "mor/matrix.hpp"
#include "mor/rng.hpp"

namespace mor {

/// Parameters of G = UT(n, p). n = 2 is rejected (G abelian, the cryptosystem
/// degenerates to El-Gamal in Z_p), as is p = 2.
struct GroupParams {
    std::size_t n = 0;
    std::uint64_t p = 0;

    static GroupParams create(std::size_t n, std::uint64_t p);

    bool operator==(const GroupParams& o) const { return n == o.n && p == o.p; }
    bool operator!=(const GroupParams& o) const { return !(*this == o); }

    std::size_t positions() const { return n * (n - 1) / 2; }
    /// |G| = p^(n(n-1)/2), as a big integer.
    BigInt group_order() const;
};

/// Strictly-upper positions (i, j), 1-based, in the canonical collection
/// order: ascending level j - i, then ascending i. The first n-1 entries are
/// the superdiagonal.
struct RootPosition {
    std::size_t i, j;
};
const std::vector<RootPosition>& root_positions(std::size_t n);
std::size_t position_index(std::size_t i, std::size_t j, std::size_t n);

/// Element of UT(n, p): the strictly-upper part in canonical position order.
/// Membership is structural; the diagonal is implicitly 1.
class UTElement {
  public:
    UTElement() = default;
    explicit UTElement(const GroupParams& params)
        : params_(params), v_(params.positions(), 0) {}

    static UTElement identity(const GroupParams& params) { return UTElement(params); }
    static UTElement random(const GroupParams& params, Rng& rng);
    /// x_{ij}(t) = I + t e_{ij}
    static UTElement root(const GroupParams& params, std::size_t i, std::size_t j, std::uint64_t t);

    const GroupParams& params() const { return params_; }
    std::uint64_t entry(std::size_t i, std::size_t j) const;
    void set_entry(std::size_t i, std::size_t j, std::uint64_t v);
    const std::vector<std::uint64_t>& raw() const { return v_; }

    UTElement operator*(const UTElement& o) const;
    UTElement inv() const;
    UTElement pow(const BigInt& e) const;
    bool operator==(const UTElement& o) const { return params_ == o.params_ && v_ == o.v_; }
    bool operator!=(const UTElement& o) const { return !(*this == o); }
    bool is_identity() const;

    MatrixFp to_matrix() const;
    /// Requires a unitriangular input; anything else is rejected.
    static UTElement from_matrix(const GroupParams& params, const MatrixFp& m);

    std::string key() const;

  private:
    void check(const UTElement& o) const;
    GroupParams params_;
    std::vector<std::uint64_t> v_;
};

/// a^-1 b^-1 a b
UTElement commutator(const UTElement& a, const UTElement& b);

/// The standard minimal generating set x_i = I + e_{i,i+1}, i = 1..n-1.
std::vector<UTElement> generators(const GroupParams& params);

/// Exponent table {t_ij} with a = prod over canonical order of x_ij(t_ij).
/// Indexed like root_positions(n).
std::vector<std::uint64_t> collect(const UTElement& a);

/// Coordinates in G/Phi(G) ~ Z_p^(n-1).
using FrattiniVector = std::vector<std::uint64_t>;

/// The quotient map G -> G/Phi(G): the first superdiagonal. For UT(n, p),
/// p odd, Phi(G) = G'G^p is exactly the set of elements vanishing there
/// (certified by frattini_bruteforce_oracle on small parameters).
FrattiniVector frattini_project(const UTElement& a);

/// Full element enumeration, mixed-radix over positions. Guarded by the
/// oracle resource limit.
std::vector<UTElement> enumerate_group(const GroupParams& params, std::size_t limit = 20000);

/// Closure of a generating set under multiplication (BFS from the identity).
std::vector<UTElement> subgroup_closure(const GroupParams& params,
                                        const std::vector<UTElement>& gens,
                                        std::size_t limit = 20000);

struct FrattiniOracleResult {
    std::vector<UTElement> commutator_power_closure;   // <[a,b], a^p>
    std::vector<UTElement> maximal_intersection;       // intersection of index-p subgroups
    std::size_t group_size = 0;
};

/// Computes Phi(G) two independent ways on groups of order <= 20000:
/// (a) the closure of all commutators and p-th powers, and (b) the
/// intersection of all maximal subgroups, enumerated as kernels of the
/// surjective homomorphisms G -> Z_p (index-p subgroups of a p-group are
/// normal, so every maximal subgroup arises this way). Both lists are sorted
/// by element key.
FrattiniOracleResult frattini_bruteforce_oracle(const GroupParams& params);

}  // namespace mor

#endif
