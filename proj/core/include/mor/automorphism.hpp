#ifndef MOR_AUTOMORPHISM_HPP
#define MOR_AUTOMORPHISM_HPP

#include <optional>
#include <vector>

#include "mor/matrix.hpp"
#include "mor/utgroup.hpp"

namespace mor {

/// Reversal-conjugate transpose tau(M) = J (M^-1)^T J, an outer automorphism
/// of UT(n, p) ("graph flip"). Defined for any invertible matrix; maps upper
/// triangular to upper triangular.
MatrixFp tau_matrix(const MatrixFp& m);
UTElement graph_flip(const UTElement& a);

/// Private description of a keygen-family automorphism:
/// a |-> g tau^flip(a) g^-1 with g invertible upper-triangular.
struct ConjugatorPart {
    MatrixFp g;
    MatrixFp g_inv;
    bool flip = false;
};

/// Automorphism of UT(n, p), always carried in public form (images of the
/// n-1 standard generators) plus an optional private conjugator form. The
/// images of all root elements are cached eagerly at construction, so
/// evaluation and read-only sharing are cheap.
class Automorphism {
  public:
    static Automorphism identity(const GroupParams& params);
    static Automorphism from_private(const GroupParams& params, const MatrixFp& g, bool flip);
    /// Builds the root-image cache by the commutator identity
    /// x_ik(1) = [x_ij(1), x_jk(1)] and validates that the images define an
    /// automorphism: the induced matrix must be invertible and the defining
    /// relations of the canonical presentation (root p-powers and the full
    /// commutator table) must be preserved.
    static Automorphism from_images(const GroupParams& params, std::vector<UTElement> images);
    /// Skips validation; for compositions of already-valid automorphisms.
    static Automorphism from_images_unchecked(const GroupParams& params,
                                              std::vector<UTElement> images);

    const GroupParams& params() const { return params_; }
    const std::vector<UTElement>& images() const { return images_; }
    const std::vector<UTElement>& root_images() const { return root_images_; }
    const std::optional<ConjugatorPart>& private_part() const { return priv_; }

    /// Drop the private part (public form only), as published in keys.
    Automorphism stripped() const;

    UTElement apply(const UTElement& a) const;
    bool is_identity() const;
    bool operator==(const Automorphism& o) const {
        return params_ == o.params_ && images_ == o.images_;
    }

  private:
    Automorphism() = default;
    void build_cache_from_images();
    void validate() const;

    GroupParams params_;
    std::vector<UTElement> images_;
    std::vector<UTElement> root_images_;  // canonical position order
    std::optional<ConjugatorPart> priv_;
};

/// f after g: (compose(f, g))(a) = f(g(a)).
Automorphism compose(const Automorphism& f, const Automorphism& g);

/// phi^m by square-and-multiply over composition; phi^0 = identity. Carries
/// the private part through when present.
Automorphism compose_power(const Automorphism& phi, const BigInt& m);

/// The linear operator on G/Phi(G): column i is the projection of the image
/// of x_i. Throws NonInvertibleInducedMap when singular.
MatrixFp induced_map(const Automorphism& phi);

/// Exact order: N1 * p^k where N1 is the order of the induced matrix and k
/// is found by incremental search (the kernel of Aut(G) -> GL(n-1, p) is a
/// p-group).
BigInt automorphism_order(const Automorphism& phi);

/// phi^(t-1) with t = automorphism_order(phi).
Automorphism invert_automorphism(const Automorphism& phi);

}  // namespace mor

#endif
