#include "mor/automorphism.hpp"

#include "mor/dlp.hpp"
#include "mor/errors.hpp"

namespace mor {

MatrixFp tau_matrix(const MatrixFp& m) {
    const std::size_t n = m.dim();
    MatrixFp inv = m.inv();
    MatrixFp out(n, m.modulus());
    // tau(M)_{ij} = (M^-1)_{n+1-j, n+1-i} (transpose, rows/cols reversed)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.set(i, j, inv.at(n - 1 - j, n - 1 - i));
        }
    }
    return out;
}

UTElement graph_flip(const UTElement& a) {
    return UTElement::from_matrix(a.params(), tau_matrix(a.to_matrix()));
}

Automorphism Automorphism::identity(const GroupParams& params) {
    Automorphism phi;
    phi.params_ = params;
    phi.images_ = generators(params);
    for (const auto& [i, j] : root_positions(params.n)) {
        phi.root_images_.push_back(UTElement::root(params, i, j, 1));
    }
    phi.priv_ = ConjugatorPart{MatrixFp::identity(params.n, params.p),
                               MatrixFp::identity(params.n, params.p), false};
    return phi;
}

Automorphism Automorphism::from_private(const GroupParams& params, const MatrixFp& g, bool flip) {
    if (g.dim() != params.n || g.modulus() != params.p) throw ParamsMismatch();
    for (std::size_t i = 0; i < params.n; ++i) {
        if (g.at(i, i) == 0) throw InvalidInput("conjugator must be invertible upper-triangular");
        for (std::size_t j = 0; j < i; ++j) {
            if (g.at(i, j) != 0) throw InvalidInput("conjugator must be upper-triangular");
        }
    }
    Automorphism phi;
    phi.params_ = params;
    phi.priv_ = ConjugatorPart{g, g.inv(), flip};
    const std::size_t n = params.n;
    for (const auto& [i, j] : root_positions(n)) {
        // tau(x_ij(1)) = x_{n+1-j, n+1-i}(-1); then conjugate by g
        MatrixFp base = flip ? UTElement::root(params, n + 1 - j, n + 1 - i, params.p - 1).to_matrix()
                             : UTElement::root(params, i, j, 1).to_matrix();
        MatrixFp img = phi.priv_->g * base * phi.priv_->g_inv;
        phi.root_images_.push_back(UTElement::from_matrix(params, img));
    }
    phi.images_.assign(phi.root_images_.begin(), phi.root_images_.begin() + (n - 1));
    return phi;
}

Automorphism Automorphism::from_images_unchecked(const GroupParams& params,
                                                 std::vector<UTElement> images) {
    if (images.size() != params.n - 1) throw InvalidInput("expected n-1 generator images");
    for (const auto& img : images) {
        if (img.params() != params) throw ParamsMismatch();
    }
    Automorphism phi;
    phi.params_ = params;
    phi.images_ = std::move(images);
    phi.build_cache_from_images();
    return phi;
}

Automorphism Automorphism::from_images(const GroupParams& params, std::vector<UTElement> images) {
    Automorphism phi = from_images_unchecked(params, std::move(images));
    phi.validate();
    return phi;
}

void Automorphism::build_cache_from_images() {
    const std::size_t n = params_.n;
    root_images_.assign(images_.begin(), images_.end());
    root_images_.resize(params_.positions(), UTElement::identity(params_));
    // level by level: image of x_ik comes from [x_{i,i+1}, x_{i+1,k}]
    for (std::size_t level = 2; level < n; ++level) {
        for (std::size_t i = 1; i + level <= n; ++i) {
            const std::size_t k = i + level;
            const UTElement& left = root_images_[position_index(i, i + 1, n)];
            const UTElement& right = root_images_[position_index(i + 1, k, n)];
            root_images_[position_index(i, k, n)] = commutator(left, right);
        }
    }
}

void Automorphism::validate() const {
    induced_map(*this);  // throws NonInvertibleInducedMap when singular
    const std::size_t n = params_.n;
    const auto& pos = root_positions(n);
    for (std::size_t a = 0; a < pos.size(); ++a) {
        if (!root_images_[a].pow(BigInt(params_.p)).is_identity()) {
            throw ValidationError("not an automorphism: image of a root element has order != p");
        }
        for (std::size_t b = a + 1; b < pos.size(); ++b) {
            UTElement got = commutator(root_images_[a], root_images_[b]);
            UTElement want = UTElement::identity(params_);
            if (pos[a].j == pos[b].i) {
                want = root_images_[position_index(pos[a].i, pos[b].j, n)];
            } else if (pos[b].j == pos[a].i) {
                want = root_images_[position_index(pos[b].i, pos[a].j, n)].inv();
            }
            if (got != want) {
                throw ValidationError("not an automorphism: commutator relation broken");
            }
        }
    }
}

Automorphism Automorphism::stripped() const {
    Automorphism phi = *this;
    phi.priv_.reset();
    return phi;
}

UTElement Automorphism::apply(const UTElement& a) const {
    if (a.params() != params_) throw ParamsMismatch();
    if (priv_) {
        MatrixFp m = a.to_matrix();
        if (priv_->flip) m = tau_matrix(m);
        return UTElement::from_matrix(params_, priv_->g * m * priv_->g_inv);
    }
    const std::vector<std::uint64_t> t = collect(a);
    UTElement out = UTElement::identity(params_);
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] != 0) out = out * root_images_[k].pow(BigInt(t[k]));
    }
    return out;
}

bool Automorphism::is_identity() const { return images_ == generators(params_); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.params() != g.params()) throw ParamsMismatch();
    const GroupParams& params = f.params();
    if (f.private_part() && g.private_part()) {
        const auto& fp = *f.private_part();
        const auto& gp = *g.private_part();
        MatrixFp gg = fp.flip ? tau_matrix(gp.g) : gp.g;
        return Automorphism::from_private(params, fp.g * gg, fp.flip != gp.flip);
    }
    std::vector<UTElement> images;
    images.reserve(params.n - 1);
    for (const UTElement& img : g.images()) images.push_back(f.apply(img));
    return Automorphism::from_images_unchecked(params, std::move(images));
}

Automorphism compose_power(const Automorphism& phi, const BigInt& m) {
    if (m < 0) throw InvalidInput("compose_power requires m >= 0");
    Automorphism acc = Automorphism::identity(phi.params());
    if (m == 0) return acc;
    Automorphism base = phi;
    BigInt k = m;
    for (;;) {
        if (bit_test(k, 0)) acc = compose(acc, base);
        k >>= 1;
        if (k == 0) break;
        base = compose(base, base);
    }
    return acc;
}

MatrixFp induced_map(const Automorphism& phi) {
    const GroupParams& params = phi.params();
    MatrixFp m(params.n - 1, params.p);
    for (std::size_t col = 0; col < params.n - 1; ++col) {
        FrattiniVector proj = frattini_project(phi.images()[col]);
        for (std::size_t row = 0; row < params.n - 1; ++row) m.set(row, col, proj[row]);
    }
    if (!m.is_invertible()) throw NonInvertibleInducedMap();
    return m;
}

BigInt automorphism_order(const Automorphism& phi) {
    const MatrixFp a = induced_map(phi);
    MatrixGroup mg{MatrixFp::identity(a.dim(), a.modulus())};
    const BigInt n1 = element_order(mg, a, matrix_order_bound(a));
    BigInt t = n1;
    Automorphism psi = compose_power(phi, n1);
    int guard = 0;
    while (!psi.is_identity()) {
        psi = compose_power(psi, BigInt(phi.params().p));
        t *= phi.params().p;
        if (++guard > 64) throw Inconsistent("automorphism order search did not terminate");
    }
    return t;
}

Automorphism invert_automorphism(const Automorphism& phi) {
    return compose_power(phi, automorphism_order(phi) - 1);
}

}  // namespace mor
