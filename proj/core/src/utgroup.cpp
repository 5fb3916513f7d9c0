#include "mor/utgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "mor/errors.hpp"

namespace mor {

GroupParams GroupParams::create(std::size_t n, std::uint64_t p) {
    if (n < 3) throw InvalidInput("n must be >= 3");
    if (p < 3 || !is_prime_u64(p)) throw InvalidInput("p not an odd prime");
    if (p >= (1ULL << 63)) throw InvalidInput("p must fit in 63 bits");
    return GroupParams{n, p};
}

BigInt GroupParams::group_order() const {
    return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(positions()));
}

const std::vector<RootPosition>& root_positions(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<RootPosition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<RootPosition> pos;
        for (std::size_t level = 1; level < n; ++level) {
            for (std::size_t i = 1; i + level <= n; ++i) pos.push_back({i, i + level});
        }
        it = cache.emplace(n, std::move(pos)).first;
    }
    return it->second;
}

std::size_t position_index(std::size_t i, std::size_t j, std::size_t n) {
    const std::size_t level = j - i;
    return (level - 1) * n - level * (level - 1) / 2 + (i - 1);
}

UTElement UTElement::random(const GroupParams& params, Rng& rng) {
    UTElement e(params);
    for (auto& v : e.v_) v = rng.below(params.p);
    return e;
}

UTElement UTElement::root(const GroupParams& params, std::size_t i, std::size_t j, std::uint64_t t) {
    UTElement e(params);
    e.set_entry(i, j, t);
    return e;
}

std::uint64_t UTElement::entry(std::size_t i, std::size_t j) const {
    return v_[position_index(i, j, params_.n)];
}

void UTElement::set_entry(std::size_t i, std::size_t j, std::uint64_t v) {
    if (!(i >= 1 && i < j && j <= params_.n)) throw InvalidInput("position outside the strict upper triangle");
    v_[position_index(i, j, params_.n)] = v % params_.p;
}

void UTElement::check(const UTElement& o) const {
    if (params_ != o.params_) throw ParamsMismatch();
}

UTElement UTElement::operator*(const UTElement& o) const {
    check(o);
    const std::size_t n = params_.n;
    const std::uint64_t p = params_.p;
    UTElement r(params_);
    for (const auto& [i, j] : root_positions(n)) {
        std::uint64_t acc = add_mod(entry(i, j), o.entry(i, j), p);
        for (std::size_t k = i + 1; k < j; ++k) {
            acc = add_mod(acc, mul_mod(entry(i, k), o.entry(k, j), p), p);
        }
        r.v_[position_index(i, j, n)] = acc;
    }
    return r;
}

UTElement UTElement::inv() const {
    // ascending level: x(i,j) = -a(i,j) - sum_{i<k<j} a(i,k) x(k,j)
    const std::size_t n = params_.n;
    const std::uint64_t p = params_.p;
    UTElement x(params_);
    for (const auto& [i, j] : root_positions(n)) {
        std::uint64_t acc = entry(i, j);
        for (std::size_t k = i + 1; k < j; ++k) {
            acc = add_mod(acc, mul_mod(entry(i, k), x.entry(k, j), p), p);
        }
        x.v_[position_index(i, j, n)] = sub_mod(0, acc, p);
    }
    return x;
}

UTElement UTElement::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    UTElement acc = identity(params_);
    UTElement base = *this;
    BigInt k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool UTElement::is_identity() const {
    return std::all_of(v_.begin(), v_.end(), [](std::uint64_t v) { return v == 0; });
}

MatrixFp UTElement::to_matrix() const {
    MatrixFp m = MatrixFp::identity(params_.n, params_.p);
    for (const auto& [i, j] : root_positions(params_.n)) m.set(i - 1, j - 1, entry(i, j));
    return m;
}

UTElement UTElement::from_matrix(const GroupParams& params, const MatrixFp& m) {
    if (m.dim() != params.n || m.modulus() != params.p) throw ParamsMismatch();
    for (std::size_t i = 0; i < params.n; ++i) {
        if (m.at(i, i) != 1) throw InvalidInput("matrix is not unitriangular");
        for (std::size_t j = 0; j < i; ++j) {
            if (m.at(i, j) != 0) throw InvalidInput("matrix is not unitriangular");
        }
    }
    UTElement e(params);
    for (const auto& [i, j] : root_positions(params.n)) e.set_entry(i, j, m.at(i - 1, j - 1));
    return e;
}

std::string UTElement::key() const {
    std::string out;
    out.reserve(v_.size() * 8);
    for (auto v : v_) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    return out;
}

UTElement commutator(const UTElement& a, const UTElement& b) { return a.inv() * b.inv() * a * b; }

std::vector<UTElement> generators(const GroupParams& params) {
    std::vector<UTElement> gens;
    gens.reserve(params.n - 1);
    for (std::size_t i = 1; i < params.n; ++i) gens.push_back(UTElement::root(params, i, i + 1, 1));
    return gens;
}

std::vector<std::uint64_t> collect(const UTElement& a) {
    const GroupParams& params = a.params();
    const std::size_t n = params.n;
    const std::uint64_t p = params.p;
    UTElement r = a;
    std::vector<std::uint64_t> t(params.positions(), 0);
    // peel from the left; left-multiplying by x_ij(-t) only touches row i at
    // columns > j, which sit strictly later in the canonical order
    for (const auto& [i, j] : root_positions(n)) {
        const std::uint64_t tij = r.entry(i, j);
        t[position_index(i, j, n)] = tij;
        if (tij == 0) continue;
        const std::uint64_t s = sub_mod(0, tij, p);
        r.set_entry(i, j, 0);
        for (std::size_t b = j + 1; b <= n; ++b) {
            r.set_entry(i, b, add_mod(r.entry(i, b), mul_mod(s, r.entry(j, b), p), p));
        }
    }
    return t;
}

FrattiniVector frattini_project(const UTElement& a) {
    const std::size_t n = a.params().n;
    FrattiniVector v(n - 1);
    for (std::size_t i = 1; i < n; ++i) v[i - 1] = a.entry(i, i + 1);
    return v;
}

std::vector<UTElement> enumerate_group(const GroupParams& params, std::size_t limit) {
    BigInt order = params.group_order();
    if (order > limit) {
        throw ResourceLimit("group order " + to_decimal(order) + " exceeds enumeration limit " +
                            std::to_string(limit));
    }
    const std::size_t total = static_cast<std::size_t>(order);
    std::vector<UTElement> all;
    all.reserve(total);
    std::vector<std::uint64_t> odo(params.positions(), 0);
    for (;;) {
        UTElement e(params);
        for (std::size_t k = 0; k < odo.size(); ++k) {
            const auto& pos = root_positions(params.n)[k];
            e.set_entry(pos.i, pos.j, odo[k]);
        }
        all.push_back(std::move(e));
        std::size_t k = 0;
        while (k < odo.size() && ++odo[k] == params.p) odo[k++] = 0;
        if (k == odo.size()) break;
    }
    return all;
}

std::vector<UTElement> subgroup_closure(const GroupParams& params,
                                        const std::vector<UTElement>& gens, std::size_t limit) {
    std::unordered_set<std::string> seen;
    std::vector<UTElement> members;
    members.push_back(UTElement::identity(params));
    seen.insert(members.front().key());
    for (std::size_t head = 0; head < members.size(); ++head) {
        UTElement cur = members[head];
        for (const UTElement& g : gens) {
            UTElement next = cur * g;
            if (seen.insert(next.key()).second) {
                if (members.size() >= limit) throw ResourceLimit("subgroup closure exceeded limit");
                members.push_back(std::move(next));
            }
        }
    }
    return members;
}

namespace {

void sort_by_key(std::vector<UTElement>& v) {
    std::sort(v.begin(), v.end(), [](const UTElement& a, const UTElement& b) { return a.key() < b.key(); });
}

}  // namespace

FrattiniOracleResult frattini_bruteforce_oracle(const GroupParams& params) {
    if (params.group_order() > 20000) {
        throw ResourceLimit("group order " + to_decimal(params.group_order()) +
                            " exceeds the 20000-element oracle limit");
    }
    const std::vector<UTElement> all = enumerate_group(params);
    const std::size_t size = all.size();
    const std::uint64_t p = params.p;

    // (a) closure of all commutators and all p-th powers
    std::unordered_set<std::string> gen_keys;
    std::vector<UTElement> gens;
    for (const UTElement& a : all) {
        UTElement ap = a.pow(BigInt(p));
        if (gen_keys.insert(ap.key()).second) gens.push_back(ap);
    }
    for (const UTElement& a : all) {
        for (const UTElement& b : all) {
            UTElement c = commutator(a, b);
            if (gen_keys.insert(c.key()).second) gens.push_back(c);
        }
    }
    std::vector<UTElement> closure = subgroup_closure(params, gens);

    // (b) intersection of all maximal (= index p) subgroups, as kernels of
    // surjective homomorphisms G -> Z_p found by brute force over generator
    // images: assign f over the Cayley graph, then certify every edge.
    std::unordered_map<std::string, std::size_t> index_of;
    index_of.reserve(size * 2);
    for (std::size_t k = 0; k < size; ++k) index_of.emplace(all[k].key(), k);
    const std::vector<UTElement> gs = generators(params);
    std::vector<std::vector<std::size_t>> edge(gs.size(), std::vector<std::size_t>(size));
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            edge[gi][k] = index_of.at((all[k] * gs[gi]).key());
        }
    }
    std::vector<char> in_intersection(size, 1);
    // hyperplane candidates: image vectors c with first nonzero coordinate 1
    std::vector<std::uint64_t> c(gs.size(), 0);
    std::size_t maximal_count = 0;
    const std::size_t id_idx = index_of.at(UTElement::identity(params).key());
    std::vector<std::int64_t> f(size);
    for (;;) {
        // next candidate
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == p) c[k++] = 0;
        if (k == c.size()) break;
        std::size_t first_nonzero = 0;
        while (first_nonzero < c.size() && c[first_nonzero] == 0) ++first_nonzero;
        if (c[first_nonzero] != 1) continue;  // one representative per hyperplane

        std::fill(f.begin(), f.end(), -1);
        f[id_idx] = 0;
        std::vector<std::size_t> queue{id_idx};
        bool consistent = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t cur = queue[head];
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                std::size_t nxt = edge[gi][cur];
                std::int64_t val = static_cast<std::int64_t>(
                    add_mod(static_cast<std::uint64_t>(f[cur]), c[gi], p));
                if (f[nxt] < 0) {
                    f[nxt] = val;
                    queue.push_back(nxt);
                } else if (f[nxt] != val) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) break;
        }
        if (!consistent || queue.size() != size) continue;
        // full edge certificate: f(x g_i) = f(x) + c_i everywhere
        for (std::size_t x = 0; x < size && consistent; ++x) {
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                if (f[edge[gi][x]] !=
                    static_cast<std::int64_t>(add_mod(static_cast<std::uint64_t>(f[x]), c[gi], p))) {
                    consistent = false;
                    break;
                }
            }
        }
        if (!consistent) continue;
        ++maximal_count;
        std::size_t kernel_size = 0;
        for (std::size_t x = 0; x < size; ++x) {
            if (f[x] == 0) ++kernel_size;
            else in_intersection[x] = 0;
        }
        if (kernel_size * p != size) {
            throw Inconsistent("kernel of a surjective map onto Z_p does not have index p");
        }
    }
    if (maximal_count == 0) throw Inconsistent("no maximal subgroup found");

    FrattiniOracleResult out;
    out.group_size = size;
    out.commutator_power_closure = std::move(closure);
    for (std::size_t x = 0; x < size; ++x) {
        if (in_intersection[x]) out.maximal_intersection.push_back(all[x]);
    }
    sort_by_key(out.commutator_power_closure);
    sort_by_key(out.maximal_intersection);
    return out;
}

}  // namespace mor
