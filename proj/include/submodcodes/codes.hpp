#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "submodcodes/counting.hpp"
#include "submodcodes/metric.hpp"
#include "submodcodes/submodule.hpp"

namespace submod {

/// A set of at least two distinct homothety classes, kept in canonical order.
/// Spherical codes additionally have every member on the boundary.
class Code {
  public:
    Code(RingPtr ring, int d, std::vector<HomothetyClass> members, std::string construction,
         std::map<std::string, long long> params = {})
        : ring_(std::move(ring)), d_(d), members_(std::move(members)),
          construction_(std::move(construction)), params_(std::move(params)) {
        if (members_.size() < 2) throw ValidationError("a code needs at least two classes");
        std::sort(members_.begin(), members_.end());
        for (std::size_t i = 1; i < members_.size(); ++i)
            if (members_[i] == members_[i - 1])
                throw ValidationError("code members must be distinct");
        for (const HomothetyClass& c : members_)
            if (c.rep.ambient_rank() != d_ || !c.rep.ring().same_spec(*ring_))
                throw ValidationError("code member lives in the wrong ambient module");
    }

    const RingPtr& ring_ptr() const { return ring_; }
    const ChainRing& ring() const { return *ring_; }
    int ambient_rank() const { return d_; }
    const std::vector<HomothetyClass>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const std::string& construction() const { return construction_; }
    const std::map<std::string, long long>& params() const { return params_; }

    const DistanceMatrix& distance_matrix() const {
        if (!dmat_) dmat_ = half_distance_matrix(members_);
        return *dmat_;
    }

    int min_distance() const { return distance_matrix().min_positive(); }

    bool is_spherical() const {
        for (const HomothetyClass& c : members_)
            if (!is_boundary(c.rep)) return false;
        return true;
    }

  private:
    RingPtr ring_;
    int d_;
    std::vector<HomothetyClass> members_;
    std::string construction_;
    std::map<std::string, long long> params_;
    mutable std::optional<DistanceMatrix> dmat_;
};

namespace detail {

/// Greedily picks generator rows whose residue vectors are F_q-independent;
/// for a free module this extracts a basis from its canonical matrix.
inline Mat minimal_free_basis(const Submodule& w) {
    const ChainRing& R = w.ring();
    int d = w.ambient_rank();
    std::vector<std::vector<std::uint32_t>> echelon;
    Mat out;
    for (const Row& row : w.rows()) {
        std::vector<std::uint32_t> res(d);
        for (int c = 0; c < d; ++c) res[c] = R.residue(row[c]);
        for (const auto& e : echelon) {
            int lead = -1;
            for (int c = 0; c < d; ++c)
                if (e[c] != 0) {
                    lead = c;
                    break;
                }
            if (lead >= 0 && res[lead] != 0) {
                std::uint32_t f = R.fq_mul(res[lead], R.fq_inv(e[lead]));
                for (int c = 0; c < d; ++c)
                    res[c] = R.fq_add(res[c], R.fq_neg(R.fq_mul(f, e[c])));
            }
        }
        bool nonzero = false;
        for (int c = 0; c < d; ++c) nonzero = nonzero || res[c] != 0;
        if (nonzero) {
            out.push_back(row);
            echelon.push_back(std::move(res));
        }
    }
    return out;
}

}  // namespace detail

/// Entry-wise lift hook for Sperner codes; maps a generator row over the
/// quotient ring to a row over the full ring. The default zero-pads digits.
using SpernerLift =
    std::function<Row(const ChainRing& target, const ChainRing& source, const Row&)>;

/// Size of a Sperner code with the given parameters: |Gr(ceil(d/2), V_m)|
/// over the quotient with nilpotency m = r+1-alpha.
inline long long sperner_size_bound(int d, std::uint64_t q, int r, int alpha) {
    if (alpha < 1 || alpha > r) throw ValidationError("alpha out of range");
    int e = (d + 1) / 2;
    return grassmannian_count(d, e, q, r + 1 - alpha).to_int64();
}

/// Maximal code size at distance 2r (independent of r): the Gaussian
/// binomial count of middle-rank subspaces over the residue field.
inline long long max_distance_code_size(int d, std::uint64_t q, int r) {
    if (r < 1) throw ValidationError("r must be >= 1");
    int e = (d + 1) / 2;
    return grassmannian_count(d, e, q, 1).to_int64();
}

/// Maximal code size in ambient rank 2 at distance 2*alpha: (q+1)·q^{r-alpha}.
inline long long dim2_code_size(std::uint64_t q, int r, int alpha) {
    if (alpha < 1 || alpha > r) throw ValidationError("alpha out of range");
    long long out = static_cast<long long>(q) + 1;
    for (int i = 0; i < r - alpha; ++i) out *= static_cast<long long>(q);
    return out;
}

/// Sperner code with parameters (d, R, alpha): one free rank-e lift per free
/// rank-e submodule of the quotient module, where e = ceil(d/2). The lifted
/// family maps bijectively onto Gr(e, π^{alpha-1}·R^d) under U -> π^{alpha-1}U;
/// that bijection, the cardinality and min distance >= 2*alpha are all
/// verified before the code is returned.
inline Code sperner_code(const RingPtr& ring, int d, int alpha,
                         std::uint64_t budget = kDefaultEnumBudget,
                         const SpernerLift& lift = nullptr) {
    const ChainRing& R = *ring;
    const int r = static_cast<int>(R.r());
    if (alpha < 1 || alpha > r) throw ValidationError("alpha out of range");
    const int m = r + 1 - alpha;
    const int e = (d + 1) / 2;
    BigInt expect = grassmannian_count(d, e, R.q(), m);
    if (expect > BigInt{static_cast<long long>(budget)})
        throw BudgetError("sperner_code over budget", expect.to_string());
    RingPtr quotient = make_ring(R.kind(), R.p(), R.s(), static_cast<std::uint32_t>(m));

    std::vector<HomothetyClass> members;
    std::set<Submodule> images;
    std::vector<int> image_type(d, r);
    for (int i = 0; i < e; ++i) image_type[d - 1 - i] = alpha - 1;
    std::sort(image_type.begin(), image_type.end(), std::greater<int>());

    for (const Submodule& w : enumerate_grassmannian(quotient, d, e, budget)) {
        Mat basis = detail::minimal_free_basis(w);
        if (static_cast<int>(basis.size()) != e)
            throw std::runtime_error("sperner_code: quotient module is not free of rank e");
        Mat lifted;
        for (const Row& row : basis) {
            if (lift) {
                lifted.push_back(lift(R, *quotient, row));
            } else {
                Row up(d, 0);
                for (int c = 0; c < d; ++c) up[c] = R.lift_from_quotient(*quotient, row[c]);
                lifted.push_back(std::move(up));
            }
        }
        Submodule u = Submodule::from_generators(ring, d, std::move(lifted));
        SmithDecomposition sm = smith_decompose(u);
        if (static_cast<int>(sm.exponents.size()) != e ||
            !std::all_of(sm.exponents.begin(), sm.exponents.end(), [](int a) { return a == 0; }))
            throw std::runtime_error("sperner_code: lift is not free of rank e");
        Submodule image = scale_pi(u, static_cast<std::uint32_t>(alpha - 1));
        if (elementary_divisor_type(image) != image_type)
            throw std::runtime_error("sperner_code: image has the wrong divisor type");
        if (!images.insert(image).second)
            throw std::runtime_error("sperner_code: scaling map is not injective");
        members.push_back(homothety_class(u));
    }
    if (BigInt{static_cast<long long>(members.size())} != expect)
        throw std::runtime_error("sperner_code: cardinality mismatch");

    Code code(ring, d, std::move(members), "sperner", {{"alpha", alpha}});
    if (!code.is_spherical()) throw std::runtime_error("sperner_code: member off the boundary");
    if (code.size() >= 2 && code.min_distance() < 2 * alpha)
        throw std::runtime_error("sperner_code: min distance below 2*alpha");
    return code;
}

// ---- one-apartment codes -----------------------------------------------------

/// Cardinality and min distance of the permutation orbit of a boundary
/// exponent vector: the orbit has multinomial size and the distance is twice
/// the smallest difference between distinct exponent values.
struct OrbitProfile {
    unsigned long long cardinality;
    int min_distance;
};

inline OrbitProfile permutation_code_profile(const std::vector<int>& eps, int r) {
    EDType type(eps);
    if (!type.is_boundary(r)) throw ValidationError("exponent vector is not a boundary type");
    auto mult = type.multiplicities();
    unsigned long long card = 1;
    int placed = 0;
    for (int m : mult)
        for (int i = 1; i <= m; ++i) {
            ++placed;
            card = card * static_cast<unsigned long long>(placed) /
                   static_cast<unsigned long long>(i);
        }
    return OrbitProfile{card, 2 * type.min_gap()};
}

/// The orbit code {[U_delta] : delta a permutation of eps} for a boundary
/// exponent vector eps.
inline Code permutation_code(const RingPtr& ring, const std::vector<int>& eps) {
    const int r = static_cast<int>(ring->r());
    EDType type(eps);
    if (!type.is_boundary(r)) throw ValidationError("exponent vector is not a boundary type");
    int d = type.d();
    std::vector<int> delta = eps;
    std::sort(delta.begin(), delta.end());
    std::vector<HomothetyClass> members;
    do {
        Submodule u = Submodule::diagonal(ring, delta);
        if (!is_boundary(u)) throw std::runtime_error("orbit member off the boundary");
        members.push_back(homothety_class(u));
    } while (std::next_permutation(delta.begin(), delta.end()));
    OrbitProfile profile = permutation_code_profile(eps, r);
    if (members.size() != profile.cardinality)
        throw std::runtime_error("orbit size does not match the multinomial");
    std::map<std::string, long long> params;
    for (int i = 0; i < d; ++i) params["eps" + std::to_string(i)] = eps[i];
    Code code(ring, d, std::move(members), "permutation", std::move(params));
    if (code.min_distance() != profile.min_distance)
        throw std::runtime_error("orbit distance does not match the gap formula");
    return code;
}

/// Upper bound 2*floor(r/levels) for the distance of an orbit code using
/// levels+1 distinct exponent values.
inline int permutation_distance_bound(int r, int levels) {
    if (levels < 1) throw ValidationError("levels must be >= 1");
    return 2 * (r / levels);
}

/// Closed-form versus exhaustive maximal orbit-code size at distance 2*alpha.
/// The two can disagree; both are reported and nothing is patched over.
struct PermutationCardinalityBound {
    long long closed_form_num = 0;  // reduced fraction; integral iff den == 1
    long long closed_form_den = 1;
    unsigned long long exact_maximum = 0;
    std::vector<int> witness_eps;

    bool closed_form_is_integer() const { return closed_form_den == 1; }
    bool agrees() const {
        return closed_form_is_integer() &&
               closed_form_num == static_cast<long long>(exact_maximum);
    }
};

inline PermutationCardinalityBound permutation_cardinality_bound(int d, int r, int alpha) {
    if (alpha < 1) throw ValidationError("alpha must be >= 1");
    if (alpha > r) throw ValidationError("alpha > r leaves no admissible orbit");
    if (d < 2 || d > 20) throw ValidationError("d out of range");
    PermutationCardinalityBound out;

    // Closed form, taken literally: with r = alpha*X + Y (Y < alpha) and
    // d = beta*X + gamma (gamma < X), the bound is d!/((beta!)^{X+1}(beta+1)^gamma).
    long long x = r / alpha;
    long long beta = d / x, gamma = d % x;
    long long num = 1, den = 1;
    auto reduce = [&]() {
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    };
    for (int i = 2; i <= d; ++i) num *= i;
    for (long long rep = 0; rep < x + 1; ++rep)
        for (long long i = 2; i <= beta; ++i) {
            den *= i;
            reduce();
        }
    for (long long rep = 0; rep < gamma; ++rep) {
        den *= beta + 1;
        reduce();
    }
    out.closed_form_num = num;
    out.closed_form_den = den;

    // Exhaustive maximum of the multinomial over boundary types whose
    // distinct values are pairwise at least alpha apart.
    for (const EDType& t : enumerate_boundary_types(d, r)) {
        if (t.min_gap() < alpha) continue;
        OrbitProfile p = permutation_code_profile(t.eps, r);
        if (p.cardinality > out.exact_maximum) {
            out.exact_maximum = p.cardinality;
            out.witness_eps = t.eps;
        }
    }
    return out;
}

/// The code of all coordinate-subset free modules of rank n: exponent
/// vectors with n zeros and d-n entries r. Size binom(d, n), distance 2r.
inline Code free_code(const RingPtr& ring, int d, int n) {
    if (n < 1 || n > d - 1) throw ValidationError("free_code rank out of range");
    const int r = static_cast<int>(ring->r());
    std::vector<int> eps(d, r);
    for (int i = 0; i < n; ++i) eps[d - 1 - i] = 0;
    Code code = permutation_code(ring, eps);
    std::map<std::string, long long> params{{"n", n}};
    Code out(ring, d, code.members(), "free", std::move(params));
    if (out.size() != binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n)))
        throw std::runtime_error("free_code: wrong cardinality");
    if (out.min_distance() != 2 * r) throw std::runtime_error("free_code: wrong distance");
    return out;
}

/// The d+1 rank-one modules spanned by the unit vectors and by their sum.
/// Any d of them sum to the ambient module, and they are pairwise at the
/// maximal distance 2r.
inline Code star_configuration(const RingPtr& ring, int d) {
    if (d < 2) throw ValidationError("star_configuration needs d >= 2");
    const int r = static_cast<int>(ring->r());
    std::vector<Submodule> mods;
    for (int i = 0; i < d; ++i) {
        Row row(d, 0);
        row[i] = 1;
        mods.push_back(Submodule::from_generators(ring, d, {row}));
    }
    mods.push_back(Submodule::from_generators(ring, d, {Row(d, 1)}));
    Submodule full = Submodule::full_module(ring, d);
    for (int i = 0; i <= d; ++i) {
        SmithDecomposition sm = smith_decompose(mods[i]);
        if (sm.exponents != std::vector<int>{0})
            throw std::runtime_error("star member is not free of rank one");
        Submodule acc = Submodule::zero_module(ring, d);
        for (int j = 0; j <= d; ++j)
            if (j != i) acc = sum(acc, mods[j]);
        if (!(acc == full)) throw std::runtime_error("star members fail the spanning condition");
    }
    std::vector<HomothetyClass> members;
    for (const Submodule& u : mods) members.push_back(homothety_class(u));
    Code code(ring, d, std::move(members), "star");
    if (code.size() != static_cast<std::size_t>(d) + 1)
        throw std::runtime_error("star members are not distinct");
    const DistanceMatrix& dm = code.distance_matrix();
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            if (dm.full[i][j] != 2 * r)
                throw std::runtime_error("star pair below maximal distance");
    return code;
}

// ---- polytrope helpers --------------------------------------------------------

/// Membership in the polytrope Q(M): u_i - u_j <= M[i][j] for all i, j.
inline bool pyrope_contains(const std::vector<std::vector<int>>& m, const std::vector<int>& u) {
    std::size_t d = u.size();
    if (m.size() != d) throw ValidationError("matrix/vector size mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        if (m[i].size() != d) throw ValidationError("matrix is not square");
        if (m[i][i] != 0) throw ValidationError("matrix diagonal must be zero");
        for (std::size_t j = 0; j < d; ++j)
            if (u[i] - u[j] > m[i][j]) return false;
    }
    return true;
}

/// Integral points of Q(r·J_d) normalized to minimum entry 0: exactly the
/// vectors in {0..r}^d touching 0, and in bijection with the one-apartment
/// homothety classes. Count (r+1)^d - r^d.
inline std::vector<std::vector<int>> pyrope_integral_points(int d, int r) {
    if (d < 1 || r < 0) throw ValidationError("bad pyrope parameters");
    std::vector<std::vector<int>> out;
    std::vector<int> u(d, 0);
    std::vector<std::vector<int>> jmat(d, std::vector<int>(d, r));
    for (int i = 0; i < d; ++i) jmat[i][i] = 0;
    while (true) {
        if (*std::min_element(u.begin(), u.end()) == 0) {
            if (!pyrope_contains(jmat, u)) throw std::runtime_error("pyrope membership failed");
            out.push_back(u);
        }
        int i = d - 1;
        while (i >= 0 && ++u[i] > r) u[i--] = 0;
        if (i < 0) break;
    }
    unsigned long long want = 1, inner = 1;
    for (int i = 0; i < d; ++i) {
        want *= static_cast<unsigned long long>(r) + 1;
        inner *= static_cast<unsigned long long>(r);
    }
    if (out.size() != want - inner)
        throw std::runtime_error("pyrope point count mismatch");
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace submod
