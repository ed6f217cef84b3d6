#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "submodcodes/chain_ring.hpp"
#include "submodcodes/counting.hpp"
#include "submodcodes/errors.hpp"

namespace submod {

using Row = std::vector<Elem>;
using Mat = std::vector<Row>;

constexpr std::uint64_t kDefaultEnumBudget = 1'000'000;

namespace detail {

inline int leading_col(const Row& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return static_cast<int>(c);
    return static_cast<int>(row.size());
}

inline bool is_zero_row(const Row& row) {
    for (Elem e : row)
        if (e != 0) return false;
    return true;
}

inline void row_submul(const ChainRing& R, Row& dst, Elem f, const Row& src, int from_col) {
    for (std::size_t c = from_col; c < dst.size(); ++c)
        if (src[c] != 0) dst[c] = R.sub(dst[c], R.mul(f, src[c]));
}

inline Row row_scaled(const ChainRing& R, const Row& row, Elem f) {
    Row out(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) out[c] = R.mul(f, row[c]);
    return out;
}

/// Reduce v against canonical rows[from..], pivot data alongside.
/// Returns true iff v reduces to zero (i.e. lies in their span).
inline bool reduce_inplace(const ChainRing& R, const Mat& rows,
                           const std::vector<std::pair<int, std::uint32_t>>& pivots,
                           std::size_t from, Row& v) {
    int next_check = 0;
    for (std::size_t i = from; i < rows.size(); ++i) {
        int c = pivots[i].first;
        std::uint32_t a = pivots[i].second;
        for (int j = next_check; j < c; ++j)
            if (v[j] != 0) return false;
        next_check = c + 1;
        if (v[c] == 0) continue;
        if (R.valuation(v[c]) < a) return false;
        Elem f = R.shift_down(v[c], a);
        row_submul(R, v, f, rows[i], c);
    }
    for (std::size_t j = next_check; j < v.size(); ++j)
        if (v[j] != 0) return false;
    return true;
}

inline std::vector<std::pair<int, std::uint32_t>> pivot_data(const ChainRing& R, const Mat& rows) {
    std::vector<std::pair<int, std::uint32_t>> out;
    out.reserve(rows.size());
    for (const Row& row : rows) {
        int c = leading_col(row);
        out.emplace_back(c, c < static_cast<int>(row.size()) ? R.valuation(row[c]) : R.r());
    }
    return out;
}

struct SubmoduleAccess;

}  // namespace detail

/// Canonical echelon form of a row span over a chain ring. The result is the
/// unique matrix with strictly increasing pivot columns, pivot entries π^a
/// with unit part 1, entries above a pivot reduced mod π^a, and span closed
/// under multiplication by π (every π^{r-a}·row lies in the span of the later
/// rows). Two generating sets span the same module iff their forms coincide.
inline Mat howell_form(const ChainRing& R, int d, Mat input) {
    std::vector<Row> work;
    for (Row& row : input) {
        if (static_cast<int>(row.size()) != d) throw ValidationError("howell_form: bad row width");
        if (!detail::is_zero_row(row)) work.push_back(std::move(row));
    }
    Mat result;
    std::vector<std::pair<int, std::uint32_t>> pivots;
    for (int c = 0; c < d; ++c) {
        std::vector<Row> here, later;
        for (Row& row : work)
            (detail::leading_col(row) == c ? here : later).push_back(std::move(row));
        work = std::move(later);
        if (here.empty()) continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < here.size(); ++i)
            if (R.valuation(here[i][c]) < R.valuation(here[best][c])) best = i;
        std::swap(here[0], here[best]);
        std::uint32_t a = R.valuation(here[0][c]);
        Elem unit_inv = R.inv(R.unit_part(here[0][c]));
        Row pivot = detail::row_scaled(R, here[0], unit_inv);
        for (std::size_t i = 1; i < here.size(); ++i) {
            Elem f = R.shift_down(here[i][c], a);
            detail::row_submul(R, here[i], f, pivot, c);
            if (!detail::is_zero_row(here[i])) work.push_back(std::move(here[i]));
        }
        if (a > 0) {
            Row ann = detail::row_scaled(R, pivot, R.pi_pow(R.r() - a));
            if (!detail::is_zero_row(ann)) work.push_back(std::move(ann));
        }
        result.push_back(std::move(pivot));
        pivots.emplace_back(c, a);
    }
    // Reduce entries above each pivot modulo π^a, left to right.
    for (std::size_t i = 0; i < result.size(); ++i) {
        int c = pivots[i].first;
        std::uint32_t a = pivots[i].second;
        for (std::size_t j = 0; j < i; ++j) {
            Elem e = result[j][c];
            Elem red = R.reduce_mod_pi_pow(e, a);
            if (red != e) {
                Elem f = R.shift_down(R.sub(e, red), a);
                detail::row_submul(R, result[j], f, result[i], c);
            }
        }
    }
    return result;
}

/// Submodule of the free module R^d, held in Howell form. Equality, hashing
/// and ordering all operate on the canonical matrix. Immutable.
class Submodule {
  public:
    static Submodule from_generators(RingPtr ring, int d, Mat rows) {
        if (!ring) throw ValidationError("null ring");
        if (d < 1) throw ValidationError("ambient rank must be >= 1");
        for (const Row& row : rows) {
            if (static_cast<int>(row.size()) != d)
                throw ValidationError("generator width does not match ambient rank");
            for (Elem e : row)
                if (e >= ring->size()) throw ValidationError("generator entry out of range");
        }
        Mat canonical = howell_form(*ring, d, std::move(rows));
        return Submodule(std::move(ring), d, std::move(canonical));
    }

    static Submodule zero_module(RingPtr ring, int d) {
        return from_generators(std::move(ring), d, {});
    }

    static Submodule full_module(RingPtr ring, int d) {
        Mat rows(d, Row(d, 0));
        for (int i = 0; i < d; ++i) rows[i][i] = 1;
        return from_generators(std::move(ring), d, std::move(rows));
    }

    /// Module generated by π^{delta_i}·e_i; entries delta_i in {0..r}.
    static Submodule diagonal(RingPtr ring, const std::vector<int>& delta) {
        if (!ring) throw ValidationError("null ring");
        int d = static_cast<int>(delta.size());
        Mat rows;
        for (int i = 0; i < d; ++i) {
            if (delta[i] < 0 || delta[i] > static_cast<int>(ring->r()))
                throw ValidationError("diagonal exponent out of range");
            Elem e = ring->pi_pow(static_cast<std::uint32_t>(delta[i]));
            if (e != 0) {
                Row row(d, 0);
                row[i] = e;
                rows.push_back(std::move(row));
            }
        }
        return from_generators(std::move(ring), d, std::move(rows));
    }

    const RingPtr& ring_ptr() const { return ring_; }
    const ChainRing& ring() const { return *ring_; }
    int ambient_rank() const { return d_; }
    const Mat& rows() const { return rows_; }
    const std::vector<std::pair<int, std::uint32_t>>& pivots() const { return pivots_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool is_zero() const { return rows_.empty(); }

    bool is_full() const {
        if (num_rows() != d_) return false;
        for (const auto& [c, a] : pivots_)
            if (a != 0) return false;
        return true;
    }

    /// |U| = q^(size_exponent()).
    int size_exponent() const {
        int e = 0;
        for (const auto& [c, a] : pivots_) e += static_cast<int>(ring_->r() - a);
        return e;
    }

    bool contains(const Row& v) const {
        if (static_cast<int>(v.size()) != d_) throw ValidationError("contains: bad vector width");
        Row tmp = v;
        return detail::reduce_inplace(*ring_, rows_, pivots_, 0, tmp);
    }

    /// Destructive membership test (v is clobbered).
    bool reduces_to_zero(Row& v) const {
        return detail::reduce_inplace(*ring_, rows_, pivots_, 0, v);
    }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.d_ == b.d_ && a.ring_->same_spec(*b.ring_) && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }
    friend bool operator<(const Submodule& a, const Submodule& b) {
        if (a.d_ != b.d_) return a.d_ < b.d_;
        return a.rows_ < b.rows_;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        mix(static_cast<std::uint64_t>(d_));
        for (const Row& row : rows_)
            for (Elem e : row) mix(e);
        return h;
    }

    std::string to_string() const {
        if (rows_.empty()) return "[zero]";
        std::string out;
        for (const Row& row : rows_) {
            out += "[";
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += " ";
                out += ring_->element_to_string(row[c]);
            }
            out += "]";
        }
        return out;
    }

  private:
    Submodule(RingPtr ring, int d, Mat canonical_rows)
        : ring_(std::move(ring)), d_(d), rows_(std::move(canonical_rows)),
          pivots_(detail::pivot_data(*ring_, rows_)) {}

    friend struct detail::SubmoduleAccess;

    RingPtr ring_;
    int d_;
    Mat rows_;
    std::vector<std::pair<int, std::uint32_t>> pivots_;
};

struct SubmoduleHash {
    std::size_t operator()(const Submodule& u) const { return u.hash(); }
};

namespace detail {
// Constructs a Submodule from rows already known to be canonical (used by the
// enumerator, which generates Howell matrices directly).
struct SubmoduleAccess {
    static Submodule make(RingPtr ring, int d, Mat canonical_rows) {
        return Submodule(std::move(ring), d, std::move(canonical_rows));
    }
};
}  // namespace detail

inline void check_compatible(const Submodule& a, const Submodule& b) {
    if (a.ambient_rank() != b.ambient_rank() || !a.ring().same_spec(b.ring()))
        throw ValidationError("submodules live in different ambient modules");
}

inline Submodule sum(const Submodule& a, const Submodule& b) {
    check_compatible(a, b);
    Mat rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Submodule::from_generators(a.ring_ptr(), a.ambient_rank(), std::move(rows));
}

inline bool is_subset(const Submodule& a, const Submodule& b) {
    check_compatible(a, b);
    for (const Row& row : a.rows())
        if (!b.contains(row)) return false;
    return true;
}

inline Submodule scale_pi(const Submodule& u, std::uint32_t k) {
    if (k == 0) return u;
    const ChainRing& R = u.ring();
    Elem f = R.pi_pow(k);
    Mat rows;
    for (const Row& row : u.rows()) rows.push_back(detail::row_scaled(R, row, f));
    return Submodule::from_generators(u.ring_ptr(), u.ambient_rank(), std::move(rows));
}

/// π^k·U ⊆ W, tested generator-wise without re-canonicalizing.
inline bool scaled_subset(const Submodule& u, std::uint32_t k, const Submodule& w) {
    const ChainRing& R = u.ring();
    Elem f = R.pi_pow(k);
    for (const Row& row : u.rows()) {
        Row tmp = detail::row_scaled(R, row, f);
        if (!w.reduces_to_zero(tmp)) return false;
    }
    return true;
}

/// Generators of the left kernel {v in R^n : v·M = 0} of an n×d matrix,
/// via the Howell form of (M | I_n): rows whose left half vanishes have
/// right halves spanning exactly the kernel.
inline Mat left_kernel(const ChainRing& R, const Mat& m, int ncols) {
    int n = static_cast<int>(m.size());
    Mat aug(n, Row(ncols + n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != ncols) throw ValidationError("left_kernel: bad width");
        for (int c = 0; c < ncols; ++c) aug[i][c] = m[i][c];
        aug[i][ncols + i] = 1;
    }
    Mat h = howell_form(R, ncols + n, std::move(aug));
    Mat out;
    for (const Row& row : h) {
        if (detail::leading_col(row) >= ncols)
            out.emplace_back(row.begin() + ncols, row.end());
    }
    return howell_form(R, n, std::move(out));
}

inline Submodule intersect(const Submodule& a, const Submodule& b) {
    check_compatible(a, b);
    const ChainRing& R = a.ring();
    int d = a.ambient_rank();
    Mat stacked = a.rows();
    stacked.insert(stacked.end(), b.rows().begin(), b.rows().end());
    int ka = a.num_rows();
    Mat ker = left_kernel(R, stacked, d);
    Mat gens;
    for (const Row& coeffs : ker) {
        Row v(d, 0);
        for (int i = 0; i < ka; ++i)
            if (coeffs[i] != 0)
                for (int c = 0; c < d; ++c)
                    v[c] = R.add(v[c], R.mul(coeffs[i], a.rows()[i][c]));
        gens.push_back(std::move(v));
    }
    return Submodule::from_generators(a.ring_ptr(), d, std::move(gens));
}

/// Largest m with U ⊆ π^m·R^d (the minimum valuation over all entries);
/// equals r for the zero module.
inline std::uint32_t pi_valuation(const Submodule& u) {
    const ChainRing& R = u.ring();
    std::uint32_t best = R.r();
    for (const Row& row : u.rows())
        for (Elem e : row)
            if (e != 0) best = std::min(best, R.valuation(e));
    return best;
}

/// The saturation of U: the unique maximal module W with π^{m}·W = U where
/// m = pi_valuation(U). Computed as the preimage of U under x -> π^m·x.
/// Fixed points (pi_valuation 0) are returned unchanged; saturation(0) = R^d.
inline Submodule saturation(const Submodule& u) {
    std::uint32_t m = pi_valuation(u);
    if (m == 0) return u;
    const ChainRing& R = u.ring();
    int d = u.ambient_rank();
    Mat stacked(d, Row(d, 0));
    Elem pm = R.pi_pow(m);
    for (int i = 0; i < d; ++i) stacked[i][i] = pm;
    stacked.insert(stacked.end(), u.rows().begin(), u.rows().end());
    Mat ker = left_kernel(R, stacked, d);
    Mat gens;
    for (const Row& coeffs : ker) gens.emplace_back(coeffs.begin(), coeffs.begin() + d);
    return Submodule::from_generators(u.ring_ptr(), d, std::move(gens));
}

/// Boundary test: π^{r-1}·R^d not contained in U, and U not contained in π·R^d.
inline bool is_boundary(const Submodule& u) {
    const ChainRing& R = u.ring();
    if (pi_valuation(u) >= 1) return false;  // U ⊆ πR^d
    int d = u.ambient_rank();
    Elem top = R.pi_pow(R.r() - 1);
    for (int i = 0; i < d; ++i) {
        Row v(d, 0);
        v[i] = top;
        if (!u.reduces_to_zero(v)) return true;  // π^{r-1}R^d ⊄ U
    }
    return false;
}

/// Least m with π^m·R^d ⊆ U. For a saturated module this is the distance of
/// its homothety class from the class of the full module.
inline std::uint32_t covering_exponent(const Submodule& u) {
    const ChainRing& R = u.ring();
    int d = u.ambient_rank();
    for (std::uint32_t m = 0; m <= R.r(); ++m) {
        bool ok = true;
        Elem pm = R.pi_pow(m);
        for (int i = 0; i < d && ok; ++i) {
            Row v(d, 0);
            v[i] = pm;
            ok = u.reduces_to_zero(v);
        }
        if (ok) return m;
    }
    throw std::runtime_error("covering_exponent: unreachable");
}

/// Homothety class [U]: all modules with the same saturation. Stored by its
/// saturated representative together with the class cardinality.
struct HomothetyClass {
    Submodule rep;
    int size = 0;

    friend bool operator==(const HomothetyClass& a, const HomothetyClass& b) {
        return a.rep == b.rep;
    }
    friend bool operator!=(const HomothetyClass& a, const HomothetyClass& b) {
        return !(a == b);
    }
    friend bool operator<(const HomothetyClass& a, const HomothetyClass& b) {
        return a.rep < b.rep;
    }
};

struct HomothetyClassHash {
    std::size_t operator()(const HomothetyClass& c) const { return c.rep.hash(); }
};

inline HomothetyClass homothety_class(const Submodule& u) {
    Submodule rep = saturation(u);
    int ell = static_cast<int>(covering_exponent(rep));
    return HomothetyClass{std::move(rep), static_cast<int>(u.ring().r()) - ell + 1};
}

// ---- elementary divisors ----------------------------------------------------

/// Two-sided diagonalization U = span{π^{exponents[i]} · basis_rows[i]} with
/// the basis rows extendable to a basis of R^d and exponents ascending.
struct SmithDecomposition {
    std::vector<int> exponents;
    Mat basis_rows;
};

inline SmithDecomposition smith_decompose(const Submodule& u) {
    const ChainRing& R = u.ring();
    int d = u.ambient_rank();
    Mat g = u.rows();
    int k = static_cast<int>(g.size());
    Mat basis(d, Row(d, 0));
    for (int i = 0; i < d; ++i) basis[i][i] = 1;
    SmithDecomposition out;
    int steps = std::min(k, d);
    for (int t = 0; t < steps; ++t) {
        // Minimal-valuation entry in the trailing block, ties broken by
        // position; a fully zero block ends the reduction.
        std::uint32_t best = R.r();
        int bi = -1, bj = -1;
        for (int i = t; i < k; ++i)
            for (int j = t; j < d; ++j)
                if (g[i][j] != 0 && R.valuation(g[i][j]) < best) {
                    best = R.valuation(g[i][j]);
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        std::swap(g[t], g[bi]);
        if (bj != t) {
            for (int i = 0; i < k; ++i) std::swap(g[i][t], g[i][bj]);
            std::swap(basis[t], basis[bj]);
        }
        std::uint32_t a = best;
        Elem unit_inv = R.inv(R.unit_part(g[t][t]));
        for (int j = t; j < d; ++j) g[t][j] = R.mul(unit_inv, g[t][j]);
        for (int i = t + 1; i < k; ++i) {
            if (g[i][t] == 0) continue;
            Elem f = R.shift_down(g[i][t], a);
            for (int j = t; j < d; ++j) g[i][j] = R.sub(g[i][j], R.mul(f, g[t][j]));
        }
        for (int j = t + 1; j < d; ++j) {
            if (g[t][j] == 0) continue;
            Elem f = R.shift_down(g[t][j], a);
            for (int i = 0; i < k; ++i) g[i][j] = R.sub(g[i][j], R.mul(f, g[i][t]));
            for (int c = 0; c < d; ++c) basis[t][c] = R.add(basis[t][c], R.mul(f, basis[j][c]));
        }
        out.exponents.push_back(static_cast<int>(a));
        out.basis_rows.push_back(basis[t]);
    }
    return out;
}

/// Exponent vector of the diagonal form of U, padded with r for the missing
/// coordinates and sorted weakly decreasing. The zero module gives (r,...,r),
/// the full module (0,...,0).
inline std::vector<int> elementary_divisor_type(const Submodule& u) {
    SmithDecomposition s = smith_decompose(u);
    std::vector<int> eps(u.ambient_rank(), static_cast<int>(u.ring().r()));
    for (std::size_t i = 0; i < s.exponents.size(); ++i) eps[i] = s.exponents[i];
    std::sort(eps.begin(), eps.end(), std::greater<int>());
    return eps;
}

inline bool is_free(const Submodule& u) {
    for (int a : smith_decompose(u).exponents)
        if (a != 0) return false;
    return true;
}

/// Rank of the free part (number of zero exponents in the diagonal form).
inline int free_rank(const Submodule& u) {
    int n = 0;
    for (int a : smith_decompose(u).exponents)
        if (a == 0) ++n;
    return n;
}

/// Split U = X ⊕ H with H free (π·H = H ∩ π·R^d) and π^{r-1}·X = 0, so that
/// π^{r-1}·U = π^{r-1}·H. X is the zero module when U is already free.
inline std::pair<Submodule, Submodule> free_decomposition(const Submodule& u) {
    if (u.is_zero()) throw ValidationError("free_decomposition of the zero module");
    const ChainRing& R = u.ring();
    SmithDecomposition s = smith_decompose(u);
    Mat x_rows, h_rows;
    for (std::size_t i = 0; i < s.exponents.size(); ++i) {
        if (s.exponents[i] == 0)
            h_rows.push_back(s.basis_rows[i]);
        else
            x_rows.push_back(detail::row_scaled(
                R, s.basis_rows[i], R.pi_pow(static_cast<std::uint32_t>(s.exponents[i]))));
    }
    return {Submodule::from_generators(u.ring_ptr(), u.ambient_rank(), std::move(x_rows)),
            Submodule::from_generators(u.ring_ptr(), u.ambient_rank(), std::move(h_rows))};
}

// ---- enumeration --------------------------------------------------------------

/// Visit every submodule of R^d exactly once, in a fixed deterministic order
/// (pivot-column mask ascending, then pivot valuations, then entries). The
/// canonical matrices are generated directly; rows are built from the last
/// pivot upward so the span-closure constraint only looks at finished rows.
template <class F>
void for_each_submodule(const RingPtr& ring, int d, F&& emit,
                        std::uint64_t budget = kDefaultEnumBudget) {
    if (!ring) throw ValidationError("null ring");
    if (d < 1 || d > 16) throw ValidationError("ambient rank out of range");
    const ChainRing& R = *ring;
    const int r = static_cast<int>(R.r());
    BigInt predicted = d == 1 ? BigInt{r + 1} : total_submodule_count(d, r, R.q());
    if (predicted > BigInt{static_cast<long long>(budget)})
        throw BudgetError("submodule enumeration over budget", predicted.to_string());

    std::uint64_t emitted = 0;
    std::vector<int> cols;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        cols.clear();
        for (int c = 0; c < d; ++c)
            if (mask & (1u << c)) cols.push_back(c);
        int k = static_cast<int>(cols.size());
        if (k == 0) {
            ++emitted;
            emit(detail::SubmoduleAccess::make(ring, d, Mat{}));
            continue;
        }
        std::vector<int> vals(k, 0);
        while (true) {
            Mat rows(k, Row(d, 0));
            std::vector<std::pair<int, std::uint32_t>> pivots(k);
            for (int t = 0; t < k; ++t)
                pivots[t] = {cols[t], static_cast<std::uint32_t>(vals[t])};
            // Fill rows from the bottom; slot limits are q^{a_j} above a
            // pivot of valuation a_j and |R| at a non-pivot column.
            auto fill = [&](auto&& self, int t) -> void {
                if (t < 0) {
                    ++emitted;
                    emit(detail::SubmoduleAccess::make(ring, d, rows));
                    return;
                }
                Row& row = rows[t];
                std::fill(row.begin(), row.end(), Elem{0});
                row[cols[t]] = R.pi_pow(static_cast<std::uint32_t>(vals[t]));
                std::vector<std::pair<int, Elem>> slots;
                for (int c = cols[t] + 1; c < d; ++c) {
                    auto it = std::find(cols.begin() + t + 1, cols.end(), c);
                    if (it != cols.end()) {
                        int j = static_cast<int>(it - cols.begin());
                        // entries above a pivot π^a run over the q^a reduced codes
                        slots.emplace_back(c, R.pi_pow(static_cast<std::uint32_t>(vals[j])));
                    } else {
                        slots.emplace_back(c, R.size());
                    }
                }
                std::vector<Elem> counter(slots.size(), 0);
                while (true) {
                    for (std::size_t i = 0; i < slots.size(); ++i) row[slots[i].first] = counter[i];
                    bool ok = true;
                    if (vals[t] > 0) {
                        Row scaled = detail::row_scaled(
                            R, row, R.pi_pow(static_cast<std::uint32_t>(r - vals[t])));
                        ok = detail::reduce_inplace(R, rows, pivots,
                                                    static_cast<std::size_t>(t) + 1, scaled);
                    }
                    if (ok) self(self, t - 1);
                    std::size_t i = 0;
                    while (i < counter.size() && ++counter[i] == slots[i].second) {
                        counter[i] = 0;
                        ++i;
                    }
                    if (i == counter.size()) break;
                }
            };
            fill(fill, k - 1);
            int t = k - 1;
            while (t >= 0 && ++vals[t] == r) vals[t--] = 0;
            if (t < 0) break;
        }
    }
    if (BigInt{static_cast<long long>(emitted)} != predicted)
        throw std::runtime_error("submodule enumeration does not match the counting formula: got " +
                                 std::to_string(emitted) + ", expected " + predicted.to_string());
}

inline std::vector<Submodule> enumerate_submodules(const RingPtr& ring, int d,
                                                   std::uint64_t budget = kDefaultEnumBudget) {
    std::vector<Submodule> out;
    for_each_submodule(ring, d, [&](Submodule u) { out.push_back(std::move(u)); }, budget);
    std::sort(out.begin(), out.end());
    return out;
}

/// All boundary submodules (= the spherical vertex set), canonically ordered.
inline std::vector<Submodule> enumerate_boundary(const RingPtr& ring, int d,
                                                 std::uint64_t budget = kDefaultEnumBudget) {
    std::vector<Submodule> out;
    for_each_submodule(
        ring, d,
        [&](Submodule u) {
            if (is_boundary(u)) out.push_back(std::move(u));
        },
        budget);
    std::sort(out.begin(), out.end());
    if (d >= 2) {
        BigInt want = boundary_class_count(d, static_cast<int>(ring->r()), ring->q());
        if (BigInt{static_cast<long long>(out.size())} != want)
            throw std::runtime_error("boundary enumeration does not match the counting formula");
    }
    return out;
}

/// All free rank-n submodules of R^d; count checked against the closed form.
inline std::vector<Submodule> enumerate_grassmannian(const RingPtr& ring, int d, int n,
                                                     std::uint64_t budget = kDefaultEnumBudget) {
    if (n < 1 || n > d - 1) throw ValidationError("grassmannian rank out of range");
    BigInt want = grassmannian_count(d, n, ring->q(), static_cast<int>(ring->r()));
    if (want > BigInt{static_cast<long long>(budget)})
        throw BudgetError("grassmannian enumeration over budget", want.to_string());
    std::vector<Submodule> out;
    for_each_submodule(
        ring, d,
        [&](Submodule u) {
            SmithDecomposition s = smith_decompose(u);
            if (static_cast<int>(s.exponents.size()) != n) return;
            for (int a : s.exponents)
                if (a != 0) return;
            out.push_back(std::move(u));
        },
        budget);
    std::sort(out.begin(), out.end());
    if (BigInt{static_cast<long long>(out.size())} != want)
        throw std::runtime_error("grassmannian enumeration does not match the closed form");
    return out;
}

/// One saturated representative per homothety class.
inline std::vector<HomothetyClass> enumerate_classes(const RingPtr& ring, int d,
                                                     std::uint64_t budget = kDefaultEnumBudget) {
    std::vector<HomothetyClass> out;
    // Saturated modules (pi_valuation 0) are exactly the class representatives;
    // the zero module lands in the class of the full module.
    for_each_submodule(
        ring, d,
        [&](Submodule u) {
            if (pi_valuation(u) == 0) out.push_back(homothety_class(u));
        },
        budget);
    std::sort(out.begin(), out.end());
    if (d >= 2) {
        BigInt want = class_count(d, static_cast<int>(ring->r()), ring->q());
        if (BigInt{static_cast<long long>(out.size())} != want)
            throw std::runtime_error("class enumeration does not match the counting formula");
    }
    return out;
}

}  // namespace submod
