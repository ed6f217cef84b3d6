#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "submodcodes/codes.hpp"

using namespace submod;

TEST_CASE("sperner codes: worked examples") {
    // d=2, q=2, r=3, alpha=2: six members at distance >= 4
    auto z8 = make_ring(RingKind::IntegerModular, 2, 1, 3);
    Code c = sperner_code(z8, 2, 2);
    CHECK(c.size() == 6);
    CHECK(c.min_distance() >= 4);
    CHECK(c.is_spherical());

    // alpha = r collapses to the residue-field Grassmannian
    Code cr = sperner_code(z8, 2, 3);
    CHECK(cr.size() == 3);
    CHECK(cr.min_distance() == 6);

    // d=2, q=2, r=5, alpha=3: twelve members, distance exactly 6
    auto z32 = make_ring(RingKind::IntegerModular, 2, 1, 5);
    Code big = sperner_code(z32, 2, 3);
    CHECK(big.size() == 12);
    CHECK(big.min_distance() == 6);

    CHECK_THROWS_AS(sperner_code(z8, 2, 0), ValidationError);
    CHECK_THROWS_AS(sperner_code(z8, 2, 4), ValidationError);
}

TEST_CASE("sperner bijection verified independently") {
    for (RingKind kind : {RingKind::IntegerModular, RingKind::TruncatedPolynomial}) {
        auto ring = make_ring(kind, 2, 1, 3);
        for (int alpha = 1; alpha <= 3; ++alpha) {
            Code c = sperner_code(ring, 2, alpha);
            int m = 3 + 1 - alpha;
            CHECK(static_cast<long long>(c.size()) ==
                  grassmannian_count(2, 1, 2, m).to_int64());
            // scaled members stay distinct inside the scaled ambient module
            std::set<Submodule> images;
            Submodule scaled_ambient =
                scale_pi(Submodule::full_module(ring, 2), alpha - 1);
            for (const HomothetyClass& member : c.members()) {
                Submodule img = scale_pi(member.rep, alpha - 1);
                CHECK(is_subset(img, scaled_ambient));
                CHECK(images.insert(img).second);
            }
            CHECK(c.min_distance() >= 2 * alpha);
        }
    }
}

TEST_CASE("sperner custom lift hook") {
    // A lift that adds top-digit noise must still produce a valid code: the
    // construction checks the defining bijection regardless of the section.
    auto z8 = make_ring(RingKind::IntegerModular, 2, 1, 3);
    int calls = 0;
    SpernerLift noisy = [&calls](const ChainRing& target, const ChainRing& source,
                                 const Row& row) {
        ++calls;
        Row up(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            up[c] = target.lift_from_quotient(source, row[c]);
            if (c == 0 && up[c] != 0)
                up[c] = target.add(up[c], target.pi_pow(target.r() - 1));
        }
        return up;
    };
    Code c = sperner_code(z8, 2, 2, kDefaultEnumBudget, noisy);
    CHECK(calls > 0);
    CHECK(c.size() == 6);
    CHECK(c.min_distance() >= 4);
}

TEST_CASE("closed-form sizes") {
    CHECK(sperner_size_bound(2, 2, 2, 1) == 6);
    CHECK(sperner_size_bound(3, 2, 3, 3) == 7);
    CHECK(sperner_size_bound(3, 2, 1, 1) == 7);
    CHECK(sperner_size_bound(2, 2, 5, 5) == 3);
    CHECK(sperner_size_bound(2, 3, 4, 4) == 4);
    CHECK(max_distance_code_size(3, 2, 1) == 7);
    CHECK(max_distance_code_size(3, 2, 5) == 7);  // independent of r
    CHECK(max_distance_code_size(2, 2, 2) == 3);
    CHECK(dim2_code_size(2, 2, 1) == 6);
    CHECK(dim2_code_size(3, 1, 1) == 4);
    CHECK(dim2_code_size(2, 5, 3) == 12);
}

TEST_CASE("permutation codes") {
    auto f2 = make_ring(RingKind::TruncatedPolynomial, 2, 1, 1);
    Code yellow = permutation_code(f2, {1, 1, 0, 0});
    CHECK(yellow.size() == 6);
    CHECK(yellow.min_distance() == 2);
    CHECK(yellow.is_spherical());

    auto z4 = make_ring(RingKind::IntegerModular, 2, 1, 2);
    Code antipodal = permutation_code(z4, {2, 0});
    CHECK(antipodal.size() == 2);
    CHECK(antipodal.min_distance() == 4);

    Code six = permutation_code(z4, {2, 1, 0});
    CHECK(six.size() == 6);
    CHECK(six.min_distance() == 2);

    CHECK_THROWS_AS(permutation_code(z4, {1, 1, 0}), ValidationError);  // top entry != r
    CHECK_THROWS_AS(permutation_code(z4, {2, 1, 1}), ValidationError);  // no zero entry
}

TEST_CASE("orbit profile matches the constructed codes") {
    for (RingKind kind : {RingKind::IntegerModular, RingKind::TruncatedPolynomial}) {
        for (int r = 1; r <= 2; ++r) {
            auto ring = make_ring(kind, 2, 1, static_cast<std::uint32_t>(r));
            for (int d = 2; d <= 4; ++d) {
                for (const EDType& t : enumerate_boundary_types(d, r)) {
                    OrbitProfile p = permutation_code_profile(t.eps, r);
                    Code c = permutation_code(ring, t.eps);
                    CHECK(c.size() == p.cardinality);
                    CHECK(c.min_distance() == p.min_distance);
                }
            }
        }
    }
}

TEST_CASE("orbit distance and cardinality bounds") {
    CHECK(permutation_distance_bound(2, 2) == 2);
    CHECK(permutation_distance_bound(5, 1) == 10);
    CHECK(permutation_distance_bound(3, 2) == 2);
    CHECK_THROWS_AS(permutation_distance_bound(3, 0), ValidationError);

    // the bound is attained: exhaustive over boundary types with fixed levels
    for (int r = 1; r <= 4; ++r)
        for (int d = 2; d <= 4; ++d)
            for (int levels = 1; levels < d; ++levels) {
                int best = 0;
                for (const EDType& t : enumerate_boundary_types(d, r))
                    if (t.levels() == levels)
                        best = std::max(best, permutation_code_profile(t.eps, r).min_distance);
                if (best > 0) CHECK(best <= permutation_distance_bound(r, levels));
                if (levels <= r && d > levels) CHECK(best == permutation_distance_bound(r, levels));
            }

    PermutationCardinalityBound b = permutation_cardinality_bound(4, 2, 1);
    CHECK(b.closed_form_is_integer());
    CHECK(b.closed_form_num == 3);
    CHECK(b.exact_maximum == 12);
    CHECK_FALSE(b.agrees());
    CHECK(b.witness_eps == std::vector<int>{2, 1, 0, 0});

    PermutationCardinalityBound d2 = permutation_cardinality_bound(2, 3, 2);
    CHECK(d2.exact_maximum == 2);
    CHECK_THROWS_AS(permutation_cardinality_bound(2, 1, 2), ValidationError);  // alpha > r
}

TEST_CASE("free codes") {
    auto f2 = make_ring(RingKind::TruncatedPolynomial, 2, 1, 1);
    CHECK(free_code(f2, 4, 2).size() == 6);
    CHECK(free_code(f2, 4, 2).min_distance() == 2);

    auto z4 = make_ring(RingKind::IntegerModular, 2, 1, 2);
    Code two = free_code(z4, 2, 1);
    CHECK(two.size() == 2);
    CHECK(two.min_distance() == 4);
    Code three = free_code(z4, 3, 1);
    CHECK(three.size() == 3);
    CHECK(three.min_distance() == 4);
    for (const HomothetyClass& c : three.members()) CHECK(is_free(c.rep));
    CHECK_THROWS_AS(free_code(z4, 3, 3), ValidationError);
}

TEST_CASE("star configurations") {
    auto f2 = make_ring(RingKind::TruncatedPolynomial, 2, 1, 1);
    Code lines = star_configuration(f2, 2);
    CHECK(lines.size() == 3);
    CHECK(lines.min_distance() == 2);

    for (RingKind kind : {RingKind::IntegerModular, RingKind::TruncatedPolynomial}) {
        auto ring = make_ring(kind, 2, 1, 2);
        Code star = star_configuration(ring, 3);
        CHECK(star.size() == 4);
        const DistanceMatrix& dm = star.distance_matrix();
        for (std::size_t i = 0; i < star.size(); ++i)
            for (std::size_t j = 0; j < star.size(); ++j)
                CHECK(dm.full[i][j] == (i == j ? 0 : 4));
        // any d members span the ambient module
        Submodule full = Submodule::full_module(ring, 3);
        for (std::size_t skip = 0; skip < star.size(); ++skip) {
            Submodule acc = Submodule::zero_module(ring, 3);
            for (std::size_t j = 0; j < star.size(); ++j)
                if (j != skip) acc = sum(acc, star.members()[j].rep);
            CHECK(acc == full);
        }
    }
    CHECK_THROWS_AS(star_configuration(f2, 1), ValidationError);
}

TEST_CASE("pyrope membership and integral points") {
    CHECK(pyrope_integral_points(2, 1) ==
          std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(pyrope_integral_points(4, 1).size() == 15);
    CHECK(pyrope_integral_points(3, 4).size() == 125 - 64);

    std::vector<std::vector<int>> j3 = {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}};
    CHECK(pyrope_contains(j3, {0, 0, 0}));
    CHECK(pyrope_contains(j3, {2, 1, 0}));
    CHECK_FALSE(pyrope_contains(j3, {3, 0, 0}));
    CHECK_THROWS_AS(pyrope_contains({{1}}, {0}), ValidationError);

    // count identity over the whole small grid (asserted inside the call)
    for (int d = 2; d <= 4; ++d)
        for (int r = 1; r <= 4; ++r) {
            unsigned long long outer = 1, inner = 1;
            for (int i = 0; i < d; ++i) {
                outer *= static_cast<unsigned long long>(r) + 1;
                inner *= static_cast<unsigned long long>(r);
            }
            CHECK(pyrope_integral_points(d, r).size() == outer - inner);
        }

    // the points are exactly the one-apartment classes
    for (RingKind kind : {RingKind::IntegerModular, RingKind::TruncatedPolynomial}) {
        for (auto [d, r] : {std::pair{2, 3}, {3, 2}, {4, 1}}) {
            auto ring = make_ring(kind, 2, 1, static_cast<std::uint32_t>(r));
            std::set<Submodule> reps;
            for (const auto& delta : pyrope_integral_points(d, r)) {
                Submodule u = Submodule::diagonal(ring, delta);
                CHECK(pi_valuation(u) == 0);
                CHECK(saturation(u) == u);
                CHECK(reps.insert(u).second);
            }
            CHECK(reps.size() == pyrope_integral_points(d, r).size());
        }
    }
}

TEST_CASE("code container invariants") {
    auto z4 = make_ring(RingKind::IntegerModular, 2, 1, 2);
    auto a = homothety_class(Submodule::from_generators(z4, 2, {{1, 0}}));
    auto b = homothety_class(Submodule::from_generators(z4, 2, {{0, 1}}));
    CHECK_THROWS_AS(Code(z4, 2, {a}, "x"), ValidationError);
    CHECK_THROWS_AS(Code(z4, 2, {a, a}, "x"), ValidationError);
    Code ok(z4, 2, {b, a}, "manual");
    CHECK(ok.members()[0] < ok.members()[1]);  // canonical order
    CHECK(ok.min_distance() == 4);
}
