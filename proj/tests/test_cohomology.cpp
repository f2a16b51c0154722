#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lts/cohomology.hpp"
#include "lts/corpus.hpp"

using namespace lts;

namespace {

Rep trivial_rep(const Algebra& base, std::size_t module_dim) {
    return Rep(base, Space(module_dim, "v"));
}

MultiMap identity_cochain(const Space& g) {
    MultiMap m = MultiMap::uniform(g, 1, g);
    for (std::uint32_t i = 0; i < g.dim; ++i) m.set({i}, unit_vec(g.dim, i));
    return m;
}

// Naive route: the full constraint matrix over the elementary basis of
// Hom((x)^{2n-1} g, V); its kernel dimension must match the product-basis
// construction.
std::size_t naive_cochain_dim(const Space& g, const Space& v, std::size_t n) {
    MapSpaceBasis amb{std::vector<Space>(2 * n - 1, g), v};
    std::vector<Rat> rows;
    std::size_t nrows = 0;
    const std::size_t s0 = 2 * n - 4;
    TupleRange(std::vector<std::size_t>(2 * n - 1, g.dim)).for_each([&](const Key& t) {
        Key swapped = t;
        std::swap(swapped[s0], swapped[s0 + 1]);
        Key c1 = t, c2 = t;
        c1[s0] = t[s0 + 1]; c1[s0 + 1] = t[s0 + 2]; c1[s0 + 2] = t[s0];
        c2[s0] = t[s0 + 2]; c2[s0 + 1] = t[s0]; c2[s0 + 2] = t[s0 + 1];
        for (std::size_t c = 0; c < v.dim; ++c) {
            std::vector<Rat> row(amb.dim(), Rat(0));
            row[amb.flat_index(t, c)] += Rat(1);
            row[amb.flat_index(swapped, c)] += Rat(1);
            rows.insert(rows.end(), row.begin(), row.end());
            ++nrows;

            std::vector<Rat> row2(amb.dim(), Rat(0));
            row2[amb.flat_index(t, c)] += Rat(1);
            row2[amb.flat_index(c1, c)] += Rat(1);
            row2[amb.flat_index(c2, c)] += Rat(1);
            rows.insert(rows.end(), row2.begin(), row2.end());
            ++nrows;
        }
    });
    Mat constraint(nrows, amb.dim(), std::move(rows));
    return kernel_basis(constraint).size();
}

}  // namespace

TEST_CASE("cochain space dimensions", "[cohomology]") {
    Space g2(2), g1(1), v1(1, "v");
    REQUIRE(CochainBasis(g2, v1, 1).dim() == 2);
    REQUIRE(CochainBasis(g2, v1, 2).dim() == 2);
    REQUIRE(CochainBasis(g1, v1, 2).dim() == 0);
    REQUIRE(CochainBasis(g1, Space(3, "v"), 2).dim() == 0);
}

TEST_CASE("product-basis construction matches the naive constraint kernel",
          "[cohomology]") {
    Space g2(2), v1(1, "v"), v2(2, "v");
    REQUIRE(CochainBasis(g2, v2, 2).dim() == naive_cochain_dim(g2, v2, 2));
    REQUIRE(CochainBasis(g2, v1, 3).dim() == naive_cochain_dim(g2, v1, 3));
    Space g3(3);
    REQUIRE(CochainBasis(g3, v1, 2).dim() == naive_cochain_dim(g3, v1, 2));
}

TEST_CASE("basis elements satisfy the constraints and coordinates round-trip",
          "[cohomology]") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t n : {1u, 2u, 3u}) {
        CochainBasis basis(Space(2), Space(2, "v"), n);
        Vec coords = zero_vec(basis.dim());
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            LTSCochain b = basis.element(i);
            REQUIRE(satisfies_cochain_constraints(b.map));
            REQUIRE(basis.coordinates(b.map) == unit_vec(basis.dim(), i));
            coords[i] = Rat(coeff(rng));
        }
        MultiMap combo = basis.from_coordinates(coords);
        REQUIRE(satisfies_cochain_constraints(combo));
        REQUIRE(basis.coordinates(combo) == coords);
    }
}

TEST_CASE("coboundary on the zero system is zero", "[cohomology]") {
    Algebra a = zero_lts(2);
    Rep r = trivial_rep(a, 2);
    CochainBasis basis = cochain_basis(a, r, 2);
    for (std::size_t i = 0; i < basis.dim(); ++i)
        REQUIRE(coboundary(a, r, basis.element(i)).map.is_zero());
    REQUIRE(coboundary_matrix(a, r, 1).is_zero());
}

TEST_CASE("delta of the identity cochain on sl2 is twice the bracket",
          "[cohomology]") {
    Algebra a = sl2_lts();
    Rep ad = adjoint_rep(a);
    LTSCochain f(1, identity_cochain(a.space));
    LTSCochain df = coboundary(a, ad, f);
    REQUIRE(df.degree == 2);
    TupleRange({3, 3, 3}).for_each([&](const Key& k) {
        REQUIRE(df.map.value(k) == scale(Rat(2), a.bracket(k)));
    });
    REQUIRE(!is_cocycle(a, ad, f));
}

TEST_CASE("delta composed with delta vanishes", "[cohomology]") {
    SECTION("as matrix identities on dim-2 corpus pairs") {
        for (const Algebra& a : {zero_lts(2), nonabelian2_lts()}) {
            for (const Rep& r : {adjoint_rep(a), trivial_rep(a, 1)}) {
                Mat d1 = coboundary_matrix(a, r, 1);
                Mat d2 = coboundary_matrix(a, r, 2);
                REQUIRE((d2 * d1).is_zero());
            }
        }
    }
    SECTION("pointwise on sl2 with the adjoint representation") {
        Algebra a = sl2_lts();
        Rep ad = adjoint_rep(a);
        LTSCochain f(1, identity_cochain(a.space));
        REQUIRE(coboundary(a, ad, coboundary(a, ad, f)).map.is_zero());
        CochainBasis basis = cochain_basis(a, ad, 2);
        for (std::size_t i : {0u, 5u, 11u})
            REQUIRE(coboundary(a, ad, coboundary(a, ad, basis.element(i))).map.is_zero());
    }
}

TEST_CASE("cohomology dimension tables", "[cohomology]") {
    SECTION("abelian dim-2 with the trivial line: H1 = H2 = 2") {
        Algebra a = zero_lts(2);
        auto dims = cohomology_dims(a, trivial_rep(a, 1), 2);
        REQUIRE(dims == std::vector<std::size_t>{2, 2});
    }
    SECTION("dim-1 base forces H2 = 0") {
        Algebra a = zero_lts(1);
        auto dims = cohomology_dims(a, trivial_rep(a, 1), 2);
        REQUIRE(dims[1] == 0);
    }
    SECTION("sl2 adjoint regression values") {
        Algebra a = sl2_lts();
        auto t = cohomology_table(a, adjoint_rep(a), 2);
        REQUIRE(t.cochain_dims == std::vector<std::size_t>{9, 24});
        REQUIRE(t.delta_ranks == std::vector<std::size_t>{6, 18});
        REQUIRE(t.h_dims == std::vector<std::size_t>{3, 0});
    }
    SECTION("nonabelian dim-2 adjoint regression values") {
        Algebra a = nonabelian2_lts();
        auto t = cohomology_table(a, adjoint_rep(a), 3);
        REQUIRE(t.h_dims == std::vector<std::size_t>{2, 1, 4});
    }
}

TEST_CASE("dimensions are invariant under basis shuffling", "[cohomology]") {
    for (const Algebra& a : {zero_lts(2), nonabelian2_lts()}) {
        Rep ad = adjoint_rep(a);
        auto plain = cohomology_table(a, ad, 3);
        for (std::uint64_t seed : {1u, 99u}) {
            auto shuffled = cohomology_table(a, ad, 3, seed);
            REQUIRE(shuffled.h_dims == plain.h_dims);
            REQUIRE(shuffled.delta_ranks == plain.delta_ranks);
        }
    }
}

TEST_CASE("independent route for ker(delta_1) on sl2", "[cohomology]") {
    // delta f(x(x)y, z) = -f([x,y,z]) + [f(z),y,x] - [f(z),x,y]
    //                     + [f(x),y,z] - [f(y),x,z]
    // written directly as a matrix on the 9 entries of f, with unknowns
    // f(s) = sum_img f_{s,img} e_img laid out as s*3 + img.
    Algebra a = sl2_lts();
    const std::uint32_t d = 3;
    std::vector<Rat> rows;
    std::size_t nrows = 0;
    for (std::uint32_t x = 0; x < d; ++x)
        for (std::uint32_t y = 0; y < d; ++y)
            for (std::uint32_t z = 0; z < d; ++z)
                for (std::uint32_t out = 0; out < d; ++out) {
                    std::vector<Rat> row(d * d, Rat(0));
                    const Vec br = a.bracket({x, y, z});
                    for (std::uint32_t s = 0; s < d; ++s)
                        row[s * d + out] -= br[s];
                    for (std::uint32_t img = 0; img < d; ++img) {
                        row[z * d + img] += a.bracket({img, y, x})[out] -
                                            a.bracket({img, x, y})[out];
                        row[x * d + img] += a.bracket({img, y, z})[out];
                        row[y * d + img] -= a.bracket({img, x, z})[out];
                    }
                    rows.insert(rows.end(), row.begin(), row.end());
                    ++nrows;
                }
    Mat delta1(nrows, d * d, std::move(rows));
    REQUIRE(lts::rank(delta1) == 6);
    REQUIRE(lts::kernel_basis(delta1).size() == 3);
}

TEST_CASE("inner left multiplications are 1-cocycles", "[cohomology]") {
    for (const Algebra& a : {sl2_lts(), nonabelian2_lts()}) {
        Rep ad = adjoint_rep(a);
        for (std::uint32_t i = 0; i < a.dim(); ++i)
            for (std::uint32_t j = 0; j < a.dim(); ++j) {
                MultiMap l = MultiMap::uniform(a.space, 1, a.space);
                for (std::uint32_t z = 0; z < a.dim(); ++z)
                    l.set({z}, a.bracket({i, j, z}));
                if (l.is_zero()) continue;
                REQUIRE(is_cocycle(a, ad, LTSCochain(1, l)));
            }
    }
}

TEST_CASE("coboundaries are cocycles", "[cohomology]") {
    Algebra a = nonabelian2_lts();
    Rep ad = adjoint_rep(a);
    CochainBasis basis = cochain_basis(a, ad, 1);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        LTSCochain df = coboundary(a, ad, basis.element(i));
        REQUIRE(is_cocycle(a, ad, df));
    }
    REQUIRE(is_cocycle(a, ad, LTSCochain(2, MultiMap::uniform(a.space, 3, a.space))));
}

TEST_CASE("main oracle: delta equals the signed controlling bracket",
          "[cohomology]") {
    for (const Algebra& a : {zero_lts(2), nonabelian2_lts(), sl2_lts()}) {
        for (std::size_t n : {1u, 2u}) {
            CheckReport r = oracle_delta_vs_bracket(a, n);
            INFO("degree " << n);
            REQUIRE(r.passed());
        }
    }
}

TEST_CASE("oracle rejects wrong inputs", "[cohomology]") {
    REQUIRE_THROWS_AS(oracle_delta_vs_bracket(sl2_lie(), 1), usage_error);
    REQUIRE_THROWS_AS(oracle_delta_vs_bracket(sl2_lts(), 0), usage_error);
    Algebra a = zero_lts(2);
    REQUIRE_THROWS_AS(cohomology_dims(a, trivial_rep(a, 1), 0), usage_error);
}
