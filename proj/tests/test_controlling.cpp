#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lts/controlling.hpp"
#include "lts/corpus.hpp"

using namespace lts;

namespace {

// Dense random cochain with small rational entries.
CCochain random_ccochain(std::mt19937_64& rng, const Space& g, std::size_t degree,
                         int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    MultiMap m = MultiMap::uniform(g, 2 * degree + 1, g);
    TupleRange(std::vector<std::size_t>(2 * degree + 1, g.dim)).for_each([&](const Key& k) {
        Vec v(g.dim);
        for (auto& c : v) c = Rat(coeff(rng));
        m.set(k, std::move(v));
    });
    return CCochain(degree, std::move(m));
}

CLCochain random_clcochain(std::mt19937_64& rng, const Space& b, std::size_t degree) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    MultiMap m = MultiMap::uniform(b, degree + 1, b);
    TupleRange(std::vector<std::size_t>(degree + 1, b.dim)).for_each([&](const Key& k) {
        Vec v(b.dim);
        for (auto& c : v) c = Rat(coeff(rng));
        m.set(k, std::move(v));
    });
    return CLCochain(degree, std::move(m));
}

}  // namespace

TEST_CASE("Balavoine bracket: degree-1 expansion matches the closed form",
          "[controlling]") {
    std::mt19937_64 rng(11);
    for (std::size_t d : {1u, 2u, 3u}) {
        Space g(d);
        CLCochain omega = random_clcochain(rng, g, 1);
        CLCochain br = balavoine_bracket(omega, omega);
        using AR = MultiMap::ArgRef;
        TupleRange({d, d, d}).for_each([&](const Key& k) {
            const std::uint32_t x1 = k[0], x2 = k[1], x3 = k[2];
            auto om = [&](std::uint32_t a, std::uint32_t b) {
                return omega.map.value({a, b});
            };
            Vec expect =
                omega.map.eval_mixed({AR::vector(om(x1, x2)), AR::basis(x3)});
            axpy(expect, Rat(-1),
                 omega.map.eval_mixed({AR::basis(x1), AR::vector(om(x2, x3))}));
            axpy(expect, Rat(1),
                 omega.map.eval_mixed({AR::basis(x2), AR::vector(om(x1, x3))}));
            REQUIRE(br.map.value(k) == scale(Rat(2), expect));
        });
    }
}

TEST_CASE("Balavoine bracket: zero operands and the sl2 Maurer-Cartan element",
          "[controlling]") {
    Space g(2);
    std::mt19937_64 rng(3);
    CLCochain z = CLCochain::zero(1, g);
    CLCochain q = random_clcochain(rng, g, 2);
    REQUIRE(balavoine_bracket(z, q).map.is_zero());
    REQUIRE(balavoine_bracket(q, z).map.is_zero());

    // the commutator bracket of a Lie algebra is a Leibniz structure
    Algebra sl2 = sl2_lie();
    CLCochain omega(1, sl2.structure);
    REQUIRE(balavoine_bracket(omega, omega).map.is_zero());
}

TEST_CASE("Balavoine bracket: graded antisymmetry and Jacobi", "[controlling]") {
    std::mt19937_64 rng(21);
    Space g(2);
    for (int trial = 0; trial < 6; ++trial) {
        CLCochain p = random_clcochain(rng, g, trial % 3);
        CLCochain q = random_clcochain(rng, g, (trial + 1) % 3);
        CLCochain r = random_clcochain(rng, g, (trial + 2) % 3);

        const int s = ((p.degree * q.degree) % 2 == 0) ? 1 : -1;
        REQUIRE(balavoine_bracket(p, q).map ==
                scale(Rat(-s), balavoine_bracket(q, p).map));

        auto jac = [&](const CLCochain& a, const CLCochain& b, const CLCochain& c) {
            return scale(Rat(((a.degree * c.degree) % 2 == 0) ? 1 : -1),
                         balavoine_bracket(balavoine_bracket(a, b), c).map);
        };
        MultiMap total = add(add(jac(p, q, r), jac(q, r, p)), jac(r, p, q));
        REQUIRE(total.is_zero());
    }
}

TEST_CASE("phi embed on the spec examples", "[controlling]") {
    Space g(2);
    SECTION("zero maps to zero") {
        REQUIRE(phi_embed(CCochain::zero(1, g)).map.is_zero());
    }
    SECTION("identity at degree 0 doubles decomposables") {
        MultiMap idm = MultiMap::uniform(g, 1, g);
        for (std::uint32_t i = 0; i < 2; ++i) idm.set({i}, unit_vec(2, i));
        CLCochain e = phi_embed(CCochain(0, idm));
        for (std::uint32_t w = 0; w < 4; ++w)
            REQUIRE(e.map.value({w}) == scale(Rat(2), unit_vec(4, w)));
    }
    SECTION("phi of an LTS structure map is the induced Leibniz bracket") {
        Algebra a = sl2_lts();
        CLCochain e = phi_embed(CCochain(1, a.structure));
        Algebra lb = induced_leibniz(a);
        REQUIRE(e.map == lb.structure);
    }
}

TEST_CASE("phi_invert is a left inverse of phi_embed", "[controlling]") {
    std::mt19937_64 rng(31);
    for (std::size_t d : {1u, 2u}) {
        Space g(d);
        for (std::size_t deg : {0u, 1u, 2u}) {
            CCochain f = random_ccochain(rng, g, deg);
            CCochain back = phi_invert(phi_embed(f), g);
            REQUIRE(back.map == f.map);
        }
    }
}

TEST_CASE("c_bracket: degree-1 expansion matches the paper's closed form",
          "[controlling]") {
    std::mt19937_64 rng(41);
    for (std::size_t d : {1u, 2u, 3u}) {
        Space g(d);
        // arbitrary trilinear map, no axioms assumed
        CCochain pi = random_ccochain(rng, g, 1);
        CCochain br = c_bracket(pi, pi);
        using AR = MultiMap::ArgRef;
        auto P = [&](const std::vector<MultiMap::ArgRef>& a) {
            return pi.map.eval_mixed(a);
        };
        TupleRange({d, d, d, d, d}).for_each([&](const Key& k) {
            const std::uint32_t x1 = k[0], y1 = k[1], x2 = k[2], y2 = k[3], x = k[4];
            Vec t1 = P({AR::vector(pi.map.value({x1, y1, x2})), AR::basis(y2), AR::basis(x)});
            Vec t2 = P({AR::basis(x2), AR::vector(pi.map.value({x1, y1, y2})), AR::basis(x)});
            Vec t3 = P({AR::basis(x1), AR::basis(y1), AR::vector(pi.map.value({x2, y2, x}))});
            Vec t4 = P({AR::basis(x2), AR::basis(y2), AR::vector(pi.map.value({x1, y1, x}))});
            Vec expect = add(t1, t2);
            axpy(expect, Rat(-1), t3);
            axpy(expect, Rat(1), t4);
            REQUIRE(br.map.value(k) == scale(Rat(2), expect));
        });
    }
}

TEST_CASE("c_bracket agrees with the transport through phi", "[controlling]") {
    std::mt19937_64 rng(51);
    Space g(2);
    for (int trial = 0; trial < 8; ++trial) {
        CCochain p = random_ccochain(rng, g, trial % 3);
        CCochain q = random_ccochain(rng, g, (trial / 2) % 2);
        CCochain direct = c_bracket(p, q);
        CCochain via = c_bracket_via_phi(p, q);
        REQUIRE(direct.map == via.map);
    }
}

TEST_CASE("phi is a homomorphism of graded Lie algebras", "[controlling]") {
    std::mt19937_64 rng(61);
    Space g(2);
    for (int trial = 0; trial < 6; ++trial) {
        CCochain p = random_ccochain(rng, g, trial % 3);
        CCochain q = random_ccochain(rng, g, (trial + 1) % 3);
        CLCochain lhs = phi_embed(c_bracket(p, q));
        CLCochain rhs = balavoine_bracket(phi_embed(p), phi_embed(q));
        REQUIRE(lhs.map == rhs.map);
    }
}

TEST_CASE("c_bracket: graded antisymmetry and Jacobi", "[controlling]") {
    std::mt19937_64 rng(71);
    Space g(2);
    for (int trial = 0; trial < 4; ++trial) {
        CCochain p = random_ccochain(rng, g, trial % 2);
        CCochain q = random_ccochain(rng, g, (trial + 1) % 2);
        CCochain r = random_ccochain(rng, g, 1);

        const int s = ((p.degree * q.degree) % 2 == 0) ? 1 : -1;
        REQUIRE(c_bracket(p, q).map == scale(Rat(-s), c_bracket(q, p).map));

        auto jac = [&](const CCochain& a, const CCochain& b, const CCochain& c) {
            return scale(Rat(((a.degree * c.degree) % 2 == 0) ? 1 : -1),
                         c_bracket(c_bracket(a, b), c).map);
        };
        MultiMap total = add(add(jac(p, q, r), jac(q, r, p)), jac(r, p, q));
        REQUIRE(total.is_zero());
    }
}

TEST_CASE("is_lts_cochain on the spec examples", "[controlling]") {
    SECTION("structure maps of corpus LTS satisfy both conditions") {
        for (const Algebra& a : {sl2_lts(), nonabelian2_lts(), zero_lts(2)}) {
            LTSCochainFlag f = is_lts_cochain(CCochain(1, a.structure));
            REQUIRE(f.cond1);
            REQUIRE(f.cond2);
        }
    }
    SECTION("a fully symmetric trilinear map fails condition 1") {
        Space g(1);
        MultiMap m = MultiMap::uniform(g, 3, g);
        m.set({0, 0, 0}, unit_vec(1, 0));
        LTSCochainFlag f = is_lts_cochain(CCochain(1, m));
        REQUIRE(!f.cond1);
    }
    SECTION("det against a fixed vector: condition 1 holds, condition 2 fails") {
        Space g(3);
        MultiMap m = MultiMap::uniform(g, 3, g);
        int eps[3][3][3] = {};
        eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
        eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
        for (std::uint32_t a = 0; a < 3; ++a)
            for (std::uint32_t b = 0; b < 3; ++b)
                for (std::uint32_t c = 0; c < 3; ++c)
                    if (eps[a][b][c] != 0)
                        m.set({a, b, c}, scale(Rat(eps[a][b][c]), unit_vec(3, 0)));
        LTSCochainFlag f = is_lts_cochain(CCochain(1, m));
        REQUIRE(f.cond1);
        REQUIRE(!f.cond2);
    }
}

TEST_CASE("mc_defect characterizes the fundamental identity", "[controlling]") {
    REQUIRE(mc_defect(sl2_lts()).map.is_zero());
    REQUIRE(mc_defect(zero_lts(2)).map.is_zero());
    REQUIRE(mc_defect(nambu_not_lts_dim2()).map.is_zero());

    CCochain defect = mc_defect(non_nambu_dim1());
    REQUIRE(!defect.map.is_zero());
    REQUIRE(defect.map.value({0, 0, 0, 0, 0}) == Vec{Rat(4)});
}

TEST_CASE("MC characterization against the brute-force checkers", "[controlling]") {
    std::vector<Algebra> corpus = {zero_lts(3), sl2_lts(), nonabelian2_lts(),
                                   random_lts_dim3(), nambu_not_lts_dim2(),
                                   non_nambu_dim1()};
    for (const Algebra& a : corpus) {
        Algebra as_nambu(AlgebraKind::nambu, a.space, a.structure);
        const bool nambu_ok = check_nambu(as_nambu).passed();
        REQUIRE(nambu_ok == mc_defect(as_nambu).map.is_zero());

        Algebra as_lts(AlgebraKind::lts, a.space, a.structure);
        const bool lts_ok = check_lts(as_lts).passed();
        const bool mc_ok = mc_defect(as_lts).map.is_zero() &&
                           is_lts_cochain(CCochain(1, a.structure)).both();
        REQUIRE(lts_ok == mc_ok);
    }
}
