#ifndef LTS_CORPUS_HPP
#define LTS_CORPUS_HPP

#include <cstdint>
#include <random>

#include "lts/algebra.hpp"

namespace lts {

// Small named algebras used across the test corpus and the data files.

inline Algebra zero_lts(std::size_t dim) {
    return Algebra::zero(AlgebraKind::lts, Space(dim));
}

// sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h, basis order (e, f, h).
inline Algebra sl2_lie() {
    Space g({"e", "f", "h"});
    MultiMap st = MultiMap::uniform(g, 2, g);
    const std::uint32_t E = 0, F = 1, H = 2;
    st.set({H, E}, scale(Rat(2), unit_vec(3, E)));
    st.set({E, H}, scale(Rat(-2), unit_vec(3, E)));
    st.set({H, F}, scale(Rat(-2), unit_vec(3, F)));
    st.set({F, H}, scale(Rat(2), unit_vec(3, F)));
    st.set({E, F}, unit_vec(3, H));
    st.set({F, E}, scale(Rat(-1), unit_vec(3, H)));
    return Algebra(AlgebraKind::lie, g, std::move(st));
}

inline Algebra sl2_lts() { return lts_from_lie(sl2_lie()); }

// The 2-dimensional nonabelian Lie algebra [e0,e1] = e1.
inline Algebra nonabelian2_lie() {
    Space g(2);
    MultiMap st = MultiMap::uniform(g, 2, g);
    st.set({0, 1}, unit_vec(2, 1));
    st.set({1, 0}, scale(Rat(-1), unit_vec(2, 1)));
    return Algebra(AlgebraKind::lie, g, std::move(st));
}

inline Algebra nonabelian2_lts() { return lts_from_lie(nonabelian2_lie()); }

// so(3): [e0,e1] = e2, [e1,e2] = e0, [e2,e0] = e1.
inline Algebra so3_lie() {
    Space g(3);
    MultiMap st = MultiMap::uniform(g, 2, g);
    auto set_pair = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        st.set({a, b}, unit_vec(3, c));
        st.set({b, a}, scale(Rat(-1), unit_vec(3, c)));
    };
    set_pair(0, 1, 2);
    set_pair(1, 2, 0);
    set_pair(2, 0, 1);
    return Algebra(AlgebraKind::lie, g, std::move(st));
}

inline Algebra so3_lts() { return lts_from_lie(so3_lie()); }

// dim-1 bracket pi(e,e,e) = e.  Fails the fundamental identity (it forces
// c^2 = 3c^2), so this is the corpus non-Nambu counterexample.
inline Algebra non_nambu_dim1() {
    Space g(1);
    MultiMap st = MultiMap::uniform(g, 3, g);
    st.set({0, 0, 0}, unit_vec(1, 0));
    return Algebra(AlgebraKind::nambu, g, std::move(st));
}

// dim-2 bracket with the single entry pi(e1,e1,e1) = e0.  Satisfies the
// fundamental identity but not (lts1): a Nambu algebra that is not an LTS.
inline Algebra nambu_not_lts_dim2() {
    Space g(2);
    MultiMap st = MultiMap::uniform(g, 3, g);
    st.set({1, 1, 1}, unit_vec(2, 0));
    return Algebra(AlgebraKind::nambu, g, std::move(st));
}

// Transport an algebra's structure along an invertible change of basis S:
// pi'(x,y,z) = S^{-1} pi(Sx, Sy, Sz).  Axioms are preserved exactly.
inline Algebra conjugate(const Algebra& a, const Mat& s) {
    auto sinv = inverse(s);
    if (!sinv) throw usage_error("conjugate: matrix not invertible");
    const std::size_t d = a.dim();
    const std::size_t ar = a.structure.arity();
    MultiMap st = MultiMap::uniform(a.space, ar, a.space);
    std::vector<std::size_t> dims(ar, d);
    TupleRange(dims).for_each([&](const Key& k) {
        std::vector<Vec> args;
        args.reserve(ar);
        for (std::uint32_t idx : k) args.push_back(s.apply(unit_vec(d, idx)));
        st.set(k, sinv->apply(a.structure.eval(args)));
    });
    return Algebra(a.kind, a.space, std::move(st));
}

// A deterministic pseudorandom LTS: sl2 conjugated by a seeded unimodular-ish
// change of basis with small integer entries.
inline Algebra random_lts_dim3(std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2);
    Mat s(3, 3);
    do {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s.at(i, j) = Rat(small(rng));
    } while (!inverse(s));
    return conjugate(sl2_lts(), s);
}

}  // namespace lts

#endif
