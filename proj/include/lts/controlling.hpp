#ifndef LTS_CONTROLLING_HPP
#define LTS_CONTROLLING_HPP

#include <cstdint>
#include <vector>

#include "lts/algebra.hpp"
#include "lts/errors.hpp"
#include "lts/multimap.hpp"
#include "lts/shuffle.hpp"
#include "lts/space.hpp"

namespace lts {

// Degree-n element of CL^*(B,B) = Hom((x)^{n+1} B, B).
struct CLCochain {
    std::size_t degree;
    MultiMap map;

    CLCochain(std::size_t degree, MultiMap m) : degree(degree), map(std::move(m)) {
        if (map.arity() != degree + 1)
            throw usage_error("CL cochain arity must be degree + 1");
        for (const Space& s : map.domains())
            if (s != map.codomain())
                throw usage_error("CL cochain must map powers of one space to itself");
    }

    static CLCochain zero(std::size_t degree, const Space& base) {
        return CLCochain(degree, MultiMap::uniform(base, degree + 1, base));
    }

    const Space& base() const { return map.codomain(); }
};

// Degree-p element of C^*(g,g) = Hom((x)^{2p+1} g, g), stored slotwise over g.
// The first 2p slots pair up into the tensor-square arguments of the paper's
// formulas; the bracket evaluations below always feed them decomposable
// basis pairs.
struct CCochain {
    std::size_t degree;
    MultiMap map;

    CCochain(std::size_t degree, MultiMap m) : degree(degree), map(std::move(m)) {
        if (map.arity() != 2 * degree + 1)
            throw usage_error("C cochain arity must be 2*degree + 1");
        for (const Space& s : map.domains())
            if (s != map.codomain())
                throw usage_error("C cochain must map powers of one space to itself");
    }

    static CCochain zero(std::size_t degree, const Space& base) {
        return CCochain(degree, MultiMap::uniform(base, 2 * degree + 1, base));
    }

    const Space& base() const { return map.codomain(); }
};

namespace detail {

inline int pow_sign(std::size_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace detail

// P obar Q = sum_k P o_k Q with
//   (P o_k Q)(x_1..x_{p+q+1}) =
//     sum_{sigma in S(k-1,q)} (-1)^{(k-1)q} sgn(sigma)
//       P(x_{s(1)},..,x_{s(k-1)}, Q(x_{s(k)},..,x_{s(k+q-1)}, x_{k+q}),
//         x_{k+q+1},..,x_{p+q+1}).
inline CLCochain balavoine_compose(const CLCochain& P, const CLCochain& Q) {
    if (P.base() != Q.base())
        throw usage_error("Balavoine composition: base space mismatch");
    const std::size_t p = P.degree, q = Q.degree, d = P.base().dim;
    MultiMap out = MultiMap::uniform(P.base(), p + q + 1, P.base());
    using AR = MultiMap::ArgRef;

    std::vector<std::vector<Shuffle>> shuf(p + 1);
    for (std::size_t m = 0; m <= p; ++m) shuf[m] = shuffles(m, q);

    TupleRange(std::vector<std::size_t>(p + q + 1, d)).for_each([&](const Key& t) {
        Vec acc = zero_vec(d);
        for (std::size_t m = 0; m <= p; ++m) {  // m = k-1
            const int ksign = detail::pow_sign(m * q);
            for (const Shuffle& s : shuf[m]) {
                Key qkey(q + 1);
                for (std::size_t i = 0; i < q; ++i) qkey[i] = t[s.perm[m + i]];
                qkey[q] = t[m + q];
                const Vec* qv = Q.map.find(qkey);
                if (!qv) continue;
                std::vector<AR> pargs;
                pargs.reserve(p + 1);
                for (std::size_t i = 0; i < m; ++i)
                    pargs.push_back(AR::basis(t[s.perm[i]]));
                pargs.push_back(AR::vector(*qv));
                for (std::size_t pos = m + q + 1; pos <= p + q; ++pos)
                    pargs.push_back(AR::basis(t[pos]));
                axpy(acc, Rat(ksign * s.sign), P.map.eval_mixed(pargs));
            }
        }
        out.set(t, std::move(acc));
    });
    return CLCochain(p + q, std::move(out));
}

// [P,Q]_B = P obar Q - (-1)^{pq} Q obar P.
inline CLCochain balavoine_bracket(const CLCochain& P, const CLCochain& Q) {
    CLCochain pq = balavoine_compose(P, Q);
    CLCochain qp = balavoine_compose(Q, P);
    const int s = detail::pow_sign(P.degree * Q.degree);
    return CLCochain(P.degree + Q.degree, sub(pq.map, scale(Rat(s), qp.map)));
}

// P o Q = sum_{k=1}^{p+1} (-1)^{(k-1)q} P o_k Q with o_k as in the tensor
// formulas: for k <= p the two insertion terms (left and right factor of the
// split pair), and o_{p+1} plugging Q into the final vector slot.
inline CCochain c_compose(const CCochain& P, const CCochain& Q) {
    if (P.base() != Q.base())
        throw usage_error("bracket composition: base space mismatch");
    const std::size_t p = P.degree, q = Q.degree, d = P.base().dim;
    const std::size_t pairs = p + q;
    MultiMap out = MultiMap::uniform(P.base(), 2 * pairs + 1, P.base());
    using AR = MultiMap::ArgRef;

    std::vector<std::vector<Shuffle>> shuf(p + 1);
    for (std::size_t m = 0; m < p; ++m) shuf[m] = shuffles(m, q);
    shuf[p] = shuffles(p, q);

    TupleRange(std::vector<std::size_t>(2 * pairs + 1, d)).for_each([&](const Key& t) {
        const std::uint32_t x = t[2 * pairs];
        Vec acc = zero_vec(d);

        // k = 1..p: insertion into a split pair
        for (std::size_t m = 0; m + 1 <= p; ++m) {  // m = k-1 <= p-1
            const int ksign = detail::pow_sign(m * q);
            for (const Shuffle& s : shuf[m]) {
                Key qkey(2 * q + 1);
                for (std::size_t i = 0; i < q; ++i) {
                    const std::size_t pi = s.perm[m + i];
                    qkey[2 * i] = t[2 * pi];
                    qkey[2 * i + 1] = t[2 * pi + 1];
                }
                for (int side = 0; side < 2; ++side) {
                    // side 0: Q eats the left factor of pair m+q, the right
                    // stays; side 1: the mirror term.
                    qkey[2 * q] = t[2 * (m + q) + side];
                    const Vec* qv = Q.map.find(qkey);
                    if (!qv) continue;
                    std::vector<AR> pargs;
                    pargs.reserve(2 * p + 1);
                    for (std::size_t i = 0; i < m; ++i) {
                        const std::size_t pi = s.perm[i];
                        pargs.push_back(AR::basis(t[2 * pi]));
                        pargs.push_back(AR::basis(t[2 * pi + 1]));
                    }
                    if (side == 0) {
                        pargs.push_back(AR::vector(*qv));
                        pargs.push_back(AR::basis(t[2 * (m + q) + 1]));
                    } else {
                        pargs.push_back(AR::basis(t[2 * (m + q)]));
                        pargs.push_back(AR::vector(*qv));
                    }
                    for (std::size_t pi = m + q + 1; pi < pairs; ++pi) {
                        pargs.push_back(AR::basis(t[2 * pi]));
                        pargs.push_back(AR::basis(t[2 * pi + 1]));
                    }
                    pargs.push_back(AR::basis(x));
                    axpy(acc, Rat(ksign * s.sign), P.map.eval_mixed(pargs));
                }
            }
        }

        // k = p+1: plug Q into the final slot
        {
            const int ksign = detail::pow_sign(p * q);
            for (const Shuffle& s : shuf[p]) {
                Key qkey(2 * q + 1);
                for (std::size_t i = 0; i < q; ++i) {
                    const std::size_t pi = s.perm[p + i];
                    qkey[2 * i] = t[2 * pi];
                    qkey[2 * i + 1] = t[2 * pi + 1];
                }
                qkey[2 * q] = x;
                const Vec* qv = Q.map.find(qkey);
                if (!qv) continue;
                std::vector<AR> pargs;
                pargs.reserve(2 * p + 1);
                for (std::size_t i = 0; i < p; ++i) {
                    const std::size_t pi = s.perm[i];
                    pargs.push_back(AR::basis(t[2 * pi]));
                    pargs.push_back(AR::basis(t[2 * pi + 1]));
                }
                pargs.push_back(AR::vector(*qv));
                axpy(acc, Rat(ksign * s.sign), P.map.eval_mixed(pargs));
            }
        }

        out.set(t, std::move(acc));
    });
    return CCochain(p + q, std::move(out));
}

// [[P,Q]] = P o Q - (-1)^{pq} Q o P.
inline CCochain c_bracket(const CCochain& P, const CCochain& Q) {
    CCochain pq = c_compose(P, Q);
    CCochain qp = c_compose(Q, P);
    const int s = detail::pow_sign(P.degree * Q.degree);
    return CCochain(P.degree + Q.degree, sub(pq.map, scale(Rat(s), qp.map)));
}

// (Phi f)(X_1,..,X_p, x(x)y) = f(X_1,..,X_p,x)(x)y + x(x)f(X_1,..,X_p,y),
// written on the lexicographic pair basis of the tensor square.
inline CLCochain phi_embed(const CCochain& f) {
    const Space& g = f.base();
    const Space w = tensor_square(g);
    const std::size_t p = f.degree, d = g.dim;
    MultiMap out = MultiMap::uniform(w, p + 1, w);

    TupleRange(std::vector<std::size_t>(p + 1, d * d)).for_each([&](const Key& wk) {
        Key fkey(2 * p + 1);
        for (std::size_t i = 0; i < p; ++i) {
            fkey[2 * i] = wk[i] / d;
            fkey[2 * i + 1] = wk[i] % d;
        }
        const std::uint32_t k = wk[p] / d, m = wk[p] % d;
        fkey[2 * p] = k;
        const Vec fk = f.map.value(fkey);
        fkey[2 * p] = m;
        const Vec fm = f.map.value(fkey);
        Vec val = tensor_right(g, fk, m);
        axpy(val, Rat(1), tensor_left(g, k, fm));
        out.set(wk, std::move(val));
    });
    return CLCochain(p, std::move(out));
}

// Inverse of phi_embed on its image.  Entry recovery: for a != k the
// component at (a,0) of G(.., e_k (x) e_0) is f(..,e_k)_a, and the diagonal
// component of G(.., e_k (x) e_k) is 2 f(..,e_k)_k.
inline CCochain phi_invert(const CLCochain& G, const Space& g) {
    const std::size_t d = g.dim, p = G.degree;
    if (G.base().dim != d * d)
        throw usage_error("phi_invert: cochain does not live on the tensor square");
    MultiMap out = MultiMap::uniform(g, 2 * p + 1, g);

    TupleRange(std::vector<std::size_t>(2 * p, d)).for_each([&](const Key& lead) {
        Key gkey(p + 1);
        for (std::size_t i = 0; i < p; ++i)
            gkey[i] = static_cast<std::uint32_t>(pair_index(g, lead[2 * i], lead[2 * i + 1]));
        for (std::uint32_t k = 0; k < d; ++k) {
            Vec val = zero_vec(d);
            gkey[p] = static_cast<std::uint32_t>(pair_index(g, k, 0));
            const Vec gk0 = G.map.value(gkey);
            for (std::uint32_t a = 0; a < d; ++a)
                if (a != k) val[a] = gk0[pair_index(g, a, 0)];
            gkey[p] = static_cast<std::uint32_t>(pair_index(g, k, k));
            const Vec gkk = G.map.value(gkey);
            val[k] = gkk[pair_index(g, k, k)] / Rat(2);
            Key fkey(2 * p + 1);
            for (std::size_t i = 0; i < 2 * p; ++i) fkey[i] = lead[i];
            fkey[2 * p] = k;
            out.set(fkey, std::move(val));
        }
    });
    return CCochain(p, std::move(out));
}

// Independent route for [[P,Q]]: transport through Phi and the Balavoine
// bracket, then invert.  Throws if the Balavoine bracket of embedded
// cochains ever leaves the image of Phi (it never should).
inline CCochain c_bracket_via_phi(const CCochain& P, const CCochain& Q) {
    if (P.base() != Q.base())
        throw usage_error("bracket: base space mismatch");
    CLCochain b = balavoine_bracket(phi_embed(P), phi_embed(Q));
    CCochain f = phi_invert(b, P.base());
    if (phi_embed(f).map != b.map)
        throw internal_error("Balavoine bracket left the image of Phi");
    return f;
}

// Membership flags for the constrained subspace: condition 1 is the
// polarized antisymmetry Q(..,x,x,y) = 0 in the first two of the final
// three slots, condition 2 the vanishing cyclic sum over the final three.
struct LTSCochainFlag {
    bool cond1 = true;
    bool cond2 = true;
    bool both() const { return cond1 && cond2; }
};

inline LTSCochainFlag is_lts_cochain(const CCochain& Q) {
    LTSCochainFlag flag;
    const std::size_t p = Q.degree;
    if (p == 0) return flag;  // degree-0 maps are unconstrained members
    const std::size_t d = Q.base().dim, n = 2 * p + 1;
    const std::size_t s0 = n - 3;
    TupleRange(std::vector<std::size_t>(n, d)).for_each([&](const Key& t) {
        Key u = t;
        u[s0] = t[s0 + 1];
        u[s0 + 1] = t[s0];
        if (flag.cond1 && !is_zero(add(Q.map.value(t), Q.map.value(u)))) flag.cond1 = false;
        Key c1 = t, c2 = t;
        c1[s0] = t[s0 + 1]; c1[s0 + 1] = t[s0 + 2]; c1[s0 + 2] = t[s0];
        c2[s0] = t[s0 + 2]; c2[s0 + 1] = t[s0]; c2[s0 + 2] = t[s0 + 1];
        if (flag.cond2) {
            Vec sum = Q.map.value(t);
            axpy(sum, Rat(1), Q.map.value(c1));
            axpy(sum, Rat(1), Q.map.value(c2));
            if (!is_zero(sum)) flag.cond2 = false;
        }
    });
    return flag;
}

// The Maurer-Cartan defect [[pi,pi]]; zero exactly when the fundamental
// identity holds.
inline CCochain mc_defect(const Algebra& a) {
    if (a.kind != AlgebraKind::nambu && a.kind != AlgebraKind::lts)
        throw usage_error("mc_defect requires kind nambu or lts");
    CCochain pi(1, a.structure);
    return c_bracket(pi, pi);
}

}  // namespace lts

#endif
