#ifndef LTS_ALGEBRA_HPP
#define LTS_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lts/errors.hpp"
#include "lts/matrix.hpp"
#include "lts/multimap.hpp"
#include "lts/report.hpp"
#include "lts/space.hpp"

namespace lts {

enum class AlgebraKind { leibniz, nambu, lts, lie };

inline std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::leibniz: return "leibniz";
        case AlgebraKind::nambu: return "nambu";
        case AlgebraKind::lts: return "lts";
        case AlgebraKind::lie: return "lie";
    }
    return "?";
}

inline std::size_t kind_arity(AlgebraKind k) {
    return (k == AlgebraKind::leibniz || k == AlgebraKind::lie) ? 2 : 3;
}

// A finite-dimensional algebra given by structure constants.  The defining
// identities of `kind` are not enforced at construction; the checkers below
// verify them on demand.
struct Algebra {
    AlgebraKind kind;
    Space space;
    MultiMap structure;

    Algebra(AlgebraKind kind, Space sp, MultiMap st)
        : kind(kind), space(std::move(sp)), structure(std::move(st)) {
        if (structure.arity() != kind_arity(kind))
            throw usage_error("structure arity does not match algebra kind");
        for (const Space& d : structure.domains())
            if (d != space) throw usage_error("structure domain mismatch");
        if (structure.codomain() != space)
            throw usage_error("structure codomain mismatch");
    }

    static Algebra zero(AlgebraKind kind, Space sp) {
        MultiMap st = MultiMap::uniform(sp, kind_arity(kind), sp);
        return Algebra(kind, sp, std::move(st));
    }

    std::size_t dim() const { return space.dim; }

    Vec bracket(const Key& key) const { return structure.value(key); }
};

namespace detail {

inline void record(CheckReport& rep, const std::string& identity, const Key& key,
                   const std::vector<Space>& domains, Vec lhs, Vec rhs) {
    if (lhs == rhs) return;
    rep.violations.push_back(
        {identity, key, label_tuple(key, domains), std::move(lhs), std::move(rhs)});
}

}  // namespace detail

// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples.
inline CheckReport check_leibniz(const Algebra& a) {
    if (a.structure.arity() != 2)
        throw usage_error("check_leibniz requires a binary bracket");
    CheckReport rep;
    rep.identities = {"leibniz"};
    const std::size_t d = a.dim();
    const std::vector<Space> doms(3, a.space);
    using AR = MultiMap::ArgRef;
    TupleRange({d, d, d}).for_each([&](const Key& k) {
        const std::uint32_t x = k[0], y = k[1], z = k[2];
        Vec lhs = a.structure.eval_mixed({AR::basis(x), AR::vector(a.bracket({y, z}))});
        Vec rhs = add(
            a.structure.eval_mixed({AR::vector(a.bracket({x, y})), AR::basis(z)}),
            a.structure.eval_mixed({AR::basis(y), AR::vector(a.bracket({x, z}))}));
        detail::record(rep, "leibniz", k, doms, std::move(lhs), std::move(rhs));
    });
    return rep;
}

// Fundamental identity
// [x,y,[z,w,u]] = [[x,y,z],w,u] + [z,[x,y,w],u] + [z,w,[x,y,u]]
// on all basis 5-tuples.
inline CheckReport check_nambu(const Algebra& a) {
    if (a.kind != AlgebraKind::nambu && a.kind != AlgebraKind::lts)
        throw usage_error("check_nambu requires kind nambu or lts");
    CheckReport rep;
    rep.identities = {"fundamental"};
    const std::size_t d = a.dim();
    const std::vector<Space> doms(5, a.space);
    using AR = MultiMap::ArgRef;
    TupleRange({d, d, d, d, d}).for_each([&](const Key& k) {
        const std::uint32_t x = k[0], y = k[1], z = k[2], w = k[3], u = k[4];
        Vec lhs = a.structure.eval_mixed(
            {AR::basis(x), AR::basis(y), AR::vector(a.bracket({z, w, u}))});
        Vec rhs = a.structure.eval_mixed(
            {AR::vector(a.bracket({x, y, z})), AR::basis(w), AR::basis(u)});
        axpy(rhs, Rat(1),
             a.structure.eval_mixed(
                 {AR::basis(z), AR::vector(a.bracket({x, y, w})), AR::basis(u)}));
        axpy(rhs, Rat(1),
             a.structure.eval_mixed(
                 {AR::basis(z), AR::basis(w), AR::vector(a.bracket({x, y, u}))}));
        detail::record(rep, "fundamental", k, doms, std::move(lhs), std::move(rhs));
    });
    return rep;
}

// (lts1) as antisymmetry in the first two slots (equivalent to [x,x,y] = 0
// over Q by polarization), (lts2) as the cyclic sum on basis triples, and
// (lts3) as the fundamental identity on basis 5-tuples.
inline CheckReport check_lts(const Algebra& a) {
    if (a.kind != AlgebraKind::lts)
        throw usage_error("check_lts requires kind lts");
    CheckReport rep;
    rep.identities = {"lts1", "lts2", "lts3"};
    const std::size_t d = a.dim();
    const std::vector<Space> doms(3, a.space);
    TupleRange({d, d, d}).for_each([&](const Key& k) {
        const std::uint32_t x = k[0], y = k[1], z = k[2];
        detail::record(rep, "lts1", k, doms, a.bracket({x, y, z}),
                       scale(Rat(-1), a.bracket({y, x, z})));
        Vec cyc = a.bracket({x, y, z});
        axpy(cyc, Rat(1), a.bracket({y, z, x}));
        axpy(cyc, Rat(1), a.bracket({z, x, y}));
        detail::record(rep, "lts2", k, doms, std::move(cyc), zero_vec(d));
    });
    CheckReport fi = check_nambu(Algebra(AlgebraKind::lts, a.space, a.structure));
    for (Violation& v : fi.violations) v.identity = "lts3";
    rep.violations.insert(rep.violations.end(), fi.violations.begin(),
                          fi.violations.end());
    return rep;
}

// Lie axioms: antisymmetry plus the (left) Leibniz identity, which for an
// antisymmetric bracket is the Jacobi identity.
inline CheckReport check_lie(const Algebra& a) {
    if (a.structure.arity() != 2)
        throw usage_error("check_lie requires a binary bracket");
    CheckReport rep;
    rep.identities = {"antisymmetry", "leibniz"};
    const std::size_t d = a.dim();
    const std::vector<Space> doms2(2, a.space);
    TupleRange({d, d}).for_each([&](const Key& k) {
        detail::record(rep, "antisymmetry", k, doms2, a.bracket({k[0], k[1]}),
                       scale(Rat(-1), a.bracket({k[1], k[0]})));
    });
    CheckReport lb = check_leibniz(a);
    rep.violations.insert(rep.violations.end(), lb.violations.begin(),
                          lb.violations.end());
    return rep;
}

// Representation rho: (x)^2 g -> gl(V) of a Lie triple system, stored as a
// bilinear table of dim(V) x dim(V) matrices on basis pairs.
struct Rep {
    Algebra base;          // kind lts
    Space module;          // V
    std::map<std::pair<std::uint32_t, std::uint32_t>, Mat> rho_table;

    Rep(Algebra b, Space v) : base(std::move(b)), module(std::move(v)) {
        if (base.kind != AlgebraKind::lts)
            throw usage_error("representation base must be an lts");
    }

    void set_rho(std::uint32_t i, std::uint32_t j, Mat m) {
        if (i >= base.dim() || j >= base.dim())
            throw usage_error("rho index out of range");
        if (m.rows() != module.dim || m.cols() != module.dim)
            throw usage_error("rho matrix shape mismatch");
        if (m.is_zero())
            rho_table.erase({i, j});
        else
            rho_table[{i, j}] = std::move(m);
    }

    Mat rho(std::uint32_t i, std::uint32_t j) const {
        auto it = rho_table.find({i, j});
        if (it == rho_table.end()) return Mat(module.dim, module.dim);
        return it->second;
    }

    // Bilinear extension to arbitrary arguments.
    Mat rho_vec(const Vec& x, const Vec& y) const {
        Mat out(module.dim, module.dim);
        for (const auto& [idx, m] : rho_table) {
            const Rat c = x[idx.first] * y[idx.second];
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < module.dim; ++r)
                for (std::size_t s = 0; s < module.dim; ++s)
                    out.at(r, s) += c * m.at(r, s);
        }
        return out;
    }

    Mat rho_vec_basis(const Vec& x, std::uint32_t j) const {
        Mat out(module.dim, module.dim);
        for (std::uint32_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            auto it = rho_table.find({i, j});
            if (it == rho_table.end()) continue;
            for (std::size_t r = 0; r < module.dim; ++r)
                for (std::size_t s = 0; s < module.dim; ++s)
                    out.at(r, s) += x[i] * it->second.at(r, s);
        }
        return out;
    }

    Mat rho_basis_vec(std::uint32_t i, const Vec& y) const {
        Mat out(module.dim, module.dim);
        for (std::uint32_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            auto it = rho_table.find({i, j});
            if (it == rho_table.end()) continue;
            for (std::size_t r = 0; r < module.dim; ++r)
                for (std::size_t s = 0; s < module.dim; ++s)
                    out.at(r, s) += y[j] * it->second.at(r, s);
        }
        return out;
    }
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// The two defining identities of a representation, as exact matrix
// identities over End(V) on all basis tuples of the base space:
//   (rep-1) [rho(x2,x1)-rho(x1,x2), rho(y1,y2)]
//             = rho([x1,x2,y1],y2) + rho(y1,[x1,x2,y2])
//   (rep-2) rho(x1,[y1,y2,y3]) = rho(y2,y3)rho(x1,y1) - rho(y1,y3)rho(x1,y2)
//             + (rho(y2,y1)-rho(y1,y2))rho(x1,y3)
inline CheckReport check_representation(const Rep& r) {
    CheckReport pre = check_lts(r.base);
    if (!pre.passed())
        throw precondition_error("representation base fails check_lts");

    CheckReport rep;
    rep.identities = {"rep1", "rep2"};
    const std::size_t d = r.base.dim();
    const std::vector<Space> doms(4, r.base.space);

    auto record_mat = [&](const std::string& id, const Key& k, const Mat& lhs,
                          const Mat& rhs) {
        if (lhs == rhs) return;
        Vec l, rr;
        for (const Rat& x : lhs.entries()) l.push_back(x);
        for (const Rat& x : rhs.entries()) rr.push_back(x);
        rep.violations.push_back(
            {id, k, label_tuple(k, doms), std::move(l), std::move(rr)});
    };

    TupleRange({d, d, d, d}).for_each([&](const Key& k) {
        {
            // rep-1 at (x1,x2,y1,y2) = (k0,k1,k2,k3)
            Mat lhs = commutator(r.rho(k[1], k[0]) - r.rho(k[0], k[1]),
                                 r.rho(k[2], k[3]));
            Mat rhs = r.rho_vec_basis(r.base.bracket({k[0], k[1], k[2]}), k[3]) +
                      r.rho_basis_vec(k[2], r.base.bracket({k[0], k[1], k[3]}));
            record_mat("rep1", k, lhs, rhs);
        }
        {
            // rep-2 at (x1,y1,y2,y3) = (k0,k1,k2,k3)
            Mat lhs = r.rho_basis_vec(k[0], r.base.bracket({k[1], k[2], k[3]}));
            Mat rhs = r.rho(k[2], k[3]) * r.rho(k[0], k[1]) -
                      r.rho(k[1], k[3]) * r.rho(k[0], k[2]) +
                      (r.rho(k[2], k[1]) - r.rho(k[1], k[2])) * r.rho(k[0], k[3]);
            record_mat("rep2", k, lhs, rhs);
        }
    });
    return rep;
}

// Adjoint representation ad_{x,y} z = [z,x,y].
inline Rep adjoint_rep(const Algebra& a) {
    if (a.kind != AlgebraKind::lts)
        throw usage_error("adjoint_rep requires kind lts");
    Rep r(a, a.space);
    const std::size_t d = a.dim();
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            Mat m(d, d);
            for (std::uint32_t z = 0; z < d; ++z) {
                const Vec col = a.bracket({z, i, j});
                for (std::size_t rix = 0; rix < d; ++rix) m.at(rix, z) = col[rix];
            }
            r.set_rho(i, j, std::move(m));
        }
    return r;
}

// The Leibniz bracket on the tensor square induced by a triple bracket:
// [x(x)y, z(x)w] = [x,y,z](x)w + z(x)[x,y,w], extended bilinearly over the
// lexicographic pair basis.
inline Algebra induced_leibniz(const Algebra& a) {
    if (a.kind != AlgebraKind::nambu && a.kind != AlgebraKind::lts)
        throw usage_error("induced_leibniz requires kind nambu or lts");
    const Space w = tensor_square(a.space);
    MultiMap st = MultiMap::uniform(w, 2, w);
    const std::size_t d = a.dim();
    TupleRange({d, d, d, d}).for_each([&](const Key& k) {
        // first pair (x,y) = (k0,k1), second pair (z,w) = (k2,k3)
        Vec val = tensor_right(a.space, a.bracket({k[0], k[1], k[2]}), k[3]);
        axpy(val, Rat(1), tensor_left(a.space, k[2], a.bracket({k[0], k[1], k[3]})));
        st.set({static_cast<std::uint32_t>(pair_index(a.space, k[0], k[1])),
                static_cast<std::uint32_t>(pair_index(a.space, k[2], k[3]))},
               std::move(val));
    });
    return Algebra(AlgebraKind::leibniz, w, std::move(st));
}

// The standard Lie triple system on a Lie algebra: [x,y,z] := [[x,y],z].
inline Algebra lts_from_lie(const Algebra& lie) {
    if (lie.kind != AlgebraKind::lie)
        throw usage_error("lts_from_lie requires kind lie");
    if (!check_lie(lie).passed())
        throw precondition_error("lts_from_lie: input fails the Lie axioms");
    MultiMap st = MultiMap::uniform(lie.space, 3, lie.space);
    const std::size_t d = lie.dim();
    using AR = MultiMap::ArgRef;
    TupleRange({d, d, d}).for_each([&](const Key& k) {
        st.set(k, lie.structure.eval_mixed(
                      {AR::vector(lie.bracket({k[0], k[1]})), AR::basis(k[2])}));
    });
    return Algebra(AlgebraKind::lts, lie.space, std::move(st));
}

}  // namespace lts

#endif
