#ifndef LTS_COHOMOLOGY_HPP
#define LTS_COHOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lts/algebra.hpp"
#include "lts/controlling.hpp"
#include "lts/errors.hpp"
#include "lts/matrix.hpp"
#include "lts/multimap.hpp"
#include "lts/report.hpp"

namespace lts {

// n-cochain f: (x)^{2n-1} g -> V.  For n >= 2 the final three slots carry
// the constraints: f(..,x,x,y) = 0 and the cyclic sum over the last three
// slots vanishes.
struct LTSCochain {
    std::size_t degree;
    MultiMap map;  // arity 2n-1, domains = g, codomain = V

    LTSCochain(std::size_t degree, MultiMap m) : degree(degree), map(std::move(m)) {
        if (degree < 1) throw usage_error("cochain degree must be >= 1");
        if (map.arity() != 2 * degree - 1)
            throw usage_error("cochain arity must be 2*degree - 1");
    }
};

inline bool satisfies_cochain_constraints(const MultiMap& f) {
    const std::size_t n = f.arity();
    if (n < 3) return true;
    const std::size_t d = f.domain(0).dim, s0 = n - 3;
    bool ok = true;
    TupleRange(std::vector<std::size_t>(n, d)).for_each([&](const Key& t) {
        if (!ok) return;
        Key u = t;
        u[s0] = t[s0 + 1];
        u[s0 + 1] = t[s0];
        if (!is_zero(add(f.value(t), f.value(u)))) { ok = false; return; }
        Key c1 = t, c2 = t;
        c1[s0] = t[s0 + 1]; c1[s0 + 1] = t[s0 + 2]; c1[s0 + 2] = t[s0];
        c2[s0] = t[s0 + 2]; c2[s0 + 1] = t[s0]; c2[s0 + 2] = t[s0 + 1];
        Vec sum = f.value(t);
        axpy(sum, Rat(1), f.value(c1));
        axpy(sum, Rat(1), f.value(c2));
        if (!is_zero(sum)) ok = false;
    });
    return ok;
}

// Basis of C^n_LTS(g;V).  The constraints only touch the final three slots,
// so the space factors as Hom((x)^{2n-4} g, T) with T the constrained
// trilinear block; a basis is the product of elementary leading tuples with
// a reduced-echelon kernel basis of the small trilinear constraint matrix
// (tensored with a module basis vector).  Coordinates are read off the free
// columns of that reduced form, which makes the correspondence exact and
// deterministic.
class CochainBasis {
public:
    CochainBasis(Space g, Space module, std::size_t degree)
        : g_(std::move(g)), module_(std::move(module)), degree_(degree) {
        if (degree_ < 1) throw usage_error("cochain degree must be >= 1");
        const std::size_t d = g_.dim;
        if (degree_ == 1) {
            dim_ = d * module_.dim;
        } else {
            build_trilinear_block(d);
            lead_count_ = 1;
            for (std::size_t i = 4; i < 2 * degree_; ++i) lead_count_ *= d;
            dim_ = lead_count_ * tri_basis_.size() * module_.dim;
        }
        order_.resize(dim_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
    }

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    const Space& base() const { return g_; }
    const Space& module() const { return module_; }

    // Permute the basis order deterministically (dimension counts must not
    // depend on this).
    void shuffle(std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::shuffle(order_.begin(), order_.end(), rng);
    }

    LTSCochain element(std::size_t i) const {
        if (i >= dim_) throw usage_error("cochain basis index out of range");
        const std::size_t raw = order_[i];
        MultiMap m(std::vector<Space>(2 * degree_ - 1, g_), module_);
        const std::size_t d = g_.dim;
        if (degree_ == 1) {
            m.set({static_cast<std::uint32_t>(raw / module_.dim)},
                  unit_vec(module_.dim, raw % module_.dim));
            return LTSCochain(degree_, std::move(m));
        }
        const std::size_t v = raw % module_.dim;
        const std::size_t t = (raw / module_.dim) % tri_basis_.size();
        std::size_t lead = raw / (module_.dim * tri_basis_.size());
        Key key(2 * degree_ - 1, 0);
        for (std::size_t s = 2 * degree_ - 4; s-- > 0;) {
            key[s] = static_cast<std::uint32_t>(lead % d);
            lead /= d;
        }
        const Vec& tri = tri_basis_[t];
        for (std::size_t abc = 0; abc < tri.size(); ++abc) {
            if (tri[abc].is_zero()) continue;
            key[2 * degree_ - 4] = static_cast<std::uint32_t>(abc / (d * d));
            key[2 * degree_ - 3] = static_cast<std::uint32_t>((abc / d) % d);
            key[2 * degree_ - 2] = static_cast<std::uint32_t>(abc % d);
            m.set(key, scale(tri[abc], unit_vec(module_.dim, v)));
        }
        return LTSCochain(degree_, std::move(m));
    }

    // Coefficient vector of a constrained cochain relative to this basis.
    Vec coordinates(const MultiMap& f) const {
        Vec raw = zero_vec(dim_);
        const std::size_t d = g_.dim;
        if (degree_ == 1) {
            for (std::uint32_t i = 0; i < d; ++i) {
                const Vec val = f.value({i});
                for (std::size_t v = 0; v < module_.dim; ++v)
                    raw[i * module_.dim + v] = val[v];
            }
        } else {
            for (std::size_t lead = 0; lead < lead_count_; ++lead) {
                Key key(2 * degree_ - 1, 0);
                std::size_t rest = lead;
                for (std::size_t s = 2 * degree_ - 4; s-- > 0;) {
                    key[s] = static_cast<std::uint32_t>(rest % d);
                    rest /= d;
                }
                for (std::size_t t = 0; t < tri_basis_.size(); ++t) {
                    const std::size_t abc = tri_free_[t];
                    key[2 * degree_ - 4] = static_cast<std::uint32_t>(abc / (d * d));
                    key[2 * degree_ - 3] = static_cast<std::uint32_t>((abc / d) % d);
                    key[2 * degree_ - 2] = static_cast<std::uint32_t>(abc % d);
                    const Vec val = f.value(key);
                    for (std::size_t v = 0; v < module_.dim; ++v)
                        raw[(lead * tri_basis_.size() + t) * module_.dim + v] = val[v];
                }
            }
        }
        Vec out = zero_vec(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = raw[order_[i]];
        return out;
    }

    MultiMap from_coordinates(const Vec& coords) const {
        if (coords.size() != dim_) throw usage_error("coordinate length mismatch");
        MultiMap m(std::vector<Space>(2 * degree_ - 1, g_), module_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (coords[i].is_zero()) continue;
            const LTSCochain b = element(i);
            for (const auto& [key, val] : b.map.table())
                m.add_to(key, scale(coords[i], val));
        }
        return m;
    }

private:
    void build_trilinear_block(std::size_t d) {
        const std::size_t amb = d * d * d;
        std::vector<Rat> rows;
        std::size_t nrows = 0;
        auto idx = [d](std::size_t a, std::size_t b, std::size_t c) {
            return (a * d + b) * d + c;
        };
        auto add_row = [&](std::initializer_list<std::size_t> cols) {
            std::vector<Rat> row(amb, Rat(0));
            for (std::size_t c : cols) row[c] += Rat(1);
            rows.insert(rows.end(), row.begin(), row.end());
            ++nrows;
        };
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t c = 0; c < d; ++c) {
                    add_row({idx(a, b, c), idx(b, a, c)});
                    add_row({idx(a, b, c), idx(b, c, a), idx(c, a, b)});
                }
        Mat constraint(nrows, amb, std::move(rows));
        tri_basis_ = kernel_basis(constraint);

        // free columns: where the reduced-echelon kernel basis is supported
        // with a unit coordinate unique to each basis vector
        Mat r = constraint;
        const std::vector<std::size_t> pivots = rref_in_place(r);
        std::vector<bool> is_pivot(amb, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < amb; ++c)
            if (!is_pivot[c]) tri_free_.push_back(c);
    }

    Space g_, module_;
    std::size_t degree_;
    std::size_t dim_ = 0;
    std::size_t lead_count_ = 1;
    std::vector<Vec> tri_basis_;
    std::vector<std::size_t> tri_free_;
    std::vector<std::size_t> order_;
};

inline CochainBasis cochain_basis(const Algebra& lts, const Rep& rep, std::size_t n) {
    if (rep.base.space != lts.space)
        throw usage_error("representation base space mismatch");
    return CochainBasis(lts.space, rep.module, n);
}

namespace detail {

// Evaluate a (2n-1)-slot cochain whose leading slots are fed whole
// tensor-square vectors or basis pairs, and whose last slot is a basis index
// or a vector.  At most one pair slot carries a non-decomposable vector.
struct PairArg {
    bool is_basis = true;
    std::uint32_t a = 0, b = 0;
    const Vec* wvec = nullptr;  // coordinates on the pair basis when !is_basis
};

inline Vec eval_pairs(const MultiMap& f, const std::vector<PairArg>& pairs,
                      bool last_is_basis, std::uint32_t last_idx, const Vec* last_vec) {
    const std::size_t d = f.domain(0).dim;
    Vec out = zero_vec(f.codomain().dim);
    Key key(f.arity(), 0);

    std::size_t wslot = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].is_basis) {
            key[2 * i] = pairs[i].a;
            key[2 * i + 1] = pairs[i].b;
        } else {
            wslot = i;
        }
    }

    auto finish = [&](const Rat& coeff) {
        if (last_is_basis) {
            key[f.arity() - 1] = last_idx;
            if (const Vec* v = f.find(key)) axpy(out, coeff, *v);
        } else {
            for (std::uint32_t z = 0; z < d; ++z) {
                if ((*last_vec)[z].is_zero()) continue;
                key[f.arity() - 1] = z;
                if (const Vec* v = f.find(key)) axpy(out, coeff * (*last_vec)[z], *v);
            }
        }
    };

    if (wslot == pairs.size()) {
        finish(Rat(1));
    } else {
        const Vec& w = *pairs[wslot].wvec;
        for (std::uint32_t ab = 0; ab < w.size(); ++ab) {
            if (w[ab].is_zero()) continue;
            key[2 * wslot] = ab / d;
            key[2 * wslot + 1] = ab % d;
            finish(w[ab]);
        }
    }
    return out;
}

}  // namespace detail

// The coboundary operator: four families of terms, with [X_j,X_k] the
// induced Leibniz bracket on the tensor square and [X_j,z] read as
// pi(x_j,y_j,z).
inline LTSCochain coboundary(const Algebra& lts, const Rep& rep, const LTSCochain& f) {
    if (lts.kind != AlgebraKind::lts)
        throw usage_error("coboundary requires an lts base");
    if (rep.base.space != lts.space || f.map.domain(0) != lts.space ||
        f.map.codomain() != rep.module)
        throw usage_error("coboundary: space mismatch");
    const std::size_t n = f.degree, d = lts.space.dim;
    MultiMap out(std::vector<Space>(2 * n + 1, lts.space), rep.module);
    using AR = MultiMap::ArgRef;

    TupleRange(std::vector<std::size_t>(2 * n + 1, d)).for_each([&](const Key& t) {
        const std::uint32_t z = t[2 * n];
        Vec acc = zero_vec(rep.module.dim);
        auto xj = [&](std::size_t j) { return t[2 * j]; };      // 0-based pair j
        auto yj = [&](std::size_t j) { return t[2 * j + 1]; };

        // sum_{j<k} (-1)^{j+1} f(.., X_j-hat, .., [X_j,X_k], .., z)
        // (paper indices are 1-based; j below is 0-based)
        for (std::size_t j = 0; j < n; ++j) {
            const int sj = ((j + 1) % 2 == 0) ? 1 : -1;
            for (std::size_t k = j + 1; k < n; ++k) {
                // [X_j,X_k] = pi(xj,yj,xk) (x) yk + xk (x) pi(xj,yj,yk)
                Vec w = tensor_right(lts.space, lts.bracket({xj(j), yj(j), xj(k)}), yj(k));
                axpy(w, Rat(1),
                     tensor_left(lts.space, xj(k), lts.bracket({xj(j), yj(j), yj(k)})));
                std::vector<detail::PairArg> pairs;
                pairs.reserve(n - 1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == j) continue;
                    detail::PairArg pa;
                    if (i == k) {
                        pa.is_basis = false;
                        pa.wvec = &w;
                    } else {
                        pa.a = xj(i);
                        pa.b = yj(i);
                    }
                    pairs.push_back(pa);
                }
                axpy(acc, Rat(sj), detail::eval_pairs(f.map, pairs, true, z, nullptr));
            }
        }

        // sum_j (-1)^{j+1} f(.., X_j-hat, .., [X_j, z])
        for (std::size_t j = 0; j < n; ++j) {
            const int sj = ((j + 1) % 2 == 0) ? 1 : -1;
            const Vec w = lts.bracket({xj(j), yj(j), z});
            std::vector<detail::PairArg> pairs;
            pairs.reserve(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) continue;
                pairs.push_back({true, xj(i), yj(i), nullptr});
            }
            axpy(acc, Rat(sj), detail::eval_pairs(f.map, pairs, false, 0, &w));
        }

        // sum_j (-1)^{j+2} (rho(y_j,x_j) - rho(x_j,y_j)) f(.., X_j-hat, .., z)
        for (std::size_t j = 0; j < n; ++j) {
            const int sj = ((j + 1) % 2 == 0) ? -1 : 1;
            std::vector<detail::PairArg> pairs;
            pairs.reserve(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) continue;
                pairs.push_back({true, xj(i), yj(i), nullptr});
            }
            const Vec fv = detail::eval_pairs(f.map, pairs, true, z, nullptr);
            if (!is_zero(fv)) {
                const Mat m = rep.rho(yj(j), xj(j)) - rep.rho(xj(j), yj(j));
                axpy(acc, Rat(sj), m.apply(fv));
            }
        }

        // (-1)^{n+1} ( rho(y_n,z) f(X_1..X_{n-1}, x_n)
        //            - rho(x_n,z) f(X_1..X_{n-1}, y_n) )
        {
            const int sn = ((n + 1) % 2 == 0) ? 1 : -1;
            std::vector<detail::PairArg> pairs;
            pairs.reserve(n - 1);
            for (std::size_t i = 0; i + 1 < n; ++i)
                pairs.push_back({true, xj(i), yj(i), nullptr});
            const Vec fx = detail::eval_pairs(f.map, pairs, true, xj(n - 1), nullptr);
            const Vec fy = detail::eval_pairs(f.map, pairs, true, yj(n - 1), nullptr);
            if (!is_zero(fx)) axpy(acc, Rat(sn), rep.rho(yj(n - 1), z).apply(fx));
            if (!is_zero(fy)) axpy(acc, Rat(-sn), rep.rho(xj(n - 1), z).apply(fy));
        }

        out.set(t, std::move(acc));
    });

    if (!satisfies_cochain_constraints(out))
        throw internal_error(
            "coboundary output violates the cochain constraints "
            "(representation or formula inconsistency)");
    return LTSCochain(n + 1, std::move(out));
}

// Matrix of delta: C^n -> C^{n+1} in the given bases.
inline Mat coboundary_matrix(const Algebra& lts, const Rep& rep,
                             const CochainBasis& from, const CochainBasis& to) {
    if (from.degree() + 1 != to.degree())
        throw usage_error("coboundary_matrix: degree mismatch");
    Mat m(to.dim(), from.dim());
    for (std::size_t i = 0; i < from.dim(); ++i) {
        const LTSCochain df = coboundary(lts, rep, from.element(i));
        const Vec col = to.coordinates(df.map);
        if (to.from_coordinates(col) != df.map)
            throw internal_error(
                "coboundary image does not lie in the span of the cochain basis");
        for (std::size_t r = 0; r < to.dim(); ++r) m.at(r, i) = col[r];
    }
    return m;
}

inline Mat coboundary_matrix(const Algebra& lts, const Rep& rep, std::size_t n) {
    const CochainBasis from = cochain_basis(lts, rep, n);
    const CochainBasis to = cochain_basis(lts, rep, n + 1);
    return coboundary_matrix(lts, rep, from, to);
}

// dim H^n = dim ker(delta_n) - rank(delta_{n-1}), rank(delta_0) := 0.
struct CohomologyTable {
    std::vector<std::size_t> cochain_dims;  // dim C^n, n = 1..max_n
    std::vector<std::size_t> delta_ranks;   // rank delta_n, n = 1..max_n
    std::vector<std::size_t> h_dims;        // dim H^n, n = 1..max_n
};

inline CohomologyTable cohomology_table(const Algebra& lts, const Rep& rep,
                                        std::size_t max_n, std::uint64_t shuffle_seed = 0) {
    if (max_n < 1) throw usage_error("max degree must be >= 1");
    CohomologyTable out;
    std::vector<CochainBasis> bases;
    for (std::size_t n = 1; n <= max_n + 1; ++n) {
        bases.emplace_back(cochain_basis(lts, rep, n));
        if (shuffle_seed != 0) bases.back().shuffle(shuffle_seed + n);
    }
    std::size_t prev_rank = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Mat d = coboundary_matrix(lts, rep, bases[n - 1], bases[n]);
        const std::size_t rk = rank(d);
        out.cochain_dims.push_back(bases[n - 1].dim());
        out.delta_ranks.push_back(rk);
        out.h_dims.push_back(bases[n - 1].dim() - rk - prev_rank);
        prev_rank = rk;
    }
    return out;
}

inline std::vector<std::size_t> cohomology_dims(const Algebra& lts, const Rep& rep,
                                                std::size_t max_n) {
    return cohomology_table(lts, rep, max_n).h_dims;
}

inline bool is_cocycle(const Algebra& lts, const Rep& rep, const LTSCochain& f) {
    return coboundary(lts, rep, f).map.is_zero();
}

// delta f = (-1)^{n-1} [[pi, f]] for the adjoint representation: compares
// the coboundary of every basis cochain with the signed controlling-algebra
// bracket, exactly.
inline CheckReport oracle_delta_vs_bracket(const Algebra& lts, std::size_t n) {
    if (lts.kind != AlgebraKind::lts)
        throw usage_error("oracle requires an lts");
    if (n < 1) throw usage_error("oracle degree must be >= 1");
    CheckReport rep_out;
    rep_out.identities = {"delta_vs_bracket"};
    const Rep ad = adjoint_rep(lts);
    const CochainBasis basis = cochain_basis(lts, ad, n);
    const CCochain pi(1, lts.structure);
    const int sign = ((n - 1) % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const LTSCochain f = basis.element(i);
        const MultiMap lhs = coboundary(lts, ad, f).map;
        const CCochain fc(n - 1, f.map);
        const MultiMap rhs = scale(Rat(sign), c_bracket(pi, fc).map);
        if (lhs != rhs) {
            MultiMap diff = sub(lhs, rhs);
            const auto& [key, val] = *diff.table().begin();
            rep_out.violations.push_back(
                {"delta_vs_bracket", key,
                 "basis cochain #" + std::to_string(i) + " at " +
                     label_tuple(key, std::vector<Space>(2 * n + 1, lts.space)),
                 lhs.value(key), rhs.value(key)});
        }
    }
    return rep_out;
}

}  // namespace lts

#endif
