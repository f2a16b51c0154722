#ifndef LTS_MULTIMAP_HPP
#define LTS_MULTIMAP_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "lts/errors.hpp"
#include "lts/matrix.hpp"
#include "lts/space.hpp"

namespace lts {

using Key = std::vector<std::uint32_t>;

// Iterates all basis-index tuples over a list of domain dimensions
// (mixed-radix counter, last slot fastest).
class TupleRange {
public:
    explicit TupleRange(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t d : dims_)
            if (d == 0) return;
        Key k(dims_.size(), 0);
        while (true) {
            f(static_cast<const Key&>(k));
            std::size_t s = dims_.size();
            while (s-- > 0) {
                if (++k[s] < dims_[s]) break;
                k[s] = 0;
                if (s == 0) return;
            }
            if (dims_.empty()) return;
        }
    }

private:
    std::vector<std::size_t> dims_;
};

// A k-linear map  (x)^k U -> W  stored as a sparse table over basis-index
// tuples with dense coefficient vectors on the codomain.  Absent keys denote
// the zero vector; stored values are never all-zero.
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(std::vector<Space> domains, Space codomain)
        : domains_(std::move(domains)), codomain_(std::move(codomain)) {
        if (domains_.empty()) throw usage_error("MultiMap arity must be >= 1");
    }

    static MultiMap uniform(const Space& domain, std::size_t arity, const Space& codomain) {
        return MultiMap(std::vector<Space>(arity, domain), codomain);
    }

    std::size_t arity() const { return domains_.size(); }
    const std::vector<Space>& domains() const { return domains_; }
    const Space& domain(std::size_t s) const { return domains_[s]; }
    const Space& codomain() const { return codomain_; }

    const std::map<Key, Vec>& table() const { return table_; }

    bool is_zero() const { return table_.empty(); }

    void check_key(const Key& k) const {
        if (k.size() != arity()) throw usage_error("key arity mismatch");
        for (std::size_t s = 0; s < k.size(); ++s)
            if (k[s] >= domains_[s].dim)
                throw usage_error("basis index out of range in MultiMap key");
    }

    void set(const Key& k, Vec v) {
        check_key(k);
        if (v.size() != codomain_.dim)
            throw usage_error("value dimension mismatch in MultiMap");
        if (lts::is_zero(v))
            table_.erase(k);
        else
            table_[k] = std::move(v);
    }

    void add_to(const Key& k, const Vec& v) {
        check_key(k);
        if (v.size() != codomain_.dim)
            throw usage_error("value dimension mismatch in MultiMap");
        auto it = table_.find(k);
        if (it == table_.end()) {
            if (!lts::is_zero(v)) table_[k] = v;
            return;
        }
        axpy(it->second, Rat(1), v);
        if (lts::is_zero(it->second)) table_.erase(it);
    }

    // Value on a basis tuple (zero vector when absent).
    Vec value(const Key& k) const {
        auto it = table_.find(k);
        if (it == table_.end()) return zero_vec(codomain_.dim);
        return it->second;
    }

    const Vec* find(const Key& k) const {
        auto it = table_.find(k);
        return it == table_.end() ? nullptr : &it->second;
    }

    // Full multilinear evaluation; args[s] is a coordinate vector on
    // domain s.  Iterates the sparse table.
    Vec eval(const std::vector<Vec>& args) const {
        if (args.size() != arity()) throw usage_error("eval: arity mismatch");
        for (std::size_t s = 0; s < args.size(); ++s)
            if (args[s].size() != domains_[s].dim)
                throw usage_error("eval: argument dimension mismatch");
        Vec out = zero_vec(codomain_.dim);
        for (const auto& [key, val] : table_) {
            Rat c(1);
            bool dead = false;
            for (std::size_t s = 0; s < key.size(); ++s) {
                const Rat& x = args[s][key[s]];
                if (x.is_zero()) { dead = true; break; }
                c *= x;
            }
            if (!dead) axpy(out, c, val);
        }
        return out;
    }

    // Evaluation where most slots hold basis indices and a few hold general
    // vectors; expands the product over the nonzero entries of the vector
    // slots and looks keys up directly.
    struct ArgRef {
        bool is_basis;
        std::uint32_t index;
        const Vec* vec;
        static ArgRef basis(std::uint32_t i) { return {true, i, nullptr}; }
        static ArgRef vector(const Vec& v) { return {false, 0, &v}; }
    };

    Vec eval_mixed(const std::vector<ArgRef>& args) const {
        if (args.size() != arity()) throw usage_error("eval_mixed: arity mismatch");
        Vec out = zero_vec(codomain_.dim);
        Key key(arity(), 0);
        std::vector<std::size_t> vec_slots;
        for (std::size_t s = 0; s < args.size(); ++s) {
            if (args[s].is_basis) {
                if (args[s].index >= domains_[s].dim)
                    throw usage_error("eval_mixed: basis index out of range");
                key[s] = args[s].index;
            } else {
                if (args[s].vec->size() != domains_[s].dim)
                    throw usage_error("eval_mixed: argument dimension mismatch");
                vec_slots.push_back(s);
            }
        }
        expand(args, key, vec_slots, 0, Rat(1), out);
        return out;
    }

    friend bool operator==(const MultiMap& a, const MultiMap& b) {
        return a.domains_ == b.domains_ && a.codomain_ == b.codomain_ &&
               a.table_ == b.table_;
    }
    friend bool operator!=(const MultiMap& a, const MultiMap& b) { return !(a == b); }

private:
    void expand(const std::vector<ArgRef>& args, Key& key,
                const std::vector<std::size_t>& vec_slots, std::size_t depth,
                const Rat& coeff, Vec& out) const {
        if (depth == vec_slots.size()) {
            auto it = table_.find(key);
            if (it != table_.end()) axpy(out, coeff, it->second);
            return;
        }
        const std::size_t s = vec_slots[depth];
        const Vec& v = *args[s].vec;
        for (std::uint32_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            key[s] = i;
            expand(args, key, vec_slots, depth + 1, coeff * v[i], out);
        }
    }

    std::vector<Space> domains_;
    Space codomain_;
    std::map<Key, Vec> table_;
};

// Linear-combination helpers on maps of identical shape.
inline MultiMap add(const MultiMap& a, const MultiMap& b) {
    if (a.domains() != b.domains() || a.codomain() != b.codomain())
        throw usage_error("MultiMap sum shape mismatch");
    MultiMap out = a;
    for (const auto& [key, val] : b.table()) out.add_to(key, val);
    return out;
}

inline MultiMap scale(const Rat& c, const MultiMap& m) {
    MultiMap out(m.domains(), m.codomain());
    if (c.is_zero()) return out;
    for (const auto& [key, val] : m.table()) out.set(key, scale(c, val));
    return out;
}

inline MultiMap sub(const MultiMap& a, const MultiMap& b) {
    return add(a, scale(Rat(-1), b));
}

// Coordinates on Hom((x) domains -> codomain): flat index pairs an argument
// tuple with a codomain basis vector, tuple lexicographic-major.
struct MapSpaceBasis {
    std::vector<Space> domains;
    Space codomain;

    std::size_t dim() const {
        std::size_t d = codomain.dim;
        for (const Space& s : domains) d *= s.dim;
        return d;
    }

    std::size_t flat_index(const Key& key, std::size_t c) const {
        std::size_t idx = 0;
        for (std::size_t s = 0; s < domains.size(); ++s)
            idx = idx * domains[s].dim + key[s];
        return idx * codomain.dim + c;
    }

    std::pair<Key, std::size_t> unflatten(std::size_t idx) const {
        const std::size_t c = idx % codomain.dim;
        idx /= codomain.dim;
        Key key(domains.size(), 0);
        for (std::size_t s = domains.size(); s-- > 0;) {
            key[s] = static_cast<std::uint32_t>(idx % domains[s].dim);
            idx /= domains[s].dim;
        }
        return {key, c};
    }

    // The elementary map sending one basis tuple to one codomain vector.
    MultiMap elementary(std::size_t idx) const {
        auto [key, c] = unflatten(idx);
        MultiMap m(domains, codomain);
        m.set(key, unit_vec(codomain.dim, c));
        return m;
    }

    // Coefficient vector of a map on this basis.
    Vec coordinates(const MultiMap& m) const {
        Vec v = zero_vec(dim());
        for (const auto& [key, val] : m.table())
            for (std::size_t c = 0; c < codomain.dim; ++c)
                if (!val[c].is_zero()) v[flat_index(key, c)] = val[c];
        return v;
    }

    MultiMap from_coordinates(const Vec& v) const {
        if (v.size() != dim()) throw usage_error("coordinate vector length mismatch");
        MultiMap m(domains, codomain);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            auto [key, c] = unflatten(i);
            Vec val = m.value(key);
            val[c] = v[i];
            m.set(key, val);
        }
        return m;
    }
};

}  // namespace lts

#endif
