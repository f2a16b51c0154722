#ifndef LTS_SPACE_HPP
#define LTS_SPACE_HPP

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lts/errors.hpp"
#include "lts/matrix.hpp"

namespace lts {

// Finite-dimensional vector space presented by a labelled basis.
struct Space {
    std::size_t dim = 0;
    std::vector<std::string> labels;

    Space() = default;

    // Default labels e0, e1, ...
    explicit Space(std::size_t dim, std::string stem = "e") : dim(dim) {
        labels.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
            labels.push_back(stem + std::to_string(i));
    }

    Space(std::vector<std::string> names) : dim(names.size()), labels(std::move(names)) {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw usage_error("basis labels must be pairwise distinct");
    }

    friend bool operator==(const Space& a, const Space& b) {
        return a.dim == b.dim && a.labels == b.labels;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
};

// The tensor square with its lexicographic pair basis: index a*dim + b
// stands for e_a (x) e_b.
inline Space tensor_square(const Space& g) {
    std::vector<std::string> labels;
    labels.reserve(g.dim * g.dim);
    for (std::size_t a = 0; a < g.dim; ++a)
        for (std::size_t b = 0; b < g.dim; ++b)
            labels.push_back(g.labels[a] + "(x)" + g.labels[b]);
    return Space(std::move(labels));
}

inline std::size_t pair_index(const Space& g, std::size_t a, std::size_t b) {
    return a * g.dim + b;
}

// e_a (x) w as a coordinate vector on the pair basis.
inline Vec tensor_left(const Space& g, std::size_t a, const Vec& w) {
    Vec out = zero_vec(g.dim * g.dim);
    for (std::size_t b = 0; b < g.dim; ++b) out[pair_index(g, a, b)] = w[b];
    return out;
}

// w (x) e_b as a coordinate vector on the pair basis.
inline Vec tensor_right(const Space& g, const Vec& w, std::size_t b) {
    Vec out = zero_vec(g.dim * g.dim);
    for (std::size_t a = 0; a < g.dim; ++a) out[pair_index(g, a, b)] = w[a];
    return out;
}

// Human-readable linear combination, e.g. "2e + h" or "0".
inline std::string format_vector(const Vec& v, const Space& s) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        if (v[i] == Rat(1))
            os << s.labels[i];
        else if (v[i] == Rat(-1))
            os << "-" << s.labels[i];
        else
            os << v[i].str() << "*" << s.labels[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace lts

#endif
