#ifndef LTS_REPORT_HPP
#define LTS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lts/matrix.hpp"
#include "lts/multimap.hpp"

namespace lts {

// One failed identity instance: which identity, on which basis tuple, and
// the two sides that were supposed to agree.
struct Violation {
    std::string identity;
    Key witness;
    std::string witness_labels;
    Vec lhs;
    Vec rhs;
};

// Outcome of an axiom checker.  Checkers evaluate every identity on every
// basis tuple and collect all violations, so a report doubles as a
// diagnosis of hand-entered structure constants.
struct CheckReport {
    std::vector<std::string> identities;  // every identity that was checked
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }

    bool identity_ok(const std::string& name) const {
        for (const Violation& v : violations)
            if (v.identity == name) return false;
        return true;
    }

    void merge(const CheckReport& other) {
        identities.insert(identities.end(), other.identities.begin(),
                          other.identities.end());
        violations.insert(violations.end(), other.violations.begin(),
                          other.violations.end());
    }
};

inline std::string label_tuple(const Key& key, const std::vector<Space>& domains) {
    std::string out = "(";
    for (std::size_t s = 0; s < key.size(); ++s) {
        if (s) out += ",";
        out += domains[s].labels[key[s]];
    }
    out += ")";
    return out;
}

}  // namespace lts

#endif
