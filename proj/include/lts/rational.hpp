#ifndef LTS_RATIONAL_HPP
#define LTS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "lts/errors.hpp"

namespace lts {

// Exact rational scalar over arbitrary-precision integers.  Always stored in
// lowest terms with a positive denominator; every arithmetic result is
// canonical again.  All algebra in this library happens over Q, so equality
// checks are exact everywhere (no tolerances).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(int n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw usage_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", optionally signed, with q > 0 after reduction.
    static Rat parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw usage_error("cannot parse rational: '" + text + "'");
        if (q.get_den() == 0)
            throw usage_error("rational with zero denominator: '" + text + "'");
        q.canonicalize();
        return Rat(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // "p" when integral, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    // True when the numerator fits a 64-bit signed integer (denominator 1).
    bool fits_int64() const {
        return is_integer() && v_.get_num().fits_slong_p();
    }
    std::int64_t to_int64() const { return v_.get_num().get_si(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw usage_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.raw();
}

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

}  // namespace lts

#endif
