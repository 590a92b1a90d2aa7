#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qflag/json_fwd.hpp"
#include "qflag/rational.hpp"

namespace qflag {

// Laurent polynomial in q with exact rational coefficients.
// Invariant: no zero coefficients are stored; zero is the empty map.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& c) {
        if (c != 0) coeff_[0] = c;
    }
    Laurent(long num) : Laurent(Rational(num)) {}

    static Laurent q(int exp = 1, const Rational& c = 1) {
        Laurent x;
        if (c != 0) x.coeff_[exp] = c;
        return x;
    }

    const std::map<int, Rational>& coeffs() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_monomial() const { return coeff_.size() == 1; }
    int min_exp() const;  // throws on zero
    int max_exp() const;
    Rational coeff(int exp) const;
    int support_size() const { return static_cast<int>(coeff_.size()); }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const;
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const;  // arbitrary total order, for containers

    // Exact quotient: returns z with (*this) == y*z, or nullopt when no
    // Laurent polynomial quotient exists. Throws on y == 0.
    std::optional<Laurent> try_div(const Laurent& y) const;
    Laurent exact_div(const Laurent& y) const;  // throws on failure

    Rational eval(const Rational& q0) const;  // throws on q0 == 0

    std::string str() const;  // e.g. "q^-1 + 2 + q^3"

private:
    std::map<int, Rational> coeff_;
};

// JSON: object mapping exponent (string) to "num/den", e.g. q^2+1 is
// {"0":"1","2":"1"}.
void to_json(nlohmann::json& j, const Laurent& x);
void from_json(const nlohmann::json& j, Laurent& x);

// Content-free gcd in Q[q] up to units, returned with min_exp 0 and monic
// leading coefficient. gcd(0,0) == 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

// Element of the fraction field Q(q), kept in lowest terms with a
// normalized denominator (min_exp 0, monic). Used transiently by the
// linear solvers; module arithmetic itself stays in the Laurent ring.
class LaurentFrac {
public:
    LaurentFrac() : num_(), den_(1) {}
    LaurentFrac(Laurent n) : num_(std::move(n)), den_(1) {}
    LaurentFrac(long n) : num_(n), den_(1) {}
    LaurentFrac(Laurent n, Laurent d);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_monomial(); }
    // The underlying Laurent polynomial; throws when the denominator is
    // not a unit.
    Laurent as_laurent() const;

    friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b);
    LaurentFrac operator-() const;
    LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
    LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
    LaurentFrac& operator*=(const LaurentFrac& o) { return *this = *this * o; }
    LaurentFrac& operator/=(const LaurentFrac& o) { return *this = *this / o; }
    bool operator==(const LaurentFrac& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const LaurentFrac& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    Laurent num_, den_;
};

}  // namespace qflag
