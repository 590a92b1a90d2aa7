#include "qflag/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qflag {

int Laurent::min_exp() const {
    if (coeff_.empty()) throw std::domain_error("min_exp of zero");
    return coeff_.begin()->first;
}

int Laurent::max_exp() const {
    if (coeff_.empty()) throw std::domain_error("max_exp of zero");
    return coeff_.rbegin()->first;
}

Rational Laurent::coeff(int exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? Rational(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeff_) {
        auto it = coeff_.find(e);
        if (it == coeff_.end()) {
            coeff_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeff_) {
        auto it = coeff_.find(e);
        if (it == coeff_.end()) {
            coeff_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeff_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeff_) r.coeff_.emplace(e, -c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeff_)
        for (const auto& [eb, cb] : b.coeff_) {
            Rational prod = ca * cb;
            auto it = r.coeff_.find(ea + eb);
            if (it == r.coeff_.end()) {
                r.coeff_.emplace(ea + eb, prod);
            } else {
                it->second += prod;
                if (it->second == 0) r.coeff_.erase(it);
            }
        }
    return r;
}

bool Laurent::operator<(const Laurent& o) const {
    return coeff_ < o.coeff_;
}

std::optional<Laurent> Laurent::try_div(const Laurent& y) const {
    if (y.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero()) return Laurent();
    Laurent rem = *this;
    Laurent quot;
    const int ylead = y.max_exp();
    const Rational& ylc = y.coeff_.rbegin()->second;
    // Any quotient must have exponents >= min_exp(x) - min_exp(y); falling
    // below that bound means no Laurent quotient exists.
    const int lo = min_exp() - y.min_exp();
    while (!rem.is_zero()) {
        int shift = rem.max_exp() - ylead;
        if (shift < lo) return std::nullopt;
        Laurent term = Laurent::q(shift, rem.coeff_.rbegin()->second / ylc);
        quot += term;
        rem -= term * y;
    }
    return quot;
}

Laurent Laurent::exact_div(const Laurent& y) const {
    auto r = try_div(y);
    if (!r) throw std::domain_error("not divisible: (" + str() + ") / (" + y.str() + ")");
    return *r;
}

Rational Laurent::eval(const Rational& q0) const {
    if (q0 == 0) throw std::domain_error("Laurent evaluation at q=0");
    Rational acc = 0;
    for (const auto& [e, c] : coeff_) {
        Rational p = 1;
        Rational base = e >= 0 ? q0 : Rational(q0.get_den(), q0.get_num());
        if (e < 0) base.canonicalize();
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        acc += c * p;
    }
    return acc;
}

std::string Laurent::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        if (e == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Shift to min_exp 0 (a unit move in the Laurent ring).
Laurent to_poly(const Laurent& a) {
    if (a.is_zero()) return a;
    Laurent r;
    int m = a.min_exp();
    for (const auto& [e, c] : a.coeffs()) r += Laurent::q(e - m, c);
    return r;
}

Laurent poly_mod(const Laurent& a, const Laurent& b) {
    Laurent rem = a;
    int blead = b.max_exp();
    Rational blc = b.coeffs().rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= blead) {
        Laurent term = Laurent::q(rem.max_exp() - blead,
                                  rem.coeffs().rbegin()->second / blc);
        rem -= term * b;
    }
    return rem;
}

}  // namespace

void to_json(nlohmann::json& j, const Laurent& x) {
    j = nlohmann::json::object();
    for (const auto& [e, c] : x.coeffs()) j[std::to_string(e)] = to_string(c);
}

void from_json(const nlohmann::json& j, Laurent& x) {
    x = Laurent();
    for (const auto& [k, v] : j.items())
        x += Laurent::q(std::stoi(k), parse_rational(v.get<std::string>()));
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    Laurent x = to_poly(a), y = to_poly(b);
    while (!y.is_zero()) {
        Laurent r = to_poly(poly_mod(x, y));
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.exact_div(Laurent::q(0, x.coeffs().rbegin()->second));  // monic
}

LaurentFrac::LaurentFrac(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    normalize();
}

void LaurentFrac::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    const int nm = num_.min_exp(), dm = den_.min_exp();
    Laurent np = num_.exact_div(Laurent::q(nm));
    Laurent dp = den_.exact_div(Laurent::q(dm));
    Laurent g = laurent_gcd(np, dp);
    if (g != Laurent(1)) {
        np = np.exact_div(g);
        dp = dp.exact_div(g);
    }
    // The stripped unit q^(nm-dm) is folded into the numerator; the
    // denominator keeps min_exp 0 and a monic leading coefficient.
    num_ = np * Laurent::q(nm - dm);
    den_ = dp;
    Rational lc = den_.coeffs().rbegin()->second;
    if (lc != 1) {
        den_ = den_.exact_div(Laurent(lc));
        num_ = num_.exact_div(Laurent(lc));
    }
}

Laurent LaurentFrac::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("fraction is not a Laurent polynomial: " + str());
    return num_.exact_div(den_);
}

LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
    if (b.is_zero()) throw std::domain_error("division by zero fraction");
    return LaurentFrac(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentFrac LaurentFrac::operator-() const {
    LaurentFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string LaurentFrac::str() const {
    if (den_ == Laurent(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qflag
