#pragma once

#include "radial_yamabe/rational.hpp"

#include <vector>

namespace radial_yamabe {

/// Dense univariate polynomial with exact rational coefficients,
/// coeffs[j] multiplying x^j.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;
    Polynomial derivative() const;

    /// Remainder of *this divided by d.
    Polynomial remainder(const Polynomial& d) const;
    /// Quotient by (x - r); r must be a root.
    Polynomial deflate(const Rational& r) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Sturm sequence p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);

/// Number of distinct real roots in (a, b]; requires a < b.
int count_roots(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b);

struct IsolatedRoot {
    Rational lo;
    Rational hi;
    double value = 0.0;
    bool exact = false;  // lo == hi is an exact rational root
};

/// Distinct real roots strictly inside (a, b), isolated and refined to width
/// below `width`.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& width = Rational(1, 1LL << 60));

}  // namespace radial_yamabe
