#include "radial_yamabe/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace radial_yamabe {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * static_cast<long long>(j);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::remainder(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const int dd = d.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        if (r[k] == 0) continue;
        const Rational q = r[k] / d.leading();
        for (int j = 0; j <= dd; ++j) r[k - dd + j] -= q * d.c_[j];
    }
    if (static_cast<int>(r.size()) > dd) r.resize(std::max(dd, 0));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::deflate(const Rational& root) const {
    if ((*this)(root) != 0) throw std::domain_error("deflation by a non-root");
    if (c_.size() <= 1) return {};
    // synthetic division
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = 0;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
        carry = c_[k] + carry * root;
        q[k - 1] = carry;
    }
    return Polynomial(std::move(q));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        Polynomial r = seq[seq.size() - 2].remainder(seq.back());
        if (r.is_zero()) break;
        std::vector<Rational> neg = r.coeffs();
        for (auto& c : neg) c = -c;
        seq.emplace_back(std::move(neg));
    }
    return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& q : seq) {
        const Rational v = q(x);
        if (v == 0) continue;
        const int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int count_roots(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("count_roots needs a < b");
    if (seq.empty()) throw std::domain_error("zero polynomial has infinitely many roots");
    return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& width) {
    const auto seq = sturm_sequence(p);
    std::vector<IsolatedRoot> roots;
    if (seq.empty()) throw std::domain_error("zero polynomial has infinitely many roots");

    // open interval (a, b): Sturm counts (lo, hi], so drop a root sitting at b
    struct Cell {
        Rational lo, hi;
    };
    std::vector<Cell> stack{{a, b}};
    std::vector<Cell> isolated;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        int n = count_roots(seq, c.lo, c.hi);
        if (p(c.hi) == 0) {
            if (c.hi != b) {
                // exact root on an interior cut; recorded once as its own cell
                isolated.push_back({c.hi, c.hi});
            }
            --n;
        }
        if (n <= 0) continue;
        if (n == 1 && c.hi - c.lo < 1) {
            isolated.push_back(c);
            continue;
        }
        const Rational mid = (c.lo + c.hi) / 2;
        stack.push_back({mid, c.hi});
        stack.push_back({c.lo, mid});
    }

    // a cut root is met again whenever a cell ending on it is split further
    std::sort(isolated.begin(), isolated.end(), [](const Cell& x, const Cell& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    isolated.erase(std::unique(isolated.begin(), isolated.end(),
                               [](const Cell& x, const Cell& y) { return x.lo == y.lo && x.hi == y.hi; }),
                   isolated.end());

    for (auto& c : isolated) {
        IsolatedRoot r;
        if (c.lo == c.hi) {
            r.lo = r.hi = c.lo;
            r.exact = true;
            r.value = to_double(c.lo);
            roots.push_back(r);
            continue;
        }
        Rational lo = c.lo, hi = c.hi;
        bool exact = false;
        // bisect by Sturm counts so that a root at an excluded endpoint
        // cannot confuse the sign logic
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / 2;
            if (p(mid) == 0) {
                lo = hi = mid;
                exact = true;
                break;
            }
            if (count_roots(seq, lo, mid) > 0) hi = mid;
            else lo = mid;
        }
        r.lo = lo;
        r.hi = hi;
        r.exact = exact;
        r.value = to_double((lo + hi) / 2);
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.value < y.value; });
    return roots;
}

}  // namespace radial_yamabe
