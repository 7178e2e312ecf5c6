#pragma once

#include "core.hpp"

#include <algorithm>

namespace hyperstab {

// Dense univariate polynomial in q. c[i] is the coefficient of q^i.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(R constant) : c_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(R coeff, int exp)
    {
        std::vector<R> c(static_cast<std::size_t>(exp) + 1, R(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial q() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    R coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    bool operator==(const Polynomial&) const = default;

    R operator()(const R& x) const
    {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "q") const
    {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            R a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            R mag = neg ? R(-a) : a;
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            std::string m = (i == 0) ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mag != 1 || i == 0) out += to_string_coeff(mag) + (m.empty() ? "" : "*");
            out += m;
        }
        return out;
    }

private:
    static std::string to_string_coeff(const R& v)
    {
        if constexpr (std::is_same_v<R, Int> || std::is_same_v<R, Rational>) return hyperstab::to_string(v);
        else return std::to_string(v);
    }
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<R> c_;
};

using QPolynomial = Polynomial<Int>;

// Euclidean division by a divisor with unit leading coefficient (+-1).
// Returns {quotient, remainder} with deg(remainder) < deg(divisor).
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& num, const Polynomial<R>& den)
{
    if (den.is_zero()) throw UsageError("divmod: division by zero polynomial");
    const R lead = den.coeff(den.degree());
    if (lead != 1 && lead != -1) throw UsageError("divmod: divisor must have leading coefficient +-1");
    std::vector<R> rem = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial<R>(), num};
    std::vector<R> quo(static_cast<std::size_t>(num.degree() - dd) + 1, R(0));
    for (int i = num.degree(); i >= dd; --i) {
        R c = rem[i] * lead;  // lead^{-1} == lead for units
        if (c == 0) continue;
        quo[i - dd] = c;
        for (int k = 0; k <= dd; ++k) rem[i - dd + k] -= c * den.coeff(k);
    }
    return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

// Exact quotient; throws if the remainder is nonzero.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& num, const Polynomial<R>& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder " + r.str());
    return q;
}

} // namespace hyperstab
