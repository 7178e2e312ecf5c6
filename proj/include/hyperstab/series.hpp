#pragma once

// Truncated series in t whose coefficients are Laurent polynomials in the
// Tate symbol L (the class of Q(-1)).

#include "core.hpp"

#include <map>

namespace hyperstab {

template <class R = Int>
class TatePolynomial {
public:
    TatePolynomial() = default;
    TatePolynomial(R constant) { add_term(0, std::move(constant)); }

    static TatePolynomial monomial(int exp, R coeff = R(1))
    {
        TatePolynomial p;
        p.add_term(exp, std::move(coeff));
        return p;
    }

    void add_term(int exp, const R& coeff)
    {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<int, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    R coeff(int exp) const
    {
        auto it = terms_.find(exp);
        return it == terms_.end() ? R(0) : it->second;
    }
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    // Multiplication by L^k.
    TatePolynomial shifted(int k) const
    {
        TatePolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    TatePolynomial& operator+=(const TatePolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TatePolynomial& operator-=(const TatePolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, R(-c));
        return *this;
    }
    friend TatePolynomial operator+(TatePolynomial a, const TatePolynomial& b) { return a += b; }
    friend TatePolynomial operator-(TatePolynomial a, const TatePolynomial& b) { return a -= b; }
    friend TatePolynomial operator*(const TatePolynomial& a, const TatePolynomial& b)
    {
        TatePolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend TatePolynomial operator*(const R& s, const TatePolynomial& a)
    {
        TatePolynomial r;
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    bool operator==(const TatePolynomial&) const = default;

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            bool neg = c < 0;
            R mag = neg ? R(-c) : c;
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            std::string m = (e == 0) ? "" : (e == 1 ? "L" : "L^" + std::to_string(e));
            if (mag != 1 || e == 0) out += coeff_str(mag) + (m.empty() ? "" : "*");
            out += m;
        }
        return out;
    }

private:
    static std::string coeff_str(const R& v)
    {
        if constexpr (std::is_same_v<R, Int>) return v.str();
        else return std::to_string(v);
    }
    std::map<int, R> terms_;
};

template <class R = Int>
class GradedTateSeries {
public:
    using Coeff = TatePolynomial<R>;

    explicit GradedTateSeries(int truncation) : terms_(check(truncation) + 1) {}

    static GradedTateSeries one(int truncation)
    {
        GradedTateSeries s(truncation);
        s.terms_[0] = Coeff(R(1));
        return s;
    }
    // c * L^lexp * t^texp; silently empty if texp exceeds the truncation.
    static GradedTateSeries monomial(int truncation, int texp, int lexp, R c = R(1))
    {
        GradedTateSeries s(truncation);
        if (texp < 0) throw UsageError("GradedTateSeries: negative t-degree");
        if (texp <= truncation) s.terms_[texp].add_term(lexp, c);
        return s;
    }

    int truncation() const { return static_cast<int>(terms_.size()) - 1; }
    const Coeff& operator[](int i) const { return terms_.at(static_cast<std::size_t>(i)); }
    Coeff& operator[](int i) { return terms_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const
    {
        for (const auto& c : terms_)
            if (!c.is_zero()) return false;
        return true;
    }

    GradedTateSeries& operator+=(const GradedTateSeries& o)
    {
        same_truncation(o);
        for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] += o.terms_[i];
        return *this;
    }
    GradedTateSeries& operator-=(const GradedTateSeries& o)
    {
        same_truncation(o);
        for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] -= o.terms_[i];
        return *this;
    }
    friend GradedTateSeries operator+(GradedTateSeries a, const GradedTateSeries& b) { return a += b; }
    friend GradedTateSeries operator-(GradedTateSeries a, const GradedTateSeries& b) { return a -= b; }
    bool operator==(const GradedTateSeries&) const = default;

    // Multiplies every coefficient by L^lexp and shifts t-degrees by texp >= 0.
    GradedTateSeries shifted(int texp, int lexp) const
    {
        if (texp < 0) throw UsageError("GradedTateSeries::shifted: negative t shift");
        GradedTateSeries r(truncation());
        for (int i = 0; i + texp <= truncation(); ++i) r.terms_[i + texp] = terms_[i].shifted(lexp);
        return r;
    }

    // Same series with a smaller truncation.
    GradedTateSeries truncated(int t) const
    {
        if (t > truncation()) throw UsageError("GradedTateSeries::truncated: cannot raise truncation");
        GradedTateSeries r(t);
        for (int i = 0; i <= t; ++i) r.terms_[i] = terms_[i];
        return r;
    }

    std::string str() const
    {
        std::string out;
        for (int i = 0; i <= truncation(); ++i) {
            if (terms_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + terms_[i].str() + ")*t^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    static int check(int t)
    {
        if (t < 0) throw UsageError("GradedTateSeries: negative truncation");
        return t;
    }
    void same_truncation(const GradedTateSeries& o) const
    {
        if (o.truncation() != truncation()) throw UsageError("GradedTateSeries: truncation mismatch");
    }
    std::vector<Coeff> terms_;
};

template <class R>
GradedTateSeries<R> multiply(const GradedTateSeries<R>& a, const GradedTateSeries<R>& b)
{
    if (a.truncation() != b.truncation()) throw UsageError("multiply: truncation mismatch");
    const int T = a.truncation();
    GradedTateSeries<R> r(T);
    for (int i = 0; i <= T; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= T; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Inverse of a series with constant term exactly 1.
template <class R>
GradedTateSeries<R> invert_unit(const GradedTateSeries<R>& a)
{
    if (!(a[0] == TatePolynomial<R>(R(1)))) throw UsageError("invert_unit: constant term must be 1");
    const int T = a.truncation();
    GradedTateSeries<R> b(T);
    b[0] = TatePolynomial<R>(R(1));
    for (int n = 1; n <= T; ++n) {
        TatePolynomial<R> acc;
        for (int k = 1; k <= n; ++k)
            if (!a[k].is_zero() && !b[n - k].is_zero()) acc += a[k] * b[n - k];
        b[n] = R(-1) * acc;
    }
    return b;
}

// Substitutes t = t0. The answer depends on the truncation.
template <class R>
TatePolynomial<R> evaluate_t(const GradedTateSeries<R>& a, long long t0)
{
    TatePolynomial<R> r;
    R pw(1);
    for (int i = 0; i <= a.truncation(); ++i) {
        r += pw * a[i];
        pw *= R(t0);
    }
    return r;
}

} // namespace hyperstab
