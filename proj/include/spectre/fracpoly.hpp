// Truncated polynomial with rational exponents over a fixed common
// denominator: sum of c * t^(k/den) stored as { k -> c }.
//
// Every series in the library is a window of a (possibly infinite) power
// series: `cutoff` is the exclusive upper bound below which exponents are
// tracked exactly; anything at or above it is discarded on insertion.
// Combining two windows keeps the smaller cutoff, so a window never claims
// more than it knows.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spectre/error.hpp"
#include "spectre/rational.hpp"

namespace spectre {

class FracPoly {
public:
    FracPoly(long long den, Rat cutoff) : den_(den), cutoff_(std::move(cutoff)) {
        if (den_ < 1) fail(errc::out_of_domain, "exponent denominator must be >= 1");
    }

    static FracPoly one(long long den, Rat cutoff) {
        FracPoly p(den, std::move(cutoff));
        p.add_term(0, 1);
        return p;
    }

    long long den() const { return den_; }
    const Rat& cutoff() const { return cutoff_; }
    const std::map<long long, long long>& raw_terms() const { return terms_; }

    bool empty() const { return terms_.empty(); }

    Rat exponent(long long num) const { return Rat(num, den_); }

    // Adds c * t^(num/den); silently drops exponents at or past the cutoff.
    void add_term(long long num, long long coeff) {
        if (coeff == 0) return;
        if (Rat(num, den_) >= cutoff_) return;
        auto it = terms_.find(num);
        if (it == terms_.end()) {
            terms_.emplace(num, coeff);
        } else if ((it->second += coeff) == 0) {
            terms_.erase(it);
        }
    }

    long long coeff_at(const Rat& e) const {
        Rat scaled = e * den_;
        if (rat_den(scaled) != 1) return 0;
        auto it = terms_.find(to_ll(rat_num(scaled)));
        return it == terms_.end() ? 0 : it->second;
    }

    // Sum of coefficients in the window.
    long long mass() const {
        long long m = 0;
        for (const auto& [e, c] : terms_) m += c;
        return m;
    }

    void scale(long long c) {
        if (c == 0) {
            terms_.clear();
            return;
        }
        for (auto& [e, co] : terms_) co *= c;
    }

    // Rewrites to a denominator that must be a multiple of the current one.
    FracPoly rebased(long long new_den) const {
        if (new_den % den_ != 0) fail(errc::out_of_domain, "rebase denominator must be a multiple");
        FracPoly out(new_den, cutoff_);
        long long f = new_den / den_;
        for (const auto& [e, c] : terms_) out.add_term(e * f, c);
        return out;
    }

    // Smallest equivalent denominator (gcd of den and all exponent numerators).
    FracPoly normalized() const {
        long long g = den_;
        for (const auto& [e, c] : terms_) g = ll_gcd(g, e < 0 ? -e : e);
        if (g <= 1) return *this;
        FracPoly out(den_ / g, cutoff_);
        for (const auto& [e, c] : terms_) out.add_term(e / g, c);
        return out;
    }

    FracPoly& operator+=(const FracPoly& rhs) {
        long long d = ll_lcm(den_, rhs.den_);
        Rat cut = cutoff_ < rhs.cutoff_ ? cutoff_ : rhs.cutoff_;
        FracPoly out(d, cut);
        for (const auto& [e, c] : terms_) out.add_term(e * (d / den_), c);
        for (const auto& [e, c] : rhs.terms_) out.add_term(e * (d / rhs.den_), c);
        *this = std::move(out);
        return *this;
    }

    FracPoly operator+(const FracPoly& rhs) const {
        FracPoly out = *this;
        out += rhs;
        return out;
    }

    FracPoly operator*(const FracPoly& rhs) const {
        long long d = ll_lcm(den_, rhs.den_);
        Rat cut = cutoff_ < rhs.cutoff_ ? cutoff_ : rhs.cutoff_;
        FracPoly out(d, cut);
        long long fa = d / den_, fb = d / rhs.den_;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea * fa + eb * fb, ca * cb);
        return out;
    }

    // Multiplication by (1 - t)^k, the standard way to pass from a cone's
    // lattice-point series to its Artinian quotient series.
    FracPoly times_one_minus_t_pow(int k) const {
        FracPoly out(den_, cutoff_);
        std::vector<long long> binom(static_cast<std::size_t>(k) + 1, 1);
        for (int i = 1; i <= k; ++i)
            for (int j = i - 1; j >= 1; --j) binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j) - 1];
        for (const auto& [e, c] : terms_)
            for (int j = 0; j <= k; ++j)
                out.add_term(e + static_cast<long long>(j) * den_, (j % 2 == 0 ? c : -c) * binom[static_cast<std::size_t>(j)]);
        return out;
    }

    // Terms as (exponent, coefficient), ascending by exponent.
    std::vector<std::pair<Rat, long long>> sorted_terms() const {
        std::vector<std::pair<Rat, long long>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(Rat(e, den_), c);
        return out;
    }

    // Same series content (denominators may differ); cutoffs are not compared.
    bool same_terms(const FracPoly& rhs) const {
        FracPoly a = normalized(), b = rhs.normalized();
        return a.den_ == b.den_ && a.terms_ == b.terms_;
    }

private:
    static long long ll_gcd(long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
    static long long ll_lcm(long long a, long long b) { return a / ll_gcd(a, b) * b; }

    long long den_;
    Rat cutoff_;
    std::map<long long, long long> terms_;
};

}  // namespace spectre
