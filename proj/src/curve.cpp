#include "spectre/curve.hpp"

#include <algorithm>
#include <numeric>

namespace spectre {
namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string tuple_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Membership sieve for the semigroup generated by `gens` over [0, bound].
std::vector<bool> sieve(const std::vector<long long>& gens, long long bound) {
    std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
    member[0] = true;
    for (long long v = 1; v <= bound; ++v)
        for (long long b : gens) {
            if (b > v) break;  // gens ascending
            if (member[static_cast<std::size_t>(v - b)]) {
                member[static_cast<std::size_t>(v)] = true;
                break;
            }
        }
    return member;
}

}  // namespace

CurveData curve_from_generators(const std::vector<long long>& gens) {
    if (gens.size() < 2)
        fail(errc::invalid_char_sequence, "need at least two generators (g >= 1), got " + tuple_str(gens));
    for (long long b : gens)
        if (b < 1) fail(errc::invalid_char_sequence, "generators must be positive, got " + tuple_str(gens));
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (gens[i] <= gens[i - 1])
            fail(errc::invalid_char_sequence, "generators must be strictly increasing, got " + tuple_str(gens));

    CurveData c;
    c.gens = gens;
    c.g = static_cast<int>(gens.size()) - 1;

    // gcd chain, multiplicities and normalized generators
    c.e.resize(gens.size());
    c.e[0] = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) {
        c.e[i] = gcd_ll(c.e[i - 1], gens[i]);
        if (c.e[i] >= c.e[i - 1])
            fail(errc::invalid_char_sequence,
                 "gcd chain must strictly decrease: e_" + std::to_string(i) + " = " + std::to_string(c.e[i]) +
                     " does not drop below e_" + std::to_string(i - 1) + " = " + std::to_string(c.e[i - 1]) + " for " +
                     tuple_str(gens));
    }
    if (c.e.back() != 1)
        fail(errc::invalid_char_sequence,
             "gcd of all generators must be 1, got " + std::to_string(c.e.back()) + " for " + tuple_str(gens));

    c.n.resize(gens.size());
    c.q.resize(gens.size());
    c.n[0] = 1;  // convention; makes the growth condition below uniform in i
    c.q[0] = gens[0] / c.e[0];
    for (std::size_t i = 1; i < gens.size(); ++i) {
        c.n[i] = c.e[i - 1] / c.e[i];
        c.q[i] = gens[i] / c.e[i];
    }

    // growth condition n_{i-1} b_{i-1} < b_i (for i = 1 this is the strict
    // increase already checked)
    for (std::size_t i = 2; i < gens.size(); ++i)
        if (c.n[i - 1] * gens[i - 1] >= gens[i])
            fail(errc::invalid_char_sequence,
                 "growth condition n_" + std::to_string(i - 1) + "*b_" + std::to_string(i - 1) + " < b_" +
                     std::to_string(i) + " fails for " + tuple_str(gens));

    // minimality: no generator may lie in the semigroup of the previous ones
    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::vector<long long> prev(gens.begin(), gens.begin() + static_cast<long>(i));
        if (sieve(prev, gens[i])[static_cast<std::size_t>(gens[i])])
            fail(errc::invalid_char_sequence,
                 "generator b_" + std::to_string(i) + " = " + std::to_string(gens[i]) +
                     " lies in the semigroup of the previous generators for " + tuple_str(gens));
    }

    // characteristic exponents
    c.beta.resize(gens.size());
    c.beta[0] = gens[0];
    c.beta[1] = gens[1];
    for (std::size_t i = 2; i < gens.size(); ++i) c.beta[i] = gens[i] - c.n[i - 1] * gens[i - 1] + c.beta[i - 1];
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (c.beta[i] <= c.beta[i - 1])
            fail(errc::invalid_char_sequence, "characteristic exponents not strictly increasing for " + tuple_str(gens));

    c.mu = milnor_zariski(c);
    c.conductor = c.mu;
    return c;
}

long long milnor_zariski(const CurveData& c) {
    long long mu = 1 - c.beta[0];
    for (std::size_t i = 1; i < c.beta.size(); ++i) mu += c.beta[i] * (c.e[i - 1] - c.e[i]);
    return mu;
}

long long milnor_acampo(const CurveData& c) {
    long long mu = 0;
    for (std::size_t i = 1; i < c.gens.size(); ++i) mu += c.e[i] * (c.n[i] - 1) * (c.q[i] - 1);
    return mu;
}

SemigroupView semigroup_view(const CurveData& c, long long bound) {
    if (bound < c.conductor)
        fail(errc::out_of_domain, "bound " + std::to_string(bound) + " is below the conductor " +
                                      std::to_string(c.conductor));
    SemigroupView view;
    view.member = sieve(c.gens, bound);
    long long largest_gap = -1;
    for (long long v = 0; v <= bound; ++v)
        if (!view.member[static_cast<std::size_t>(v)]) largest_gap = v;
    view.conductor = largest_gap + 1;
    if (view.conductor != c.conductor)
        fail(errc::internal_cancellation, "sieve conductor " + std::to_string(view.conductor) +
                                              " disagrees with the Milnor number " + std::to_string(c.conductor));
    for (long long v = 0; v < c.conductor; ++v) {
        if (view.member[static_cast<std::size_t>(v)])
            view.elements_below_conductor.push_back(v);
        else
            view.gaps.push_back(v);
    }
    return view;
}

std::vector<Rat> spectral_below_one(const CurveData& c) {
    if (c.g != 1)
        fail(errc::not_single_pair, "expected a single characteristic pair, got g = " + std::to_string(c.g));
    const long long p = c.gens[0], q = c.gens[1], d = p * q;
    std::vector<Rat> out;
    const SemigroupView view = semigroup_view(c, c.conductor);
    for (long long k : view.elements_below_conductor)
        if (k <= c.mu - 2) out.emplace_back(Rat(k + p + q, d));
    return out;
}

Rat lct(const CurveData& c) { return Rat(1, c.gens[0]) + Rat(1, c.gens[1]); }

Rat phi_at_lct(const CurveData& c) {
    const Rat r = lct(c);
    return r * r / 2 - Rat(1, c.mu);
}

Rat phi_at_top(const CurveData& c) {
    if (c.g != 1)
        fail(errc::not_single_pair, "expected a single characteristic pair, got g = " + std::to_string(c.g));
    const long long d = c.gens[0] * c.gens[1];
    return Rat(-1, 2 * d * d);
}

Rat phi_at_top_definition(const CurveData& c) {
    if (c.g != 1)
        fail(errc::not_single_pair, "expected a single characteristic pair, got g = " + std::to_string(c.g));
    const long long d = c.gens[0] * c.gens[1];
    const Rat r = 1 - Rat(1, d);
    return r * r / 2 - Rat(1, 2);
}

std::vector<long long> staircase_elements(const CurveData& c, long long max_k) {
    if (max_k < 0) fail(errc::out_of_domain, "staircase bound must be nonnegative");
    const long long bound = std::max(max_k, c.conductor);
    const SemigroupView view = semigroup_view(c, bound);
    std::vector<long long> out;
    for (long long v = 0; v <= max_k; ++v)
        if (view.member[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<std::vector<long long>> curve_tuples(int g, long long max_gen) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> acc;
    // depth-first over strictly increasing tuples; validity is delegated to
    // curve_from_generators so enumeration and validation cannot drift apart
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == g + 1) {
            try {
                curve_from_generators(acc);
            } catch (const Error&) {
                return;
            }
            out.push_back(acc);
            return;
        }
        long long from = acc.empty() ? 2 : acc.back() + 1;
        for (long long b = from; b <= max_gen; ++b) {
            acc.push_back(b);
            self(self, depth + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SweepResult thm34_sweep(int max_g, long long max_gen) {
    if (max_g < 1 || max_gen < 2) fail(errc::out_of_domain, "sweep bounds must satisfy max_g >= 1, max_gen >= 2");
    SweepResult res;
    res.instances_by_g.assign(static_cast<std::size_t>(max_g), 0);
    for (int g = 1; g <= max_g; ++g) {
        for (const auto& gens : curve_tuples(g, max_gen)) {
            const CurveData c = curve_from_generators(gens);
            ++res.instances;
            ++res.instances_by_g[static_cast<std::size_t>(g - 1)];

            if (milnor_zariski(c) != milnor_acampo(c))
                res.violations.push_back("Milnor formulas disagree for " + tuple_str(gens));

            // conductor, gap count and the element<->gap mirror a -> mu-1-a
            const SemigroupView view = semigroup_view(c, c.conductor);
            if (static_cast<long long>(view.gaps.size()) * 2 != c.mu)
                res.violations.push_back("gap count is not mu/2 for " + tuple_str(gens));
            bool mirror_ok = true;
            for (long long a = 0; a < c.mu; ++a) {
                bool in_s = view.member[static_cast<std::size_t>(a)];
                bool mirror_in_s = view.member[static_cast<std::size_t>(c.mu - 1 - a)];
                if (in_s == mirror_in_s) mirror_ok = false;
            }
            if (!mirror_ok) res.violations.push_back("element/gap mirror fails for " + tuple_str(gens));

            // proof-chain inequality mu > -beta_g + beta_0 beta_1 - beta_0
            const long long bound = -c.beta.back() + c.beta[0] * c.beta[1] - c.beta[0];
            if (!(c.mu > bound))
                res.violations.push_back("lower bound on mu fails for " + tuple_str(gens));

            // g = 2 positivity mu - e_1^2 mu_1 > 0
            if (c.g == 2) {
                const long long mu1 = (c.n[1] - 1) * (c.q[1] - 1);
                if (!(c.mu - c.e[1] * c.e[1] * mu1 > 0))
                    res.violations.push_back("scaled-first-pair positivity fails for " + tuple_str(gens));
            }

            const Rat phi = phi_at_lct(c);
            if (phi <= 0) res.exceptions.push_back(SweepException{gens, phi});
        }
    }
    return res;
}

}  // namespace spectre
