// Irreducible plane curve singularities through their value semigroups:
// derived invariants of a minimal generator tuple, the two classical Milnor
// number formulas, gap/conductor structure, the below-one spectral numbers,
// the log canonical threshold, and the sign results for the spectral
// discrepancy at distinguished arguments.
#pragma once

#include <string>
#include <vector>

#include "spectre/rational.hpp"

namespace spectre {

// Invariants derived from the minimal generators of the value semigroup.
// With generators b_0 < b_1 < ... < b_g:
//   e_i = gcd(b_0..b_i)   (strictly decreasing, e_g = 1)
//   n_i = e_{i-1}/e_i     (n_0 = 1 by convention)
//   q_i = b_i/e_i
//   beta_i = characteristic exponents (beta_i = b_i - n_{i-1} b_{i-1} + beta_{i-1})
struct CurveData {
    std::vector<long long> gens;
    std::vector<long long> e;
    std::vector<long long> n;
    std::vector<long long> q;
    std::vector<long long> beta;
    int g = 0;
    long long mu = 0;         // Milnor number; equals the conductor
    long long conductor = 0;
};

// Validates a generator tuple and derives every invariant; throws
// InvalidCharSequence naming the violated condition.
CurveData curve_from_generators(const std::vector<long long>& gens);

// mu = sum beta_i (e_{i-1} - e_i) - beta_0 + 1.
long long milnor_zariski(const CurveData& c);

// mu = sum e_i mu_i with mu_i = (n_i - 1)(q_i - 1).
long long milnor_acampo(const CurveData& c);

struct SemigroupView {
    long long conductor = 0;
    std::vector<long long> elements_below_conductor;
    std::vector<long long> gaps;
    std::vector<bool> member;  // membership table over [0, bound]
};

// Sieve-based membership up to `bound` (must be >= the conductor).
SemigroupView semigroup_view(const CurveData& c, long long bound);

// Spectral numbers below one for a single characteristic pair (p,q):
// (k + p + q)/(pq) for k in S with k <= mu - 2.  Throws NotSinglePair.
std::vector<Rat> spectral_below_one(const CurveData& c);

// Log canonical threshold 1/b_0 + 1/b_1, the smallest spectral number.
Rat lct(const CurveData& c);

// Spectral discrepancy at the log canonical threshold:
// (1/2) lct^2 - 1/mu, exact.
Rat phi_at_lct(const CurveData& c);

// Closed-form value reported for the discrepancy at the largest spectral
// number below one, -1/(2 p^2 q^2); single pair only.
Rat phi_at_top(const CurveData& c);

// The same quantity evaluated from the definition: the continuous CDF at
// 1 - 1/(pq) is (1/2)(1 - 1/(pq))^2 and exactly half the spectrum sits at
// or below that point, giving (1/2)(1 - 1/(pq))^2 - 1/2.  Kept separate
// from phi_at_top because the two expressions differ; tests compare this
// one against the spectrum-based evaluation.
Rat phi_at_top_definition(const CurveData& c);

// Semigroup elements in [0, max_k], ascending: the jump positions of the
// empirical spectral staircase on the below-one range (shifted by p + q
// and divided by pq).
std::vector<long long> staircase_elements(const CurveData& c, long long max_k);

struct SweepException {
    std::vector<long long> gens;
    Rat phi;  // nonpositive phi_at_lct value
};

struct SweepResult {
    long long instances = 0;
    std::vector<long long> instances_by_g;     // [g-1] = count for that g
    std::vector<SweepException> exceptions;    // tuples with phi_at_lct <= 0
    std::vector<std::string> violations;       // broken invariants; empty on success
};

// All valid minimal generator tuples with the given number of pairs and
// every generator <= max_gen, lexicographically ordered.
std::vector<std::vector<long long>> curve_tuples(int g, long long max_gen);

// Exhaustive sweep over g in 1..max_g: checks both Milnor formulas agree,
// the conductor/gap structure, the proof-chain inequalities
// mu > -beta_g + beta_0 beta_1 - beta_0 and (g = 2) mu - e_1^2 mu_1 > 0,
// and collects every tuple whose phi_at_lct fails to be positive.
SweepResult thm34_sweep(int max_g, long long max_gen);

}  // namespace spectre
