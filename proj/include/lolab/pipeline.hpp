#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lolab/configuration.hpp"

namespace lolab {

/// gamma used by certify(), matching the constant arcsin(0.1).
double certify_gamma();

/// Negation mask + permutation + consecutive pairing over a reordered copy of
/// a configuration, with the chord-square sum of the induced difference
/// sequence.
struct PairingPlan {
    std::vector<std::uint8_t> negated;         // per input index
    std::vector<int> permutation;              // output position -> input index
    double rotation{0.0};                      // rotation applied to all vectors
    std::vector<std::pair<int, int>> pairs;    // output-position pairs
    double delta_sq_sum{0.0};
    bool used_shifted{false};
    double averaged_norms_max{0.0};
};

/// Outcome of the two-direction classification at closeness angle gamma.
struct TwoDirectionClass {
    enum class Kind { Close, Far };
    Kind kind{Kind::Close};
    double gamma{0.0};
    // Close: two witness directions and a per-index assignment (1 or 2).
    UnitVector x1{1.0, 0.0};
    UnitVector x2{1.0, 0.0};
    int m{0};  // number of indices assigned to x1
    std::vector<int> assignment;
    // Far: indices of three pairwise gamma-far vectors.
    int far_i{-1}, far_j{-1}, far_k{-1};
};

struct TraceStep {
    std::string lemma;
    std::map<std::string, double> inputs;
    double value{0.0};
};

/// Explicit numeric lower bound on Pr[|sigma_V| <= r] together with the chain
/// of lemma applications and every constant that went into it.
struct Certificate {
    enum class Branch { FarEven, CloseEvenEven, CloseEvenOdd, OddBranchA, OddBranchB };
    int n{0};
    double r{0.0};
    double bound{0.0};
    Branch branch{Branch::FarEven};
    std::map<std::string, double> constants;
    std::vector<TraceStep> trace;
};

const char* branch_name(Certificate::Branch b);

/// Negate/reorder (and rotate so the smallest argument is 0) so that output
/// arguments are nondecreasing in [0, pi]. The law of sigma_V is unchanged.
/// The returned plan records mask, permutation and rotation; pairing fields
/// are left empty.
std::pair<Configuration, PairingPlan> normalize_to_semicircle(const Configuration& v);

/// Sum of squared consecutive chords of a configuration sorted by argument
/// within a semicircle. Rejects unsorted input.
double consecutive_chord_sum(const Configuration& v_sorted);

/// For even n and sorted semicircle input, picks the better of the identity
/// pairing and the pairing of the shifted sequence (v2,...,vn,-v1); the
/// selected delta_sq_sum is at most half the closed-chain chord sum.
PairingPlan choose_pairing(const Configuration& v_sorted);

/// Greedy classification: either every vector is gamma-close to one of two
/// witness directions, or three pairwise gamma-far vectors are produced.
TwoDirectionClass classify_two_directions(const Configuration& v, double gamma);

/// Signs (e, e') with |w + e*u + e'*u2| <= sqrt(2) + 1e-9, found by trying all
/// four pairs; existence is guaranteed for |w| <= 1/2.
std::pair<int, int> kite_signs(const UnitVector& u, const UnitVector& u2, const Vec2& w);

/// Same contract for |w| <= sqrt(3) and unit vectors whose angle (after an
/// allowed negation of u2) lies in [pi/2, 17pi/24].
std::pair<int, int> geometry_signs(const UnitVector& u, const UnitVector& u2, const Vec2& w);

/// Odd-n reduction: either all vectors fit (up to negation) in an arc of width
/// 7pi/24 starting at vector `i`, or a triple (i, j, k) is returned for which
/// three added signed vectors can always re-enter the sqrt(2) ball. Indices
/// are 0-based.
struct ReduceToEven {
    enum class Kind { BranchA, BranchB };
    Kind kind{Kind::BranchA};
    int i{-1}, j{-1}, k{-1};
};
ReduceToEven reduce_to_even(const Configuration& v);

/// Explicit constant behind the covering/collision lemma:
/// q_a >= (1 - 1/(4d))^2 / N with N = ceil(4dK sqrt(m) sqrt(d) / a)^d.
double chebyshev_pair_bound(int m, double big_k, double a, int d);

/// (b^2 - sum_sq) / b^2: lower bound on p_b(D) for every subsequence D of a
/// family with total squared norm sum_sq < b^2.
double markov_tail_bound(double sum_sq, double b);

/// Composition of the covering bound and the tail bound through the
/// distribution identity: returns
///   chebyshev_pair_bound(n/2, 1, a, 2) * (r*a)/(r-a)^2,  a = alpha/(3r),
/// a lower bound on p_r(V) for any unit-vector V with an n/2-pairing whose
/// delta_sq_sum satisfies r^2 >= alpha + delta_sq_sum. With odd = true, n is
/// odd, one vector is dropped and the certified radius is r + 1 instead of r.
double pairing_bound(int n, double delta_sq_sum, double r, double alpha, bool odd = false);

/// Enumerates the three-layer sign decomposition and checks that
/// sigma1 - sigma2 + sigma3 has exactly the law of sigma_V (per-atom exact in
/// rational mode, within 1e-9 mass otherwise). Requires n even, n <= 10.
bool iterate_identity_check(const Configuration& v);

/// Execute the full case analysis at gamma = arcsin(0.1) and produce an
/// explicit positive lower bound on Pr[|sigma_V| <= r] (r >= sqrt(2)).
Certificate certify(const Configuration& v, double r = 1.4142135623730951);

}  // namespace lolab
