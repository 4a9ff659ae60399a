#include "lolab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "lolab/geometry.hpp"

namespace lolab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = 1.4142135623730951;

// Paper-specified constants of the certificate chain.
constexpr double kFarDeltaCap = 1.9995;
constexpr double kFarAlpha = 1e-5;
constexpr double kCloseDeltaCap = 0.2;
constexpr double kCloseGroupCap = 0.1;
constexpr double kCloseAlpha = 0.01;
constexpr double kCloseRadius = 0.5;
constexpr double kArcWidth = 7.0 * kPi / 24.0;    // odd BranchA arc
constexpr double kOddAlpha = 0.2;

double sq(double x) { return x * x; }

double chord_sq_v(const Vec2& a, const Vec2& b) { return sq(a.x - b.x) + sq(a.y - b.y); }

// A vector of V, possibly negated, placed on the half-turn circle relative to
// a base direction. offset in [0, pi).
struct EffVec {
    Vec2 v;
    double offset;
    int idx;
    bool negated;
};

std::vector<EffVec> aligned_sorted(const std::vector<UnitVector>& vs, double base) {
    std::vector<EffVec> out;
    out.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const double a = arg_of(vs[i]).radians;
        double rel = std::fmod(a - base, 2.0 * kPi);
        if (rel < 0.0) rel += 2.0 * kPi;
        bool neg = false;
        while (rel >= kPi) {
            rel -= kPi;
            neg = !neg;
        }
        if (rel < 0.0) rel = 0.0;
        out.push_back({neg ? -vs[i].vec() : vs[i].vec(), rel, int(i), neg});
    }
    std::sort(out.begin(), out.end(), [](const EffVec& a, const EffVec& b) {
        return std::tie(a.offset, a.idx) < std::tie(b.offset, b.idx);
    });
    return out;
}

double closed_chain_sum(const std::vector<EffVec>& al) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < al.size(); ++i) s += chord_sq_v(al[i].v, al[i + 1].v);
    s += chord_sq_v(al.back().v, -al.front().v);
    return s;
}

// Identity pairing (1,2)(3,4)... and shifted pairing (2,3)...(n,-v1) over an
// aligned even-length chain; both are computed so the pigeonhole choice is
// explicit.
struct PairingChoice {
    double delta_id, delta_sh;
    bool shifted;
    double delta() const { return shifted ? delta_sh : delta_id; }
};

PairingChoice chain_pairings(const std::vector<EffVec>& al) {
    const std::size_t n = al.size();
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i + 1 < n; i += 2) d0 += chord_sq_v(al[i].v, al[i + 1].v);
    for (std::size_t i = 1; i + 1 < n; i += 2) d1 += chord_sq_v(al[i].v, al[i + 1].v);
    d1 += chord_sq_v(al[n - 1].v, -al[0].v);
    return {d0, d1, d1 < d0};
}

struct CovParts {
    double per_axis, cells, mass, value;
};

CovParts covering_parts(int m, double big_k, double a, int d) {
    if (m < 1 || big_k <= 0.0 || a <= 0.0 || d < 1)
        throw std::invalid_argument("chebyshev_pair_bound: need m>=1, K>0, a>0, d>=1");
    CovParts p;
    p.per_axis = std::ceil(4.0 * d * big_k * std::sqrt(double(m)) * std::sqrt(double(d)) / a);
    p.cells = std::pow(p.per_axis, d);
    p.mass = 1.0 - 1.0 / (4.0 * d);
    p.value = p.mass * p.mass / p.cells;
    return p;
}

struct PbParts {
    double a, b, covering, post, value, per_axis, cells;
};

PbParts pairing_parts(int pairs, double delta, double r, double alpha) {
    if (pairs < 1) throw std::invalid_argument("pairing_bound: need at least one pair");
    if (alpha <= 0.0 || r <= 0.0) throw std::invalid_argument("pairing_bound: need r, alpha > 0");
    if (delta < 0.0 || r * r < alpha + delta - 1e-12)
        throw std::invalid_argument("pairing_bound: need r^2 >= alpha + delta_sq_sum");
    PbParts p;
    p.a = alpha / (3.0 * r);
    p.b = r - p.a;
    const CovParts cov = covering_parts(pairs, 1.0, p.a, 2);
    p.covering = cov.value;
    p.per_axis = cov.per_axis;
    p.cells = cov.cells;
    p.post = markov_tail_bound(p.b * p.b - r * p.a, p.b);
    p.value = p.covering * p.post;
    return p;
}

void push_step(Certificate& cert, std::string lemma, std::map<std::string, double> inputs,
               double value) {
    cert.trace.push_back({std::move(lemma), std::move(inputs), value});
}

void append_pairing_steps(Certificate& cert, int pairs, double delta_cap, double r,
                          double alpha, const PbParts& pb) {
    push_step(cert, "chebyshev_covering",
              {{"m", double(pairs)}, {"K", 1.0}, {"a", pb.a}, {"d", 2.0},
               {"per_axis", pb.per_axis}, {"cells", pb.cells}},
              pb.covering);
    push_step(cert, "markov_tail", {{"b", pb.b}, {"c", r * pb.a}}, pb.post);
    push_step(cert, "iterate_compose",
              {{"r", r}, {"alpha", alpha}, {"delta_cap", delta_cap}}, pb.value);
}

// Negate group members onto the near side of x, sort by signed angle, pair
// consecutively. Returns the pair chord-square sum.
double group_pairing_delta(const std::vector<UnitVector>& vs, const std::vector<int>& group,
                           const UnitVector& x, double gamma) {
    struct Member {
        Vec2 v;
        double psi;
        int idx;
    };
    std::vector<Member> ms;
    ms.reserve(group.size());
    for (int idx : group) {
        Vec2 w = vs[std::size_t(idx)].vec();
        if (w.dot(x.vec()) < 0.0) w = -w;
        const double psi = std::atan2(x.vec().cross(w), x.vec().dot(w));
        if (std::abs(psi) > gamma + kAngleTol)
            throw std::logic_error("group_pairing_delta: member not within gamma of witness");
        ms.push_back({w, psi, idx});
    }
    std::sort(ms.begin(), ms.end(), [](const Member& a, const Member& b) {
        return std::tie(a.psi, a.idx) < std::tie(b.psi, b.idx);
    });
    double delta = 0.0;
    for (std::size_t i = 0; i + 1 < ms.size(); i += 2) delta += chord_sq_v(ms[i].v, ms[i + 1].v);
    return delta;
}

Certificate::Branch certify_even_chain(const std::vector<UnitVector>& vs, Certificate& cert,
                                       double* out_bound);

}  // namespace

double certify_gamma() { return std::asin(0.1); }

const char* branch_name(Certificate::Branch b) {
    switch (b) {
        case Certificate::Branch::FarEven: return "FarEven";
        case Certificate::Branch::CloseEvenEven: return "CloseEvenEven";
        case Certificate::Branch::CloseEvenOdd: return "CloseEvenOdd";
        case Certificate::Branch::OddBranchA: return "OddBranchA";
        case Certificate::Branch::OddBranchB: return "OddBranchB";
    }
    return "?";
}

std::pair<Configuration, PairingPlan> normalize_to_semicircle(const Configuration& v) {
    const auto& vs = v.vectors();
    auto al = aligned_sorted(vs, 0.0);
    const double base = al.front().offset;

    PairingPlan plan;
    plan.negated.assign(vs.size(), 0);
    plan.rotation = -base;
    std::vector<UnitVector> out;
    out.reserve(vs.size());
    for (const auto& e : al) {
        plan.permutation.push_back(e.idx);
        plan.negated[std::size_t(e.idx)] = e.negated ? 1 : 0;
        out.push_back(UnitVector::from_angle(e.offset - base));
    }
    return {Configuration::from_units(std::move(out)), std::move(plan)};
}

double consecutive_chord_sum(const Configuration& v) {
    const auto& vs = v.vectors();
    double prev = arg_of(vs[0]).radians;
    const double first = prev;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const double a = arg_of(vs[i]).radians;
        if (a < prev - kAngleTol)
            throw std::invalid_argument("consecutive_chord_sum: arguments not nondecreasing");
        if (a - first > kPi + kAngleTol)
            throw std::invalid_argument("consecutive_chord_sum: arguments exceed a semicircle");
        prev = a;
    }
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) s += chord_sq(vs[i], vs[i + 1]);
    return s;
}

PairingPlan choose_pairing(const Configuration& v) {
    const int n = int(v.size());
    if (n % 2 != 0) throw std::invalid_argument("choose_pairing: n must be even");
    consecutive_chord_sum(v);  // validates sortedness

    const auto& vs = v.vectors();
    std::vector<EffVec> chain;
    chain.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        chain.push_back({vs[i].vec(), arg_of(vs[i]).radians, int(i), false});

    const PairingChoice pc = chain_pairings(chain);
    const double closed = closed_chain_sum(chain);

    PairingPlan plan;
    plan.negated.assign(vs.size(), 0);
    plan.delta_sq_sum = pc.delta();
    plan.used_shifted = pc.shifted;
    if (!pc.shifted) {
        for (int i = 0; i < n; ++i) plan.permutation.push_back(i);
    } else {
        for (int i = 1; i < n; ++i) plan.permutation.push_back(i);
        plan.permutation.push_back(0);
        plan.negated[0] = 1;
    }
    for (int i = 0; i < n; i += 2) plan.pairs.emplace_back(i, i + 1);
    for (int i = 0; i < n; i += 2) {
        const int ia = plan.permutation[std::size_t(i)];
        const int ib = plan.permutation[std::size_t(i + 1)];
        Vec2 a = vs[std::size_t(ia)].vec();
        Vec2 b = vs[std::size_t(ib)].vec();
        if (plan.negated[std::size_t(ia)]) a = -a;
        if (plan.negated[std::size_t(ib)]) b = -b;
        const Vec2 avg = (a + b) * 0.5;
        plan.averaged_norms_max = std::max(plan.averaged_norms_max, avg.norm());
    }
    if (plan.delta_sq_sum > closed / 2.0 + kAngleTol)
        throw std::logic_error("choose_pairing: pigeonhole guarantee violated");
    return plan;
}

TwoDirectionClass classify_two_directions(const Configuration& v, double gamma) {
    if (!(gamma > 0.0 && gamma <= kPi / 2))
        throw std::invalid_argument("classify_two_directions: gamma in (0, pi/2]");
    const auto& vs = v.vectors();
    TwoDirectionClass cls;
    cls.gamma = gamma;
    const UnitVector& u1 = vs[0];

    int j = -1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!gamma_close(vs[i], u1, gamma)) {
            j = int(i);
            break;
        }
    }
    if (j < 0) {
        cls.kind = TwoDirectionClass::Kind::Close;
        cls.x1 = u1;
        cls.x2 = u1;
        cls.assignment.assign(vs.size(), 1);
        cls.m = int(vs.size());
        return cls;
    }
    const UnitVector& u2 = vs[std::size_t(j)];
    int k = -1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!gamma_close(vs[i], u1, gamma) && !gamma_close(vs[i], u2, gamma)) {
            k = int(i);
            break;
        }
    }
    if (k < 0) {
        cls.kind = TwoDirectionClass::Kind::Close;
        cls.x1 = u1;
        cls.x2 = u2;
        cls.assignment.reserve(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            cls.assignment.push_back(gamma_close(vs[i], u1, gamma) ? 1 : 2);
        cls.m = int(std::count(cls.assignment.begin(), cls.assignment.end(), 1));
        return cls;
    }
    cls.kind = TwoDirectionClass::Kind::Far;
    cls.far_i = 0;
    cls.far_j = j;
    cls.far_k = k;
    return cls;
}

namespace {

std::pair<int, int> best_signs(const UnitVector& u, const UnitVector& u2, const Vec2& w,
                               const char* who) {
    double best = std::numeric_limits<double>::infinity();
    std::pair<int, int> out{1, 1};
    for (int e1 : {+1, -1}) {
        for (int e2 : {+1, -1}) {
            const Vec2 s = w + u.vec() * double(e1) + u2.vec() * double(e2);
            const double ns = s.norm_sq();
            if (ns < best) {
                best = ns;
                out = {e1, e2};
            }
        }
    }
    if (best > 2.0 + 3e-9) throw std::logic_error(std::string(who) + ": no sign pair works");
    return out;
}

}  // namespace

std::pair<int, int> kite_signs(const UnitVector& u, const UnitVector& u2, const Vec2& w) {
    if (w.norm_sq() > 0.25 + 1e-12)
        throw std::invalid_argument("kite_signs: requires |w| <= 1/2");
    return best_signs(u, u2, w, "kite_signs");
}

std::pair<int, int> geometry_signs(const UnitVector& u, const UnitVector& u2, const Vec2& w) {
    if (w.norm_sq() > 3.0 + 1e-9)
        throw std::invalid_argument("geometry_signs: requires |w| <= sqrt(3)");
    // the allowed negation of u2 maps beta to pi - beta, so the admissible set
    // [pi/2, 17pi/24] up to negation is beta in [7pi/24, 17pi/24]
    const double beta = angle_between(u, u2);
    if (beta < 7.0 * kPi / 24.0 - kAngleTol || beta > 17.0 * kPi / 24.0 + kAngleTol)
        throw std::invalid_argument("geometry_signs: angle outside [pi/2, 17pi/24] up to negation");
    return best_signs(u, u2, w, "geometry_signs");
}

ReduceToEven reduce_to_even(const Configuration& v) {
    const int n = int(v.size());
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("reduce_to_even: n must be odd and >= 3");
    const auto& vs = v.vectors();

    auto al = aligned_sorted(vs, 0.0);  // directions mod pi, sorted
    // Largest circular gap on the half-turn circle; a gap of at least
    // 17pi/24 means everything fits in an arc of width 7pi/24 starting at the
    // vector right after that gap.
    double best_gap = al.front().offset + kPi - al.back().offset;
    int start = al.front().idx;
    for (std::size_t i = 0; i + 1 < al.size(); ++i) {
        const double g = al[i + 1].offset - al[i].offset;
        if (g > best_gap) {
            best_gap = g;
            start = al[i + 1].idx;
        }
    }
    if (best_gap >= kPi - kArcWidth - kAngleTol) {
        ReduceToEven r;
        r.kind = ReduceToEven::Kind::BranchA;
        r.i = start;
        return r;
    }
    // Claim: some pair is at line-angle >= 7pi/24 (both from v_j and -v_j).
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double t = angle_between(vs[std::size_t(i)], vs[std::size_t(j)]);
            if (std::min(t, kPi - t) >= kArcWidth - 1e-12) {
                ReduceToEven r;
                r.kind = ReduceToEven::Kind::BranchB;
                r.i = i;
                r.j = j;
                for (int k = 0; k < n; ++k) {
                    if (k != i && k != j) {
                        r.k = k;
                        break;
                    }
                }
                return r;
            }
        }
    }
    throw std::logic_error("reduce_to_even: no arc and no far pair (cannot happen)");
}

double chebyshev_pair_bound(int m, double big_k, double a, int d) {
    return covering_parts(m, big_k, a, d).value;
}

double markov_tail_bound(double sum_sq, double b) {
    if (!(b > 0.0) || sum_sq < 0.0 || sum_sq >= b * b)
        throw std::invalid_argument("markov_tail_bound: requires 0 <= sum_sq < b^2");
    return (b * b - sum_sq) / (b * b);
}

double pairing_bound(int n, double delta_sq_sum, double r, double alpha, bool odd) {
    if (!odd && (n < 2 || n % 2 != 0))
        throw std::invalid_argument("pairing_bound: n must be even");
    if (odd && (n < 3 || n % 2 == 0))
        throw std::invalid_argument("pairing_bound: odd mode needs odd n >= 3");
    const int pairs = (odd ? n - 1 : n) / 2;
    return pairing_parts(pairs, delta_sq_sum, r, alpha).value;
}

bool iterate_identity_check(const Configuration& v) {
    const int n = int(v.size());
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("iterate_identity_check: n even");
    if (n > 10) throw std::length_error("iterate_identity_check: n <= 10");
    const int pairs = n / 2;
    const auto& vs = v.vectors();

    if (v.is_exact()) {
        const auto& rc = v.rational();
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> lhs, rhs;
        // construction atoms, weights in units of 2^-(3*pairs)
        for (std::uint32_t e1 = 0; e1 < (1u << pairs); ++e1) {
            for (std::uint32_t e2 = 0; e2 < (1u << pairs); ++e2) {
                std::int64_t bx = 0, by = 0;
                std::vector<int> same;
                for (int i = 0; i < pairs; ++i) {
                    const auto& [p1, q1] = rc.pairs[std::size_t(2 * i)];
                    const auto& [p2, q2] = rc.pairs[std::size_t(2 * i + 1)];
                    const int s1 = (e1 >> i) & 1 ? 1 : -1;
                    const int s2 = (e2 >> i) & 1 ? 1 : -1;
                    if (s1 == s2) {
                        same.push_back(i);
                    } else {
                        // (e1 - e2)/2 * (v1 + v2), at scale 2s
                        bx += s1 * 2 * (p1 + p2);
                        by += s1 * 2 * (q1 + q2);
                    }
                }
                const std::int64_t w = std::int64_t(1) << (pairs - int(same.size()));
                for (std::uint32_t e3 = 0; e3 < (1u << same.size()); ++e3) {
                    std::int64_t x = bx, y = by;
                    for (std::size_t t = 0; t < same.size(); ++t) {
                        const int i = same[t];
                        const auto& [p1, q1] = rc.pairs[std::size_t(2 * i)];
                        const auto& [p2, q2] = rc.pairs[std::size_t(2 * i + 1)];
                        const int s3 = (e3 >> t) & 1 ? 1 : -1;
                        x += s3 * 2 * (p1 - p2);
                        y += s3 * 2 * (q1 - q2);
                    }
                    lhs[{x, y}] += w;
                }
            }
        }
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
            std::int64_t x = 0, y = 0;
            for (int i = 0; i < n; ++i) {
                const auto& [p, q] = rc.pairs[std::size_t(i)];
                const int s = (m >> i) & 1 ? 1 : -1;
                x += s * 2 * p;
                y += s * 2 * q;
            }
            rhs[{x, y}] += std::int64_t(1) << pairs;
        }
        return lhs == rhs;
    }

    // float mode: cluster atoms within 1e-9 and compare net signed mass
    struct Atom {
        double x, y, mass;
    };
    std::vector<Atom> atoms;
    const double unit = std::ldexp(1.0, -3 * pairs);
    for (std::uint32_t e1 = 0; e1 < (1u << pairs); ++e1) {
        for (std::uint32_t e2 = 0; e2 < (1u << pairs); ++e2) {
            double bx = 0, by = 0;
            std::vector<int> same;
            for (int i = 0; i < pairs; ++i) {
                const Vec2 h = (vs[std::size_t(2 * i)].vec() + vs[std::size_t(2 * i + 1)].vec()) * 0.5;
                const int s1 = (e1 >> i) & 1 ? 1 : -1;
                const int s2 = (e2 >> i) & 1 ? 1 : -1;
                if (s1 == s2) {
                    same.push_back(i);
                } else {
                    bx += 2.0 * s1 * h.x;
                    by += 2.0 * s1 * h.y;
                }
            }
            const double w = unit * double(std::uint64_t(1) << (pairs - int(same.size())));
            for (std::uint32_t e3 = 0; e3 < (1u << same.size()); ++e3) {
                double x = bx, y = by;
                for (std::size_t t = 0; t < same.size(); ++t) {
                    const int i = same[t];
                    const Vec2 d = vs[std::size_t(2 * i)].vec() - vs[std::size_t(2 * i + 1)].vec();
                    const int s3 = (e3 >> t) & 1 ? 1 : -1;
                    x += s3 * d.x;
                    y += s3 * d.y;
                }
                atoms.push_back({x, y, w});
            }
        }
    }
    const double unit_rhs = std::ldexp(1.0, -n);
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
        double x = 0, y = 0;
        for (int i = 0; i < n; ++i) {
            const double s = (m >> i) & 1 ? 1.0 : -1.0;
            x += s * vs[std::size_t(i)].x();
            y += s * vs[std::size_t(i)].y();
        }
        atoms.push_back({x, y, -unit_rhs});
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    // two-level clustering: split on x jumps, then on y jumps within x-groups
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t jx = i;
        while (jx + 1 < atoms.size() && atoms[jx + 1].x - atoms[jx].x <= 1e-9) ++jx;
        std::sort(atoms.begin() + long(i), atoms.begin() + long(jx) + 1,
                  [](const Atom& a, const Atom& b) { return a.y < b.y; });
        std::size_t k = i;
        while (k <= jx) {
            std::size_t ky = k;
            double net = atoms[k].mass;
            while (ky + 1 <= jx && atoms[ky + 1].y - atoms[ky].y <= 1e-9) {
                ++ky;
                net += atoms[ky].mass;
            }
            if (std::abs(net) > 1e-9) return false;
            k = ky + 1;
        }
        i = jx + 1;
    }
    return true;
}

namespace {

// The (2,gamma)-far branch of the even case: reorder around the first far
// vector, bound the closed chain through the far triple, pigeonhole the two
// interleaved pairings.
double far_even_bound(const std::vector<UnitVector>& vs, const TwoDirectionClass& cls,
                      Certificate& cert) {
    const int n = int(vs.size());
    const double gamma = cls.gamma;
    const double base = arg_of(vs[std::size_t(cls.far_i)]).radians;
    const auto al = aligned_sorted(vs, base);

    double oj = -1.0, ok = -1.0;
    for (const auto& e : al) {
        if (e.idx == cls.far_j) oj = e.offset;
        if (e.idx == cls.far_k) ok = e.offset;
    }
    const double lo = std::min(oj, ok), hi = std::max(oj, ok);
    if (lo < gamma - kAngleTol || hi - lo < gamma - kAngleTol || kPi - hi < gamma - kAngleTol)
        throw std::logic_error("certify: far triple offsets violate gamma separation");
    push_step(cert, "far_characterize",
              {{"i", double(cls.far_i)}, {"j", double(cls.far_j)}, {"k", double(cls.far_k)},
               {"gamma", gamma}},
              gamma);

    const double three_point_cap = 4.0 - 8.0 * std::pow(std::sin(gamma / 2.0), 3.0);
    const double chain = closed_chain_sum(al);
    if (chain > std::min(three_point_cap, 2.0 * kFarDeltaCap) + kAngleTol)
        throw std::logic_error("certify: closed chain exceeds three-point-set cap");
    push_step(cert, "generalized_circle_order/three_point_set",
              {{"cap", three_point_cap}, {"theta1", lo}, {"theta2", hi - lo},
               {"theta3", kPi - hi}},
              chain);

    const PairingChoice pc = chain_pairings(al);
    if (pc.delta() > kFarDeltaCap + kAngleTol)
        throw std::logic_error("certify: far pairing exceeds 1.9995");
    push_step(cert, "pigeonhole_pairing",
              {{"delta_id", pc.delta_id}, {"delta_shifted", pc.delta_sh},
               {"shifted", pc.shifted ? 1.0 : 0.0}},
              pc.delta());

    const PbParts pb = pairing_parts(n / 2, kFarDeltaCap, kSqrt2, kFarAlpha);
    append_pairing_steps(cert, n / 2, kFarDeltaCap, kSqrt2, kFarAlpha, pb);
    cert.constants["alpha"] = kFarAlpha;
    cert.constants["delta_cap"] = kFarDeltaCap;
    cert.constants["r_chain"] = kSqrt2;
    cert.constants["a"] = pb.a;
    cert.constants["covering_cells"] = pb.cells;
    cert.constants["postfactor"] = pb.post;
    return pb.value;
}

// The evenSteven chain on two even groups; returns pairing_bound at radius
// 1/2 (which implies every radius >= 1/2, in particular sqrt(2)).
double even_steven_bound(const std::vector<UnitVector>& vs, const std::vector<int>& g1,
                         const std::vector<int>& g2, const UnitVector& x1, const UnitVector& x2,
                         double gamma, Certificate& cert) {
    const int n = int(g1.size() + g2.size());
    double delta = 0.0;
    for (const auto* g : {&g1, &g2}) {
        if (g->empty()) continue;
        const UnitVector& x = (g == &g1) ? x1 : x2;
        const double d = group_pairing_delta(vs, *g, x, gamma);
        if (d > kCloseGroupCap + kAngleTol)
            throw std::logic_error("certify: group pairing exceeds 0.1");
        push_step(cert, "even_steven_group",
                  {{"size", double(g->size())}, {"cap", kCloseGroupCap}}, d);
        delta += d;
    }
    if (delta > kCloseDeltaCap + kAngleTol)
        throw std::logic_error("certify: total close pairing exceeds 0.2");

    const PbParts pb = pairing_parts(n / 2, kCloseDeltaCap, kCloseRadius, kCloseAlpha);
    append_pairing_steps(cert, n / 2, kCloseDeltaCap, kCloseRadius, kCloseAlpha, pb);
    cert.constants["alpha"] = kCloseAlpha;
    cert.constants["delta_cap"] = kCloseDeltaCap;
    cert.constants["r_chain"] = kCloseRadius;
    cert.constants["a"] = pb.a;
    cert.constants["covering_cells"] = pb.cells;
    cert.constants["postfactor"] = pb.post;
    return pb.value;
}

Certificate::Branch certify_even_chain(const std::vector<UnitVector>& vs, Certificate& cert,
                                       double* out_bound) {
    const double gamma = certify_gamma();
    const auto cls = classify_two_directions(Configuration::from_units(vs), gamma);

    if (cls.kind == TwoDirectionClass::Kind::Far) {
        *out_bound = far_even_bound(vs, cls, cert);
        return Certificate::Branch::FarEven;
    }

    std::vector<int> g1, g2;
    for (std::size_t i = 0; i < cls.assignment.size(); ++i)
        (cls.assignment[i] == 1 ? g1 : g2).push_back(int(i));

    if (g1.size() % 2 == 0) {
        *out_bound = even_steven_bound(vs, g1, g2, cls.x1, cls.x2, gamma, cert);
        return Certificate::Branch::CloseEvenEven;
    }

    // odd group sizes: drop the last member of each group, recover the even
    // case, pay 1/4 for the two re-added signs (kite lemma).
    const int r1 = g1.back();
    const int r2 = g2.back();
    g1.pop_back();
    g2.pop_back();
    push_step(cert, "kite_removal", {{"removed_1", double(r1)}, {"removed_2", double(r2)}}, 0.25);
    double base = 1.0;
    if (!g1.empty() || !g2.empty()) {
        std::vector<UnitVector> rest;
        std::vector<int> h1, h2;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (int(i) == r1 || int(i) == r2) continue;
            const int grp = cls.assignment[i];
            (grp == 1 ? h1 : h2).push_back(int(rest.size()));
            rest.push_back(vs[i]);
        }
        base = even_steven_bound(rest, h1, h2, cls.x1, cls.x2, gamma, cert);
    } else {
        push_step(cert, "empty_remainder", {}, 1.0);
    }
    cert.constants["branch_factor"] = 0.25;
    *out_bound = base * 0.25;
    return Certificate::Branch::CloseEvenOdd;
}

}  // namespace

Certificate certify(const Configuration& v, double r) {
    const int n = int(v.size());
    if (n < 2) throw std::invalid_argument("certify: n >= 2");
    if (r < kSqrt2 - 1e-12) throw std::invalid_argument("certify: r >= sqrt(2)");
    const auto& vs = v.vectors();

    Certificate cert;
    cert.n = n;
    cert.r = r;
    cert.constants["gamma"] = certify_gamma();

    double bound = 0.0;
    if (n % 2 == 0) {
        cert.branch = certify_even_chain(vs, cert, &bound);
    } else {
        const auto red = reduce_to_even(v);
        if (red.kind == ReduceToEven::Kind::BranchA) {
            const double base = arg_of(vs[std::size_t(red.i)]).radians;
            const auto al = aligned_sorted(vs, base);
            for (const auto& e : al)
                if (e.offset > kArcWidth + kAngleTol)
                    throw std::logic_error("certify: BranchA arc width exceeded");
            const double arc_cap = 4.0 * sq(std::sin(kArcWidth / 2.0));
            double delta = 0.0;
            for (std::size_t i = 0; i + 2 < al.size(); i += 2)
                delta += chord_sq_v(al[i].v, al[i + 1].v);
            if (delta > arc_cap + kAngleTol)
                throw std::logic_error("certify: BranchA pairing exceeds arc cap");
            push_step(cert, "narrow_arc_pairing",
                      {{"i", double(red.i)}, {"arc", kArcWidth}, {"cap", arc_cap}}, delta);
            const PbParts pb = pairing_parts((n - 1) / 2, arc_cap, 1.0, kOddAlpha);
            append_pairing_steps(cert, (n - 1) / 2, arc_cap, 1.0, kOddAlpha, pb);
            push_step(cert, "half_sign_reentry", {{"dropped", double(al.back().idx)}}, 0.5);
            cert.constants["alpha"] = kOddAlpha;
            cert.constants["delta_cap"] = arc_cap;
            cert.constants["r_chain"] = 1.0;
            cert.constants["a"] = pb.a;
            cert.constants["covering_cells"] = pb.cells;
            cert.constants["postfactor"] = pb.post;
            cert.constants["branch_factor"] = 0.5;
            bound = pb.value * 0.5;
            cert.branch = Certificate::Branch::OddBranchA;
        } else {
            push_step(cert, "reduce_to_even_triple",
                      {{"i", double(red.i)}, {"j", double(red.j)}, {"k", double(red.k)}}, 0.125);
            double base = 1.0;
            if (n > 3) {
                std::vector<UnitVector> rest;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    if (int(i) != red.i && int(i) != red.j && int(i) != red.k)
                        rest.push_back(vs[i]);
                Certificate sub;
                sub.n = n - 3;
                const auto sub_branch = certify_even_chain(rest, sub, &base);
                for (auto& s : sub.trace) cert.trace.push_back(std::move(s));
                for (auto& [k2, v2] : sub.constants) cert.constants[k2] = v2;
                cert.constants["even_sub_branch"] =
                    double(static_cast<int>(sub_branch));
            } else {
                push_step(cert, "empty_remainder", {}, 1.0);
            }
            cert.constants["branch_factor"] = 0.125;
            bound = base * 0.125;
            cert.branch = Certificate::Branch::OddBranchB;
        }
    }

    cert.bound = bound;
    if (!(bound > 0.0) || bound * n > 1.0 + 1e-12)
        throw std::logic_error("certify: bound invariant violated");
    return cert;
}

}  // namespace lolab
