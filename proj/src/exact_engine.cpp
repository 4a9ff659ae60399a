#include "lolab/exact_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "lolab/dyadic.hpp"
#include "lolab/parallel.hpp"

namespace lolab {

namespace {

// Canonical summation order shared by the naive and meet-in-the-middle
// engines: block [0,h) accumulated in index order, block [h,n) likewise,
// then one final add. Keeps the two engines bit-identical in float mode.
int left_block_size(int n) { return n - n / 2; }

Vec2 block_sum(const std::vector<UnitVector>& vs, std::uint64_t mask, int lo, int hi) {
    double sx = 0.0, sy = 0.0;
    for (int i = lo; i < hi; ++i) {
        if ((mask >> i) & 1) {
            sx += vs[i].x();
            sy += vs[i].y();
        } else {
            sx -= vs[i].x();
            sy -= vs[i].y();
        }
    }
    return {sx, sy};
}

struct IVec {
    std::int64_t x{0}, y{0};
};

IVec block_sum_int(const RationalCoords& rc, std::uint64_t mask, int lo, int hi) {
    IVec s;
    for (int i = lo; i < hi; ++i) {
        const auto& [p, q] = rc.pairs[i];
        if ((mask >> i) & 1) {
            s.x += p;
            s.y += q;
        } else {
            s.x -= p;
            s.y -= q;
        }
    }
    return s;
}

// 0 = inside, 1 = uncertain, 2 = outside.
inline int classify_float(double s, double r_sq, double eps) {
    if (std::abs(s - r_sq) <= eps) return 1;
    return s < r_sq ? 0 : 2;
}

inline bool inside_exact(std::int64_t sx, std::int64_t sy, double r_sq, std::int64_t scale) {
    const uint128 lhs = uint128(int128(sx) * sx) + uint128(int128(sy) * sy);
    return int_le_scaled_double(lhs, r_sq, uint128(int128(scale) * scale));
}

CountResult make_result(const Configuration& v, double r_sq, double eps,
                        std::uint64_t inside, std::uint64_t uncertain, std::uint64_t total) {
    CountResult r;
    r.n = int(v.size());
    r.r_sq = r_sq;
    r.count_inside = inside;
    r.count_uncertain = uncertain;
    r.total = total;
    r.prob_lower = double(inside) / double(total);
    r.prob_upper = double(inside + uncertain) / double(total);
    r.eps_band = eps;
    r.exact_mode = v.is_exact();
    return r;
}

// ---- meet-in-the-middle machinery ----

struct FPoint {
    double x, y;
    std::uint64_t cnt;
};

struct IPoint {
    std::int64_t x, y;
    std::uint64_t cnt;
};

std::uint64_t key_bits(double d) { return std::bit_cast<std::uint64_t>(d); }

// Deduplicate a list of points, merging counts of bitwise-equal values.
void dedupe(std::vector<FPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const FPoint& a, const FPoint& b) {
        return std::make_pair(key_bits(a.x), key_bits(a.y)) <
               std::make_pair(key_bits(b.x), key_bits(b.y));
    });
    std::size_t w = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (w > 0 && key_bits(pts[w - 1].x) == key_bits(pts[i].x) &&
            key_bits(pts[w - 1].y) == key_bits(pts[i].y)) {
            pts[w - 1].cnt += pts[i].cnt;
        } else {
            pts[w++] = pts[i];
        }
    }
    pts.resize(w);
}

void dedupe(std::vector<IPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const IPoint& a, const IPoint& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    std::size_t w = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (w > 0 && pts[w - 1].x == pts[i].x && pts[w - 1].y == pts[i].y) {
            pts[w - 1].cnt += pts[i].cnt;
        } else {
            pts[w++] = pts[i];
        }
    }
    pts.resize(w);
}

struct CellRange {
    std::int64_t cx, cy;
    std::uint32_t begin, end;
};

template <class Point, class CellOf>
std::vector<CellRange> build_cells(std::vector<Point>& pts, CellOf cell_of) {
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        return cell_of(a.x, a.y) < cell_of(b.x, b.y);
    });
    std::vector<CellRange> cells;
    for (std::uint32_t i = 0; i < pts.size();) {
        const auto key = cell_of(pts[i].x, pts[i].y);
        std::uint32_t j = i;
        while (j < pts.size() && cell_of(pts[j].x, pts[j].y) == key) ++j;
        cells.push_back({key.first, key.second, i, j});
        i = j;
    }
    return cells;
}

const CellRange* find_cell(const std::vector<CellRange>& cells, std::int64_t cx, std::int64_t cy) {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(cx, cy),
                               [](const CellRange& c, const std::pair<std::int64_t, std::int64_t>& k) {
                                   return std::tie(c.cx, c.cy) < std::tie(k.first, k.second);
                               });
    if (it == cells.end() || it->cx != cx || it->cy != cy) return nullptr;
    return &*it;
}

struct Counts {
    std::uint64_t inside{0}, uncertain{0};
};

CountResult mitm_float(const Configuration& v, double r_sq, double eps, int threads) {
    const int n = int(v.size());
    const int h = left_block_size(n);
    const auto& vs = v.vectors();

    std::vector<FPoint> left, right;
    left.reserve(std::size_t(1) << h);
    right.reserve(std::size_t(1) << (n - h));
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << h); ++m) {
        const Vec2 s = block_sum(vs, m, 0, h);
        left.push_back({s.x, s.y, 1});
    }
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << (n - h)); ++m) {
        const Vec2 s = block_sum(vs, m << h, h, n);
        right.push_back({s.x, s.y, 1});
    }
    dedupe(left);
    dedupe(right);

    double max_abs = 1e-300;
    for (const auto& p : right) max_abs = std::max({max_abs, std::abs(p.x), std::abs(p.y)});
    for (const auto& p : left) max_abs = std::max({max_abs, std::abs(p.x), std::abs(p.y)});
    const double ru = std::sqrt(std::max(0.0, r_sq + eps));
    const double cell = std::max(ru * (1.0 + 1e-12), max_abs * 0x1p-20);

    const auto cell_of = [cell](double x, double y) {
        return std::make_pair(std::int64_t(std::floor(x / cell)),
                              std::int64_t(std::floor(y / cell)));
    };
    const auto cells = build_cells(right, cell_of);

    std::vector<Counts> acc(std::size_t(resolve_threads(threads)) + 1);
    parallel_chunks(left.size(), threads, [&](int chunk, std::uint64_t b, std::uint64_t e) {
        Counts local;
        for (std::uint64_t i = b; i < e; ++i) {
            const FPoint& L = left[i];
            const auto [bx, by] = cell_of(-L.x, -L.y);
            for (std::int64_t dx = -1; dx <= 1; ++dx) {
                for (std::int64_t dy = -1; dy <= 1; ++dy) {
                    const CellRange* c = find_cell(cells, bx + dx, by + dy);
                    if (!c) continue;
                    for (std::uint32_t j = c->begin; j < c->end; ++j) {
                        const FPoint& R = right[j];
                        const double sx = L.x + R.x;
                        const double sy = L.y + R.y;
                        const int cls = classify_float(sx * sx + sy * sy, r_sq, eps);
                        if (cls == 0)
                            local.inside += L.cnt * R.cnt;
                        else if (cls == 1)
                            local.uncertain += L.cnt * R.cnt;
                    }
                }
            }
        }
        acc[std::size_t(chunk)] = local;
    });
    Counts tot;
    for (const auto& c : acc) {
        tot.inside += c.inside;
        tot.uncertain += c.uncertain;
    }
    return make_result(v, r_sq, eps, tot.inside, tot.uncertain, std::uint64_t(1) << n);
}

CountResult mitm_exact(const Configuration& v, double r_sq, int threads) {
    const int n = int(v.size());
    const int h = left_block_size(n);
    const RationalCoords& rc = v.rational();
    const std::int64_t scale = rc.scale;

    std::vector<IPoint> left, right;
    left.reserve(std::size_t(1) << h);
    right.reserve(std::size_t(1) << (n - h));
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << h); ++m) {
        const IVec s = block_sum_int(rc, m, 0, h);
        left.push_back({s.x, s.y, 1});
    }
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << (n - h)); ++m) {
        const IVec s = block_sum_int(rc, m << h, h, n);
        right.push_back({s.x, s.y, 1});
    }
    dedupe(left);
    dedupe(right);

    const std::int64_t cell =
        std::max<std::int64_t>(1, std::int64_t(std::ceil(std::sqrt(std::max(0.0, r_sq)) *
                                                         double(scale) * (1.0 + 1e-9))) +
                                      1);
    const auto cell_of = [cell](std::int64_t x, std::int64_t y) {
        const auto fdiv = [](std::int64_t a, std::int64_t c) {
            return a >= 0 ? a / c : -((-a + c - 1) / c);
        };
        return std::make_pair(fdiv(x, cell), fdiv(y, cell));
    };
    const auto cells = build_cells(right, cell_of);

    std::vector<Counts> acc(std::size_t(resolve_threads(threads)) + 1);
    parallel_chunks(left.size(), threads, [&](int chunk, std::uint64_t b, std::uint64_t e) {
        Counts local;
        for (std::uint64_t i = b; i < e; ++i) {
            const IPoint& L = left[i];
            const auto [bx, by] = cell_of(-L.x, -L.y);
            for (std::int64_t dx = -1; dx <= 1; ++dx) {
                for (std::int64_t dy = -1; dy <= 1; ++dy) {
                    const CellRange* c = find_cell(cells, bx + dx, by + dy);
                    if (!c) continue;
                    for (std::uint32_t j = c->begin; j < c->end; ++j) {
                        const IPoint& R = right[j];
                        if (inside_exact(L.x + R.x, L.y + R.y, r_sq, scale))
                            local.inside += L.cnt * R.cnt;
                    }
                }
            }
        }
        acc[std::size_t(chunk)] = local;
    });
    Counts tot;
    for (const auto& c : acc) tot.inside += c.inside;
    return make_result(v, r_sq, 0.0, tot.inside, 0, std::uint64_t(1) << n);
}

}  // namespace

double default_eps_band(double r_sq, int n) { return 1e-9 * std::max(1.0, r_sq) * n; }

CountResult naive_probability(const Configuration& v, double r_sq,
                              std::optional<double> eps_band) {
    const int n = int(v.size());
    if (n > kNaiveMax) throw std::length_error("naive_probability: n exceeds naive_max (20)");
    const int h = left_block_size(n);
    const std::uint64_t total = std::uint64_t(1) << n;

    if (v.is_exact()) {
        const RationalCoords& rc = v.rational();
        std::uint64_t inside = 0;
        for (std::uint64_t m = 0; m < total; ++m) {
            const IVec a = block_sum_int(rc, m, 0, h);
            const IVec b = block_sum_int(rc, m, h, n);
            if (inside_exact(a.x + b.x, a.y + b.y, r_sq, rc.scale)) ++inside;
        }
        return make_result(v, r_sq, 0.0, inside, 0, total);
    }

    const double eps = eps_band.value_or(default_eps_band(r_sq, n));
    const auto& vs = v.vectors();
    std::uint64_t inside = 0, uncertain = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        const Vec2 a = block_sum(vs, m, 0, h);
        const Vec2 b = block_sum(vs, m, h, n);
        const double sx = a.x + b.x;
        const double sy = a.y + b.y;
        const int cls = classify_float(sx * sx + sy * sy, r_sq, eps);
        if (cls == 0)
            ++inside;
        else if (cls == 1)
            ++uncertain;
    }
    return make_result(v, r_sq, eps, inside, uncertain, total);
}

CountResult exact_probability(const Configuration& v, double r_sq,
                              std::optional<double> eps_band, int threads) {
    const int n = int(v.size());
    if (n > kMitmMax) throw std::length_error("exact_probability: n exceeds mitm_max (40)");
    if (v.is_exact()) return mitm_exact(v, r_sq, threads);
    const double eps = eps_band.value_or(default_eps_band(r_sq, n));
    return mitm_float(v, r_sq, eps, threads);
}

CountResult exact_q(const Configuration& v, double a, std::optional<double> eps_band,
                    int threads) {
    if (2 * v.size() > std::size_t(kMitmMax))
        throw std::length_error("exact_q: 2n exceeds mitm_max (40)");
    return exact_probability(v.doubled(), a * a, eps_band, threads);
}

double mean_norm_sq(const Configuration& v) {
    const int n = int(v.size());
    double sum = 0.0;
    for (const auto& u : v.vectors()) sum += u.vec().norm_sq();
    if (n <= kNaiveMax) {
        const int h = left_block_size(n);
        const auto& vs = v.vectors();
        long double acc = 0.0L;
        const std::uint64_t total = std::uint64_t(1) << n;
        for (std::uint64_t m = 0; m < total; ++m) {
            const Vec2 a = block_sum(vs, m, 0, h);
            const Vec2 b = block_sum(vs, m, h, n);
            const double sx = a.x + b.x;
            const double sy = a.y + b.y;
            acc += sx * sx + sy * sy;
        }
        const double expected = double(acc / total);
        if (std::abs(expected - sum) > 1e-9)
            throw std::logic_error("mean_norm_sq: enumerated second moment disagrees");
    }
    return sum;
}

}  // namespace lolab
