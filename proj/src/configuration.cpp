#include "lolab/configuration.hpp"

#include <stdexcept>

namespace lolab {

namespace {
constexpr std::int64_t kMaxScale = std::int64_t(1) << 30;
}

Configuration Configuration::from_vectors(const std::vector<Vec2>& vs) {
    if (vs.empty()) throw std::invalid_argument("Configuration: need n >= 1");
    Configuration c;
    c.vecs_.reserve(vs.size());
    for (const auto& v : vs) c.vecs_.emplace_back(v);
    return c;
}

Configuration Configuration::from_angles(const std::vector<double>& angles) {
    if (angles.empty()) throw std::invalid_argument("Configuration: need n >= 1");
    Configuration c;
    c.vecs_.reserve(angles.size());
    for (double t : angles) c.vecs_.push_back(UnitVector::from_angle(t));
    return c;
}

Configuration Configuration::from_units(std::vector<UnitVector> vs) {
    if (vs.empty()) throw std::invalid_argument("Configuration: need n >= 1");
    Configuration c;
    c.vecs_ = std::move(vs);
    return c;
}

Configuration Configuration::from_rational(RationalCoords rc) {
    if (rc.pairs.empty()) throw std::invalid_argument("Configuration: need n >= 1");
    if (rc.scale < 1 || rc.scale > kMaxScale)
        throw std::invalid_argument("Configuration: rational scale out of range");
    Configuration c;
    c.vecs_.reserve(rc.pairs.size());
    const std::int64_t s2 = rc.scale * rc.scale;
    for (const auto& [p, q] : rc.pairs) {
        if (p < -rc.scale || p > rc.scale || q < -rc.scale || q > rc.scale)
            throw std::invalid_argument("Configuration: rational coordinate exceeds scale");
        if (p * p + q * q != s2)
            throw std::invalid_argument("Configuration: p^2 + q^2 != scale^2");
        c.vecs_.emplace_back(double(p) / double(rc.scale), double(q) / double(rc.scale));
    }
    c.rational_ = std::move(rc);
    return c;
}

Configuration Configuration::doubled() const {
    Configuration c;
    c.vecs_ = vecs_;
    c.vecs_.insert(c.vecs_.end(), vecs_.begin(), vecs_.end());
    if (rational_) {
        RationalCoords rc = *rational_;
        rc.pairs.insert(rc.pairs.end(), rational_->pairs.begin(), rational_->pairs.end());
        c.rational_ = std::move(rc);
    }
    return c;
}

Configuration Configuration::without(const std::vector<int>& sorted_indices) const {
    Configuration c;
    std::size_t k = 0;
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
        if (k < sorted_indices.size() && sorted_indices[k] == int(i)) {
            ++k;
            continue;
        }
        c.vecs_.push_back(vecs_[i]);
    }
    if (c.vecs_.empty()) throw std::invalid_argument("Configuration: removal left no vectors");
    if (rational_) {
        RationalCoords rc;
        rc.scale = rational_->scale;
        k = 0;
        for (std::size_t i = 0; i < rational_->pairs.size(); ++i) {
            if (k < sorted_indices.size() && sorted_indices[k] == int(i)) {
                ++k;
                continue;
            }
            rc.pairs.push_back(rational_->pairs[i]);
        }
        c.rational_ = std::move(rc);
    }
    return c;
}

}  // namespace lolab
