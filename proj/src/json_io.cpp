#include "lolab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lolab {

Configuration config_from_json(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    if (j.contains("angles")) {
        std::vector<double> angles;
        for (const auto& a : j.at("angles")) angles.push_back(a.get<double>());
        return Configuration::from_angles(angles);
    }
    if (j.contains("rational")) {
        const auto& r = j.at("rational");
        RationalCoords rc;
        rc.scale = r.at("scale").get<std::int64_t>();
        for (const auto& p : r.at("pairs"))
            rc.pairs.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>());
        return Configuration::from_rational(std::move(rc));
    }
    if (j.contains("vectors")) {
        std::vector<Vec2> vs;
        for (const auto& p : j.at("vectors"))
            vs.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return Configuration::from_vectors(vs);
    }
    throw std::invalid_argument("config: need one of angles / rational / vectors");
}

Configuration config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    ordered_json j;
    in >> j;
    return config_from_json(j);
}

ordered_json config_to_json(const Configuration& v) {
    ordered_json j;
    if (v.is_exact()) {
        ordered_json r;
        r["scale"] = v.rational().scale;
        auto pairs = ordered_json::array();
        for (const auto& [p, q] : v.rational().pairs) pairs.push_back({p, q});
        r["pairs"] = std::move(pairs);
        j["rational"] = std::move(r);
    }
    auto vecs = ordered_json::array();
    for (const auto& u : v.vectors()) vecs.push_back({u.x(), u.y()});
    j["vectors"] = std::move(vecs);
    return j;
}

ordered_json to_json(const CountResult& r) {
    ordered_json j;
    j["n"] = r.n;
    j["r_sq"] = r.r_sq;
    j["count_inside"] = r.count_inside;
    j["count_uncertain"] = r.count_uncertain;
    j["total"] = r.total;
    j["prob_lower"] = r.prob_lower;
    j["prob_upper"] = r.prob_upper;
    j["eps_band"] = r.eps_band;
    j["exact_mode"] = r.exact_mode;
    return j;
}

ordered_json to_json(const McEstimate& e) {
    ordered_json j;
    j["point"] = e.point;
    j["ci_low"] = e.ci_low;
    j["ci_high"] = e.ci_high;
    j["samples"] = e.samples;
    j["hits"] = e.hits;
    j["seed"] = e.seed;
    j["confidence"] = e.confidence;
    j["generator"] = e.generator;
    return j;
}

ordered_json to_json(const Certificate& c) {
    ordered_json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["branch"] = branch_name(c.branch);
    j["bound"] = c.bound;
    ordered_json constants;
    for (const auto& [k, v] : c.constants) constants[k] = v;
    j["constants"] = std::move(constants);
    auto steps = ordered_json::array();
    for (const auto& s : c.trace) {
        ordered_json t;
        t["lemma"] = s.lemma;
        ordered_json in;
        for (const auto& [k, v] : s.inputs) in[k] = v;
        t["inputs"] = std::move(in);
        t["value"] = s.value;
        steps.push_back(std::move(t));
    }
    j["trace"] = std::move(steps);
    return j;
}

ordered_json to_json(const PairingPlan& p) {
    ordered_json j;
    auto neg = ordered_json::array();
    for (auto b : p.negated) neg.push_back(bool(b));
    j["negated"] = std::move(neg);
    j["permutation"] = p.permutation;
    j["rotation"] = p.rotation;
    auto pairs = ordered_json::array();
    for (const auto& [a, b] : p.pairs) pairs.push_back({a, b});
    j["pairs"] = std::move(pairs);
    j["delta_sq_sum"] = p.delta_sq_sum;
    j["used_shifted"] = p.used_shifted;
    j["averaged_norms_max"] = p.averaged_norms_max;
    return j;
}

ordered_json to_json(const TwoDirectionClass& c) {
    ordered_json j;
    j["gamma"] = c.gamma;
    if (c.kind == TwoDirectionClass::Kind::Close) {
        j["kind"] = "Close";
        j["x1"] = {c.x1.x(), c.x1.y()};
        j["x2"] = {c.x2.x(), c.x2.y()};
        j["m"] = c.m;
        j["assignment"] = c.assignment;
    } else {
        j["kind"] = "Far";
        j["indices"] = {c.far_i, c.far_j, c.far_k};
    }
    return j;
}

ordered_json rational_to_json(const mpq_class& q) {
    ordered_json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

ordered_json to_json(const AxisProfile& p) {
    ordered_json j;
    j["n"] = p.n;
    j["r_sq"] = p.r_sq;
    auto per_t = ordered_json::array();
    for (std::size_t t = 0; t < p.per_t.size(); ++t) {
        ordered_json e = rational_to_json(p.per_t[t]);
        e["t"] = t;
        e["value"] = p.per_t[t].get_d();
        e["scaled"] = double(p.n) * p.per_t[t].get_d();
        per_t.push_back(std::move(e));
    }
    j["per_t"] = std::move(per_t);
    j["argmin_t"] = p.argmin_t;
    j["min_scaled"] = p.min_scaled;
    return j;
}

ordered_json to_json(const ExtremalReport& r) {
    ordered_json j;
    j["r"] = r.r;
    if (r.seed) j["seed"] = *r.seed;
    auto entries = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json x;
        x["n"] = e.n;
        x["axis_argmin_t"] = e.axis_argmin_t;
        x["axis_min_scaled"] = e.axis_min_scaled;
        if (e.searched_probability) {
            x["searched_probability"] = *e.searched_probability;
            x["searched_scaled"] = *e.searched_scaled;
            x["searched_angles"] = e.searched_angles;
        }
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

namespace {

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(std::size_t(indent) * std::size_t(depth), ' ');
    const std::string pad1(std::size_t(indent) * std::size_t(depth + 1), ' ');
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                out += ordered_json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                dump_rec(e, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case nlohmann::detail::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json17(const ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

}  // namespace lolab
