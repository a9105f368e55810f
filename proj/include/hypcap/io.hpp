#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypcap/capacity.hpp"
#include "hypcap/diameter_set.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/hedgehog.hpp"
#include "hypcap/transform_report.hpp"

namespace hypcap {

// JSON interchange for set descriptions and result records.  ordered_json
// keeps key order stable so identical runs emit identical bytes.
using json = nlohmann::ordered_json;

using AnySet = std::variant<Hedgehog, DiameterSet, GridSet>;

// --- SetDescription ---------------------------------------------------------
//
// {"type":"hedgehog","core_radius":r,"spikes":[{"angle":a,"intervals":[[a,b],...]},...]}
// {"type":"diameter","intervals":[[x1,x2],...]}
// {"type":"grid","n_r":..,"n_theta":..,"r_max":..,"cells":[run,run,...]}
//
// Angles are radians and radii Euclidean.  Interval endpoints may instead be
// hyperbolic lengths when "radii_hyperbolic": true; the flag is always
// written explicitly on emit so units can never be mistaken.  Grid occupancy
// is run-length encoded over row-major cells, first run unoccupied.

inline AnySet parse_set(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("set description: expected an object with a \"type\" key");
    const std::string type = j.at("type").get<std::string>();
    const bool hyp_radii = j.value("radii_hyperbolic", false);
    auto radius = [hyp_radii](double v) { return hyp_radii ? r_of_tau(v) : v; };

    if (type == "hedgehog") {
        std::vector<Spike> spikes;
        for (const auto& sj : j.value("spikes", json::array())) {
            Spike s;
            s.angle = sj.at("angle").get<double>();
            for (const auto& iv : sj.at("intervals")) {
                if (!iv.is_array() || iv.size() != 2)
                    throw std::invalid_argument("hedgehog interval: expected [a,b]");
                s.intervals.emplace_back(radius(iv[0].get<double>()), radius(iv[1].get<double>()));
            }
            spikes.push_back(std::move(s));
        }
        return Hedgehog(radius(j.value("core_radius", 0.0)), std::move(spikes));
    }
    if (type == "diameter") {
        std::vector<std::pair<double, double>> iv;
        for (const auto& e : j.at("intervals")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("diameter interval: expected [x1,x2]");
            double a = e[0].get<double>(), b = e[1].get<double>();
            if (hyp_radii) {
                a = (a < 0 ? -1 : 1) * r_of_tau(std::abs(a));
                b = (b < 0 ? -1 : 1) * r_of_tau(std::abs(b));
            }
            iv.emplace_back(a, b);
        }
        return DiameterSet::from_euclidean(iv);
    }
    if (type == "grid") {
        GridSet g(j.at("n_r").get<int>(), j.at("n_theta").get<int>(), j.at("r_max").get<double>());
        const auto& runs = j.at("cells");
        std::size_t pos = 0;
        bool value = false; // first run covers unoccupied cells
        for (const auto& run : runs) {
            const std::size_t len = run.get<std::size_t>();
            if (pos + len > g.cells().size())
                throw std::invalid_argument("grid cells: run-length data exceeds the grid");
            if (value)
                for (std::size_t k = 0; k < len; ++k) g.cells()[pos + k] = 1;
            pos += len;
            value = !value;
        }
        if (pos != g.cells().size())
            throw std::invalid_argument("grid cells: run-length data does not cover the grid");
        return g;
    }
    throw std::invalid_argument("set description: unknown type \"" + type + "\"");
}

inline json emit_set(const Hedgehog& h) {
    json j;
    j["type"] = "hedgehog";
    j["radii_hyperbolic"] = false;
    j["core_radius"] = h.core_radius();
    json spikes = json::array();
    for (const auto& s : h.spikes()) {
        json sj;
        sj["angle"] = s.angle;
        json ivs = json::array();
        for (auto [a, b] : s.intervals) ivs.push_back(json::array({a, b}));
        sj["intervals"] = std::move(ivs);
        spikes.push_back(std::move(sj));
    }
    j["spikes"] = std::move(spikes);
    return j;
}

inline json emit_set(const DiameterSet& d) {
    json j;
    j["type"] = "diameter";
    j["radii_hyperbolic"] = false;
    json ivs = json::array();
    for (auto [a, b] : d.euclidean_intervals()) ivs.push_back(json::array({a, b}));
    j["intervals"] = std::move(ivs);
    return j;
}

inline json emit_set(const GridSet& g) {
    json j;
    j["type"] = "grid";
    j["n_r"] = g.n_r();
    j["n_theta"] = g.n_theta();
    j["r_max"] = g.r_max();
    json runs = json::array();
    std::size_t pos = 0;
    bool value = false;
    const auto& cells = g.cells();
    while (pos < cells.size()) {
        std::size_t len = 0;
        while (pos + len < cells.size() && (cells[pos + len] != 0) == value) ++len;
        runs.push_back(len);
        pos += len;
        value = !value;
    }
    j["cells"] = std::move(runs);
    return j;
}

inline json emit_set(const AnySet& s) {
    return std::visit([](const auto& v) { return emit_set(v); }, s);
}

// --- result records ---------------------------------------------------------

inline json emit_estimate(const CapacityEstimate& est) {
    json j;
    j["cap"] = est.cap_extrapolated;
    j["degenerate"] = est.degenerate;
    j["n"] = est.n_values;
    j["cap_upper_bounds"] = est.cap_upper_bounds;
    j["d_n"] = est.d_n;
    json diag = json::array();
    for (const auto& d : est.diagnostics) {
        json dj;
        dj["n"] = d.n;
        dj["objective"] = d.objective;
        dj["restart_spread"] = d.spread;
        dj["converged"] = d.converged;
        diag.push_back(std::move(dj));
    }
    j["diagnostics"] = std::move(diag);
    json pts = json::array();
    for (const auto& p : est.fekete_points) pts.push_back(json::array({p.re(), p.im()}));
    j["fekete_points"] = std::move(pts);
    return j;
}

inline json emit_capacity(const CapacityValue& v) {
    json j;
    j["cap"] = v.value;
    j["provenance"] = v.provenance == Provenance::closed_form ? "closed_form" : "fekete";
    if (v.degenerate) j["degenerate"] = true;
    if (v.closed_form) {
        json cf;
        cf["formula"] = closed_form_name(v.closed_form->formula_id);
        for (const auto& [k, val] : v.closed_form->parameters) cf[k] = val;
        j["closed_form"] = std::move(cf);
    }
    if (v.estimate) j["estimate"] = emit_estimate(*v.estimate);
    return j;
}

inline json emit_transform_report(const TransformReport& r) {
    json j;
    j["transform"] = r.transform;
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    json pres = json::object();
    for (const auto& [k, v] : r.preserved)
        pres[k] = json{{"before", v.before}, {"after", v.after}};
    j["preserved"] = std::move(pres);
    return j;
}

// --- CSV --------------------------------------------------------------------

// Comma-separated, header mandatory, UTF-8, LF line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : columns_(std::move(header)) {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (i) out_ << ',';
            out_ << columns_[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<std::string>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << values[i];
        }
        out_ << '\n';
    }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    std::string str() const { return out_.str(); }

private:
    std::vector<std::string> columns_;
    std::ostringstream out_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

} // namespace hypcap
