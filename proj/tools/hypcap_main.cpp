// hypcap: conformal capacity of compact sets in the hyperbolic unit disk.
//
// Subcommands:
//   compute    capacity of a set description (closed form or Fekete)
//   transform  apply a set transformation, emit the set and its report
//   verify     run a named inequality/monotonicity check
//   sweep      parameter sweeps, CSV output
//
// Exit codes: 0 success (or observed-only), 1 assertion failure, 2 usage or
// input error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "hypcap/hypcap.hpp"
#include "hypcap/io.hpp"

using namespace hypcap;

namespace {

struct CommonOpts {
    std::string input_path;
    std::string inline_json;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::vector<int> n_sequence;
    int restarts = -1;
    double tolerance = -1.0;
    std::string rasterize; // "n_r,n_theta"
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_set) {
    if (with_set) {
        cmd->add_option("--input", o.input_path, "path to a SetDescription JSON file");
        cmd->add_option("--inline", o.inline_json, "inline SetDescription JSON");
    }
    cmd->add_option("--seed", o.seed, "RNG seed (recorded in all outputs)");
    cmd->add_option("--n-sequence", o.n_sequence, "Fekete point counts (increasing)")
        ->delimiter(',');
    cmd->add_option("--restarts", o.restarts, "multistart count");
    cmd->add_option("--tolerance", o.tolerance, "optimizer relative tolerance");
    cmd->add_option("--out", o.out_path, "output file (stdout when absent)");
    cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--rasterize", o.rasterize, "n_r,n_theta: convert the set to a grid");
}

FeketeConfig fekete_config(const CommonOpts& o) {
    FeketeConfig cfg;
    cfg.seed = o.seed;
    if (!o.n_sequence.empty()) cfg.n_sequence = o.n_sequence;
    if (o.restarts > 0) cfg.restarts = o.restarts;
    if (o.tolerance > 0) cfg.tolerance = o.tolerance;
    cfg.validate();
    return cfg;
}

AnySet load_set(const CommonOpts& o) {
    std::string text;
    if (!o.inline_json.empty()) {
        text = o.inline_json;
    } else if (!o.input_path.empty()) {
        std::ifstream in(o.input_path);
        if (!in) throw std::invalid_argument("cannot open input file: " + o.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        throw std::invalid_argument("provide a set via --input or --inline");
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    AnySet s = parse_set(j);
    if (!o.rasterize.empty()) {
        int n_r = 0, n_theta = 0;
        if (std::sscanf(o.rasterize.c_str(), "%d,%d", &n_r, &n_theta) != 2)
            throw std::invalid_argument("--rasterize expects n_r,n_theta");
        if (const auto* h = std::get_if<Hedgehog>(&s))
            return GridSet::from_hedgehog(*h, n_r, n_theta, 0.995);
        if (const auto* d = std::get_if<DiameterSet>(&s)) {
            Hedgehog as_spikes(0.0, [&] {
                std::vector<Spike> sp;
                for (auto [a, b] : d->euclidean_intervals()) {
                    if (b <= 0.0) sp.push_back(Spike{pi, {{-b, -a}}});
                    else if (a >= 0.0) sp.push_back(Spike{0.0, {{a, b}}});
                    else {
                        sp.push_back(Spike{pi, {{0.0, -a}}});
                        sp.push_back(Spike{0.0, {{0.0, b}}});
                    }
                }
                return sp;
            }());
            return GridSet::from_hedgehog(as_spikes, n_r, n_theta, 0.995);
        }
    }
    return s;
}

void write_out(const CommonOpts& o, const std::string& content) {
    if (o.out_path.empty())
        std::cout << content << '\n';
    else
        write_text_file(o.out_path, content.back() == '\n' ? content : content + "\n");
}

int cmd_compute(const CommonOpts& o) {
    const AnySet set = load_set(o);
    const FeketeConfig cfg = fekete_config(o);
    const CapacityValue v = std::visit([&](const auto& s) { return capacity_of(s, cfg); }, set);
    json out = emit_capacity(v);
    out["seed"] = o.seed;
    if (v.degenerate)
        out["warning"] = "degenerate set: capacity 0";
    write_out(o, out.dump(2));
    return 0;
}

struct TransformOpts {
    std::string name;
    double at = 0.0;          // polarization foot point
    double angle = 0.0;       // geodesic direction / ray angle
    double r = 0.0, r0 = 0.0; // contraction radii, szego core
    double t = 0.0;           // dispersion time
    bool flip = false;        // polarization orientation
};

int cmd_transform(const CommonOpts& o, const TransformOpts& topt) {
    const AnySet set = load_set(o);
    TransformReport report;
    AnySet result = set;

    if (topt.name == "polarize") {
        if (const auto* d = std::get_if<DiameterSet>(&set)) {
            result = polarize_diameter(*d, topt.at, !topt.flip, &report);
        } else if (const auto* g = std::get_if<GridSet>(&set)) {
            result = polarize_grid(*g, Geodesic::orthogonal_at(topt.at, topt.angle, !topt.flip),
                                   &report);
        } else {
            throw std::invalid_argument(
                "polarize needs a diameter or grid set (use --rasterize for hedgehogs)");
        }
    } else if (topt.name == "steiner") {
        const auto* g = std::get_if<GridSet>(&set);
        if (!g)
            throw std::invalid_argument("steiner operates on grids; pass --rasterize n_r,n_theta");
        result = steiner_hyperbolic(*g, Geodesic::diameter(topt.angle), HypPoint(0, 0), &report);
    } else if (topt.name == "schwarz") {
        const auto* g = std::get_if<GridSet>(&set);
        if (!g)
            throw std::invalid_argument("schwarz operates on grids; pass --rasterize n_r,n_theta");
        const double tau = schwarz_hyperbolic(*g, HypPoint(0, 0), &report);
        result = rasterized_hyperbolic_disk(HypPoint(0, 0), tau, g->n_r(), g->n_theta(), g->r_max());
    } else if (topt.name == "circular") {
        const auto* g = std::get_if<GridSet>(&set);
        if (!g)
            throw std::invalid_argument("circular operates on grids; pass --rasterize n_r,n_theta");
        result = circular_symmetrize(*g, &report);
    } else if (topt.name == "szego") {
        const auto* g = std::get_if<GridSet>(&set);
        if (!g)
            throw std::invalid_argument("szego operates on grids; pass --rasterize n_r,n_theta");
        result = szego_radial(*g, topt.r, &report);
    } else if (topt.name == "radial") {
        if (const auto* h = std::get_if<Hedgehog>(&set)) {
            result = radial_hyperbolic(*h, &report);
        } else if (const auto* g = std::get_if<GridSet>(&set)) {
            result = radial_hyperbolic_grid(*g, &report);
        } else {
            throw std::invalid_argument("radial operates on hedgehogs or grids");
        }
    } else if (topt.name == "contract") {
        const auto* h = std::get_if<Hedgehog>(&set);
        if (!h) throw std::invalid_argument("contract operates on hedgehogs");
        result = contraction_phi(*h, topt.r0, topt.r, &report);
    } else if (topt.name == "disperse") {
        const auto* h = std::get_if<Hedgehog>(&set);
        if (!h) throw std::invalid_argument("disperse operates on hedgehogs");
        std::vector<double> speeds(h->spikes().size(), 1.0);
        DispersionSchedule schedule(h->spikes(), speeds);
        result = disperse(schedule, topt.t, &report);
    } else {
        throw std::invalid_argument("unknown transform: " + topt.name);
    }

    json out;
    out["set"] = emit_set(result);
    out["report"] = emit_transform_report(report);
    out["seed"] = o.seed;
    write_out(o, out.dump(2));
    for (const auto& [what, ba] : report.preserved)
        std::cerr << what << ": " << ba.before << " -> " << ba.after << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& theorem, const std::string& spec_path) {
    const auto id = parse_theorem(theorem);
    if (!id) throw std::invalid_argument("unknown check id: " + theorem);
    CheckSpec spec = CheckSpec::defaults(*id);
    spec.seed = o.seed;
    spec.fekete.seed = o.seed;
    if (!o.n_sequence.empty()) spec.fekete.n_sequence = o.n_sequence;
    if (o.restarts > 0) spec.fekete.restarts = o.restarts;
    if (o.tolerance > 0) spec.closed_form_tolerance = o.tolerance;
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            spec.scalars[it.key()] = it.value().get<double>();
    }
    const CheckReport rep = run_check(spec);

    json out;
    out["check"] = rep.check;
    out["seed"] = rep.seed;
    out["verdict"] = rep.verdict;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json rj;
        json params;
        for (const auto& [k, v] : r.params) params[k] = v;
        rj["params"] = std::move(params);
        rj["lhs"] = r.lhs;
        rj["rhs"] = r.rhs;
        rj["margin"] = r.margin;
        rj["tolerance"] = r.tolerance;
        rj["spread"] = r.spread;
        rj["lhs_provenance"] = r.lhs_provenance;
        rj["rhs_provenance"] = r.rhs_provenance;
        rj["status"] = r.status;
        if (r.equality_candidate) rj["equality_candidate"] = true;
        if (!r.note.empty()) rj["note"] = r.note;
        rows.push_back(std::move(rj));
    }
    out["rows"] = std::move(rows);

    if (o.format == "csv") {
        CsvWriter csv({"lhs", "rhs", "margin", "tolerance", "spread", "lhs_provenance",
                       "rhs_provenance", "status"});
        for (const auto& r : rep.rows)
            csv.row({CsvWriter::num(r.lhs), CsvWriter::num(r.rhs), CsvWriter::num(r.margin),
                     CsvWriter::num(r.tolerance), CsvWriter::num(r.spread), r.lhs_provenance,
                     r.rhs_provenance, r.status});
        write_out(o, csv.str());
    } else {
        write_out(o, out.dump(2));
    }
    return rep.verdict == "fail" ? 1 : 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& kind, std::vector<double> alphas,
              std::vector<double> ts, double r, double s) {
    if (kind == "two_intervals") {
        const SweepResult res = sweep_two_intervals(alphas, ts, r, s, fekete_config(o));
        CsvWriter csv({"alpha", "t", "cap", "provenance", "spread", "status"});
        for (const auto& row : res.rows)
            csv.row({CsvWriter::num(row.alpha), CsvWriter::num(row.t), CsvWriter::num(row.cap),
                     row.provenance, CsvWriter::num(row.spread), row.status});
        write_out(o, csv.str());
        return res.verdict == "fail" ? 1 : 0;
    }
    if (kind == "constraint_curve") {
        // closed-form sweep along tau(r1)+tau(r2) = 2 tau for the two-star family
        const int n = ts.empty() ? 2 : int(ts[0]);
        const double tau = s > 0 ? s : 0.7;
        const int points = alphas.empty() ? 100 : int(alphas[0]);
        CsvWriter csv({"tau1", "r1", "r2", "cap", "provenance"});
        for (int k = 1; k < points; ++k) {
            const double t1 = 2.0 * tau * k / points;
            const double r1 = r_of_tau(t1), r2 = r_of_tau(2.0 * tau - t1);
            csv.row({CsvWriter::num(t1), CsvWriter::num(r1), CsvWriter::num(r2),
                     CsvWriter::num(cap_two_star_families(n, r1, r2).value), "closed_form"});
        }
        write_out(o, csv.str());
        return 0;
    }
    throw std::invalid_argument("unknown sweep kind: " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformal capacity in the hyperbolic disk"};
    app.require_subcommand(1);

    CommonOpts copt;
    TransformOpts topt;
    std::string theorem, spec_path, sweep_kind = "two_intervals";
    std::vector<double> alphas, ts;
    double sweep_r = 0.3, sweep_s = 1.0;

    CLI::App* compute = app.add_subcommand("compute", "capacity of a set");
    add_common(compute, copt, true);

    CLI::App* transform = app.add_subcommand("transform", "apply a set transformation");
    add_common(transform, copt, true);
    transform->add_option("--name", topt.name, "polarize|steiner|schwarz|circular|szego|radial|contract|disperse")
        ->required();
    transform->add_option("--at", topt.at, "polarization foot point on the diameter");
    transform->add_option("--angle", topt.angle, "axis/ray angle (radians)");
    transform->add_option("--r", topt.r, "target radius (contract) or core radius (szego)");
    transform->add_option("--r0", topt.r0, "source radius (contract)");
    transform->add_option("--t", topt.t, "dispersion time");
    transform->add_flag("--flip", topt.flip, "flip the marked halfplane");

    CLI::App* verify = app.add_subcommand("verify", "run a named check");
    add_common(verify, copt, false);
    verify->add_option("--theorem", theorem, "check id, e.g. T4.8")->required();
    verify->add_option("--spec", spec_path, "JSON file overriding check parameters");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
    add_common(sweep, copt, false);
    sweep->add_option("--kind", sweep_kind, "two_intervals|constraint_curve");
    sweep->add_option("--alphas", alphas, "angle grid (radians)")->delimiter(',');
    sweep->add_option("--ts", ts, "foot-point grid (Euclidean radii)")->delimiter(',');
    sweep->add_option("--r", sweep_r, "central interval outer radius");
    sweep->add_option("--s-hyp", sweep_s, "spike hyperbolic length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(copt);
        if (transform->parsed()) return cmd_transform(copt, topt);
        if (verify->parsed()) return cmd_verify(copt, theorem, spec_path);
        if (sweep->parsed()) return cmd_sweep(copt, sweep_kind, alphas, ts, sweep_r, sweep_s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
