// Command-line front end: parses input files, runs the toric / surface /
// semigroup pipelines, and writes deterministic JSON reports plus optional
// SVG plots. Exit codes: 0 success, 1 a named check failed, 2 schema
// violation, 3 mathematical precondition failure, 4 internal invariant
// breach.

#include "okb/jsonio.hpp"
#include "okb/seshadri.hpp"
#include "okb/surface.hpp"
#include "okb/svg.hpp"
#include "okb/toric.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace okb;

namespace {

struct Options {
    std::string input;
    std::string out_dir = ".";
    long k_max = 50;
    bool k_max_set = false;
    bool svg = false;
    std::vector<int> points;
    std::string curves;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, double>> laps;
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        laps.emplace_back(name, std::chrono::duration<double>(now - start).count());
        start = now;
    }
};

void write_timings(const fs::path& dir, const Timer& timer) {
    std::ofstream f(dir / "timings.txt");
    for (const auto& [name, secs] : timer.laps) f << name << "\t" << secs << "\n";
}

Json check_entry(const std::string& name, const Rational& lhs, const Rational& rhs,
                 bool pass_when_equal = true) {
    Json c = Json::object();
    c["name"] = name;
    c["lhs"] = rational_str(lhs);
    c["rhs"] = rational_str(rhs);
    c["pass"] = pass_when_equal ? (lhs == rhs) : (lhs <= rhs);
    return c;
}

bool all_passed(const Json& checks) {
    for (const auto& c : checks)
        if (!c.at("pass").get<bool>()) return false;
    return true;
}

BodyFamily toric_body_family(const ToricInput& input) {
    std::vector<Polytope> bodies;
    for (std::size_t j = 0; j < input.chosen.size(); ++j)
        bodies.push_back(toric_body(input, (int)j));
    return BodyFamily::of(input.polytope.dim(), std::move(bodies));
}

Json seshadri_to_json(const SeshadriResult& res, const BodyFamily& fam, const Rational& vol_total) {
    Json j = Json::object();
    j["xi"] = rational_str(res.xi);
    Json witness = Json::object();
    witness["body"] = res.witness_body;
    witness["facet"] = res.witness_facet;
    j["witness"] = witness;
    j["upper_bound_ok"] = upper_bound_check(fam, vol_total);
    j["capacity_note"] = res.capacity_note;
    return j;
}

void emit_body_svgs(const fs::path& dir, const std::vector<Polytope>& bodies,
                    const Rational& xi) {
    Polytope inscribed = xi > 0 ? dilate(convex_hull({RatVec{Rational(0), Rational(0)},
                                                      RatVec{Rational(1), Rational(0)},
                                                      RatVec{Rational(0), Rational(1)}}),
                                         xi)
                                : Polytope::make_empty(2);
    for (std::size_t j = 0; j < bodies.size(); ++j) {
        std::vector<Polytope> layers = {bodies[j]};
        std::vector<std::string> labels = {"body " + std::to_string(j)};
        if (!inscribed.empty()) {
            layers.push_back(inscribed);
            labels.push_back("xi simplex");
        }
        std::ofstream f(dir / ("body_" + std::to_string(j) + ".svg"));
        f << plot_svg(layers, labels);
    }
}

int run_toric(const Options& opt) {
    Timer timer;
    Json in = load_json_file(opt.input);
    ToricInputFile file = toric_input_from_json(in);
    if (!opt.points.empty()) file.chosen = opt.points;
    if (opt.k_max_set) file.k_max = opt.k_max;
    DelzantPolytope poly(file.vertices);
    if (file.chosen.empty())
        for (int i = 0; i < poly.vertex_count(); ++i) file.chosen.push_back(i);
    ToricInput input(poly, file.chosen);
    timer.lap("parse");

    auto cells = toric_subdivision(input);
    BodyFamily fam = toric_body_family(input);
    Rational eps = toric_seshadri(input);
    SeshadriResult xi = xi_simplex_fit(fam);
    auto vol = toric_volume_check(input);
    timer.lap("bodies");

    GradedValuationData oracle = toric_oracle_export(input, file.k_max);
    timer.lap("oracle");

    fs::create_directories(opt.out_dir);
    Json report = Json::object();
    report["mode"] = "toric";
    report["n"] = input.polytope.dim();
    report["N"] = (int)input.chosen.size();
    report["chosen"] = input.chosen;
    Json bodies = Json::array();
    Json volumes = Json::array();
    for (const auto& body : fam.bodies) {
        bodies.push_back(polytope_to_json(body));
        volumes.push_back(rational_str(volume(body)));
    }
    Json subdivision = Json::array();
    for (const auto& cell : cells) subdivision.push_back(polytope_to_json(cell));
    report["bodies"] = bodies;
    report["volumes"] = volumes;
    report["subdivision"] = subdivision;
    report["seshadri"] = rational_str(eps);
    report["seshadri_result"] = seshadri_to_json(xi, fam, vol.rhs);
    report["xi"] = rational_str(xi.xi);
    Json checks = Json::array();
    checks.push_back(check_entry("volume_partition_identity", vol.lhs, vol.rhs));
    checks.push_back(check_entry("xi_equals_toric_seshadri", xi.xi, eps));
    Rational xi_pow = xi.xi * xi.xi;
    if (input.polytope.dim() == 3) xi_pow *= xi.xi;
    checks.push_back(check_entry("upper_bound", Rational((long)fam.bodies.size()) * xi_pow,
                                 vol.rhs, false));
    report["checks"] = checks;
    write_json_file((fs::path(opt.out_dir) / "report.json").string(), report);
    write_json_file((fs::path(opt.out_dir) / "oracle.json").string(),
                    graded_data_to_json(oracle));
    if (opt.svg && input.polytope.dim() == 2) {
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < cells.size(); ++j) labels.push_back("P_" + std::to_string(j));
        std::ofstream f(fs::path(opt.out_dir) / "subdivision.svg");
        f << plot_svg(cells, labels);
        emit_body_svgs(opt.out_dir, fam.bodies, xi.xi);
    }
    timer.lap("write");
    write_timings(opt.out_dir, timer);
    std::cout << report.dump(2) << "\n";
    return all_passed(checks) ? 0 : 1;
}

SurfaceInputFile surface_file_with_overrides(const Options& opt) {
    Json in = load_json_file(opt.input);
    if (!opt.curves.empty()) in["curves"] = opt.curves == "delpezzo"
                                                ? Json("delpezzo")
                                                : load_json_file(opt.curves).at("curves");
    return surface_input_from_json(in);
}

int run_surface(const Options& opt) {
    Timer timer;
    SurfaceInputFile file = surface_file_with_overrides(opt);
    timer.lap("parse");

    auto dec = zariski(file.spec, file.L);
    Json report = Json::object();
    report["mode"] = "surface";
    report["N"] = file.N;
    report["L"] = picard_to_json(file.L);
    report["curve_count"] = (int)file.spec.curves.size();
    Json zj = Json::object();
    zj["P"] = picard_to_json(dec.P);
    zj["N"] = picard_to_json(dec.Nneg);
    zj["support"] = dec.support;
    report["zariski"] = zj;

    Json checks = Json::array();
    if (file.rays) {
        auto ray = ray_breakpoints(file.spec, file.L);
        Json breakpoints = Json::array();
        for (const auto& b : ray.breakpoints) breakpoints.push_back(rational_str(b));
        report["breakpoints"] = breakpoints;
        if (ray.mu.is_rational) {
            report["mu"] = rational_str(ray.mu.value);
        } else {
            Json mu = Json::object();
            mu["quadratic"] = Json::array({rational_str(ray.mu.qa), rational_str(ray.mu.qb),
                                           rational_str(ray.mu.qc)});
            mu["chamber_start"] = rational_str(ray.mu.chamber_start);
            report["mu"] = mu;
        }
        report["chamber_count"] = zariski_chamber_count(file.spec, file.L);

        std::vector<Polytope> deglex_bodies;
        Json bodies = Json::array();
        Json volumes = Json::array();
        Rational total_area = 0;
        for (int j = 0; j < file.N; ++j) {
            SurfaceRayBody body = surface_body(file.spec, file.L, j);
            Json bj = Json::object();
            bj["j"] = j;
            Json knots = Json::array();
            Json beta = Json::array();
            for (std::size_t i = 0; i < body.breakpoints.size(); ++i) {
                knots.push_back(rational_str(body.breakpoints[i]));
                beta.push_back(rational_str(body.beta.values()[i]));
            }
            bj["knots"] = knots;
            bj["beta"] = beta;
            Json segments = Json::array();
            for (std::size_t i = 0; i + 1 < body.breakpoints.size(); ++i) {
                const Rational& t0 = body.breakpoints[i];
                const Rational& t1 = body.breakpoints[i + 1];
                Rational slope = (body.beta.values()[i + 1] - body.beta.values()[i]) / (t1 - t0);
                Rational intercept = body.beta.values()[i] - slope * t0;
                Json seg = Json::object();
                seg["t0"] = rational_str(t0);
                seg["t1"] = rational_str(t1);
                seg["slope"] = rational_str(slope);
                seg["intercept"] = rational_str(intercept);
                segments.push_back(seg);
            }
            bj["beta_segments"] = segments;
            bj["body_blowup"] = polytope_to_json(body.body_blowup_coords);
            bj["body_deglex"] = polytope_to_json(body.body_deglex_coords);
            bodies.push_back(bj);
            Rational area = volume(body.body_blowup_coords);
            volumes.push_back(rational_str(area));
            total_area += area;
            deglex_bodies.push_back(body.body_deglex_coords);
        }
        report["bodies"] = bodies;
        report["volumes"] = volumes;
        timer.lap("bodies");

        BodyFamily fam = BodyFamily::of(2, deglex_bodies);
        SeshadriResult xi = xi_simplex_fit(fam);
        Rational vol_L = intersect(dec.P, dec.P);
        report["xi"] = rational_str(xi.xi);
        report["seshadri_result"] = seshadri_to_json(xi, fam, vol_L);

        if (dec.Nneg.is_zero())
            checks.push_back(check_entry("volume_partition_identity", 2 * total_area, vol_L));
        if (file.spec.provenance == CurveProvenance::delpezzo_auto)
            checks.push_back(
                check_entry("xi_equals_curve_infimum", xi.xi,
                            seshadri_curve_infimum(file.spec, file.L)));
        if (ray.mu.is_rational) {
            auto vd = volume_difference_check(file.spec, file.L, ray.mu.value / 2);
            checks.push_back(check_entry("volume_difference_identity", vd.lhs, vd.rhs));
        }
        if (opt.svg) emit_body_svgs(opt.out_dir, deglex_bodies, xi.xi);
    }
    report["checks"] = checks;
    fs::create_directories(opt.out_dir);
    write_json_file((fs::path(opt.out_dir) / "report.json").string(), report);
    timer.lap("write");
    write_timings(opt.out_dir, timer);
    std::cout << report.dump(2) << "\n";
    return all_passed(checks) ? 0 : 1;
}

int run_semigroup(const Options& opt) {
    Timer timer;
    Json in = load_json_file(opt.input);
    GradedValuationData data = graded_data_from_json(in);
    timer.lap("parse");

    long k_max = opt.k_max_set ? opt.k_max : (data.levels.empty() ? 1 : data.levels.rbegin()->first);
    Json report = Json::object();
    report["mode"] = "semigroup";
    report["n"] = data.n;
    report["N"] = data.N;

    // Optional declaration of the generating valuations; validated against
    // the data and checked for faithfulness.
    if (in.contains("valuations")) {
        if ((int)in.at("valuations").size() != data.N)
            throw SchemaError("expected one valuation per point");
        Json vj = Json::array();
        for (const auto& one : in.at("valuations")) {
            QuasiMonomialValuation v = valuation_from_json(one);
            if ((int)v.lambda.size() != data.n)
                throw SchemaError("lambda matrix does not match the data dimension");
            if (v.order != data.order)
                throw SchemaError("valuation order does not match the data order");
            Json entry = valuation_to_json(v);
            entry["faithful"] = is_faithful(v);
            vj.push_back(entry);
        }
        report["valuations"] = vj;
    }

    Json partition = Json::array();
    for (const auto& [k, recs] : data.levels) {
        if (k < 1 || k > k_max) continue;
        Json pk = Json::object();
        pk["k"] = k;
        Json counts = Json::array();
        long total = 0;
        for (int j = 0; j < data.N; ++j) {
            long c = (long)w_split(data, j, k).size();
            counts.push_back(c);
            total += c;
        }
        pk["w_counts"] = counts;
        pk["total"] = total;
        if (data.h0.count(k)) {
            pk["h0"] = data.h0.at(k);
            pk["partition_ok"] = check_dimension_partition(data, k);
        }
        partition.push_back(pk);
    }
    report["levels"] = partition;
    timer.lap("splits");

    Json bodies = Json::array();
    Json volumes = Json::array();
    for (int j = 0; j < data.N; ++j) {
        SemigroupBodyApprox approx = body_approx(data, j, k_max);
        Json bj = Json::object();
        bj["j"] = j;
        bj["limit_hull"] = polytope_to_json(approx.limit_hull);
        bj["limit_volume"] = rational_str(volume(approx.limit_hull));
        std::vector<long> range;
        for (const auto& [k, recs] : data.levels)
            if (k >= 1 && k <= k_max) range.push_back(k);
        Json seq = Json::array();
        for (const auto& [m, value] : volume_limit_estimate(data, j, range))
            seq.push_back(Json::array({m, rational_str(value)}));
        bj["normalized_counts"] = seq;
        bodies.push_back(bj);
        volumes.push_back(rational_str(volume(approx.limit_hull)));
    }
    report["bodies"] = bodies;
    report["volumes"] = volumes;
    timer.lap("bodies");

    fs::create_directories(opt.out_dir);
    write_json_file((fs::path(opt.out_dir) / "report.json").string(), report);
    write_timings(opt.out_dir, timer);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_seshadri(const Options& opt) {
    Timer timer;
    Json in = load_json_file(opt.input);
    BodyFamily fam;
    if (in.contains("vertices")) {
        ToricInputFile file = toric_input_from_json(in);
        DelzantPolytope poly(file.vertices);
        std::vector<int> chosen = file.chosen;
        if (chosen.empty())
            for (int i = 0; i < poly.vertex_count(); ++i) chosen.push_back(i);
        fam = toric_body_family(ToricInput(poly, chosen));
    } else if (in.contains("curves")) {
        SurfaceInputFile file = surface_input_from_json(in);
        std::vector<Polytope> bodies;
        for (int j = 0; j < file.N; ++j)
            bodies.push_back(surface_body(file.spec, file.L, j).body_deglex_coords);
        fam = BodyFamily::of(2, bodies);
    } else if (in.contains("bodies")) {
        std::vector<Polytope> bodies;
        for (const auto& b : in.at("bodies")) bodies.push_back(polytope_from_json(b));
        if (bodies.empty()) throw SchemaError("body family is empty");
        fam = BodyFamily::of(bodies.front().dim, bodies);
    } else {
        throw SchemaError("seshadri input must be a toric, surface, or body-family file");
    }
    timer.lap("bodies");

    Rational factorial = 1;
    for (int i = 2; i <= fam.n; ++i) factorial *= i;
    Rational vol_total = 0;
    for (const auto& body : fam.bodies) vol_total += volume(body);
    vol_total *= factorial;

    SeshadriResult res = xi_simplex_fit(fam);
    Json report = seshadri_to_json(res, fam, vol_total);
    fs::create_directories(opt.out_dir);
    write_json_file((fs::path(opt.out_dir) / "report.json").string(), report);
    write_timings(opt.out_dir, timer);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_check(const Options& opt) {
    Timer timer;
    Json in = load_json_file(opt.input);
    Json checks = Json::array();
    Json report = Json::object();
    report["mode"] = "check";

    if (in.contains("vertices")) {
        ToricInputFile file = toric_input_from_json(in);
        if (opt.k_max_set) file.k_max = opt.k_max;
        DelzantPolytope poly(file.vertices);
        if (file.chosen.empty())
            for (int i = 0; i < poly.vertex_count(); ++i) file.chosen.push_back(i);
        ToricInput input(poly, file.chosen);

        auto vol = toric_volume_check(input);
        checks.push_back(check_entry("volume_partition_identity", vol.lhs, vol.rhs));

        BodyFamily fam = toric_body_family(input);
        Rational eps = toric_seshadri(input);
        SeshadriResult xi = xi_simplex_fit(fam);
        checks.push_back(check_entry("xi_equals_toric_seshadri", xi.xi, eps));
        Rational den(denominator(eps));
        checks.push_back(check_entry("seshadri_half_integral", den * (den - 1) * (den - 2),
                                     Rational(0)));

        GradedValuationData data = toric_oracle_export(input, file.k_max);
        bool contained = true;
        bool partition_ok = true;
        for (const auto& [k, recs] : data.levels) {
            if (k < 1) continue;
            partition_ok = partition_ok && check_dimension_partition(data, k);
        }
        Rational converged = 1;
        for (std::size_t j = 0; j < input.chosen.size(); ++j) {
            SemigroupBodyApprox approx = body_approx(data, (int)j, file.k_max);
            for (const auto& [k, hull] : approx.level_hulls) {
                if (hull.empty()) continue;
                for (const auto& v : hull.vertices)
                    if (!contains(fam.bodies[j], v, ContainMode::closure)) contained = false;
            }
            // 0.9-dilate of the closed form inside the cumulative hull.
            if (!fam.bodies[j].full_dim()) continue;
            Polytope shrunk = dilate(fam.bodies[j], make_rational(9, 10));
            for (const auto& v : shrunk.vertices)
                if (!contains(approx.limit_hull, v, ContainMode::closure)) converged = 0;
        }
        checks.push_back(check_entry("oracle_hulls_inside_closed_form", contained ? 1 : 0, 1));
        checks.push_back(check_entry("partition_counts", partition_ok ? 1 : 0, 1));
        checks.push_back(check_entry("oracle_convergence_09", converged, Rational(1)));
        timer.lap("toric-checks");
    } else if (in.contains("curves")) {
        SurfaceInputFile file = surface_input_from_json(in);
        auto dec = zariski(file.spec, file.L);
        Rational orth = 0;
        for (int idx : dec.support)
            if (intersect(dec.P, file.spec.curves[(std::size_t)idx]) != 0) orth = 1;
        checks.push_back(check_entry("positive_part_orthogonal_to_support", orth, Rational(0)));
        Rational nef_ok = 1;
        for (const auto& C : file.spec.curves)
            if (intersect(dec.P, C) < 0) nef_ok = 0;
        checks.push_back(check_entry("positive_part_nef", nef_ok, Rational(1)));

        auto ray = ray_breakpoints(file.spec, file.L);
        if (ray.mu.is_rational) {
            for (int pct : {25, 50, 75}) {
                Rational t = ray.mu.value * Rational(pct) / 100;
                auto vd = volume_difference_check(file.spec, file.L, t);
                checks.push_back(check_entry("volume_difference_t" + std::to_string(pct), vd.lhs,
                                             vd.rhs));
            }
        }
        if (dec.Nneg.is_zero()) {
            Rational total_area = 0;
            for (int j = 0; j < file.N; ++j)
                total_area += volume(surface_body(file.spec, file.L, j).body_blowup_coords);
            checks.push_back(check_entry("volume_partition_identity", 2 * total_area,
                                         intersect(dec.P, dec.P)));
        }
        timer.lap("surface-checks");
    } else {
        throw SchemaError("check input must be a toric or surface file");
    }

    report["checks"] = checks;
    report["all_passed"] = all_passed(checks);
    fs::create_directories(opt.out_dir);
    write_json_file((fs::path(opt.out_dir) / "report.json").string(), report);
    write_timings(opt.out_dir, timer);
    std::cout << report.dump(2) << "\n";
    return all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multipoint Okounkov bodies, Seshadri constants and Zariski decompositions"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_points) {
        sub->add_option("--input,--from", opt.input, "input JSON file")->required();
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--k-max", opt.k_max, "maximum level for oracle data")
            ->each([&](const std::string&) { opt.k_max_set = true; });
        sub->add_flag("--svg", opt.svg, "emit SVG plots of 2D bodies");
        if (with_points)
            sub->add_option("--points", opt.points, "chosen vertex indices")->delimiter(',');
    };

    CLI::App* toric = app.add_subcommand("toric", "toric pipeline: subdivision, bodies, oracle");
    add_common(toric, true);
    CLI::App* surface = app.add_subcommand("surface", "surface pipeline: Zariski, ray bodies");
    add_common(surface, false);
    surface->add_option("--curves", opt.curves, "delpezzo or a JSON file with curve classes");
    CLI::App* semigroup = app.add_subcommand("semigroup", "splits and hulls of valuation data");
    add_common(semigroup, false);
    CLI::App* seshadri = app.add_subcommand("seshadri", "simplex-fit xi from any body source");
    add_common(seshadri, false);
    CLI::App* check = app.add_subcommand("check", "cross-validation checks on an input");
    add_common(check, true);

    try {
        app.parse(argc, argv);
        if (toric->parsed()) return run_toric(opt);
        if (surface->parsed()) return run_surface(opt);
        if (semigroup->parsed()) return run_semigroup(opt);
        if (seshadri->parsed()) return run_seshadri(opt);
        if (check->parsed()) return run_check(opt);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
