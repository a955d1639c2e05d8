// squeeze-lab: run squeezing-function estimates, pinching radii, geodesic
// distances and comparison envelopes on cataloged domains, writing
// reproducible JSON/CSV records (identical config + seed => identical bytes).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqlab/catalog.hpp"
#include "sqlab/comparisons.hpp"
#include "sqlab/embedding.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/metrics.hpp"
#include "sqlab/pinching.hpp"
#include "sqlab/squeeze.hpp"
#include "sqlab/version.hpp"

using json = nlohmann::ordered_json;
using namespace sqlab;

namespace {

struct Output {
    std::string path;       // empty = stdout
    std::string format = "json";
    json meta = json::object();
    std::vector<json> rows;

    void add_row(json row) { rows.push_back(std::move(row)); }

    static std::string format_number(const json& v) {
        if (v.is_number_float()) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            return buf;
        }
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    void write() const {
        std::ostringstream os;
        if (format == "json") {
            json doc = json::object();
            doc["tool"] = kToolName;
            doc["version"] = kVersion;
            for (auto& [k, v] : meta.items()) doc[k] = v;
            doc["rows"] = rows;
            os << doc.dump(2) << "\n";
        } else {
            // flat projection: header from the first row, seed column appended
            if (!rows.empty()) {
                bool first = true;
                for (auto& [k, v] : rows.front().items()) {
                    (void)v;
                    os << (first ? "" : ",") << k;
                    first = false;
                }
                os << ",seed\n";
                for (const auto& row : rows) {
                    first = true;
                    for (auto& [k, v] : row.items()) {
                        (void)k;
                        os << (first ? "" : ",") << format_number(v);
                        first = false;
                    }
                    os << "," << meta.value("seed", 0ull) << "\n";
                }
            }
        }
        if (path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw BadParams("cannot open output file " + path);
            f << os.str();
        }
    }
};

RealPoint parse_point(const std::string& csv, int expected_n = -1) {
    Vec coords;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(std::stod(tok));
    if (coords.size() % 2 != 0) throw BadParams("point needs 2n coordinates, got " + csv);
    const int n = int(coords.size() / 2);
    if (expected_n > 0 && n != expected_n)
        throw BadParams("point has wrong dimension for this domain");
    RealPoint p{std::move(coords), n};
    p.require_valid();
    return p;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw BadParams("empty list");
    return out;
}

// a:b:count
void parse_grid(const std::string& s, double& lo, double& hi, int& count) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 3) throw BadParams("grid must be lo:hi:count");
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    count = std::stoi(parts[2]);
    if (count < 1) throw BadParams("grid count must be >= 1");
}

json point_json(const RealPoint& p) {
    json a = json::array();
    for (double c : p.coords) a.push_back(c);
    return a;
}

void check_samples(long samples, bool pinching_command) {
    if (pinching_command && samples < 1000)
        throw BadParams("pinching/enclosing commands need samples >= 10^3");
    if (pinching_command && samples < 10000)
        std::cerr << "warning: fewer than 10^4 samples; estimates may be rough\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squeeze-lab: squeezing functions, pinching radii and "
                 "invariant-metric comparison envelopes on bounded domains"};
    app.require_subcommand(1);

    Output out;
    long samples = 100000;
    std::uint64_t seed = 42;
    std::string config_path;
    app.add_option("--output", out.path, "output file (default stdout)");
    app.add_option("--format", out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--samples", samples, "sample count (default 10^5)");
    app.add_option("--seed", seed, "RNG seed (default 42)");
    app.add_option("--config", config_path, "JSON config file; flags override");

    // ----- pinch / enclosing -----
    std::string domain_id, point_csv;
    auto* pinch = app.add_subcommand("pinch", "ball pinching radius at a boundary point");
    pinch->add_option("--domain", domain_id)->required();
    pinch->add_option("--point", point_csv)->required();
    auto* enclosing = app.add_subcommand("enclosing", "enclosing ball radius at a boundary point");
    enclosing->add_option("--domain", domain_id)->required();
    enclosing->add_option("--point", point_csv)->required();

    // ----- semicontinuity -----
    std::string radii_csv = "0.2,0.1,0.05";
    long ring_samples = 32;
    auto* semi = app.add_subcommand("semicontinuity", "pinching ring scan around a base point");
    semi->add_option("--domain", domain_id)->required();
    semi->add_option("--point", point_csv)->required();
    semi->add_option("--radii", radii_csv, "decreasing ring radii");
    semi->add_option("--ring-samples", ring_samples);

    // ----- geodesic -----
    std::string r_grid = "0.55:0.99:45";
    double rho_param = 0.5;
    bool with_oracle = false;
    long oracle_grid = 100000;
    auto* geo = app.add_subcommand("geodesic", "Kobayashi distance to a geodesic-ball boundary");
    geo->add_option("--r-grid", r_grid, "r values lo:hi:count");
    geo->add_option("--rho", rho_param);
    geo->add_flag("--oracle", with_oracle, "add brute-force minimization column");
    geo->add_option("--grid", oracle_grid, "oracle sphere sample count");

    // ----- kobayashi -----
    std::string z_csv, w_csv;
    auto* kob = app.add_subcommand("kobayashi", "Kobayashi distance between two ball points");
    kob->add_option("--z", z_csv)->required();
    kob->add_option("--w", w_csv)->required();

    // ----- bounds -----
    std::string depths_csv = "0.1,0.01,0.001";
    auto* bounds = app.add_subcommand("bounds", "boundary squeezing estimate along the inward normal");
    bounds->add_option("--domain", domain_id)->required();
    bounds->add_option("--point", point_csv)->required();
    bounds->add_option("--depths", depths_csv);

    // ----- product -----
    std::string factors_csv;
    auto* product = app.add_subcommand("product", "product-domain squeezing lower bound");
    product->add_option("--factors", factors_csv)->required();

    // ----- limit -----
    std::string family = "punctured-disc-exhaustion";
    std::string mode = "increasing";
    long terms = 20;
    auto* limit = app.add_subcommand("limit", "squeezing along a monotone domain family");
    limit->add_option("--family", family,
                      "punctured-disc-exhaustion | ball-exhaustion | punctured-disc-shrink");
    limit->add_option("--z", z_csv)->required();
    limit->add_option("--terms", terms);
    limit->add_option("--mode", mode)->check(CLI::IsMember({"increasing", "decreasing"}));

    // ----- envelope -----
    std::string relation = "CK";
    double s_value = 0.5;
    long env_n = 1;
    auto* envelope = app.add_subcommand("envelope", "metric/volume comparison envelope");
    envelope->add_option("--relation", relation)
        ->check(CLI::IsMember({"CK", "KB", "KKE", "VolAny", "VolKB", "VolKKE"}));
    envelope->add_option("--s", s_value)->required();
    envelope->add_option("--n", env_n);

    // ----- catalog -----
    auto* catalog = app.add_subcommand("catalog", "list cataloged domains and embeddings");
    std::string describe_id;
    catalog->add_option("--describe", describe_id, "print bbox and a boundary sample");

    // ----- verify-embedding -----
    std::string embedding_id;
    double radius = 0.5;
    bool witness_mode = false;
    long target_grid = 200;
    auto* verify = app.add_subcommand("verify-embedding", "ball inclusion / witness radius of an embedding");
    verify->add_option("--embedding", embedding_id)->required();
    verify->add_option("--r", radius);
    verify->add_flag("--witness", witness_mode, "report the witness radius instead");
    verify->add_option("--grid", target_grid, "inclusion target count");

    // ----- support-scan -----
    double eps = 0.01;
    long scan_grid = 500;
    auto* scan = app.add_subcommand("support-scan", "sheared Reinhardt support-function scan");
    scan->add_option("--eps", eps);
    scan->add_option("--grid", scan_grid);

    // config file: same keys as flags, flags win
    app.allow_config_extras(true);
    try {
        // pre-scan for --config so defaults can be loaded before parsing
        for (int i = 1; i + 1 < argc; ++i)
            if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw BadParams("cannot read config file " + config_path);
            json cfg = json::parse(f);
            auto set_if = [&](const char* key, auto& target) {
                using T = std::decay_t<decltype(target)>;
                if (cfg.contains(key)) target = cfg[key].get<T>();
            };
            set_if("output", out.path);
            set_if("format", out.format);
            set_if("samples", samples);
            set_if("seed", seed);
            set_if("domain", domain_id);
            set_if("point", point_csv);
            set_if("radii", radii_csv);
            set_if("depths", depths_csv);
            set_if("factors", factors_csv);
            set_if("relation", relation);
            set_if("s", s_value);
            set_if("n", env_n);
            set_if("rho", rho_param);
            set_if("r-grid", r_grid);
            set_if("z", z_csv);
            set_if("w", w_csv);
            set_if("embedding", embedding_id);
            set_if("r", radius);
            set_if("eps", eps);
        }

        app.parse(argc, argv);

        out.meta["command"] = app.get_subcommands().front()->get_name();
        out.meta["seed"] = seed;
        out.meta["samples"] = samples;

        if (*pinch || *enclosing) {
            check_samples(samples, true);
            const DomainSpec domain = domain_from_id(domain_id);
            const RealPoint p = parse_point(point_csv, domain.n);
            out.meta["domain"] = domain.name;
            out.meta["point"] = point_json(p);
            const auto interior = sample_interior(domain, int(samples), seed);
            if (*pinch) {
                const PinchResult res = pinching_radius(domain, p, interior);
                out.add_row({{"pinching", res.pinching},
                             {"lambda", res.lambda},
                             {"inner_radius", std::isinf(res.inner_radius) ? -1.0 : res.inner_radius},
                             {"enclosing_radius",
                              std::isinf(res.enclosing_radius) ? -1.0 : res.enclosing_radius},
                             {"enclosing_infinite", std::isinf(res.enclosing_radius)},
                             {"gsc", res.gsc},
                             {"provenance", "BoundaryEstimate"}});
            } else {
                const double e = enclosing_radius(domain, p, interior);
                out.add_row({{"enclosing_radius", std::isinf(e) ? -1.0 : e},
                             {"enclosing_infinite", std::isinf(e)},
                             {"provenance", "DiamBound"}});
            }
        } else if (*semi) {
            check_samples(samples, true);
            const DomainSpec domain = domain_from_id(domain_id);
            const RealPoint p = parse_point(point_csv, domain.n);
            out.meta["domain"] = domain.name;
            out.meta["point"] = point_json(p);
            const auto interior = sample_interior(domain, int(samples), seed);
            const auto radii = parse_list(radii_csv);
            const auto report =
                semicontinuity_scan(domain, p, radii, int(ring_samples), interior, seed);
            out.meta["base_pinching"] = report.base_pinching;
            out.meta["lower_semicontinuous"] = report.lower_semicontinuous(0.05);
            for (const auto& ring : report.rings)
                out.add_row({{"radius", ring.radius},
                             {"min_pinching", ring.min_pinching},
                             {"points", ring.points},
                             {"provenance", "BoundaryEstimate"}});
        } else if (*geo) {
            double lo, hi;
            int count;
            parse_grid(r_grid, lo, hi, count);
            out.meta["rho"] = rho_param;
            for (int i = 0; i < count; ++i) {
                const double r = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
                json row;
                row["r"] = r;
                row["rho"] = rho_param;
                try {
                    const auto gd = geodesic_ball_boundary_distance(r, rho_param);
                    row["closed_form"] = gd.value;
                    row["closed_form_exact"] = gd.exact;
                    row["provenance"] = gd.exact ? "Exact" : "Vacuous";
                    if (with_oracle || !gd.exact) {
                        const auto oracle = boundary_distance_oracle(
                            r, rho_param, 2, int(oracle_grid), seed);
                        row["oracle"] = oracle.refined_min;
                        if (!gd.exact) row["provenance"] = "Heuristic";
                    }
                } catch (const OutOfRange&) {
                    row["closed_form"] = nullptr;
                    row["provenance"] = "Vacuous";
                }
                out.add_row(std::move(row));
            }
        } else if (*kob) {
            const RealPoint z = parse_point(z_csv);
            const RealPoint w = parse_point(w_csv);
            if (z.n != w.n) throw BadParams("z and w must have the same dimension");
            const double d = kobayashi_distance_ball({z, w, z.n});
            out.add_row({{"distance", d}, {"provenance", "Exact"}});
        } else if (*bounds) {
            check_samples(samples, true);
            const DomainSpec domain = domain_from_id(domain_id);
            const RealPoint p = parse_point(point_csv, domain.n);
            out.meta["domain"] = domain.name;
            out.meta["point"] = point_json(p);
            const auto interior = sample_interior(domain, int(samples), seed);
            const auto rows = boundary_estimate_at_point(domain, p, parse_list(depths_csv), interior);
            for (const auto& row : rows)
                out.add_row({{"delta", row.delta},
                             {"lower", row.bound.lower},
                             {"upper", row.bound.upper},
                             {"inside", row.inside},
                             {"provenance", provenance_name(row.bound.provenance)}});
        } else if (*product) {
            const auto factors = parse_list(factors_csv);
            out.add_row({{"lower", product_lower_bound(factors)}, {"provenance", "ProductBound"}});
        } else if (*limit) {
            const RealPoint z = parse_point(z_csv);
            std::vector<DomainSpec> family_domains;
            DomainSpec limit_domain;
            SequenceEvaluator evaluator;
            double limit_value = 0.0;
            const bool increasing = mode == "increasing";
            if (family == "punctured-disc-exhaustion" || family == "punctured-disc-shrink") {
                const bool shrink = family == "punctured-disc-shrink";
                for (long k = 1; k <= terms; ++k) {
                    const double rk = shrink ? 1.0 + 1.0 / double(k)
                                             : 1.0 - 1.0 / double(k + 1);
                    family_domains.push_back(punctured_disc_domain(rk));
                }
                limit_domain = punctured_disc_domain();
                evaluator = [&z](std::size_t, const DomainSpec& dk) {
                    const double c = std::sqrt(dk.rho(RealPoint::zero(1)) * -1.0);
                    ModelDomain model{ModelDomain::Kind::ScaledPuncturedDisc, 1, c};
                    return exact_squeezing(model, z).lower;
                };
                limit_value =
                    exact_squeezing({ModelDomain::Kind::PuncturedDisc, 1, 1.0}, z).lower;
            } else if (family == "ball-exhaustion") {
                for (long k = 1; k <= terms; ++k) family_domains.push_back(ball_domain(z.n));
                limit_domain = ball_domain(z.n);
                evaluator = [](std::size_t, const DomainSpec&) { return 1.0; };
                limit_value = 1.0;
            } else {
                throw BadParams("unknown family " + family);
            }
            const auto report =
                increasing ? increasing_sequence_eval(family_domains, limit_domain, z,
                                                      evaluator, limit_value)
                           : decreasing_sequence_eval(family_domains, limit_domain, z,
                                                      evaluator, limit_value);
            out.meta["limit_value"] = report.limit_value;
            out.meta["converged"] = report.converged;
            out.meta["one_sided_holds"] = report.one_sided_holds;
            for (std::size_t k = 0; k < report.values.size(); ++k)
                out.add_row({{"k", k + 1},
                             {"value", report.values[k]},
                             {"error", report.errors[k]},
                             {"provenance", "LimitTheorem"}});
        } else if (*envelope) {
            Envelope env;
            if (relation == "CK") env = envelope_caratheodory_kobayashi(s_value);
            else if (relation == "KB") env = envelope_kobayashi_bergman(s_value, int(env_n));
            else if (relation == "KKE") env = envelope_kobayashi_ke(s_value, int(env_n));
            else if (relation == "VolAny")
                env = envelope_volume_pair(s_value, int(env_n), EnvelopeRelation::VolumeAny);
            else if (relation == "VolKB")
                env = envelope_volume_pair(s_value, int(env_n), EnvelopeRelation::VolumeKB);
            else
                env = envelope_volume_pair(s_value, int(env_n), EnvelopeRelation::VolumeKKE);
            out.add_row({{"relation", relation_name(env.relation)},
                         {"s", env.s},
                         {"n", env.n},
                         {"low", env.low},
                         {"high", env.high},
                         {"consistent", env.consistent()},
                         {"provenance", "Exact"}});
        } else if (*catalog) {
            if (!describe_id.empty()) {
                const DomainSpec domain = domain_from_id(describe_id);
                out.meta["domain"] = domain.name;
                const auto bd = sample_boundary(domain, 1, seed);
                out.add_row({{"n", domain.n},
                             {"bbox_diameter", domain.bbox.diameter()},
                             {"boundary_sample", point_json(bd.front())},
                             {"provenance", "Exact"}});
            } else {
                for (const auto& id : catalog_ids())
                    out.add_row({{"domain", id}, {"provenance", "Exact"}});
                for (const auto& id : embedding_ids())
                    out.add_row({{"embedding", id}, {"provenance", "Exact"}});
            }
        } else if (*verify) {
            const EmbeddingSpec spec = embedding_from_id(embedding_id);
            out.meta["embedding"] = spec.name;
            const auto interior = sample_interior(spec.domain, int(samples), seed);
            if (witness_mode) {
                const auto cloud = effective_boundary_cloud(spec.domain, int(samples), seed);
                const auto bound = witness_radius(spec, cloud, interior);
                out.add_row({{"witness_radius", bound.lower},
                             {"provenance", provenance_name(bound.provenance)}});
            } else {
                const auto report =
                    verify_inclusion(spec, radius, int(target_grid), seed, interior);
                json row = {{"r", radius},
                            {"included", report.included},
                            {"targets", report.targets},
                            {"provenance", report.heuristic ? "Heuristic" : "EmbeddingWitness"}};
                if (!report.included) {
                    row["worst_target"] = point_json(report.worst_target);
                    row["worst_distance"] = report.worst_distance;
                }
                out.add_row(std::move(row));
            }
        } else if (*scan) {
            const auto report = reinhardt_support_scan(ShearParams{eps}, int(scan_grid));
            out.add_row({{"eps", eps},
                         {"max_value", report.max_value},
                         {"argmax_r1", report.argmax_r1},
                         {"argmax_theta1", report.argmax_theta1},
                         {"max_at_origin", report.max_at_origin},
                         {"monotone_in_r1", report.monotone_in_r1},
                         {"edge_r0_max", report.edge_r0_max},
                         {"edge_r1_max", report.edge_r1_max},
                         {"passed", report.passed},
                         {"provenance", "Exact"}});
        }

        out.write();
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.kind == ErrorKind::Validation) {
            std::cerr << "hint: run 'squeeze-lab catalog' for known domains and embeddings, "
                         "or --help for flags\n";
            return 2;
        }
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
