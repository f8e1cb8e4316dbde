#include "dircomplex/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dircx {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + p.string());
    out << content;
}

std::string exact_str(const std::optional<int>& e) {
    return e ? std::to_string(*e) : "";
}

} // namespace

json direction_to_json(const Direction& d) {
    json j;
    j["q"] = d.q;
    json betas = json::array();
    for (const auto& s : d.beta) {
        if (s.rational) betas.push_back(s.to_string());
        else betas.push_back(s.value);
    }
    j["beta"] = betas;
    j["b"] = d.b;
    return j;
}

Direction direction_from_json(const json& j) {
    int q = j.value("q", 2);
    std::vector<Slope> beta;
    for (const auto& b : j.at("beta")) {
        if (b.is_string()) beta.push_back(Slope::parse(b.get<std::string>()));
        else beta.push_back(Slope::from_double(b.get<double>()));
    }
    std::vector<double> bw = j.at("b").get<std::vector<double>>();
    return Direction(q, std::move(beta), std::move(bw));
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    ExperimentConfig c;
    c.system = j.value("system", json::object());
    for (const auto& d : j.value("directions", json::array()))
        c.directions.push_back(direction_from_json(d));
    for (const auto& f : j.value("families", json::array({"mean"})))
        c.families.push_back(parse_family(f.get<std::string>()));
    c.eps_grid = j.value("eps_grid", std::vector<double>{0.5, 0.25});
    c.k_grid = j.value("k_grid", std::vector<int>{1, 2, 4, 8, 16});
    c.delta_grid = j.value("delta_grid",
                           std::vector<double>{0.25, 0.125, 0.0625, 0.03125, 0.015625});
    c.n_samples = j.value("n_samples", 256);
    c.tau = j.value("tau", 0.1);
    c.seed = j.value("seed", std::uint64_t{1});
    c.exact_cap = j.value("exact_cap", 200000LL);
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    json j;
    in >> j;
    return from_json(j);
}

json ExperimentConfig::to_json() const {
    json j;
    j["system"] = system;
    json dirs = json::array();
    for (const auto& d : directions) dirs.push_back(direction_to_json(d));
    j["directions"] = dirs;
    json fams = json::array();
    for (auto f : families) fams.push_back(family_name(f));
    j["families"] = fams;
    j["eps_grid"] = eps_grid;
    j["k_grid"] = k_grid;
    j["delta_grid"] = delta_grid;
    j["n_samples"] = n_samples;
    j["tau"] = tau;
    j["seed"] = seed;
    j["exact_cap"] = exact_cap;
    return j;
}

void ExperimentConfig::validate() const {
    if (eps_grid.empty()) throw std::invalid_argument("config: empty eps grid");
    if (k_grid.empty()) throw std::invalid_argument("config: empty k grid");
    if (!std::is_sorted(k_grid.begin(), k_grid.end()))
        throw std::invalid_argument("config: k grid must be sorted ascending");
    if (n_samples < 1) throw std::invalid_argument("config: n_samples must be >= 1");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("config: tau must be in (0,1)");
}

int required_radius(const std::vector<Direction>& dirs, int k_max) {
    int need = k_max + 12;
    for (const auto& d : dirs) {
        double reach = 0.0;
        for (int i = 0; i < d.q - 1; ++i)
            reach = std::max(reach, std::fabs(d.beta[i].as_double()) * (k_max - 1) + d.b[i]);
        need = std::max(need, (k_max - 1) + static_cast<int>(std::ceil(reach)) + 12);
    }
    return need;
}

std::shared_ptr<ActionSystem> make_system(const json& desc, int min_radius) {
    std::string kind = desc.at("kind").get<std::string>();
    if (kind == "rotation") {
        return std::make_shared<RotationSystem>(desc.value("alpha", 0.3819660112501051),
                                                desc.value("gamma", 0.5412658773652741));
    }
    if (kind == "fullshift") {
        int radius = std::max(desc.value("radius", 0), min_radius);
        return std::make_shared<FullShift>(desc.value("alphabet", 2), radius);
    }
    if (kind == "skewshift") {
        int radius = std::max(desc.value("radius", 0), min_radius);
        return std::make_shared<SkewShift>(desc.value("alphabet", 2), radius);
    }
    if (kind == "permutation") {
        return std::make_shared<PermutationSystem>(PermutationSystem::cyclic(
            desc.value("n", 5), desc.value("step1", 1), desc.value("step2", 2)));
    }
    throw std::invalid_argument("unknown system kind: " + kind);
}

namespace {

struct Outputs {
    std::string csv_name;
    std::string csv;
    json summary;
};

std::string beta_str(const Direction& d) {
    return d.beta[0].to_string();
}

void profile_rows(std::ostringstream& csv, const ComplexityProfile& prof, const Direction& dir) {
    for (std::size_t e = 0; e < prof.eps_grid.size(); ++e)
        for (std::size_t ki = 0; ki < prof.k_grid.size(); ++ki) {
            const auto& r = prof.results[e][ki];
            csv << family_name(prof.family) << ',' << beta_str(dir) << ',' << fmt(dir.b[0]) << ','
                << r.k << ',' << fmt(r.eps) << ',' << exact_str(r.exact) << ',' << r.greedy_upper
                << ',' << r.separated_lower << ',' << prof.verdicts[e].to_string() << '\n';
        }
}

json profile_verdicts(const ComplexityProfile& prof) {
    json v = json::object();
    for (std::size_t e = 0; e < prof.eps_grid.size(); ++e)
        v[fmt(prof.eps_grid[e])] = prof.verdicts[e].to_string();
    return v;
}

Outputs run_span(const ExperimentConfig& cfg, bool measure) {
    Outputs out;
    out.csv_name = measure ? "measure_span.csv" : "span.csv";
    std::ostringstream csv;
    csv << "family,beta,b,k,eps,exact,greedy,lower,verdict\n";
    json verdicts = json::array();
    int radius = required_radius(cfg.directions, cfg.k_grid.back());
    auto sys = make_system(cfg.system, radius);
    auto sample = sample_measure(*sys, cfg.n_samples, cfg.seed);
    for (const auto& dir : cfg.directions)
        for (auto fam : cfg.families) {
            MetricSeq ms(*sys, dir, fam);
            auto prof = classify(ms, sample, cfg.k_grid, cfg.eps_grid, cfg.exact_cap, measure);
            profile_rows(csv, prof, dir);
            json v;
            v["family"] = family_name(fam);
            v["beta"] = beta_str(dir);
            v["b"] = dir.b[0];
            v["verdicts"] = profile_verdicts(prof);
            verdicts.push_back(v);
        }
    out.csv = csv.str();
    out.summary["profiles"] = verdicts;
    return out;
}

Outputs run_equicont(const ExperimentConfig& cfg) {
    Outputs out;
    out.csv_name = "equicont.csv";
    std::ostringstream csv;
    csv << "family,eps,delta,discarded,verdict\n";
    json summary = json::array();
    int radius = required_radius(cfg.directions, cfg.k_grid.back());
    auto sys = make_system(cfg.system, radius);
    const auto& dir = cfg.directions.at(0);
    int per_delta = std::max(8, cfg.n_samples / 8);
    for (auto pf : {ProbeFamily::bowen, ProbeFamily::maxmean, ProbeFamily::mean_limsup}) {
        auto report = mu_equicontinuity_report(*sys, dir, pf, cfg.tau, per_delta, cfg.seed,
                                               cfg.k_grid, cfg.eps_grid, cfg.delta_grid);
        for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e)
            csv << probe_family_name(pf) << ',' << fmt(cfg.eps_grid[e]) << ','
                << fmt(report.curve.delta[e]) << ',' << report.discarded << ','
                << (report.pass ? "PASS" : "FAIL") << '\n';
        json r;
        r["family"] = probe_family_name(pf);
        r["pass"] = report.pass;
        r["discarded"] = report.discarded;
        summary.push_back(r);
    }
    out.csv = csv.str();
    out.summary["reports"] = summary;
    return out;
}

Outputs run_suspend(const ExperimentConfig& cfg) {
    Outputs out;
    out.csv_name = "suspend.csv";
    std::ostringstream csv;
    csv << "side,b,k,eps,greedy,lower,verdict\n";
    json summary = json::array();
    int radius = required_radius(cfg.directions, cfg.k_grid.back());
    std::shared_ptr<ActionSystem> sys = make_system(cfg.system, radius);
    for (const auto& dir : cfg.directions) {
        auto cv = cross_validate(sys, dir.beta[0], cfg.eps_grid, cfg.k_grid,
                                 cfg.n_samples, cfg.seed);
        for (std::size_t bi = 0; bi < cv.b_values.size(); ++bi) {
            const auto& prof = cv.base_profiles[bi];
            for (std::size_t e = 0; e < prof.eps_grid.size(); ++e)
                for (std::size_t ki = 0; ki < prof.k_grid.size(); ++ki) {
                    const auto& r = prof.results[e][ki];
                    csv << "base," << fmt(cv.b_values[bi]) << ',' << r.k << ',' << fmt(r.eps)
                        << ',' << r.greedy_upper << ',' << r.separated_lower << ','
                        << prof.verdicts[e].to_string() << '\n';
                }
        }
        const auto& sp = cv.suspension_profile;
        for (std::size_t e = 0; e < sp.eps_grid.size(); ++e)
            for (std::size_t ki = 0; ki < sp.k_grid.size(); ++ki) {
                const auto& r = sp.results[e][ki];
                csv << "susp,," << r.k << ',' << fmt(r.eps) << ',' << r.greedy_upper << ','
                    << r.separated_lower << ',' << sp.verdicts[e].to_string() << '\n';
            }
        json agreement;
        agreement["beta"] = beta_str(dir);
        agreement["all_agree"] = cv.all_agree;
        json per_eps = json::array();
        for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e) {
            json row;
            row["eps"] = cv.eps_grid[e];
            row["verdicts"] = cv.verdict_rows[e];
            row["agree"] = static_cast<bool>(cv.agreement[e]);
            per_eps.push_back(row);
        }
        agreement["per_eps"] = per_eps;
        summary.push_back(agreement);
    }
    out.csv = csv.str();
    out.summary["agreement"] = summary;
    return out;
}

Outputs run_spectral(const ExperimentConfig& cfg) {
    Outputs out;
    out.csv_name = "spectral.csv";
    std::ostringstream csv;
    csv << "function_id,k,eps,greedy,lower,verdict\n";
    int radius = required_radius(cfg.directions, cfg.k_grid.back()) + 4;
    auto sys = make_system(cfg.system, radius);
    const auto& dir = cfg.directions.at(0);
    auto battery = test_battery(*sys);
    auto verdict = spectrum_verdict(*sys, dir, battery, cfg.eps_grid, cfg.k_grid,
                                    cfg.n_samples, cfg.seed);
    for (std::size_t fi = 0; fi < verdict.function_ids.size(); ++fi) {
        const auto& flat = verdict.results[fi];
        for (const auto& r : flat)
            csv << verdict.function_ids[fi] << ',' << r.k << ',' << fmt(r.eps) << ','
                << r.greedy_upper << ',' << r.separated_lower << ','
                << verdict.per_function[fi].to_string() << '\n';
    }
    out.csv = csv.str();
    out.summary["verdict"] = verdict.to_string();
    json per_fn = json::object();
    for (std::size_t fi = 0; fi < verdict.function_ids.size(); ++fi)
        per_fn[verdict.function_ids[fi]] = verdict.per_function[fi].to_string();
    out.summary["per_function"] = per_fn;
    return out;
}

Outputs run_sweep(const ExperimentConfig& cfg) {
    if (cfg.directions.size() < 2)
        throw std::invalid_argument("sweep: needs a beta grid of >= 2 directions");
    Outputs out = run_span(cfg, true);
    out.csv_name = "sweep.csv";
    return out;
}

Outputs run_zoo_check(const ExperimentConfig& cfg) {
    Outputs out;
    out.csv_name = "zoo.csv";
    std::ostringstream csv;
    csv << "system,beta,eps,verdict,expected,match\n";
    json summary = json::array();

    const double sqrt2 = 1.4142135623730951;
    struct Cell {
        json system;
        Slope beta;
        std::string expected;
    };
    std::vector<Cell> cells;
    std::vector<std::pair<std::string, json>> zoo = {
        {"rotation", json{{"kind", "rotation"}, {"alpha", 0.3819660112501051}, {"gamma", 0.5412658773652741}}},
        {"fullshift", json{{"kind", "fullshift"}, {"alphabet", 2}}},
        {"skewshift", json{{"kind", "skewshift"}, {"alphabet", 2}}},
        {"permutation", json{{"kind", "permutation"}, {"n", 5}, {"step1", 1}, {"step2", 2}}},
    };
    std::vector<Slope> betas = {Slope::from_rational(0, 1), Slope::from_rational(1, 1),
                                Slope::from_double(sqrt2)};
    for (const auto& [name, desc] : zoo)
        for (const auto& beta : betas) {
            std::string expected = "BOUNDED";
            if (name == "fullshift") expected = "GROWING";
            if (name == "skewshift")
                expected = (beta.rational && beta.num == 1 && beta.den == 1) ? "BOUNDED" : "GROWING";
            cells.push_back({desc, beta, expected});
        }

    bool all_match = true;
    for (const auto& cell : cells) {
        Direction dir(cell.beta, 1.0);
        int radius = required_radius({dir}, cfg.k_grid.back());
        auto sys = make_system(cell.system, radius);
        auto sample = sample_measure(*sys, cfg.n_samples, cfg.seed);
        MetricSeq ms(*sys, dir, Family::mean);
        auto prof = classify(ms, sample, cfg.k_grid, cfg.eps_grid, 0, true);
        // one verdict per cell: all eps rows must agree with the expectation
        bool match = true;
        std::string verdict = prof.verdicts.front().to_string();
        for (const auto& v : prof.verdicts) {
            std::string name = v.to_string();
            bool ok = cell.expected == "GROWING" ? name == "GROWING"
                                                 : name.rfind("BOUNDED", 0) == 0;
            if (!ok) { match = false; verdict = name; }
        }
        all_match = all_match && match;
        std::string sys_name = cell.system.at("kind").get<std::string>();
        csv << sys_name << ',' << cell.beta.to_string() << ",all," << verdict << ','
            << cell.expected << ',' << (match ? "yes" : "no") << '\n';
        json row;
        row["system"] = sys_name;
        row["beta"] = cell.beta.to_string();
        row["verdict"] = verdict;
        row["expected"] = cell.expected;
        row["match"] = match;
        summary.push_back(row);
    }
    out.csv = csv.str();
    out.summary["matrix"] = summary;
    out.summary["all_match"] = all_match;
    return out;
}

} // namespace

int run_experiment(const std::string& subcommand, const ExperimentConfig& cfg,
                   const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    json manifest;
    std::string canonical = cfg.to_json().dump();
    manifest["config_hash"] = fnv1a(canonical);
    manifest["seed"] = cfg.seed;
    manifest["version"] = kToolVersion;
    manifest["command"] = subcommand;
    manifest["config"] = cfg.to_json();
    try {
        cfg.validate();
        Outputs out;
        if (subcommand == "span") out = run_span(cfg, false);
        else if (subcommand == "measure-span") out = run_span(cfg, true);
        else if (subcommand == "equicont") out = run_equicont(cfg);
        else if (subcommand == "suspend") out = run_suspend(cfg);
        else if (subcommand == "spectral") out = run_spectral(cfg);
        else if (subcommand == "sweep") out = run_sweep(cfg);
        else if (subcommand == "zoo-check") out = run_zoo_check(cfg);
        else throw std::invalid_argument("unknown subcommand: " + subcommand);
        write_file(fs::path(out_dir) / out.csv_name, out.csv);
        write_file(fs::path(out_dir) / "summary.json", out.summary.dump(2) + "\n");
        write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
        return 0;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        err["command"] = subcommand;
        write_file(fs::path(out_dir) / "summary.json", err.dump(2) + "\n");
        write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
        return 1;
    }
}

} // namespace dircx
