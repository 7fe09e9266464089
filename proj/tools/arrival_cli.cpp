// Command-line front end: parses graph files, dispatches to the solvers, and
// emits machine-readable JSON on stdout. Exit codes: 0 success, 1
// computational error (error.kind in the JSON), 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arrival/bounds.hpp"
#include "arrival/exact.hpp"
#include "arrival/graphgen.hpp"
#include "arrival/montecarlo.hpp"
#include "arrival/powerseries.hpp"
#include "arrival/resistance.hpp"
#include "arrival/special.hpp"
#include "arrival/stats.hpp"

using nlohmann::ordered_json;
using namespace arrival;

namespace {

constexpr int kSchemaVersion = 1;

struct Opts {
    std::string graph, s, t;
    std::string p, q, z;
    std::string mode = "rational";
    std::string model, op, lengths, q_grid;
    int n = 0;
    int i = 1;
    int n_max = -1;
    int trunc = 256;
    int max_states = kDefaultMaxStates;
    int replicas = 1;
    int hist_cap = 1024;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    double alpha = 0.01;
    bool pretty = false;
    bool skip_exact = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
ordered_json json_scalar(const S& v);

template <>
ordered_json json_scalar<Rational>(const Rational& v) {
    return format_rational(v);
}

template <>
ordered_json json_scalar<double>(const double& v) { return v; }

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Exactly one of --p/--q may be given; either determines both.
struct ProbInput {
    std::optional<Rational> p;
    std::optional<Rational> q;
};

ProbInput resolve_prob(const Opts& o, bool required) {
    if (!o.p.empty() && !o.q.empty()) throw UsageError("give only one of --p and --q");
    ProbInput r;
    try {
        if (!o.p.empty()) r.p = parse_rational(o.p);
        else if (!o.q.empty()) r.q = parse_rational(o.q);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (r.p) r.q = Rational(1) - *r.p;
    if (r.q && !r.p) r.p = Rational(1) - *r.q;
    if (required && !r.p) throw UsageError("one of --p or --q is required");
    if (r.p && (!(*r.p > 0) || *r.p > 1)) throw UsageError("p must lie in (0,1]");
    return r;
}

void echo_common(ordered_json& inputs, const Opts& o, const ProbInput& prob) {
    if (!o.graph.empty()) inputs["graph"] = o.graph;
    if (!o.s.empty()) inputs["s"] = o.s;
    if (!o.t.empty()) inputs["t"] = o.t;
    if (prob.p) inputs["p"] = format_rational(*prob.p);
    if (prob.q) inputs["q"] = format_rational(*prob.q);
}

template <class S>
MultiGraph<S> load_for(const Opts& o, const ProbInput& prob, bool missing_ok = false) {
    return load_graph<S>(o.graph, prob.p, missing_ok);
}

template <class S>
int vertex_or_throw(const MultiGraph<S>& g, const std::string& name) {
    int v = g.vertex_index(name);
    if (v < 0) throw DomainError("unknown vertex '" + name + "'");
    return v;
}

// Runs fn with a Rational or double tag according to --mode.
template <class F>
void with_mode(const std::string& mode, F&& fn) {
    if (mode == "rational") fn(Rational());
    else fn(double());
}

void cmd_exact(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        auto g = load_for<S>(o, prob);
        int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
        S value = expected_first_arrival(g, s, t, o.max_states);
        doc["result"]["expectation"] = json_scalar(value);
    });
}

void cmd_pmf(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    if (o.n_max >= 0) doc["inputs"]["n_max"] = o.n_max;
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        auto g = load_for<S>(o, prob);
        int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
        auto space = build_state_space(g, VertexSet::single(s), t, o.max_states);
        ArrivalPmf<S> pmf =
            o.n_max >= 0 ? arrival_pmf(space, o.n_max) : arrival_pmf_auto(space);
        ordered_json probs = ordered_json::array();
        for (const auto& x : pmf.probs) probs.push_back(json_scalar(x));
        doc["result"]["n_max"] = static_cast<int>(pmf.probs.size()) - 1;
        doc["result"]["probs"] = std::move(probs);
        doc["result"]["tail"] = json_scalar(pmf.tail);
    });
}

void cmd_ogf_eval(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    if (o.z.empty()) throw UsageError("--z is required");
    Rational z = parse_rational(o.z);
    doc["inputs"]["z"] = format_rational(z);
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        auto g = load_for<S>(o, prob);
        int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
        auto space = build_state_space(g, VertexSet::single(s), t, o.max_states);
        S value = ogf_eval(space, scalar_from_rational<S>(z));
        doc["result"]["value"] = json_scalar(value);
    });
}

void cmd_resistance(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    auto g = load_for<Rational>(o, prob, /*missing_ok=*/true);
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    Rational rho = spreading_resistance_st(g, s, t, o.max_states);
    if (o.mode == "rational") doc["result"]["resistance"] = format_rational(rho);
    else doc["result"]["resistance"] = to_double(rho);
}

void cmd_tau(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, true);
    echo_common(doc["inputs"], o, prob);
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        auto g = load_for<S>(o, prob);
        int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
        S p = scalar_from_rational<S>(*prob.p);
        S tau = exponential_expectation(g, VertexSet::single(s), t, p, o.max_states);
        doc["result"]["tau"] = json_scalar(tau);
        doc["result"]["resistance"] = json_scalar(S(tau * p));
    });
}

void cmd_special_kn(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, true);
    echo_common(doc["inputs"], o, prob);
    doc["inputs"]["n"] = o.n;
    doc["inputs"]["i"] = o.i;
    Rational q = *prob.q;
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        S value = kn_expected(o.n, scalar_from_rational<S>(q), o.i);
        doc["result"]["expectation"] = json_scalar(value);
        doc["result"]["resistance"] = json_scalar(scalar_from_rational<S>(kn_resistance(o.n)));
    });
}

ParallelPathSpec parse_lengths(const std::string& csv) {
    if (csv.empty()) throw UsageError("--lengths is required");
    std::vector<int> lengths;
    for (const auto& item : split_csv(csv)) {
        try {
            lengths.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad length '" + item + "'");
        }
    }
    return ParallelPathSpec(lengths);
}

void cmd_special_ppaths(const Opts& o, ordered_json& doc) {
    ParallelPathSpec spec = parse_lengths(o.lengths);
    doc["inputs"]["lengths"] = spec.lengths;
    Rational rho = parallel_paths_resistance(spec);
    if (o.mode == "rational") doc["result"]["resistance"] = format_rational(rho);
    else doc["result"]["resistance"] = to_double(rho);
}

void cmd_reduce_demo(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, true);
    if (o.op != "series" && o.op != "parallel") throw UsageError("--op must be series or parallel");
    ParallelPathSpec spec = parse_lengths(o.lengths);
    if (spec.lengths.size() != 2) throw UsageError("--lengths must name exactly two path lengths");
    echo_common(doc["inputs"], o, prob);
    doc["inputs"]["op"] = o.op;
    doc["inputs"]["lengths"] = spec.lengths;
    doc["inputs"]["trunc"] = o.trunc;
    with_mode(o.mode, [&](auto tag) {
        using S = decltype(tag);
        S q = scalar_from_rational<S>(*prob.q);
        PowerSeries<S> a = path_ogf(spec.lengths[0], q, o.trunc);
        PowerSeries<S> b = path_ogf(spec.lengths[1], q, o.trunc);
        PowerSeries<S> composed = o.op == "series" ? series_reduce(a, b) : parallel_reduce(a, b);
        ordered_json coeffs = ordered_json::array();
        for (const auto& x : composed.coeff) coeffs.push_back(json_scalar(x));
        auto estimate = expectation_from_survival(composed);
        doc["result"]["coefficients"] = std::move(coeffs);
        doc["result"]["expectation_estimate"] = json_scalar(estimate.value);
        doc["result"]["tail_remainder"] = json_scalar(estimate.tail_remainder);
    });
}

void cmd_bounds(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, true);
    echo_common(doc["inputs"], o, prob);
    auto g = load_for<Rational>(o, prob, /*missing_ok=*/true);
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    BoundsReport report = bounds_report(g, s, t, *prob.q, !o.skip_exact, o.max_states);
    bool rational = o.mode == "rational";
    auto put = [&](const char* key, const Rational& v) {
        if (rational) doc["result"][key] = format_rational(v);
        else doc["result"][key] = to_double(v);
    };
    put("lower_reliability", report.lower_reliability);
    put("lower_lyons_tau", report.lower_lyons_tau);
    put("upper_distance", report.upper_distance);
    if (report.exact_expectation) put("exact_expectation", *report.exact_expectation);
    else doc["result"]["exact_expectation"] = nullptr;
    if (report.exact_exponential) put("exact_exponential", *report.exact_exponential);
    else doc["result"]["exact_exponential"] = nullptr;
}

void cmd_reliability(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    auto g = load_for<Rational>(o, prob, /*missing_ok=*/true);
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    ReliabilityCoefficients r = reliability_polynomial(g, s, t);
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : r.c) coeffs.push_back(c.convert_to<long long>());
    doc["result"]["m"] = r.m;
    doc["result"]["coefficients"] = std::move(coeffs);
    if (prob.q) {
        Rational rq(0), qi(1);
        for (int i = 0; i <= r.m; ++i) {
            rq += Rational(r.c[i]) * qi;
            qi *= *prob.q;
        }
        bool rational = o.mode == "rational";
        doc["result"]["r_of_q"] = rational ? ordered_json(format_rational(rq)) : ordered_json(to_double(rq));
        Rational ins = insertion_probability(r, *prob.q);
        doc["result"]["insertion"] = rational ? ordered_json(format_rational(ins)) : ordered_json(to_double(ins));
    }
}

SimConfig sim_config(const Opts& o) {
    if (o.replicas < 1) throw UsageError("--replicas must be positive");
    if (o.samples == 0 || o.samples % static_cast<std::uint64_t>(o.replicas) != 0)
        throw UsageError("--samples must be a positive multiple of --replicas");
    SimConfig cfg;
    cfg.seed = o.seed;
    cfg.replicas = o.replicas;
    cfg.samples_per_replica = o.samples / static_cast<std::uint64_t>(o.replicas);
    cfg.hist_cap = o.hist_cap;
    return cfg;
}

ordered_json json_estimate(const SimEstimate& est) {
    ordered_json r;
    r["mean"] = est.mean;
    r["stderr"] = est.stderr_of_mean;
    r["n"] = est.n;
    std::size_t last = est.histogram.size();
    while (last > 1 && est.histogram[last - 1] == 0) --last;
    r["histogram"] = std::vector<std::uint64_t>(est.histogram.begin(),
                                                est.histogram.begin() + last);
    r["overflow"] = est.overflow;
    return r;
}

void cmd_simulate(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    doc["inputs"]["model"] = o.model;
    doc["inputs"]["seed"] = o.seed;
    doc["inputs"]["samples"] = o.samples;
    doc["inputs"]["replicas"] = o.replicas;
    auto g = convert_graph<double>(load_for<Rational>(o, prob));
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    SimConfig cfg = sim_config(o);
    SimEstimate est;
    if (o.model == "spread") {
        est = simulate_spread(g, s, t, cfg);
    } else if (o.model == "geometric") {
        est = sample_geometric_sp(g, s, t, cfg);
    } else if (o.model == "exponential") {
        double intensity;
        if (prob.p) intensity = to_double(*prob.p);
        else if (auto uniform = g.uniform_p()) intensity = *uniform;
        else throw NonUniformProbabilities("exponential model needs --p or a uniform graph");
        est = sample_exponential_sp(g, s, t, intensity, cfg);
    } else {
        throw UsageError("--model must be spread, geometric, or exponential");
    }
    doc["result"] = json_estimate(est);
}

void cmd_equiv_check(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    doc["inputs"]["seed"] = o.seed;
    doc["inputs"]["samples"] = o.samples;
    doc["inputs"]["replicas"] = o.replicas;
    doc["inputs"]["alpha"] = o.alpha;

    auto exact_graph = load_for<Rational>(o, prob);
    auto g = convert_graph<double>(exact_graph);
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    SimConfig cfg = sim_config(o);

    SimEstimate spread = simulate_spread(g, s, t, cfg);
    SimEstimate geometric = sample_geometric_sp(g, s, t, cfg);

    // Exact pmf over the histogram range; remaining mass goes to the last bin.
    auto space = build_state_space(exact_graph, VertexSet::single(s), t, o.max_states);
    ArrivalPmf<Rational> pmf = arrival_pmf(space, cfg.hist_cap);
    std::vector<double> expected(cfg.hist_cap + 2, 0.0);
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) expected[i] = to_double(pmf.probs[i]);
    expected.back() = to_double(pmf.tail);

    auto with_overflow = [&](const SimEstimate& est) {
        std::vector<std::uint64_t> h = est.histogram;
        h.push_back(est.overflow);
        return h;
    };
    ChiSquareResult two = chi_square_two_sample(with_overflow(spread), with_overflow(geometric));
    ChiSquareResult gof_spread = chi_square_goodness(with_overflow(spread), expected, spread.n);
    ChiSquareResult gof_geo = chi_square_goodness(with_overflow(geometric), expected, geometric.n);

    auto json_chi = [](const ChiSquareResult& r) {
        ordered_json j;
        j["statistic"] = r.statistic;
        j["dof"] = r.dof;
        j["p_value"] = r.p_value;
        return j;
    };
    doc["result"]["spread"] = json_estimate(spread);
    doc["result"]["geometric"] = json_estimate(geometric);
    doc["result"]["two_sample"] = json_chi(two);
    doc["result"]["spread_vs_exact"] = json_chi(gof_spread);
    doc["result"]["geometric_vs_exact"] = json_chi(gof_geo);
    doc["result"]["equivalent"] = two.p_value >= o.alpha && gof_spread.p_value >= o.alpha &&
                                  gof_geo.p_value >= o.alpha;
}

void cmd_conjecture_scan(const Opts& o, ordered_json& doc) {
    ProbInput prob = resolve_prob(o, false);
    echo_common(doc["inputs"], o, prob);
    std::vector<Rational> grid;
    if (o.q_grid.empty()) {
        for (int k = 1; k <= 9; ++k) grid.push_back(Rational(k, 10));
    } else {
        for (const auto& item : split_csv(o.q_grid)) grid.push_back(parse_rational(item));
    }
    ordered_json grid_json = ordered_json::array();
    for (const auto& q : grid) grid_json.push_back(format_rational(q));
    doc["inputs"]["q_grid"] = std::move(grid_json);

    auto g = load_for<Rational>(o, prob, /*missing_ok=*/true);
    int s = vertex_or_throw(g, o.s), t = vertex_or_throw(g, o.t);
    ConjectureReport report = conjecture_scan(g, s, t, grid, o.max_states);
    bool rational = o.mode == "rational";
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json j;
        j["q"] = format_rational(row.q);
        j["tau"] = rational ? ordered_json(format_rational(row.tau)) : ordered_json(to_double(row.tau));
        j["expectation"] = rational ? ordered_json(format_rational(row.expectation))
                                    : ordered_json(to_double(row.expectation));
        j["violation"] = row.violation;
        rows.push_back(std::move(j));
    }
    doc["result"]["rows"] = std::move(rows);
    doc["result"]["any_violation"] = report.any_violation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"s-t first arrival times of spread processes on multigraphs"};
    app.require_subcommand(1);
    Opts o;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", o.mode, "rational or float")
            ->check(CLI::IsMember({"rational", "float"}));
        cmd->add_flag("--pretty", o.pretty, "indent the JSON output");
        cmd->add_option("--max-states", o.max_states, "state-space size guard");
    };
    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("-g,--graph", o.graph, "graph file")->required();
        cmd->add_option("-s,--source", o.s, "source vertex name")->required();
        cmd->add_option("-t,--target", o.t, "target vertex name")->required();
    };
    auto add_prob = [&](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "uniform infection probability");
        cmd->add_option("--q", o.q, "uniform noninfection probability (q = 1-p)");
    };

    CLI::App* exact = app.add_subcommand("exact", "expected s-t first arrival time");
    add_graph(exact); add_prob(exact); add_mode(exact);

    CLI::App* pmf = app.add_subcommand("pmf", "first arrival time distribution");
    add_graph(pmf); add_prob(pmf); add_mode(pmf);
    pmf->add_option("--n-max", o.n_max, "truncation (default: extend until tail < 1e-9)");

    CLI::App* ogf = app.add_subcommand("ogf-eval", "evaluate the arrival-time OGF at z");
    add_graph(ogf); add_prob(ogf); add_mode(ogf);
    ogf->add_option("--z", o.z, "evaluation point")->required();

    CLI::App* res = app.add_subcommand("resistance", "s-t spreading resistance");
    add_graph(res); add_prob(res); add_mode(res);

    CLI::App* tau = app.add_subcommand("tau", "expected shortest path, exponential edge weights");
    add_graph(tau); add_prob(tau); add_mode(tau);

    CLI::App* kn = app.add_subcommand("special-kn", "complete-graph closed forms");
    kn->add_option("-n,--n", o.n, "number of vertices")->required();
    kn->add_option("-i,--i", o.i, "labelled-set size (default 1)");
    add_prob(kn); add_mode(kn);

    CLI::App* ppaths = app.add_subcommand("special-ppaths", "parallel-paths spreading resistance");
    ppaths->add_option("--lengths", o.lengths, "comma-separated path lengths")->required();
    add_mode(ppaths);

    CLI::App* reduce = app.add_subcommand("reduce-demo", "series/parallel reduction of two paths");
    reduce->add_option("--op", o.op, "series or parallel")->required();
    reduce->add_option("--lengths", o.lengths, "two comma-separated path lengths")->required();
    reduce->add_option("--trunc", o.trunc, "series truncation degree");
    add_prob(reduce); add_mode(reduce);

    CLI::App* bounds = app.add_subcommand("bounds", "lower/upper bounds next to exact values");
    add_graph(bounds); add_prob(bounds); add_mode(bounds);
    bounds->add_flag("--skip-exact", o.skip_exact, "omit the exact reference values");

    CLI::App* reliability = app.add_subcommand("reliability", "s-t reliability polynomial");
    add_graph(reliability); add_prob(reliability); add_mode(reliability);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo sampling");
    add_graph(simulate); add_prob(simulate); add_mode(simulate);
    simulate->add_option("--model", o.model, "spread, geometric, or exponential")->required();
    simulate->add_option("--seed", o.seed, "PRNG seed");
    simulate->add_option("--samples", o.samples, "total sample count");
    simulate->add_option("--replicas", o.replicas, "independent replica streams");
    simulate->add_option("--hist-cap", o.hist_cap, "histogram cap");

    CLI::App* equiv = app.add_subcommand("equiv-check",
                                         "spread process vs geometric shortest path");
    add_graph(equiv); add_prob(equiv); add_mode(equiv);
    equiv->add_option("--seed", o.seed, "PRNG seed");
    equiv->add_option("--samples", o.samples, "total sample count");
    equiv->add_option("--replicas", o.replicas, "independent replica streams");
    equiv->add_option("--alpha", o.alpha, "chi-square significance level");

    CLI::App* scan = app.add_subcommand("conjecture-scan", "tau vs T across a q grid");
    add_graph(scan); add_prob(scan); add_mode(scan);
    scan->add_option("--q-grid", o.q_grid, "comma-separated q values (default 0.1..0.9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    }

    std::string command;
    if (exact->parsed()) command = "exact";
    else if (pmf->parsed()) command = "pmf";
    else if (ogf->parsed()) command = "ogf-eval";
    else if (res->parsed()) command = "resistance";
    else if (tau->parsed()) command = "tau";
    else if (kn->parsed()) command = "special-kn";
    else if (ppaths->parsed()) command = "special-ppaths";
    else if (reduce->parsed()) command = "reduce-demo";
    else if (bounds->parsed()) command = "bounds";
    else if (reliability->parsed()) command = "reliability";
    else if (simulate->parsed()) command = "simulate";
    else if (equiv->parsed()) command = "equiv-check";
    else command = "conjecture-scan";

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["mode"] = o.mode;
    doc["inputs"] = ordered_json::object();
    try {
        if (exact->parsed()) cmd_exact(o, doc);
        else if (pmf->parsed()) cmd_pmf(o, doc);
        else if (ogf->parsed()) cmd_ogf_eval(o, doc);
        else if (res->parsed()) cmd_resistance(o, doc);
        else if (tau->parsed()) cmd_tau(o, doc);
        else if (kn->parsed()) cmd_special_kn(o, doc);
        else if (ppaths->parsed()) cmd_special_ppaths(o, doc);
        else if (reduce->parsed()) cmd_reduce_demo(o, doc);
        else if (bounds->parsed()) cmd_bounds(o, doc);
        else if (reliability->parsed()) cmd_reliability(o, doc);
        else if (simulate->parsed()) cmd_simulate(o, doc);
        else if (equiv->parsed()) cmd_equiv_check(o, doc);
        else cmd_conjecture_scan(o, doc);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        ordered_json err;
        err["schema_version"] = kSchemaVersion;
        err["command"] = command;
        err["error"]["kind"] = e.kind();
        err["error"]["message"] = e.what();
        std::cout << (o.pretty ? err.dump(2) : err.dump()) << std::endl;
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["schema_version"] = kSchemaVersion;
        err["command"] = command;
        err["error"]["kind"] = "InternalError";
        err["error"]["message"] = e.what();
        std::cout << (o.pretty ? err.dump(2) : err.dump()) << std::endl;
        return 1;
    }

    std::cout << (o.pretty ? doc.dump(2) : doc.dump()) << std::endl;
    return 0;
}
