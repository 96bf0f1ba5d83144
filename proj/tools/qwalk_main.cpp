#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/config.hpp"
#include "qwalk/hitting.hpp"
#include "qwalk/kinematics.hpp"
#include "qwalk/spectral.hpp"

using json = nlohmann::json;
using namespace qwalk;

namespace {

constexpr int kExitUnreached = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

struct Instance {
    GroupSpec spec = GroupSpec::line();
    GeneratorSet gens = GeneratorSet::unit(GroupSpec::line());
    Coin coin = Coin::hadamard();
    std::string group_text, gens_text, coin_text;
};

Instance make_instance(const std::string& group, const std::string& gens,
                       const std::string& coin) {
    Instance inst;
    inst.spec = parse_group(group);
    inst.gens = parse_gens(gens, inst.spec);
    std::string coin_text = coin;
    if (coin_text == "auto") {
        coin_text = inst.spec.is_line() && inst.gens.size() == 2 ? "hadamard"
                                                                 : "grover";
    }
    inst.coin = parse_coin(coin_text, inst.gens.size());
    inst.group_text = group;
    inst.gens_text = gens;
    inst.coin_text = coin_text;
    return inst;
}

json metadata(const Instance& inst, long seed) {
    return json{{"group", inst.group_text},
                {"gens", inst.gens_text},
                {"coin", inst.coin_text},
                {"seed", seed}};
}

void write_arrival_csv(const std::string& path, const ArrivalCurve& curve) {
    auto out = open_out(path);
    out << "t,instantaneous_or_arrival_p,cumulative\n";
    for (std::size_t i = 0; i < curve.p.size(); ++i) {
        out << (i + 1) << ',' << fmt(curve.p[i]) << ','
            << fmt(curve.cumulative[i]) << '\n';
    }
}

int run_dispersion(const std::string& group, const std::string& gens,
                   const std::string& coin, int grid, const std::string& from,
                   const std::string& to, const std::string& out, long seed) {
    const Instance inst = make_instance(group, gens, coin);
    auto table = dispersion_table(inst.coin, inst.spec, inst.gens, grid);
    fill_velocities(table);
    const auto summary = velocity_summary(table);

    auto csv = open_out(out + ".csv");
    csv << "wave_number,branch,omega,group_velocity,phase_velocity\n";
    for (const auto& row : table.rows) {
        csv << fmt(row.wave_number) << ',' << row.branch << ',' << fmt(row.omega)
            << ',' << fmt(row.group_velocity) << ',' << fmt(row.phase_velocity)
            << '\n';
    }

    json j{{"v_g_max", summary.v_g_max},
           {"argmax_wave_number", summary.argmax_wave_number},
           {"branch", summary.argmax_branch},
           {"per_axis_extension", table.per_axis_extension},
           {"metadata", metadata(inst, seed)}};
    if (!from.empty() && !to.empty()) {
        const auto g1 = parse_vertex(from, inst.spec);
        const auto g2 = parse_vertex(to, inst.spec);
        const auto gv = gv_hitting_time(g1, g2, inst.coin, inst.spec, inst.gens);
        j["gv_hitting_time"] = gv.hitting_time;
        j["distance"] = gv.distance;
    }
    open_out(out + ".json") << j.dump(2) << '\n';
    return 0;
}

int run_evolve(const std::string& group, const std::string& gens,
               const std::string& coin, const std::string& init,
               const std::string& times_text, const std::string& from,
               const std::string& out, long seed) {
    const Instance inst = make_instance(group, gens, coin);
    std::vector<int> times;
    {
        std::stringstream ss(times_text);
        std::string item;
        while (std::getline(ss, item, ',')) times.push_back(std::stoi(item));
    }
    if (times.empty()) throw std::runtime_error("no times requested");
    std::sort(times.begin(), times.end());
    const int t_max = times.back();

    const auto phi = parse_init(init, inst.spec, inst.gens);
    const auto start = parse_vertex(from, inst.spec);
    WalkState state = WalkState::point_start(
        inst.spec, inst.gens, start, phi,
        inst.spec.is_line() ? std::abs(start.at(0)) + t_max : 0);

    int done = 0;
    for (int t : times) {
        evolve(state, inst.coin, t - done);
        done = t;
        const auto dist = position_distribution(state);
        auto csv = open_out(out + "_t" + std::to_string(t) + ".csv");
        if (inst.spec.is_line()) {
            csv << "position,probability\n";
            for (std::int64_t n = -state.window(); n <= state.window(); ++n) {
                csv << n << ',' << fmt(dist[state.line_pos_index(n)]) << '\n';
            }
        } else {
            csv << "position,probability,tuple\n";
            for (std::int64_t g = 0; g < state.num_positions(); ++g) {
                csv << g << ',' << fmt(dist[g]) << ','
                    << to_string(element_from_flat(g, inst.spec)) << '\n';
            }
        }
    }
    json j{{"times", times}, {"metadata", metadata(inst, seed)}};
    open_out(out + ".json") << j.dump(2) << '\n';
    return 0;
}

int run_hitting(const std::string& definition, const std::string& group,
                const std::string& gens, const std::string& coin,
                const std::string& init, const std::string& from,
                const std::string& to, const std::string& p_text, int t_max,
                double eps_tail, const std::string& out, long seed) {
    const Instance inst = make_instance(group, gens, coin);
    const auto g1 = parse_vertex(from, inst.spec);
    const auto g2 = parse_vertex(to, inst.spec);
    json j{{"definition", definition}, {"metadata", metadata(inst, seed)}};

    if (definition == "gv") {
        const auto gv = gv_hitting_time(g1, g2, inst.coin, inst.spec, inst.gens);
        j["value"] = gv.hitting_time;
        j["distance"] = gv.distance;
        j["v_g_max"] = gv.v_g_max;
        open_out(out + ".json") << j.dump(2) << '\n';
        return 0;
    }

    const auto phi = parse_init(init, inst.spec, inst.gens);
    double threshold = 0.0;
    if (definition != "average") {
        if (p_text == "auto-peak") {
            const auto [t_peak, p_peak] =
                peak_arrival(g1, g2, inst.coin, phi, t_max, inst.spec, inst.gens);
            // nudged below the peak to absorb roundoff
            threshold = p_peak - 1e-9;
            j["auto_peak"] = {{"t_peak", t_peak}, {"p_peak", p_peak}};
        } else {
            threshold = std::stod(p_text);
        }
    }

    HittingResult res;
    if (definition == "one-shot") {
        res = one_shot(g1, g2, inst.coin, phi, threshold, t_max, inst.spec,
                       inst.gens);
    } else if (definition == "concurrent") {
        res = concurrent(g1, g2, inst.coin, phi, threshold, t_max, inst.spec,
                         inst.gens);
    } else {
        res = average(g1, g2, inst.coin, phi, t_max, eps_tail, inst.spec,
                      inst.gens);
    }

    j["value"] = res.value;
    j["reached"] = res.reached;
    j["threshold"] = res.threshold;
    j["t_max"] = res.t_max;
    j["peak_probability"] = res.peak_probability;
    j["peak_time"] = res.peak_time;
    if (res.kind != HittingKind::OneShot) j["residual_mass"] = res.residual_mass;
    open_out(out + ".json") << j.dump(2) << '\n';
    write_arrival_csv(out + ".csv", res.curve);
    return res.reached ? 0 : kExitUnreached;
}

int run_compare(const std::string& group, const std::string& coin, int from,
                int to, int step_size, int t_max, const std::string& out,
                long seed) {
    if (to < from || step_size < 1) throw std::runtime_error("bad sweep range");
    auto csv = open_out(out + ".csv");
    const bool line_family = group == "line";
    csv << (line_family ? "d" : "n")
        << ",one_shot,concurrent_mass_at_one_shot_T,average_partial,"
           "average_residual,gv\n";
    for (int x = from; x <= to; x += step_size) {
        const std::string group_text =
            line_family ? "line" : "Z2^" + std::to_string(x);
        const Instance inst = make_instance(group_text, "unit",
                                            line_family ? "hadamard" : coin);
        const auto g1 = identity_element(inst.spec);
        const auto g2 = line_family ? GroupElement{x}
                                    : GroupElement(inst.spec.rank(), 1);
        const auto phi = default_coin_state(inst.spec, inst.gens);

        const int horizon =
            line_family ? std::max(t_max, 3 * x) : t_max;
        const auto [t_peak, p_peak] =
            peak_arrival(g1, g2, inst.coin, phi, horizon, inst.spec, inst.gens);
        const auto os = one_shot(g1, g2, inst.coin, phi, p_peak - 1e-9, horizon,
                                 inst.spec, inst.gens);
        const auto cc = concurrent(g1, g2, inst.coin, phi, 1.0,
                                   std::max(1, static_cast<int>(os.value)),
                                   inst.spec, inst.gens);
        const double mass =
            cc.curve.cumulative.empty() ? 0.0 : cc.curve.cumulative.back();
        const auto av = average(g1, g2, inst.coin, phi, horizon, 1e-9,
                                inst.spec, inst.gens);
        const auto gv = gv_hitting_time(g1, g2, inst.coin, inst.spec, inst.gens);
        csv << x << ',' << fmt(os.value) << ',' << fmt(mass) << ','
            << fmt(av.value) << ',' << fmt(av.residual_mass) << ','
            << fmt(gv.hitting_time) << '\n';
    }
    json j{{"family", line_family ? "line" : "hypercube"},
           {"from", from},
           {"to", to},
           {"step", step_size},
           {"seed", seed}};
    open_out(out + ".json") << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coined discrete-time quantum walks on Cayley graphs of Abelian "
        "groups: dispersion relations, wave velocities, and hitting times"};
    app.require_subcommand(1);

    std::string group = "line", gens = "unit", coin = "auto", init = "default";
    std::string from = "0", to = "ones", out, p_text = "auto-peak";
    std::string times = "100";
    int grid = 1025, t_max = 1000, sweep_step = 2;
    double eps_tail = 1e-9;
    long seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", group, "Group spec: Z2^10, Z8, Z3xZ4, line");
        cmd->add_option("--gens", gens, "Generators: 'unit' or '1,0;0,1;...'");
        cmd->add_option("--coin", coin,
                        "grover | hadamard | identity | @file.json | auto");
        cmd->add_option("--seed", seed, "Recorded in output metadata");
    };

    auto* disp = app.add_subcommand("dispersion", "Dispersion + velocity table");
    add_common(disp);
    disp->add_option("--grid", grid, "Line k-grid size (endpoint-inclusive)");
    std::string disp_from, disp_to;
    disp->add_option("--from", disp_from, "Optional vertex for gv hitting time");
    disp->add_option("--to", disp_to, "Optional vertex for gv hitting time");
    disp->add_option("--out", out, "Output prefix")->default_str("dispersion");

    auto* ev = app.add_subcommand("evolve", "Position distributions over time");
    add_common(ev);
    ev->add_option("--init", init, "Initial coin state");
    ev->add_option("--t", times, "Comma list of times");
    ev->add_option("--from", from, "Start vertex");
    ev->add_option("--out", out, "Output prefix")->default_str("evolve");

    auto* hit = app.add_subcommand("hitting", "Hitting times");
    hit->require_subcommand(1);
    std::vector<CLI::App*> hit_cmds;
    for (const char* def : {"one-shot", "concurrent", "average", "gv"}) {
        auto* sub = hit->add_subcommand(def);
        add_common(sub);
        sub->add_option("--init", init, "Initial coin state");
        sub->add_option("--from", from, "Start vertex");
        sub->add_option("--to", to, "Target vertex");
        sub->add_option("--p", p_text, "Threshold in [0,1] or 'auto-peak'");
        sub->add_option("--tmax", t_max, "Horizon in steps");
        sub->add_option("--eps-tail", eps_tail, "Average tail tolerance");
        sub->add_option("--out", out, "Output prefix");
        hit_cmds.push_back(sub);
    }

    auto* cmp = app.add_subcommand("compare", "Sweep hitting definitions");
    add_common(cmp);
    int cmp_from = 6, cmp_to = 12;
    cmp->add_option("--from", cmp_from, "Sweep start (n or d)");
    cmp->add_option("--to", cmp_to, "Sweep end (n or d)");
    cmp->add_option("--step", sweep_step, "Sweep step");
    cmp->add_option("--tmax", t_max, "Horizon in steps");
    cmp->add_option("--out", out, "Output prefix")->default_str("compare");

    CLI11_PARSE(app, argc, argv);

    try {
        if (disp->parsed()) {
            if (out.empty()) out = "dispersion";
            return run_dispersion(group, gens, coin, grid, disp_from, disp_to,
                                  out, seed);
        }
        if (ev->parsed()) {
            if (out.empty()) out = "evolve";
            return run_evolve(group, gens, coin, init, times, from, out, seed);
        }
        if (hit->parsed()) {
            for (auto* sub : hit_cmds) {
                if (sub->parsed()) {
                    if (out.empty()) out = "hitting";
                    return run_hitting(sub->get_name(), group, gens, coin, init,
                                       from, to, p_text, t_max, eps_tail, out,
                                       seed);
                }
            }
        }
        if (cmp->parsed()) {
            if (out.empty()) out = "compare";
            return run_compare(group, coin, cmp_from, cmp_to, sweep_step, t_max,
                               out, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
