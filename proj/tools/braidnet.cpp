// braidnet command-line front end.
//
//   braidnet enumerate <n> [--count-only]
//   braidnet invariants (--braid W | --dsb S SIGMA | --asb S SIGMA)
//   braidnet survey <n> --what dsb|asb|loops|slim|fatness|distribution|theorems
//   braidnet verify <n>
//
// Exit codes: 0 ok, 1 input error, 2 resource guard, 3 a verified claim failed.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <braidnet/braidnet.hpp>
#include <braidnet/report.hpp>

namespace fs = std::filesystem;
using namespace braidnet;

namespace {

enum exit_code : int { ok = 0, input_failure = 1, resource_failure = 2, claim_failure = 3 };

struct RunConfig
{
    int n = 0;
    std::string what = "distribution";
    std::string out_dir = ".";
    std::string format = "all";
    unsigned workers = default_workers();
    int max_n = 5;
    std::uint64_t cap = 1'000'000;
    bool count_only = false;
    std::string braid;
    std::vector<std::string> dsb_args;
    std::vector<std::string> asb_args;
};

std::uint64_t cap_from_env(std::uint64_t fallback)
{
    if (char const* env = std::getenv("BRAIDNET_CAP")) {
        try {
            return std::stoull(env);
        } catch (std::exception const&) {
            throw input_error(std::string("BRAIDNET_CAP is not a number: '") + env + "'");
        }
    }
    return fallback;
}

void check_caps(RunConfig const& cfg, bool sweep)
{
    if (cfg.n < 2)
        throw input_error("n must be at least 2");
    auto count = stanley_count(cfg.n);
    if (count > cfg.cap)
        throw resource_error("|S(" + std::to_string(cfg.n) + ")| = " + count.str() +
                                 " exceeds the cap of " + std::to_string(cfg.cap) +
                                 " (set BRAIDNET_CAP to raise it)",
                             count.str());
    if (sweep && cfg.n > cfg.max_n)
        throw resource_error("sweeps are limited to n <= " + std::to_string(cfg.max_n) +
                                 " (use --max-n to raise it)",
                             big_int(count << pair_count(cfg.n)).str());
}

int cmd_enumerate(RunConfig const& cfg)
{
    if (cfg.n < 2)
        throw input_error("n must be at least 2");
    if (cfg.count_only) {
        std::cout << stanley_count(cfg.n).str() << '\n';
        return ok;
    }
    check_caps(cfg, false);
    for (auto const& s : enumerate_networks(cfg.n, {cfg.cap, cfg.workers}))
        std::cout << s.to_string() << '\n';
    return ok;
}

int cmd_invariants(RunConfig const& cfg)
{
    int given = !cfg.braid.empty() + !cfg.dsb_args.empty() + !cfg.asb_args.empty();
    if (given != 1)
        throw input_error("give exactly one of --braid, --dsb, --asb");
    SignedBraidWord b;
    json extra = json::object();
    if (!cfg.braid.empty()) {
        b = SignedBraidWord::parse(cfg.braid);
    } else {
        auto const& args = cfg.dsb_args.empty() ? cfg.asb_args : cfg.dsb_args;
        auto s = SortingNetwork::parse(args[0]);
        auto sigma = Signature::parse(args[1]);
        b = cfg.dsb_args.empty() ? asb(s, sigma) : dsb(s, sigma);
        extra = {{"construction", cfg.dsb_args.empty() ? "asb" : "dsb"},
                 {"network", s.to_string()},
                 {"signature", sigma.to_string()}};
    }
    if (!is_pure(b))
        throw input_error("braid '" + b.to_string() + "' is not pure");
    json out = {{"version", version_string}};
    for (auto& [k, v] : extra.items())
        out[k] = v;
    auto inv = invariants_json(b);
    for (auto& [k, v] : inv.items())
        out[k] = v;
    std::cout << out.dump(2) << '\n';
    return ok;
}

void emit(RunConfig const& cfg, std::string const& suffix, std::string const& content)
{
    if (cfg.format != "all" && fs::path(suffix).extension() != "." + cfg.format)
        return;
    fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    auto path = dir / ("survey_n" + std::to_string(cfg.n) + "_" + suffix);
    write_file_atomically(path, content);
    std::cerr << "wrote " << path.string() << '\n';
}

json header(RunConfig const& cfg)
{
    return {{"version", version_string}, {"n", cfg.n}, {"what", cfg.what}};
}

int survey_census(RunConfig const& cfg, SurveyOptions const& sopt)
{
    auto nets = enumerate_networks(cfg.n, {cfg.cap, cfg.workers});
    auto rows = parallel_map(nets.size(), cfg.workers, [&](std::size_t id) {
        auto records = sweep_dsb(nets[id], static_cast<int>(id), sopt);
        auto summary = summarize(nets[id], static_cast<int>(id), records);
        return std::pair{summary, records};
    });
    auto out = header(cfg);
    json list = json::array();
    std::map<int, int> fat_hist, fat_unlinked_hist;
    int weak = 0, strong = 0;
    for (auto const& [m, records] : rows) {
        auto entry = to_json(m);
        if (cfg.what == "dsb")
            entry["records"] = records_json(records);
        list.push_back(std::move(entry));
        ++fat_hist[m.fatness];
        ++fat_unlinked_hist[m.fatness_unlinked];
        weak += m.slim_weak;
        strong += m.slim_strong;
    }
    if (cfg.what == "slim") {
        std::map<std::string, std::pair<int, int>> classes; // rep -> (members, slim_weak members)
        for (auto const& [m, records] : rows) {
            auto& c = classes[symmetry_representative(m.network).to_string()];
            ++c.first;
            c.second += m.slim_weak;
        }
        json cls = json::array();
        for (auto const& [rep, c] : classes)
            cls.push_back({{"representative", rep}, {"members", c.first}, {"slim_weak_members", c.second}});
        out["slim_weak_count"] = weak;
        out["slim_strong_count"] = strong;
        out["symmetry_classes"] = cls;
        std::cout << "slim_weak " << weak << " slim_strong " << strong << " of " << rows.size() << '\n';
    }
    if (cfg.what == "fatness") {
        json h = json::array(), hu = json::array();
        for (auto [v, c] : fat_hist)
            h.push_back({{"value", v}, {"count", c}});
        for (auto [v, c] : fat_unlinked_hist)
            hu.push_back({{"value", v}, {"count", c}});
        out["fatness_histogram"] = h;
        out["fatness_unlinked_histogram"] = hu;
        emit(cfg, "fatness.csv", histogram_csv(fat_hist));
        std::cout << "max fatness " << fat_hist.rbegin()->first << '\n';
    }
    if (cfg.what == "dsb") {
        int half = cfg.n / 2;
        std::cout << "unlinked per network expected " << (1 << (half * (cfg.n - half))) << '\n';
    }
    out["networks"] = std::move(list);
    emit(cfg, cfg.what + ".json", out.dump(1) + "\n");
    return ok;
}

int survey_asb(RunConfig const& cfg)
{
    auto nets = enumerate_networks(cfg.n, {cfg.cap, cfg.workers});
    auto rows = parallel_map(nets.size(), cfg.workers, [&](std::size_t id) {
        auto const& s = nets[id];
        std::uint64_t total = std::uint64_t{1} << s.length();
        json records = json::array();
        long long trivial = 0, mu3_sum = 0, linked = 0;
        for (std::uint64_t b = 0; b < total; ++b) {
            auto sigma = Signature::from_index(s.length(), b);
            auto inv = evaluate_loop(asb(s, sigma));
            trivial += inv.trivial;
            mu3_sum += inv.mu3.magnitude();
            linked += !inv.lk.is_zero();
            records.push_back({sigma.to_string(), inv.lk.l1(), inv.mu3.magnitude(), inv.trivial});
        }
        return json{{"id", id},
                    {"network", s.to_string()},
                    {"linked", linked},
                    {"trivial", trivial},
                    {"mean_mu3_l1", to_string(rational(mu3_sum, static_cast<long long>(total)))},
                    {"records", std::move(records)}};
    });
    auto out = header(cfg);
    out["expected_trivial"] = factorial(cfg.n);
    out["expected_mean_mu3_l1"] = to_string(rational(binomial(cfg.n, 3), 4));
    out["networks"] = rows;
    emit(cfg, "asb.json", out.dump(1) + "\n");
    std::cout << "expected trivial " << factorial(cfg.n) << " mean "
              << to_string(rational(binomial(cfg.n, 3), 4)) << '\n';
    return ok;
}

int survey_loops(RunConfig const& cfg)
{
    auto nets = enumerate_networks(cfg.n, {cfg.cap, cfg.workers});
    std::vector<std::pair<SortingNetwork, SortingNetwork>> loops;
    for (auto const& s : nets) {
        if (cfg.n == 3) {
            for (auto const& t : nets)
                loops.emplace_back(s, t);
            continue;
        }
        std::vector<SortingNetwork> seen;
        for (auto t : {s, conjugate(s), complement(s)})
            if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
                seen.push_back(t);
                loops.emplace_back(s, t);
            }
    }
    auto sweeps = parallel_map(loops.size(), cfg.workers,
                               [&](std::size_t k) { return sweep_loop(loops[k].first, loops[k].second); });
    auto out = header(cfg);
    json list = json::array();
    std::map<int, std::uint64_t> hist;
    for (std::size_t k = 0; k < loops.size(); ++k) {
        auto entry = to_json(sweeps[k]);
        entry["first"] = loops[k].first.to_string();
        entry["second"] = loops[k].second.to_string();
        entry["distance_to_second_conjugate"] =
            braid_move_distance(loops[k].first, conjugate(loops[k].second));
        list.push_back(std::move(entry));
        for (auto [v, c] : sweeps[k].lk_histogram)
            hist[v] += c;
    }
    out["loops"] = std::move(list);
    emit(cfg, "loops.json", out.dump(1) + "\n");
    emit(cfg, "loops_lk.csv", histogram_csv(hist));
    return ok;
}

int survey_distribution(RunConfig const& cfg, SurveyOptions const& sopt)
{
    auto d = distribution_report(cfg.n, sopt);
    emit(cfg, "distribution.json", to_json(d).dump(1) + "\n");
    emit(cfg, "distribution.csv", histogram_csv(d.mean_histogram));
    emit(cfg, "mu3_histogram.csv", histogram_csv(d.mu3_histogram));
    emit(cfg, "distribution.svg", distribution_svg(d));
    std::cout << "global_mean " << to_string(d.global_mean) << '\n';
    return ok;
}

int print_theorems(TheoremReport const& r)
{
    for (auto const& c : r.checks)
        std::cout << (c.informational ? "[INFO] " : c.checked == 0 ? "[SKIP] " : c.passed ? "[PASS] " : "[FAIL] ") << c.id << ": "
                  << c.detail << '\n';
    return r.all_passed() ? ok : claim_failure;
}

int cmd_survey(RunConfig const& cfg)
{
    check_caps(cfg, true);
    SurveyOptions sopt{cfg.max_n, cfg.workers, cfg.cap};
    if (cfg.what == "dsb" || cfg.what == "slim" || cfg.what == "fatness")
        return survey_census(cfg, sopt);
    if (cfg.what == "asb")
        return survey_asb(cfg);
    if (cfg.what == "loops")
        return survey_loops(cfg);
    if (cfg.what == "distribution")
        return survey_distribution(cfg, sopt);
    // theorems
    auto r = verify_theorems(cfg.n, {cfg.workers, cfg.cap});
    emit(cfg, "theorems.json", to_json(r).dump(1) + "\n");
    return print_theorems(r);
}

int cmd_verify(RunConfig const& cfg)
{
    check_caps(cfg, true);
    return print_theorems(verify_theorems(cfg.n, {cfg.workers, cfg.cap}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sorting networks, signed sorting braids and their Milnor invariants"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* enumerate = app.add_subcommand("enumerate", "List the sorting networks on n elements");
    enumerate->add_option("n", cfg.n, "Number of elements")->required();
    enumerate->add_flag("--count-only", cfg.count_only, "Print only |S(n)|");
    enumerate->add_option("--workers", cfg.workers, "Worker threads");

    auto* invariants = app.add_subcommand("invariants", "Linking numbers, mu3 and triviality of a pure braid");
    invariants->add_option("--braid", cfg.braid, "Signed word, \"1+ 2- 1+\" or \"1,-2,1\"");
    invariants->add_option("--dsb", cfg.dsb_args, "Dynamic sorting braid of network S with signature")
        ->expected(2)
        ->type_name("S SIGMA");
    invariants->add_option("--asb", cfg.asb_args, "Algebraic sorting braid of network S with signature")
        ->expected(2)
        ->type_name("S SIGMA");

    auto* survey = app.add_subcommand("survey", "Exhaustive sweeps with JSON/CSV/SVG reports");
    survey->add_option("n", cfg.n, "Number of elements")->required();
    survey->add_option("--what", cfg.what, "Which survey")
        ->check(CLI::IsMember({"dsb", "asb", "loops", "slim", "fatness", "distribution", "theorems"}));
    survey->add_option("--out", cfg.out_dir, "Output directory");
    survey->add_option("--format", cfg.format, "Only write reports of this format")
        ->check(CLI::IsMember({"all", "json", "csv", "svg"}));
    survey->add_option("--workers", cfg.workers, "Worker threads");
    survey->add_option("--max-n", cfg.max_n, "Largest n a sweep may run on");

    auto* verify = app.add_subcommand("verify", "Check the structural claims about sorting braids on n elements");
    verify->add_option("n", cfg.n, "Number of elements")->required();
    verify->add_option("--workers", cfg.workers, "Worker threads");
    verify->add_option("--max-n", cfg.max_n, "Largest n a sweep may run on");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_failure;
    }

    try {
        cfg.cap = cap_from_env(cfg.cap);
        cfg.workers = std::max(1u, cfg.workers);
        if (*enumerate)
            return cmd_enumerate(cfg);
        if (*invariants)
            return cmd_invariants(cfg);
        if (*survey)
            return cmd_survey(cfg);
        return cmd_verify(cfg);
    } catch (resource_error const& e) {
        std::cerr << "error: " << e.what() << " (would produce " << e.estimate() << ")\n";
        return resource_failure;
    } catch (input_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_failure;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_failure;
    }
}
