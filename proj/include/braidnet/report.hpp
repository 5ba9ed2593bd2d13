#pragma once

// JSON, CSV and SVG renderings of invariants and survey results.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "survey.hpp"

namespace braidnet {

using json = nlohmann::ordered_json;

inline constexpr char const* version_string = "braidnet 1.0.0";

inline json to_json(LinkingVector const& lk)
{
    json a = json::array();
    for (int i = 1; i <= lk.n; ++i)
        for (int j = i + 1; j <= lk.n; ++j)
            a.push_back({{"i", i}, {"j", j}, {"lk", lk.at(i, j)}});
    return a;
}

inline json to_json(Mu3Vector const& mu3)
{
    json a = json::array();
    std::size_t idx = 0;
    for (int i = 1; i <= mu3.n; ++i)
        for (int j = i + 1; j <= mu3.n; ++j)
            for (int k = j + 1; k <= mu3.n; ++k)
                a.push_back({{"i", i}, {"j", j}, {"k", k}, {"mu3", mu3.entries[idx++]}});
    return a;
}

/// Full invariant record of a pure braid. lk comes from the combing, which
/// agrees with the crossing formula on sorting loops.
inline json invariants_json(SignedBraidWord const& b)
{
    auto c = comb(b);
    auto lk = mu2_vector(c);
    auto mu3 = mu3_vector(c);
    bool trivial = std::all_of(c.conjugators.begin(), c.conjugators.end(),
                               [](auto const& a) { return a.empty(); });
    json conj = json::array();
    for (auto const& a : c.conjugators)
        conj.push_back(a.to_string());
    return {{"braid", b.to_string()}, {"n", b.n()},         {"lk", to_json(lk)},
            {"lk_l1", lk.l1()},       {"mu3", to_json(mu3)}, {"mu3_l1", mu3.magnitude()},
            {"trivial", trivial},     {"conjugators", conj}};
}

inline json to_json(NetworkSummary const& m)
{
    return {{"id", m.network_id},
            {"network", m.network.to_string()},
            {"symmetry_class", symmetry_representative(m.network).to_string()},
            {"unlinked", m.unlinked_count},
            {"nontrivial_unlinked", m.nontrivial_unlinked_count},
            {"mean_mu3_l1_unlinked", to_string(m.mean_mu3_l1_over_unlinked)},
            {"fatness", m.fatness},
            {"fatness_unlinked", m.fatness_unlinked},
            {"slim_weak", m.slim_weak},
            {"slim_strong", m.slim_strong},
            {"mu2_matches_lk", m.mu2_matches_lk}};
}

inline json records_json(std::vector<SurveyRecord> const& records)
{
    json a = json::array();
    for (auto const& r : records)
        a.push_back({r.signature.to_string(), r.lk_l1, r.mu3_l1, r.trivial});
    return a;
}

inline json to_json(DistributionReport const& d)
{
    json nets = json::array();
    for (auto const& m : d.networks)
        nets.push_back(to_json(m));
    json hist = json::array();
    for (auto const& [v, c] : d.mean_histogram)
        hist.push_back({{"value", to_string(v)}, {"count", c}});
    json mu3 = json::array();
    for (auto const& [v, c] : d.mu3_histogram)
        mu3.push_back({{"value", v}, {"count", c}});
    json classes = json::array();
    for (auto const& [rep, mean] : d.class_means)
        classes.push_back({{"representative", rep}, {"mean", to_string(mean)}});
    return {{"version", version_string},
            {"n", d.n},
            {"networks_count", d.networks.size()},
            {"global_mean", to_string(d.global_mean)},
            {"mean_histogram", hist},
            {"mu3_histogram", mu3},
            {"symmetry_classes", classes},
            {"networks", nets}};
}

inline json to_json(LoopSweep const& s)
{
    json hist = json::array();
    for (auto const& [v, c] : s.lk_histogram)
        hist.push_back({{"value", v}, {"count", c}});
    return {{"exhaustive", s.exhaustive},
            {"signatures", s.signatures},
            {"lk_histogram", hist},
            {"mean_lk_l1", to_string(s.mean_lk)},
            {"unlinked", s.unlinked},
            {"unlinked_mu3_nonzero", s.unlinked_mu3_nonzero},
            {"unlinked_trivial", s.unlinked_trivial},
            {"unlinked_mu3_zero_nontrivial", s.unlinked_mu3_zero_nontrivial},
            {"mu2_matches_lk", s.mu2_matches_lk},
            {"max_conjugator_length", s.max_conjugator_length}};
}

inline json to_json(TheoremReport const& r)
{
    json checks = json::array();
    for (auto const& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"claim", c.claim},
                          {"passed", c.passed},
                          {"informational", c.informational},
                          {"checked", c.checked},
                          {"failures", c.failures},
                          {"detail", c.detail},
                          {"counterexamples", c.counterexamples}});
    return {{"version", version_string},
            {"n", r.n},
            {"sampled", r.sampled},
            {"all_passed", r.all_passed()},
            {"checks", checks}};
}

/// value,count rows under a header line.
template <typename Map>
std::string histogram_csv(Map const& hist)
{
    std::ostringstream out;
    out << "value,count\n";
    for (auto const& [v, c] : hist) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, rational>)
            out << to_string(v);
        else
            out << v;
        out << ',' << c << '\n';
    }
    return out.str();
}

/// Bar chart of how many networks have each mean |mu3|_1 over unlinked DSBs.
inline std::string distribution_svg(DistributionReport const& d)
{
    int const width = 640, height = 400, margin = 60;
    int max_count = 1;
    for (auto const& [v, c] : d.mean_histogram)
        max_count = std::max(max_count, c);
    auto bars = static_cast<int>(std::max<std::size_t>(d.mean_histogram.size(), 1));
    int slot = (width - 2 * margin) / bars;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">Mean |mu3| over unlinked DSBs, n = " << d.n << " (" << d.networks.size()
        << " networks, global mean " << to_string(d.global_mean) << ")</text>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    int k = 0;
    for (auto const& [v, c] : d.mean_histogram) {
        int h = (height - 2 * margin - 20) * c / max_count;
        int x = margin + k * slot + slot / 8;
        int w = slot * 3 / 4;
        svg << "<rect x=\"" << x << "\" y=\"" << height - margin - h << "\" width=\"" << w
            << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
        svg << "<text x=\"" << x + w / 2 << "\" y=\"" << height - margin - h - 5
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << c
            << "</text>\n";
        svg << "<text x=\"" << x + w / 2 << "\" y=\"" << height - margin + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(v)
            << "</text>\n";
        ++k;
    }
    svg << "</svg>\n";
    return svg.str();
}

/// Writes through a temporary sibling and renames, so readers never see a
/// partial file.
inline void write_file_atomically(std::filesystem::path const& path, std::string const& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace braidnet
