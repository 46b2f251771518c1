#include "qcent/presets.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "qcent/errors.hpp"

namespace qcent {

namespace {

ScenarioConfig make(const std::string& name, StateKind kind, double alpha,
                    double e0) {
    ScenarioConfig c;
    c.name = name;
    c.state_kind = kind;
    c.alpha = alpha;
    c.e0 = e0;
    return c;
}

// Panel letters a/d, b/e, c/f share one scenario at increasing energy; the
// rows of those figures differ only in which entropy they display.
double panel_energy(char letter) {
    switch (letter) {
        case 'a': case 'd': return 1.5;
        case 'b': case 'e': return 15.0;
        case 'c': case 'f': return 150.0;
    }
    return 0.0;
}

std::map<std::string, ScenarioConfig> build_table() {
    std::map<std::string, ScenarioConfig> t;

    // Diagonal Gaussian families: one figure per coupling regime, six
    // panels across three energies.
    for (const char p : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        const double e0 = panel_energy(p);
        t.emplace("fig2" + std::string(1, p),
                  make("fig2" + std::string(1, p),
                       StateKind::gaussian_diagonal, 0.03, e0));
        t.emplace("fig3" + std::string(1, p),
                  make("fig3" + std::string(1, p),
                       StateKind::gaussian_diagonal, 1.0, e0));
    }

    // Channel launches, both couplings and both directions.
    const struct { const char* fig; double e0; } channels[] = {
        {"fig4", 15.0}, {"fig5", 150.0}};
    for (const auto& ch : channels) {
        for (const auto& [tag, alpha] :
             {std::pair{"regular", 0.03}, std::pair{"chaotic", 1.0}}) {
            const std::string base = std::string(ch.fig) + "-" + tag;
            t.emplace(base + "-x", make(base + "-x",
                                        StateKind::gaussian_channel_x, alpha,
                                        ch.e0));
            t.emplace(base + "-y", make(base + "-y",
                                        StateKind::gaussian_channel_y, alpha,
                                        ch.e0));
        }
    }

    // Cat state along the x channel plus its single-packet companion,
    // launched from the second branch center p2 = (2.5, 0, -sqrt(2mE'), 0).
    for (const auto& [tag, alpha] :
         {std::pair{"regular", 0.03}, std::pair{"chaotic", 1.0}}) {
        ScenarioConfig cat = make("fig6-" + std::string(tag),
                                  StateKind::cat_channel, alpha, 15.0);
        cat.offset_x = 2.5;
        t.emplace(cat.name, cat);

        ScenarioConfig companion =
            make("fig6-" + std::string(tag) + "-gaussian",
                 StateKind::gaussian_channel_x, alpha, 15.0);
        companion.offset_x = 2.5;
        companion.momentum_sign = -1;
        t.emplace(companion.name, companion);
    }

    // Bell pairs at two energies.
    for (const auto& [tag, alpha] :
         {std::pair{"regular", 0.03}, std::pair{"chaotic", 1.0}}) {
        for (const double e0 : {15.0, 150.0}) {
            ScenarioConfig b =
                make("fig7-" + std::string(tag) + "-" +
                         (e0 > 15.0 ? "150" : "15"),
                     StateKind::bell, alpha, e0);
            b.offset_x = 2.5;
            b.offset_y = 2.5;
            t.emplace(b.name, b);
        }
    }
    return t;
}

const std::map<std::string, ScenarioConfig>& table() {
    static const std::map<std::string, ScenarioConfig> t = build_table();
    return t;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(table().size());
    for (const auto& [name, cfg] : table()) names.push_back(name);
    return names;
}

ScenarioConfig preset(const std::string& name) {
    const auto it = table().find(name);
    if (it == table().end()) {
        std::string known;
        for (const auto& n : preset_names()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw ValidationError("preset.unknown",
                              "unknown preset '" + name + "'; known: " + known);
    }
    return it->second;
}

std::string preset_summary(const std::string& name) {
    const ScenarioConfig c = preset(name);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-22s %-20s alpha=%-5g E0=%g", name.c_str(),
                  to_string(c.state_kind).c_str(), c.alpha, c.e0);
    return buf;
}

}  // namespace qcent
