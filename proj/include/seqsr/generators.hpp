#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqsr/graph.hpp"

namespace seqsr {

/// Uniform double in [0, 1) from the top 53 bits of a mt19937_64 draw.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Random bipartite graph: parts {1..a} and {a+1..a+b}, each cross edge kept with probability p.
inline Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
    if (a < 0 || b < 0 || p < 0.0 || p > 1.0) throw InputError("bipartite-random: bad parameters");
    std::mt19937_64 rng(seed);
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            if (unit_draw(rng) < p) g.add_edge(u, v);
    return g;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline long parse_long(const std::string& s, const std::string& spec) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("generator '" + spec + "': expected an integer, got '" + s + "'");
}

}  // namespace detail

/// True when `spec` names a built-in family rather than a file.
inline bool is_generator_spec(const std::string& spec) {
    for (const char* prefix : {"cycle:", "path:", "complete:", "whisker:", "bipartite-random:", "complete-bipartite:"})
        if (spec.rfind(prefix, 0) == 0) return true;
    return false;
}

/**
 * Graph families:
 *   cycle:n                       C_n
 *   path:n                        P_n
 *   complete:n                    K_n
 *   complete-bipartite:a:b        K_{a,b}
 *   whisker:<family>:v1,v2,...    whiskers on the listed vertices of any family above
 *   bipartite-random:a:b:p:seed   seeded random bipartite graph
 */
inline Graph generate_graph(const std::string& spec) {
    const std::vector<std::string> parts = detail::split(spec, ':');
    auto need = [&](std::size_t k) {
        if (parts.size() != k) throw InputError("generator '" + spec + "': wrong number of fields");
    };
    auto num = [&](std::size_t k) { return static_cast<int>(detail::parse_long(parts.at(k), spec)); };
    const std::string& kind = parts.front();
    if (kind == "cycle") {
        need(2);
        return cycle_graph(num(1));
    }
    if (kind == "path") {
        need(2);
        return path_graph(num(1));
    }
    if (kind == "complete") {
        need(2);
        return complete_graph(num(1));
    }
    if (kind == "complete-bipartite") {
        need(3);
        return complete_bipartite(num(1), num(2));
    }
    if (kind == "whisker") {
        const auto last = spec.rfind(':');
        if (parts.size() < 3 || last == std::string::npos) throw InputError("generator '" + spec + "': malformed");
        const Graph base = generate_graph(spec.substr(8, last - 8));
        Face s;
        for (const std::string& v : detail::split(spec.substr(last + 1), ',')) {
            const long x = detail::parse_long(v, spec);
            if (x < 1 || x > base.n()) throw InputError("generator '" + spec + "': whisker vertex out of range");
            s.insert(static_cast<int>(x));
        }
        return add_whiskers(base, s);
    }
    if (kind == "bipartite-random") {
        need(5);
        double p = 0;
        try {
            std::size_t pos = 0;
            p = std::stod(parts[3], &pos);
            if (pos != parts[3].size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("generator '" + spec + "': bad probability");
        }
        return random_bipartite(num(1), num(2), p, static_cast<std::uint64_t>(detail::parse_long(parts[4], spec)));
    }
    throw InputError("unknown generator '" + spec + "'");
}

}  // namespace seqsr
