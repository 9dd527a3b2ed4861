#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "seqsr/complex.hpp"

namespace seqsr {

/// Parse failure carrying the 1-based line it happened on.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, int line) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

/// Reads the "n <N>" header; returns N and advances `line_no`.
inline int read_header(std::istream& in, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string s = strip_comment(raw);
        if (s.empty()) continue;
        std::istringstream ss(s);
        std::string key, val, extra;
        ss >> key >> val;
        if (key != "n" || val.empty() || (ss >> extra))
            throw ParseError(line_no, "expected header 'n <N>'");
        const int n = parse_int(val, line_no);
        if (n < 0 || n > kMaxGroundSet)
            throw ParseError(line_no, "ground set size " + val + " outside 0.." + std::to_string(kMaxGroundSet));
        return n;
    }
    throw ParseError(line_no, "missing header 'n <N>'");
}

}  // namespace detail

/**
 * Text format:
 *
 *     n <N>
 *     1 2 3        one facet per line, labels in 1..N
 *     -            the empty face
 *
 * '#' starts a comment. No facet lines means the void complex.
 */
inline SimplicialComplex parse_complex(std::istream& in) {
    int line_no = 0;
    const int n = detail::read_header(in, line_no);
    std::vector<Face> gens;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string s = detail::strip_comment(raw);
        if (s.empty()) continue;
        if (s == "-") {
            gens.emplace_back();
            continue;
        }
        std::istringstream ss(s);
        std::string tok;
        Face f;
        while (ss >> tok) {
            const int v = detail::parse_int(tok, line_no);
            if (v < 1 || v > n) throw ParseError(line_no, "label " + tok + " outside 1.." + std::to_string(n));
            if (f.contains(v)) throw ParseError(line_no, "repeated label " + tok);
            f.insert(v);
        }
        gens.push_back(f);
    }
    return SimplicialComplex::from_facets(n, std::move(gens));
}

inline SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

inline std::string format_face_line(Face f) {
    if (f.empty()) return "-";
    std::string s;
    f.for_each([&](int v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    });
    return s;
}

/// Canonical text form; parse_complex(format_complex(c)) == c.
inline std::string format_complex(const SimplicialComplex& c) {
    std::string out = "n " + std::to_string(c.n()) + "\n";
    for (Face f : c.facets()) out += format_face_line(f) + "\n";
    return out;
}

}  // namespace seqsr
