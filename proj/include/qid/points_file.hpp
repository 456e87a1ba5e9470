#ifndef QID_POINTS_FILE_HPP
#define QID_POINTS_FILE_HPP

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "qid/errors.hpp"
#include "qid/interpolation.hpp"
#include "qid/rational.hpp"

namespace qid {

/// One rational per line ("p", "p/q", surrounding blanks allowed). Blank lines
/// and lines starting with '#' are skipped. Errors name the offending line.
inline std::vector<Rational> read_rationals(std::istream& in, std::vector<int>* lines = nullptr) {
    std::vector<Rational> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        const auto last = raw.find_last_not_of(" \t\r");
        const std::string text = raw.substr(first, last - first + 1);
        try {
            out.push_back(Rational::parse(text));
        } catch (const ParseError&) {
            throw ParseError("cannot read \"" + text + "\" as a rational", line);
        } catch (const DivisionByZero&) {
            throw ParseError("zero denominator in \"" + text + "\"", line);
        }
        if (lines) lines->push_back(line);
    }
    return out;
}

inline std::vector<Rational> read_rationals_file(const std::string& path, std::vector<int>* lines = nullptr) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_rationals(in, lines);
}

/// Reads an alphabet, preserving order. Repeated points raise DuplicatePoint
/// naming both lines.
inline Alphabet<Rational> ingest_points(std::istream& in) {
    std::vector<int> lines;
    auto pts = read_rationals(in, &lines);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) {
                throw DuplicatePoint("point " + pts[i].to_string() + " repeated at lines " +
                                     std::to_string(lines[i]) + ", " + std::to_string(lines[j]));
            }
        }
    }
    return Alphabet<Rational>(std::move(pts));
}

inline Alphabet<Rational> ingest_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return ingest_points(in);
}

}  // namespace qid

#endif  // QID_POINTS_FILE_HPP
