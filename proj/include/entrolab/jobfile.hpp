#pragma once

// Input files: a flat sectioned key-value format, diff-friendly on purpose.
//
//   [ring]
//   characteristic = 5
//   variables = ["x", "y"]
//   relations = ["y^2 - x^3"]
//
//   [map]
//   x = "x^5"
//   y = "y^5"
//
//   [module]          # optional; used by the `phi` command, defaults to m
//   ideal = ["x", "y"]

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrolab/errors.hpp"

namespace entrolab {

struct JobSpec {
    // ring and map data from the input file
    std::uint64_t characteristic = 0;
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    bool has_map = false;
    std::vector<std::string> images; // one per variable, aligned
    std::optional<std::vector<std::string>> module_ideal;

    // command and parameters from the command line
    std::string command;
    std::uint32_t n = 1;
    std::uint32_t max_n = 3;
    std::uint32_t max_N = 6;
    std::uint32_t samples = 16;
    std::uint64_t seed = 0;
    std::optional<std::string> q; // exact rational literal, parsed downstream
    std::uint32_t truncation_cap = 512;
    bool json = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

// values: "quoted string", bare integer, or ["a", "b"] arrays of strings
inline std::vector<std::string> parse_string_array(const std::string& value,
                                                   std::size_t line_no) {
    std::vector<std::string> out;
    std::string v = trim(value);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw parse_error("expected an array like [\"a\", \"b\"]", line_no);
    std::string inner = trim(v.substr(1, v.size() - 2));
    std::size_t i = 0;
    while (i < inner.size()) {
        while (i < inner.size() &&
               std::isspace(static_cast<unsigned char>(inner[i])))
            ++i;
        if (i >= inner.size()) break;
        if (inner[i] != '"')
            throw parse_error("array elements must be quoted strings", line_no);
        std::size_t close = inner.find('"', i + 1);
        if (close == std::string::npos)
            throw parse_error("unterminated string", line_no);
        out.push_back(inner.substr(i + 1, close - i - 1));
        i = close + 1;
        while (i < inner.size() &&
               std::isspace(static_cast<unsigned char>(inner[i])))
            ++i;
        if (i < inner.size()) {
            if (inner[i] != ',')
                throw parse_error("expected ',' between array elements", line_no);
            ++i;
        }
    }
    return out;
}

inline std::string parse_quoted(const std::string& value, std::size_t line_no) {
    std::string v = trim(value);
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw parse_error("expected a quoted string", line_no);
    return v.substr(1, v.size() - 2);
}

inline std::uint64_t parse_integer(const std::string& value, std::size_t line_no) {
    std::string v = trim(value);
    if (v.empty()) throw parse_error("expected an integer", line_no);
    for (char c : v)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("expected a nonnegative integer", line_no);
    return std::stoull(v);
}

} // namespace detail

// Parses the sectioned text into the file-derived fields of a JobSpec.
// Positions in thrown parse_errors are 1-based line numbers.
inline JobSpec parse_job_text(const std::string& text) {
    JobSpec job;
    bool saw_ring = false, saw_characteristic = false, saw_variables = false;
    std::vector<std::pair<std::string, std::string>> map_entries;

    std::string section;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        ++line_no;

        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw parse_error("malformed section header", line_no);
            section = detail::trim(t.substr(1, t.size() - 2));
            if (section != "ring" && section != "map" && section != "module")
                throw parse_error("unknown section [" + section + "]", line_no);
            if (section == "ring") saw_ring = true;
            if (section == "map") job.has_map = true;
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value", line_no);
        std::string key = detail::trim(t.substr(0, eq));
        std::string value = t.substr(eq + 1);

        if (section == "ring") {
            if (key == "characteristic") {
                job.characteristic = detail::parse_integer(value, line_no);
                saw_characteristic = true;
            } else if (key == "variables") {
                job.variables = detail::parse_string_array(value, line_no);
                saw_variables = true;
            } else if (key == "relations") {
                job.relations = detail::parse_string_array(value, line_no);
            } else {
                throw parse_error("unknown [ring] key '" + key + "'", line_no);
            }
        } else if (section == "map") {
            map_entries.emplace_back(key, detail::parse_quoted(value, line_no));
        } else if (section == "module") {
            if (key == "ideal")
                job.module_ideal = detail::parse_string_array(value, line_no);
            else
                throw parse_error("unknown [module] key '" + key + "'", line_no);
        } else {
            throw parse_error("key outside of any section", line_no);
        }
    }

    if (!saw_ring) throw parse_error("missing [ring] section", line_no);
    if (!saw_characteristic)
        throw parse_error("missing characteristic in [ring]", line_no);
    if (!saw_variables || job.variables.empty())
        throw parse_error("missing variables in [ring]", line_no);
    for (const auto& v : job.variables)
        if (!detail::is_identifier(v))
            throw parse_error("variable name '" + v + "' is not an identifier",
                              line_no);
    for (std::size_t i = 0; i < job.variables.size(); ++i)
        for (std::size_t j = i + 1; j < job.variables.size(); ++j)
            if (job.variables[i] == job.variables[j])
                throw parse_error("duplicate variable '" + job.variables[i] + "'",
                                  line_no);

    if (job.has_map) {
        job.images.resize(job.variables.size());
        std::vector<bool> seen(job.variables.size(), false);
        for (const auto& [key, expr] : map_entries) {
            bool matched = false;
            for (std::size_t i = 0; i < job.variables.size(); ++i) {
                if (job.variables[i] == key) {
                    if (seen[i])
                        throw parse_error("duplicate [map] entry for '" + key + "'",
                                          line_no);
                    seen[i] = true;
                    job.images[i] = expr;
                    matched = true;
                    break;
                }
            }
            if (!matched)
                throw parse_error("[map] key '" + key + "' is not a declared variable",
                                  line_no);
        }
        for (std::size_t i = 0; i < job.variables.size(); ++i)
            if (!seen[i])
                throw parse_error("[map] is missing an image for '" +
                                      job.variables[i] + "'",
                                  line_no);
    }
    return job;
}

} // namespace entrolab
