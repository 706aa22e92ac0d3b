#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Shared helpers for the test binaries. The pragma extractor here is a
// deliberately simple line scanner, independent of the production lexer, so
// the two can check each other.

namespace testutil {

// All pragma logical lines of a source text, in order, byte-exact: leading
// whitespace kept, backslash continuations folded in with their newlines.
inline std::vector<std::string> extract_pragma_lines(std::string_view src) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < src.size()) {
        size_t eol = src.find('\n', i);
        if (eol == std::string_view::npos) eol = src.size();
        std::string_view line = src.substr(i, eol - i);
        size_t next = eol < src.size() ? eol + 1 : src.size();

        size_t j = 0;
        while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) j++;
        bool is_pragma = j < line.size() && line[j] == '#';
        if (is_pragma) {
            size_t k = j + 1;
            while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) k++;
            is_pragma = line.substr(k).substr(0, 6) == "pragma";
        }
        if (!is_pragma) {
            i = next;
            continue;
        }

        std::string acc(line);
        while (!acc.empty() && acc.back() == '\\' && next < src.size()) {
            size_t e2 = src.find('\n', next);
            if (e2 == std::string_view::npos) e2 = src.size();
            acc += '\n';
            acc.append(src.substr(next, e2 - next));
            next = e2 < src.size() ? e2 + 1 : src.size();
        }
        out.push_back(std::move(acc));
        i = next;
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string kernel_path(const std::string& name) {
    return std::string(SATCC_KERNEL_DIR) + "/" + name;
}

}  // namespace testutil
