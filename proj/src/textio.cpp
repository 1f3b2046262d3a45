#include "liealg/textio.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace liealg {

namespace {

// Parse one real number starting at text[pos]; advances pos.
double parse_real_part(const std::string& text, size_t& pos) {
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
        throw std::invalid_argument("parse_complex: malformed number in '" + text + "'");
    }
    pos += static_cast<size_t>(end - begin);
    return value;
}

// A bare sign followed by 'i' ("i", "+i", "-i") or a number followed by 'i'.
bool is_imag_unit_at(const std::string& text, size_t pos) {
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    return pos < text.size() && text[pos] == 'i';
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_complex: empty string");
    }
    size_t pos = 0;
    double first = 0.0;
    bool first_is_unit_imag = false;
    if (is_imag_unit_at(text, 0)) {
        first = (text[0] == '-') ? -1.0 : 1.0;
        pos = (text[0] == '+' || text[0] == '-') ? 2 : 1;
        first_is_unit_imag = true;
    } else {
        first = parse_real_part(text, pos);
    }

    if (pos == text.size()) {
        return first_is_unit_imag ? std::complex<double>(0.0, first)
                                  : std::complex<double>(first, 0.0);
    }
    if (text[pos] == 'i' && pos + 1 == text.size()) {
        return {0.0, first};
    }
    if (first_is_unit_imag || (text[pos] != '+' && text[pos] != '-')) {
        throw std::invalid_argument("parse_complex: trailing characters in '" + text + "'");
    }

    double second;
    if (is_imag_unit_at(text, pos)) {
        second = (text[pos] == '-') ? -1.0 : 1.0;
        pos += 2;
    } else {
        second = parse_real_part(text, pos);
        if (pos >= text.size() || text[pos] != 'i') {
            throw std::invalid_argument("parse_complex: imaginary part must end in 'i' in '" +
                                        text + "'");
        }
        ++pos;
    }
    if (pos != text.size()) {
        throw std::invalid_argument("parse_complex: trailing characters in '" + text + "'");
    }
    return {first, second};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config file not readable: " + path);
    }
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not 'key = value': " + line);
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " has an empty key or value");
        }
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

} // namespace liealg
