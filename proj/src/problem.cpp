#include "twistder/problem.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "twistder/parser.hpp"

namespace twistder {

namespace {

struct Line {
    std::size_t number;
    std::string key;
    std::string value;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error("problem file, line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// ["expr", "expr", ...] possibly nested one level for matrices
std::vector<std::string> parse_string_list(const std::string& text, std::size_t line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') fail(line, "expected '['");
    ++i;
    skip();
    if (i < text.size() && text[i] == ']') { ++i; return out; }
    for (;;) {
        skip();
        if (i >= text.size() || text[i] != '"') fail(line, "expected quoted expression");
        std::size_t end = text.find('"', i + 1);
        if (end == std::string::npos) fail(line, "unterminated string");
        out.push_back(text.substr(i + 1, end - i - 1));
        i = end + 1;
        skip();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i < text.size() && text[i] == ']') { ++i; break; }
        fail(line, "expected ',' or ']'");
    }
    return out;
}

// [[...], [...], ...]
std::vector<std::vector<std::string>> parse_matrix_literal(const std::string& text,
                                                           std::size_t line) {
    std::vector<std::vector<std::string>> rows;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') fail(line, "expected '['");
    ++i;
    for (;;) {
        skip();
        if (i >= text.size()) fail(line, "unterminated matrix literal");
        if (text[i] == ']') { ++i; break; }
        if (text[i] != '[') fail(line, "expected row '['");
        std::size_t depth = 0, start = i;
        std::size_t j = i;
        bool in_str = false;
        for (; j < text.size(); ++j) {
            char ch = text[j];
            if (ch == '"') in_str = !in_str;
            if (in_str) continue;
            if (ch == '[') ++depth;
            if (ch == ']' && --depth == 0) { ++j; break; }
        }
        if (depth != 0) fail(line, "unterminated row");
        rows.push_back(parse_string_list(text.substr(start, j - start), line));
        i = j;
        skip();
        if (i < text.size() && text[i] == ',') ++i;
    }
    return rows;
}

struct Section {
    std::vector<Line> lines;
    const Line* find(const std::string& key) const {
        for (const auto& l : lines)
            if (l.key == key) return &l;
        return nullptr;
    }
    const Line& require(const std::string& key, const std::string& section) const {
        const Line* l = find(key);
        if (!l) throw Error("problem file: missing key '" + key + "' in [" + section + "]");
        return *l;
    }
};

RatFunc parse_rat_at(const std::string& text, std::size_t line) {
    try {
        return parse_ratfunc(text);
    } catch (const ParseError& e) {
        fail(line, std::string(e.what()) + " in \"" + text + "\"");
    }
}

ExtElem parse_ext_at(const std::string& text, const ExtFieldPtr& field, std::size_t line) {
    try {
        return parse_ext_elem(text, field);
    } catch (const ParseError& e) {
        fail(line, std::string(e.what()) + " in \"" + text + "\"");
    }
}

ExtFieldPtr build_extension(const Section& sec) {
    const Line& mp = sec.require("minpoly", "extension");
    const Line& gen = sec.require("generator", "extension");
    std::string name = strip(gen.value);
    if (name.empty() || name == "t") fail(gen.number, "invalid generator name");
    FPoly m;
    try {
        m = parse_fpoly(mp.value, name);
    } catch (const ParseError& e) {
        fail(mp.number, e.what());
    }
    ExtFieldPtr field;
    try {
        field = ExtensionField::make(m, name);
    } catch (const Error& e) {
        fail(mp.number, e.what());
    }
    const Line& aut = sec.require("automorphisms", "extension");
    auto images = parse_string_list(aut.value, aut.number);
    std::vector<ExtElem> elems;
    for (const auto& s : images) elems.push_back(parse_ext_at(s, field, aut.number));
    try {
        std::const_pointer_cast<ExtensionField>(field)->set_automorphisms(elems);
    } catch (const Error& e) {
        fail(aut.number, e.what());
    }
    return field;
}

QAlgebra build_algebra(const Section& sec) {
    const Line& nl = sec.require("n", "algebra");
    std::size_t n = 0;
    try {
        n = static_cast<std::size_t>(std::stoul(strip(nl.value)));
    } catch (...) {
        fail(nl.number, "invalid dimension");
    }
    if (n == 0) fail(nl.number, "dimension must be positive");
    std::vector<RatFunc> c(n * n * n, RatFunc());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string key = "c[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            const Line& l = sec.require(key, "algebra");
            auto entries = parse_string_list(l.value, l.number);
            if (entries.size() != n)
                fail(l.number, key + " must list " + std::to_string(n) + " coordinates");
            for (std::size_t k = 0; k < n; ++k)
                c[(i * n + j) * n + k] = parse_rat_at(entries[k], l.number);
        }
    const Line& ul = sec.require("unit", "algebra");
    auto unit_entries = parse_string_list(ul.value, ul.number);
    if (unit_entries.size() != n) fail(ul.number, "unit must list n coordinates");
    std::vector<RatFunc> unit;
    for (const auto& s : unit_entries) unit.push_back(parse_rat_at(s, ul.number));
    QAlgebra a(n, std::move(c), std::move(unit));
    auto violations = a.validate();
    if (!violations.empty()) fail(nl.number, "algebra is invalid: " + violations.front());
    return a;
}

EMatrix build_p_inv(const Section& sec, const ExtFieldPtr& field, std::size_t n) {
    const Line& l = sec.require("P_inv", "cocycle");
    auto rows = parse_matrix_literal(l.value, l.number);
    if (rows.size() != n) fail(l.number, "P_inv must have " + std::to_string(n) + " rows");
    EMatrix m(n, n, field->zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            fail(l.number, "P_inv row " + std::to_string(i) + " must have " +
                               std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_ext_at(rows[i][j], field, l.number);
    }
    return m;
}

} // namespace

const ExtFieldPtr& ProblemFile::require_extension() const {
    if (!extension) throw Error("problem file has no [extension] section");
    return *extension;
}

const QAlgebra& ProblemFile::require_algebra() const {
    if (!algebra) throw Error("problem file has no [algebra] section");
    return *algebra;
}

CocycleData ProblemFile::require_cocycle() const {
    if (!p_inv) throw Error("problem file has no [cocycle] section");
    return CocycleData(require_extension(), *p_inv);
}

ProblemFile parse_problem(const std::string& text) {
    std::map<std::string, Section> sections;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            current = line.substr(1, line.size() - 2);
            if (current != "extension" && current != "algebra" && current != "cocycle")
                fail(lineno, "unknown section [" + current + "]");
            sections[current];
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
        if (current.empty()) fail(lineno, "key outside of any section");
        std::size_t key_line = lineno;
        std::string value = strip(line.substr(eq + 1));
        // bracketed values may continue over multiple lines
        auto depth = [](const std::string& s) {
            int d = 0;
            bool in_str = false;
            for (char ch : s) {
                if (ch == '"') in_str = !in_str;
                if (in_str) continue;
                if (ch == '[') ++d;
                if (ch == ']') --d;
            }
            return d;
        };
        int open = depth(value);
        while (open > 0 && std::getline(in, raw)) {
            ++lineno;
            value += " " + strip(raw);
            open = depth(value);
        }
        if (open != 0) fail(key_line, "unbalanced brackets in value");
        sections[current].lines.push_back({key_line, strip(line.substr(0, eq)), std::move(value)});
    }

    ProblemFile pf;
    if (auto it = sections.find("extension"); it != sections.end())
        pf.extension = build_extension(it->second);
    if (auto it = sections.find("algebra"); it != sections.end())
        pf.algebra = build_algebra(it->second);
    if (auto it = sections.find("cocycle"); it != sections.end()) {
        if (!pf.extension) throw Error("[cocycle] section requires an [extension] section");
        if (!pf.algebra) throw Error("[cocycle] section requires an [algebra] section");
        pf.p_inv = build_p_inv(it->second, *pf.extension, pf.algebra->dim());
    }
    return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

} // namespace twistder
