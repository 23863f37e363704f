#include "pdskit/automaton_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pdskit::io {

namespace {

using automata::MealyAutomaton;
using automata::PartialSemiautomaton;

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

// Splits into non-empty, comment-stripped lines of whitespace-separated fields.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.fields.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.fields.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::uint32_t to_u32(const Line& line, std::string_view field) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(field) + "'");
    return v;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
    if (line.fields.size() != count)
        throw ParseError(line.number, std::string("expected ") + what);
}

struct Header {
    std::uint32_t n, a, b;
};

Header read_header(const std::vector<Line>& lines, std::string_view keyword, std::size_t dims) {
    if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + "' header");
    const Line& h = lines.front();
    if (h.fields[0] != keyword)
        throw ParseError(h.number, "expected '" + std::string(keyword) + "' header");
    expect_fields(h, dims + 1, dims == 3 ? "header 'mealy <n> <a> <b>'" : "header 'psemi <n> <a>'");
    Header hd{to_u32(h, h.fields[1]), to_u32(h, h.fields[2]), dims == 3 ? to_u32(h, h.fields[3]) : 1};
    if (hd.n == 0 || hd.a == 0 || hd.b == 0) throw ParseError(h.number, "dimensions must be positive");
    if (std::uint64_t(hd.n) * hd.a > (1u << 26)) throw ParseError(h.number, "automaton too large");
    return hd;
}

}  // namespace

MealyAutomaton parse_mealy(std::string_view text) {
    const auto lines = tokenize(text);
    const Header hd = read_header(lines, "mealy", 3);
    const std::size_t cells = std::size_t(hd.n) * hd.a;
    std::vector<State> next(cells, PartialSemiautomaton::kUndefined);
    std::vector<Symbol> out(cells, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_fields(l, 4, "transition 'q x q' y'");
        const std::uint32_t q = to_u32(l, l.fields[0]), x = to_u32(l, l.fields[1]);
        const std::uint32_t t = to_u32(l, l.fields[2]), y = to_u32(l, l.fields[3]);
        if (q >= hd.n || t >= hd.n) throw ParseError(l.number, "state out of range");
        if (x >= hd.a) throw ParseError(l.number, "input symbol out of range");
        if (y >= hd.b) throw ParseError(l.number, "output symbol out of range");
        const std::size_t cell = std::size_t(q) * hd.a + x;
        if (next[cell] != PartialSemiautomaton::kUndefined)
            throw ParseError(l.number, "duplicate transition for (" + std::to_string(q) + ", " +
                                           std::to_string(x) + ")");
        next[cell] = t;
        out[cell] = y;
    }
    if (lines.size() - 1 != cells) {
        const std::size_t last = lines.back().number;
        throw ParseError(last, "expected exactly " + std::to_string(cells) + " transitions, got " +
                                   std::to_string(lines.size() - 1));
    }
    return MealyAutomaton(hd.n, hd.a, hd.b, std::move(next), std::move(out));
}

PartialSemiautomaton parse_psemi(std::string_view text) {
    const auto lines = tokenize(text);
    const Header hd = read_header(lines, "psemi", 2);
    std::vector<State> next(std::size_t(hd.n) * hd.a, PartialSemiautomaton::kUndefined);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_fields(l, 3, "transition 'q x q''");
        const std::uint32_t q = to_u32(l, l.fields[0]), x = to_u32(l, l.fields[1]);
        const std::uint32_t t = to_u32(l, l.fields[2]);
        if (q >= hd.n || t >= hd.n) throw ParseError(l.number, "state out of range");
        if (x >= hd.a) throw ParseError(l.number, "input symbol out of range");
        const std::size_t cell = std::size_t(q) * hd.a + x;
        if (next[cell] != PartialSemiautomaton::kUndefined)
            throw ParseError(l.number, "duplicate transition for (" + std::to_string(q) + ", " +
                                           std::to_string(x) + ")");
        next[cell] = t;
    }
    return PartialSemiautomaton(hd.n, hd.a, std::move(next));
}

std::string format_mealy(const MealyAutomaton& aut, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    os << "mealy " << aut.n_states() << ' ' << aut.n_inputs() << ' ' << aut.n_outputs() << '\n';
    for (State q = 0; q < aut.n_states(); ++q)
        for (Symbol x = 0; x < aut.n_inputs(); ++x)
            os << q << ' ' << x << ' ' << aut.next(q, x) << ' ' << aut.out(q, x) << '\n';
    return os.str();
}

std::string format_psemi(const PartialSemiautomaton& aut, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    os << "psemi " << aut.n_states() << ' ' << aut.n_inputs() << '\n';
    for (State q = 0; q < aut.n_states(); ++q)
        for (Symbol x = 0; x < aut.n_inputs(); ++x)
            if (auto t = aut.next(q, x)) os << q << ' ' << x << ' ' << *t << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << contents;
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace pdskit::io
