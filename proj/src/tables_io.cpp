#include "dfn/tables_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace dfn {

namespace {

struct Anchor {
    u64 index;
    u64 value;
};

// three fixed-point checks per function, applied when the index is in range
std::array<Anchor, 3> anchors_for(Fn f) {
    switch (f) {
        case Fn::eta: return {{{1, 1}, {6, 3}, {12, 4}}};
        case Fn::sigma0: return {{{1, 1}, {6, 4}, {12, 6}}};
        case Fn::sigma1: return {{{1, 1}, {6, 12}, {12, 28}}};
        case Fn::sigma2: return {{{1, 1}, {6, 50}, {12, 210}}};
        case Fn::s: return {{{1, 0}, {6, 6}, {12, 16}}};
        case Fn::phi: return {{{1, 1}, {6, 2}, {12, 4}}};
    }
    return {{{1, 1}, {1, 1}, {1, 1}}};
}

}  // namespace

PrnFile write_table(const ValueTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_table: cannot open " + path.string());
    std::string buf;
    buf.reserve(1 << 20);
    for (u64 k = 1; k <= t.n; ++k) {
        buf += std::to_string(t.v[k]);
        buf += '\n';
        if (buf.size() > (1 << 20) - 32) {
            out << buf;
            buf.clear();
        }
    }
    out << buf;
    if (!out) throw std::runtime_error("write_table: write failed for " + path.string());
    return {path, t.n};
}

ValueTable read_table(const std::filesystem::path& path, Fn expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_table: cannot open " + path.string());
    ValueTable t{expected, 0, {0}};
    std::string line;
    u64 lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        u64 value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc() || ptr != line.data() + line.size())
            throw std::runtime_error("read_table: parse error at line " + std::to_string(lineno) +
                                     " of " + path.string());
        t.v.push_back(value);
    }
    t.n = t.v.size() - 1;
    for (const auto& a : anchors_for(expected)) {
        if (a.index <= t.n && t.v[a.index] != a.value)
            throw std::runtime_error("read_table: anchor mismatch at index " +
                                     std::to_string(a.index) + " of " + path.string() +
                                     " (corrupt or wrong function)");
    }
    return t;
}

}  // namespace dfn
