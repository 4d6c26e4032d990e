#pragma once

#include <filesystem>

#include "dfn/value_table.hpp"

namespace dfn {

// PRN text format: line k holds the decimal of f(k), LF endings, no header,
// nothing after the final LF.
struct PrnFile {
    std::filesystem::path path;
    u64 count;
};

PrnFile write_table(const ValueTable& t, const std::filesystem::path& path);

// Reads a PRN file; spot-validates known anchor values of the declared
// function and throws on mismatch or malformed lines.
ValueTable read_table(const std::filesystem::path& path, Fn expected);

}  // namespace dfn
