#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dfn/ints.hpp"

namespace dfn {

enum class Fn { eta, sigma0, sigma1, sigma2, s, phi };

// Dense 1-indexed table of f(1..N).
struct ValueTable {
    Fn name = Fn::eta;
    u64 n = 0;
    std::vector<u64> v;  // v[k] = f(k) for 1 <= k <= n; v[0] unused

    u64 operator[](u64 k) const { return v[k]; }
    u64 at(u64 k) const {
        if (k < 1 || k > n) throw std::out_of_range("ValueTable: index out of range");
        return v[k];
    }
};

std::string_view to_string(Fn f);
std::optional<Fn> fn_from_string(std::string_view s);

}  // namespace dfn
