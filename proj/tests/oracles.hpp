#pragma once

// Independent oracles used by the tests and the acceptance binary.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace oracle {

/// Markers of the x-adic abutments at weight 0 read off the closed-form families:
///   towers (tau^2 x^2)^k at 4k, Z/2 classes (tau^2 x^2)^k (rho x)^b at 4k + b,
///   theta towers theta u^2 (u^2/tau^2)^j at -4 - 4j, and F2 classes theta/(rho^i tau^(2j+1)) u^(i+2j+3)
///   at -6 - i - 4j.  The periodic sequence has the same shape with x replaced by u^-1.
inline std::map<int, std::vector<std::string>> x_adic_markers(int lo, int hi) {
    std::map<int, std::vector<std::string>> out;
    for (int n = lo; n <= hi; ++n) out[n];
    auto put = [&](int n, const char* m) {
        if (n >= lo && n <= hi) out[n].push_back(m);
    };
    for (int k = 0; 4 * k <= hi; ++k) {
        put(4 * k, "Z_2");
        for (int b = 1; 4 * k + b <= hi; ++b) put(4 * k + b, "Z/2");
    }
    for (int j = 0; -4 - 4 * j >= lo; ++j) put(-4 - 4 * j, "Z_2");
    for (int i = 0; -6 - i >= lo; ++i)
        for (int j = 0; -6 - i - 4 * j >= lo; ++j) put(-6 - i - 4 * j, "Z/2");
    for (auto& [n, v] : out) std::sort(v.begin(), v.end());
    return out;
}

/// TCR(HF_p): Z_p in degrees 0 and -1, zero elsewhere.
inline std::map<int, std::vector<std::string>> tcr_markers(int p, int lo, int hi) {
    std::map<int, std::vector<std::string>> out;
    for (int n = lo; n <= hi; ++n)
        if (n == 0 || n == -1) out[n] = {"Z_" + std::to_string(p)};
        else out[n] = {};
    return out;
}

/// dim H^s(C2; F2[w1, w2]_t) for the swap action: a permutation module on monomials, so
/// H^0 counts orbits and higher (and all Tate) groups count fixed monomials.
inline std::size_t swap_cohomology_dim(int s, int t, bool tate) {
    const std::size_t fixed = t % 2 == 0 ? 1 : 0;
    if (s == 0 && !tate) return static_cast<std::size_t>(t / 2 + 1);
    return fixed;
}

}  // namespace oracle
