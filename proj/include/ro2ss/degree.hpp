#pragma once
#include <cstdint>
#include <functional>
#include <string>

namespace ro2ss {

/// An element m + p*alpha of RO(Z/2).  Also used as a spectrum shift V.
struct Degree {
    std::int64_t m = 0;
    std::int64_t p = 0;

    friend Degree operator+(Degree a, Degree b) { return {a.m + b.m, a.p + b.p}; }
    friend Degree operator-(Degree a, Degree b) { return {a.m - b.m, a.p - b.p}; }
    friend Degree operator-(Degree a) { return {-a.m, -a.p}; }
    friend bool operator==(Degree a, Degree b) { return a.m == b.m && a.p == b.p; }
    friend bool operator!=(Degree a, Degree b) { return !(a == b); }
    friend bool operator<(Degree a, Degree b) {
        return a.m != b.m ? a.m < b.m : a.p < b.p;
    }

    /// The nonequivariant collapse (alpha restricts to 1).
    std::int64_t total() const { return m + p; }
};

inline std::string to_string(Degree d) {
    std::string s = "(" + std::to_string(d.m) + "," + std::to_string(d.p) + ")";
    return s;
}

/// Shift syntax used by the command line: "m", "pa", "m+pa", "m-pa", e.g. "0-1a".
std::string shift_to_string(Degree v);

} // namespace ro2ss

template <>
struct std::hash<ro2ss::Degree> {
    size_t operator()(const ro2ss::Degree& d) const {
        return std::hash<std::int64_t>()(d.m * 1000003 + d.p);
    }
};
