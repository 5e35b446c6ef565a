#pragma once
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ro2ss {

/// Order of a single generator: kFree, or k >= 0 meaning order 2^k.
inline constexpr std::int64_t kFree = -1;

/// A finitely generated 2-local abelian group with a named ordered basis.
/// Isomorphism class is (free rank, multiset of torsion exponents); generators
/// of order 2^0 = 1 are tolerated and ignored by the class.
struct FGGroup {
    std::vector<std::string> labels;
    std::vector<std::int64_t> orders; // kFree or exponent k (order 2^k)

    std::size_t size() const { return orders.size(); }

    void add_free(std::string label) {
        labels.push_back(std::move(label));
        orders.push_back(kFree);
    }
    void add_torsion(std::string label, std::int64_t exp) {
        labels.push_back(std::move(label));
        orders.push_back(exp);
    }

    std::int64_t rank() const {
        return std::count(orders.begin(), orders.end(), kFree);
    }
    /// Sorted exponents k >= 1 of the Z/2^k summands.
    std::vector<std::int64_t> torsion() const {
        std::vector<std::int64_t> t;
        for (auto o : orders)
            if (o >= 1) t.push_back(o);
        std::sort(t.begin(), t.end());
        return t;
    }
    bool is_trivial() const { return rank() == 0 && torsion().empty(); }

    /// Comparison by invariants only, never by basis.
    friend bool iso(const FGGroup& a, const FGGroup& b) {
        return a.rank() == b.rank() && a.torsion() == b.torsion();
    }

    /// "0", "Z_(2)", "Z_(2)^2 + Z/2 + Z/4", ...
    std::string str() const {
        std::string s;
        auto r = rank();
        if (r == 1) s = "Z_(2)";
        else if (r > 1) s = "Z_(2)^" + std::to_string(r);
        for (auto k : torsion()) {
            if (!s.empty()) s += " + ";
            s += "Z/" + std::to_string(std::int64_t(1) << k);
        }
        if (s.empty()) s = "0";
        return s;
    }

    friend FGGroup direct_sum(const FGGroup& a, const FGGroup& b) {
        FGGroup g = a;
        g.labels.insert(g.labels.end(), b.labels.begin(), b.labels.end());
        g.orders.insert(g.orders.end(), b.orders.begin(), b.orders.end());
        return g;
    }
};

} // namespace ro2ss
