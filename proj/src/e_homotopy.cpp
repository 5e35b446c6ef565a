#include "ro2ss/e_homotopy.hpp"

#include <cassert>

#include "ro2ss/pages.hpp"

namespace ro2ss {

std::int64_t e_monomial_degree(const EMonomial& m, int n) {
    assert(static_cast<int>(m.e.size()) == n - 1);
    std::int64_t d = 0;
    for (int k = 1; k < n; ++k) d += m.e[k - 1] * 2 * ((std::int64_t(1) << k) - 1);
    d += m.en * 2 * ((std::int64_t(1) << n) - 1);
    return d;
}

std::string e_label(const EMonomial& m, int n) {
    std::string s;
    auto push = [&s](const std::string& base, std::int64_t exp) {
        if (exp == 0) return;
        if (!s.empty()) s += "*";
        s += base;
        if (exp != 1) s += "^" + std::to_string(exp);
    };
    for (int k = 1; k < n; ++k) push("v" + std::to_string(k), m.e[k - 1]);
    push("v" + std::to_string(n), m.en);
    if (s.empty()) s = "1";
    return s;
}

std::vector<EMonomial> e_block_basis(int n, std::int64_t j, std::int64_t en) {
    std::vector<EMonomial> out;
    if (j % 2 != 0) return out;
    std::int64_t we = j / 2 - en * ((std::int64_t(1) << n) - 1);
    for (auto& e : weight_compositions(we, n)) out.push_back(EMonomial{e, en});
    return out;
}

std::int64_t sigma_scalar(std::int64_t j, SigmaSign sign) {
    assert(j % 2 == 0);
    std::int64_t s = (j / 2) % 2 == 0 ? 1 : -1;
    return sign == SigmaSign::Minus ? s : -s;
}

std::pair<std::int64_t, EMonomial> sigma_action(int n, const EMonomial& m, SigmaSign sign) {
    return {sigma_scalar(e_monomial_degree(m, n), sign), m};
}

Mat one_minus_sigma(int n, std::int64_t j, std::int64_t en, SigmaSign sign) {
    std::size_t dim = e_block_basis(n, j, en).size();
    Mat m(dim, dim);
    if (dim == 0) return m;
    Local2 c(1 - sigma_scalar(j, sign));
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = c;
    return m;
}

} // namespace ro2ss
