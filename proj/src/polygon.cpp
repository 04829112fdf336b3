#include "adlv/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

Polygon::Polygon(const RelCocharacter& v) : h(static_cast<int>(v.size())) {
    heights.reserve(h + 1);
    Rat acc = 0;
    heights.push_back(acc);
    for (const Rat& s : v) {
        acc += s;
        heights.push_back(acc);
    }
}

std::vector<std::pair<int, Rat>> Polygon::breakpoints() const {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(heights.size());
    for (int x = 0; x < static_cast<int>(heights.size()); ++x) out.emplace_back(x, heights[x]);
    return out;
}

Int bracket(const RelCocharacter& v) {
    BigInt acc = 0;
    Rat partial = 0;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        partial += v[i];
        acc += rat_floor_big(-partial);
    }
    return acc.convert_to<Int>();
}

Int pairing(const RelCocharacter& v1, const RelCocharacter& v2) {
    if (v1.size() != v2.size()) throw std::invalid_argument("pairing: size mismatch");
    return bracket(-v1) + bracket(v2);
}

Int pairing_g(const GCocharacter& mu1, const GCocharacter& mu2) {
    if (mu1.d != mu2.d || mu1.h != mu2.h) throw std::invalid_argument("pairing_g: shape mismatch");
    return pairing(orbit_sum(mu1), orbit_sum(mu2));
}

Int pairing_g(const RelCocharacter& nu, const GCocharacter& mu) {
    if (static_cast<int>(nu.size()) != mu.h) throw std::invalid_argument("pairing_g: shape mismatch");
    return pairing(scale(nu, mu.d), orbit_sum(mu));
}

Int pairing_g(const GCocharacter& mu, const RelCocharacter& nu) {
    if (static_cast<int>(nu.size()) != mu.h) throw std::invalid_argument("pairing_g: shape mismatch");
    return pairing(orbit_sum(mu), scale(nu, mu.d));
}

std::vector<std::pair<int, Int>> lattice_points_between_list(const RelCocharacter& v1,
                                                             const RelCocharacter& v2) {
    if (!is_integral(v2))
        throw std::invalid_argument("lattice_points_between: second vector must be integral");
    if (!dominance_leq(v1, v2))
        throw std::invalid_argument("lattice_points_between: need v1 dominance-below v2");
    Polygon p1(v1), p2(v2);
    std::vector<std::pair<int, Int>> pts;
    for (int x = 1; x < p1.h; ++x) {
        Int top = rat_floor(p1.at(x));
        Int bot = rat_to_int(p2.at(x));
        for (Int y = bot + 1; y <= top; ++y) pts.emplace_back(x, y);
    }
    return pts;
}

Int lattice_points_between(const RelCocharacter& v1, const RelCocharacter& v2) {
    return static_cast<Int>(lattice_points_between_list(v1, v2).size());
}

Rat rho_pairing(const GCocharacter& x) {
    // Weight at slot i (1-based) is i - (h+1)/2; work with doubled weights to
    // stay integral until the final halving.
    BigInt doubled = 0;
    for (const auto& r : x.rows)
        for (int i = 0; i < x.h; ++i) doubled += BigInt(2 * (i + 1) - (x.h + 1)) * r[i];
    return Rat(doubled, 2);
}

Rat rho_pairing_embedded(const RelCocharacter& nu, int d) {
    const int h = static_cast<int>(nu.size());
    Rat acc = 0;
    for (int i = 0; i < h; ++i) acc += Rat(2 * (i + 1) - (h + 1), 2) * nu[i];
    return acc * d;
}

Rat half_defect(const RelCocharacter& nu, int d) {
    if (!std::is_sorted(nu.begin(), nu.end()))
        throw std::invalid_argument("half_defect: Newton point must be dominant");
    Rat acc = 0, partial = 0;
    for (size_t i = 0; i + 1 < nu.size(); ++i) {
        partial += nu[i] * d;
        acc += rat_frac(-partial);
    }
    return acc;
}

Rat half_defect(const SuperbasicDatum& datum) {
    return half_defect(newton_point(datum), datum.d);
}

Int dim_formula(const GCocharacter& mu, const RelCocharacter& nu, int d) {
    if (static_cast<int>(nu.size()) != mu.h || mu.d != d)
        throw std::invalid_argument("dim_formula: shape mismatch");
    Rat kappa = 0;
    for (const Rat& s : nu) kappa += s * d;
    if (!rat_is_integral(kappa) || rat_to_int(kappa) != mu.total())
        throw std::invalid_argument("dim_formula: Kottwitz points differ");
    Rat dim = rho_pairing(mu) - rho_pairing_embedded(nu, d) - half_defect(nu, d);
    if (!rat_is_integral(dim))
        throw std::logic_error("dim_formula: non-integral value, convention bug");
    Int n = rat_to_int(dim);
    if (n < 0) throw std::logic_error("dim_formula: negative dimension");
    return n;
}

Int length_to_dom(const std::vector<Int>& v) {
    Int acc = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) acc += std::max<Int>(v[i] - v[j], 0);
    return acc;
}

std::vector<Int> transfer_vector(const std::vector<Int>& v, int i, int j, Int beta) {
    const int h = static_cast<int>(v.size());
    if (i < 1 || j < i || j > h) throw std::invalid_argument("transfer: need 1 <= i <= j <= h");
    if (beta < 0) throw std::invalid_argument("transfer: need beta >= 0");
    std::vector<Int> out = v;
    out[i - 1] -= beta;
    out[j - 1] += beta;
    return out;
}

Int transfer_length(const std::vector<Int>& v, int i, int j, Int beta) {
    if (!std::is_sorted(v.begin(), v.end()))
        throw std::invalid_argument("transfer_length: vector must be dominant");
    const int h = static_cast<int>(v.size());
    if (i < 1 || j < i || j > h) throw std::invalid_argument("transfer_length: index out of range");
    if (beta < 0) throw std::invalid_argument("transfer_length: need beta >= 0");
    if (beta == 0 || i == j) return 0;  // transfer is the identity
    Int acc = 0;
    for (Int k = 1; k <= beta; ++k)
        for (Int l = v[i - 1] - beta; l <= v[j - 1] - 1; ++l)
            acc += std::count(v.begin(), v.end(), k + l);
    return acc - beta;
}

Int transfer_corollary(const std::vector<Int>& v_prime, Int n1, Int n2, Int n3, Int n4) {
    if (!(n1 <= n2 && n2 <= n3 && n3 <= n4))
        throw std::invalid_argument("transfer_corollary: need n1 <= n2 <= n3 <= n4");
    if (n1 + n4 != n2 + n3)
        throw std::invalid_argument("transfer_corollary: replacement must preserve the total");
    Int acc = 0;
    for (Int k = 0; k <= n4 - n3 - 1; ++k)
        for (Int l = 0; l <= n4 - n2 - 1; ++l)
            acc += std::count(v_prime.begin(), v_prime.end(), n4 - k - l - 1);
    return acc + n1 - n2;
}

}  // namespace adlv
