#include "adlv/rational.hpp"

#include <charconv>

namespace adlv {

std::string rat_str(const Rat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) bad();
        return v;
    };
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

static std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return parts;
}

std::vector<Rat> parse_rat_vector(std::string_view s) {
    std::vector<Rat> out;
    for (auto part : split_commas(s)) out.push_back(parse_rat(part));
    return out;
}

std::vector<Int> parse_int_vector(std::string_view s) {
    std::vector<Int> out;
    for (auto part : split_commas(s)) {
        Rat q = parse_rat(part);
        out.push_back(rat_to_int(q));
    }
    return out;
}

}  // namespace adlv
