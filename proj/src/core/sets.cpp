#include "sets.hpp"

namespace pavemat {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: result * (n-k+i) is divisible by i here
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(result);
}

std::string to_literal(const ElementSet& s) {
    if (s.is_empty()) return "-";
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

ElementSet parse_literal(GroundSet g, std::string_view text) {
    // trim
    std::size_t b = text.find_first_not_of(" \t\r");
    std::size_t e = text.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) throw std::invalid_argument("empty set literal");
    text = text.substr(b, e - b + 1);
    if (text == "-") return ElementSet::empty(g);

    ElementSet s = ElementSet::empty(g);
    int prev = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        int value = 0;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 64) throw std::invalid_argument("element label too large in set literal");
            ++i;
        }
        if (i == start)
            throw std::invalid_argument("bad character in set literal: '" +
                                        std::string(1, text[i]) + "'");
        if (value <= prev)
            throw std::invalid_argument("set literal labels must be strictly increasing");
        s = s.with(value);  // throws if outside 1..n
        prev = value;
    }
    return s;
}

std::vector<ElementSet> k_subsets_vec(GroundSet g, int k) {
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(binomial(g.size(), k)));
    for (const ElementSet& s : k_subsets(g, k)) out.push_back(s);
    return out;
}

}  // namespace pavemat
