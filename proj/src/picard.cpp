#include "dp6/picard.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dp6/arith.hpp"

namespace dp6 {

DivisorClass canonicalize(const DivisorClass& D) {
    DivisorClass c = D;
    std::sort(c.e.begin(), c.e.begin() + 5, std::greater<int>());
    return c;
}

int pencil_multiple(const DivisorClass& D) {
    if (D.d < 1) return 0;
    for (int i = 0; i < 5; ++i)
        if (D.e[i] != 0) return 0;
    return D.e[5] == D.d ? D.d : 0;
}

std::pair<int, int> exceptional_multiple(const DivisorClass& D) {
    if (D.d != 0) return {0, 0};
    int idx = 0, s = 0;
    for (int i = 0; i < 6; ++i) {
        if (D.e[i] == 0) continue;
        if (D.e[i] > 0 || idx != 0) return {0, 0};  // positive entry or second index
        idx = i + 1;
        s = -D.e[i];
    }
    return idx ? std::pair{idx, s} : std::pair{0, 0};
}

int pencil_line_multiple(const DivisorClass& D, int* index) {
    if (D.d < 1 || D.e[5] != D.d) return 0;
    int idx = 0;
    for (int i = 0; i < 5; ++i) {
        if (D.e[i] == 0) continue;
        if (D.e[i] != D.d || idx != 0) return 0;
        idx = i + 1;
    }
    if (idx == 0) return 0;
    if (index) *index = idx;
    return D.d;
}

std::string format_class(const DivisorClass& D) {
    if (auto [i, s] = exceptional_multiple(D); i != 0) {
        return (s == 1 ? std::string{} : std::to_string(s)) + "E" + std::to_string(i);
    }
    std::string out = (D.d == 1 ? std::string{} : std::to_string(D.d)) + "L";
    for (int i = 0; i < 6; ++i) {
        if (D.e[i] == 0) continue;
        out += D.e[i] > 0 ? '-' : '+';
        if (std::abs(D.e[i]) != 1) out += std::to_string(std::abs(D.e[i]));
        out += 'E';
        out += std::to_string(i + 1);
    }
    return out;
}

namespace {

// Reads a non-negative decimal integer; returns false on absence or overflow.
bool read_uint(std::string_view s, size_t& pos, int& value) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    auto res = std::from_chars(s.data() + start, s.data() + pos, value);
    return res.ec == std::errc{} && res.ptr == s.data() + pos;
}

}  // namespace

std::optional<DivisorClass> parse_class(std::string_view raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    DivisorClass D;
    size_t pos = 0;
    bool saw_L = false;
    std::array<bool, 6> seen{};

    bool leading = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (leading) return std::nullopt;  // no signed leading term
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        int coeff = 1;
        bool have_coeff = read_uint(s, pos, coeff);
        if (pos >= s.size()) return std::nullopt;
        if (s[pos] == 'L') {
            ++pos;
            if (saw_L || !leading) return std::nullopt;  // L only as the first term
            saw_L = true;
            D.d = sign * coeff;
        } else if (s[pos] == 'E') {
            ++pos;
            int idx = 0;
            if (!read_uint(s, pos, idx) || idx < 1 || idx > 6) return std::nullopt;
            if (seen[idx - 1]) return std::nullopt;
            seen[idx - 1] = true;
            if (leading) {
                // Bare "sEi" means the class s*Ei (d=0, e_i = -s) and must
                // stand alone.
                if (sign < 0 || pos != s.size()) return std::nullopt;
                D.e[idx - 1] = -coeff;
            } else {
                // "-cEi" subtracts c*Ei, so e_i = +c under the sign convention.
                D.e[idx - 1] = -sign * coeff;
            }
        } else {
            return std::nullopt;
        }
        (void)have_coeff;
        leading = false;
    }
    return D;
}

}  // namespace dp6
