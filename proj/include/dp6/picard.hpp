#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace dp6 {

// Divisor class d*L - e[0]*E1 - ... - e[5]*E6 on the plane blown up at six
// generic points.  L is the pullback of a line, E1..E6 the exceptional
// curves.  The intersection form is diag(1,-1,...,-1) in this basis.
struct DivisorClass {
    int d = 0;
    std::array<int, 6> e{};

    friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

    constexpr DivisorClass& operator+=(const DivisorClass& o) {
        d += o.d;
        for (int i = 0; i < 6; ++i) e[i] += o.e[i];
        return *this;
    }
    constexpr DivisorClass& operator-=(const DivisorClass& o) {
        d -= o.d;
        for (int i = 0; i < 6; ++i) e[i] -= o.e[i];
        return *this;
    }
    friend constexpr DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend constexpr DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend constexpr DivisorClass operator*(int s, DivisorClass a) {
        a.d *= s;
        for (int i = 0; i < 6; ++i) a.e[i] *= s;
        return a;
    }
    constexpr bool is_zero() const { return *this == DivisorClass{}; }
};

constexpr DivisorClass line() { return {1, {0, 0, 0, 0, 0, 0}}; }
// The class of E_i itself (i 1-based): 0*L - (-1)*E_i.
constexpr DivisorClass exceptional(int i) {
    DivisorClass c;
    c.e[i - 1] = -1;
    return c;
}
// s(L - E6): the pencil of lines through the sixth point, taken s times.
constexpr DivisorClass line_pencil(int s) { return {s, {0, 0, 0, 0, 0, s}}; }
// The fixed (-1)-conic all tangency conditions refer to: 2L - E1 - ... - E5.
constexpr DivisorClass fixed_conic() { return {2, {1, 1, 1, 1, 1, 0}}; }
constexpr DivisorClass canonical_class() { return {-3, {-1, -1, -1, -1, -1, -1}}; }

constexpr long intersect(const DivisorClass& a, const DivisorClass& b) {
    long r = static_cast<long>(a.d) * b.d;
    for (int i = 0; i < 6; ++i) r -= static_cast<long>(a.e[i]) * b.e[i];
    return r;
}

// D . (2L - E1 - ... - E5): the total tangency weight a curve of class D can
// carry against the fixed conic.
constexpr long e_degree(const DivisorClass& D) {
    return 2L * D.d - D.e[0] - D.e[1] - D.e[2] - D.e[3] - D.e[4];
}

constexpr long arith_genus(const DivisorClass& D) {
    return (intersect(D, D) + intersect(D, canonical_class())) / 2 + 1;
}

// Dimension of the family of genus-g curves in class D with ||beta|| moving
// tangency points: d - d6 + g + ||beta|| - 1.
constexpr long r_dim(const DivisorClass& D, long g, long beta_norm) {
    return static_cast<long>(D.d) - D.e[5] + g + beta_norm - 1;
}

// Sort e1..e5 non-increasingly; d and e6 are pinned by the geometry (the
// conic misses the sixth point) and stay put.
DivisorClass canonicalize(const DivisorClass& D);

// s >= 1 if D == s(L - E6), else 0.
int pencil_multiple(const DivisorClass& D);
// (i, s) with s >= 1 if D == s*Ei for a single index i (1-based), else (0, 0).
std::pair<int, int> exceptional_multiple(const DivisorClass& D);
// s >= 1 if D == s(L - Ei - E6) for a single i in 1..5 (returned via *index), else 0.
int pencil_line_multiple(const DivisorClass& D, int* index = nullptr);

// "3L-2E1-E6" style; coefficient 1 is implicit on parsing but explicit when
// formatting the leading L term ("1L"); a class with d == 0 and a single
// negative entry formats as "sEi"; the zero class formats as "0L".
std::string format_class(const DivisorClass& D);
std::optional<DivisorClass> parse_class(std::string_view s);

}  // namespace dp6
