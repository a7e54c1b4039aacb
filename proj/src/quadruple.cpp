#include "dp6/quadruple.hpp"

namespace dp6 {

Validation validate(const Quadruple& q) {
    Validation v;
    v.weight_sum = weight(q.alpha) + weight(q.beta);
    v.degree = e_degree(q.D);
    v.genus_max = arith_genus(q.D);
    v.weight_ok = v.weight_sum == v.degree;
    v.genus_ok = 0 <= q.g && q.g <= v.genus_max;
    return v;
}

std::string key(const Quadruple& q) {
    Quadruple c = canonicalized(q);
    return format_class(c.D) + "|g=" + std::to_string(c.g) + "|a=" + format_tangency(c.alpha) +
           "|b=" + format_tangency(c.beta);
}

std::optional<Quadruple> parse_key(std::string_view s) {
    auto take = [&](std::string_view prefix) -> std::optional<std::string_view> {
        size_t bar = s.find('|');
        std::string_view field = s.substr(0, bar);
        s = bar == std::string_view::npos ? std::string_view{} : s.substr(bar + 1);
        if (!field.starts_with(prefix)) return std::nullopt;
        return field.substr(prefix.size());
    };
    auto cls = take("");
    auto gs = take("g=");
    auto as = take("a=");
    auto bs = take("b=");
    if (!cls || !gs || !as || !bs || !s.empty()) return std::nullopt;
    Quadruple q;
    auto D = parse_class(*cls);
    if (!D) return std::nullopt;
    q.D = *D;
    try {
        q.g = std::stol(std::string(*gs));
    } catch (...) {
        return std::nullopt;
    }
    auto a = parse_tangency(*as);
    auto b = parse_tangency(*bs);
    if (!a || !b) return std::nullopt;
    q.alpha = *a;
    q.beta = *b;
    return q;
}

int special_family_order(const Quadruple& q) {
    int s = pencil_multiple(q.D);
    if (s < 1 || q.g != 0 || !q.alpha.empty()) return 0;
    return q.beta == TangencyVector::unit(s, 2) ? s : 0;
}

int fixed_contact_family_order(const Quadruple& q) {
    int s = pencil_multiple(q.D);
    if (s < 1 || q.g != 0) return 0;
    return q.alpha == TangencyVector::unit(s) && q.beta == TangencyVector::unit(s) ? s : 0;
}

namespace {

// (d; d1..d5, d-1) with all d1..d5 in {0,1}, alpha arbitrary of full weight,
// beta = 0: the rational curves whose tangency conditions are all at fixed
// points of the conic.
bool fixed_point_pattern(const Quadruple& q) {
    const DivisorClass& D = q.D;
    if (D.d < 1 || D.e[5] != D.d - 1 || !q.beta.empty()) return false;
    long sum = 0;
    for (int i = 0; i < 5; ++i) {
        if (D.e[i] < 0 || D.e[i] > 1) return false;
        sum += D.e[i];
    }
    // The printed table requires sum < 2d; the boundary sum == 2d (weight-0
    // alpha, e.g. the line through two of the five points) is included so
    // that e.g. the invariant of L-E1-E2 comes out 1 rather than 0.
    if (sum > 2L * D.d) return false;
    return weight(q.alpha) == 2L * D.d - sum;  // == e_degree(D), by definition
}

}  // namespace

std::optional<Int> base_value(const Quadruple& q) {
    if (q.g < 0) return Int(0);
    Quadruple c = canonicalized(q);
    if (special_family_order(c)) return Int(1);
    if (r_dim(c) != 0) return std::nullopt;
    if (c.g != 0) return Int(0);

    if (auto [i, s] = exceptional_multiple(c.D); i >= 1 && i <= 5 && s >= 1) {
        // s-fold covers of an exceptional curve, one moving contact of order s.
        if (c.alpha.empty() && c.beta == TangencyVector::unit(s)) return Int(1);
        return Int(0);
    }
    if (int s = pencil_multiple(c.D)) {
        // s-fold covers of a pencil line: tangent-line configuration (value
        // 2: the two tangents through the sixth point) or one contact fixed.
        if (c.alpha.empty() && c.beta == TangencyVector::unit(2 * s)) return Int(2);
        if (fixed_contact_family_order(c)) return Int(1);
        return Int(0);
    }
    if (int s = pencil_line_multiple(c.D)) {
        // s-fold covers of the line joining a blown-up point to the sixth.
        if (c.alpha.empty() && c.beta == TangencyVector::unit(s)) return Int(1);
        return Int(0);
    }
    if (fixed_point_pattern(c)) return Int(1);
    return Int(0);
}

bool admissible_summand(const Quadruple& q) {
    Validation v = validate(q);
    if (!v.weight_ok || q.g < 0 || r_dim(q) < 0) return false;

    const DivisorClass& D = q.D;
    if (int s = pencil_multiple(D)) {
        (void)s;
        return special_family_order(q) > 0 || fixed_contact_family_order(q) > 0;
    }
    if (D.d == 0) {
        auto [i, s] = exceptional_multiple(D);
        if (i < 1 || i > 5 || s < 1) return false;
        return q.g == 0 && q.alpha.empty() && q.beta == TangencyVector::unit(s);
    }
    if (D.d < 0) return false;
    for (int i = 0; i < 6; ++i)
        if (D.e[i] < 0 || D.e[i] > D.d) return false;
    return true;
}

}  // namespace dp6
