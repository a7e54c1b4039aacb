#include "dp6/tangency.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dp6 {

TangencyVector TangencyVector::unit(int j, int count) {
    check(j >= 1, "tangency order must be >= 1");
    check(count >= 0, "tangency multiplicity must be >= 0");
    TangencyVector v;
    if (count > 0) v.terms_.push_back({j, count});
    return v;
}

int TangencyVector::at(int j) const {
    for (const auto& [k, m] : terms_)
        if (k == j) return m;
    return 0;
}

void TangencyVector::set(int j, int count) {
    check(j >= 1, "tangency order must be >= 1");
    check(count >= 0, "tangency multiplicity must be >= 0");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms_.end() && it->first == j) {
        if (count == 0)
            terms_.erase(it);
        else
            it->second = count;
    } else if (count > 0) {
        terms_.insert(it, {j, count});
    }
}

TangencyVector& TangencyVector::operator+=(const TangencyVector& o) {
    for (const auto& [j, m] : o.terms_) set(j, at(j) + m);
    return *this;
}

TangencyVector& TangencyVector::operator-=(const TangencyVector& o) {
    for (const auto& [j, m] : o.terms_) {
        int cur = at(j);
        check(cur >= m, "tangency subtraction below zero");
        set(j, cur - m);
    }
    return *this;
}

bool leq(const TangencyVector& a, const TangencyVector& b) {
    for (const auto& [j, m] : a.entries())
        if (m > b.at(j)) return false;
    return true;
}

long norm(const TangencyVector& v) {
    long n = 0;
    for (const auto& [j, m] : v.entries()) n += m;
    return n;
}

long weight(const TangencyVector& v) {
    long w = 0;
    for (const auto& [j, m] : v.entries()) w += static_cast<long>(j) * m;
    return w;
}

Int weight_power(const TangencyVector& v) {
    Int r = 1;
    for (const auto& [j, m] : v.entries()) r *= int_pow(j, m);
    return r;
}

Int vec_factorial(const TangencyVector& v) {
    Int r = 1;
    for (const auto& [j, m] : v.entries()) r *= factorial(m);
    return r;
}

Int vec_binom(const TangencyVector& b, const TangencyVector& g) {
    Int r = 1;
    for (const auto& [j, m] : g.entries()) {
        r *= binomial(b.at(j), m);
        if (r == 0) return 0;
    }
    return r;
}

Int vec_multinom(const TangencyVector& a, const std::vector<TangencyVector>& parts) {
    // Collect every order appearing anywhere.
    std::vector<int> orders;
    for (const auto& [j, m] : a.entries()) orders.push_back(j);
    for (const auto& p : parts)
        for (const auto& [j, m] : p.entries()) orders.push_back(j);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

    Int r = 1;
    for (int j : orders) {
        long avail = a.at(j);
        for (const auto& p : parts) {
            long take = p.at(j);
            check(take <= avail, "vec_multinom parts exceed the source vector");
            r *= binomial(avail, take);
            avail -= take;
        }
    }
    return r;
}

std::vector<TangencyVector> sub_vectors(const TangencyVector& b, long min_norm) {
    const auto& entries = b.entries();
    std::vector<TangencyVector> out;
    TangencyVector cur;
    // Odometer over the support of b, low order varying slowest.
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == entries.size()) {
            if (norm(cur) >= min_norm) out.push_back(cur);
            return;
        }
        for (int m = 0; m <= entries[i].second; ++m) {
            cur.set(entries[i].first, m);
            self(self, i + 1);
        }
        cur.set(entries[i].first, 0);
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<TangencyVector>> distribute(const TangencyVector& a, int m, bool exact) {
    check(m >= 0, "distribute over negative slot count");
    std::vector<std::vector<TangencyVector>> out;
    std::vector<TangencyVector> cur;
    TangencyVector rest = a;
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == m) {
            if (!exact || rest.empty()) out.push_back(cur);
            return;
        }
        for (const auto& v : sub_vectors(rest)) {
            cur.push_back(v);
            rest -= v;
            self(self, slot + 1);
            rest += v;
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<TangencyVector> partitions_with_weight(long w) {
    check(w >= 0, "partitions of a negative weight");
    std::vector<TangencyVector> out;
    TangencyVector cur;
    // Parts chosen non-increasingly so each partition appears once.
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.set(static_cast<int>(p), cur.at(static_cast<int>(p)) + 1);
            self(self, remaining - p, p);
            cur.set(static_cast<int>(p), cur.at(static_cast<int>(p)) - 1);
        }
    };
    rec(rec, w, w);
    return out;
}

std::string format_tangency(const TangencyVector& v) {
    std::string out;
    for (const auto& [j, m] : v.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(j);
        out += ':';
        out += std::to_string(m);
    }
    return out;
}

std::optional<TangencyVector> parse_tangency(std::string_view raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    TangencyVector v;
    if (s.empty()) return v;

    size_t pos = 0;
    int last_order = 0;
    while (true) {
        int j = 0, m = 0;
        auto r1 = std::from_chars(s.data() + pos, s.data() + s.size(), j);
        if (r1.ec != std::errc{} || r1.ptr == s.data() + s.size() || *r1.ptr != ':') return std::nullopt;
        pos = r1.ptr - s.data() + 1;
        auto r2 = std::from_chars(s.data() + pos, s.data() + s.size(), m);
        if (r2.ec != std::errc{}) return std::nullopt;
        pos = r2.ptr - s.data();
        if (j <= last_order || m < 1) return std::nullopt;
        last_order = j;
        v.set(j, m);
        if (pos == s.size()) break;
        if (s[pos] != ',') return std::nullopt;
        ++pos;
    }
    return v;
}

}  // namespace dp6
