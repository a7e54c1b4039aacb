#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp6/arith.hpp"

namespace dp6 {

// Finite-support multiplicity vector over contact orders: entry (j, m) means
// m tangency points of order j.  Stored sparse, sorted by order, m > 0.
class TangencyVector {
public:
    TangencyVector() = default;
    // count * e_j
    static TangencyVector unit(int j, int count = 1);

    int at(int j) const;  // multiplicity at order j (0 when absent)
    void set(int j, int count);
    bool empty() const { return terms_.empty(); }
    const std::vector<std::pair<int, int>>& entries() const { return terms_; }

    friend auto operator<=>(const TangencyVector&, const TangencyVector&) = default;

    TangencyVector& operator+=(const TangencyVector& o);
    friend TangencyVector operator+(TangencyVector a, const TangencyVector& b) { return a += b; }
    // requires o <= *this componentwise (checked)
    TangencyVector& operator-=(const TangencyVector& o);
    friend TangencyVector operator-(TangencyVector a, const TangencyVector& b) { return a -= b; }

private:
    std::vector<std::pair<int, int>> terms_;
};

// componentwise a_k <= b_k
bool leq(const TangencyVector& a, const TangencyVector& b);

long norm(const TangencyVector& v);    // ||v|| = sum of multiplicities
long weight(const TangencyVector& v);  // Iv = sum of order * multiplicity
Int weight_power(const TangencyVector& v);  // I^v = prod order^multiplicity
Int vec_factorial(const TangencyVector& v);  // v! = prod multiplicity!

// prod_k C(b_k, g_k); zero when g exceeds b somewhere.
Int vec_binom(const TangencyVector& b, const TangencyVector& g);

// prod_k  a_k! / (parts_1k! ... parts_mk! (a_k - sum_i parts_ik)!)
// — the number of ways to assign the labelled entries of a to the parts,
// leaving the remainder unassigned.  Requires sum(parts) <= a (checked).
Int vec_multinom(const TangencyVector& a, const std::vector<TangencyVector>& parts);

// All v <= b with ||v|| >= min_norm, in odometer order (ascending per order).
std::vector<TangencyVector> sub_vectors(const TangencyVector& b, long min_norm = 0);

// All ordered m-tuples (v_1..v_m) with sum v_i <= a (exact=false) or == a
// (exact=true).
std::vector<std::vector<TangencyVector>> distribute(const TangencyVector& a, int m, bool exact);

// All v with Iv == w (the partitions of w read as multiplicity vectors).
std::vector<TangencyVector> partitions_with_weight(long w);

// "j:m" comma-separated with strictly increasing orders; "" is the zero
// vector, e.g. "1:2,3:1" = 2e_1 + e_3.
std::string format_tangency(const TangencyVector& v);
std::optional<TangencyVector> parse_tangency(std::string_view s);

}  // namespace dp6
