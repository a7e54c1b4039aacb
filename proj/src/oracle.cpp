#include "dp6/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dp6 {

Int kontsevich(int d) {
    if (d < 1) throw std::invalid_argument("kontsevich: degree must be >= 1, got " + std::to_string(d));
    std::vector<Int> N(static_cast<size_t>(d) + 1);
    N[1] = 1;
    for (int n = 2; n <= d; ++n) {
        Int total = 0;
        for (int d1 = 1; d1 < n; ++d1) {
            int d2 = n - d1;
            Int inner = Int(d2) * binomial(3 * n - 4, 3 * d1 - 2) -
                        Int(d1) * binomial(3 * n - 4, 3 * d1 - 1);
            total += N[d1] * N[d2] * Int(d1) * d1 * d2 * inner;
        }
        N[n] = total;
    }
    return N[d];
}

Int closed_form_blowup(int n) {
    return int_pow(4, n) * binomial(n + 2, 2);
}

bool lando_identity(int n) {
    Int lhs = closed_form_blowup(n);
    Int rhs = 0;
    for (int m = 0; m <= n; ++m) {
        Int inner = 0;
        for (int k = 0; k <= n - m; ++k)
            inner += binomial(k + 3, 3) * binomial(2 * n + 4 - m, n - m - k);
        rhs += int_pow(2, m) * inner;
    }
    return lhs == rhs;
}

}  // namespace dp6
