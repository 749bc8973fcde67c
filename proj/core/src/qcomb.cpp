#include "qsl2/qcomb.hpp"

#include <cassert>
#include <cstdlib>
#include <mutex>
#include <vector>

namespace qsl2 {

LaurentPoly q_integer(int n) {
    if (n < 0) return -q_integer(-n);
    LaurentPoly p;
    for (int j = 0; j < n; ++j) p.add_term(n - 1 - 2 * j, Rational(1));
    return p;
}

LaurentPoly q_factorial(int n) {
    assert(n >= 0);
    LaurentPoly p = LaurentPoly::one();
    for (int k = 2; k <= n; ++k) p *= q_integer(k);
    return p;
}

LaurentPoly gaussian_binomial(int top, int k) {
    assert(k >= 0);
    if (k == 0) return LaurentPoly::one();
    if (top >= 0 && top < k) return LaurentPoly();
    LaurentPoly num = LaurentPoly::one();
    for (int d = 1; d <= k; ++d) num *= q_integer(top - d + 1);
    return RationalFunction(num, q_factorial(k)).as_laurent();
}

namespace {

// The Pochhammers (q^{-2}; q^{-2})_m appear in nearly every coefficient;
// grow a shared table on demand.
std::vector<LaurentPoly>& poch_table() {
    static std::vector<LaurentPoly> table{LaurentPoly::one()};
    return table;
}
std::mutex poch_mutex;

}  // namespace

LaurentPoly poch_q2m(int m) {
    assert(m >= 0);
    std::lock_guard<std::mutex> lock(poch_mutex);
    auto& table = poch_table();
    while (static_cast<int>(table.size()) <= m) {
        int s = static_cast<int>(table.size());
        LaurentPoly factor = LaurentPoly::one();
        factor.add_term(-2 * s, Rational(-1));
        table.push_back(table.back() * factor);
    }
    return table[static_cast<size_t>(m)];
}

RationalFunction inv_poch_q2m(int m) {
    return RationalFunction(LaurentPoly::one(), poch_q2m(m));
}

}  // namespace qsl2
