#include "crucial/bigint.hpp"

#include <stdexcept>

namespace crucial {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0 || num % den != 0) throw std::logic_error("exact_div: non-exact division");
    return num / den;
}

}  // namespace crucial
