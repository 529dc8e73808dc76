#include "divsum/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace divsum {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (unsigned j = 1; j <= k; ++j) {
        acc *= n - k + j;
        acc /= j;  // exact: acc is always a binomial coefficient
    }
    return acc;
}

namespace {

std::mutex table_mutex;
std::vector<Rational>& table() {
    static std::vector<Rational> t{Rational(1)};  // B_0
    return t;
}

}  // namespace

Rational BernoulliTable::get(unsigned k) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto& t = table();
    // Fill upward with sum_{j=0}^{m} C(m+1, j) B_j = m + 1.
    while (t.size() <= k) {
        unsigned m = static_cast<unsigned>(t.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * t[j];
        t.push_back((Rational(m + 1) - acc) / Rational(binomial(m + 1, m)));
    }
    return t[k];
}

Polynomial bernoulli_polynomial(unsigned k) {
    // Coefficient of n^{k+1-u} is C(k+1, u) * B_u / (k+1), u = 0..k.
    std::vector<Scalar> coeffs(k + 2, Scalar::zero(ModeTag::Exact));
    Rational inv_k1 = Rational(1, static_cast<long long>(k) + 1);
    for (unsigned u = 0; u <= k; ++u) {
        Rational c = Rational(binomial(k + 1, u)) * bernoulli_number(u) * inv_k1;
        coeffs[k + 1 - u] = Scalar::exact(c);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial faulhaber_sum_poly(unsigned k) { return bernoulli_polynomial(k); }

}  // namespace divsum
