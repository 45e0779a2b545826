#pragma once

#include "preradicals/errors.hpp"

namespace preradicals {

inline bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// A prime field F_p, 2 <= p <= 97. All scalar arithmetic is mod p.
struct Field {
    int p = 2;

    Field() = default;
    explicit Field(int prime) : p(prime) {
        if (p < 2 || p > 97 || !is_prime(p))
            throw shape_error("field modulus must be a prime in [2, 97], got " + std::to_string(prime));
    }

    int reduce(long long x) const {
        int r = static_cast<int>(x % p);
        return r < 0 ? r + p : r;
    }
    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }

    /// Multiplicative inverse via Fermat; a must be nonzero mod p.
    int inv(int a) const {
        a = reduce(a);
        if (a == 0)
            throw shape_error("division by zero in F_p");
        int result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool operator==(const Field&) const = default;
};

} // namespace preradicals
