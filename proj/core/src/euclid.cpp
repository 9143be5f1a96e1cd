#include <jumpnum/euclid.hpp>

namespace jumpnum {

Int EuclidData::quotient_sum() const {
    Int sum = 0;
    for (const Int& aj : quotients) {
        sum += aj;
    }
    return sum;
}

EuclidData euclid_expand(const Int& p, const Int& q) {
    validate_pair(p, q);

    EuclidData data;
    data.p = p;
    data.q = q;
    data.remainders = {q, p};

    Int high = q, low = p;
    while (low != 0) {
        Int quo, rem;
        divide_qr(high, low, quo, rem);
        data.quotients.push_back(quo);
        if (rem != 0) {
            data.remainders.push_back(rem);
        }
        high = low;
        low = rem;
    }
    // gcd(p,q) = 1 and p >= 2 force at least two division steps.

    const int m = data.length();
    data.f.assign(2, 0);       // f_{-1} = f_0 = 0
    data.delta.assign(2, 1);   // delta_0 = delta_1 = 1
    for (int j = 1; j <= m; ++j) {
        if (j >= 2) {
            data.delta.push_back(data.delta_at(j - 2) + data.a(j - 1) * data.f_at(j - 2));
        }
        data.f.push_back(data.f_at(j - 2) + data.a(j) * data.delta_at(j));
    }
    data.delta.push_back(data.delta_at(m - 1) + data.a(m) * data.f_at(m - 1));

    return data;
}

}  // namespace jumpnum
