#pragma once

#include <vector>

#include "arrival/error.hpp"
#include "arrival/scalar.hpp"

namespace arrival {

// Truncated formal power series; coeff[n] is the coefficient of z^n and the
// truncation degree N = coeff.size() - 1 is fixed per computation.
template <class S>
struct PowerSeries {
    std::vector<S> coeff;

    PowerSeries() = default;
    explicit PowerSeries(int degree) : coeff(degree + 1, S(0)) {}

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    const S& operator[](int n) const { return coeff[n]; }
    S& operator[](int n) { return coeff[n]; }

    static PowerSeries one(int degree) {
        PowerSeries s(degree);
        s.coeff[0] = S(1);
        return s;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeff == b.coeff;
    }
};

namespace detail {
template <class S>
void require_same_degree(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("series degrees differ: " + std::to_string(a.degree()) + " vs " +
                             std::to_string(b.degree()));
}
}  // namespace detail

template <class S>
PowerSeries<S> cauchy_mul(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    detail::require_same_degree(a, b);
    const int n = a.degree();
    PowerSeries<S> r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff[i] == S(0)) continue;
        for (int j = 0; i + j <= n; ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return r;
}

// Termwise product.
template <class S>
PowerSeries<S> hadamard(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    detail::require_same_degree(a, b);
    PowerSeries<S> r(a.degree());
    for (int i = 0; i <= a.degree(); ++i) r.coeff[i] = a.coeff[i] * b.coeff[i];
    return r;
}

// J^r(az) = 1/(1-az)^r: coefficients C(r+k-1, k) a^k. J^1(z) is the Hadamard
// identity.
template <class S>
PowerSeries<S> r_geometric(int r, const S& a, int degree) {
    if (r < 1) throw DomainError("r must be a positive integer");
    PowerSeries<S> s(degree);
    S ak(1);
    for (int k = 0; k <= degree; ++k) {
        s.coeff[k] = scalar_from_rational<S>(Rational(binomial(r + k - 1, k))) * ak;
        if (k < degree) ak *= a;
    }
    return s;
}

// Closed form for J^m(az) . J^n(bz) with m >= n:
//   J^{m+n-1}(abz) * sum_{i<n} C(m-1,i) C(n-1,i) (abz)^i.
template <class S>
PowerSeries<S> hadamard_geometric_closed(int m, int n, const S& a, const S& b, int degree) {
    if (n < 1) throw DomainError("m, n must be positive integers");
    if (m < n) throw OrderViolation("requires m >= n; swap the arguments");
    S ab = a * b;
    PowerSeries<S> poly(degree);
    S abi(1);
    for (int i = 0; i < n && i <= degree; ++i) {
        poly.coeff[i] = scalar_from_rational<S>(Rational(binomial(m - 1, i) * binomial(n - 1, i))) * abi;
        abi *= ab;
    }
    return cauchy_mul(r_geometric(m + n - 1, ab, degree), poly);
}

// OGF of the first arrival time across a path with r edges:
//   p^r z^r / (1-qz)^r, coefficients C(n-1, r-1) p^r q^{n-r}.
template <class S>
PowerSeries<S> path_ogf(int r, const S& q, int degree) {
    if (r < 1) throw DomainError("path length must be positive");
    if (q < S(0) || !(q < S(1))) throw DomainError("q must lie in [0,1)");
    const S p = S(1) - q;
    PowerSeries<S> s(degree);
    S pr = pow_scalar(p, static_cast<unsigned long>(r));
    S qpow(1);
    for (int n = r; n <= degree; ++n) {
        s.coeff[n] = scalar_from_rational<S>(Rational(binomial(n - 1, r - 1))) * pr * qpow;
        qpow *= q;
    }
    return s;
}

// Survival sequence Pr(Z > n) of the pmf encoded by phi.
template <class S>
PowerSeries<S> survival_series(const PowerSeries<S>& phi) {
    PowerSeries<S> s(phi.degree());
    S remaining(1);
    for (int n = 0; n <= phi.degree(); ++n) {
        remaining -= phi.coeff[n];
        s.coeff[n] = remaining;
    }
    return s;
}

// Composition at an articulation vertex: the arrival time is the sum of the
// two stage arrival times, so the OGF is the product.
template <class S>
PowerSeries<S> series_reduce(const PowerSeries<S>& phi1, const PowerSeries<S>& phi2) {
    return cauchy_mul(phi1, phi2);
}

// Composition across a separating pair {s,t}: the arrival time is the
// minimum over the two branches, so survival functions multiply. This is the
// (1-z)[phi_H/(1-z) . phi_K/(1-z)] identity computed in its stable CDF form.
template <class S>
PowerSeries<S> parallel_reduce(const PowerSeries<S>& phiH, const PowerSeries<S>& phiK) {
    detail::require_same_degree(phiH, phiK);
    PowerSeries<S> sh = survival_series(phiH), sk = survival_series(phiK);
    PowerSeries<S> r(phiH.degree());
    S prev(1);
    for (int n = 0; n <= r.degree(); ++n) {
        S cur = sh.coeff[n] * sk.coeff[n];
        r.coeff[n] = prev - cur;
        prev = cur;
    }
    return r;
}

// OGF of the first arrival time across two parallel paths with n and m edges
// (m >= n) between the terminals. Per branch of length l the survival is the
// binomial tail Pr(Bin(r, p) < l) = sum_{j<l} C(r,j) p^j q^{r-j}; the two
// branches are independent, so the survivals multiply.
template <class S>
PowerSeries<S> two_paths_ogf(int n, int m, const S& q, int degree) {
    if (n < 1) throw DomainError("path lengths must be positive");
    if (m < n) throw OrderViolation("requires m >= n; swap the arguments");
    if (!(q > S(0)) || !(q < S(1))) throw DomainError("q must lie in (0,1)");
    const S p = S(1) - q;

    auto branch_survival = [&](int len, int r) {
        S acc(0);
        S pj(1);  // p^j
        for (int j = 0; j < len && j <= r; ++j) {
            acc += scalar_from_rational<S>(Rational(binomial(r, j))) * pj *
                   pow_scalar(q, static_cast<unsigned long>(r - j));
            pj *= p;
        }
        return acc;
    };

    PowerSeries<S> result(degree);
    S prev(1);
    for (int r = 0; r <= degree; ++r) {
        S cur = branch_survival(n, r) * branch_survival(m, r);
        result.coeff[r] = prev - cur;
        prev = cur;
    }
    return result;
}

template <class S>
struct ExpectationEstimate {
    S value;           // truncated sum, plus the tail estimate when enabled
    S tail_remainder;  // the geometric extrapolation beyond the truncation
};

// T = sum_n Pr(Z > n), summed to the truncation degree. With tail_mode the
// remainder is extrapolated geometrically from the last survival ratio.
template <class S>
ExpectationEstimate<S> expectation_from_survival(const PowerSeries<S>& phi, bool tail_mode = true) {
    PowerSeries<S> s = survival_series(phi);
    const int n = s.degree();
    S total(0);
    S prev(1);
    for (int i = 0; i <= n; ++i) {
        if (s.coeff[i] > prev) throw NonMonotoneCDF("survival increases at degree " + std::to_string(i));
        prev = s.coeff[i];
        total += s.coeff[i];
    }
    S remainder(0);
    if (tail_mode && n >= 1 && s.coeff[n] != S(0)) {
        if (s.coeff[n] == s.coeff[n - 1])
            throw NonMonotoneCDF("survival has stalled; geometric tail fit impossible");
        S ratio = s.coeff[n] / s.coeff[n - 1];
        remainder = s.coeff[n] * ratio / (S(1) - ratio);
    }
    return {S(total + remainder), remainder};
}

}  // namespace arrival
