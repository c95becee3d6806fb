#include "eigraph/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace eigraph {

void poly_trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
}

std::size_t poly_degree(const IntPoly& p) { return p.empty() ? 0 : p.size() - 1; }

bool poly_is_zero(const IntPoly& p) {
    for (const BigInt& c : p)
        if (c != 0) return false;
    return true;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {0};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

IntPoly poly_neg(const IntPoly& a) {
    IntPoly r = a;
    for (BigInt& c : r) c = -c;
    return r;
}

IntPoly poly_pow(const IntPoly& a, unsigned e) {
    IntPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

double poly_eval(const IntPoly& p, double x) {
    double v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i].convert_to<double>();
    return v;
}

IntPoly poly_divide_exact(const IntPoly& num, const IntPoly& den) {
    if (poly_is_zero(den)) throw std::invalid_argument("division by zero polynomial");
    if (poly_is_zero(num)) return {0};
    IntPoly rem = num;
    poly_trim(rem);
    IntPoly d = den;
    poly_trim(d);
    if (rem.size() < d.size())
        throw std::invalid_argument("polynomial division is not exact");
    IntPoly q(rem.size() - d.size() + 1, 0);
    const BigInt& lead = d.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt top = rem[i + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw std::invalid_argument("polynomial division is not exact");
        BigInt c = top / lead;
        q[i] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= c * d[j];
    }
    if (!poly_is_zero(rem))
        throw std::invalid_argument("polynomial division is not exact");
    poly_trim(q);
    return q;
}

IntPoly poly_reflect(const IntPoly& p) {
    // Horner on the polynomial (-x-1), done in polynomial arithmetic.
    IntPoly sub{-1, -1};
    IntPoly r{0};
    for (std::size_t i = p.size(); i-- > 0;) {
        r = poly_mul(r, sub);
        r[0] += p[i];
    }
    poly_trim(r);
    return r;
}

IntPoly poly_monic(const IntPoly& p) {
    IntPoly r = p;
    poly_trim(r);
    if (r.back() < 0)
        for (BigInt& c : r) c = -c;
    return r;
}

IntPoly char_poly_matrix(const std::vector<std::int64_t>& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty matrix has no char poly");
    if (a.size() != n * n) throw std::invalid_argument("matrix shape mismatch");

    // Faddeev-LeVerrier for the monic det(lambda I - A):
    //   M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<BigInt> m(n * n, 0), am(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    IntPoly c(n + 1, 0);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (a[i * n + l] != 0) s += a[i * n + l] * m[l * n + j];
                am[i * n + j] = s;
            }
        }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
        c[n - k] = -tr / static_cast<std::int64_t>(k);
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[n - k];
        }
    }
    // Convention here is det(A - lambda I) = (-1)^n det(lambda I - A).
    if (n % 2 == 1)
        for (BigInt& x : c) x = -x;
    return c;
}

IntPoly complement_charpoly_regular(const IntPoly& p, std::size_t n, std::size_t r) {
    IntPoly reflected = poly_reflect(p);
    if (n % 2 == 1) reflected = poly_neg(reflected);
    IntPoly num = poly_mul(reflected,
                           IntPoly{static_cast<std::int64_t>(r + 1) -
                                       static_cast<std::int64_t>(n),
                                   1});
    IntPoly den{static_cast<std::int64_t>(r + 1), 1};
    try {
        return poly_divide_exact(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("input not the char poly of an r-regular graph");
    }
}

IntPoly join_charpoly(const IntPoly& p1, const IntPoly& p2,
                      const IntPoly& pc1, const IntPoly& pc2) {
    const std::size_t n1 = poly_degree(p1);
    const std::size_t n2 = poly_degree(p2);
    if (poly_degree(pc1) != n1 || poly_degree(pc2) != n2)
        throw std::invalid_argument("complement char poly degree mismatch");
    IntPoly q1 = poly_reflect(pc1);
    IntPoly q2 = poly_reflect(pc2);
    IntPoly t1 = poly_mul(p1, q2);
    if (n2 % 2 == 1) t1 = poly_neg(t1);
    IntPoly t2 = poly_mul(p2, q1);
    if (n1 % 2 == 1) t2 = poly_neg(t2);
    IntPoly t3 = poly_mul(q1, q2);
    if ((n1 + n2) % 2 == 1) t3 = poly_neg(t3);
    return poly_sub(poly_add(t1, t2), t3);
}

std::vector<std::string> poly_decimal_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const BigInt& c : p) out.push_back(c.str());
    return out;
}

std::string poly_display(const IntPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0 && p.size() > 1) continue;
        BigInt c = p[i];
        if (first) {
            if (c < 0) {
                out << '-';
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1 || i == 0) out << c.str();
        if (i >= 1) {
            if (c != 1) out << '*';
            out << "x";
            if (i > 1) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

} // namespace eigraph
