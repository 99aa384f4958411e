#include "spexlab/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spexlab/error.hpp"

namespace spexlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : order_(rows.size())
{
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
        if (row.size() != order_)
            throw InvalidInput("IntMatrix rows must all have length " + std::to_string(order_));
        for (long v : row)
            entries_.emplace_back(v);
    }
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::scaled(const BigInt& factor) const
{
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c)
        x *= factor;
    return IntPoly(std::move(c));
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const
{
    if (den <= 0)
        throw InvalidInput("sign_at needs a positive denominator");
    if (is_zero())
        return 0;
    // den^d * p(num/den) = sum c_i num^i den^(d-i), evaluated Horner-style.
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (int i = degree(); i >= 0; --i) { // acc = acc * num + c_i den^(d-i)
        acc = acc * num + coeffs_[i] * den_pow;
        den_pow *= den;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

BigRational IntPoly::value_at(const BigRational& x) const
{
    BigRational acc = 0;
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + BigRational(coeffs_[i]);
    return acc;
}

double IntPoly::value_at(double x) const
{
    long double acc = 0;
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + coeffs_[i].convert_to<long double>();
    return static_cast<double>(acc);
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return IntPoly();
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

int IntPoly::first_difference(const IntPoly& other) const
{
    const std::size_t len = std::max(coeffs_.size(), other.coeffs_.size());
    for (std::size_t i = 0; i < len; ++i)
        if (coefficient(i) != other.coefficient(i))
            return static_cast<int>(i);
    return -1;
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) {
            os << mag;
            if (i > 0)
                os << "*";
        }
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

std::vector<std::string> IntPoly::coefficient_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.str());
    return out;
}

IntPoly char_poly(const IntMatrix& a)
{
    const std::size_t n = a.order();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix m(n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        IntMatrix next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s += a.at(i, t) * m.at(t, j);
                next.at(i, j) = s;
            }
        for (std::size_t i = 0; i < n; ++i)
            next.at(i, i) += c[n - k + 1];
        // c_{n-k} = -tr(A M_k) / k
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                tr += a.at(i, t) * next.at(t, i);
        if (tr % static_cast<long>(k) != 0)
            throw Error("internal: Faddeev-LeVerrier trace not divisible by " + std::to_string(k));
        c[n - k] = -tr / static_cast<long>(k);
        m = std::move(next);
    }
    return IntPoly(std::move(c));
}

namespace {

using RatPoly = std::vector<BigRational>; // lowest degree first, no trailing zeros

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RatPoly derivative(const RatPoly& p)
{
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

/// Quotient and remainder of a / b over Q.
std::pair<RatPoly, RatPoly> divide(RatPoly a, const RatPoly& b)
{
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const BigRational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.empty()) {
        auto r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

using ZPoly = std::vector<BigInt>; // lowest degree first

/// Positive rational multiple of p with coprime integer coefficients.
ZPoly primitive(const RatPoly& p)
{
    BigInt l = 1;
    for (const auto& c : p)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    ZPoly z;
    BigInt g = 0;
    for (const auto& c : p) {
        z.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
        g = boost::multiprecision::gcd(g, z.back());
    }
    if (g > 1)
        for (auto& c : z)
            c /= g;
    return z;
}

RatPoly to_rational(const ZPoly& z)
{
    RatPoly p;
    for (const auto& c : z)
        p.emplace_back(c);
    return p;
}

/// Sign of z(a / 2^e), from the integer 2^(e*deg) z(a / 2^e).
int sign_at_dyadic(const ZPoly& z, const BigInt& a, unsigned e)
{
    if (z.empty())
        return 0;
    const std::size_t d = z.size() - 1;
    BigInt acc = z[d];
    BigInt scale = 1;
    for (std::size_t i = d; i-- > 0;) {
        scale <<= e;
        acc = acc * a + z[i] * scale;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int variations(const std::vector<ZPoly>& chain, const BigInt& a, unsigned e)
{
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at_dyadic(p, a, e);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

} // namespace

double largest_root(const IntPoly& p, double tol)
{
    if (p.degree() < 1)
        throw NumericError("largest_root needs a polynomial of degree >= 1");
    if (!(tol > 0.0))
        throw InvalidInput("largest_root tolerance must be positive");

    RatPoly rp;
    for (const auto& c : p.coefficients())
        rp.emplace_back(c);
    const RatPoly g = gcd(rp, derivative(rp));
    const RatPoly sf = divide(rp, g).first;

    // Sturm chain; each member is replaced by a positive multiple with
    // coprime integer coefficients to keep the numbers small.
    std::vector<ZPoly> chain{primitive(sf), primitive(derivative(sf))};
    while (chain.back().size() > 1) {
        RatPoly r = divide(to_rational(chain[chain.size() - 2]), to_rational(chain.back())).second;
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(primitive(r));
    }

    // Cauchy bound, rounded up to a power of two.
    BigRational cauchy = 0;
    for (std::size_t i = 0; i + 1 < rp.size(); ++i) {
        BigRational q = rp[i] / rp.back();
        if (q < 0)
            q = -q;
        cauchy = std::max(cauchy, q);
    }
    cauchy += 1;
    BigInt bound = 1;
    while (BigRational(bound) <= cauchy)
        bound <<= 1;

    // lo and hi are numerators over 2^e.
    BigInt lo = -bound;
    BigInt hi = bound;
    unsigned e = 0;
    int v_hi = variations(chain, hi, e);
    if (variations(chain, lo, e) - v_hi < 1)
        throw NumericError("polynomial " + p.to_string() + " has no real root");

    const BigRational width = BigRational(tol);
    while (BigRational(hi - lo, BigInt(1) << e) > width) {
        lo <<= 1;
        hi <<= 1;
        ++e;
        const BigInt mid = (lo + hi) / 2;
        const int v_mid = variations(chain, mid, e);
        if (v_mid - v_hi >= 1) {
            lo = mid;
        } else {
            hi = mid;
            v_hi = v_mid;
        }
    }
    const BigInt den = BigInt(1) << e;

    const double lo_d = BigRational(lo, den).convert_to<double>();
    const double hi_d = BigRational(hi, den).convert_to<double>();
    double x = BigRational(lo + hi, 2 * den).convert_to<double>();
    const IntPoly dp = p.derivative();
    for (int step = 0; step < 2; ++step) {
        const double fx = p.value_at(x);
        const double dfx = dp.value_at(x);
        if (dfx == 0.0 || !std::isfinite(fx / dfx))
            break;
        const double next = x - fx / dfx;
        if (next < lo_d - tol || next > hi_d + tol)
            break;
        x = next;
    }
    return x;
}

} // namespace spexlab
