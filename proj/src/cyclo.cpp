#include "gradind/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gradind {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Quotient and remainder; divisor must be trimmed and nonzero.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den)
{
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        return {{}, num};
    }
    QPoly quo(num.size() - dd);
    const Rational lead = den.back();
    for (std::size_t i = num.size(); i-- > dd;) {
        if (sgn(num[i]) == 0) {
            continue;
        }
        Rational c = num[i] / lead;
        quo[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= c * den[j];
        }
    }
    num.resize(dd);
    trim(num);
    trim(quo);
    return {quo, num};
}

QPoly sub(const QPoly& a, const QPoly& b)
{
    QPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    trim(out);
    return out;
}

// In-place reduction modulo the monic integer polynomial phi; result has
// exactly deg(phi) entries.
void reduce_mod(QPoly& p, const IntPoly& phi)
{
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (sgn(p[i]) == 0) {
            continue;
        }
        const Rational c = p[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(phi[j]) != 0) {
                p[i - d + j] -= c * phi[j];
            }
        }
        p[i] = 0;
    }
    p.resize(d);
}

QPoly to_qpoly(const IntPoly& p)
{
    QPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        out.emplace_back(c);
    }
    return out;
}

std::recursive_mutex& cyclo_mutex()
{
    static std::recursive_mutex m;
    return m;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) {
        throw bad();
    }
    const auto slash = s.find('/');
    auto check_digits = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            throw bad();
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw bad();
            }
        }
    };
    std::string num = s.substr(0, slash);
    check_digits(num, true);
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(Integer(num), 1);
    } else {
        const std::string den = s.substr(slash + 1);
        check_digits(den, false);
        Integer d(den);
        if (sgn(d) == 0) {
            throw std::invalid_argument("zero denominator in '" + s + "'");
        }
        r = Rational(Integer(num), d);
        r.canonicalize();
    }
    return r;
}

std::string format_rational(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

long long lcm_conductor(long long a, long long b)
{
    return std::lcm(a, b);
}

const IntPoly& cyclotomic_poly(int n)
{
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_poly: n must be positive");
    }
    static std::map<int, IntPoly> cache;
    std::lock_guard lock(cyclo_mutex());
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    // x^n - 1
    IntPoly poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const IntPoly& divisor = cyclotomic_poly(d);
        const std::size_t dd = divisor.size() - 1;
        IntPoly quo(poly.size() - dd);
        for (std::size_t i = poly.size(); i-- > dd;) {
            const Integer c = poly[i];
            quo[i - dd] = c;
            if (sgn(c) == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= dd; ++j) {
                poly[i - dd + j] -= c * divisor[j];
            }
        }
        poly = std::move(quo);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum() : coeffs_(1) {}

CycloNum::CycloNum(long long value) : coeffs_{Rational(static_cast<long>(value))} {}

CycloNum::CycloNum(const Rational& value) : coeffs_{value}
{
    coeffs_[0].canonicalize();
}

CycloNum::CycloNum(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs))
{
    if (conductor < 1) {
        throw std::invalid_argument("CycloNum: conductor must be positive");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
    const IntPoly& phi = cyclotomic_poly(conductor);
    if (coeffs_.size() < phi.size() - 1) {
        coeffs_.resize(phi.size() - 1);
    }
    reduce_mod(coeffs_, phi);
}

CycloNum CycloNum::root_of_unity(int n, long long k)
{
    if (n < 1) {
        throw std::invalid_argument("root_of_unity: n must be positive");
    }
    long long e = k % n;
    if (e < 0) {
        e += n;
    }
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return CycloNum(n, std::move(c));
}

bool CycloNum::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloNum::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycloNum::is_one() const
{
    return is_rational() && coeffs_[0] == 1;
}

Rational CycloNum::rational_value() const
{
    if (!is_rational()) {
        throw std::domain_error("CycloNum " + to_string() + " is not rational");
    }
    return coeffs_[0];
}

CycloNum CycloNum::embed(int target) const
{
    if (target < 1 || target % conductor_ != 0) {
        throw std::invalid_argument("embed: target conductor must be a multiple of " +
                                    std::to_string(conductor_));
    }
    if (target == conductor_) {
        return *this;
    }
    const std::size_t stride = static_cast<std::size_t>(target / conductor_);
    std::vector<Rational> spread((coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        spread[i * stride] = coeffs_[i];
    }
    return CycloNum(target, std::move(spread));
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs)
{
    if (rhs.conductor_ != conductor_) {
        const int l = static_cast<int>(lcm_conductor(conductor_, rhs.conductor_));
        *this = embed(l);
        return *this += rhs.embed(l);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs)
{
    return *this += -rhs;
}

CycloNum CycloNum::operator-() const
{
    CycloNum out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs)
{
    if (rhs.conductor_ != conductor_) {
        const int l = static_cast<int>(lcm_conductor(conductor_, rhs.conductor_));
        *this = embed(l);
        return *this *= rhs.embed(l);
    }
    if (coeffs_.size() == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    QPoly prod = mul(coeffs_, rhs.coeffs_);
    reduce_mod(prod, cyclotomic_poly(conductor_));
    coeffs_ = std::move(prod);
    return *this;
}

CycloNum CycloNum::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("CycloNum: division by zero");
    }
    if (coeffs_.size() == 1) {
        return CycloNum(conductor_, {1 / coeffs_[0]});
    }
    // Extended Euclid: s * value + t * phi = gcd (a nonzero constant).
    QPoly r0 = to_qpoly(cyclotomic_poly(conductor_));
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0;
    QPoly s1{1};
    while (!r1.empty()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly next = sub(s0, mul(quo, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    const Rational g = r0.at(0);
    for (auto& c : s0) {
        c /= g;
    }
    return CycloNum(conductor_, std::move(s0));
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs)
{
    return *this *= rhs.inverse();
}

bool operator==(const CycloNum& lhs, const CycloNum& rhs)
{
    if (lhs.conductor_ == rhs.conductor_) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    const int l = static_cast<int>(lcm_conductor(lhs.conductor_, rhs.conductor_));
    return lhs.embed(l).coeffs_ == rhs.embed(l).coeffs_;
}

std::string CycloNum::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << '*';
        }
        os << 'z' << conductor_;
        if (i > 1) {
            os << '^' << i;
        }
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x)
{
    return os << x.to_string();
}

CycloNum field_arith(const CycloNum& x, const CycloNum& y, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    }
    throw std::invalid_argument("field_arith: unknown op");
}

CycloNum power(const CycloNum& x, long long e)
{
    if (e < 0) {
        if (x.is_zero()) {
            throw std::domain_error("power: zero to a negative exponent");
        }
        return power(x.inverse(), -e);
    }
    CycloNum result = CycloNum(1).embed(x.conductor());
    CycloNum base = x;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

int unity_order(const CycloNum& x)
{
    // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    const int bound = static_cast<int>(lcm_conductor(2, x.conductor()));
    if (!x.is_zero()) {
        CycloNum acc = x;
        for (int d = 1; d <= bound; ++d) {
            if (acc.is_one()) {
                return d;
            }
            acc *= x;
        }
    }
    throw std::domain_error("unity_order: " + x.to_string() + " is not a root of unity");
}

bool is_primitive_root(const CycloNum& x, int n)
{
    try {
        return unity_order(x) == n;
    } catch (const std::domain_error&) {
        return false;
    }
}

CycloNum parse_parameter(std::string_view text)
{
    constexpr std::string_view prefix = "zeta:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string rest(text.substr(prefix.size()));
        const auto colon = rest.find(':');
        try {
            std::size_t used = 0;
            const int n = std::stoi(rest.substr(0, colon), &used);
            if (used != colon || colon == std::string::npos) {
                throw std::invalid_argument("");
            }
            const std::string ks = rest.substr(colon + 1);
            const long long k = std::stoll(ks, &used);
            if (used != ks.size() || n < 1) {
                throw std::invalid_argument("");
            }
            return CycloNum::root_of_unity(n, k);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed parameter '" + std::string(text) +
                                        "', expected zeta:n:k");
        }
    }
    return CycloNum(parse_rational(text));
}

}  // namespace gradind
