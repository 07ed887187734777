#include "gradind/algebra.hpp"

#include <numeric>
#include <sstream>

namespace gradind {

struct AlgebraSpec::Node {
    Kind kind;
    int n;
    CycloNum q;
    int m = 0;
    std::vector<AlgebraSpec> children;  // tensor: {left, right}
    int width;
    std::vector<CycloNum> q_powers;
};

namespace {

int mod(long long a, int n)
{
    return static_cast<int>(((a % n) + n) % n);
}

std::vector<CycloNum> powers_of(const CycloNum& q, int n)
{
    std::vector<CycloNum> out{CycloNum(1)};
    for (int i = 1; i < n; ++i) {
        out.push_back(out.back() * q);
    }
    return out;
}

void require_primitive(int n, const CycloNum& q)
{
    if (n < 1 || !is_primitive_root(q, n)) {
        throw std::invalid_argument("algebra model: q = " + q.to_string() + " is not a primitive " +
                                    std::to_string(n) + "-th root of unity");
    }
}

}  // namespace

AlgebraSpec AlgebraSpec::laurent(int n, const CycloNum& q)
{
    require_primitive(n, q);
    return AlgebraSpec(std::make_shared<const Node>(Node{Kind::laurent, n, q, 0, {}, 1, powers_of(q, n)}));
}

AlgebraSpec AlgebraSpec::rotation(int n, const CycloNum& q)
{
    require_primitive(n, q);
    return AlgebraSpec(std::make_shared<const Node>(Node{Kind::rotation, n, q, 0, {}, 2, powers_of(q, n)}));
}

AlgebraSpec AlgebraSpec::clifford(int m, int n, const CycloNum& q)
{
    require_primitive(n, q);
    if (m < 1) {
        throw std::invalid_argument("clifford model: need at least one generator");
    }
    return AlgebraSpec(std::make_shared<const Node>(Node{Kind::clifford, n, q, m, {}, m, powers_of(q, n)}));
}

AlgebraSpec AlgebraSpec::tensor(const AlgebraSpec& left, const AlgebraSpec& right)
{
    if (left.n() != right.n() || !(left.q() == right.q())) {
        throw std::invalid_argument("graded tensor product: operands must share n and q");
    }
    return AlgebraSpec(std::make_shared<const Node>(Node{Kind::tensor, left.n(), left.q(), 0, {left, right},
                                                         left.width() + right.width(), powers_of(left.q(), left.n())}));
}

AlgebraSpec::Kind AlgebraSpec::kind() const { return node_->kind; }
int AlgebraSpec::n() const { return node_->n; }
const CycloNum& AlgebraSpec::q() const { return node_->q; }
int AlgebraSpec::generators() const { return node_->m; }
int AlgebraSpec::width() const { return node_->width; }

const AlgebraSpec& AlgebraSpec::left() const
{
    if (node_->kind != Kind::tensor) {
        throw std::logic_error("left(): not a tensor model");
    }
    return node_->children[0];
}

const AlgebraSpec& AlgebraSpec::right() const
{
    if (node_->kind != Kind::tensor) {
        throw std::logic_error("right(): not a tensor model");
    }
    return node_->children[1];
}

const CycloNum& AlgebraSpec::q_power(long long e) const
{
    return node_->q_powers[static_cast<std::size_t>(mod(e, node_->n))];
}

std::string AlgebraSpec::describe() const
{
    std::ostringstream os;
    switch (kind()) {
    case Kind::laurent: os << "laurent"; break;
    case Kind::rotation: os << "rotation"; break;
    case Kind::clifford: os << "clifford(m=" << generators() << ")"; break;
    case Kind::tensor: os << "(" << left().describe() << " (x)_q " << right().describe() << ")"; break;
    }
    if (kind() != Kind::tensor) {
        os << "[n=" << n() << ", q=" << q() << "]";
    }
    return os.str();
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind() || a.n() != b.n() || !(a.q() == b.q()) || a.generators() != b.generators()) {
        return false;
    }
    if (a.kind() == AlgebraSpec::Kind::tensor) {
        return a.left() == b.left() && a.right() == b.right();
    }
    return true;
}

// --- Monomials -------------------------------------------------------------

void validate_monomial(const AlgebraSpec& spec, const Monomial& m)
{
    if (static_cast<int>(m.size()) != spec.width()) {
        throw std::invalid_argument("monomial has " + std::to_string(m.size()) + " exponents, model " +
                                    spec.describe() + " expects " + std::to_string(spec.width()));
    }
    switch (spec.kind()) {
    case AlgebraSpec::Kind::clifford:
        for (int a : m) {
            if (a < 0 || a >= spec.n()) {
                throw std::invalid_argument("clifford exponents must lie in [0, n)");
            }
        }
        break;
    case AlgebraSpec::Kind::tensor: {
        const auto split = m.begin() + spec.left().width();
        validate_monomial(spec.left(), Monomial(m.begin(), split));
        validate_monomial(spec.right(), Monomial(split, m.end()));
        break;
    }
    default: break;
    }
}

Monomial identity_monomial(const AlgebraSpec& spec)
{
    return Monomial(static_cast<std::size_t>(spec.width()), 0);
}

bool is_identity_monomial(const AlgebraSpec&, const Monomial& m)
{
    return std::all_of(m.begin(), m.end(), [](int a) { return a == 0; });
}

int monomial_degree(const AlgebraSpec& spec, const Monomial& m)
{
    // Every generator has degree 1 in every model.
    long long total = 0;
    for (int a : m) {
        total += a;
    }
    return mod(total, spec.n());
}

MonomialProduct multiply_monomials(const AlgebraSpec& spec, const Monomial& a, const Monomial& b)
{
    MonomialProduct out;
    out.monomial.resize(a.size());
    switch (spec.kind()) {
    case AlgebraSpec::Kind::laurent:
        out.monomial[0] = a[0] + b[0];
        break;
    case AlgebraSpec::Kind::rotation:
        // u^a v^b u^a' v^b' = q^{a' b} u^{a+a'} v^{b+b'}
        out.phase = mod(static_cast<long long>(b[0]) * a[1], spec.n());
        out.monomial[0] = a[0] + b[0];
        out.monomial[1] = a[1] + b[1];
        break;
    case AlgebraSpec::Kind::clifford: {
        // Moving e_i^{b_i} left past e_j^{a_j} (j > i) costs q^{a_j b_i}.
        long long phase = 0;
        long long suffix = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            phase += suffix * b[i];
            suffix += a[i];
        }
        out.phase = mod(phase, spec.n());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.monomial[i] = mod(a[i] + b[i], spec.n());
        }
        break;
    }
    case AlgebraSpec::Kind::tensor: {
        const auto w = static_cast<std::ptrdiff_t>(spec.left().width());
        const Monomial al(a.begin(), a.begin() + w), ar(a.begin() + w, a.end());
        const Monomial bl(b.begin(), b.begin() + w), br(b.begin() + w, b.end());
        auto pl = multiply_monomials(spec.left(), al, bl);
        auto pr = multiply_monomials(spec.right(), ar, br);
        const long long twist =
            static_cast<long long>(monomial_degree(spec.right(), ar)) * monomial_degree(spec.left(), bl);
        out.phase = mod(pl.phase + pr.phase + twist, spec.n());
        std::copy(pl.monomial.begin(), pl.monomial.end(), out.monomial.begin());
        std::copy(pr.monomial.begin(), pr.monomial.end(), out.monomial.begin() + w);
        break;
    }
    }
    return out;
}

// --- Elements --------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraSpec spec) : spec_(std::move(spec)) {}

AlgebraElement AlgebraElement::scalar(const AlgebraSpec& spec, const CycloNum& c)
{
    return basis(spec, identity_monomial(spec), c);
}

AlgebraElement AlgebraElement::basis(const AlgebraSpec& spec, Monomial m, const CycloNum& c)
{
    validate_monomial(spec, m);
    AlgebraElement x(spec);
    x.add_term(m, c);
    return x;
}

void AlgebraElement::add_term(const Monomial& m, const CycloNum& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

namespace {

void require_same_spec(const AlgebraElement& a, const AlgebraElement& b)
{
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument("elements belong to different models: " + a.spec().describe() + " vs " +
                                    b.spec().describe());
    }
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs)
{
    require_same_spec(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs)
{
    require_same_spec(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same_spec(a, b);
    AlgebraElement out(a.spec_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = multiply_monomials(a.spec_, ma, mb);
            out.add_term(prod.monomial, ca * cb * a.spec_.q_power(prod.phase));
        }
    }
    return out;
}

AlgebraElement operator*(const CycloNum& c, const AlgebraElement& a)
{
    AlgebraElement out(a.spec_);
    for (const auto& [m, x] : a.terms_) {
        out.add_term(m, c * x);
    }
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << '(' << c << ")*[";
        for (std::size_t i = 0; i < m.size(); ++i) {
            os << (i ? "," : "") << m[i];
        }
        os << ']';
        first = false;
    }
    return os.str();
}

AlgebraElement laurent_x(const AlgebraSpec& spec, int power)
{
    if (spec.kind() != AlgebraSpec::Kind::laurent) {
        throw std::invalid_argument("laurent_x: not a laurent model");
    }
    return AlgebraElement::basis(spec, {power});
}

AlgebraElement rotation_u(const AlgebraSpec& spec, int power)
{
    if (spec.kind() != AlgebraSpec::Kind::rotation) {
        throw std::invalid_argument("rotation_u: not a rotation model");
    }
    return AlgebraElement::basis(spec, {power, 0});
}

AlgebraElement rotation_v(const AlgebraSpec& spec, int power)
{
    if (spec.kind() != AlgebraSpec::Kind::rotation) {
        throw std::invalid_argument("rotation_v: not a rotation model");
    }
    return AlgebraElement::basis(spec, {0, power});
}

AlgebraElement clifford_e(const AlgebraSpec& spec, int i, int power)
{
    if (spec.kind() != AlgebraSpec::Kind::clifford || i < 1 || i > spec.generators()) {
        throw std::invalid_argument("clifford_e: no such generator");
    }
    Monomial m(static_cast<std::size_t>(spec.generators()), 0);
    m[static_cast<std::size_t>(i) - 1] = mod(power, spec.n());
    return AlgebraElement::basis(spec, std::move(m));
}

AlgebraElement power(const AlgebraElement& x, int k)
{
    if (k < 0) {
        throw std::invalid_argument("power: negative exponent on an algebra element");
    }
    AlgebraElement result = AlgebraElement::scalar(x.spec(), CycloNum(1));
    for (int i = 0; i < k; ++i) {
        result = result * x;
    }
    return result;
}

CycloNum phi(const AlgebraElement& x)
{
    const auto it = x.terms().find(identity_monomial(x.spec()));
    return it == x.terms().end() ? CycloNum(0) : it->second;
}

AlgebraElement grading_power(const AlgebraElement& x, int i)
{
    AlgebraElement out(x.spec());
    for (const auto& [m, c] : x.terms()) {
        out.add_term(m, c * x.spec().q_power(static_cast<long long>(i) * monomial_degree(x.spec(), m)));
    }
    return out;
}

AlgebraElement apply_grading(const AlgebraElement& x)
{
    return grading_power(x, 1);
}

AlgebraElement homogeneous_projection(const AlgebraElement& x, int r)
{
    const int n = x.spec().n();
    AlgebraElement sum(x.spec());
    for (int i = 0; i < n; ++i) {
        sum += x.spec().q_power(-static_cast<long long>(r) * i) * grading_power(x, i);
    }
    return CycloNum(Rational(1, n)) * sum;
}

Degree degree_of(const AlgebraElement& x)
{
    Degree d;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const int r = monomial_degree(x.spec(), m);
        if (first) {
            d.kind = Degree::Kind::homogeneous;
            d.residue = r;
            first = false;
        } else if (r != d.residue) {
            return Degree{Degree::Kind::inhomogeneous, 0};
        }
    }
    return d;
}

namespace {

// Inverse of an invertible basis monomial in the laurent/rotation/tensor models.
AlgebraElement monomial_inverse(const AlgebraSpec& spec, const Monomial& g)
{
    Monomial neg = g;
    for (int& a : neg) {
        a = -a;
    }
    const auto prod = multiply_monomials(spec, g, neg);
    return AlgebraElement::basis(spec, neg, spec.q_power(-prod.phase));
}

}  // namespace

AlgebraElement inner_grading(const AlgebraElement& x)
{
    const AlgebraSpec& spec = x.spec();
    const bool laurent_square = spec.kind() == AlgebraSpec::Kind::tensor &&
                                spec.left().kind() == AlgebraSpec::Kind::laurent &&
                                spec.right().kind() == AlgebraSpec::Kind::laurent;
    if (spec.kind() != AlgebraSpec::Kind::rotation && !laurent_square) {
        throw std::invalid_argument("inner_grading: defined on the rotation model and laurent (x)_q laurent");
    }
    const Monomial g{-1, 1};
    return AlgebraElement::basis(spec, g) * x * monomial_inverse(spec, g);
}

AlgebraElement inject_left(const AlgebraSpec& tensor_spec, const AlgebraElement& a)
{
    if (tensor_spec.kind() != AlgebraSpec::Kind::tensor || !(tensor_spec.left() == a.spec())) {
        throw std::invalid_argument("inject_left: element does not belong to the left factor");
    }
    AlgebraElement out(tensor_spec);
    const Monomial one_right = identity_monomial(tensor_spec.right());
    for (const auto& [m, c] : a.terms()) {
        Monomial full = m;
        full.insert(full.end(), one_right.begin(), one_right.end());
        out.add_term(full, c);
    }
    return out;
}

AlgebraElement inject_right(const AlgebraSpec& tensor_spec, const AlgebraElement& b)
{
    if (tensor_spec.kind() != AlgebraSpec::Kind::tensor || !(tensor_spec.right() == b.spec())) {
        throw std::invalid_argument("inject_right: element does not belong to the right factor");
    }
    AlgebraElement out(tensor_spec);
    const Monomial one_left = identity_monomial(tensor_spec.left());
    for (const auto& [m, c] : b.terms()) {
        Monomial full = one_left;
        full.insert(full.end(), m.begin(), m.end());
        out.add_term(full, c);
    }
    return out;
}

MomentSequence moments_of(const AlgebraElement& a, int K)
{
    std::vector<CycloNum> mu;
    AlgebraElement p = a;
    for (int k = 1; k <= K; ++k) {
        mu.push_back(phi(p));
        if (k < K) {
            p = p * a;
        }
    }
    return MomentSequence(std::move(mu));
}

// --- Independence and linearization ----------------------------------------

namespace {

std::vector<AlgebraElement> words_up_to(const AlgebraSpec& spec, std::span<const AlgebraElement> gens, int depth)
{
    std::vector<AlgebraElement> all{AlgebraElement::scalar(spec, CycloNum(1))};
    std::vector<AlgebraElement> layer = all;
    for (int len = 1; len <= depth; ++len) {
        std::vector<AlgebraElement> next;
        for (const auto& w : layer) {
            for (const auto& g : gens) {
                next.push_back(w * g);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return all;
}

void require_homogeneous(std::span<const AlgebraElement> gens, const AlgebraSpec& spec)
{
    for (const auto& g : gens) {
        if (!(g.spec() == spec)) {
            throw std::invalid_argument("generators belong to different models");
        }
        if (degree_of(g).kind == Degree::Kind::inhomogeneous) {
            throw HypothesisError("generator " + g.to_string() + " is not homogeneous");
        }
    }
}

}  // namespace

IndependenceReport check_graded_independence(std::span<const AlgebraElement> a_gens,
                                             std::span<const AlgebraElement> b_gens, int depth)
{
    if (a_gens.empty() || b_gens.empty()) {
        throw std::invalid_argument("check_graded_independence: empty generator list");
    }
    const AlgebraSpec spec = a_gens.front().spec();
    require_homogeneous(a_gens, spec);
    require_homogeneous(b_gens, spec);
    const auto a_words = words_up_to(spec, a_gens, depth);
    const auto b_words = words_up_to(spec, b_gens, depth);
    IndependenceReport report;
    for (const auto& a : a_words) {
        const Degree da = degree_of(a);
        if (da.kind == Degree::Kind::zero) {
            continue;
        }
        for (const auto& b : b_words) {
            const Degree db = degree_of(b);
            if (db.kind == Degree::Kind::zero) {
                continue;
            }
            const AlgebraElement ab = a * b;
            const AlgebraElement ba = b * a;
            const CycloNum& phase = spec.q_power(static_cast<long long>(da.residue) * db.residue);
            if (!(ba == phase * ab)) {
                report.independent = false;
                report.counterexample = "b*a != q^(" + std::to_string(da.residue) + "*" +
                                        std::to_string(db.residue) + ") a*b for a = " + a.to_string() +
                                        ", b = " + b.to_string();
                return report;
            }
            if (!(phi(ab) == phi(a) * phi(b))) {
                report.independent = false;
                report.counterexample = "phi(a*b) != phi(a)*phi(b) for a = " + a.to_string() +
                                        ", b = " + b.to_string();
                return report;
            }
        }
    }
    return report;
}

namespace {

// Common degree of a and b (zero elements adopt the other's degree).
int common_degree(const AlgebraElement& a, const AlgebraElement& b, const char* what)
{
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument(std::string(what) + ": elements belong to different models");
    }
    const Degree da = degree_of(a);
    const Degree db = degree_of(b);
    if (da.kind == Degree::Kind::inhomogeneous || db.kind == Degree::Kind::inhomogeneous) {
        throw HypothesisError(std::string(what) + ": elements must be homogeneous");
    }
    if (da.kind == Degree::Kind::homogeneous && db.kind == Degree::Kind::homogeneous &&
        da.residue != db.residue) {
        throw HypothesisError(std::string(what) + ": degrees differ (" + std::to_string(da.residue) + " vs " +
                              std::to_string(db.residue) + ")");
    }
    return da.kind == Degree::Kind::homogeneous ? da.residue : db.residue;
}

void require_independent(const AlgebraElement& a, const AlgebraElement& b, const char* what)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    const std::vector<AlgebraElement> ag{a}, bg{b};
    const auto report = check_graded_independence(ag, bg, 2);
    if (!report.independent) {
        throw HypothesisError(std::string(what) + ": elements are not graded independent: " +
                              report.counterexample);
    }
}

}  // namespace

bool verify_power_rule(const AlgebraElement& a, const AlgebraElement& b)
{
    const int r = common_degree(a, b, "verify_power_rule");
    require_independent(a, b, "verify_power_rule");
    const int n = a.spec().n();
    const int period = n / std::gcd(r, n);
    return power(a + b, period) == power(a, period) + power(b, period);
}

LinearizationReport verify_linearization(const AlgebraElement& a, const AlgebraElement& b, int K)
{
    const int r = common_degree(a, b, "verify_linearization");
    require_independent(a, b, "verify_linearization");
    const AlgebraSpec& spec = a.spec();
    LinearizationReport report;
    report.degree = r;
    report.r_a = graded_r_transform(moments_of(a, K), r, spec.n(), spec.q(), K);
    report.r_b = graded_r_transform(moments_of(b, K), r, spec.n(), spec.q(), K);
    report.r_sum = graded_r_transform(moments_of(a + b, K), r, spec.n(), spec.q(), K);
    report.additive = report.r_sum == report.r_a + report.r_b;
    return report;
}

}  // namespace gradind
