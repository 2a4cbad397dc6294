#include "novipot/novikov.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace novipot {

// ---------------------------------------------------------------------------
// Lattice

namespace {

std::int64_t checked_steps(const Rational& exponent, std::int64_t denominator) {
    Rational scaled = exponent * denominator;
    if (!is_integer(scaled)) {
        throw LatticeError("exponent " + to_string(exponent) + " is not on the lattice (1/" +
                           std::to_string(denominator) + ")Z");
    }
    return to_int64(scaled);
}

std::int64_t lcm_denominator(std::int64_t acc, const Rational& q) {
    return std::lcm(acc, to_int64(Rational(q.get_den())));
}

}  // namespace

Lattice::Lattice(std::int64_t denominator, const Rational& cutoff, const Rational& floor)
    : denominator_(denominator) {
    if (denominator < 1) throw LatticeError("lattice denominator must be positive");
    if (cutoff <= 0) throw LatticeError("cutoff must be positive");
    if (floor < 0 || floor > cutoff) throw LatticeError("floor must lie in [0, cutoff]");
    cutoff_steps_ = checked_steps(cutoff, denominator);
    floor_steps_ = checked_steps(floor, denominator);
}

Lattice Lattice::for_parameters(const std::vector<Rational>& parameters, const Rational& cutoff,
                                const Rational& floor) {
    std::int64_t d = 2;
    d = lcm_denominator(d, cutoff);
    d = lcm_denominator(d, floor);
    for (const auto& p : parameters) d = lcm_denominator(d, p);
    return Lattice(d, cutoff, floor);
}

bool Lattice::contains(const Rational& exponent) const {
    return is_integer(Rational(exponent * denominator_));
}

std::int64_t Lattice::steps(const Rational& exponent) const { return checked_steps(exponent, denominator_); }

Rational Lattice::exponent(std::int64_t steps) const {
    Rational q(Integer(std::to_string(steps), 10), Integer(std::to_string(denominator_), 10));
    q.canonicalize();
    return q;
}

Lattice Lattice::with_floor(const Rational& floor) const { return Lattice(denominator_, cutoff(), floor); }

Lattice Lattice::with_cutoff(const Rational& cutoff) const {
    return Lattice(denominator_, cutoff, std::min(floor(), cutoff));
}

// ---------------------------------------------------------------------------
// Valuation

const Rational& Valuation::value() const {
    if (!finite_) throw DomainError("valuation is +infinity");
    return value_;
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) {
        if (a.finite_ == b.finite_) return std::strong_ordering::equal;
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Valuation::to_string() const { return finite_ ? novipot::to_string(value_) : "inf"; }

nlohmann::json Valuation::to_json() const {
    return finite_ ? rational_to_json(value_) : nlohmann::json("inf");
}

// ---------------------------------------------------------------------------
// NovikovElement: construction

NovikovElement NovikovElement::make(const Lattice& lattice, const std::vector<Term>& terms,
                                    const Rational& precision) {
    if (precision > lattice.cutoff()) {
        throw DomainError("precision " + novipot::to_string(precision) + " exceeds the cutoff " +
                          novipot::to_string(lattice.cutoff()));
    }
    NovikovElement out(lattice, lattice.steps(precision));
    std::map<std::int64_t, Rational> merged;
    for (const auto& t : terms) {
        const std::int64_t s = lattice.steps(t.exponent);
        if (s >= out.precision_) continue;
        merged[s] += t.coefficient;
    }
    Integer den = 1;
    for (const auto& [s, c] : merged) {
        if (c != 0) den = lcm(den, c.get_den());
    }
    for (const auto& [s, c] : merged) {
        if (c == 0) continue;
        out.steps_.push_back(s);
        out.numerators_.push_back(c.get_num() * (den / c.get_den()));
    }
    out.denominator_ = den;
    out.normalize();
    return out;
}

NovikovElement NovikovElement::make(const Lattice& lattice, const std::vector<Term>& terms) {
    return make(lattice, terms, lattice.cutoff());
}

NovikovElement NovikovElement::zero(const Lattice& lattice) { return NovikovElement(lattice, lattice.cutoff_steps()); }

NovikovElement NovikovElement::constant(const Lattice& lattice, const Rational& c) {
    return monomial(lattice, c, 0);
}

NovikovElement NovikovElement::monomial(const Lattice& lattice, const Rational& c, const Rational& exponent) {
    return make(lattice, {{exponent, c}});
}

NovikovElement NovikovElement::from_dense(const Lattice& lattice, std::int64_t base,
                                          const std::vector<Rational>& coefficients, std::int64_t precision) {
    NovikovElement out(lattice, precision);
    Integer den = 1;
    for (const auto& c : coefficients) {
        if (c != 0) den = lcm(den, c.get_den());
    }
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const std::int64_t s = base + static_cast<std::int64_t>(k);
        if (s >= precision) break;
        const Rational& c = coefficients[k];
        if (c == 0) continue;
        out.steps_.push_back(s);
        out.numerators_.push_back(c.get_num() * (den / c.get_den()));
    }
    out.denominator_ = den;
    out.normalize();
    return out;
}

void NovikovElement::normalize() {
    if (steps_.empty()) {
        numerators_.clear();
        denominator_ = 1;
        return;
    }
    Integer g = denominator_;
    for (const auto& n : numerators_) {
        if (g == 1) break;
        g = gcd(g, n);
    }
    if (g != 1) {
        for (auto& n : numerators_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
    }
}

void NovikovElement::require_floor(const char* op) const {
    if (precision_ < lattice_.floor_steps()) {
        throw PrecisionError(std::string(op) + ": result precision " + novipot::to_string(precision()) +
                             " is below the floor " + novipot::to_string(lattice_.floor()));
    }
}

// ---------------------------------------------------------------------------
// Accessors

std::vector<NovikovElement::Term> NovikovElement::terms() const {
    std::vector<Term> out;
    out.reserve(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) out.push_back({exponent(i), coefficient(i)});
    return out;
}

Rational NovikovElement::coefficient(std::size_t i) const {
    Rational c(numerators_[i], denominator_);
    c.canonicalize();
    return c;
}

Valuation NovikovElement::valuation() const {
    if (steps_.empty()) return Valuation::infinite();
    return Valuation(lattice_.exponent(steps_.front()));
}

Rational NovikovElement::leading_coefficient() const { return steps_.empty() ? Rational(0) : coefficient(0); }

Rational NovikovElement::coefficient_at(const Rational& e) const {
    const std::int64_t s = lattice_.steps(e);
    const auto it = std::lower_bound(steps_.begin(), steps_.end(), s);
    if (it == steps_.end() || *it != s) return 0;
    return coefficient(static_cast<std::size_t>(it - steps_.begin()));
}

std::int64_t NovikovElement::effective_valuation_steps() const {
    return steps_.empty() ? precision_ : steps_.front();
}

NovikovElement NovikovElement::truncated(const Rational& p) const {
    const std::int64_t ps = std::min(lattice_.steps(p), precision_);
    NovikovElement out(lattice_, ps);
    for (std::size_t i = 0; i < steps_.size() && steps_[i] < ps; ++i) {
        out.steps_.push_back(steps_[i]);
        out.numerators_.push_back(numerators_[i]);
    }
    out.denominator_ = denominator_;
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// Ring operations

namespace {

void require_same_lattice(const Lattice& a, const Lattice& b) {
    if (!(a == b)) throw LatticeError("operands live on different lattices");
}

}  // namespace

NovikovElement NovikovElement::operator-() const {
    NovikovElement out = *this;
    for (auto& n : out.numerators_) n = -n;
    return out;
}

NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
    require_same_lattice(a.lattice_, b.lattice_);
    const std::int64_t p = std::min(a.precision_, b.precision_);
    NovikovElement out(a.lattice_, p);
    const Integer den = lcm(a.denominator_, b.denominator_);
    const Integer fa = den / a.denominator_;
    const Integer fb = den / b.denominator_;
    std::size_t i = 0;
    std::size_t j = 0;
    out.steps_.reserve(a.steps_.size() + b.steps_.size());
    out.numerators_.reserve(a.steps_.size() + b.steps_.size());
    while (i < a.steps_.size() || j < b.steps_.size()) {
        const std::int64_t sa = i < a.steps_.size() ? a.steps_[i] : INT64_MAX;
        const std::int64_t sb = j < b.steps_.size() ? b.steps_[j] : INT64_MAX;
        const std::int64_t s = std::min(sa, sb);
        if (s >= p) break;
        Integer n = 0;
        if (sa == s) n += a.numerators_[i++] * fa;
        if (sb == s) n += b.numerators_[j++] * fb;
        if (n != 0) {
            out.steps_.push_back(s);
            out.numerators_.push_back(std::move(n));
        }
    }
    out.denominator_ = den;
    out.normalize();
    out.require_floor("add");
    return out;
}

NovikovElement operator-(const NovikovElement& a, const NovikovElement& b) { return a + (-b); }

namespace {

// Below this many terms per factor the schoolbook convolution is faster.
constexpr std::size_t kKroneckerThreshold = 8;

// Writes sum c_i 2^{64 w i} into out; null or zero entries are skipped.
void kronecker_pack(mpz_t out, const std::vector<const Integer*>& c, std::size_t w) {
    std::vector<mp_limb_t> pos(c.size() * w + 1, 0), neg(c.size() * w + 1, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == nullptr || *c[i] == 0) continue;
        mpz_srcptr z = c[i]->get_mpz_t();
        const mp_limb_t* limbs = mpz_limbs_read(z);
        auto& dst = mpz_sgn(z) > 0 ? pos : neg;
        any_neg = any_neg || mpz_sgn(z) < 0;
        std::copy(limbs, limbs + mpz_size(z), dst.begin() + static_cast<std::ptrdiff_t>(i * w));
    }
    mpz_t p;
    mpz_roinit_n(p, pos.data(), static_cast<mp_size_t>(pos.size()));
    if (!any_neg) {
        mpz_set(out, p);
        return;
    }
    mpz_t q;
    mpz_roinit_n(q, neg.data(), static_cast<mp_size_t>(neg.size()));
    mpz_sub(out, p, q);
}

// Coefficients 0 .. terms-1 of a packed product, each of absolute value below 2^{64 w - 1}.
std::vector<Integer> kronecker_unpack(const mpz_t product, std::size_t w, std::size_t terms) {
    std::vector<Integer> out(terms);
    const int sign = mpz_sgn(product);
    if (sign == 0) return out;
    const mp_limb_t* limbs = mpz_limbs_read(product);
    const std::size_t size = mpz_size(product);
    Integer half, full;
    mpz_setbit(half.get_mpz_t(), 64 * w - 1);
    mpz_setbit(full.get_mpz_t(), 64 * w);
    bool carry = false;
    for (std::size_t i = 0; i < terms; ++i) {
        const std::size_t lo = i * w;
        if (lo >= size && !carry) break;
        Integer& v = out[i];
        if (lo < size) {
            mpz_t d;
            mpz_roinit_n(d, limbs + lo, static_cast<mp_size_t>(std::min(w, size - lo)));
            mpz_set(v.get_mpz_t(), d);
        }
        if (carry) v += 1;
        carry = v >= half;
        if (carry) v -= full;
        if (sign < 0) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    }
    return out;
}

std::size_t max_bits(const std::vector<const Integer*>& c) {
    std::size_t bits = 0;
    for (const auto* z : c) {
        if (z != nullptr && *z != 0) bits = std::max(bits, mpz_sizeinbase(z->get_mpz_t(), 2));
    }
    return bits;
}

/// First `terms` coefficients of the product of two dense coefficient lists (null = 0).
std::vector<Integer> convolve(const std::vector<const Integer*>& a, const std::vector<const Integer*>& b,
                              std::size_t terms) {
    auto count = [](const std::vector<const Integer*>& c) {
        return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const Integer* z) { return z != nullptr && *z != 0; }));
    };
    if (count(a) >= kKroneckerThreshold && count(b) >= kKroneckerThreshold) {
        std::size_t bits = max_bits(a) + max_bits(b) + 2;
        for (std::size_t m = std::min(a.size(), b.size()); m > 1; m >>= 1) ++bits;
        const std::size_t w = bits / 64 + 1;
        Integer pa, pb;
        kronecker_pack(pa.get_mpz_t(), a, w);
        kronecker_pack(pb.get_mpz_t(), b, w);
        pa *= pb;
        return kronecker_unpack(pa.get_mpz_t(), w, terms);
    }
    std::vector<Integer> acc(terms);
    for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
        if (a[i] == nullptr || *a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) {
            if (b[j] == nullptr || *b[j] == 0) continue;
            mpz_addmul(acc[i + j].get_mpz_t(), a[i]->get_mpz_t(), b[j]->get_mpz_t());
        }
    }
    return acc;
}

}  // namespace

NovikovElement operator*(const NovikovElement& a, const NovikovElement& b) {
    require_same_lattice(a.lattice_, b.lattice_);
    const std::int64_t va = a.effective_valuation_steps();
    const std::int64_t vb = b.effective_valuation_steps();
    const std::int64_t p = std::min({a.precision_ + vb, b.precision_ + va, a.lattice_.cutoff_steps()});
    NovikovElement out(a.lattice_, p);
    if (!a.steps_.empty() && !b.steps_.empty() && va + vb < p) {
        const std::int64_t base = va + vb;
        const auto terms = static_cast<std::size_t>(p - base);
        auto dense = [terms](const NovikovElement& x, std::int64_t v) {
            std::vector<const Integer*> d;
            for (std::size_t i = 0; i < x.steps_.size(); ++i) {
                const auto k = static_cast<std::size_t>(x.steps_[i] - v);
                if (k >= terms) break;
                if (d.size() <= k) d.resize(k + 1, nullptr);
                d[k] = &x.numerators_[i];
            }
            return d;
        };
        auto acc = convolve(dense(a, va), dense(b, vb), terms);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (acc[k] != 0) {
                out.steps_.push_back(base + static_cast<std::int64_t>(k));
                out.numerators_.push_back(std::move(acc[k]));
            }
        }
        out.denominator_ = a.denominator_ * b.denominator_;
        out.normalize();
    }
    out.require_floor("mul");
    return out;
}

NovikovElement NovikovElement::scaled(const Rational& c) const {
    NovikovElement out(lattice_, precision_);
    if (c == 0) return out;
    out.steps_ = steps_;
    out.numerators_ = numerators_;
    for (auto& n : out.numerators_) n *= c.get_num();
    out.denominator_ = denominator_ * c.get_den();
    out.normalize();
    return out;
}

bool operator==(const NovikovElement& a, const NovikovElement& b) {
    return a.lattice_ == b.lattice_ && a.precision_ == b.precision_ && a.steps_ == b.steps_ &&
           a.denominator_ == b.denominator_ && a.numerators_ == b.numerators_;
}

bool congruent(const NovikovElement& a, const NovikovElement& b) { return (a - b).is_zero(); }

// ---------------------------------------------------------------------------
// Inverse, exp, sqrt

// Coefficients of a / (c T^v) at relative steps 0 .. relative_precision-1, c the leading coefficient.
std::vector<Rational> NovikovElement::dense_unit_part(std::int64_t relative_precision) const {
    std::vector<Rational> out(static_cast<std::size_t>(std::max<std::int64_t>(relative_precision, 0)));
    const std::int64_t v = steps_.front();
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const std::int64_t k = steps_[i] - v;
        if (k >= relative_precision) break;
        out[static_cast<std::size_t>(k)] = Rational(numerators_[i], numerators_.front());
        out[static_cast<std::size_t>(k)].canonicalize();
    }
    return out;
}

namespace {

// Dense truncated series with integer numerators over one denominator.
struct DenseSeries {
    std::vector<Integer> num;
    Integer den = 1;
};

void reduce(DenseSeries& s) {
    Integer g = s.den;
    for (const auto& n : s.num) {
        if (g == 1) return;
        if (n != 0) g = gcd(g, n);
    }
    if (g == 1) return;
    for (auto& n : s.num) {
        if (n != 0) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    }
    mpz_divexact(s.den.get_mpz_t(), s.den.get_mpz_t(), g.get_mpz_t());
}

DenseSeries dense_mul(const DenseSeries& a, const DenseSeries& b, std::size_t terms) {
    auto pointers = [](const DenseSeries& x) {
        std::vector<const Integer*> d;
        for (const auto& n : x.num) d.push_back(&n);
        return d;
    };
    DenseSeries out;
    out.num = convolve(pointers(a), pointers(b), terms);
    out.den = a.den * b.den;
    reduce(out);
    return out;
}

}  // namespace

NovikovElement inverse(const NovikovElement& a) {
    if (a.is_zero()) throw DivisionByZeroError("inverse of an element that is zero mod T^" + to_string(a.precision()));
    const std::int64_t v = a.steps_.front();
    const std::int64_t p = std::min(a.precision_ - 2 * v, a.lattice_.cutoff_steps());
    const std::int64_t rel = p + v;
    if (rel <= 0) {
        NovikovElement out(a.lattice_, p);
        out.require_floor("inverse");
        return out;
    }
    const auto terms = static_cast<std::size_t>(rel);
    DenseSeries unit;
    unit.num.resize(terms);
    for (std::size_t i = 0; i < a.steps_.size(); ++i) {
        const auto k = static_cast<std::size_t>(a.steps_[i] - v);
        if (k >= terms) break;
        unit.num[k] = a.numerators_[i];
    }
    unit.den = a.denominator_;
    // Newton: h <- h (2 - unit h), doubling the number of correct terms
    DenseSeries h;
    h.num = {a.denominator_};
    h.den = a.numerators_.front();
    if (h.den < 0) {
        h.den = -h.den;
        h.num[0] = -h.num[0];
    }
    reduce(h);
    for (std::size_t known = 1; known < terms;) {
        known = std::min(2 * known, terms);
        DenseSeries e = dense_mul(unit, h, known);
        // 2 - e, written over e.den
        for (auto& n : e.num) n = -n;
        e.num[0] += 2 * e.den;
        h = dense_mul(h, e, known);
    }
    NovikovElement out(a.lattice_, p);
    for (std::size_t k = 0; k < h.num.size(); ++k) {
        const std::int64_t s = static_cast<std::int64_t>(k) - v;
        if (s >= p) break;
        if (h.num[k] == 0) continue;
        out.steps_.push_back(s);
        out.numerators_.push_back(std::move(h.num[k]));
    }
    out.denominator_ = h.den;
    out.normalize();
    out.require_floor("inverse");
    return out;
}

NovikovElement exp(const NovikovElement& a) {
    if (a.is_zero()) {
        NovikovElement out = NovikovElement::constant(a.lattice_, 1).truncated(a.precision());
        out.require_floor("exp");
        return out;
    }
    if (a.steps_.front() <= 0) {
        throw DomainError("exp needs an argument of positive valuation, got valuation " + a.valuation().to_string());
    }
    const std::int64_t p = std::min(a.precision_, a.lattice_.cutoff_steps());
    if (p <= 0) {
        NovikovElement out(a.lattice_, p);
        out.require_floor("exp");
        return out;
    }
    // k f_k = sum_j j a_j f_{k-j}, indices in lattice steps.
    std::vector<Rational> f(static_cast<std::size_t>(p));
    std::vector<std::pair<std::int64_t, Rational>> weighted;
    for (std::size_t i = 0; i < a.steps_.size(); ++i) {
        weighted.emplace_back(a.steps_[i], a.coefficient(i) * a.steps_[i]);
    }
    f[0] = 1;
    for (std::int64_t k = 1; k < p; ++k) {
        Rational acc = 0;
        for (const auto& [j, ja] : weighted) {
            if (j > k) break;
            const Rational& fk = f[static_cast<std::size_t>(k - j)];
            if (fk != 0) acc += ja * fk;
        }
        f[static_cast<std::size_t>(k)] = acc / k;
    }
    NovikovElement out = NovikovElement::from_dense(a.lattice_, 0, f, p);
    out.require_floor("exp");
    return out;
}

namespace {

bool rational_square_root(const Rational& q, Rational& root) {
    if (q <= 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
        return false;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace

NovikovElement sqrt(const NovikovElement& a) {
    if (a.is_zero()) {
        NovikovElement out(a.lattice_, a.precision_ / 2);
        out.require_floor("sqrt");
        return out;
    }
    const std::int64_t v = a.steps_.front();
    if (v % 2 != 0) {
        throw LatticeError("sqrt: valuation " + a.valuation().to_string() + " is not twice a lattice exponent");
    }
    Rational root;
    if (!rational_square_root(a.leading_coefficient(), root)) {
        throw FieldExtensionError("sqrt: leading coefficient " + to_string(a.leading_coefficient()) +
                                  " is not a square in Q");
    }
    const std::int64_t p = std::min(a.precision_ - v / 2, a.lattice_.cutoff_steps());
    const std::int64_t rel = p - v / 2;
    const std::vector<Rational> unit = a.dense_unit_part(std::min(rel, a.precision_ - v));
    // g^2 = unit, g_0 = 1:  2 g_k = unit_k - sum_{j=1}^{k-1} g_j g_{k-j}
    std::vector<Rational> g(static_cast<std::size_t>(std::max<std::int64_t>(rel, 0)));
    if (!g.empty()) g[0] = 1;
    for (std::size_t k = 1; k < g.size(); ++k) {
        Rational acc = k < unit.size() ? unit[k] : Rational(0);
        for (std::size_t j = 1; j < k; ++j) {
            if (g[j] != 0 && g[k - j] != 0) acc -= g[j] * g[k - j];
        }
        g[k] = acc / 2;
    }
    for (auto& c : g) c *= root;
    NovikovElement out = NovikovElement::from_dense(a.lattice_, v / 2, g, p);
    out.require_floor("sqrt");
    return out;
}

NovikovElement pow(const NovikovElement& a, std::int64_t n) {
    if (n < 0) return pow(inverse(a), -n);
    NovikovElement result = NovikovElement::constant(a.lattice(), 1);
    NovikovElement base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text and JSON

namespace {

std::string exponent_suffix(const Rational& e) {
    if (e == 1) return "T";
    return "T^{" + to_string(e) + "}";
}

}  // namespace

std::string NovikovElement::to_string() const {
    if (steps_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        Rational c = coefficient(i);
        const Rational e = exponent(i);
        const bool negative = c < 0;
        if (negative) c = -c;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += novipot::to_string(c);
        } else if (c == 1) {
            out += exponent_suffix(e);
        } else {
            out += novipot::to_string(c) + "*" + exponent_suffix(e);
        }
    }
    return out;
}

std::string NovikovElement::describe() const {
    return to_string() + " + O(" + exponent_suffix(precision()) + ")";
}

nlohmann::json NovikovElement::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const Rational e = exponent(i);
        const Rational c = coefficient(i);
        terms.push_back({integer_to_json(e.get_num()), integer_to_json(e.get_den()), integer_to_json(c.get_num()),
                         integer_to_json(c.get_den())});
    }
    return {{"terms", std::move(terms)}, {"precision", rational_to_json(precision())}};
}

NovikovElement NovikovElement::from_json(const Lattice& lattice, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.contains("precision")) {
        throw DomainError("Novikov element JSON needs 'terms' and 'precision'");
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4) throw DomainError("term must be [exp_num, exp_den, coef_num, coef_den]");
        terms.push_back({rational_from_json(nlohmann::json::array({t[0], t[1]})),
                         rational_from_json(nlohmann::json::array({t[2], t[3]}))});
    }
    return make(lattice, terms, rational_from_json(j.at("precision")));
}

}  // namespace novipot
