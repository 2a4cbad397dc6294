#include "novipot/critical.hpp"

#include <algorithm>
#include <thread>

namespace novipot {

namespace {

std::size_t worker_count(std::size_t count, int threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(std::max(threads, 1), count));
}

// Contiguous blocks so neighbouring items share a worker (and its cache); fn(i, worker).
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers = worker_count(count, threads);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, std::size_t{0});
        return;
    }
    const std::size_t block = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t * block; i < std::min(count, (t + 1) * block); ++i) fn(i, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Valuation of a residual: exact zero reports the precision it is known to.
Rational residual_of(const NovikovElement& x) {
    return x.is_zero() ? x.precision() : x.valuation().value();
}

NovikovElement shifted_down(const NovikovElement& x, const Rational& v) {
    std::vector<NovikovElement::Term> terms;
    for (auto t : x.terms()) {
        t.exponent -= v;
        terms.push_back(t);
    }
    return NovikovElement::make(x.lattice(), terms, x.precision() - v);
}

int sum_signed_weights(const std::vector<int>& signs, const std::vector<int>& k) {
    int total = 0;
    for (std::size_t i = 0; i + 1 < signs.size(); ++i) total += signs[i] * (i < k.size() ? k[i] : 0);
    return total;
}

nlohmann::json signs_json(const std::vector<int>& signs) { return nlohmann::json(signs); }

}  // namespace

Rational verify_floor_for(const Lattice& L) { return std::min(default_verify_floor, Rational(L.cutoff() - 1)); }

// ---------------------------------------------------------------------------
// CriticalPoint

const NovikovElement& CriticalPoint::at(const std::string& var) const {
    const auto it = assignment.find(var);
    if (it == assignment.end()) throw NameError("point has no value for '" + var + "'");
    return it->second;
}

nlohmann::json CriticalPoint::to_json() const {
    nlohmann::json vars = nlohmann::json::object();
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& v : variables) {
        const auto it = assignment.find(v);
        if (it == assignment.end()) continue;
        vars[v] = it->second.to_json();
        vals[v] = valuations.at(v).to_json();
    }
    nlohmann::json j{
        {"vars", vars},
        {"signs", signs_json(signs)},
        {"valuations", vals},
        {"verified", verified},
        {"degenerate", degenerate},
    };
    if (!degenerate) {
        j["residual_valuation"] = residual_valuation.to_json();
        j["verified_to"] = rational_to_json(verified_to);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Gradient

std::vector<LaurentPoly> gradient(const LaurentPoly& p) {
    std::vector<LaurentPoly> out;
    for (const auto& v : p.variables()) out.push_back(p.log_derivative(v));
    return out;
}

GradientEvaluator::GradientEvaluator(const LaurentPoly& p) : p_(p) {
    std::map<int, std::size_t> group_of;
    for (const auto& [m, c] : p.terms()) {
        const int e0 = m.empty() ? 0 : m[0];
        auto [it, fresh] = group_of.emplace(e0, groups_.size());
        if (fresh) {
            groups_.emplace_back();
            first_exponents_.push_back(e0);
        }
        groups_[it->second].push_back(monomials_.size());
        monomials_.push_back(m);
        coefficients_.push_back(c);
    }
}

GradientEvaluator::Values GradientEvaluator::monomial_values(const Assignment& point, Cache* cache) const {
    const auto& vars = p_.variables();
    const Lattice& L = p_.lattice();
    std::vector<const NovikovElement*> base(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = point.find(vars[i]);
        if (it == point.end()) throw NameError("no value for variable '" + vars[i] + "'");
        base[i] = &it->second;
    }
    std::vector<std::map<int, NovikovElement>> local(vars.size());
    if (cache != nullptr) cache->powers.resize(vars.size());
    auto cache_for = [&](std::size_t i) -> std::map<int, NovikovElement>& {
        if (cache == nullptr) return local[i];
        auto& seen = cache->powers[i];
        for (auto& [value, powers] : seen) {
            if (value == *base[i]) return powers;
        }
        if (seen.size() >= 4) seen.erase(seen.begin());
        seen.emplace_back(*base[i], std::map<int, NovikovElement>{});
        return seen.back().second;
    };
    auto power = [&](std::size_t i, int e) -> const NovikovElement& {
        auto& powers = cache_for(i);
        const auto hit = powers.find(e);
        if (hit != powers.end()) return hit->second;
        NovikovElement v = e == 1 ? *base[i] : e == -1 ? inverse(*base[i]) : pow(*base[i], e);
        return powers.emplace(e, std::move(v)).first->second;
    };
    Values out;
    bool reuse = cache != nullptr && cache->key.size() + 1 == vars.size() && !cache->inner.empty();
    for (std::size_t i = 1; reuse && i < vars.size(); ++i) reuse = cache->key[i - 1] == *base[i];
    if (!reuse) {
        std::vector<NovikovElement> inner;
        inner.reserve(monomials_.size());
        for (std::size_t t = 0; t < monomials_.size(); ++t) {
            std::optional<NovikovElement> acc;
            for (std::size_t i = 1; i < vars.size(); ++i) {
                const int e = monomials_[t][i];
                if (e == 0) continue;
                acc = acc ? *acc * power(i, e) : power(i, e);
            }
            inner.push_back(acc ? coefficients_[t] * *acc : coefficients_[t]);
        }
        if (cache != nullptr) {
            cache->key.clear();
            for (std::size_t i = 1; i < vars.size(); ++i) cache->key.push_back(*base[i]);
            cache->inner = std::move(inner);
        } else {
            out.own_inner = std::move(inner);
        }
    }
    out.inner = cache != nullptr ? &cache->inner : &out.own_inner;
    for (const int e : first_exponents_) {
        out.first_power.push_back(e == 0 || vars.empty() ? NovikovElement::constant(L, 1) : power(0, e));
    }
    return out;
}

std::vector<NovikovElement> GradientEvaluator::gradient(const Assignment& point, Cache* cache) const {
    const auto values = monomial_values(point, cache);
    const auto& inner = *values.inner;
    const std::size_t n = p_.variables().size();
    std::vector<NovikovElement> g(n, NovikovElement::zero(p_.lattice()));
    for (std::size_t grp = 0; grp < groups_.size(); ++grp) {
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<NovikovElement> sum;
            for (const std::size_t t : groups_[grp]) {
                const int e = monomials_[t][i];
                if (e == 0) continue;
                auto term = e == 1 ? inner[t] : inner[t].scaled(e);
                sum = sum ? *sum + term : std::move(term);
            }
            if (!sum) continue;
            g[i] += first_exponents_[grp] == 0 ? *sum : values.first_power[grp] * *sum;
        }
    }
    return g;
}

std::vector<std::vector<NovikovElement>> GradientEvaluator::hessian(const Assignment& point, Cache* cache) const {
    const auto values = monomial_values(point, cache);
    const auto& inner = *values.inner;
    const std::size_t n = p_.variables().size();
    std::vector<std::vector<NovikovElement>> h(n, std::vector<NovikovElement>(n, NovikovElement::zero(p_.lattice())));
    for (std::size_t grp = 0; grp < groups_.size(); ++grp) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                std::optional<NovikovElement> sum;
                for (const std::size_t t : groups_[grp]) {
                    const int e = monomials_[t][i] * monomials_[t][j];
                    if (e == 0) continue;
                    auto term = e == 1 ? inner[t] : inner[t].scaled(e);
                    sum = sum ? *sum + term : std::move(term);
                }
                if (!sum) continue;
                h[i][j] += first_exponents_[grp] == 0 ? *sum : values.first_power[grp] * *sum;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) h[i][j] = h[j][i];
    }
    return h;
}

CriticalPoint verify(const LaurentPoly& p, const Assignment& point, const Rational& floor) {
    return verify(GradientEvaluator(p), point, floor);
}

CriticalPoint verify(const GradientEvaluator& g, const Assignment& point, const Rational& floor,
                     GradientEvaluator::Cache* cache) {
    CriticalPoint cp;
    cp.variables = g.polynomial().variables();
    for (const auto& v : cp.variables) {
        const auto it = point.find(v);
        if (it == point.end()) throw NameError("no value for variable '" + v + "'");
        cp.assignment.emplace(v, it->second);
        cp.valuations.emplace(v, it->second.valuation());
    }
    const auto grad = g.gradient(point, cache);
    std::optional<Rational> residual;
    for (const auto& c : grad) {
        const Rational r = residual_of(c);
        if (!residual || r < *residual) residual = r;
    }
    cp.residual_valuation = residual ? Valuation(*residual) : Valuation::infinite();
    cp.verified_to = floor;
    cp.verified = cp.residual_valuation >= Valuation(floor);
    return cp;
}

// ---------------------------------------------------------------------------
// Theta family

std::vector<std::vector<int>> sign_vectors(int n) {
    std::vector<std::vector<int>> out;
    const std::size_t count = std::size_t{1} << n;
    out.reserve(count);
    for (std::size_t b = 0; b < count; ++b) {
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (b >> (n - 1 - i)) & 1U ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

bool balanced(const std::vector<int>& signs) {
    int total = 1;
    for (std::size_t i = 0; i + 1 < signs.size(); ++i) total += signs[i];
    return total == 0;
}

bool valuation_predicate(const std::vector<int>& signs, const std::vector<int>& k) {
    return signs.size() % 2 == 0 && balanced(signs) && sum_signed_weights(signs, k) != 0;
}

namespace {

std::vector<NovikovElement> half_bulk_exponentials(const Lattice& L, const std::vector<int>& k, const Rational& rho,
                                                   std::size_t n) {
    std::vector<NovikovElement> out;
    for (std::size_t i = 0; i < n; ++i) {
        const int ki = i < k.size() ? k[i] : 0;
        out.push_back(ki == 0 ? NovikovElement::constant(L, 1)
                              : exp(NovikovElement::monomial(L, Rational(ki, 2), rho)));
    }
    return out;
}

NovikovElement signed_sum(const Lattice& L, const std::vector<int>& signs, const std::vector<NovikovElement>& e) {
    NovikovElement acc = NovikovElement::constant(L, 1);
    for (std::size_t i = 0; i + 1 < signs.size(); ++i) acc += signs[i] > 0 ? e[i] : -e[i];
    return acc;
}

}  // namespace

NovikovElement one_plus_l(const Lattice& L, const std::vector<int>& signs, const std::vector<int>& k,
                          const Rational& rho) {
    return signed_sum(L, signs, half_bulk_exponentials(L, k, rho, signs.size()));
}

std::vector<CriticalPoint> solve_theta(const Lattice& L, int n, const std::vector<int>& k, const Rational& rho,
                                       const Rational& floor, int threads) {
    if (n < 2) throw DomainError("theta points need n >= 2");
    const auto p = theta_bulk(L, n, k, rho);
    const GradientEvaluator g(p);
    const auto vars = p.variables();
    const auto e = half_bulk_exponentials(L, k, rho, static_cast<std::size_t>(n));
    const auto root_t = NovikovElement::monomial(L, 1, Rational(1, 2));
    const auto u_scale = root_t * e[static_cast<std::size_t>(n - 1)];
    const auto signs = sign_vectors(n);

    std::vector<CriticalPoint> out(signs.size());
    std::vector<GradientEvaluator::Cache> caches(worker_count(signs.size(), threads));
    parallel_for(signs.size(), threads, [&](std::size_t b, std::size_t worker) {
        const auto& s = signs[b];
        const auto onepl = signed_sum(L, s, e);
        if (onepl.is_zero()) {
            CriticalPoint cp;
            cp.variables = vars;
            cp.signs = s;
            cp.degenerate = true;
            out[b] = std::move(cp);
            return;
        }
        Assignment point;
        for (int i = 1; i < n; ++i) {
            const auto& ei = e[static_cast<std::size_t>(i - 1)];
            point.emplace(vars[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i - 1)] > 0 ? ei : -ei);
        }
        const auto u = u_scale * onepl;
        point.emplace("u", s.back() > 0 ? u : -u);
        auto cp = verify(g, point, floor, &caches[worker]);
        cp.signs = s;
        out[b] = std::move(cp);
    });
    return out;
}

std::string to_string(ValuationClass c) {
    switch (c) {
        case ValuationClass::degenerate:
            return "degenerate (L = -1)";
        case ValuationClass::half:
            return "val-1/2";
        case ValuationClass::half_plus_rho:
            return "val-1/2+rho";
        case ValuationClass::deeper:
            return "deeper";
    }
    return "unknown";
}

nlohmann::json ValuationRow::to_json() const {
    nlohmann::json j{
        {"signs", signs_json(signs)},
        {"class", to_string(classification)},
        {"predicate", predicate},
        {"hypothesis_holds", hypothesis_holds},
        {"consistent", consistent},
    };
    j["u_valuation"] = u_valuation ? rational_to_json(*u_valuation) : nlohmann::json(nullptr);
    return j;
}

std::vector<ValuationRow> valuation_report(const std::vector<CriticalPoint>& points, const std::vector<int>& k,
                                           const Rational& rho) {
    std::vector<ValuationRow> rows;
    const Rational half(1, 2);
    for (const auto& cp : points) {
        ValuationRow row;
        row.signs = cp.signs;
        row.predicate = valuation_predicate(cp.signs, k);
        row.hypothesis_holds = !(balanced(cp.signs) && sum_signed_weights(cp.signs, k) == 0);
        if (cp.degenerate) {
            row.classification = ValuationClass::degenerate;
            row.consistent = !row.predicate;
        } else {
            const Rational v = cp.at("u").valuation().value();
            row.u_valuation = v;
            if (v == half) {
                row.classification = ValuationClass::half;
            } else if (v == half + rho) {
                row.classification = ValuationClass::half_plus_rho;
            } else {
                row.classification = ValuationClass::deeper;
            }
            if (row.hypothesis_holds) {
                row.consistent = (v != half) == row.predicate && (!row.predicate || v == half + rho);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Certificates

nlohmann::json Certificate::to_json() const {
    nlohmann::json cochain = nlohmann::json::object();
    for (const auto& v : point.variables) {
        const auto& value = point.at(v);
        const auto unit = shifted_down(value, value.valuation().value());
        cochain[v] = {
            {"unit", unit.to_json()},
            {"unit_text", unit.describe()},
            {"pairing", "b . d(beta_" + v + ") = Log(" + unit.to_string() + ")"},
        };
    }
    auto p = point.to_json();
    nlohmann::json j{
        {"spec", spec.to_json()},
        {"point", {{"vars", p["vars"]}, {"signs", p["signs"]}}},
        {"valuations", p["valuations"]},
        {"residual_valuation", p["residual_valuation"]},
        {"verified_to", p["verified_to"]},
        {"rho", rational_to_json(rho)},
        {"s", rational_to_json(s)},
        {"u_valuation", rational_to_json(u_valuation)},
        {"bounding_cochain", cochain},
        {"conclusion", "HF-nonzero"},
        {"citations", {"Cor. PotFloerHom", "Thm. FOOOnonDisp"}},
    };
    return j;
}

nlohmann::json CertifyResult::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report) rows.push_back(r.to_json());
    nlohmann::json j{{"certified", ok()}, {"valuation_report", rows}};
    if (certificate) {
        j["certificate"] = certificate->to_json();
    } else {
        j["reason"] = reason;
    }
    return j;
}

CertifyResult certify(int n, const Rational& s, const std::vector<int>& k_in, const Rational& cutoff,
                      const Rational& floor, int threads) {
    if (n < 2) throw DomainError("certify needs n >= 2");
    if (s < Rational(1, 2) || s >= 1) throw DomainError("s must lie in [1/2, 1)");
    if (!k_in.empty() && static_cast<int>(k_in.size()) != n) {
        throw DomainError("bulk weights must have length n (" + std::to_string(n) + ")");
    }
    std::vector<int> k = k_in;
    k.resize(static_cast<std::size_t>(n), 0);
    const bool monotone = s == Rational(1, 2);
    const bool trivial_bulk = std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
    if (monotone && !trivial_bulk) throw DomainError("s = 1/2 needs trivial bulk weights");

    PotentialSpec spec;
    spec.n = n;
    spec.s = s;
    if (monotone) {
        spec.family = Family::theta;
    } else {
        spec.family = Family::theta_bulk;
        spec.rho = s - Rational(1, 2);
        spec.bulk = k;
    }
    const Lattice L = spec.lattice(cutoff, floor);
    const auto points = solve_theta(L, n, k, spec.rho, verify_floor_for(L), threads);

    CertifyResult result;
    result.report = valuation_report(points, k, spec.rho);
    for (const auto& cp : points) {
        if (cp.degenerate || !cp.verified) continue;
        if (cp.at("u").valuation() != Valuation(s)) continue;
        result.certificate = Certificate{spec, cp, s, s - Rational(1, 2), s};
        return result;
    }
    if (n % 2 != 0) {
        result.reason = "n is odd: no sign vector balances 1 + sum eps_i, so every point has val(u) = 1/2";
    } else if (std::all_of(k.begin(), k.end() - 1, [](int x) { return x == 0; })) {
        result.reason = "k_1..k_{n-1} all vanish: balanced sign vectors are degenerate and the rest have val(u) = 1/2";
    } else {
        result.reason = "no verified critical point has val(u) = s";
    }
    return result;
}

// ---------------------------------------------------------------------------
// Blowup

std::vector<CriticalPoint> solve_blowup(const Lattice& L, const Rational& eps, const Rational& rho,
                                        const Rational& floor) {
    const GradientEvaluator g(blowup_bulk(L, eps, rho));
    const auto e = exp(NovikovElement::monomial(L, 1, rho));
    const auto c = exp(NovikovElement::monomial(L, Rational(-1, 2), rho));
    const auto one = NovikovElement::constant(L, 1);
    const auto t = NovikovElement::monomial(L, 1, 1);
    std::vector<CriticalPoint> out;
    for (int sw : {1, -1}) {
        const auto w = sw > 0 ? c : -c;
        const auto root = sqrt(t * (one + w) * (e + inverse(w)));
        for (int su : {1, -1}) {
            auto cp = verify(g, {{"u", su > 0 ? root : -root}, {"w", w}}, floor);
            cp.signs = {sw, su};
            out.push_back(std::move(cp));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over the Novikov field

namespace {

std::size_t pivot_row(const std::vector<std::vector<NovikovElement>>& m, std::size_t col) {
    std::size_t best = m.size();
    for (std::size_t r = col; r < m.size(); ++r) {
        if (m[r][col].is_zero()) continue;
        if (best == m.size() || m[r][col].valuation() < m[best][col].valuation()) best = r;
    }
    return best;
}

}  // namespace

NovikovElement determinant(std::vector<std::vector<NovikovElement>> m) {
    if (m.empty()) throw DimensionError("determinant of an empty matrix");
    const Lattice L = m[0][0].lattice();
    const std::size_t n = m.size();
    NovikovElement det = NovikovElement::constant(L, 1);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = pivot_row(m, c);
        if (r == n) return NovikovElement::zero(L);
        if (r != c) {
            std::swap(m[r], m[c]);
            det = -det;
        }
        det *= m[c][c];
        std::optional<NovikovElement> inv;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            if (!inv) inv = inverse(m[c][c]);
            const auto f = m[i][c] * *inv;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

std::vector<NovikovElement> solve_linear(std::vector<std::vector<NovikovElement>> m, std::vector<NovikovElement> b) {
    const std::size_t n = m.size();
    if (b.size() != n) throw DimensionError("right-hand side length differs from the matrix size");
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = pivot_row(m, c);
        if (r == n) throw LiftFailure("singular Jacobian at column " + std::to_string(c));
        std::swap(m[r], m[c]);
        std::swap(b[r], b[c]);
        const auto inv = inverse(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const auto f = m[i][c] * inv;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
            }
            b[i] -= f * b[c];
        }
    }
    std::vector<NovikovElement> x(n, NovikovElement::zero(m[0][0].lattice()));
    for (std::size_t c = n; c-- > 0;) {
        NovikovElement acc = b[c];
        for (std::size_t j = c + 1; j < n; ++j) {
            if (!m[c][j].is_zero()) acc -= m[c][j] * x[j];
        }
        x[c] = acc * inverse(m[c][c]);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Newton lifting and Hessians

namespace {
CriticalPoint newton(const LaurentPoly& p, const Assignment& start, const Rational& target);
}  // namespace

CriticalPoint hensel_lift(const LaurentPoly& p, const Assignment& start, const Rational& target) {
    try {
        return newton(p, start, target);
    } catch (const DivisionByZeroError& e) {
        throw LiftFailure(std::string("iterate left the torus: ") + e.what());
    }
}

namespace {

CriticalPoint newton(const LaurentPoly& p, const Assignment& start, const Rational& target) {
    const GradientEvaluator g(p);
    const auto& vars = p.variables();
    Assignment z;
    for (const auto& v : vars) {
        const auto it = start.find(v);
        if (it == start.end()) throw NameError("no starting value for '" + v + "'");
        z.emplace(v, it->second);
    }
    std::optional<Rational> best;
    int stalled = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const auto grad = g.gradient(z);
        Rational residual = target;
        for (const auto& c : grad) residual = std::min(residual, residual_of(c));
        if (residual >= target) return verify(g, z, target);
        if (best && residual <= *best) {
            if (++stalled >= 3) throw LiftFailure("residual stalled at T^" + to_string(*best));
        } else {
            best = residual;
            stalled = 0;
        }
        std::vector<NovikovElement> rhs;
        for (const auto& c : grad) rhs.push_back(-c);
        const auto delta = solve_linear(g.hessian(z), rhs);
        for (std::size_t j = 0; j < vars.size(); ++j) {
            auto& zj = z.at(vars[j]);
            zj = zj + zj * delta[j];
        }
    }
    throw LiftFailure("no convergence after 64 Newton steps");
}

}  // namespace

HessianReport hessian_nondegenerate(const LaurentPoly& p, const Assignment& point) {
    return hessian_nondegenerate(GradientEvaluator(p), point);
}

HessianReport hessian_nondegenerate(const GradientEvaluator& g, const Assignment& point) {
    const auto det = determinant(g.hessian(point));
    if (det.is_zero()) {
        throw PrecisionError("Hessian determinant vanishes mod T^" + to_string(det.precision()));
    }
    return {true, det.valuation()};
}

// ---------------------------------------------------------------------------
// Toric fibre

std::vector<Assignment> clifford_points(const Lattice& L, int n, const std::vector<int>& l, const Rational& rho) {
    const auto vars = clifford_variables(n);
    const auto root_t = NovikovElement::monomial(L, 1, Rational(1, 2));
    const auto e = half_bulk_exponentials(L, l, rho, static_cast<std::size_t>(n));
    std::vector<NovikovElement> z;
    for (int i = 0; i < n; ++i) z.push_back(root_t * e[static_cast<std::size_t>(i)]);
    std::vector<Assignment> out;
    for (const auto& s : sign_vectors(n)) {
        Assignment a;
        for (int i = 0; i < n; ++i) {
            const auto& zi = z[static_cast<std::size_t>(i)];
            a.emplace(vars[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i)] > 0 ? zi : -zi);
        }
        out.push_back(std::move(a));
    }
    return out;
}

CliffordSummary clifford_qh(const Lattice& L, int n, const std::vector<int>& l, const Rational& rho,
                            const Rational& floor, int threads) {
    const GradientEvaluator g(clifford(L, n, l, rho));
    const auto points = clifford_points(L, n, l, rho);
    const auto signs = sign_vectors(n);
    CliffordSummary summary;
    summary.points = static_cast<int>(points.size());
    summary.details.resize(points.size());
    std::vector<char> nondegenerate(points.size(), 0);
    std::vector<GradientEvaluator::Cache> caches(worker_count(points.size(), threads));
    parallel_for(points.size(), threads, [&](std::size_t i, std::size_t worker) {
        auto cp = verify(g, points[i], floor, &caches[worker]);
        cp.signs = signs[i];
        if (cp.verified) nondegenerate[i] = determinant(g.hessian(points[i], &caches[worker])).is_zero() ? 0 : 1;
        summary.details[i] = std::move(cp);
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        summary.verified += summary.details[i].verified ? 1 : 0;
        summary.nondegenerate += nondegenerate[i];
    }
    return summary;
}

}  // namespace novipot
