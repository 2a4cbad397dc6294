#pragma once

/// Critical points of potentials: gradient evaluation, verification, closed-form solvers
/// for the theta and blowup families, Newton lifting, Hessians and certificates.

#include "novipot/potentials.hpp"

#include <optional>
#include <string>
#include <vector>

namespace novipot {

/// Residual tolerance used when no floor is given: gradients must vanish mod T^5.
inline const Rational default_verify_floor{5};

/// The verification floor used on a lattice: default_verify_floor, capped at cutoff - 1.
Rational verify_floor_for(const Lattice& lattice);

struct CriticalPoint {
    std::vector<std::string> variables;  // declared order of the potential
    Assignment assignment;
    std::vector<int> signs;
    std::map<std::string, Valuation> valuations;
    Valuation residual_valuation = Valuation::infinite();
    Rational verified_to{0};
    bool verified = false;
    /// Set when 1 + L vanishes; such points carry no assignment and are never verified.
    bool degenerate = false;

    const NovikovElement& at(const std::string& var) const;
    nlohmann::json to_json() const;
};

/// One log-derivative per variable, in declared order.
std::vector<LaurentPoly> gradient(const LaurentPoly& p);

/// Evaluates gradients and Hessians (in log coordinates) of a fixed polynomial. Every
/// monomial is evaluated once per point and reused by all components; powers of the first
/// variable are factored out of each component.
class GradientEvaluator {
public:
    /// Reuse across calls on one thread: powers of recently seen coordinate values, and the
    /// monomial values for the last seen values of every coordinate but the first.
    struct Cache {
        std::vector<std::vector<std::pair<NovikovElement, std::map<int, NovikovElement>>>> powers;
        std::vector<NovikovElement> key;
        std::vector<NovikovElement> inner;
    };

    explicit GradientEvaluator(const LaurentPoly& p);

    const LaurentPoly& polynomial() const noexcept { return p_; }
    std::vector<NovikovElement> gradient(const Assignment& point, Cache* cache = nullptr) const;
    /// H_ij = z_j d_j (z_i d_i p), row-major.
    std::vector<std::vector<NovikovElement>> hessian(const Assignment& point, Cache* cache = nullptr) const;

private:
    struct Values {
        std::vector<NovikovElement> own_inner;
        const std::vector<NovikovElement>* inner = nullptr;  // coefficient times all factors but the first
        std::vector<NovikovElement> first_power;             // per group
    };
    Values monomial_values(const Assignment& point, Cache* cache) const;

    LaurentPoly p_;
    std::vector<Monomial> monomials_;
    std::vector<NovikovElement> coefficients_;
    std::vector<std::vector<std::size_t>> groups_;  // monomial indices by exponent of the first variable
    std::vector<int> first_exponents_;
};

/// Evaluates every gradient component at the point; verified iff each vanishes mod T^floor.
CriticalPoint verify(const LaurentPoly& p, const Assignment& point, const Rational& floor = default_verify_floor);
CriticalPoint verify(const GradientEvaluator& g, const Assignment& point, const Rational& floor = default_verify_floor,
                     GradientEvaluator::Cache* cache = nullptr);

/// The 2^n closed-form points of theta_bulk(n, k, rho) in canonical sign order
/// (lexicographic, +1 before -1, first sign most significant). Points with 1 + L = 0 are
/// returned tagged degenerate; the rest are verified at `floor`. `threads` only affects
/// scheduling.
std::vector<CriticalPoint> solve_theta(const Lattice& lattice, int n, const std::vector<int>& k, const Rational& rho,
                                       const Rational& floor = default_verify_floor, int threads = 1);

/// 1 + sum_i eps_i exp((k_i/2) T^rho) for i < n.
NovikovElement one_plus_l(const Lattice& lattice, const std::vector<int>& signs, const std::vector<int>& k,
                          const Rational& rho);

/// n = 2m, exactly m-1 of eps_1..eps_{n-1} are +1, and sum eps_i k_i != 0.
bool valuation_predicate(const std::vector<int>& signs, const std::vector<int>& k);
/// 1 + sum_{i<n} eps_i = 0.
bool balanced(const std::vector<int>& signs);

enum class ValuationClass { degenerate, half, half_plus_rho, deeper };
std::string to_string(ValuationClass c);

struct ValuationRow {
    std::vector<int> signs;
    std::optional<Rational> u_valuation;  // absent for degenerate points
    ValuationClass classification = ValuationClass::half;
    bool predicate = false;
    /// False on a balanced vector with sum eps_i k_i = 0, where the closed valuation formula is not claimed.
    bool hypothesis_holds = true;
    /// The computed valuation agrees with the closed formula whenever it applies.
    bool consistent = true;

    nlohmann::json to_json() const;
};

std::vector<ValuationRow> valuation_report(const std::vector<CriticalPoint>& points, const std::vector<int>& k,
                                           const Rational& rho);

struct Certificate {
    PotentialSpec spec;
    CriticalPoint point;
    Rational s;
    Rational rho;
    Rational u_valuation;

    nlohmann::json to_json() const;
};

struct CertifyResult {
    std::optional<Certificate> certificate;
    std::vector<ValuationRow> report;
    std::string reason;  // why certification failed

    bool ok() const { return certificate.has_value(); }
    nlohmann::json to_json() const;
};

/// Sets rho = s - 1/2, solves theta_bulk(n, k, rho) and certifies the first verified point
/// with val(u) = s. For s = 1/2 the bulk must be trivial and any nondegenerate point works.
CertifyResult certify(int n, const Rational& s, const std::vector<int>& k, const Rational& cutoff = Lattice::default_cutoff,
                      const Rational& floor = Lattice::default_floor, int threads = 1);

/// Critical points of blowup_bulk(eps, rho) on the branch e^{T^rho} w^2 = 1: signs are
/// (sign of w, sign of u) in canonical order. Every point is verified at `floor`.
std::vector<CriticalPoint> solve_blowup(const Lattice& lattice, const Rational& eps, const Rational& rho,
                                        const Rational& floor = default_verify_floor);

/// Newton iteration in log coordinates from `start` until the gradient vanishes mod
/// T^target. Throws LiftFailure on a singular Hessian or when the residual stalls.
CriticalPoint hensel_lift(const LaurentPoly& p, const Assignment& start, const Rational& target);

struct HessianReport {
    bool nondegenerate = false;
    Valuation determinant_valuation = Valuation::infinite();
};

/// Determinant of the log-coordinate Hessian at the point. Throws PrecisionError when the
/// determinant vanishes to its known precision.
HessianReport hessian_nondegenerate(const LaurentPoly& p, const Assignment& point);
HessianReport hessian_nondegenerate(const GradientEvaluator& g, const Assignment& point);

/// Determinant by elimination with minimal-valuation pivots.
NovikovElement determinant(std::vector<std::vector<NovikovElement>> m);

/// Solves m x = b by elimination; throws LiftFailure when m is singular to known precision.
std::vector<NovikovElement> solve_linear(std::vector<std::vector<NovikovElement>> m, std::vector<NovikovElement> b);

/// The 2^n sign points z_i = eps_i T^{1/2} e^{l_i T^rho / 2} of clifford(n, l, rho).
std::vector<Assignment> clifford_points(const Lattice& lattice, int n, const std::vector<int>& l, const Rational& rho);

struct CliffordSummary {
    int points = 0;
    int verified = 0;
    int nondegenerate = 0;
    std::vector<CriticalPoint> details;
};

CliffordSummary clifford_qh(const Lattice& lattice, int n, const std::vector<int>& l, const Rational& rho,
                            const Rational& floor = default_verify_floor, int threads = 1);

/// All sign vectors of length n in canonical order.
std::vector<std::vector<int>> sign_vectors(int n);

}  // namespace novipot
