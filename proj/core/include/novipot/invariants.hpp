#pragma once

/// Symplectic invariants used to tell the tori apart: Maslov-2 area spectra, disk counts,
/// minimal-area counts and enumeration of higher-Maslov relative classes.

#include "novipot/rational.hpp"

#include <string>
#include <vector>

namespace novipot {

struct ThetaBlock {
    int k = 2;
    Rational s{1, 2};

    friend bool operator==(const ThetaBlock&, const ThetaBlock&) = default;
};

/// A product of theta blocks times n - sum(k_i) equator circles in (CP^1)^n. A single
/// block of size n is the torus theta(n, s) itself.
struct TorusSpec {
    int n = 2;
    std::vector<ThetaBlock> blocks;

    static TorusSpec theta(int n, const Rational& s);
    static TorusSpec product(int n, std::vector<ThetaBlock> blocks);

    int equators() const;
    bool is_theta() const;  // one block covering every factor
    /// Throws DomainError unless n >= sum k_i >= 0, every k_i >= 2 and s_i in [1/2, 1).
    void validate() const;
    std::string describe() const;

    nlohmann::json to_json() const;
    static TorusSpec from_json(const nlohmann::json& j);

    friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
};

/// k beta + sum k_i (H_i - 2 beta) + (alpha terms, which carry no area).
struct RelativeClass {
    int k = 1;
    std::vector<int> ki;

    int maslov_index() const { return 2 * k; }
    Rational area(const Rational& s) const;
};

/// a in s + (1 - 2s) Z.
bool area_spectrum_contains(const Rational& s, const Rational& a);

/// Whether some Maslov-2 class of the torus has area 1/2 (a monotone block or an equator).
bool spectrum_contains_half(const TorusSpec& t);

/// Maslov-2 holomorphic disks through a generic point: sum(1 + k_i^2) + 2 * equators.
long disk_count(const TorusSpec& t);

struct MinimalAreaCount {
    Rational area;
    long count = 0;

    friend bool operator==(const MinimalAreaCount&, const MinimalAreaCount&) = default;
};

MinimalAreaCount minimal_area_count(const TorusSpec& t);

enum class Verdict { spectrum, minimal_count, boundary_pairs, not_distinguished };
std::string to_string(Verdict v);

struct Distinction {
    Verdict verdict = Verdict::not_distinguished;
    bool conditional = false;  // rests on the minimal-count invariance conjecture
    nlohmann::json witness = nlohmann::json::object();
    std::vector<std::string> citations;

    nlohmann::json to_json() const;
};

/// Throws DimensionError when the ambient dimensions differ.
Distinction distinguish(const TorusSpec& a, const TorusSpec& b);

struct ClassArea {
    RelativeClass cls;
    Rational area;
};

/// Every class with 1 <= k <= max_k, k_i >= 0 and sum k_i <= k, sorted by k then k_i.
std::vector<ClassArea> enumerate_maslov_classes(int n, const Rational& s, int max_k);

/// The minimum area over the enumeration is 1 - s and only k = 1 attains it.
bool min_area_check(int n, const Rational& s, int max_k);

struct InvariantsReport {
    TorusSpec torus;
    long disks = 0;
    MinimalAreaCount minimal;
    bool half_in_spectrum = false;
    std::vector<std::pair<Rational, bool>> min_area_checks;  // per theta block s_i, max_k = 8

    nlohmann::json to_json() const;
};

InvariantsReport invariants_report(const TorusSpec& t, int max_k = 8);

}  // namespace novipot
