#pragma once

/// Constructors for the Maslov-index-2 potential families of (CP^1)^n tori and the
/// three-point blowup torus, and the wall-crossing maps between charts.

#include "novipot/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace novipot {

enum class Family { clifford, theta, theta_bulk, blowup, blowup_bulk, custom };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// A named potential family with its parameters. `s` is the area parameter (it does not
/// enter the Laurent coefficients; areas live in the point), `rho` the bulk exponent,
/// `bulk` the weights k_i (or l_i), `eps` the blowup capacity, `expr` the text of a
/// custom potential.
struct PotentialSpec {
    Family family = Family::theta;
    int n = 2;
    Rational s{1, 2};
    Rational rho{1, 4};
    std::vector<int> bulk;
    Rational eps{1, 2};
    std::string expr;

    /// Throws DomainError when the parameters are outside the family's range.
    void validate() const;

    /// Bulk weights padded with zeros to length n.
    std::vector<int> bulk_weights() const;

    /// Smallest lattice carrying every exponent the family can produce, including the
    /// halved valuations taken by square roots in the blowup solver.
    Lattice lattice(const Rational& cutoff = Lattice::default_cutoff,
                    const Rational& floor = Lattice::default_floor) const;

    nlohmann::json to_json() const;
    static PotentialSpec from_json(const nlohmann::json& j);

    friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

std::vector<std::string> clifford_variables(int n);  // z1 .. zn
std::vector<std::string> theta_variables(int n);     // u, w1 .. w_{n-1}
std::vector<std::string> blowup_variables();         // u, w

/// sum z_i + sum T e^{l_i T^rho} / z_i. Empty `l` means the undeformed potential.
LaurentPoly clifford(const Lattice& lattice, int n, const std::vector<int>& l = {}, const Rational& rho = 1);

/// u + (T/u)(1 + w_1 + ... + w_{n-1})(1 + 1/w_1 + ... + 1/w_{n-1}).
LaurentPoly theta(const Lattice& lattice, int n);

/// u + (T/u)(1 + sum w_i)(1 + sum e^{k_i T^rho}/w_i) e^{k_n T^rho}.
LaurentPoly theta_bulk(const Lattice& lattice, int n, const std::vector<int>& k, const Rational& rho);

/// u + (T/u)(1 + w)(1 + 1/w) + T^{1-eps}(w + 1/w).
LaurentPoly blowup(const Lattice& lattice, const Rational& eps);

/// u + (T/u)(1 + w)(e^{T^rho} + 1/w) + T^{1-eps}(e^{T^rho} w + 1/w).
LaurentPoly blowup_bulk(const Lattice& lattice, const Rational& eps, const Rational& rho);

/// Toric chart of the blowup: u1 + u2 + T/u1 + T/u2 + T^{1-eps}(u1/u2 + u2/u1).
LaurentPoly toric_blowup(const Lattice& lattice, const Rational& eps);

/// z + T/z for one equator factor.
LaurentPoly equator(const Lattice& lattice, const std::string& name);

using Substitution = std::map<std::string, RationalExpr>;

/// z_i -> w_i u / (1 + sum w), z_n -> u / (1 + sum w).
Substitution wall_crossing_theta(const Lattice& lattice, int n);
/// u1 -> u / (1 + w), u2 -> w u / (1 + w).
Substitution wall_crossing_blowup(const Lattice& lattice);

/// One block of a product torus: a theta torus of dimension k and area parameter s.
struct ProductBlock {
    int k = 2;
    Rational s{1, 2};
    friend bool operator==(const ProductBlock&, const ProductBlock&) = default;
};

/// Sum of block potentials over disjoint variable sets (block j uses u_j, w_j_i) plus
/// `equators` copies of z + T/z (variables e_1 ...).
LaurentPoly product_potential(const Lattice& lattice, const std::vector<ProductBlock>& blocks, int equators);

/// Number of Maslov-index-2 disk contributions recorded by an undeformed potential:
/// the sum of all coefficients with T set to 1.
Rational maslov_two_count(const LaurentPoly& p);

/// The potential described by a spec.
LaurentPoly build(const PotentialSpec& spec, const Lattice& lattice);

}  // namespace novipot
