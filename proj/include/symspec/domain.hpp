#ifndef SYMSPEC_DOMAIN_HPP
#define SYMSPEC_DOMAIN_HPP

#include "symspec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symspec {

enum class CartanType { I, II, III, IV, V, VI };

/// Cartan family plus its size parameters: I(r,s), II(n), III(r), IV(s), V, VI.
struct CartanLabel {
    CartanType type = CartanType::I;
    int first = 0;   // r for I and III, n for II, s for IV
    int second = 0;  // s for I

    static CartanLabel type_I(int r, int s) { return {CartanType::I, r, s}; }
    static CartanLabel type_II(int n) { return {CartanType::II, n, 0}; }
    static CartanLabel type_III(int r) { return {CartanType::III, r, 0}; }
    static CartanLabel type_IV(int s) { return {CartanType::IV, s, 0}; }
    static CartanLabel type_V() { return {CartanType::V, 0, 0}; }
    static CartanLabel type_VI() { return {CartanType::VI, 0, 0}; }

    bool operator==(const CartanLabel&) const = default;
};

std::string to_string(CartanType type);
std::string to_string(const CartanLabel& label);
std::optional<CartanType> parse_cartan_type(const std::string& text);

/// An irreducible bounded symmetric domain, identified by its root
/// multiplicities (a, b) and rank r.  Equality compares (a, b, r) only.
struct DomainParams {
    int a = 1;
    int b = 0;
    int r = 1;
    std::optional<CartanLabel> label;

    int d = 1;     // complex dimension r + (a/2) r (r-1) + b r
    int genus = 2; // N = 2 + a (r-1) + b
    Rational rho = 1;  // 1 + (a/2)(r-1) + b

    /// a/2 as an exact rational
    Rational half_a() const { return Rational(a, 2); }

    std::string name() const;

    bool operator==(const DomainParams& other) const
    {
        return a == other.a && b == other.b && r == other.r;
    }
};

/// Raw triple.  At rank one the multiplicity a is vacuous and is stored as 1.
DomainParams make_domain(int a, int b, int r);

/// Labelled construction; throws DomainError outside the table's ranges
/// (I needs 1 <= r <= s, II needs n >= 4, III needs r >= 2, IV needs s >= 4).
DomainParams make_domain(const CartanLabel& label);

/// Largest element of each residue class mod 1 of
/// F = { (a/2)(l-1) - k : 1 <= l <= r, k >= 0 }, in decreasing order.
std::vector<Rational> f_set_generators(const DomainParams& domain);

/// One symbolic row of the per-family classification table.
struct TableRow {
    CartanType type;
    std::string ambient;
    std::string d;
    std::string a;
    std::string b;
    std::string r;
    std::string genus;
    std::string f_description;
    std::string b_gamma_description;
    std::string schatten_condition;
};

/// One row per Cartan family with the F-set, the B_gamma-set and the S_p
/// threshold p > (N-1)/(N+gamma-alpha) rendered symbolically.
/// Throws NotApplicable when gamma <= -1.
std::vector<TableRow> classification_table(const Rational& gamma);

/// Pipe-separated text rendering (header plus six rows, LF endings).
std::string render_table(const std::vector<TableRow>& rows);

}  // namespace symspec

#endif
