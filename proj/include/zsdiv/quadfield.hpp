#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "zsdiv/group.hpp"
#include "zsdiv/util.hpp"
#include "zsdiv/zerosum.hpp"

namespace zsdiv {

/**
 * The quadratic field Q(sqrt(d)) for squarefree d, with its ring of integers
 * Z[w] where w = sqrt(d) when d != 1 (mod 4) and w = (1 + sqrt(d))/2 when
 * d == 1 (mod 4).
 */
class QuadField {
public:
    static QuadField make(std::int64_t d);

    std::int64_t d() const { return d_; }
    bool omega_is_half() const { return half_; } // w = (1 + sqrt d)/2
    std::int64_t discriminant() const { return half_ ? d_ : 4 * d_; }
    bool is_real() const { return d_ > 0; }
    double minkowski_bound() const;
    std::int64_t minkowski_prime_bound() const; // floor of the bound

    bool operator==(const QuadField&) const = default;

private:
    QuadField(std::int64_t d, bool half) : d_(d), half_(half) {}
    std::int64_t d_ = 0;
    bool half_ = false;
};

// a + b*w in the omega basis.
struct QElement {
    QuadField field;
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool operator==(const QElement&) const = default;
};

std::int64_t elem_norm(const QElement& x);
QElement elem_mul(const QElement& x, const QElement& y);
QElement elem_conj(const QElement& x);
QElement elem_neg(const QElement& x);
bool elem_is_zero(const QElement& x);
bool elem_is_unit(const QElement& x); // |norm| == 1

/**
 * A nonzero integral ideal in Hermite normal form: the module
 * a*Z + (b + c*w)*Z with a > 0, c > 0, c | a, c | b, 0 <= b < a.
 * The triple is the unique HNF of the module and the norm is a*c.
 */
class QIdeal {
public:
    static QIdeal from_hnf(QuadField field, std::int64_t a, std::int64_t b, std::int64_t c);
    static QIdeal unit(QuadField field);

    const QuadField& field() const { return field_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t norm() const;
    bool is_unit_ideal() const { return a_ == 1 && b_ == 0 && c_ == 1; }

    bool contains(const QElement& x) const;
    std::tuple<std::int64_t, std::int64_t, std::int64_t> triple() const { return {a_, b_, c_}; }

    bool operator==(const QIdeal&) const = default;
    // HNF-lexicographic; used for deterministic map keys.
    bool operator<(const QIdeal& o) const;

private:
    QIdeal(QuadField field, std::int64_t a, std::int64_t b, std::int64_t c)
        : field_(field), a_(a), b_(b), c_(c) {}
    QuadField field_;
    std::int64_t a_, b_, c_;

    friend QIdeal hnf_from_module(const QuadField&, const std::vector<std::pair<int128, int128>>&,
                                  bool check_closure);
};

QIdeal ideal_from_generators(const QuadField& field, std::span<const QElement> gens);
QIdeal ideal_from_generators(const QuadField& field, std::initializer_list<QElement> gens);
QIdeal principal_ideal(const QElement& x);

QIdeal ideal_mul(const QIdeal& x, const QIdeal& y);
QIdeal ideal_pow(const QIdeal& x, std::int64_t k);
QIdeal ideal_conj(const QIdeal& x);
// J subset of I, i.e. I divides J.
bool ideal_divides(const QIdeal& i, const QIdeal& j);

enum class SplitKind { split, inert, ramified };
std::string to_string(SplitKind k);

struct PrimeAbove {
    QIdeal ideal;
    std::int64_t residue_degree;      // f: norm = p^f
    std::int64_t ramification_index;  // e in (p) = prod P^e
    SplitKind kind;
};

// Factor the minimal polynomial of w mod p: two roots -> split, one (double)
// root -> ramified, none -> inert.  Z[w] is the maximal order, so this is
// valid at every prime.
std::vector<PrimeAbove> primes_above(const QuadField& field, std::int64_t p);

struct PrimeFactorization {
    // (prime ideal, exponent), ordered by (norm, HNF); the product
    // reconstructs the input.
    std::vector<std::pair<QIdeal, std::int64_t>> factors;
};

struct FactorLimits {
    std::int64_t trial_division_bound = 10'000'000;
};

PrimeFactorization factor_ideal(const QIdeal& ideal, const FactorLimits& limits = {});

// Fundamental unit eps > 1 of a real quadratic field, via the continued
// fraction of sqrt(d) (plus the half-integer refinement when d == 1 mod 4).
QElement fundamental_unit(const QuadField& field);

struct PrincipalSearchLimits {
    std::int64_t max_range = 10'000'000; // candidates scanned per search
};

/**
 * A generator of the ideal if one exists, up to unit multiples.
 *
 * Imaginary fields enumerate the finitely many elements of matching norm.
 * Real fields scan the window sqrt(N) <= sigma+(x) <= eps*sqrt(N): every
 * generator has an associate there, so the bounded scan is complete.  A
 * congruence test on the norm form short-circuits cases where no element of
 * norm +-N(I) exists at all.
 */
std::optional<QElement> is_principal(const QIdeal& ideal,
                                     const PrincipalSearchLimits& limits = {});

// The congruence fast-reject: true when |N(x)| = n has no solution modulo one
// of a fixed set of small moduli (hence the ideal of norm n is not principal).
bool norm_form_rejects(const QuadField& field, std::int64_t n);

struct ClassGroupLimits {
    double max_minkowski_bound = 100.0;
    std::int64_t max_class_order = 64;
    bool check_table = true;
};

/**
 * The ideal class group, its chosen generator ideals, and a cached class
 * assignment for prime ideals.  The cache is the only mutable state; it acts
 * as a write-once map guarded by a mutex.
 */
class ClassGroupData {
public:
    ClassGroupData(QuadField field, FiniteAbelianGroup group,
                   std::vector<QIdeal> generator_ideals, std::string source);

    const QuadField& field() const { return field_; }
    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<QIdeal>& generator_ideals() const { return generator_ideals_; }
    const std::string& source() const { return source_; }

    // Coordinates of [I] with respect to the generators, found by testing
    // principality of I times inverse generator powers.  Throws
    // internal_error when no coordinate vector matches.
    GroupElement class_of(const QIdeal& ideal) const;

    void seed_class(const QIdeal& prime, const GroupElement& cls) const;

private:
    QuadField field_;
    FiniteAbelianGroup group_;
    std::vector<QIdeal> generator_ideals_;
    std::string source_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, GroupElement> cache_;
};

class ClassTable;

// Computes the class group from the primes below the Minkowski bound by
// order-finding and relation search, reduced to invariant factors by Smith
// normal form.  Cross-checked against the reference table when the field is
// listed there (mismatch is an internal_error); beyond the capability bound
// the table alone is used.  `table` defaults to the embedded one.
ClassGroupData class_group(const QuadField& field, const ClassGroupLimits& limits = {},
                           const ClassTable* table = nullptr);

struct IdealSequence {
    ZSequence sequence;   // one term per distinct prime factor, in factor order
    PrimeFactorization factors;
    std::vector<GroupElement> classes; // classes[i] = class of factors[i]
};

IdealSequence sequence_of_ideal(const ClassGroupData& data, const QIdeal& ideal);

// n(I): the number of ideal divisors of I that are principal.  Group-ring
// count validated against the character-sum formula.
std::int64_t count_principal_divisors(const ClassGroupData& data, const QIdeal& ideal);

struct PrincipalDivisor {
    Selector exponents; // per prime factor of I
    QIdeal ideal;
    QElement generator;
};

std::vector<PrincipalDivisor> list_principal_divisors(
    const ClassGroupData& data, const QIdeal& ideal,
    std::int64_t max_states = default_max_states);

struct PairDecomposition {
    QIdeal principal_part;
    QElement generator;
    std::vector<std::pair<QIdeal, std::int64_t>> residue; // zero-sum-free part
};

// All maximal decompositions I = (gamma) * T1^c1 * ... * Tm^cm of
// I = (alpha, beta).  When the class group is cyclic of order h, every
// residue has total exponent <= h - 1.
std::vector<PairDecomposition> decompose_pair(const ClassGroupData& data,
                                              const QElement& alpha, const QElement& beta,
                                              std::int64_t max_states = default_max_states);

// True iff (x) has exactly two principal ideal divisors.
bool is_irreducible(const ClassGroupData& data, const QElement& x);

} // namespace zsdiv
