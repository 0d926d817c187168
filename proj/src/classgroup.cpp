#include <algorithm>
#include <cstdlib>
#include <string>

#include "zsdiv/classtable.hpp"
#include "zsdiv/quadfield.hpp"
#include "zsdiv/util.hpp"

namespace zsdiv {

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

Mat identity(std::size_t n) {
    Mat m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct Snf {
    std::vector<std::int64_t> diag; // divisibility chain d1 | d2 | ...
    Mat V;                          // x -> (x * V) mod diag is the iso
    Mat W;                          // V^{-1}
};

// Smith normal form of a square nonsingular integer matrix whose rows span
// the relation lattice.  Row operations are free; column operations are
// mirrored into V (columns) and W (inverse rows).
Snf smith_normal_form(Mat a) {
    const std::size_t n = a.size();
    Mat v = identity(n);
    Mat w = identity(n);

    auto swap_cols = [&](std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][j1], a[i][j2]);
        for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j1], v[i][j2]);
        std::swap(w[j1], w[j2]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        // col_dst += q * col_src; inverse: row_src -= q * row_dst
        for (std::size_t i = 0; i < n; ++i) a[i][dst] += q * a[i][src];
        for (std::size_t i = 0; i < n; ++i) v[i][dst] += q * v[i][src];
        for (std::size_t i = 0; i < n; ++i) w[src][i] -= q * w[dst][i];
    };
    auto negate_col = [&](std::size_t j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = -a[i][j];
        for (std::size_t i = 0; i < n; ++i) v[i][j] = -v[i][j];
        for (std::size_t i = 0; i < n; ++i) w[j][i] = -w[j][i];
    };

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero |entry| in the trailing submatrix to (k, k)
            std::size_t pi = n, pj = n;
            std::int64_t best = 0;
            for (std::size_t i = k; i < n; ++i) {
                for (std::size_t j = k; j < n; ++j) {
                    if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                        best = std::llabs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n) throw internal_error("singular relation matrix");
            if (pi != k) std::swap(a[pi], a[k]);
            if (pj != k) swap_cols(pj, k);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    const std::int64_t q = a[i][k] / a[k][k];
                    for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[k][j];
                    if (a[i][k] != 0) clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[k][j] != 0) {
                    add_col(j, k, -(a[k][j] / a[k][k]));
                    if (a[k][j] != 0) clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide the rest of the submatrix
            bool fixed = false;
            for (std::size_t i = k + 1; i < n && !fixed; ++i) {
                for (std::size_t j = k + 1; j < n && !fixed; ++j) {
                    if (a[i][j] % a[k][k] != 0) {
                        for (std::size_t jj = 0; jj < n; ++jj) a[k][jj] += a[i][jj];
                        fixed = true;
                    }
                }
            }
            if (!fixed) break;
        }
        if (a[k][k] < 0) negate_col(k);
    }

    Snf out;
    out.diag.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.diag[k] = a[k][k];
    out.V = std::move(v);
    out.W = std::move(w);
    return out;
}

std::vector<std::int64_t> mat_vec(const std::vector<std::int64_t>& x, const Mat& m) {
    std::vector<std::int64_t> out(m.size(), 0);
    for (std::size_t j = 0; j < m.size(); ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * m[i][j];
        out[j] = s;
    }
    return out;
}

struct RelationSearch {
    QuadField field;
    std::vector<QIdeal> gens;
    std::vector<QIdeal> conj_gens;
    std::vector<std::int64_t> ords; // order of gen j modulo the previous ones

    // If [target] lies in the subgroup generated so far, return its exponent
    // vector; candidates are enumerated in lexicographic order.
    std::optional<std::vector<std::int64_t>> member(const QIdeal& target) const {
        std::vector<std::int64_t> x(gens.size(), 0);
        for (;;) {
            QIdeal t = target;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                for (std::int64_t k = 0; k < x[j]; ++k) t = ideal_mul(t, conj_gens[j]);
            }
            if (is_principal(t)) return x;
            std::size_t j = gens.size();
            while (j > 0) {
                --j;
                if (x[j] + 1 < ords[j]) {
                    ++x[j];
                    std::fill(x.begin() + static_cast<std::ptrdiff_t>(j) + 1, x.end(), 0);
                    break;
                }
                if (j == 0) return std::nullopt;
            }
            if (gens.empty()) return std::nullopt;
        }
    }
};

ClassGroupData from_table_entry(const QuadField& field, const ClassTableEntry& entry) {
    std::vector<std::int64_t> invariants = entry.invariant_factors;
    FiniteAbelianGroup group(invariants.empty() ? std::vector<std::int64_t>{1} : invariants);
    std::vector<QIdeal> gens;
    for (const ClassTableGenerator& g : entry.generators) {
        gens.push_back(QIdeal::from_hnf(field, g.a, g.b, g.c));
    }
    if (gens.size() != static_cast<std::size_t>(group.rank()) && !invariants.empty()) {
        throw validation_error("class table: generator count does not match invariants");
    }
    return ClassGroupData(field, group, gens, entry.source);
}

} // namespace

ClassGroupData class_group(const QuadField& field, const ClassGroupLimits& limits,
                           const ClassTable* table) {
    const ClassTable& tab = table ? *table : ClassTable::embedded();
    const ClassTableEntry* entry = tab.find(field.d());

    if (field.minkowski_bound() > limits.max_minkowski_bound) {
        if (entry) return from_table_entry(field, *entry);
        throw capability_error("Minkowski bound " + std::to_string(field.minkowski_bound()) +
                               " exceeds the computation limit " +
                               std::to_string(limits.max_minkowski_bound) +
                               " and the field is not in the reference table");
    }

    // Collect the split and ramified primes below the Minkowski bound; their
    // classes generate the group.
    std::vector<QIdeal> primes;
    for (std::int64_t p = 2; p <= field.minkowski_prime_bound(); ++p) {
        bool prime = p >= 2;
        for (std::int64_t q = 2; q * q <= p; ++q) {
            if (p % q == 0) { prime = false; break; }
        }
        if (!prime) continue;
        for (const PrimeAbove& pa : primes_above(field, p)) {
            if (pa.kind != SplitKind::inert) primes.push_back(pa.ideal);
        }
    }

    RelationSearch search{field, {}, {}, {}};
    std::vector<std::vector<std::int64_t>> tails;   // tail of gen j over gens < j
    std::vector<std::vector<std::int64_t>> coords;  // exponent vector per prime
    for (const QIdeal& p : primes) {
        if (auto x = search.member(p)) {
            coords.push_back(*x);
            continue;
        }
        bool placed = false;
        QIdeal power = p;
        for (std::int64_t m = 2; m <= limits.max_class_order; ++m) {
            power = ideal_mul(power, p);
            if (auto x = search.member(power)) {
                tails.push_back(*x);
                search.gens.push_back(p);
                search.conj_gens.push_back(ideal_conj(p));
                search.ords.push_back(m);
                std::vector<std::int64_t> self(search.gens.size(), 0);
                self.back() = 1;
                coords.push_back(self);
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw capability_error("prime class order exceeds the limit " +
                                   std::to_string(limits.max_class_order));
        }
    }
    for (auto& c : coords) c.resize(search.gens.size(), 0);

    const std::size_t s = search.gens.size();
    FiniteAbelianGroup group({1});
    std::vector<QIdeal> generator_ideals;
    std::vector<GroupElement> prime_classes;

    if (s == 0) {
        prime_classes.assign(primes.size(), group.zero());
    } else {
        Mat relations(s, std::vector<std::int64_t>(s, 0));
        for (std::size_t j = 0; j < s; ++j) {
            relations[j][j] = search.ords[j];
            for (std::size_t q = 0; q < tails[j].size(); ++q) {
                relations[j][q] -= tails[j][q];
            }
        }
        const Snf snf = smith_normal_form(relations);

        std::vector<std::size_t> kept;
        std::vector<std::int64_t> invariants;
        for (std::size_t i = 0; i < s; ++i) {
            if (snf.diag[i] > 1) {
                kept.push_back(i);
                invariants.push_back(snf.diag[i]);
            }
        }
        if (invariants.empty()) throw internal_error("nontrivial generators reduced to nothing");
        group = FiniteAbelianGroup(invariants);

        for (std::size_t i : kept) {
            QIdeal g = QIdeal::unit(field);
            for (std::size_t q = 0; q < s; ++q) {
                const std::int64_t e = snf.W[i][q];
                if (e >= 0) {
                    g = ideal_mul(g, ideal_pow(search.gens[q], e));
                } else {
                    g = ideal_mul(g, ideal_pow(search.conj_gens[q], -e));
                }
            }
            generator_ideals.push_back(g);
        }

        for (const auto& c : coords) {
            const std::vector<std::int64_t> full = mat_vec(c, snf.V);
            std::vector<std::int64_t> reduced;
            for (std::size_t idx = 0; idx < kept.size(); ++idx) {
                reduced.push_back(mod_floor(full[kept[idx]], invariants[idx]));
            }
            prime_classes.push_back(group.element(reduced));
        }
    }

    ClassGroupData data(field, group, generator_ideals,
                        entry ? entry->source : std::string("computed"));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        data.seed_class(primes[i], prime_classes[i]);
    }
    // Self-check: each chosen generator must sit at its own unit coordinate.
    for (std::size_t j = 0; j < generator_ideals.size(); ++j) {
        std::vector<std::int64_t> unit(group.rank(), 0);
        unit[j] = 1;
        if (!(data.class_of(generator_ideals[j]) == group.element(unit))) {
            throw internal_error("generator ideal does not realize its coordinate");
        }
    }

    if (limits.check_table && entry) {
        const std::vector<std::int64_t> computed =
            group.order() == 1 ? std::vector<std::int64_t>{} : group.moduli();
        if (computed != entry->invariant_factors || field.discriminant() != entry->discriminant) {
            throw internal_error("computed class group for d=" + std::to_string(field.d()) +
                                 " disagrees with the reference table");
        }
    }
    return data;
}

// ---------------------------------------------------------------------------
// ClassGroupData
// ---------------------------------------------------------------------------

ClassGroupData::ClassGroupData(QuadField field, FiniteAbelianGroup group,
                               std::vector<QIdeal> generator_ideals, std::string source)
    : field_(field),
      group_(std::move(group)),
      generator_ideals_(std::move(generator_ideals)),
      source_(std::move(source)) {}

void ClassGroupData::seed_class(const QIdeal& prime, const GroupElement& cls) const {
    group_.check_element(cls);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(prime.triple(), cls);
}

GroupElement ClassGroupData::class_of(const QIdeal& ideal) const {
    if (ideal.field() != field_) {
        throw validation_error("ideal belongs to a different field");
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(ideal.triple());
        if (it != cache_.end()) return it->second;
    }
    GroupElement found = group_.zero();
    bool ok = false;
    for (std::int64_t i = 0; i < group_.order(); ++i) {
        const GroupElement x = group_.element_at(i);
        QIdeal t = ideal;
        for (std::size_t j = 0; j < generator_ideals_.size(); ++j) {
            if (j < x.coords.size() && x.coords[j] > 0) {
                t = ideal_mul(t, ideal_pow(ideal_conj(generator_ideals_[j]), x.coords[j]));
            }
        }
        if (is_principal(t)) {
            found = x;
            ok = true;
            break;
        }
    }
    if (!ok) {
        throw internal_error("no class coordinates found; class group data is inconsistent");
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(ideal.triple(), found);
    return found;
}

// ---------------------------------------------------------------------------
// Bridges between ideals and sequences
// ---------------------------------------------------------------------------

IdealSequence sequence_of_ideal(const ClassGroupData& data, const QIdeal& ideal) {
    PrimeFactorization factors = factor_ideal(ideal);
    std::vector<GroupElement> classes;
    std::vector<Term> terms;
    for (const auto& [prime, exponent] : factors.factors) {
        GroupElement cls = data.class_of(prime);
        classes.push_back(cls);
        terms.push_back({cls, exponent});
    }
    return {ZSequence(data.group(), std::move(terms)), std::move(factors), std::move(classes)};
}

std::int64_t count_principal_divisors(const ClassGroupData& data, const QIdeal& ideal) {
    const IdealSequence iseq = sequence_of_ideal(data, ideal);
    const CountReport ring = count_groupring(iseq.sequence);
    try {
        const CountReport chars = count_char(iseq.sequence);
        if (chars.value != ring.value) {
            throw internal_error("character-sum count " + std::to_string(chars.value) +
                                 " disagrees with group-ring count " + std::to_string(ring.value));
        }
    } catch (const numerical_error&) {
        // character path lost precision; the group-ring count stands
    }
    return ring.value;
}

std::vector<PrincipalDivisor> list_principal_divisors(const ClassGroupData& data,
                                                      const QIdeal& ideal,
                                                      std::int64_t max_states) {
    const IdealSequence iseq = sequence_of_ideal(data, ideal);
    std::vector<PrincipalDivisor> out;
    for (const Selector& f : list_zero_sum(iseq.sequence, max_states)) {
        QIdeal divisor = QIdeal::unit(data.field());
        for (std::size_t i = 0; i < f.size(); ++i) {
            divisor = ideal_mul(divisor, ideal_pow(iseq.factors.factors[i].first, f[i]));
        }
        auto gen = is_principal(divisor);
        if (!gen) {
            throw internal_error("divisor with trivial class has no generator");
        }
        out.push_back({f, divisor, *gen});
    }
    return out;
}

std::vector<PairDecomposition> decompose_pair(const ClassGroupData& data, const QElement& alpha,
                                              const QElement& beta, std::int64_t max_states) {
    if (elem_is_zero(alpha) && elem_is_zero(beta)) {
        throw validation_error("decompose_pair requires alpha, beta not both zero");
    }
    if (alpha.field != data.field() || beta.field != data.field()) {
        throw validation_error("elements belong to a different field");
    }
    const QIdeal ideal = ideal_from_generators(data.field(), {alpha, beta});
    const IdealSequence iseq = sequence_of_ideal(data, ideal);
    std::vector<PairDecomposition> out;
    for (const Selector& f : maximal_zero_sum(iseq.sequence, max_states)) {
        QIdeal principal_part = QIdeal::unit(data.field());
        std::vector<std::pair<QIdeal, std::int64_t>> residue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& [prime, exponent] = iseq.factors.factors[i];
            principal_part = ideal_mul(principal_part, ideal_pow(prime, f[i]));
            if (exponent - f[i] > 0) residue.emplace_back(prime, exponent - f[i]);
        }
        auto gen = is_principal(principal_part);
        if (!gen) {
            throw internal_error("maximal zero-sum part is not principal");
        }
        out.push_back({principal_part, *gen, std::move(residue)});
    }
    return out;
}

bool is_irreducible(const ClassGroupData& data, const QElement& x) {
    if (elem_is_zero(x)) throw validation_error("zero is not classified");
    if (elem_is_unit(x)) throw validation_error("units are not classified");
    return count_principal_divisors(data, principal_ideal(x)) == 2;
}

} // namespace zsdiv
