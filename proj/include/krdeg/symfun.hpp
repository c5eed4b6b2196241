#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krdeg/partition.hpp"
#include "krdeg/tableau.hpp"

namespace krdeg {

using Rational = boost::multiprecision::cpp_rational;

enum class Basis { powersum, schur, monomial };

inline std::string basis_letter(Basis b) {
    switch (b) {
        case Basis::powersum: return "p";
        case Basis::schur: return "s";
        case Basis::monomial: return "m";
    }
    return "?";
}

// Homogeneous symmetric function with rational coefficients in a fixed basis.
struct SymFunc {
    Basis basis = Basis::powersum;
    int degree = 0;
    std::map<Partition, Rational> terms;

    SymFunc() = default;
    SymFunc(Basis b, int deg) : basis(b), degree(deg) {}

    static SymFunc single(Basis b, Partition index, Rational coeff = 1) {
        SymFunc f(b, partition_weight(index));
        if (coeff != 0) f.terms[std::move(index)] = std::move(coeff);
        return f;
    }

    SymFunc& trim() {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        return *this;
    }
    bool is_zero() const {
        for (const auto& [idx, c] : terms)
            if (c != 0) return false;
        return true;
    }
    SymFunc& operator+=(const SymFunc& other) {
        if (basis != other.basis || (degree != other.degree && !other.is_zero() && !is_zero()))
            throw DomainError("symmetric function sum: basis/degree mismatch");
        for (const auto& [idx, c] : other.terms) terms[idx] += c;
        return trim();
    }
    SymFunc operator*(const Rational& scale) const {
        SymFunc out = *this;
        for (auto& [idx, c] : out.terms) c *= scale;
        return out.trim();
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.basis != b.basis) return false;
        SymFunc x = a, y = b;
        x.trim();
        y.trim();
        return x.terms == y.terms;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // largest index first reads naturally
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto& [idx, c] = *it;
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c << "*";
            os << basis_letter(basis) << "[";
            for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
            os << "]";
        }
        return first ? "0" : os.str();
    }
};

// ---------------------------------------------------------------------------
// Symmetric group characters (Murnaghan-Nakayama) and Kostka numbers
// ---------------------------------------------------------------------------

namespace detail {

constexpr int kMaxConversionDegree = 14;

inline void check_degree(int degree) {
    if (degree > kMaxConversionDegree)
        throw ResourceError("basis conversion capped at degree " +
                            std::to_string(kMaxConversionDegree));
}

// chi^lambda(mu) by repeatedly stripping a border strip of size mu_1,
// realized on distinct beta-numbers.
inline long long character_value_uncached(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    int k = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    std::size_t len = lambda.size();
    std::vector<int> beta(len);
    for (std::size_t j = 0; j < len; ++j)
        beta[j] = lambda[j] + static_cast<int>(len - 1 - j); // strictly decreasing
    long long total = 0;
    for (std::size_t j = 0; j < len; ++j) {
        int target = beta[j] - k;
        if (target < 0) continue;
        bool clash = false;
        int crossed = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (i == j) continue;
            if (beta[i] == target) clash = true;
            if (beta[i] < beta[j] && beta[i] > target) ++crossed;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[j] = target;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition nlambda;
        for (std::size_t i = 0; i < len; ++i) {
            int part = nbeta[i] - static_cast<int>(len - 1 - i);
            if (part > 0) nlambda.push_back(part);
        }
        long long sub = character_value_uncached(nlambda, rest);
        total += (crossed % 2 ? -sub : sub);
    }
    return total;
}

inline long long character_value(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long long> cache;
    static std::mutex mtx;
    auto key = std::pair{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long value = character_value_uncached(lambda, mu);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), value);
    return value;
}

// Number of semistandard fillings of shape lambda with content mu, by peeling
// the horizontal strip of the largest letter.
inline long long kostka_uncached(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.size() > mu.size()) return 0; // more rows than letters
    int strip = mu.back();
    Partition rest(mu.begin(), mu.end() - 1);
    long long total = 0;
    // enumerate partitions nu <= lambda with lambda/nu a horizontal strip of
    // size `strip`
    std::size_t rows = lambda.size();
    Partition nu = lambda;
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> long long {
        if (row == rows) {
            if (remaining != 0) return 0;
            Partition cleaned;
            for (int part : nu)
                if (part > 0) cleaned.push_back(part);
            return kostka_uncached(cleaned, rest);
        }
        long long acc = 0;
        int lower = row + 1 < rows ? lambda[row + 1] : 0; // keep nu_row >= lambda_{row+1}
        int save = nu[row];
        for (int take = 0; take <= lambda[row] - lower && take <= remaining; ++take) {
            nu[row] = lambda[row] - take;
            if (row > 0 && nu[row] > nu[row - 1]) continue;
            // horizontal strip: cells removed in this row must not sit above
            // cells kept in the row below; guaranteed by nu_row >= lambda_{row+1}
            acc += self(self, row + 1, remaining - take);
        }
        nu[row] = save;
        return acc;
    };
    total = rec(rec, 0, strip);
    return total;
}

inline long long kostka_number(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long long> cache;
    static std::mutex mtx;
    auto key = std::pair{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long value = kostka_uncached(lambda, mu);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), value);
    return value;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Basis conversion
// ---------------------------------------------------------------------------

inline SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis == target) return f;
    detail::check_degree(f.degree);
    auto all = partitions_of(f.degree);

    auto schur_to_power = [&](const SymFunc& s) {
        SymFunc out(Basis::powersum, s.degree);
        for (const auto& mu : all) {
            Rational coeff = 0;
            for (const auto& [lambda, c] : s.terms)
                coeff += c * detail::character_value(lambda, mu);
            if (coeff != 0) out.terms[mu] = coeff / centralizer_order(mu);
        }
        return out;
    };
    auto power_to_schur = [&](const SymFunc& p) {
        SymFunc out(Basis::schur, p.degree);
        for (const auto& lambda : all) {
            Rational coeff = 0;
            for (const auto& [mu, c] : p.terms) coeff += c * detail::character_value(lambda, mu);
            if (coeff != 0) out.terms[lambda] = coeff;
        }
        return out;
    };
    auto schur_to_monomial = [&](const SymFunc& s) {
        SymFunc out(Basis::monomial, s.degree);
        for (const auto& mu : all) {
            Rational coeff = 0;
            for (const auto& [lambda, c] : s.terms) coeff += c * detail::kostka_number(lambda, mu);
            if (coeff != 0) out.terms[mu] = coeff;
        }
        return out;
    };
    auto monomial_to_schur = [&](const SymFunc& m) {
        // Kostka is unitriangular against dominance, so peel from the top of
        // the lex order (lex refines dominance here).
        SymFunc rest = m;
        rest.trim();
        SymFunc out(Basis::schur, m.degree);
        for (const auto& lambda : all) { // partitions_of is lex-descending
            auto it = rest.terms.find(lambda);
            if (it == rest.terms.end() || it->second == 0) continue;
            Rational c = it->second;
            out.terms[lambda] = c;
            SymFunc expand = schur_to_monomial(SymFunc::single(Basis::schur, lambda));
            for (const auto& [mu, k] : expand.terms) rest.terms[mu] -= c * k;
            rest.trim();
        }
        if (!rest.is_zero()) throw InvariantViolation("monomial-to-schur peel left a remainder");
        return out;
    };

    switch (f.basis) {
        case Basis::schur:
            return target == Basis::powersum ? schur_to_power(f) : schur_to_monomial(f);
        case Basis::powersum: {
            SymFunc s = power_to_schur(f);
            return target == Basis::schur ? s : schur_to_monomial(s);
        }
        case Basis::monomial: {
            SymFunc s = monomial_to_schur(f);
            return target == Basis::schur ? s : schur_to_power(s);
        }
    }
    throw DomainError("convert: unknown basis");
}

// Bilinear product; power sums multiply by concatenating indices.
inline SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc a = convert(f, Basis::powersum), b = convert(g, Basis::powersum);
    SymFunc out(Basis::powersum, f.degree + g.degree);
    for (const auto& [mu, cm] : a.terms)
        for (const auto& [nu, cn] : b.terms) {
            Partition idx = mu;
            idx.insert(idx.end(), nu.begin(), nu.end());
            std::sort(idx.rbegin(), idx.rend());
            out.terms[idx] += cm * cn;
        }
    return out.trim();
}

// Plethysm g[f]: p_d acts on f by scaling every power sum index by d.
inline SymFunc plethysm(const SymFunc& g, const SymFunc& f) {
    SymFunc outer = convert(g, Basis::powersum), inner = convert(f, Basis::powersum);
    auto scaled = [&](int d) {
        SymFunc out(Basis::powersum, inner.degree * d);
        for (const auto& [mu, c] : inner.terms) {
            Partition idx;
            for (int part : mu) idx.push_back(part * d);
            out.terms[idx] = c;
        }
        return out;
    };
    SymFunc total(Basis::powersum, g.degree * f.degree);
    for (const auto& [mu, c] : outer.terms) {
        SymFunc prod(Basis::powersum, 0);
        prod.terms[{}] = c;
        for (int part : mu) prod = multiply(prod, scaled(part));
        total += prod;
    }
    return total.trim();
}

// ---------------------------------------------------------------------------
// Cyclic characters
// ---------------------------------------------------------------------------

namespace detail {

inline int moebius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
    }
    if (m > 1) result = -result;
    return result;
}

inline int totient(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// Ramanujan sum: the sum of i-th powers of the primitive d-th roots of unity.
inline long long ramanujan_sum(int d, int i) {
    int dp = d / std::gcd(i % d, d); // gcd(0, d) = d
    return static_cast<long long>(moebius(dp)) * totient(d) / totient(dp);
}

} // namespace detail

// Frobenius image of the induction of the i-th cyclic character to S_k.
inline SymFunc cyclic_character(int k, int i) {
    if (k < 1) throw DomainError("cyclic_character: k must be positive");
    i = ((i % k) + k) % k;
    SymFunc out(Basis::powersum, k);
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        long long coeff = detail::ramanujan_sum(d, i);
        if (coeff == 0) continue;
        Partition idx(static_cast<std::size_t>(k / d), d);
        out.terms[idx] += Rational(coeff, k);
    }
    return out.trim();
}

// ---------------------------------------------------------------------------
// Quasisymmetric side
// ---------------------------------------------------------------------------

// Integer combination of fundamental quasisymmetric functions F_A, indexed by
// descent subsets A of [n-1].
struct QSymFunc {
    int n = 0;
    std::map<std::vector<int>, long long> terms;

    QSymFunc() = default;
    explicit QSymFunc(int degree) : n(degree) {}

    QSymFunc& trim() {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        return *this;
    }
    bool is_zero() const {
        for (const auto& [a, c] : terms)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const QSymFunc& a, const QSymFunc& b) {
        QSymFunc x = a, y = b;
        x.trim();
        y.trim();
        return x.n == y.n && x.terms == y.terms;
    }
};

// Multiset sum of F_{A} over a family of descent subsets.
inline QSymFunc fundamental_sum(const std::vector<std::vector<int>>& descent_sets, int n) {
    QSymFunc q(n);
    for (const auto& a : descent_sets) {
        for (int x : a)
            if (x < 1 || x > n - 1) throw DomainError("fundamental_sum: subset not within [n-1]");
        q.terms[a] += 1;
    }
    return q.trim();
}

namespace detail {

inline std::vector<int> partition_descent_subset(const Partition& lambda) {
    std::vector<int> a;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
        acc += lambda[i];
        a.push_back(acc);
    }
    return a;
}

inline Partition subset_composition(const std::vector<int>& a, int n) {
    Partition comp;
    int prev = 0;
    for (int x : a) {
        comp.push_back(x - prev);
        prev = x;
    }
    comp.push_back(n - prev);
    return comp;
}

inline std::vector<int> standard_descents(const Tableau& t) {
    int n = t.size();
    std::vector<int> row_of(static_cast<std::size_t>(n + 1), 0);
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c <= t.outer[static_cast<std::size_t>(r - 1)]; ++c)
            row_of[static_cast<std::size_t>(t.at(r, c))] = r;
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)])
            d.push_back(i);
    return d;
}

// F-expansion of s_lambda: one term per standard filling, indexed by descents.
inline const QSymFunc& schur_fundamental_expansion(const Partition& lambda) {
    static std::map<Partition, QSymFunc> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    QSymFunc q(partition_weight(lambda));
    for (const Tableau& t : standard_tableaux(lambda)) q.terms[standard_descents(t)] += 1;
    return cache.emplace(lambda, std::move(q)).first->second;
}

} // namespace detail

// Greedy expansion of a symmetric F-positive sum into Schur functions: peel
// the lexicographically greatest partition-shaped descent subset, insist on a
// zero remainder. Inputs that are not symmetric or not Schur positive fail
// with ValidationError.
inline SymFunc f_to_schur(const QSymFunc& q) {
    QSymFunc rest = q;
    rest.trim();
    SymFunc out(Basis::schur, rest.n);
    while (!rest.terms.empty()) {
        Partition best;
        bool found = false;
        for (const auto& [a, c] : rest.terms) {
            Partition comp = detail::subset_composition(a, rest.n);
            if (!is_partition(comp)) continue;
            if (!found || comp > best) {
                best = comp;
                found = true;
            }
        }
        if (!found)
            throw ValidationError("f_to_schur: remainder has no partition-shaped term: " +
                                  std::to_string(rest.terms.size()) + " terms left");
        long long c = rest.terms[detail::partition_descent_subset(best)];
        if (c < 0) throw ValidationError("f_to_schur: negative coefficient during peeling");
        const QSymFunc& expansion = detail::schur_fundamental_expansion(best);
        for (const auto& [a, k] : expansion.terms) rest.terms[a] -= c * k;
        rest.trim();
        out.terms[best] += c;
    }
    return out.trim();
}

} // namespace krdeg
