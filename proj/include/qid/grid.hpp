#ifndef QID_GRID_HPP
#define QID_GRID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qid/errors.hpp"
#include "qid/rational.hpp"

namespace qid {

/// A free symbol of a cleared-denominator identity together with an upper
/// bound on its degree in (LHS - RHS).
struct GridSymbol {
    std::string name;
    long degree_bound = 0;
};

/// Record of a deterministic identity test on a Cartesian grid.
///
/// A polynomial whose degree in each symbol is at most its bound and which
/// vanishes on a grid with bound + 1 distinct values per symbol is zero, so
/// `agreed` on the full grid is a proof, not a probabilistic check.
struct GridProof {
    std::vector<std::string> free_symbols;
    std::vector<long> degree_bounds;
    std::vector<std::vector<Rational>> sample_points;
    long pole_rejections = 0;
    /// Symbols pinned to a value before gridding (e.g. by homogeneity).
    std::vector<std::pair<std::string, Rational>> fixed;
    std::size_t evaluations = 0;
    bool agreed = true;
    /// First grid point where the two sides differ, if any.
    std::optional<std::vector<Rational>> counterexample;

    friend bool operator==(const GridProof&, const GridProof&) = default;
};

/// Candidate sample values 2, 3, 5, 7, 11, ... (the primes, in order).
class PrimeSequence {
public:
    long next() {
        for (;;) {
            const long c = current_++;
            if (is_prime(c)) return c;
        }
    }

private:
    static bool is_prime(long v) {
        if (v < 2) return false;
        for (long d = 2; d * d <= v; ++d) {
            if (v % d == 0) return false;
        }
        return true;
    }
    long current_ = 2;
};

inline constexpr long kMaxGridCandidates = 100000;

/// Picks bound + 1 sample values per symbol from the prime sequence, skipping
/// candidates rejected by `is_pole(symbol_index, candidate, chosen)`, then
/// evaluates `agree(point)` over every grid point. Stops at the first
/// disagreement and records it as the counterexample.
template <class Agree, class IsPole>
GridProof grid_prove(const std::vector<GridSymbol>& symbols, Agree&& agree, IsPole&& is_pole) {
    GridProof proof;
    for (const auto& s : symbols) {
        if (s.degree_bound < 0) throw ParameterError("negative degree bound for " + s.name);
        proof.free_symbols.push_back(s.name);
        proof.degree_bounds.push_back(s.degree_bound);
    }
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        PrimeSequence candidates;
        std::vector<Rational> picked;
        long tried = 0;
        while (static_cast<long>(picked.size()) <= symbols[k].degree_bound) {
            if (++tried > kMaxGridCandidates) {
                throw GridExhausted("could not find enough non-pole samples for " + symbols[k].name);
            }
            const Rational v(candidates.next());
            if (is_pole(k, v, std::as_const(proof.sample_points))) {
                ++proof.pole_rejections;
                continue;
            }
            picked.push_back(v);
        }
        proof.sample_points.push_back(std::move(picked));
    }

    std::vector<std::size_t> odometer(symbols.size(), 0);
    std::vector<Rational> point(symbols.size());
    for (;;) {
        for (std::size_t k = 0; k < symbols.size(); ++k) point[k] = proof.sample_points[k][odometer[k]];
        ++proof.evaluations;
        if (!agree(std::as_const(point))) {
            proof.agreed = false;
            proof.counterexample = point;
            return proof;
        }
        std::size_t k = symbols.size();
        while (k > 0) {
            --k;
            if (++odometer[k] < proof.sample_points[k].size()) break;
            odometer[k] = 0;
            if (k == 0) return proof;
        }
        if (symbols.empty()) return proof;
    }
}

/// grid_prove without pole constraints.
template <class Agree>
GridProof grid_prove(const std::vector<GridSymbol>& symbols, Agree&& agree) {
    return grid_prove(symbols, std::forward<Agree>(agree),
                      [](std::size_t, const Rational&, const std::vector<std::vector<Rational>>&) {
                          return false;
                      });
}

}  // namespace qid

#endif  // QID_GRID_HPP
