#pragma once

// Checkers for starter conditions, full factorizations of the four-fold
// graph, and seating schedules on K_2n + (2n-3)I. Every checker collects all
// violations instead of stopping at the first one.

#include "hop/factor.hpp"
#include "hop/seating.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hop {

struct Violation {
    std::string clause; // e.g. "C", "A1", "D2", "coverage"
    std::string locus;  // where, in human terms

    bool operator==(const Violation &) const = default;
};

struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string clause, std::string locus) { violations.push_back({std::move(clause), std::move(locus)}); }
    void append(const Report & other);
    bool has(const std::string & clause) const;

    std::string text() const;
    /// One "FAIL <record-id> <clause> <locus>" line per violation.
    std::string porcelain(const std::string & record_id) const;
};

struct ConditionCViolation {
    Vertex vertex;
    Edge first;
    Edge second;
};

/// Vertex-local colour/orientation rule on consecutive cycle edges. Throws
/// ArgumentError if the cycle holds an undirected black edge.
std::vector<ConditionCViolation> check_condition_c(const Cycle & c, int n);

/// Whether two edges meeting at x are an allowed consecutive pair.
bool allowed_pair(const Edge & a, const Edge & b, Vertex x);

/// Cycle and 2-factor shape: consecutive vertices joined by the listed edge,
/// distinct vertices, spanning and vertex-disjoint cycles, optional type.
Report check_factor_structure(const TwoFactor & f, const std::optional<std::vector<int>> & type = std::nullopt,
                              const std::string & label = "F");

/// One-starter conditions over the two-fold graph (n even).
Report check_a(const TwoFactor & f, int n);

/// Two-starter conditions over the four-fold graph (n even).
Report check_d(const TwoFactor & f1, const TwoFactor & f2, int n);

/// Three-starter conditions (n odd).
Report check_e(const TwoFactor & f1, const TwoFactor & f2, const TwoFactor & f3, int n);

/// Full check that d is a Condition-(C) factorization of the four-fold graph
/// into factors of d.cycle_type.
Report verify_hop_factorization(const Factorization & d);

/// 1-factorization of K_2n whose first factor unions with every other one
/// into cycles of lengths cycle_type_2x.
Report verify_semi_uniform(const std::vector<Matching> & factors, int two_n, const std::vector<int> & cycle_type_2x);

/// I-alternating factorization of K_2n + (2n-3)I with tables of the given sizes.
Report verify_alternating_factorization(const SeatingSolution & s, const std::vector<int> & cycle_type_2x);

} // namespace hop
