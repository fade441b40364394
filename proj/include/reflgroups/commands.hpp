#pragma once

// Group-generic reports and the command-line front end.

#include "reflgroups/expression.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reflgroups {

/// Normalization of one expression together with its audit data.
struct Report {
    Expression input;
    Expression normalized;
    double residual = 0.0;        ///< oracle distance between input and normalized word
    nlohmann::json trace;         ///< applied relations, in order
    std::vector<std::string> trace_text;
    bool steps_valid = true;      ///< every step is a single valid relation
    bool parity_ok = true;        ///< determinant parity held after every step
    double max_step_residual = 0.0;
};

Report make_report(const Expression& e, const Tolerance& tol = kDefaultTolerance);
nlohmann::json report_to_json(const Report& r);

/// Oracle residual between two words of the same group: affine norm (E2),
/// rotation distance (S2, SO3), Frobenius norm (ON). Infinite on determinant mismatch.
double oracle_residual(const Expression& a, const Expression& b);

/// Determinant of the oracle matrix of the expression's word.
double oracle_determinant(const Expression& e);

/// Classification payload as JSON, e.g. {"class": "translation", "vector": [2, 0]}.
nlohmann::json classification_json(const Expression& e, const Tolerance& tol = kDefaultTolerance);

/// Largest length a normalized word may have in the expression's group.
std::size_t normal_length_bound(const Expression& e);

/// Concatenation: the operator product a o b (b acts first).
Expression compose_expressions(const Expression& a, const Expression& b);

struct VerifySummary {
    Group group = Group::E2;
    int dimension = 2;
    std::size_t count = 0;
    std::size_t max_len = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double max_residual = 0.0;
    std::size_t max_normal_length = 0;
    std::size_t invalid_steps = 0;
    std::size_t parity_violations = 0;
    std::size_t length_violations = 0;
    std::size_t residual_failures = 0;

    std::size_t failures() const { return invalid_steps + parity_violations + length_violations + residual_failures; }
};

/// Seeded batch: random words of length 0..max_len are normalized and audited.
VerifySummary verify_batch(Group group, int dimension, std::size_t count, std::size_t max_len, std::uint64_t seed,
                           const Tolerance& tol = kDefaultTolerance);

nlohmann::json summary_to_json(const VerifySummary& s);

/// Runs the CLI on `args` (without the program name). Returns the exit
/// status: 0 success, 1 verification failure, 2 parse or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflgroups
