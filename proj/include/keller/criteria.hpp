#pragma once

#include "keller/poly_map.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace keller {

// Iterated derivatives d^alpha X_i under a derivation frame, built one
// total-order level at a time. Each multi-index is produced exactly once:
// alpha is extended by position j only when alpha has no nonzero exponent
// past j, which is sound because the frame derivations commute.
class DerivativeTable {
public:
    explicit DerivativeTable(NambuFrame frame);

    const NambuFrame& frame() const { return frame_; }
    std::size_t nvars() const { return frame_.nvars(); }

    // Highest fully built level (level 0 is always present).
    std::uint32_t max_level() const { return static_cast<std::uint32_t>(levels_.size() - 1); }
    // Builds level max_level() + 1.
    void extend();

    bool level_all_zero(std::uint32_t level) const;

    using Level = std::map<Monomial, std::vector<Polynomial>, GrlexLess>;
    const Level& level(std::uint32_t m) const;
    // The n polynomials (d^alpha X_1, ..., d^alpha X_n).
    const std::vector<Polynomial>& entry(const Monomial& alpha) const;

    // Largest term count seen in any stored entry.
    std::size_t peak_term_count() const { return peak_terms_; }

private:
    NambuFrame frame_;
    std::vector<Level> levels_;
    std::size_t peak_terms_ = 0;
};

// The derivation D = Y_1 d_1 + ... + Y_n d_n on polynomials in the 2n
// variables (X_1..X_n, Y_1..Y_n), where the d_i act on the X block only.
// Stores the sequence of powers D^k(X_i).
class EssenState {
public:
    explicit EssenState(const NambuFrame& frame);

    std::size_t nvars() const { return n_; }
    std::uint32_t max_power() const { return static_cast<std::uint32_t>(powers_.size() - 1); }
    void extend();

    // D^k applied to (X_1, ..., X_n); polynomials in 2n variables.
    const std::vector<Polynomial>& power(std::uint32_t k) const;
    bool power_all_zero(std::uint32_t k) const;

    std::size_t peak_term_count() const { return peak_terms_; }

private:
    std::size_t n_;
    Rational det_;
    PolyMatrix scaled_2n_;  // frame rows embedded into 2n variables
    std::vector<std::vector<Polynomial>> powers_;
    std::size_t peak_terms_ = 0;
};

// --- verdicts -------------------------------------------------------------

struct Invertible {
    PolyMap inverse;
    // Derivative levels (or fixpoint iterations) consumed by the decider.
    std::uint32_t levels = 0;
};

struct Witness {
    std::size_t component = 0;                // 0-based index i of X_i
    std::optional<Monomial> alpha;            // derivation multi-index (table criterion only)
    Polynomial value{1};                      // the surviving nonzero polynomial / residual
};

struct NotInvertibleWithinBound {
    std::uint64_t bound = 0;
    Witness witness;
};

struct KellerViolation {
    Polynomial det{1};
};

using Verdict = std::variant<KellerViolation, Invertible, NotInvertibleWithinBound>;

std::string_view verdict_tag(const Verdict& v);  // invertible | not-within-bound | keller-violation

// Classical degree bound for the inverse of a polynomial automorphism:
// map_degree(f)^(nvars - 1).
std::uint64_t default_bound(const PolyMap& f);

// Decider outcome plus the counters the benchmark surface reports.
struct DeciderResult {
    Verdict verdict;
    std::uint64_t steps = 0;       // levels built / powers computed / iterations run
    std::size_t peak_terms = 0;    // largest intermediate term count
};

DeciderResult run_taylor(const PolyMap& f, std::optional<std::uint64_t> bound_override = {});
DeciderResult run_essen(const PolyMap& f, std::optional<std::uint64_t> bound_override = {});
DeciderResult run_series(const PolyMap& f, std::uint64_t trunc_degree);

// Taylor-expansion criterion: grow the derivative table level by level;
// an all-zero level certifies invertibility (all higher derivatives are
// derivatives of zeros) and the inverse is read off the table; a nonzero
// entry at level bound+1 is returned as witness.
Verdict taylor_criterion(const PolyMap& f, std::optional<std::uint64_t> bound_override = {});

// Inverse certificate from a table whose top level is all-zero:
// G_i(Y) = sum over recorded alpha of (d^alpha X_i)(0) / alpha! * (Y - F(0))^alpha.
PolyMap build_inverse(const DerivativeTable& table, const PolyMap& f);

// Nilpotency criterion for D = Y_1 d_1 + ... + Y_n d_n in 2n variables;
// the inverse is read from the Taylor coefficients of D^k(X_i) at X = 0.
Verdict essen_criterion(const PolyMap& f, std::optional<std::uint64_t> bound_override = {});

// Formal-inverse fixpoint oracle: normalize to X - H with H of low order
// two, iterate G <- Y + H(G) truncated above trunc_degree, de-normalize,
// and accept only on exact composition checks.
Verdict series_inverse_oracle(const PolyMap& f, std::uint64_t trunc_degree);

// True iff f o g and g o f are both exactly the identity map.
bool verify_inverse(const PolyMap& f, const PolyMap& g);

// --- cross-criterion comparison --------------------------------------------

struct CriterionRun {
    std::string criterion;  // taylor | essen | series
    Verdict verdict;
    double wall_ms = 0.0;
    std::uint64_t steps = 0;
    std::size_t peak_terms = 0;
};

struct CriterionReport {
    std::vector<CriterionRun> runs;
};

// The three deciders are provably equivalent on constant-Jacobian inputs
// within the bound, so any disagreement is an implementation bug.
class CriterionDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs taylor, essen and series (trunc = default bound) sequentially,
// timing each; throws CriterionDisagreement if the verdicts differ on
// invertibility or on the certified inverse.
CriterionReport cross_check(const PolyMap& f);

}  // namespace keller
